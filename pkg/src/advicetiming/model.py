"""Generative model of an advised human decision-maker.

Couples three pieces: context-dependent unassisted accuracy, a latent
engagement level in [0, 1] that gates whether surfaced advice is followed,
and an engagement update driven by how useful the advice turned out to be
relative to the counterfactual of acting alone. Everything here is a pure
function of its inputs plus an explicitly passed random generator.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

__all__ = [
    "Context",
    "Action",
    "Correctness",
    "Adherence",
    "ModelParams",
    "HumanState",
    "StepOutcome",
    "prob_correct_no_ai",
    "prob_correct_with_ai",
    "sample_step",
    "update_engagement",
    "sample_context_transition",
    "engagement_increase",
    "engagement_decay",
]


class Context(enum.Enum):
    """Task familiarity level; drives unassisted accuracy."""

    LOW = "low"
    HIGH = "high"

    def flipped(self) -> "Context":
        return Context.HIGH if self is Context.LOW else Context.LOW


class Action(enum.Enum):
    """Whether the AI surfaces advice this step."""

    ON = "on"
    OFF = "off"


class Correctness(enum.Enum):
    CORRECT = "correct"
    INCORRECT = "incorrect"


class Adherence(enum.Enum):
    ADHERED = "adhered"
    IGNORED = "ignored"


@dataclass(frozen=True)
class ModelParams:
    """Full parameter vector shared by the human model, filter, and planner.

    Defaults are the baseline simulation setting.
    """

    alpha_low: float = 0.3  # unassisted P(correct) in low familiarity
    alpha_high: float = 1.0  # unassisted P(correct) in high familiarity
    eta: float = 0.3  # engagement adjustment rate
    phi: float = 0.1  # per-step context switch probability
    gamma: float = 0.95  # reward discount
    r_correct: float = 1.0
    r_incorrect: float = 0.0
    grid_size: int = 20  # engagement bins; the belief grid has grid_size + 1 points
    horizon: int = 4  # forward-search depth

    def __post_init__(self) -> None:
        for name in ("alpha_low", "alpha_high", "eta", "phi", "gamma"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value!r}")
        if not self.r_correct > self.r_incorrect:
            raise ValueError("r_correct must exceed r_incorrect")
        if not isinstance(self.grid_size, int) or self.grid_size < 2:
            raise ValueError("grid_size must be an integer >= 2")
        if not isinstance(self.horizon, int) or self.horizon < 1:
            raise ValueError("horizon must be an integer >= 1")


@dataclass(frozen=True)
class HumanState:
    """Ground-truth latent state of the simulated human."""

    theta: float
    last_adherence: Optional[Adherence] = None

    def __post_init__(self) -> None:
        if not 0.0 <= self.theta <= 1.0:
            raise ValueError(f"theta must lie in [0, 1], got {self.theta!r}")


@dataclass(frozen=True)
class StepOutcome:
    """Realized decision, its no-advice counterfactual, and the engagement move.

    When advice is off there is no adherence draw and the counterfactual is
    the decision itself. When advice is on but ignored, the independently
    made decision doubles as the counterfactual.
    """

    decision: Correctness
    counterfactual: Correctness
    adherence: Optional[Adherence]
    theta_after: float


def prob_correct_no_ai(params: ModelParams, c: Context) -> float:
    """Probability of an unassisted correct decision in context ``c``."""
    return params.alpha_high if c is Context.HIGH else params.alpha_low


def prob_correct_with_ai(params: ModelParams, c: Context, theta: float) -> float:
    """P(correct | advice on), marginalized over adherence at engagement ``theta``."""
    return theta + (1.0 - theta) * prob_correct_no_ai(params, c)


def engagement_increase(theta: float, eta: float) -> float:
    """Move engagement toward 1 at rate ``eta``."""
    return theta + (1.0 - theta) * eta


def engagement_decay(theta: float, eta: float) -> float:
    """Move engagement toward 0 at rate ``eta``."""
    return theta * (1.0 - eta)


def _next_theta(
    params: ModelParams,
    theta: float,
    advice: Action,
    decision: Correctness,
    counterfactual: Correctness,
    adherence: Optional[Adherence],
) -> float:
    """Engagement update cases; raises on tuples the model cannot produce."""
    if not 0.0 <= theta <= 1.0:
        raise ValueError(f"theta must lie in [0, 1], got {theta!r}")
    eta = params.eta
    if advice is Action.OFF:
        if adherence is not None:
            raise ValueError("adherence must be absent when advice is off")
        if counterfactual is not decision:
            raise ValueError("counterfactual must equal decision when advice is off")
        if decision is Correctness.CORRECT:
            return theta
        return engagement_increase(theta, eta)
    if adherence is None:
        raise ValueError("adherence must be present when advice is on")
    if adherence is Adherence.ADHERED:
        if decision is not Correctness.CORRECT:
            raise ValueError("adhered advice cannot yield an incorrect decision")
        if counterfactual is Correctness.CORRECT:
            return engagement_decay(theta, eta)  # advice was redundant
        return engagement_increase(theta, eta)  # advice averted a mistake
    # Ignored advice: the independent decision is its own counterfactual.
    if counterfactual is not decision:
        raise ValueError("counterfactual must equal decision when advice is ignored")
    if decision is Correctness.CORRECT:
        return engagement_decay(theta, eta)  # correct anyway, advice still redundant
    return engagement_increase(theta, eta)  # mistake while ignoring advice


def update_engagement(
    params: ModelParams, theta: float, advice: Action, outcome: StepOutcome
) -> float:
    """Next engagement level after a completed step.

    Redundant advice (a correct decision whose counterfactual was also
    correct) erodes engagement; advice that averted a mistake, or a mistake
    made while ignoring advice, restores it. Without advice only mistakes
    move it, upward.
    """
    return _next_theta(
        params, theta, advice, outcome.decision, outcome.counterfactual, outcome.adherence
    )


def _draw(rng: np.random.Generator, p: float) -> Correctness:
    return Correctness.CORRECT if rng.random() < p else Correctness.INCORRECT


def sample_step(
    params: ModelParams,
    c: Context,
    theta: float,
    advice: Action,
    rng: np.random.Generator,
) -> StepOutcome:
    """Sample one step of the human model.

    Draw order is fixed (adherence first, then the decision or the
    counterfactual) so that episodes replay bit-identically from a seeded
    generator.
    """
    if not 0.0 <= theta <= 1.0:
        raise ValueError(f"theta must lie in [0, 1], got {theta!r}")
    p_alone = prob_correct_no_ai(params, c)
    if advice is Action.OFF:
        adherence = None
        decision = _draw(rng, p_alone)
        counterfactual = decision
    elif rng.random() < theta:
        adherence = Adherence.ADHERED
        decision = Correctness.CORRECT
        counterfactual = _draw(rng, p_alone)
    else:
        adherence = Adherence.IGNORED
        decision = _draw(rng, p_alone)
        counterfactual = decision
    theta_after = _next_theta(params, theta, advice, decision, counterfactual, adherence)
    return StepOutcome(decision, counterfactual, adherence, theta_after)


def sample_context_transition(
    params: ModelParams, c: Context, rng: np.random.Generator
) -> Context:
    """Advance the two-state context chain: switch with probability ``phi``."""
    return c.flipped() if rng.random() < params.phi else c
