"""Context determination models."""

from dataclasses import dataclass
from enum import Enum

from config import BOUND_DIGITS, DECISION_MIDPOINT, DEFAULT_AST, DEFAULT_T


class ActorLabel(Enum):
    """Significance label of one actor."""
    A = "A"     # significantly Adult
    C = "C"     # significantly Child
    NS = "NS"   # not significant


class TranscriptContext(Enum):
    """Combined transcript context; AC is the positive class."""
    AC = "AC"
    AA = "AA"
    CC = "CC"
    NS = "NS"


@dataclass(frozen=True)
class Thresholds:
    """Message omission band and actor significance threshold.

    Attributes:
        t_adult: Upper half-width of the omission band, in [0, 0.5)
        t_child: Lower half-width of the omission band, in [0, 0.5)
        ast: Actor significance p-value threshold, in (0, 1)
        two_tailed: Use the two-tailed binomial p-value instead of the one-tailed
    """
    t_adult: float = DEFAULT_T
    t_child: float = DEFAULT_T
    ast: float = DEFAULT_AST
    two_tailed: bool = False

    @classmethod
    def symmetric(cls, t: float, ast: float = DEFAULT_AST, two_tailed: bool = False) -> "Thresholds":
        """Create thresholds with the same band width on both sides."""
        return cls(t_adult=t, t_child=t, ast=ast, two_tailed=two_tailed)

    @property
    def upper_bound(self) -> float:
        return round(DECISION_MIDPOINT + self.t_adult, BOUND_DIGITS)

    @property
    def lower_bound(self) -> float:
        return round(DECISION_MIDPOINT - self.t_child, BOUND_DIGITS)

    def with_ast(self, ast: float) -> "Thresholds":
        return Thresholds(self.t_adult, self.t_child, ast, self.two_tailed)

    def to_dict(self) -> dict:
        return {
            "t_adult": self.t_adult,
            "t_child": self.t_child,
            "ast": self.ast,
            "two_tailed": self.two_tailed,
        }


@dataclass
class ActorDetermination:
    """Significance determination for one actor of a transcript.

    Attributes:
        actor_id: Actor the determination belongs to
        n_included: Messages left after omission
        k_adult: Included messages classified Adult
        p_value: Exact binomial p-value under a fair-coin null
        label: A, C or NS
    """
    actor_id: str
    n_included: int
    k_adult: int
    p_value: float
    label: ActorLabel

    def to_dict(self) -> dict:
        return {
            "actor": self.actor_id,
            "label": self.label.value,
            "n": self.n_included,
            "k": self.k_adult,
            "p": self.p_value,
        }
