"""Certified feedback vertex sets and the reduction traces behind them."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, validate_fvs


class BoundKind(enum.Enum):
    CUBIC_N_PLUS_2_OVER_3 = "cubic_n_plus_2_over_3"
    PLANAR_4M_OVER_3G = "planar_4m_over_3g"
    PLANAR_WEIGHTED = "planar_weighted"
    TRIVIAL_2M_OVER_G = "trivial_2m_over_g"
    EXACT_OPTIMUM = "exact_optimum"


@dataclass(frozen=True)
class ReductionStep:
    """One rule application: what matched, what changed, who joined the set.

    ``designated`` lists the vertices this step adds to the feedback vertex
    set (empty for weight-free steps, two for the six-vertex double-square
    reduction).
    """

    rule: str
    matched: tuple[int, ...]
    removed_vertices: frozenset[int] = frozenset()
    removed_edges: frozenset[tuple[int, int]] = frozenset()
    added_edges: frozenset[tuple[int, int]] = frozenset()
    designated: tuple[int, ...] = ()
    flagged: bool = False
    note: str = ""


@dataclass(frozen=True)
class FvsCertificate:
    """A vertex set together with the exact rational bound it is certified against.

    Bounds are stored as integer numerator/denominator and every check is done
    in integer arithmetic: ``size * bound_den <= bound_num``.
    """

    fvs: frozenset[int]
    bound_kind: BoundKind
    bound_num: int
    bound_den: int
    trace: tuple[ReductionStep, ...] = ()

    @property
    def size(self) -> int:
        return len(self.fvs)

    @property
    def bound(self) -> Fraction:
        return Fraction(self.bound_num, self.bound_den)

    @property
    def flagged(self) -> bool:
        return any(step.flagged for step in self.trace)

    def meets_bound(self) -> bool:
        return self.size * self.bound_den <= self.bound_num

    def validate(self, g: Graph) -> bool:
        """True iff the set is a feedback vertex set of g and meets the bound."""
        return validate_fvs(g, self.fvs) and self.meets_bound()
