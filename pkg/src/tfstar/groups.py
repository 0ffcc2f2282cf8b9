"""Graded-group values: finite sums of cyclic modules with named generators."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractViolation
from .gold import GoldMonomial, degree, monomial_key
from .prism import CyclicIdeal, PrismKind, ideal_key
from .rep import VirtualRep, equal_as_gradings

__all__ = ["GroupSummand", "GradedGroup"]


@dataclass(frozen=True, slots=True)
class GroupSummand:
    ideal: CyclicIdeal
    generator: GoldMonomial

    def key(self) -> tuple:
        return (ideal_key(self.ideal), monomial_key(self.generator))


@dataclass(frozen=True, slots=True)
class GradedGroup:
    """A value of TF in one grading: summands ordered by descending filtration of origin.

    Construction checks the degree invariant: every generator's degree,
    suspension included, must equal the requested grading.  The zero group is
    the empty summand list.
    """

    grading: VirtualRep
    kind: PrismKind
    summands: tuple[GroupSummand, ...]

    def __post_init__(self):
        for s in self.summands:
            if not equal_as_gradings(degree(s.generator), self.grading):
                raise ContractViolation(
                    f"degree invariant violated: generator {s.generator} has degree "
                    f"{degree(s.generator)} in a group graded by {self.grading} "
                    f"(shift {self.grading.shift})"
                )

    @property
    def is_zero(self) -> bool:
        return not self.summands

    def multiset_key(self) -> tuple:
        """Order-insensitive canonical form for cross-route comparisons."""
        return tuple(sorted(s.key() for s in self.summands))
