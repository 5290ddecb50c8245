"""Total measures on a finite algebra, and the classical positive/negative
split of the whole space.

A measure is stored by its atom values only; set values are always
recomputed as atom sums, so additivity cannot be violated by stored
state.  The single structural invariant is that the atom vector never
contains both +inf and -inf, which keeps every evaluation well-posed.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import extreal
from .errors import MixedInfinitiesError, NotPositiveError, SpaceMismatchError
from .extreal import PLUS_INF, ZERO, ExtReal
from .spaces import FiniteSpace, MeasurableSet, iter_bits

__all__ = ["Measure", "PositiveMeasure", "validate_measure", "hahn_decomposition"]


class Measure:
    """Extended-real measure on a finite algebra, given by atom values."""

    __slots__ = ("space", "atom_values", "_pos_mask", "_neg_mask")

    def __init__(self, space: FiniteSpace, atom_values: Sequence[ExtReal]):
        values = tuple(atom_values)
        if len(values) != space.n_atoms:
            raise ValueError(
                f"expected {space.n_atoms} atom values, got {len(values)}"
            )
        pos = neg = 0
        for i, v in enumerate(values):
            if not isinstance(v, ExtReal):
                raise TypeError(f"ExtReal required, got {type(v).__name__}")
            if not v.is_finite:
                if v is PLUS_INF or v == PLUS_INF:
                    pos |= 1 << i
                else:
                    neg |= 1 << i
        if pos and neg:
            raise MixedInfinitiesError(
                "a measure can attain at most one of +inf, -inf"
            )
        self.space = space
        self.atom_values = values
        self._pos_mask = pos
        self._neg_mask = neg

    def evaluate(self, a: MeasurableSet) -> ExtReal:
        """Sum of atom values over the atoms of ``a``; always well-posed."""
        if a.space != self.space:
            raise SpaceMismatchError("set does not belong to the measure's space")
        return extreal.sum(self.atom_values[i] for i in iter_bits(a.mask))

    __call__ = evaluate

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Measure):
            return NotImplemented
        return self.space == other.space and self.atom_values == other.atom_values

    def __hash__(self) -> int:
        return hash((self.space, self.atom_values))

    def __repr__(self) -> str:
        vals = ", ".join(
            f"{self.space.atom_label(i)}={v}" for i, v in enumerate(self.atom_values)
        )
        return f"{type(self).__name__}({vals})"


class PositiveMeasure(Measure):
    """A measure with every atom value in [0, +inf]."""

    __slots__ = ()

    def __init__(self, space: FiniteSpace, atom_values: Sequence[ExtReal]):
        super().__init__(space, atom_values)
        for i, v in enumerate(self.atom_values):
            if v < ZERO:
                raise NotPositiveError(
                    f"atom {self.space.atom_label(i)!r} has negative value {v}"
                )

    @classmethod
    def zero(cls, space: FiniteSpace) -> "PositiveMeasure":
        return cls(space, [ZERO] * space.n_atoms)


def validate_measure(space: FiniteSpace, atom_values: Iterable[ExtReal]) -> Measure:
    """Construct a measure, rejecting vectors that mix +inf and -inf."""
    return Measure(space, tuple(atom_values))


def hahn_decomposition(m: Measure) -> tuple[MeasurableSet, MeasurableSet]:
    """Split the space into a nonnegative part P and a nonpositive part N.

    Every measurable subset of P has value >= 0, every measurable subset
    of N has value <= 0.  The split is not unique; the canonical choice
    here puts zero-valued atoms into P.
    """
    pmask = 0
    for i, v in enumerate(m.atom_values):
        if v >= ZERO:
            pmask |= 1 << i
    p = MeasurableSet(m.space, pmask)
    return p, p.complement()
