"""Partial measures: set functions defined on part of an algebra.

A partial measure assigns values only to sets in an explicit domain.
The domain must be trace-closed: together with a set B it contains every
measurable subset of B (on a finite algebra the trace sets A ∩ B are
exactly the measurable subsets of B).  Consequently the atoms under any
domain set are themselves domain sets, values on atoms determine values
everywhere in the domain by additivity, and within a single domain set
the atom values never mix +inf with -inf.

A maximal partial measure is one admitting no proper extension.  On a
finite algebra these are exactly the arbitrary atom-value vectors: the
derived domain consists of the sets whose atoms do not carry both +inf
and -inf, and a set outside that domain can never be adjoined, because
additivity over its atoms would require an ill-posed sum.  This module
implements that representation together with the positive/negative
decomposition of maximal partial measures, its extremal property, and
witness extraction for sets outside the domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import extreal
from .errors import (
    AdditivityViolationError,
    EmptyDomainError,
    FillConflictError,
    IllPosedError,
    InDomainError,
    MixedInfinitiesInDomainSetError,
    NotInDomainError,
    NotPositiveError,
    NotTraceClosedError,
    SchemaError,
    SpaceMismatchError,
    TooLargeError,
    UnknownPointError,
)
from .extreal import MINUS_INF, PLUS_INF, ZERO, ExtReal
from .measure import PositiveMeasure
from .spaces import ENUMERATION_CAP, FiniteSpace, MeasurableSet, iter_bits

__all__ = [
    "PartialMeasure",
    "MaximalPartialMeasure",
    "validate_partial",
    "diff_measures",
    "maximalize",
    "value_table",
    "f_plus",
    "f_minus",
    "jordan_sup",
    "JordanDecomposition",
    "jordan_decompose",
    "jordan_decompose_detailed",
    "check_minimality",
    "corollary1_witness",
    "hahn_partial",
    "restrict_to",
    "single_set_extensions",
    "is_maximal",
    "can_extend_with",
]


def _check_cap(n_atoms: int, cap: int | None) -> None:
    limit = ENUMERATION_CAP if cap is None else cap
    if n_atoms > limit:
        raise TooLargeError(
            f"space has {n_atoms} atoms; enumeration capped at {limit}"
        )


class PartialMeasure:
    """A validated partial measure with an explicit, trace-closed domain.

    Construct through :func:`validate_partial`, :func:`diff_measures` or
    :func:`restrict_to`; the raw constructor trusts its input.
    """

    __slots__ = ("space", "_values", "_masks", "covered_atoms")

    def __init__(self, space: FiniteSpace, values_by_mask: Mapping[int, ExtReal]):
        self.space = space
        self._values = dict(values_by_mask)
        self._masks = tuple(sorted(self._values))
        covered = 0
        for m in self._masks:
            covered |= m
        self.covered_atoms = covered

    def domain_sets(self) -> list[MeasurableSet]:
        """The domain in canonical mask order."""
        return [MeasurableSet(self.space, m) for m in self._masks]

    def in_domain(self, a: MeasurableSet) -> bool:
        if a.space != self.space:
            raise SpaceMismatchError("set does not belong to this space")
        return a.mask in self._values

    def evaluate(self, a: MeasurableSet) -> ExtReal:
        if a.space != self.space:
            raise SpaceMismatchError("set does not belong to this space")
        try:
            return self._values[a.mask]
        except KeyError:
            raise NotInDomainError(f"{a!r} is outside the domain") from None

    def determined_atom_value(self, i: int) -> ExtReal:
        """Value of atom ``i``; it must lie under some domain set."""
        try:
            return self._values[1 << i]
        except KeyError:
            raise NotInDomainError(
                f"atom {self.space.atom_label(i)!r} is not determined"
            ) from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialMeasure):
            return NotImplemented
        return self.space == other.space and self._values == other._values

    def __repr__(self) -> str:
        return f"PartialMeasure({len(self._masks)} sets on {self.space!r})"


class MaximalPartialMeasure:
    """A maximal partial measure: an atom-value vector, any values allowed.

    The derived domain is the family of sets whose atoms do not carry
    both +inf and -inf; the derived value is the atom sum.
    """

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
                if v == PLUS_INF:
                    pos |= 1 << i
                else:
                    neg |= 1 << i
        self.space = space
        self.atom_values = values
        self._pos_mask = pos
        self._neg_mask = neg

    def in_domain_mask(self, mask: int) -> bool:
        return not (mask & self._pos_mask and mask & self._neg_mask)

    def in_domain(self, a: MeasurableSet) -> bool:
        if a.space != self.space:
            raise SpaceMismatchError("set does not belong to this space")
        return self.in_domain_mask(a.mask)

    def evaluate(self, a: MeasurableSet) -> ExtReal:
        if a.space != self.space:
            raise SpaceMismatchError("set does not belong to this space")
        if not self.in_domain_mask(a.mask):
            raise NotInDomainError(f"{a!r} is outside the derived domain")
        return extreal.sum(self.atom_values[i] for i in iter_bits(a.mask))

    __call__ = evaluate

    def domain_sets(self, cap: int | None = None) -> list[MeasurableSet]:
        """Every set of the derived domain, in canonical mask order."""
        _check_cap(self.space.n_atoms, cap)
        return [
            MeasurableSet(self.space, m)
            for m in range(1 << self.space.n_atoms)
            if self.in_domain_mask(m)
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MaximalPartialMeasure):
            return NotImplemented
        return self.space == other.space and self.atom_values == other.atom_values

    def __hash__(self) -> int:
        return hash((self.space, self.atom_values))

    def __repr__(self) -> str:
        vals = ", ".join(
            f"{self.space.atom_label(i)}={v}" for i, v in enumerate(self.atom_values)
        )
        return f"MaximalPartialMeasure({vals})"


def validate_partial(
    space: FiniteSpace,
    domain: Iterable[MeasurableSet],
    values: Mapping[MeasurableSet, ExtReal],
) -> PartialMeasure:
    """Check the partial-measure invariants and close the domain under traces.

    The supplied sets must include every atom lying under any of them;
    an atom's value cannot be inferred by subtraction, so a missing atom
    makes the required trace value underivable (NotTraceClosedError).
    Each supplied set must avoid mixing +inf/-inf among its atoms
    (MixedInfinitiesInDomainSetError) and must equal its atom sum
    (AdditivityViolationError).  Subsets of supplied sets are then added
    with their atom-sum values, which makes the domain trace-closed.
    """
    vmap: dict[int, ExtReal] = {}
    dom_masks = set()
    for a in domain:
        if a.space != space:
            raise SpaceMismatchError("domain set on a different space")
        dom_masks.add(a.mask)
    for a, v in values.items():
        if a.space != space:
            raise SpaceMismatchError("valued set on a different space")
        if not isinstance(v, ExtReal):
            raise TypeError(f"ExtReal required, got {type(v).__name__}")
        vmap[a.mask] = v
    if dom_masks != set(vmap):
        raise SchemaError("domain and values must describe the same sets")
    if not vmap:
        raise EmptyDomainError("a partial measure needs at least one domain set")

    atom_vals: dict[int, ExtReal] = {}
    for i in range(space.n_atoms):
        if (1 << i) in vmap:
            atom_vals[i] = vmap[1 << i]

    for mask in sorted(vmap):
        for i in iter_bits(mask):
            if i not in atom_vals:
                raise NotTraceClosedError(
                    f"set {MeasurableSet(space, mask).key()!r} requires atom "
                    f"{space.atom_label(i)!r}, whose value is not derivable "
                    "from the supplied sets"
                )
        pos = neg = False
        for i in iter_bits(mask):
            v = atom_vals[i]
            if not v.is_finite:
                if v == PLUS_INF:
                    pos = True
                else:
                    neg = True
        if pos and neg:
            raise MixedInfinitiesInDomainSetError(
                f"atoms of {MeasurableSet(space, mask).key()!r} carry "
                "both +inf and -inf"
            )
        total = extreal.sum(atom_vals[i] for i in iter_bits(mask))
        if vmap[mask] != total:
            raise AdditivityViolationError(
                f"value {vmap[mask]} of {MeasurableSet(space, mask).key()!r} "
                f"differs from its atom sum {total}"
            )

    closed: dict[int, ExtReal] = {0: ZERO}
    for mask in vmap:
        sub = mask
        while True:
            if sub not in closed:
                closed[sub] = extreal.sum(atom_vals[i] for i in iter_bits(sub))
            if sub == 0:
                break
            sub = (sub - 1) & mask
    return PartialMeasure(space, closed)


def _finite_sum_table(values: Sequence[ExtReal], k: int) -> list[Fraction]:
    """DP table of finite-part sums over all atom masks."""
    fin = [v.as_fraction() if v.is_finite else Fraction(0) for v in values]
    table = [Fraction(0)] * (1 << k)
    for mask in range(1, 1 << k):
        low = mask & -mask
        table[mask] = table[mask ^ low] + fin[low.bit_length() - 1]
    return table


def diff_measures(
    m1: PositiveMeasure, m2: PositiveMeasure, cap: int | None = None
) -> PartialMeasure:
    """The difference of two positive measures, on its well-posed domain.

    The domain is every set A with m1(A) - m2(A) well-posed, i.e. those
    not simultaneously containing a +inf atom of each operand.
    """
    if not isinstance(m1, PositiveMeasure) or not isinstance(m2, PositiveMeasure):
        raise NotPositiveError("diff_measures requires two positive measures")
    if m1.space != m2.space:
        raise SpaceMismatchError("measures live on different spaces")
    space = m1.space
    k = space.n_atoms
    _check_cap(k, cap)
    inf1 = m1._pos_mask
    inf2 = m2._pos_mask
    fs1 = _finite_sum_table(m1.atom_values, k)
    fs2 = _finite_sum_table(m2.atom_values, k)
    values: dict[int, ExtReal] = {}
    for mask in range(1 << k):
        hit1 = mask & inf1
        hit2 = mask & inf2
        if hit1 and hit2:
            continue
        if hit1:
            values[mask] = PLUS_INF
        elif hit2:
            values[mask] = MINUS_INF
        else:
            values[mask] = ExtReal(fs1[mask] - fs2[mask])
    return PartialMeasure(space, values)


def maximalize(
    pm: PartialMeasure, fill: Mapping[str, ExtReal] | None = None
) -> MaximalPartialMeasure:
    """Extend a partial measure to a maximal one.

    Atoms under the domain keep their determined values; the remaining
    free atoms take the value from ``fill`` (keyed by atom label) or 0.
    Maximal extensions are genuinely non-unique, which is why the free
    choice is part of the signature rather than hidden.
    """
    space = pm.space
    assignments: dict[int, ExtReal] = {}
    if fill:
        label_to_atom = {space.atom_label(i): i for i in range(space.n_atoms)}
        for label, v in fill.items():
            i = label_to_atom.get(label)
            if i is None:
                raise UnknownPointError(f"no atom labelled {label!r}")
            if pm.covered_atoms >> i & 1:
                raise FillConflictError(
                    f"atom {label!r} is determined by the domain; "
                    "its value cannot be chosen"
                )
            if not isinstance(v, ExtReal):
                raise TypeError(f"ExtReal required, got {type(v).__name__}")
            assignments[i] = v
    atom_values = []
    for i in range(space.n_atoms):
        if pm.covered_atoms >> i & 1:
            atom_values.append(pm.determined_atom_value(i))
        else:
            atom_values.append(assignments.get(i, ZERO))
    return MaximalPartialMeasure(space, atom_values)


def value_table(mu, cap: int | None = None) -> list[ExtReal | None]:
    """Values of every set, indexed by atom mask; None where ill-posed.

    Works for any atom-valued set function exposing ``space``,
    ``atom_values`` and the infinity masks, i.e. both measures and
    maximal partial measures.  For a measure no entry is None.
    """
    k = mu.space.n_atoms
    _check_cap(k, cap)
    pos = mu._pos_mask
    neg = mu._neg_mask
    finite_sums = _finite_sum_table(mu.atom_values, k)
    table: list[ExtReal | None] = [None] * (1 << k)
    for mask in range(1 << k):
        if mask & pos:
            table[mask] = None if mask & neg else PLUS_INF
        elif mask & neg:
            table[mask] = MINUS_INF
        else:
            table[mask] = ExtReal(finite_sums[mask])
    return table


def _family_masks(table: Sequence[ExtReal | None], plus: bool) -> list[int]:
    """Masks of domain sets all of whose subsets have sign-constrained value.

    Literal brute force: every submask of every candidate is inspected.
    """
    out = []
    for f in range(len(table)):
        if table[f] is None:
            continue
        good = True
        sub = f
        while True:
            v = table[sub]
            if (v < ZERO) if plus else (v > ZERO):
                good = False
                break
            if sub == 0:
                break
            sub = (sub - 1) & f
        if good:
            out.append(f)
    return out


def f_plus(mu: MaximalPartialMeasure, cap: int | None = None) -> list[MeasurableSet]:
    """Domain sets whose every measurable subset has value >= 0."""
    table = value_table(mu, cap)
    return [MeasurableSet(mu.space, m) for m in _family_masks(table, plus=True)]


def f_minus(mu: MaximalPartialMeasure, cap: int | None = None) -> list[MeasurableSet]:
    """Domain sets whose every measurable subset has value <= 0."""
    table = value_table(mu, cap)
    return [MeasurableSet(mu.space, m) for m in _family_masks(table, plus=False)]


def _sup_over_family(
    table: Sequence[ExtReal | None], family: Sequence[int], a_mask: int, flip: bool
) -> tuple[ExtReal, int]:
    """sup over F in family of mu(A ∩ F) (negated when ``flip``).

    A ∩ F is a subset of the domain set F, so the lookup never hits an
    ill-posed entry.  Ties keep the first attaining set in canonical
    enumeration order.
    """
    best: ExtReal | None = None
    best_mask = 0
    for f in family:
        v = table[a_mask & f]
        if flip:
            v = -v
        if best is None or v > best:
            best = v
            best_mask = f
    assert best is not None  # family always contains the empty set
    return best, best_mask


def jordan_sup(
    mu: MaximalPartialMeasure,
    a: MeasurableSet,
    side: str,
    cap: int | None = None,
) -> tuple[ExtReal, MeasurableSet]:
    """Evaluate the defining supremum of the decomposition at one set.

    side="plus":  sup over F in F+ of mu(A ∩ F)
    side="minus": sup over F in F- of -mu(A ∩ F)

    Returns the value together with the attaining set.
    """
    if side not in ("plus", "minus"):
        raise ValueError(f"side must be 'plus' or 'minus', got {side!r}")
    if a.space != mu.space:
        raise SpaceMismatchError("set does not belong to this space")
    table = value_table(mu, cap)
    family = _family_masks(table, plus=(side == "plus"))
    v, f = _sup_over_family(table, family, a.mask, flip=(side == "minus"))
    return v, MeasurableSet(mu.space, f)


@dataclass(frozen=True)
class JordanDecomposition:
    """Positive/negative parts plus the attaining sets for each atom."""

    mu_plus: PositiveMeasure
    mu_minus: PositiveMeasure
    plus_attaining: tuple[MeasurableSet, ...]
    minus_attaining: tuple[MeasurableSet, ...]


def jordan_decompose_detailed(
    mu: MaximalPartialMeasure, cap: int | None = None
) -> JordanDecomposition:
    """Decompose via the literal supremum formulas over F+ and F-.

    Both parts are positive measures; on every domain set A the identity
    mu(A) = mu_plus(A) - mu_minus(A) holds exactly, and outside the
    domain both parts are +inf.  The per-atom attaining sets are kept
    for diagnostics.
    """
    space = mu.space
    table = value_table(mu, cap)
    plus_family = _family_masks(table, plus=True)
    minus_family = _family_masks(table, plus=False)
    plus_vals: list[ExtReal] = []
    minus_vals: list[ExtReal] = []
    plus_att: list[MeasurableSet] = []
    minus_att: list[MeasurableSet] = []
    for i in range(space.n_atoms):
        v, f = _sup_over_family(table, plus_family, 1 << i, flip=False)
        plus_vals.append(v)
        plus_att.append(MeasurableSet(space, f))
        w, g = _sup_over_family(table, minus_family, 1 << i, flip=True)
        minus_vals.append(w)
        minus_att.append(MeasurableSet(space, g))
    return JordanDecomposition(
        PositiveMeasure(space, plus_vals),
        PositiveMeasure(space, minus_vals),
        tuple(plus_att),
        tuple(minus_att),
    )


def jordan_decompose(
    mu: MaximalPartialMeasure, cap: int | None = None
) -> tuple[PositiveMeasure, PositiveMeasure]:
    d = jordan_decompose_detailed(mu, cap)
    return d.mu_plus, d.mu_minus


def check_minimality(
    mu: MaximalPartialMeasure,
    candidate: PositiveMeasure,
    side: str,
    cap: int | None = None,
) -> bool:
    """Does ``candidate`` dominate mu (side="plus") or -mu (side="minus")
    on every domain set?

    Whenever this returns True, the corresponding decomposition part is
    pointwise below the candidate on the whole algebra; that extremal
    guarantee is asserted by the test suite, not here.
    """
    if side not in ("plus", "minus"):
        raise ValueError(f"side must be 'plus' or 'minus', got {side!r}")
    if candidate.space != mu.space:
        raise SpaceMismatchError("candidate lives on a different space")
    table = value_table(mu, cap)
    cand_table = value_table(candidate, cap)
    flip = side == "minus"
    for mask, v in enumerate(table):
        if v is None:
            continue
        lhs = -v if flip else v
        if not lhs <= cand_table[mask]:
            return False
    return True


def corollary1_witness(
    mu: MaximalPartialMeasure, a: MeasurableSet
) -> tuple[MeasurableSet, MeasurableSet]:
    """For a set outside the domain, subsets witnessing both infinities.

    Returns (a_plus, a_minus) with a_plus ⊆ a in F+ of value +inf and
    a_minus ⊆ a in F- of value -inf.  Canonical choice: a_plus collects
    the atoms of a with value >= 0, a_minus those with value <= 0.
    """
    if a.space != mu.space:
        raise SpaceMismatchError("set does not belong to this space")
    if mu.in_domain_mask(a.mask):
        raise InDomainError(f"{a!r} has a well-posed value")
    nonneg = nonpos = 0
    for i in iter_bits(a.mask):
        v = mu.atom_values[i]
        if v >= ZERO:
            nonneg |= 1 << i
        if v <= ZERO:
            nonpos |= 1 << i
    return MeasurableSet(mu.space, nonneg), MeasurableSet(mu.space, nonpos)


def hahn_partial(
    mu: MaximalPartialMeasure,
) -> tuple[MeasurableSet, MeasurableSet]:
    """Split the space into C in F+ and its complement in F-.

    On a finite algebra this always succeeds (take the union of the
    atoms with value >= 0).  The symbolic two-half model shows the same
    split can fail on richer algebras, so this operation exists to make
    the finite-scale contrast executable rather than to promise anything
    in general.
    """
    pmask = 0
    for i, v in enumerate(mu.atom_values):
        if v >= ZERO:
            pmask |= 1 << i
    c = MeasurableSet(mu.space, pmask)
    return c, c.complement()


def restrict_to(
    mu: MaximalPartialMeasure, generators: Iterable[MeasurableSet]
) -> PartialMeasure:
    """The partial measure induced on the down-closure of ``generators``.

    Every generator must lie in the derived domain.  The result's domain
    is the union of the generators' subset lattices plus the empty set.
    """
    values: dict[int, ExtReal] = {0: ZERO}
    for g in generators:
        if g.space != mu.space:
            raise SpaceMismatchError("generator on a different space")
        if not mu.in_domain_mask(g.mask):
            raise NotInDomainError(f"{g!r} is outside the derived domain")
        sub = g.mask
        while True:
            if sub not in values:
                values[sub] = extreal.sum(
                    mu.atom_values[i] for i in iter_bits(sub)
                )
            if sub == 0:
                break
            sub = (sub - 1) & g.mask
    return PartialMeasure(mu.space, values)


def _determined_infinity_masks(pm: PartialMeasure) -> tuple[int, int]:
    pos = neg = 0
    for i in iter_bits(pm.covered_atoms):
        v = pm.determined_atom_value(i)
        if not v.is_finite:
            if v == PLUS_INF:
                pos |= 1 << i
            else:
                neg |= 1 << i
    return pos, neg


def single_set_extensions(
    pm: PartialMeasure, cap: int | None = None
) -> list[MeasurableSet]:
    """Sets outside the domain that could extend ``pm`` by a single set.

    A set S qualifies exactly when its determined atoms do not mix +inf
    and -inf: its free atoms can then be given any finite value (say 0)
    and S joins the domain with the resulting atom sum.  An empty result
    characterizes maximality.
    """
    k = pm.space.n_atoms
    _check_cap(k, cap)
    pos, neg = _determined_infinity_masks(pm)
    out = []
    for mask in range(1 << k):
        if mask in pm._values:
            continue
        if mask & pos and mask & neg:
            continue
        out.append(MeasurableSet(pm.space, mask))
    return out


def is_maximal(pm: PartialMeasure, cap: int | None = None) -> bool:
    """True when no single-set extension exists."""
    k = pm.space.n_atoms
    _check_cap(k, cap)
    pos, neg = _determined_infinity_masks(pm)
    for mask in range(1 << k):
        if mask in pm._values:
            continue
        if mask & pos and mask & neg:
            continue
        return False
    return True


def can_extend_with(
    mu: MaximalPartialMeasure, s: MeasurableSet, value: ExtReal
) -> bool:
    """Would adjoining ``s`` with ``value`` properly extend ``mu``?

    Always False: a set already in the derived domain is no proper
    extension, and a set outside it mixes +inf and -inf among its atoms,
    so additivity over its atom partition is ill-posed for every choice
    of value.  The remaining comparison is kept so the claim is computed
    rather than asserted.
    """
    if s.space != mu.space:
        raise SpaceMismatchError("set does not belong to this space")
    if mu.in_domain_mask(s.mask):
        return False
    try:
        total = extreal.sum(mu.atom_values[i] for i in iter_bits(s.mask))
    except IllPosedError:
        return False
    return value == total
