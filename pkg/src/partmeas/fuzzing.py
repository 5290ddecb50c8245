"""Seeded random instances and the property suite behind the fuzz command.

Instance generation is reproducible: the stream for a trial is derived
from (seed, property index, trial index) by integer mixing, never from
global state, so trials could run concurrently without changing any
result.  Generated values favour small rationals so counterexamples stay
readable.

Each property replays one invariant of the package on random instances
and raises :class:`PropertyViolation` with a serialized counterexample
when it fails.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import extreal, jsonio
from .density import (
    Probability,
    RandomVariable,
    ess_sup,
    is_abs_continuous,
    mu_xi,
    rn_derivative,
)
from .errors import IllPosedError, InvalidConfigError
from .extreal import MINUS_INF, PLUS_INF, ZERO, ExtReal
from .measure import Measure, PositiveMeasure, hahn_decomposition
from .partial import (
    MaximalPartialMeasure,
    can_extend_with,
    check_minimality,
    corollary1_witness,
    diff_measures,
    f_plus,
    hahn_partial,
    is_maximal,
    jordan_decompose_detailed,
    jordan_sup,
    maximalize,
    restrict_to,
    single_set_extensions,
    validate_partial,
    value_table,
)
from .spaces import (
    ENUMERATION_CAP,
    FiniteSpace,
    MeasurableSet,
    generate_algebra,
    iter_bits,
    trace_algebra,
)
from .symbolic import (
    FINITE,
    SymbolicSet,
    SymbolicValue,
    f_plus_enumeration_oracle,
    mu3,
    random_algebra_member,
    sym_in_algebra,
    sym_in_f_plus,
)

__all__ = [
    "FuzzConfig",
    "PropertyViolation",
    "generate_random_instance",
    "run_fuzz",
    "PROPERTIES",
]

_MASK64 = (1 << 64) - 1
_LETTERS = "abcdefghijklmnopqrst"

_VALUE_TOKENS = ("finite", "+inf", "-inf")


def _mix64(*parts: int) -> int:
    # splitmix64-style; fixed arithmetic keeps streams identical everywhere
    x = 0x9E3779B97F4A7C15
    for p in parts:
        x = (x + (p & _MASK64)) & _MASK64
        x ^= x >> 30
        x = (x * 0xBF58476D1CE4E5B9) & _MASK64
        x ^= x >> 27
        x = (x * 0x94D049BB133111EB) & _MASK64
        x ^= x >> 31
    return x


@dataclass(frozen=True)
class FuzzConfig:
    seed: int = 0
    trials: int = 100
    max_atoms: int = 6
    value_pool: tuple[tuple[str, int], ...] = (("finite", 6), ("+inf", 1), ("-inf", 1))
    null_atom_chance: float = 0.25

    def __post_init__(self):
        if not isinstance(self.seed, int) or not 0 <= self.seed <= _MASK64:
            raise InvalidConfigError("seed must be a 64-bit unsigned integer")
        if self.trials < 1:
            raise InvalidConfigError("trials must be >= 1")
        if not 1 <= self.max_atoms <= ENUMERATION_CAP:
            raise InvalidConfigError(
                f"max_atoms must be between 1 and {ENUMERATION_CAP}"
            )
        pool = tuple(self.value_pool)
        if not pool or any(
            token not in _VALUE_TOKENS or not isinstance(w, int) or w < 0
            for token, w in pool
        ):
            raise InvalidConfigError(
                "value_pool must weight tokens from "
                + ", ".join(_VALUE_TOKENS)
            )
        if all(w == 0 for _, w in pool):
            raise InvalidConfigError("value_pool needs a positive weight")
        if not 0.0 <= self.null_atom_chance <= 1.0:
            raise InvalidConfigError("null_atom_chance must lie in [0, 1]")
        object.__setattr__(self, "value_pool", pool)


class PropertyViolation(Exception):
    def __init__(self, detail: str, instance: dict | None = None):
        super().__init__(detail)
        self.payload = {"detail": detail, "instance": instance or {}}


# ---------------------------------------------------------------------------
# random builders


def _random_finite(rng: random.Random) -> ExtReal:
    return ExtReal(Fraction(rng.randint(-8, 8), rng.randint(1, 8)))


def _random_value(rng: random.Random, pool) -> ExtReal:
    token = rng.choices([t for t, _ in pool], weights=[w for _, w in pool])[0]
    if token == "+inf":
        return PLUS_INF
    if token == "-inf":
        return MINUS_INF
    return _random_finite(rng)


def _random_space(rng: random.Random, max_atoms: int) -> FiniteSpace:
    return FiniteSpace.discrete(_LETTERS[: rng.randint(1, max_atoms)])


def _random_maximal(
    rng: random.Random, cfg: FuzzConfig, space: FiniteSpace | None = None
) -> MaximalPartialMeasure:
    if space is None:
        space = _random_space(rng, cfg.max_atoms)
    return MaximalPartialMeasure(
        space, [_random_value(rng, cfg.value_pool) for _ in range(space.n_atoms)]
    )


def _random_total_measure(rng: random.Random, cfg, space: FiniteSpace) -> Measure:
    # a total measure may use only one of the infinities
    sign = rng.choice((1, -1))
    vals = []
    for _ in range(space.n_atoms):
        v = _random_value(rng, cfg.value_pool)
        if not v.is_finite and v.sign() != sign:
            v = -v
        vals.append(v)
    return Measure(space, vals)


def _random_positive_measure(
    rng: random.Random, space: FiniteSpace, inf_chance: float = 0.15
) -> PositiveMeasure:
    vals = []
    for _ in range(space.n_atoms):
        if rng.random() < inf_chance:
            vals.append(PLUS_INF)
        else:
            vals.append(ExtReal(Fraction(rng.randint(0, 8), rng.randint(1, 8))))
    return PositiveMeasure(space, vals)


def _random_probability(
    rng: random.Random, space: FiniteSpace, null_chance: float
) -> Probability:
    weights = []
    for _ in range(space.n_atoms):
        if rng.random() < null_chance:
            weights.append(Fraction(0))
        else:
            weights.append(Fraction(rng.randint(1, 8), rng.randint(1, 8)))
    if not any(weights):
        weights[rng.randrange(space.n_atoms)] = Fraction(1)
    total = Fraction(0)
    for w in weights:
        total += w
    return Probability(space, [w / total for w in weights])


def _random_ac_pair(
    rng: random.Random, cfg: FuzzConfig
) -> tuple[MaximalPartialMeasure, Probability]:
    """A measure absolutely continuous w.r.t. a probability with null atoms."""
    space = _random_space(rng, cfg.max_atoms)
    prob = _random_probability(rng, space, cfg.null_atom_chance)
    vals = []
    for i in range(space.n_atoms):
        if prob.atom_probs[i] == 0:
            vals.append(ZERO)
        else:
            vals.append(_random_value(rng, cfg.value_pool))
    return MaximalPartialMeasure(space, vals), prob


def generate_random_instance(
    cfg: FuzzConfig, trial: int
) -> tuple[MaximalPartialMeasure, Probability]:
    """The seeded instance stream: one measure and one probability per trial."""
    rng = random.Random(_mix64(cfg.seed, 0, trial))
    space = _random_space(rng, cfg.max_atoms)
    mu = _random_maximal(rng, cfg, space)
    prob = _random_probability(rng, space, cfg.null_atom_chance)
    return mu, prob


def _mu_payload(mu: MaximalPartialMeasure) -> dict:
    return jsonio.wrap_instance("maximal", mu)


def _fail(detail: str, **instances) -> None:
    raise PropertyViolation(detail, instances or None)


# ---------------------------------------------------------------------------
# arithmetic properties


def _prop_sum_invariance(rng, cfg):
    xs = [_random_value(rng, cfg.value_pool) for _ in range(rng.randint(0, 8))]
    has_pos = any(v == PLUS_INF for v in xs)
    has_neg = any(v == MINUS_INF for v in xs)
    try:
        total = extreal.sum(xs)
        ill = False
    except IllPosedError:
        ill = True
    if ill != (has_pos and has_neg):
        _fail(f"ill-posedness mismatch for {[str(v) for v in xs]}")
    if ill:
        return
    shuffled = xs[:]
    rng.shuffle(shuffled)
    if extreal.sum(shuffled) != total:
        _fail("sum is not permutation invariant")

    def fold(items):
        if not items:
            return ZERO
        if len(items) == 1:
            return items[0]
        cut = rng.randint(1, len(items) - 1)
        return extreal.add(fold(items[:cut]), fold(items[cut:]))

    if fold(xs) != total:
        _fail("sum is not bracketing invariant")


def _prop_negation_and_order(rng, cfg):
    x = _random_value(rng, cfg.value_pool)
    y = _random_value(rng, cfg.value_pool)
    if -(-x) != x:
        _fail(f"negation is not an involution on {x}")
    if x.is_finite and extreal.add(x, -x) != ZERO:
        _fail(f"{x} plus its negation is not 0")
    lo1, hi1 = sorted((x, y))
    a = _random_value(rng, cfg.value_pool)
    b = _random_value(rng, cfg.value_pool)
    lo2, hi2 = sorted((a, b))
    try:
        left = extreal.add(lo1, lo2)
        right = extreal.add(hi1, hi2)
    except IllPosedError:
        return
    if not left <= right:
        _fail(f"order broke under addition: {lo1}+{lo2} > {hi1}+{hi2}")


def _prop_encoding_roundtrip(rng, cfg):
    x = _random_value(rng, cfg.value_pool)
    text = str(x)
    if extreal.parse(text) != x:
        _fail(f"parse(str({x!r})) changed the value")
    if str(extreal.parse(text)) != text:
        _fail(f"encoding of {text!r} is not canonical")


# ---------------------------------------------------------------------------
# space properties


def _random_generated_space(rng) -> tuple[FiniteSpace, list[str], list[list[str]]]:
    n = rng.randint(1, 6)
    points = list(_LETTERS[:n])
    gens = [
        rng.sample(points, rng.randint(0, n)) for _ in range(rng.randint(0, 3))
    ]
    return generate_algebra(points, gens), points, gens


def _prop_algebra_generation(rng, cfg):
    space, points, gens = _random_generated_space(rng)
    for g in gens:
        space.set_from_points(g)  # every generator must be measurable
    # atoms are maximal unseparated groups: distinct atoms are separated
    for i in range(space.n_atoms):
        for j in range(i + 1, space.n_atoms):
            pi = space.atom_points(i)[0]
            pj = space.atom_points(j)[0]
            if not any((pi in g) != (pj in g) for g in gens):
                _fail(f"atoms {i} and {j} are not separated by any generator")


def _prop_trace_and_demorgan(rng, cfg):
    space, _, _ = _random_generated_space(rng)
    k = space.n_atoms
    b = MeasurableSet(space, rng.randrange(1 << k))
    traced = trace_algebra(space, b)
    if traced.n_atoms != len(b.atom_indices()):
        _fail("trace atom count differs from the atoms inside the set")
    expected_blocks = sorted(
        tuple(space.atom_points(i)) for i in b.atom_indices()
    )
    got_blocks = sorted(
        tuple(traced.atom_points(i)) for i in range(traced.n_atoms)
    )
    if expected_blocks != got_blocks:
        _fail("trace atoms are not exactly the original atoms inside the set")
    if trace_algebra(space, space.full_set()) != space:
        _fail("trace over the whole space changed the space")
    x = MeasurableSet(space, rng.randrange(1 << k))
    y = MeasurableSet(space, rng.randrange(1 << k))
    if (x | y).complement() != x.complement() & y.complement():
        _fail("De Morgan failed for union")
    if (x & y).complement() != x.complement() | y.complement():
        _fail("De Morgan failed for intersection")


# ---------------------------------------------------------------------------
# measure properties


def _prop_measure_additivity(rng, cfg):
    space = _random_space(rng, cfg.max_atoms)
    m = _random_total_measure(rng, cfg, space)
    k = space.n_atoms
    seen_pos = seen_neg = False
    for mask in range(1 << k):
        v = m.evaluate(MeasurableSet(space, mask))
        if v == PLUS_INF:
            seen_pos = True
        elif v == MINUS_INF:
            seen_neg = True
        rest = space.full_mask ^ mask
        sub = rest
        while True:
            a = MeasurableSet(space, mask)
            b = MeasurableSet(space, sub)
            if m.evaluate(a | b) != extreal.add(v, m.evaluate(b)):
                _fail(f"additivity failed on {a.key()!r} and {b.key()!r}")
            if sub == 0:
                break
            sub = (sub - 1) & rest
    if seen_pos and seen_neg:
        _fail("a measure attained both +inf and -inf")
    pos = _random_positive_measure(rng, space)
    for mask in range(1 << k):
        bigger = MeasurableSet(space, mask)
        smaller = MeasurableSet(space, mask & rng.randrange(1 << k))
        if not pos.evaluate(smaller) <= pos.evaluate(bigger):
            _fail("positive measure is not monotone")


def _prop_hahn_total(rng, cfg):
    space = _random_space(rng, cfg.max_atoms)
    m = _random_total_measure(rng, cfg, space)
    p, n = hahn_decomposition(m)
    if p.mask & n.mask or p.mask | n.mask != space.full_mask:
        _fail("positive/negative parts do not partition the space")
    sub = p.mask
    while True:
        if m.evaluate(MeasurableSet(space, sub)) < ZERO:
            _fail("a subset of the positive part is negative")
        if sub == 0:
            break
        sub = (sub - 1) & p.mask
    sub = n.mask
    while True:
        if m.evaluate(MeasurableSet(space, sub)) > ZERO:
            _fail("a subset of the negative part is positive")
        if sub == 0:
            break
        sub = (sub - 1) & n.mask


# ---------------------------------------------------------------------------
# partial measure properties


def _random_domain_generators(rng, mu, max_count=3) -> list[MeasurableSet]:
    k = mu.space.n_atoms
    masks = [m for m in range(1 << k) if mu.in_domain_mask(m)]
    return [
        MeasurableSet(mu.space, rng.choice(masks))
        for _ in range(rng.randint(0, max_count))
    ]


def _prop_restriction_validates(rng, cfg):
    mu = _random_maximal(rng, cfg)
    gens = _random_domain_generators(rng, mu)
    pm = restrict_to(mu, gens)
    sets = pm.domain_sets()
    revalidated = validate_partial(
        pm.space, sets, {s: pm.evaluate(s) for s in sets}
    )
    if revalidated != pm:
        _fail("re-validating a restriction changed it", mu=_mu_payload(mu))
    for s in sets:
        sub = s.mask
        while True:
            if not pm.in_domain(MeasurableSet(pm.space, sub)):
                _fail("domain is not closed under subsets", mu=_mu_payload(mu))
            if sub == 0:
                break
            sub = (sub - 1) & s.mask
        if pm.evaluate(s) != extreal.sum(
            mu.atom_values[i] for i in iter_bits(s.mask)
        ):
            _fail("restriction value differs from atom sum", mu=_mu_payload(mu))


def _prop_disjoint_family_sums(rng, cfg):
    mu = _random_maximal(rng, cfg)
    table = value_table(mu)
    fp = [m for m in range(len(table)) if table[m] is not None]
    fp = [
        m
        for m in fp
        if all(table[s] >= ZERO for s in _submasks(m))
    ]
    u = rng.choice(fp)

    def random_partition() -> list[int]:
        nblocks = rng.randint(1, 3)
        blocks = [0] * nblocks
        for i in iter_bits(u):
            blocks[rng.randrange(nblocks)] |= 1 << i
        return blocks

    fam1 = random_partition()
    fam2 = random_partition()
    s1 = extreal.sum(table[b] for b in fam1)
    s2 = extreal.sum(table[b] for b in fam2)
    if not (s1 == s2 == table[u]):
        _fail(
            f"disjoint families over {u:b} sum differently: {s1} vs {s2}",
            mu=_mu_payload(mu),
        )


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _prop_union_closure(rng, cfg):
    mu = _random_maximal(rng, cfg)
    table = value_table(mu)
    fp = {
        m
        for m in range(len(table))
        if table[m] is not None and all(table[s] >= ZERO for s in _submasks(m))
    }
    members = rng.sample(sorted(fp), min(len(fp), rng.randint(1, 4)))
    union = 0
    for m in members:
        union |= m
    if union not in fp:
        _fail(
            f"union of nonnegative-class members left the class: {union:b}",
            mu=_mu_payload(mu),
        )


def _prop_jordan_identity(rng, cfg):
    mu = _random_maximal(rng, cfg)
    d = jordan_decompose_detailed(mu)
    t = value_table(mu)
    tp = value_table(d.mu_plus)
    tm = value_table(d.mu_minus)
    for mask, v in enumerate(t):
        if v is not None:
            if v != tp[mask] - tm[mask]:
                _fail(
                    f"decomposition identity failed on mask {mask:b}",
                    mu=_mu_payload(mu),
                )
        elif tp[mask] != PLUS_INF or tm[mask] != PLUS_INF:
            _fail(
                f"outside the domain both parts must be +inf (mask {mask:b})",
                mu=_mu_payload(mu),
            )


def _prop_jordan_oracle(rng, cfg):
    mu = _random_maximal(rng, cfg)
    d = jordan_decompose_detailed(mu)
    for i, v in enumerate(mu.atom_values):
        expected_plus = v if v > ZERO else ZERO
        expected_minus = -v if v < ZERO else ZERO
        if d.mu_plus.atom_values[i] != expected_plus:
            _fail(f"positive part disagrees with per-atom oracle at atom {i}",
                  mu=_mu_payload(mu))
        if d.mu_minus.atom_values[i] != expected_minus:
            _fail(f"negative part disagrees with per-atom oracle at atom {i}",
                  mu=_mu_payload(mu))


def _prop_jordan_sup_additive(rng, cfg):
    mu = _random_maximal(rng, cfg)
    k = mu.space.n_atoms
    d = jordan_decompose_detailed(mu)
    tp = value_table(d.mu_plus)
    a_mask = rng.randrange(1 << k)
    b_mask = rng.randrange(1 << k) & ~a_mask
    a = MeasurableSet(mu.space, a_mask)
    b = MeasurableSet(mu.space, b_mask)
    va, _ = jordan_sup(mu, a, "plus")
    vb, _ = jordan_sup(mu, b, "plus")
    vu, _ = jordan_sup(mu, a | b, "plus")
    if extreal.add(va, vb) != vu:
        _fail("the supremum formula is not additive", mu=_mu_payload(mu))
    if vu != tp[a_mask | b_mask]:
        _fail("the supremum formula disagrees with the positive part",
              mu=_mu_payload(mu))


def _prop_minimality(rng, cfg):
    mu = _random_maximal(rng, cfg)
    d = jordan_decompose_detailed(mu)
    rho = _random_positive_measure(rng, mu.space)
    for part, side in ((d.mu_plus, "plus"), (d.mu_minus, "minus")):
        nu = PositiveMeasure(
            mu.space,
            [extreal.add(a, b) for a, b in zip(part.atom_values, rho.atom_values)],
        )
        if not check_minimality(mu, nu, side):
            _fail(f"a dominating candidate was rejected on side {side}",
                  mu=_mu_payload(mu))
        tn = value_table(nu)
        tpart = value_table(part)
        for mask in range(len(tn)):
            if not tpart[mask] <= tn[mask]:
                _fail(f"extremal property failed on side {side}",
                      mu=_mu_payload(mu))


def _prop_minimality_rejects(rng, cfg):
    mu = _random_maximal(rng, cfg)
    positive_atoms = [
        i for i, v in enumerate(mu.atom_values) if v > ZERO
    ]
    if not positive_atoms:
        return
    d = jordan_decompose_detailed(mu)
    i = rng.choice(positive_atoms)
    vals = list(d.mu_plus.atom_values)
    vals[i] = ExtReal(vals[i].as_fraction() / 2) if vals[i].is_finite else ExtReal(1)
    nu = PositiveMeasure(mu.space, vals)
    if check_minimality(mu, nu, "plus"):
        _fail("a candidate strictly below the measure passed", mu=_mu_payload(mu))


def _prop_corollary1(rng, cfg):
    mu = _random_maximal(rng, cfg)
    table = value_table(mu)
    for mask, v in enumerate(table):
        if v is not None:
            continue
        a = MeasurableSet(mu.space, mask)
        a_plus, a_minus = corollary1_witness(mu, a)
        if not a_plus.is_subset(a) or not a_minus.is_subset(a):
            _fail("witnesses are not subsets", mu=_mu_payload(mu))
        if table[a_plus.mask] != PLUS_INF or table[a_minus.mask] != MINUS_INF:
            _fail("witness values are not the infinities", mu=_mu_payload(mu))
        if any(table[s] < ZERO for s in _submasks(a_plus.mask)):
            _fail("positive witness fails class membership", mu=_mu_payload(mu))
        if any(table[s] > ZERO for s in _submasks(a_minus.mask)):
            _fail("negative witness fails class membership", mu=_mu_payload(mu))


def _prop_hahn_partial(rng, cfg):
    mu = _random_maximal(rng, cfg)
    table = value_table(mu)
    c, rest = hahn_partial(mu)
    if any(table[s] is None or table[s] < ZERO for s in _submasks(c.mask)):
        _fail("positive side fails class membership", mu=_mu_payload(mu))
    if any(table[s] is None or table[s] > ZERO for s in _submasks(rest.mask)):
        _fail("negative side fails class membership", mu=_mu_payload(mu))


def _prop_f_plus_downward(rng, cfg):
    mu = _random_maximal(rng, cfg)
    fp = {s.mask for s in f_plus(mu)}
    if not fp:
        _fail("the nonnegative class lost the empty set", mu=_mu_payload(mu))
    f = rng.choice(sorted(fp))
    sub = rng.randrange(1 << mu.space.n_atoms) & f
    if sub not in fp:
        _fail("the nonnegative class is not closed under subsets",
              mu=_mu_payload(mu))


def _prop_maximality_characterization(rng, cfg):
    mu = _random_maximal(rng, cfg)
    gens = _random_domain_generators(rng, mu)
    pm = restrict_to(mu, gens)
    candidates = single_set_extensions(pm)
    if candidates:
        s = rng.choice(candidates)
        sets = pm.domain_sets()
        values = {x: pm.evaluate(x) for x in sets}
        new_atoms = {}
        for i in iter_bits(s.mask):
            if pm.covered_atoms >> i & 1:
                new_atoms[i] = pm.determined_atom_value(i)
            else:
                new_atoms[i] = ZERO
        extra = {}
        for sub in _submasks(s.mask):
            ms = MeasurableSet(pm.space, sub)
            if ms not in values:
                extra[ms] = extreal.sum(new_atoms[i] for i in iter_bits(sub))
        values.update(extra)
        extended = validate_partial(pm.space, values.keys(), values)
        if not extended.in_domain(s):
            _fail("claimed single-set extension did not validate",
                  mu=_mu_payload(mu))
    mm = maximalize(pm)
    for b in pm.domain_sets():
        if not mm.in_domain(b) or mm.evaluate(b) != pm.evaluate(b):
            _fail("maximalization does not extend the original",
                  mu=_mu_payload(mu))
    if not candidates and not is_maximal(pm):
        _fail("characterization disagrees with is_maximal", mu=_mu_payload(mu))
    for mask in range(1 << mm.space.n_atoms):
        if mm.in_domain_mask(mask):
            continue
        s = MeasurableSet(mm.space, mask)
        for v in (ZERO, ExtReal(1), PLUS_INF, MINUS_INF):
            if can_extend_with(mm, s, v):
                _fail("maximalization admitted a further extension",
                      mu=_mu_payload(mu))


def _prop_diff_measures(rng, cfg):
    space = _random_space(rng, cfg.max_atoms)
    m1 = _random_positive_measure(rng, space)
    m2 = _random_positive_measure(rng, space)
    d = diff_measures(m1, m2)
    for mask in range(1 << space.n_atoms):
        a = MeasurableSet(space, mask)
        v1 = m1.evaluate(a)
        v2 = m2.evaluate(a)
        well_posed = not (v1 == PLUS_INF and v2 == PLUS_INF)
        if d.in_domain(a) != well_posed:
            _fail(f"difference domain is wrong on {a.key()!r}")
        if well_posed and d.evaluate(a) != v1 - v2:
            _fail(f"difference value is wrong on {a.key()!r}")
    shared_inf = any(
        m1.atom_values[i] == PLUS_INF and m2.atom_values[i] == PLUS_INF
        for i in range(space.n_atoms)
    )
    # derived criterion, believed but not quoted from anywhere: the
    # difference is maximal exactly when no atom is infinite in both operands
    if is_maximal(d) != (not shared_inf):
        _fail("difference maximality criterion failed")


# ---------------------------------------------------------------------------
# density properties


def _prop_mu_xi_domain(rng, cfg):
    space = _random_space(rng, cfg.max_atoms)
    prob = _random_probability(rng, space, cfg.null_atom_chance)
    xi = RandomVariable(
        space, [_random_value(rng, cfg.value_pool) for _ in range(space.n_atoms)]
    )
    m = mu_xi(xi, prob)
    products = []
    for i, v in enumerate(xi.atom_values):
        p = prob.atom_probs[i]
        if p == 0:
            products.append(ZERO)
        elif v.is_finite:
            products.append(ExtReal(v.as_fraction() * p))
        else:
            products.append(v)
    for i, expected in enumerate(products):
        if m.atom_values[i] != expected:
            _fail(f"integrated atom value is wrong at atom {i}")
    for mask in range(1 << space.n_atoms):
        has_pos = any(products[i] == PLUS_INF for i in iter_bits(mask))
        has_neg = any(products[i] == MINUS_INF for i in iter_bits(mask))
        quasi = not (has_pos and has_neg)
        if m.in_domain_mask(mask) != quasi:
            _fail(f"quasi-integrability domain is wrong on mask {mask:b}")


def _prop_rn_round_trip(rng, cfg):
    mu, prob = _random_ac_pair(rng, cfg)
    xi = rn_derivative(mu, prob)
    if mu_xi(xi, prob) != mu:
        _fail("derivative does not integrate back", mu=_mu_payload(mu))
    null_atoms = [i for i in range(mu.space.n_atoms) if prob.atom_probs[i] == 0]
    if null_atoms:
        vals = list(xi.atom_values)
        for i in null_atoms:
            vals[i] = _random_value(rng, cfg.value_pool)
        eta = RandomVariable(mu.space, vals)
        if mu_xi(eta, prob) != mu:
            _fail("perturbing a null atom changed the integral",
                  mu=_mu_payload(mu))
    non_null = [i for i in range(mu.space.n_atoms) if prob.atom_probs[i] > 0]
    i = rng.choice(non_null)
    vals = list(xi.atom_values)
    vals[i] = extreal.add(vals[i], ExtReal(1)) if vals[i].is_finite else ZERO
    eta = RandomVariable(mu.space, vals)
    if mu_xi(eta, prob) == mu:
        _fail("perturbing a non-null atom kept the integral",
              mu=_mu_payload(mu))


def _prop_ac_split(rng, cfg):
    mu, prob = _random_ac_pair(rng, cfg)
    table = value_table(mu)
    omega_plus = ess_sup(f_plus(mu), prob)
    if any(
        table[s] is None or table[s] < ZERO for s in _submasks(omega_plus.mask)
    ):
        _fail("essential supremum left the nonnegative class",
              mu=_mu_payload(mu))
    rest = omega_plus.complement()
    if any(table[s] is None or table[s] > ZERO for s in _submasks(rest.mask)):
        _fail("its complement left the nonpositive class", mu=_mu_payload(mu))


def _prop_ess_sup_definition(rng, cfg):
    space = _random_space(rng, cfg.max_atoms)
    prob = _random_probability(rng, space, cfg.null_atom_chance)
    k = space.n_atoms
    family = [
        MeasurableSet(space, rng.randrange(1 << k))
        for _ in range(rng.randint(1, 4))
    ]
    e = ess_sup(family, prob)

    def null(mask: int) -> bool:
        return mask & prob.nonnull_mask == 0

    for f in family:
        if not null(f.mask & ~e.mask):
            _fail("a family member escapes the essential supremum")
    for a_mask in range(1 << k):
        covers_all = all(null(f.mask & ~a_mask) for f in family)
        covers_e = null(e.mask & ~a_mask)
        if covers_all != covers_e:
            _fail(f"defining equivalence failed on mask {a_mask:b}")


def _prop_abs_continuity_criteria(rng, cfg):
    mu = _random_maximal(rng, cfg)
    prob = _random_probability(rng, mu.space, cfg.null_atom_chance)
    atomwise = is_abs_continuous(mu, prob)
    table = value_table(mu)
    quantified = True
    null_mask = prob.null_mask
    sub = null_mask
    while True:
        if table[sub] is None or table[sub] != ZERO:
            quantified = False
            break
        if sub == 0:
            break
        sub = (sub - 1) & null_mask
    if atomwise != quantified:
        _fail("atom criterion disagrees with the quantified criterion",
              mu=_mu_payload(mu))


# ---------------------------------------------------------------------------
# symbolic model properties


def _prop_symbolic_closure(rng, cfg):
    s = random_algebra_member(rng)
    t = random_algebra_member(rng)
    for derived in (s.complement(), s.union(t), s.intersect(t)):
        if not sym_in_algebra(derived):
            _fail("the modelled algebra is not closed under set operations")
    disjoint = t.intersect(s.complement())
    union = s.union(disjoint)
    vals = {}
    for name, x in (("s", s), ("t", disjoint), ("u", union)):
        vals[name] = mu3(x)
    if SymbolicValue.UNDEFINED not in vals.values():
        as_ext = {
            SymbolicValue.ZERO: ZERO,
            SymbolicValue.PLUS_INFINITY: PLUS_INF,
            SymbolicValue.MINUS_INFINITY: MINUS_INF,
        }
        try:
            total = extreal.add(as_ext[vals["s"]], as_ext[vals["t"]])
        except IllPosedError:
            _fail("a defined union mixed the infinities")
        if total != as_ext[vals["u"]]:
            _fail("the symbolic function is not additive where defined")


def _prop_symbolic_decision_vs_oracle(rng, cfg):
    c = random_algebra_member(rng)
    decision = sym_in_f_plus(c)
    if decision.member != f_plus_enumeration_oracle(c):
        _fail(f"decision procedure disagrees with the oracle on {c!r}")
    if not decision.member:
        w = decision.counterexample
        if w is None or not w.is_subset(c):
            _fail("missing or stray counterexample witness")
        if mu3(w) is not SymbolicValue.MINUS_INFINITY:
            _fail("counterexample witness does not have value -inf")


def _prop_symbolic_fragment_maximality(rng, cfg):
    c = random_algebra_member(rng)
    if mu3(c) is not SymbolicValue.UNDEFINED:
        return
    b_id = c.b_part.ids[0] if c.b_part.kind == FINITE else c.b_part.fresh_id()
    bc_id = (
        c.bc_part.ids[0] if c.bc_part.kind == FINITE else c.bc_part.fresh_id()
    )
    s_plus = SymbolicSet.singleton_b(b_id)
    s_minus = SymbolicSet.singleton_bc(bc_id)
    if not s_plus.is_subset(c) or not s_minus.is_subset(c):
        _fail("infinite singletons are not inside the undefined set")
    if mu3(s_plus) is not SymbolicValue.PLUS_INFINITY:
        _fail("distinguished-half singleton is not +inf")
    if mu3(s_minus) is not SymbolicValue.MINUS_INFINITY:
        _fail("complementary-half singleton is not -inf")
    try:
        extreal.sum([PLUS_INF, MINUS_INF])
    except IllPosedError:
        return
    _fail("an ill-posed trace sum was accepted")


PROPERTIES = [
    ("sum_permutation_and_bracketing", _prop_sum_invariance),
    ("negation_and_order_compatibility", _prop_negation_and_order),
    ("value_encoding_roundtrip", _prop_encoding_roundtrip),
    ("algebra_generation_minimality", _prop_algebra_generation),
    ("trace_atoms_and_de_morgan", _prop_trace_and_demorgan),
    ("measure_additivity_and_monotonicity", _prop_measure_additivity),
    ("total_measure_hahn_split", _prop_hahn_total),
    ("restriction_revalidates", _prop_restriction_validates),
    ("disjoint_families_sum_equally", _prop_disjoint_family_sums),
    ("nonnegative_class_union_closure", _prop_union_closure),
    ("decomposition_identity", _prop_jordan_identity),
    ("decomposition_matches_atom_oracle", _prop_jordan_oracle),
    ("sup_formula_is_additive", _prop_jordan_sup_additive),
    ("decomposition_is_minimal", _prop_minimality),
    ("domination_check_rejects", _prop_minimality_rejects),
    ("outside_domain_witnesses", _prop_corollary1),
    ("finite_scale_hahn_split", _prop_hahn_partial),
    ("nonnegative_class_downward_closed", _prop_f_plus_downward),
    ("maximality_characterization", _prop_maximality_characterization),
    ("difference_of_positive_measures", _prop_diff_measures),
    ("integration_domain_is_quasi_integrability", _prop_mu_xi_domain),
    ("derivative_round_trip_and_uniqueness", _prop_rn_round_trip),
    ("absolutely_continuous_split", _prop_ac_split),
    ("essential_supremum_definition", _prop_ess_sup_definition),
    ("absolute_continuity_criteria_agree", _prop_abs_continuity_criteria),
    ("symbolic_algebra_closure_and_additivity", _prop_symbolic_closure),
    ("symbolic_decision_matches_oracle", _prop_symbolic_decision_vs_oracle),
    ("symbolic_fragment_maximality", _prop_symbolic_fragment_maximality),
]


def run_fuzz(cfg: FuzzConfig) -> tuple[dict, list[dict]]:
    """Run every property for cfg.trials seeded trials.

    Returns the report plus a list of counterexample payloads (at most
    one per property, the first failing trial).
    """
    property_reports = []
    counterexamples = []
    total_failures = 0
    for prop_index, (name, fn) in enumerate(PROPERTIES):
        failures = 0
        for trial in range(cfg.trials):
            rng = random.Random(_mix64(cfg.seed, prop_index + 1, trial))
            try:
                fn(rng, cfg)
            except PropertyViolation as violation:
                failures += 1
                if failures == 1:
                    counterexamples.append(
                        {
                            "property": name,
                            "trial": trial,
                            "seed": cfg.seed,
                            **violation.payload,
                        }
                    )
            except Exception as exc:  # an unexpected crash also counts
                failures += 1
                if failures == 1:
                    counterexamples.append(
                        {
                            "property": name,
                            "trial": trial,
                            "seed": cfg.seed,
                            "detail": f"unexpected {type(exc).__name__}: {exc}",
                            "instance": {},
                        }
                    )
        total_failures += failures
        property_reports.append(
            {"name": name, "trials": cfg.trials, "failures": failures}
        )
    report = {
        "seed": cfg.seed,
        "trials": cfg.trials,
        "max_atoms": cfg.max_atoms,
        "failures": total_failures,
        "properties": property_reports,
    }
    return report, counterexamples
