"""Named algebraic laws and the harness that checks them.

Every law is a named, self-contained check over a family of instances
(scale elements, multisets, capacities, profiles) drawn either
exhaustively from small discrete scales or by seeded sampling.  Results
are machine-readable records; a law expected to fail (a pinned
counterexample) reports ``xfail`` when the violation is exhibited and the
suspicious ``xpass`` when it is not.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache, reduce
from random import Random
from typing import Callable, Iterable, Iterator, Sequence

from .capacity import (
    Capacity,
    SetFunction,
    capacity_problems,
    conjugate,
    covers_of,
    full_set,
    is_k_maxitive,
    is_maxitive,
    necessity_measure,
    possibility_measure,
    subset_members,
    subset_text,
    subsets,
    unanimity,
)
from .integrals import (
    Profile,
    choquet,
    choquet_asymmetric,
    choquet_mobius,
    choquet_symmetric,
    choquet_symmetric_explicit,
    sipos_mobius,
    sugeno,
    sugeno_mobius,
    sugeno_symmetric,
    sugeno_symmetric_explicit,
    sugeno_symmetric_mobius,
    ranked_terms,
    sugeno_variant1,
    sugeno_variant2,
    sugeno_variant3,
    symmetric_mobius_blocks,
    variant3_terms,
)
from .mobius import (
    MobiusInterval,
    RealSetFunction,
    canonical_ordinal_mobius,
    classical_mobius,
    classical_zeta,
    even_odd_mobius,
    is_solution,
    mobius_necessity,
    mobius_possibility,
    ordinal_mobius_interval,
    real_conjugate,
    reconstruct,
    reconstruct_from_conjugate,
)
from .rules import Rule, fold_sym_max, is_fold_unambiguous
from .scale import (
    ScaleValue,
    SymmetricScale,
    levels_scale,
    sym_max,
    sym_min,
    unit_scale,
)

# an exhaustive sub-enumeration is replaced by endpoint-plus-sampled
# checking above this many combinations
GRID_LIMIT = 4096


@dataclass(frozen=True)
class VerifyConfig:
    """What family of instances to draw: player count, scale grades, and
    either exhaustive enumeration or ``samples`` seeded draws."""

    n: int = 2
    levels: int = 3
    exhaustive: bool = True
    samples: int = 500
    seed: int = 0


@dataclass(frozen=True)
class LawResult:
    law: str
    kind: str  # "holds" | "violates" | "report"
    status: str  # "pass" | "fail" | "xfail" | "xpass" | "info"
    checks: int
    detail: str = ""

    @property
    def ok(self) -> bool:
        """False exactly when something unexpected happened."""
        return self.status in ("pass", "xfail", "info")

    def to_record(self) -> dict:
        record = {
            "law": self.law,
            "status": self.status,
            "checks": self.checks,
        }
        if self.detail:
            record["detail"] = self.detail
        return record


# fn(config) -> (witness or None, number of checks, optional note)
LawFn = Callable[[VerifyConfig], tuple[str | None, int, str]]


@dataclass(frozen=True)
class Law:
    name: str
    kind: str
    description: str
    fn: LawFn


LAWS: dict[str, Law] = {}


def _law(name: str, kind: str = "holds", description: str = ""):
    def register(fn: LawFn) -> LawFn:
        LAWS[name] = Law(name, kind, description, fn)
        return fn

    return register


def run_law(law: Law, config: VerifyConfig) -> LawResult:
    witness, checks, note = law.fn(config)
    if law.kind == "report":
        return LawResult(law.name, law.kind, "info", checks, witness or note)
    if law.kind == "violates":
        if witness is None:
            return LawResult(
                law.name, law.kind, "xpass", checks,
                note or "expected violation was not exhibited",
            )
        return LawResult(law.name, law.kind, "xfail", checks, witness)
    if witness is not None:
        return LawResult(law.name, law.kind, "fail", checks, witness)
    return LawResult(law.name, law.kind, "pass", checks, note)


def run_laws(
    config: VerifyConfig, names: Sequence[str] | None = None
) -> list[LawResult]:
    if names is None:
        selected = list(LAWS.values())
    else:
        missing = [name for name in names if name not in LAWS]
        if missing:
            raise KeyError(f"unknown law(s): {', '.join(missing)}")
        selected = [LAWS[name] for name in names]
    return [run_law(law, config) for law in selected]


def law_names() -> list[str]:
    return list(LAWS)


# -- instance generators -------------------------------------------------------


def _rng(config: VerifyConfig, tag: str) -> Random:
    # one independent deterministic stream per law
    return Random(f"{config.seed}:{tag}")


def iter_capacities(n: int, scale: SymmetricScale) -> Iterator[Capacity]:
    """Every capacity on n players over a levels scale, by backtracking in
    order of subset size (covers are always assigned first)."""
    k = scale.levels
    size = 1 << n
    free = sorted(
        (m for m in range(1, size - 1)), key=lambda m: (m.bit_count(), m)
    )
    grades = [0] * size
    grades[size - 1] = k

    def assign(idx: int) -> Iterator[Capacity]:
        if idx == len(free):
            yield Capacity(
                n, scale, tuple(scale.value(g) for g in grades)
            )
            return
        mask = free[idx]
        floor = max((grades[c] for c in covers_of(mask)), default=0)
        for grade in range(floor, k + 1):
            grades[mask] = grade
            yield from assign(idx + 1)
        grades[mask] = 0

    yield from assign(0)


def sample_capacity(rng: Random, n: int, scale: SymmetricScale) -> Capacity:
    k = scale.levels
    size = 1 << n
    grades = [0] * size
    for mask in range(1, size):
        grades[mask] = rng.randint(0, k)
    for mask in sorted(range(size), key=lambda m: m.bit_count()):
        for c in covers_of(mask):
            if grades[c] > grades[mask]:
                grades[mask] = grades[c]
    grades[size - 1] = k
    return Capacity(n, scale, tuple(scale.value(g) for g in grades))


def iter_profiles(
    n: int, scale: SymmetricScale, signed: bool = True
) -> Iterator[Profile]:
    values = list(scale.signed_values() if signed else scale.nonnegative_values())
    for scores in itertools.product(values, repeat=n):
        yield Profile(scale, scores)


def sample_profile(
    rng: Random, n: int, scale: SymmetricScale, signed: bool = True
) -> Profile:
    k = scale.levels
    low = -k if signed else 0
    return Profile(
        scale, tuple(scale.value(rng.randint(low, k)) for _ in range(n))
    )


def _capacities(config: VerifyConfig, rng: Random) -> Iterator[Capacity]:
    scale = levels_scale(config.levels)
    if config.exhaustive:
        yield from iter_capacities(config.n, scale)
    else:
        for _ in range(config.samples):
            yield sample_capacity(rng, config.n, scale)


def _instances(
    config: VerifyConfig, rng: Random, signed: bool = True
) -> Iterator[tuple[Capacity, Profile]]:
    scale = levels_scale(config.levels)
    if config.exhaustive:
        for v in iter_capacities(config.n, scale):
            for f in iter_profiles(config.n, scale, signed):
                yield v, f
    else:
        for _ in range(config.samples):
            yield (
                sample_capacity(rng, config.n, scale),
                sample_profile(rng, config.n, scale, signed),
            )


def iter_interval_members(
    interval: MobiusInterval,
    rng: Random | None = None,
    extra: int = 16,
    cap: int = GRID_LIMIT,
) -> Iterator[SetFunction]:
    """Tables in [lower, upper] on a levels scale: all of them when the box
    has at most ``cap`` corners, otherwise the two bounds plus ``extra``
    seeded draws."""
    scale = interval.lower.scale
    size = 1 << interval.n
    spans = [
        range(interval.lower(m).signed, interval.upper(m).signed + 1)
        for m in range(size)
    ]
    volume = 1
    for span in spans:
        volume *= len(span)
    if volume <= cap:
        for grades in itertools.product(*spans):
            yield SetFunction(
                interval.n, scale, tuple(scale.value(g) for g in grades)
            )
        return
    yield interval.lower
    yield interval.upper
    if rng is None:
        return
    for _ in range(extra):
        grades = tuple(rng.choice(span) for span in spans)
        yield SetFunction(
            interval.n, scale, tuple(scale.value(g) for g in grades)
        )


def _members(
    config: VerifyConfig, interval: MobiusInterval, rng: Random
) -> Iterator[SetFunction]:
    # sampling mode trades per-instance coverage for instance count
    if config.exhaustive:
        return iter_interval_members(interval, rng)
    return iter_interval_members(interval, rng, extra=4, cap=8)


def _capped_capacities(
    config: VerifyConfig, rng: Random, cap: int = 2000
) -> tuple[Iterator[Capacity], str]:
    """The usual capacity stream, but bounded in sampling mode; the note
    says so whenever the cap bites."""
    if config.exhaustive or config.samples <= cap:
        return _capacities(config, rng), ""
    return (
        itertools.islice(_capacities(config, rng), cap),
        f"sampled instances capped at {cap}",
    )


def worked_example() -> tuple[Capacity, Profile]:
    """The three-player unit-scale instance used across the documentation:
    a strictly monotone capacity except for one tie, and a signed profile."""
    scale = unit_scale()
    v = Capacity.from_values(
        3,
        scale,
        {
            "{}": "0",
            "{1}": "0.3",
            "{2}": "0.25",
            "{3}": "0.2",
            "{1,2}": "0.4",
            "{1,3}": "0.3",
            "{2,3}": "0.6",
            "{1,2,3}": "1",
        },
    )
    f = Profile.from_values(scale, ["-1", "0.3", "1"])
    return v, f


# -- scale laws ----------------------------------------------------------------


@_law(
    "reflection-involution",
    description="reflecting twice is the identity on every scale element",
)
def _reflection_involution(config: VerifyConfig):
    scale = levels_scale(config.levels)
    checks = 0
    for a in scale.signed_values():
        checks += 1
        if -(-a) != a:
            return f"-(-{a}) != {a}", checks, ""
    return None, checks, ""


@_law(
    "reflection-de-morgan",
    description="reflection swaps lattice max and min",
)
def _reflection_de_morgan(config: VerifyConfig):
    scale = levels_scale(config.levels)
    elements = list(scale.signed_values())
    checks = 0
    for a, b in itertools.product(elements, repeat=2):
        checks += 1
        if -max(a, b) != min(-a, -b) or -min(a, b) != max(-a, -b):
            return f"de morgan fails at ({a}, {b})", checks, ""
    return None, checks, ""


@_law(
    "marichal-forms",
    description=(
        "sym-max equals sign(a+b)(|a| max |b|) and sym-min equals "
        "sign(ab)(|a| min |b|) on the numeric embedding"
    ),
)
def _marichal_forms(config: VerifyConfig):
    scale = levels_scale(config.levels)
    elements = list(scale.signed_values())
    checks = 0
    for a, b in itertools.product(elements, repeat=2):
        checks += 1
        total = a.signed + b.signed
        sign_sum = (total > 0) - (total < 0)
        expected_max = sign_sum * max(abs(a.signed), abs(b.signed))
        product = a.signed * b.signed
        sign_product = (product > 0) - (product < 0)
        expected_min = sign_product * min(abs(a.signed), abs(b.signed))
        if sym_max(a, b).signed != expected_max:
            return f"sym-max mismatch at ({a}, {b})", checks, ""
        if sym_min(a, b).signed != expected_min:
            return f"sym-min mismatch at ({a}, {b})", checks, ""
    return None, checks, ""


@_law("symmax-commutative", description="a sym-max b = b sym-max a")
def _symmax_commutative(config: VerifyConfig):
    scale = levels_scale(config.levels)
    elements = list(scale.signed_values())
    checks = 0
    for a, b in itertools.product(elements, repeat=2):
        checks += 1
        if sym_max(a, b) != sym_max(b, a):
            return f"sym-max not commutative at ({a}, {b})", checks, ""
    return None, checks, ""


@_law("symmin-commutative", description="a sym-min b = b sym-min a")
def _symmin_commutative(config: VerifyConfig):
    scale = levels_scale(config.levels)
    elements = list(scale.signed_values())
    checks = 0
    for a, b in itertools.product(elements, repeat=2):
        checks += 1
        if sym_min(a, b) != sym_min(b, a):
            return f"sym-min not commutative at ({a}, {b})", checks, ""
    return None, checks, ""


@_law(
    "zero-neutral-absorbing-unique",
    description=(
        "0 is the unique neutral element of sym-max and the unique "
        "absorbing element of sym-min, over all candidates"
    ),
)
def _zero_neutral_absorbing(config: VerifyConfig):
    scale = levels_scale(config.levels)
    elements = list(scale.signed_values())
    zero = scale.zero
    checks = 0
    for candidate in elements:
        neutral = True
        absorbing = True
        for a in elements:
            checks += 1
            if sym_max(a, candidate) != a:
                neutral = False
            if sym_min(a, candidate) != candidate:
                absorbing = False
        if (candidate == zero) != neutral:
            return f"neutral-element test wrong at {candidate}", checks, ""
        if (candidate == zero) != absorbing:
            return f"absorbing-element test wrong at {candidate}", checks, ""
    return None, checks, ""


@_law(
    "one-neutral-absorbing-unique",
    description=(
        "1 is the unique neutral element of sym-min over all of L, and the "
        "unique element absorbing the whole nonnegative side under sym-max"
    ),
)
def _one_neutral_absorbing(config: VerifyConfig):
    scale = levels_scale(config.levels)
    elements = list(scale.signed_values())
    nonnegative = [a for a in elements if a.sign >= 0]
    one = scale.one
    checks = 0
    for candidate in elements:
        neutral = all(sym_min(a, candidate) == a for a in elements)
        absorbing = all(sym_max(a, candidate) == candidate for a in nonnegative)
        checks += len(elements) + len(nonnegative)
        if (candidate == one) != neutral:
            return f"neutral-element test wrong at {candidate}", checks, ""
        if (candidate == one) != absorbing:
            return f"absorbing-element test wrong at {candidate}", checks, ""
    return None, checks, ""


@_law("opposites-cancel", description="a sym-max (-a) = 0 for every a")
def _opposites_cancel(config: VerifyConfig):
    scale = levels_scale(config.levels)
    checks = 0
    for a in scale.signed_values():
        checks += 1
        if sym_max(a, -a) != scale.zero:
            return f"{a} sym-max -{a} != 0", checks, ""
    return None, checks, ""


@_law(
    "reflection-distributes",
    description="-(a sym-max b) = (-a) sym-max (-b)",
)
def _reflection_distributes(config: VerifyConfig):
    scale = levels_scale(config.levels)
    elements = list(scale.signed_values())
    checks = 0
    for a, b in itertools.product(elements, repeat=2):
        checks += 1
        if -sym_max(a, b) != sym_max(-a, -b):
            return f"reflection fails at ({a}, {b})", checks, ""
    return None, checks, ""


@_law(
    "symmax-conditional-associative",
    description=(
        "both parenthesizations of a sym-max b sym-max c agree whenever "
        "max != -min over the triple"
    ),
)
def _symmax_conditional_associative(config: VerifyConfig):
    scale = levels_scale(config.levels)
    elements = list(scale.signed_values())
    checks = 0
    for a, b, c in itertools.product(elements, repeat=3):
        if not is_fold_unambiguous((a, b, c)):
            continue
        checks += 1
        if sym_max(sym_max(a, b), c) != sym_max(a, sym_max(b, c)):
            return f"associativity fails at ({a}, {b}, {c})", checks, ""
    return None, checks, ""


@_law(
    "symmax-nonassociative-witness",
    description=(
        "some triple with max = -min has parenthesizations that disagree"
    ),
)
def _symmax_nonassociative_witness(config: VerifyConfig):
    scale = levels_scale(config.levels)
    elements = list(scale.signed_values())
    checks = 0
    for a, b, c in itertools.product(elements, repeat=3):
        if is_fold_unambiguous((a, b, c)):
            continue
        checks += 1
        left = sym_max(sym_max(a, b), c)
        right = sym_max(a, sym_max(b, c))
        if left != right:
            return (
                None,
                checks,
                f"witness: ({a}, {b}, {c}) gives {left} vs {right}",
            )
    return "no non-associative triple found", checks, ""


@_law("symmin-associative", description="sym-min is associative on all of L")
def _symmin_associative(config: VerifyConfig):
    scale = levels_scale(config.levels)
    elements = list(scale.signed_values())
    checks = 0
    for a, b, c in itertools.product(elements, repeat=3):
        checks += 1
        if sym_min(sym_min(a, b), c) != sym_min(a, sym_min(b, c)):
            return f"associativity fails at ({a}, {b}, {c})", checks, ""
    return None, checks, ""


@_law(
    "symmin-distributive-same-sign",
    description=(
        "sym-min distributes over sym-max on triples drawn from one side "
        "of the scale"
    ),
)
def _symmin_distributive(config: VerifyConfig):
    scale = levels_scale(config.levels)
    elements = list(scale.signed_values())
    sides = (
        [a for a in elements if a.sign >= 0],
        [a for a in elements if a.sign <= 0],
    )
    checks = 0
    for side in sides:
        for a, b, c in itertools.product(side, repeat=3):
            checks += 1
            left = sym_min(a, sym_max(b, c))
            right = sym_max(sym_min(a, b), sym_min(a, c))
            if left != right:
                return f"distributivity fails at ({a}, {b}, {c})", checks, ""
    return None, checks, ""


# -- rule laws -------------------------------------------------------------


def _multisets(
    elements: Sequence[ScaleValue], max_size: int
) -> Iterator[tuple[ScaleValue, ...]]:
    for size in range(max_size + 1):
        yield from itertools.combinations_with_replacement(elements, size)


@_law(
    "rules-agree-when-unambiguous",
    description=(
        "floor, ceil and angle all equal the plain fold on unambiguous "
        "multisets, in any order"
    ),
)
def _rules_agree(config: VerifyConfig):
    scale = levels_scale(config.levels)
    elements = list(scale.signed_values())
    rng = _rng(config, "rules-agree")
    checks = 0
    for values in _multisets(elements, 4):
        if not is_fold_unambiguous(values):
            continue
        if values:
            plain = reduce(sym_max, values)
        else:
            plain = scale.zero
        shuffled = list(values)
        rng.shuffle(shuffled)
        for rule in Rule:
            checks += 1
            if fold_sym_max(values, rule, scale=scale) != plain:
                return f"{rule} != plain fold on {_show(values)}", checks, ""
            if fold_sym_max(shuffled, rule, scale=scale) != plain:
                return f"{rule} order-dependent on {_show(values)}", checks, ""
    return None, checks, ""


@_law(
    "fold-reflection-symmetry",
    description="folding the reflected multiset reflects the fold, all rules",
)
def _fold_reflection(config: VerifyConfig):
    scale = levels_scale(config.levels)
    elements = list(scale.signed_values())
    checks = 0
    for values in _multisets(elements, 4):
        reflected = tuple(-a for a in values)
        for rule in Rule:
            checks += 1
            left = fold_sym_max(reflected, rule, scale=scale)
            right = -fold_sym_max(values, rule, scale=scale)
            if left != right:
                return f"{rule} breaks symmetry on {_show(values)}", checks, ""
    return None, checks, ""


@_law(
    "fold-order-invariance",
    description="every rule gives the same fold on any reordering",
)
def _fold_order_invariance(config: VerifyConfig):
    scale = levels_scale(config.levels)
    elements = list(scale.signed_values())
    rng = _rng(config, "fold-order")
    checks = 0
    for values in _multisets(elements, 4):
        for rule in Rule:
            reference = fold_sym_max(values, rule, scale=scale)
            for _ in range(2):
                shuffled = list(values)
                rng.shuffle(shuffled)
                checks += 1
                if fold_sym_max(shuffled, rule, scale=scale) != reference:
                    return f"{rule} order-dependent on {_show(values)}", checks, ""
    return None, checks, ""


@_law(
    "floor-ceil-monotone",
    description=(
        "raising any entry of a sorted multiset cannot lower the floor or "
        "ceil fold"
    ),
)
def _floor_ceil_monotone(config: VerifyConfig):
    scale = levels_scale(config.levels)
    k = scale.levels
    checks = 0
    if 2 * k + 1 <= 9:
        pairs = _dominated_pairs_exhaustive(scale, max_size=4)
    else:
        pairs = _dominated_pairs_sampled(
            scale, _rng(config, "floor-ceil"), config.samples, max_size=4
        )
    for low, high in pairs:
        for rule in (Rule.FLOOR, Rule.CEIL):
            checks += 1
            if fold_sym_max(low, rule, scale=scale) > fold_sym_max(
                high, rule, scale=scale
            ):
                return (
                    f"{rule} decreases from {_show(low)} to {_show(high)}",
                    checks,
                    "",
                )
    return None, checks, ""


def _dominated_pairs_exhaustive(scale: SymmetricScale, max_size: int):
    k = scale.levels
    for size in range(1, max_size + 1):
        for low in itertools.combinations_with_replacement(
            scale.signed_values(), size
        ):
            # sorted tuples dominating `low` entrywise
            def grow(idx: int, floor: int, partial: list[ScaleValue]):
                if idx == size:
                    yield tuple(partial)
                    return
                start = max(low[idx].signed, floor)
                for grade in range(start, k + 1):
                    partial.append(scale.value(grade))
                    yield from grow(idx + 1, grade, partial)
                    partial.pop()

            for high in grow(0, -k, []):
                yield low, high


def _dominated_pairs_sampled(
    scale: SymmetricScale, rng: Random, count: int, max_size: int
):
    k = scale.levels
    for _ in range(count):
        size = rng.randint(1, max_size)
        low = sorted(rng.randint(-k, k) for _ in range(size))
        high = sorted(rng.randint(g, k) for g in low)
        yield (
            tuple(scale.value(g) for g in low),
            tuple(scale.value(g) for g in high),
        )


@_law(
    "angle-monotonic",
    kind="violates",
    description=(
        "the angle rule is not monotone; the pinned five-element pair "
        "exhibits a strict decrease"
    ),
)
def _angle_monotonic(config: VerifyConfig):
    scale = levels_scale(5)
    low = tuple(scale.value(g) for g in (-5, -5, -1, 2, 5))
    high = tuple(scale.value(g) for g in (-5, -4, -1, 2, 5))
    checks = 1
    assert all(a <= b for a, b in zip(low, high))
    left = fold_sym_max(low, Rule.ANGLE)
    right = fold_sym_max(high, Rule.ANGLE)
    if left > right:
        return (
            f"angle fold drops from {left} to {right} although "
            f"{_show(low)} <= {_show(high)} entrywise",
            checks,
            "",
        )
    return None, checks, ""


@_law(
    "fold-identities",
    description="singleton folds are the element; empty and all-zero folds are 0",
)
def _fold_identities(config: VerifyConfig):
    scale = levels_scale(config.levels)
    checks = 0
    for rule in Rule:
        checks += 1
        if fold_sym_max((), rule, scale=scale) != scale.zero:
            return f"empty {rule} fold is not 0", checks, ""
        for count in (1, 2, 5):
            checks += 1
            zeros = (scale.zero,) * count
            if fold_sym_max(zeros, rule, scale=scale) != scale.zero:
                return f"all-zero {rule} fold is not 0", checks, ""
        for a in scale.signed_values():
            checks += 1
            if fold_sym_max((a,), rule, scale=scale) != a:
                return f"singleton {rule} fold breaks at {a}", checks, ""
    return None, checks, ""


# -- capacity laws ---------------------------------------------------------


@_law(
    "conjugate-involution",
    description="conjugating twice returns the original capacity",
)
def _conjugate_involution(config: VerifyConfig):
    rng = _rng(config, "conjugate-involution")
    checks = 0
    for v in _capacities(config, rng):
        checks += 1
        if conjugate(conjugate(v)).table != v.table:
            return f"involution fails on {_table(v)}", checks, ""
    return None, checks, ""


def _distributions(
    config: VerifyConfig, rng: Random
) -> Iterator[tuple[ScaleValue, ...]]:
    scale = levels_scale(config.levels)
    k = scale.levels
    if config.exhaustive:
        for grades in itertools.product(range(k + 1), repeat=config.n):
            if max(grades) == k:
                yield tuple(scale.value(g) for g in grades)
    else:
        for _ in range(config.samples):
            grades = [rng.randint(0, k) for _ in range(config.n)]
            grades[rng.randrange(config.n)] = k
            yield tuple(scale.value(g) for g in grades)


@_law(
    "possibility-maxitive-necessity-minitive",
    description=(
        "possibility measures join-distribute over unions; their conjugates "
        "meet-distribute over intersections"
    ),
)
def _possibility_maxitive(config: VerifyConfig):
    rng = _rng(config, "possibility-maxitive")
    checks = 0
    for pi in _distributions(config, rng):
        upper = possibility_measure(pi)
        lower = necessity_measure(pi)
        if not is_maxitive(upper):
            return f"possibility not maxitive for pi={_show(pi)}", checks, ""
        for a in subsets(upper.n):
            for b in subsets(upper.n):
                checks += 1
                if lower(a & b) != min(lower(a), lower(b)):
                    return (
                        f"necessity not minitive for pi={_show(pi)}",
                        checks,
                        "",
                    )
    return None, checks, ""


@_law(
    "named-capacities-valid",
    description=(
        "unanimity games (all focal sets) and possibility/necessity "
        "measures satisfy the capacity axioms"
    ),
)
def _named_capacities_valid(config: VerifyConfig):
    scale = levels_scale(config.levels)
    rng = _rng(config, "named-capacities")
    checks = 0
    for b_mask in subsets(config.n):
        checks += 1
        game = unanimity(config.n, b_mask, scale)
        problems = capacity_problems(game.n, game.scale, game.table)
        if problems:
            return f"unanimity on {subset_text(b_mask)}: {problems[0]}", checks, ""
    for pi in _distributions(config, rng):
        for measure in (possibility_measure(pi), necessity_measure(pi)):
            checks += 1
            problems = capacity_problems(measure.n, measure.scale, measure.table)
            if problems:
                return f"pi={_show(pi)}: {problems[0]}", checks, ""
    return None, checks, ""


@_law(
    "k-maxitive-families",
    description=(
        "possibility measures are 1-maxitive; a unanimity game is exactly "
        "|B|-maxitive"
    ),
)
def _k_maxitive_families(config: VerifyConfig):
    scale = levels_scale(config.levels)
    rng = _rng(config, "k-maxitive")
    checks = 0
    for pi in _distributions(config, rng):
        checks += 1
        if not is_k_maxitive(possibility_measure(pi), 1):
            return f"possibility not 1-maxitive for pi={_show(pi)}", checks, ""
    for b_mask in range(1, 1 << config.n):
        size = b_mask.bit_count()
        game = unanimity(config.n, b_mask, scale)
        checks += 1
        if not is_k_maxitive(game, size):
            return f"unanimity on {subset_text(b_mask)} not {size}-maxitive", checks, ""
        if size >= 2 and is_k_maxitive(game, size - 1):
            return (
                f"unanimity on {subset_text(b_mask)} wrongly {size - 1}-maxitive",
                checks,
                "",
            )
    return None, checks, ""


# -- classical transform laws ------------------------------------------------


def _random_rational_table(rng: Random, n: int) -> RealSetFunction:
    from fractions import Fraction

    return RealSetFunction(
        n, tuple(Fraction(rng.randint(-24, 24), 12) for _ in range(1 << n))
    )


@_law(
    "classical-roundtrip",
    description="zeta of the alternating-sum transform is the identity",
)
def _classical_roundtrip(config: VerifyConfig):
    rng = _rng(config, "classical-roundtrip")
    n = min(config.n, 4)
    checks = 0
    for _ in range(config.samples if not config.exhaustive else 200):
        v = _random_rational_table(rng, n)
        checks += 1
        if classical_zeta(classical_mobius(v)).table != v.table:
            return f"roundtrip fails on {v.table}", checks, ""
        if classical_mobius(classical_zeta(v)).table != v.table:
            return f"reverse roundtrip fails on {v.table}", checks, ""
    return None, checks, ""


@_law(
    "classical-unanimity-indicator",
    description=(
        "the classical transform of a unanimity game is the indicator of "
        "its focal set"
    ),
)
def _classical_unanimity(config: VerifyConfig):
    from fractions import Fraction

    checks = 0
    for b_mask in range(1, 1 << config.n):
        table = tuple(
            Fraction(1) if mask and mask & b_mask == b_mask else Fraction(0)
            for mask in subsets(config.n)
        )
        game = RealSetFunction(config.n, table)
        transform = classical_mobius(game)
        checks += 1
        expected = tuple(
            Fraction(1) if mask == b_mask else Fraction(0)
            for mask in subsets(config.n)
        )
        if transform.table != expected:
            return f"indicator fails for B={subset_text(b_mask)}", checks, ""
    return None, checks, ""


# -- ordinal transform laws ----------------------------------------------------


@_law(
    "interval-bounds-are-solutions",
    description="both interval endpoints reproduce the capacity by folding",
)
def _interval_bounds(config: VerifyConfig):
    rng = _rng(config, "interval-bounds")
    checks = 0
    for v in _capacities(config, rng):
        interval = ordinal_mobius_interval(v)
        for member in (interval.lower, interval.upper):
            checks += 1
            if not is_solution(v, member, Rule.FLOOR):
                return f"endpoint not a solution on {_table(v)}", checks, ""
    return None, checks, ""


@lru_cache(maxsize=8)
def _zeta_buckets(
    n: int, levels: int
) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    """Group every nonnegative grade table m by its accumulated image
    A -> max of m over subsets of A.  The bucket of a capacity is then the
    exact set of its nonnegative transforms."""
    size = 1 << n
    order = sorted(range(size), key=lambda m: m.bit_count())
    cover_lists = [list(covers_of(mask)) for mask in range(size)]
    buckets: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    image = [0] * size
    for m in itertools.product(range(levels + 1), repeat=size):
        for mask in order:
            best = m[mask]
            for c in cover_lists[mask]:
                if image[c] > best:
                    best = image[c]
            image[mask] = best
        buckets.setdefault(tuple(image), []).append(m)
    return buckets


@_law(
    "interval-is-solution-set",
    description=(
        "the nonnegative solutions of the folding equation are exactly the "
        "grade tables between the interval bounds (independent brute force)"
    ),
)
def _interval_is_solution_set(config: VerifyConfig):
    scale = levels_scale(config.levels)
    rng = _rng(config, "interval-solution-set")
    size = 1 << config.n
    if (config.levels + 1) ** size > 2_000_000:
        return (
            None,
            0,
            "family too large for brute force; nothing checked",
        )
    buckets = _zeta_buckets(config.n, config.levels)
    checks = 0
    seen: set[tuple[int, ...]] = set()
    for v in _capacities(config, rng):
        key = tuple(entry.signed for entry in v.table)
        if key in seen:
            continue
        seen.add(key)
        interval = ordinal_mobius_interval(v)
        lower = tuple(entry.signed for entry in interval.lower.table)
        upper = tuple(entry.signed for entry in interval.upper.table)
        solutions = buckets.get(key, [])
        volume = 1
        for lo, hi in zip(lower, upper):
            volume *= hi - lo + 1
        checks += 1
        if len(solutions) != volume:
            return (
                f"{len(solutions)} solutions but box volume {volume} "
                f"on {_table(v)}",
                checks,
                "",
            )
        for m in solutions:
            checks += 1
            if not all(lo <= g <= hi for g, lo, hi in zip(m, lower, upper)):
                return f"solution {m} escapes the box on {_table(v)}", checks, ""
        checks += 1
        if not is_solution(v, interval.lower, Rule.FLOOR):
            return f"library rejects the lower bound on {_table(v)}", checks, ""
    return None, checks, f"{len(seen)} distinct capacities"


@_law(
    "canonical-equals-lower",
    description=(
        "the canonical transform of a capacity equals the interval lower "
        "bound, under both admissible rules"
    ),
)
def _canonical_equals_lower(config: VerifyConfig):
    rng = _rng(config, "canonical-lower")
    checks = 0
    for v in _capacities(config, rng):
        lower = ordinal_mobius_interval(v).lower
        for rule in (Rule.FLOOR, Rule.ANGLE):
            checks += 1
            if canonical_ordinal_mobius(v, rule).table != lower.table:
                return f"{rule} canonical != lower on {_table(v)}", checks, ""
    return None, checks, ""


@_law(
    "even-odd-equals-lower",
    description=(
        "the alternating-parity transform equals the interval lower bound "
        "on capacities"
    ),
)
def _even_odd_equals_lower(config: VerifyConfig):
    rng = _rng(config, "even-odd")
    checks = 0
    for v in _capacities(config, rng):
        checks += 1
        if even_odd_mobius(v).table != ordinal_mobius_interval(v).lower.table:
            return f"parity form != lower on {_table(v)}", checks, ""
    return None, checks, ""


@_law(
    "reconstruction-exact",
    description=(
        "weighting unanimity games by any interval member rebuilds the "
        "capacity exactly"
    ),
)
def _reconstruction_exact(config: VerifyConfig):
    rng = _rng(config, "reconstruction")
    stream, note = _capped_capacities(config, rng)
    checks = 0
    for v in stream:
        interval = ordinal_mobius_interval(v)
        for member in _members(config, interval, rng):
            for mask in subsets(v.n):
                checks += 1
                if reconstruct(member, mask) != v(mask):
                    return (
                        f"reconstruction fails at {subset_text(mask)} "
                        f"on {_table(v)}",
                        checks,
                        "",
                    )
    return None, checks, note


@_law(
    "conjugate-reconstruction",
    description=(
        "negating the join of a conjugate transform over the subsets "
        "disjoint from A rebuilds v(A)"
    ),
)
def _conjugate_reconstruction(config: VerifyConfig):
    rng = _rng(config, "conjugate-reconstruction")
    stream, note = _capped_capacities(config, rng)
    checks = 0
    for v in stream:
        interval = ordinal_mobius_interval(conjugate(v))
        for member in _members(config, interval, rng):
            for mask in subsets(v.n):
                checks += 1
                if reconstruct_from_conjugate(member, mask) != v(mask):
                    return (
                        f"conjugate reconstruction fails at "
                        f"{subset_text(mask)} on {_table(v)}",
                        checks,
                        "",
                    )
    return None, checks, note


@_law(
    "mobius-not-linear-witness",
    description=(
        "the transform does not commute with pointwise sym-max: pinned "
        "two-player witness"
    ),
)
def _mobius_not_linear(config: VerifyConfig):
    scale = levels_scale(config.levels)
    g1 = unanimity(2, 0b11, scale)
    g2 = Capacity(
        2, scale, (scale.zero, scale.one, scale.one, scale.one)
    )
    joined = g1.pointwise_sym_max(g2)
    checks = 1
    if joined.table != g2.table:
        return "expected g1 join g2 = g2", checks, ""
    lower1 = ordinal_mobius_interval(g1).lower
    lower2 = ordinal_mobius_interval(g2).lower
    joined_lower = ordinal_mobius_interval(
        Capacity(2, scale, joined.table)
    ).lower
    mixed = lower1.pointwise_sym_max(lower2)
    checks += 1
    if mixed.table == joined_lower.table:
        return "transform unexpectedly linear on the witness", checks, ""
    return None, checks, "non-linearity exhibited on the two-player witness"


@_law(
    "possibility-mobius-singletons",
    description=(
        "the closed-form transform of a possibility measure sits on "
        "singletons, equals the interval lower bound, and solves the fold "
        "equation"
    ),
)
def _possibility_mobius(config: VerifyConfig):
    rng = _rng(config, "possibility-mobius")
    checks = 0
    for pi in _distributions(config, rng):
        measure = possibility_measure(pi)
        closed = mobius_possibility(pi)
        checks += 1
        if closed.table != ordinal_mobius_interval(measure).lower.table:
            return f"closed form != lower for pi={_show(pi)}", checks, ""
        if not is_solution(measure, closed, Rule.FLOOR):
            return f"closed form not a solution for pi={_show(pi)}", checks, ""
        for mask in subsets(measure.n):
            if mask.bit_count() != 1 and closed(mask).sign != 0:
                return f"support off singletons for pi={_show(pi)}", checks, ""
    return None, checks, ""


@_law(
    "necessity-mobius-tails",
    description=(
        "the closed-form transform of a necessity measure sits on a nested "
        "chain of tails, equals the interval lower bound, and solves the "
        "fold equation"
    ),
)
def _necessity_mobius(config: VerifyConfig):
    rng = _rng(config, "necessity-mobius")
    checks = 0
    for pi in _distributions(config, rng):
        measure = necessity_measure(pi)
        closed = mobius_necessity(pi)
        checks += 1
        if closed.table != ordinal_mobius_interval(measure).lower.table:
            return f"closed form != lower for pi={_show(pi)}", checks, ""
        if not is_solution(measure, closed, Rule.FLOOR):
            return f"closed form not a solution for pi={_show(pi)}", checks, ""
        support = [
            mask for mask in subsets(measure.n) if closed(mask).sign != 0
        ]
        for a, b in itertools.combinations(support, 2):
            if a & b != a and a & b != b:
                return f"support not a chain for pi={_show(pi)}", checks, ""
    return None, checks, ""


# -- integral laws -------------------------------------------------------------


@_law(
    "choquet-forms-agree",
    description=(
        "transform form = layer form for the plain integral; transform "
        "form = conjugate split on signed profiles; symmetric transform "
        "form = split form = one-pass form"
    ),
)
def _choquet_forms(config: VerifyConfig):
    from fractions import Fraction

    rng = _rng(config, "choquet-forms")
    n = min(config.n, 4)
    count = config.samples if not config.exhaustive else 200
    checks = 0
    for _ in range(count):
        v = _random_rational_capacity(rng, n)
        m = classical_mobius(v)
        signed = [Fraction(rng.randint(-12, 12), 12) for _ in range(n)]
        nonneg = [abs(x) for x in signed]
        checks += 1
        if choquet_mobius(m, nonneg) != choquet(v, nonneg):
            return f"transform != layer form on {v.table}, f={nonneg}", checks, ""
        if choquet_mobius(m, signed) != choquet_asymmetric(v, signed):
            return f"transform != asymmetric on {v.table}, f={signed}", checks, ""
        symmetric = choquet_symmetric(v, signed)
        if sipos_mobius(m, signed) != symmetric:
            return f"transform != split form on {v.table}, f={signed}", checks, ""
        if choquet_symmetric_explicit(v, signed) != symmetric:
            return f"one-pass != split form on {v.table}, f={signed}", checks, ""
    return None, checks, ""


def _random_rational_capacity(rng: Random, n: int) -> RealSetFunction:
    from fractions import Fraction

    size = 1 << n
    grades = [0] * size
    for mask in range(1, size):
        grades[mask] = rng.randint(0, 12)
    for mask in sorted(range(size), key=lambda m: m.bit_count()):
        for c in covers_of(mask):
            if grades[c] > grades[mask]:
                grades[mask] = grades[c]
    grades[size - 1] = 12
    return RealSetFunction(n, tuple(Fraction(g, 12) for g in grades))


@_law(
    "choquet-conjugation-symmetry",
    description=(
        "reflecting the profile negates the asymmetric integral against the "
        "conjugate and negates the symmetric integral in place"
    ),
)
def _choquet_conjugation(config: VerifyConfig):
    from fractions import Fraction

    rng = _rng(config, "choquet-conjugation")
    n = min(config.n, 4)
    count = config.samples if not config.exhaustive else 200
    checks = 0
    for _ in range(count):
        v = _random_rational_capacity(rng, n)
        f = [Fraction(rng.randint(-12, 12), 12) for _ in range(n)]
        neg = [-x for x in f]
        checks += 1
        if choquet_asymmetric(v, neg) != -choquet_asymmetric(real_conjugate(v), f):
            return f"conjugation fails on {v.table}, f={f}", checks, ""
        if choquet_symmetric(v, neg) != -choquet_symmetric(v, f):
            return f"symmetry fails on {v.table}, f={f}", checks, ""
    return None, checks, ""


@_law(
    "sugeno-mobius-representative-free",
    description=(
        "the transform form of the plain integral is the same for every "
        "interval member and equals the rank form"
    ),
)
def _sugeno_representative_free(config: VerifyConfig):
    rng = _rng(config, "sugeno-representative")
    scale = levels_scale(config.levels)
    checks = 0
    for v, f in _instances(config, rng, signed=False):
        reference = sugeno(v, f)
        interval = ordinal_mobius_interval(v)
        for member in _members(config, interval, rng):
            checks += 1
            if sugeno_mobius(member, f) != reference:
                return (
                    f"transform form differs on {_table(v)}, f={_show(f.scores)}",
                    checks,
                    "",
                )
    return None, checks, ""


@_law(
    "symmetric-sugeno-forms-agree",
    description=(
        "split definition = one-pass form = three-block transform form, "
        "for every interval member"
    ),
)
def _symmetric_forms_agree(config: VerifyConfig):
    rng = _rng(config, "symmetric-forms")
    checks = 0
    for v, f in _instances(config, rng, signed=True):
        reference = sugeno_symmetric(v, f)
        checks += 1
        if sugeno_symmetric_explicit(v, f) != reference:
            return (
                f"one-pass form differs on {_table(v)}, f={_show(f.scores)}",
                checks,
                "",
            )
        interval = ordinal_mobius_interval(v)
        for member in _members(config, interval, rng):
            checks += 1
            if sugeno_symmetric_mobius(member, f) != reference:
                return (
                    f"three-block form differs on {_table(v)}, "
                    f"f={_show(f.scores)}",
                    checks,
                    "",
                )
    return None, checks, ""


@_law(
    "mixed-block-vanishes",
    description=(
        "the cross-sign block of the three-block transform form is "
        "identically zero"
    ),
)
def _mixed_block_vanishes(config: VerifyConfig):
    rng = _rng(config, "mixed-block")
    checks = 0
    for v, f in _instances(config, rng, signed=True):
        member = ordinal_mobius_interval(v).upper
        checks += 1
        if symmetric_mobius_blocks(member, f)[2].sign != 0:
            return f"mixed block nonzero on {_table(v)}, f={_show(f.scores)}", checks, ""
    return None, checks, ""


@_law(
    "variants-collapse-on-nonneg",
    description=(
        "on nonnegative profiles the symmetric integral and all three "
        "variants reduce to the plain integral"
    ),
)
def _variants_collapse(config: VerifyConfig):
    rng = _rng(config, "variants-collapse")
    checks = 0
    for v, f in _instances(config, rng, signed=False):
        reference = sugeno(v, f)
        lower = ordinal_mobius_interval(v).lower
        checks += 1
        if sugeno_symmetric(v, f) != reference:
            return f"split form differs on {_table(v)}, f={_show(f.scores)}", checks, ""
        if sugeno_variant1(lower, f) != reference:
            return f"variant 1 differs on {_table(v)}, f={_show(f.scores)}", checks, ""
        if sugeno_variant2(v, f) != reference:
            return f"variant 2 differs on {_table(v)}, f={_show(f.scores)}", checks, ""
        if sugeno_variant3(v, f) != reference:
            return f"variant 3 differs on {_table(v)}, f={_show(f.scores)}", checks, ""
    return None, checks, ""


@_law(
    "integral-symmetry",
    description=(
        "reflecting the profile negates the symmetric integral and each of "
        "the three variants"
    ),
)
def _integral_symmetry(config: VerifyConfig):
    rng = _rng(config, "integral-symmetry")
    checks = 0
    for v, f in _instances(config, rng, signed=True):
        neg = -f
        lower = ordinal_mobius_interval(v).lower
        checks += 1
        if sugeno_symmetric(v, neg) != -sugeno_symmetric(v, f):
            return f"split form asymmetric on {_table(v)}, f={_show(f.scores)}", checks, ""
        if sugeno_variant1(lower, neg) != -sugeno_variant1(lower, f):
            return f"variant 1 asymmetric on {_table(v)}, f={_show(f.scores)}", checks, ""
        if sugeno_variant2(v, neg) != -sugeno_variant2(v, f):
            return f"variant 2 asymmetric on {_table(v)}, f={_show(f.scores)}", checks, ""
        if sugeno_variant3(v, neg) != -sugeno_variant3(v, f):
            return f"variant 3 asymmetric on {_table(v)}, f={_show(f.scores)}", checks, ""
    return None, checks, ""


def _profile_bumps(f: Profile) -> Iterator[Profile]:
    """Profiles one grade above f in one coordinate."""
    k = f.scale.levels
    for i, x in enumerate(f.scores):
        if x.signed < k:
            scores = list(f.scores)
            scores[i] = f.scale.value(x.signed + 1)
            yield Profile(f.scale, tuple(scores))


@_law(
    "sugeno-symmetric-monotone",
    description=(
        "the symmetric integral and variant 3 never decrease when one "
        "score rises one grade"
    ),
)
def _sugeno_monotone(config: VerifyConfig):
    rng = _rng(config, "sugeno-monotone")
    checks = 0
    for v, f in _instances(config, rng, signed=True):
        base_split = sugeno_symmetric(v, f)
        base_v3 = sugeno_variant3(v, f)
        for bumped in _profile_bumps(f):
            checks += 1
            if sugeno_symmetric(v, bumped) < base_split:
                return (
                    f"split form decreases on {_table(v)}, "
                    f"f={_show(f.scores)} -> {_show(bumped.scores)}",
                    checks,
                    "",
                )
            if sugeno_variant3(v, bumped) < base_v3:
                return (
                    f"variant 3 decreases on {_table(v)}, "
                    f"f={_show(f.scores)} -> {_show(bumped.scores)}",
                    checks,
                    "",
                )
    return None, checks, ""


@_law(
    "variant2-not-monotone",
    kind="violates",
    description=(
        "variant 2 is not monotone: pinned three-player witness where "
        "raising one score strictly lowers the value"
    ),
)
def _variant2_not_monotone(config: VerifyConfig):
    scale = levels_scale(3)
    one = scale.one
    v = Capacity(
        3, scale, tuple(scale.zero if m == 0 else one for m in subsets(3))
    )
    low = Profile(scale, tuple(scale.value(g) for g in (-3, 2, 3)))
    high = Profile(scale, tuple(scale.value(g) for g in (-3, 3, 3)))
    checks = 1
    assert all(a <= b for a, b in zip(low.scores, high.scores))
    before = sugeno_variant2(v, low)
    after = sugeno_variant2(v, high)
    if before > after:
        return (
            f"variant 2 drops from {before} to {after} when "
            f"{_show(low.scores)} rises to {_show(high.scores)}",
            checks,
            "",
        )
    return None, checks, ""


def _rank_orders(f: Profile) -> Iterator[list[int]]:
    """Every ranking that sorts the scores ascending: tied blocks may
    appear in any internal order."""
    groups: dict = {}
    for i, x in enumerate(f.scores):
        groups.setdefault(x.signed, []).append(i)
    blocks = [groups[key] for key in sorted(groups)]
    for combo in itertools.product(
        *(itertools.permutations(block) for block in blocks)
    ):
        yield [i for block in combo for i in block]


def _rank_terms(v: Capacity, f: Profile, order: Sequence[int]) -> list[ScaleValue]:
    """Explicit-form terms under one specific ranking of the players."""
    p = sum(1 for x in f.scores if x.sign < 0)
    terms = []
    mask = 0
    for i in order[:p]:
        mask |= 1 << i
        terms.append(sym_min(f.scores[i], v(mask)))
    upper = full_set(len(order)) ^ mask
    for i in order[p:]:
        terms.append(sym_min(f.scores[i], v(upper)))
        upper ^= 1 << i
    return terms


@_law(
    "floor-tie-order-invariant",
    description=(
        "the floor fold of the explicit-form terms equals the split "
        "symmetric integral under every ranking of tied scores"
    ),
)
def _floor_tie_order_invariant(config: VerifyConfig):
    rng = _rng(config, "floor-tie-order")
    checks = 0
    for v, f in _instances(config, rng, signed=True):
        reference = sugeno_symmetric(v, f)
        for order in itertools.islice(_rank_orders(f), 120):
            checks += 1
            folded = fold_sym_max(
                _rank_terms(v, f, order), Rule.FLOOR, scale=v.scale
            )
            if folded != reference:
                return (
                    f"ranking {[i + 1 for i in order]} gives {folded} "
                    f"instead of {reference} on {_table(v)}, "
                    f"f={_show(f.scores)}",
                    checks,
                    "",
                )
    return None, checks, ""


@_law(
    "rank-fold-tie-sensitive",
    kind="violates",
    description=(
        "the angle and ceil folds of the explicit-form terms change value "
        "with the ranking of tied scores: pinned two-grade witness (the "
        "floor fold is immune, and it forces the canonical ranking used "
        "by the variants)"
    ),
)
def _rank_fold_tie_sensitive(config: VerifyConfig):
    scale = levels_scale(2)
    v = Capacity(
        3, scale, tuple(scale.value(g) for g in (0, 1, 0, 2, 2, 2, 2, 2))
    )
    f = Profile(scale, tuple(scale.value(g) for g in (-2, -2, 2)))
    checks = 0
    angles = set()
    ceils = set()
    for order in _rank_orders(f):
        checks += 1
        terms = _rank_terms(v, f, order)
        angles.add(fold_sym_max(terms, Rule.ANGLE, scale=scale))
        ceils.add(fold_sym_max(terms, Rule.CEIL, scale=scale))
    if len(angles) > 1 and len(ceils) > 1:
        shown_angle = ", ".join(sorted(str(x) for x in angles))
        shown_ceil = ", ".join(sorted(str(x) for x in ceils))
        return (
            f"rankings of f={_show(f.scores)} on {_table(v)} give angle "
            f"values {{{shown_angle}}} and ceil values {{{shown_ceil}}}",
            checks,
            "",
        )
    return None, checks, ""


@_law(
    "rank-ceil-not-monotone",
    kind="violates",
    description=(
        "folding the explicit-form terms under the ceil rule is not "
        "monotone even with all scores distinct: pinned three-player "
        "witness (this is why variant 3 folds threshold terms instead)"
    ),
)
def _rank_ceil_not_monotone(config: VerifyConfig):
    scale = levels_scale(3)
    v = Capacity(
        3, scale, tuple(scale.value(g) for g in (0, 0, 1, 3, 1, 1, 1, 3))
    )
    low = Profile(scale, tuple(scale.value(g) for g in (-3, 1, -2)))
    high = Profile(scale, tuple(scale.value(g) for g in (-1, 1, -2)))
    assert all(a <= b for a, b in zip(low.scores, high.scores))
    checks = 1
    before = fold_sym_max(ranked_terms(v, low)[2], Rule.CEIL, scale=scale)
    after = fold_sym_max(ranked_terms(v, high)[2], Rule.CEIL, scale=scale)
    if before > after:
        return (
            f"the ceil fold drops from {before} to {after} when "
            f"{_show(low.scores)} rises to {_show(high.scores)}",
            checks,
            "",
        )
    return None, checks, ""


@_law(
    "variant1-representative-sensitivity",
    kind="report",
    description=(
        "whether variant 1 depends on the interval representative: "
        "deterministic search over two-player (exhaustive) and sampled "
        "three-player instances"
    ),
)
def _variant1_sensitivity(config: VerifyConfig):
    scale = levels_scale(config.levels)
    rng = _rng(config, "variant1-sensitivity")
    checks = 0

    def probe(v: Capacity, f: Profile) -> str | None:
        interval = ordinal_mobius_interval(v)
        low = sugeno_variant1(interval.lower, f)
        high = sugeno_variant1(interval.upper, f)
        if low != high:
            return (
                f"representative-dependent: capacity {_table(v)}, "
                f"f={_show(f.scores)}: lower gives {low}, upper gives {high}"
            )
        return None

    for v in iter_capacities(2, scale):
        for f in iter_profiles(2, scale, signed=True):
            checks += 1
            found = probe(v, f)
            if found:
                return found, checks, ""
    for _ in range(max(config.samples, 200)):
        v = sample_capacity(rng, 3, scale)
        f = sample_profile(rng, 3, scale, signed=True)
        checks += 1
        found = probe(v, f)
        if found:
            return found, checks, ""
    return (
        "no representative dependence found on the searched families",
        checks,
        "",
    )


@_law(
    "worked-example-goldens",
    description=(
        "the documented three-player instance reproduces all its published "
        "values exactly"
    ),
)
def _worked_example_goldens(config: VerifyConfig):
    from fractions import Fraction

    v, f = worked_example()
    scale = v.scale
    checks = 0
    expectations = []
    interval = ordinal_mobius_interval(v)
    expectations.append(
        ("plain integral of gains", sugeno(v, f.positive_part()), Fraction(3, 10))
    )
    expectations.append(
        ("plain integral of losses", sugeno(v, f.negative_part()), Fraction(3, 10))
    )
    expectations.append(("symmetric integral", sugeno_symmetric(v, f), Fraction(0)))
    expectations.append(
        ("variant 1", sugeno_variant1(interval.lower, f), Fraction(1, 4))
    )
    expectations.append(("variant 2", sugeno_variant2(v, f), Fraction(1, 5)))
    # the threshold terms are (-0.3, 0.3, 0.3); ceil cancels one pair
    expectations.append(("variant 3", sugeno_variant3(v, f), Fraction(3, 10)))
    for name, got, expected in expectations:
        checks += 1
        if got.signed != expected:
            return f"{name}: got {got}, expected {expected}", checks, ""
    checks += 1
    thresholds = tuple(t.signed for t in variant3_terms(v, f))
    if thresholds != (Fraction(-3, 10), Fraction(3, 10), Fraction(3, 10)):
        return (
            f"threshold terms {_show(variant3_terms(v, f))}",
            checks,
            "",
        )
    tie = 0b101  # {1,3}
    for mask in subsets(3):
        checks += 1
        lo, hi = interval.lower(mask), interval.upper(mask)
        if mask == tie:
            if lo != scale.zero or hi.signed != Fraction(3, 10):
                return f"interval at {subset_text(mask)} is [{lo}, {hi}]", checks, ""
        elif lo != hi:
            return f"interval not degenerate at {subset_text(mask)}", checks, ""
    return None, checks, ""


# -- small formatting helpers ---------------------------------------------------


def _show(values: Iterable[ScaleValue]) -> str:
    return "(" + ", ".join(str(a) for a in values) + ")"


def _table(v: SetFunction) -> str:
    entries = ", ".join(
        f"{subset_text(mask)}: {v(mask)}" for mask in subsets(v.n)
    )
    return "{" + entries + "}"
