"""Symmetric linearly ordered scales and the signed max/min algebra.

A scale here is a finite or rational positive chain mirrored around a single
zero: every positive element ``a`` has an opposite ``-a``, and ``-0 == 0``.
Values are totally ordered, carry exact magnitudes (ints for discrete level
scales, ``Fraction`` for the rational unit scale), and support the symmetric
maximum and minimum, the signed extensions of lattice max/min.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Union

Number = Union[int, Fraction]

LEVELS = "levels"
UNIT = "unit"


class ScaleError(ValueError):
    """Raised for off-scale values, bad labels, or mixed-scale operations."""


class OffScaleError(ScaleError):
    """A syntactically fine number that lies outside its scale's range."""


@dataclass(frozen=True)
class SymmetricScale:
    """A positive chain plus mirrored negative copies of its elements.

    Two kinds exist: ``levels`` (discrete grades 0..K, optionally labelled)
    and ``unit`` (exact rationals in [0, 1]).  Labels are presentation only;
    they do not take part in equality or compatibility.
    """

    kind: str
    levels: int | None = None
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.kind not in (LEVELS, UNIT):
            raise ScaleError(f"unknown scale kind: {self.kind!r}")
        if self.kind == LEVELS:
            if not isinstance(self.levels, int) or self.levels < 1:
                raise ScaleError("levels scale needs a positive grade count")
            if self.labels is not None:
                labels = tuple(self.labels)
                object.__setattr__(self, "labels", labels)
                if len(labels) != self.levels + 1:
                    raise ScaleError(
                        f"expected {self.levels + 1} labels, got {len(labels)}"
                    )
                if len(set(labels)) != len(labels):
                    raise ScaleError("labels must be distinct")
                for text in labels:
                    # a leading minus would collide with negative values
                    if not text or text.startswith("-"):
                        raise ScaleError(f"bad label: {text!r}")
        else:
            if self.levels is not None or self.labels is not None:
                raise ScaleError("unit scale takes no grade count or labels")
        # per-instance value cache; not a field, so invisible to eq/hash
        object.__setattr__(self, "_cache", {})

    # -- canonical elements -------------------------------------------------

    @property
    def zero(self) -> ScaleValue:
        return self.value(0)

    @property
    def one(self) -> ScaleValue:
        """Top of the positive side."""
        return self.value(self.levels if self.kind == LEVELS else Fraction(1))

    @property
    def minus_one(self) -> ScaleValue:
        return self.value(-self.levels if self.kind == LEVELS else Fraction(-1))

    def value(self, raw: Number) -> ScaleValue:
        """Wrap a signed exact number as a value on this scale.  Level
        grades are interned, so repeated wraps return the same object."""
        if self.kind == LEVELS and type(raw) is int:
            cache: dict = self._cache
            wrapped = cache.get(raw)
            if wrapped is None:
                wrapped = cache[raw] = ScaleValue(self, raw)
            return wrapped
        return ScaleValue(self, raw)

    # -- the order-reversing negation on the positive side ------------------

    def negate(self, a: ScaleValue) -> ScaleValue:
        """The decreasing involution of the positive side: grade i -> K - i
        on a levels scale, x -> 1 - x on the unit scale.  Only defined for
        nonnegative values."""
        self._own(a)
        if a.sign < 0:
            raise ScaleError("negation is defined on the nonnegative side only")
        if self.kind == LEVELS:
            return self.value(self.levels - a.signed)
        return self.value(1 - a.signed)

    # -- enumeration (levels scales only) ------------------------------------

    def nonnegative_values(self) -> Iterator[ScaleValue]:
        if self.kind != LEVELS:
            raise ScaleError("only a levels scale is enumerable")
        return (self.value(i) for i in range(self.levels + 1))

    def signed_values(self) -> Iterator[ScaleValue]:
        if self.kind != LEVELS:
            raise ScaleError("only a levels scale is enumerable")
        return (self.value(i) for i in range(-self.levels, self.levels + 1))

    # -- text format ---------------------------------------------------------

    def format(self, a: ScaleValue) -> str:
        self._own(a)
        if self.kind == UNIT:
            return _format_fraction(a.signed)
        text = self._labels()[abs(a.signed)]
        return "-" + text if a.sign < 0 else text

    def parse(self, text: str) -> ScaleValue:
        """Inverse of :meth:`format`; accepts any exact decimal or p/q string
        on the unit scale, and (possibly minus-prefixed) labels on a levels
        scale."""
        if not isinstance(text, str):
            raise ScaleError(f"expected a string value, got {type(text).__name__}")
        text = text.strip()
        if self.kind == UNIT:
            try:
                return ScaleValue(self, Fraction(text))
            except OffScaleError:
                # well-formed but out of range: a validation error, not a
                # syntax error
                raise
            except (ValueError, ZeroDivisionError) as exc:
                raise ScaleError(f"bad unit-scale value: {text!r}") from exc
        negative = text.startswith("-")
        body = text[1:] if negative else text
        try:
            grade = self._labels().index(body)
        except ValueError:
            raise ScaleError(f"unknown level label: {text!r}") from None
        return ScaleValue(self, -grade if negative else grade)

    def _labels(self) -> tuple[str, ...]:
        if self.labels is not None:
            return self.labels
        return tuple(str(i) for i in range(self.levels + 1))

    def _own(self, a: ScaleValue) -> None:
        if a.scale is not self and a.scale != self:
            raise ScaleError("value belongs to a different scale")


def unit_scale() -> SymmetricScale:
    return SymmetricScale(UNIT)


def levels_scale(k: int, labels: tuple[str, ...] | None = None) -> SymmetricScale:
    return SymmetricScale(LEVELS, k, labels)


@dataclass(frozen=True)
class ScaleValue:
    """One element of a symmetric scale, stored as a signed exact number.

    The numeric representation makes the scale's order the numeric order and
    collapses -0 to 0 with no normalization step.
    """

    scale: SymmetricScale
    signed: Number

    def __post_init__(self) -> None:
        if self.scale.kind == LEVELS:
            if not isinstance(self.signed, int) or isinstance(self.signed, bool):
                raise ScaleError("levels scale values are integer grades")
            bound = self.scale.levels
        else:
            if isinstance(self.signed, float):
                raise ScaleError("binary floats are not exact; use Fraction")
            if not isinstance(self.signed, (int, Fraction)):
                raise ScaleError(
                    f"bad unit-scale value: {type(self.signed).__name__}"
                )
            object.__setattr__(self, "signed", Fraction(self.signed))
            bound = 1
        if abs(self.signed) > bound:
            raise OffScaleError(f"value {self.signed} lies outside the scale")

    # -- structure -----------------------------------------------------------

    @property
    def sign(self) -> int:
        """-1, 0 or +1 as a plain int."""
        return (self.signed > 0) - (self.signed < 0)

    @property
    def magnitude(self) -> Number:
        return abs(self.signed)

    def __neg__(self) -> ScaleValue:
        return self.scale.value(-self.signed)

    def __abs__(self) -> ScaleValue:
        if self.signed >= 0:
            return self
        return self.scale.value(-self.signed)

    # -- total order ---------------------------------------------------------

    def _comparable(self, other: ScaleValue) -> ScaleValue:
        if not isinstance(other, ScaleValue):
            raise TypeError(f"cannot compare ScaleValue with {type(other).__name__}")
        if self.scale is not other.scale and self.scale != other.scale:
            raise ScaleError("values on different scales are not comparable")
        return other

    def __lt__(self, other: ScaleValue) -> bool:
        return self.signed < self._comparable(other).signed

    def __le__(self, other: ScaleValue) -> bool:
        return self.signed <= self._comparable(other).signed

    def __gt__(self, other: ScaleValue) -> bool:
        return self.signed > self._comparable(other).signed

    def __ge__(self, other: ScaleValue) -> bool:
        return self.signed >= self._comparable(other).signed

    def __str__(self) -> str:
        return self.scale.format(self)


def reflect(a: ScaleValue) -> ScaleValue:
    """The mirror map a -> -a."""
    return -a


def absolute(a: ScaleValue) -> ScaleValue:
    return abs(a)


def sign_of(a: ScaleValue) -> ScaleValue:
    """Sign of ``a`` as an element of the same scale: -1, 0 or 1."""
    if a.sign > 0:
        return a.scale.one
    if a.sign < 0:
        return a.scale.minus_one
    return a.scale.zero


def negate(a: ScaleValue) -> ScaleValue:
    """Order-reversing negation of a nonnegative value (see
    :meth:`SymmetricScale.negate`)."""
    return a.scale.negate(a)


def same_scale(a: ScaleValue, b: ScaleValue) -> SymmetricScale:
    if a.scale is not b.scale and a.scale != b.scale:
        raise ScaleError("mixed-scale operation")
    return a.scale


def sym_max(a: ScaleValue, b: ScaleValue) -> ScaleValue:
    """Symmetric maximum: 0 if the operands are opposites, otherwise the
    absolutely larger operand (the one whose magnitude is max(|a|, |b|)),
    keeping its sign.  Coincides with lattice max when both operands are
    nonnegative."""
    scale = same_scale(a, b)
    x, y = a.signed, b.signed
    if x == -y:
        return scale.zero
    return a if abs(x) > abs(y) else b


def sym_min(a: ScaleValue, b: ScaleValue) -> ScaleValue:
    """Symmetric minimum: magnitude min(|a|, |b|), negative exactly when the
    operand signs differ.  Coincides with lattice min when both operands are
    nonnegative."""
    scale = same_scale(a, b)
    x, y = a.signed, b.signed
    mag = min(abs(x), abs(y))
    if (x > 0 and y < 0) or (x < 0 and y > 0):
        mag = -mag
    if x == mag:
        return a
    if y == mag:
        return b
    return scale.value(mag)


def _format_fraction(q: Fraction) -> str:
    """Render exactly: a terminating decimal when the denominator is
    2^a * 5^b, the p/q form otherwise."""
    sign = "-" if q < 0 else ""
    q = abs(q)
    den = q.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{sign}{q.numerator}/{q.denominator}"
    places = max(twos, fives)
    if places == 0:
        return f"{sign}{q.numerator}"
    digits = str(q.numerator * 10**places // q.denominator).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"
