"""Exact rational scalars and validated positive input vectors.

Every quantity on a verification path is an arbitrary-precision rational
(`fractions.Fraction`), which keeps canonical form -- positive denominator,
gcd(|numerator|, denominator) = 1 -- after every arithmetic operation.
Floats are confined to the search module and never reach a verdict.

Scalar text grammar (bit-exact):

    INT  ::= [+-]? [0-9]+
    DEC  ::= INT "." [0-9]+
    FRAC ::= INT "/" [0-9]+

Decimals parse to exact rationals ("0.1" is 1/10, never a binary float).
Canonical rendering is "p/q" for denominator q > 1, else "p".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

ExactScalar = Fraction

_SCALAR_RE = re.compile(r"(?P<num>[+-]?[0-9]+)(?:\.(?P<dec>[0-9]+)|/(?P<den>[0-9]+))?\Z")


class ScalarParseError(ValueError):
    """Text does not match the scalar grammar, or has a zero denominator."""


class VectorError(ValueError):
    """Input vector is empty or has a nonpositive entry."""


def parse_scalar(text: str) -> Fraction:
    """Parse an integer, decimal, or fraction literal into an exact rational.

    >>> parse_scalar("1.5")
    Fraction(3, 2)
    >>> parse_scalar("2/6")
    Fraction(1, 3)
    """
    m = _SCALAR_RE.match(text)
    if m is None:
        raise ScalarParseError(f"malformed scalar {text!r}")
    num, dec, den = m.group("num", "dec", "den")
    if den is not None:
        if int(den) == 0:
            raise ScalarParseError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    if dec is not None:
        sign = -1 if num[0] == "-" else 1
        return Fraction(sign * (abs(int(num)) * 10 ** len(dec) + int(dec)), 10 ** len(dec))
    return Fraction(int(num))


def render_scalar(x: Fraction) -> str:
    """Canonical rendering: "p/q" when q > 1, else "p"."""
    if x.denominator > 1:
        return f"{x.numerator}/{x.denominator}"
    return str(x.numerator)


@dataclass(frozen=True)
class PositiveVector:
    """An ordered multiset of strictly positive exact rationals (repeats kept)."""

    entries: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def total(self) -> Fraction:
        return sum(self.entries, Fraction(0))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]

    def __repr__(self) -> str:
        return f"PositiveVector({', '.join(render_scalar(a) for a in self.entries)})"


def make_vector(values: Iterable[Union[Fraction, int]]) -> PositiveVector:
    """Validate and freeze a vector of positive exact scalars.

    Order and multiplicity are preserved. Floats are rejected outright:
    silently converting one would smuggle a binary rounding step onto the
    exact path.
    """
    entries = []
    for i, value in enumerate(values):
        if isinstance(value, float):
            raise TypeError(f"float at index {i}; exact inputs must be Fraction or int")
        x = Fraction(value)
        if x <= 0:
            raise VectorError(f"nonpositive entry {render_scalar(x)} at index {i}")
        entries.append(x)
    if not entries:
        raise VectorError("empty vector")
    return PositiveVector(tuple(entries))
