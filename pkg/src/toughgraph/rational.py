"""Exact nonnegative rationals with a distinguished infinity.

Toughness values are ratios of small integers and must compare exactly, so
everything here is integer cross-multiplication; no floats anywhere.
Infinity (the toughness of a complete graph) is modelled as the reserved
pair 1/0, which makes the cross-multiplication comparisons come out right
without special cases.
"""

from __future__ import annotations

from math import gcd


class Rational:
    """A reduced fraction num/den with num >= 0 and den >= 1, or infinity."""

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1):
        if not isinstance(num, int) or not isinstance(den, int):
            raise TypeError("Rational components must be ints")
        if den == 0:
            raise ValueError("zero denominator (use Rational.infinity())")
        if den < 0 or num < 0:
            raise ValueError("Rational is nonnegative: num >= 0, den >= 1")
        g = gcd(num, den)
        object.__setattr__(self, "num", num // g)
        object.__setattr__(self, "den", den // g)

    def __setattr__(self, name, value):
        raise AttributeError("Rational is immutable")

    @classmethod
    def infinity(cls) -> "Rational":
        self = object.__new__(cls)
        object.__setattr__(self, "num", 1)
        object.__setattr__(self, "den", 0)
        return self

    @classmethod
    def parse(cls, text: str) -> "Rational":
        """Parse 'a/b' or a bare integer 'a'; 'inf' gives infinity."""
        text = text.strip()
        if text.lower() in ("inf", "infinity"):
            return cls.infinity()
        if "/" in text:
            a, _, b = text.partition("/")
            return cls(int(a), int(b))
        return cls(int(text))

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def is_zero(self) -> bool:
        return self.num == 0 and self.den != 0

    def _coerce(self, other):
        if isinstance(other, Rational):
            return other
        if isinstance(other, int):
            return Rational(other)
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den < o.num * self.den

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den <= o.num * self.den

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den > o.num * self.den

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den >= o.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_infinite or o.is_infinite:
            if self.num == 0 or o.num == 0:
                raise ValueError("0 * infinity is undefined")
            return Rational.infinity()
        return Rational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __str__(self):
        if self.is_infinite:
            return "inf"
        return f"{self.num}/{self.den}"

    def __repr__(self):
        if self.is_infinite:
            return "Rational.infinity()"
        return f"Rational({self.num}, {self.den})"


INFINITY = Rational.infinity()
ZERO = Rational(0)
ONE = Rational(1)
