"""Exact coefficient fields.

Everything downstream does fraction-free-ish linear algebra and Groebner
reduction, so coefficients must be exact.  The default field is the
rationals (gmpy2.mpq when available, fractions.Fraction otherwise); prime
fields GF(p) are provided for cross-checking results under a second
arithmetic backend.
"""

from __future__ import annotations

import math
from fractions import Fraction

try:  # gmpy2 is much faster for big rationals but is not required
    from gmpy2 import mpq as _mpq

    _HAVE_GMPY = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _mpq = None
    _HAVE_GMPY = False


class RationalField:
    """The field of rational numbers with exact arithmetic."""

    name = "rational"
    characteristic = 0

    def __init__(self):
        if _HAVE_GMPY:
            self._make = _mpq
        else:  # pragma: no cover
            self._make = Fraction
        self.zero = self._make(0)
        self.one = self._make(1)

    def from_int(self, n, d=1):
        return self._make(n, d)

    def from_str(self, s):
        s = s.strip()
        if "/" in s:
            num, den = s.split("/")
            return self._make(int(num), int(den))
        return self._make(int(s))

    def coerce(self, v):
        if isinstance(v, int):
            return self._make(v)
        if isinstance(v, str):
            return self.from_str(v)
        if isinstance(v, Fraction):
            return self._make(v.numerator, v.denominator)
        return v

    def to_str(self, v):
        return str(v)

    def is_square(self, v):
        """Return (True, sqrt) when v is a square in Q, else (False, None)."""
        if v < 0:
            return False, None
        if v == 0:
            return True, self.zero
        num = int(v.numerator)
        den = int(v.denominator)
        rn = math.isqrt(num)
        rd = math.isqrt(den)
        if rn * rn == num and rd * rd == den:
            return True, self._make(rn, rd)
        return False, None

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")


class FpElement:
    """An element of a prime field, stored as a reduced residue."""

    __slots__ = ("val", "p")

    def __init__(self, val, p):
        self.val = val % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError("mixed prime fields")
            return other.val
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.val + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.val - v, self.p)

    def __rsub__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(v - self.val, self.p)

    def __mul__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.val * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        if v % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return FpElement(self.val * pow(v, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        if self.val == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return FpElement(v * pow(self.val, self.p - 2, self.p), self.p)

    def __neg__(self):
        return FpElement(-self.val, self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return "%d" % self.val


def _is_prime(n):
    if n < 2:
        return False
    for q in range(2, int(math.isqrt(n)) + 1):
        if n % q == 0:
            return False
    return True


class PrimeField:
    """GF(p) for a prime p."""

    characteristic = None  # set per instance

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError("modulus %r is not prime" % (p,))
        self.p = p
        self.name = "fp:%d" % p
        self.characteristic = p
        self.zero = FpElement(0, p)
        self.one = FpElement(1, p)

    def from_int(self, n, d=1):
        e = FpElement(n, self.p)
        if d != 1:
            e = e / FpElement(d, self.p)
        return e

    def from_str(self, s):
        s = s.strip()
        if "/" in s:
            num, den = s.split("/")
            return self.from_int(int(num), int(den))
        return self.from_int(int(s))

    def coerce(self, v):
        if isinstance(v, int):
            return FpElement(v, self.p)
        if isinstance(v, str):
            return self.from_str(v)
        if isinstance(v, FpElement):
            if v.p != self.p:
                raise ValueError("mixed prime fields")
            return v
        if isinstance(v, Fraction) or (_HAVE_GMPY and isinstance(v, type(_mpq(1)))):
            return self.from_int(int(v.numerator), int(v.denominator))
        return v

    def to_str(self, v):
        return str(v.val)

    def __repr__(self):
        return "GF(%d)" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))


QQ = RationalField()


def parse_field(spec):
    """Parse a field name: "rational" or "fp:<p>"."""
    if spec is None or spec == "rational":
        return QQ
    if isinstance(spec, str) and spec.startswith("fp:"):
        return PrimeField(int(spec[3:]))
    raise ValueError("unknown field spec %r" % (spec,))
