"""Exact scalar fields: the rationals and prime fields F_p.

Rational elements are :class:`fractions.Fraction`; prime-field elements are
:class:`ModInt`, which always stores the canonical residue in ``[0, p)``.
Both support the ordinary arithmetic operators, so the rest of the package
never needs to know which field it is working over.
"""

from fractions import Fraction
from numbers import Integral

from .errors import ParseError


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class ModInt:
    """Residue class modulo a prime ``p``."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModInt):
            if other.p != self.p:
                raise ValueError("mixing residues modulo %d and %d" % (self.p, other.p))
            return other.v
        if isinstance(other, Integral):
            return int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v * o, self.p)

    __rmul__ = __mul__

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError("0 has no inverse modulo %d" % self.p)
        return ModInt(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * ModInt(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(o, self.p) * self.inverse()

    def __neg__(self):
        return ModInt(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return ModInt(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.p == other.p and self.v == other.v
        if isinstance(other, Integral):
            return (int(other) - self.v) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return "ModInt(%d, %d)" % (self.v, self.p)

    def __str__(self):
        return str(self.v)


class ScalarField:
    """Descriptor for an exact field; calling it coerces a value into it."""

    kind = None

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def parse(self, text):
        """Parse the string serialization (also accepts plain ints)."""
        if isinstance(text, bool):
            raise ParseError("boolean is not a scalar: %r" % (text,))
        if isinstance(text, Integral):
            return self(int(text))
        if not isinstance(text, str):
            raise ParseError("scalar must be a string or integer, got %r" % (text,))
        try:
            return self._parse(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError("bad scalar %r for field %s: %s" % (text, self.key, exc)) from None

    def format(self, x):
        return str(self(x))

    def elements(self):
        """Finite enumeration, only for prime fields."""
        raise TypeError("%s is infinite" % self.key)


class Rationals(ScalarField):
    kind = "Rationals"
    key = "q"

    def __call__(self, x):
        if isinstance(x, ModInt):
            raise TypeError("cannot coerce a residue into Q")
        return Fraction(x)

    def _parse(self, text):
        if "/" in text:
            n, d = text.split("/")
            return Fraction(int(n), int(d))
        return Fraction(int(text))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Rationals()"


class PrimeField(ScalarField):
    kind = "PrimeField"

    def __init__(self, p):
        p = int(p)
        if not is_prime(p):
            raise ValueError("%d is not prime" % p)
        self.p = p

    @property
    def key(self):
        return "fp:%d" % self.p

    def __call__(self, x):
        if isinstance(x, ModInt):
            if x.p != self.p:
                raise ValueError("residue modulo %d is not in F_%d" % (x.p, self.p))
            return x
        if isinstance(x, Fraction):
            return ModInt(x.numerator, self.p) / x.denominator
        return ModInt(int(x), self.p)

    def _parse(self, text):
        if "/" in text:
            n, d = text.split("/")
            return ModInt(int(n), self.p) / int(d)
        return ModInt(int(text), self.p)

    def elements(self):
        return [ModInt(v, self.p) for v in range(self.p)]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return "PrimeField(%d)" % self.p


QQ = Rationals()


def field_from_key(key):
    """``"q"`` -> Q, ``"fp:13"`` -> F_13."""
    if isinstance(key, ScalarField):
        return key
    s = str(key).strip().lower()
    if s in ("q", "qq", "rationals"):
        return QQ
    if s.startswith("fp:"):
        try:
            return PrimeField(int(s[3:]))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    raise ParseError("unknown field key %r (expected q or fp:<p>)" % (key,))
