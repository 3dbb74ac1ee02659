"""Exact coefficient fields: the rationals and prime fields F_p.

All arithmetic in the package is exact.  Rational scalars are plain
``fractions.Fraction`` objects; prime-field scalars are ``FpElement``
wrappers so that matrix code can use ordinary operators for both.
"""

from fractions import Fraction


class FpElement:
    """An element of F_p.  Immutable; supports field operators."""

    __slots__ = ("p", "v")

    def __init__(self, p, v):
        self.p = p
        self.v = v % p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError("mixed prime fields")
            return other
        if isinstance(other, int):
            return FpElement(self.p, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpElement(self.p, self.v + o.v)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpElement(self.p, self.v - o.v)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpElement(self.p, o.v - self.v)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FpElement(self.p, self.v * o.v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.v == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return FpElement(self.p, self.v * pow(o.v, -1, self.p))

    def __neg__(self):
        return FpElement(self.p, -self.v)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "%d" % self.v


class Field:
    """A computable field: the rationals ('Q') or a prime field ('F<p>')."""

    def __init__(self, char=0):
        if char != 0:
            if char < 2 or any(char % q == 0 for q in range(2, int(char ** 0.5) + 1)):
                raise ValueError("field characteristic must be 0 or prime, got %r" % char)
        self.char = char
        self.zero = self.of(0)
        self.one = self.of(1)

    def of(self, x):
        """Coerce an int, Fraction, or decimal/'a/b' string into the field."""
        if self.char == 0:
            return Fraction(x)
        if isinstance(x, FpElement):
            if x.p != self.char:
                raise ValueError("mixed prime fields")
            return x
        if isinstance(x, str):
            if "/" in x:
                num, den = x.split("/")
                return FpElement(self.char, int(num)) / FpElement(self.char, int(den))
            x = int(x)
        if isinstance(x, Fraction):
            return FpElement(self.char, x.numerator) / FpElement(self.char, x.denominator)
        return FpElement(self.char, x)

    def to_str(self, x):
        if self.char == 0:
            return str(x)
        return str(x.v)

    @property
    def name(self):
        return "Q" if self.char == 0 else "F%d" % self.char

    def __eq__(self, other):
        return isinstance(other, Field) and self.char == other.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __repr__(self):
        return self.name


QQ = Field(0)


def parse_field(text):
    """Parse a field spec: 'Q' or 'F<p>' (e.g. 'F5')."""
    text = text.strip()
    if text == "Q":
        return QQ
    if text.startswith("F") and text[1:].isdigit():
        return Field(int(text[1:]))
    raise ValueError("unknown field %r (expected Q or F<p>)" % text)
