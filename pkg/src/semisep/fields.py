"""Exact ground fields: the rationals and prime fields.

Elements are plain Python numbers. Rationals are ``int`` or ``Fraction``
(integral values are kept as ``int`` for speed), prime-field elements are
``int`` in ``range(p)``.
"""

from fractions import Fraction

from .errors import ParseError


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    name = "?"
    characteristic = 0

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(("field", self.name))

    def __repr__(self):
        return f"Field({self.name!r})"

    zero = 0
    one = 1


class Rationals(Field):
    name = "Q"
    characteristic = 0

    def normalize(self, x):
        if type(x) is int:
            return x
        if isinstance(x, Fraction):
            return x.numerator if x.denominator == 1 else x
        if isinstance(x, int):
            return int(x)
        raise TypeError(f"not a rational: {x!r}")

    def __call__(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, float):
            raise TypeError("floats are not exact; pass a Fraction or 'a/b' string")
        return self.normalize(Fraction(x) if not isinstance(x, int) else x)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.normalize(Fraction(1) / x)

    def div(self, a, b):
        return self.normalize(Fraction(a) / b)

    def parse(self, s):
        try:
            return self.normalize(Fraction(s.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {s!r}") from exc

    def fmt(self, x):
        return str(x)

    def elements(self):
        raise ValueError("Q is infinite")


class PrimeField(Field):
    def __init__(self, p):
        if not _is_prime(p):
            raise ParseError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"Fp:{p}"

    def normalize(self, x):
        return x % self.p

    def __call__(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            return self.div(x.numerator, x.denominator)
        if isinstance(x, int):
            return x % self.p
        raise TypeError(f"not an element of {self.name}: {x!r}")

    def inv(self, x):
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def parse(self, s):
        try:
            q = Fraction(s.strip())
        except ValueError as exc:
            raise ParseError(f"bad literal {s!r}") from exc
        if q.denominator % self.p == 0:
            raise ParseError(f"{s!r} has denominator divisible by {self.p}")
        return self.div(q.numerator, q.denominator)

    def fmt(self, x):
        return str(x % self.p)

    def elements(self):
        return range(self.p)


QQ = Rationals()


def GF(p):
    return PrimeField(p)


def parse_field(spec):
    """``"Q"`` or ``"Fp:<p>"``."""
    if isinstance(spec, Field):
        return spec
    spec = str(spec).strip()
    if spec == "Q":
        return QQ
    if spec.startswith("Fp:"):
        try:
            p = int(spec[3:])
        except ValueError as exc:
            raise ParseError(f"bad field {spec!r}") from exc
        return PrimeField(p)
    raise ParseError(f"unknown field {spec!r}; expected 'Q' or 'Fp:<p>'")
