"""Coefficient fields: the rationals and word-size prime fields.

Elements are plain Python objects (Fraction for QQ, int in [0, p) for a
prime field) so the Groebner inner loops stay allocation-light.
"""

from fractions import Fraction

from .errors import NonPrimeModulus


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Rationals:
    """Exact rational arithmetic via fractions.Fraction."""

    p = 0  # characteristic

    zero = Fraction(0)
    one = Fraction(1)

    def __repr__(self):
        return "QQ"

    def coerce(self, a):
        return Fraction(a)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / a

    def div(self, a, b):
        return a / b

    def eq(self, a, b):
        return a == b

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """Arithmetic modulo a prime, elements represented as ints in [0, p)."""

    def __init__(self, p):
        if not _is_prime(p):
            raise NonPrimeModulus(f"{p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"GF({self.p})"

    def coerce(self, a):
        if isinstance(a, Fraction):
            if a.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return a.numerator * pow(a.denominator, -1, self.p) % self.p
        return a % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * pow(b, -1, self.p) % self.p

    def eq(self, a, b):
        return a == b

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = Rationals()

#: Default prime field for randomized (gin) computations; large enough to
#: emulate an infinite field at desk scale.
GF32003 = PrimeField(32003)
