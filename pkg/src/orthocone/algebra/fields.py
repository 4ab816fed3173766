"""Exact coefficient fields of characteristic other than 2."""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    pass


class Rationals:
    characteristic = 0
    name = "rat"

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    def norm(self, x):
        return x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x)

    def random(self, rng, bound: int = 9) -> Fraction:
        num = rng.randint(-bound, bound)
        return Fraction(num, rng.randint(1, bound))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


class PrimeField:
    """Integers modulo an odd prime; elements are plain ints in ``0..p-1``."""

    def __init__(self, p: int):
        if p == 2:
            raise FieldError("characteristic 2 is not supported")
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"fp:{p}"

    def __call__(self, x) -> int:
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def norm(self, x):
        return x % self.p

    def inv(self, x):
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def random(self, rng, bound: int | None = None) -> int:
        return rng.randrange(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


def parse_field(spec: str):
    """``"rat"`` or ``"fp:<p>"``."""
    spec = spec.strip().lower()
    if spec in ("rat", "q", "qq"):
        return QQ
    if spec.startswith("fp:"):
        try:
            p = int(spec[3:])
        except ValueError:
            raise FieldError(f"bad prime in field spec {spec!r}") from None
        return PrimeField(p)
    raise FieldError(f"unknown field {spec!r}; use 'rat' or 'fp:<p>'")
