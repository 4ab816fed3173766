"""Sparse multivariate polynomials with exact coefficients.

A monomial is a tuple of exponents, one slot per ring variable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

from .fields import QQ

Monomial = tuple  # tuple[int, ...]


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def mono_deg(a: Monomial) -> int:
    return sum(a)


def root_name(root) -> str:
    return f"X[{root.row},{root.col}]"


class PolynomialRing:
    """Polynomial ring over ``field`` in the given (hashable) variables."""

    def __init__(self, variables: Sequence[Hashable], field=QQ, names: Sequence[str] | None = None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate ring variables")
        self.field = field
        self.ngens = len(self.variables)
        self._index = {x: i for i, x in enumerate(self.variables)}
        if names is None:
            names = [root_name(x) if hasattr(x, "row") else str(x) for x in self.variables]
        self.names = tuple(names)

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialRing)
            and self.variables == other.variables
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self.variables, self.field))

    def __repr__(self):
        return f"PolynomialRing({self.field!r}, [{', '.join(self.names)}])"

    def with_names(self, names: Sequence[str]) -> "PolynomialRing":
        return PolynomialRing(self.variables, self.field, names)

    def with_field(self, field) -> "PolynomialRing":
        return PolynomialRing(self.variables, field, self.names)

    def index(self, var) -> int:
        return self._index[var]

    @property
    def one_monomial(self) -> Monomial:
        return (0,) * self.ngens

    def unit(self, i: int) -> Monomial:
        e = [0] * self.ngens
        e[i] = 1
        return tuple(e)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {self.one_monomial: self.field(c)})

    def gen(self, var) -> "Polynomial":
        return Polynomial(self, {self.unit(self._index[var]): self.field(1)})

    def gens(self) -> list["Polynomial"]:
        return [self.gen(x) for x in self.variables]

    def monomial(self, exps: Monomial, coeff=1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): self.field(coeff)})

    def monomial_from_vars(self, mapping: Mapping[Hashable, int]) -> Monomial:
        e = [0] * self.ngens
        for var, m in mapping.items():
            e[self._index[var]] += m
        return tuple(e)

    def vars_of(self, exps: Monomial) -> dict:
        return {self.variables[i]: e for i, e in enumerate(exps) if e}

    def from_terms(self, terms: Iterable[tuple[Mapping[Hashable, int], object]]) -> "Polynomial":
        out: dict = {}
        f = self.field
        for mapping, c in terms:
            m = self.monomial_from_vars(mapping)
            out[m] = f.norm(out.get(m, f(0)) + f(c))
        return Polynomial(self, out)

    def format_monomial(self, exps: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolynomialRing, terms: Mapping[Monomial, object]):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c != 0}

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        norm = self.ring.field.norm
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = norm(out.get(m, 0) + c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        norm = self.ring.field.norm
        return Polynomial(self.ring, {m: norm(-c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        norm = self.ring.field.norm
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = norm(out.get(m, 0) + c1 * c2)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        f = self.ring.field
        c = f(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, {m: f.norm(x * c) for m, x in self.terms.items()})

    def mul_term(self, mono: Monomial, coeff) -> "Polynomial":
        norm = self.ring.field.norm
        return Polynomial(
            self.ring, {mono_mul(m, mono): norm(c * coeff) for m, c in self.terms.items()}
        )

    def __pow__(self, k: int):
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    # comparisons ----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # inspection -----------------------------------------------------------
    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def monomials(self) -> list[Monomial]:
        return list(self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def coefficient(self, mono: Monomial):
        return self.terms.get(tuple(mono), 0)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def map_coefficients(self, ring: PolynomialRing) -> "Polynomial":
        """Reinterpret in ``ring`` (same variables, possibly another field)."""
        f = ring.field
        return Polynomial(ring, {m: f(c) for m, c in self.terms.items()})

    def sorted_terms(self, order=None) -> list[tuple[Monomial, object]]:
        if order is None:
            items = sorted(self.terms.items(), key=lambda mc: (sum(mc[0]), mc[0]), reverse=True)
        else:
            items = sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)
        return items

    def format(self, order=None) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms(order)):
            c = _signed(c, self.ring.field)
            neg = c < 0
            mag = -c if neg else c
            body = self.ring.format_monomial(m)
            if body == "1":
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if i == 0:
                out.append(("-" if neg else "") + text)
            else:
                out.append((" - " if neg else " + ") + text)
        return "".join(out)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.format()})"

    def to_json(self, order=None) -> dict:
        return {
            "variables": list(self.ring.names),
            "terms": [
                {"exponents": list(m), "coeff": str(c)} for m, c in self.sorted_terms(order)
            ],
        }


def _signed(c, field):
    """Symmetric representative for prime-field coefficients, for display."""
    p = getattr(field, "p", None)
    if p is not None and c > p // 2:
        return c - p
    return c
