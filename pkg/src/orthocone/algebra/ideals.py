"""Monomial ideals, initial ideals and degree-by-degree Hilbert functions."""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement
from typing import Iterable, Iterator

from .groebner import buchberger
from .linalg import rank
from .orders import TermOrder
from .polynomial import Monomial, Polynomial, PolynomialRing, mono_divides


def minimalize(monos: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Minimal generators of the monomial ideal generated by ``monos``, sorted."""
    uniq = sorted(set(map(tuple, monos)), key=lambda m: (sum(m), m))
    out: list[Monomial] = []
    for m in uniq:
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return tuple(sorted(out))


class MonomialIdeal:
    def __init__(self, ring: PolynomialRing, gens: Iterable[Monomial]):
        self.ring = ring
        self.gens = minimalize(gens)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def __len__(self):
        return len(self.gens)

    def __repr__(self):
        return "(" + ", ".join(self.ring.format_monomial(g) for g in self.gens) + ")"

    def contains(self, mono: Monomial) -> bool:
        return any(mono_divides(g, mono) for g in self.gens)

    __contains__ = contains

    def is_squarefree(self) -> bool:
        return all(max(g, default=0) <= 1 for g in self.gens)

    def standard_monomials(self, degree: int) -> list[Monomial]:
        return [m for m in monomials_of_degree(self.ring.ngens, degree) if not self.contains(m)]

    def hilbert_function(self, degree: int) -> int:
        return len(self.standard_monomials(degree))

    def to_json(self) -> list[str]:
        return [self.ring.format_monomial(g) for g in self.gens]


def monomials_of_degree(n: int, degree: int) -> Iterator[Monomial]:
    if degree < 0:
        return
    for combo in combinations_with_replacement(range(n), degree):
        e = [0] * n
        for i in combo:
            e[i] += 1
        yield tuple(e)


def squarefree_monomials_of_degree(n: int, degree: int) -> Iterator[Monomial]:
    for combo in combinations(range(n), degree):
        e = [0] * n
        for i in combo:
            e[i] = 1
        yield tuple(e)


def initial_ideal(basis: list[Polynomial], order: TermOrder) -> MonomialIdeal:
    """The initial ideal spanned by leading monomials of a Gröbner basis."""
    ring = order.ring
    return MonomialIdeal(ring, [order.leading(g)[0] for g in basis if not g.is_zero()])


def initial_ideal_of(gens: list[Polynomial], order: TermOrder, limits=None) -> MonomialIdeal:
    return initial_ideal(buchberger(gens, order, limits), order)


def is_member(ideal: MonomialIdeal, mono: Monomial) -> bool:
    return ideal.contains(mono)


def standard_monomials(ideal: MonomialIdeal, degree: int) -> list[Monomial]:
    return ideal.standard_monomials(degree)


def hilbert_function(ideal: MonomialIdeal, degree: int) -> int:
    """dim of the degree-``degree`` piece of P / ideal, by counting standard monomials."""
    return ideal.hilbert_function(degree)


def hilbert_function_by_rank(gens: list[Polynomial], degree: int,
                             ring: PolynomialRing | None = None) -> int:
    """dim of the degree piece of P/I for homogeneous ``gens``, by linear algebra.

    The degree piece of I is spanned by m*f for generators f and monomials m of
    the complementary degree; its dimension is the rank of that coefficient
    matrix.  No Gröbner basis is involved.
    """
    if ring is None:
        if not gens:
            raise ValueError("pass the ring when there are no generators")
        ring = gens[0].ring
    n = ring.ngens
    all_monos = list(monomials_of_degree(n, degree))
    col = {m: i for i, m in enumerate(all_monos)}
    rows = []
    for f in gens:
        if f.is_zero():
            continue
        if not f.is_homogeneous():
            raise ValueError("hilbert_function_by_rank needs homogeneous generators")
        fd = f.degree()
        for m in monomials_of_degree(n, degree - fd):
            rows.append({col[tuple(a + b for a, b in zip(fm, m))]: c for fm, c in f.terms.items()})
    return len(all_monos) - rank(rows, ring.field)
