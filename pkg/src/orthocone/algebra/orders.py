"""Term orders on monomials in the variables X_(r,c), (r,c) in OR(v).

Every order exposes ``key(mono)``; a larger key means a larger monomial.
"""

from __future__ import annotations

from functools import cmp_to_key
from typing import Sequence

from ..lattice import Root, star
from .polynomial import Monomial, Polynomial, PolynomialRing


class OrderError(ValueError):
    pass


def variable_ranking(roots: Sequence[Root], kind: str) -> tuple[int, ...]:
    """Indices of ``roots`` from greatest to smallest under order1 or order2.

    Both orders walk the rows block by block and, inside a row, put ON(v) roots
    first (larger column first) followed by the remaining roots of the row
    (larger column first).  order1 visits rows in increasing order, order2 in
    decreasing order.
    """
    if kind not in ("order1", "order2"):
        raise OrderError(f"unknown variable order {kind!r}")
    reverse_rows = kind == "order2"

    def key(i):
        a = roots[i]
        row = -a.row if reverse_rows else a.row
        return (row, 0 if a.in_ON else 1, -a.col)

    return tuple(sorted(range(len(roots)), key=key))


class TermOrder:
    name = "abstract"

    def __init__(self, ring: PolynomialRing):
        self.ring = ring
        self._cache: dict = {}

    def _key(self, mono: Monomial):
        raise NotImplementedError

    def key(self, mono: Monomial):
        k = self._cache.get(mono)
        if k is None:
            k = self._cache[mono] = self._key(mono)
        return k

    def compare(self, a: Monomial, b: Monomial) -> int:
        if len(a) != self.ring.ngens or len(b) != self.ring.ngens:
            raise OrderError("monomials do not match the ring's variables")
        ka, kb = self.key(tuple(a)), self.key(tuple(b))
        return (ka > kb) - (ka < kb)

    def leading(self, f: Polynomial) -> tuple[Monomial, object]:
        if not f.terms:
            raise OrderError("the zero polynomial has no initial term")
        m = max(f.terms, key=self.key)
        return m, f.terms[m]

    def __repr__(self):
        return f"{type(self).__name__}({self.name})"


class RankedOrder(TermOrder):
    """Degree-compatible orders driven by a ranking of the variables."""

    def __init__(self, ring: PolynomialRing, ranking: Sequence[int]):
        super().__init__(ring)
        ranking = tuple(ranking)
        if sorted(ranking) != list(range(ring.ngens)):
            raise OrderError("ranking must be a permutation of the ring variables")
        self.ranking = ranking

    def variables_by_rank(self) -> list:
        return [self.ring.variables[i] for i in self.ranking]


class HomogeneousLex(RankedOrder):
    """Degree first, then lexicographic with the greatest variable read first."""

    name = "hlex"

    def _key(self, mono):
        return (sum(mono), tuple(mono[i] for i in self.ranking))


class DegLex(HomogeneousLex):
    name = "deglex"


class ReverseLex(RankedOrder):
    """Degree first; then the smaller exponent in the smallest differing variable wins."""

    name = "rlex"

    def _key(self, mono):
        return (sum(mono), tuple(-mono[i] for i in reversed(self.ranking)))


class DiagonalProjectionOrder(TermOrder):
    """The order read off from diagonal projections of the roots in a monomial.

    1. higher degree wins;
    2. otherwise compare the row numbers of all projections (with multiplicity)
       sorted decreasingly, the first larger entry wins;
    3. otherwise look at the elements in the least projection row and compare
       their columns sorted decreasingly at the first difference: if both roots
       lie outside ON(v) the smaller column wins, if exactly one lies in ON(v)
       that one wins, if both lie in ON(v) the larger column wins;
    4. on a full tie in that row, drop those elements from both and repeat.
    """

    name = "diagproj"

    def __init__(self, ring: PolynomialRing):
        super().__init__(ring)
        roots = ring.variables
        self._rows = tuple(a.row for a in roots)
        self._cols = tuple(a.col for a in roots)
        self._vrows = tuple(star(a.col, a.d) for a in roots)
        self._d = roots[0].d if roots else 0
        self._cmp_key = cmp_to_key(self.cmp)

    def _in_ON(self, row: int, col: int) -> bool:
        return row > col and row < star(col, self._d)

    def _projection_rows(self, mono):
        rows = []
        for i, e in enumerate(mono):
            if e:
                rows.extend([self._rows[i]] * e)
                rows.extend([self._vrows[i]] * e)
        rows.sort(reverse=True)
        return rows

    def cmp(self, a: Monomial, b: Monomial) -> int:
        da, db = sum(a), sum(b)
        if da != db:
            return 1 if da > db else -1
        ra, rb = self._projection_rows(a), self._projection_rows(b)
        if ra != rb:
            for x, y in zip(ra, rb):
                if x != y:
                    return 1 if x > y else -1
        a, b = list(a), list(b)
        while any(a):
            low = min(self._rows[i] for i, e in enumerate(a) if e)
            in_row = [i for i in range(len(a)) if self._rows[i] == low]
            ca = sorted((self._cols[i] for i in in_row for _ in range(a[i])), reverse=True)
            cb = sorted((self._cols[i] for i in in_row for _ in range(b[i])), reverse=True)
            if len(ca) != len(cb):
                raise OrderError("projection multisets agree but least-row counts differ")
            for x, y in zip(ca, cb):
                if x == y:
                    continue
                ox, oy = self._in_ON(low, x), self._in_ON(low, y)
                if not ox and not oy:
                    return 1 if x < y else -1
                if ox != oy:
                    return 1 if ox else -1
                return 1 if x > y else -1
            for i in in_row:
                a[i] = b[i] = 0
        return 0

    def _key(self, mono):
        return self._cmp_key(mono)


ORDER_KINDS = ("hlex", "rlex", "diagproj")


def make_order(kind: str, ring: PolynomialRing) -> TermOrder:
    roots = ring.variables
    if kind == "hlex":
        return HomogeneousLex(ring, variable_ranking(roots, "order1"))
    if kind == "rlex":
        return ReverseLex(ring, variable_ranking(roots, "order2"))
    if kind == "diagproj":
        return DiagonalProjectionOrder(ring)
    raise OrderError(f"unknown term order {kind!r}; choose from {ORDER_KINDS}")


def deglex_counterexample_order(ring: PolynomialRing, ranking: Sequence) -> DegLex:
    """Degree-lexicographic order from a ranking of ring variables (greatest first)."""
    idx = [ring.index(x) for x in ranking]
    if len(set(idx)) != len(idx) or len(idx) != ring.ngens:
        raise OrderError("ranking must list every ring variable exactly once")
    return DegLex(ring, idx)


def compare(order: TermOrder, a: Monomial, b: Monomial) -> int:
    return order.compare(a, b)


def initial_term(order: TermOrder, f: Polynomial) -> tuple[object, Monomial]:
    m, c = order.leading(f)
    return c, m
