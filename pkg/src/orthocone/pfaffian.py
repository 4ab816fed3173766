"""Pfaffians of matrices skew-symmetric along the anti-diagonal, the patch matrix
of the orthogonal Grassmannian around a fixed point, and the Pfaffians f_tau.

The Pfaffian is computed by the Laplace-like expansion

    Q = sum_j (-1)^(m + j*) sign(m, j) a[m][j*] Q_(mj, j* m*)

with 1-based indices and ``k* = 2n + 1 - k``.  Deleting rows m, j and columns
j*, m* always leaves a matrix whose column set is the star of its row set, so
sub-Pfaffians are memoized on the surviving row set.
"""

from __future__ import annotations

from typing import Sequence

from .algebra.fields import QQ
from .algebra.linalg import determinant
from .algebra.polynomial import Polynomial, PolynomialRing
from .lattice import (
    IndexTuple,
    InvalidIndexError,
    IsotropicIndex,
    Root,
    bruhat_leq,
    enumerate_isotropic,
    roots_of,
    star,
)

MAX_SYMBOLIC_N = 6


class MatrixError(ValueError):
    pass


class ConsistencyError(AssertionError):
    """An internal invariant failed; indicates a bug rather than bad input."""


def _sign(i: int, j: int) -> int:
    return (i < j) - (i > j)


class AntiSkewMatrix:
    """A 2n x 2n matrix with ``a[i][j] == -a[j*][i*]``.

    ``field`` normalizes numeric entries (needed for prime fields); polynomial
    entries carry their own ring.
    """

    def __init__(self, entries: Sequence[Sequence], field=None, check: bool = True):
        rows = [list(r) for r in entries]
        size = len(rows)
        if size % 2:
            raise MatrixError(f"size {size} is odd")
        if any(len(r) != size for r in rows):
            raise MatrixError("matrix is not square")
        self.n = size // 2
        self.field = field
        if field is not None:
            rows = [[field(x) for x in r] for r in rows]
        self.entries = rows
        sample = next((x for r in rows for x in r if isinstance(x, Polynomial)), None)
        self.ring = sample.ring if sample is not None else None
        if check:
            bad = self.violation()
            if bad is not None:
                raise MatrixError(f"not skew-symmetric along the anti-diagonal at {bad}")

    @property
    def size(self) -> int:
        return 2 * self.n

    def _neg(self, x):
        if self.field is not None and not isinstance(x, Polynomial):
            return self.field.norm(-x)
        return -x

    def violation(self) -> tuple[int, int] | None:
        """First 1-based position (i, j) breaking the invariant, or None."""
        s = self.size
        for i in range(s):
            for j in range(s):
                if self.entries[i][j] != self._neg(self.entries[s - 1 - j][s - 1 - i]):
                    return (i + 1, j + 1)
        return None

    def zero(self):
        if self.ring is not None:
            return self.ring.zero()
        return self.field(0) if self.field is not None else 0

    def one(self):
        if self.ring is not None:
            return self.ring.one()
        return self.field(1) if self.field is not None else 1

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i - 1][j - 1]

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.entries]

    @classmethod
    def generic(cls, n: int, field=QQ) -> "AntiSkewMatrix":
        """Independent variables x[i,j] strictly above the anti-diagonal."""
        s = 2 * n
        labels = [f"x[{i},{j}]" for i in range(1, s + 1) for j in range(1, s + 1) if i + j < s + 1]
        ring = PolynomialRing(labels, field)
        a = [[ring.zero() for _ in range(s)] for _ in range(s)]
        for i in range(1, s + 1):
            for j in range(1, s + 1):
                if i + j < s + 1:
                    x = ring.gen(f"x[{i},{j}]")
                    a[i - 1][j - 1] = x
                    a[s - j][s - i] = -x
        return cls(a)

    @classmethod
    def random(cls, n: int, field, rng) -> "AntiSkewMatrix":
        s = 2 * n
        a = [[field(0)] * s for _ in range(s)]
        for i in range(s):
            for j in range(s):
                if i + j < s - 1:
                    x = field.random(rng)
                    a[i][j] = x
                    a[s - 1 - j][s - 1 - i] = field.norm(-x)
        return cls(a, field)


def _pfaffian_rows(A: AntiSkewMatrix, rows: tuple[int, ...], memo: dict, m: int = 1,
                   by_column: bool = False):
    """Pfaffian of the submatrix on ``rows`` (0-based original indices).

    With ``by_column`` the sum runs over the row index m with ``m`` playing the
    role of the fixed j.
    """
    if not by_column and m == 1 and rows in memo:
        return memo[rows]
    k2 = len(rows)
    if k2 == 0:
        return A.one()
    last = A.size - 1
    cols = tuple(sorted(last - r for r in rows))
    norm = A.field.norm if (A.field is not None and A.ring is None) else None
    total = A.zero()
    fixed = m
    for free in range(1, k2 + 1):
        if free == fixed:
            continue
        mm, j = (free, fixed) if by_column else (fixed, free)
        jstar = k2 + 1 - j
        entry = A.entries[rows[mm - 1]][cols[jstar - 1]]
        if entry == 0:
            continue
        sub = tuple(r for r in rows if r != rows[mm - 1] and r != rows[j - 1])
        q = _pfaffian_rows(A, sub, memo)
        if q == 0:
            continue
        sign = (-1) ** (mm + jstar) * _sign(mm, j)
        term = entry * q
        total = total + (term if sign > 0 else -term)
        if norm is not None:
            total = norm(total)
    if not by_column and m == 1:
        memo[rows] = total
    return total


def _check_symbolic(A: AntiSkewMatrix):
    if A.ring is not None and A.n > MAX_SYMBOLIC_N:
        raise MatrixError(f"symbolic Pfaffians are capped at n <= {MAX_SYMBOLIC_N}")


def pfaffian(A: AntiSkewMatrix, m: int = 1):
    """Pfaffian by expansion along row ``m`` (1-based)."""
    _check_symbolic(A)
    if A.n and not 1 <= m <= A.size:
        raise MatrixError(f"expansion row {m} outside 1..{A.size}")
    return _pfaffian_rows(A, tuple(range(A.size)), {}, m)


def pfaffian_by_column(A: AntiSkewMatrix, j: int = 1):
    """Pfaffian with j fixed and the sum taken over m (expansion down column j*)."""
    _check_symbolic(A)
    if A.n and not 1 <= j <= A.size:
        raise MatrixError(f"index {j} outside 1..{A.size}")
    return _pfaffian_rows(A, tuple(range(A.size)), {}, j, by_column=True)


def pfaffian_expansions(A: AntiSkewMatrix) -> dict[tuple[str, int], object]:
    """The Pfaffian expanded along every row m and, dually, summed over m for every j.

    Keys are ``("row", m)`` and ``("column", j)``.  Sub-Pfaffians are shared
    between the expansions.
    """
    _check_symbolic(A)
    memo: dict = {}
    rows = tuple(range(A.size))
    out = {}
    for k in range(1, A.size + 1):
        out["row", k] = _pfaffian_rows(A, rows, memo, k)
        out["column", k] = _pfaffian_rows(A, rows, memo, k, by_column=True)
    return out


def sub_pfaffian(A: AntiSkewMatrix, deleted_rows: Sequence[int]):
    """Pfaffian of A with rows ``deleted_rows`` and columns their stars removed (1-based)."""
    gone = {r - 1 for r in deleted_rows}
    rows = tuple(r for r in range(A.size) if r not in gone)
    return _pfaffian_rows(A, rows, {})


def pfaffian_term_count(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    out = 1
    for k in range(2 * n - 1, 0, -2):
        out *= k
    return out


def _minor(A: AntiSkewMatrix, del_rows: set[int], del_cols: set[int]) -> list[list]:
    return [
        [A.entries[i][j] for j in range(A.size) if j + 1 not in del_cols]
        for i in range(A.size) if i + 1 not in del_rows
    ]


def verify_det_identity(A: AntiSkewMatrix) -> bool:
    """det A == (-1)^n Pf(A)^2, the determinant taken by Gaussian elimination."""
    field = A.field or QQ
    q = pfaffian(A)
    lhs = determinant(A.entries, field)
    rhs = field.norm(field((-1) ** A.n) * q * q)
    return lhs == rhs


def verify_minor_identity(A: AntiSkewMatrix, a: int, j: int, k: int) -> bool:
    """D_(aj, k* a*) == (-1)^(n-1) Q_(aj, j* a*) Q_(ak, k* a*)."""
    s = A.size
    if not all(1 <= x <= s for x in (a, j, k)):
        raise MatrixError("indices out of range")
    if a == j or a == k:
        raise MatrixError("need a != j and a != k")
    field = A.field or QQ
    st = lambda x: s + 1 - x  # noqa: E731
    lhs = determinant(_minor(A, {a, j}, {st(k), st(a)}), field)
    qj = sub_pfaffian(A, (a, j))
    qk = sub_pfaffian(A, (a, k))
    rhs = field.norm(field((-1) ** (A.n - 1)) * qj * qk)
    return lhs == rhs


# --- the patch matrix ------------------------------------------------------------

ALIASES_D5 = "abcdefghij"


def ring_for(v: IsotropicIndex, field=QQ, aliases: bool = False) -> PolynomialRing:
    """Polynomial ring in X_beta, beta in OR(v), variables sorted by (row, col).

    With ``aliases`` and v = (1,2,3,4,5) the variables are named a..j.
    """
    roots = sorted(roots_of(v).OR, key=lambda a: (a.row, a.col))
    names = None
    if aliases and v.entries == (1, 2, 3, 4, 5):
        names = list(ALIASES_D5)
    return PolynomialRing(roots, field, names)


class PatchMatrix:
    """The 2d x d matrix whose columns span a general point of the chart at e^v.

    Entries are pairs ``(coeff, root)``: ``(0, None)``, ``(1, None)`` or
    ``(+1/-1, beta)`` for ``+X_beta`` / ``-X_beta``.
    """

    def __init__(self, v: IsotropicIndex):
        self.v = v
        d = v.d
        self.d = d
        vs = set(v.entries)
        table = {}
        for i, c in enumerate(v.entries):
            for r in range(1, 2 * d + 1):
                if r in vs:
                    table[r, c] = (1, None) if r == c else (0, None)
                elif r < star(c, d):
                    table[r, c] = (1, Root(r, c, d))
                elif r == star(c, d):
                    table[r, c] = (0, None)
                else:
                    table[r, c] = (-1, Root(star(c, d), star(r, d), d))
        self._table = table

    def entry(self, r: int, c: int) -> tuple[int, Root | None]:
        """Entry in row ``r`` and the column labelled by ``c`` (an element of v)."""
        if (r, c) not in self._table:
            raise InvalidIndexError(f"no entry at row {r}, column label {c}")
        return self._table[r, c]

    def polynomial(self, r: int, c: int, ring: PolynomialRing) -> Polynomial:
        coeff, root = self.entry(r, c)
        if root is None:
            return ring.constant(coeff)
        return ring.gen(root).scale(coeff)

    def variables(self) -> set[Root]:
        return {root for _, root in self._table.values() if root is not None}

    def rows(self) -> list[list[str]]:
        out = []
        for r in range(1, 2 * self.d + 1):
            row = []
            for c in self.v.entries:
                coeff, root = self._table[r, c]
                if root is None:
                    row.append(str(coeff))
                else:
                    row.append(("-" if coeff < 0 else "") + f"X[{root.row},{root.col}]")
            out.append(row)
        return out

    def to_json(self) -> dict:
        return {"v": self.v.to_json(), "rows": self.rows()}


def build_patch_matrix(v: IsotropicIndex) -> PatchMatrix:
    return PatchMatrix(v)


def v_degree(v: IndexTuple, tau: IndexTuple) -> int:
    diff = set(v.entries) - set(tau.entries)
    if len(diff) % 2:
        raise InvalidIndexError(f"|v \\ tau| is odd for v={v}, tau={tau}")
    return len(diff) // 2


def pfaffian_submatrix(v: IsotropicIndex, tau: IsotropicIndex, ring: PolynomialRing | None = None,
                       patch: PatchMatrix | None = None) -> AntiSkewMatrix:
    """Rows tau \\ v against columns v \\ tau of the patch matrix, both ascending."""
    if v.d != tau.d:
        raise InvalidIndexError("v and tau must share d")
    ring = ring or ring_for(v)
    patch = patch or PatchMatrix(v)
    rows = sorted(set(tau.entries) - set(v.entries))
    cols = sorted(set(v.entries) - set(tau.entries))
    entries = [[patch.polynomial(r, c, ring) for c in cols] for r in rows]
    A = AntiSkewMatrix(entries, check=False)
    A.ring = ring
    if A.violation() is not None:
        raise ConsistencyError(f"submatrix for v={v}, tau={tau} is not anti-diagonal skew")
    return A


def f_tau(v: IsotropicIndex, tau: IsotropicIndex, ring: PolynomialRing | None = None,
          patch: PatchMatrix | None = None) -> Polynomial:
    ring = ring or ring_for(v)
    return pfaffian(pfaffian_submatrix(v, tau, ring, patch))


def generator_indices(v: IsotropicIndex, w: IsotropicIndex, above_v: bool = True) -> list[IsotropicIndex]:
    """tau in I(d) with tau not <= w (and v <= tau when ``above_v``), lexicographically."""
    if v.d != w.d:
        raise InvalidIndexError("v and w must share d")
    if not bruhat_leq(v, w):
        raise InvalidIndexError(f"v={v} is not <= w={w}")
    return [
        tau for tau in enumerate_isotropic(v.d)
        if not bruhat_leq(tau, w) and (not above_v or bruhat_leq(v, tau))
    ]


def generators(v: IsotropicIndex, w: IsotropicIndex, ring: PolynomialRing | None = None,
               above_v: bool = True) -> list[Polynomial]:
    """The Pfaffians f_tau generating the tangent-cone ideal of X(w) at e^v.

    By default only tau >= v are used; ``above_v=False`` takes every tau not <= w.
    """
    ring = ring or ring_for(v)
    patch = PatchMatrix(v)
    return [f_tau(v, tau, ring, patch) for tau in generator_indices(v, w, above_v)]


__all__ = [
    "ALIASES_D5", "AntiSkewMatrix", "ConsistencyError", "MatrixError", "PatchMatrix",
    "build_patch_matrix", "f_tau", "generator_indices", "generators", "pfaffian",
    "pfaffian_by_column", "pfaffian_expansions", "pfaffian_submatrix", "pfaffian_term_count", "ring_for",
    "sub_pfaffian", "v_degree", "verify_det_identity", "verify_minor_identity",
]
