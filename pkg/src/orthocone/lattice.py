"""Isotropic index sets, Bruhat comparison and the root regions of a fixed point.

Everything is 1-based: entries of an index tuple live in ``1..2d`` and a root
``(r, c)`` has ``r`` outside and ``c`` inside the index tuple ``v``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Mapping


class InvalidIndexError(ValueError):
    """Raised for malformed dimensions, index tuples and roots."""


def star(k: int, d: int) -> int:
    return 2 * d + 1 - k


@dataclass(frozen=True)
class Dimension:
    d: int

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise InvalidIndexError(f"dimension must be a positive integer, got {self.d!r}")

    @property
    def two_d(self) -> int:
        return 2 * self.d

    def star(self, k: int) -> int:
        if not 1 <= k <= self.two_d:
            raise InvalidIndexError(f"{k} outside 1..{self.two_d}")
        return star(k, self.d)


@dataclass(frozen=True, order=True)
class IndexTuple:
    """An element of I(d, 2d): a strictly increasing d-tuple in ``1..2d``."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        d = len(entries)
        if d < 1:
            raise InvalidIndexError("index tuple must be non-empty")
        if any(a >= b for a, b in zip(entries, entries[1:])):
            raise InvalidIndexError(f"entries must be strictly increasing: {entries}")
        if entries[0] < 1 or entries[-1] > 2 * d:
            raise InvalidIndexError(f"entries must lie in 1..{2 * d}: {entries}")

    @property
    def d(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, k: object) -> bool:
        return k in self._set

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    @cached_property
    def _set(self) -> frozenset[int]:
        return frozenset(self.entries)

    def complement(self) -> tuple[int, ...]:
        return tuple(k for k in range(1, 2 * self.d + 1) if k not in self._set)

    def to_json(self) -> list[int]:
        return list(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


def isotropy_violation(entries: Iterable[int], d: int) -> str | None:
    """Return a description of why ``entries`` is not in I(d), or None."""
    s = set(entries)
    for k in range(1, d + 1):
        if (k in s) == (star(k, d) in s):
            return f"exactly one of {k} and {star(k, d)} must appear"
    if sum(1 for e in s if e > d) % 2:
        return f"the number of entries greater than {d} must be even"
    return None


@dataclass(frozen=True, order=True)
class IsotropicIndex(IndexTuple):
    """An element of I(d): isotropic, with evenly many entries exceeding d."""

    def __post_init__(self):
        super().__post_init__()
        why = isotropy_violation(self.entries, self.d)
        if why is not None:
            raise InvalidIndexError(f"{self} is not in I({self.d}): {why}")

    @classmethod
    def of(cls, entries: Iterable[int]) -> "IsotropicIndex":
        return cls(tuple(entries))


def enumerate_isotropic(d: int) -> list[IsotropicIndex]:
    """All elements of I(d), lexicographically sorted.

    Built by choosing, for each k <= d, one of k and star(k), then keeping the
    even-parity choices.
    """
    Dimension(d)
    out = []
    for mask in range(1 << d):
        entries = sorted(star(k, d) if mask >> (k - 1) & 1 else k for k in range(1, d + 1))
        if bin(mask).count("1") % 2 == 0:
            out.append(IsotropicIndex(tuple(entries)))
    out.sort()
    return out


def enumerate_isotropic_bruteforce(d: int) -> list[IsotropicIndex]:
    """Same as :func:`enumerate_isotropic` by filtering every d-subset of 1..2d."""
    Dimension(d)
    return [
        IsotropicIndex(c)
        for c in combinations(range(1, 2 * d + 1), d)
        if isotropy_violation(c, d) is None
    ]


def bruhat_leq(v: IndexTuple, w: IndexTuple) -> bool:
    if v.d != w.d:
        raise InvalidIndexError(f"cannot compare {v} and {w}: different d")
    return all(a <= b for a, b in zip(v.entries, w.entries))


def top_element(d: int) -> IsotropicIndex:
    """The largest element of I(d) in the Bruhat order."""
    return max(enumerate_isotropic(d), key=lambda t: t.entries)


@dataclass(frozen=True)
class Root:
    """A pair ``(row, col)`` with ``row`` not in v and ``col`` in v.

    The region flags only depend on ``row``, ``col`` and ``d``.
    """

    row: int
    col: int
    d: int

    @property
    def in_OR(self) -> bool:
        return self.row < star(self.col, self.d)

    @property
    def in_N(self) -> bool:
        return self.row > self.col

    @property
    def in_ON(self) -> bool:
        return self.in_OR and self.in_N

    @property
    def on_diagonal(self) -> bool:
        return self.row == star(self.col, self.d)

    def __gt__(self, other: "Root") -> bool:
        # the chain order: further South-West
        return self.row > other.row and self.col < other.col

    def __lt__(self, other: "Root") -> bool:
        return other > self

    def flags(self) -> dict[str, bool]:
        return {
            "in_OR": self.in_OR,
            "in_N": self.in_N,
            "in_ON": self.in_ON,
            "on_diagonal": self.on_diagonal,
        }

    def to_json(self, flags: bool = False) -> dict:
        out: dict = {"row": self.row, "col": self.col}
        if flags:
            out.update(self.flags())
        return out

    def __repr__(self) -> str:
        return f"({self.row},{self.col})"


def diagonal_point(r: int, d: int) -> Root:
    """The diagonal root (r, star(r))."""
    return Root(r, star(r, d), d)


def project(alpha: Root, kind: str) -> Root:
    """Horizontal ``(r, r*)`` or vertical ``(c*, c)`` projection onto the diagonal."""
    if kind in ("h", "horizontal"):
        return diagonal_point(alpha.row, alpha.d)
    if kind in ("v", "vertical"):
        return Root(star(alpha.col, alpha.d), alpha.col, alpha.d)
    raise ValueError(f"unknown projection kind {kind!r}")


def p_h(alpha: Root) -> Root:
    return diagonal_point(alpha.row, alpha.d)


def p_v(alpha: Root) -> Root:
    return Root(star(alpha.col, alpha.d), alpha.col, alpha.d)


def element_dominates(beta: Root, alpha: Root) -> bool:
    """``beta`` dominates ``alpha``: row no smaller and column no larger."""
    return beta.row >= alpha.row and beta.col <= alpha.col


def diagonal_key(point: Root) -> int:
    # larger row = further South-West = greater on the diagonal
    return point.row


class RootSystem:
    """R(v) with its regions OR(v), N(v), ON(v) and the diagonal."""

    def __init__(self, v: IsotropicIndex):
        self.v = v
        self.d = v.d
        rows = v.complement()
        self.roots: tuple[Root, ...] = tuple(
            Root(r, c, self.d) for r in rows for c in v.entries
        )
        self.OR = tuple(a for a in self.roots if a.in_OR)
        self.N = tuple(a for a in self.roots if a.in_N)
        self.ON = tuple(a for a in self.roots if a.in_ON)
        self.diagonal = tuple(a for a in self.roots if a.on_diagonal)
        self._set = frozenset(self.roots)

    def __contains__(self, alpha: object) -> bool:
        return alpha in self._set

    def __iter__(self) -> Iterator[Root]:
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def root(self, r: int, c: int) -> Root:
        alpha = Root(r, c, self.d)
        if alpha not in self._set:
            raise InvalidIndexError(f"({r},{c}) is not in R({self.v})")
        return alpha

    def rows(self) -> tuple[int, ...]:
        return self.v.complement()


def roots_of(v: IsotropicIndex) -> RootSystem:
    return RootSystem(v)


@dataclass(frozen=True)
class RootMonomial:
    """A multiset of roots. Multiplicities are positive; the empty monomial is 1."""

    items: tuple[tuple[Root, int], ...] = ()

    def __post_init__(self):
        merged: Counter = Counter()
        for root, mult in self.items:
            if mult < 0:
                raise ValueError(f"negative multiplicity for {root}")
            merged[root] += mult
        items = tuple(sorted(((r, m) for r, m in merged.items() if m > 0),
                             key=lambda rm: (rm[0].row, rm[0].col)))
        object.__setattr__(self, "items", items)

    @classmethod
    def from_mapping(cls, exponents: Mapping[Root, int]) -> "RootMonomial":
        return cls(tuple(exponents.items()))

    @classmethod
    def from_roots(cls, roots: Iterable[Root]) -> "RootMonomial":
        return cls(tuple((r, 1) for r in roots))

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.items)

    def as_dict(self) -> dict[Root, int]:
        return dict(self.items)

    def support(self) -> frozenset[Root]:
        return frozenset(r for r, _ in self.items)

    def is_squarefree(self) -> bool:
        return all(m == 1 for _, m in self.items)

    def intersection(self, subset: Iterable[Root]) -> "RootMonomial":
        keep = set(subset)
        return RootMonomial(tuple((r, m) for r, m in self.items if r in keep))

    def __mul__(self, other: "RootMonomial") -> "RootMonomial":
        return RootMonomial(self.items + other.items)

    def divides(self, other: "RootMonomial") -> bool:
        theirs = other.as_dict()
        return all(theirs.get(r, 0) >= m for r, m in self.items)

    def __repr__(self) -> str:
        if not self.items:
            return "1"
        return "*".join(f"X{r!r}" + (f"^{m}" if m > 1 else "") for r, m in self.items)
