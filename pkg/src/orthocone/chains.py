"""v-chains, intertwined components, projection sets and new forms.

Diagonal points are compared by row: a greater diagonal point lies further
South-West.  Projection sets are returned as tuples sorted greatest first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .lattice import (
    IsotropicIndex,
    Root,
    RootSystem,
    diagonal_point,
    element_dominates,
    p_h,
    p_v,
    star,
)


class ChainError(ValueError):
    pass


ProjectionSet = tuple  # tuple[Root, ...], distinct diagonal points, greatest first


def as_projection_set(points: Iterable[Root]) -> ProjectionSet:
    return tuple(sorted(set(points), key=lambda p: -p.row))


@dataclass(frozen=True)
class VChain:
    """A strictly decreasing sequence of roots (row decreasing, column increasing)."""

    elements: tuple[Root, ...] = ()

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        for a, b in zip(elements, elements[1:]):
            if not a > b:
                raise ChainError(f"{a!r} > {b!r} fails: not a v-chain")

    @classmethod
    def of(cls, pairs: Iterable[tuple[int, int]], d: int) -> "VChain":
        return cls(tuple(Root(r, c, d) for r, c in pairs))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Root]:
        return iter(self.elements)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return VChain(self.elements[i])
        return self.elements[i]

    def __add__(self, other: "VChain") -> "VChain":
        return VChain(self.elements + other.elements)

    def __bool__(self) -> bool:
        return bool(self.elements)

    @property
    def all_in_ON(self) -> bool:
        return all(a.in_ON for a in self.elements)

    @property
    def all_in_N(self) -> bool:
        return all(a.in_N for a in self.elements)

    def projections(self) -> set[Root]:
        out = set()
        for a in self.elements:
            out.add(p_h(a))
            out.add(p_v(a))
        return out

    def to_json(self) -> list[dict]:
        return [a.to_json() for a in self.elements]

    def __repr__(self) -> str:
        return ">".join(map(repr, self.elements)) or "<empty>"


def is_intertwined(alpha: Root, beta: Root) -> bool:
    """Whether the vertical projection of ``beta`` dominates the horizontal one of ``alpha``."""
    if not alpha > beta:
        raise ChainError(f"is_intertwined needs {alpha!r} > {beta!r}")
    return element_dominates(p_v(beta), p_h(alpha))


def decompose(chain: VChain) -> list[VChain]:
    """Split a chain into its maximal intertwined runs."""
    if not chain:
        return []
    parts = [[chain[0]]]
    for a, b in zip(chain.elements, chain.elements[1:]):
        if is_intertwined(a, b):
            parts[-1].append(b)
        else:
            parts.append([b])
    return [VChain(tuple(p)) for p in parts]


def _require_intertwined(F: VChain) -> None:
    if not F:
        raise ChainError("empty chain has no projections")
    if len(decompose(F)) != 1:
        raise ChainError(f"{F!r} is not intertwined")


def proj_set(F: VChain) -> ProjectionSet:
    _require_intertwined(F)
    return as_projection_set(F.projections())


def projeven_set(F: VChain) -> ProjectionSet:
    ps = proj_set(F)
    return ps if len(ps) % 2 == 0 else ps[:-1]


def proj_chain(C: VChain) -> ProjectionSet:
    comps = decompose(C)
    if not comps:
        return ()
    pts: set[Root] = set()
    for comp in comps[:-1]:
        pts.update(projeven_set(comp))
    pts.update(proj_set(comps[-1]))
    return as_projection_set(pts)


def projeven_chain(C: VChain) -> ProjectionSet:
    pts: set[Root] = set()
    for comp in decompose(C):
        pts.update(projeven_set(comp))
    return as_projection_set(pts)


def chain_dominates(D: VChain, C: VChain) -> bool:
    if len(D) < len(C):
        return False
    return all(element_dominates(nu, mu) for nu, mu in zip(D.elements, C.elements))


def _pair(r_row: int, c_row: int, d: int) -> Root:
    """The root in row ``r_row`` and column ``star(c_row)``."""
    return Root(r_row, star(c_row, d), d)


def spnew(F: VChain) -> VChain:
    """``(r2,r1*) > (r4,r3*) > ... > (rt,r(t-1)*)`` from projeven(F) = r1 > ... > rt."""
    if not all(p.in_N for p in F.projections()):
        raise ChainError(f"spnew needs every projection of {F!r} in N(v)")
    rows = [p.row for p in projeven_set(F)]
    d = F[0].d
    return VChain(tuple(_pair(rows[i + 1], rows[i], d) for i in range(0, len(rows), 2)))


@dataclass(frozen=True)
class IntertwinedNew:
    """new(F) together with the data it was built from."""

    chain: VChain
    rows: tuple[int, ...]  # r_1 > ... > r_t
    s: int  # 1-based; (r_s, r_s*) is the vertical projection of the last element
    removed: tuple[Root, ...]

    @property
    def t(self) -> int:
        return len(self.rows)

    def first_half(self) -> VChain:
        return VChain(self.chain.elements[: (2 * self.s - self.t) // 2])

    def second_half(self) -> VChain:
        return VChain(self.chain.elements[(2 * self.s - self.t) // 2:])


def eligible_choices(F: VChain) -> ProjectionSet:
    """Members of proj(F) strictly between the two projections of F's last element.

    Only meaningful when |proj(F)| is even; empty otherwise.
    """
    ps = proj_set(F)
    if len(ps) % 2:
        return ()
    last = F[-1]
    lo, hi = p_h(last).row, p_v(last).row
    return tuple(p for p in ps if lo < p.row < hi)


def new_intertwined(F: VChain, choice: Root | None = None) -> IntertwinedNew | None:
    """new(F) for an intertwined chain, or None where it is not defined."""
    _require_intertwined(F)
    if len(F) < 2:
        if choice is not None:
            raise ChainError("a choice was given but new(F) is undefined")
        return None
    ps = proj_set(F)
    d = F[0].d
    last = F[-1]
    if len(ps) % 2:
        if choice is not None:
            raise ChainError("odd |proj(F)|: no choice is involved")
        kept = projeven_set(F)
        removed = (ps[-1],)
    else:
        eligible = eligible_choices(F)
        if choice is None:
            if eligible:
                raise ChainError(f"even |proj(F)|: a choice among {eligible} is required")
            return None
        if choice not in eligible:
            raise ChainError(f"{choice!r} is not an eligible choice; eligible: {eligible}")
        removed = (ps[-1], choice)
        kept = tuple(p for p in ps if p not in removed)
    rows = tuple(p.row for p in kept)
    vlast = p_v(last).row
    if vlast not in rows:
        raise ChainError(f"vertical projection of {last!r} missing from the kept projections")
    s = rows.index(vlast) + 1
    t = len(rows)
    k = 2 * s - t
    if t % 2 or k <= 0:
        raise ChainError(f"degenerate new form data s={s}, t={t} for {F!r}")
    r = (None,) + rows  # 1-based access
    elems = [_pair(r[2 * i], r[2 * i - 1], d) for i in range(1, k // 2 + 1)]
    elems += [_pair(r[s + i], r[k + i], d) for i in range(1, t - s + 1)]
    return IntertwinedNew(VChain(tuple(elems)), rows, s, removed)


@dataclass(frozen=True)
class NewForm:
    """Result of the new-form construction; ``chain`` is None when undefined."""

    chain: VChain | None
    cutoff: int
    choice: Root | None = None
    components: tuple[VChain, ...] = ()  # C_1, ..., C_l
    D1: VChain = field(default_factory=VChain)
    D_rest: VChain = field(default_factory=VChain)
    last: IntertwinedNew | None = None
    reason: str = ""

    @property
    def defined(self) -> bool:
        return self.chain is not None

    @property
    def new_C(self) -> VChain:
        """The new form with the untouched part D removed."""
        if self.chain is None:
            raise ChainError("new form undefined")
        n_D = len(self.D1) + len(self.D_rest)
        return VChain(self.chain.elements[: len(self.chain) - n_D])

    def to_json(self) -> dict:
        out: dict = {"defined": self.defined, "cutoff": self.cutoff}
        if self.choice is not None:
            out["choice"] = self.choice.to_json()
        if self.defined:
            out["chain"] = self.chain.to_json()
        else:
            out["reason"] = self.reason
        return out


def split_at_cutoff(E: VChain, cutoff: int):
    """Return (C_1..C_l, D_1, rest of D) for the cut after position ``cutoff`` (1-based)."""
    if not E:
        raise ChainError("new forms need a non-empty chain")
    if not 1 <= cutoff <= len(E):
        raise ChainError(f"cutoff {cutoff} outside 1..{len(E)}")
    C, D = E[:cutoff], E[cutoff:]
    comps = decompose(C)
    n1 = 0
    prev = C[-1]
    for b in D:
        if not is_intertwined(prev, b):
            break
        prev = b
        n1 += 1
    return tuple(comps), D[:n1], D[n1:]


def choices_for(E: VChain, cutoff: int) -> ProjectionSet:
    comps, _, _ = split_at_cutoff(E, cutoff)
    last = comps[-1]
    if len(last) < 2:
        return ()
    return eligible_choices(last)


def new_form(E: VChain, cutoff: int, choice: Root | None = None) -> NewForm:
    """spnew(C_1) > ... > spnew(C_(l-1)) > new(C_l) > D for the given cut-off."""
    comps, D1, rest = split_at_cutoff(E, cutoff)
    last = comps[-1]
    base = dict(cutoff=cutoff, choice=choice, components=comps, D1=D1, D_rest=rest)
    if len(last) < 2:
        if choice is not None:
            raise ChainError("a choice was given but the new form is undefined")
        return NewForm(None, reason="last intertwined component of C is a singleton", **base)
    built = new_intertwined(last, choice)
    if built is None:
        return NewForm(None, reason="no eligible diagonal choice", **base)
    elems: list[Root] = []
    for comp in comps[:-1]:
        elems.extend(spnew(comp).elements)
    elems.extend(built.chain.elements)
    elems.extend(D1.elements)
    elems.extend(rest.elements)
    return NewForm(VChain(tuple(elems)), last=built, **base)


def all_new_forms(E: VChain) -> list[NewForm]:
    """Every (cutoff, choice) combination, defined or not."""
    out = []
    for cutoff in range(1, len(E) + 1):
        options = choices_for(E, cutoff)
        if options:
            out.extend(new_form(E, cutoff, c) for c in options)
        else:
            out.append(new_form(E, cutoff))
    return out


@dataclass(frozen=True)
class AuxSplit:
    F1: VChain
    F2: VChain
    F1dd: VChain
    F2dd: VChain
    S: VChain
    new: IntertwinedNew
    D: VChain


def aux_split(F: VChain, D: VChain = VChain(), choice: Root | None = None) -> AuxSplit:
    """Write F > D as F1 > F2 and pick out the matching sub-chain F1dd > F2dd of new(F) > D."""
    if D:
        _require_intertwined(F + D)
    built = new_intertwined(F, choice)
    if built is None:
        raise ChainError(f"new({F!r}) is undefined")
    r = (None,) + built.rows
    s, t = built.s, built.t
    k = 2 * s - t
    head = {r[i] for i in range(1, k + 1)}
    F1 = VChain(tuple(a for a in F if p_v(a).row in head))
    F2 = VChain(tuple(a for a in (F + D) if p_v(a).row not in head))
    F2_vrows = {p_v(a).row for a in F2}
    S = VChain(tuple(
        _pair(r[j], r[s - t + j], F[0].d)
        for j in range(s + 1, t + 1)
        if r[s - t + j] in F2_vrows
    ))
    return AuxSplit(F1, F2, built.first_half(), S + D, S, built, D)


def gamma_set(A: VChain, j: int) -> ProjectionSet:
    """The diagonal set attached to the first ``j`` elements of ``A``."""
    if not 1 <= j <= len(A):
        raise ChainError(f"j={j} outside 1..{len(A)}")
    Aj = A[:j]
    pe = projeven_chain(Aj)
    if len(proj_chain(Aj)) % 2:
        return pe
    drop = {p_v(A[j - 1]), p_h(A[j - 1])}
    return tuple(p for p in pe if p not in drop)


def diagonal_swap(v: IsotropicIndex, points: Iterable[Root]) -> IsotropicIndex:
    """The element of I(d) obtained from v by trading column r* for row r at each (r, r*)."""
    points = list(points)
    if len(points) % 2:
        raise ChainError("need an even number of diagonal points")
    entries = set(v.entries)
    for p in points:
        if not p.on_diagonal or p.col not in entries or p.row in entries:
            raise ChainError(f"{p!r} is not a diagonal element of R({v})")
        entries.remove(p.col)
        entries.add(p.row)
    return IsotropicIndex(tuple(sorted(entries)))


def gamma_index(v: IsotropicIndex, A: VChain, j: int) -> IsotropicIndex:
    return diagonal_swap(v, gamma_set(A, j))


def enumerate_chains(roots: Sequence[Root], max_len: int) -> list[VChain]:
    """All non-empty v-chains of length <= max_len with elements from ``roots``."""
    ordered = sorted(roots, key=lambda a: (-a.row, a.col))
    out: list[VChain] = []

    def extend(prefix: list[Root], start: int):
        if prefix:
            out.append(VChain(tuple(prefix)))
        if len(prefix) == max_len:
            return
        for i in range(start, len(ordered)):
            b = ordered[i]
            if not prefix or prefix[-1] > b:
                prefix.append(b)
                extend(prefix, i + 1)
                prefix.pop()

    extend([], 0)
    return out


def chains_in_ON(system: RootSystem, max_len: int) -> list[VChain]:
    return enumerate_chains(system.ON, max_len)


def intertwined_chains(system: RootSystem, max_len: int) -> list[VChain]:
    return [c for c in chains_in_ON(system, max_len) if len(decompose(c)) == 1]


__all__ = [
    "AuxSplit", "ChainError", "IntertwinedNew", "NewForm", "VChain",
    "all_new_forms", "as_projection_set", "aux_split", "chain_dominates",
    "chains_in_ON", "choices_for", "decompose", "diagonal_point", "diagonal_swap",
    "eligible_choices", "enumerate_chains", "gamma_index", "gamma_set",
    "intertwined_chains", "is_intertwined", "new_form", "new_intertwined",
    "proj_chain", "proj_set", "projeven_chain", "projeven_set", "spnew",
    "split_at_cutoff",
]
