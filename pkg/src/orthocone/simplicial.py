"""Stanley–Reisner complexes of square-free monomial ideals.

A vertex is a ring variable; a set of vertices is a face exactly when the
product of its variables lies outside the ideal.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Iterator, Sequence

from .algebra.ideals import MonomialIdeal, minimalize
from .algebra.orders import variable_ranking
from .algebra.polynomial import Monomial, root_name
from .lattice import Root

MAX_VERTICES = 64


class NonSquareFreeError(ValueError):
    """A minimal generator has an exponent above one, so no complex exists."""


class ComplexTooLarge(RuntimeError):
    pass


class SimplicialComplex:
    """Complex on ``vertices`` given by its minimal nonfaces (index sets)."""

    def __init__(self, vertices: Sequence[Hashable], nonfaces: Iterable[Iterable[int]],
                 vertex_order: Sequence[int] | None = None):
        self.vertices = tuple(vertices)
        n = len(self.vertices)
        monos = []
        for nf in nonfaces:
            e = [0] * n
            for i in nf:
                e[i] = 1
            monos.append(tuple(e))
        self._nonface_monos = minimalize(monos)
        self.nonfaces = tuple(frozenset(i for i, x in enumerate(m) if x) for m in self._nonface_monos)
        self._masks = tuple(sum(1 << i for i in nf) for nf in self.nonfaces)
        if vertex_order is None:
            vertex_order = range(n)
        self.vertex_order = tuple(vertex_order)
        if sorted(self.vertex_order) != list(range(n)):
            raise ValueError("vertex_order must be a permutation of the vertex indices")

    @classmethod
    def from_initial_ideal(cls, ideal: MonomialIdeal) -> "SimplicialComplex":
        """The complex whose faces are the square-free monomials outside ``ideal``."""
        ring = ideal.ring
        return cls.from_monomials(ring.variables, ideal.gens)

    @classmethod
    def from_monomials(cls, vertices: Sequence[Hashable], gens: Iterable[Monomial]) -> "SimplicialComplex":
        gens = list(gens)
        for g in gens:
            if len(g) != len(vertices):
                raise ValueError("generator length does not match the vertex count")
            if max(g, default=0) > 1:
                raise NonSquareFreeError(f"generator {g} is not square-free")
        order = None
        if vertices and all(isinstance(x, Root) for x in vertices):
            order = variable_ranking(vertices, "order1")
        return cls(vertices, [[i for i, e in enumerate(g) if e] for g in gens], order)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def _mask(self, face: Iterable[int]) -> int:
        m = 0
        for i in face:
            m |= 1 << i
        return m

    def _is_face_mask(self, mask: int) -> bool:
        return not any(nf & mask == nf for nf in self._masks)

    def is_face(self, face: Iterable) -> bool:
        """``face`` is a collection of vertices."""
        index = {v: i for i, v in enumerate(self.vertices)}
        try:
            return self._is_face_mask(self._mask(index[x] for x in face))
        except KeyError as exc:
            raise ValueError(f"unknown vertex {exc.args[0]!r}") from None

    def is_face_monomial(self, mono: Monomial) -> bool:
        """Whether the support of an exponent vector is a face."""
        return self._is_face_mask(self._mask(i for i, e in enumerate(mono) if e))

    def _guard(self):
        if self.n > MAX_VERTICES:
            raise ComplexTooLarge(f"{self.n} vertices exceeds the cap of {MAX_VERTICES}")

    def _faces_masks(self) -> Iterator[int]:
        self._guard()
        order = self.vertex_order

        def walk(pos: int, mask: int):
            yield mask
            for k in range(pos, len(order)):
                m = mask | (1 << order[k])
                if self._is_face_mask(m):
                    yield from walk(k + 1, m)

        yield from walk(0, 0)

    def faces(self) -> list[frozenset]:
        return [self._vertex_set(m) for m in self._faces_masks()]

    def _vertex_set(self, mask: int) -> frozenset:
        return frozenset(self.vertices[i] for i in range(self.n) if mask >> i & 1)

    def facet_masks(self) -> list[int]:
        """Facets by backtracking: each vertex is taken or skipped in vertex order,
        pruning branches that contain a nonface; a leaf is kept when no skipped
        vertex can be added."""
        self._guard()
        order = self.vertex_order
        out: list[int] = []

        def walk(pos: int, mask: int, skipped: int):
            if pos == len(order):
                for i in range(self.n):
                    if skipped >> i & 1 and self._is_face_mask(mask | 1 << i):
                        return
                out.append(mask)
                return
            bit = 1 << order[pos]
            if self._is_face_mask(mask | bit):
                walk(pos + 1, mask | bit, skipped)
            walk(pos + 1, mask, skipped | bit)

        walk(0, 0, 0)
        return sorted(out, key=lambda m: self._sort_key(m))

    def _sort_key(self, mask: int):
        rank = {v: k for k, v in enumerate(self.vertex_order)}
        return sorted(rank[i] for i in range(self.n) if mask >> i & 1)

    def maximal_faces(self) -> list[frozenset]:
        return [self._vertex_set(m) for m in self.facet_masks()]

    def f_vector(self) -> list[int]:
        """Entry k counts faces with k vertices, starting from the empty face."""
        counts = [0] * (self.n + 1)
        for m in self._faces_masks():
            counts[bin(m).count("1")] += 1
        while len(counts) > 1 and counts[-1] == 0:
            counts.pop()
        return counts

    def dimension(self) -> int:
        return len(self.f_vector()) - 2

    def vertex_label(self, x) -> str:
        return root_name(x) if isinstance(x, Root) else str(x)

    def _ordered(self, mask: int) -> list:
        return [self.vertices[i] for i in self.vertex_order if mask >> i & 1]

    def ordered_facets(self) -> list[list]:
        """Facets as vertex lists in vertex order, sorted canonically."""
        return [self._ordered(m) for m in self.facet_masks()]

    def to_json(self) -> dict:
        def enc(x):
            return x.to_json() if isinstance(x, Root) else str(x)
        return {
            "vertices": [enc(x) for x in self.vertices],
            "minimal_nonfaces": [[enc(self.vertices[i]) for i in sorted(nf)] for nf in self.nonfaces],
            "facets": [[enc(x) for x in f] for f in self.ordered_facets()],
            "f_vector": self.f_vector(),
        }


def from_initial_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    return SimplicialComplex.from_initial_ideal(ideal)


def maximal_faces(K: SimplicialComplex) -> list[frozenset]:
    return K.maximal_faces()


def f_vector(K: SimplicialComplex) -> list[int]:
    return K.f_vector()
