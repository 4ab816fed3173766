"""Buchberger's algorithm with the normal selection strategy.

Both classical criteria are used (coprime leading monomials, and the chain
criterion), and the result is fully inter-reduced and monic.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass

from .orders import TermOrder
from .polynomial import (
    Polynomial,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
)

log = logging.getLogger(__name__)


class ResourceLimitExceeded(RuntimeError):
    """A configured cap on basis size, term count or degree was hit."""


@dataclass
class Limits:
    max_basis: int = 2000
    max_terms: int = 20000
    max_degree: int | None = None


def monic(f: Polynomial, order: TermOrder) -> Polynomial:
    _, c = order.leading(f)
    if c == 1:
        return f
    return f.scale(f.ring.field.inv(c))


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    mf, cf = order.leading(f)
    mg, cg = order.leading(g)
    lcm = mono_lcm(mf, mg)
    inv = f.ring.field.inv
    return f.mul_term(mono_div(lcm, mf), inv(cf)) - g.mul_term(mono_div(lcm, mg), inv(cg))


def reduce(f: Polynomial, basis: list[Polynomial], order: TermOrder,
           limits: Limits | None = None) -> Polynomial:
    """Fully reduce ``f`` modulo ``basis``; the normal form when ``basis`` is Gröbner."""
    if not basis:
        return f
    field = f.ring.field
    norm = field.norm
    heads = []
    for g in basis:
        m, c = order.leading(g)
        heads.append((m, field.inv(c), g))
    max_terms = limits.max_terms if limits else None
    p = dict(f.terms)
    rem: dict = {}
    key = order.key
    while p:
        m = max(p, key=key)
        c = p[m]
        for hm, hinv, g in heads:
            if mono_divides(hm, m):
                q = mono_div(m, hm)
                factor = norm(c * hinv)
                for gm, gc in g.terms.items():
                    t = tuple(x + y for x, y in zip(gm, q))
                    s = norm(p.get(t, 0) - factor * gc)
                    if s:
                        p[t] = s
                    else:
                        p.pop(t, None)
                break
        else:
            rem[m] = c
            del p[m]
        if max_terms is not None and len(p) + len(rem) > max_terms:
            raise ResourceLimitExceeded(f"intermediate polynomial exceeds {max_terms} terms")
    return Polynomial(f.ring, rem)


def buchberger(gens: list[Polynomial], order: TermOrder,
               limits: Limits | None = None) -> list[Polynomial]:
    """Reduced Gröbner basis of the ideal generated by ``gens``, sorted by leading monomial (descending)."""
    limits = limits or Limits()
    G: list[Polynomial] = []
    lms: list = []
    queue: list = []
    pending: set[tuple[int, int]] = set()
    counter = 0

    def add(h: Polynomial):
        nonlocal counter
        h = monic(h, order)
        m, _ = order.leading(h)
        k = len(G)
        G.append(h)
        lms.append(m)
        if len(G) > limits.max_basis:
            raise ResourceLimitExceeded(f"basis exceeds {limits.max_basis} elements")
        for i in range(k):
            lcm = mono_lcm(lms[i], m)
            heapq.heappush(queue, (_Key(order.key(lcm)), i, k, lcm))
            pending.add((i, k))
            counter += 1

    for f in gens:
        if f.is_zero():
            continue
        h = reduce(f, G, order, limits)
        if not h.is_zero():
            add(h)

    while queue:
        _, i, j, lcm = heapq.heappop(queue)
        pending.discard((i, j))
        if limits.max_degree is not None and sum(lcm) > limits.max_degree:
            raise ResourceLimitExceeded(f"S-pair degree {sum(lcm)} exceeds cap {limits.max_degree}")
        if mono_coprime(lms[i], lms[j]):
            continue
        if _chain_criterion(i, j, lcm, lms, pending):
            continue
        h = reduce(s_polynomial(G[i], G[j], order), G, order, limits)
        if not h.is_zero():
            add(h)
    log.debug("buchberger: %d pairs, %d polynomials before inter-reduction", counter, len(G))
    return interreduce(G, order, limits)


def _chain_criterion(i, j, lcm, lms, pending) -> bool:
    for k, m in enumerate(lms):
        if k in (i, j):
            continue
        if not mono_divides(m, lcm):
            continue
        if _pair(i, k) in pending or _pair(j, k) in pending:
            continue
        return True
    return False


def _pair(a, b):
    return (a, b) if a < b else (b, a)


class _Key:
    """Heap entry key; heapq pops the smallest lcm first."""

    __slots__ = ("k",)

    def __init__(self, k):
        self.k = k

    def __lt__(self, other):
        return self.k < other.k

    def __eq__(self, other):
        return self.k == other.k


def interreduce(G: list[Polynomial], order: TermOrder, limits: Limits | None = None) -> list[Polynomial]:
    G = [monic(g, order) for g in G if not g.is_zero()]
    # drop elements whose leading monomial is divisible by another's
    G.sort(key=lambda g: order.key(order.leading(g)[0]))
    kept: list[Polynomial] = []
    for g in G:
        m, _ = order.leading(g)
        if any(mono_divides(order.leading(h)[0], m) for h in kept):
            continue
        kept.append(g)
    out = []
    for idx, g in enumerate(kept):
        others = kept[:idx] + kept[idx + 1:]
        out.append(monic(reduce(g, others, order, limits), order))
    out.sort(key=lambda g: order.key(order.leading(g)[0]), reverse=True)
    return out


def is_groebner(G: list[Polynomial], order: TermOrder) -> bool:
    """Every S-pair reduces to zero (the defining criterion, no shortcuts)."""
    for a in range(len(G)):
        for b in range(a + 1, len(G)):
            if not reduce(s_polynomial(G[a], G[b], order), G, order).is_zero():
                return False
    return True
