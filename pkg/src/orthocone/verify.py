"""Verification suites: each runs a family of exact checks and reports per-check results.

Suites are plain functions returning a :class:`SuiteResult`; the CLI and the
acceptance tests share them.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .algebra import (
    QQ,
    Limits,
    MonomialIdeal,
    PolynomialRing,
    PrimeField,
    buchberger,
    deglex_counterexample_order,
    hilbert_function_by_rank,
    initial_ideal,
    initial_term,
    is_groebner,
    make_order,
    monomials_of_degree,
    reduce,
)
from .algebra.orders import DiagonalProjectionOrder
from .chains import (
    VChain,
    all_new_forms,
    aux_split,
    chains_in_ON,
    gamma_index,
    gamma_set,
    is_intertwined,
    proj_chain,
    projeven_chain,
)
from .lattice import (
    IsotropicIndex,
    bruhat_leq,
    enumerate_isotropic,
    p_h,
    p_v,
    roots_of,
)
from .pfaffian import (
    AntiSkewMatrix,
    PatchMatrix,
    f_tau,
    generators,
    pfaffian,
    pfaffian_expansions,
    pfaffian_term_count,
    ring_for,
    v_degree,
    verify_det_identity,
    verify_minor_identity,
)

WORKERS_ENV = "ORTHOCONE_WORKERS"


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    seconds: float | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "detail": self.detail}
        if self.seconds is not None:
            out["seconds"] = round(self.seconds, 3)
        return out


@dataclass
class SuiteResult:
    suite: str
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "", seconds: float | None = None) -> Check:
        c = Check(name, bool(passed), detail, seconds)
        self.checks.append(c)
        return c

    def to_json(self, timings: bool = False) -> dict:
        checks = []
        for c in self.checks:
            item = c.to_json()
            if not timings:
                item.pop("seconds", None)
            checks.append(item)
        out = {"suite": self.suite, "passed": self.passed, "checks": checks}
        if timings:
            out["seconds"] = round(self.seconds, 3)
        return out


class _Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


def _alias_poly(ring: PolynomialRing, terms: list[tuple[int, str]]):
    """A polynomial from (coefficient, "word of variable names") pairs."""
    idx = {name: i for i, name in enumerate(ring.names)}
    out = ring.zero()
    for c, word in terms:
        e = [0] * ring.ngens
        for ch in word:
            e[idx[ch]] += 1
        out = out + ring.monomial(tuple(e), c)
    return out


def _mono(ring: PolynomialRing, word: str):
    return ring.monomial_from_vars({ring.variables[ring.names.index(ch)]: 1 for ch in word})


# --- the d=5 example -----------------------------------------------------------------

EXAMPLE_V = (1, 2, 3, 4, 5)
EXAMPLE_W = (3, 4, 5, 9, 10)
EXAMPLE_PFAFFIANS = [
    [(1, "di"), (-1, "cf"), (1, "bg")],
    [(1, "dh"), (-1, "ce"), (1, "ag")],
    [(1, "dj"), (-1, "be"), (1, "af")],
    [(1, "cj"), (-1, "bh"), (1, "ai")],
    [(1, "gj"), (-1, "fh"), (1, "ei")],
]
EXAMPLE_INITIAL = ["di", "dh", "dj", "cj", "gj"]
EXAMPLE_ELEMENT = [(1, "cfh"), (-1, "bgh"), (-1, "cei"), (1, "agi")]


def example_ring(field=QQ) -> PolynomialRing:
    return ring_for(IsotropicIndex.of(EXAMPLE_V), field, aliases=True)


def suite_d5_example(field=QQ, **_) -> SuiteResult:
    res = SuiteResult("paper-example")
    v, w = IsotropicIndex.of(EXAMPLE_V), IsotropicIndex.of(EXAMPLE_W)
    ring = example_ring(field)

    with _Timer() as t:
        gens = generators(v, w, ring)
    expected = [_alias_poly(ring, ts) for ts in EXAMPLE_PFAFFIANS]
    res.add(
        "generators equal the five listed Pfaffians",
        gens == expected and t.elapsed < 1.0,
        "; ".join(g.format() for g in gens) + f" ({t.elapsed:.3f}s)",
        t.elapsed,
    )
    res.add("enumerate_isotropic(5) has 16 elements", len(enumerate_isotropic(5)) == 16)

    ok = True
    for kind in ("hlex", "rlex", "diagproj"):
        order = make_order(kind, ring)
        got = [initial_term(order, g)[1] for g in gens]
        ok &= got == [_mono(ring, m) for m in EXAMPLE_INITIAL]
    res.add("initial terms are di, dh, dj, cj, gj under hlex, rlex, diagproj", ok)

    with _Timer() as t:
        h, i = ring.gen(ring.variables[ring.names.index("h")]), ring.gen(ring.variables[ring.names.index("i")])
        element = -h * gens[0] + i * gens[1]
        target = _alias_poly(ring, EXAMPLE_ELEMENT)
        leads = [_mono(ring, m) for m in EXAMPLE_INITIAL]
        undivided = all(
            not all(a <= b for a, b in zip(lead, m)) for m in element.terms for lead in leads
        )
        hlex = make_order("hlex", ring)
        G = buchberger(gens, hlex)
        in_basis = reduce(element, G, hlex).is_zero()
    res.add(
        "-h*f1 + i*f2 = cfh - bgh - cei + agi, no term divisible by a listed initial term",
        element == target and undivided,
        element.format(hlex),
    )
    res.add(
        "reduced hlex Groebner basis has more than 5 elements",
        len(G) > 5 and is_groebner(G, hlex) and in_basis and t.elapsed < 10,
        f"{len(G)} elements; new leading monomials: "
        + ", ".join(ring.format_monomial(hlex.leading(g)[0]) for g in G
                    if hlex.leading(g)[0] not in leads),
        t.elapsed,
    )

    with _Timer() as t:
        ranking = ["d", "j", "a"] + [n for n in ring.names if n not in "dja"]
        order = deglex_counterexample_order(ring, [ring.variables[ring.names.index(n)] for n in ranking])
        _, lead = initial_term(order, element)
    res.add(
        "deglex with d > j > a picks agi",
        lead == _mono(ring, "agi") and t.elapsed < 1.0,
        ring.format_monomial(lead),
        t.elapsed,
    )
    return res


# --- Pfaffian identities -----------------------------------------------------------

def suite_pfaffian_identities(seed: int = 0, trials: int = 200, max_n: int = 5,
                              symbolic_n: int = 4, **_) -> SuiteResult:
    res = SuiteResult("pfaffian-identities")
    rng = random.Random(seed)
    for fld in (QQ, PrimeField(32003)):
        for n in range(1, max_n + 1):
            det_ok = minor_ok = indep_ok = True
            first_bad = ""
            for trial in range(trials):
                A = AntiSkewMatrix.random(n, fld, rng)
                if not verify_det_identity(A):
                    det_ok = False
                    first_bad = first_bad or f"det, trial {trial}"
                a = rng.randint(1, 2 * n)
                others = [x for x in range(1, 2 * n + 1) if x != a]
                j, k = rng.choice(others), rng.choice(others)
                if not verify_minor_identity(A, a, j, k):
                    minor_ok = False
                    first_bad = first_bad or f"minor ({a},{j},{k}), trial {trial}"
                values = set(pfaffian_expansions(A).values())
                if len(values) != 1:
                    indep_ok = False
                    first_bad = first_bad or f"expansion dependence, trial {trial}"
            res.add(
                f"{fld.name} n={n}: det identity, minor identity, m-independence ({trials} matrices)",
                det_ok and minor_ok and indep_ok,
                first_bad,
            )
    for n in range(0, symbolic_n + 1):
        A = AntiSkewMatrix.generic(n)
        q = pfaffian(A)
        count = len(q.terms) if hasattr(q, "terms") else 1
        res.add(f"generic n={n}: {count} terms", count == pfaffian_term_count(n),
                f"expected {pfaffian_term_count(n)}")
    return res


# --- new forms ---------------------------------------------------------------------

def _subsequence(small, big) -> bool:
    it = iter(big)
    return all(any(x == y for y in it) for x in small)


def newform_failures(nf, E) -> list[str]:
    """Names of the properties that fail for one defined new form of E."""
    fails = []
    C = E[: nf.cutoff]
    newC = nf.new_C
    projs = [q for a in newC for q in (p_h(a), p_v(a))]
    if len(set(projs)) != len(projs):
        fails.append("fewer(1): shared projection")
    pc = proj_chain(newC) if newC else ()
    if len(pc) % 2:
        fails.append("fewer(2): odd proj")
    if len(proj_chain(C)) % 2 and set(pc) != set(projeven_chain(C)):
        fails.append("fewer(2): proj differs from projeven")
    if not len(newC) < len(C) or not len(nf.chain) < len(E):
        fails.append("fewer(3): not shorter")
    if not nf.chain.all_in_ON:
        fails.append("new form leaves ON(v)")

    ax = aux_split(nf.components[-1], nf.D1, nf.choice)
    if not _subsequence((ax.F1dd + ax.F2dd).elements, (ax.new.chain + ax.D).elements):
        fails.append("aux(1): not a sub-chain")
    pj = [q for a in ax.F1dd for q in (p_h(a), p_v(a))]
    if len(set(pj)) % 2 or not all(q.in_N for q in pj):
        fails.append("aux(2): projections")
    f1 = ax.F1dd.elements
    if any(is_intertwined(a, b) for x, a in enumerate(f1) for b in f1[x + 1:]):
        fails.append("aux(3): legs intertwine inside F1dd")
    if f1 and ax.F2dd and is_intertwined(f1[-1], ax.F2dd[0]):
        fails.append("aux(3): F1dd meets F2dd")
    pset = set(pj)
    if not all(p_v(a) in pset for a in ax.F1):
        fails.append("aux(4): vertical projection of F1 missing")
    if len(ax.F2) != len(ax.F2dd):
        fails.append("aux(5): no bijection")
    else:
        in_D = set(ax.D.elements)
        for a, b in zip(ax.F2, ax.F2dd):
            if p_v(a) != p_v(b):
                fails.append("aux(5): vertical projections differ")
                break
            if a in in_D and a != b:
                fails.append("aux(5): not identity on D")
                break
            if a not in in_D and not b.row > a.row:
                fails.append("aux(5): row not bigger")
                break
    return fails


def gamma_failures(v: IsotropicIndex, A, ring=None, patch=None, term_counts: bool = True) -> list[str]:
    """Checks on the diagonal sets attached to the prefixes of A."""
    fails = []
    for j in range(1, len(A) + 1):
        G = gamma_set(A, j)
        if len(G) % 2:
            fails.append(f"Gamma_{j} odd")
            continue
        if j >= 2 and len(proj_chain(A[: j - 1])) % 2 == 0 and set(G) != set(projeven_chain(A[: j - 1])):
            fails.append(f"(ddagger) fails at j={j}")
        tau = gamma_index(v, A, j)
        if not bruhat_leq(v, tau):
            fails.append(f"Gamma_{j} index not above v")
        if term_counts:
            f = f_tau(v, tau, ring, patch)
            q = len(G) // 2
            if len(f.terms) != pfaffian_term_count(q) or f.degree() != q:
                fails.append(f"f for Gamma_{j}: {len(f.terms)} terms, expected {pfaffian_term_count(q)}")
    return fails


def random_chain(system, rng: random.Random, max_len: int):
    """A random v-chain in ON(v): a random start, then random smaller elements."""
    pool = list(system.ON)
    if not pool:
        return None
    chain = [rng.choice(pool)]
    target = rng.randint(1, max_len)
    while len(chain) < target:
        nxt = [b for b in pool if chain[-1] > b]
        if not nxt:
            break
        chain.append(rng.choice(nxt))
    return VChain(tuple(chain))


def _newform_checks(v, E, ring, patch, problems: dict, counts: dict) -> str:
    example = ""
    counts["chains"] += 1
    for nf in all_new_forms(E):
        if not nf.defined:
            counts["undefined"] += 1
            continue
        counts["defined"] += 1
        for f in newform_failures(nf, E):
            problems[f] = problems.get(f, 0) + 1
            example = example or f"{v} {E!r} cutoff={nf.cutoff}: {f}"
    for f in gamma_failures(v, E, ring, patch, term_counts=ring is not None):
        problems[f] = problems.get(f, 0) + 1
        example = example or f"{v} {E!r}: {f}"
    return example


def suite_newform_props(dims=(3, 4, 5), max_len: int = 4, gamma_terms_up_to: int = 5,
                        random_dims=(6, 7, 8), random_samples: int = 1000, random_max_len: int = 6,
                        seed: int = 0, **_) -> SuiteResult:
    res = SuiteResult("newform-props")
    rng = random.Random(seed)

    def report(label, counts, problems, example):
        res.add(
            f"{label}: fewer(1)-(3), auxiliary items and Gamma_j checks over {counts['chains']} chains, "
            f"{counts['defined']} defined new forms",
            not problems,
            example or f"{counts['undefined']} (cutoff, choice) combinations undefined",
        )

    for d in dims:
        counts = {"chains": 0, "defined": 0, "undefined": 0}
        problems: dict[str, int] = {}
        example = ""
        for v in enumerate_isotropic(d):
            system = roots_of(v)
            ring = ring_for(v) if d <= gamma_terms_up_to else None
            patch = PatchMatrix(v)
            for E in chains_in_ON(system, max_len):
                example = _newform_checks(v, E, ring, patch, problems, counts) or example
        report(f"d={d} exhaustive", counts, problems, example)
    for d in random_dims:
        counts = {"chains": 0, "defined": 0, "undefined": 0}
        problems = {}
        example = ""
        elems = enumerate_isotropic(d)
        for _ in range(random_samples):
            v = rng.choice(elems)
            E = random_chain(roots_of(v), rng, random_max_len)
            if E is None:
                continue
            example = _newform_checks(v, E, None, None, problems, counts) or example
        report(f"d={d} random", counts, problems, example)
    return res


# --- initial ideals at small d ------------------------------------------------------------

def theorem_case(args) -> dict:
    """All checks for one (v, w); module-level so worker processes can run it."""
    v_entries, w_entries, field_name, max_basis = args
    from .algebra import parse_field

    v, w = IsotropicIndex.of(v_entries), IsotropicIndex.of(w_entries)
    ring = ring_for(v, parse_field(field_name))
    limits = Limits(max_basis=max_basis)
    full = generators(v, w, ring, above_v=False)
    sub = generators(v, w, ring)
    ideals = {}
    for kind in ("hlex", "rlex", "diagproj"):
        order = make_order(kind, ring)
        ideals[kind] = initial_ideal(buchberger(full, order, limits), order)
    hlex = make_order("hlex", ring)
    in_sub = initial_ideal(buchberger(sub, hlex, limits), hlex)
    return {
        "v": v.entries,
        "w": w.entries,
        "squarefree": ideals["hlex"].is_squarefree(),
        "orders_agree": ideals["hlex"] == ideals["rlex"] == ideals["diagproj"],
        "sub_ideal_agrees": in_sub == ideals["hlex"],
        "generators": len(ideals["hlex"]),
    }


def bruhat_pairs(d: int) -> list[tuple[IsotropicIndex, IsotropicIndex]]:
    elems = enumerate_isotropic(d)
    return [(v, w) for v in elems for w in elems if bruhat_leq(v, w)]


def worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def suite_theorem_smalld(dims=(2, 3, 4), field=QQ, workers: int | None = None,
                         max_basis: int = 2000, **_) -> SuiteResult:
    res = SuiteResult("theorem-smalld")
    workers = workers or worker_count()
    jobs = [(v.entries, w.entries, field.name, max_basis) for d in dims for v, w in bruhat_pairs(d)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(theorem_case, jobs, chunksize=4))
    else:
        results = [theorem_case(j) for j in jobs]
    results.sort(key=lambda r: (len(r["v"]), r["v"], r["w"]))
    for d in dims:
        rs = [r for r in results if len(r["v"]) == d]
        bad = [r for r in rs if not (r["squarefree"] and r["orders_agree"] and r["sub_ideal_agrees"])]
        detail = ""
        if bad:
            r = bad[0]
            detail = f"first failure v={r['v']} w={r['w']}: " + ", ".join(
                k for k in ("squarefree", "orders_agree", "sub_ideal_agrees") if not r[k])
        res.add(
            f"d={d}: {len(rs)} pairs v <= w, in(I) square-free and equal under hlex, rlex, diagproj",
            not bad,
            detail,
        )
    return res


# --- term order axioms -------------------------------------------------------------

def order_axiom_failures(order, monos, variables) -> list[str]:
    fails = []
    one = (0,) * order.ring.ngens
    ranked = sorted(monos, key=order.key)
    for a, b in zip(ranked, ranked[1:]):
        if order.compare(a, b) >= 0:
            fails.append("not total/strict on distinct monomials")
            break
    for m in monos:
        if m != one and order.compare(m, one) <= 0:
            fails.append("1 is not minimal")
            break
    for a, b in combinations(ranked, 2):
        for x in variables:
            ax = tuple(p + q for p, q in zip(a, x))
            bx = tuple(p + q for p, q in zip(b, x))
            if order.compare(ax, bx) >= 0:
                fails.append("not multiplicative")
                return fails
    if isinstance(order, DiagonalProjectionOrder):
        for a, b in combinations(ranked, 2):
            if order.cmp(a, b) >= 0 or order.cmp(b, a) <= 0:
                fails.append("comparison inconsistent with sorting")
                break
    return fails


def suite_order_axioms(max_d: int = 4, max_degree: int = 3, seed: int = 0,
                       random_dims=(5, 6), random_trials: int = 300, **_) -> SuiteResult:
    res = SuiteResult("order-axioms")
    rng = random.Random(seed)
    for d in range(1, max_d + 1):
        problems = []
        for v in enumerate_isotropic(d):
            ring = ring_for(v)
            monos = [m for k in range(max_degree + 1) for m in monomials_of_degree(ring.ngens, k)]
            units = [ring.unit(i) for i in range(ring.ngens)]
            for kind in ("hlex", "rlex", "diagproj"):
                for f in order_axiom_failures(make_order(kind, ring), monos, units):
                    problems.append(f"{kind} at v={v}: {f}")
        res.add(f"d={d}: totality, 1 minimal, multiplicativity up to degree {max_degree}",
                not problems, problems[0] if problems else "")
    for d in random_dims:
        problems = []
        elems = enumerate_isotropic(d)
        for _ in range(random_trials):
            v = rng.choice(elems)
            ring = ring_for(v)
            n = ring.ngens
            if n == 0:
                continue

            def rand_mono(deg):
                e = [0] * n
                for _ in range(deg):
                    e[rng.randrange(n)] += 1
                return tuple(e)

            deg = rng.randint(1, 5)
            a, b, t = rand_mono(deg), rand_mono(deg), rand_mono(rng.randint(0, 3))
            for kind in ("hlex", "rlex", "diagproj"):
                o = make_order(kind, ring)
                c = o.compare(a, b)
                at = tuple(x + y for x, y in zip(a, t))
                bt = tuple(x + y for x, y in zip(b, t))
                if (a == b) != (c == 0) or o.compare(at, bt) != c or o.compare(b, a) != -c:
                    problems.append(f"{kind} at v={v}: {a} vs {b} times {t}")
        res.add(f"d={d}: {random_trials} random multiplicativity/antisymmetry samples",
                not problems, problems[0] if problems else "")

    for d in range(1, max_d + 1):
        bad = []
        for v in enumerate_isotropic(d):
            ring = ring_for(v)
            patch = PatchMatrix(v)
            orders = [make_order(k, ring) for k in ("hlex", "rlex", "diagproj")]
            for tau in enumerate_isotropic(d):
                if tau == v or not bruhat_leq(v, tau):
                    continue
                f = f_tau(v, tau, ring, patch)
                leads = {initial_term(o, f)[1] for o in orders}
                if len(leads) != 1:
                    bad.append(f"v={v} tau={tau}")
        res.add(f"d={d}: hlex, rlex, diagproj pick the same initial term of every f_tau",
                not bad, bad[0] if bad else "")

    bad = []
    for d in range(1, max_d + 1):
        for v in enumerate_isotropic(d):
            ring = ring_for(v)
            hlex = make_order("hlex", ring)
            ranking = [ring.variables[i] for i in hlex.ranking]
            deglex = deglex_counterexample_order(ring, ranking)
            for k in range(max_degree + 1):
                sq = [m for m in monomials_of_degree(ring.ngens, k) if max(m, default=0) <= 1]
                for a, b in combinations(sq, 2):
                    if hlex.compare(a, b) != deglex.compare(a, b):
                        bad.append(f"v={v}")
                        break
    res.add("degree-lex over the order1 ranking agrees with hlex on square-free monomials",
            not bad, bad[0] if bad else "")
    return res


# --- homogeneity -------------------------------------------------------------------

def suite_homogeneity(max_d: int = 5, **_) -> SuiteResult:
    res = SuiteResult("homogeneity")
    for d in range(1, max_d + 1):
        bad = []
        count = 0
        for v in enumerate_isotropic(d):
            ring = ring_for(v)
            patch = PatchMatrix(v)
            for tau in enumerate_isotropic(d):
                f = f_tau(v, tau, ring, patch)
                count += 1
                k = v_degree(v, tau)
                if f.is_zero() or not f.is_homogeneous() or f.degree() != k:
                    bad.append(f"v={v} tau={tau}")
        res.add(f"d={d}: {count} Pfaffians f_tau homogeneous of the v-degree", not bad,
                bad[0] if bad else "")
    return res


# --- the two-block special case ----------------------------------------------------

def classical_pfaffian(M, idx: tuple[int, ...]):
    """Pfaffian of the principal submatrix of a skew-symmetric M by perfect matchings."""
    if not idx:
        return 1
    i, rest = idx[0], idx[1:]
    total = 0
    for pos, j in enumerate(rest):
        remaining = rest[:pos] + rest[pos + 1:]
        term = M[i][j] * classical_pfaffian(M, remaining)
        total = total + term if pos % 2 == 0 else total - term
    return total


def two_block_w(d: int, r: int) -> IsotropicIndex:
    """w = (2r-1, ..., d, 2d-2r+3, ..., 2d)."""
    return IsotropicIndex.of(list(range(2 * r - 1, d + 1)) + list(range(2 * d - 2 * r + 3, 2 * d + 1)))


def generic_block_pfaffians(d: int, r: int, ring: PolynomialRing) -> list:
    """All degree-r Pfaffians of the bottom d x d block, read as a classical skew matrix."""
    v = IsotropicIndex.of(range(1, d + 1))
    patch = PatchMatrix(v)
    # rows d+1..2d against columns d..1 turns anti-diagonal skew into ordinary skew
    M = [[patch.polynomial(d + i, d + 1 - k, ring) for k in range(1, d + 1)] for i in range(1, d + 1)]
    for i in range(d):
        for k in range(d):
            if M[i][k] != -M[k][i]:
                raise AssertionError("bottom block is not skew-symmetric")
    return [classical_pfaffian(M, S) for S in combinations(range(d), 2 * r)]


def same_ideal(A: list, B: list, order) -> bool:
    """Mutual normal-form reduction against reduced Groebner bases."""
    GA, GB_ = buchberger(A, order), buchberger(B, order)
    return all(reduce(b, GA, order).is_zero() for b in B) and all(reduce(a, GB_, order).is_zero() for a in A)


def suite_special_case(cases=((5, 2),), **_) -> SuiteResult:
    res = SuiteResult("special-case")
    for d, r in cases:
        with _Timer() as t:
            v = IsotropicIndex.of(range(1, d + 1))
            w = two_block_w(d, r)
            ring = ring_for(v)
            gens = generators(v, w, ring)
            classical = generic_block_pfaffians(d, r, ring)
            ok = same_ideal(gens, classical, make_order("hlex", ring))
        res.add(f"d={d}, r={r}, w={w}: generators and degree-{r} Pfaffians give the same ideal",
                ok and t.elapsed < 30, f"{len(gens)} vs {len(classical)} generators", t.elapsed)
    return res


# --- Hilbert functions -------------------------------------------------------------

def hilbert_agreement(v, w, max_k: int, field=QQ) -> tuple[bool, list[int], list[int]]:
    ring = ring_for(v, field)
    gens = generators(v, w, ring, above_v=False)
    order = make_order("hlex", ring)
    ideal = initial_ideal(buchberger(gens, order), order) if gens else MonomialIdeal(ring, [])
    by_count = [ideal.hilbert_function(k) for k in range(max_k + 1)]
    by_rank = [hilbert_function_by_rank(gens, k, ring) for k in range(max_k + 1)]
    return by_count == by_rank, by_count, by_rank


def suite_hilbert(max_k: int = 6, small_dims=(1, 2, 3), **_) -> SuiteResult:
    res = SuiteResult("hilbert")
    with _Timer() as t:
        ok, a, b = hilbert_agreement(IsotropicIndex.of(EXAMPLE_V), IsotropicIndex.of(EXAMPLE_W), max_k)
    res.add(f"d=5 example: standard-monomial count equals rank count for k <= {max_k}", ok,
            f"{a} vs {b}", t.elapsed)
    for d in small_dims:
        bad = []
        pairs = bruhat_pairs(d)
        for v, w in pairs:
            ok, a, b = hilbert_agreement(v, w, max_k)
            if not ok:
                bad.append(f"v={v} w={w}: {a} vs {b}")
        res.add(f"d={d}: {len(pairs)} pairs agree for k <= {max_k}", not bad, bad[0] if bad else "")
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "paper-example": suite_d5_example,
    "pfaffian-identities": suite_pfaffian_identities,
    "newform-props": suite_newform_props,
    "theorem-smalld": suite_theorem_smalld,
    "order-axioms": suite_order_axioms,
    "homogeneity": suite_homogeneity,
    "special-case": suite_special_case,
    "hilbert": suite_hilbert,
}


def run_suite(name: str, **kwargs) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    t0 = time.perf_counter()
    result = SUITES[name](**kwargs)
    result.seconds = time.perf_counter() - t0
    return result
