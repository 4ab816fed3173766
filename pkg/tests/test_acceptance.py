"""Acceptance suite: one line per criterion, each with its time budget.

Run under pytest (``pytest tests/test_acceptance.py -s``) or directly as a
script (``python tests/test_acceptance.py``).
"""

import time
from dataclasses import dataclass
from functools import lru_cache

import pytest

from orthocone.algebra import PrimeField
from orthocone.verify import run_suite


@dataclass
class Outcome:
    passed: bool
    seconds: float
    detail: str


@lru_cache(maxsize=None)
def _suite(name, **kw):
    t0 = time.perf_counter()
    res = run_suite(name, **kw)
    return res, time.perf_counter() - t0


def _checks(res, *prefixes):
    picked = [c for c in res.checks if c.name.startswith(prefixes)]
    assert picked, f"no checks named {prefixes} in {res.suite}"
    return picked


def _from_checks(checks, seconds) -> Outcome:
    bad = [c for c in checks if not c.passed]
    detail = "; ".join(f"{c.name}: {c.detail}" for c in bad) if bad else f"{len(checks)} checks"
    return Outcome(not bad, seconds, detail)


def _timed_checks(checks) -> float:
    return sum(c.seconds or 0.0 for c in checks)


def criterion_1() -> Outcome:
    res, _ = _suite("paper-example")
    checks = _checks(res, "generators equal")
    return _from_checks(checks, _timed_checks(checks))


def criterion_2() -> Outcome:
    res, _ = _suite("paper-example")
    checks = _checks(res, "-h*f1", "reduced hlex")
    return _from_checks(checks, _timed_checks(checks))


def criterion_3() -> Outcome:
    res, _ = _suite("paper-example")
    checks = _checks(res, "deglex")
    return _from_checks(checks, _timed_checks(checks))


def criterion_4() -> Outcome:
    res, t = _suite("theorem-smalld", dims=(2, 3, 4))
    return _from_checks(res.checks, t)


def criterion_5() -> Outcome:
    res, t = _suite("pfaffian-identities", trials=200, max_n=5, symbolic_n=4)
    return _from_checks(res.checks, t)


def criterion_6() -> Outcome:
    res, t = _suite("newform-props", dims=(3, 4, 5), max_len=4)
    return _from_checks(res.checks, t)


def criterion_7() -> Outcome:
    res, t = _suite("homogeneity", max_d=5)
    return _from_checks(res.checks, t)


def criterion_8() -> Outcome:
    res, t = _suite("special-case", cases=((5, 2),))
    return _from_checks(res.checks, t)


def criterion_9() -> Outcome:
    res, t = _suite("hilbert", max_k=6, small_dims=(1, 2, 3))
    return _from_checks(res.checks, t)


CRITERIA = {
    1: ("d=5 example generators", criterion_1, 1.0),
    2: ("extra element and a basis larger than five", criterion_2, 10.0),
    3: ("deglex picks agi", criterion_3, 1.0),
    4: ("square-free initial ideals agree across orders, d in 2..4", criterion_4, 600.0),
    5: ("Pfaffian identities over QQ and GF(32003)", criterion_5, 120.0),
    6: ("new-form properties, d in 3..5, chains of length <= 4", criterion_6, 300.0),
    7: ("homogeneity of f_tau, d <= 5", criterion_7, 60.0),
    8: ("two-block special case d=5, r=2", criterion_8, 30.0),
    9: ("Hilbert function by rank equals standard-monomial count", criterion_9, 300.0),
}


def evaluate(n: int) -> tuple[bool, str]:
    title, fn, budget = CRITERIA[n]
    out = fn()
    ok = out.passed and out.seconds < budget
    line = (f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}  "
            f"[{out.seconds:.2f}s of {budget:g}s]  {out.detail}")
    return ok, line


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    ok, line = evaluate(n)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


def test_criterion_1_over_prime_field():
    # the same generators come out over GF(32003)
    res = run_suite("paper-example", field=PrimeField(32003))
    assert res.passed, res.to_json()


if __name__ == "__main__":
    import sys

    results = [evaluate(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
