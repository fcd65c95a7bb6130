"""Acceptance criteria, exact comparisons only.

Run with ``pytest -s tests/test_acceptance.py`` (or execute this file) to see
one PASS/FAIL line per criterion.
"""
import io
import json
import time
from fractions import Fraction as F

from dstir.cli import main
from dstir.exactalg import LambdaPoly
from dstir.identities import IdentityId, check
from dstir.numbers import (
    StirlingKind,
    bell_gf_coeff,
    bell_poly,
    gf_coeff,
    laguerre_classical,
    laguerre_deg,
    laguerre_gf_coeff,
    r_stirling2,
    r_stirling2_gf,
    s1_classical,
    s2_classical,
    s2_lambda,
    triangle,
    unsigned_s1_lambda,
)
from dstir import series as ser
from oracles import count_partitions, signed_cycle_number

LAM_GRID = (F(1, 2), F(-1, 2), F(1, 3), F(-1, 3), F(2, 5), F(-3, 7))
X_GRID = (F(1, 2), F(-1, 3), F(2), F(5, 4))
ALPHA_GRID = (F(-1, 2), F(0), F(1, 3), F(2))


def report(name, ok, detail=""):
    print(f"\n[{'PASS' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else ""))
    assert ok, detail


def test_identity_suite():
    out = io.StringIO()
    t0 = time.perf_counter()
    code = main(["verify", "--ids", "all", "--nmax", "12", "--mode", "defaults",
                 "--format", "json"], stdout=out)
    elapsed = time.perf_counter() - t0
    doc = json.loads(out.getvalue())
    bad = [r["id"] for r in doc["reports"] if r["status"] != r["expected"]]
    report(
        "1 identity suite (verify --ids all --nmax 12, exit 0, < 60 s)",
        code == 0 and elapsed < 60,
        f"exit {code}, {elapsed:.1f} s, unexpected outcome: {bad}",
    )


def test_inversion():
    s1 = triangle(StirlingKind.S1_LAMBDA, 20)
    s2 = triangle(StirlingKind.S2_LAMBDA, 20)
    ok = True
    for a, b in ((s2, s1), (s1, s2)):
        for n in range(21):
            for m in range(21):
                v = sum((a[n, k] * b[k, m] for k in range(21)), LambdaPoly())
                ok &= v == (1 if n == m else 0)
    report("2 inversion of the n <= 20 matrices", ok)


def test_dual_routes():
    ok = True
    for kind in (StirlingKind.S1_LAMBDA, StirlingKind.S2_LAMBDA, StirlingKind.LAH):
        tri = triangle(kind, 12)
        ok &= all(gf_coeff(kind, n, k) == tri[n, k] for n in range(13) for k in range(n + 1))
    ok &= all(
        r_stirling2(n, k, r) == r_stirling2_gf(n, k, r)
        for r in range(5) for n in range(13) for k in range(n + 1)
    )
    ok &= all(
        bell_poly(n).evaluate(x) == bell_gf_coeff(n, x)
        for x in (F(1), F(1, 2), F(-2)) for n in range(11)
    )
    report("3 recurrence vs generating function", ok)


def test_classical_limits():
    ok = True
    for kind, classical in ((StirlingKind.S1_LAMBDA, s1_classical),
                            (StirlingKind.S2_LAMBDA, s2_classical)):
        tri = triangle(kind, 12)
        ok &= all(tri[n, k](0) == classical(n, k) for n in range(13) for k in range(n + 1))
    for n in range(9):
        for k in range(n + 1):
            ok &= s2_classical(n, k) == count_partitions(n, k)
            ok &= s1_classical(n, k) == signed_cycle_number(n, k)
    ok &= s2_classical(4, 2) == 7 and sum(s2_classical(4, k) for k in range(5)) == 15
    report("4 classical limits and brute-force oracles", ok)


def test_series_round_trips():
    N = 16
    t = ser.variable(N)
    log1p = ser.deg_log(N)
    e = ser.deg_exp(1, N)
    ok = e.compose(log1p) == 1 + t
    ok &= log1p.compose(e - 1) == t
    report("5 series round trips to order 16", ok)


def test_laguerre():
    ok = True
    for n in range(9):
        for a in ALPHA_GRID:
            for x in X_GRID:
                for lam in LAM_GRID:
                    if 1 + lam * x == 0:
                        continue
                    ok &= laguerre_gf_coeff(n, a, x, lam) == laguerre_deg(n, a, x, lam)
                ok &= laguerre_deg(n, a, x, 0) == laguerre_classical(n, a, x)
    report("6 Laguerre generating function vs closed form", ok)


def test_typo_probes():
    probe = check(IdentityId.T13probe, 12)
    cx = probe.counterexample.to_dict()["params"] if probe.counterexample else None
    fixed = check(IdentityId.T13, 12)
    e57 = check(IdentityId.E57, 12)
    ok = probe.status == "fail" and cx == {"n": 2, "p": 1}
    ok &= fixed.status == "pass" and e57.status == "pass"
    report("7 printed form fails at (2,1); corrected forms pass", ok,
           f"probe {probe.status} at {cx}, corrected {fixed.status}/{e57.status}")


def test_degree_bounds():
    ok = True
    for kind in (StirlingKind.S1_LAMBDA, StirlingKind.S2_LAMBDA, StirlingKind.UNSIGNED_S1_LAMBDA):
        tri = triangle(kind, 12)
        ok &= all(tri[n, k].degree <= n - k for n in range(13) for k in range(n + 1))
    detail = f"degree bounds {'hold' if ok else 'violated'}"
    for n in range(13):
        for l in range(n + 1):
            rhs = sum((unsigned_s1_lambda(n, k) * s2_lambda(k, l) for k in range(l, n + 1)),
                      LambdaPoly())
            if rhs.degree > 0:
                ok = False
                detail += f"; lah expansion rhs at (n,l)=({n},{l}) is {rhs} (not λ-free)"
                break
        else:
            continue
        break
    report("8 degree bounds and λ-free lah expansion", ok, detail)


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main(["-s", "-q", __file__]))
