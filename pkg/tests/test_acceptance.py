"""Acceptance gate: end-to-end criteria over the full algorithm stack.

Each test prints a single "acceptance: ...: PASS/FAIL" line (run pytest with
-s or check captured output) and asserts the same condition.
"""

import time

import numpy as np
import pytest

from appbasis.fileio import serialize
from appbasis.forms import check_form, membership_reduce, normalize_to_popov, pivot_profile
from appbasis.kernels import cython_available, set_backend
from appbasis.knowndeg import known_deg_appbasis
from appbasis.linearize import col_par_lin, doubling_structs, overlapping_lin, overlapping_q
from appbasis.oracle import iterative_appbasis, matmul_embed, verify_basis
from appbasis.pmbasis import pad_orders, pm_basis, popov_pm_basis
from appbasis.polymat import PolyMat, residual
from appbasis.solver import popov_appbasis
from appbasis.unbalanced import shift_around_max, shift_around_min

P = 998244353

REPORTS = []


def _report(name, ok):
    line = f"acceptance: {name}: {'PASS' if ok else 'FAIL'}"
    REPORTS.append(line)
    print(f"\n{line}")
    return ok


def _random_orders(rng, n, total):
    """n positive orders with sum at most total."""
    cap = max(total // n, 1)
    return tuple(int(x) for x in rng.integers(1, cap + 1, size=n))


def _shift(cls, rng, m, sigma):
    if cls == 0:
        return [0] * m
    if cls == 1:
        return [int(x) for x in rng.integers(-10, 11, size=m)]
    return [sigma * (i + 1) for i in range(m)]


@pytest.fixture(scope="module")
def canonical_corpus():
    """500+ seeded instances with the four solver outputs compared byte-wise."""
    rng = np.random.default_rng(20240601)
    items = []
    agree = True
    t0 = time.perf_counter()
    for i in range(504):
        m = int(rng.integers(1, 9))
        n = int(rng.integers(1, 9))
        d = _random_orders(rng, n, 48)
        sigma = sum(d)
        F = PolyMat.random(P, m, n, d, rng)
        s = _shift(i % 3, rng, m, sigma)
        a = popov_appbasis(d, F, s)
        b = popov_pm_basis(d, F, s)
        c = known_deg_appbasis(d, F, s, b.pivot_degree)
        it = iterative_appbasis(d, F, s)
        e = normalize_to_popov(it.matrix, it.pivot_degree)
        blobs = {
            serialize(a.matrix).encode(),
            serialize(b.matrix).encode(),
            serialize(c.matrix).encode(),
            serialize(e).encode(),
        }
        agree = agree and len(blobs) == 1
        items.append((d, F, s, a))
    return items, agree, time.perf_counter() - t0


def test_canonical_agreement_500_instances(canonical_corpus):
    items, agree, elapsed = canonical_corpus
    ok = agree and len(items) >= 500 and elapsed < 60.0
    assert _report(
        f"canonical agreement ({len(items)} instances, {elapsed:.1f}s)", ok)


def test_full_verification_of_corpus(canonical_corpus):
    items, _, _ = canonical_corpus
    ok = True
    for d, F, s, res in items:
        rep = verify_basis(res.matrix, d, F, s)
        ok = ok and rep.approximant and rep.form and rep.degrees and rep.generation
    assert _report(f"full verification ({len(items)} bases, 4 flags)", ok)


def test_pm_basis_degree_bound():
    rng = np.random.default_rng(7)
    ok = True
    for _ in range(200):
        m = int(rng.integers(1, 7))
        n = int(rng.integers(1, 7))
        sigma = int(rng.integers(1, 33))
        F = PolyMat.random(P, m, n, (sigma,) * n, rng)
        s = [int(x) for x in rng.integers(-8, 9, size=m)]
        B = pm_basis(sigma, F, s)
        ok = ok and B.matrix.deg <= sigma
    assert _report("pm_basis degree bound (200 instances)", ok)


def test_unbalanced_shift_algorithms():
    rng = np.random.default_rng(11)
    ok_min = ok_max = ok_halving = True
    for k in range(300):
        m = int(rng.integers(2, 8))
        n = int(rng.integers(1, m))
        d = _random_orders(rng, n, 24)
        sigma = sum(d)
        F = PolyMat.random(P, m, n, d, rng)
        base = int(rng.integers(-15, 16))
        ref = None

        s = [base + int(x) for x in rng.integers(0, sigma + 1, size=m)]
        got = shift_around_min(d, F, s)
        ref = popov_pm_basis(d, F, s)
        ok_min = ok_min and verify_basis(got.matrix, d, F, s).ok
        prof = pivot_profile(got.matrix, s)
        ok_min = ok_min and prof.degree == ref.pivot_degree
        ok_min = ok_min and prof.index == ref.pivot_index

        s = [base - int(x) for x in rng.integers(0, sigma + 1, size=m)]
        trace = []
        got = shift_around_max(d, F, s, trace=trace)
        ref = popov_pm_basis(d, F, s)
        ok_max = ok_max and verify_basis(got.matrix, d, F, s).ok
        prof = pivot_profile(got.matrix, s)
        ok_max = ok_max and prof.degree == ref.pivot_degree
        for before, remaining in trace:
            ok_halving = ok_halving and 2 * remaining <= before + (before % 2)
    ok = ok_min and ok_max and ok_halving
    assert _report("unbalanced-shift algorithms (300 instances each class)", ok)


def test_matmul_embedding():
    rng = np.random.default_rng(13)
    ok = True
    t0 = time.perf_counter()
    for _ in range(50):
        n = int(rng.integers(1, 5))
        deg = int(rng.integers(0, 6))
        A = PolyMat.random(P, n, n, (deg + 1,) * n, rng)
        B = PolyMat.random(P, n, n, (deg + 1,) * n, rng)
        ok = ok and matmul_embed(A, B) == A @ B
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 10.0
    assert _report(f"matrix-multiplication embedding (50 pairs, {elapsed:.1f}s)", ok)


def test_linearization_identities():
    rng = np.random.default_rng(17)
    ok_colpar = ok_uniq = ok_doubling = True

    # module equality through the expansion matrix E
    for _ in range(100):
        m = int(rng.integers(1, 4))
        n = int(rng.integers(1, 4))
        d = _random_orders(rng, n, 12)
        F = PolyMat.random(P, m, n, d, rng)
        s = [int(x) for x in rng.integers(-6, 4, size=m)]
        b = int(rng.integers(1, 4))
        cp = col_par_lin(s, b, 0, P)
        EF = (cp.expand @ F).truncate(d)
        sigma, Fp = pad_orders(d, EF)
        Phat = pm_basis(sigma, Fp, list(cp.shift))
        ok_colpar = ok_colpar and residual(
            Phat.matrix @ cp.expand, F, d, strategy="naive").is_zero()
        ref = popov_pm_basis(d, F, s)
        starts = [e - (a - 1) for e, a in zip(cp.block_ends(), cp.alphas)]
        for i in range(m):
            row = ref.matrix.row(i)
            c = np.zeros((1, cp.mhat, row.c.shape[2]), dtype=np.int64)
            c[0, starts, :] = row.c[0]
            red = membership_reduce(PolyMat(P, c), Phat.matrix, list(cp.shift))
            ok_colpar = ok_colpar and red.is_zero()

    # unique-q correspondence for low-degree approximants
    for _ in range(100):
        m = int(rng.integers(1, 4))
        n = int(rng.integers(1, 4))
        d = _random_orders(rng, n, 10)
        F = PolyMat.random(P, m, n, d, rng)
        ref = popov_pm_basis(d, F, [0] * m)
        b = max(max(ref.pivot_degree), 1)
        lin = overlapping_lin(d, F, b)
        for i in range(m):
            prow = ref.matrix.row(i)
            if prow.deg > b:
                continue
            q = overlapping_q(prow, d, F, b)
            full = PolyMat.hstack([prow, q]) if q.n else prow
            ok_uniq = ok_uniq and residual(
                full, lin.matrix, lin.orders, strategy="naive").is_zero()

    # doubling identities between the degree-b and degree-2b linearizations
    for _ in range(100):
        n = int(rng.integers(1, 4))
        d = tuple(int(x) for x in rng.integers(1, 13, size=n))
        b = int(rng.integers(1, 5))
        F = PolyMat.random(P, 2, n, d, rng)
        db = doubling_structs(d, F, b)
        diffs = [nu - mu for nu, mu in zip(db.nu, db.mu)]
        ok_doubling = ok_doubling and all(0 <= x <= 2 * b for x in diffs)
        sel = db.lin.matrix.take_cols(db.sel_cols)
        ok_doubling = ok_doubling and sel.truncate(db.mu) == db.f2.truncate(db.mu)
    ok = ok_colpar and ok_uniq and ok_doubling
    assert _report("linearization identities (100 instances each)", ok)


def test_performance_smoke():
    if not cython_available():
        assert _report("performance smoke (no transform backend built)", False)
    m = 32
    sigma = 256
    rng = np.random.default_rng(19)
    F = PolyMat.random(P, m, m, (sigma,) * m, rng)
    s = [0] * m
    set_backend("cython")
    try:
        t0 = time.perf_counter()
        fast = pm_basis(sigma, F, s)
        t_fast = time.perf_counter() - t0
        t0 = time.perf_counter()
        slow = iterative_appbasis((sigma,) * m, F, s)
        t_slow = time.perf_counter() - t0
    finally:
        set_backend("auto")
    same = pivot_profile(fast.matrix, s).degree == slow.pivot_degree
    ratio = t_slow / t_fast
    ok = same and t_fast < 5.0 and ratio >= 10.0
    assert _report(
        f"performance smoke (pm_basis {t_fast:.2f}s, iterative {t_slow:.2f}s, "
        f"ratio {ratio:.1f}x)", ok)
