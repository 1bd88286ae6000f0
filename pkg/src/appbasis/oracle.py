"""Slow reference algorithms and the verifier used as trust anchor.

The oracle runs its bulk arithmetic on the pure-numpy fallback kernels, never
on the compiled backend: a cross-validation oracle that shared the optimized
compute path could silently agree with its bugs.
"""

from dataclasses import dataclass

import numpy as np

from .kernels import _numpy_kernels as _slow
from .forms import BasisResult, check_form, membership_reduce, normalize_to_popov
from .mbasis import mbasis1
from .pmbasis_util import owp_result
from .polymat import PolyMat, check_orders, residual


def iterative_appbasis(d, F, s):
    """s-owp basis of A_d(F) by iterating the order-1 base case.

    Processes one coefficient level at a time: at level k, an order-1 basis
    of coefficient k of P F -- recomputed from scratch, restricted to the
    columns with remaining order -- is composed onto the accumulated basis,
    with the carried shift rdeg_s(P).  Obviously correct, deliberately
    unoptimized: no incremental residual state is carried between levels.
    """
    d = check_orders(d)
    p = F.p
    m, n = F.m, F.n
    maxd = max(d)
    lenF = F.c.shape[2]
    Pc = np.zeros((m, m, maxd + 1), dtype=np.int64)
    Pc[:, :, 0] = np.eye(m, dtype=np.int64)
    t = list(s)
    delta = [0] * m
    for k in range(maxd):
        active = [j for j in range(n) if d[j] > k]
        # coefficient of X^k in P @ F over the active columns, from scratch:
        # sum_j P_j F_{k-j} as one stacked constant product
        ts = [j for j in range(k + 1) if k - j < lenF]
        if ts:
            Prow = np.concatenate([Pc[:, :, j] for j in ts], axis=1)
            Fcol = np.concatenate([F.c[:, active, k - j] for j in ts], axis=0)
            C = _slow.const_matmul(Prow, Fcol, p)
        else:
            C = np.zeros((m, len(active)), dtype=np.int64)
        step = mbasis1(C, t, p)
        M0 = step.matrix.coeff(0)
        piv = [i for i in range(m) if step.pivot_degree[i] == 1]
        new = _slow.const_matmul(M0, Pc.reshape(m, -1), p).reshape(Pc.shape)
        for i in piv:
            new[i, :, 1:] = Pc[i, :, :-1]
            new[i, :, 0] = 0
        Pc = new
        for i in piv:
            delta[i] += 1
            t[i] += 1
    return owp_result(PolyMat(p, Pc, copy=False).trim(), delta)


def oracle_popov(d, F, s):
    """Canonical s-Popov basis through the iterative oracle: one pass to read
    the minimal degree, one pass at shift -delta, then normalization."""
    R1 = iterative_appbasis(d, F, s)
    delta = R1.pivot_degree
    R2 = iterative_appbasis(d, F, [-x for x in delta])
    P = normalize_to_popov(R2.matrix, delta)
    return BasisResult(P, tuple(range(F.m)), delta, "popov")


@dataclass(frozen=True)
class VerifyReport:
    approximant: bool
    form: bool
    degrees: bool
    generation: bool

    @property
    def ok(self):
        return self.approximant and self.form and self.degrees and self.generation

    def __str__(self):
        def f(b):
            return "ok" if b else "FAIL"

        return (
            f"approximant={f(self.approximant)} form={f(self.form)} "
            f"degrees={f(self.degrees)} generation={f(self.generation)}"
        )


def verify_basis(P, d, F, s):
    """Four-flag report for a candidate basis of A_d(F).

    (a) approximant: P F = 0 mod X^d; (b) form: per P's form tag;
    (c) degree budget: sum(delta) <= sigma and max(delta) <= max(d);
    (d) generation: every row of the iterative oracle basis reduces to zero
        against P, and the determinant degrees agree (pivot product).
    """
    d = check_orders(d)
    mat = P.matrix if isinstance(P, BasisResult) else P
    form = P.form if isinstance(P, BasisResult) else "owp"
    sigma = sum(d)
    a = residual(mat, F, d, strategy="naive").is_zero()
    try:
        b = check_form(mat, list(s), form)
    except Exception:
        b = False
    if isinstance(P, BasisResult):
        delta = P.pivot_degree
    else:
        delta = tuple(int(x) for x in np.diag(mat.entry_degrees()))
    c = sum(delta) <= sigma and (max(delta) if delta else 0) <= max(d)
    gen = False
    if b:
        oracle = iterative_appbasis(d, F, s)
        gen = sum(oracle.pivot_degree) == sum(delta)
        if gen:
            for i in range(mat.m):
                if not membership_reduce(oracle.matrix.row(i), mat, list(s)).is_zero():
                    gen = False
                    break
    return VerifyReport(a, b, c, gen)


def matmul_embed(A, B, solver=None, **solver_kwargs):
    """Product A @ B read off an approximant basis, per the kernel-basis
    embedding: stack [[X^{2d+1} I, B], [-X^{2d+1} A, X^{2d+1} I], [-I, 0],
    [0, -I]] at uniform order 6d+4; the last 2n rows of the canonical basis
    are [[I, 0, X^{2d+1} I, B], [A, I, 0, AB + X^{2d+1} I]]."""
    if A.m != A.n or B.m != B.n or A.m != B.m or A.p != B.p:
        raise ValueError("matmul_embed requires equal square matrices")
    if solver is None:
        from .solver import popov_appbasis

        solver = popov_appbasis
    p = A.p
    n = A.m
    dA = A.deg if A.deg != float("-inf") else 0
    dB = B.deg if B.deg != float("-inf") else 0
    dd = int(max(dA, dB, 0))
    t = 2 * dd + 1
    I = PolyMat.identity(p, n)
    Z = PolyMat.zeros(p, n, n)
    Xt = I.shift_cols(t)
    sys = PolyMat.vstack(
        [
            PolyMat.hstack([Xt, B]),
            PolyMat.hstack([A.scale_entry(p - 1).shift_cols(t), Xt]),
            PolyMat.hstack([I.scale_entry(p - 1), Z]),
            PolyMat.hstack([Z, I.scale_entry(p - 1)]),
        ]
    )
    orders = (6 * dd + 4,) * (2 * n)
    basis = solver(orders, sys, [0] * (4 * n), **solver_kwargs)
    bottom = basis.matrix.take(range(3 * n, 4 * n), range(3 * n, 4 * n))
    return (bottom - Xt).trim()
