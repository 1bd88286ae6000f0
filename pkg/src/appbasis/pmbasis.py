"""Divide-and-conquer approximant basis for uniform order, and the
canonicalizing double pass returning the shifted Popov basis."""

from .forms import BasisResult, normalize_to_popov
from .mbasis import mbasis1
from .polymat import NEG_INF, check_orders, residual
from .pmbasis_util import owp_result


def pm_basis(sigma, F, s):
    """s-ordered-weak-Popov basis of A_{(sigma,...,sigma)}(F), degree <= sigma.

    Recursive halving: solve at order ceil(sigma/2), push the residual
    G = (X^{-h} P1 F) mod X^{sigma-h}, solve at order floor(sigma/2) with the
    carried shift rdeg_s(P1), and return P2 @ P1.
    """
    if sigma < 1:
        raise ValueError("order must be positive")
    if F.deg is not NEG_INF and F.deg >= sigma:
        raise ValueError("deg(F) must be < sigma")
    if sigma == 1:
        res = mbasis1(F.coeff(0), s, F.p)
        return owp_result(res.matrix, res.pivot_degree)
    h = (sigma + 1) // 2
    P1 = pm_basis(h, F.truncate(h), s)
    n = F.n
    G = residual(P1.matrix, F, (sigma,) * n, offsets=(h,) * n, strategy="split_rhs")
    s2 = [si + di for si, di in zip(s, P1.pivot_degree)]
    P2 = pm_basis(sigma - h, G, s2)
    mat = P2.matrix @ P1.matrix
    delta = tuple(a + b for a, b in zip(P1.pivot_degree, P2.pivot_degree))
    return owp_result(mat, delta)


def pad_orders(d, F):
    """Uniformize orders: A_d(F) = A_{(max d,...,max d)}(F X^{max(d)-d})."""
    d = check_orders(d)
    dmax = max(d)
    return dmax, F.shift_cols([dmax - dj for dj in d])


def popov_pm_basis(d, F, s):
    """The unique s-Popov basis of A_d(F), by two pm_basis passes.

    The first pass reads the minimal degree delta off the pivot profile; the
    second runs with shift -delta and is normalized by its leading matrix.
    """
    d = check_orders(d)
    dmax, Fp = pad_orders(d, F)
    R1 = pm_basis(dmax, Fp, list(s))
    delta = R1.pivot_degree
    R2 = pm_basis(dmax, Fp, [-x for x in delta])
    P = normalize_to_popov(R2.matrix, delta)
    return BasisResult(P, tuple(range(F.m)), delta, "popov")
