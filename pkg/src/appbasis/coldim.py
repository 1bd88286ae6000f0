"""Column-dimension reduction: a logarithmic ladder of PM-Basis calls on
power-of-two order slices, leaving an instance with fewer columns than rows."""

from .mbasis import mbasis1
from .pmbasis import pm_basis
from .pmbasis_util import owp_result
from .polymat import check_orders, residual


def reduce_coldim(d, F, s):
    """Reduce an instance with n >= m columns to nu < m columns.

    Requires d sorted nonincreasing.  Returns (d_hat, F_hat, s_hat, P) with
    P an s-owp basis of A_{d - (d_hat, 0)}(F), s_hat = rdeg_s(P), and, for
    any basis Q of A_{d_hat}(F_hat), Q @ P a basis of A_d(F).
    """
    d = check_orders(d)
    m, n = F.m, F.n
    if n < m:
        raise ValueError("reduce_coldim requires n >= m")
    if any(d[j] < d[j + 1] for j in range(n - 1)):
        raise ValueError("orders must be nonincreasing")
    dm = d[m - 1]
    # power-of-two rounding for the trailing orders, additive lift in front
    dt = [0] * n
    for j in range(m - 1, n):
        dt[j] = 1 << (d[j] - 1).bit_length()
    for j in range(m - 1):
        dt[j] = d[j] + dt[m - 1] - dm
    Ft = F.shift_cols([dt[j] - d[j] for j in range(n)])
    ell = dt[m - 1].bit_length() - 1
    nu = sum(1 for x in dt if x > (1 << ell))
    base = mbasis1(Ft.coeff(0), list(s), F.p)
    P, delta = base.matrix, list(base.pivot_degree)
    t = [si + di for si, di in zip(s, delta)]
    for i in range(1, ell + 1):
        h = 1 << (i - 1)
        mu = sum(1 for x in dt if x >= (1 << i))
        cols = list(range(mu))
        G = residual(
            P, Ft.take_cols(cols), (2 * h,) * mu, offsets=(h,) * mu, strategy="split_rhs"
        )
        Pi = pm_basis(h, G, t)
        P = Pi.matrix @ P
        delta = [a + b for a, b in zip(delta, Pi.pivot_degree)]
        t = [si + di for si, di in zip(s, delta)]
    d_hat = tuple(d[j] - dm for j in range(nu))
    s_hat = tuple(t)
    if nu:
        F_hat = residual(
            P, F.take_cols(range(nu)), tuple(d[:nu]), offsets=(dm,) * nu, strategy="split_rhs"
        )
    else:
        from .polymat import PolyMat

        F_hat = PolyMat.zeros(F.p, m, 0)
    return d_hat, F_hat, s_hat, owp_result(P, delta)
