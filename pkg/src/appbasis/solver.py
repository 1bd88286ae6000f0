"""Top-level divide-and-conquer computation of the canonical basis.

The recursion splits the order sum in half (possibly inside one column),
solves both halves, and uses the recovered minimal degree to finish with the
known-degree pipeline, which yields the unique s-Popov basis.  Instances
with at least as many columns as rows are first column-reduced; this branch
can only be entered at the top level since both reductions and splits keep
the column dimension below the row dimension afterwards.
"""

from . import config
from .coldim import reduce_coldim
from .forms import BasisResult
from .knowndeg import known_deg_appbasis
from .pmbasis import popov_pm_basis
from .polymat import PolyMat, check_orders, drop_zero_orders, residual


def popov_appbasis(d, F, s, base_case=None):
    """The s-Popov basis of A_d(F).

    ``base_case``: order-sum threshold below which the double pm_basis pass
    is used directly; affects performance only, never the (canonical) output.
    """
    d, F = drop_zero_orders(d, F)
    m, n = F.m, F.n
    s = [int(x) for x in s]
    if base_case is None:
        base_case = config.SOLVER_BASE_CASE
    if n == 0:
        return BasisResult(
            PolyMat.identity(F.p, m), tuple(range(m)), (0,) * m, "popov"
        )
    d = check_orders(d)
    sigma = sum(d)
    if sigma <= max(m, base_case):
        return popov_pm_basis(d, F, s)
    if n >= m:
        perm = sorted(range(n), key=lambda j: (-d[j], j))
        dp = tuple(d[j] for j in perm)
        d_hat, F_hat, s_hat, R1 = reduce_coldim(dp, F.take_cols(perm), s)
        delta1 = R1.pivot_degree
        if len(d_hat):
            delta2 = popov_appbasis(d_hat, F_hat, s_hat, base_case).pivot_degree
        else:
            delta2 = (0,) * m
        delta = tuple(a + b for a, b in zip(delta1, delta2))
        return known_deg_appbasis(d, F, s, delta)
    # split the order sum in half, possibly inside column i0
    half = sigma // 2
    acc = 0
    for i0, di in enumerate(d):
        if acc + di >= half:
            break
        acc += di
    dsplit = half - acc  # portion of column i0 in the first half
    if dsplit > 0:
        d1 = d[:i0] + (dsplit,)
        F1 = F.take_cols(range(i0 + 1)).truncate(d1)
    else:
        d1 = d[:i0]
        F1 = F.take_cols(range(i0)).truncate(d1)
    P1 = popov_appbasis(d1, F1, s, base_case)
    delta1 = P1.pivot_degree
    offsets = (dsplit,) + (0,) * (n - i0 - 1)
    G = residual(
        P1.matrix, F.take_cols(range(i0, n)), d[i0:], offsets=offsets,
        strategy="split_lhs",
    )
    d2 = (d[i0] - dsplit,) + d[i0 + 1 :]
    d2, G = drop_zero_orders(d2, G)
    s2 = [a + b for a, b in zip(s, delta1)]
    if len(d2):
        delta2 = popov_appbasis(d2, G, s2, base_case).pivot_degree
    else:
        delta2 = (0,) * m
    delta = tuple(a + b for a, b in zip(delta1, delta2))
    return known_deg_appbasis(d, F, s, delta)
