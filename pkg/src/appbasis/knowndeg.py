"""Canonical basis computation when the shifted minimal degree is known.

The pipeline composes the two partial linearizations with the column
reduction and a single uniform-order divide-and-conquer call:

1. column partial linearization at shift -delta balances the output degrees;
2. the expanded instance is column-reduced when it has at least as many
   columns as rows;
3. the remaining instance is overlapping-linearized to balance the orders;
4. one pm_basis call solves the balanced instance;
5. the sought rows are read off the leading block, compressed back, and
   normalized by the inverse leading matrix.
"""

import numpy as np

from .coldim import reduce_coldim
from .forms import BasisResult, normalize_to_popov
from .linearize import col_par_lin, overlapping_lin
from .pmbasis import pm_basis
from .pmbasis_util import owp_result
from .polymat import PolyMat, check_orders


def known_deg_appbasis(d, F, s, delta):
    """The s-Popov basis of A_d(F), given its s-minimal degree delta."""
    d = check_orders(d)
    m, n = F.m, F.n
    delta = tuple(int(x) for x in delta)
    if len(delta) != m or any(x < 0 for x in delta):
        raise ValueError("minimal degree must be a nonnegative m-tuple")
    sigma = sum(d)
    b = max(1, -(-sigma // m))
    cp = col_par_lin([-x for x in delta], b, max(-x for x in delta), F.p)
    mhat = cp.mhat
    # sort orders nonincreasing, permute columns of F accordingly
    perm = sorted(range(n), key=lambda j: (-d[j], j))
    dp = tuple(d[j] for j in perm)
    Fp = F.take_cols(perm)
    EF = (cp.expand @ Fp).truncate(dp)
    if n >= mhat:
        d_hat, F_hat, s_hat, R1 = reduce_coldim(dp, EF, cp.shift)
    else:
        d_hat, F_hat, s_hat = dp, EF, cp.shift
        R1 = owp_result(PolyMat.identity(F.p, mhat), (0,) * mhat)
    if len(d_hat) == 0:
        R2mat = PolyMat.identity(F.p, mhat)
    else:
        lin = overlapping_lin(d_hat, F_hat, b)
        t = list(s_hat) + [-b] * (lin.matrix.m - mhat)
        dmax = max(lin.orders)
        padded = lin.matrix.shift_cols([dmax - o for o in lin.orders])
        Pbar = pm_basis(dmax, padded, t)
        R2mat = Pbar.matrix.take(range(mhat), range(mhat))
    R = (R2mat @ R1.matrix @ cp.expand).take_rows(cp.block_ends())
    P = normalize_to_popov(R, delta)
    return BasisResult(P, tuple(range(m)), delta, "popov")
