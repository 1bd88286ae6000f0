"""Approximant bases for weakly unbalanced shifts.

Two specializations that beat the generic divide-and-conquer when the shift
is concentrated near its minimum or its maximum:

* ``shift_around_min``: solve overlapping linearizations with a degree
  parameter that doubles each round, discarding settled rows (those whose
  selector part is dominated and whose degree fits the current parameter);
* ``shift_around_max``: repeatedly column-expand the rows still to be found
  and harvest those certified by the expanded pivot degrees, finishing the
  few remaining rows with a direct column reduction + uniform-order solve.
"""

import numpy as np

from .coldim import reduce_coldim
from .forms import BasisResult
from .knowndeg import known_deg_appbasis
from .linearize import col_par_lin, doubling_structs, overlapping_lin
from .pmbasis import pad_orders, pm_basis
from .pmbasis_util import owp_result
from .polymat import NEG_INF, PolyMat, check_orders, residual


def _settled(P, m, b):
    """Rows [p q] with rdeg(q) < rdeg(p) <= b; their p part is a finished
    approximant of the original instance."""
    ntot = P.m
    degs = P.entry_degrees()
    out = set()
    for i in range(ntot):
        dp = int(degs[i, :m].max()) if m else -1
        dq = int(degs[i, m:].max()) if ntot > m else -1
        if dq < dp <= b and dp >= 0:
            out.add(i)
    return out


def _replace_rows(P, rows, sub):
    """Return P with the listed rows replaced by the rows of sub."""
    L = max(P.c.shape[2], sub.c.shape[2])
    c = np.zeros((P.m, P.n, L), dtype=np.int64)
    c[:, :, : P.c.shape[2]] = P.c
    c[rows, :, :] = 0
    c[rows, :, : sub.c.shape[2]] = sub.c
    return PolyMat(P.p, c, copy=False)


def shift_around_min(d, F, s, trace=None):
    """s-ordered weak Popov basis of A_d(F); fast when |s - min(s)| is small.

    ``trace``, if given, collects (degExp, settled_count) after each doubling
    round of the main loop.
    """
    d = check_orders(d)
    m, n = F.m, F.n
    s = [int(x) for x in s]
    if n >= m:
        perm = sorted(range(n), key=lambda j: (-d[j], j))
        dp = tuple(d[j] for j in perm)
        d_hat, F_hat, s_hat, R1 = reduce_coldim(dp, F.take_cols(perm), s)
        delta1 = R1.pivot_degree
        if len(d_hat):
            delta2 = shift_around_min(d_hat, F_hat, s_hat, trace).pivot_degree
        else:
            delta2 = (0,) * m
        delta = tuple(a + b for a, b in zip(delta1, delta2))
        return known_deg_appbasis(d, F, s, delta)
    smin = min(s)
    s0 = [x - smin for x in s]
    xi = sum(d) + sum(s0)
    b = -(-xi // m)
    lin = overlapping_lin(d, F, b)
    t = s0 + [0] * (lin.matrix.m - m)
    padded = lin.matrix.shift_cols([2 * b - o for o in lin.orders])
    P = pm_basis(2 * b, padded, t).matrix
    J = {i for i in _settled(P, m, b) if i < m}
    while len(J) < m:
        db = doubling_structs(d, F, b)
        Jc = [i for i in range(P.m) if i not in J]
        rem = [j for j in range(len(db.nu)) if db.nu[j] - db.mu[j] > 0]
        sub = P.take_rows(Jc)
        if rem:
            G = residual(
                sub,
                db.f2.take_cols(rem),
                tuple(db.nu[j] for j in rem),
                offsets=tuple(db.mu[j] for j in rem),
                strategy="split_rhs",
            )
            Gpad = G.shift_cols([2 * b - (db.nu[j] - db.mu[j]) for j in rem])
            t2 = [int(x) for x in sub.rdeg(t)]
            P2 = pm_basis(2 * b, Gpad, t2)
            sub = P2.matrix @ sub
            P = _replace_rows(P, Jc, sub)
        keep = list(db.keep)
        P = P.take(keep, keep)
        b *= 2
        t = s0 + [0] * (P.m - m)
        J |= {i for i in _settled(P, m, b) if i < m}
        if trace is not None:
            trace.append((b, len(J)))
    if P.m > m:
        P = P.take(range(m), range(m))
    delta = tuple(int(x) for x in np.diag(P.entry_degrees()))
    return owp_result(P, delta)


def shift_around_max(d, F, s, trace=None):
    """s-ordered weak Popov basis of A_d(F); fast when |max(s) - s| is small.

    ``trace``, if given, collects (undetermined_before, undetermined_after)
    for each iteration of the harvesting loop; the count at least halves.
    """
    d = check_orders(d)
    m, n = F.m, F.n
    p = F.p
    s = [int(x) for x in s]
    smax = max(s)
    theta = max(d)
    sigma = sum(d)
    gap = sum(smax - x for x in s)
    I = list(range(m))
    rows = {}
    while I and sigma + gap <= len(I) * theta:
        before = len(I)
        b = 1 + 2 * (gap // len(I))
        sI = [s[i] for i in I]
        cp = col_par_lin(sI, b, b, p)
        EF = (cp.expand @ F.take_rows(I)).truncate(d)
        Phat = shift_around_min(d, EF, cp.shift)
        ends = cp.block_ends()
        remaining = []
        for k, i in enumerate(I):
            rowk = Phat.matrix.row(ends[k])
            rdegk = rowk.rdeg(cp.shift)[0]
            if s[i] >= smax - b or (rdegk is not NEG_INF and rdegk > 0):
                rows[i] = ((rowk @ cp.expand), list(I))
            else:
                remaining.append(i)
        if trace is not None:
            trace.append((before, len(remaining)))
        if len(remaining) == before:
            break
        I = remaining
    if I:
        sI = [s[i] for i in I]
        perm = sorted(range(n), key=lambda j: (-d[j], j))
        dp = tuple(d[j] for j in perm)
        FI = F.take_rows(I).take_cols(perm)
        if n >= len(I):
            d_hat, F_hat, s_hat, R1 = reduce_coldim(dp, FI, sI)
            delta1 = R1.pivot_degree
        else:
            d_hat, F_hat, s_hat = dp, FI, sI
            delta1 = (0,) * len(I)
        if len(d_hat):
            dmax2, Fpad = pad_orders(d_hat, F_hat)
            delta2 = pm_basis(dmax2, Fpad, list(s_hat)).pivot_degree
        else:
            delta2 = (0,) * len(I)
        delta = tuple(a + b for a, b in zip(delta1, delta2))
        Pfin = known_deg_appbasis(d, F.take_rows(I), sI, delta)
        for k, i in enumerate(I):
            rows[i] = (Pfin.matrix.row(k), list(I))
    L = max(r.c.shape[2] for r, _ in rows.values())
    c = np.zeros((m, m, L), dtype=np.int64)
    for i, (r, cols) in rows.items():
        c[i, cols, : r.c.shape[2]] = r.c[0]
    P = PolyMat(p, c, copy=False).trim()
    delta = tuple(int(x) for x in np.diag(P.entry_degrees()))
    return owp_result(P, delta)
