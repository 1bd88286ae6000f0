"""Partial linearizations of approximant instances.

Two transformations are provided, plus the structural data relating an
overlapping linearization to the one with doubled degree parameter:

* column partial linearization (``col_par_lin``): expands the row dimension
  so that a basis with unbalanced column degrees can be recovered from a
  basis of the expanded instance whose degrees are uniformly small;
* overlapping linearization (``overlapping_lin``): splits high-order columns
  into overlapping slices so that all orders are at most twice the chosen
  degree parameter, at the price of extra selector rows and columns.
"""

from dataclasses import dataclass

import numpy as np

from .polymat import PolyMat, check_orders


@dataclass(frozen=True)
class ColParLin:
    """Row-expansion data: shift, expansion matrix, block sizes.

    ``expand`` is the mhat x m polynomial matrix E with block column i equal
    to (1, X^b, ..., X^{(alpha_i-1) b}); a row vector phat over the expanded
    instance is compressed to a row over the original one as phat @ E.
    """

    shift: tuple
    expand: PolyMat
    alphas: tuple
    degree: int

    @property
    def mhat(self):
        return sum(self.alphas)

    def block_ends(self):
        """0-based indices alpha_1 + ... + alpha_i - 1 of the pivot rows."""
        out, acc = [], 0
        for a in self.alphas:
            acc += a
            out.append(acc - 1)
        return out


def col_par_lin(s, degExp, sdiff, p):
    """Column partial linearization parameters for shift s.

    With t = s - max(s) + sdiff, each row i is split into
    alpha_i = max(ceil(-t_i / degExp), 1) rows; the expanded shift is
    (-degExp, ..., -degExp, -beta_i) per block with
    -t_i = (alpha_i - 1) degExp + beta_i (beta_i = -t_i when t_i >= 0).
    A row with expanded-shift pivot at a block end compresses to a row with
    pivot index at that block, which is how large output degrees are read
    off bases of the expanded instance.
    """
    s = [int(x) for x in s]
    m = len(s)
    smax = max(s)
    t = [x - smax + sdiff for x in s]
    alphas, betas = [], []
    for ti in t:
        if ti < 0:
            a = (-ti + degExp - 1) // degExp
            b = -ti - (a - 1) * degExp
        else:
            a, b = 1, -ti
        alphas.append(a)
        betas.append(b)
    shat = []
    for a, b in zip(alphas, betas):
        shat.extend([-degExp] * (a - 1))
        shat.append(-b)
    mhat = sum(alphas)
    L = (max(alphas) - 1) * degExp + 1
    c = np.zeros((mhat, m, L), dtype=np.int64)
    off = 0
    for i, a in enumerate(alphas):
        for k in range(a):
            c[off + k, i, k * degExp] = 1
        off += a
    E = PolyMat(p, c, copy=False)
    return ColParLin(tuple(shat), E, tuple(alphas), degExp)


def project_rows(Phat, lin):
    """Compress the pivot rows of an expanded basis back to the original m.

    Returns (rows, low_degree_flags): ``rows`` is the m x m matrix formed by
    the block-end rows of Phat @ E; ``low_degree_flags[i]`` is True when the
    block-end row of Phat has nonpositive expanded-shift row degree, in which
    case the corresponding pivot degree is not certified to exceed -t_i.
    """
    mat = Phat.matrix if hasattr(Phat, "matrix") else Phat
    ends = lin.block_ends()
    rdegs = mat.take_rows(ends).rdeg(lin.shift)
    flags = [not (r > 0) for r in rdegs]
    rows = (mat @ lin.expand).take_rows(ends)
    return rows, flags


def lift_back(Phat, m):
    """Leading principal m x m block of a basis of the overlapping instance.

    When the basis is ordered weak Popov under the stacked shift
    (-delta, -degExp, ..., -degExp) with degExp >= max(delta), this block is
    a -delta-ordered weak Popov basis of the original module.
    """
    mat = Phat.matrix if hasattr(Phat, "matrix") else Phat
    if mat.m < m or mat.n < m:
        raise ValueError("basis smaller than requested block")
    return mat.take(range(m), range(m))


@dataclass(frozen=True)
class OvlpLin:
    """Overlapping linearization of an instance (d, F) at degree degExp.

    ``matrix`` is the (m + ntilde) x (ncols) system whose top m rows hold the
    sliced columns of F and whose bottom rows are the 0/1 selectors; column
    group i starts at ``col_offsets[i]`` and has max(alphas[i], 1) columns;
    ``orders`` are the per-column truncation orders, all at most 2 degExp.
    """

    orders: tuple
    matrix: PolyMat
    alphas: tuple
    degree: int
    col_offsets: tuple
    row_offsets: tuple

    @property
    def ntilde(self):
        return self.matrix.m - (self.matrix.m - sum(max(a - 1, 0) for a in self.alphas))

    @property
    def m(self):
        return self.matrix.m - sum(max(a - 1, 0) for a in self.alphas)


def overlapping_lin(d, F, degExp):
    """Overlapping linearization of (d, F) with degree parameter degExp.

    Column i with order d_i = alpha_i degExp + beta_i (1 <= beta_i <= degExp,
    alpha_i = ceil(d_i/degExp - 1)) and slices f = f0 + f1 X^b + ... is
    replaced, when alpha_i >= 2, by the alpha_i overlapping columns
    f_j + f_{j+1} X^b at orders (2b, ..., 2b, b + beta_i), with a selector
    row attached to each column but the first.  Columns with d_i <= 2 degExp
    are kept as they are.
    """
    d = check_orders(d)
    m, n, p = F.m, F.n, F.p
    b = int(degExp)
    if b < 1:
        raise ValueError("degree parameter must be positive")
    alphas = [max((di + b - 1) // b - 1, 0) for di in d]
    ntil = sum(max(a - 1, 0) for a in alphas)
    ncols = sum(max(a, 1) for a in alphas)
    L = max(2 * b, max(d))
    c = np.zeros((m + ntil, ncols, L), dtype=np.int64)
    orders = []
    col_offsets = []
    row_offsets = []
    col = 0
    row = m
    for i, (di, a) in enumerate(zip(d, alphas)):
        col_offsets.append(col)
        row_offsets.append(row)
        fi = F.c[:, i, :]
        if a <= 1:
            c[:m, col, :di] = _slice(fi, 0, di)
            orders.append(di)
            col += 1
            continue
        beta = di - a * b
        for j in range(a):
            lo = _slice(fi, j * b, b)
            c[:m, col, : lo.shape[1]] = lo
            if j < a - 1:
                hi = _slice(fi, (j + 1) * b, b)
                orders.append(2 * b)
            else:
                hi = _slice(fi, (j + 1) * b, beta)
                orders.append(b + beta)
            c[:m, col, b : b + hi.shape[1]] = hi
            if j >= 1:
                c[row, col, 0] = 1
                row += 1
            col += 1
    mat = PolyMat(p, c, copy=False).trim()
    return OvlpLin(
        tuple(orders), mat, tuple(alphas), b, tuple(col_offsets), tuple(row_offsets)
    )


def _slice(entry_coeffs, lo, width):
    """Coefficient slice [lo, lo+width) of a (m, L) coefficient block."""
    L = entry_coeffs.shape[1]
    lo = min(lo, L)
    return entry_coeffs[:, lo : min(lo + width, L)]


def overlapping_q(prow, d, F, degExp):
    """The unique selector-column completion of an approximant p of A_d(F).

    For each column i split into alpha_i >= 2 slices and each slot
    j = 1, ..., alpha_i - 1, the completion is
    X^{-j degExp} (p . (f_i mod X^{j degExp})) truncated at order 2 degExp
    (degExp + beta_i for the last slot).  Returns a 1 x ntilde matrix, so
    that [p q] is an approximant of the linearized instance.
    """
    d = check_orders(d)
    b = int(degExp)
    lin = overlapping_lin(d, F, b)
    qs = []
    qorders = []
    for i, a in enumerate(lin.alphas):
        if a <= 1:
            continue
        beta = d[i] - a * b
        fi = F.take_cols([i])
        for j in range(1, a):
            head = fi.truncate(j * b)
            prod = (prow @ head).shift_cols(-j * b)
            order = 2 * b if j < a - 1 else b + beta
            qs.append(prod.truncate(order))
            qorders.append(order)
    if not qs:
        return PolyMat.zeros(F.p, 1, 0)
    return PolyMat.hstack(qs)


@dataclass(frozen=True)
class Doubling:
    """Structures relating the linearizations at degrees b and 2b.

    ``keep``: row indices (into the b-instance) whose conjugation brings the
    2b-instance rows to the front; ``sel_cols``: column indices of the
    b-instance matching the 2b-instance columns; ``mu``/``nu``: the orders of
    those columns at degrees b and 2b, with 0 <= nu - mu <= 2b entrywise;
    ``f2``: the 2b-linearization with zero rows inserted so that
    lin_b.matrix[:, sel_cols] == f2 mod X^mu.
    """

    lin: OvlpLin
    lin2: OvlpLin
    keep: tuple
    sel_cols: tuple
    mu: tuple
    nu: tuple
    f2: PolyMat


def doubling_structs(d, F, degExp):
    """Compute the Doubling data linking overlapping_lin at b and 2b."""
    d = check_orders(d)
    b = int(degExp)
    lin = overlapping_lin(d, F, b)
    lin2 = overlapping_lin(d, F, 2 * b)
    m = F.m
    keep = list(range(m))
    sel_cols = []
    for i, a in enumerate(lin.alphas):
        rho = a - 1
        for k in range(1, max(-(-rho // 2), 1)):
            keep.append(lin.row_offsets[i] + 2 * k - 1)
        if a <= 1:
            sel_cols.append(lin.col_offsets[i])
        else:
            for k in range(max(a // 2, 1)):
                sel_cols.append(lin.col_offsets[i] + 2 * k)
    mu = tuple(lin.orders[j] for j in sel_cols)
    nu = lin2.orders
    ntot = lin.matrix.m
    c = np.zeros((ntot, lin2.matrix.n, lin2.matrix.c.shape[2]), dtype=np.int64)
    c[keep] = lin2.matrix.c
    f2 = PolyMat(F.p, c, copy=False).trim()
    return Doubling(lin, lin2, tuple(keep), tuple(sel_cols), mu, tuple(nu), f2)
