"""Dense polynomial matrices over F_p and truncated/residual products.

A PolyMat stores an (m, n, L) int64 coefficient array, low degree first,
entries in [0, p).  The zero polynomial has degree NEG_INF (a float sentinel
that compares below every integer, so shift arithmetic never sees -1).
"""

import numpy as np

from . import kernels
from .field import validate_modulus

NEG_INF = float("-inf")


def check_orders(d):
    d = tuple(int(x) for x in d)
    if any(x < 1 for x in d):
        raise ValueError(f"orders must be positive, got {d}")
    return d


def drop_zero_orders(d, F):
    """Canonicalize an instance: drop columns whose order is 0."""
    keep = [j for j, x in enumerate(d) if x > 0]
    if len(keep) == len(d):
        return check_orders(d), F
    return tuple(int(d[j]) for j in keep), F.take_cols(keep)


class PolyMat:
    __slots__ = ("p", "c")

    def __init__(self, p, coeffs, copy=True, reduce=False):
        self.p = p
        c = np.array(coeffs, dtype=np.int64, copy=copy)
        if c.ndim != 3:
            raise ValueError("coefficient array must be (m, n, L)")
        if c.shape[2] == 0:
            c = np.zeros(c.shape[:2] + (1,), dtype=np.int64)
        if reduce:
            c %= p
        self.c = c

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, p, m, n, length=1):
        return cls(p, np.zeros((m, n, length), dtype=np.int64), copy=False)

    @classmethod
    def identity(cls, p, m):
        c = np.zeros((m, m, 1), dtype=np.int64)
        c[:, :, 0] = np.eye(m, dtype=np.int64)
        return cls(p, c, copy=False)

    @classmethod
    def from_entries(cls, p, entries):
        """entries: list of m rows, each a list of coefficient lists."""
        m = len(entries)
        n = len(entries[0]) if m else 0
        L = max((len(e) for row in entries for e in row), default=0)
        L = max(L, 1)
        c = np.zeros((m, n, L), dtype=np.int64)
        for i, row in enumerate(entries):
            for j, e in enumerate(row):
                for k, v in enumerate(e):
                    c[i, j, k] = v % p
        return cls(p, c, copy=False)

    @classmethod
    def random(cls, p, m, n, orders, rng):
        """Random F with cdeg(F) < orders, uniform coefficients."""
        orders = check_orders(orders)
        L = max(orders) if orders else 1
        c = np.zeros((m, n, L), dtype=np.int64)
        for j, dj in enumerate(orders):
            c[:, j, :dj] = rng.integers(0, p, size=(m, dj))
        return cls(p, c, copy=False)

    # -- basic structure ----------------------------------------------------

    @property
    def m(self):
        return self.c.shape[0]

    @property
    def n(self):
        return self.c.shape[1]

    def copy(self):
        return PolyMat(self.p, self.c, copy=True)

    def trim(self):
        """Drop trailing all-zero coefficient planes (keep length >= 1)."""
        if self.c.shape[2] == 1 or self.c[:, :, -1].any():
            return self
        nz = np.nonzero(self.c.any(axis=(0, 1)))[0]
        L = int(nz[-1]) + 1 if nz.size else 1
        if L == self.c.shape[2]:
            return self
        return PolyMat(self.p, self.c[:, :, :L], copy=True)

    def entry_degrees(self):
        """Integer (m, n) matrix of entry degrees, -1 marking zero entries."""
        mask = self.c != 0
        L = self.c.shape[2]
        return np.where(mask.any(axis=2), L - 1 - mask[:, :, ::-1].argmax(axis=2), -1)

    @property
    def deg(self):
        d = self.entry_degrees()
        dm = int(d.max()) if d.size else -1
        return NEG_INF if dm < 0 else dm

    def is_zero(self):
        return not self.c.any()

    def coeff(self, k):
        """Constant (m, n) matrix of X^k coefficients."""
        if 0 <= k < self.c.shape[2]:
            return self.c[:, :, k].copy()
        return np.zeros((self.m, self.n), dtype=np.int64)

    def rdeg(self, s=None):
        """Shifted row degrees; NEG_INF for zero rows."""
        d = self.entry_degrees()
        if s is None:
            s = np.zeros(self.n, dtype=np.int64)
        else:
            s = np.asarray(s, dtype=np.int64)
        vals = d + s[None, :]
        out = []
        for i in range(self.m):
            nz = d[i] >= 0
            out.append(int(vals[i][nz].max()) if nz.any() else NEG_INF)
        return out

    def cdeg(self):
        """Column degrees; NEG_INF for zero columns."""
        d = self.entry_degrees()
        out = []
        for j in range(self.n):
            mj = int(d[:, j].max()) if self.m else -1
            out.append(NEG_INF if mj < 0 else mj)
        return out

    # -- submatrices / stacking ---------------------------------------------

    def take(self, rows, cols):
        return PolyMat(self.p, self.c[np.ix_(list(rows), list(cols))], copy=True)

    def take_rows(self, rows):
        return PolyMat(self.p, self.c[list(rows), :, :], copy=True)

    def take_cols(self, cols):
        return PolyMat(self.p, self.c[:, list(cols), :], copy=True)

    def row(self, i):
        return self.take_rows([i])

    @staticmethod
    def hstack(mats):
        p = mats[0].p
        L = max(M.c.shape[2] for M in mats)
        parts = []
        for M in mats:
            c = M.c
            if c.shape[2] < L:
                c = np.concatenate(
                    [c, np.zeros(c.shape[:2] + (L - c.shape[2],), dtype=np.int64)],
                    axis=2,
                )
            parts.append(c)
        return PolyMat(p, np.concatenate(parts, axis=1), copy=False)

    @staticmethod
    def vstack(mats):
        p = mats[0].p
        L = max(M.c.shape[2] for M in mats)
        parts = []
        for M in mats:
            c = M.c
            if c.shape[2] < L:
                c = np.concatenate(
                    [c, np.zeros(c.shape[:2] + (L - c.shape[2],), dtype=np.int64)],
                    axis=2,
                )
            parts.append(c)
        return PolyMat(p, np.concatenate(parts, axis=0), copy=False)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        L = max(self.c.shape[2], other.c.shape[2])
        c = np.zeros((self.m, self.n, L), dtype=np.int64)
        c[:, :, : self.c.shape[2]] = self.c
        c[:, :, : other.c.shape[2]] += other.c
        return PolyMat(self.p, c % self.p, copy=False)

    def __sub__(self, other):
        L = max(self.c.shape[2], other.c.shape[2])
        c = np.zeros((self.m, self.n, L), dtype=np.int64)
        c[:, :, : self.c.shape[2]] = self.c
        c[:, :, : other.c.shape[2]] -= other.c
        return PolyMat(self.p, c % self.p, copy=False)

    def __matmul__(self, other):
        if self.n != other.m:
            raise ValueError(f"dimension mismatch {self.m}x{self.n} @ {other.m}x{other.n}")
        if self.p != other.p:
            raise ValueError("modulus mismatch")
        A, B = self.trim(), other.trim()
        return PolyMat(self.p, kernels.polymat_mul(A.c, B.c, self.p), copy=False).trim()

    def lconst_mul(self, M):
        """Constant matrix times self: M @ P with M an (r, m) int64 array."""
        m, n, L = self.c.shape
        M = np.asarray(M, dtype=np.int64) % self.p
        out = kernels.const_matmul(M, np.ascontiguousarray(self.c.reshape(m, n * L)), self.p)
        return PolyMat(self.p, out.reshape(M.shape[0], n, L), copy=False)

    def scale_entry(self, a):
        return PolyMat(self.p, (self.c * (a % self.p)) % self.p, copy=False)

    # -- truncation / monomial scaling --------------------------------------

    def truncate(self, orders):
        """Columnwise truncation mod X^{d_j}; orders an int or tuple."""
        m, n, L = self.c.shape
        if np.isscalar(orders):
            orders = (int(orders),) * n
        if all(dj >= L for dj in orders):
            return self
        Lout = max(1, min(L, max(orders, default=1)))
        c = np.zeros((m, n, Lout), dtype=np.int64)
        for j, dj in enumerate(orders):
            k = min(L, dj)
            if k > 0:
                c[:, j, :k] = self.c[:, j, :k]
        return PolyMat(self.p, c, copy=False)

    def shift_cols(self, k):
        """Multiply column j by X^{k_j}; negative k_j discards low coeffs."""
        m, n, L = self.c.shape
        if np.isscalar(k):
            k = (int(k),) * n
        Lout = max(1, max((L + kj for kj in k), default=1))
        c = np.zeros((m, n, Lout), dtype=np.int64)
        for j, kj in enumerate(k):
            if kj >= 0:
                c[:, j, kj : kj + L] = self.c[:, j, :]
            elif -kj < L:
                c[:, j, : L + kj] = self.c[:, j, -kj:]
        return PolyMat(self.p, c, copy=False).trim()

    def shift_rows(self, k):
        """Multiply row i by X^{k_i} (k_i >= 0)."""
        m, n, L = self.c.shape
        if np.isscalar(k):
            k = (int(k),) * m
        Lout = max(1, max((L + ki for ki in k), default=1))
        c = np.zeros((m, n, Lout), dtype=np.int64)
        for i, ki in enumerate(k):
            if ki < 0:
                raise ValueError("negative row shift")
            c[i, :, ki : ki + L] = self.c[i, :, :]
        return PolyMat(self.p, c, copy=False).trim()

    # -- comparison / repr --------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, PolyMat):
            return NotImplemented
        a, b = self.trim(), other.trim()
        return self.p == other.p and a.c.shape == b.c.shape and bool((a.c == b.c).all())

    def __hash__(self):
        a = self.trim()
        return hash((self.p, a.c.shape, a.c.tobytes()))

    def _entry_str(self, i, j):
        cs = self.c[i, j]
        terms = []
        for k in range(len(cs)):
            v = int(cs[k])
            if v == 0:
                continue
            if k == 0:
                terms.append(str(v))
            elif k == 1:
                terms.append("X" if v == 1 else f"{v}*X")
            else:
                terms.append(f"X^{k}" if v == 1 else f"{v}*X^{k}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        rows = []
        for i in range(self.m):
            rows.append("[" + ", ".join(self._entry_str(i, j) for j in range(self.n)) + "]")
        return f"PolyMat(p={self.p}, [" + ", ".join(rows) + "])"


def random_instance(p, m, n, orders, seed):
    """Deterministic random instance (F with cdeg < orders)."""
    validate_modulus(p)
    rng = np.random.default_rng(seed)
    return PolyMat.random(p, m, n, orders, rng)


# ---------------------------------------------------------------------------
# Truncated products / residuals


def residual(P, F, d, offsets=None, strategy="auto"):
    """X^{-offsets} * (P @ F mod X^d), columnwise.

    Strategies:
      * "naive"     -- full product, then truncate and shift (the oracle);
      * "split_rhs" -- column partial linearization of F into slices of
                       degree <= deg(P), good when deg(P) is controlled;
      * "split_lhs" -- column partial linearization of P into slices of
                       degree < ceil(sigma/m), good when |cdeg(P)| <= sigma
                       and n <= m;
      * "auto"      -- split_rhs.
    """
    d = check_orders(d)
    n = F.n
    if len(d) != n:
        raise ValueError("order tuple length mismatch")
    if offsets is None:
        offsets = (0,) * n
    offsets = tuple(int(x) for x in offsets)
    if any(o < 0 or o > dj for o, dj in zip(offsets, d)):
        raise ValueError(f"offsets {offsets} exceed orders {d}")
    if P.n != F.m:
        raise ValueError("dimension mismatch")
    if strategy == "auto":
        strategy = "split_rhs"
    if strategy == "naive":
        G = P @ F
    elif strategy == "split_rhs":
        G = _mul_trunc_split_rhs(P, F, d)
    elif strategy == "split_lhs":
        G = _mul_trunc_split_lhs(P, F, d)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return G.truncate(d).shift_cols([-o for o in offsets]).trim()


def _mul_trunc_split_rhs(P, F, d):
    """P @ F mod X^d via slicing columns of F to degree <= deg(P)."""
    P = P.trim()
    degP = P.deg
    if degP is NEG_INF:
        return PolyMat.zeros(P.p, P.m, F.n)
    # slice width >= deg(P) + 1, stretched so each slice product has exactly
    # power-of-two degree (the cheapest transform size) instead of just
    # spilling over it
    L = (1 << (2 * int(degP) - 1).bit_length()) - int(degP) + 1 if degP > 0 else 1
    F = F.truncate(d)
    Lf = F.c.shape[2]
    nslices = max(1, -(-Lf // L))
    if nslices == 1:
        return P @ F
    slices = []
    for k in range(nslices):
        slices.append(F.c[:, :, k * L : (k + 1) * L])
    Ftil = PolyMat.hstack(
        [PolyMat(F.p, s, copy=False) for s in slices]
    )  # columns grouped slice-major: slice k occupies cols [k*n, (k+1)*n)
    prod = P @ Ftil
    n = F.n
    Lout = prod.c.shape[2] + (nslices - 1) * L
    out = np.zeros((P.m, n, Lout), dtype=np.int64)
    for k in range(nslices):
        blk = prod.c[:, k * n : (k + 1) * n, :]
        out[:, :, k * L : k * L + blk.shape[2]] += blk
    return PolyMat(P.p, out % P.p, copy=False)


def _mul_trunc_split_lhs(P, F, d):
    """P @ F mod X^d via slicing columns of P to degree < ceil(sigma/m)."""
    P = P.trim()
    sigma = sum(d)
    b = max(1, -(-sigma // max(P.m, 1)))
    Lp = P.c.shape[2]
    alphas = [max(1, -(-Lp // b))] * P.n  # uniform slice count is fine
    nsl = alphas[0]
    if nsl == 1:
        return (P @ F.truncate(d)).truncate(d)
    # P = Ptil * Ebar where Ptil holds the X^b-adic column slices of P and
    # Ebar stacks X^{k*b} copies of the rows of F.
    pieces = []
    maxd = max(d)
    Ft = F.truncate(d)
    for k in range(nsl):
        sl = P.c[:, :, k * b : (k + 1) * b]
        pieces.append(PolyMat(P.p, sl, copy=False))
    Ptil = PolyMat.hstack(pieces)
    rows = []
    for k in range(nsl):
        rows.append(Ft.shift_rows(k * b).truncate(maxd))
    EF = PolyMat.vstack(rows).truncate(d)
    return (Ptil @ EF).truncate(d)
