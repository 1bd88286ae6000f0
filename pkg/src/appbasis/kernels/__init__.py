"""Compute kernels for polynomial matrix arithmetic over F_p.

Two interchangeable backends provide the hot primitives (exact integer
matrix products with modular reduction, NTT butterflies):

* ``cython`` -- compiled extension ``_cykernels`` (built at install time);
* ``python`` -- vectorized numpy fallback in ``_numpy_kernels``.

The backend is chosen at import: the compiled extension when available,
unless the APPBASIS_KERNELS environment variable forces one of
``python`` / ``cython``.  On top of the primitives this module implements
coefficient-level polynomial matrix multiplication (schoolbook and
transform-based), shared by both backends.
"""

import os

import numpy as np

from .. import config, field
from . import _numpy_kernels as _py

try:
    from . import _cykernels as _cy
except ImportError:  # extension not built; fallback stays available
    _cy = None

_forced = os.environ.get("APPBASIS_KERNELS", "auto")
if _forced == "python":
    _impl = _py
elif _forced == "cython":
    if _cy is None:
        raise ImportError("APPBASIS_KERNELS=cython but the extension is not built")
    _impl = _cy
else:
    _impl = _cy if _cy is not None else _py

BACKEND = "cython" if _impl is _cy else "python"

_SMALL = 1 << 31


def cython_available():
    return _cy is not None


def set_backend(name):
    """Force a backend at runtime ('python', 'cython', or 'auto'); returns
    the previously active name."""
    global _impl, BACKEND
    old = BACKEND
    if name == "python":
        _impl = _py
    elif name == "cython":
        if _cy is None:
            raise ValueError("cython kernels not built")
        _impl = _cy
    elif name == "auto":
        _impl = _cy if _cy is not None else _py
    else:
        raise ValueError(f"unknown backend {name!r}")
    BACKEND = "cython" if _impl is _cy else "python"
    return old


def const_matmul(A, B, p):
    """Exact (a x b) @ (b x c) mod p."""
    if p >= _SMALL and _impl is _py:
        return _py.const_matmul(A, B, p)
    A = np.ascontiguousarray(A, dtype=np.int64)
    B = np.ascontiguousarray(B, dtype=np.int64)
    return np.asarray(_impl.const_matmul(A, B, p))


def batch_matmul(A, B, p):
    """Exact batched (L x a x b) @ (L x b x c) mod p."""
    if p >= _SMALL and _impl is _py:
        return _py.batch_matmul(A, B, p)
    A = np.ascontiguousarray(A, dtype=np.int64)
    B = np.ascontiguousarray(B, dtype=np.int64)
    return np.asarray(_impl.batch_matmul(A, B, p))


def lsp_factor(C, p):
    """Row rank profile and unit lower-triangular factor of C mod p."""
    C = np.ascontiguousarray(np.asarray(C, dtype=np.int64) % p)
    rho, L = _impl.lsp_factor(C, p)
    return list(rho), np.asarray(L)


# ---------------------------------------------------------------------------
# NTT plumbing


class _NttPlan:
    """Cached tables for length-L transforms mod p."""

    __slots__ = ("p", "L", "brev", "stages", "inv_stages", "flat", "inv_flat", "inv_L")

    def __init__(self, p, L):
        self.p = p
        self.L = L
        bits = L.bit_length() - 1
        idx = np.arange(L)
        brev = np.zeros(L, dtype=np.int64)
        for b in range(bits):
            brev |= ((idx >> b) & 1) << (bits - 1 - b)
        self.brev = brev
        root = field.root_of_unity(p, L)
        iroot = field.inv_mod(root, p)
        def _stage_tables(w0):
            tabs = []
            half = 1
            while half < L:
                w = pow(w0, L // (2 * half), p)
                tab = np.empty(half, dtype=np.int64)
                cur = 1
                for j in range(half):
                    tab[j] = cur
                    cur = cur * w % p
                tabs.append(tab)
                half *= 2
            return tabs

        self.stages = _stage_tables(root)
        self.inv_stages = _stage_tables(iroot)
        empty = np.zeros(0, dtype=np.int64)
        self.flat = np.concatenate(self.stages) if self.stages else empty
        self.inv_flat = np.concatenate(self.inv_stages) if self.inv_stages else empty
        self.inv_L = field.inv_mod(L, p)


_plans = {}


def _plan(p, L):
    key = (p, L)
    plan = _plans.get(key)
    if plan is None:
        plan = _plans[key] = _NttPlan(p, L)
    return plan


def ntt_available(p, L):
    return (p - 1) % L == 0


def ntt(a, p, L, inverse=False):
    """Length-L transform along the last axis of int64 array a (padded)."""
    plan = _plan(p, L)
    shape = a.shape
    buf = np.zeros(shape[:-1] + (L,), dtype=np.int64)
    buf[..., : shape[-1]] = a
    buf = buf.reshape(-1, L)
    if _impl is _cy and p < _SMALL:
        _cy.ntt_inplace(buf, p, plan.inv_flat if inverse else plan.flat,
                        plan.brev, plan.inv_L if inverse else 1)
        return buf.reshape(shape[:-1] + (L,))
    buf = np.ascontiguousarray(buf[:, plan.brev])
    _py.ntt_inplace(buf, p, plan.inv_stages if inverse else plan.stages)
    out = buf.reshape(shape[:-1] + (L,))
    if inverse:
        out = out * plan.inv_L % p
    return out


# ---------------------------------------------------------------------------
# Polynomial matrix products on raw coefficient arrays (m, n, L)


def polymat_mul_schoolbook(A, B, p):
    m, k, La = A.shape
    n, Lb = B.shape[1], B.shape[2]
    if _impl is _cy:
        A = np.ascontiguousarray(A, dtype=np.int64)
        B = np.ascontiguousarray(B, dtype=np.int64)
        return np.asarray(_cy.polymat_mul_school(A, B, p))
    Lc = La + Lb - 1
    C = np.zeros((m, n, Lc), dtype=np.int64)
    B2 = np.ascontiguousarray(B.reshape(k, n * Lb), dtype=np.int64)
    for i in range(La):
        part = const_matmul(A[:, :, i], B2, p).reshape(m, n, Lb)
        C[:, :, i : i + Lb] = (C[:, :, i : i + Lb] + part) % p
    return C


def polymat_mul_ntt(A, B, p):
    m, k, La = A.shape
    n, Lb = B.shape[1], B.shape[2]
    Lc = La + Lb - 1
    L = 1 << (Lc - 1).bit_length()
    if (Lc - 1 == L // 2 and La > 1 and Lb > 1 and p < _SMALL
            and ntt_available(p, L // 2)):
        # product degree exactly a power of two: use the half-length cyclic
        # product, whose only wrapped term -- top coefficient onto constant
        # term -- is the single product of leading coefficient matrices
        L //= 2
        top = const_matmul(np.ascontiguousarray(A[:, :, -1]),
                           np.ascontiguousarray(B[:, :, -1]), p)
        C = _cyclic_mul_ntt(A, B, p, L)
        out = np.empty((m, n, Lc), dtype=np.int64)
        out[:, :, :L] = C
        out[:, :, 0] = (C[:, :, 0] - top) % p
        out[:, :, L] = top
        return out
    if not ntt_available(p, L) or p >= _SMALL:
        raise ValueError(f"no length-{L} transform available mod {p}")
    C = _cyclic_mul_ntt(A, B, p, L)
    return np.ascontiguousarray(C[:, :, :Lc])


def _cyclic_mul_ntt(A, B, p, L):
    """Length-L cyclic convolution product of coefficient arrays."""
    Ah = ntt(A, p, L)
    Bh = ntt(B, p, L)
    if _impl is _cy and p < _SMALL:
        # contract the inner dimension in-layout; the transform axis stays
        # last and contiguous, and the fresh product array can be
        # inverse-transformed in place
        Ch = np.asarray(_cy.pointwise_matmul(Ah, Bh, p))
        plan = _plan(p, L)
        _cy.ntt_inplace(Ch.reshape(-1, L), p, plan.inv_flat, plan.brev, plan.inv_L)
        return Ch
    Ch = np.moveaxis(
        batch_matmul(
            np.ascontiguousarray(np.moveaxis(Ah, 2, 0)),
            np.ascontiguousarray(np.moveaxis(Bh, 2, 0)),
            p,
        ),
        0,
        2,
    )
    return ntt(Ch, p, L, inverse=True)


def polymat_mul(A, B, p):
    """Exact product of coefficient arrays (m,k,La) x (k,n,Lb) -> (m,n,La+Lb-1).

    Transform-based when the product degree and inner dimension reach the
    configured thresholds and a suitable root of unity exists; schoolbook
    otherwise.
    """
    m, k, La = A.shape
    n, Lb = B.shape[1], B.shape[2]
    if B.shape[0] != k:
        raise ValueError(f"dimension mismatch: {A.shape[:2]} x {B.shape[:2]}")
    if m == 0 or n == 0 or k == 0:
        return np.zeros((m, n, max(La + Lb - 1, 1)), dtype=np.int64)
    Lc = La + Lb - 1
    L = 1 << (Lc - 1).bit_length()
    use_ntt = (
        Lc - 1 >= config.MUL_DEGREE_THRESHOLD
        and k >= config.MUL_INNER_DIM_THRESHOLD
        and p < _SMALL
        and ntt_available(p, L)
    )
    if use_ntt:
        return polymat_mul_ntt(A, B, p)
    return polymat_mul_schoolbook(A, B, p)
