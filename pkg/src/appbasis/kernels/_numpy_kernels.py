"""Pure-numpy compute kernels (fallback backend).

All arrays are int64 with entries in [0, p) for p < 2^31; larger moduli fall
back to object-dtype exact integer arrays.  Overflow safety for int64: partial
sums are reduced mod p after at most _chunk(p) accumulated products, so that
chunk * (p-1)^2 stays below 2^63.
"""

import numpy as np

_SMALL = 1 << 31


def _chunk(p):
    return max(1, (2**63 - 1) // ((p - 1) ** 2))


def const_matmul(A, B, p):
    """(a x b) @ (b x c) over F_p; 2-D arrays."""
    a, b = A.shape
    c = B.shape[1]
    if b == 0:
        return np.zeros((a, c), dtype=A.dtype)
    if p >= _SMALL:
        return np.array(A, dtype=object).dot(np.array(B, dtype=object)) % p
    ck = _chunk(p)
    if ck >= b:
        return (A @ B) % p
    acc = np.zeros((a, c), dtype=np.int64)
    for k0 in range(0, b, ck):
        acc = (acc + A[:, k0 : k0 + ck] @ B[k0 : k0 + ck, :]) % p
    return acc


def batch_matmul(A, B, p):
    """(L x a x b) @ (L x b x c) over F_p, batched over the first axis."""
    L, a, b = A.shape
    c = B.shape[2]
    if b == 0:
        return np.zeros((L, a, c), dtype=A.dtype)
    if p >= _SMALL:
        out = np.empty((L, a, c), dtype=object)
        Ao = np.array(A, dtype=object)
        Bo = np.array(B, dtype=object)
        for l in range(L):
            out[l] = Ao[l].dot(Bo[l]) % p
        return out
    ck = _chunk(p)
    if ck >= b:
        return np.matmul(A, B) % p
    acc = np.zeros((L, a, c), dtype=np.int64)
    for k0 in range(0, b, ck):
        acc = (acc + np.matmul(A[:, :, k0 : k0 + ck], B[:, k0 : k0 + ck, :])) % p
    return acc


def lsp_factor(C, p):
    """Row rank profile and unit lower-triangular factor of C mod p.

    Returns (rho, L): rho is the lexicographically smallest list of row
    indices forming a row basis of C; L is unit lower triangular with row i
    holding the combination of earlier rows eliminated from row i, so that
    for i not in rho, (e_i - L[i]) lies in the left nullspace of C.
    """
    C = np.asarray(C, dtype=np.int64) % p
    if p >= _SMALL:  # a * row products would overflow int64
        C = C.astype(object)
    m, n = C.shape
    L = np.eye(m, dtype=np.int64)
    rho = []
    reduced = []  # (normalized row, pivot column, combo over original rows)
    for i in range(m):
        v = C[i].copy()
        combo = np.zeros(m, dtype=C.dtype)  # C[i] - v = combo @ C
        for r, piv, t in reduced:
            a = v[piv]
            if a:
                v = (v - a * r) % p
                combo = (combo + a * t) % p
        nz = np.nonzero(v)[0]
        L[i, :i] = combo[:i]
        if nz.size:
            rho.append(i)
            pc = int(nz[0])
            inv = pow(int(v[pc]), p - 2, p)
            # v = (e_i - combo) @ C; store the pivot-normalized row and combo
            t = (-combo) % p
            t[i] = 1
            reduced.append((v * inv % p, pc, t * inv % p))
    return rho, L


def ntt_inplace(a, p, stage_twiddles):
    """In-place transform of a (rows x L) array already in bit-reversed order.

    stage_twiddles[k] holds the 2^k twiddle factors of butterfly stage k.
    """
    rows, L = a.shape
    half = 1
    stage = 0
    while half < L:
        w = stage_twiddles[stage]
        v = a.reshape(rows, L // (2 * half), 2 * half)
        even = v[:, :, :half]
        odd = (v[:, :, half:] * w) % p
        v[:, :, half:] = (even - odd) % p
        v[:, :, :half] = (even + odd) % p
        half *= 2
        stage += 1
    return a
