# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled compute kernels: exact matrix products, NTT butterflies, and LSP
elimination mod p.

Same contracts as _numpy_kernels.  For p < 2^31 the hot loops are written
with 64-bit unsigned arithmetic only (chunked accumulation, Barrett and
Montgomery reductions) so the compiler can vectorize them; larger moduli
(below 2^62) accumulate in 128-bit integers and reduce directly.
"""

import numpy as np

ctypedef long long i64
ctypedef unsigned long long u64

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

cdef extern from *:
    """
    #include <stdint.h>
    #include <stddef.h>

    /* Radix-2 in-place transform, bit-reversed input permutation done here.
       Kept at -O2: the autovectorizer makes the short early-stage loops
       slower at -O3 on this code. */
    __attribute__((optimize("O2")))
    static void appbasis_ntt_core(int64_t *a, ptrdiff_t rows, ptrdiff_t L,
                                  const int64_t *tw, const int64_t *brev,
                                  int64_t p, int64_t scale)
    {
        uint64_t magic = (uint64_t)(((unsigned __int128)1 << 64) / (uint64_t)p);
        ptrdiff_t r, i, j, base, half;
        for (r = 0; r < rows; ++r) {
            int64_t *row = a + r * L;
            for (i = 0; i < L; ++i) {
                j = brev[i];
                if (j > i) { int64_t t = row[i]; row[i] = row[j]; row[j] = t; }
            }
        }
        for (half = 1; half < L; half *= 2) {
            const int64_t *w = tw + (half - 1);
            for (r = 0; r < rows; ++r) {
                int64_t *row = a + r * L;
                if (half == 1) {
                    /* first stage: twiddle is 1, pure add/subtract */
                    for (base = 0; base < L; base += 2) {
                        int64_t x = row[base], y = row[base + 1];
                        int64_t s = x + y; if (s >= p) s -= p;
                        int64_t d = x - y; if (d < 0) d += p;
                        row[base] = s; row[base + 1] = d;
                    }
                    continue;
                }
                for (base = 0; base < L; base += 2 * half) {
                    for (j = 0; j < half; ++j) {
                        uint64_t t = (uint64_t)row[base + half + j] * (uint64_t)w[j];
                        uint64_t q = (uint64_t)(((unsigned __int128)t * magic) >> 64);
                        int64_t y = (int64_t)(t - q * (uint64_t)p);
                        if (y >= p) y -= p;
                        int64_t x = row[base + j];
                        int64_t s = x + y; if (s >= p) s -= p;
                        int64_t d = x - y; if (d < 0) d += p;
                        row[base + j] = s; row[base + half + j] = d;
                    }
                }
            }
        }
        if (scale != 1) {
            for (r = 0; r < rows * L; ++r) {
                uint64_t t = (uint64_t)a[r] * (uint64_t)scale;
                uint64_t q = (uint64_t)(((unsigned __int128)t * magic) >> 64);
                int64_t y = (int64_t)(t - q * (uint64_t)p);
                if (y >= p) y -= p;
                a[r] = y;
            }
        }
    }
    """
    void appbasis_ntt_core(i64 *a, Py_ssize_t rows, Py_ssize_t L,
                           const i64 *tw, const i64 *brev,
                           i64 p, i64 scale) nogil

cdef u64 _MASK32 = 0xffffffff


cdef inline u64 _magic(i64 p) nogil:
    # floor(2^64 / p); valid Barrett constant for any 0 < p < 2^63
    return <u64> ((<u128> 1 << 64) // <u128> p)


cdef inline i64 _bred(u64 x, i64 p, u64 magic) nogil:
    # x mod p for any x < 2^64, via one mulhi and one conditional subtract
    cdef u64 q = <u64> ((<u128> x * <u128> magic) >> 64)
    cdef i64 r = <i64> (x - q * <u64> p)
    if r >= p:
        r -= p
    return r


cdef inline i64 _bmul(i64 a, i64 b, i64 p, u64 magic) nogil:
    # a * b mod p for a, b in [0, p), p < 2^31
    return _bred(<u64> (a * b), p, magic)


cdef inline i64 _mulmod(i64 a, i64 b, i64 p) nogil:
    return <i64> ((<u128> a) * (<u128> b) % <u128> p)


cdef i64 _powmod(i64 base, i64 e, i64 p) nogil:
    cdef i64 acc = 1 % p
    base %= p
    while e > 0:
        if e & 1:
            acc = _mulmod(acc, base, p)
        base = _mulmod(base, base, p)
        e >>= 1
    return acc


cdef inline Py_ssize_t _chunk(i64 p) nogil:
    # accumulated products of entries < p stay below 2^64 for this many terms
    cdef u64 sq = <u64> ((p - 1)) * <u64> (p - 1)
    if sq == 0:
        return 1 << 40
    return <Py_ssize_t> (((<u64> 0xffffffffffffffff) - <u64> p) // sq)


def const_matmul(i64[:, ::1] A, i64[:, ::1] B, i64 p):
    cdef Py_ssize_t a = A.shape[0], b = A.shape[1], c = B.shape[1]
    cdef Py_ssize_t i, j, k, k0, kend, ck
    cdef u128 acc
    cdef u64 av
    cdef u64 magic = _magic(p)
    out_arr = np.zeros((a, c), dtype=np.int64)
    cdef i64[:, ::1] out = out_arr
    buf_arr = np.zeros(c, dtype=np.uint64)
    cdef u64[::1] buf = buf_arr
    if b == 0:
        return out_arr
    if p < (<i64> 1 << 31):
        ck = _chunk(p)
        for i in range(a):
            for j in range(c):
                buf[j] = 0
            k0 = 0
            while k0 < b:
                kend = k0 + ck
                if kend > b:
                    kend = b
                for k in range(k0, kend):
                    av = <u64> A[i, k]
                    for j in range(c):
                        buf[j] += av * <u64> B[k, j]
                for j in range(c):
                    buf[j] = <u64> _bred(buf[j], p, magic)
                k0 = kend
            for j in range(c):
                out[i, j] = <i64> buf[j]
    else:
        for i in range(a):
            for j in range(c):
                acc = 0
                for k in range(b):
                    acc = (acc + (<u128> A[i, k]) * (<u128> B[k, j])) % <u128> p
                out[i, j] = <i64> acc
    return out_arr


def batch_matmul(i64[:, :, ::1] A, i64[:, :, ::1] B, i64 p):
    cdef Py_ssize_t L = A.shape[0], a = A.shape[1], b = A.shape[2]
    cdef Py_ssize_t c = B.shape[2]
    cdef Py_ssize_t l, i, j, k, k0, kend, ck
    cdef u128 acc
    cdef u64 av
    cdef u64 magic = _magic(p)
    out_arr = np.zeros((L, a, c), dtype=np.int64)
    cdef i64[:, :, ::1] out = out_arr
    buf_arr = np.zeros(c, dtype=np.uint64)
    cdef u64[::1] buf = buf_arr
    if b == 0:
        return out_arr
    if p < (<i64> 1 << 31):
        ck = _chunk(p)
        for l in range(L):
            for i in range(a):
                for j in range(c):
                    buf[j] = 0
                k0 = 0
                while k0 < b:
                    kend = k0 + ck
                    if kend > b:
                        kend = b
                    for k in range(k0, kend):
                        av = <u64> A[l, i, k]
                        for j in range(c):
                            buf[j] += av * <u64> B[l, k, j]
                    for j in range(c):
                        buf[j] = <u64> _bred(buf[j], p, magic)
                    k0 = kend
                for j in range(c):
                    out[l, i, j] = <i64> buf[j]
        return out_arr
    for l in range(L):
        for i in range(a):
            for j in range(c):
                acc = 0
                for k in range(b):
                    acc = (acc + (<u128> A[l, i, k]) * (<u128> B[l, k, j])) % <u128> p
                out[l, i, j] = <i64> acc
    return out_arr


def pointwise_matmul(i64[:, :, ::1] A, i64[:, :, ::1] B, i64 p):
    """Entrywise-along-last-axis product (m,b,L) x (b,n,L) -> (m,n,L).

    Same contraction as batch_matmul but with the batch axis innermost, so
    transform-domain products can keep the (rows, cols, L) coefficient
    layout with unit-stride inner loops.  Small moduli only (p < 2^31)."""
    cdef Py_ssize_t m = A.shape[0], b = A.shape[1], L = A.shape[2]
    cdef Py_ssize_t n = B.shape[1]
    cdef Py_ssize_t i, i0, iend, j, k, t, k0, kend, ck, bi, nblk
    cdef u64 magic = _magic(p)
    out_arr = np.zeros((m, n, L), dtype=np.int64)
    cdef i64[:, :, ::1] out = out_arr
    if b == 0 or L == 0:
        return out_arr
    if p >= (<i64> 1 << 31):
        raise ValueError("pointwise_matmul requires p < 2^31")
    # tile the output rows so each pass over B covers several of them; the
    # u64 accumulator block then stays cache-resident
    nblk = 8 if m > 8 else m
    buf_arr = np.zeros((nblk, n, L), dtype=np.uint64)
    cdef u64[:, :, ::1] buf = buf_arr
    ck = _chunk(p)
    i0 = 0
    while i0 < m:
        iend = i0 + nblk
        if iend > m:
            iend = m
        for bi in range(iend - i0):
            for j in range(n):
                for t in range(L):
                    buf[bi, j, t] = 0
        k0 = 0
        while k0 < b:
            kend = k0 + ck
            if kend > b:
                kend = b
            for j in range(n):
                for k in range(k0, kend):
                    for bi in range(iend - i0):
                        for t in range(L):
                            buf[bi, j, t] += (<u64> A[i0 + bi, k, t]) * (<u64> B[k, j, t])
            for bi in range(iend - i0):
                for j in range(n):
                    for t in range(L):
                        buf[bi, j, t] = <u64> _bred(buf[bi, j, t], p, magic)
            k0 = kend
        for bi in range(iend - i0):
            for j in range(n):
                for t in range(L):
                    out[i0 + bi, j, t] = <i64> buf[bi, j, t]
        i0 = iend
    return out_arr


def polymat_mul_school(i64[:, :, ::1] A, i64[:, :, ::1] B, i64 p):
    """Coefficient-array product (m,k,La) x (k,n,Lb) -> (m,n,La+Lb-1)."""
    cdef Py_ssize_t m = A.shape[0], kk = A.shape[1], La = A.shape[2]
    cdef Py_ssize_t n = B.shape[1], Lb = B.shape[2]
    cdef Py_ssize_t Lc = La + Lb - 1
    cdef Py_ssize_t i, j, k, t, u, cnt, step, ck
    cdef u128 acc
    cdef u64 av
    cdef u64 magic = _magic(p)
    cdef i64 v
    out_arr = np.zeros((m, n, Lc), dtype=np.int64)
    cdef i64[:, :, ::1] out = out_arr
    buf_arr = np.zeros(max(Lc, 1), dtype=np.uint64)
    cdef u64[::1] buf = buf_arr
    if kk == 0:
        return out_arr
    if p < (<i64> 1 << 31):
        ck = _chunk(p)
        for i in range(m):
            for j in range(n):
                for t in range(Lc):
                    buf[t] = 0
                cnt = 0  # one t-iteration adds at most one product per output
                for k in range(kk):
                    for t in range(La):
                        av = <u64> A[i, k, t]
                        for u in range(Lb):
                            buf[t + u] += av * <u64> B[k, j, u]
                        cnt += 1
                        if cnt >= ck:
                            for u in range(Lc):
                                buf[u] = <u64> _bred(buf[u], p, magic)
                            cnt = 0
                for t in range(Lc):
                    out[i, j, t] = _bred(buf[t], p, magic)
    else:
        for i in range(m):
            for j in range(n):
                for t in range(La):
                    for u in range(Lb):
                        acc = 0
                        for k in range(kk):
                            acc = (acc + (<u128> A[i, k, t]) * (<u128> B[k, j, u])) % <u128> p
                        v = out[i, j, t + u] + <i64> acc
                        out[i, j, t + u] = v if v < p else v - p
    return out_arr


def ntt_inplace(i64[:, ::1] a, i64 p, i64[::1] twiddles, i64[::1] brev, i64 scale):
    """In-place transform of (rows x L), input in natural order; p < 2^31.

    brev is the bit-reversal permutation; twiddles is the flat stage table:
    the stage with half-width h (h = 1, 2, ...) occupies
    twiddles[h - 1 : 2 * h - 1].  Every entry is multiplied by scale at the
    end (pass 1 for a plain transform, 1/L mod p for the inverse).
    """
    cdef Py_ssize_t rows = a.shape[0], L = a.shape[1]
    if rows == 0 or L <= 1:
        return None
    appbasis_ntt_core(&a[0, 0], rows, L, &twiddles[0], &brev[0], p, scale)
    return None


def lsp_factor(i64[:, ::1] C, i64 p):
    """Row rank profile and unit lower-triangular factor of C mod p.

    Returns (rho, L) with the same contract as the numpy fallback: rho is
    the lexicographically smallest row basis index list; row i of L holds
    the combination of earlier rows eliminated from row i.
    """
    cdef Py_ssize_t m = C.shape[0], n = C.shape[1]
    cdef Py_ssize_t i, j, t, nred = 0, pc, cnt, ck
    cdef i64 a, na, inv
    cdef u64 magic = _magic(p)
    cdef bint small = p < (<i64> 1 << 31)
    R_arr = np.zeros((m, n), dtype=np.int64)   # normalized reduced rows
    T_arr = np.zeros((m, m), dtype=np.int64)   # combos of the reduced rows
    piv_arr = np.zeros(m, dtype=np.int64)
    v_arr = np.zeros(n, dtype=np.int64)
    combo_arr = np.zeros(m, dtype=np.int64)
    vb_arr = np.zeros(n, dtype=np.uint64)
    cb_arr = np.zeros(m, dtype=np.uint64)
    L_arr = np.eye(m, dtype=np.int64)
    cdef i64[:, ::1] R = R_arr, T = T_arr, L = L_arr
    cdef i64[::1] piv = piv_arr, v = v_arr, combo = combo_arr
    cdef u64[::1] vb = vb_arr, cb = cb_arr
    ck = _chunk(p) if small else 1
    rho = []
    for i in range(m):
        if small:
            # eliminations accumulate unreduced in u64 (v - a r written as
            # v + (p - a) r), with a Barrett pass every ck steps; the pivot
            # entry alone is reduced on demand to read the next multiplier
            for j in range(n):
                vb[j] = <u64> (C[i, j] % p)
            for j in range(m):
                cb[j] = 0
            cnt = 0
            for t in range(nred):
                a = _bred(vb[piv[t]], p, magic)
                if a:
                    na = p - a
                    for j in range(n):
                        vb[j] += (<u64> na) * (<u64> R[t, j])
                    for j in range(i):
                        cb[j] += (<u64> a) * (<u64> T[t, j])
                    cnt += 1
                    if cnt >= ck:
                        for j in range(n):
                            vb[j] = <u64> _bred(vb[j], p, magic)
                        for j in range(i):
                            cb[j] = <u64> _bred(cb[j], p, magic)
                        cnt = 0
            for j in range(n):
                v[j] = _bred(vb[j], p, magic)
            for j in range(m):
                combo[j] = _bred(cb[j], p, magic)
        else:
            for j in range(n):
                v[j] = C[i, j] % p
            for j in range(m):
                combo[j] = 0
            for t in range(nred):
                a = v[piv[t]]
                if a:
                    for j in range(n):
                        v[j] = (v[j] - _mulmod(a, R[t, j], p) + p) % p
                    for j in range(i):
                        combo[j] = (combo[j] + _mulmod(a, T[t, j], p)) % p
        pc = -1
        for j in range(n):
            if v[j]:
                pc = j
                break
        for j in range(i):
            L[i, j] = combo[j]
        if pc >= 0:
            rho.append(i)
            inv = _powmod(v[pc], p - 2, p)
            for j in range(n):
                R[nred, j] = _mulmod(v[j], inv, p)
            for j in range(i):
                T[nred, j] = _mulmod((p - combo[j]) % p, inv, p)
            T[nred, i] = inv % p
            piv[nred] = pc
            nred += 1
    return rho, L_arr
