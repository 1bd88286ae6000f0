"""Constant-matrix linear algebra mod p: LSP row rank profile, rank, inverse."""

import numpy as np

from . import kernels
from .field import inv_mod


def lsp_rank_profile(C, p):
    """Row rank profile and L-factor of a constant matrix.

    Returns (rho, L):
      * rho: lexicographically smallest list of row indices forming a row
        basis of C;
      * L: unit lower triangular with column j an identity column for every
        j not in rho; for i not in rho, row i of L with negated off-diagonal
        entries lies in the left nullspace of C.
    """
    return kernels.lsp_factor(C, p)


def rank_mod(C, p):
    rho, _ = lsp_rank_profile(C, p)
    return len(rho)


def inv_matrix_mod(A, p):
    """Inverse of a square constant matrix mod p; raises on singular input."""
    A = np.asarray(A, dtype=np.int64) % p
    m = A.shape[0]
    if A.shape[1] != m:
        raise ValueError("matrix not square")
    M = np.concatenate([A, np.eye(m, dtype=np.int64)], axis=1)
    if p >= 1 << 31:  # keep p^2-sized products exact
        M = M.astype(object)
    row = 0
    for col in range(m):
        piv = None
        for r in range(row, m):
            if M[r, col]:
                piv = r
                break
        if piv is None:
            raise np.linalg.LinAlgError("singular matrix mod p")
        if piv != row:
            M[[row, piv]] = M[[piv, row]]
        M[row] = M[row] * inv_mod(int(M[row, col]), p) % p
        for r in range(m):
            if r != row and M[r, col]:
                M[r] = (M[r] - M[r, col] * M[row]) % p
        row += 1
    return M[:, m:]


def is_invertible_mod(A, p):
    A = np.asarray(A, dtype=np.int64)
    return A.shape[0] == A.shape[1] and rank_mod(A, p) == A.shape[0]
