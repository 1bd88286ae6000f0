"""Order-(1,...,1) base case: the s-Popov basis from constant linear algebra."""

import numpy as np

from .forms import BasisResult
from .linalg import lsp_rank_profile
from .polymat import PolyMat


def mbasis1(C, s, p=None):
    """s-Popov basis of A_{(1,...,1)}(C) for a constant matrix C.

    Steps: stable sort of the rows by (s_i, i); LSP row rank profile of the
    permuted matrix; nullspace rows kept as constants, rank-profile rows
    multiplied by X; conjugate back.  Returns a BasisResult (form "popov").
    """
    if isinstance(C, PolyMat):
        if C.deg not in (0,) and not C.is_zero():
            raise ValueError("mbasis1 requires a constant matrix")
        p = C.p
        C = C.coeff(0)
    C = np.asarray(C, dtype=np.int64) % p
    m = C.shape[0]
    perm = sorted(range(m), key=lambda i: (s[i], i))
    rho, L = lsp_rank_profile(C[perm], p)
    rho_set = set(rho)
    Phat = np.zeros((m, m, 2), dtype=np.int64)
    for i in range(m):
        if i in rho_set:
            Phat[i, i, 1] = 1
        else:
            Phat[i, i, 0] = 1
            Phat[i, :i, 0] = (-L[i, :i]) % p
    c = np.zeros((m, m, 2), dtype=np.int64)
    pa = np.array(perm)
    c[np.ix_(pa, pa)] = Phat
    delta = [0] * m
    for i in rho:
        delta[perm[i]] = 1
    return BasisResult(
        PolyMat(p, c, copy=False).trim(),
        tuple(range(m)),
        tuple(delta),
        "popov",
    )
