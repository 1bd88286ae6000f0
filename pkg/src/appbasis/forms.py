"""Shifted forms: leading matrices, form predicates, pivot profiles,
Popov normalization, membership testing, and permutation utilities for
ordered weak Popov matrices."""

from dataclasses import dataclass

import numpy as np

from . import linalg
from .polymat import NEG_INF, PolyMat


@dataclass(frozen=True)
class PivotProfile:
    index: tuple
    degree: tuple


@dataclass(frozen=True)
class BasisResult:
    """A square approximant basis with its pivot degrees and form tag."""

    matrix: PolyMat
    pivot_index: tuple
    pivot_degree: tuple
    form: str  # "owp" or "popov"

    @property
    def delta(self):
        return self.pivot_degree


class FormError(ValueError):
    pass


def leading_matrix(P, s=None):
    """The s-leading matrix: entry (i,j) is the coefficient of degree
    rdeg_s(row i) - s_j of P[i,j]; zero rows give zero rows."""
    m, n = P.m, P.n
    if s is None:
        s = (0,) * n
    if len(s) != n:
        raise ValueError("shift length mismatch")
    r = P.rdeg(s)
    out = np.zeros((m, n), dtype=np.int64)
    L = P.c.shape[2]
    for i in range(m):
        if r[i] is NEG_INF:
            continue
        for j in range(n):
            k = int(r[i]) - s[j]
            if 0 <= k < L:
                out[i, j] = P.c[i, j, k]
    return out


def check_form(P, s, form):
    """Form predicate for square P: "reduced", "owp", or "popov"."""
    if P.m != P.n:
        raise FormError("form checks require a square matrix")
    lm = leading_matrix(P, s)
    if form == "reduced":
        return linalg.is_invertible_mod(lm, P.p)
    if form == "owp":
        lower = not np.triu(lm, 1).any()
        return lower and bool((np.diag(lm) != 0).all())
    if form == "popov":
        if np.triu(lm, 1).any() or not (np.diag(lm) == 1).all():
            return False
        # column-leading matrix of the transpose must be the identity:
        # each diagonal entry monic of degree cdeg_j, others of lower degree.
        degs = P.entry_degrees()
        for j in range(P.n):
            cj = degs[:, j].max()
            if cj < 0 or degs[j, j] != cj or P.c[j, j, cj] != 1:
                return False
            if (degs[:, j] == cj).sum() != 1:
                return False
        return True
    raise ValueError(f"unknown form {form!r}")


def pivot_profile(P, s):
    """Pivot indices/degrees of a matrix in s-weak Popov form.

    The pivot of a row is the rightmost entry attaining the shifted row
    degree.  Raises FormError on zero rows or repeated pivot indices.
    """
    if len(s) != P.n:
        raise ValueError("shift length mismatch")
    degs = P.entry_degrees()
    idx, dg = [], []
    for i in range(P.m):
        best, bestj = None, None
        for j in range(P.n):
            if degs[i, j] < 0:
                continue
            v = degs[i, j] + s[j]
            if best is None or v >= best:
                best, bestj = v, j
        if bestj is None:
            raise FormError(f"zero row {i} has no pivot")
        idx.append(bestj)
        dg.append(int(degs[i, bestj]))
    if len(set(idx)) != len(idx):
        raise FormError("repeated pivot indices: not in weak Popov form")
    return PivotProfile(tuple(idx), tuple(dg))


def normalize_to_popov(R, delta):
    """LM_{-delta}(R)^{-1} @ R for a -delta-reduced basis R whose module has
    minimal degree delta; the result is the Popov form, cdeg = delta."""
    s = tuple(-int(x) for x in delta)
    lm = leading_matrix(R, s)
    try:
        inv = linalg.inv_matrix_mod(lm, R.p)
    except np.linalg.LinAlgError as e:
        raise FormError("leading matrix singular: wrong minimal degree") from e
    return R.lconst_mul(inv).trim()


def membership_reduce(v, P, s):
    """Reduce row v against an s-ordered-weak-Popov basis P.

    Returns the remainder; it is zero iff v lies in the row space of P.
    """
    if not check_form(P, s, "owp"):
        raise FormError("P is not in s-ordered weak Popov form")
    p = P.p
    v = v.trim()
    pdeg = [int(x) for x in np.diag(P.entry_degrees())]
    from .field import inv_mod

    while not v.is_zero():
        degs = v.entry_degrees()[0]
        r = max(int(degs[j]) + s[j] for j in range(P.n) if degs[j] >= 0)
        j = max(jj for jj in range(P.n) if degs[jj] >= 0 and degs[jj] + s[jj] == r)
        t = int(degs[j])
        if t < pdeg[j]:
            return v
        lead = int(v.c[0, j, t])
        coef = lead * inv_mod(int(P.c[j, j, pdeg[j]]), p) % p
        shifted = P.row(j).shift_cols(t - pdeg[j]).scale_entry(coef)
        v = (v - shifted).trim()
    return v


def owp_conjugate(P, partition):
    """Conjugation pi P pi^{-1} for a partition (I | Ic) of the row indices.

    pi reorders indices so those of I (increasing) come first; for P in
    s-owp form the leading principal |I| block of the result is in
    (s restricted to I)-owp form.
    """
    keep, rest = partition
    order = list(keep) + list(rest)
    if sorted(order) != list(range(P.m)):
        raise ValueError("invalid partition")
    return P.take(order, order)


def owp_principal_block(P, keep):
    """Leading principal block extraction: P restricted to keep x keep."""
    keep = list(keep)
    return P.take(keep, keep)


def submatrix_permute_owp(P, partition):
    """Both directions of the permutation lemma for owp matrices: conjugate
    P by the partition's permutation (extraction = take the leading
    principal block of the result; embedding = conjugate back with the
    partition roles swapped)."""
    return owp_conjugate(P, partition)
