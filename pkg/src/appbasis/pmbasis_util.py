"""Small shared helpers for basis-producing algorithms."""

from .forms import BasisResult


def owp_result(matrix, delta):
    return BasisResult(matrix, tuple(range(matrix.m)), tuple(delta), "owp")
