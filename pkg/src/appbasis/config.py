"""Tunable thresholds and defaults.

All values are module-level so tests and benchmarks can monkeypatch them.
"""

import os

# Default modulus: NTT-friendly prime, 2^23 divides p - 1.
DEFAULT_MODULUS = 998244353

# Largest accepted modulus (exclusive).  Arbitrary odd primes below this are
# accepted; multiplication falls back to schoolbook when 2-adic roots of unity
# are insufficient for a transform of the required length.
MODULUS_LIMIT = 1 << 62

# polymat_mul switches from schoolbook to transform-based multiplication when
# the product degree reaches MUL_DEGREE_THRESHOLD and the inner dimension is
# at least MUL_INNER_DIM_THRESHOLD.
MUL_DEGREE_THRESHOLD = 2
MUL_INNER_DIM_THRESHOLD = 2

# Order threshold below which the top-level solver delegates to the
# Popov double-pass divide-and-conquer (canonical output is independent of
# this value; it only selects the internal path).
SOLVER_BASE_CASE = 16


def default_modulus():
    """Default modulus, overridable through the APPBASIS_MODULUS env var."""
    val = os.environ.get("APPBASIS_MODULUS")
    return int(val) if val else DEFAULT_MODULUS
