"""Arithmetic in the prime field F_p.

Field elements are canonical integers in [0, p).  The modulus must be an odd
prime below 2^62; primality is checked with a deterministic Miller-Rabin
test (exact for all 64-bit integers).
"""

from . import config

# Deterministic Miller-Rabin witness set for n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def validate_modulus(p):
    """Check that p is an odd prime below the supported limit."""
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        raise ValueError(f"modulus must be an odd prime, got {p}")
    if p >= config.MODULUS_LIMIT:
        raise ValueError(f"modulus must be < 2^62, got {p}")
    if not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p}")
    return p


def inv_mod(a, p):
    """Inverse of a nonzero element, by Fermat."""
    a %= p
    if a == 0:
        raise ZeroDivisionError("inversion of zero in F_p")
    return pow(a, p - 2, p)


def field_arith(a, b, op, p):
    """Scalar field operation; op in {add, sub, mul, inv, neg}.

    inv and neg are unary and ignore b.
    """
    a %= p
    if op == "add":
        return (a + b) % p
    if op == "sub":
        return (a - b) % p
    if op == "mul":
        return (a * b) % p
    if op == "neg":
        return (-a) % p
    if op == "inv":
        return inv_mod(a, p)
    raise ValueError(f"unknown op {op!r}")


def two_adicity(p):
    """Largest v with 2^v dividing p - 1."""
    n = p - 1
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    return v


def root_of_unity(p, length):
    """A primitive length-th root of unity mod p (length a power of two).

    Raises ValueError when the 2-adic valuation of p - 1 is too small.
    """
    if length == 1:
        return 1
    if length & (length - 1):
        raise ValueError("transform length must be a power of two")
    if (p - 1) % length:
        raise ValueError(f"no {length}-th root of unity mod {p}")
    e = (p - 1) // length
    for x in range(2, 1000):
        y = pow(x, e, p)
        if pow(y, length // 2, p) == p - 1:
            return y
    raise ValueError(f"no generator candidate found mod {p}")
