"""Line-oriented text serialization for polynomial matrices.

Format (one value per file, diff-able and deterministic):

    POLYMAT 1
    modulus <p>
    dims <m> <n>
    orders <d_1> ... <d_n>        (optional, instances only)
    <i> <j> : <c0> <c1> ...       (row-major; low degree first; trailing
                                   zeros trimmed; zero entry: "<i> <j> :")
"""

import numpy as np

from .field import validate_modulus
from .polymat import PolyMat

MAGIC = "POLYMAT 1"


class FormatError(ValueError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def serialize(F, orders=None):
    """Render a PolyMat (and optional order tuple) to the text format."""
    lines = [MAGIC, f"modulus {F.p}", f"dims {F.m} {F.n}"]
    if orders is not None:
        lines.append("orders " + " ".join(str(int(x)) for x in orders))
    degs = F.entry_degrees()
    for i in range(F.m):
        for j in range(F.n):
            k = int(degs[i, j])
            coeffs = " ".join(str(int(c)) for c in F.c[i, j, : k + 1])
            lines.append(f"{i} {j} : {coeffs}".rstrip())
    return "\n".join(lines) + "\n"


def parse(text):
    """Parse the text format; returns (PolyMat, orders-or-None)."""
    lines = text.splitlines()
    if not lines or lines[0].strip() != MAGIC:
        raise FormatError(1, f"expected header {MAGIC!r}")
    if len(lines) < 3:
        raise FormatError(len(lines), "truncated file")
    p = _field_line(lines[1], 2, "modulus", 1)[0]
    try:
        validate_modulus(p)
    except ValueError as exc:
        raise FormatError(2, str(exc)) from None
    m, n = _field_line(lines[2], 3, "dims", 2)
    if m < 1 or n < 1:
        raise FormatError(3, "dims must be positive")
    idx = 3
    orders = None
    if idx < len(lines) and lines[idx].startswith("orders"):
        parts = lines[idx].split()
        vals = _ints(parts[1:], idx + 1)
        if len(vals) != n:
            raise FormatError(idx + 1, f"expected {n} orders, got {len(vals)}")
        orders = tuple(vals)
        idx += 1
    entries = {}
    maxlen = 1
    for lineno0 in range(idx, len(lines)):
        line = lines[lineno0].strip()
        if not line:
            continue
        if ":" not in line:
            raise FormatError(lineno0 + 1, "expected '<i> <j> : <coeffs>'")
        head, _, tail = line.partition(":")
        ij = _ints(head.split(), lineno0 + 1)
        if len(ij) != 2:
            raise FormatError(lineno0 + 1, "expected two indices before ':'")
        i, j = ij
        if not (0 <= i < m and 0 <= j < n):
            raise FormatError(lineno0 + 1, f"entry ({i},{j}) out of range")
        coeffs = _ints(tail.split(), lineno0 + 1)
        if (i, j) in entries:
            raise FormatError(lineno0 + 1, f"duplicate entry ({i},{j})")
        entries[(i, j)] = coeffs
        maxlen = max(maxlen, len(coeffs))
    c = np.zeros((m, n, maxlen), dtype=np.int64)
    for (i, j), coeffs in entries.items():
        for k, v in enumerate(coeffs):
            c[i, j, k] = v % p
    return PolyMat(p, c, copy=False).trim(), orders


def _field_line(line, lineno, key, count):
    parts = line.split()
    if not parts or parts[0] != key or len(parts) != count + 1:
        raise FormatError(lineno, f"expected '{key}' line with {count} value(s)")
    return _ints(parts[1:], lineno)


def _ints(tokens, lineno):
    out = []
    for tok in tokens:
        try:
            out.append(int(tok))
        except ValueError:
            raise FormatError(lineno, f"invalid integer {tok!r}") from None
    return out


def parse_shift(spec, m, sigma):
    """Shift from a CLI spec: comma-separated integers, or the macros
    'uniform' (all zero) and 'hermite' ((sigma, 2 sigma, ..., m sigma))."""
    spec = spec.strip()
    if spec == "uniform":
        return [0] * m
    if spec == "hermite":
        return [sigma * (i + 1) for i in range(m)]
    try:
        vals = [int(x) for x in spec.split(",")]
    except ValueError:
        raise ValueError(f"invalid shift spec {spec!r}") from None
    if len(vals) != m:
        raise ValueError(f"shift has {len(vals)} entries, expected {m}")
    return vals


def parse_orders(spec, n):
    """Order tuple from a CLI spec: one integer (uniform) or n comma-separated."""
    try:
        vals = [int(x) for x in spec.split(",")]
    except ValueError:
        raise ValueError(f"invalid orders spec {spec!r}") from None
    if len(vals) == 1:
        vals = vals * n
    if len(vals) != n:
        raise ValueError(f"orders has {len(vals)} entries, expected {n}")
    if any(v < 1 for v in vals):
        raise ValueError("orders must be positive")
    return tuple(vals)
