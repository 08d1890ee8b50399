"""Dense GF(2) linear algebra on rows packed into Python ints.

Bit ``c`` of a row is the coefficient of variable ``c``. Pivots are always
taken at the lowest set bit, which makes every routine here deterministic.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence


def _lowbit(v: int) -> int:
    return (v & -v).bit_length() - 1


def rref(rows: Iterable[int]) -> tuple[list[int], list[int]]:
    """Reduced row echelon form.

    Returns ``(rows, pivots)`` where ``rows[r]`` has its pivot at bit
    ``pivots[r]`` and no other row has that bit set. Zero rows are dropped.
    """
    basis: list[int] = []
    pivots: list[int] = []
    for v in rows:
        for b, p in zip(basis, pivots):
            if (v >> p) & 1:
                v ^= b
        if v == 0:
            continue
        p = _lowbit(v)
        for r, b in enumerate(basis):
            if (b >> p) & 1:
                basis[r] = b ^ v
        basis.append(v)
        pivots.append(p)
    order = sorted(range(len(pivots)), key=pivots.__getitem__)
    return [basis[r] for r in order], [pivots[r] for r in order]


def rank(rows: Iterable[int]) -> int:
    return len(rref(rows)[0])


def in_span(v: int, echelon: Sequence[int], pivots: Sequence[int]) -> bool:
    for b, p in zip(echelon, pivots):
        if (v >> p) & 1:
            v ^= b
    return v == 0


def solve(rows: Sequence[int], rhs: Sequence[int]) -> int | None:
    """Solve ``parity(rows[r] & x) == rhs[r]`` for every ``r``.

    Free variables are set to zero. Returns ``None`` if inconsistent.
    """
    width = max((r.bit_length() for r in rows), default=0)
    aug = [r | (int(b) << width) for r, b in zip(rows, rhs)]
    echelon, pivots = rref(aug)
    x = 0
    for row, p in zip(echelon, pivots):
        if p >= width:
            return None
        if row >> width:
            x |= 1 << p
    return x


def nullspace(rows: Sequence[int], columns: Sequence[int]) -> list[int]:
    """Basis of ``{x : parity(row & x) == 0 for all rows}`` with support in ``columns``."""
    cols = sorted(set(columns))
    # compress onto the chosen columns so pivoting order follows ``cols``
    compressed = []
    for r in rows:
        v = 0
        for t, c in enumerate(cols):
            if (r >> c) & 1:
                v |= 1 << t
        compressed.append(v)
    echelon, pivots = rref(compressed)
    pivot_set = set(pivots)
    basis = []
    for f in range(len(cols)):
        if f in pivot_set:
            continue
        v = 1 << cols[f]
        for row, p in zip(echelon, pivots):
            if (row >> f) & 1:
                v |= 1 << cols[p]
        basis.append(v)
    return basis


def span(basis: Sequence[int], offset: int = 0) -> list[int]:
    """All ``2**len(basis)`` elements ``offset + span(basis)``, in doubling order."""
    out = [offset]
    for b in basis:
        out += [v ^ b for v in out]
    return out
