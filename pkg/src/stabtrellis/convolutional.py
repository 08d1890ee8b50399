"""Shift-invariant stabilizer sets, their finite unrollings, and memory."""

from __future__ import annotations

from dataclasses import dataclass

from .pauli import PauliString, StabilizerCode, validate


@dataclass(frozen=True)
class ConvolutionalSpec:
    """A block of ``eta - kappa`` generator patterns repeated with an ``eta``-qubit shift.

    ``head`` and ``tail`` are full-length rows placed before and after the
    bulk when unrolling; they are how a finite code gets terminated.
    """

    eta: int
    kappa: int
    block: tuple[PauliString, ...]
    head: tuple[PauliString, ...] = ()
    tail: tuple[PauliString, ...] = ()

    def __post_init__(self):
        for name in ("block", "head", "tail"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if self.eta < 1:
            raise ValueError(f"eta must be >= 1, got {self.eta}")
        if self.eta - self.kappa < 1:
            raise ValueError("need eta - kappa >= 1 generators per block")
        if len(self.block) != self.eta - self.kappa:
            raise ValueError(f"block has {len(self.block)} patterns, expected eta - kappa = {self.eta - self.kappa}")
        if len({p.n for p in self.block}) != 1:
            raise ValueError("all block patterns must share one window width")
        if any(p.is_identity() for p in self.block):
            raise ValueError("block patterns must not be all-I")

    @property
    def width(self) -> int:
        return self.block[0].n

    @classmethod
    def from_strings(cls, eta: int, kappa: int, block, head=(), tail=()) -> ConvolutionalSpec:
        conv = PauliString.from_str
        return cls(eta, kappa, tuple(map(conv, block)), tuple(map(conv, head)), tuple(map(conv, tail)))


def unroll(spec: ConvolutionalSpec, n: int, *, check: bool = True) -> StabilizerCode:
    """Finite code on ``n`` qubits: head rows, shifted block rows that fit, tail rows.

    A shifted pattern is kept only if its whole support lands in qubits 1..n.
    """
    if spec.width > n:
        raise ValueError(f"window width {spec.width} exceeds n={n}")
    for row in spec.head + spec.tail:
        if row.n != n:
            raise ValueError(f"boundary row {row} has length {row.n}, expected {n}")
    rows = list(spec.head)
    full = (1 << n) - 1
    offset = 0
    while offset < n:
        for pat in spec.block:
            x, z = pat.x << offset, pat.z << offset
            if (x | z) & ~full:
                continue
            rows.append(PauliString(n, x, z))
        offset += spec.eta
    rows.extend(spec.tail)
    if not rows or len(rows) > n:
        raise ValueError(f"unrolling gives {len(rows)} generators on {n} qubits")
    code = StabilizerCode(n, n - len(rows), tuple(rows))
    if check:
        validate(code)
    return code


def sharp(g: PauliString, i: int) -> int:
    """1 iff ``g`` has non-I coordinates both at or before ``i`` and after ``i`` (1-based)."""
    if not 1 <= i <= g.n:
        raise IndexError(f"coordinate {i} outside 1..{g.n}")
    sup = g.support
    before = sup & ((1 << i) - 1)
    after = sup >> i
    return int(bool(before) and bool(after))


def column_activity(code: StabilizerCode) -> tuple[int, ...]:
    """``sum_j sharp(S_j, i)`` for i = 1..n."""
    return tuple(sum(sharp(g, i) for g in code.generators) for i in range(1, code.n + 1))


def memory(code: StabilizerCode) -> int:
    return max(column_activity(code))
