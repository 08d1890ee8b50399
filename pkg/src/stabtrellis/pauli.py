"""Phase-free Pauli algebra and stabilizer codes in the binary symplectic picture.

A single-qubit Pauli is the bit pair ``(x, z)``: I=(0,0), X=(1,0), Z=(0,1),
Y=(1,1). An n-qubit string packs its x bits and z bits into two ints, bit
``i`` holding qubit ``i + 1``. Group addition is XOR and the commutation
product is the symplectic form.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from . import _gf2


class Pauli(enum.IntEnum):
    """Element of the single-qubit effective Pauli group.

    The integer values fix the label order I < X < Y < Z used for
    tie-breaking; they are not the bit-pair encoding (see :attr:`bits`).
    """

    I = 0  # noqa: E741
    X = 1
    Y = 2
    Z = 3

    @property
    def bits(self) -> tuple[int, int]:
        return _BITS[self]

    @classmethod
    def from_bits(cls, x: int, z: int) -> Pauli:
        return _FROM_BITS[(x & 1, z & 1)]

    def __add__(self, other):  # type: ignore[override]
        if not isinstance(other, Pauli):
            return NotImplemented
        return pauli_add(self, other)

    def star(self, other: Pauli) -> int:
        return pauli_star(self, other)

    def __str__(self) -> str:
        return self.name


_BITS = {Pauli.I: (0, 0), Pauli.X: (1, 0), Pauli.Y: (1, 1), Pauli.Z: (0, 1)}
_FROM_BITS = {v: k for k, v in _BITS.items()}
PAULIS = (Pauli.I, Pauli.X, Pauli.Y, Pauli.Z)


def pauli_add(p: Pauli, q: Pauli) -> Pauli:
    (px, pz), (qx, qz) = p.bits, q.bits
    return Pauli.from_bits(px ^ qx, pz ^ qz)


def pauli_star(p: Pauli, q: Pauli) -> int:
    """1 iff p and q are distinct and neither is I."""
    (px, pz), (qx, qz) = p.bits, q.bits
    return (px & qz) ^ (pz & qx)


@dataclass(frozen=True)
class PauliString:
    """An element of G_n, stored as x/z bitmasks."""

    n: int
    x: int = 0
    z: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"PauliString needs n >= 1, got {self.n}")
        full = (1 << self.n) - 1
        if self.x & ~full or self.z & ~full:
            raise ValueError("bitmask wider than n")

    @classmethod
    def from_str(cls, word: str) -> PauliString:
        word = "".join(word.split())
        x = z = 0
        for i, ch in enumerate(word):
            try:
                px, pz = Pauli[ch].bits
            except KeyError:
                raise ValueError(f"invalid Pauli symbol {ch!r} in {word!r}") from None
            x |= px << i
            z |= pz << i
        return cls(len(word), x, z)

    @classmethod
    def from_paulis(cls, coords: Iterable[Pauli]) -> PauliString:
        x = z = 0
        n = 0
        for i, p in enumerate(coords):
            px, pz = Pauli(p).bits
            x |= px << i
            z |= pz << i
            n = i + 1
        return cls(n, x, z)

    @classmethod
    def identity(cls, n: int) -> PauliString:
        return cls(n)

    @classmethod
    def single(cls, n: int, i: int, p: Pauli) -> PauliString:
        """``p`` on qubit ``i`` (0-based), I elsewhere."""
        px, pz = Pauli(p).bits
        return cls(n, px << i, pz << i)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> Pauli:
        if i < 0:
            i += self.n
        if not 0 <= i < self.n:
            raise IndexError(i)
        return Pauli.from_bits(self.x >> i, self.z >> i)

    def __iter__(self):
        return (self[i] for i in range(self.n))

    def __add__(self, other: PauliString) -> PauliString:
        _check_len(self, other)
        return PauliString(self.n, self.x ^ other.x, self.z ^ other.z)

    def __str__(self) -> str:
        return "".join(p.name for p in self)

    def __repr__(self) -> str:
        return f"PauliString({str(self)!r})"

    @property
    def support(self) -> int:
        return self.x | self.z

    def is_identity(self) -> bool:
        return self.support == 0

    def weight(self) -> int:
        return self.support.bit_count()

    def star(self, other: PauliString) -> int:
        return star(self, other)

    def as_int(self) -> int:
        """Packed symplectic vector ``x | z << n``."""
        return self.x | (self.z << self.n)

    @classmethod
    def from_int(cls, n: int, v: int) -> PauliString:
        full = (1 << n) - 1
        return cls(n, v & full, (v >> n) & full)


def _check_len(a: PauliString, b: PauliString) -> None:
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} vs {b.n}")


def star(a: PauliString, b: PauliString) -> int:
    """Symplectic product; 0 iff the underlying operators commute."""
    _check_len(a, b)
    return ((a.x & b.z) ^ (a.z & b.x)).bit_count() & 1


def to_symplectic(p: PauliString) -> np.ndarray:
    """Length-2n uint8 vector ``[x_1..x_n | z_1..z_n]``."""
    bits = [(p.x >> i) & 1 for i in range(p.n)] + [(p.z >> i) & 1 for i in range(p.n)]
    return np.array(bits, dtype=np.uint8)


def from_symplectic(v) -> PauliString:
    v = np.asarray(v).ravel()
    if v.size % 2 or v.size == 0:
        raise ValueError(f"symplectic vector needs positive even length, got {v.size}")
    n = v.size // 2
    x = z = 0
    for i in range(n):
        x |= (int(v[i]) & 1) << i
        z |= (int(v[n + i]) & 1) << i
    return PauliString(n, x, z)


def symplectic_form(a, b) -> int:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    n = a.size // 2
    return int(a[:n] @ b[n:] + a[n:] @ b[:n]) & 1


class CodeError(ValueError):
    """A stabilizer set that violates a code invariant."""


class NonCommuting(CodeError):
    def __init__(self, j: int, jp: int):
        self.pair = (j, jp)
        super().__init__(f"generators {j} and {jp} anticommute")


class DependentGenerators(CodeError):
    def __init__(self, rank: int, expected: int):
        self.rank = rank
        super().__init__(f"generators are dependent: symplectic rank {rank} < {expected}")


class AllIdentityGenerator(CodeError):
    def __init__(self, j: int):
        self.index = j
        super().__init__(f"generator {j} is the all-I string")


@dataclass(frozen=True)
class StabilizerCode:
    """An (n, k) stabilizer code given by an ordered stabilizer set.

    Construction only checks shapes; call :func:`validate` for the group
    invariants. Generator indices in error messages are 1-based.
    """

    n: int
    k: int
    generators: tuple[PauliString, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if not 0 <= self.k < self.n:
            raise ValueError(f"need 0 <= k < n, got n={self.n}, k={self.k}")
        if len(self.generators) != self.n - self.k:
            raise ValueError(f"expected {self.n - self.k} generators, got {len(self.generators)}")
        for g in self.generators:
            if g.n != self.n:
                raise ValueError(f"generator {g} has length {g.n}, expected {self.n}")

    @classmethod
    def from_strings(cls, words: Sequence[str], *, check: bool = True) -> StabilizerCode:
        gens = tuple(PauliString.from_str(w) for w in words)
        if not gens:
            raise ValueError("need at least one generator")
        n = gens[0].n
        code = cls(n, n - len(gens), gens)
        if check:
            validate(code)
        return code

    @property
    def r(self) -> int:
        """Number of generators, n - k."""
        return self.n - self.k

    def __str__(self) -> str:
        return "{" + ",".join(str(g) for g in self.generators) + "}"

    def twisted_rows(self) -> list[int]:
        # parity(row & P.as_int()) == star(S_j, P)
        return [g.z | (g.x << self.n) for g in self.generators]

    def symplectic_matrix(self) -> np.ndarray:
        return np.array([to_symplectic(g) for g in self.generators], dtype=np.uint8)

    def same_group(self, other: StabilizerCode) -> bool:
        if self.n != other.n or self.k != other.k:
            return False
        rows = [g.as_int() for g in self.generators]
        both = rows + [g.as_int() for g in other.generators]
        return _gf2.rank(rows) == self.r and _gf2.rank(both) == self.r


def validate(code: StabilizerCode) -> None:
    """Raise a :class:`CodeError` subclass unless the stabilizer set is valid."""
    gens = code.generators
    for j, g in enumerate(gens):
        if g.is_identity():
            raise AllIdentityGenerator(j + 1)
    for j in range(len(gens)):
        for jp in range(j + 1, len(gens)):
            if star(gens[j], gens[jp]):
                raise NonCommuting(j + 1, jp + 1)
    rk = _gf2.rank(g.as_int() for g in gens)
    if rk < code.r:
        raise DependentGenerators(rk, code.r)


Syndrome = tuple[int, ...]


def parse_syndrome(bits: str | Sequence[int], r: int | None = None) -> Syndrome:
    """Bitstring such as ``"0011"`` (leftmost is generator 1) to a tuple."""
    if isinstance(bits, str):
        if set(bits) - {"0", "1"}:
            raise ValueError(f"syndrome must be a bitstring, got {bits!r}")
        out = tuple(int(c) for c in bits)
    else:
        out = tuple(int(b) for b in bits)
        if set(out) - {0, 1}:
            raise ValueError(f"syndrome bits must be 0/1, got {out}")
    if r is not None and len(out) != r:
        raise ValueError(f"syndrome has length {len(out)}, expected {r}")
    return out


def syndrome_mask(s: Sequence[int]) -> int:
    return sum(int(b) << j for j, b in enumerate(s))


def syndrome(code: StabilizerCode, e: PauliString) -> Syndrome:
    if e.n != code.n:
        raise ValueError(f"error has length {e.n}, code has n={code.n}")
    return tuple(star(g, e) for g in code.generators)


def coset_representative(code: StabilizerCode, s: Sequence[int]) -> PauliString:
    """A fixed element with syndrome ``s``.

    Solves the 2n-variable system over the packed vector ``x | z << n`` by
    Gaussian elimination, pivoting on the lowest-index variable and setting
    free variables to zero. The zero syndrome therefore gives the all-I string.
    """
    s = parse_syndrome(s, code.r)
    v = _gf2.solve(code.twisted_rows(), s)
    if v is None:
        raise DependentGenerators(_gf2.rank(code.twisted_rows()), code.r)
    return PauliString.from_int(code.n, v)


def normalizer_basis(code: StabilizerCode, qubits: Iterable[int] | None = None) -> list[PauliString]:
    """Basis of the elements of S-perp supported on ``qubits`` (0-based; default all)."""
    n = code.n
    qs = range(n) if qubits is None else list(qubits)
    cols = [q for q in qs] + [q + n for q in qs]
    return [PauliString.from_int(n, v) for v in _gf2.nullspace(code.twisted_rows(), cols)]


def in_stabilizer(code: StabilizerCode, p: PauliString) -> bool:
    echelon, pivots = _gf2.rref(g.as_int() for g in code.generators)
    return _gf2.in_span(p.as_int(), echelon, pivots)
