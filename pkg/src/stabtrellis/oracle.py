"""Brute-force reference values by explicit coset enumeration.

Nothing here touches the trellis code; cosets come straight from GF(2)
linear algebra, so agreement with the trellis algorithms is a real check.
Everything is exponential in ``n + k`` and guarded accordingly.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _gf2
from .algorithms import DecodeResult, MarginalTable, NoFinitePath, WeightEnumerator, ZeroMassCoset
from .channel import PauliChannel
from .pauli import Pauli, PauliString, StabilizerCode, coset_representative, parse_syndrome

MAX_LOG_SIZE = 24


class SizeGuardError(ValueError):
    pass


def _guard(code: StabilizerCode, limit: int) -> None:
    if code.n + code.k > limit:
        raise SizeGuardError(f"coset enumeration needs n + k <= {limit}, got {code.n + code.k}")


@dataclass(frozen=True, eq=False)
class CosetEnumeration:
    """The coset ``P_s + S-perp`` as packed symplectic ints ``x | z << n``."""

    code: StabilizerCode
    syndrome: tuple[int, ...]
    values: np.ndarray

    def __len__(self) -> int:
        return int(self.values.size)

    @cached_property
    def elements(self) -> tuple[PauliString, ...]:
        n = self.code.n
        return tuple(PauliString.from_int(n, int(v)) for v in self.values)

    @cached_property
    def labels(self) -> np.ndarray:
        """``(size, n)`` array of Pauli label values (I=0, X=1, Y=2, Z=3)."""
        n = self.code.n
        v = self.values
        shifts = np.arange(n, dtype=np.uint64)
        x = ((v[:, None] >> shifts) & np.uint64(1)).astype(np.int8)
        z = ((v[:, None] >> (shifts + np.uint64(n))) & np.uint64(1)).astype(np.int8)
        return x + 3 * z - 2 * x * z


def enumerate_coset(code: StabilizerCode, s, *, max_log_size: int = MAX_LOG_SIZE) -> CosetEnumeration:
    _guard(code, max_log_size)
    s = parse_syndrome(s, code.r)
    rep = coset_representative(code, s).as_int()
    basis = _gf2.nullspace(code.twisted_rows(), range(2 * code.n))
    assert len(basis) == code.n + code.k
    values = np.array(_gf2.span(basis, rep), dtype=np.uint64)
    return CosetEnumeration(code, s, values)


def _coset(code, s, coset):
    return coset if coset is not None else enumerate_coset(code, s)


def coset_weights(coset: CosetEnumeration, ch: PauliChannel) -> np.ndarray:
    """Path weight of every element, accumulated left to right from 0.0."""
    L = coset.labels
    total = np.zeros(len(coset))
    for i in range(coset.code.n):
        total = total + ch.weights[i][L[:, i]]
    return total


def brute_mle(code: StabilizerCode, s, ch: PauliChannel, *, coset: CosetEnumeration | None = None) -> DecodeResult:
    """Minimum-weight coset element; ties go to the lexicographically smallest (I<X<Y<Z)."""
    coset = _coset(code, s, coset)
    w = coset_weights(coset, ch)
    best = w.min()
    if not np.isfinite(best):
        raise NoFinitePath("no coset element has positive probability")
    cand = np.flatnonzero(w == best)
    L = coset.labels[cand]
    pick = cand[np.lexsort(L[:, ::-1].T)[0]]
    return DecodeResult(PauliString.from_int(code.n, int(coset.values[pick])), float(best))


def argmin_count(code: StabilizerCode, s, ch: PauliChannel, *, coset: CosetEnumeration | None = None) -> int:
    """Number of coset elements attaining the minimum weight."""
    w = coset_weights(_coset(code, s, coset), ch)
    return int(np.count_nonzero(w == w.min()))


def brute_marginals(code: StabilizerCode, s, ch: PauliChannel, *, coset: CosetEnumeration | None = None) -> MarginalTable:
    coset = _coset(code, s, coset)
    L = coset.labels
    prob = np.ones(len(coset))
    for i in range(code.n):
        prob = prob * ch.probs[i][L[:, i]]
    total = prob.sum()
    if total == 0.0:
        raise ZeroMassCoset("the syndrome coset has zero probability")
    p = np.empty((code.n, 4))
    for i in range(code.n):
        p[i] = np.bincount(L[:, i], weights=prob, minlength=4) / total
    return MarginalTable(p)


def brute_enumerator(code: StabilizerCode) -> WeightEnumerator:
    L = enumerate_coset(code, [0] * code.r).labels
    triples = zip(*((L == lab).sum(axis=1).tolist() for lab in (Pauli.X, Pauli.Y, Pauli.Z)))
    return WeightEnumerator(Counter(triples))


def subgroup_log_sizes(code: StabilizerCode, i: int) -> tuple[int, int]:
    """log2 sizes of the past and future subgroups at cut ``i``, by filtering S-perp."""
    n = code.n
    v = enumerate_coset(code, [0] * code.r).values
    full = np.uint64((1 << n) - 1)
    support = (v & full) | (v >> np.uint64(n))
    past = int(np.count_nonzero((support >> np.uint64(i)) == 0))
    future = int(np.count_nonzero((support & np.uint64((1 << i) - 1)) == 0))
    return past.bit_length() - 1, future.bit_length() - 1


def brute_profile_bound(code: StabilizerCode, i: int) -> int:
    """``n + k - log2|past_i| - log2|future_i|``."""
    if not 0 <= i <= code.n:
        raise IndexError(i)
    lp, lf = subgroup_log_sizes(code, i)
    return code.n + code.k - lp - lf
