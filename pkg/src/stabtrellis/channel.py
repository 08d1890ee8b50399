"""Memoryless Pauli channels."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .pauli import Pauli, PauliString

_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class PauliChannel:
    """Independent per-qubit distributions over G_1.

    ``probs[i]`` holds ``(Pr_i(I), Pr_i(X), Pr_i(Y), Pr_i(Z))`` for qubit ``i + 1``.
    """

    probs: np.ndarray

    def __post_init__(self):
        p = np.array(self.probs, dtype=np.float64)
        if p.ndim != 2 or p.shape[1] != 4 or p.shape[0] < 1:
            raise ValueError(f"expected an (n, 4) probability table, got shape {p.shape}")
        if np.any(p < 0) or not np.all(np.isfinite(p)):
            raise ValueError("probabilities must be finite and nonnegative")
        bad = np.flatnonzero(np.abs(p.sum(axis=1) - 1.0) > _TOL)
        if bad.size:
            raise ValueError(f"distribution for qubit {bad[0] + 1} does not sum to 1")
        p.setflags(write=False)
        object.__setattr__(self, "probs", p)

    @property
    def n(self) -> int:
        return self.probs.shape[0]

    @cached_property
    def weights(self) -> np.ndarray:
        """Edge weights ``-log Pr_i(label)``; +inf where the probability is 0."""
        w = np.array([[edge_weight_value(q) for q in row] for row in self.probs])
        w.setflags(write=False)
        return w

    def __eq__(self, other):
        return isinstance(other, PauliChannel) and np.array_equal(self.probs, other.probs)

    __hash__ = None  # type: ignore[assignment]


def edge_weight_value(prob: float) -> float:
    if prob == 0.0:
        return math.inf
    # 0.0 - log(1.0) is +0.0, never -0.0
    return 0.0 - math.log(prob)


def depolarizing(n: int, p: float) -> PauliChannel:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"depolarizing probability must lie in [0, 1], got {p}")
    row = [1.0 - p, p / 3, p / 3, p / 3]
    return PauliChannel(np.tile(row, (n, 1)))


def uniform(n: int) -> PauliChannel:
    return depolarizing(n, 0.75)


def from_rows(rows: Sequence[Sequence[float]]) -> PauliChannel:
    return PauliChannel(np.asarray(rows, dtype=np.float64))


def edge_weight(ch: PauliChannel, i: int, label: Pauli) -> float:
    """Weight of an edge in section ``i`` (1-based) carrying ``label``."""
    if not 1 <= i <= ch.n:
        raise IndexError(f"qubit index {i} outside 1..{ch.n}")
    return float(ch.weights[i - 1, int(label)])


def path_weight(ch: PauliChannel, e: PauliString) -> float:
    """Sum of edge weights, accumulated left to right from 0.0."""
    if e.n != ch.n:
        raise ValueError(f"error has length {e.n}, channel has n={ch.n}")
    total = 0.0
    for i, p in enumerate(e):
        total = total + float(ch.weights[i, int(p)])
    return total


def likelihood(ch: PauliChannel, e: PauliString) -> float:
    """``sum_i log Pr_i(e_i)``; -inf if any factor is impossible."""
    return -path_weight(ch, e)


def sample_error(ch: PauliChannel, seed: int | np.random.Generator) -> PauliString:
    """Draw each qubit independently from its distribution.

    An integer seed feeds ``numpy.random.default_rng`` (PCG64); one uniform
    per qubit is inverted through the cumulative distribution in I, X, Y, Z order.
    """
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    u = rng.random(ch.n)
    cdf = np.cumsum(ch.probs, axis=1)
    labels = np.minimum((u[:, None] >= cdf).sum(axis=1), 3)
    # skip labels with zero mass that a rounding tail could otherwise select
    for i in np.flatnonzero(ch.probs[np.arange(ch.n), labels] == 0.0):
        labels[i] = int(np.flatnonzero(ch.probs[i] > 0)[-1])
    return PauliString.from_paulis(Pauli(int(v)) for v in labels)
