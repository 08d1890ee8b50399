"""Min-Sum decoding, Sum-Product marginals and the weight enumerator on a trellis.

All three run one pass per section over the edge arrays, so their cost is
linear in the number of edges (at most four per vertex).
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field

import numpy as np

from .channel import PauliChannel
from .pauli import Pauli, PauliString
from .trellis import Trellis


class NoFinitePath(ValueError):
    """Every element of the coset has probability zero."""


class ZeroMassCoset(ValueError):
    """The coset carries no probability mass under the channel."""


@dataclass
class OpCounter:
    """Tally of elementary trellis operations (edge relaxations plus vertex updates)."""

    ops: int = 0

    def add(self, k: int) -> None:
        self.ops += int(k)


@dataclass(frozen=True)
class DecodeResult:
    error: PauliString
    weight: float


@dataclass(frozen=True, eq=False)
class MarginalTable:
    """``p[i, P]``: probability that qubit ``i + 1`` suffered ``P`` given the syndrome."""

    p: np.ndarray

    def row(self, i: int) -> dict[Pauli, float]:
        return {lab: float(self.p[i, int(lab)]) for lab in Pauli}

    def lines(self) -> list[str]:
        return [" ".join(f"{v:.17g}" for v in row) for row in self.p]


def _check_channel(t: Trellis, ch: PauliChannel) -> None:
    if ch.n != t.n:
        raise ValueError(f"channel has {ch.n} qubits, trellis has {t.n} sections")


def min_sum(
    t: Trellis,
    ch: PauliChannel,
    *,
    seed: int | None = None,
    counter: OpCounter | None = None,
) -> DecodeResult:
    """Most likely error with the trellis syndrome (Viterbi).

    Path weights accumulate left to right from 0.0. Among minimum-weight
    paths into a vertex the survivor is the lexicographically smallest label
    string under I < X < Y < Z; with ``seed`` set, ties are broken uniformly
    at random instead.

    Weights are compared exactly as floats. Two paths whose total weights tie
    can still differ by an ulp in their prefix sums where they merge, so the
    lexicographic choice is only guaranteed among paths that tie there too.
    """
    _check_channel(t, ch)
    rng = None if seed is None else np.random.default_rng(seed)
    weight = np.zeros(1)
    rank = np.zeros(1, dtype=np.int64)
    preds, labels = [], []
    for i, sec in enumerate(t.sections):
        cand = weight[sec.src] + ch.weights[i][sec.label]
        if rng is None:
            tie = rank[sec.src] * 4 + sec.label
        else:
            tie = rng.permutation(len(sec))
        order = np.lexsort((tie, cand, sec.dst))
        dst_sorted = sec.dst[order]
        first = np.ones(order.size, dtype=bool)
        first[1:] = dst_sorted[1:] != dst_sorted[:-1]
        chosen = order[first]
        weight = cand[chosen]
        pred = sec.src[chosen]
        lab = sec.label[chosen]
        # survivors at this depth ranked by (predecessor rank, label) = lex order of paths
        rank = np.argsort(np.argsort(rank[pred] * 4 + lab, kind="stable"), kind="stable")
        preds.append(pred)
        labels.append(lab)
        if counter is not None:
            counter.add(len(sec) + weight.size)

    if not np.isfinite(weight[0]):
        raise NoFinitePath("no path with positive probability")
    v = 0
    out = [Pauli.I] * t.n
    for i in range(t.n - 1, -1, -1):
        out[i] = Pauli(int(labels[i][v]))
        v = int(preds[i][v])
    return DecodeResult(PauliString.from_paulis(out), float(weight[0]))


@dataclass(frozen=True, eq=False)
class Messages:
    forward: list[np.ndarray]
    backward: list[np.ndarray]
    F: np.ndarray
    B: np.ndarray


def forward_backward(t: Trellis, ch: PauliChannel, counter: OpCounter | None = None) -> Messages:
    """Normalized forward and backward vertex probabilities."""
    _check_channel(t, ch)
    sizes = t.sizes
    f = [np.ones(1)]
    F = np.empty(t.n)
    for i, sec in enumerate(t.sections):
        pr = ch.probs[i]
        fi = np.bincount(sec.dst, weights=f[-1][sec.src] * pr[sec.label], minlength=sizes[i + 1])
        F[i] = fi.sum()
        if F[i] == 0.0:
            raise ZeroMassCoset("the syndrome coset has zero probability")
        f.append(fi / F[i])
        if counter is not None:
            counter.add(len(sec) + sizes[i + 1])

    b: list[np.ndarray] = [np.empty(0)] * (t.n + 1)
    b[t.n] = np.ones(1)
    B = np.empty(t.n)
    for i in range(t.n - 1, -1, -1):
        sec = t.sections[i]
        pr = ch.probs[i]
        bi = np.bincount(sec.src, weights=b[i + 1][sec.dst] * pr[sec.label], minlength=sizes[i])
        B[i] = bi.sum()
        if B[i] == 0.0:
            raise ZeroMassCoset("the syndrome coset has zero probability")
        b[i] = bi / B[i]
        if counter is not None:
            counter.add(len(sec) + sizes[i])
    return Messages(f, b, F, B)


def sum_product(t: Trellis, ch: PauliChannel, *, counter: OpCounter | None = None) -> MarginalTable:
    """Per-qubit error marginals conditioned on the trellis syndrome.

    The per-section normalizers leave each row summing to a common constant
    rather than 1, so rows are rescaled at the end.
    """
    msg = forward_backward(t, ch, counter)
    p = np.empty((t.n, 4))
    for i, sec in enumerate(t.sections):
        pr = ch.probs[i]
        mass = msg.forward[i][sec.src] * msg.backward[i + 1][sec.dst] * pr[sec.label]
        row = np.bincount(sec.label, weights=mass, minlength=4)
        total = row.sum()
        if total == 0.0:
            raise ZeroMassCoset("the syndrome coset has zero probability")
        p[i] = row / total
        if counter is not None:
            counter.add(len(sec))
    p.setflags(write=False)
    return MarginalTable(p)


Monomial = tuple[int, int, int]
_MONO: dict[int, Monomial] = {
    Pauli.I: (0, 0, 0),
    Pauli.X: (1, 0, 0),
    Pauli.Y: (0, 1, 0),
    Pauli.Z: (0, 0, 1),
}


@dataclass(frozen=True)
class WeightEnumerator:
    """Sparse ``sum a[u,v,w] x^u y^v z^w`` with exact integer coefficients."""

    coeffs: Mapping[Monomial, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {k: int(v) for k, v in sorted(self.coeffs.items()) if v})

    def __getitem__(self, key: Monomial) -> int:
        return self.coeffs.get(tuple(key), 0)

    def __eq__(self, other):
        return isinstance(other, WeightEnumerator) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def evaluate(self, x, y, z):
        return sum(c * x**u * y**v * z**w for (u, v, w), c in self.coeffs.items())

    def total(self) -> int:
        return sum(self.coeffs.values())

    def lines(self) -> list[str]:
        return [f"{u} {v} {w} {c}" for (u, v, w), c in self.coeffs.items()]

    def __str__(self) -> str:
        terms = []
        for (u, v, w), c in self.coeffs.items():
            mono = "*".join(
                f"{s}^{e}" if e > 1 else s for s, e in (("x", u), ("y", v), ("z", w)) if e
            )
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"


def weight_enumerator(t: Trellis, *, counter: OpCounter | None = None) -> WeightEnumerator:
    """Count S-perp by X/Y/Z content from the zero-syndrome trellis.

    Each vertex accumulates the polynomial of all paths reaching it; an edge
    multiplies by the monomial of its label (1, x, y or z).
    """
    if any(t.syndrome):
        raise ValueError("the weight enumerator needs the zero-syndrome trellis")
    polys: list[dict[Monomial, int]] = [{(0, 0, 0): 1}]
    for i, sec in enumerate(t.sections):
        nxt: list[dict[Monomial, int]] = [{} for _ in range(t.sizes[i + 1])]
        for a, b, lab in zip(sec.src.tolist(), sec.dst.tolist(), sec.label.tolist()):
            du, dv, dw = _MONO[lab]
            acc = nxt[b]
            for (u, v, w), c in polys[a].items():
                key = (u + du, v + dv, w + dw)
                acc[key] = acc.get(key, 0) + c
        polys = nxt
        if counter is not None:
            counter.add(len(sec) + len(nxt))
    return WeightEnumerator(polys[0])
