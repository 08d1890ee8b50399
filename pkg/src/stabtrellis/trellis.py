"""Syndrome trellises of stabilizer codes.

Vertices at depth ``i`` are tagged by the partial syndrome
``(S_j * pi_i(P))_j`` of a coset element ``P``; tags are packed into an int,
bit ``j - 1`` for generator ``j``. Vertex lists at each depth are sorted by tag
and edges in each section by ``(src, label)``.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from . import _gf2
from .pauli import (
    PAULIS,
    Pauli,
    PauliString,
    StabilizerCode,
    Syndrome,
    normalizer_basis,
    parse_syndrome,
    syndrome_mask,
)

MAX_ENUM_QUBITS = 10


@dataclass(frozen=True, eq=False)
class Section:
    """Edges from ``V_{i-1}`` to ``V_i`` as parallel index arrays."""

    src: np.ndarray
    dst: np.ndarray
    label: np.ndarray

    def __len__(self) -> int:
        return int(self.src.size)


@dataclass(frozen=True, eq=False)
class Trellis:
    code: StabilizerCode
    syndrome: Syndrome
    states: tuple[tuple[int, ...], ...]
    sections: tuple[Section, ...]

    @property
    def n(self) -> int:
        return len(self.sections)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(v) for v in self.states)

    @property
    def num_vertices(self) -> int:
        return sum(self.sizes)

    @property
    def num_edges(self) -> int:
        return sum(len(sec) for sec in self.sections)

    def tag_bits(self, depth: int, index: int) -> tuple[int, ...]:
        tag = self.states[depth][index]
        return tuple((tag >> j) & 1 for j in range(self.code.r))

    def edges(self, i: int) -> list[tuple[int, int, Pauli]]:
        """Section ``i`` (1-based) as ``(src, dst, label)`` triples."""
        sec = self.sections[i - 1]
        return [(int(a), int(b), Pauli(int(c))) for a, b, c in zip(sec.src, sec.dst, sec.label)]

    def paths(self) -> Iterator[PauliString]:
        """Label strings of every root-to-goal path (exponential; for tests)."""
        out_edges = []
        for sec in self.sections:
            adj: dict[int, list[tuple[int, int]]] = {}
            for a, b, c in zip(sec.src.tolist(), sec.dst.tolist(), sec.label.tolist()):
                adj.setdefault(a, []).append((c, b))
            out_edges.append(adj)

        def walk(depth, v, labels):
            if depth == self.n:
                yield PauliString.from_paulis(Pauli(c) for c in labels)
                return
            for c, w in out_edges[depth].get(v, ()):
                labels.append(c)
                yield from walk(depth + 1, w, labels)
                labels.pop()

        yield from walk(0, 0, [])


def pi_truncate(p: PauliString, i: int) -> PauliString:
    """Keep the first ``i`` coordinates, set the rest to I."""
    if not 0 <= i <= p.n:
        raise IndexError(f"truncation index {i} outside 0..{p.n}")
    keep = (1 << i) - 1
    return PauliString(p.n, p.x & keep, p.z & keep)


@dataclass(frozen=True)
class Span:
    c: int
    d: int


def span(g: PauliString) -> Span:
    """1-based positions of the first and last non-I coordinates."""
    sup = g.support
    if sup == 0:
        raise ValueError("span of the all-I string is undefined")
    return Span((sup & -sup).bit_length(), sup.bit_length())


def _column_masks(code: StabilizerCode) -> list[list[int]]:
    # masks[i][label]: generators anticommuting with ``label`` placed on qubit i
    masks = [[0] * 4 for _ in range(code.n)]
    for j, g in enumerate(code.generators):
        sup = g.support
        while sup:
            i = (sup & -sup).bit_length() - 1
            sup &= sup - 1
            sym = g[i]
            for lab in PAULIS:
                if sym.star(lab):
                    masks[i][lab] |= 1 << j
    return masks


def _ended_masks(code: StabilizerCode) -> list[int]:
    # ended[i]: generators whose support lies in the first i qubits
    ended = [0] * (code.n + 1)
    for j, g in enumerate(code.generators):
        ended[span(g).d] |= 1 << j
    for i in range(1, code.n + 1):
        ended[i] |= ended[i - 1]
    return ended


def build_wolf_trellis(code: StabilizerCode, s: Sequence[int] | str) -> Trellis:
    """Trellis whose paths are exactly the Pauli strings with syndrome ``s``.

    Built forward from the all-zero tag. Tag bits of generators already
    finished at depth ``i`` are fixed to their syndrome values as we go, which
    keeps every layer within ``2**(number of generators crossing the cut)``;
    a backward sweep then removes vertices with no path to the goal.
    """
    s = parse_syndrome(s, code.r)
    target = syndrome_mask(s)
    cols = _column_masks(code)
    ended = _ended_masks(code)

    layers: list[list[int]] = [[0]]
    raw: list[list[tuple[int, int, int]]] = []
    for i in range(code.n):
        nxt: set[int] = set()
        sec = []
        for v in layers[-1]:
            for lab in range(4):
                w = v ^ cols[i][lab]
                if (w ^ target) & ended[i + 1]:
                    continue
                nxt.add(w)
                sec.append((v, lab, w))
        layers.append(sorted(nxt))
        raw.append(sec)

    alive: list[set[int]] = [set() for _ in range(code.n + 1)]
    alive[code.n] = {target} & set(layers[code.n])
    for i in range(code.n - 1, -1, -1):
        alive[i] = {v for v, _, w in raw[i] if w in alive[i + 1]}
    if 0 not in alive[0]:
        raise ValueError("empty coset; the stabilizer set must be independent")

    states = tuple(tuple(sorted(a)) for a in alive)
    index = [{tag: k for k, tag in enumerate(layer)} for layer in states]
    sections = []
    for i, sec in enumerate(raw):
        kept = sorted(
            (index[i][v], lab, index[i + 1][w])
            for v, lab, w in sec
            if v in alive[i] and w in alive[i + 1]
        )
        arr = np.array(kept, dtype=np.int64).reshape(-1, 3)
        src, lab, dst = (np.ascontiguousarray(arr[:, c]) for c in range(3))
        for a in (src, dst, lab):
            a.setflags(write=False)
        sections.append(Section(src, dst, lab))
    return Trellis(code, s, states, tuple(sections))


@dataclass(frozen=True)
class StateProfile:
    xi: tuple[int, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(1 << x for x in self.xi)

    def __str__(self) -> str:
        return ",".join(map(str, self.xi))


def state_profile(t: Trellis) -> StateProfile:
    xi = []
    for i, size in enumerate(t.sizes):
        if size < 1 or size & (size - 1):
            raise ValueError(f"state space {i} has {size} vertices, not a power of two")
        xi.append(size.bit_length() - 1)
    return StateProfile(tuple(xi))


def _start_end_groups(gens: Sequence[PauliString], which: str) -> dict[int, list[int]]:
    groups: dict[int, list[int]] = {}
    for j, g in enumerate(gens):
        sp = span(g)
        groups.setdefault(sp.c if which == "start" else sp.d, []).append(j)
    return groups


def is_trellis_oriented(code: StabilizerCode) -> bool:
    """At most two generators share any span start, with distinct symbols there; same for ends."""
    gens = code.generators
    for which in ("start", "end"):
        for col, js in _start_end_groups(gens, which).items():
            symbols = {gens[j][col - 1] for j in js}
            if len(js) > 2 or len(symbols) < len(js):
                return False
    return True


def _reduce(row: PauliString, col: int, pivots: list[PauliString]) -> PauliString:
    """Clear ``row`` at ``col`` using at most two pivots with independent symbols there."""
    target = row[col]
    if len(pivots) >= 1 and pivots[0][col] == target:
        return row + pivots[0]
    if len(pivots) == 2:
        if pivots[1][col] == target:
            return row + pivots[1]
        return row + pivots[0] + pivots[1]
    return row


def trellis_oriented_form(code: StabilizerCode) -> StabilizerCode:
    """Same stabilizer group, generators with pairwise-resolved span starts and ends.

    Starts are resolved left to right by eliminating within each start
    column; ends are then resolved right to left, always adding a row whose
    start is no earlier than the row it modifies so starts stay put.
    Output rows are sorted by ``(start, end, word)``.
    """
    rows = list(code.generators)
    n = code.n

    for col in range(n):
        pivots: list[PauliString] = []
        for j, g in enumerate(rows):
            if span(g).c - 1 != col:
                continue
            if len(pivots) == 2 or any(p[col] == g[col] for p in pivots):
                rows[j] = _reduce(g, col, pivots)
            else:
                pivots.append(g)

    for col in range(n - 1, -1, -1):
        group = [j for j, g in enumerate(rows) if span(g).d - 1 == col]
        group.sort(key=lambda j: (-span(rows[j]).c, j))
        pivots = []
        for j in group:
            g = rows[j]
            if len(pivots) == 2 or any(p[col] == g[col] for p in pivots):
                rows[j] = _reduce(g, col, pivots)
            else:
                pivots.append(g)

    rows.sort(key=lambda g: (span(g).c, span(g).d, str(g)))
    return StabilizerCode(n, code.k, tuple(rows))


def _guard(code: StabilizerCode, limit: int) -> None:
    if code.n > limit:
        raise ValueError(f"subgroup enumeration limited to n <= {limit}, got n={code.n}")


def past_basis(code: StabilizerCode, i: int) -> list[PauliString]:
    if not 0 <= i <= code.n:
        raise IndexError(i)
    return normalizer_basis(code, range(i))


def future_basis(code: StabilizerCode, i: int) -> list[PauliString]:
    if not 0 <= i <= code.n:
        raise IndexError(i)
    return normalizer_basis(code, range(i, code.n))


def past_subgroup(code: StabilizerCode, i: int, *, max_n: int = MAX_ENUM_QUBITS) -> list[PauliString]:
    """Elements of S-perp that are I on the last ``n - i`` qubits."""
    _guard(code, max_n)
    basis = [b.as_int() for b in past_basis(code, i)]
    return [PauliString.from_int(code.n, v) for v in _gf2.span(basis)]


def future_subgroup(code: StabilizerCode, i: int, *, max_n: int = MAX_ENUM_QUBITS) -> list[PauliString]:
    """Elements of S-perp that are I on the first ``i`` qubits."""
    _guard(code, max_n)
    basis = [b.as_int() for b in future_basis(code, i)]
    return [PauliString.from_int(code.n, v) for v in _gf2.span(basis)]


def profile_lower_bound(code: StabilizerCode) -> tuple[int, ...]:
    """``n + k - log2|past_i| - log2|future_i|`` for i = 0..n, from subgroup dimensions."""
    return tuple(
        code.n + code.k - len(past_basis(code, i)) - len(future_basis(code, i))
        for i in range(code.n + 1)
    )


def export_dot(t: Trellis, name: str = "trellis") -> str:
    """Graphviz DOT text; one rank per depth, edges labelled by Pauli symbol."""
    r = t.code.r
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  node [shape=box, fontname="monospace"];']
    for depth, layer in enumerate(t.states):
        ids = []
        for k, tag in enumerate(layer):
            bits = "".join(str((tag >> j) & 1) for j in range(r))
            lines.append(f'  v{depth}_{k} [label="{bits}"];')
            ids.append(f"v{depth}_{k}")
        lines.append(f"  {{ rank=same; {'; '.join(ids)}; }}")
    for i, sec in enumerate(t.sections):
        for a, b, c in zip(sec.src.tolist(), sec.dst.tolist(), sec.label.tolist()):
            lines.append(f'  v{i}_{a} -> v{i + 1}_{b} [label="{Pauli(c).name}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def log2_exact(size: int) -> int:
    lg = size.bit_length() - 1
    if size < 1 or 1 << lg != size:
        raise ValueError(f"{size} is not a power of two")
    return lg
