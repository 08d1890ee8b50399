import numpy as np
import pydot
import pytest
from hypothesis import given, settings

from stabtrellis.oracle import enumerate_coset
from stabtrellis.pauli import Pauli, PauliString, StabilizerCode, star, syndrome
from stabtrellis.random_codes import random_code
from stabtrellis.trellis import (
    Section,
    Span,
    StateProfile,
    Trellis,
    build_wolf_trellis,
    export_dot,
    future_subgroup,
    is_trellis_oriented,
    past_subgroup,
    pi_truncate,
    profile_lower_bound,
    span,
    state_profile,
    trellis_oriented_form,
)

from .conftest import XXZZ, CYCLIC5, all_syndromes, codes

P = PauliString.from_str


@pytest.mark.parametrize("i, expected", [(0, "IIII"), (4, "XYZI"), (2, "XYII")])
def test_pi_truncate(i, expected):
    assert pi_truncate(P("XYZI"), i) == P(expected)


def test_pi_truncate_range():
    with pytest.raises(IndexError):
        pi_truncate(P("XY"), 3)


def test_xxzz_profile(xxzz_code):
    t = build_wolf_trellis(xxzz_code, (0, 0))
    assert t.sizes == (1, 4, 4, 4, 1)
    assert state_profile(t) == StateProfile((0, 2, 2, 2, 0))


def test_cyclic5_profile(cyclic5_code):
    t = build_wolf_trellis(cyclic5_code, "0011")
    assert t.sizes == (1, 4, 4, 4, 2, 1)
    assert state_profile(t).xi == (0, 2, 2, 2, 1, 0)


def test_single_qubit_trellis():
    code = StabilizerCode.from_strings(["X"])
    t = build_wolf_trellis(code, (0,))
    assert t.sizes == (1, 1)
    assert t.edges(1) == [(0, 0, Pauli.I), (0, 0, Pauli.X)]
    assert state_profile(t).xi == (0, 0)
    assert sorted(map(str, t.paths())) == ["I", "X"]


def test_state_profile_rejects_non_power_of_two(xxzz_code):
    t = build_wolf_trellis(xxzz_code, (0, 0))
    e = np.zeros(0, dtype=np.int64)
    bad = Trellis(t.code, t.syndrome, ((0,), (0, 1, 2), (0,)), (Section(e, e, e), Section(e, e, e)))
    with pytest.raises(ValueError):
        state_profile(bad)


@pytest.mark.parametrize("word, c, d", [("XZXII", 1, 3), ("IIXZX", 3, 5), ("IZII", 2, 2)])
def test_span(word, c, d):
    assert span(P(word)) == Span(c, d)


def test_span_identity():
    with pytest.raises(ValueError):
        span(P("III"))


def test_is_trellis_oriented_examples(xxzz_code, cyclic5_code):
    assert is_trellis_oriented(xxzz_code)
    assert is_trellis_oriented(cyclic5_code)
    triple = StabilizerCode.from_strings(["XIX", "YIY", "ZXZ"])
    assert not is_trellis_oriented(triple)
    same_symbol = StabilizerCode.from_strings(["XXII", "XXZZ"])
    assert not is_trellis_oriented(same_symbol)


def test_tof_resolves_triple_start():
    code = StabilizerCode.from_strings(["XIX", "YIY", "ZXZ"])
    out = trellis_oriented_form(code)
    assert is_trellis_oriented(out)
    assert out.same_group(code)
    starts = sorted(span(g).c for g in out.generators)
    assert starts == [1, 1, 2]
    assert [str(g) for g in out.generators] == ["XIX", "YIY", "IXI"]


@pytest.mark.parametrize("words", [XXZZ, CYCLIC5])
def test_tof_idempotent_on_oriented_input(words):
    code = StabilizerCode.from_strings(words)
    out = trellis_oriented_form(code)
    assert is_trellis_oriented(out) and out.same_group(code)
    assert trellis_oriented_form(out) == out


def test_tof_property_random_codes():
    rng = np.random.default_rng(20240601)
    for _ in range(1000):
        code = random_code(rng, int(rng.integers(1, 9)))
        out = trellis_oriented_form(code)
        assert is_trellis_oriented(out), code
        assert out.same_group(code), code
        assert trellis_oriented_form(code) == out


def test_subgroup_boundaries(cyclic5_code):
    n, k = cyclic5_code.n, cyclic5_code.k
    assert past_subgroup(cyclic5_code, 0) == [PauliString.identity(n)]
    assert future_subgroup(cyclic5_code, n) == [PauliString.identity(n)]
    full = {str(p) for p in enumerate_coset(cyclic5_code, "0000").elements}
    assert {str(p) for p in future_subgroup(cyclic5_code, 0)} == full
    assert {str(p) for p in past_subgroup(cyclic5_code, n)} == full
    assert len(full) == 2 ** (n + k)


@given(codes(max_n=7))
def test_subgroups_are_orthogonal_and_supported(code):
    for i in range(code.n + 1):
        past, future = past_subgroup(code, i), future_subgroup(code, i)
        for group, mask in ((past, (1 << i) - 1), (future, ((1 << code.n) - 1) ^ ((1 << i) - 1))):
            size = len(group)
            assert size & (size - 1) == 0
            assert len(set(group)) == size
            for p in group:
                assert p.support & ~mask == 0
                assert not any(star(g, p) for g in code.generators)


def test_subgroup_size_guard():
    code = random_code(3, 11, 5)
    with pytest.raises(ValueError):
        past_subgroup(code, 3)


def test_profile_bound_xxzz_equality(xxzz_code):
    t = build_wolf_trellis(xxzz_code, (0, 0))
    for i in range(5):
        lp = len(past_subgroup(xxzz_code, i)).bit_length() - 1
        lf = len(future_subgroup(xxzz_code, i)).bit_length() - 1
        assert len(past_subgroup(xxzz_code, i)) * len(future_subgroup(xxzz_code, i)) * t.sizes[i] == 2 ** 6
        assert state_profile(t).xi[i] == 4 + 2 - lp - lf
    assert profile_lower_bound(xxzz_code) == (0, 2, 2, 2, 0)


def _check_structure(t, code):
    r = code.r
    assert t.sizes[0] == t.sizes[-1] == 1
    assert all(size <= 2 ** r for size in t.sizes)
    reach_fwd = [set() for _ in range(t.n + 1)]
    reach_fwd[0] = {0}
    for i, sec in enumerate(t.sections, start=1):
        assert sec.src.max() < t.sizes[i - 1] and sec.dst.max() < t.sizes[i]
        pairs = list(zip(sec.src.tolist(), sec.label.tolist()))
        assert len(pairs) == len(set(pairs))  # one edge per label per vertex
        reach_fwd[i] = {b for a, b in zip(sec.src.tolist(), sec.dst.tolist()) if a in reach_fwd[i - 1]}
    reach_bwd = [set() for _ in range(t.n + 1)]
    reach_bwd[t.n] = {0}
    for i in range(t.n, 0, -1):
        sec = t.sections[i - 1]
        reach_bwd[i - 1] = {a for a, b in zip(sec.src.tolist(), sec.dst.tolist()) if b in reach_bwd[i]}
    for i, size in enumerate(t.sizes):
        assert reach_fwd[i] == reach_bwd[i] == set(range(size))


@settings(max_examples=60)
@given(codes(max_n=6))
def test_path_bijection_all_syndromes(code):
    everything = set()
    for s in all_syndromes(code.r):
        t = build_wolf_trellis(code, s)
        _check_structure(t, code)
        paths = [str(p) for p in t.paths()]
        assert len(paths) == len(set(paths)) == 2 ** (code.n + code.k)
        for p in paths:
            assert syndrome(code, P(p)) == s
        everything |= set(paths)
    assert len(everything) == 4 ** code.n


@settings(max_examples=40)
@given(codes(max_n=6))
def test_vertex_tags_are_partial_syndromes(code):
    for s in all_syndromes(code.r):
        t = build_wolf_trellis(code, s)
        coset = enumerate_coset(code, s).elements
        for i in range(code.n + 1):
            tags = {syndrome(code, pi_truncate(p, i)) for p in coset}
            assert {t.tag_bits(i, v) for v in range(t.sizes[i])} == tags


@pytest.mark.parametrize("words", [XXZZ, CYCLIC5])
def test_tof_profile_is_syndrome_independent(words):
    code = trellis_oriented_form(StabilizerCode.from_strings(words))
    base = build_wolf_trellis(code, (0,) * code.r).sizes
    for s in all_syndromes(code.r):
        assert build_wolf_trellis(code, s).sizes == base


def test_dot_trivial():
    t = build_wolf_trellis(StabilizerCode.from_strings(["X"]), (0,))
    (graph,) = pydot.graph_from_dot_data(export_dot(t))
    nodes = [nd for nd in graph.get_nodes() if nd.get_name() not in ("node", "graph", "edge")]
    assert len(nodes) == 2
    assert sorted(e.get_label().strip('"') for e in graph.get_edges()) == ["I", "X"]


def test_dot_xxzz_ranks(xxzz_code):
    t = build_wolf_trellis(xxzz_code, (0, 0))
    text = export_dot(t)
    assert text == export_dot(build_wolf_trellis(xxzz_code, (0, 0)))
    (graph,) = pydot.graph_from_dot_data(text)
    ranks = [len([nd for nd in sg.get_nodes()]) for sg in graph.get_subgraphs()]
    assert ranks == [1, 4, 4, 4, 1]
    nodes = [nd for nd in graph.get_nodes() if nd.get_name() not in ("node", "graph", "edge")]
    assert len(nodes) == 14
    assert len(graph.get_edges()) == t.num_edges
