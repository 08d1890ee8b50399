import pytest

from stabtrellis.convolutional import ConvolutionalSpec, column_activity, memory, sharp, unroll
from stabtrellis.pauli import CodeError, PauliString, StabilizerCode
from stabtrellis.trellis import build_wolf_trellis, is_trellis_oriented, trellis_oriented_form

from .conftest import CYCLIC5

P = PauliString.from_str

# self-commuting shift families found by random search; memory = width - 1 for eta = 1
FAMILIES = [
    (1, 0, ["XX"]),
    (1, 0, ["YYY"]),
    (1, 0, ["XZX"]),
    (1, 0, ["YZZY"]),
    (1, 0, ["YXYXY"]),
    (1, 0, ["YIZZIY"]),
    (1, 0, ["XIIIXXX"]),
    (2, 0, ["ZXZX", "YZYZ"]),
]


def test_unroll_reproduces_cyclic5():
    spec = ConvolutionalSpec.from_strings(1, 0, ["XZX"], head=["ZXIII"])
    code = unroll(spec, 5)
    assert [str(g) for g in code.generators] == CYCLIC5
    assert code.k == 1


def test_unroll_eta2_shift():
    code = unroll(ConvolutionalSpec.from_strings(2, 0, ["ZXZX", "YZYZ"]), 8)
    gens = code.generators
    # rows alternate between the two patterns; same-pattern rows are 2-shifts
    for j in range(len(gens) - 2):
        assert gens[j + 2].x == gens[j].x << 2 and gens[j + 2].z == gens[j].z << 2
    assert len(gens) == 6


def test_unroll_errors():
    with pytest.raises(ValueError):
        unroll(ConvolutionalSpec.from_strings(1, 0, ["XZX"]), 2)
    with pytest.raises(CodeError):
        unroll(ConvolutionalSpec.from_strings(1, 0, ["XZ"]), 4)
    with pytest.raises(ValueError):
        ConvolutionalSpec.from_strings(2, 0, ["XX"])
    with pytest.raises(ValueError):
        unroll(ConvolutionalSpec.from_strings(1, 0, ["XZX"], head=["ZXI"]), 5)


@pytest.mark.parametrize("word, i, expected", [("ZXIII", 1, 1), ("ZXIII", 2, 0), ("IIXZX", 2, 0), ("IIXZX", 3, 1)])
def test_sharp(word, i, expected):
    assert sharp(P(word), i) == expected


def test_memory_cyclic5(cyclic5_code):
    assert column_activity(cyclic5_code)[:4] == (2, 2, 2, 1)
    assert memory(cyclic5_code) == 2
    assert max(build_wolf_trellis(cyclic5_code, "0011").sizes) == 2 ** 2


def test_memory_single_generator():
    assert memory(StabilizerCode.from_strings(["IXII"])) == 0
    assert memory(StabilizerCode.from_strings(["IXZI"])) == 1


def test_memory_depends_on_generating_set():
    code = StabilizerCode.from_strings(["XXII", "XXZZ"])
    tof = trellis_oriented_form(code)
    assert tof.same_group(code)
    assert (memory(code), memory(tof)) == (2, 1)


@pytest.mark.parametrize("eta, kappa, block", FAMILIES)
def test_state_space_bound_and_achievability(eta, kappa, block):
    spec = ConvolutionalSpec.from_strings(eta, kappa, block)
    for n in range(spec.width, 21):
        code = unroll(spec, n)
        m = memory(code)
        assert m <= 6
        act = column_activity(code)
        s = (0,) * code.r
        sizes = build_wolf_trellis(code, s).sizes
        for i in range(1, n + 1):
            assert sizes[i] <= 2 ** act[i - 1] <= 2 ** m
        assert is_trellis_oriented(code)
        for i in range(1, n + 1):
            if act[i - 1] == m:
                assert sizes[i] == 2 ** m


def test_bulk_shift_invariance():
    spec = ConvolutionalSpec.from_strings(1, 0, ["YXYXY"])
    code = unroll(spec, 12)
    for a, b in zip(code.generators, code.generators[1:]):
        assert b.x == a.x << 1 and b.z == a.z << 1
