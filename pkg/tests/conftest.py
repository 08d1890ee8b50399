import hypothesis
import hypothesis.strategies as st
import pytest

from stabtrellis.pauli import PauliString, StabilizerCode
from stabtrellis.random_codes import random_code

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")

XXZZ = ["XXXX", "ZZZZ"]
CYCLIC5 = ["ZXIII", "XZXII", "IXZXI", "IIXZX"]


@pytest.fixture
def xxzz_code():
    return StabilizerCode.from_strings(XXZZ)


@pytest.fixture
def cyclic5_code():
    return StabilizerCode.from_strings(CYCLIC5)


def pauli_strings(n):
    return st.builds(PauliString, st.just(n), st.integers(0, (1 << n) - 1), st.integers(0, (1 << n) - 1))


@st.composite
def codes(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(0, n - 1))
    return random_code(draw(st.integers(0, 2**32 - 1)), n, k)


def all_syndromes(r):
    for m in range(1 << r):
        yield tuple((m >> j) & 1 for j in range(r))


ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for the acceptance summary."""

    def record(key, ok, detail=""):
        ACCEPTANCE[key] = (bool(ok), detail)
        assert ok, f"{key}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k[1:].split()[0])):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}  {detail}")
