import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from divcodes.classical import build_qr, extend_parity
from divcodes.doubling import build_table_chain, qr_css_code
from divcodes.gf2 import BitMatrix, BitVector

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def bit_matrices(draw, max_rows=8, max_cols=24, min_rows=0, min_cols=1):
    r = draw(st.integers(min_rows, max_rows))
    c = draw(st.integers(min_cols, max_cols))
    arr = draw(arrays(np.uint8, (r, c), elements=st.integers(0, 1)))
    return BitMatrix(arr, ncols=c)


@st.composite
def bit_vectors(draw, n):
    return BitVector(draw(arrays(np.uint8, (n,), elements=st.integers(0, 1))))


@pytest.fixture(scope="session")
def hamming7():
    return build_qr(7)


@pytest.fixture(scope="session")
def golay24():
    return extend_parity(build_qr(23))


@pytest.fixture(scope="session")
def steane():
    return qr_css_code(7)


@pytest.fixture(scope="session")
def qgolay():
    return qr_css_code(23)


@pytest.fixture(scope="session")
def q47():
    return qr_css_code(47)


@pytest.fixture(scope="session")
def chain47():
    return build_table_chain(47)


@pytest.fixture(scope="session")
def q15(chain47):
    return chain47[0].q3


@pytest.fixture(scope="session")
def q49(chain47):
    return chain47[1].q3


@pytest.fixture(scope="session")
def q95(chain47):
    return chain47[2].q3


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line per criterion; lines are echoed in the terminal summary."""
    lines = request.config.stash.setdefault(_ACCEPTANCE_KEY, [])

    def record(criterion: int, ok: bool, detail: str):
        line = f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} - {detail}"
        lines.append(line)
        print(line)
        assert ok, line

    return record


_ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
