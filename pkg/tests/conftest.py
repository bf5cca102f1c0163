import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))
sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "scripts"))

from cp2arr.geometry import normalize_line  # noqa: E402

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def _triples(bound):
    coeff = st.integers(-bound, bound)
    return st.tuples(coeff, coeff, coeff).filter(lambda t: t != (0, 0, 0))


@st.composite
def arrangements(draw, min_n=1, max_n=8):
    """Raw line lists; small coefficient bounds make concurrences common."""
    bound = draw(st.sampled_from([1, 2, 3, 9]))
    # only 13 distinct lines have coefficients in {-1, 0, 1}
    cap = min(max_n, 13) if bound == 1 else max_n
    return draw(st.lists(_triples(bound), min_size=min(min_n, cap), max_size=cap, unique_by=normalize_line))


@pytest.fixture
def data_dir():
    return DATA
