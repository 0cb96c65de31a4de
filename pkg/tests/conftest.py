import numpy as np
import pytest

from taxitomo.discrete import BinaryMatrix, SumVectors
from taxitomo.geometry import Polygon

SQUARE = Polygon([(0, 0), (1, 0), (1, 1), (0, 1)])
TRIANGLE = Polygon([(0, 0), (1, 0), (0, 1)])
LSHAPE = Polygon([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])
PENTAGON = Polygon([(1, 0), (2, 1), (1.5, 2), (0.5, 2), (0, 1)])

EXAMPLE_SUMS = SumVectors((3, 1, 4, 4, 2), (4, 3, 1, 4, 2))
EXAMPLE_FINAL = BinaryMatrix.from_rows(["10011", "01000", "11110", "11011", "10010"])
EXAMPLE_M = np.array([
    [54, 48, 48, 50, 60],
    [46, 40, 40, 42, 52],
    [40, 34, 34, 36, 46],
    [42, 36, 36, 38, 48],
    [52, 46, 46, 48, 58],
])


@pytest.fixture
def square():
    return SQUARE


@pytest.fixture
def triangle():
    return TRIANGLE


@pytest.fixture
def lshape():
    return LSHAPE


@pytest.fixture(params=["square", "triangle", "lshape"])
def test_polygon(request):
    return {"square": SQUARE, "triangle": TRIANGLE, "lshape": LSHAPE}[request.param]
