import json
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from designideal import (
    code_roots_of_unity,
    full_factorial,
    simplex_centroid,
    validate,
)
from designideal.serialize import design_from_dict

DATA = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture(scope="session")
def circle_design():
    """Four axis points on the unit circle."""
    return validate([(1, 0), (-1, 0), (0, 1), (0, -1)])


@pytest.fixture(scope="session")
def grid3x3():
    return full_factorial([[-1, 0, 1]] * 2)


@pytest.fixture(scope="session")
def cube3():
    return full_factorial([[1, -1]] * 3)


@pytest.fixture(scope="session")
def cube5():
    return full_factorial([[1, -1]] * 5)


@pytest.fixture(scope="session")
def strength2_fraction(cube5):
    points = [
        (1, 1, 1, 1, 1), (1, 1, 1, -1, 1), (1, 1, -1, -1, 1),
        (1, -1, -1, 1, 1), (-1, 1, -1, 1, 1), (-1, -1, 1, 1, 1),
        (-1, -1, 1, -1, 1), (-1, -1, -1, -1, 1), (1, 1, -1, -1, -1),
        (1, -1, 1, 1, -1), (1, -1, 1, -1, -1), (1, -1, -1, 1, -1),
        (-1, 1, 1, 1, -1), (-1, 1, 1, -1, -1), (-1, 1, -1, 1, -1),
        (-1, -1, -1, -1, -1),
    ]
    return validate(points, factors=cube5.factors)


@pytest.fixture(scope="session")
def simplex7():
    """Seven-point simplex centroid in three factors."""
    return simplex_centroid(3)


@pytest.fixture(scope="session")
def mixture4(simplex7):
    """Four mixture points whose cone has the binomial basis of the text."""
    from fractions import Fraction

    third = Fraction(1, 3)
    return validate([(0, 0, 1), (0, 1, 0), (1, 0, 0), (third, third, third)],
                    mixture=True, factors=simplex7.factors)


@pytest.fixture(scope="session")
def coded_grid3x3():
    return code_roots_of_unity(full_factorial([[0, 1, 2]] * 2), (3, 3))


@pytest.fixture(scope="session")
def coded_circle(coded_grid3x3):
    """Circle fraction under the cubic-root coding (level l -> index l mod 3)."""
    idx = [(1, 0), (2, 0), (0, 1), (0, 2)]
    return code_roots_of_unity(validate(idx), (3, 3))


@pytest.fixture(scope="session")
def regular_fraction_3level():
    """Nine-point regular fraction of the 3^4 grid under cubic-root coding."""
    idx = [(0, 0, 0, 0), (0, 1, 1, 1), (0, 2, 2, 2),
           (1, 0, 1, 2), (1, 1, 2, 0), (1, 2, 0, 1),
           (2, 0, 2, 1), (2, 1, 0, 2), (2, 2, 1, 0)]
    return code_roots_of_unity(validate(idx), (3, 3, 3, 3))


@pytest.fixture(scope="session")
def coded_grid_3level_4factor():
    return code_roots_of_unity(full_factorial([[0, 1, 2]] * 4), (3, 3, 3, 3))


@pytest.fixture(scope="session")
def screening21():
    """The 21-point, 9-factor mixture screening design."""
    with open(os.path.join(DATA, "screening_21pt.json")) as handle:
        return design_from_dict(json.load(handle))


@pytest.fixture(scope="session")
def centroid_d2(screening21):
    """Corner points plus all three-component centroids in 9 factors."""
    return simplex_centroid(9, sizes=(1, 3), factors=screening21.factors)
