import pytest

from pffcert.fpoly import FPoly
from pffcert.gf import field_for_order


def poly(q, *coeffs):
    """Polynomial over GF(q) from low-to-high coefficients."""
    return FPoly.make(field_for_order(q), coeffs)


@pytest.fixture(scope="session")
def gf9():
    return field_for_order(9)


@pytest.fixture(scope="session")
def gf4():
    return field_for_order(4)
