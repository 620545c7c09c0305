import pytest

from symcoh import (
    CohomologyCalculator,
    Form,
    SymplecticComplex,
    parse_form,
    parse_salamon,
    standard_omega,
)

NIL_ALGEBRA = "(0,0,0,12,14,15+23+24)"
OMEGA = "e16 + e25 - e34"
OMEGA_PRIME = "e13 + e26 - e45"
TORUS_ALGEBRA = "(0,0,0,0,0,0)"


def wedge_chain(dim, index_string):
    """e.g. '315' -> e3 ^ e1 ^ e5, signs handled by the wedge."""
    out = Form.scalar(dim, 1)
    for ch in index_string:
        out = out.wedge(Form.e(dim, int(ch, 16)))
    return out


@pytest.fixture(scope="session")
def nil_algebra():
    return parse_salamon(NIL_ALGEBRA)


@pytest.fixture(scope="session")
def torus_algebra():
    return parse_salamon(TORUS_ALGEBRA)


@pytest.fixture(scope="session")
def omega():
    return parse_form(OMEGA, 6)


@pytest.fixture(scope="session")
def omega_prime():
    return parse_form(OMEGA_PRIME, 6)


@pytest.fixture(scope="session")
def nil_cx(nil_algebra, omega):
    return SymplecticComplex(nil_algebra, omega)


@pytest.fixture(scope="session")
def nil_cx_prime(nil_algebra, omega_prime):
    return SymplecticComplex(nil_algebra, omega_prime)


@pytest.fixture(scope="session")
def torus_cx(torus_algebra):
    return SymplecticComplex(torus_algebra, standard_omega(3))


@pytest.fixture(scope="session")
def nil_calc(nil_cx):
    return CohomologyCalculator(nil_cx)


@pytest.fixture(scope="session")
def nil_calc_prime(nil_cx_prime):
    return CohomologyCalculator(nil_cx_prime)


@pytest.fixture(scope="session")
def torus_calc(torus_cx):
    return CohomologyCalculator(torus_cx)
