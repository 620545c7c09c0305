import pytest

from symcoh import Form
from symcoh.symbolcheck import (
    DEFAULT_SEED,
    build_symbols,
    check_exactness,
    random_covectors,
    run_symbol_suite,
)


def test_space_dimensions_n2():
    c = build_symbols(2, Form.e(4, 1))
    assert [len(b) for b in c.spaces] == [1, 4, 5, 5, 4, 1]


def test_tiny_complex_n1():
    c = build_symbols(1, Form.e(2, 1))
    assert [len(b) for b in c.spaces] == [1, 2, 2, 1]
    assert check_exactness(c).passed


def test_generic_covector_entries_are_exact():
    xi = Form.e(6, 1) + Form.e(6, 4) * 2
    c = build_symbols(3, xi)
    from fractions import Fraction
    for m in c.maps:
        for col in m.cols:
            for v in col.values():
                assert isinstance(v, Fraction)
    assert check_exactness(c).passed


@pytest.mark.parametrize("n", [1, 2, 3])
def test_exactness_for_coordinate_covector(n):
    result = check_exactness(build_symbols(n, Form.e(2 * n, 1)))
    assert result.passed, result.details


@pytest.mark.parametrize("n", [1, 2, 3])
def test_exactness_for_seeded_random_covectors(n):
    for xi in random_covectors(n, 20, DEFAULT_SEED):
        result = check_exactness(build_symbols(n, xi))
        assert result.passed, (xi, result.details)


def test_zero_composition_explicitly():
    c = build_symbols(3, Form.e(6, 2) - Form.e(6, 5))
    for i in range(len(c.maps) - 1):
        assert c.maps[i + 1].compose(c.maps[i]).is_zero()


def test_euler_characteristic_zero():
    for n in (1, 2, 3):
        c = build_symbols(n, Form.e(2 * n, 1))
        assert sum((-1) ** p * len(b) for p, b in enumerate(c.spaces)) == 0


def test_zero_covector_rejected():
    with pytest.raises(ValueError):
        build_symbols(2, Form.zero(4))


def test_non_one_form_rejected():
    with pytest.raises(ValueError):
        build_symbols(2, Form.e(4, 1, 2))


def test_sampling_is_deterministic():
    a = random_covectors(3, 5, 123)
    b = random_covectors(3, 5, 123)
    assert a == b
    c = random_covectors(3, 5, 124)
    assert a != c


def test_suite_wrapper():
    result = run_symbol_suite(2, count=3)
    assert result.passed
