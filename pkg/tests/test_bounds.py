import pytest
from hypothesis import given, strategies as st

from mostarlab.bounds import cyclomatic_bound, evaluate, max_bound, min_bound
from mostarlab.errors import OutOfRange
from mostarlab.families import complete_with_pendants, path, star
from mostarlab.mostar import mostar_index


def test_max_bound_examples():
    assert max_bound(6, 2) == 14
    assert max_bound(4, 1) == 4


@pytest.mark.parametrize("n", range(2, 15))
def test_max_bound_star(n):
    assert max_bound(n, n - 1) == (n - 1) * (n - 2) == mostar_index(star(n))


def test_min_bound_examples():
    assert min_bound(9, 4) == 8
    assert min_bound(5, 1) == 1


@pytest.mark.parametrize("n", range(2, 51))
def test_min_bound_path(n):
    assert min_bound(n, n - 1) == sum(abs(n - 2 * i) for i in range(1, n)) == mostar_index(path(n))


def test_cyclomatic_bound_examples():
    assert cyclomatic_bound(7, 2, 1) == 22
    assert cyclomatic_bound(6, 2, 1) == 17


@given(st.integers(3, 40), st.data())
def test_cyclomatic_bound_reduces_at_zero(n, data):
    k = data.draw(st.integers(1, n - 1))
    assert cyclomatic_bound(n, k, 0) == max_bound(n, k)


@pytest.mark.parametrize("n, k", [(n, k) for n in range(2, 13) for k in range(1, n) if n - k != 2])
def test_max_bound_equals_construction(n, k):
    assert max_bound(n, k) == mostar_index(complete_with_pendants(n, k))


@pytest.mark.parametrize("call", [
    lambda: max_bound(1, 1), lambda: max_bound(5, 0), lambda: max_bound(5, 5),
    lambda: min_bound(4, 4), lambda: cyclomatic_bound(2, 1, 0), lambda: cyclomatic_bound(6, 2, -1),
])
def test_out_of_range(call):
    with pytest.raises(OutOfRange):
        call()


@given(st.integers(2, 200), st.data())
def test_bounds_are_exact_ints(n, data):
    k = data.draw(st.integers(1, n - 1))
    for value in (max_bound(n, k), min_bound(n, k)):
        assert type(value) is int and value >= 0


def test_evaluate():
    assert evaluate("T1_MAX", 6, 2).value == 14
    assert evaluate("T2_MIN", 9, 4).value == 8
    assert evaluate("T3_CYCLOMATIC", 7, 2, 1).value == 22
    with pytest.raises(ValueError):
        evaluate("T9", 5, 1)
