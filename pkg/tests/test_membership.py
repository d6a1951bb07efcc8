import pytest
from hypothesis import given
from hypothesis import strategies as st

from gwalk.arith import balanced_division, divisors
from gwalk.errors import DomainError
from gwalk.membership import forces_from_complex, guaranteed_by_halfsquare, is_unavoidable, obstruction_set
from independent import slow_members

A20 = [1, 2, 3, 4, 5, 6, 7, 10, 20]


def test_a20():
    assert list(obstruction_set(20)) == A20
    assert len(obstruction_set(20)) == 9


def test_small_sets():
    assert list(obstruction_set(1)) == [1]
    assert list(obstruction_set(12)) == [1, 2, 3, 4, 6, 12]


@pytest.mark.parametrize("d, member", [(7, True), (8, False), (9, False), (10, True), (19, False), (20, True)])
def test_table_rows(d, member):
    assert is_unavoidable(20, d) is member


def test_obstruction_set_contains():
    a = obstruction_set(20)
    assert 7 in a and 8 not in a
    assert 0 not in a and "3" not in a


def test_obstruction_set_rejects_zero():
    with pytest.raises(DomainError):
        obstruction_set(0)


@pytest.mark.parametrize("n", range(1, 301))
def test_enumeration_matches_unbounded_scan(n):
    # the scan goes to 3n, so this also checks that nothing above n qualifies
    assert list(obstruction_set(n)) == slow_members(n)


@given(st.integers(1, 5000))
def test_divisors_are_members(n):
    a = obstruction_set(n)
    assert all(d in a for d in divisors(n))


@given(st.integers(1, 10**9), st.integers(1, 10**5))
def test_halfsquare_implies_member(n, d):
    if guaranteed_by_halfsquare(n, d):
        assert is_unavoidable(n, d)


@given(st.integers(1, 10**6), st.integers(1, 2000), st.integers(-50, 50))
def test_complex_forcing_reduces_to_real_and_is_monotone(n, d, h):
    assert forces_from_complex(n, 0, d) == is_unavoidable(n, d)
    if forces_from_complex(n, h, d):
        assert forces_from_complex(n, 0, d)
        assert forces_from_complex(n, -h, d)


def test_complex_forcing_example():
    # 20 = 3*7 - 1: margin 2 tolerates |h| = 1 but not 2
    assert forces_from_complex(20, 1, 7)
    assert not forces_from_complex(20, 2, 7)
    assert balanced_division(20, 7).margin == 2
