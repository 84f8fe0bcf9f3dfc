import random

import pytest
from hypothesis import given, settings, strategies as st

from bellpart import (
    BellArgumentError,
    BellTable,
    CapExceededError,
    bell_definition,
    bell_nested,
    bell_recurrence,
    euler_series,
    convolve,
    factorial,
)
from bellpart.invariants import stirling2_by_enumeration
from bellpart.pentagonal import lambda_args

LAM = lambda_args(40)


def test_recurrence_examples():
    assert bell_recurrence(3, 2, [5, 7]) == 105
    assert bell_recurrence(4, 4, [2]) == 16
    assert bell_recurrence(5, 0, [1] * 5) == 0
    assert bell_recurrence(4, 2, [-1, -2, 0]) == 12
    assert bell_recurrence(0, 0, []) == 1
    assert bell_recurrence(3, 5, [1, 2, 3]) == 0


def test_recurrence_short_args():
    with pytest.raises(BellArgumentError, match="at least 3"):
        bell_recurrence(4, 2, [1, 2])


def test_nested_examples():
    assert bell_nested(3, 2, [5, 7, 11]) == 105
    assert bell_nested(2, 1, [3, 8]) == 8
    assert bell_nested(4, 2, [-1, -2, 0]) == 12


@pytest.mark.parametrize("n, K", [(3, 0), (3, 4)])
def test_nested_domain(n, K):
    with pytest.raises(ValueError):
        bell_nested(n, K, [1] * 5)


def test_definition_examples():
    assert bell_definition(4, 2, [1, 1, 1]) == 7
    assert bell_definition(0, 0, []) == 1
    assert bell_definition(6, 3, [1] * 4) == 90


def test_definition_cap():
    with pytest.raises(CapExceededError, match="cap 14"):
        bell_definition(15, 3, [1] * 15)
    assert bell_definition(15, 15, [1], cap=None) == 1


def test_table_boundary_cells():
    x = [3, -2, 5, 7, 1, 4]
    t = BellTable(x)
    for n in range(1, 7):
        assert t.value(n, 0) == 0
        assert t.value(n, 1) == x[n - 1]
        assert t.value(n, n) == x[0] ** n
        assert t.value(n, n + 1) == 0
    assert t.value(0, 0) == 1


def test_b1_three_way_agreement():
    rng = random.Random(20261015)
    for _ in range(200):
        x = [rng.randint(-9, 9) for _ in range(12)]
        for n in range(13):
            for k in range(n + 1):
                a = bell_recurrence(n, k, x)
                assert a == bell_definition(n, k, x)
                if k:
                    assert a == bell_nested(n, k, x)


@pytest.mark.parametrize("n", range(11))
def test_b2_all_ones_is_stirling(n):
    for k in range(n + 1):
        assert bell_recurrence(n, k, [1] * max(n, 1)) == stirling2_by_enumeration(n, k)


def test_stirling_oracle_known_values():
    assert [stirling2_by_enumeration(5, k) for k in range(6)] == [0, 1, 15, 25, 10, 1]


@settings(max_examples=30)
@given(st.lists(st.integers(-9, 9), min_size=10, max_size=10), st.sampled_from([-2, 3]))
def test_b3_homogeneity(x, c):
    cx = [c * v for v in x]
    for n in range(11):
        for k in range(n + 1):
            assert bell_recurrence(n, k, cx) == c**k * bell_recurrence(n, k, x)


def test_b5_generating_function_link():
    N = 40
    e_minus_1 = euler_series(N)
    e_minus_1[0] = 0
    power = [1] + [0] * N
    for k in range(9):
        for n in range(k, N + 1):
            assert factorial(n) * power[n] == factorial(k) * bell_recurrence(n, k, LAM)
        power = convolve(power, e_minus_1, N)
