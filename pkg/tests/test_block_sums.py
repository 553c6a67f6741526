import math

import pytest

from rule150.block_sums import (
    binet,
    block_sum,
    block_sum_fib,
    detrend_offset,
    detrended_series,
    eigenvalue_ratio,
    fibonacci,
)
from rule150.exact import ActivityOverflowError
from rule150.replication_engine import activity_series

from oracles import DETREND_LISTED, ACTIVITY_256, BLOCK_SUMS_18


def _fib_by_matrix(n):
    # [[1,1],[1,0]]**n = [[F(n+1), F(n)], [F(n), F(n-1)]]
    def mul(x, y):
        return [[x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]],
                [x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]]]
    result, base = [[1, 0], [0, 1]], [[1, 1], [1, 0]]
    while n:
        if n & 1:
            result = mul(result, base)
        base = mul(base, base)
        n >>= 1
    return result[0][1]


def test_reference_recurrence():
    assert [block_sum(n) for n in range(18)] == BLOCK_SUMS_18


def test_reference_fibonacci_form():
    assert [block_sum_fib(n) for n in range(18)] == BLOCK_SUMS_18


@pytest.mark.parametrize("n, s", [(4, 128), (10, 147456), (17, 548012032), (2, 12), (5, 416), (0, 1)])
def test_block_sum_examples(n, s):
    assert block_sum(n) == s == block_sum_fib(n)


def test_block_sum_forms_agree_over_full_range():
    for n in range(38):
        assert block_sum(n) == block_sum_fib(n)
    for n in range(200):
        assert block_sum(n, bits=None) == block_sum_fib(n, bits=None)


def test_block_sum_is_sum_of_activity():
    xs = activity_series(1 << 20).values
    total = 0
    for n in range(21):
        lo = (1 << (n - 1)) if n else 0
        total += sum(xs[lo:1 << n])
        assert total == block_sum(n)


@pytest.mark.parametrize("n, f", [(1, 1), (2, 1), (7, 13), (19, 4181)])
def test_fibonacci_examples(n, f):
    assert fibonacci(n) == f


def test_fibonacci_matches_matrix_power():
    for n in range(1, 94):
        assert fibonacci(n) == _fib_by_matrix(n)


def test_binet_cross_check():
    for n in range(1, 71):
        assert math.isclose(binet(n), fibonacci(n), rel_tol=1e-12)


@pytest.mark.parametrize("n, value", list(enumerate(DETREND_LISTED)))
def test_detrend_offsets_listed(n, value):
    assert detrend_offset(n) == value


def test_detrend_offset_fibonacci_identity():
    # brute force: per-block mean of the activity itself
    xs = activity_series(1 << 16).values
    for n in range(1, 17):
        block = xs[1 << (n - 1):1 << n]
        assert sum(block) == detrend_offset(n) * len(block)
    for n in range(0, 90):
        assert detrend_offset(n) == 2 * fibonacci(n + 2) - fibonacci(n + 1)


@pytest.mark.parametrize("count, expected", [(4, (0, 0, -1, 1)), (1, (0,))])
def test_detrended_series_examples(count, expected):
    assert detrended_series(count) == expected


def test_detrended_series_block_of_eight():
    assert detrended_series(8)[4:] == (-4, 2, -2, 4)
    assert detrended_series(256) == tuple(
        x - DETREND_LISTED[0] if t == 0 else x - detrend_offset(t.bit_length())
        for t, x in enumerate(ACTIVITY_256))


def test_detrended_series_zero_mean_blocks():
    d = detrended_series(1 << 20)
    assert d[0] == 0
    for n in range(1, 21):
        assert sum(d[1 << (n - 1):1 << n]) == 0
        assert sum(d[:1 << n]) == 0


@pytest.mark.parametrize("count", [0, 3, 12])
def test_detrended_series_rejects_non_power_of_two(count):
    with pytest.raises(ValueError):
        detrended_series(count)


def test_eigenvalue_ratio():
    assert eigenvalue_ratio(2) == 3.0
    assert eigenvalue_ratio(17) == pytest.approx(548012032 / 169345024)
    assert abs(eigenvalue_ratio(17) - 3.236068) < 1e-6
    assert abs(eigenvalue_ratio(30) - (1 + math.sqrt(5))) < 1e-9


def test_overflow_reports_limit():
    assert block_sum(37) == block_sum_fib(37) == 8692462127144763392
    with pytest.raises(ActivityOverflowError, match="maximal supported n is 37"):
        block_sum(38)
    with pytest.raises(ActivityOverflowError, match="maximal supported n is 37"):
        block_sum_fib(38)
    with pytest.raises(ActivityOverflowError, match="maximal supported n is 93"):
        fibonacci(94)
    with pytest.raises(ActivityOverflowError):
        eigenvalue_ratio(40)
    assert block_sum(38, bits=None) == 28129398335282872320
