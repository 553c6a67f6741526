import pytest
from hypothesis import given
from hypothesis import strategies as st

from rule150.eca_oracle import (
    SEED,
    LatticeWindow,
    clmul,
    gf2_power,
    row150_polynomial,
    rows,
    simulate_activity,
    step,
    step_table,
)
from rule150.replication_engine import activity_series

from oracles import ACTIVITY_256, naive_activity, naive_rows, poly_mul_mod2

EVEN_RULES = range(0, 256, 2)


def _bits(p):
    return [(p >> i) & 1 for i in range(p.bit_length())]


def test_step_examples():
    r1 = step(150, SEED)
    assert r1.cells == (1, 1, 1) and r1.offset == -1
    r2 = step(150, r1)
    assert r2.cells == (1, 0, 1, 0, 1) and r2.offset == -2
    assert r2.activity == ACTIVITY_256[2]
    r90 = step(90, SEED)
    assert r90.cells == (1, 0, 1) and r90.offset == -1


def test_window_trims_margins():
    w = LatticeWindow.from_cells([0, 0, 1, 0, 1, 0], offset=-3)
    assert w.cells == (1, 0, 1) and w.offset == -1
    assert LatticeWindow.from_cells([0, 0]) == LatticeWindow(0, 0)
    with pytest.raises(ValueError):
        LatticeWindow(0b10, 0)


@pytest.mark.parametrize("rule", [90, 150])
def test_fast_path_equals_table_path(rule):
    fast = slow = SEED
    for _ in range(200):
        fast, slow = step(rule, fast), step_table(rule, slow)
        assert fast == slow


@pytest.mark.parametrize("rule", EVEN_RULES)
def test_rows_match_naive_simulation(rule):
    count = 40
    expected = naive_rows(rule, count)
    for t, row in enumerate(rows(rule, count)):
        assert [row.cell(n) for n in range(-count, count + 1)] == expected[t]


def test_odd_rules_rejected():
    with pytest.raises(ValueError):
        step(151, SEED)
    with pytest.raises(ValueError):
        simulate_activity(1, 4)
    with pytest.raises(ValueError):
        step(256, SEED)


@pytest.mark.parametrize("rule, count, expected", [
    (150, 4, [1, 3, 3, 5]),
    (90, 4, [1, 2, 2, 4]),
    (150, 16, ACTIVITY_256[:16]),
])
def test_simulate_activity_examples(kernels, rule, count, expected):
    assert simulate_activity(rule, count) == expected


def test_simulate_activity_activity_256(kernels):
    assert simulate_activity(150, 256) == ACTIVITY_256
    assert simulate_activity(90, 300) == naive_activity(90, 300)
    assert simulate_activity(30, 100) == naive_activity(30, 100)


def test_simulation_equals_iteration(kernels):
    assert simulate_activity(150, 1 << 13) == activity_series(1 << 13).tolist()


@pytest.mark.parametrize("t, cells", [(0, (1,)), (2, (1, 0, 1, 0, 1))])
def test_row150_polynomial_examples(t, cells):
    row = row150_polynomial(t)
    assert row.cells == cells
    assert row.offset == -t


def test_row150_polynomial_popcount():
    assert row150_polynomial(4).activity == 3


def test_polynomial_equals_step_rows():
    for t, row in enumerate(rows(150, 513)):
        assert row150_polynomial(t) == row


@given(st.integers(0, 2**200), st.integers(0, 2**200))
def test_clmul_matches_schoolbook(a, b):
    if not a or not b:
        assert clmul(a, b) == 0
        return
    assert _bits(clmul(a, b)) == _strip(poly_mul_mod2(_bits(a), _bits(b)))


def _strip(coeffs):
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def test_gf2_power_small():
    p = [1]
    for e in range(40):
        assert _bits(gf2_power(0b111, e)) == _strip(list(p))
        p = poly_mul_mod2(p, [1, 1, 1])


def test_rule150_rows_symmetric():
    for row in rows(150, 300):
        assert row.offset == -(row.width - 1) // 2
        assert row.cells == row.cells[::-1]


@pytest.mark.parametrize("rule", [90, 150, 30, 110, 18])
def test_light_cone(rule):
    for t, row in enumerate(rows(rule, 200)):
        if row.mask:
            assert row.offset >= -t and row.offset + row.width - 1 <= t
            assert row.width <= 2 * t + 1


def test_rule90_checkerboard():
    for t, row in enumerate(rows(90, 300)):
        for i, c in enumerate(row.cells):
            if c:
                assert (row.offset + i - t) % 2 == 0
