from fractions import Fraction

import pytest

import kkv


def test_table_and_yau_zaslow():
    rows = kkv.kkv_table(4)
    assert rows[0] == [1, 24, 324, 3200, 25650]
    assert rows[4][4] == 5
    assert all(isinstance(x, int) for row in rows for x in row)
    assert kkv.yau_zaslow(4) == rows[0]


def test_single_state_multiple_covers():
    pot = kkv.gw_from_bps({(0, 1): 1}, 4, 4)
    assert [pot[(0, d)] for d in range(1, 5)] == [Fraction(1, d**3) for d in range(1, 5)]
    assert kkv.bps_from_gw(pot, 4, 4) == {(0, 1): 1}


def test_alternating_series_and_substitution():
    num, den = kkv.pairs(1, 0)
    assert (num, den) == ([0, 1], [1, 2, 1])
    s = kkv.expand(num, den, 10)
    assert [s.coefficient(n) for n in range(1, 11)] == [(-1) ** (n + 1) * n for n in range(1, 11)]
    assert kkv.is_q_inversion_symmetric(num, den)
    u = kkv.substitute_q_minus_exp(num, den, 12)
    assert u == kkv.sine_bracket(1, 0, 12)
    assert u.coefficient(0) == Fraction(1, 12)


def test_mnop_and_errors():
    report = kkv.mnop_check(2, 1)
    assert report["equal"] and report["first_mismatch"] is None
    with pytest.raises(kkv.KkvError):
        kkv.substitute_q_minus_exp([0, 1], [1], 6)
    with pytest.raises(kkv.KkvError):
        kkv.expand([1], [1.5], 4)


def test_checks_pass():
    results = kkv.run_checks(h_max=8, cases=5)
    assert [r["name"] for r in results if not r["passed"]] == []
