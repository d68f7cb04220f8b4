from fractions import Fraction

import pytest

import coingame


def test_exact_values():
    assert coingame.w_value(2, "3/5") == Fraction(81, 125)
    assert coingame.w_value(7, Fraction(1, 2)) == Fraction(1, 2)
    assert coingame.to_decimal(coingame.w_value(5, "0.49"), 8) == "0.48254059"
    assert coingame.w_values(3, "0.6")[0] == 1


def test_strategies_and_deficit():
    assert coingame.a_value(10, "3/5") == coingame.w_value(10, "3/5")
    assert coingame.b_value(8, "1/2") == Fraction(1, 2)
    assert coingame.deficit(0, "2/5") == Fraction(-1, 2)
    assert coingame.deficit(3, "2/5") > 0


def test_coefficients_and_limits():
    assert coingame.c_values(6) == [
        Fraction(1), Fraction(3, 2), Fraction(27, 16),
        Fraction(111, 64), Fraction(3555, 2048), Fraction(113337, 65536),
    ]
    approx, radius = coingame.limit_L("1e-21")
    assert radius <= Fraction(1, 10**21)
    assert coingame.to_decimal(approx, 20) == "1.70347176087173673645"
    w, r = coingame.limit_W("0.55")
    assert r <= Fraction(1, 10**6)
    assert coingame.to_decimal(w, 4) == "0.6288"


def test_tables_and_oracle():
    assert coingame.extrema("0.42") == ([7, 13], [9])
    rows = coingame.value_table(["0.49", "0.25"], 20, 8)
    assert rows[19][1] == "0.07315919"
    best, count = coingame.brute_force(4, "2/5")
    assert count == 288
    assert best == coingame.w_value(4, "2/5")


def test_simulation_is_reproducible():
    a = coingame.simulate(10, "0.6", policy="one", trials=50000, seed=42)
    b = coingame.simulate(10, "0.6", policy="one", trials=50000, seed=42, threads=4)
    assert a["wins"] == b["wins"]
    assert abs(a["z"]) <= 4


def test_verify_suite():
    assert all(r["passed"] for r in coingame.verify("identities"))


def test_errors():
    with pytest.raises(TypeError):
        coingame.w_value(3, 0.5)
    with pytest.raises(ValueError):
        coingame.w_value(3, "1")
    with pytest.raises(ValueError):
        coingame.limit_W("0.5")
    with pytest.raises(ValueError):
        coingame.verify("nope")
