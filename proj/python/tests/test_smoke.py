from fractions import Fraction

import pytest

import polybell


def test_pbell_values():
    assert polybell.pbell_number(6, 1) == Fraction(2057, 42)
    assert polybell.pbell_number(0, 5) == 1
    for b in polybell.backends():
        assert polybell.pbell_number(4, 3, backend=b) == Fraction(179, 140)


def test_column_and_poly():
    assert polybell.pbell_column(3, 2) == [1, Fraction(1, 3), Fraction(1, 2), Fraction(14, 15)]
    assert polybell.pbell_poly(2, 1) == [Fraction(5, 6), 1, 1]


def test_polybell_signed():
    assert polybell.polybell_value(7, -3) == 21336
    assert polybell.polybell_value(9, -4) == 2424744
    assert polybell.polybell_value(2, 1) == Fraction(5, 6)


def test_unknown_backend():
    with pytest.raises(ValueError):
        polybell.pbell_number(2, 1, backend="fast")


def test_table_csv():
    text = polybell.table("pbell-numbers", 2, 1)
    assert text == "n\\p,0,1\n0,1,1\n1,1,1/2\n2,2,5/6\n"


def test_verify_selection():
    reports = polybell.verify(only=["double-egf-polybell"])
    assert len(reports) == 1
    assert reports[0]["status"] == "pass"
    assert reports[0]["detail"] is None


def test_numeric():
    assert polybell.dobinski(2, 1)["status"] == "pass"
    assert polybell.cesaro(3, 2)["status"] == "pass"
    a = polybell.mc_moment(1, 1, samples=50000, seed=3)
    b = polybell.mc_moment(1, 1, samples=50000, seed=3)
    assert a == b
    assert a["status"] == "pass"


def test_duality():
    assert polybell.duality_counterexample() == (2, 1, 3, 0)


def test_cli_exit_codes():
    code, out, _ = polybell.run_cli(["value", "--n", "2", "--p", "1"])
    assert (code, out) == (0, "5/6\n")
    assert polybell.run_cli(["verify", "--only", "nope"])[0] == 2
