from fractions import Fraction

import pytest

import orbivertex as ov


def coeff(series, exp):
    for t in series["terms"]:
        if t["exp"] == exp:
            return t["coeff"]
    return "0"


def test_char_table_is_square():
    t = ov.char_table(2, 2)
    assert len(t["irreps"]) == len(t["classes"]) == 5
    assert all(len(row) == 5 for row in t["chi"])
    assert t["z"][t["classes"].index("2:(1^0,1^0)")] == 8


def test_schur_single_box():
    s = ov.schur(1, [1], order=4)
    assert [t["exp"] for t in s["series"]["terms"]] == [["0"], ["1"], ["2"], ["3"]]


def test_one_leg_vertex_csc():
    v = ov.gw_vertex("1:(1^0)", order=4)
    # -(i/2) csc(u/2) = -i/u - i u/24 + ...
    assert coeff(v, ["-1"]) == "-zeta4"
    assert coeff(v, ["1"]) == "-1/24*zeta4"


def test_hurwitz_count():
    assert ov.hurwitz_count("1:(1^0,1^0)", "1:(1^0,1^0)", 2) == Fraction(1, 2)


def test_gerbe_equality():
    g = ov.gerbe(2, 1, Fraction(-1, 2), 1, order=4)
    assert g["equal"]
    assert g["gw"] == g["dt"]


def test_verify_suite():
    r = ov.verify("reduction", 2, 1, 6)
    assert r["pass"] and r["cases"] > 0


def test_domain_error():
    with pytest.raises(ov.DomainError):
        ov.gerbe(2, 1, -1, 1)
