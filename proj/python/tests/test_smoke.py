import cmath
import math

import pytest

import assoc_lab


def test_degree_two_m3():
    a = assoc_lab.build_rational(3, 2)
    assert a["m"] == 3
    assert a["lyndon"] == [{"word": "t0t1", "degree": 2, "coeff": "-1/6"}]
    assert a["provenance"]["tie_break"] == assoc_lab.TIE_BREAK_RULE


def test_verify_rational():
    a = assoc_lab.build_rational(4, 3)
    reports = assoc_lab.verify(a)
    assert reports and all(r["pass"] for r in reports)
    names = {r["equation"] for r in reports}
    assert {"grouplike", "duality", "demi_tour", "artin", "o_image", "center"} <= names


def test_verify_detects_failure():
    a = assoc_lab.build_rational(3, 2)
    a["lambda"] = "2"
    (r,) = assoc_lab.verify(a, ["demi-tour"])
    assert not r["pass"]
    assert r["first_bad_degree"] == 2


def test_scaled_lambda():
    a = assoc_lab.build_rational(3, 3, lam="-2/3")
    assert a["lambda"] == "-2/3"
    assert all(r["pass"] for r in assoc_lab.verify(a, ["grouplike", "duality", "demi_tour"]))


def test_bad_input():
    with pytest.raises(ValueError):
        assoc_lab.build_rational(2, 3)
    with pytest.raises(ValueError):
        assoc_lab.verify({"m": 3})
    with pytest.raises(ValueError):
        assoc_lab.verify(assoc_lab.build_rational(3, 2), ["pentagon"])


def test_phi0_and_numerics():
    a = assoc_lab.phi0(3, degree=3)
    assert a["mode"] == "complex"
    assert all(r["pass"] for r in assoc_lab.verify(a, ["grouplike", "demi_tour"], tol=1e-8))
    assert assoc_lab.half_turn_check(4)["pass"]
    b = assoc_lab.bridge_check_m3()
    assert b["pass"] and b["residual"] < 1e-10
    with pytest.raises(assoc_lab.ConvergenceError):
        assoc_lab.phi0(3, degree=3, x_order=6)


def test_representations():
    r = assoc_lab.aba_obstruction(3, 1, 0.0)
    assert abs(r["spectrum"][1] - 0.25) < 1e-12
    assert r["unitarizable"]
    assert not assoc_lab.aba_obstruction(3, 1, 2.5)["unitarizable"]
    v = cmath.exp(0.3j)
    s, t = assoc_lab.hecke_rep(5, 1, v)
    assert abs(s[1][0] - v * 2 * math.cos(math.pi / 5)) < 1e-12
    s, w = assoc_lab.reflection_rep(4)
    assert abs(s[0][0] + 1) < 1e-15


def test_lyndon():
    assert assoc_lab.lyndon_words(2, 2) == [[0, 1]]
    assert assoc_lab.witt_number(3, 4) == 18
    c = assoc_lab.cot_taylor(1.0, 3)
    assert abs(c[0] - 1 / math.tan(1.0)) < 1e-14
