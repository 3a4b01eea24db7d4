import json

import pytest

lg3 = pytest.importorskip("lg3")


def point(u, X, Y, z):
    return json.dumps({"u": u, "X": X, "Y": Y, "z": z})


ZERO6 = ["0"] * 6
E123 = point("1", ZERO6, ZERO6, "0")


def test_exp_map_origin_is_base_point():
    p = json.loads(lg3.exp_map(ZERO6))
    assert p == {"u": "1", "X": ZERO6, "Y": ZERO6, "z": "0"}


def test_classify_base_point():
    rep = lg3.classify_dict(E123)
    assert rep["orbit"] == "Sigma"
    assert rep["F"] == "0"
    assert rep["grad_zero"] is True


def test_classify_generic_point():
    rep = lg3.classify_dict(point("1", ZERO6, ZERO6, "1"))
    assert rep["orbit"] == "Generic"
    assert rep["F"] == "1"
    assert rep["grad_zero"] is False


def test_exp_map_lands_on_variety():
    p = lg3.exp_map(["1", "1/2", "0", "-3", "2/5", "7"])
    assert lg3.sigma_residual(p) == "0"
    assert lg3.classify_dict(p)["orbit"] == "Sigma"


def test_f_value_exact():
    # F(u:0:Y:z) = u^2 z^2 + 4 u det Y with X = 0
    y0 = ["0", "1", "0", "0", "0", "1"]  # 2 y1 y2 + y3^2, det -1
    assert lg3.f_value(point("1", ZERO6, y0, "0")) == "-4"


def test_pivot_of_boundary_covector():
    c = point("0", ZERO6, ["0", "1", "0", "0", "0", "1"], "1")
    piv = json.loads(lg3.pivot(c))
    assert piv == {"u": "1", "X": ZERO6, "Y": ZERO6, "z": "0"}


def test_pivot_rejects_variety_point():
    with pytest.raises(Exception):
        lg3.pivot(E123)


def test_random_section_quartic():
    q = json.loads(lg3.random_section(3))
    assert q["smooth"] is True
    assert q["degenerate"] is False
    assert q["form"]["deg"] == 4
    assert q["resultant"] != "0"
    assert lg3.random_section(3) == lg3.random_section(3)


def test_verify_suite_core():
    rep = json.loads(lg3.verify_suite("core", seed=2, trials=5, digits=45))
    assert rep["pass"] is True
    assert rep["seed"] == 2
    assert rep["precision"] == 45
    assert any(c["name"].startswith("core/") for c in rep["checks"])


def test_section_report():
    rep = json.loads(lg3.section_report(7, points=4, digits=45))
    assert rep["points"] == 4
    assert rep["pivots_distinct"] is True
    assert rep["fibration_pairs"] == 6
    assert rep["fibration_failures"] == 0
    worst = float(rep["max_pivot_residual"]["v"])
    assert worst < 1e-35
