import json
import math

import pytest

import rellich


def test_classify_mode_regime():
    r = rellich.classify(3, 0)
    assert r["M_exact"] == "25/36"
    assert r["regime"] == "ModeK"
    assert r["certified"]
    assert math.isclose(r["M"], 25 / 36, rel_tol=1e-15)


def test_classify_accepts_exact_strings():
    assert rellich.classify(5, "-1/2")["certified_equality"] == "Uncertified"
    assert rellich.classify(4, "0")["regime"] == "Critical"
    assert rellich.classify(2, 0)["positive"] is False


def test_params_and_constants():
    p = rellich.derive(3, 0.0)
    assert (p.gamma, p.h, p.A) == (-0.75, 0.25, -2.0)
    assert rellich.delta_rad(3, 0) == 2.25
    assert rellich.critical_constant(4) == 3.0
    assert rellich.phi(3, 0, 2.0) == 209 / 16
    with pytest.raises(rellich.DegenerateDenominator):
        rellich.mode_value(4, 0, 0.0)
    with pytest.raises(rellich.InvalidArgument):
        rellich.derive(1, 0.0)
    with pytest.raises(ValueError):
        rellich.classify(3, "abc")


def test_spectrum():
    assert rellich.spectrum(3, "sphere", 4) == [0, 2, 6, 12]
    cap = rellich.spectrum(3, "cap:pi/2", 1)
    assert math.isclose(cap[0], 2.0, rel_tol=1e-5)


def test_minimize_mode_respects_bound():
    r = rellich.minimize_mode(-2.0, 2.0, 1.0, L=20.0, N=1000)
    assert r["value"] >= r["bound"] * (1 - 1e-12)
    assert len(r["minimizer"]) == 1000
    d = rellich.minimize_mode(-2.0, 2.0, 1.0, L=20.0, N=1000, method="dense")
    assert math.isclose(r["value"], d["value"], rel_tol=1e-8)


def test_scan_csv_and_json():
    csv = rellich.scan(3, "-1", "1", "0.5")
    lines = csv.strip().splitlines()
    assert lines[0] == "alpha,delta_rad,M,numeric_delta,regime,certified"
    assert len(lines) == 6
    rows = json.loads(rellich.scan(3, "-1", "1", "0.5", format="json"))
    assert [r["alpha"] for r in rows] == [-1, -0.5, 0, 0.5, 1]


def test_transform_check():
    rows = rellich.transform_check()
    assert len(rows) == 12
    assert max(r["discrepancy"] for r in rows) < 1e-8


def test_verify_constants():
    checks = rellich.verify("constants")
    assert checks and all(c["passed"] for c in checks)
