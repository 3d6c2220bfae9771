import json

import pytest

stratmorse = pytest.importorskip("stratmorse")

UMBRELLA = """
vars x y z
stratum O dim 0 closure x, y, z
stratum V dim 1 closure y, z
stratum W dim 2 closure x*z^2 - y^2
f y^2 - (x - z)^2
l x + 2*z
"""


def test_run_umbrella():
    result = stratmorse.run(UMBRELLA)
    assert result["ok"] is True
    assert "M(f) = {(V, 1), (W, 5)}" in result["text"]
    doc = json.loads(result["structured"])
    assert doc["strata"]["V"]["morse_number"] == 1
    assert doc["strata"]["W"]["morse_number"] == 5
    assert doc["strata"]["W"]["mult_f"] == 8
    assert doc["strata"]["W"]["mult_l"] == 3


def test_morse_pairs():
    pairs = stratmorse.morse_pairs(UMBRELLA)
    assert [(p["stratum"], p["morse_number"]) for p in pairs] == [("V", 1), ("W", 5)]
    assert pairs[0]["mult_f"] == 2
    assert pairs[0]["mult_l"] == 1


def test_milnor_oracle():
    assert stratmorse.milnor_oracle("x^3 + y^3", ["x", "y"]) == 4
    assert stratmorse.milnor_oracle("x^3 + y^5", ["x", "y"]) == 8
    # bound too small to certify
    assert stratmorse.milnor_oracle("x^3 + y^5", ["x", "y"], degree_bound=3) is None


def test_local_multiplicity():
    assert stratmorse.local_multiplicity(["x", "y", "x + 2*z"], ["x", "y", "z"]) == 1
    assert (
        stratmorse.local_multiplicity(
            ["x - z", "y^2 - x*z^2", "y^2 - (x - z)^2"], ["x", "y", "z"]
        )
        == 6
    )
    with pytest.raises(OverflowError):
        stratmorse.local_multiplicity(["x"], ["x", "y"])


def test_run_reports_failures():
    bad = UMBRELLA.replace("l x + 2*z", "l z")
    result = stratmorse.run(bad)
    assert result["ok"] is False
    doc = json.loads(result["structured"])
    assert doc["strata"]["V"]["error"] == "NotGeneralOrNotIsolated"
