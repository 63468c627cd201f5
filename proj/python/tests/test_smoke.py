import os
from pathlib import Path

import pytest

import pglob

FIXTURES = Path(os.environ.get("PGLOB_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "fixtures"))


def fixture(name):
    return FIXTURES / f"{name}.json"


Z_GLUING = {
    "presentation": {"generators": ["g"], "rules": []},
    "space": {"points": ["p", "q"], "metric": [[0, 1], [1, 0]]},
    "action": {"g": {"map": {"p": "p"}}},
}


def test_manifest_properties():
    m = pglob.load(fixture("dihedral"))
    assert m.generators == ["a", "b", "B"]
    assert m.points == ["-1", "0", "1"]
    assert m.has_metric


def test_validate_and_confluence():
    assert pglob.validate(fixture("dihedral"))["status"] == "valid"
    klein = pglob.confluence(fixture("klein_four"))
    assert klein["status"] == "NotConfluent"
    assert klein["exit_code"] == 1
    assert pglob.confluence(fixture("singletons3"))["status"] == "Confluent"


def test_distance_from_dict():
    r = pglob.distance(Z_GLUING, "q", "g q", oracle=True, geodesic=True)
    payload = r["payload"]
    assert payload["distance"] == pytest.approx(2.0, abs=1e-9)
    assert payload["oracle"]["distance"] == pytest.approx(2.0, abs=1e-9)
    assert payload["geodesic"]["form"] == "A5"


def test_infinite_distance():
    assert pglob.distance(fixture("degenerate"), "0", "f 0")["payload"]["distance"] == "inf"
    capped = pglob.distance(fixture("degenerate"), "0", "f 0", cap_infinite=1.0)
    assert capped["payload"]["distance"] == 1.0


def test_truncation():
    r = pglob.truncation(fixture("z_gluing"), 1, distances=True)
    assert r["payload"]["size"] == 3
    assert r["payload"]["distances"][1][2] == pytest.approx(2.0)


def test_topology_and_glue():
    t = pglob.topology(fixture("group_z2_t1"))
    assert t["payload"]["t1"]["y_t1"] is True
    g = pglob.glue(fixture("glue_chain"))
    assert g["payload"]["metric"][0][2] == pytest.approx(3.0)


def test_homogenize():
    r = pglob.homogenize(fixture("singletons3"), 2)
    assert r["status"] == "pass"
    assert len(r["payload"]["elements"]) == 63


def test_errors():
    with pytest.raises(pglob.InputError):
        pglob.load({"space": {"points": ["0"], "metric": [[0, 1]]}})
    with pytest.raises(pglob.InputError):
        pglob.Manifest.from_json("{not json")
    with pytest.raises(pglob.PreconditionError):
        pglob.distance(fixture("klein_four"), "0", "1")
