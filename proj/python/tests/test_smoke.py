import json
import pathlib

import pytest

import isgcoh

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def load(name):
    return json.loads((DATA / name).read_text())


def test_validate_ok():
    assert isgcoh.validate(load("z2_semigroup.json"), load("z2_module.json")) == []


def test_cohomology_orders():
    res = isgcoh.cohomology(
        load("z2_semigroup.json"), load("z2_module.json"), degree=3
    )
    assert (res["c"], res["z"], res["b"], res["h"]) == (256, 8, 4, 2)
    entries = [r["entries"] for r in res["representatives"]]
    assert sorted(entries, key=len) == [{}, {"g,g,g": "a"}]


def test_normalize_cocycle_fixed_point():
    res = isgcoh.normalize_cocycle(
        load("z2_semigroup.json"), load("z2_module.json"), load("z2_cocycle.json")
    )
    assert res["normalized"]["entries"] == {"g,g,g": "a"}
    assert res["witness"]["entries"] == {}


def test_roundtrip_theorem():
    res = isgcoh.roundtrip(
        load("clifford4_semigroup.json"),
        load("clifford4_module.json"),
        load("clifford4_cocycle.json"),
        mode="theorem",
    )
    assert res["ok"]
    assert all(stage["ok"] for stage in res["stages"])
    assert res["extracted"]["degree"] == 3


def test_roundtrip_rejects_non_f_inverse():
    with pytest.raises(isgcoh.PreconditionFailed):
        isgcoh.roundtrip(
            load("sym_inv2_semigroup.json"),
            load("sym_inv2_module.json"),
            {"degree": 3, "entries": {}},
            mode="theorem",
        )


def test_is_f_inverse():
    assert isgcoh.is_f_inverse(load("z2_semigroup.json")) == (True, True)
    assert isgcoh.is_f_inverse(load("sym_inv2_semigroup.json")) == (False, True)


def test_budget():
    with pytest.raises(isgcoh.BudgetExceeded):
        isgcoh.cohomology(
            load("z2_semigroup.json"), load("z2_module.json"), degree=3, budget=10
        )
