"""Smoke tests for the Python bindings."""

import json
import os
import pathlib

import coralg

FIXTURES = pathlib.Path(os.environ.get(
    "CORALG_FIXTURES",
    pathlib.Path(__file__).resolve().parents[2] / "fixtures"))


def load(name):
    return (FIXTURES / name).read_text()


def test_solve_exact():
    res = coralg.solve([["1", "1"], ["0", "2"]], ["1", "1"])
    assert res["consistent"]
    assert res["x"] == ["1/2", "1/2"]
    assert res["rank"] == 2

    res_p = coralg.solve([["1", "1"], ["0", "2"]], ["1", "1"], field="5")
    assert res_p["consistent"]
    assert res_p["x"] == ["3", "3"]  # 1/2 = 3 mod 5


def test_check_fixture_objects():
    doc = load("dualnum_sweedler.json")
    assert coralg.check(doc, "C")["pass"]
    assert coralg.check(doc, "QtoD_data")["pass"]


def test_find_reduced_system_trivial():
    res = coralg.find_reduced_system(load("trivial.json"), "trivial_D")
    assert res["exit_code"] == 0
    assert res["verified"]
    assert res["e"] == ["1", "0"]


def test_find_extension_dual_numbers():
    res = coralg.find_frobenius_extension(load("dualnum_sweedler.json"), "QtoD")
    assert res["status"] == "found"
    assert res["E"] == [["0", "1"]]
    assert res["beta"] == ["0", "1", "1", "0"]


def test_find_negative_control():
    res = coralg.find_reduced_system(load("t2_sweedler.json"), "C")
    assert res["exit_code"] == 3
    assert res["status"] == "not_found_within_search"


def test_tower_dual_numbers():
    res = coralg.build_tower(load("dualnum_sweedler.json"), "C", levels=2)
    assert res["exit_code"] == 0
    dims = [level["dim"] for level in res["levels"]]
    assert dims == [4, 8]
    for level in res["levels"]:
        assert all(level["verified"].values())


def test_tower_indices():
    res = coralg.build_tower(load("group_algebra.json"), "C", levels=2)
    assert res["exit_code"] == 0
    assert res["levels"][0]["index"] == ["2", "1"]
    assert res["levels"][1]["index"] == ["1", "2"]
    assert res["index_alternation"] is True


def test_noncommutative_trace_data():
    doc = load("matrix2.json")
    assert coralg.check(doc, "trace_data")["pass"]
    res = coralg.find_frobenius_extension(doc, "QtoM2")
    assert res["status"] == "found"


def test_dict_documents_accepted():
    doc = json.loads(load("trivial.json"))
    assert coralg.check(doc, "trivial_Q")["pass"]
