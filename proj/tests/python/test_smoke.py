import os
from fractions import Fraction

import pytest

import knotmeta

DATA = os.environ.get("KNOTMETA_DATA", os.path.join(os.path.dirname(__file__), "..", "..", "data"))

TREFOIL = [[-1, 1], [0, -1]]
FIGURE8 = [[1, 1], [0, -1]]


def test_determinants_and_census():
    assert knotmeta.seifert_determinant(TREFOIL) == 3
    assert knotmeta.seifert_determinant(FIGURE8) == 5
    assert knotmeta.count_metabelian(9) == 4


def test_enumerate_trefoil():
    assert knotmeta.enumerate_metabelian(TREFOIL) == [["1/3", "2/3"]]
    classes = knotmeta.enumerate_metabelian(FIGURE8)
    assert len(classes) == 2
    for c in classes:
        thetas = [Fraction(t) for t in c]
        # (V + V^T) theta is integral.
        w = [[2, 1], [1, -2]]
        assert all((sum(w[i][j] * thetas[j] for j in range(2))).denominator == 1 for i in range(2))


def test_riley_section():
    s = knotmeta.riley_section(5, 3)
    assert s["phi"] == [5, 5, 1]
    assert s["degree"] == 2 and s["squarefree"]
    assert knotmeta.riley_section(3, 1)["phi"] == [3, 1]


def test_verify_and_crosscheck():
    v = knotmeta.verify_two_bridge(7, 3, general_t=True)
    assert v["relator_ok"] and v["longitude_ok"] and v["relator_general_t_ok"]
    assert v["longitude"] == "+id"
    c = knotmeta.cross_check(15, 11)
    assert c["ok"] and c["distinct_roots"] == c["meta_count"] == c["half_p"] == 7


def test_invalid_input_raises():
    with pytest.raises(ValueError):
        knotmeta.riley_section(8, 3)
    with pytest.raises(ValueError):
        knotmeta.seifert_determinant([[1, 2], [0, 1]])


def test_run_json():
    code, report, _ = knotmeta.run("sweep", p_max=9)
    assert code == 0 and report["ok"] and len(report["rows"]) == 9
    code, report, _ = knotmeta.run("apoly-analyze", input=os.path.join(DATA, "apoly_8_20_surrogate.json"))
    assert code == 0
    assert report["results"][0]["criteria"][0]["kind"] == "trace_free_non_metabelian"
    code, report, err = knotmeta.run("det", input=os.path.join(DATA, "malformed.json"))
    assert code == 2 and report is None and "malformed" in err
