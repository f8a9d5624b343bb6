import pytest

from nilorbit import golden


def test_fixture_shape():
    h2 = golden.height2_rows()
    h3 = golden.height3_rows()
    assert len(h2) == 52 and len(h3) == 17
    assert golden.load("height2_orbits.json")["numbering"] == "paper"
    for row in h2:
        assert len(row["ucs"]) == len(row["generators"])
        assert [g["degree"] for g in row["generators"]] == list(range(1, len(row["ucs"]) + 1))


def test_height3_rows_are_dominant_and_counted():
    for row in golden.height3_rows():
        assert all(c > 0 for g in row["generators"] for c in g["weight"].values())


def test_e7_monomials():
    res = golden.e7_example_check()
    assert res["ok"] and res["count"] == 10


@pytest.mark.parametrize("t", ["A5", "C4", "B4", "D4", "D5", "E6", "F4", "G2"])
def test_height2_coverage(t):
    assert golden.height2_coverage(t)["missing"] == []


def test_small_orthogonal_exceptions():
    # (3,1^l) in so5 and so6 is outside the listed family (l >= 4 there)
    assert golden.height2_coverage("B2")["missing"] == ["(3,1,1)"]
    assert golden.height2_coverage("D3")["missing"] == ["(3,1,1,1)"]


@pytest.mark.parametrize("t", ["B3", "D4", "B4", "D5", "G2", "F4", "E6"])
def test_height3_completeness(t):
    cov = golden.height3_coverage(t)
    assert cov["missing"] == [] and cov["unlisted"] == []


def test_compare_reports_mismatch():
    row = dict(golden.height2_rows("F4")[0])
    row["generators"] = list(reversed(row["generators"]))
    res = golden.compare_height2(row)
    assert not res["ok"] and res["diffs"]
