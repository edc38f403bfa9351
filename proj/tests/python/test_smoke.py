import json

import pytest

import curvehom


def test_hochschild_of_the_nodal_cubic():
    hh = curvehom.hochschild("nodal", 1, 1, -2, 3)
    assert [hh[n] for n in range(-2, 4)] == [0, 1, 2, 1, 1, 1]


def test_negative_cyclic_of_the_cusp():
    hn = curvehom.negative_cyclic("cuspidal-cubic", lo=-2, hi=2)
    assert hn == {-2: 2, -1: 0, 0: 3, 1: 0, 2: 2}


def test_degeneration_pages():
    assert curvehom.degeneration_page("nodal", 3, 2, "hdr") == 2
    assert curvehom.degeneration_page("nodal", 1, 1, "hc") == 2


def test_local_cohomology_reports_infinite_as_none():
    dims = curvehom.local_cohomology("nodal-cubic-chart", 0)
    assert dims[0] is None
    assert curvehom.local_cohomology("cusp", 2)[-1] == 2


def test_invalid_input_raises():
    with pytest.raises(ValueError):
        curvehom.hochschild("nodal", 1, 2)


def test_cli_round_trip():
    code, out, _ = curvehom.run_cli(["hn", "--range", "0..2", "--format", "json"])
    assert code == 0
    assert [e["dim"] for e in json.loads(out)["entries"]] == [2, 0, 1]
    assert curvehom.run_cli(["hh", "--range", "x"])[0] == 2


def test_verify_local():
    ok, text = curvehom.verify("local")
    assert ok
    assert "FAIL" not in text
