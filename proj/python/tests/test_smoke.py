import pytest

import cayley


def entries(spec):
    return [(e["value"], e["multiplicity"]) for e in spec]


def test_z20_quarter_is_gds_with_four_components():
    g = cayley.circulant(20, [4, 8, 12, 16])
    result = cayley.analyze(g)
    assert result["stats"]["components"] == 4
    gds = result["gds"]
    assert (gds["n"], len(gds["S"]), gds["k"], gds["mu1"], gds["mu2"]) == (20, 16, 4, 0, 3)
    assert entries(result["spectrum"]) == [(4, 4), (-1, 16)]
    assert result["verdict"]["reason"] == "not connected"


def test_character_and_oracle_spectra_agree():
    g = cayley.circulant(20, [3, 4, 8, 12, 16, 17])
    chars = cayley.spectrum(g)
    oracle = cayley.spectrum(g, oracle=True)
    assert [e["multiplicity"] for e in chars] == [e["multiplicity"] for e in oracle]
    for a, b in zip(chars, oracle):
        assert a["value"] == pytest.approx(b["value"], abs=1e-6)
    assert cayley.analyze(g)["verdict"]["isRamanujan"]


def test_product_set_4_4():
    result = cayley.theorem33(4, 4)
    assert entries(result["spectrum"]) == [(6, 1), (2, 6), (-2, 9)]
    assert result["verdict"]["isRamanujan"]
    assert result["report"]["discrepancies"] == []


def test_product_set_6_6_reports_contradiction():
    result = cayley.theorem33(6, 6)
    assert not result["verdict"]["isRamanujan"]
    kinds = [d["kind"] for d in result["report"]["discrepancies"]]
    assert "claim_contradicted" in kinds


def test_polar_trace_m2():
    result = cayley.polar_trace(2)
    assert entries(result["spectrum"]) == [(4, 1), (2, 4), (0, 6), (-2, 4), (-4, 1)]
    assert result["stats"]["diameter"] == 4


def test_kloosterman_values():
    for m in range(1, 9):
        assert cayley.kloosterman(m, 1) == cayley.kloosterman_one_recursive(m)
        assert cayley.kloosterman_one_carlitz(m) == cayley.kloosterman_one_recursive(m)
    assert [cayley.kloosterman_one_recursive(m) for m in (1, 2, 5, 8)] == [1, 3, 11, 31]


def test_searches():
    assert len(cayley.search_ramanujan(15)) == 113
    table = [1, 3, 4, 7, 8, 9, 11, 12, 13, 16, 17, 19]
    assert any(hit["C"] == table for hit in cayley.search_ramanujan(20, jobs=2))
    assert len(cayley.search_gds(8)) == 162


def test_errors():
    with pytest.raises(cayley.InvariantViolation):
        cayley.circulant(10, [1, 2, 9])
    with pytest.raises(cayley.BudgetExceeded):
        cayley.search_ramanujan(40)
    with pytest.raises(ValueError):
        cayley.theorem33(5, 4)
