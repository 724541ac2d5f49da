import pytest

import tpa_workbench as tw


def test_sl2_two_fundamentals_block_totals():
    wb = tw.Workbench("sl2", "1;1")
    assert [wb.block_total([n]) for n in range(3)] == [1, 5, 9]


def test_hom_equals_form():
    wb = tw.Workbench("sl3", "1,0;0,1")
    for I, kappa in wb.idempotents([1, 1]):
        for J, kappa2 in wb.idempotents([1, 1]):
            assert wb.graded_hom(I, kappa, J, kappa2) == wb.form(I, kappa, J, kappa2)


def test_simple_count_matches_weight_space():
    wb = tw.Workbench("sl2", "1;1")
    assert wb.simple_dims([2]) == [3]
    assert len(wb.simple_dims([1])) == wb.weight_dim([1])


def test_soundness_and_hecke():
    wb = tw.Workbench("sl2", "1;1")
    assert wb.soundness([2], triples=20, products=10, polys=2)["ok"]
    assert tw.hecke_dim([2], 2) == 8
    r = tw.hecke_check("sl3", "1,0", 2)
    assert r["ok"] and r["dim"] == 2


def test_bad_config():
    with pytest.raises(ValueError):
        tw.Workbench("nope", "1")
    with pytest.raises(ValueError):
        tw.Workbench("sl2", "1,2")
