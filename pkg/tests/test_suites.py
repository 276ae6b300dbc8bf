from __future__ import annotations

from dinfty.suites import ar_catalog_suite, formula_counts, formulas_suite, two_cy_suite, uf_suite


def test_formulas_small():
    rep = formulas_suite(8)
    assert rep.ok
    assert {f.instance for f in rep.findings} == {"P->P", "P->R", "R->R", "I->P", "I->R", "R->P"}


def test_formula_counts_cover_everything():
    c = formula_counts(7)
    assert set(c) == {"FORMULA", "ZERO_RULE", "ORACLE_FALLBACK"}
    assert sum(c.values()) == 56**2


def test_catalog_suite():
    rep = ar_catalog_suite(8)
    assert rep.ok and len(rep.findings) > 30


def test_two_cy_and_uf():
    assert two_cy_suite(8).ok
    assert uf_suite(7).ok
