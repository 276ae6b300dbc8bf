from __future__ import annotations

import pytest

from dinfty.hom import (
    HomAnswer,
    Method,
    ext,
    ext1_cluster,
    ext1_rep,
    formula_covers,
    hom,
    hom_cluster,
    hom_cluster_two_term,
    hom_derived,
    hom_rep,
    p_orbit,
)
from dinfty.labels import A, A0, A1, B, all_labels, injective_label, projective_label
from dinfty.objects import DerivedObject as D
from dinfty.objects import parse_cluster, tau_cluster, window_objects
from dinfty.oracle import oracle_hom


@pytest.mark.parametrize(
    "x, y, d, method",
    [
        (A1(1), A0(3), 0, Method.FORMULA),
        (A(5, 5), B(5, 7), 2, Method.FORMULA),
        (A(5, 5), A(7, 8), 0, Method.FORMULA),
        (A1(1), B(1, 2), 1, Method.FORMULA),
        (B(1, 2), A(5, 5), 0, Method.ZERO_RULE),
        (A(2, 2), B(1, 2), 0, Method.ZERO_RULE),
        (A(5, 5), A(4, 6), 1, Method.ORACLE_FALLBACK),
    ],
)
def test_hom_rep(x, y, d, method):
    assert hom_rep(x, y) == HomAnswer(d, method)


def test_p_orbit():
    assert p_orbit(A(5, 5)) == (5, 0)
    assert p_orbit(A(3, 7)) == (5, 1)


def test_formula_coverage_excludes_injective_targets():
    assert not formula_covers(A(5, 5), A(4, 4))
    assert formula_covers(A(4, 4), A(5, 5))


def test_formulas_against_oracle_small_window():
    labels = all_labels(9)
    for x in labels:
        for y in labels:
            if formula_covers(x, y):
                assert hom_rep(x, y).dim == oracle_hom(x, y), (x, y)


def test_ext_rep():
    assert ext1_rep(A(2, 3), B(1, 2)) == 1
    assert ext1_rep(A0(3), A1(1)) == 1
    assert all(ext1_rep(A(5, 5), y) == 0 for y in all_labels(7))


def test_derived():
    P0 = D(A1(1))
    assert all(hom_derived(P0, D(injective_label(j), -1)) == 0 for j in range(8))
    x = D(B(2, 5))
    assert hom_derived(x, x) == 1
    assert hom_derived(x, D(B(2, 5), -2)) == 0


def test_cluster_values():
    c = parse_cluster
    assert hom_cluster(c("A(5,5)"), c("B(2,5)")) == 1
    assert hom_cluster(c("B(2,5)"), c("A(5,5)")) == 1
    assert ext1_cluster(c("A1(1)"), c("A(2,3)")) == 1
    assert ext1_cluster(c("A(2,2)[-1]"), c("A(2,3)")) == 1
    assert ext1_cluster(c("B(1,2)"), c("B(1,2)")) == 0
    tt = tau_cluster(c("A1(1)"), 2)
    for l in range(1, 12, 2):
        assert hom_cluster(c(f"A1({l})"), tt) == 1


def test_end_is_one_on_window():
    for x in window_objects(11):
        assert hom_cluster(x, x) == 1
        assert ext1_cluster(x, x) == 0


def test_two_term_form():
    labels = all_labels(7)
    for x in labels:
        for y in labels:
            assert hom_cluster(D(x), D(y)) == hom_cluster_two_term(x, y)


def test_dispatch():
    assert hom(A(5, 5), B(5, 7)) == 2
    assert hom(D(A(5, 5)), D(B(5, 7)), "derived") == 2
    assert ext(A0(3), A1(1)) == 1
    assert ext(D(A0(3)), D(A1(1)), "derived") == 1
    assert ext(parse_cluster("A1(1)"), parse_cluster("A(2,3)"), "cluster") == 1
    with pytest.raises(ValueError):
        hom(A(5, 5), A(5, 5), "nope")
    with pytest.raises(ValueError):
        hom(D(A(5, 5), 1), A(5, 5))


def test_oracle_only_path():
    assert hom_rep(A(5, 5), B(5, 7), oracle_only=True) == HomAnswer(2, Method.ORACLE)
    assert projective_label(5) == A(5, 5)
