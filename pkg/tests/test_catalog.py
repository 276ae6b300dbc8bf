from __future__ import annotations

from dataclasses import replace

import pytest

from dinfty.catalog import (
    ARSequence,
    catalog,
    component_of_sequence,
    dim_additive,
    sequence_ending_at,
    sequence_starting_at,
    tau_rep,
    tau_rep_inv,
    tau_rep_power,
)
from dinfty.labels import A, A0, A1, B, Component, all_labels, classify_component, is_injective, is_projective
from dinfty.oracle import validate_ar_sequence


def test_sequence_ending_at_b12():
    s = sequence_ending_at(B(1, 2))
    assert (s.left, s.middle, s.right) == (A(3, 4), (B(1, 4),), B(1, 2))
    assert str(s) == "0 -> A(3,4) -> B(1,4) -> B(1,2) -> 0"


def test_sequence_ending_at_a22():
    s = sequence_ending_at(A(2, 2))
    assert s.left == B(2, 4)
    assert set(s.middle) == {A0(2), A1(2), A(2, 4)}


def test_sequence_starting_at_a1_1():
    s = sequence_starting_at(A1(1))
    assert (s.middle, s.right) == ((B(1, 3),), A0(3))


@pytest.mark.parametrize(
    "x, tx",
    [(B(1, 2), A(3, 4)), (A(5, 5), None), (A(2, 2), B(2, 4)), (A0(3), A1(1)), (A(2, 3), B(1, 2)), (A(4, 6), A(2, 8))],
)
def test_tau(x, tx):
    assert tau_rep(x) == tx


@pytest.mark.parametrize("x, y", [(A(3, 4), B(1, 2)), (A1(2), None), (B(1, 3), B(3, 5)), (A(5, 5), A(3, 7))])
def test_tau_inverse(x, y):
    assert tau_rep_inv(x) == y


def test_tau_undefined_exactly_on_projectives_and_injectives():
    for x in all_labels(12):
        assert (tau_rep(x) is None) == is_projective(x)
        assert (tau_rep_inv(x) is None) == is_injective(x)


def test_tau_power_roundtrip():
    for x in all_labels(9):
        for k in (1, 2, 3):
            y = tau_rep_power(x, -k)
            if y is not None:
                assert tau_rep_power(y, k) == x


def test_components_preserved():
    for s in catalog(14).sequences:
        comps = {classify_component(t) for t in s.terms()}
        assert comps == {component_of_sequence(s)}


def test_catalog_sequences_validate():
    seqs = catalog(11).sequences
    assert len(seqs) == 99
    bad = [str(s) for s in seqs if not validate_ar_sequence(s).ok]
    assert bad == []


def test_corrupted_sequence_fails():
    good = sequence_ending_at(B(1, 2))
    corrupt = replace(good, middle=(B(1, 5),))
    assert dim_additive(good) and not dim_additive(corrupt)
    report = validate_ar_sequence(corrupt)
    assert not report.ok
    assert "additive" in report.failures[0]


def test_split_sequence_fails():
    # dimension-additive but split: the direct sum of its ends, with Ext^1 = 0 between them
    fake = ARSequence(A(3, 3), (A(3, 3), A(5, 5)), A(5, 5), "fake")
    report = validate_ar_sequence(fake)
    assert any("splits" in f for f in report.failures)


def test_all_three_components_have_meshes():
    assert {component_of_sequence(s) for s in catalog(10).sequences} == set(Component)
