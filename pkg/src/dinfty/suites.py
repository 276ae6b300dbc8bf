"""Whole-window consistency sweeps: closed forms against the oracle, the AR catalog,
2-Calabi-Yau symmetry and translation invariance.

Large sweeps write one summary line per group plus one line per failure.
"""

from __future__ import annotations

from collections import Counter

from .catalog import catalog, tau_rep
from .cluster import Report
from .fields import GF1009, Field
from .hom import ext1_cluster, formula_covers, hom_cluster, hom_rep
from .labels import Component, all_labels, classify_component
from .objects import DerivedObject, window_objects
from .oracle import oracle_hom, validate_ar_sequence

MAX_FAILURE_LINES = 50


def _summarize(rep: Report, counts: Counter, bad: Counter, failures: list[str]) -> None:
    for group in sorted(counts):
        rep.add(group, bad[group] == 0, f"{counts[group]} pairs, {bad[group]} mismatches")
    for line in failures[:MAX_FAILURE_LINES]:
        rep.add("mismatch", False, line)


def formulas_suite(N: int, field: Field = GF1009) -> Report:
    """Every covered pair with supports <= N: closed form or zero rule against hom_solve."""
    rep = Report("formulas")
    labels = all_labels(N)
    counts, bad, failures = Counter(), Counter(), []
    for x in labels:
        for y in labels:
            if not formula_covers(x, y):
                continue
            cx, cy = classify_component(x).value, classify_component(y).value
            group = f"{cx}->{cy}"
            got = hom_rep(x, y, field).dim
            want = oracle_hom(x, y, field)
            counts[group] += 1
            if got != want:
                bad[group] += 1
                failures.append(f"Hom({x},{y}) formula {got} oracle {want}")
    _summarize(rep, counts, bad, failures)
    return rep


def formula_counts(N: int, field: Field = GF1009) -> Counter:
    """How many window pairs each method answers."""
    labels = all_labels(N)
    return Counter(hom_rep(x, y, field).method.value for x in labels for y in labels)


def ar_catalog_suite(bound: int, field: Field = GF1009) -> Report:
    rep = Report("ar-catalog")
    for seq in catalog(bound).sequences:
        result = validate_ar_sequence(seq, field=field)
        rep.add(str(seq), result.ok, "; ".join(result.failures))
    return rep


def two_cy_suite(N: int, field: Field = GF1009) -> Report:
    """Ext^1_C(X, Y) = Ext^1_C(Y, X) on the window."""
    rep = Report("two-cy")
    objs = window_objects(N)
    n_pairs, failures, nonzero = 0, [], 0
    for i, x in enumerate(objs):
        for y in objs[i:]:
            a, b = ext1_cluster(x, y, field), ext1_cluster(y, x, field)
            n_pairs += 1
            nonzero += a > 0
            if a != b:
                failures.append(f"Ext({x},{y})={a} Ext({y},{x})={b}")
    counts = Counter({f"N={N}": n_pairs})
    bad = Counter({f"N={N}": len(failures)})
    _summarize(rep, counts, bad, failures)
    rep.findings[0].detail += f", {nonzero} nonzero"
    return rep


def uf_suite(N: int, field: Field = GF1009) -> Report:
    """tau-invariance of oracle Hom off the projectives; Hom_C = Hom_rep from P to R u I."""
    rep = Report("uf")
    labels = all_labels(N)
    nonproj = [(x, tx) for x in labels if (tx := tau_rep(x)) is not None]
    counts, bad, failures = Counter(), Counter(), []
    for x, tx in nonproj:
        for y, ty in nonproj:
            counts["tau-invariance"] += 1
            a, b = oracle_hom(x, y, field), oracle_hom(tx, ty, field)
            if a != b:
                bad["tau-invariance"] += 1
                failures.append(f"Hom({x},{y})={a} Hom({tx},{ty})={b}")
    P = [x for x in labels if classify_component(x) is Component.P]
    RI = [y for y in labels if classify_component(y) is not Component.P]
    for x in P:
        X = DerivedObject(x, 0)
        for y in RI:
            counts["cluster-vs-rep"] += 1
            a, b = hom_cluster(X, DerivedObject(y, 0), field), oracle_hom(x, y, field)
            if a != b:
                bad["cluster-vs-rep"] += 1
                failures.append(f"Hom_C({x},{y})={a} Hom_rep={b}")
    _summarize(rep, counts, bad, failures)
    return rep

