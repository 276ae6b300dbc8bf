"""Hom and Ext dimensions in rep(Q), the derived category and the cluster category.

rep(Q) dimensions come from closed forms wherever they exist:

* regular to regular: 1 on the forward rectangle, else 0;
* preprojective to preprojective: reduce X = tau^{-r} P_t to P_t and read the
  answer off the pseudo rectangle and the boundary families;
* preprojective to regular: count the wings containing tau^r Y;
* I -> P, I -> R, R -> P vanish.

Everything else (all pairs with a preinjective target) goes to the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .catalog import tau_rep, tau_rep_power
from .fields import GF1009, Field
from .labels import Component, Label, classify_component, is_projective, projective_vertex
from .objects import DerivedObject, F_power, as_cluster, tau_cluster, tau_derived
from .oracle import oracle_hom
from .regions import (
    in_forward_rectangle,
    in_pseudo_rectangle,
    in_s1,
    in_s2,
    reg_coords,
    wing_positions,
)


class Method(str, Enum):
    FORMULA = "FORMULA"
    ZERO_RULE = "ZERO_RULE"
    ORACLE_FALLBACK = "ORACLE_FALLBACK"
    ORACLE = "ORACLE"


@dataclass(frozen=True)
class HomAnswer:
    dim: int
    method: Method

    def __int__(self) -> int:
        return self.dim


P, I, R = Component.P, Component.I, Component.R
ZERO_PAIRS = {(I, P), (I, R), (R, P)}


@lru_cache(maxsize=None)
def p_orbit(label: Label) -> tuple[int, int]:
    """(t, r) with label = tau^{-r} P_t in the preprojective component."""
    r = 0
    while not is_projective(label):
        label = tau_rep(label)
        r += 1
    return projective_vertex(label), r


def _from_projective(t: int, z: Label) -> int:
    """dim Hom(P_t, Z) for Z preprojective."""
    if t <= 1:
        k = "A1" if t == 0 else "A0"
        if z.kind == k:
            return 1
        if z.kind == "B":
            return 1
        return 0
    if in_pseudo_rectangle(t, z) or in_s1(t, z):
        return 1
    if in_s2(t, z):
        return 2
    return 0


def hom_pp(x: Label, y: Label) -> int:
    t, r = p_orbit(x)
    z = tau_rep_power(y, r)
    return 0 if z is None else _from_projective(t, z)


def hom_pr(x: Label, y: Label) -> int:
    t, r = p_orbit(x)
    s, e = reg_coords(y)
    return sum(1 for q in wing_positions(t) if s - r <= q <= e - r)


def hom_rr(x: Label, y: Label) -> int:
    return int(in_forward_rectangle(x, y))


_FORMULAS = {(P, P): hom_pp, (P, R): hom_pr, (R, R): hom_rr}


def formula_covers(x: Label, y: Label) -> bool:
    pair = (classify_component(x), classify_component(y))
    return pair in _FORMULAS or pair in ZERO_PAIRS


@lru_cache(maxsize=None)
def hom_rep(x: Label, y: Label, field: Field = GF1009, oracle_only: bool = False) -> HomAnswer:
    if oracle_only:
        return HomAnswer(oracle_hom(x, y, field), Method.ORACLE)
    pair = (classify_component(x), classify_component(y))
    if pair in ZERO_PAIRS:
        return HomAnswer(0, Method.ZERO_RULE)
    rule = _FORMULAS.get(pair)
    if rule is not None:
        return HomAnswer(rule(x, y), Method.FORMULA)
    return HomAnswer(oracle_hom(x, y, field), Method.ORACLE_FALLBACK)


def hom_rep_dim(x: Label, y: Label, field: Field = GF1009, oracle_only: bool = False) -> int:
    return hom_rep(x, y, field, oracle_only).dim


def ext1_rep(x: Label, y: Label, field: Field = GF1009, oracle_only: bool = False) -> int:
    """dim Ext^1(X, Y) = dim Hom(Y, tau X), zero for projective X."""
    tx = tau_rep(x)
    return 0 if tx is None else hom_rep_dim(y, tx, field, oracle_only)


def hom_derived(x: DerivedObject, y: DerivedObject, field: Field = GF1009, oracle_only: bool = False) -> int:
    d = y.shift - x.shift
    if d == 0:
        return hom_rep_dim(x.label, y.label, field, oracle_only)
    if d == 1:
        return ext1_rep(x.label, y.label, field, oracle_only)
    return 0


@lru_cache(maxsize=None)
def _hom_cluster(x: DerivedObject, y: DerivedObject, field: Field, oracle_only: bool) -> int:
    total = 0
    # F raises the shift, so only finitely many F^i y sit in degrees x.shift, x.shift + 1
    for i in range(-3, 4):
        z = F_power(y, i)
        if z.shift - x.shift in (0, 1):
            total += hom_derived(x, z, field, oracle_only)
    return total


def hom_cluster(x: DerivedObject, y: DerivedObject, field: Field = GF1009, oracle_only: bool = False) -> int:
    return _hom_cluster(as_cluster(x), as_cluster(y), field, oracle_only)


def ext1_cluster(x: DerivedObject, y: DerivedObject, field: Field = GF1009, oracle_only: bool = False) -> int:
    return hom_cluster(x, tau_cluster(y), field, oracle_only)


def hom_cluster_two_term(x: Label, y: Label, field: Field = GF1009) -> int:
    """Hom_D(X, Y) + dim Hom_D(Y, tau_D^2 X) for unshifted representations."""
    X, Y = DerivedObject(x, 0), DerivedObject(y, 0)
    return hom_derived(X, Y, field) + hom_derived(Y, tau_derived(X, 2), field)


def hom(x, y, category: str = "rep", field: Field = GF1009, oracle_only: bool = False) -> int:
    """Dispatch on category name: rep, derived or cluster."""
    if category == "rep":
        return hom_rep_dim(_label(x), _label(y), field, oracle_only)
    if category == "derived":
        return hom_derived(x, y, field, oracle_only)
    if category == "cluster":
        return hom_cluster(x, y, field, oracle_only)
    raise ValueError(f"unknown category {category!r}")


def ext(x, y, category: str = "rep", field: Field = GF1009, oracle_only: bool = False) -> int:
    if category == "rep":
        return ext1_rep(_label(x), _label(y), field, oracle_only)
    if category == "derived":
        return hom_derived(x, DerivedObject(y.label, y.shift + 1), field, oracle_only)
    if category == "cluster":
        return ext1_cluster(x, y, field, oracle_only)
    raise ValueError(f"unknown category {category!r}")


def _label(obj) -> Label:
    if isinstance(obj, Label):
        return obj
    if obj.shift:
        raise ValueError(f"{obj} is not a representation")
    return obj.label
