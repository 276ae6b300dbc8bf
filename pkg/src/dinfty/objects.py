"""Objects of the derived and cluster categories.

A derived object is a label with a shift.  The cluster category is the orbit
category of F = tau_D^{-1} o [1]; every object has a unique representative in
the fundamental domain  P[0] u I[-1] u R[0].
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .catalog import tau_rep, tau_rep_inv
from .labels import (
    Component,
    Label,
    all_labels,
    classify_component,
    format_object,
    injective_label,
    injective_vertex,
    parse_object,
    projective_label,
    projective_vertex,
)


@dataclass(frozen=True)
class DerivedObject:
    label: Label
    shift: int = 0

    def __str__(self) -> str:
        return format_object(self.label, self.shift)

    def __repr__(self) -> str:
        return str(self)

    @property
    def component(self) -> Component:
        return classify_component(self.label)

    def sort_key(self):
        return (self.label.sort_key(), self.shift)

    def __lt__(self, other: DerivedObject) -> bool:
        return self.sort_key() < other.sort_key()

    @property
    def connecting(self) -> bool:
        return self.component is not Component.R


class DomainError(ValueError):
    pass


# a DerivedObject known to lie in the fundamental domain
ClusterObject = DerivedObject


def require_domain(obj: DerivedObject) -> DerivedObject:
    if not in_fundamental_domain(obj):
        raise DomainError(f"{obj} is outside the fundamental domain")
    return obj


def in_fundamental_domain(obj: DerivedObject) -> bool:
    comp = classify_component(obj.label)
    return obj.shift == (-1 if comp is Component.I else 0)


def parse_derived(text: str) -> DerivedObject:
    label, shift = parse_object(text)
    return DerivedObject(label, shift)


def parse_cluster(text: str) -> ClusterObject:
    """Parse and normalize into the fundamental domain."""
    return normalize(parse_derived(text))


def as_cluster(obj: DerivedObject) -> ClusterObject:
    return obj if in_fundamental_domain(obj) else normalize(obj)


# derived translation


def tau_derived_step(obj: DerivedObject) -> DerivedObject:
    j = projective_vertex(obj.label)
    if j is not None:
        return DerivedObject(injective_label(j), obj.shift - 1)
    return DerivedObject(tau_rep(obj.label), obj.shift)


def tau_derived_inv_step(obj: DerivedObject) -> DerivedObject:
    j = injective_vertex(obj.label)
    if j is not None:
        return DerivedObject(projective_label(j), obj.shift + 1)
    return DerivedObject(tau_rep_inv(obj.label), obj.shift)


def tau_derived(obj: DerivedObject, power: int = 1) -> DerivedObject:
    step = tau_derived_step if power > 0 else tau_derived_inv_step
    out = DerivedObject(obj.label, obj.shift)
    for _ in range(abs(power)):
        out = step(out)
    return out


def F(obj: DerivedObject) -> DerivedObject:
    """tau_D^{-1} o [1]."""
    return tau_derived_inv_step(DerivedObject(obj.label, obj.shift + 1))


def F_inv(obj: DerivedObject) -> DerivedObject:
    return tau_derived_step(DerivedObject(obj.label, obj.shift - 1))


def F_power(obj: DerivedObject, power: int) -> DerivedObject:
    step = F if power > 0 else F_inv
    out = obj
    for _ in range(abs(power)):
        out = step(out)
    return out


def _height(obj: DerivedObject) -> int:
    """Position along ... I[-1] P[0] I[0] P[1] ...; regular objects use 2*shift."""
    comp = classify_component(obj.label)
    return 2 * obj.shift + (1 if comp is Component.I else 0)


def normalize(obj: DerivedObject) -> ClusterObject:
    """The fundamental-domain representative of the F-orbit of obj."""
    out = DerivedObject(obj.label, obj.shift)
    if classify_component(out.label) is Component.R:
        out = F_power(out, -out.shift)
    else:
        while _height(out) > 0:
            out = F_inv(out)
        while _height(out) < -1:
            out = F(out)
    return out


def tau_cluster(obj: DerivedObject, power: int = 1) -> ClusterObject:
    return normalize(tau_derived(obj, power))


@lru_cache(maxsize=None)
def orbit_position(obj: DerivedObject) -> tuple[int, int] | None:
    """(t, r) with obj = tau_C^{-r} P_t; None for regular objects."""
    obj = as_cluster(obj)
    if not obj.connecting:
        return None
    if obj.shift == 0:
        label, r = obj.label, 0
        while (j := projective_vertex(label)) is None:
            label, r = tau_rep(label), r + 1
        return j, r
    label, r = obj.label, -1
    while (j := injective_vertex(label)) is None:
        label, r = tau_rep_inv(label), r - 1
    return j, r


def orbit_index(obj: DerivedObject) -> int | None:
    pos = orbit_position(obj)
    return None if pos is None else pos[0]


def orbit_member(t: int, r: int) -> ClusterObject:
    """tau_C^{-r} P_t."""
    return tau_cluster(DerivedObject(projective_label(t), 0), -r)


@lru_cache(maxsize=None)
def window_objects(N: int) -> tuple[ClusterObject, ...]:
    """Every fundamental-domain object whose label is supported on 0..N, sorted."""
    out = []
    for lab in all_labels(N):
        shift = -1 if classify_component(lab) is Component.I else 0
        out.append(DerivedObject(lab, shift))
    return tuple(sorted(out))
