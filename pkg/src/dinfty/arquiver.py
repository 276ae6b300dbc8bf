"""Arrows of the AR quiver of C(Q), sectional paths and boundary notions.

The connecting component is I[-1] glued in front of P: its meshes are the
cataloged sequences of P and of I (shifted by -1) plus the meshes through the
seam, where I_y[-1] -> P_x for every arrow y -> x of Q.

Along arrows the largest label parameter never decreases inside P and never
increases inside I, so a path between two objects supported on 0..N only
visits objects supported on 0..N.  Path searches restricted to a window are
therefore exact for the objects of that window.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .catalog import _catalog_for, sequence_ending_at, sequence_starting_at
from .labels import Component, Label, arrows, classify_component, injective_vertex, projective_vertex
from .labels import injective_label, projective_label
from .objects import DerivedObject, as_cluster, tau_cluster, window_objects
from .regions import regular_predecessors, regular_successors


class WindowUnderflow(RuntimeError):
    """The window is too small to answer the question asked."""


@dataclass(frozen=True)
class Window:
    N: int

    @property
    def objects(self) -> tuple[DerivedObject, ...]:
        return window_objects(self.N)

    def __contains__(self, obj: DerivedObject) -> bool:
        return obj.label.m <= self.N

    @property
    def connecting(self) -> tuple[DerivedObject, ...]:
        return tuple(o for o in self.objects if o.connecting)

    @property
    def regular(self) -> tuple[DerivedObject, ...]:
        return tuple(o for o in self.objects if not o.connecting)

    def require(self, *objs: DerivedObject) -> None:
        for o in objs:
            if o not in self:
                raise WindowUnderflow(f"{o} lies outside window N={self.N}")


def _in_quiver(source: int | None = None, target: int | None = None) -> list[tuple[int, int]]:
    v = source if source is not None else target
    return [(s, t) for s, t in arrows(v + 2) if (source is None or s == source) and (target is None or t == target)]


def _shifted(labels, shift: int) -> list[DerivedObject]:
    return [DerivedObject(lab, shift) for lab in labels]


@lru_cache(maxsize=None)
def _successors(obj: DerivedObject) -> tuple[DerivedObject, ...]:
    comp = classify_component(obj.label)
    if comp is Component.R:
        return tuple(_shifted(regular_successors(obj.label), 0))
    out: list[DerivedObject] = []
    seq = sequence_starting_at(obj.label)
    if seq is not None:
        out = _shifted(seq.middle, obj.shift)
    elif comp is Component.I:
        # an injective: its successors inside I, then across the seam
        cat = _catalog_for(obj.label)
        out = _shifted([s.right for s in cat.sequences if obj.label in s.middle], obj.shift)
        y = injective_vertex(obj.label)
        out += [DerivedObject(projective_label(x), 0) for _, x in _in_quiver(source=y)]
    return tuple(sorted(set(out)))


@lru_cache(maxsize=None)
def _predecessors(obj: DerivedObject) -> tuple[DerivedObject, ...]:
    comp = classify_component(obj.label)
    if comp is Component.R:
        return tuple(_shifted(regular_predecessors(obj.label), 0))
    out: list[DerivedObject] = []
    seq = sequence_ending_at(obj.label)
    if seq is not None:
        out = _shifted(seq.middle, obj.shift)
    elif comp is Component.P:
        cat = _catalog_for(obj.label)
        out = _shifted([s.left for s in cat.sequences if obj.label in s.middle], 0)
        x = projective_vertex(obj.label)
        out += [DerivedObject(injective_label(y), -1) for y, _ in _in_quiver(target=x)]
    return tuple(sorted(set(out)))


def immediate_successors(obj: DerivedObject) -> tuple[DerivedObject, ...]:
    return _successors(as_cluster(obj))


def immediate_predecessors(obj: DerivedObject) -> tuple[DerivedObject, ...]:
    return _predecessors(as_cluster(obj))


def ar_arrows(obj: DerivedObject, window: Window) -> list[tuple[DerivedObject, DerivedObject]]:
    """All arrows into and out of obj; raises WindowUnderflow if a neighbour leaves the window."""
    obj = as_cluster(obj)
    window.require(obj)
    succ, pred = immediate_successors(obj), immediate_predecessors(obj)
    window.require(*succ, *pred)
    return [(p, obj) for p in pred] + [(obj, s) for s in succ]


def tau_inv(obj: DerivedObject) -> DerivedObject:
    return tau_cluster(obj, -1)


def _search(start: DerivedObject, window: Window, forward: bool) -> tuple[set, set]:
    """(all reached, reached along a sectional path), paths of length >= 1, inside window."""
    step = immediate_successors if forward else immediate_predecessors
    # sectional: X_{i+1} != tau^{-1} X_{i-1}; read backwards, X_{i-1} != tau X_{i+1}
    forbid = tau_inv if forward else (lambda o: tau_cluster(o, 1))
    reached: set = set()
    frontier = [start]
    while frontier:
        nxt = []
        for cur in frontier:
            for z in step(cur):
                if z in window and z not in reached:
                    reached.add(z)
                    nxt.append(z)
        frontier = nxt
    sectional: set = set()
    seen = set()
    states = [(start, z) for z in step(start) if z in window]
    while states:
        nxt = []
        for prev, cur in states:
            if (prev, cur) in seen:
                continue
            seen.add((prev, cur))
            sectional.add(cur)
            bad = forbid(prev)
            nxt += [(cur, z) for z in step(cur) if z in window and z != bad]
        states = nxt
    return reached, sectional


def _check_connecting(obj: DerivedObject) -> DerivedObject:
    obj = as_cluster(obj)
    if not obj.connecting:
        raise ValueError(f"{obj} is not in the connecting component")
    return obj


def successors(obj: DerivedObject, window: Window) -> set[DerivedObject]:
    obj = _check_connecting(obj)
    window.require(obj)
    return _search(obj, window, True)[0]


def predecessors(obj: DerivedObject, window: Window) -> set[DerivedObject]:
    obj = _check_connecting(obj)
    window.require(obj)
    return _search(obj, window, False)[0]


def sectional_successors(obj: DerivedObject, window: Window) -> set[DerivedObject]:
    obj = _check_connecting(obj)
    window.require(obj)
    return _search(obj, window, True)[1]


def sectional_predecessors(obj: DerivedObject, window: Window) -> set[DerivedObject]:
    obj = _check_connecting(obj)
    window.require(obj)
    return _search(obj, window, False)[1]


def is_sectional_successor(x: DerivedObject, y: DerivedObject, window: Window) -> bool:
    window.require(as_cluster(y))
    return as_cluster(y) in sectional_successors(x, window)


def h_plus(obj: DerivedObject, window: Window) -> set[DerivedObject]:
    """Successors reached by no sectional path."""
    reached, sectional = _search(_check_connecting(obj), window, True)
    return reached - sectional


def h_minus(obj: DerivedObject, window: Window) -> set[DerivedObject]:
    reached, sectional = _search(_check_connecting(obj), window, False)
    return reached - sectional


def forward_backward_forbidden(obj: DerivedObject, window: Window) -> tuple[set, set]:
    window.require(as_cluster(obj))
    return h_plus(obj, window), h_minus(obj, window)


# boundary notions


def is_boundary_object(obj: DerivedObject) -> bool:
    """Exactly one immediate predecessor in the AR quiver of C(Q)."""
    return len(immediate_predecessors(obj)) == 1


def is_boundary_representation(label: Label) -> bool:
    """At most one direct predecessor and at most one direct successor in the AR quiver of rep(Q)."""
    comp = classify_component(label)
    if comp is Component.R:
        obj = DerivedObject(label, 0)
        return len(_predecessors(obj)) <= 1 and len(_successors(obj)) <= 1
    pred = _rep_neighbours(label, forward=False)
    succ = _rep_neighbours(label, forward=True)
    return len(pred) <= 1 and len(succ) <= 1


def _rep_neighbours(label: Label, forward: bool) -> set[Label]:
    cat = _catalog_for(label)
    if forward:
        seq = sequence_starting_at(label)
        if seq is not None:
            return set(seq.middle)
        return {s.right for s in cat.sequences if label in s.middle}
    seq = sequence_ending_at(label)
    if seq is not None:
        return set(seq.middle)
    return {s.left for s in cat.sequences if label in s.middle}


def _count_sectional_paths(start: DerivedObject, window: Window, forward: bool) -> Counter:
    """Number of sectional paths (length >= 1) from start to each reachable window object."""
    step = immediate_successors if forward else immediate_predecessors
    forbid = tau_inv if forward else (lambda o: tau_cluster(o, 1))

    @lru_cache(maxsize=None)
    def from_state(prev: DerivedObject, cur: DerivedObject) -> tuple:
        counts = Counter({cur: 1})
        bad = forbid(prev)
        for z in step(cur):
            if z in window and z != bad:
                counts.update(dict(from_state(cur, z)))
        return tuple(counts.items())

    total: Counter = Counter()
    for z in step(start):
        if z in window:
            total.update(dict(from_state(start, z)))
    return total


def boundary_successors(obj: DerivedObject, window: Window) -> list[DerivedObject]:
    """Boundary objects V with a unique sectional path obj ~> V (inside the window)."""
    obj = _check_connecting(obj)
    window.require(obj)
    counts = _count_sectional_paths(obj, window, True)
    return sorted(v for v, c in counts.items() if c == 1 and v.connecting and is_boundary_object(v))


def boundary_predecessors(obj: DerivedObject, window: Window) -> list[DerivedObject]:
    obj = _check_connecting(obj)
    window.require(obj)
    counts = _count_sectional_paths(obj, window, False)
    return sorted(u for u, c in counts.items() if c == 1 and u.connecting and is_boundary_object(u))
