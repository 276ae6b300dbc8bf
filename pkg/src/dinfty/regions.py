"""Closed-form regions of the AR quiver.

The regular component is a ZA_infinity.  Each regular label X gets
coordinates (s, e): the positions of its quasi-socle and quasi-top on the
bottom row, so X sits on top of the quasi-simples s, s+1, ..., e.  tau moves
(s, e) to (s-1, e-1).  Quasi-simples by position q:

    q >= 1:  A(2q, 2q+1)      q = 0:  B(1,2)      q <= -1:  A(2|q|+1, 2|q|+2)
"""

from __future__ import annotations

from .labels import A, B, Component, Label, LabelError, classify_component


class NotRegular(LabelError):
    pass


def reg_coords(label: Label) -> tuple[int, int]:
    """(quasi-socle, quasi-top) positions of a regular label."""
    if classify_component(label) is not Component.R:
        raise NotRegular(f"{label} is not regular")
    n, m = label.n, label.m
    if label.kind == "A":
        if n % 2 == 0:
            return n // 2, (m - 1) // 2
        return 1 - m // 2, -((n - 1) // 2)
    if n % 2:
        return 1 - m // 2, (n - 1) // 2
    return 1 - n // 2, (m - 1) // 2


def label_at(s: int, e: int) -> Label:
    """Inverse of reg_coords."""
    if s > e:
        raise ValueError(f"empty interval [{s}, {e}]")
    if s >= 1:
        return A(2 * s, 2 * e + 1)
    if e <= -1:
        return A(1 - 2 * e, 2 - 2 * s)
    if s + e <= 0:
        return B(2 * e + 1, 2 - 2 * s)
    return B(2 - 2 * s, 2 * e + 1)


def quasi_simple(q: int) -> Label:
    return label_at(q, q)


def quasi_length(label: Label) -> int:
    s, e = reg_coords(label)
    return e - s + 1


def is_quasi_simple(label: Label) -> bool:
    return classify_component(label) is Component.R and quasi_length(label) == 1


def tau_regular(label: Label, power: int = 1) -> Label:
    s, e = reg_coords(label)
    return label_at(s - power, e - power)


def regular_successors(label: Label) -> list[Label]:
    s, e = reg_coords(label)
    out = [label_at(s, e + 1)]
    if s < e:
        out.append(label_at(s + 1, e))
    return sorted(out)


def regular_predecessors(label: Label) -> list[Label]:
    s, e = reg_coords(label)
    out = [label_at(s - 1, e)]
    if s < e:
        out.append(label_at(s, e - 1))
    return sorted(out)


def in_forward_rectangle(x: Label, y: Label) -> bool:
    sx, ex = reg_coords(x)
    sy, ey = reg_coords(y)
    return sx <= sy <= ex <= ey


def in_backward_rectangle(x: Label, y: Label) -> bool:
    """Is y in the backward rectangle of x (y maps nonzero to x)?"""
    return in_forward_rectangle(y, x)


def in_wing_at(q: int, y: Label) -> bool:
    s, e = reg_coords(y)
    return s <= q <= e


def in_wing(vertex: Label, y: Label) -> bool:
    s, e = reg_coords(vertex)
    if s != e:
        raise NotRegular(f"{vertex} is not quasi-simple")
    return in_wing_at(s, y)


def regular_regions(x: Label):
    """Membership predicates (forward, backward) for a regular label."""
    reg_coords(x)
    return (lambda y: in_forward_rectangle(x, y)), (lambda y: in_backward_rectangle(x, y))


def wing(vertex: Label):
    reg_coords(vertex)
    return lambda y: in_wing(vertex, y)


def wing_positions(t: int) -> tuple[int, ...]:
    """Positions of the quasi-simples whose wings carry Hom(P_t, -) on R."""
    if t < 0:
        raise ValueError("vertices are non-negative")
    if t <= 1:
        return (0,)
    if t % 2:
        return (-(t - 1) // 2, (t - 1) // 2)
    return (1 - t // 2, t // 2)


def wing_vertices(t: int) -> tuple[Label, ...]:
    return tuple(quasi_simple(q) for q in wing_positions(t))


# preprojective side


def _odd(*xs: int) -> bool:
    return all(x % 2 for x in xs)


def in_pseudo_rectangle(t: int, y: Label) -> bool:
    """Membership in the pseudo forward rectangle of P_t (t >= 2)."""
    if t < 2:
        return False
    if y.kind == "B":
        return _odd(y.n, y.m) and y.n < t <= y.m
    if y.kind == "A":
        return _odd(y.n, y.m) and y.n <= t <= y.m
    return False


def pseudo_rectangle(t: int):
    return lambda y: in_pseudo_rectangle(t, y)


def in_s1(t: int, y: Label) -> bool:
    return y.kind in ("A0", "A1") and y.m % 2 == 1 and y.m >= t


def in_s2(t: int, y: Label) -> bool:
    return y.kind == "B" and _odd(y.n, y.m) and t <= y.n
