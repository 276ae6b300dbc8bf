"""Symbolic names for the indecomposable representations of the zigzag D-infinity quiver.

Vertices are 0, 1, 2, ...; the arrows are 2->0, 2->1, 2->3 and, for every even
v >= 4, v->v-1 and v->v+1.  Every indecomposable is one of four families:

    A(n,m)   k at n..m                        (2 <= n <= m)
    A1(m)    k at 0 and 2..m                  (m >= 1)
    A0(m)    k at 1..m                        (m >= 1)
    B(n,m)   k^2 at 2..n, k at 0, 1, n+1..m   (1 <= n < m)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum


class LabelError(ValueError):
    """Raised for invalid labels (parameters out of range)."""


class LabelParseError(ValueError):
    """Raised when label text does not follow the grammar."""

    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        super().__init__(f"cannot parse {text!r} at position {position}: {reason}")


class Component(str, Enum):
    P = "P"
    I = "I"  # noqa: E741
    R = "R"


_KIND_ORDER = {"A0": 0, "A1": 1, "A": 2, "B": 3}


@dataclass(frozen=True)
class Label:
    kind: str
    n: int | None
    m: int

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise LabelError(f"unknown family {self.kind!r}")
        if (self.n is None) != (self.kind in ("A0", "A1")):
            raise LabelError(f"family {self.kind} takes {'one' if self.n is None else 'two'} parameters")

    def __str__(self) -> str:
        if self.n is None:
            return f"{self.kind}({self.m})"
        return f"{self.kind}({self.n},{self.m})"

    def __repr__(self) -> str:
        return str(self)

    def sort_key(self) -> tuple[int, int, int]:
        return (_KIND_ORDER[self.kind], self.n or 0, self.m)

    def __lt__(self, other: Label) -> bool:
        return self.sort_key() < other.sort_key()

    @property
    def support_max(self) -> int:
        return self.m


def A(n: int, m: int) -> Label:
    return Label("A", n, m)


def A0(m: int) -> Label:
    return Label("A0", None, m)


def A1(m: int) -> Label:
    return Label("A1", None, m)


def B(n: int, m: int) -> Label:
    return Label("B", n, m)


def arrows(bound: int) -> list[tuple[int, int]]:
    """Arrows (source, target) of Q with both ends in 0..bound."""
    out = []
    for s, t in ((2, 0), (2, 1), (2, 3)):
        if s <= bound and t <= bound:
            out.append((s, t))
    for v in range(4, bound + 1, 2):
        out.append((v, v - 1))
        if v + 1 <= bound:
            out.append((v, v + 1))
    return out


def validate(label: Label) -> bool:
    if label.kind == "A":
        return 2 <= label.n <= label.m
    if label.kind in ("A0", "A1"):
        return label.m >= 1
    return 1 <= label.n < label.m


def _require(label: Label) -> None:
    if not validate(label):
        raise LabelError(f"{label} violates the parameter constraints of its family")


def classify_component(label: Label) -> Component:
    _require(label)
    if label.kind in ("A0", "A1"):
        return Component.P if label.m % 2 else Component.I
    n, m = label.n, label.m
    if (n + m) % 2:
        return Component.R
    return Component.P if n % 2 else Component.I


def dim_vector(label: Label) -> tuple[int, ...]:
    """Dimension vector as a tuple indexed by vertex 0..m."""
    _require(label)
    m = label.m
    d = [0] * (m + 1)
    if label.kind == "A":
        for i in range(label.n, m + 1):
            d[i] = 1
    elif label.kind == "A1":
        for i in range(m + 1):
            d[i] = 1
        if m >= 1:
            d[1] = 0
    elif label.kind == "A0":
        for i in range(1, m + 1):
            d[i] = 1
    else:
        n = label.n
        for i in range(m + 1):
            d[i] = 2 if 2 <= i <= n else 1
    return tuple(d)


def dim_at(label: Label, vertex: int) -> int:
    d = dim_vector(label)
    return d[vertex] if vertex < len(d) else 0


def projective_label(t: int) -> Label:
    if t < 0:
        raise LabelError("vertices are non-negative")
    if t == 0:
        return A1(1)
    if t == 1:
        return A0(1)
    if t == 2:
        return B(1, 3)
    return A(t, t) if t % 2 else A(t - 1, t + 1)


def injective_label(t: int) -> Label:
    if t < 0:
        raise LabelError("vertices are non-negative")
    if t == 0:
        return A1(2)
    if t == 1:
        return A0(2)
    if t == 2:
        return A(2, 2)
    return A(t - 1, t + 1) if t % 2 else A(t, t)


def projective_vertex(label: Label) -> int | None:
    """The t with label == P_t, or None."""
    for t in _candidate_vertices(label):
        if projective_label(t) == label:
            return t
    return None


def injective_vertex(label: Label) -> int | None:
    for t in _candidate_vertices(label):
        if injective_label(t) == label:
            return t
    return None


def _candidate_vertices(label: Label) -> range:
    return range(max(0, label.m - 2), label.m + 1)


def is_projective(label: Label) -> bool:
    return projective_vertex(label) is not None


def is_injective(label: Label) -> bool:
    return injective_vertex(label) is not None


def all_labels(bound: int) -> list[Label]:
    """Every valid label with largest parameter <= bound, in grammar order."""
    out = [A0(m) for m in range(1, bound + 1)]
    out += [A1(m) for m in range(1, bound + 1)]
    out += [A(n, m) for n in range(2, bound + 1) for m in range(n, bound + 1)]
    out += [B(n, m) for n in range(1, bound + 1) for m in range(n + 1, bound + 1)]
    return sorted(out)


# grammar: A(n,m) | A0(m) | A1(m) | B(n,m), optionally followed by [s]
_INT = re.compile(r"[1-9][0-9]*")
_SHIFT = re.compile(r"-?[1-9][0-9]*")


def _expect(text: str, pos: int, ch: str) -> int:
    if pos >= len(text):
        raise LabelParseError(text, pos, f"expected {ch!r}, got end of input")
    if text[pos] != ch:
        raise LabelParseError(text, pos, f"expected {ch!r}, got {text[pos]!r}")
    return pos + 1


def _integer(text: str, pos: int, pattern: re.Pattern = _INT) -> tuple[int, int]:
    mt = pattern.match(text, pos)
    if mt is None:
        got = repr(text[pos]) if pos < len(text) else "end of input"
        raise LabelParseError(text, pos, f"expected an integer, got {got}")
    return int(mt.group()), mt.end()


def parse_object(text: str) -> tuple[Label, int]:
    """Parse ``LABEL`` or ``LABEL[s]`` into (label, shift)."""
    pos = 0
    if text.startswith("A0(") or text.startswith("A1("):
        kind, pos = text[:2], 2
    elif text.startswith("A") or text.startswith("B"):
        kind, pos = text[0], 1
    else:
        got = repr(text[0]) if text else "end of input"
        raise LabelParseError(text, 0, f"expected one of A, A0, A1, B, got {got}")
    pos = _expect(text, pos, "(")
    first, pos = _integer(text, pos)
    if kind in ("A", "B"):
        pos = _expect(text, pos, ",")
        second, pos = _integer(text, pos)
        n, m = first, second
    else:
        n, m = None, first
    pos = _expect(text, pos, ")")
    shift = 0
    if pos < len(text):
        pos = _expect(text, pos, "[")
        shift, pos = _integer(text, pos, _SHIFT)
        pos = _expect(text, pos, "]")
    if pos != len(text):
        raise LabelParseError(text, pos, f"trailing characters {text[pos:]!r}")
    label = Label(kind, n, m)
    if not validate(label):
        raise LabelParseError(text, 0, f"{label} violates the parameter constraints of its family")
    return label, shift


def parse_label(text: str) -> Label:
    label, shift = parse_object(text)
    if shift:
        raise LabelParseError(text, text.index("["), "a representation label takes no shift")
    return label


def format_object(label: Label, shift: int) -> str:
    return str(label) if shift == 0 else f"{label}[{shift}]"
