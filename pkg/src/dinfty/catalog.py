"""Almost split sequences of rep(Q), one generator per parametrized family.

The translation tau and its inverse are read off this catalog (tau of the
right end is the left end) instead of being coded per family, so the two can
never drift apart.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass
from functools import lru_cache

from .labels import A, A0, A1, B, Component, Label, classify_component, dim_vector


@dataclass(frozen=True)
class ARSequence:
    left: Label
    middle: tuple[Label, ...]
    right: Label
    family: str

    def __post_init__(self):
        object.__setattr__(self, "middle", tuple(sorted(self.middle)))

    def terms(self) -> tuple[Label, ...]:
        return (self.left, *self.middle, self.right)

    @property
    def bound(self) -> int:
        return max(t.m for t in self.terms())

    def __str__(self) -> str:
        mid = " (+) ".join(str(x) for x in self.middle)
        return f"0 -> {self.left} -> {mid} -> {self.right} -> 0"


def _odd(lo: int, hi: int) -> range:
    lo += 1 - lo % 2
    return range(lo, hi + 1, 2)


def _even(lo: int, hi: int) -> range:
    lo += lo % 2
    return range(lo, hi + 1, 2)


def _Ak(k: int, m: int) -> Label:
    return A1(m) if k == 1 else A0(m)


# Each family yields (left, middle, right) for all parameters with every term
# bounded by M; the generators overshoot slightly and the caller filters.

def _p1(M):
    for i in _odd(1, M):
        for k in (0, 1):
            yield _Ak(k, i), (B(i, i + 2),), _Ak(1 - k, i + 2)


def _p2(M):
    for i in _odd(1, M):
        yield B(i, i + 2), (A0(i + 2), A1(i + 2), B(i, i + 4)), B(i + 2, i + 4)


def _p3(M):
    for i in _odd(3, M):
        yield A(3, i), (B(1, i), A(3, i + 2)), B(1, i + 2)


def _p4(M):
    for i in _odd(5, M):
        for j in _odd(i, M):
            yield A(i, j), (A(i - 2, j), A(i, j + 2)), A(i - 2, j + 2)


def _p5(M):
    for i in _odd(1, M):
        for j in _odd(i + 3, M):
            yield B(i, j), (B(i + 2, j), B(i, j + 2)), B(i + 2, j + 2)


def _i1(M):
    yield B(2, 4), (A0(2), A1(2), A(2, 4)), A(2, 2)


def _i2(M):
    for i in _even(2, M):
        for k in (0, 1):
            yield _Ak(k, i + 2), (B(i, i + 2),), _Ak(1 - k, i)


def _i3(M):
    # printed with i >= 4; i = 2 is needed for tau(B(2,4)) = B(4,6)
    for i in _even(2, M):
        yield B(i + 2, i + 4), (A0(i + 2), A1(i + 2), B(i, i + 4)), B(i, i + 2)


def _i4(M):
    for i in _even(4, M):
        yield B(2, i + 2), (B(2, i), A(2, i + 2)), A(2, i)


def _i5(M):
    for i in _even(4, M):
        for j in _even(i, M):
            yield A(i - 2, j + 2), (A(i - 2, j), A(i, j + 2)), A(i, j)


def _i6(M):
    for i in _even(2, M):
        for j in _even(i + 3, M):
            yield B(i + 2, j + 2), (B(i + 2, j), B(i, j + 2)), B(i, j)


def _r1(M):
    yield A(3, 4), (B(1, 4),), B(1, 2)


def _r2(M):
    yield B(1, 2), (B(2, 3),), A(2, 3)


def _r3(M):
    for i in _odd(1, M):
        yield B(i, i + 3), (B(i + 2, i + 3), B(i, i + 1)), B(i + 1, i + 2)


def _r4(M):
    for i in _even(2, M):
        yield B(i + 1, i + 2), (B(i + 2, i + 3), B(i, i + 1)), B(i, i + 3)


def _r5(M):
    for i in _odd(3, M):
        yield A(i + 2, i + 3), (A(i, i + 3),), A(i, i + 1)


def _r6(M):
    for i in _even(2, M):
        yield A(i, i + 1), (A(i, i + 3),), A(i + 2, i + 3)


def _r7(M):
    for i in _odd(3, M):
        for j in _even(i + 3, M):
            yield A(i + 2, j + 2), (A(i, j + 2), A(i + 2, j)), A(i, j)


def _r8(M):
    for i in _even(2, M):
        for j in _odd(i + 3, M):
            yield A(i, j), (A(i, j + 2), A(i + 2, j)), A(i + 2, j + 2)


def _r9(M):
    for j in _even(4, M):
        yield A(3, j + 2), (B(1, j + 2), A(3, j)), B(1, j)


def _r10(M):
    for j in _odd(3, M):
        yield B(2, j), (B(2, j + 2), A(2, j)), A(2, j + 2)


def _r11(M):
    for i in _odd(3, M):
        for j in _even(i + 1, M):
            yield B(i - 2, j + 2), (B(i, j + 2), B(i - 2, j)), B(i, j)


def _r12(M):
    for i in _even(4, M):
        for j in _odd(i + 1, M):
            yield B(i, j), (B(i, j + 2), B(i - 2, j)), B(i - 2, j + 2)


FAMILIES: dict[str, Callable[[int], Iterator]] = {
    "P1": _p1, "P2": _p2, "P3": _p3, "P4": _p4, "P5": _p5,
    "I1": _i1, "I2": _i2, "I3": _i3, "I4": _i4, "I5": _i5, "I6": _i6,
    "R1": _r1, "R2": _r2, "R3": _r3, "R4": _r4, "R5": _r5, "R6": _r6,
    "R7": _r7, "R8": _r8, "R9": _r9, "R10": _r10, "R11": _r11, "R12": _r12,
}

# the largest parameter of any term exceeds that of either end by at most this
SPREAD = 4


class CatalogError(RuntimeError):
    pass


@dataclass(frozen=True)
class Catalog:
    bound: int
    sequences: tuple[ARSequence, ...]
    by_left: dict
    by_right: dict

    def through(self, label: Label) -> list[ARSequence]:
        return [s for s in self.sequences if label in s.terms()]


@lru_cache(maxsize=64)
def catalog(bound: int) -> Catalog:
    """Every cataloged sequence whose terms all have largest parameter <= bound."""
    seqs = []
    for name, gen in FAMILIES.items():
        for left, mid, right in gen(bound):
            s = ARSequence(left, mid, right, name)
            if s.bound <= bound:
                seqs.append(s)
    seqs.sort(key=lambda s: (s.right.sort_key(), s.family))
    by_left: dict[Label, ARSequence] = {}
    by_right: dict[Label, ARSequence] = {}
    for s in seqs:
        for key, index in ((s.left, by_left), (s.right, by_right)):
            if key in index and index[key] != s:
                raise CatalogError(f"two sequences share an end term {key}: {index[key]} and {s}")
            index[key] = s
    return Catalog(bound, tuple(seqs), by_left, by_right)


def _catalog_for(label: Label) -> Catalog:
    # round up so neighbouring labels share one cached catalog
    return catalog(((label.m + SPREAD) // 8 + 1) * 8)


def sequence_ending_at(label: Label) -> ARSequence | None:
    return _catalog_for(label).by_right.get(label)


def sequence_starting_at(label: Label) -> ARSequence | None:
    return _catalog_for(label).by_left.get(label)


def ar_sequences_through(label: Label) -> list[ARSequence]:
    classify_component(label)
    return _catalog_for(label).through(label)


def tau_rep(label: Label) -> Label | None:
    """AR translate in rep(Q); None exactly on projectives."""
    s = sequence_ending_at(label)
    return None if s is None else s.left


def tau_rep_inv(label: Label) -> Label | None:
    s = sequence_starting_at(label)
    return None if s is None else s.right


def tau_rep_power(label: Label, power: int) -> Label | None:
    step = tau_rep if power > 0 else tau_rep_inv
    out: Label | None = label
    for _ in range(abs(power)):
        out = step(out)
        if out is None:
            return None
    return out


def dim_additive(seq: ARSequence) -> bool:
    width = seq.bound + 1

    def padded(lab: Label) -> list[int]:
        d = list(dim_vector(lab))
        return d + [0] * (width - len(d))

    ends = [a + b for a, b in zip(padded(seq.left), padded(seq.right))]
    mid = [0] * width
    for x in seq.middle:
        mid = [a + b for a, b in zip(mid, padded(x))]
    return ends == mid


def component_of_sequence(seq: ARSequence) -> Component:
    return classify_component(seq.right)
