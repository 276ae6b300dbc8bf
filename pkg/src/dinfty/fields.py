"""Exact fields and Gauss-Jordan elimination over them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

DEFAULT_PRIME = 1009


@dataclass(frozen=True)
class Field:
    """GF(p) when ``p`` is a prime, the rationals when ``p`` is None."""

    p: int | None = DEFAULT_PRIME

    def __post_init__(self):
        if self.p is not None and (self.p < 2 or any(self.p % q == 0 for q in range(2, int(self.p ** 0.5) + 1))):
            raise ValueError(f"{self.p} is not prime")

    def __str__(self) -> str:
        return "QQ" if self.p is None else f"GF({self.p})"

    def coerce(self, x):
        return Fraction(x) if self.p is None else x % self.p

    def inv(self, x):
        return 1 / x if self.p is None else pow(x, -1, self.p)

    def reduce(self, x):
        return x if self.p is None else x % self.p


GF1009 = Field(1009)
GF65521 = Field(65521)
QQ = Field(None)


def rref(rows: list[list], ncols: int, field: Field) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    p = field.p
    mat = [[field.coerce(x) for x in r] for r in rows]
    mat = [r for r in mat if any(r)]
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = field.inv(mat[rank][col])
        prow = [field.reduce(x * inv) for x in mat[rank]]
        mat[rank] = prow
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                c = mat[i][col]
                if p is None:
                    mat[i] = [a - c * b for a, b in zip(mat[i], prow)]
                else:
                    mat[i] = [(a - c * b) % p for a, b in zip(mat[i], prow)]
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    return mat[:rank], pivots


def nullspace(rows: list[list], ncols: int, field: Field) -> list[list]:
    """Basis of {x : rows . x = 0}."""
    reduced, pivots = rref(rows, ncols, field)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    one, zero = field.coerce(1), field.coerce(0)
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, pc in zip(reduced, pivots):
            v[pc] = field.reduce(-r[f])
        basis.append(v)
    return basis


def rank(rows: list[list], ncols: int, field: Field) -> int:
    return len(rref(rows, ncols, field)[1])
