"""Ground truth by brute force: labels as explicit matrix representations.

Every label is realized over an exact field on the truncation of Q to
vertices 0..N, and Hom spaces are computed as the kernel of

    (f_v)_v  |->  (Y_a f_s - f_t X_a)_{a: s->t}.

Ext^1 then follows from the Euler form, since rep(Q) is hereditary.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .catalog import ARSequence, dim_additive
from .fields import GF1009, Field, nullspace
from .labels import Label, arrows, dim_vector

Matrix = tuple[tuple, ...]


class OracleError(RuntimeError):
    pass


class TruncationError(OracleError):
    pass


@dataclass(frozen=True)
class MatrixRep:
    N: int
    dims: tuple[int, ...]
    maps: dict  # (source, target) -> Matrix of shape dims[target] x dims[source]
    field: Field
    name: str = ""

    def __hash__(self):
        return hash((self.N, self.dims, self.name, self.field))

    def map(self, s: int, t: int) -> Matrix:
        return self.maps.get((s, t), ())


def _matrix(ds: int, dt: int, target: int) -> Matrix:
    if ds == dt == 1:
        return ((1,),)
    if ds == dt == 2:
        return ((1, 0), (0, 1))
    if ds == 2 and dt == 1:
        if target == 0:
            return ((1, 0),)
        if target == 1:
            return ((0, 1),)
        return ((1, 1),)
    if ds == 1 and dt == 2:
        return ((1,), (1,))
    raise OracleError(f"no standard map for dimensions {ds} -> {dt}")


def build_rep(label: Label, N: int, field: Field = GF1009, check: bool = True) -> MatrixRep:
    if N < 3 or N < label.m:
        raise TruncationError(f"truncation N={N} too small for {label}")
    d = dim_vector(label)
    dims = tuple(d[i] if i < len(d) else 0 for i in range(N + 1))
    maps = {}
    for s, t in arrows(N):
        if dims[s] and dims[t]:
            maps[(s, t)] = _matrix(dims[s], dims[t], t)
    rep = MatrixRep(N, dims, maps, field, str(label))
    if check and hom_dim_reps(rep, rep) != 1:
        raise OracleError(f"constructed representation of {label} is not a brick")
    return rep


def zero_rep(N: int, field: Field = GF1009) -> MatrixRep:
    return MatrixRep(N, (0,) * (N + 1), {}, field, "0")


def _variables(X: MatrixRep, Y: MatrixRep) -> dict[int, int]:
    """Offset of the block f_v (dims Y_v x X_v, row-major) in the unknown vector."""
    offsets, pos = {}, 0
    for v in range(X.N + 1):
        if X.dims[v] and Y.dims[v]:
            offsets[v] = pos
            pos += X.dims[v] * Y.dims[v]
    offsets[-1] = pos
    return offsets


def _equations(X: MatrixRep, Y: MatrixRep, off: dict[int, int]) -> list[list[int]]:
    nvar = off[-1]
    rows = []
    for s, t in arrows(X.N):
        dxs, dyt = X.dims[s], Y.dims[t]
        if not dxs or not dyt:
            continue
        Ya, Xa = Y.map(s, t), X.map(s, t)
        for i in range(dyt):
            for j in range(dxs):
                row = [0] * nvar
                # (Y_a f_s)[i][j]
                if s in off:
                    for k in range(Y.dims[s]):
                        row[off[s] + k * dxs + j] += Ya[i][k]
                # (f_t X_a)[i][j]
                if t in off:
                    dxt = X.dims[t]
                    for k in range(dxt):
                        row[off[t] + i * dxt + k] -= Xa[k][j]
                if any(row):
                    rows.append(row)
    return rows


def _same_frame(X: MatrixRep, Y: MatrixRep) -> None:
    if X.N != Y.N:
        raise TruncationError(f"truncations differ: {X.N} vs {Y.N}")
    if X.field != Y.field:
        raise OracleError("representations over different fields")


def hom_basis(X: MatrixRep, Y: MatrixRep) -> list[dict[int, Matrix]]:
    """A basis of Hom(X, Y); each morphism maps vertex -> matrix (Y_v x X_v)."""
    _same_frame(X, Y)
    off = _variables(X, Y)
    nvar = off[-1]
    if nvar == 0:
        return []
    basis = nullspace(_equations(X, Y, off), nvar, X.field)
    out = []
    for vec in basis:
        f = {}
        for v, o in off.items():
            if v < 0:
                continue
            dx, dy = X.dims[v], Y.dims[v]
            f[v] = tuple(tuple(vec[o + i * dx + j] for j in range(dx)) for i in range(dy))
        out.append(f)
    return out


def hom_dim_reps(X: MatrixRep, Y: MatrixRep) -> int:
    _same_frame(X, Y)
    off = _variables(X, Y)
    if off[-1] == 0:
        return 0
    from .fields import rank

    return off[-1] - rank(_equations(X, Y, off), off[-1], X.field)


def hom_solve(X: MatrixRep, Y: MatrixRep) -> tuple[int, list[dict[int, Matrix]]]:
    basis = hom_basis(X, Y)
    return len(basis), basis


def euler_form(d, e) -> int:
    """<d, e> = sum_x d_x e_x - sum_{a: x->y} d_x e_y."""
    size = max(len(d), len(e))
    d = list(d) + [0] * (size - len(d))
    e = list(e) + [0] * (size - len(e))
    val = sum(a * b for a, b in zip(d, e))
    for s, t in arrows(size - 1):
        val -= d[s] * e[t]
    return val


def _support_max(rep: MatrixRep) -> int:
    nz = [v for v, x in enumerate(rep.dims) if x]
    return max(nz) if nz else 0


def ext_solve(X: MatrixRep, Y: MatrixRep) -> int:
    _same_frame(X, Y)
    if max(_support_max(X), _support_max(Y)) + 1 > X.N - 1:
        raise TruncationError(f"supports do not fit strictly inside 0..{X.N - 1}")
    val = hom_dim_reps(X, Y) - euler_form(X.dims, Y.dims)
    if val < 0:
        raise TruncationError(f"negative Ext dimension {val} for {X.name}, {Y.name}")
    return val


def _mul(a: Matrix, b: Matrix, field: Field) -> Matrix:
    inner = len(b)
    cols = len(b[0]) if b else 0
    return tuple(
        tuple(field.reduce(sum(a[i][k] * b[k][j] for k in range(inner))) for j in range(cols))
        for i in range(len(a))
    )


def compose(g: dict[int, Matrix], f: dict[int, Matrix], field: Field) -> dict[int, Matrix]:
    """g o f on the vertices where both are defined."""
    return {v: _mul(g[v], f[v], field) for v in f if v in g}


def is_zero_morphism(f: dict[int, Matrix]) -> bool:
    return not any(x for m in f.values() for row in m for x in row)


def compose_nonzero(X: MatrixRep, Z: MatrixRep, Y: MatrixRep) -> bool:
    """Does some composite X -> Z -> Y vanish nowhere?  Decided on bases."""
    first = hom_basis(X, Z)
    if not first:
        return False
    second = hom_basis(Z, Y)
    return any(not is_zero_morphism(compose(g, f, X.field)) for f in first for g in second)


# label-level entry points, cached per field


def frame_for(*labels: Label) -> int:
    return max(3, max(lab.m for lab in labels) + 2)


@lru_cache(maxsize=None)
def _rep(label: Label, N: int, field: Field) -> MatrixRep:
    return build_rep(label, N, field)


def rep_of(label: Label, N: int, field: Field = GF1009) -> MatrixRep:
    return _rep(label, N, field)


@lru_cache(maxsize=None)
def oracle_hom(x: Label, y: Label, field: Field = GF1009) -> int:
    if not set(_nz(x)) & set(_nz(y)):
        return 0
    N = frame_for(x, y)
    return hom_dim_reps(rep_of(x, N, field), rep_of(y, N, field))


@lru_cache(maxsize=None)
def oracle_ext(x: Label, y: Label, field: Field = GF1009) -> int:
    N = frame_for(x, y)
    return ext_solve(rep_of(x, N, field), rep_of(y, N, field))


def oracle_compose_nonzero(x: Label, z: Label, y: Label, field: Field = GF1009) -> bool:
    N = frame_for(x, z, y)
    return compose_nonzero(rep_of(x, N, field), rep_of(z, N, field), rep_of(y, N, field))


@lru_cache(maxsize=None)
def _nz(label: Label) -> tuple[int, ...]:
    return tuple(v for v, x in enumerate(dim_vector(label)) if x)


@dataclass
class SequenceReport:
    sequence: ARSequence
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def validate_ar_sequence(seq: ARSequence, N: int | None = None, field: Field = GF1009) -> SequenceReport:
    """Dimension additivity, brick end terms, and non-splitness (Ext^1(right, left) != 0)."""
    N = frame_for(*seq.terms()) if N is None else N
    if N < seq.bound + 2:
        raise TruncationError(f"N={N} too small for {seq}")
    failures = []
    if not dim_additive(seq):
        failures.append("dimension vectors not additive")
    ends = {}
    for name, lab in (("left", seq.left), ("right", seq.right)):
        try:
            ends[name] = build_rep(lab, N, field)
        except OracleError as exc:
            failures.append(f"{name} end: {exc}")
    if len(ends) == 2 and ext_solve(ends["right"], ends["left"]) < 1:
        failures.append("sequence splits: Ext^1(right, left) = 0")
    return SequenceReport(seq, failures)
