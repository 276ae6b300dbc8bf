"""Executable forms of the structural statements about C(Q), checked on windows.

Windows are finite and true cluster-tilting subcategories are infinite, so
every suite here checks pairwise or local consequences on the window only.
Each report carries that caveat in its header.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import lru_cache

from .arquiver import (
    Window,
    WindowUnderflow,
    boundary_predecessors,
    boundary_successors,
    h_minus,
    h_plus,
)
from .fields import GF1009, Field
from .hom import ext1_cluster, hom_cluster
from .labels import A, A0, A1, B, Label, injective_label, projective_label
from .objects import DerivedObject, as_cluster, orbit_position, tau_cluster
from .oracle import oracle_compose_nonzero
from .regions import tau_regular

HEADER = (
    "window-maximal rigid sets approximate cluster-tilting subcategories; "
    "only pairwise and local consequences are checked inside the window"
)

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


@dataclass
class Finding:
    suite: str
    instance: str
    status: str
    detail: str = ""

    def tsv(self) -> str:
        return f"{self.suite}\t{self.instance}\t{self.status}\t{self.detail}"


@dataclass
class Report:
    suite: str
    findings: list[Finding] = field(default_factory=list)
    header: str = HEADER

    def add(self, instance: str, ok: bool | None, detail: str = "") -> None:
        status = SKIP if ok is None else (PASS if ok else FAIL)
        self.findings.append(Finding(self.suite, instance, status, detail))

    def extend(self, other: Report) -> None:
        self.findings += other.findings

    @property
    def ok(self) -> bool:
        return all(f.status != FAIL for f in self.findings)

    @property
    def failures(self) -> list[Finding]:
        return [f for f in self.findings if f.status == FAIL]

    def sorted(self) -> Report:
        key = lambda f: (f.suite, f.instance, f.status, f.detail)  # noqa: E731
        return Report(self.suite, sorted(self.findings, key=key), self.header)

    def to_tsv(self) -> str:
        lines = [f"# {self.header}"] + [f.tsv() for f in self.findings]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        data = {
            "suite": self.suite,
            "header": self.header,
            "ok": self.ok,
            "findings": [f.__dict__ for f in self.findings],
        }
        return json.dumps(data, indent=2) + "\n"


def _fmt(objs) -> str:
    return "{" + ", ".join(str(o) for o in sorted(objs)) + "}"


def _obj(label: Label, shift: int = 0) -> DerivedObject:
    return DerivedObject(label, shift)


# forbidden regions


@lru_cache(maxsize=None)
def _forbidden(x: DerivedObject, N: int, field: Field) -> frozenset:
    return frozenset(y for y in Window(N).objects if ext1_cluster(y, x, field))


def forbidden_region(x: DerivedObject, window: Window, field: Field = GF1009) -> set[DerivedObject]:
    """H(X) = {Y : Ext^1_C(Y, X) != 0}, restricted to the window."""
    return set(_forbidden(as_cluster(x), window.N, field))


def forward_backward_forbidden(x: DerivedObject, window: Window) -> tuple[set, set]:
    return h_plus(x, window), h_minus(x, window)


# regular partner of P_t


def unique_regular_partner(t: int) -> DerivedObject | None:
    if t <= 2:
        return None
    if t in (3, 4):
        return _obj(A(2, 2 * t - 3))
    if t % 2:
        return _obj(B(t - 3, t))
    return _obj(B(t - 4, t + 1))


def partner_of(x: DerivedObject) -> DerivedObject | None:
    """Regular partner of any object in the tau_C-orbit of P_t."""
    pos = orbit_position(x)
    if pos is None:
        return None
    t, r = pos
    base = unique_regular_partner(t)
    return None if base is None else _obj(tau_regular(base.label, -r))


def _guard(window: Window, need: int, what: str) -> None:
    if window.N < need:
        raise WindowUnderflow(f"{what} needs N >= {need}, got N={window.N}")


def cdetr_search(t: int, window: Window, field: Field = GF1009) -> list[tuple[DerivedObject, int, int]]:
    X = _obj(projective_label(t))
    out = []
    for y in window.regular:
        if ext1_cluster(X, y, field):
            continue
        there, back = hom_cluster(X, y, field), hom_cluster(y, X, field)
        if there and back:
            out.append((y, there, back))
    return out


def check_cdetr(t: int, window: Window, field: Field = GF1009) -> Report:
    _guard(window, 2 * t + 7, f"cdetr t={t}")
    rep = Report("cdetr")
    found = cdetr_search(t, window, field)
    expected = unique_regular_partner(t)
    got = [y for y, _, _ in found]
    want = [] if expected is None else [expected]
    detail = f"found {_fmt(got) if got else 'NONE'}, expected {expected or 'NONE'}"
    rep.add(f"t={t}", got == want, detail)
    for y, a, b in found:
        rep.add(f"t={t} dims {y}", (a, b) == (1, 1), f"hom dims ({a},{b})")
    return rep


# coincide


def _line_position(obj: DerivedObject, k: int) -> int | None:
    """Position on the boundary line through A_1^{(k)}: A_{2j+1}^{(k)} at j, A_{2j}^{(1-k)}[-1] at -j."""
    kind = "A1" if k == 1 else "A0"
    other = "A0" if k == 1 else "A1"
    lab = obj.label
    if obj.shift == 0 and lab.kind == kind and lab.m % 2:
        return (lab.m - 1) // 2
    if obj.shift == -1 and lab.kind == other and lab.m % 2 == 0:
        return -(lab.m // 2)
    return None


def coincide_exception(x: DerivedObject, window: Window) -> set[DerivedObject]:
    """Objects of H+ u H- that are not in H(X) for X = A_l^{(k)}."""
    lab = x.label
    k = 1 if lab.kind == "A1" else 0
    pos = (lab.m - 1) // 2
    out = set()
    for y in window.connecting:
        if y.shift == 0 and y.label.kind == lab.kind and y.label.m % 2 and y.label.m >= lab.m + 4:
            out.add(y)
        p = _line_position(y, k)
        if p is not None and p <= pos - 2:
            out.add(y)
    return out


def check_coincide_object(x: DerivedObject, window: Window, field: Field = GF1009) -> Report:
    rep = Report("coincide")
    x = as_cluster(x)
    t, r = orbit_position(x)
    H = {y for y in forbidden_region(x, window, field) if y.connecting}
    hp, hm = h_plus(x, window), h_minus(x, window)
    target = hp | hm
    if t <= 1:
        target -= coincide_exception(x, window)
        rep.add(f"{x} subset", H <= hp | hm, f"H outside H+uH-: {_fmt(H - (hp | hm))}" if not H <= hp | hm else "")
    missing, extra = target - H, H - target
    ok = not missing and not extra
    detail = "" if ok else f"in H+uH- only: {_fmt(missing)}; in H only: {_fmt(extra)}"
    rep.add(f"{x} t={t} r={r}", ok, detail or f"|H|={len(H)}")
    return rep


def check_coincide(t: int, window: Window, field: Field = GF1009) -> Report:
    """P_t and its tau_C-translates inside the window."""
    _guard(window, 2 * t + 6, f"coincide t={t}")
    rep = Report("coincide")
    members = []
    if t <= 1:
        k = 1 - t
        members = [_obj(A1(l) if k else A0(l)) for l in range(1, window.N - 3, 2)]
        members = [m for m in members if orbit_position(m)[0] == t]
    else:
        for r in (-1, 0, 1):
            x = tau_cluster(_obj(projective_label(t)), -r)
            if x.label.m <= window.N - 4:
                members.append(x)
    for x in members:
        rep.extend(check_coincide_object(x, window, field))
    return rep


# Rok and force bo


def check_rok(window: Window, field: Field = GF1009, require_ext_zero: bool = True) -> Report:
    rep = Report("rok")
    reg = window.regular
    violations = []
    for i, x in enumerate(reg):
        for y in reg[i + 1:]:
            if require_ext_zero and ext1_cluster(x, y, field):
                continue
            if hom_cluster(x, y, field) and hom_cluster(y, x, field):
                violations.append((x, y))
    label = "N=%d" % window.N + ("" if require_ext_zero else " without Ext precondition")
    if require_ext_zero:
        rep.add(label, not violations, f"{len(violations)} violations" + (f", first {violations[0]}" if violations else ""))
    else:
        rep.add(label, bool(violations), f"{len(violations)} both-way pairs")
    return rep


def check_force_bo(window: Window, field: Field = GF1009) -> Report:
    rep = Report("force-bo")
    conn = window.connecting
    violations, pairs = [], 0
    for i, x in enumerate(conn):
        for y in conn[i + 1:]:
            if ext1_cluster(x, y, field):
                continue
            if hom_cluster(x, y, field) and hom_cluster(y, x, field):
                pairs += 1
                if not (_is_boundary_orbit(x) and _is_boundary_orbit(y)):
                    violations.append((x, y))
    detail = f"{pairs} both-way pairs, {len(violations)} violations"
    if violations:
        detail += f", first {violations[0]}"
    rep.add(f"N={window.N}", not violations, detail)
    return rep


def _is_boundary_orbit(x: DerivedObject) -> bool:
    pos = orbit_position(x)
    return pos is not None and pos[0] <= 1


# boundary neighbours of P_t and the forbidden region of A0(t)


def in_t_extra(t: int) -> list[DerivedObject]:
    """tau_C^{(t-3)/2} I_0[-1], tau_C^{(t-3)/2} I_1[-1], A0(t), A1(t)."""
    p = (t - 3) // 2
    out = [tau_cluster(_obj(injective_label(j), -1), p) for j in (0, 1)]
    return out + [_obj(A0(t)), _obj(A1(t))]


def s_partition(t: int, window: Window) -> dict[str, set[DerivedObject]]:
    """The seven sets S1..S7 for odd t, restricted to the window."""
    S = {f"S{i}": set() for i in range(1, 8)}
    for y in window.connecting:
        lab, sh = y.label, y.shift
        n, m = lab.n, lab.m
        if sh == 0:
            if lab.kind in ("A0", "A1") and m % 2 and 1 <= m <= t - 4:
                S["S1"].add(y)
            if lab.kind == "A1" and m == t - 2:
                S["S2"].add(y)
            if lab.kind == "A" and n % 2 and m % 2 and n <= m < t:
                S["S3"].add(y)
            if lab.kind == "B" and n % 2 and m % 2 and m < t:
                S["S4"].add(y)
        else:
            if lab.kind == "A" and n % 2 == 0 and m % 2 == 0 and m <= t:
                S["S5"].add(y)
            if lab.kind == "B" and n % 2 == 0 and m % 2 == 0 and m <= t:
                S["S6"].add(y)
            if lab.kind in ("A0", "A1") and m % 2 == 0 and m <= t:
                S["S7"].add(y)
    return S


def check_in_t(t: int, window: Window, field: Field = GF1009, strict_tiling: bool = False) -> Report:
    """Containment of H(A0(t)) and the S1..S7 bookkeeping, for odd t >= 3."""
    if t < 3 or t % 2 == 0:
        raise ValueError("the statement is checked for odd t >= 3")
    _guard(window, 2 * t + 3, f"in-t t={t}")
    rep = Report("in-t")
    X, V1 = _obj(projective_label(t)), _obj(A0(t))
    Y = unique_regular_partner(t)
    HV, HX, HY = (forbidden_region(o, window, field) for o in (V1, X, Y))
    extra = set(in_t_extra(t))
    outside = HV - HX - HY - extra
    rep.add(f"t={t} containment", not outside, f"extra {_fmt(extra)}" if not outside else f"uncovered {_fmt(outside)}")

    S = s_partition(t, window)
    union = set().union(*S.values())
    overlaps = [(a, b) for a in S for b in S if a < b and S[a] & S[b]]
    rep.add(f"t={t} S disjoint", not overlaps, f"overlapping {overlaps}" if overlaps else "")
    diff = HV - HX
    rep.add(f"t={t} difference in S", diff <= union, "" if diff <= union else f"outside S: {_fmt(diff - union)}")
    backward = h_minus(V1, window) - h_plus(X, window) - h_minus(X, window)
    rep.add(
        f"t={t} S tiles H-(A0) minus H+-(P)",
        backward == union,
        "" if backward == union else f"sym diff {_fmt(backward ^ union)}",
    )
    exact = diff == union
    detail = f"S minus difference: {_fmt(union - diff)}" if not exact else "exact"
    rep.add(f"t={t} S tiles H(A0) minus H(P) literally", exact if strict_tiling else (True if exact else None), detail)
    return rep


# rigid sets


def is_rigid(members, field: Field = GF1009) -> bool:
    ms = list(members)
    return all(ext1_cluster(a, b, field) == 0 for a in ms for b in ms)


def rigid_completion(
    seed,
    window: Window,
    rng_seed: int = 0,
    field: Field = GF1009,
    order: str = "random",
) -> list[DerivedObject]:
    """Greedy completion of a rigid seed to a window-maximal Ext-orthogonal set."""
    members = [as_cluster(s) for s in seed]
    if not is_rigid(members, field):
        raise ValueError("seed is not rigid")
    pool = list(window.objects)
    if order == "random":
        random.Random(rng_seed).shuffle(pool)
    elif order != "sorted":
        raise ValueError(f"unknown order {order!r}")
    for z in pool:
        if z in members:
            continue
        if ext1_cluster(z, z, field):
            continue
        if all(ext1_cluster(z, m, field) == 0 for m in members):
            members.append(z)
    return sorted(members)


def check_no_two_cycles(T, window: Window, field: Field = GF1009, witnesses: bool = True) -> Report:
    rep = Report("no-two-cycles")
    T = sorted(as_cluster(x) for x in T)
    Tset = set(T)
    for x in T:
        loops_ok = hom_cluster(x, x, field) == 1 and ext1_cluster(x, x, field) == 0
        if not loops_ok:
            rep.add(f"{x} loop", False, "End != k or Ext^1 != 0")
    for i, x in enumerate(T):
        for y in T[i + 1:]:
            if not (hom_cluster(x, y, field) and hom_cluster(y, x, field)):
                continue
            inst = f"{x} <-> {y}"
            if not x.connecting and not y.connecting:
                rep.add(inst, False, "(a) both regular")
            elif x.connecting and y.connecting:
                ok = _is_boundary_orbit(x) and _is_boundary_orbit(y)
                rep.add(inst, ok, "(c) both boundary" if ok else "(c) non-boundary member")
            else:
                c, r = (x, y) if x.connecting else (y, x)
                rep.extend(_branch_b(c, r, window, Tset, inst, field, witnesses))
    if not rep.findings:
        rep.add(f"|T|={len(T)}", True, "no both-way pairs")
    return rep


def _branch_b(c, r, window, Tset, inst, field, witnesses) -> Report:
    rep = Report("no-two-cycles")
    ups, vs = boundary_predecessors(c, window), boundary_successors(c, window)
    neighbours = set(ups) | set(vs)
    if neighbours & Tset:
        rep.add(inst, True, f"(b) boundary neighbour in T: {_fmt(neighbours & Tset)}")
    elif neighbours:
        rep.add(inst, False, f"(b) no boundary neighbour in T among {_fmt(neighbours)}")
    else:
        rep.add(inst, None, "(b) boundary neighbours outside window")
    if witnesses:
        w = factorization_witness(c, r, field)
        if w is not None:
            rep.add(inst + " witness", w, "rep-level composite nonzero" if w else "composite vanishes")
    return rep


def factorization_witness(c: DerivedObject, r: DerivedObject, field: Field = GF1009) -> bool | None:
    """Rep-level factorization check where the pair is (P_t, partner) or its tau_C^2 image, t odd."""
    t, pos = orbit_position(c)
    if t < 3 or t % 2 == 0 or r != partner_of(c):
        return None
    if pos == 0:
        return oracle_compose_nonzero(projective_label(t), A0(t), r.label, field)
    if pos == -2:
        return oracle_compose_nonzero(r.label, A1(t + 1), injective_label(t), field)
    return None


def witness_pair(t: int, field: Field = GF1009) -> tuple[bool, bool]:
    """(P_t -> A0(t) -> partner, tau^2 partner -> A1(t+1) -> I_t) both nonzero?"""
    Y = unique_regular_partner(t).label
    first = oracle_compose_nonzero(projective_label(t), A0(t), Y, field)
    second = oracle_compose_nonzero(tau_regular(Y, 2), A1(t + 1), injective_label(t), field)
    return first, second


def forbidden_cover_check(in_T, out_T, window: Window, field: Field = GF1009) -> Report:
    """For each Y_j: is H(Y_j) outside (u H(X_i)) u {Y_1..Y_n}?  Covered means refuted."""
    rep = Report("for-reg")
    in_T = [as_cluster(x) for x in in_T]
    out_T = [as_cluster(y) for y in out_T]
    cover = set(out_T)
    for x in in_T:
        cover |= forbidden_region(x, window, field)
    for y in out_T:
        rest = forbidden_region(y, window, field) - cover
        rep.add(str(y), bool(rest), f"witness outside cover: {min(rest)}" if rest else "H(Y) covered inside window")
    if not out_T:
        rep.add("empty", True, "vacuous")
    return rep


def rigid_suite(count: int, window: Window, seed: int = 0, field: Field = GF1009, start=()) -> tuple[Report, list]:
    rep = Report("no-two-cycles")
    sets = []
    for i in range(count):
        s = seed + i
        T = rigid_completion(start, window, s, field)
        sets.append((s, T))
        sub = check_no_two_cycles(T, window, field)
        for f in sub.findings:
            f.instance = f"seed={s} {f.instance}"
        rep.extend(sub)
    return rep, sets
