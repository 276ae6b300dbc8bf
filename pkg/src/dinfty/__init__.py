"""Representations of the zigzag D-infinity quiver and its cluster category."""

from __future__ import annotations

from .arquiver import (
    Window,
    WindowUnderflow,
    boundary_predecessors,
    boundary_successors,
    h_minus,
    h_plus,
    sectional_successors,
)
from .catalog import ARSequence, catalog, tau_rep, tau_rep_inv
from .cluster import (
    Report,
    check_cdetr,
    check_coincide,
    check_force_bo,
    check_in_t,
    check_no_two_cycles,
    check_rok,
    forbidden_region,
    rigid_completion,
    unique_regular_partner,
)
from .fields import GF1009, GF65521, QQ, Field
from .hom import ext, ext1_cluster, ext1_rep, hom, hom_cluster, hom_derived, hom_rep
from .labels import (
    A,
    A0,
    A1,
    B,
    Component,
    Label,
    LabelError,
    LabelParseError,
    classify_component,
    dim_vector,
    injective_label,
    parse_label,
    projective_label,
)
from .objects import DerivedObject, parse_cluster, parse_derived, tau_cluster, tau_derived
from .oracle import hom_solve, oracle_ext, oracle_hom, validate_ar_sequence

__all__ = [
    "A",
    "A0",
    "A1",
    "ARSequence",
    "B",
    "boundary_predecessors",
    "boundary_successors",
    "catalog",
    "check_cdetr",
    "check_coincide",
    "check_force_bo",
    "check_in_t",
    "check_no_two_cycles",
    "check_rok",
    "classify_component",
    "Component",
    "DerivedObject",
    "dim_vector",
    "ext",
    "ext1_cluster",
    "ext1_rep",
    "Field",
    "forbidden_region",
    "GF1009",
    "GF65521",
    "h_minus",
    "h_plus",
    "hom",
    "hom_cluster",
    "hom_derived",
    "hom_rep",
    "hom_solve",
    "injective_label",
    "Label",
    "LabelError",
    "LabelParseError",
    "oracle_ext",
    "oracle_hom",
    "parse_cluster",
    "parse_derived",
    "parse_label",
    "projective_label",
    "QQ",
    "Report",
    "rigid_completion",
    "sectional_successors",
    "tau_cluster",
    "tau_derived",
    "tau_rep",
    "tau_rep_inv",
    "unique_regular_partner",
    "validate_ar_sequence",
    "Window",
    "WindowUnderflow",
]
