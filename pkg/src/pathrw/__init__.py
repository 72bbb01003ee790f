"""Paths in finitely presented spaces: terms, rewriting, loop groups.

The package models a space as points, named generator paths, and named
relations between composite paths. Path terms are compared by a rewriting
engine with per-space canonical forms; basepoint loops translate to and
from concrete group elements; an exhaustive search oracle double-checks
the engine from the outside.
"""

from __future__ import annotations

from .errors import (
    EndpointMismatchError,
    GroupTagMismatchError,
    NotABasepointLoopError,
    NotALoopError,
    ParseError,
    PathError,
    SpaceMapError,
    SpaceMismatchError,
    StepNotEnabledError,
    UnknownGeneratorError,
    UnknownPointError,
    UnknownSpaceError,
    UnreachableEndpointsError,
)
from .groupoid import PathClass, class_of, comp, identity, inv, zpow_class
from .oracle import (
    Budget,
    Lcg,
    OracleVerdict,
    bfs_rw_eq,
    enumerate_loops,
    enumerate_terms,
    explore_class,
    local_confluence_probe,
    random_term,
)
from .pi1 import (
    GroupValue,
    decode,
    encode,
    group_identity,
    group_inv,
    group_mul,
    homomorphism_check,
    parse_group_value,
    render_group_value,
)
from .rewrite import (
    NormalForm,
    RewriteStep,
    RuleId,
    Word,
    apply_step,
    format_step,
    free_normalize,
    normalize,
    redexes,
    relation_bwd,
    relation_fwd,
    rw_eq,
    term_of_word,
    trace,
)
from .spaces import (
    BUILTIN_NAMES,
    Generator,
    GroupTag,
    Relation,
    SpacePresentation,
    builtin,
    parse_space_file,
    parse_space_text,
    validate,
)
from .syntax import parse_path, render_path, render_word
from .terms import (
    Gen,
    PathExpr,
    Refl,
    SpaceMap,
    Symm,
    Trans,
    endpoints,
    map_path,
    size,
    zpow,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_NAMES",
    "Budget",
    "EndpointMismatchError",
    "Gen",
    "Generator",
    "GroupTag",
    "GroupTagMismatchError",
    "GroupValue",
    "Lcg",
    "NormalForm",
    "NotABasepointLoopError",
    "NotALoopError",
    "OracleVerdict",
    "ParseError",
    "PathClass",
    "PathError",
    "PathExpr",
    "Refl",
    "Relation",
    "RewriteStep",
    "RuleId",
    "SpaceMap",
    "SpaceMapError",
    "SpaceMismatchError",
    "SpacePresentation",
    "StepNotEnabledError",
    "Symm",
    "Trans",
    "UnknownGeneratorError",
    "UnknownPointError",
    "UnknownSpaceError",
    "UnreachableEndpointsError",
    "Word",
    "apply_step",
    "bfs_rw_eq",
    "builtin",
    "class_of",
    "comp",
    "decode",
    "encode",
    "endpoints",
    "enumerate_loops",
    "enumerate_terms",
    "explore_class",
    "format_step",
    "free_normalize",
    "group_identity",
    "group_inv",
    "group_mul",
    "homomorphism_check",
    "identity",
    "inv",
    "local_confluence_probe",
    "map_path",
    "normalize",
    "parse_group_value",
    "parse_path",
    "parse_space_file",
    "parse_space_text",
    "random_term",
    "redexes",
    "relation_bwd",
    "relation_fwd",
    "render_group_value",
    "render_path",
    "render_word",
    "rw_eq",
    "size",
    "term_of_word",
    "trace",
    "validate",
    "zpow",
    "zpow_class",
]
