"""Hereditarily finite sets and set matrices.

Values are immutable and canonical: set elements are deduplicated and
ordered, and a 1x1 matrix is identical to its sole entry. See ``render``
and ``evaluate`` for the text syntax.
"""

from smx._core import (
    DEFAULT_CAP,
    AxiomOutcome,
    AxiomReport,
    CapError,
    ConstructionError,
    CoverageError,
    EvalError,
    FragmentError,
    FunctionalityError,
    GuardError,
    KindError,
    ParseError,
    Shape,
    SmxError,
    UniverseSpec,
    Value,
    cartesian,
    cartesian_n,
    check,
    empty_set,
    evaluate,
    foundation_witness,
    from_json,
    function_space,
    generate_universe,
    member,
    mk_matrix,
    mk_set,
    naturals_upto,
    numeral,
    pair,
    partition_by_shape,
    power_set,
    rebuild_with_leaves,
    render,
    render_shape,
    run_axiom_suite,
    set_of_matrices,
    shape_leaves,
    shape_of,
    subset,
    successor,
    to_json,
    tuple_of,
    union2,
    union_family,
)

__all__ = [
    "DEFAULT_CAP",
    "AxiomOutcome",
    "AxiomReport",
    "CapError",
    "ConstructionError",
    "CoverageError",
    "EvalError",
    "FragmentError",
    "FunctionalityError",
    "GuardError",
    "KindError",
    "ParseError",
    "Shape",
    "SmxError",
    "UniverseSpec",
    "Value",
    "cartesian",
    "cartesian_n",
    "check",
    "empty_set",
    "evaluate",
    "foundation_witness",
    "from_json",
    "function_space",
    "generate_universe",
    "member",
    "mk_matrix",
    "mk_set",
    "naturals_upto",
    "numeral",
    "pair",
    "partition_by_shape",
    "power_set",
    "rebuild_with_leaves",
    "render",
    "render_shape",
    "run_axiom_suite",
    "set_of_matrices",
    "shape_leaves",
    "shape_of",
    "subset",
    "successor",
    "to_json",
    "tuple_of",
    "union2",
    "union_family",
]
