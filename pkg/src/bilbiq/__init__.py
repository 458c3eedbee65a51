"""Finite bilinear biquandles: construction, verification, search, and
link coloring invariants."""

from .bilinear import (
    BilinearSpec,
    brute_force_search,
    build_bilinear,
    candidate_entries,
    format_spec,
    is_symplectic,
    parse_spec,
    search,
)
from .biquandle import (
    AxiomReport,
    AxiomViolation,
    FiniteBiquandle,
    alexander_biquandle,
    block_matrix_decode,
    block_matrix_encode,
    check_axioms,
    is_quandle,
    make_biquandle,
    omega,
    symplectic_quandle,
)
from .errors import (
    BilbiqError,
    CapacityExceeded,
    DimensionMismatch,
    IndexOutOfRange,
    InvariantViolation,
    NotAntisymmetric,
    NotInvertible,
    ParseError,
    ShapeError,
    SignMismatch,
    UnknownLink,
    UnmatchedCrossing,
)
from .gauss import (
    BUILTIN_CODES,
    Crossing,
    CrossingRelation,
    GaussToken,
    LinkDiagram,
    builtin_link,
    crossing_relations,
    parse_gauss,
    print_gauss,
)
from .invariant import (
    BBPolynomial,
    counting_invariant,
    enumerate_colorings,
    phi_bb,
    phi_specialize,
    phi_to_string,
    subbiquandle_closure,
)
from .modular import (
    bilinear_eval,
    enumerate_module,
    inv_scalar,
    submodule_span,
    units,
    vec_add,
    vec_scale,
)

__version__ = "0.1.0"
