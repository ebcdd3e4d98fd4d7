"""Vexillary signed permutations: triples, diagrams, patterns, labelled Young diagrams, transitions."""

from .core import (
    Reflection,
    SignedPermutation,
    WindowPermutation,
    bruhat_leq,
    embed,
    enumerate_group,
    sp_compose,
    sp_descents,
    sp_from_oneline,
    sp_identity,
    sp_inverse,
    sp_length,
    sp_longest,
)
from .diagrams import BasicTriple, Box, render_ascii, sp_essential_set, sp_extended_diagram, sp_rank
from .errors import (
    BudgetExceededError,
    CapExceededError,
    InconsistentVerdictError,
    InvalidDiagramError,
    InvalidPermutationError,
    InvalidTripleError,
    NotInsertableError,
    NotRemovableError,
    NotVexillaryError,
    TransitionCountError,
    VexkitError,
)
from .lyd import (
    LabelledYoungDiagram,
    insert_label,
    insertable_labels,
    lyd_of_perm,
    lyd_to_perm,
    remove_label,
    removable_labels,
    render_lyd,
    verify_removal_theorem,
)
from .transitions import SchurPExpansion, max_grassmannian, stanley_h, transitions
from .triples import StrictPartition, Triple, perm_to_triple, triple_lambda, triple_to_perm, triple_validate
from .vexillary import count_vexillary, egge_count, is_vexillary, vn_formula

__version__ = "0.1.0"
