"""Exact quiver mutation toolkit.

Core objects: skew-symmetric integer exchange matrices (`Quiver`), mutation,
mutation-class enumeration up to isomorphism with a sound finite/infinite
decision, block decomposability, a catalog of named quivers, and seed
mutation over the integer Laurent ring.
"""

from .quiver import (
    Matrix,
    Quiver,
    QuiverError,
    ValidationError,
    components,
    dumps_edge_list,
    dumps_json,
    from_json_dict,
    full_subquiver,
    is_connected,
    loads_auto,
    loads_edge_list,
    max_multiplicity,
    mutate,
    mutate_rows,
    to_json_dict,
    validate,
)
from .canon import (
    CanonicalForm,
    apply_permutation,
    are_isomorphic,
    canonical_form,
    canonical_matrix,
    fnv1a64,
)
from .mutclass import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    FinitenessVerdict,
    MutationClass,
    apply_sequence,
    attach_vertex,
    check_obstructive,
    contains_subquiver_isomorphic_to,
    decide_mutation_finite,
    enumerate_class,
    extension_vectors,
    find_subquiver_isomorphic_to,
    is_mutation_finite,
    class_to_json_dict,
    one_vertex_extensions,
)
from .catalog import EXCEPTIONAL_NINE, entries, exceptional_nine, labels, make
from .blocks import (
    DEFAULT_NODE_BUDGET,
    KINDS,
    KIND_ORDER,
    BlockSearchBudgetError,
    Placement,
    assemble,
    decompose,
    is_block_decomposable,
    placement_from_dict,
    placement_to_dict,
)
from .seeds import (
    DEFAULT_SEED_CAP,
    LaurentPoly,
    LaurentViolationError,
    Seed,
    SeedCapExceeded,
    apply_seed_sequence,
    enumerate_seeds,
    initial_seed,
    mutate_seed,
    seeds_equal_up_to_relabeling,
)
from .verify import VerificationReport, run_all

__version__ = "0.1.0"

__all__ = [
    "Matrix",
    "Quiver",
    "QuiverError",
    "ValidationError",
    "components",
    "dumps_edge_list",
    "dumps_json",
    "full_subquiver",
    "is_connected",
    "loads_auto",
    "loads_edge_list",
    "from_json_dict",
    "max_multiplicity",
    "mutate",
    "mutate_rows",
    "to_json_dict",
    "validate",
    "CanonicalForm",
    "apply_permutation",
    "are_isomorphic",
    "canonical_form",
    "canonical_matrix",
    "fnv1a64",
    "DEFAULT_BUDGET",
    "BudgetExceededError",
    "FinitenessVerdict",
    "MutationClass",
    "apply_sequence",
    "attach_vertex",
    "check_obstructive",
    "contains_subquiver_isomorphic_to",
    "decide_mutation_finite",
    "enumerate_class",
    "extension_vectors",
    "find_subquiver_isomorphic_to",
    "is_mutation_finite",
    "class_to_json_dict",
    "one_vertex_extensions",
    "EXCEPTIONAL_NINE",
    "entries",
    "exceptional_nine",
    "labels",
    "make",
    "DEFAULT_NODE_BUDGET",
    "KINDS",
    "KIND_ORDER",
    "BlockSearchBudgetError",
    "Placement",
    "assemble",
    "decompose",
    "is_block_decomposable",
    "placement_from_dict",
    "placement_to_dict",
    "DEFAULT_SEED_CAP",
    "LaurentPoly",
    "LaurentViolationError",
    "Seed",
    "SeedCapExceeded",
    "apply_seed_sequence",
    "enumerate_seeds",
    "initial_seed",
    "mutate_seed",
    "seeds_equal_up_to_relabeling",
    "VerificationReport",
    "run_all",
    "__version__",
]
