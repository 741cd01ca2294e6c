"""Algebraic analysis of multiplex, signed, and two-mode social networks.

Boolean tie matrices compose into string semigroups; dyad bundles classify
and census pairwise tie patterns; congruences and compatible quasi-orders
decompose the resulting tables; signed matrices evaluate balance over
valence semirings; and formal contexts yield concept lattices with filters
and ideals. The relalg command line fronts all of it.
"""

from .bundles import (
    BundleCensus,
    BundleStatistics,
    CLASSES,
    STRONG,
    WEAK,
    bundle_census,
    census_from_counts,
    classify_dyad,
    cohesion_reciprocity,
    pair_lists,
    relational_system,
)
from .decomp import (
    Congruence,
    PiLattice,
    PiRelation,
    Reduction,
    decompose,
    factorize,
    find_congruences,
    is_congruence,
)
from .dot import DotDocument, bipartite_dot, cayley_dot, hasse_dot, multigraph_dot
from .errors import (
    ClosureTooLargeError,
    ComputationError,
    DimensionError,
    NonConvergenceError,
    RelalgError,
    UndefinedStatisticError,
    ValidationError,
)
from .fca import (
    Concept,
    ConceptOrder,
    Concepts,
    FormalContext,
    concept_order,
    concepts,
    derive,
    extent,
    filter_ideal,
)
from .netcore import (
    MultiplexNetwork,
    RelationMatrix,
    components,
    compose,
    network_from_dict,
    network_to_dict,
    permutation_order,
    permute,
    remove_isolates,
    select_subnetwork,
    transpose,
)
from .positional import (
    PositionalSystem,
    RelationBox,
    build_relation_box,
    cumulated_hierarchy,
    person_hierarchy,
    reduce_network,
)
from .semigroup import (
    Poset,
    Semigroup,
    StringSet,
    build_semigroup,
    equations,
    generate_strings,
    semigroup_from_dict,
    string_partial_order,
    transitive_closure,
)
from .signed import (
    BALANCE,
    BalanceVerdict,
    CLUSTER,
    SemiringSpec,
    SignedMatrix,
    balance_closure,
    is_balanced,
    make_signed,
    semiring_powers,
    symmetric_closure,
    verify_semiring,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
