"""Enhanced power graphs of finite groups: construction, exact invariants,
closed-form family formulas, and a verification harness."""

__version__ = "0.1.0"

from .epg import LabeledGroupGraph, enhanced_power_graph, graphs_coincide, power_graph
from .errors import (
    BudgetExceededError,
    EpgraphError,
    FormulaInternalError,
    InvalidParameterError,
    SizeLimitError,
    SpecParseError,
    UnsupportedDiameterError,
    UnsupportedFamilyError,
)
from .graphs import SimpleGraph, diameter, edge_connectivity, min_degree
from .groups import (
    CyclicSubgroupSet,
    FiniteGroup,
    GroupSpec,
    all_cyclic_subgroups_prime_power,
    build_group,
    cyclic_subgroups,
    direct_product,
    exponent,
    involution_count,
    make_abelian,
    make_cyclic,
    make_dihedral,
    make_generalized_quaternion,
    make_semidihedral,
    make_u6n,
    parse_spec,
)
from .invariants import (
    NeighborhoodPartition,
    chromatic_number,
    closed_neighborhood_partition,
    find_odd_antihole,
    find_odd_hole,
    independence_number,
    max_clique,
    maximum_matching,
    quotient_graph,
    strong_metric_dimension,
    strong_resolving_oracle,
)
from .formulas import (
    PGroupShape,
    U6nShape,
    covers_from,
    d2n_invariants,
    edge_connectivity_formula,
    indep_abelian,
    indep_abelian_pgroup,
    indep_maximal_count,
    matching_general,
    matching_pgroup,
    mindeg_general,
    sd8n_invariants,
    sdim_abelian_pgroup,
    u6n_invariants,
)
from .report import InvariantReport, MatchingEstimate, VerificationRow

__all__ = [name for name in dir() if not name.startswith("_")]
