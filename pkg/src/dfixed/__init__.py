"""Exact toolkit for d-fixed monomial ideals: construction by closed
product formulas, socles, Castelnuovo-Mumford regularity, and the
brute-force oracles (closure fixpoint, degreewise socle enumeration,
Koszul Betti numbers) that verify them."""

from .betti import (
    BettiTable,
    CROSSCHECK_PRIME,
    DEFAULT_PRIME,
    betti_table,
    extremal_from_betti,
    format_betti_table,
    koszul_boundary,
    rank_exact,
    rank_mod_p,
    reg_from_betti,
)
from .dseq import (
    DSequence,
    all_representations,
    compose,
    decompose,
    leq_d,
    split,
    sub_values,
    validate,
)
from .ideals import (
    Monomial,
    MonomialIdeal,
    compositions,
    format_monomial,
    ideal_degree,
    member,
    minimalize,
    parse_generator_lines,
    parse_monomial,
    prefix_frobenius,
    variable,
)
from .principal import (
    PrincipalInput,
    SequentialChain,
    closure,
    is_borel_type,
    is_dfixed,
    is_stable,
    min_stable_truncation,
    principal_ideal,
    sequential_chain,
)
from .regularity import (
    Corner,
    RegularityReport,
    corners,
    reg_bound,
    reg_formula,
    reg_report_formula,
    reg_sequential,
    reg_stability,
)
from .socle import (
    IndexPair,
    SocleComponent,
    SocleReport,
    component_degree,
    component_ideal,
    enumerate_pairs,
    socle_containment_check,
    socle_direct,
    socle_ideal_general,
    socle_ideal_single,
    socle_max_degree,
    socle_report,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
