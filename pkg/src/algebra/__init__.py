"""Exact module arithmetic over Z and Z/m and the purity predicates built on it"""

from .errors import (
    BudgetExceededError,
    ContainmentError,
    InfiniteModuleError,
    ParentMismatchError,
    PolicyError,
    PreconditionError,
    ProblemFormatError,
    PurityError,
    RankMismatchError,
    RingMismatchError,
    UnknownClaimError,
)
from .lattice import (
    ExactMatrix,
    LatticeBasis,
    hnf,
    lattice_contains,
    lattice_coordinates,
    lattice_intersect,
    lattice_sum,
    snf,
    span,
)
from .rings import (
    DEFAULT_BOUND,
    Ideal,
    PolicyMode,
    QuantificationPolicy,
    Ring,
    ideal_product,
    is_proper,
    proper_ideals,
)
from .modules import (
    ELEMENT_BUDGET,
    ModuleElement,
    ModulePresentation,
    Submodule,
    annihilator,
    as_module,
    cardinality,
    colon_ideal,
    elements,
    exponent,
    localize,
    quotient,
    quotient_submodule,
    restrict,
    scale_by_ideal,
    submodule_intersect,
    submodule_product,
    submodule_span,
    submodule_sum,
    whole_module,
    zero_submodule,
)
from .verdict import Outcome, Verdict
from .enumeration import enumerate_submodules, parse_family
from .purity import (
    PurityLevel,
    check_colon_transfer,
    check_pid_factorization,
    check_product_characterization,
    check_wsas_identity,
    default_policy,
    is_fully_cancellation,
    is_fully_n_pure,
    is_multiplication_module,
    is_n_pure,
    is_n_pure_ideal,
    is_pure,
    is_ribenboim_pure,
    is_weakly_strongly_2_absorbing_second,
    maximal_n_pure_within,
    maximal_pure_submodules,
)
from .oracle import ElementSet, OracleModule, oracle_intersect, oracle_is_n_pure, oracle_scale, oracle_sum
from .scans import CLAIMS, ScanLimits, ScanReport, conjecture_scan, witness_mine

__all__ = [
    'PurityError', 'RankMismatchError', 'RingMismatchError', 'ParentMismatchError',
    'ContainmentError', 'InfiniteModuleError', 'BudgetExceededError', 'PolicyError',
    'PreconditionError', 'ProblemFormatError', 'UnknownClaimError',
    'ExactMatrix', 'LatticeBasis', 'hnf', 'snf', 'span', 'lattice_sum',
    'lattice_intersect', 'lattice_contains', 'lattice_coordinates',
    'DEFAULT_BOUND', 'Ring', 'Ideal', 'PolicyMode', 'QuantificationPolicy',
    'ideal_product', 'is_proper', 'proper_ideals',
    'ELEMENT_BUDGET', 'ModulePresentation', 'Submodule', 'ModuleElement',
    'submodule_span', 'zero_submodule', 'whole_module', 'scale_by_ideal',
    'submodule_intersect', 'submodule_sum', 'colon_ideal', 'annihilator',
    'exponent', 'cardinality', 'localize', 'submodule_product', 'elements',
    'quotient', 'quotient_submodule', 'as_module', 'restrict',
    'Outcome', 'Verdict', 'PurityLevel', 'default_policy',
    'is_pure', 'is_ribenboim_pure', 'is_n_pure', 'is_n_pure_ideal', 'is_fully_n_pure',
    'is_multiplication_module', 'is_fully_cancellation',
    'is_weakly_strongly_2_absorbing_second', 'check_wsas_identity',
    'check_pid_factorization', 'maximal_pure_submodules', 'maximal_n_pure_within',
    'check_product_characterization', 'check_colon_transfer',
    'enumerate_submodules', 'parse_family',
    'ElementSet', 'OracleModule', 'oracle_scale', 'oracle_intersect', 'oracle_sum',
    'oracle_is_n_pure',
    'CLAIMS', 'ScanLimits', 'ScanReport', 'conjecture_scan', 'witness_mine',
]
