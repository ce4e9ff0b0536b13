"""
Purity predicates

Every predicate returns a :class:`Verdict`. A failing verdict names the
ideals, ring elements or submodules that break the defining identity, so it
can be replayed independently.
"""
from dataclasses import dataclass
from functools import reduce
from itertools import combinations_with_replacement
from math import gcd
from typing import List, Optional, Sequence, Tuple

from sympy import isprime

from .enumeration import enumerate_submodules
from .errors import ContainmentError, InfiniteModuleError, PolicyError, PreconditionError
from .modules import (
    ELEMENT_BUDGET,
    ModulePresentation,
    Submodule,
    annihilator,
    colon_ideal,
    intersect_all,
    is_submodule_of,
    scale_by_element,
    scale_by_ideal,
    submodule_intersect,
    submodule_product,
    submodule_product_all,
    submodule_span,
    whole_module,
    zero_submodule,
)
from .rings import (
    DEFAULT_BOUND,
    Ideal,
    PolicyMode,
    QuantificationPolicy,
    check_policy,
    check_residue_exponent,
    ideal_product,
    nonzero_ideals,
    proper_ideals,
    ring_elements,
)
from .verdict import Outcome, Verdict


@dataclass(frozen=True)
class PurityLevel:
    """n = 1 is Anderson-Fuller purity, n >= 2 is n-purity"""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"Purity level must be at least 1, got {self.n}")

    def __str__(self) -> str:
        return "pure" if self.n == 1 else f"{self.n}-pure"


def default_policy(module: ModulePresentation) -> QuantificationPolicy:
    """Exhaustive over Z/m, residues mod the exponent for finite Z-modules, else bounded"""
    if module.ring.is_modular:
        return QuantificationPolicy.exhaustive()
    if module.is_finite:
        return QuantificationPolicy.residue(module.exponent())
    return QuantificationPolicy.bounded(DEFAULT_BOUND)


def resolve_policy(module: ModulePresentation,
                   policy: Optional[QuantificationPolicy]) -> QuantificationPolicy:
    """
    The given policy, or the module's default, checked against the module.

    Raises:
        PolicyError: If the policy does not fit the ring, or a residue policy
            does not cover the module's exponent
    """
    policy = policy or default_policy(module)
    check_policy(module.ring, policy)
    check_residue_exponent(policy, module.exponent() if module.is_finite else None)
    return policy


def _level(level) -> PurityLevel:
    return level if isinstance(level, PurityLevel) else PurityLevel(int(level))


def _check_member(submodule: Submodule, module: ModulePresentation) -> None:
    if submodule.parent != module:
        raise ContainmentError(f"{submodule} is not a submodule of {module}")


def _no_witness(policy: QuantificationPolicy, **detail) -> Verdict:
    if policy.is_decisive:
        return Verdict.holds(**detail)
    return Verdict.unknown(policy.bound)


def _product(ideals: Sequence[Ideal]) -> Ideal:
    return reduce(ideal_product, ideals)


def acting_ideals(module: ModulePresentation, policy: QuantificationPolicy) -> List[Ideal]:
    """
    Proper ideals of the policy, one per distinct action on the module.

    Under a residue policy rZ acts on a module of exponent e exactly as
    gcd(r, e)Z, so only the first representative of each gcd is kept.
    """
    ideals = proper_ideals(module.ring, policy)
    if policy.mode is not PolicyMode.RESIDUE:
        return ideals
    seen = set()
    distinct = []
    for ideal in ideals:
        key = gcd(ideal.generator, policy.exponent)
        if key not in seen:
            seen.add(key)
            distinct.append(ideal)
    return distinct


def is_pure(submodule: Submodule, module: ModulePresentation,
            policy: Optional[QuantificationPolicy] = None) -> Verdict:
    """
    Anderson-Fuller purity: IN = N ∩ IM for every ideal I.

    The unit ideal satisfies the identity trivially and is skipped.
    """
    _check_member(submodule, module)
    policy = resolve_policy(module, policy)
    whole = whole_module(module)
    for ideal in acting_ideals(module, policy):
        lhs = scale_by_ideal(ideal, submodule)
        rhs = submodule_intersect(submodule, scale_by_ideal(ideal, whole))
        if lhs != rhs:
            return Verdict.fails(ideals=(ideal,), lhs=lhs, rhs=rhs)
    return _no_witness(policy)


def is_ribenboim_pure(submodule: Submodule, module: ModulePresentation,
                      policy: Optional[QuantificationPolicy] = None) -> Verdict:
    """Ribenboim purity: rM ∩ N = rN for every ring element r"""
    _check_member(submodule, module)
    policy = resolve_policy(module, policy)
    whole = whole_module(module)
    for r in ring_elements(module.ring, policy):
        lhs = submodule_intersect(scale_by_element(r, whole), submodule)
        rhs = scale_by_element(r, submodule)
        if lhs != rhs:
            return Verdict.fails(element=r, lhs=lhs, rhs=rhs)
    return _no_witness(policy)


def ideal_tuples(ideals: Sequence[Ideal], n: int):
    """Sorted multisets of size n; the identities are symmetric in the ideals"""
    return combinations_with_replacement(ideals, n)


def is_n_pure(submodule: Submodule, module: ModulePresentation, level=2,
              policy: Optional[QuantificationPolicy] = None) -> Verdict:
    """
    n-purity: I1...In N = I1N ∩ ... ∩ InN ∩ (I1...In)M for all proper ideals.

    Level 1 dispatches to :func:`is_pure`.
    """
    level = _level(level)
    if level.n == 1:
        return is_pure(submodule, module, policy)
    _check_member(submodule, module)
    policy = resolve_policy(module, policy)
    whole = whole_module(module)
    for ideals in ideal_tuples(acting_ideals(module, policy), level.n):
        product = _product(ideals)
        lhs = scale_by_ideal(product, submodule)
        sides = [scale_by_ideal(ideal, submodule) for ideal in ideals]
        sides.append(scale_by_ideal(product, whole))
        rhs = intersect_all(sides)
        if lhs != rhs:
            return Verdict.fails(ideals=ideals, lhs=lhs, rhs=rhs)
    return _no_witness(policy)


def is_n_pure_ideal(ideal: Ideal, level=2,
                    policy: Optional[QuantificationPolicy] = None) -> Verdict:
    """An ideal is n-pure when it is n-pure as a submodule of the ring"""
    ring_module = ModulePresentation.ring_as_module(ideal.ring)
    submodule = submodule_span(ring_module, [[ideal.generator]])
    return is_n_pure(submodule, ring_module, level, policy)


def check_intersection_identity(submodule: Submodule, level=2,
                                policy: Optional[QuantificationPolicy] = None) -> Verdict:
    """I1...In N = I1N ∩ ... ∩ InN for all proper ideals (a sufficient condition for n-purity)"""
    level = _level(level)
    module = submodule.parent
    policy = resolve_policy(module, policy)
    for ideals in ideal_tuples(acting_ideals(module, policy), level.n):
        lhs = scale_by_ideal(_product(ideals), submodule)
        rhs = intersect_all([scale_by_ideal(ideal, submodule) for ideal in ideals])
        if lhs != rhs:
            return Verdict.fails(ideals=ideals, lhs=lhs, rhs=rhs)
    return _no_witness(policy)


def _finish(unknown_bound: Optional[int], policy: QuantificationPolicy) -> Verdict:
    if unknown_bound is not None:
        return Verdict.unknown(unknown_bound)
    return _no_witness(policy)


def is_fully_n_pure(module: ModulePresentation, level=2,
                    policy: Optional[QuantificationPolicy] = None,
                    budget: int = ELEMENT_BUDGET) -> Verdict:
    """Every submodule is n-pure"""
    policy = resolve_policy(module, policy)
    unknown_bound = None
    for submodule in enumerate_submodules(module, budget):
        verdict = is_n_pure(submodule, module, level, policy)
        if verdict.failed:
            return Verdict.fails(submodule=submodule, **verdict.witness)
        if verdict.outcome is Outcome.UNKNOWN:
            unknown_bound = verdict.bound
    return _finish(unknown_bound, policy)


def is_multiplication_module(module: ModulePresentation,
                             policy: Optional[QuantificationPolicy] = None,
                             budget: int = ELEMENT_BUDGET) -> Verdict:
    """
    N = (N :_R M)M for every submodule N.

    Cyclic modules are multiplication modules and are accepted without
    enumeration; anything else must be finite.
    """
    if module.is_cyclic():
        return Verdict.holds(reason="cyclic")
    whole = whole_module(module)
    for submodule in enumerate_submodules(module, budget):
        image = scale_by_ideal(colon_ideal(submodule, module), whole)
        if image != submodule:
            return Verdict.fails(submodule=submodule, colon=colon_ideal(submodule, module), image=image)
    return Verdict.holds()


def is_fully_cancellation(module: ModulePresentation,
                          policy: Optional[QuantificationPolicy] = None,
                          budget: int = ELEMENT_BUDGET) -> Verdict:
    """IN1 = IN2 implies N1 = N2 for every nonzero ideal I"""
    policy = resolve_policy(module, policy)
    submodules = enumerate_submodules(module, budget)
    for ideal in nonzero_ideals(module.ring, policy):
        images = {}
        for submodule in submodules:
            image = scale_by_ideal(ideal, submodule)
            if image in images:
                return Verdict.fails(ideals=(ideal,), first=images[image], second=submodule)
            images[image] = submodule
    return _no_witness(policy)


def _finite_ring_module(module: ModulePresentation) -> int:
    if not module.ring.is_modular:
        raise PolicyError(f"Element-wise quantification needs a ring Z/m, not {module.ring}")
    return module.ring.modulus


def _element_pairs(m: int):
    for a in range(m):
        for b in range(a, m):
            yield a, b


def is_weakly_strongly_2_absorbing_second(submodule: Submodule, module: ModulePresentation,
                                          budget: int = ELEMENT_BUDGET) -> Verdict:
    """
    Nonzero N such that abM ⊄ K and abN ⊆ K imply aN ⊆ K or bN ⊆ K or
    ab ∈ Ann_R(N), for all a, b in the ring and all submodules K.
    """
    _check_member(submodule, module)
    m = _finite_ring_module(module)
    zero = zero_submodule(module)
    if submodule == zero:
        raise PreconditionError("Weakly strongly 2-absorbing second submodules are nonzero")
    whole = whole_module(module)
    submodules = enumerate_submodules(module, budget)
    for a, b in _element_pairs(m):
        ab_n = scale_by_element(a * b, submodule)
        if ab_n == zero:
            continue
        ab_m = scale_by_element(a * b, whole)
        a_n = scale_by_element(a, submodule)
        b_n = scale_by_element(b, submodule)
        for candidate in submodules:
            if is_submodule_of(ab_m, candidate) or not is_submodule_of(ab_n, candidate):
                continue
            if is_submodule_of(a_n, candidate) or is_submodule_of(b_n, candidate):
                continue
            return Verdict.fails(elements=(a, b), submodule=candidate)
    return Verdict.holds()


def check_wsas_identity(submodule: Submodule, module: ModulePresentation,
                        budget: int = ELEMENT_BUDGET) -> Verdict:
    """
    abN = aN ∩ bN ∩ abM for every ab outside Ann_R(N).

    Raises:
        PreconditionError: If N is not weakly strongly 2-absorbing second
    """
    premise = is_weakly_strongly_2_absorbing_second(submodule, module, budget)
    if not premise.held:
        raise PreconditionError(f"{submodule} is not weakly strongly 2-absorbing second")
    m = module.ring.modulus
    zero = zero_submodule(module)
    whole = whole_module(module)
    for a, b in _element_pairs(m):
        lhs = scale_by_element(a * b, submodule)
        if lhs == zero:
            continue
        rhs = intersect_all([scale_by_element(a, submodule), scale_by_element(b, submodule),
                             scale_by_element(a * b, whole)])
        if lhs != rhs:
            return Verdict.fails(elements=(a, b), lhs=lhs, rhs=rhs)
    return Verdict.holds()


def check_pid_factorization(submodule: Submodule,
                            prime_powers: Sequence[Tuple[int, int]]) -> Verdict:
    """
    p1^s1 ... pt^st N = p1^s1 N ∩ ... ∩ pt^st N for distinct primes.

    Raises:
        PreconditionError: On repeated or non-prime bases, or exponents below 1
    """
    if not prime_powers:
        raise PreconditionError("At least one prime power is needed")
    primes = [p for p, _ in prime_powers]
    if len(set(primes)) != len(primes):
        raise PreconditionError(f"Repeated primes in {list(prime_powers)}")
    for p, s in prime_powers:
        if not isprime(p) or s < 1:
            raise PreconditionError(f"({p}, {s}) is not a prime power with exponent >= 1")
    total = 1
    for p, s in prime_powers:
        total *= p ** s
    lhs = scale_by_element(total, submodule)
    rhs = intersect_all([scale_by_element(p ** s, submodule) for p, s in prime_powers])
    if lhs != rhs:
        return Verdict.fails(prime_powers=tuple(prime_powers), lhs=lhs, rhs=rhs)
    return Verdict.holds()


def pure_submodules(module: ModulePresentation, level=1,
                    policy: Optional[QuantificationPolicy] = None,
                    budget: int = ELEMENT_BUDGET) -> List[Submodule]:
    """Submodules whose purity verdict at ``level`` is Holds"""
    policy = resolve_policy(module, policy)
    if not policy.is_decisive:
        raise PolicyError("Listing pure submodules needs a decisive policy")
    return [sub for sub in enumerate_submodules(module, budget)
            if is_n_pure(sub, module, level, policy).held]


def maximal_pure_submodules(bound: Submodule, module: ModulePresentation, strict: bool = True,
                            policy: Optional[QuantificationPolicy] = None,
                            budget: int = ELEMENT_BUDGET) -> List[Submodule]:
    """
    Pure N inside K with no pure H satisfying N ⊂ H ⊂ K.

    With ``strict`` (the default) N = K itself is excluded unless K = 0.
    """
    _check_member(bound, module)
    if not module.is_finite:
        raise InfiniteModuleError(f"{module} is infinite")
    inside = [sub for sub in pure_submodules(module, 1, policy, budget) if is_submodule_of(sub, bound)]
    between = [sub for sub in inside if sub != bound]
    candidates = between if strict and bound != zero_submodule(module) else inside
    return [
        sub for sub in candidates
        if not any(other != sub and is_submodule_of(sub, other) for other in between)
    ]


def maximal_n_pure_within(bound: Submodule, module: ModulePresentation, level=2,
                          policy: Optional[QuantificationPolicy] = None,
                          budget: int = ELEMENT_BUDGET) -> Submodule:
    """
    An n-pure K ⊆ N such that no n-pure K' has K ⊂ K' ⊆ N.

    Among several maximal candidates the one with the lexicographically
    least canonical basis is returned. The zero submodule is always n-pure,
    so a result exists.
    """
    _check_member(bound, module)
    if not module.is_finite:
        raise InfiniteModuleError(f"{module} is infinite")
    inside = [sub for sub in pure_submodules(module, level, policy, budget) if is_submodule_of(sub, bound)]
    maximal = [
        sub for sub in inside
        if not any(other != sub and is_submodule_of(sub, other) for other in inside)
    ]
    return min(maximal, key=Submodule.sort_key)


def _product_factors(module: ModulePresentation, policy: QuantificationPolicy,
                     unrestricted: bool, budget: int) -> List[Submodule]:
    if unrestricted:
        return enumerate_submodules(module, budget)
    whole = whole_module(module)
    factors = []
    for ideal in acting_ideals(module, policy):
        image = scale_by_ideal(ideal, whole)
        if image not in factors:
            factors.append(image)
    return factors


def product_identity(module: ModulePresentation, level=2,
                     policy: Optional[QuantificationPolicy] = None,
                     unrestricted: bool = False, budget: int = ELEMENT_BUDGET) -> Verdict:
    """
    N0 N1...Nn = N0N1 ∩ ... ∩ N0Nn ∩ (N1...Nn) over submodule tuples.

    N0 runs over all submodules; N1..Nn over the submodules IM for proper
    ideals I, or over all submodules when ``unrestricted``.
    """
    level = _level(level)
    if level.n < 2:
        raise PreconditionError("The product identity starts at level 2")
    policy = resolve_policy(module, policy)
    factors = _product_factors(module, policy, unrestricted, budget)
    for first in enumerate_submodules(module, budget):
        for rest in combinations_with_replacement(factors, level.n):
            lhs = submodule_product_all((first,) + rest)
            sides = [submodule_product(first, other) for other in rest]
            sides.append(submodule_product_all(rest))
            rhs = intersect_all(sides)
            if lhs != rhs:
                return Verdict.fails(submodules=(first,) + rest, lhs=lhs, rhs=rhs)
    return Verdict.holds()


def check_product_characterization(module: ModulePresentation, level=2,
                                   policy: Optional[QuantificationPolicy] = None,
                                   unrestricted: bool = False,
                                   budget: int = ELEMENT_BUDGET) -> Verdict:
    """
    For a multiplication module: the product identity holds iff the module
    is fully n-pure. Both sides are evaluated and compared.

    Raises:
        PreconditionError: If the module is not a multiplication module
    """
    if not module.is_finite:
        raise InfiniteModuleError(f"{module} is infinite")
    if not is_multiplication_module(module, budget=budget).held:
        raise PreconditionError(f"{module} is not a multiplication module")
    identity = product_identity(module, level, policy, unrestricted, budget)
    fully = is_fully_n_pure(module, level, policy, budget)
    if identity.held == fully.held:
        return Verdict.holds(identity=identity.outcome, fully_n_pure=fully.outcome)
    return Verdict.fails(identity=identity, fully_n_pure=fully)


def is_faithful(module: ModulePresentation) -> bool:
    return annihilator(whole_module(module)).is_zero


def check_colon_transfer(submodule: Submodule, module: ModulePresentation, level=2,
                         policy: Optional[QuantificationPolicy] = None,
                         budget: int = ELEMENT_BUDGET) -> Verdict:
    """
    N is n-pure in M iff (N :_R M) is an n-pure ideal, for a faithful
    multiplication module M. Holds when the two verdicts agree.

    Raises:
        PreconditionError: If M is not faithful or not a multiplication module
    """
    _check_member(submodule, module)
    if not is_faithful(module):
        raise PreconditionError(f"{module} is not faithful")
    if not is_multiplication_module(module, budget=budget).held:
        raise PreconditionError(f"{module} is not a multiplication module")
    policy = resolve_policy(module, policy)
    colon = colon_ideal(submodule, module)
    module_verdict = is_n_pure(submodule, module, level, policy)
    ideal_verdict = is_n_pure_ideal(colon, level, policy)
    if module_verdict.outcome is ideal_verdict.outcome:
        return Verdict.holds(outcome=module_verdict.outcome, colon=colon,
                             submodule_verdict=module_verdict, ideal_verdict=ideal_verdict)
    return Verdict.fails(colon=colon, submodule_verdict=module_verdict, ideal_verdict=ideal_verdict)
