"""
Exhaustive scans of purity statements over families of finite modules

Each claim is a function that walks every relevant (module, submodule,
parameter) instance of one member of a family and returns the instances it
looked at together with every violation it found. Scans are partitioned by
family member; results are merged in family order so reports do not depend on
the number of worker threads.
"""
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from math import gcd
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from sympy import factorint, isprime

from .enumeration import FamilyMember, enumerate_submodules, parse_family
from .errors import BudgetExceededError, InfiniteModuleError, PreconditionError, UnknownClaimError
from .modules import (
    ELEMENT_BUDGET,
    ModulePresentation,
    Submodule,
    is_submodule_of,
    localize,
    primes_of,
    quotient_submodule,
    restrict,
    scale_by_element,
    scale_by_ideal,
    submodule_intersect,
    submodule_sum,
    zero_submodule,
)
from .oracle import oracle_identity_fails, oracle_is_n_pure
from .purity import (
    acting_ideals,
    check_colon_transfer,
    check_intersection_identity,
    check_pid_factorization,
    check_product_characterization,
    check_wsas_identity,
    is_faithful,
    is_fully_cancellation,
    is_fully_n_pure,
    is_multiplication_module,
    is_n_pure,
    is_pure,
    is_ribenboim_pure,
    is_weakly_strongly_2_absorbing_second,
    maximal_n_pure_within,
    maximal_pure_submodules,
    resolve_policy,
)
from .rings import QuantificationPolicy
from .verdict import Outcome, Verdict


@dataclass(frozen=True)
class ScanLimits:
    """
    Parameters shared by all claims.

    ``prime_powers`` of None makes the factorisation claim try every tuple
    over the primes 2, 3, 5 with exponents 1 and 2.
    """

    level: int = 2
    max_level: int = 4
    prime_powers: Optional[Tuple[Tuple[int, int], ...]] = None
    pair: Tuple[int, int] = (2, 3)
    budget: int = ELEMENT_BUDGET
    policy: Optional[QuantificationPolicy] = None
    unrestricted: bool = False


@dataclass(frozen=True)
class Violation:
    """
    One counterexample to a claim.

    ``ideals`` is the ideal tuple of the failing identity, when there is one.
    ``confirmed`` tells whether the element-set oracle reproduced every
    verdict the violation rests on (None when nothing could be replayed).
    """

    claim: str
    module: str
    submodules: Tuple[str, ...] = ()
    ideals: Tuple[str, ...] = ()
    detail: str = ""
    confirmed: Optional[bool] = None

    def to_dict(self) -> Dict:
        return {
            "claim": self.claim,
            "module": self.module,
            "submodules": list(self.submodules),
            "ideals": list(self.ideals),
            "detail": self.detail,
            "confirmed": self.confirmed,
        }


@dataclass
class ScanReport:
    claim: str
    family: str
    scanned_instances: int = 0
    violations: List[Violation] = field(default_factory=list)
    elapsed: float = 0.0
    observations: Dict[str, int] = field(default_factory=dict)

    def add(self, result: "ClaimResult") -> None:
        self.scanned_instances += result.instances
        self.violations.extend(result.violations)
        for key, value in result.observations.items():
            self.observations[key] = self.observations.get(key, 0) + value

    def to_dict(self, timing: bool = False) -> Dict:
        return {
            "claim": self.claim,
            "family": self.family,
            "scanned_instances": self.scanned_instances,
            "violations": [v.to_dict() for v in self.violations],
            "observations": dict(sorted(self.observations.items())),
            "elapsed": round(self.elapsed, 3) if timing else None,
        }


@dataclass
class ClaimResult:
    instances: int = 0
    violations: List[Violation] = field(default_factory=list)
    observations: Dict[str, int] = field(default_factory=dict)

    def observe(self, key: str, count: int = 1) -> None:
        self.observations[key] = self.observations.get(key, 0) + count


ClaimCheck = Callable[[FamilyMember, ScanLimits, ClaimResult], None]
CLAIMS: Dict[str, ClaimCheck] = {}


def claim(name: str):
    def register(check: ClaimCheck) -> ClaimCheck:
        CLAIMS[name] = check
        return check
    return register


def _policy(module: ModulePresentation, limits: ScanLimits) -> QuantificationPolicy:
    return resolve_policy(module, limits.policy)


def _subs(member: FamilyMember, limits: ScanLimits) -> List[Submodule]:
    return enumerate_submodules(member.module, limits.budget)


def _holds(verdict) -> bool:
    return verdict.outcome is Outcome.HOLDS


# (submodule, level, lattice verdict, policy) triples a violation rests on
Evidence = Sequence[Tuple[Submodule, int, Verdict, Optional[QuantificationPolicy]]]


def _replay(evidence: Evidence) -> Optional[bool]:
    """Re-decide every verdict on explicit element sets, including failing ideal tuples"""
    if not evidence:
        return None
    try:
        for sub, n, verdict, policy in evidence:
            if oracle_is_n_pure(sub, n, policy).outcome is not verdict.outcome:
                return False
            ideals = verdict.witness.get("ideals") if verdict.failed else None
            if ideals and not oracle_identity_fails(sub, ideals):
                return False
    except (BudgetExceededError, InfiniteModuleError):
        return None
    return True


def _violation(result: ClaimResult, name: str, member: FamilyMember,
               submodules: Sequence[Submodule] = (), detail: str = "",
               evidence: Evidence = ()) -> None:
    ideals = next((v.witness["ideals"] for _, _, v, _ in evidence
                   if v.failed and "ideals" in v.witness), ())
    result.violations.append(
        Violation(name, member.label, tuple(str(s) for s in submodules),
                  tuple(str(i) for i in ideals), detail, _replay(evidence))
    )


def _nested_pairs(subs: Sequence[Submodule]):
    for inner in subs:
        for outer in subs:
            if is_submodule_of(inner, outer):
                yield inner, outer


@claim("pure-implies-2pure")
def _pure_implies_2pure(member, limits, result):
    module = member.module
    policy = _policy(module, limits)
    for sub in _subs(member, limits):
        result.instances += 1
        pure = is_pure(sub, module, policy)
        if _holds(pure):
            verdict = is_n_pure(sub, module, 2, policy)
            if not _holds(verdict):
                _violation(result, "pure-implies-2pure", member, [sub], str(verdict),
                           [(sub, 1, pure, policy), (sub, 2, verdict, policy)])


@claim("hierarchy")
def _hierarchy(member, limits, result):
    module = member.module
    policy = _policy(module, limits)
    for sub in _subs(member, limits):
        for n in range(2, limits.max_level + 1):
            result.instances += 1
            lower = is_n_pure(sub, module, n - 1, policy)
            if _holds(lower):
                verdict = is_n_pure(sub, module, n, policy)
                if not _holds(verdict):
                    _violation(result, "hierarchy", member, [sub], f"level {n}: {verdict}",
                               [(sub, n - 1, lower, policy), (sub, n, verdict, policy)])


@claim("sufficient-intersection")
def _sufficient_intersection(member, limits, result):
    module = member.module
    policy = _policy(module, limits)
    for sub in _subs(member, limits):
        result.instances += 1
        if _holds(check_intersection_identity(sub, limits.level, policy)):
            result.observe("identity_holds")
            verdict = is_n_pure(sub, module, limits.level, policy)
            if not _holds(verdict):
                _violation(result, "sufficient-intersection", member, [sub], str(verdict),
                           [(sub, limits.level, verdict, policy)])


@claim("sufficient-pure-scaling")
def _sufficient_pure_scaling(member, limits, result):
    module = member.module
    policy = _policy(module, limits)
    ideals = acting_ideals(module, policy)
    for sub in _subs(member, limits):
        result.instances += 1
        if all(_holds(is_pure(scale_by_ideal(i, sub), module, policy)) for i in ideals):
            result.observe("premise_holds")
            verdict = is_n_pure(sub, module, 2, policy)
            if not _holds(verdict):
                _violation(result, "sufficient-pure-scaling", member, [sub], str(verdict),
                           [(sub, 2, verdict, policy)])


@claim("wsas-identity")
def _wsas_identity(member, limits, result):
    module = member.module
    if not module.ring.is_modular:
        return
    zero = zero_submodule(module)
    for sub in _subs(member, limits):
        if sub == zero:
            continue
        result.instances += 1
        if not _holds(is_weakly_strongly_2_absorbing_second(sub, module, limits.budget)):
            continue
        result.observe("wsas_submodules")
        verdict = check_wsas_identity(sub, module, limits.budget)
        if not _holds(verdict):
            _violation(result, "wsas-identity", member, [sub], str(verdict))


@claim("transitive")
def _transitive(member, limits, result):
    module = member.module
    policy = _policy(module, limits)
    n = limits.level
    subs = _subs(member, limits)
    n_pure = {sub for sub in subs if _holds(is_n_pure(sub, module, n, policy))}
    for inner, outer in _nested_pairs(subs):
        if outer not in n_pure:
            continue
        result.instances += 1
        inside = restrict(inner, outer)
        inside_verdict = is_n_pure(inside, inside.parent, n)
        if not _holds(inside_verdict):
            continue
        if inner not in n_pure:
            evidence = [(outer, n, is_n_pure(outer, module, n, policy), policy),
                        (inside, n, inside_verdict, None),
                        (inner, n, is_n_pure(inner, module, n, policy), policy)]
            _violation(result, "transitive", member, [inner, outer], f"level {n}", evidence)


@claim("hereditary")
def _hereditary(member, limits, result):
    module = member.module
    policy = _policy(module, limits)
    n = limits.level
    subs = _subs(member, limits)
    for by, top in _nested_pairs(subs):
        top_verdict = is_n_pure(top, module, n, policy)
        if not _holds(top_verdict):
            continue
        result.instances += 1
        image = quotient_submodule(top, by)
        verdict = is_n_pure(image, image.parent, n)
        if not _holds(verdict):
            _violation(result, "hereditary", member, [top, by], f"level {n} in M/N: {verdict}",
                       [(top, n, top_verdict, policy), (image, n, verdict, None)])


@claim("quotient-lifting")
def _quotient_lifting(member, limits, result):
    module = member.module
    policy = _policy(module, limits)
    n = limits.level
    subs = _subs(member, limits)
    for by, top in _nested_pairs(subs):
        by_verdict = is_pure(by, module, policy)
        if not _holds(by_verdict):
            continue
        image = quotient_submodule(top, by)
        image_verdict = is_n_pure(image, image.parent, n)
        if not _holds(image_verdict):
            continue
        result.instances += 1
        verdict = is_n_pure(top, module, n, policy)
        if not _holds(verdict):
            _violation(result, "quotient-lifting", member, [by, top], str(verdict),
                       [(by, 1, by_verdict, policy), (image, n, image_verdict, None),
                        (top, n, verdict, policy)])


def _prime_power_tuples(limits: ScanLimits) -> List[Tuple[Tuple[int, int], ...]]:
    if limits.prime_powers is not None:
        return [tuple(limits.prime_powers)]
    tuples = []
    for size in range(1, 4):
        for primes in combinations((2, 3, 5), size):
            for exponents in product((1, 2), repeat=size):
                tuples.append(tuple(zip(primes, exponents)))
    return tuples


@claim("pid-factorization")
def _pid_factorization(member, limits, result):
    tuples = _prime_power_tuples(limits)
    for sub in _subs(member, limits):
        for prime_powers in tuples:
            result.instances += 1
            verdict = check_pid_factorization(sub, prime_powers)
            if not _holds(verdict):
                _violation(result, "pid-factorization", member, [sub], str(verdict))


def _is_squarefree(n: int) -> bool:
    return n >= 1 and all(e == 1 for e in factorint(n).values())


@claim("squarefree-coprime-product")
def _squarefree_coprime_product(member, limits, result):
    a, b = limits.pair
    if gcd(a, b) != 1 or not (_is_squarefree(a) and _is_squarefree(b)):
        raise PreconditionError(f"({a}, {b}) must be coprime square-free integers")
    for sub in _subs(member, limits):
        result.instances += 1
        lhs = scale_by_element(a * b, sub)
        rhs = scale_by_element(a, sub)
        other = scale_by_element(b, sub)
        if lhs != submodule_intersect(rhs, other):
            _violation(result, "squarefree-coprime-product", member, [sub], f"pair ({a}, {b})")


@claim("local-global")
def _local_global(member, limits, result):
    module = member.module
    policy = _policy(module, limits)
    n = limits.level
    locals_ = [localize(module, p) for p in primes_of(module)]
    for sub in _subs(member, limits):
        result.instances += 1
        global_verdict = is_n_pure(sub, module, n, policy)
        local = [(loc.prime, loc.transfer(sub)) for loc in locals_]
        local_verdicts = [(p, image, is_n_pure(image, image.parent, n)) for p, image in local]
        failing = [p for p, _, verdict in local_verdicts if not _holds(verdict)]
        if _holds(global_verdict) != (not failing):
            detail = f"level {n}: global {global_verdict.outcome.value}, failing primes {failing}"
            evidence = [(sub, n, global_verdict, policy)]
            evidence += [(image, n, verdict, None) for _, image, verdict in local_verdicts]
            _violation(result, "local-global", member, [sub], detail, evidence)


@claim("chain-closure")
def _chain_closure(member, limits, result):
    module = member.module
    policy = _policy(module, limits)
    n = limits.level
    subs = _subs(member, limits)
    n_pure = [sub for sub in subs if _holds(is_n_pure(sub, module, n, policy))]
    # union of a finite chain of n-pure submodules
    for lower, upper in _nested_pairs(n_pure):
        result.instances += 1
        union = submodule_sum(lower, upper)
        verdict = is_n_pure(union, module, n, policy)
        if not _holds(verdict):
            _violation(result, "chain-closure", member, [lower, upper], f"union at level {n}",
                       [(union, n, verdict, policy)])
    # a submodule n-pure in every member of a chain is n-pure in its union
    for inner, lower in _nested_pairs(subs):
        for upper in subs:
            if lower == upper or not is_submodule_of(lower, upper):
                continue
            in_lower = restrict(inner, lower)
            in_upper = restrict(inner, upper)
            if not _holds(is_n_pure(in_lower, in_lower.parent, n)):
                continue
            if not _holds(is_n_pure(in_upper, in_upper.parent, n)):
                continue
            result.instances += 1
            in_union = restrict(inner, submodule_sum(lower, upper))
            verdict = is_n_pure(in_union, in_union.parent, n)
            if not _holds(verdict):
                _violation(result, "chain-closure", member, [inner, lower, upper],
                           f"n-pure in a chain but not in its union at level {n}",
                           [(in_union, n, verdict, None)])


@claim("colon-transfer")
def _colon_transfer(member, limits, result):
    module = member.module
    if not is_faithful(module) or not _holds(is_multiplication_module(module, budget=limits.budget)):
        return
    policy = _policy(module, limits)
    for sub in _subs(member, limits):
        result.instances += 1
        verdict = check_colon_transfer(sub, module, limits.level, policy, limits.budget)
        if not _holds(verdict):
            _violation(result, "colon-transfer", member, [sub], str(verdict),
                       [(sub, limits.level, verdict.witness["submodule_verdict"], policy)])


@claim("product-characterization")
def _product_characterization(member, limits, result):
    module = member.module
    if not _holds(is_multiplication_module(module, budget=limits.budget)):
        return
    result.instances += 1
    verdict = check_product_characterization(module, limits.level, _policy(module, limits),
                                             limits.unrestricted, limits.budget)
    if not _holds(verdict):
        _violation(result, "product-characterization", member, [], str(verdict))


@claim("maximal-n-pure")
def _maximal_n_pure(member, limits, result):
    module = member.module
    policy = _policy(module, limits)
    n = limits.level
    subs = _subs(member, limits)
    n_pure = [sub for sub in subs if _holds(is_n_pure(sub, module, n, policy))]
    for bound in subs:
        result.instances += 1
        found = maximal_n_pure_within(bound, module, n, policy, limits.budget)
        larger = [other for other in n_pure
                  if other != found and is_submodule_of(found, other) and is_submodule_of(other, bound)]
        if found not in n_pure or not is_submodule_of(found, bound) or larger:
            evidence = [(found, n, is_n_pure(found, module, n, policy), policy)]
            evidence += [(other, n, is_n_pure(other, module, n, policy), policy) for other in larger]
            _violation(result, "maximal-n-pure", member, [bound, found], f"level {n}", evidence)


@claim("finite-maximal-pure")
def _finite_maximal_pure(member, limits, result):
    module = member.module
    policy = _policy(module, limits)
    if _holds(is_fully_cancellation(module, policy, limits.budget)):
        result.observe("fully_cancellation")
    for bound in _subs(member, limits):
        result.instances += 1
        result.observe("maximal_pure", len(maximal_pure_submodules(bound, module, True, policy, limits.budget)))


@claim("af-implies-ribenboim")
def _af_implies_ribenboim(member, limits, result):
    module = member.module
    policy = _policy(module, limits)
    for sub in _subs(member, limits):
        result.instances += 1
        pure = is_pure(sub, module, policy)
        if _holds(pure):
            verdict = is_ribenboim_pure(sub, module, policy)
            if not _holds(verdict):
                _violation(result, "af-implies-ribenboim", member, [sub], str(verdict),
                           [(sub, 1, pure, policy)])


@claim("fields-fully-pure")
def _fields_fully_pure(member, limits, result):
    module = member.module
    if not (module.ring.is_modular and isprime(module.ring.modulus)):
        return
    for n in range(1, limits.max_level + 1):
        result.instances += 1
        verdict = is_fully_n_pure(module, n, budget=limits.budget)
        if not _holds(verdict):
            _violation(result, "fields-fully-pure", member, [], f"level {n}: {verdict}")


@claim("oracle-equivalence")
def _oracle_equivalence(member, limits, result):
    module = member.module
    policy = _policy(module, limits)
    for sub in _subs(member, limits):
        for n in range(1, limits.level + 1):
            result.instances += 1
            lattice_verdict = is_n_pure(sub, module, n, policy)
            oracle_verdict = oracle_is_n_pure(sub, n, policy)
            if lattice_verdict.outcome is not oracle_verdict.outcome:
                detail = (f"level {n}: lattice {lattice_verdict.outcome.value}, "
                          f"oracle {oracle_verdict.outcome.value}")
                _violation(result, "oracle-equivalence", member, [sub], detail)


def _run_member(check: ClaimCheck, member: FamilyMember, limits: ScanLimits) -> ClaimResult:
    result = ClaimResult()
    check(member, limits, result)
    return result


Family = Union[str, Sequence[FamilyMember]]


def _members(family: Family) -> Tuple[str, List[FamilyMember]]:
    if isinstance(family, str):
        return family, parse_family(family)
    members = list(family)
    return ", ".join(m.label for m in members), members


def conjecture_scan(claim_id: str, family: Family, limits: Optional[ScanLimits] = None,
                    threads: int = 1, progress: Optional[Callable[[str], None]] = None) -> ScanReport:
    """
    Scan every instance of a claim over a module family.

    Args:
        claim_id: Name of a registered claim (see ``CLAIMS``)
        family: Family description such as ``cyclic:2-32`` or explicit members
        limits: Scan parameters
        threads: Worker threads; members are scanned independently
        progress: Called with each member label as its scan completes

    Returns:
        Report with every violation, in family order

    Raises:
        UnknownClaimError: If the claim or family is not recognised
    """
    if claim_id not in CLAIMS:
        raise UnknownClaimError(
            f"Unknown claim '{claim_id}'; available: {', '.join(sorted(CLAIMS))}"
        )
    limits = limits or ScanLimits()
    check = CLAIMS[claim_id]
    name, members = _members(family)
    report = ScanReport(claim_id, name)
    start = time.perf_counter()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = pool.map(lambda m: _run_member(check, m, limits), members)
            for member, result in zip(members, results):
                report.add(result)
                if progress:
                    progress(member.label)
    else:
        for member in members:
            report.add(_run_member(check, member, limits))
            if progress:
                progress(member.label)
    report.elapsed = time.perf_counter() - start
    return report


MINING_PATTERNS = ("n-pure-not-(n-1)-pure",)


@dataclass(frozen=True)
class Witness:
    module: str
    submodule: str
    level: int
    failure: str

    def to_dict(self) -> Dict:
        return {
            "module": self.module,
            "submodule": self.submodule,
            "level": self.level,
            "failure": self.failure,
        }


def witness_mine(pattern: str, family: Family, limits: Optional[ScanLimits] = None,
                 progress: Optional[Callable[[str], None]] = None) -> List[Witness]:
    """
    Every (M, N) in the family with N n-pure but not (n-1)-pure in M.

    ``limits.level`` is n; at n = 2 the lower level is purity.

    Raises:
        UnknownClaimError: If the pattern is not recognised
    """
    if pattern not in MINING_PATTERNS:
        raise UnknownClaimError(
            f"Unknown pattern '{pattern}'; available: {', '.join(MINING_PATTERNS)}"
        )
    limits = limits or ScanLimits()
    n = limits.level
    if n < 2:
        raise PreconditionError("Mining needs a level of at least 2")
    _, members = _members(family)
    witnesses = []
    for member in members:
        module = member.module
        policy = _policy(module, limits)
        for sub in enumerate_submodules(module, limits.budget):
            if not _holds(is_n_pure(sub, module, n, policy)):
                continue
            lower = is_n_pure(sub, module, n - 1, policy)
            if lower.failed:
                witnesses.append(Witness(member.label, str(sub), n, str(lower)))
        if progress:
            progress(member.label)
    return witnesses


def describe_scan(report: ScanReport) -> List[str]:
    """Text lines for a report, violations first"""
    lines = [
        f"{report.claim} over {report.family}: "
        f"{report.scanned_instances} instances, {len(report.violations)} violations"
    ]
    for violation in report.violations:
        subs = "; ".join(violation.submodules)
        ideals = f" ideals {', '.join(violation.ideals)}" if violation.ideals else ""
        lines.append(f"  ✗ {violation.module} [{subs}]{ideals} {violation.detail}")
    for key, value in sorted(report.observations.items()):
        lines.append(f"  {key}: {value}")
    return lines
