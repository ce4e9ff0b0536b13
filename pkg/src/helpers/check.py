"""
Check runner

Evaluates every check requested by a problem description and returns one
:class:`CheckResult` per check, in file order.
"""
from typing import List, Optional

from src.algebra import (
    ELEMENT_BUDGET,
    ModulePresentation,
    QuantificationPolicy,
    Verdict,
    check_colon_transfer,
    check_pid_factorization,
    check_product_characterization,
    check_wsas_identity,
    is_fully_cancellation,
    is_fully_n_pure,
    is_multiplication_module,
    is_n_pure,
    is_pure,
    is_ribenboim_pure,
    is_weakly_strongly_2_absorbing_second,
    maximal_n_pure_within,
    maximal_pure_submodules,
)
from src.utils import Spinner

from .problem import CheckSpec, ProblemDescription, parse_policy
from .report import CheckResult


def _label(spec: CheckSpec, level: int) -> str:
    kind = spec.check
    if kind == "n-pure":
        kind = f"{level}-pure"
    elif kind in ("fully-n-pure", "maximal-n-pure", "product-characterization", "colon-transfer"):
        kind = f"{kind}[n={level}]"
    target = spec.submodule or ""
    return f"{kind}({target})" if spec.submodule else kind


def run_check(problem: ProblemDescription, module: ModulePresentation, spec: CheckSpec,
              level: int = 2, policy: Optional[QuantificationPolicy] = None,
              budget: int = ELEMENT_BUDGET) -> CheckResult:
    """
    Run one check.

    Per-check ``n`` and ``policy`` override the run-wide defaults.
    """
    level = spec.n or level
    if spec.policy is not None:
        policy = parse_policy(spec.policy)
    sub = problem.submodule(spec.submodule, module)
    kind = spec.check
    result = None
    if kind == "pure":
        verdict = is_pure(sub, module, policy)
    elif kind == "ribenboim-pure":
        verdict = is_ribenboim_pure(sub, module, policy)
    elif kind == "n-pure":
        verdict = is_n_pure(sub, module, level, policy)
    elif kind == "fully-n-pure":
        verdict = is_fully_n_pure(module, level, policy, budget)
    elif kind == "multiplication":
        verdict = is_multiplication_module(module, policy, budget)
    elif kind == "fully-cancellation":
        verdict = is_fully_cancellation(module, policy, budget)
    elif kind == "wsas":
        verdict = is_weakly_strongly_2_absorbing_second(sub, module, budget)
    elif kind == "wsas-identity":
        verdict = check_wsas_identity(sub, module, budget)
    elif kind == "pid-factorization":
        verdict = check_pid_factorization(sub, spec.prime_powers or ())
    elif kind == "maximal-pure":
        strict = True if spec.strict is None else spec.strict
        found = maximal_pure_submodules(sub, module, strict, policy, budget)
        result = [str(s) for s in found]
        verdict = Verdict.holds(count=len(found))
    elif kind == "maximal-n-pure":
        found = maximal_n_pure_within(sub, module, level, policy, budget)
        result = [str(found)]
        verdict = Verdict.holds()
    elif kind == "product-characterization":
        verdict = check_product_characterization(module, level, policy, bool(spec.unrestricted), budget)
    else:
        verdict = check_colon_transfer(sub, module, level, policy, budget)
    return CheckResult(_label(spec, level), verdict, result=result)


def run_checks(problem: ProblemDescription, level: int = 2,
               policy: Optional[QuantificationPolicy] = None, quiet: bool = False,
               budget: int = ELEMENT_BUDGET) -> List[CheckResult]:
    """
    Run every check of a problem.

    Args:
        problem: Parsed problem description
        level: Default purity level for checks that do not set ``n``
        policy: Default quantification policy (None selects per module)
        quiet: Suppress the progress spinner
        budget: Largest module the enumerating checks may touch

    Returns:
        One result per check, in file order

    Raises:
        PurityError: If a check is outside its hypotheses or the input is invalid
    """
    module = problem.module()
    results = []
    with Spinner(f"Checking {module}...", total=len(problem.checks), enabled=not quiet) as spinner:
        for spec in problem.checks:
            result = run_check(problem, module, spec, level, policy, budget)
            results.append(result)
            spinner.advance(result.check)
    return results
