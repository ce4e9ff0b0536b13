"""
Front ends for scans, witness mining, submodule enumeration and maximal
pure submodules
"""
from typing import List, Optional

from src.algebra import (
    ELEMENT_BUDGET,
    ScanLimits,
    ScanReport,
    Verdict,
    conjecture_scan,
    enumerate_submodules,
    maximal_pure_submodules,
    parse_family,
    witness_mine,
)
from src.algebra.scans import Witness
from src.utils import Spinner

from .problem import ProblemDescription
from .report import CheckResult


def run_scan(claim: str, family: str, limits: ScanLimits, threads: int = 1,
             quiet: bool = False) -> ScanReport:
    """
    Scan a claim over a family with a counted spinner.

    Raises:
        UnknownClaimError: If the claim or family is not recognised
    """
    members = parse_family(family)
    with Spinner(f"Scanning {claim} over {family}...", total=len(members),
                 enabled=not quiet) as spinner:
        report = conjecture_scan(claim, members, limits, threads, progress=spinner.advance)
    report.family = family
    return report


def scan_result(report: ScanReport) -> CheckResult:
    if report.violations:
        verdict = Verdict.fails(violations=len(report.violations))
    else:
        verdict = Verdict.holds()
    observed = [f"{key}: {value}" for key, value in sorted(report.observations.items())]
    observed.insert(0, f"instances: {report.scanned_instances}")
    return CheckResult(f"{report.claim} over {report.family}", verdict, result=observed)


def run_mine(pattern: str, family: str, limits: ScanLimits, quiet: bool = False) -> List[Witness]:
    members = parse_family(family)
    with Spinner(f"Mining {pattern} over {family}...", total=len(members),
                 enabled=not quiet) as spinner:
        return witness_mine(pattern, members, limits, progress=spinner.advance)


def mine_result(pattern: str, family: str, level: int, witnesses: List[Witness]) -> CheckResult:
    lines = [f"{w.module}: {w.submodule} ({w.failure})" for w in witnesses]
    verdict = Verdict.holds(count=len(witnesses))
    return CheckResult(f"{pattern}[n={level}] over {family}", verdict, result=lines)


def run_enumerate(problem: ProblemDescription, budget: int = ELEMENT_BUDGET) -> CheckResult:
    module = problem.module()
    found = enumerate_submodules(module, budget)
    return CheckResult(f"submodules of {module}", Verdict.holds(count=len(found)),
                       result=[str(s) for s in found])


def run_maximal_pure(problem: ProblemDescription, submodule: Optional[str] = None,
                     strict: bool = True, budget: int = ELEMENT_BUDGET) -> CheckResult:
    module = problem.module()
    bound = problem.submodule(submodule, module)
    found = maximal_pure_submodules(bound, module, strict, budget=budget)
    return CheckResult(f"maximal pure submodules of {bound} in {module}",
                       Verdict.holds(count=len(found)), result=[str(s) for s in found])
