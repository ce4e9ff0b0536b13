"""
Reference suite

Worked examples with known verdicts plus proposition scans that must come
back clean. Each case pairs a computation with its expected outcome; the
suite passes when every outcome matches.
"""
from dataclasses import dataclass
from typing import Callable, List, Mapping, Optional

from src.algebra import (
    ModulePresentation,
    Outcome,
    QuantificationPolicy,
    Ring,
    ScanLimits,
    Verdict,
    conjecture_scan,
    is_n_pure,
    submodule_span,
    witness_mine,
)
from src.algebra.enumeration import FamilyMember
from src.utils import Spinner

from .report import CheckResult


@dataclass(frozen=True)
class SuiteCase:
    name: str
    run: Callable[[], Verdict]
    expected: Outcome


def _cyclic_case(m: int, level: int) -> Callable[[], Verdict]:
    def run() -> Verdict:
        module = ModulePresentation.cyclic(m)
        return is_n_pure(submodule_span(module, [[2]]), module, level)
    return run


def _integers_case(level: int, bound: int = 8) -> Callable[[], Verdict]:
    def run() -> Verdict:
        module = ModulePresentation.from_orders([0])
        return is_n_pure(submodule_span(module, [[2]]), module, level,
                         QuantificationPolicy.bounded(bound))
    return run


def _scan_case(claim: str, family, **limits) -> Callable[[], Verdict]:
    def run() -> Verdict:
        report = conjecture_scan(claim, family, ScanLimits(**limits))
        if report.violations:
            first = report.violations[0]
            return Verdict.fails(violations=len(report.violations), module=first.module,
                                 submodules=first.submodules, detail=first.detail)
        return Verdict.holds(instances=report.scanned_instances)
    return run


def _mine_case(level: int, family: str, expected: Optional[tuple]) -> Callable[[], Verdict]:
    def run() -> Verdict:
        found = {(w.module, w.submodule) for w in witness_mine("n-pure-not-(n-1)-pure", family,
                                                                 ScanLimits(level=level))}
        if expected is None:
            return Verdict.holds() if not found else Verdict.fails(found=sorted(found))
        if expected in found:
            return Verdict.holds(count=len(found))
        return Verdict.fails(missing=expected)
    return run


def _hereditary_counterexample() -> List[FamilyMember]:
    return [FamilyMember("Z8+Z4 over Z", ModulePresentation.from_orders([8, 4], Ring.integers()))]


def default_cases() -> List[SuiteCase]:
    cases = []
    # Level 1 is plain purity, so n = 2 also covers "2Z4 is not pure"
    for n in range(2, 7):
        cases.append(SuiteCase(f"Z{2 ** n}: 2 is {n}-pure", _cyclic_case(2 ** n, n), Outcome.HOLDS))
        lower = "pure" if n == 2 else f"{n - 1}-pure"
        cases.append(SuiteCase(f"Z{2 ** n}: 2 is not {lower}", _cyclic_case(2 ** n, n - 1), Outcome.FAILS))
    for n in range(2, 7):
        cases.append(SuiteCase(f"Z: 2Z is not {n}-pure (bound 8)", _integers_case(n), Outcome.FAILS))
    cases += [
        SuiteCase("pure implies 2-pure", _scan_case("pure-implies-2pure", "cyclic:2-32"), Outcome.HOLDS),
        SuiteCase("(n-1)-pure implies n-pure", _scan_case("hierarchy", "cyclic:2-16", max_level=4),
                  Outcome.HOLDS),
        SuiteCase("AF pure implies Ribenboim pure", _scan_case("af-implies-ribenboim", "cyclic:2-24"),
                  Outcome.HOLDS),
        SuiteCase("IJN = IN ∩ JN is sufficient", _scan_case("sufficient-intersection", "cyclic:2-24"),
                  Outcome.HOLDS),
        SuiteCase("pure scalings are sufficient", _scan_case("sufficient-pure-scaling", "cyclic:2-24"),
                  Outcome.HOLDS),
        SuiteCase("weakly strongly 2-absorbing second identity",
                  _scan_case("wsas-identity", "cyclic:2-12"), Outcome.HOLDS),
        SuiteCase("transitivity", _scan_case("transitive", "cyclic:2-16"), Outcome.HOLDS),
        SuiteCase("hereditary on cyclic modules", _scan_case("hereditary", "cyclic:2-16"), Outcome.HOLDS),
        SuiteCase("hereditary fails on Z8+Z4", _scan_case("hereditary", _hereditary_counterexample()),
                  Outcome.FAILS),
        SuiteCase("quotient lifting", _scan_case("quotient-lifting", "cyclic:2-16"), Outcome.HOLDS),
        SuiteCase("PID factorisation", _scan_case("pid-factorization", "cyclic:2-30"), Outcome.HOLDS),
        SuiteCase("square-free coprime product", _scan_case("squarefree-coprime-product", "cyclic:2-30"),
                  Outcome.HOLDS),
        SuiteCase("local-global at level 2", _scan_case("local-global", "pairs:36"), Outcome.HOLDS),
        SuiteCase("local-global fails at level 3", _scan_case("local-global", "cyclic-z:8-8", level=3),
                  Outcome.FAILS),
        SuiteCase("chain closure", _scan_case("chain-closure", "cyclic:2-12"), Outcome.HOLDS),
        SuiteCase("colon transfer", _scan_case("colon-transfer", "cyclic:2-30"), Outcome.HOLDS),
        SuiteCase("product characterisation", _scan_case("product-characterization", "cyclic:2-16"),
                  Outcome.HOLDS),
        SuiteCase("maximal n-pure submodules exist", _scan_case("maximal-n-pure", "cyclic:2-16"),
                  Outcome.HOLDS),
        SuiteCase("finitely many maximal pure submodules", _scan_case("finite-maximal-pure", "cyclic:2-12"),
                  Outcome.HOLDS),
        SuiteCase("fields are fully n-pure", _scan_case("fields-fully-pure", "primes:2-13"), Outcome.HOLDS),
        SuiteCase("lattice and oracle agree", _scan_case("oracle-equivalence", "cyclic:2-16", level=3),
                  Outcome.HOLDS),
        SuiteCase("mining finds Z4 at level 2", _mine_case(2, "cyclic:2-16", ("Z4 over Z/4", "<(2)>")),
                  Outcome.HOLDS),
        SuiteCase("mining finds Z8 at level 3", _mine_case(3, "cyclic:2-16", ("Z8 over Z/8", "<(2)>")),
                  Outcome.HOLDS),
        SuiteCase("mining finds nothing over fields", _mine_case(2, "primes:2-13", None), Outcome.HOLDS),
    ]
    return cases


def run_paper_suite(cases: Optional[List[SuiteCase]] = None,
                    expectations: Optional[Mapping[str, Outcome]] = None,
                    quiet: bool = False) -> List[CheckResult]:
    """
    Run the suite.

    Args:
        cases: Cases to run (defaults to :func:`default_cases`)
        expectations: Overrides of expected outcomes by case name
        quiet: Suppress the progress spinner

    Returns:
        One result per case, carrying its expected outcome
    """
    cases = default_cases() if cases is None else cases
    expectations = expectations or {}
    results = []
    with Spinner("Running reference suite...", total=len(cases), enabled=not quiet) as spinner:
        for case in cases:
            verdict = case.run()
            expected = expectations.get(case.name, case.expected)
            results.append(CheckResult(case.name, verdict, expected=expected))
            spinner.advance(case.name)
    return results
