"""
Text and machine reports

The machine report is a JSON document with a fixed key order:

    {"command": ..., "inputs_digest": ..., "verdicts": [...],
     "violations": [...], "timing": ...}

Timing is null unless explicitly requested, so two single-threaded runs of
the same command produce identical bytes.
"""
import hashlib
import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional, Sequence

from src.algebra import Outcome, Verdict

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_UNKNOWN = 2
EXIT_ERROR = 3

SYMBOLS = {Outcome.HOLDS: "✓", Outcome.FAILS: "✗", Outcome.UNKNOWN: "?"}


@dataclass(frozen=True)
class CheckResult:
    check: str
    verdict: Verdict
    expected: Optional[Outcome] = None
    result: Optional[List[str]] = None

    @property
    def as_expected(self) -> bool:
        return self.expected is None or self.verdict.outcome is self.expected


@dataclass
class Report:
    command: str
    inputs: Mapping[str, Any]
    results: List[CheckResult] = field(default_factory=list)
    violations: List[Dict[str, Any]] = field(default_factory=list)
    elapsed: Optional[float] = None


def _plain(value: Any) -> Any:
    """JSON-friendly form of witness values (ideals, submodules, verdicts)"""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, Mapping):
        return {str(k): _plain(v) for k, v in value.items()}
    return str(value)


def inputs_digest(inputs: Mapping[str, Any]) -> str:
    canonical = json.dumps(_plain(inputs), sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def verdict_entry(result: CheckResult) -> Dict[str, Any]:
    verdict = result.verdict
    entry: Dict[str, Any] = {"check": result.check, "outcome": verdict.outcome.value}
    if verdict.witness:
        entry["witness"] = _plain(verdict.witness)
    if verdict.bound is not None:
        entry["bound"] = verdict.bound
    if result.expected is not None:
        entry["expected"] = result.expected.value
    if result.result is not None:
        entry["result"] = list(result.result)
    return entry


def machine_report(report: Report, timing: bool = False) -> str:
    document = {
        "command": report.command,
        "inputs_digest": inputs_digest(report.inputs),
        "verdicts": [verdict_entry(r) for r in report.results],
        "violations": _plain(report.violations),
        "timing": round(report.elapsed, 3) if timing and report.elapsed is not None else None,
    }
    return json.dumps(document, indent=2, ensure_ascii=False)


def text_report(report: Report, timing: bool = False) -> str:
    lines = []
    for result in report.results:
        symbol = SYMBOLS[result.verdict.outcome]
        line = f"{symbol} {result.check}: {result.verdict}"
        if not result.as_expected:
            line += f"  (expected {result.expected.value})"
        lines.append(line)
        for item in result.result or ():
            lines.append(f"  {item}")
    for violation in report.violations:
        subs = "; ".join(violation.get("submodules", []))
        line = f"✗ {violation.get('claim')}: {violation.get('module')} [{subs}]"
        if violation.get("ideals"):
            line += f" ideals {', '.join(violation['ideals'])}"
        line += f" {violation.get('detail', '')}".rstrip()
        if violation.get("confirmed") is False:
            line += "  (not reproduced on element sets)"
        lines.append(line)
    if timing and report.elapsed is not None:
        lines.append(f"  Time: {report.elapsed:.3f}s")
    return "\n".join(lines)


def render(report: Report, fmt: str = "text", timing: bool = False) -> str:
    if fmt == "machine":
        return machine_report(report, timing)
    return text_report(report, timing)


def exit_code(results: Sequence[CheckResult]) -> int:
    """1 if anything Fails, else 2 if anything is Unknown, else 0"""
    outcomes = {r.verdict.outcome for r in results}
    if Outcome.FAILS in outcomes:
        return EXIT_FAILS
    if Outcome.UNKNOWN in outcomes:
        return EXIT_UNKNOWN
    return EXIT_OK


def expectation_exit_code(results: Sequence[CheckResult]) -> int:
    """1 if any verdict differs from its expectation, else 0"""
    return EXIT_OK if all(r.as_expected for r in results) else EXIT_FAILS
