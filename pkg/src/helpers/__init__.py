"""Command helpers: problem files, checks, reports, the reference suite and scans"""

from .problem import (
    ProblemDescription,
    load_problem,
    parse_module_text,
    parse_policy,
    parse_problem,
    resolve_input,
    serialize_problem,
)
from .check import run_checks
from .report import Report, exit_code, expectation_exit_code, render
from .paper_suite import default_cases, run_paper_suite
from .scan import mine_result, run_enumerate, run_maximal_pure, run_mine, run_scan, scan_result

__all__ = [
    'ProblemDescription',
    'load_problem',
    'parse_module_text',
    'parse_policy',
    'parse_problem',
    'resolve_input',
    'serialize_problem',
    'run_checks',
    'Report',
    'exit_code',
    'expectation_exit_code',
    'render',
    'default_cases',
    'run_paper_suite',
    'run_scan',
    'scan_result',
    'run_mine',
    'mine_result',
    'run_enumerate',
    'run_maximal_pure',
]
