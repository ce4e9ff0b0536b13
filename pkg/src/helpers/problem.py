"""
Problem description files

A problem is a JSON document naming a module, some of its submodules and the
checks to run on them:

    {
      "ring": "Z/4",
      "ambient_rank": 1,
      "relations": [[4]],
      "submodules": {"N": [[2]]},
      "checks": [{"check": "pure", "submodule": "N"},
                 {"check": "n-pure", "submodule": "N", "n": 2}]
    }
"""
import json
import re
from dataclasses import dataclass, field
from math import lcm
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from src.algebra import (
    DEFAULT_BOUND,
    ModulePresentation,
    ProblemFormatError,
    QuantificationPolicy,
    Ring,
    Submodule,
    submodule_span,
    whole_module,
)

CHECK_KINDS = (
    "pure",
    "ribenboim-pure",
    "n-pure",
    "fully-n-pure",
    "multiplication",
    "fully-cancellation",
    "wsas",
    "wsas-identity",
    "pid-factorization",
    "maximal-pure",
    "maximal-n-pure",
    "product-characterization",
    "colon-transfer",
)

# Keys a check entry may carry besides "check"
_CHECK_FIELDS = ("submodule", "n", "policy", "strict", "prime_powers", "unrestricted")


def parse_policy(text: Optional[str]) -> Optional[QuantificationPolicy]:
    """
    Parse ``exhaustive``, ``residue:E``, ``bounded`` or ``bounded:B``.

    ``auto`` and None select the policy from the module. A bare ``residue``
    is also left to the module, which knows its exponent.

    Raises:
        ProblemFormatError: On anything else
    """
    if text is None or text in ("auto", "residue"):
        return None
    kind, _, argument = text.partition(":")
    try:
        if kind == "exhaustive" and not argument:
            return QuantificationPolicy.exhaustive()
        if kind == "residue":
            return QuantificationPolicy.residue(int(argument))
        if kind == "bounded":
            return QuantificationPolicy.bounded(int(argument) if argument else DEFAULT_BOUND)
    except ValueError as exc:
        raise ProblemFormatError(f"Bad policy '{text}': {exc}") from exc
    raise ProblemFormatError(f"Unknown policy '{text}'; use exhaustive, residue:E or bounded:B")


@dataclass(frozen=True)
class CheckSpec:
    check: str
    submodule: Optional[str] = None
    n: Optional[int] = None
    policy: Optional[str] = None
    strict: Optional[bool] = None
    prime_powers: Optional[Tuple[Tuple[int, int], ...]] = None
    unrestricted: Optional[bool] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"check": self.check}
        for key in _CHECK_FIELDS:
            value = getattr(self, key)
            if value is None:
                continue
            if key == "prime_powers":
                value = [list(pair) for pair in value]
            data[key] = value
        return data


@dataclass(frozen=True)
class ProblemDescription:
    ring: Ring
    ambient_rank: int
    relations: Tuple[Tuple[int, ...], ...] = ()
    submodules: Tuple[Tuple[str, Tuple[Tuple[int, ...], ...]], ...] = ()
    checks: Tuple[CheckSpec, ...] = field(default_factory=tuple)

    def module(self) -> ModulePresentation:
        return ModulePresentation.build(self.ring, self.ambient_rank, self.relations)

    def submodule(self, name: Optional[str], module: Optional[ModulePresentation] = None) -> Submodule:
        """The named submodule; None stands for the whole module"""
        module = module or self.module()
        if name is None:
            return whole_module(module)
        for candidate, generators in self.submodules:
            if candidate == name:
                return submodule_span(module, generators)
        raise ProblemFormatError(f"No submodule named '{name}'")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ring": str(self.ring),
            "ambient_rank": self.ambient_rank,
            "relations": [list(row) for row in self.relations],
            "submodules": {name: [list(g) for g in gens] for name, gens in self.submodules},
            "checks": [check.to_dict() for check in self.checks],
        }


def _int_rows(value: Any, what: str, width: int) -> Tuple[Tuple[int, ...], ...]:
    if not isinstance(value, list):
        raise ProblemFormatError(f"{what} must be a list of rows")
    rows = []
    for row in value:
        if not isinstance(row, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
            raise ProblemFormatError(f"{what}: {row!r} is not a row of integers")
        if len(row) != width:
            raise ProblemFormatError(f"{what}: row {row} does not have length {width}")
        rows.append(tuple(row))
    return tuple(rows)


def _parse_check(entry: Any, names: List[str]) -> CheckSpec:
    if not isinstance(entry, dict) or "check" not in entry:
        raise ProblemFormatError(f"Check entry {entry!r} needs a 'check' field")
    unknown = set(entry) - {"check", *_CHECK_FIELDS}
    if unknown:
        raise ProblemFormatError(f"Unknown check fields: {', '.join(sorted(unknown))}")
    kind = entry["check"]
    level = entry.get("n")
    shorthand = re.fullmatch(r"(\d+)-pure", str(kind))
    if shorthand:
        if level is not None and level != int(shorthand.group(1)):
            raise ProblemFormatError(f"Check '{kind}' conflicts with n = {level}")
        kind, level = "n-pure", int(shorthand.group(1))
    if kind not in CHECK_KINDS:
        raise ProblemFormatError(f"Unknown check '{kind}'; available: {', '.join(CHECK_KINDS)}")
    submodule = entry.get("submodule")
    if submodule is not None and submodule not in names:
        raise ProblemFormatError(f"Check '{kind}' refers to unknown submodule '{submodule}'")
    if level is not None and (not isinstance(level, int) or isinstance(level, bool) or level < 1):
        raise ProblemFormatError(f"Check '{kind}': n must be a positive integer")
    for flag in ("strict", "unrestricted"):
        if flag in entry and not isinstance(entry[flag], bool):
            raise ProblemFormatError(f"Check '{kind}': {flag} must be true or false")
    policy = entry.get("policy")
    if policy is not None:
        if not isinstance(policy, str):
            raise ProblemFormatError(f"Check '{kind}': policy must be a string")
        parse_policy(policy)
    prime_powers = entry.get("prime_powers")
    if prime_powers is not None:
        prime_powers = tuple(tuple(pair) for pair in _int_rows(prime_powers, "prime_powers", 2))
    return CheckSpec(kind, submodule, level, policy, entry.get("strict"), prime_powers,
                     entry.get("unrestricted"))


def problem_from_dict(data: Any) -> ProblemDescription:
    """
    Validate and convert a decoded JSON document.

    Raises:
        ProblemFormatError: If a field is missing or malformed
    """
    if not isinstance(data, dict):
        raise ProblemFormatError("A problem must be a JSON object")
    for key in ("ring", "ambient_rank"):
        if key not in data:
            raise ProblemFormatError(f"Missing field '{key}'")
    try:
        ring = Ring.parse(str(data["ring"]))
    except ValueError as exc:
        raise ProblemFormatError(str(exc)) from exc
    rank = data["ambient_rank"]
    if not isinstance(rank, int) or rank < 0:
        raise ProblemFormatError("ambient_rank must be a non-negative integer")
    relations = _int_rows(data.get("relations", []), "relations", rank)
    raw_subs = data.get("submodules", {})
    if not isinstance(raw_subs, dict):
        raise ProblemFormatError("submodules must map names to generator lists")
    submodules = tuple((name, _int_rows(gens, f"submodule {name}", rank)) for name, gens in raw_subs.items())
    raw_checks = data.get("checks", [])
    if not isinstance(raw_checks, list):
        raise ProblemFormatError("checks must be a list")
    names = [name for name, _ in submodules]
    checks = tuple(_parse_check(entry, names) for entry in raw_checks)
    return ProblemDescription(ring, rank, relations, submodules, checks)


def parse_problem(text: str) -> ProblemDescription:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFormatError(f"Invalid JSON: {exc}") from exc
    return problem_from_dict(data)


def serialize_problem(problem: ProblemDescription) -> str:
    return json.dumps(problem.to_dict(), indent=2, ensure_ascii=False) + "\n"


def load_problem(path: str) -> ProblemDescription:
    """
    Read a problem file.

    Raises:
        FileNotFoundError: If the file does not exist
        ProblemFormatError: If it is not a valid problem
    """
    file = Path(path)
    if not file.exists():
        raise FileNotFoundError(f"Input file not found: {path}")
    return parse_problem(file.read_text(encoding="utf-8"))


_SUMMAND = re.compile(r"Z(\d*)")


def parse_module_text(text: str) -> ProblemDescription:
    """
    Short module descriptions such as ``Z12``, ``Z8+Z4 over Z`` or ``Z over Z``.

    ``Zk`` is a cyclic summand of order k, a bare ``Z`` a free summand. Without
    ``over`` the ring is Z/lcm of the orders, or Z when a summand is free.
    """
    body, _, ring_text = text.partition(" over ")
    orders = []
    for part in body.replace(" ", "").split("+"):
        match = _SUMMAND.fullmatch(part)
        if not match:
            raise ProblemFormatError(f"Cannot read module '{text}'; expected e.g. Z8+Z4 over Z")
        orders.append(int(match.group(1)) if match.group(1) else 0)
    if ring_text:
        try:
            ring = Ring.parse(ring_text)
        except ValueError as exc:
            raise ProblemFormatError(str(exc)) from exc
    elif 0 in orders:
        ring = Ring.integers()
    else:
        modulus = lcm(*orders)
        ring = Ring.mod(modulus) if modulus >= 2 else Ring.integers()
    k = len(orders)
    relations = tuple(tuple(o * int(i == j) for j in range(k)) for i, o in enumerate(orders) if o)
    return ProblemDescription(ring, k, relations)


def resolve_input(source: str) -> ProblemDescription:
    """A problem file path, or a short module description"""
    if Path(source).exists() or source.endswith(".json"):
        return load_problem(source)
    return parse_module_text(source)
