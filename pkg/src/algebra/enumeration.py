"""
Submodule enumeration and module families for exhaustive scans
"""
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from typing import Iterator, List, Tuple

from sympy import isprime

from .errors import UnknownClaimError
from .lattice import lattice_contains, span
from .modules import (
    ELEMENT_BUDGET,
    ModulePresentation,
    Submodule,
    check_budget,
    elements,
    zero_submodule,
)
from .rings import Ring


def enumerate_submodules(module: ModulePresentation, budget: int = ELEMENT_BUDGET) -> List[Submodule]:
    """
    Every submodule of a finite module exactly once.

    Breadth-first closure from the zero submodule: each known submodule is
    grown by one element at a time, canonicalised and deduplicated. The
    order is deterministic (by number of growth steps, then element order).

    Raises:
        InfiniteModuleError: If the module is infinite
        BudgetExceededError: If the module exceeds ``budget``
    """
    return list(_enumerate_submodules(module, budget))


@lru_cache(maxsize=512)
def _enumerate_submodules(module: ModulePresentation, budget: int) -> Tuple[Submodule, ...]:
    check_budget(module, budget)
    pool = [element.coordinates for element in elements(module, budget)]
    start = zero_submodule(module)
    seen = {start.lattice}
    found = [start]
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for vector in pool:
            if lattice_contains(current.lattice, vector):
                continue
            grown = span(list(current.lattice.rows) + [list(vector)], module.ambient_rank)
            if grown in seen:
                continue
            seen.add(grown)
            submodule = Submodule(module, grown)
            found.append(submodule)
            queue.append(submodule)
    return tuple(found)


@dataclass(frozen=True)
class FamilyMember:
    label: str
    module: ModulePresentation


def _parse_range(text: str) -> Tuple[int, int]:
    if "-" in text:
        low, high = text.split("-", 1)
        return int(low), int(high)
    return 2, int(text)


def parse_family(spec: str) -> List[FamilyMember]:
    """
    Expand a family description into modules, in a fixed order.

    Supported forms:
        cyclic:LO-HI     Z/m over Z/m for LO <= m <= HI
        cyclic-z:LO-HI   Z/m over Z
        primes:LO-HI     Z/p over Z/p for primes p in range
        pairs:MAX        Z/a + Z/b over Z, 2 <= a <= b, ab <= MAX
        pairs-mod:MAX    Z/a + Z/b over Z/lcm(a, b)
    A bare bound (``cyclic:32``) means LO = 2.

    Raises:
        UnknownClaimError: If the family kind is not recognised
    """
    kind, _, argument = spec.partition(":")
    try:
        if kind in ("cyclic", "cyclic-z", "primes"):
            low, high = _parse_range(argument)
            return list(_cyclic_family(kind, max(low, 2), high))
        if kind in ("pairs", "pairs-mod"):
            return list(_pair_family(kind, int(argument)))
    except ValueError as exc:
        raise UnknownClaimError(f"Malformed family '{spec}': {exc}") from exc
    raise UnknownClaimError(
        f"Unknown family '{spec}'; use cyclic:, cyclic-z:, primes:, pairs: or pairs-mod:"
    )


def _cyclic_family(kind: str, low: int, high: int) -> Iterator[FamilyMember]:
    for m in range(low, high + 1):
        if kind == "primes" and not isprime(m):
            continue
        ring = Ring.integers() if kind == "cyclic-z" else Ring.mod(m)
        yield FamilyMember(f"Z{m} over {ring}", ModulePresentation.cyclic(m, ring))


def _pair_family(kind: str, maximum: int) -> Iterator[FamilyMember]:
    for a in range(2, maximum + 1):
        for b in range(a, maximum // a + 1):
            ring = Ring.mod(lcm(a, b)) if kind == "pairs-mod" else Ring.integers()
            yield FamilyMember(f"Z{a}+Z{b} over {ring}", ModulePresentation.from_orders([a, b], ring))
