"""
Brute-force reference for finite modules

Works on explicit sets of elements instead of lattices. A finite module
Z^k / L is realised inside the box (Z/D)^k, where D is the gcd of the k x k
minors of the relation rows (D kills the module). Elements are cosets of the
relation subgroup, named by their least member, and every operation is plain
set arithmetic. Nothing here touches the Hermite form code, so agreement with
the lattice engine is meaningful.
"""
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from itertools import combinations, combinations_with_replacement, product
from math import gcd, lcm
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

from sympy import Matrix

from .errors import BudgetExceededError, ContainmentError, InfiniteModuleError, ParentMismatchError
from .modules import ModulePresentation, Submodule, submodule_span
from .rings import (
    Ideal,
    QuantificationPolicy,
    Ring,
    check_policy,
    check_residue_exponent,
    ideal_product,
    proper_ideals,
)
from .verdict import Verdict

Element = Tuple[int, ...]

# Largest box (Z/D)^k the oracle is willing to materialise
BOX_BUDGET = 250000


def _box_modulus(ring: Ring, k: int, relation_rows: Sequence[Sequence[int]]) -> int:
    if ring.is_modular:
        return ring.modulus
    d = 0
    for rows in combinations(relation_rows, k):
        d = gcd(d, int(Matrix([list(r) for r in rows]).det()))
    return abs(d)


def _closure(start: Iterable[Element], generators: Sequence[Element], add) -> FrozenSet[Element]:
    found = set(start)
    frontier = list(found)
    while frontier:
        fresh = []
        for x in frontier:
            for g in generators:
                y = add(x, g)
                if y not in found:
                    found.add(y)
                    fresh.append(y)
        frontier = fresh
    return frozenset(found)


@dataclass(frozen=True)
class OracleModule:
    """Finite module as an explicit quotient of the box (Z/D)^k"""

    ring: Ring
    ambient_rank: int
    modulus: int
    relations: Tuple[Element, ...]
    representative: Dict[Element, Element] = field(compare=False, hash=False, repr=False)

    @classmethod
    def build(cls, ring: Ring, ambient_rank: int,
              relation_rows: Sequence[Sequence[int]]) -> "OracleModule":
        """
        Raises:
            InfiniteModuleError: If the relations do not have full rank
            BudgetExceededError: If the box is larger than BOX_BUDGET
        """
        k = ambient_rank
        d = _box_modulus(ring, k, relation_rows)
        if d == 0:
            raise InfiniteModuleError("The oracle only handles finite modules")
        if d ** k > BOX_BUDGET:
            raise BudgetExceededError(f"Box (Z/{d})^{k} exceeds {BOX_BUDGET} points")

        def add(x, y):
            return tuple((a + b) % d for a, b in zip(x, y))

        zero = (0,) * k
        gens = [tuple(int(x) % d for x in row) for row in relation_rows]
        relation_group = _closure([zero], gens, add)
        representative = {}
        for point in product(range(d), repeat=k):
            if point in representative:
                continue
            coset = [add(point, r) for r in relation_group]
            least = min(coset)
            for member in coset:
                representative[member] = least
        return cls(ring, k, d, tuple(sorted(set(gens))), representative)

    @classmethod
    def of(cls, module: ModulePresentation) -> "OracleModule":
        return _oracle_for(module)

    def element(self, vector: Sequence[int]) -> Element:
        return self.representative[tuple(int(x) % self.modulus for x in vector)]

    def add(self, x: Element, y: Element) -> Element:
        return self.element([a + b for a, b in zip(x, y)])

    def scale(self, r: int, x: Element) -> Element:
        return self.element([r * a for a in x])

    @property
    def zero(self) -> Element:
        return self.element([0] * self.ambient_rank)

    def elements(self) -> FrozenSet[Element]:
        return frozenset(self.representative.values())

    def order(self, x: Element) -> int:
        n, y = 1, x
        while y != self.zero:
            y = self.add(y, x)
            n += 1
        return n

    def exponent(self) -> int:
        result = 1
        for x in self.elements():
            result = lcm(result, self.order(x))
        return result


@lru_cache(maxsize=256)
def _oracle_for(module: ModulePresentation) -> OracleModule:
    return OracleModule.build(module.ring, module.ambient_rank, module.relations.rows)


@dataclass(frozen=True)
class ElementSet:
    """A subset of an oracle module (closed under the module operations when built here)"""

    module: OracleModule
    members: FrozenSet[Element]

    def __len__(self) -> int:
        return len(self.members)

    def is_closed(self) -> bool:
        """Contains zero and is closed under addition (hence a submodule over Z and Z/m)"""
        module = self.module
        if module.zero not in self.members:
            return False
        return all(module.add(x, y) in self.members for x in self.members for y in self.members)


def _closed(elements: ElementSet) -> ElementSet:
    if not elements.is_closed():
        raise ContainmentError(f"{len(elements)} elements do not form a submodule")
    return elements


def _same_module(first: ElementSet, second: ElementSet) -> OracleModule:
    if first.module != second.module:
        raise ParentMismatchError("Element sets from different modules")
    return first.module


def generated(module: OracleModule, vectors: Iterable[Sequence[int]]) -> ElementSet:
    """Subgroup generated by ``vectors``; over Z and Z/m this is the submodule"""
    gens = [module.element(v) for v in vectors]
    return ElementSet(module, _closure([module.zero], gens, module.add))


def whole(module: OracleModule) -> ElementSet:
    return ElementSet(module, module.elements())


def to_element_set(submodule: Submodule, module: Optional[OracleModule] = None) -> ElementSet:
    """Elements of a lattice submodule, enumerated through its generators"""
    module = module or OracleModule.of(submodule.parent)
    return _closed(generated(module, submodule.lattice.rows))


def from_element_set(elements: ElementSet, parent: ModulePresentation) -> Submodule:
    """
    Raises:
        ContainmentError: If the set is not a submodule
    """
    return submodule_span(parent, sorted(_closed(elements).members))


def oracle_scale(ideal: Ideal, elements: ElementSet) -> ElementSet:
    """IN = {g x : x in N}; the multiples of one element already form a subgroup"""
    module = elements.module
    return ElementSet(module, frozenset(module.scale(ideal.generator, x) for x in elements.members))


def oracle_intersect(first: ElementSet, second: ElementSet) -> ElementSet:
    return ElementSet(_same_module(first, second), first.members & second.members)


def oracle_sum(first: ElementSet, second: ElementSet) -> ElementSet:
    module = _same_module(first, second)
    return ElementSet(module, frozenset(module.add(x, y) for x in first.members for y in second.members))


def _identity_sides(combo: Sequence[Ideal], n_set: ElementSet,
                    m_set: ElementSet) -> Tuple[ElementSet, ElementSet]:
    """I1...In N and I1N ∩ ... ∩ InN ∩ (I1...In)M; one ideal gives IN and N ∩ IM"""
    total = reduce(ideal_product, combo)
    lhs = oracle_scale(total, n_set)
    rhs = oracle_scale(total, m_set)
    if len(combo) == 1:
        return lhs, oracle_intersect(rhs, n_set)
    for ideal in combo:
        rhs = oracle_intersect(rhs, oracle_scale(ideal, n_set))
    return lhs, rhs


def oracle_identity_fails(submodule: Submodule, ideals: Sequence[Ideal]) -> bool:
    """Whether the purity identity for this ideal tuple breaks on explicit element sets"""
    module = OracleModule.of(submodule.parent)
    lhs, rhs = _identity_sides(tuple(ideals), to_element_set(submodule, module), whole(module))
    return lhs.members != rhs.members


def oracle_is_n_pure(submodule: Submodule, level: int = 2,
                     policy: Optional[QuantificationPolicy] = None) -> Verdict:
    """
    n-purity (level 1: purity) decided by set arithmetic.

    Uses the same policy defaults as the lattice predicates.

    Raises:
        PolicyError: If the policy does not fit the ring, or a residue policy
            does not cover the module's exponent
    """
    parent = submodule.parent
    module = OracleModule.of(parent)
    if policy is None:
        if parent.ring.is_modular:
            policy = QuantificationPolicy.exhaustive()
        else:
            policy = QuantificationPolicy.residue(module.exponent())
    check_policy(parent.ring, policy)
    check_residue_exponent(policy, module.exponent())
    n_set = to_element_set(submodule, module)
    m_set = whole(module)
    # Ideals with the same image of M act identically on every submodule
    ideals, images = [], set()
    for ideal in proper_ideals(parent.ring, policy):
        image = oracle_scale(ideal, m_set).members
        if image not in images:
            images.add(image)
            ideals.append(ideal)
    for combo in combinations_with_replacement(ideals, level):
        lhs, rhs = _identity_sides(combo, n_set, m_set)
        if lhs.members != rhs.members:
            return Verdict.fails(ideals=combo, lhs=sorted(lhs.members), rhs=sorted(rhs.members))
    if policy.is_decisive:
        return Verdict.holds()
    return Verdict.unknown(policy.bound)
