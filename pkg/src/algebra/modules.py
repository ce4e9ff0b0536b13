"""
Finitely generated modules over Z and Z/mZ

A module is the cokernel Z^k / L_rel of a relation lattice; a submodule is an
intermediate lattice L_rel <= L_N <= Z^k. Both are kept in canonical Hermite
form, so submodule equality is tuple equality. A Z/mZ-module is the same
Z-presentation with the rows m*e_i adjoined; the ring tag only changes which
ideals get quantified over.
"""
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from math import lcm, prod
from typing import Iterator, List, Optional, Sequence, Tuple

from sympy import factorint, isprime

from .errors import (
    BudgetExceededError,
    ContainmentError,
    InfiniteModuleError,
    ParentMismatchError,
    PreconditionError,
    RankMismatchError,
    RingMismatchError,
)
from .lattice import (
    LatticeBasis,
    full_lattice,
    lattice_contains,
    lattice_contains_lattice,
    lattice_coordinates,
    lattice_intersect,
    lattice_sum,
    reduce_vector,
    scale_lattice,
    snf,
    span,
)
from .rings import Ideal, Ring, ideal_product

# Largest module the element enumerators will walk through
ELEMENT_BUDGET = 20000


@dataclass(frozen=True)
class ModulePresentation:
    """
    M = Z^k / L_rel over ``ring``.

    Build instances with :meth:`build` so that the relation lattice is
    canonical and, over Z/mZ, contains m*Z^k.
    """

    ring: Ring
    ambient_rank: int
    relations: LatticeBasis

    @classmethod
    def build(cls, ring: Ring, ambient_rank: int,
              relation_rows: Sequence[Sequence[int]] = ()) -> "ModulePresentation":
        rows = [list(row) for row in relation_rows]
        for row in rows:
            if len(row) != ambient_rank:
                raise RankMismatchError(
                    f"Relation {row} does not have length {ambient_rank}"
                )
        if ring.is_modular:
            rows += [[ring.modulus * int(i == j) for j in range(ambient_rank)]
                     for i in range(ambient_rank)]
        return cls(ring, ambient_rank, span(rows, ambient_rank))

    @classmethod
    def from_orders(cls, orders: Sequence[int], ring: Optional[Ring] = None) -> "ModulePresentation":
        """Direct sum of cyclic modules Z/o (o = 0 gives a free summand Z)"""
        ring = ring or Ring.integers()
        k = len(orders)
        rows = [[o * int(i == j) for j in range(k)] for i, o in enumerate(orders) if o]
        return cls.build(ring, k, rows)

    @classmethod
    def cyclic(cls, m: int, ring: Optional[Ring] = None) -> "ModulePresentation":
        """Z/m over Z/m by default, or over ``ring``"""
        if ring is None:
            ring = Ring.mod(m) if m >= 2 else Ring.integers()
        return cls.from_orders([m], ring)

    @classmethod
    def ring_as_module(cls, ring: Ring) -> "ModulePresentation":
        return cls.build(ring, 1)

    @cached_property
    def invariant_factors(self) -> List[int]:
        """Nonzero invariant factors of the relation lattice"""
        return snf(self.relations.basis)

    @property
    def free_rank(self) -> int:
        return self.ambient_rank - self.relations.rank

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def exponent(self) -> int:
        """Largest invariant factor; 0 when the module has a free summand"""
        if not self.is_finite:
            return 0
        return max(self.invariant_factors, default=1)

    def cardinality(self) -> Optional[int]:
        """Number of elements, or None for an infinite module"""
        if not self.is_finite:
            return None
        return prod(self.invariant_factors)

    def torsion_orders(self) -> List[int]:
        """Nontrivial invariant factors, followed by 0 for each free summand"""
        return [d for d in self.invariant_factors if d != 1] + [0] * self.free_rank

    def is_cyclic(self) -> bool:
        return len(self.torsion_orders()) <= 1

    def is_zero(self) -> bool:
        return self.is_finite and self.exponent() == 1

    def __str__(self) -> str:
        orders = self.torsion_orders()
        if not orders:
            body = "0"
        else:
            body = " + ".join("Z" if o == 0 else f"Z{o}" for o in orders)
        return f"{body} over {self.ring}"


@dataclass(frozen=True)
class Submodule:
    """Intermediate lattice L_rel <= lattice <= Z^k, canonical"""

    parent: ModulePresentation
    lattice: LatticeBasis

    def __post_init__(self):
        if self.lattice.ambient_rank != self.parent.ambient_rank:
            raise RankMismatchError("Submodule lattice and module have different ambient rank")
        if not lattice_contains_lattice(self.lattice, self.parent.relations):
            raise ContainmentError("Submodule lattice must contain the relations")

    def generators(self) -> List[Tuple[int, ...]]:
        """Basis rows reduced modulo the relations, zero classes dropped"""
        reps = []
        for row in self.lattice.rows:
            rep = reduce_vector(self.parent.relations, row)
            if any(rep) and rep not in reps:
                reps.append(rep)
        return reps

    def sort_key(self) -> Tuple:
        return self.lattice.rows

    def __str__(self) -> str:
        gens = self.generators()
        if not gens:
            return "0"
        return "<" + ", ".join("(" + ",".join(str(x) for x in g) + ")" for g in gens) + ">"


@dataclass(frozen=True)
class ModuleElement:
    """Element of M, stored as its canonical representative modulo L_rel"""

    parent: ModulePresentation
    coordinates: Tuple[int, ...]

    @classmethod
    def of(cls, parent: ModulePresentation, vector: Sequence[int]) -> "ModuleElement":
        if len(vector) != parent.ambient_rank:
            raise RankMismatchError(f"Element {tuple(vector)} has the wrong length")
        return cls(parent, reduce_vector(parent.relations, [int(x) for x in vector]))

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.coordinates) + ")"


def _same_parent(first: ModulePresentation, second: ModulePresentation) -> None:
    if first != second:
        raise ParentMismatchError(f"Submodules of different modules: {first} and {second}")


def _check_ring(ideal: Ideal, module: ModulePresentation) -> None:
    if ideal.ring != module.ring:
        raise RingMismatchError(f"Ideal over {ideal.ring} acting on a module over {module.ring}")


def submodule_span(module: ModulePresentation, generators: Sequence[Sequence[int]]) -> Submodule:
    """Submodule generated by ``generators`` (together with the relations)"""
    rows = []
    for vector in generators:
        if len(vector) != module.ambient_rank:
            raise RankMismatchError(
                f"Generator {tuple(vector)} does not have length {module.ambient_rank}"
            )
        rows.append([int(x) for x in vector])
    return Submodule(module, span(list(module.relations.rows) + rows, module.ambient_rank))


def zero_submodule(module: ModulePresentation) -> Submodule:
    return Submodule(module, module.relations)


def whole_module(module: ModulePresentation) -> Submodule:
    return Submodule(module, full_lattice(module.ambient_rank))


def is_submodule_of(inner: Submodule, outer: Submodule) -> bool:
    _same_parent(inner.parent, outer.parent)
    return lattice_contains_lattice(outer.lattice, inner.lattice)


def contains_element(submodule: Submodule, vector: Sequence[int]) -> bool:
    return lattice_contains(submodule.lattice, vector)


@lru_cache(maxsize=65536)
def scale_by_ideal(ideal: Ideal, submodule: Submodule) -> Submodule:
    """IN: the lattice g*L_N + L_rel for the canonical generator g of I"""
    module = submodule.parent
    _check_ring(ideal, module)
    scaled = scale_lattice(submodule.lattice, ideal.generator)
    return Submodule(module, lattice_sum(scaled, module.relations))


def scale_by_element(r: int, submodule: Submodule) -> Submodule:
    """rN; equal to (r)N because N is a submodule"""
    return scale_by_ideal(Ideal.of(submodule.parent.ring, r), submodule)


def submodule_intersect(first: Submodule, second: Submodule) -> Submodule:
    _same_parent(first.parent, second.parent)
    return Submodule(first.parent, lattice_intersect(first.lattice, second.lattice))


def submodule_sum(first: Submodule, second: Submodule) -> Submodule:
    _same_parent(first.parent, second.parent)
    return Submodule(first.parent, lattice_sum(first.lattice, second.lattice))


def intersect_all(submodules: Sequence[Submodule]) -> Submodule:
    result = submodules[0]
    for other in submodules[1:]:
        result = submodule_intersect(result, other)
    return result


def _exponent_ideal(ring: Ring, exponent: int) -> Ideal:
    return Ideal(ring, exponent)


@lru_cache(maxsize=16384)
def colon_ideal(submodule: Submodule, module: ModulePresentation) -> Ideal:
    """
    (N :_R M), the annihilator of M/N, read off the Smith form of L_N.

    Raises:
        ContainmentError: If ``submodule`` is not a submodule of ``module``
    """
    if submodule.parent != module:
        raise ContainmentError(f"Submodule {submodule} is not a submodule of {module}")
    quotient_module = quotient(module, submodule)
    return _exponent_ideal(module.ring, quotient_module.exponent())


def element_order(module: ModulePresentation, vector: Sequence[int]) -> int:
    """Additive order of the class of ``vector`` in M (0 when infinite)"""
    if lattice_contains(module.relations, vector):
        return 1
    line = span([vector], module.ambient_rank)
    meet = lattice_intersect(line, module.relations)
    if meet.rank == 0:
        return 0
    witness = meet.rows[0]
    col = next(j for j, x in enumerate(vector) if x != 0)
    return abs(witness[col] // vector[col])


@lru_cache(maxsize=16384)
def annihilator(submodule: Submodule) -> Ideal:
    """Ann_R(N) = (0 :_R N), from the orders of the generators of N"""
    module = submodule.parent
    exponent = 1
    for vector in submodule.lattice.rows:
        order = element_order(module, vector)
        if order == 0:
            exponent = 0
            break
        exponent = lcm(exponent, order)
    return _exponent_ideal(module.ring, exponent)


def exponent(module: ModulePresentation) -> int:
    return module.exponent()


def cardinality(module: ModulePresentation) -> Optional[int]:
    return module.cardinality()


def quotient(module: ModulePresentation, submodule: Submodule) -> ModulePresentation:
    """M/N: the relations of N's lattice adjoined to those of M"""
    _same_parent(module, submodule.parent)
    return ModulePresentation(module.ring, module.ambient_rank, submodule.lattice)


def quotient_submodule(submodule: Submodule, by: Submodule) -> Submodule:
    """Image K/N of K in M/N; requires N <= K"""
    if not is_submodule_of(by, submodule):
        raise ContainmentError(f"{by} is not contained in {submodule}")
    return Submodule(quotient(submodule.parent, by), submodule.lattice)


def as_module(submodule: Submodule) -> ModulePresentation:
    """
    K viewed as a module: Z^r / (L_rel in coordinates of the basis of L_K),
    where r is the rank of L_K.
    """
    module = submodule.parent
    basis = submodule.lattice
    rows = [lattice_coordinates(basis, row) for row in module.relations.rows]
    return ModulePresentation(module.ring, basis.rank, span(rows, basis.rank))


def restrict(inner: Submodule, outer: Submodule) -> Submodule:
    """N as a submodule of ``as_module(K)``; requires N <= K"""
    if not is_submodule_of(inner, outer):
        raise ContainmentError(f"{inner} is not contained in {outer}")
    ambient = as_module(outer)
    rows = [lattice_coordinates(outer.lattice, row) for row in inner.lattice.rows]
    return Submodule(ambient, span(list(ambient.relations.rows) + rows, ambient.ambient_rank))


@dataclass(frozen=True)
class LocalizedModule:
    """The p-primary component of a finite module and its submodule transfer"""

    source: ModulePresentation
    prime: int
    module: ModulePresentation

    def transfer(self, submodule: Submodule) -> Submodule:
        """N_p = (L_N + p^a Z^k) / (L_rel + p^a Z^k)"""
        _same_parent(self.source, submodule.parent)
        return Submodule(self.module, lattice_sum(submodule.lattice, self.module.relations))


def localize(module: ModulePresentation, p: int) -> LocalizedModule:
    """
    Localisation of a finite module at the maximal ideal (p).

    With p^a the p-part of the exponent, p^a kills the p-primary component
    and acts invertibly on the rest, so M_p = M / p^a M. The result carries
    the local ring Z/p^a (Z/p for a zero component); its proper ideals act
    on M_p exactly as the proper ideals of Z localised at p.

    Raises:
        InfiniteModuleError: If the module is infinite
        PreconditionError: If p is not prime
    """
    if not module.is_finite:
        raise InfiniteModuleError(f"Cannot localise the infinite module {module}")
    if not isprime(p):
        raise PreconditionError(f"{p} is not prime")
    k = module.ambient_rank
    power = p ** factorint(module.exponent()).get(p, 0)
    rows = list(module.relations.rows) + [[power * int(i == j) for j in range(k)] for i in range(k)]
    local_ring = Ring.mod(power if power > 1 else p)
    local = ModulePresentation(local_ring, k, span(rows, k))
    return LocalizedModule(module, p, local)


def primes_of(module: ModulePresentation) -> List[int]:
    """Primes dividing the exponent of a finite module"""
    if not module.is_finite:
        raise InfiniteModuleError(f"{module} is infinite")
    return sorted(factorint(module.exponent()))


def submodule_product(first: Submodule, second: Submodule) -> Submodule:
    """NK = (N :_R M)(K :_R M)M"""
    _same_parent(first.parent, second.parent)
    module = first.parent
    ideal = ideal_product(colon_ideal(first, module), colon_ideal(second, module))
    return scale_by_ideal(ideal, whole_module(module))


def submodule_product_all(submodules: Sequence[Submodule]) -> Submodule:
    """N_1 N_2 ... N_t = (N_1 : M)...(N_t : M) M"""
    module = submodules[0].parent
    ideal = Ideal.unit(module.ring)
    for sub in submodules:
        _same_parent(module, sub.parent)
        ideal = ideal_product(ideal, colon_ideal(sub, module))
    return scale_by_ideal(ideal, whole_module(module))


def check_budget(module: ModulePresentation, budget: int = ELEMENT_BUDGET) -> int:
    """
    Size of a finite module within ``budget``.

    Raises:
        InfiniteModuleError: If the module is infinite
        BudgetExceededError: If it has more than ``budget`` elements
    """
    size = module.cardinality()
    if size is None:
        raise InfiniteModuleError(f"{module} is infinite")
    if size > budget:
        raise BudgetExceededError(f"{module} has {size} elements, budget is {budget}")
    return size


def elements(module: ModulePresentation, budget: int = ELEMENT_BUDGET) -> Iterator[ModuleElement]:
    """
    Every element of a finite module exactly once, as canonical
    representatives, in lexicographic order of coordinates.
    """
    check_budget(module, budget)
    # full rank: one pivot per column, representatives range over [0, pivot)
    ranges = [range(value) for _, value in module.relations.pivots()]
    for coords in product(*ranges):
        yield ModuleElement(module, tuple(coords))
