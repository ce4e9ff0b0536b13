"""
Base rings Z and Z/mZ, their principal ideals, and the policies that turn
"for all proper ideals" into a finite loop
"""
from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Iterator, List, Optional

from sympy import divisors

from .errors import PolicyError, RingMismatchError

# Bound used when an infinite Z-module forces a Bounded policy
DEFAULT_BOUND = 16


@dataclass(frozen=True)
class Ring:
    """Z when ``modulus`` is 0, Z/mZ otherwise"""

    modulus: int = 0

    def __post_init__(self):
        if self.modulus < 0 or self.modulus == 1:
            raise ValueError(f"Modulus must be 0 (for Z) or at least 2, got {self.modulus}")

    @classmethod
    def integers(cls) -> "Ring":
        return cls(0)

    @classmethod
    def mod(cls, m: int) -> "Ring":
        return cls(m)

    @classmethod
    def parse(cls, text: str) -> "Ring":
        """Parse ``Z`` or ``Z/m`` (also accepts ``Zmod m`` and ``Z/mZ``)"""
        cleaned = text.strip().replace(" ", "")
        if cleaned == "Z":
            return cls.integers()
        for prefix in ("Z/", "Zmod"):
            if cleaned.startswith(prefix):
                body = cleaned[len(prefix):]
                if body.endswith("Z"):
                    body = body[:-1]
                try:
                    return cls.mod(int(body))
                except ValueError:
                    break
        raise ValueError(f"Unrecognised ring '{text}'; expected Z or Z/m")

    @property
    def is_modular(self) -> bool:
        return self.modulus != 0

    def __str__(self) -> str:
        return f"Z/{self.modulus}" if self.is_modular else "Z"


def _canonical_generator(ring: Ring, value: int) -> int:
    if ring.is_modular:
        return gcd(value, ring.modulus)
    return abs(value)


@dataclass(frozen=True)
class Ideal:
    """
    Principal ideal with its canonical generator.

    Over Z the ideal gZ has g >= 0. Over Z/mZ the generator divides m:
    g = m is the zero ideal and g = 1 the whole ring.
    """

    ring: Ring
    generator: int

    def __post_init__(self):
        canonical = _canonical_generator(self.ring, self.generator)
        if canonical != self.generator:
            object.__setattr__(self, "generator", canonical)

    @classmethod
    def of(cls, ring: Ring, *generators: int) -> "Ideal":
        """Ideal generated by ``generators`` (the zero ideal when none are given)"""
        g = 0
        for value in generators:
            g = gcd(g, value)
        return cls(ring, g)

    @classmethod
    def zero(cls, ring: Ring) -> "Ideal":
        return cls(ring, 0)

    @classmethod
    def unit(cls, ring: Ring) -> "Ideal":
        return cls(ring, 1)

    @property
    def is_zero(self) -> bool:
        if self.ring.is_modular:
            return self.generator == self.ring.modulus
        return self.generator == 0

    def __str__(self) -> str:
        return "(0)" if self.is_zero else f"({self.generator})"


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    if a.ring != b.ring:
        raise RingMismatchError(f"Ideals over {a.ring} and {b.ring}")
    return Ideal(a.ring, a.generator * b.generator)


def is_proper(a: Ideal) -> bool:
    return a.generator != 1


class PolicyMode(Enum):
    EXHAUSTIVE = "exhaustive"
    RESIDUE = "residue"
    BOUNDED = "bounded"


@dataclass(frozen=True)
class QuantificationPolicy:
    """
    How a "for all proper ideals" clause is materialised.

    EXHAUSTIVE lists every proper ideal of a finite ring. RESIDUE covers Z
    acting on a finite module of the given exponent: the action of rZ only
    depends on r mod exponent, so one representative per residue class is
    exact. BOUNDED lists (0), (2), ..., (bound) and can only ever prove a
    failure.
    """

    mode: PolicyMode
    exponent: Optional[int] = None
    bound: Optional[int] = None

    def __post_init__(self):
        if self.mode is PolicyMode.BOUNDED and (self.bound is None or self.bound < 2):
            raise PolicyError("Bounded policy needs a bound of at least 2")
        if self.mode is PolicyMode.RESIDUE and (self.exponent is None or self.exponent < 1):
            raise PolicyError("Residue policy needs the module exponent (at least 1)")

    @classmethod
    def exhaustive(cls) -> "QuantificationPolicy":
        return cls(PolicyMode.EXHAUSTIVE)

    @classmethod
    def residue(cls, exponent: int) -> "QuantificationPolicy":
        return cls(PolicyMode.RESIDUE, exponent=exponent)

    @classmethod
    def bounded(cls, bound: int = DEFAULT_BOUND) -> "QuantificationPolicy":
        return cls(PolicyMode.BOUNDED, bound=bound)

    @property
    def is_decisive(self) -> bool:
        """Whether a scan that finds no witness proves the statement"""
        return self.mode is not PolicyMode.BOUNDED

    def __str__(self) -> str:
        if self.mode is PolicyMode.BOUNDED:
            return f"bounded:{self.bound}"
        if self.mode is PolicyMode.RESIDUE:
            return f"residue:{self.exponent}"
        return "exhaustive"


def check_policy(ring: Ring, policy: QuantificationPolicy) -> None:
    if policy.mode is PolicyMode.EXHAUSTIVE and not ring.is_modular:
        raise PolicyError("Exhaustive policy needs a finite ring Z/m")
    if policy.mode is not PolicyMode.EXHAUSTIVE and ring.is_modular:
        raise PolicyError(f"Policy {policy} is for the ring Z, not {ring}")


def check_residue_exponent(policy: QuantificationPolicy, exponent: Optional[int]) -> None:
    """
    A residue policy is exact only on a finite module whose exponent divides
    the policy's. ``exponent`` is None for an infinite module.

    Raises:
        PolicyError: If the residue classes do not cover the module's exponent
    """
    if policy.mode is not PolicyMode.RESIDUE:
        return
    if exponent is None:
        raise PolicyError(f"Policy {policy} needs a finite module")
    if policy.exponent % exponent != 0:
        raise PolicyError(f"Policy {policy} does not cover a module of exponent {exponent}; "
                          f"use residue:{exponent} or a multiple")


def _residue_representative(g: int, exponent: int) -> int:
    # the class of 1 is represented by a proper ideal acting as the identity
    return exponent + 1 if g == 1 else g


def proper_ideals(ring: Ring, policy: QuantificationPolicy) -> List[Ideal]:
    """
    Proper ideals materialised by ``policy``, in a fixed order.

    Raises:
        PolicyError: If the policy does not fit the ring
    """
    check_policy(ring, policy)
    if policy.mode is PolicyMode.EXHAUSTIVE:
        return [Ideal(ring, d) for d in divisors(ring.modulus) if d != 1]
    if policy.mode is PolicyMode.RESIDUE:
        return [Ideal(ring, _residue_representative(g, policy.exponent))
                for g in range(policy.exponent)]
    return [Ideal(ring, 0)] + [Ideal(ring, g) for g in range(2, policy.bound + 1)]


def nonzero_ideals(ring: Ring, policy: QuantificationPolicy) -> List[Ideal]:
    """Nonzero ideals materialised by ``policy`` (the unit ideal first)"""
    check_policy(ring, policy)
    if policy.mode is PolicyMode.EXHAUSTIVE:
        return [Ideal(ring, d) for d in divisors(ring.modulus) if d != ring.modulus]
    if policy.mode is PolicyMode.RESIDUE:
        # (exponent) is a nonzero ideal of Z acting as zero on the module
        top = max(policy.exponent, 2)
        return [Ideal(ring, g) for g in range(1, top + 1)]
    return [Ideal(ring, g) for g in range(1, policy.bound + 1)]


def ring_elements(ring: Ring, policy: QuantificationPolicy) -> Iterator[int]:
    """Ring elements materialised by ``policy`` (for element-wise conditions)"""
    check_policy(ring, policy)
    if policy.mode is PolicyMode.EXHAUSTIVE:
        return iter(range(ring.modulus))
    if policy.mode is PolicyMode.RESIDUE:
        return iter(range(policy.exponent))
    return iter(range(policy.bound + 1))
