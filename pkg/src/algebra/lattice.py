"""
Exact integer lattice arithmetic

Hermite and Smith normal forms, lattice sums, intersections and membership
over the integers. Every value is immutable and every entry is an exact
Python integer; numpy object arrays are used as the working storage so that
row operations stay vectorised without ever leaving arbitrary precision.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from .errors import ContainmentError, RankMismatchError

Row = Tuple[int, ...]


class ExactMatrix:
    """
    Arbitrary-precision integer matrix

    Entries are stored in a read-only numpy array of dtype ``object`` holding
    Python ints, so no arithmetic ever rounds or overflows.
    """

    __slots__ = ("_data", "_key")

    def __init__(self, rows: Iterable[Sequence[int]], cols: Optional[int] = None):
        """
        Build a matrix from row sequences.

        Args:
            rows: Iterable of integer rows, all of the same length
            cols: Column count; required when ``rows`` is empty

        Raises:
            RankMismatchError: If rows have different lengths
        """
        materialized = [tuple(int(x) for x in row) for row in rows]
        if cols is None:
            if not materialized:
                raise RankMismatchError("Column count is required for an empty matrix")
            cols = len(materialized[0])
        for row in materialized:
            if len(row) != cols:
                raise RankMismatchError(
                    f"Row of length {len(row)} in a matrix with {cols} columns"
                )
        data = np.empty((len(materialized), cols), dtype=object)
        for i, row in enumerate(materialized):
            data[i, :] = row
        data.flags.writeable = False
        self._data = data
        self._key = (cols, tuple(materialized))

    @property
    def nrows(self) -> int:
        return self._data.shape[0]

    @property
    def ncols(self) -> int:
        return self._data.shape[1]

    @property
    def data(self) -> np.ndarray:
        """Read-only view of the entries"""
        return self._data

    def rows(self) -> Tuple[Row, ...]:
        return self._key[1]

    def tolist(self) -> List[List[int]]:
        return [list(row) for row in self._key[1]]

    def working_copy(self) -> np.ndarray:
        """Writable copy for elimination routines"""
        return self._data.copy()

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactMatrix) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"ExactMatrix({self.tolist()})"


@dataclass(frozen=True)
class LatticeBasis:
    """
    Rows generating a sublattice of Z^ambient_rank.

    When ``canonical`` is set the rows are the row Hermite normal form of the
    lattice: echelon, positive pivots, entries above a pivot in [0, pivot),
    and no zero rows, so the row count is the lattice rank.
    """

    ambient_rank: int
    rows: Tuple[Row, ...]
    canonical: bool = True

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> ExactMatrix:
        return ExactMatrix(self.rows, cols=self.ambient_rank)

    def pivots(self) -> List[Tuple[int, int]]:
        """(column, value) of each pivot, top to bottom"""
        result = []
        for row in self.rows:
            col = next(j for j, x in enumerate(row) if x != 0)
            result.append((col, row[col]))
        return result

    def is_full_rank(self) -> bool:
        return self.rank == self.ambient_rank

    def determinant(self) -> int:
        """Index of a full-rank lattice in Z^k (product of pivots)"""
        if not self.is_full_rank():
            return 0
        result = 1
        for _, value in self.pivots():
            result *= value
        return result

    def __str__(self) -> str:
        return "[" + ", ".join("(" + ",".join(str(x) for x in row) + ")" for row in self.rows) + "]"


def as_matrix(rows: Iterable[Sequence[int]], cols: int) -> ExactMatrix:
    return ExactMatrix(rows, cols=cols)


def full_lattice(rank: int) -> LatticeBasis:
    """Z^rank itself"""
    return LatticeBasis(rank, tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank)))


def zero_lattice(rank: int) -> LatticeBasis:
    return LatticeBasis(rank, ())


@lru_cache(maxsize=65536)
def hnf(a: ExactMatrix) -> LatticeBasis:
    """
    Row Hermite normal form of the row span of ``a`` over Z.

    Elimination picks the nonzero entry of least absolute value as pivot,
    which keeps intermediate coefficients small.

    Args:
        a: Integer matrix; an empty matrix yields the rank-0 lattice

    Returns:
        Canonical basis of the lattice spanned by the rows of ``a``
    """
    work = a.working_copy()
    nrows, ncols = work.shape
    pivot_row = 0
    for col in range(ncols):
        if pivot_row >= nrows:
            break
        found = False
        while True:
            candidates = [r for r in range(pivot_row, nrows) if work[r, col] != 0]
            if not candidates:
                break
            found = True
            best = min(candidates, key=lambda r: abs(work[r, col]))
            if best != pivot_row:
                work[[pivot_row, best], :] = work[[best, pivot_row], :]
            pivot = work[pivot_row, col]
            cleared = True
            for r in range(pivot_row + 1, nrows):
                if work[r, col] != 0:
                    q = work[r, col] // pivot
                    work[r, :] = work[r, :] - q * work[pivot_row, :]
                    if work[r, col] != 0:
                        cleared = False
            if cleared:
                break
        if not found:
            continue
        if work[pivot_row, col] < 0:
            work[pivot_row, :] = -work[pivot_row, :]
        pivot = work[pivot_row, col]
        for r in range(pivot_row):
            q = work[r, col] // pivot
            if q:
                work[r, :] = work[r, :] - q * work[pivot_row, :]
        pivot_row += 1

    rows = tuple(tuple(int(x) for x in work[r, :]) for r in range(pivot_row))
    return LatticeBasis(ncols, rows)


def span(rows: Iterable[Sequence[int]], ambient_rank: int) -> LatticeBasis:
    """Canonical basis of the lattice generated by ``rows``"""
    return hnf(as_matrix(rows, ambient_rank))


def snf(a: ExactMatrix) -> List[int]:
    """
    Invariant factors d1 | d2 | ... | dr of the row span of ``a``.

    Only the nonzero factors are returned, so r is the rank of ``a``.
    """
    basis = hnf(a)
    if basis.rank == 0:
        return []
    factors = invariant_factors(Matrix([list(row) for row in basis.rows]), domain=ZZ)
    return sorted(abs(int(f)) for f in factors if f != 0)


def _check_same_rank(first: LatticeBasis, second: LatticeBasis) -> None:
    if first.ambient_rank != second.ambient_rank:
        raise RankMismatchError(
            f"Ambient ranks differ: {first.ambient_rank} != {second.ambient_rank}"
        )


@lru_cache(maxsize=65536)
def lattice_sum(first: LatticeBasis, second: LatticeBasis) -> LatticeBasis:
    _check_same_rank(first, second)
    return span(first.rows + second.rows, first.ambient_rank)


@lru_cache(maxsize=65536)
def lattice_intersect(first: LatticeBasis, second: LatticeBasis) -> LatticeBasis:
    """
    Intersection of two lattices.

    The stacked matrix [[A, A], [B, 0]] has, among its row-span vectors with
    a zero left half, exactly the pairs (0, w) with w in both lattices, and in
    Hermite form those vectors are spanned by the rows whose pivot lies in
    the right half.
    """
    _check_same_rank(first, second)
    k = first.ambient_rank
    if first.rank == 0 or second.rank == 0:
        return zero_lattice(k)
    zeros = (0,) * k
    stacked = [row + row for row in first.rows] + [row + zeros for row in second.rows]
    echelon = span(stacked, 2 * k)
    kernel_rows = [row[k:] for row in echelon.rows if not any(row[:k])]
    return span(kernel_rows, k)


def _reduce(basis: LatticeBasis, vector: Sequence[int]) -> Tuple[Optional[List[int]], List[int]]:
    """Back-substitute ``vector`` against a canonical basis.

    Returns the coefficient list (None when the vector is not in the lattice)
    and the remainder.
    """
    remainder = list(vector)
    coefficients = []
    for row in basis.rows:
        col = next(j for j, x in enumerate(row) if x != 0)
        q, r = divmod(remainder[col], row[col])
        if r:
            return None, remainder
        coefficients.append(q)
        if q:
            remainder = [x - q * y for x, y in zip(remainder, row)]
    if any(remainder):
        return None, remainder
    return coefficients, remainder


def lattice_contains(basis: LatticeBasis, vector: Sequence[int]) -> bool:
    """True iff ``vector`` lies in the row span of ``basis``"""
    if len(vector) != basis.ambient_rank:
        raise RankMismatchError(
            f"Vector of length {len(vector)} in a lattice of rank {basis.ambient_rank}"
        )
    coefficients, _ = _reduce(basis, vector)
    return coefficients is not None


def lattice_coordinates(basis: LatticeBasis, vector: Sequence[int]) -> Tuple[int, ...]:
    """
    Coordinates of ``vector`` with respect to the rows of ``basis``.

    Raises:
        ContainmentError: If the vector is not in the lattice
    """
    if len(vector) != basis.ambient_rank:
        raise RankMismatchError(
            f"Vector of length {len(vector)} in a lattice of rank {basis.ambient_rank}"
        )
    coefficients, _ = _reduce(basis, vector)
    if coefficients is None:
        raise ContainmentError(f"{tuple(vector)} is not in the lattice {basis}")
    return tuple(coefficients)


def lattice_contains_lattice(outer: LatticeBasis, inner: LatticeBasis) -> bool:
    _check_same_rank(outer, inner)
    return all(lattice_contains(outer, row) for row in inner.rows)


def scale_lattice(basis: LatticeBasis, factor: int) -> LatticeBasis:
    """factor * L, canonical"""
    return span([[factor * x for x in row] for row in basis.rows], basis.ambient_rank)


def reduce_vector(basis: LatticeBasis, vector: Sequence[int]) -> Tuple[int, ...]:
    """
    Canonical representative of ``vector`` modulo a canonical lattice.

    Coordinates at pivot columns end up in [0, pivot); the others are left
    as they are, so two vectors are congruent iff their representatives match.
    """
    remainder = list(vector)
    for row in basis.rows:
        col = next(j for j, x in enumerate(row) if x != 0)
        q = remainder[col] // row[col]
        if q:
            remainder = [x - q * y for x, y in zip(remainder, row)]
    return tuple(remainder)
