"""Integer lattices of rank <= 4 inside the quaternion algebra.

A lattice is stored with an explicit ordered basis of quaternions.  Its
canonical form clears denominators and takes the row Hermite normal form in
the trailing-pivot convention; two lattices are equal iff the canonical
bases coincide.  Constructors that canonicalize (``Lattice.from_generators``)
return the HNF basis, while operations that care about a particular basis
(Minkowski reduction) keep their own ordering.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import (
    AlgebraMismatch,
    ContainmentError,
    EmptyLatticeInput,
    RankError,
)
from .linalg import det_fractions, hnf_pivot_product, hnf_rows, rational_rank, solve_left
from .quat import AlgebraParams, Quaternion, gross_map, inner, rat_str
from .reduction import greedy_reduce


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric matrix of pairwise inner products (1/2)Trd(b_i * conj(b_j))."""

    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_quaternions(cls, basis) -> "GramMatrix":
        rows = tuple(tuple(inner(u, v) for v in basis) for u in basis)
        return cls(rows)

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def diagonal(self) -> tuple[Fraction, ...]:
        return tuple(self.entries[i][i] for i in range(self.size))

    def det(self) -> Fraction:
        if self.size == 0:
            return Fraction(1)
        return det_fractions([list(r) for r in self.entries])

    def is_positive_definite(self) -> bool:
        for k in range(1, self.size + 1):
            minor = [list(r[:k]) for r in self.entries[:k]]
            if det_fractions(minor) <= 0:
                return False
        return True

    def is_integral(self) -> bool:
        return all(e.denominator == 1 for row in self.entries for e in row)

    def to_strings(self) -> list[list[str]]:
        return [[rat_str(e) for e in row] for row in self.entries]


class Lattice:
    """Finitely generated Z-lattice in the algebra, with an ordered basis."""

    __slots__ = ("algebra", "basis", "_canonical")

    def __init__(self, algebra: AlgebraParams, basis, *, _assume_independent: bool = False):
        basis = tuple(basis)
        for q in basis:
            if q.algebra != algebra:
                raise AlgebraMismatch("basis vector from a different algebra")
        if not _assume_independent and basis:
            coords = [list(q.coords) for q in basis]
            if rational_rank(coords) != len(basis):
                raise RankError("basis vectors are linearly dependent")
        self.algebra = algebra
        self.basis = basis
        self._canonical = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_generators(cls, algebra: AlgebraParams, generators) -> "Lattice":
        """Lattice generated by arbitrary (possibly dependent) quaternions."""
        generators = list(generators)
        if not generators:
            raise EmptyLatticeInput("no generators supplied")
        for q in generators:
            if q.algebra != algebra:
                raise AlgebraMismatch("generator from a different algebra")
        basis = _canonical_basis(algebra, generators)
        lat = cls(algebra, basis, _assume_independent=True)
        lat._canonical = basis
        return lat

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def canonical_basis(self) -> tuple[Quaternion, ...]:
        if self._canonical is None:
            if self.basis:
                self._canonical = _canonical_basis(self.algebra, list(self.basis))
            else:
                self._canonical = ()
        return self._canonical

    def __eq__(self, other) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        return (self.algebra == other.algebra
                and self.canonical_basis == other.canonical_basis)

    def __hash__(self) -> int:
        return hash((self.algebra, self.canonical_basis))

    def __repr__(self) -> str:
        return f"Lattice(rank={self.rank}, basis={[str(b) for b in self.basis]})"

    # -- membership --------------------------------------------------------

    def coords_of(self, x: Quaternion) -> tuple[int, ...] | None:
        """Integer coordinates of x in this basis, or None when x is not a member."""
        if x.algebra != self.algebra:
            raise AlgebraMismatch("element from a different algebra")
        if self.rank == 0:
            return () if not x else None
        rows = [list(q.coords) for q in self.basis]
        sol = solve_left(rows, list(x.coords))
        if sol is None or any(c.denominator != 1 for c in sol):
            return None
        ints = tuple(int(c) for c in sol)
        check = self.algebra.quat()
        for c, b in zip(ints, self.basis):
            check = check + c * b
        return ints if check == x else None

    def contains(self, x: Quaternion) -> bool:
        return self.coords_of(x) is not None

    # -- invariants ----------------------------------------------------------

    def gram(self) -> GramMatrix:
        return GramMatrix.from_quaternions(self.basis)

    def det(self) -> Fraction:
        """Gram determinant; invariant under unimodular basis change."""
        return self.gram().det()

    def index_in(self, sup: "Lattice") -> int:
        """Index [sup : self] for a finite-index sublattice of equal rank."""
        if self.algebra != sup.algebra:
            raise AlgebraMismatch("lattices in different algebras")
        if self.rank != sup.rank:
            raise ContainmentError(
                f"rank mismatch: {self.rank} vs {sup.rank}")
        if self.rank == 0:
            return 1
        coord_rows = []
        for b in self.basis:
            c = sup.coords_of(b)
            if c is None:
                raise ContainmentError(f"{b} is not in the claimed superlattice")
            coord_rows.append(list(c))
        return hnf_pivot_product(coord_rows)

    # -- derived lattices ----------------------------------------------------

    def gross_image(self) -> "Lattice":
        """Lattice {2x - Trd(x) : x in L}; drops one rank for a unital order."""
        if not self.basis:
            return Lattice(self.algebra, ())
        images = [gross_map(b) for b in self.basis]
        if not any(images):
            return Lattice(self.algebra, ())
        return Lattice.from_generators(self.algebra, images)

    def minkowski_reduced(self) -> "Lattice":
        """Basis achieving the successive minima (rank <= 3, greedy reduction).

        The result spans the same lattice; its Gram diagonal is nondecreasing.
        Ties are broken by coordinate order with the first nonzero coordinate
        of every basis vector made positive.
        """
        if self.rank > 3:
            raise RankError("reduction is only supported up to rank 3")
        if self.rank == 0:
            return self
        gram = self.gram()
        if not gram.is_positive_definite():
            raise RankError("Gram matrix is not positive definite")
        start = self.canonical_basis
        g0 = [[inner(u, v) for v in start] for u in start]
        transform = greedy_reduce(g0)
        vecs = []
        for row in transform:
            v = self.algebra.quat()
            for c, b in zip(row, start):
                v = v + c * b
            vecs.append(_canonical_sign(v))
        vecs.sort(key=lambda q: (q.reduced_norm(), q.coords))
        return Lattice(self.algebra, vecs, _assume_independent=True)

    # -- serialization ---------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra.to_dict(),
            "basis": [b.to_coord_strings() for b in self.canonical_basis],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Lattice":
        algebra = AlgebraParams.from_dict(data["algebra"])
        gens = [algebra.from_coord_strings(row) for row in data["basis"]]
        if not gens:
            return cls(algebra, ())
        return cls.from_generators(algebra, gens)


def _canonical_sign(q: Quaternion) -> Quaternion:
    for c in q.coords:
        if c > 0:
            return q
        if c < 0:
            return -q
    return q


def _canonical_basis(algebra: AlgebraParams, generators) -> tuple[Quaternion, ...]:
    scale = lcm(*(c.denominator for q in generators for c in q.coords))
    rows = [[int(c * scale) for c in q.coords] for q in generators]
    hnf = hnf_rows(rows)
    return tuple(
        algebra.quat(*(Fraction(e, scale) for e in row)) for row in hnf
    )
