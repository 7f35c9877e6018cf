"""Orders in the definite quaternion algebra.

An order is a rank-4 lattice containing 1, closed under multiplication,
whose elements are all integral.  A maximal order has reduced discriminant
exactly p; non-maximal orders are enlarged by scanning cosets of (1/q)O
for integral elements whose adjunction shrinks the discriminant.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import isqrt

from .errors import (
    AlgebraInconsistency,
    IntegralityError,
    LiftError,
    NotAnOrder,
    NotMaximal,
    RankError,
    SaturationError,
)
from .lattice import Lattice
from .linalg import smallest_prime_factor
from .quat import AlgebraParams, Quaternion, gross_map, inner


def is_order(lattice: Lattice) -> bool:
    """True iff the rank-4 lattice is a unital, closed, integral ring."""
    if lattice.rank != 4:
        raise RankError(f"an order must have rank 4, got {lattice.rank}")
    if not lattice.contains(lattice.algebra.one):
        return False
    basis = lattice.basis
    for b in basis:
        if not b.is_integral():
            return False
    for u in basis:
        for v in basis:
            if not lattice.contains(u * v):
                return False
    return True


class Order:
    """A verified order; construction raises NotAnOrder when the axioms fail."""

    __slots__ = ("lattice", "verified_ring", "_verified_maximal", "_discriminant",
                 "_gross_lattice")

    def __init__(self, lattice: Lattice):
        if lattice.rank != 4:
            raise RankError(f"an order must have rank 4, got {lattice.rank}")
        if not lattice.contains(lattice.algebra.one):
            raise NotAnOrder("lattice does not contain 1")
        for b in lattice.basis:
            if not b.is_integral():
                raise NotAnOrder(f"basis element {b} is not integral")
        for u in lattice.basis:
            for v in lattice.basis:
                prod = u * v
                if not prod.is_integral():
                    raise NotAnOrder(f"product {u} * {v} is not integral")
                if not lattice.contains(prod):
                    raise NotAnOrder(f"not closed under multiplication: {u} * {v}")
        self.lattice = lattice
        self.verified_ring = True
        self._verified_maximal: bool | None = None
        self._discriminant: int | None = None
        self._gross_lattice: Lattice | None = None

    @property
    def algebra(self) -> AlgebraParams:
        return self.lattice.algebra

    def __eq__(self, other) -> bool:
        if not isinstance(other, Order):
            return NotImplemented
        return self.lattice == other.lattice

    def __hash__(self) -> int:
        return hash(self.lattice)

    def __repr__(self) -> str:
        return f"Order({self.lattice!r})"

    def contains(self, x: Quaternion) -> bool:
        return self.lattice.contains(x)

    # -- discriminant and maximality -------------------------------------

    def reduced_discriminant(self) -> int:
        """Square root of |det Trd(b_i * conj(b_j))|; equals p iff maximal."""
        if self._discriminant is None:
            d = 16 * self.lattice.det()
            if d.denominator != 1:
                raise AlgebraInconsistency("trace form determinant is not an integer")
            n = int(d)
            r = isqrt(n)
            if r * r != n:
                raise AlgebraInconsistency("trace form determinant is not a square")
            self._discriminant = r
        return self._discriminant

    def is_maximal(self) -> bool:
        if self._verified_maximal is None:
            self._verified_maximal = self.reduced_discriminant() == self.algebra.p
        return self._verified_maximal

    # -- normalized and Gross bases ----------------------------------------

    def normalized_basis(self) -> tuple[Quaternion, Quaternion, Quaternion, Quaternion]:
        """Canonical basis in the shape {1, a1, a2, a3}.

        The trailing-pivot HNF of an order always exposes 1 as its first
        basis vector, with the scalar parts of the rest reduced into [0, 1).
        """
        basis = self.lattice.canonical_basis
        if basis[0] != self.algebra.one:
            raise AlgebraInconsistency("canonical order basis does not start with 1")
        return basis

    def gross_basis(self) -> tuple[Quaternion, Quaternion, Quaternion]:
        """Images 2x - Trd(x) of the non-unit normalized basis vectors."""
        _, a1, a2, a3 = self.normalized_basis()
        return (gross_map(a1), gross_map(a2), gross_map(a3))

    def gross_lattice(self) -> Lattice:
        if self._gross_lattice is None:
            self._gross_lattice = self.lattice.gross_image()
        return self._gross_lattice

    # -- the ideal of norms divisible by p -----------------------------------

    def norm_p_ideal(self) -> Lattice:
        """The lattice {x in O : p | Nrd(x)}, by scanning the p^4 classes of O/pO.

        The norm-divisible classes must form a subgroup of order p^2; the
        result is the unique maximal two-sided ideal of reduced norm p.
        """
        p = self.algebra.p
        if not self.is_maximal():
            raise NotMaximal("norm ideal scan requires a maximal order")
        basis = self.lattice.canonical_basis
        norms = [int(inner(b, b)) for b in basis]
        cross = [[int(2 * inner(basis[i], basis[j])) % p for j in range(4)] for i in range(4)]
        classes = []
        rng = range(p)
        n0, n1, n2, n3 = (n % p for n in norms)
        for c0 in rng:
            a0 = n0 * c0 * c0
            t01, t02, t03 = cross[0][1] * c0, cross[0][2] * c0, cross[0][3] * c0
            for c1 in rng:
                a1 = a0 + (n1 * c1 + t01) * c1
                t12, t13 = cross[1][2] * c1, cross[1][3] * c1
                for c2 in rng:
                    a2 = a1 + (n2 * c2 + t02 + t12) * c2
                    t23 = cross[2][3] * c2
                    lin3 = t03 + t13 + t23
                    for c3 in rng:
                        if (a2 + (n3 * c3 + lin3) * c3) % p == 0:
                            classes.append((c0, c1, c2, c3))
        if len(classes) != p * p:
            raise AlgebraInconsistency(
                f"norm-divisible classes: expected {p * p}, found {len(classes)}")
        members = set(classes)
        gens = _subgroup_generators(members, p)
        if gens is None:
            raise AlgebraInconsistency("norm-divisible classes do not form a subgroup")
        lifts = []
        for g in gens:
            q = self.algebra.quat()
            for c, b in zip(g, basis):
                q = q + c * b
            lifts.append(q)
        generators = [p * b for b in basis] + lifts
        return Lattice.from_generators(self.algebra, generators)


def _subgroup_generators(members: set, p: int):
    """Two F_p-independent generators whose span equals the member set, or None."""
    nonzero = sorted(m for m in members if any(m))
    if not nonzero:
        return None
    g1 = nonzero[0]
    span1 = {tuple((k * c) % p for c in g1) for k in range(p)}
    g2 = next((m for m in nonzero if m not in span1), None)
    if g2 is None:
        return None
    span = {
        tuple((k1 * c1 + k2 * c2) % p for c1, c2 in zip(g1, g2))
        for k1 in range(p)
        for k2 in range(p)
    }
    if span != members:
        return None
    return g1, g2


# -- constructors ------------------------------------------------------------


def order_from_pair(alpha: Quaternion, beta: Quaternion) -> Order:
    """The order with module basis {1, alpha, beta, alpha*beta}.

    Requires alpha and beta integral with integral Trd(alpha*beta); the four
    elements must be linearly independent.
    """
    alpha._check_same_algebra(beta)
    algebra = alpha.algebra
    if not alpha.is_integral():
        raise IntegralityError(f"{alpha} is not integral")
    if not beta.is_integral():
        raise IntegralityError(f"{beta} is not integral")
    prod = alpha * beta
    if prod.reduced_trace().denominator != 1:
        raise IntegralityError(f"Trd(alpha*beta) = {prod.reduced_trace()} is not an integer")
    gens = [algebra.one, alpha, beta, prod]
    lat = Lattice.from_generators(algebra, gens)
    if lat.rank != 4:
        raise RankError("1, alpha, beta, alpha*beta are linearly dependent")
    return Order(lat)


def lift_gross_basis(b1: Quaternion, b2: Quaternion, b3: Quaternion) -> Order:
    """Order with basis {1, (t1+b1)/2, (t2+b2)/2, (t3+b3)/2}, t_i in {0, 1}.

    Each parity t_i is forced by integrality of (t_i^2 + Nrd(b_i))/4; the
    minimal choice makes the output deterministic.  Raises LiftError when no
    parity works or when the lifted module is not an order.
    """
    algebra = b1.algebra
    lifted = []
    for b in (b1, b2, b3):
        if b.algebra != algebra:
            raise LiftError("Gross basis vectors in different algebras")
        if b.reduced_trace() != 0:
            raise LiftError(f"{b} does not have trace zero")
        norm = b.reduced_norm()
        if norm.denominator != 1:
            raise LiftError(f"Nrd({b}) is not an integer")
        t = next((t for t in (0, 1) if (t * t + int(norm)) % 4 == 0), None)
        if t is None:
            raise LiftError(f"no parity makes (t^2 + {norm})/4 integral")
        lifted.append((t + b) / 2)
    lat = Lattice.from_generators(algebra, [algebra.one, *lifted])
    if lat.rank != 4:
        raise LiftError("lifted vectors are linearly dependent")
    try:
        return Order(lat)
    except NotAnOrder as exc:
        raise LiftError(f"lifted module is not an order: {exc}") from exc


def extend_to_maximal(order: Order) -> Order:
    """Enlarge an order until its reduced discriminant equals p.

    For each prime q dividing the discriminant cofactor, the q^4 cosets of
    (1/q)O over O are scanned for an integral element whose adjunction
    (closed under multiplication, iterated to stability) strictly shrinks
    the discriminant.
    """
    p = order.algebra.p
    current = order
    while True:
        disc = current.reduced_discriminant()
        if disc == p:
            current._verified_maximal = True
            return current
        if disc % p:
            raise SaturationError(
                f"discriminant {disc} is not a multiple of p = {p}")
        q = smallest_prime_factor(disc // p)
        enlarged = _enlarge_once(current, q)
        if enlarged is None:
            raise SaturationError(
                f"no enlarging element found at q = {q}, discriminant {disc}")
        current = enlarged


def _enlarge_once(order: Order, q: int) -> Order | None:
    basis = order.lattice.canonical_basis
    disc = order.reduced_discriminant()
    for coeffs in product(range(q), repeat=4):
        if not any(coeffs):
            continue
        x = order.algebra.quat()
        for c, b in zip(coeffs, basis):
            x = x + c * b
        x = x / q
        if not x.is_integral():
            continue
        closed = _adjoin(order, x)
        if closed is None:
            continue
        try:
            candidate = Order(closed)
        except NotAnOrder:
            continue
        if candidate.reduced_discriminant() < disc:
            return candidate
    return None


def _adjoin(order: Order, x: Quaternion) -> Lattice | None:
    """Smallest multiplicatively closed lattice containing O and x, or None.

    Iterated closure; bails out when a basis element goes non-integral or the
    covolume drops below that of a maximal order (det Gram < p^2 / 16).
    """
    p = order.algebra.p
    floor_det = Fraction(p * p, 16)
    current = Lattice.from_generators(order.algebra, [*order.lattice.basis, x])
    for _ in range(64):
        if current.rank != 4 or current.det() < floor_det:
            return None
        if not all(b.is_integral() for b in current.basis):
            return None
        basis = current.basis
        new_products = []
        for u in basis:
            for v in basis:
                prod = u * v
                if not current.contains(prod):
                    new_products.append(prod)
        if not new_products:
            return current
        current = Lattice.from_generators(order.algebra, [*basis, *new_products])
    return None
