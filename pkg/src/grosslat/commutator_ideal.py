"""Explicit bases for the commutator ideal of a maximal order.

With normalized order basis {1, a1, a2, a3}, the four brackets
{[a1,a2], [a1,a3], [a2,a3], a1*[a2,a3]} span the commutator ideal, which
equals the ideal of elements of norm divisible by p and has index p^2.
The three brackets alone span its trace-zero sublattice; in terms of the
Gross basis b_i = 2a_i - Trd(a_i) they are (b_i b_j - b_j b_i)/4.
"""

from __future__ import annotations

from .errors import NotMaximal
from .lattice import Lattice
from .orders import Order
from .quat import Quaternion, commutator


def commutator_basis(order: Order) -> Lattice:
    """Rank-4 lattice spanned by the bracket basis; index p^2 in the order."""
    if not order.is_maximal():
        raise NotMaximal("the bracket basis spans the norm ideal only for maximal orders")
    _, a1, a2, a3 = order.normalized_basis()
    c12 = commutator(a1, a2)
    c13 = commutator(a1, a3)
    c23 = commutator(a2, a3)
    return Lattice.from_generators(order.algebra, [c12, c13, c23, a1 * c23])


def trace_zero_commutator_basis(order: Order) -> tuple[Quaternion, Quaternion, Quaternion]:
    """Ordered basis of the trace-zero sublattice of the commutator ideal.

    Kept as an ordered triple (not canonicalized): the correspondence between
    trace-zero elements and coefficient matrices needs coordinates in exactly
    this basis.
    """
    if not order.is_maximal():
        raise NotMaximal("requires a maximal order")
    b1, b2, b3 = order.gross_basis()
    return (
        (b1 * b2 - b2 * b1) / 4,
        (b1 * b3 - b3 * b1) / 4,
        (b2 * b3 - b3 * b2) / 4,
    )
