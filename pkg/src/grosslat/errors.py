"""Exception types shared across the package."""


class AlgebraMismatch(ValueError):
    """Operands live in quaternion algebras with different parameters."""


class EmptyLatticeInput(ValueError):
    """A lattice constructor received no generators at all."""


class RankError(ValueError):
    """Operation requires a lattice of a different rank."""


class ContainmentError(ValueError):
    """Expected sublattice relation (inclusion, equal rank) does not hold."""


class IntegralityError(ValueError):
    """Element fails an integrality requirement (trace or norm not in Z)."""


class NotAnOrder(ValueError):
    """Rank-4 lattice is not a unital, multiplicatively closed, integral ring."""


class NotMaximal(ValueError):
    """Operation requires a maximal order."""


class LiftError(ValueError):
    """Trace-zero triple cannot be lifted to an order basis."""


class SaturationError(RuntimeError):
    """Order saturation could not reach the target discriminant."""


class MembershipError(ValueError):
    """Element is not in the lattice the operation requires."""


class TraceError(ValueError):
    """Element has the wrong reduced trace for this operation."""


class NormError(ValueError):
    """Element has the wrong reduced norm for this operation."""


class DegeneratePair(ValueError):
    """Pair of vectors is linearly dependent (zero determinant)."""


class DefinitenessError(ValueError):
    """Quadratic form or Gram matrix is not positive definite."""


class AlgebraInconsistency(RuntimeError):
    """Internal consistency check failed; the algebra parameters are suspect."""
