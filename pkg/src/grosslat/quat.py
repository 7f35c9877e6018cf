"""Exact arithmetic in the definite rational quaternion algebra (-a, -p | Q).

Elements are written over the fixed basis {1, i, j, k} with i^2 = -a,
j^2 = -p and k = ij = -ji.  All coordinates are exact rationals
(fractions.Fraction), so no operation ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import AlgebraMismatch
from .linalg import is_prime

RatLike = Union[int, str, Fraction]


def as_fraction(value: RatLike) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def rat_str(value: Fraction) -> str:
    """Wire format for rationals: "11/2", or "11" when the denominator is 1."""
    return str(value)


@dataclass(frozen=True)
class AlgebraParams:
    """Parameters (a, p) of the algebra: i^2 = -a, j^2 = -p, k = ij."""

    a: int
    p: int

    def __post_init__(self) -> None:
        if self.a < 1:
            raise ValueError(f"a must be a positive integer, got {self.a}")
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")

    def quat(self, w: RatLike = 0, x: RatLike = 0, y: RatLike = 0, z: RatLike = 0) -> "Quaternion":
        return Quaternion(self, as_fraction(w), as_fraction(x), as_fraction(y), as_fraction(z))

    def scalar(self, value: RatLike) -> "Quaternion":
        return self.quat(value)

    @property
    def one(self) -> "Quaternion":
        return self.quat(1)

    @property
    def i(self) -> "Quaternion":
        return self.quat(0, 1)

    @property
    def j(self) -> "Quaternion":
        return self.quat(0, 0, 1)

    @property
    def k(self) -> "Quaternion":
        return self.quat(0, 0, 0, 1)

    def from_coord_strings(self, coords) -> "Quaternion":
        if len(coords) != 4:
            raise ValueError("quaternion coordinates must have length 4")
        return self.quat(*coords)

    def to_dict(self) -> dict:
        return {"a": self.a, "p": self.p}

    @classmethod
    def from_dict(cls, data: dict) -> "AlgebraParams":
        return cls(int(data["a"]), int(data["p"]))


@dataclass(frozen=True)
class Quaternion:
    """Element w + x*i + y*j + z*k with exact rational coordinates."""

    algebra: AlgebraParams
    w: Fraction
    x: Fraction
    y: Fraction
    z: Fraction

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.w, self.x, self.y, self.z)

    def _check_same_algebra(self, other: "Quaternion") -> None:
        if self.algebra != other.algebra:
            raise AlgebraMismatch(
                f"operands in different algebras: {self.algebra} vs {other.algebra}"
            )

    def __add__(self, other):
        if isinstance(other, Quaternion):
            self._check_same_algebra(other)
            return Quaternion(self.algebra, self.w + other.w, self.x + other.x,
                              self.y + other.y, self.z + other.z)
        if isinstance(other, (int, Fraction)):
            return Quaternion(self.algebra, self.w + other, self.x, self.y, self.z)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Quaternion):
            self._check_same_algebra(other)
            return Quaternion(self.algebra, self.w - other.w, self.x - other.x,
                              self.y - other.y, self.z - other.z)
        if isinstance(other, (int, Fraction)):
            return Quaternion(self.algebra, self.w - other, self.x, self.y, self.z)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return Quaternion(self.algebra, other - self.w, -self.x, -self.y, -self.z)
        return NotImplemented

    def __neg__(self) -> "Quaternion":
        return Quaternion(self.algebra, -self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            self._check_same_algebra(other)
            a = self.algebra.a
            p = self.algebra.p
            w1, x1, y1, z1 = self.coords
            w2, x2, y2, z2 = other.coords
            return Quaternion(
                self.algebra,
                w1 * w2 - a * x1 * x2 - p * y1 * y2 - a * p * z1 * z2,
                w1 * x2 + x1 * w2 + p * (y1 * z2 - z1 * y2),
                w1 * y2 + y1 * w2 + a * (z1 * x2 - x1 * z2),
                w1 * z2 + z1 * w2 + (x1 * y2 - y1 * x2),
            )
        if isinstance(other, (int, Fraction)):
            return Quaternion(self.algebra, self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Quaternion(self.algebra, self.w / other, self.x / other,
                              self.y / other, self.z / other)
        return NotImplemented

    def __bool__(self) -> bool:
        return any(self.coords)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.algebra, self.w, -self.x, -self.y, -self.z)

    def reduced_trace(self) -> Fraction:
        return 2 * self.w

    def reduced_norm(self) -> Fraction:
        a = self.algebra.a
        p = self.algebra.p
        return self.w ** 2 + a * self.x ** 2 + p * self.y ** 2 + a * p * self.z ** 2

    def is_integral(self) -> bool:
        """True when both the reduced trace and reduced norm are integers."""
        return self.reduced_trace().denominator == 1 and self.reduced_norm().denominator == 1

    def to_coord_strings(self) -> list[str]:
        return [rat_str(c) for c in self.coords]

    def __str__(self) -> str:
        parts = []
        for value, label in zip(self.coords, ("", "i", "j", "k")):
            if value == 0:
                continue
            mag = abs(value)
            body = label if (mag == 1 and label) else (f"{mag}{label}" if label else f"{mag}")
            if not parts:
                parts.append(body if value > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if value > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"Quaternion({self})"


def inner(x: Quaternion, y: Quaternion) -> Fraction:
    """Inner product (1/2)*Trd(x * conj(y)); inner(x, x) = Nrd(x)."""
    x._check_same_algebra(y)
    a = x.algebra.a
    p = x.algebra.p
    return x.w * y.w + a * x.x * y.x + p * x.y * y.y + a * p * x.z * y.z


def gross_map(x: Quaternion) -> Quaternion:
    """The doubled trace-zero projection x -> 2x - Trd(x)."""
    return Quaternion(x.algebra, Fraction(0), 2 * x.x, 2 * x.y, 2 * x.z)


def commutator(x: Quaternion, y: Quaternion) -> Quaternion:
    """The bracket x*y - y*x; always has reduced trace zero."""
    x._check_same_algebra(y)
    return x * y - y * x
