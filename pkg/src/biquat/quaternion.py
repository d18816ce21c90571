"""Real quaternion algebra over the basis (1, i^, j^, k^).

Multiplication is right handed: i^ j^ = k^, j^ k^ = i^, k^ i^ = j^, and
i^2 = j^2 = k^2 = i^ j^ k^ = -1.  Values are immutable 4-tuples of floats
and every operation is a pure function.
"""

from __future__ import annotations

import math
from typing import NamedTuple

__all__ = [
    "DEFAULT_TOL",
    "Quat",
    "PolarForm",
    "ONE",
    "ZERO",
    "scalar_part",
    "vector_part",
    "from_vector",
    "mul",
    "conj",
    "norm",
    "magnitude",
    "inverse",
    "inner",
    "is_perpendicular",
    "is_parallel",
    "angle_between",
    "polar",
    "from_polar",
]

# Absolute tolerance for geometric predicates; every predicate takes an
# override so callers working at other scales are not stuck with it.
DEFAULT_TOL = 1e-9


class Quat(NamedTuple):
    """Quaternion c1 + c2 i^ + c3 j^ + c4 k^."""

    c1: float
    c2: float
    c3: float
    c4: float

    def __add__(self, other):
        if not isinstance(other, Quat):
            return NotImplemented
        return Quat(self.c1 + other.c1, self.c2 + other.c2,
                    self.c3 + other.c3, self.c4 + other.c4)

    def __sub__(self, other):
        if not isinstance(other, Quat):
            return NotImplemented
        return Quat(self.c1 - other.c1, self.c2 - other.c2,
                    self.c3 - other.c3, self.c4 - other.c4)

    def __neg__(self):
        return Quat(-self.c1, -self.c2, -self.c3, -self.c4)

    def __mul__(self, other):
        if isinstance(other, Quat):
            return mul(self, other)
        if isinstance(other, (int, float)):
            return Quat(self.c1 * other, self.c2 * other,
                        self.c3 * other, self.c4 * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return Quat(other * self.c1, other * self.c2,
                        other * self.c3, other * self.c4)
        return NotImplemented


class PolarForm(NamedTuple):
    """sqrt(N) * (cos(angle) + axis * sin(angle)) with angle in [0, pi].

    ``degenerate`` marks pure-scalar inputs, whose axis is the
    conventional default (0, 0, 1) and carries no information.
    """

    magnitude: float
    axis: tuple[float, float, float]
    angle: float
    degenerate: bool = False


ZERO = Quat(0.0, 0.0, 0.0, 0.0)
ONE = Quat(1.0, 0.0, 0.0, 0.0)


def scalar_part(q: Quat) -> float:
    return q.c1


def vector_part(q: Quat) -> tuple[float, float, float]:
    return (q.c2, q.c3, q.c4)


def from_vector(v) -> Quat:
    """Pure quaternion with vector part v (a 3-sequence)."""
    x, y, z = v
    return Quat(0.0, float(x), float(y), float(z))


def mul(p: Quat, q: Quat) -> Quat:
    """Quaternion product p q."""
    return Quat(
        p.c1 * q.c1 - p.c2 * q.c2 - p.c3 * q.c3 - p.c4 * q.c4,
        p.c1 * q.c2 + p.c2 * q.c1 + p.c3 * q.c4 - p.c4 * q.c3,
        p.c1 * q.c3 - p.c2 * q.c4 + p.c3 * q.c1 + p.c4 * q.c2,
        p.c1 * q.c4 + p.c2 * q.c3 - p.c3 * q.c2 + p.c4 * q.c1,
    )


def conj(q: Quat) -> Quat:
    """Quaternion conjugate: scalar part kept, vector part negated."""
    return Quat(q.c1, -q.c2, -q.c3, -q.c4)


def norm(q: Quat) -> float:
    """Squared norm N = c1^2 + c2^2 + c3^2 + c4^2 (q conj(q) = N)."""
    return q.c1 * q.c1 + q.c2 * q.c2 + q.c3 * q.c3 + q.c4 * q.c4


def magnitude(q: Quat) -> float:
    """Euclidean length sqrt(N)."""
    return math.sqrt(norm(q))


def inverse(q: Quat) -> Quat:
    n = norm(q)
    if n == 0.0:
        raise ValueError("non-invertible: zero quaternion")
    return Quat(q.c1 / n, -q.c2 / n, -q.c3 / n, -q.c4 / n)


def inner(p: Quat, q: Quat) -> float:
    """Euclidean inner product, equal to the scalar part of p conj(q)."""
    return p.c1 * q.c1 + p.c2 * q.c2 + p.c3 * q.c3 + p.c4 * q.c4


def is_perpendicular(p: Quat, q: Quat, tol: float = DEFAULT_TOL) -> bool:
    """True when the scalar part of p conj(q) vanishes."""
    return abs(inner(p, q)) <= tol


def is_parallel(p: Quat, q: Quat, tol: float = DEFAULT_TOL) -> bool:
    """True when the vector part of p conj(q) vanishes."""
    r = mul(p, conj(q))
    return abs(r.c2) <= tol and abs(r.c3) <= tol and abs(r.c4) <= tol


def angle_between(p: Quat, q: Quat) -> float:
    """Angle lambda in [0, pi] with cos(lambda) = inner(p,q)/(|p||q|)."""
    np_, nq = norm(p), norm(q)
    if np_ == 0.0 or nq == 0.0:
        raise ValueError("angle undefined for the zero quaternion")
    c = inner(p, q) / math.sqrt(np_ * nq)
    return math.acos(max(-1.0, min(1.0, c)))


def polar(q: Quat, tol: float = DEFAULT_TOL) -> PolarForm:
    """Decompose q as sqrt(N) * (cos(theta) + qhat * sin(theta)).

    theta = atan2(|vector|, scalar) lies in [0, pi] and is stable for
    inputs near the scalar axis.  A pure-scalar q has no axis; the
    result then uses (0, 0, 1) and sets the degenerate flag, with theta
    snapped to 0 or pi by the sign of the scalar part.
    """
    n = norm(q)
    if n == 0.0:
        raise ValueError("zero quaternion has no polar form")
    mag = math.sqrt(n)
    vlen = math.sqrt(q.c2 * q.c2 + q.c3 * q.c3 + q.c4 * q.c4)
    if vlen <= tol:
        return PolarForm(mag, (0.0, 0.0, 1.0),
                         0.0 if q.c1 > 0.0 else math.pi, True)
    return PolarForm(mag, (q.c2 / vlen, q.c3 / vlen, q.c4 / vlen),
                     math.atan2(vlen, q.c1), False)


def from_polar(form: PolarForm, tol: float = DEFAULT_TOL) -> Quat:
    """Rebuild the quaternion described by a PolarForm."""
    x, y, z = form.axis
    if abs(math.sqrt(x * x + y * y + z * z) - 1.0) > tol:
        raise ValueError("axis must be a unit vector")
    c = form.magnitude * math.cos(form.angle)
    s = form.magnitude * math.sin(form.angle)
    return Quat(c, s * x, s * y, s * z)
