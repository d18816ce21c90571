"""Quaternions with complex coefficients.

The commuting imaginary unit i of the coefficient field is independent
of the anti-commuting quaternion units, so i*i^, i*j^ and i*k^ square to
+1: they realize the Pauli operators sigma_x, sigma_y, sigma_z.  Unlike
the real algebra this one has zero divisors ("null" elements q with
q * conj_quaternion(q) = 0), which makes inversion and the polar form
conditional rather than total.

Three conjugations exist and each reverses products:

* ``complex``     - conjugate every coefficient (i -> -i)
* ``quaternion``  - negate the quaternion units (i^, j^, k^ -> -...)
* ``hermitian``   - both at once
"""

from __future__ import annotations

import cmath
from typing import NamedTuple

from .quaternion import DEFAULT_TOL, Quat

__all__ = [
    "BiQuat",
    "PolarFormC",
    "CONJUGATION_KINDS",
    "from_quat",
    "real_part",
    "bmul",
    "conjugate",
    "inner_h",
    "inner_q",
    "norm_h",
    "normalized",
    "inverse_h",
    "polar_c",
    "is_central",
    "is_real",
]

CONJUGATION_KINDS = ("complex", "quaternion", "hermitian")


class BiQuat(NamedTuple):
    """Element c1 + c2 i^ + c3 j^ + c4 k^ with complex ck."""

    c1: complex
    c2: complex
    c3: complex
    c4: complex

    def __add__(self, other):
        if not isinstance(other, BiQuat):
            return NotImplemented
        return BiQuat(self.c1 + other.c1, self.c2 + other.c2,
                      self.c3 + other.c3, self.c4 + other.c4)

    def __sub__(self, other):
        if not isinstance(other, BiQuat):
            return NotImplemented
        return BiQuat(self.c1 - other.c1, self.c2 - other.c2,
                      self.c3 - other.c3, self.c4 - other.c4)

    def __neg__(self):
        return BiQuat(-self.c1, -self.c2, -self.c3, -self.c4)

    def __mul__(self, other):
        if isinstance(other, BiQuat):
            return bmul(self, other)
        if isinstance(other, (int, float, complex)):
            return BiQuat(self.c1 * other, self.c2 * other,
                          self.c3 * other, self.c4 * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex)):
            return BiQuat(other * self.c1, other * self.c2,
                          other * self.c3, other * self.c4)
        return NotImplemented


class PolarFormC(NamedTuple):
    """magnitude * (cos(angle) + axis * sin(angle)) with complex angle.

    ``axis`` is a pure biquaternion with axis*axis = -1.  ``degenerate``
    marks inputs with vanishing vector part, whose axis defaults to k^.
    """

    magnitude: complex
    axis: "BiQuat"
    angle: complex
    degenerate: bool = False


def from_quat(q: Quat) -> BiQuat:
    """Embed a real quaternion (imaginary parts zero)."""
    return BiQuat(complex(q.c1), complex(q.c2), complex(q.c3), complex(q.c4))


def real_part(q: BiQuat) -> Quat:
    return Quat(q.c1.real, q.c2.real, q.c3.real, q.c4.real)


def bmul(p: BiQuat, q: BiQuat) -> BiQuat:
    # Same expansion, term order and association as quaternion.mul so
    # that real-coefficient inputs reproduce it bit for bit.
    return BiQuat(
        p.c1 * q.c1 - p.c2 * q.c2 - p.c3 * q.c3 - p.c4 * q.c4,
        p.c1 * q.c2 + p.c2 * q.c1 + p.c3 * q.c4 - p.c4 * q.c3,
        p.c1 * q.c3 - p.c2 * q.c4 + p.c3 * q.c1 + p.c4 * q.c2,
        p.c1 * q.c4 + p.c2 * q.c3 - p.c3 * q.c2 + p.c4 * q.c1,
    )


def conjugate(q: BiQuat, kind: str) -> BiQuat:
    """One of the three conjugations; ``kind`` picks which."""
    if kind == "complex":
        return BiQuat(q.c1.conjugate(), q.c2.conjugate(),
                      q.c3.conjugate(), q.c4.conjugate())
    if kind == "quaternion":
        return BiQuat(q.c1, -q.c2, -q.c3, -q.c4)
    if kind == "hermitian":
        return BiQuat(q.c1.conjugate(), -q.c2.conjugate(),
                      -q.c3.conjugate(), -q.c4.conjugate())
    raise ValueError(f"unknown conjugation kind: {kind!r}")


def inner_h(p: BiQuat, q: BiQuat) -> complex:
    """Hermitian inner product <p|q>, the scalar part of p * q^dagger."""
    return (p.c1 * q.c1.conjugate() + p.c2 * q.c2.conjugate()
            + p.c3 * q.c3.conjugate() + p.c4 * q.c4.conjugate())


def inner_q(p: BiQuat, q: BiQuat) -> complex:
    """Quaternionic (complex bilinear) inner product, the scalar part of
    p * conj_quaternion(q).  inner_q(q, q) = 0 characterizes null q."""
    return p.c1 * q.c1 + p.c2 * q.c2 + p.c3 * q.c3 + p.c4 * q.c4


def norm_h(q: BiQuat) -> float:
    """Hermitian squared norm, the sum of |ck|^2.  Always real >= 0."""
    return (q.c1.real * q.c1.real + q.c1.imag * q.c1.imag
            + q.c2.real * q.c2.real + q.c2.imag * q.c2.imag
            + q.c3.real * q.c3.real + q.c3.imag * q.c3.imag
            + q.c4.real * q.c4.real + q.c4.imag * q.c4.imag)


def normalized(q: BiQuat) -> BiQuat:
    """Scale q to unit Hermitian norm."""
    n = norm_h(q)
    if n == 0.0:
        raise ValueError("cannot normalize the zero biquaternion")
    s = 1.0 / (n ** 0.5)
    return BiQuat(q.c1 * s, q.c2 * s, q.c3 * s, q.c4 * s)


def is_real(q: BiQuat, tol: float = DEFAULT_TOL) -> bool:
    """True when every coefficient is real within tol."""
    return (abs(q.c1.imag) <= tol and abs(q.c2.imag) <= tol
            and abs(q.c3.imag) <= tol and abs(q.c4.imag) <= tol)


def _is_imaginary(q: BiQuat, tol: float) -> bool:
    return (abs(q.c1.real) <= tol and abs(q.c2.real) <= tol
            and abs(q.c3.real) <= tol and abs(q.c4.real) <= tol)


def inverse_h(q: BiQuat, tol: float = DEFAULT_TOL) -> BiQuat:
    """Inverse q^dagger / norm_h(q).

    Valid only when conjugate(q, "complex") = +-q, i.e. the coefficients
    are all real or all imaginary; then q * q^dagger is the real scalar
    norm_h(q).  Other inputs raise, as do null/zero ones.
    """
    if not (is_real(q, tol) or _is_imaginary(q, tol)):
        raise ValueError(
            "inverse formula inapplicable: coefficients are neither all "
            "real nor all imaginary")
    n = norm_h(q)
    if n == 0.0:
        raise ValueError("non-invertible: zero biquaternion")
    d = conjugate(q, "hermitian")
    return BiQuat(d.c1 / n, d.c2 / n, d.c3 / n, d.c4 / n)


def polar_c(q: BiQuat, tol: float = DEFAULT_TOL) -> PolarFormC:
    """Complex polar decomposition magnitude * (cos z + axis sin z).

    magnitude is the principal square root of inner_q(q, q), so null
    biquaternions (inner_q(q, q) = 0) have no polar form and raise.  The
    same holds when the vector part is nonzero yet null, since no unit
    axis exists for it.  All branch choices are principal.
    """
    n = inner_q(q, q)
    if abs(n) <= tol:
        raise ValueError("no polar form: null biquaternion")
    mag = cmath.sqrt(n)
    v2 = q.c2 * q.c2 + q.c3 * q.c3 + q.c4 * q.c4
    s = cmath.sqrt(v2)
    if abs(s) <= tol:
        if max(abs(q.c2), abs(q.c3), abs(q.c4)) > tol:
            raise ValueError("no polar form: null vector part")
        # Pure scalar: cos z = c1/mag is +-1 and the axis is conventional.
        z = -1j * cmath.log(q.c1 / mag)
        return PolarFormC(mag, BiQuat(0j, 0j, 0j, 1 + 0j), z, True)
    axis = BiQuat(0j, q.c2 / s, q.c3 / s, q.c4 / s)
    # exp(iz) = cos z + i sin z determines z through the principal log.
    z = -1j * cmath.log(q.c1 / mag + 1j * (s / mag))
    return PolarFormC(mag, axis, z, False)


def is_central(q: BiQuat, tol: float = DEFAULT_TOL) -> bool:
    """True when q commutes with everything (vector part vanishes)."""
    return abs(q.c2) <= tol and abs(q.c3) <= tol and abs(q.c4) <= tol
