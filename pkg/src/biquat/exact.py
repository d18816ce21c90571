"""Exact rational arithmetic for complexified quaternions.

This is the oracle side of a dual-route design: elements live as eight
rational coordinates over the real basis

    (1, i^, j^, k^, i, i i^, i j^, i k^)

and products are accumulated through an explicit structure-constant
table derived from the defining relations alone.  Nothing here touches
the floating complex-coefficient path in ``biquaternion``, so agreement
between the two is evidence, not tautology.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "ExactScalar",
    "ExactBiQuat",
    "STRUCTURE",
    "oracle_mul",
    "exact_conj",
    "check_basis_associativity",
    "random_rational",
    "random_dyadic",
    "random_exact_biquat",
]

_Rational = (int, Fraction)


@dataclass(frozen=True)
class ExactScalar:
    """Complex number with exact rational real and imaginary parts."""

    re: Fraction
    im: Fraction

    @classmethod
    def of(cls, re, im=0) -> "ExactScalar":
        return cls(Fraction(re), Fraction(im))

    def __add__(self, other):
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return ExactScalar(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return ExactScalar(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return ExactScalar(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, ExactScalar):
            return ExactScalar(self.re * other.re - self.im * other.im,
                               self.re * other.im + self.im * other.re)
        if isinstance(other, _Rational):
            return ExactScalar(self.re * other, self.im * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, _Rational):
            return ExactScalar(self.re * other, self.im * other)
        return NotImplemented

    def conjugate(self) -> "ExactScalar":
        return ExactScalar(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


_ZERO = ExactScalar(Fraction(0), Fraction(0))


def _hamilton_table():
    # Products of (1, i^, j^, k^) as (sign, unit index).
    return (
        ((1, 0), (1, 1), (1, 2), (1, 3)),
        ((1, 1), (-1, 0), (1, 3), (-1, 2)),
        ((1, 2), (-1, 3), (-1, 0), (1, 1)),
        ((1, 3), (1, 2), (-1, 1), (-1, 0)),
    )


def _build_structure():
    """8x8 table of (sign, index): basis[a] * basis[b] = sign * basis[index].

    Index a = 4*s + u encodes i^s times the quaternion unit u; the
    commuting i contributes only the sign flip when both factors carry it.
    """
    ham = _hamilton_table()
    table = []
    for a in range(8):
        sa, ua = divmod(a, 4)
        row = []
        for b in range(8):
            sb, ub = divmod(b, 4)
            sign, uc = ham[ua][ub]
            if sa and sb:
                sign = -sign
            row.append((sign, ((sa + sb) % 2) * 4 + uc))
        table.append(tuple(row))
    return tuple(table)


STRUCTURE = _build_structure()


@dataclass(frozen=True)
class ExactBiQuat:
    """Eight exact rational coordinates over the basis above.

    coords[0:4] are the real parts of c1..c4, coords[4:8] the imaginary
    parts.
    """

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != 8:
            raise ValueError("ExactBiQuat needs exactly 8 coordinates")
        object.__setattr__(
            self, "coords", tuple(Fraction(c) for c in self.coords))

    @classmethod
    def from_scalars(cls, scalars) -> "ExactBiQuat":
        s1, s2, s3, s4 = scalars
        return cls((s1.re, s2.re, s3.re, s4.re, s1.im, s2.im, s3.im, s4.im))

    @classmethod
    def from_biquat(cls, q) -> "ExactBiQuat":
        # Fraction(float) is exact, so this embedding loses nothing.
        return cls(tuple(Fraction(complex(c).real) for c in q)
                   + tuple(Fraction(complex(c).imag) for c in q))

    def component(self, k: int) -> ExactScalar:
        """1-based complex coefficient ck."""
        return ExactScalar(self.coords[k - 1], self.coords[k + 3])

    def scalars(self) -> tuple[ExactScalar, ...]:
        return tuple(self.component(k) for k in (1, 2, 3, 4))

    def to_floats(self) -> tuple[complex, complex, complex, complex]:
        c = self.coords
        return tuple(complex(float(c[k]), float(c[k + 4])) for k in range(4))

    def __add__(self, other):
        if not isinstance(other, ExactBiQuat):
            return NotImplemented
        return ExactBiQuat(tuple(a + b
                                 for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, ExactBiQuat):
            return NotImplemented
        return ExactBiQuat(tuple(a - b
                                 for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return ExactBiQuat(tuple(-a for a in self.coords))

    def __str__(self) -> str:
        return "(" + ", ".join(str(s) for s in self.scalars()) + ")"


def _over_common_den(x: ExactBiQuat) -> tuple[list[int], int]:
    den = math.lcm(*(c.denominator for c in x.coords))
    return [c.numerator * (den // c.denominator) for c in x.coords], den


def oracle_mul(p: ExactBiQuat, q: ExactBiQuat) -> ExactBiQuat:
    """Exact product accumulated through the structure-constant table."""
    pn, pd = _over_common_den(p)
    qn, qd = _over_common_den(q)
    out = [0] * 8
    for a, pa in enumerate(pn):
        if not pa:
            continue
        row = STRUCTURE[a]
        for b, qb in enumerate(qn):
            if qb:
                sign, c = row[b]
                out[c] += pa * qb if sign > 0 else -(pa * qb)
    den = pd * qd
    return ExactBiQuat(tuple(Fraction(n, den) for n in out))


# Coordinate sets negated by each conjugation (complex / quaternion
# conjugation flip i resp. the units; hermitian is their composition).
_CONJ_FLIPS = {
    "complex": (4, 5, 6, 7),
    "quaternion": (1, 2, 3, 5, 6, 7),
    "hermitian": (1, 2, 3, 4),
}


def exact_conj(x: ExactBiQuat, kind: str) -> ExactBiQuat:
    try:
        flips = _CONJ_FLIPS[kind]
    except KeyError:
        raise ValueError(f"unknown conjugation kind: {kind!r}") from None
    c = list(x.coords)
    for k in flips:
        c[k] = -c[k]
    return ExactBiQuat(tuple(c))


def check_basis_associativity() -> bool:
    """(e_a e_b) e_c == e_a (e_b e_c) for all 512 basis triples."""
    for a in range(8):
        for b in range(8):
            s_ab, ab = STRUCTURE[a][b]
            for c in range(8):
                s1, left = STRUCTURE[ab][c]
                s_bc, bc = STRUCTURE[b][c]
                s2, right = STRUCTURE[a][bc]
                if left != right or s_ab * s1 != s_bc * s2:
                    return False
    return True


def random_rational(rng: random.Random, limit: int = 97) -> Fraction:
    """Fraction with |numerator| and denominator bounded by limit."""
    return Fraction(rng.randint(-limit, limit), rng.randint(1, limit))


def random_dyadic(rng: random.Random, limit: int = 97,
                  max_power: int = 6) -> Fraction:
    """Dyadic rational: float conversion and small float sums of
    products stay exact, which lets equivalence tests demand equality."""
    return Fraction(rng.randint(-limit, limit), 2 ** rng.randint(0, max_power))


def random_exact_biquat(rng: random.Random, limit: int = 97,
                        dyadic: bool = False) -> ExactBiQuat:
    draw = random_dyadic if dyadic else random_rational
    return ExactBiQuat(tuple(draw(rng, limit) for _ in range(8)))
