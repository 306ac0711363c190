"""Cartan's bounded domain of type IV and its map onto the Lie ball.

f(z) = [i(L - 1) : L + 1 : 2 z_1 : ... : 2 z_n] with L = z_1^2 + ... + z_n^2.
The quadric residual of f(z) is 4L - 4L = 0 identically, and
q(f(z), f(z)) = 2 (2|z|^2 - |L|^2 - 1), so the image is negative exactly on
the domain. Inputs are Gaussian rationals so every check is exact; the
stereographic reading of f is not used.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .const import DEFAULT_D
from .errors import BadParams, FieldMismatch
from .scalar import I, Field, GaussExt, Scalar, abs2, coerce, field_of, sign
from .symspace import ProjectivePoint

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DomainPoint:
    z: Tuple[GaussExt, ...]

    @classmethod
    def of(cls, values: Sequence[Scalar]) -> "DomainPoint":
        for x in values:
            if field_of(x) not in (Field.RAT, Field.GAUSS_RAT):
                raise FieldMismatch("domain points take Gaussian rational coordinates")
        return cls(tuple(coerce(x, Field.GAUSS_RAT, DEFAULT_D) for x in values))

    def __post_init__(self):
        if not self.z:
            raise BadParams("a domain point needs at least one coordinate")

    @property
    def n(self) -> int:
        return len(self.z)

    def square_sum(self) -> GaussExt:
        """L = z_1^2 + ... + z_n^2."""
        total = GaussExt(Fraction(0), Fraction(0))
        for x in self.z:
            total = total + x * x
        return total

    def norm2(self) -> Fraction:
        """|z|^2 = |z_1|^2 + ... + |z_n|^2."""
        return sum((abs2(x) for x in self.z), Fraction(0))


def cartan_iv_map(point: DomainPoint) -> ProjectivePoint:
    lam = point.square_sum()
    coords = [I * (lam - 1), lam + 1] + [2 * x for x in point.z]
    log.debug("type IV map: L = %s", lam)
    return ProjectivePoint.of(coords)


def domain_iv_defect(point: DomainPoint) -> Fraction:
    """2|z|^2 - |L|^2 - 1; negative inside the domain."""
    return 2 * point.norm2() - abs2(point.square_sum()) - 1


def in_domain_iv(point: DomainPoint) -> bool:
    return point.norm2() < 1 and sign(domain_iv_defect(point)) < 0


def chained_bound_holds(point: DomainPoint) -> bool:
    """2|z|^2 - 1 < |z|^4, the bound the membership argument passes through."""
    s = point.norm2()
    return 2 * s - 1 < s * s
