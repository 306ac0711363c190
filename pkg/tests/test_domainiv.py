import sys
from fractions import Fraction
from pathlib import Path

import pytest

# Ensure the project root is on the import path for tests without installation
sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from lieball.domainiv import (
    DomainPoint,
    cartan_iv_map,
    chained_bound_holds,
    domain_iv_defect,
    in_domain_iv,
)
from lieball.errors import BadParams, FieldMismatch
from lieball.scalar import GaussExt, QuadExt
from lieball.symspace import base_point, hermitian_norm, in_lieball, quadric_residual


def test_origin_maps_to_the_base_point():
    assert cartan_iv_map(DomainPoint.of([0, 0])) == base_point(2)


def test_inside_point():
    z = DomainPoint.of([Fraction(1, 2), 0])
    assert domain_iv_defect(z) == Fraction(-9, 16)
    assert in_domain_iv(z)
    assert chained_bound_holds(z)
    image = cartan_iv_map(z)
    assert not quadric_residual(image)
    assert hermitian_norm(image) == 2 * domain_iv_defect(z)
    assert in_lieball(image)


def test_boundary_point():
    z = DomainPoint.of([1, 0])
    assert domain_iv_defect(z) == 0
    assert not in_domain_iv(z)
    assert not chained_bound_holds(z)
    assert not in_lieball(cartan_iv_map(z))


def test_far_point_has_negative_defect_but_wrong_orientation():
    z = DomainPoint.of([2, 0])
    assert domain_iv_defect(z) < 0
    assert not in_domain_iv(z)
    image = cartan_iv_map(z)
    assert not quadric_residual(image)
    assert not in_lieball(image)


def test_null_square_sum():
    z = DomainPoint.of([Fraction(3, 4), GaussExt(0, Fraction(3, 4))])
    assert z.square_sum() == 0
    assert z.norm2() == Fraction(9, 8)
    assert domain_iv_defect(z) == Fraction(5, 4)
    assert not in_domain_iv(z)


def test_domain_point_validation():
    with pytest.raises(FieldMismatch):
        DomainPoint.of([QuadExt(0, 1, 3)])
    with pytest.raises(BadParams):
        DomainPoint.of([])
