import sys
from fractions import Fraction
from pathlib import Path

import pytest

# Ensure the project root is on the import path for tests without installation
sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from lieball.errors import (
    BadParams,
    DimensionMismatch,
    DomainViolation,
    FieldMismatch,
    NotInLieBall,
    NotInM,
    NotLightlike,
    NotNegativePlane,
)
from lieball.liealg import SignatureForm, appendix_matrices, builtin, check_orthogonality, so_pq
from lieball.matrix import ExactMatrix, bracket
from lieball.scalar import I, GaussExt
from lieball.symspace import (
    EmbeddingSpec,
    EmbeddingType,
    NegativePlane,
    ProjectivePoint,
    Variant,
    base_point,
    cartan,
    dualize,
    embed,
    fixer_algebra,
    in_lieball,
    invariant_hull,
    is_lie_triple,
    isometry_algebra,
    local_transitivity,
    off_diagonal,
    orbit_hull,
    parabolic_algebra,
    plane_to_point,
    point_to_plane,
    quadric_residual,
    stabilizes_line,
)


def test_cartan_decomposition_sizes():
    dec = cartan(3)
    assert (len(dec.k_basis), len(dec.m_basis)) == (4, 6)
    compact = cartan(3, Variant.COMPACT)
    assert compact.algebra.dim == 10
    with pytest.raises(BadParams):
        cartan(0)


def test_dualize_flips_the_lower_block():
    X = off_diagonal([1, 0, 2], [0, 1, 0], Variant.COMPACT)
    Y = off_diagonal([0, 1, 0], [1, 0, 0], Variant.COMPACT)
    assert dualize(X) == off_diagonal([1, 0, 2], [0, 1, 0])
    # the duality reverses brackets of m into k
    assert bracket(dualize(X), dualize(Y)) == -bracket(X, Y)

    with pytest.raises(NotInM):
        dualize(off_diagonal([1, 0, 0], [0, 0, 0]))
    with pytest.raises(NotInM):
        dualize(ExactMatrix.identity(5))


def test_lie_triples():
    dec = cartan(3)
    plane = [off_diagonal([1, 0, 0], [0, 0, 0]), off_diagonal([0, 0, 0], [1, 0, 0])]
    assert is_lie_triple(plane, dec)
    crafted = [off_diagonal([1, 0, 0], [0, 0, 0]), off_diagonal([0, 1, 0], [1, 0, 0])]
    assert not is_lie_triple(crafted, dec)

    mats = appendix_matrices()
    assert is_lie_triple([mats["U*"], mats["V*"]], dec)
    with pytest.raises(NotInM):
        is_lie_triple([dec.k_basis[0]], dec)


def test_points_and_planes():
    Z = base_point(3)
    assert in_lieball(Z)
    assert not quadric_residual(Z)
    assert not in_lieball(ProjectivePoint.of([1, -I, 0, 0, 0]))
    assert ProjectivePoint.of([2, 2 * I, 0]) == base_point(1)

    P = point_to_plane(Z)
    assert P.A == (1, 0, 0, 0, 0)
    assert P.B == (0, 1, 0, 0, 0)
    assert plane_to_point(P) == Z

    with pytest.raises(NotInLieBall):
        point_to_plane(ProjectivePoint.of([0, 0, 1, I, 0]))
    with pytest.raises(NotNegativePlane):
        NegativePlane((1, 0, 0), (1, 0, 0))
    with pytest.raises(NotNegativePlane):
        NegativePlane((0, 0, 1), (0, 0, 0))
    with pytest.raises(BadParams):
        ProjectivePoint.of([0, 0, 0])
    with pytest.raises(BadParams):
        ProjectivePoint.of([1, I])


def test_embeddings_of_the_origin():
    origin = base_point(2)
    assert embed(EmbeddingSpec(EmbeddingType.I1, 2, 1), [1, 0]) == origin
    assert embed(EmbeddingSpec(EmbeddingType.I2, 2, 1), [1, 0]) == origin
    assert embed(EmbeddingSpec(EmbeddingType.G2, 2, 1, 1), [1, 0, 1, 0]) == origin
    assert embed(EmbeddingSpec(EmbeddingType.G1, 3, 1), [1, I, 0]) == base_point(3)
    assert embed(EmbeddingSpec(EmbeddingType.P2, 3), [1, I, 0]) == base_point(3)


def test_embedding_p1_rescales_to_the_unit_hyperboloid():
    spec = EmbeddingSpec(EmbeddingType.P1, 2, 1)
    Z = embed(spec, [2, 0])
    assert Z == ProjectivePoint.of([I, -1, 0, 0])
    assert Z == base_point(2)
    # level -8 needs sqrt(8)
    with pytest.raises(DomainViolation):
        embed(spec, [3, 1])
    with pytest.raises(DomainViolation):
        embed(spec, [0, 1])


def test_embedding_input_validation():
    with pytest.raises(BadParams):
        EmbeddingSpec(EmbeddingType.I1, 3, 2)
    with pytest.raises(BadParams):
        EmbeddingSpec(EmbeddingType.G2, 2, 1, 2)
    with pytest.raises(BadParams):
        embed(EmbeddingSpec(EmbeddingType.I1, 2, 1), [1])
    with pytest.raises(DomainViolation):
        embed(EmbeddingSpec(EmbeddingType.I1, 2, 1), [1, 1])
    with pytest.raises(DomainViolation):
        embed(EmbeddingSpec(EmbeddingType.I2, 2, 1), [1, GaussExt(0, 1)])
    with pytest.raises(DomainViolation):
        embed(EmbeddingSpec(EmbeddingType.G1, 3, 1), [1, -I, 0])


def test_isometry_algebras_sit_in_so2n():
    i1 = isometry_algebra(EmbeddingSpec(EmbeddingType.I1, 2, 1))
    assert i1.dim == 3
    assert check_orthogonality(i1, SignatureForm(2, 2))

    for n, k in ((4, 2), (6, 3)):
        ik = isometry_algebra(EmbeddingSpec(EmbeddingType.I1, n, k))
        assert ik.dim == (k + 1) ** 2 - 1
        assert check_orthogonality(ik, SignatureForm(2, n))
        assert fixer_algebra(ik, point_to_plane(base_point(n))).dim == 0

    g1 = isometry_algebra(EmbeddingSpec(EmbeddingType.G1, 3, 1))
    assert orbit_hull(g1, base_point(3)).dim == 3
    p1 = isometry_algebra(EmbeddingSpec(EmbeddingType.P1, 2, 1))
    assert orbit_hull(p1, base_point(2)).dim == 3
    assert orbit_hull(so_pq(2, 3), base_point(3)).is_full()

    with pytest.raises(DimensionMismatch):
        invariant_hull(g1, [(1, 0, 0)])


def test_fixers():
    assert fixer_algebra(so_pq(2, 3), point_to_plane(base_point(3))).dim == 0
    u11 = builtin("U(1,p)_real", {"p": 1})
    assert fixer_algebra(u11, point_to_plane(base_point(2))).dim == 1
    with pytest.raises(NotNegativePlane):
        fixer_algebra(u11, point_to_plane(base_point(3)))
    with pytest.raises(FieldMismatch):
        fixer_algebra(builtin("SU2"), point_to_plane(base_point(2)))


def test_parabolic_and_transitivity():
    v = (Fraction(1), 0, Fraction(1), 0, 0)
    p = parabolic_algebra(1, 2, v)
    assert p.dim == 7
    ambient = so_pq(2, 3)
    assert local_transitivity(ambient, p, ambient)
    assert not local_transitivity(builtin("APPENDIX_SO12"), p, ambient)
    with pytest.raises(NotLightlike):
        parabolic_algebra(1, 2, (1, 0, 0, 0, 0))

    Us = appendix_matrices()["U*"]
    assert stabilizes_line(Us, (0, 1, 0, 1, 0))
    assert not stabilizes_line(Us, (1, 0, 0, 0, 0))
