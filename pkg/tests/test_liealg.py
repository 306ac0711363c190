import sys
from pathlib import Path

import pytest

# Ensure the project root is on the import path for tests without installation
sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from lieball.errors import BadParams, BadStructure, ClosureBudgetExceeded, DimensionMismatch, FieldMismatch
from lieball.liealg import (
    BUILTINS,
    SignatureForm,
    bracket_closure,
    builtin,
    center,
    check_jacobi,
    check_orthogonality,
    check_unitarity,
    circle_extension,
    complex_structure,
    is_closed,
    place,
    quaternionic_structure,
    realify,
    so_pq,
    unitary_1p,
    unrealify,
)
from lieball.matrix import ExactMatrix
from lieball.scalar import I, Field, GaussExt


def test_so23_is_a_closed_orthogonal_algebra():
    g = so_pq(2, 3)
    assert g.dim == 10
    assert g.ambient_dim == 5
    assert check_orthogonality(g, SignatureForm(2, 3))
    assert not check_orthogonality(g, SignatureForm(0, 5))
    assert is_closed(g)
    assert check_jacobi(g)


def test_bracket_closure_of_sl2():
    e = ExactMatrix.from_rows([[0, 1], [0, 0]])
    f = ExactMatrix.from_rows([[0, 0], [1, 0]])
    g = bracket_closure([e, f], name="sl2")
    assert g.dim == 3
    assert g.name == "sl2"
    assert g.contains(ExactMatrix.from_rows([[1, 0], [0, -1]]))

    with pytest.raises(ClosureBudgetExceeded):
        bracket_closure([e, f], max_dim=2)
    with pytest.raises(BadParams):
        bracket_closure([])
    with pytest.raises(DimensionMismatch):
        bracket_closure([e, ExactMatrix.identity(3)])


def test_unitary_algebras():
    g = unitary_1p(2)
    assert g.dim == 9
    assert check_unitarity(g, SignatureForm(1, 2))
    assert unitary_1p(2, special=True).dim == 8

    real = builtin("U(1,2)_real")
    assert real.name == "U(1,2)_real"
    assert (real.dim, real.ambient_dim) == (9, 6)
    assert center(real).dim == 1
    assert center(so_pq(2, 3)).dim == 0


def test_realify_round_trip():
    M = ExactMatrix.from_rows([[GaussExt(0, 1), 1], [0, GaussExt(2, -3)]])
    R = realify(M)
    assert R.field is Field.RAT
    assert (R.rows, R.cols) == (4, 4)
    assert R[0, 1] == -1 and R[1, 0] == 1
    assert unrealify(R) == M

    with pytest.raises(FieldMismatch):
        realify(ExactMatrix.identity(2))
    with pytest.raises(BadStructure):
        unrealify(ExactMatrix.from_rows([[1, 0], [0, 2]]))


def test_circle_extension_adds_one_dimension():
    g = circle_extension(so_pq(1, 2), "S1_SO(1,2)_real")
    assert g.dim == 4
    assert g == builtin("S1_SO(1,2)_real")


def test_builtin_resolution():
    assert builtin("SO(2,3)") == builtin("SO(p,q)", {"p": 2, "q": 3})
    assert builtin("SO_STAR", {"m": 1}).dim == 1
    assert builtin("SO_STAR", {"m": 2}).dim == 6
    assert builtin("APPENDIX_SO12").dim == 3
    assert builtin("APPENDIX_SO12", {"n": 4}).ambient_dim == 6
    assert builtin("SO1K1_SO1K2", {"k1": 1, "k2": 2, "n": 3}).dim == 4

    with pytest.raises(BadParams):
        builtin("NOPE")
    with pytest.raises(BadParams):
        builtin("SO(p,q)", {"p": 2})
    with pytest.raises(BadParams):
        builtin("SL2", {"n": 3})
    with pytest.raises(BadParams):
        builtin("U(1,2)_real", {"p": 3})
    with pytest.raises(BadParams):
        builtin("SO1K_IN_SU", {"k": 3, "p": 2})


def test_appendix_algebra_sits_in_so23():
    g = builtin("APPENDIX_SO12")
    assert g.field is Field.QUAD
    assert is_closed(g)
    assert check_orthogonality(g, SignatureForm(2, 3))
    assert check_orthogonality(builtin("APPENDIX_SO3"), SignatureForm(0, 5))


def test_shape_and_signature_errors():
    with pytest.raises(BadParams):
        SignatureForm(0, 0)
    with pytest.raises(DimensionMismatch):
        place(ExactMatrix.identity(2), [0, 1, 2], 4)
    with pytest.raises(DimensionMismatch):
        check_orthogonality(so_pq(2, 3), SignatureForm(2, 2))


# one entry per builtin that preserves a diagonal form: (name, params, dimension, form)
DIAGONAL_FORMS = [
    ("SO(p,q)", {"p": 2, "q": 3}, 10, SignatureForm(2, 3)),
    ("U(1,p)_real", {"p": 1}, 4, SignatureForm(2, 2)),
    ("U(1,p)_real", {"p": 2}, 9, SignatureForm(2, 4)),
    ("SU(1,p)_real", {"p": 2}, 8, SignatureForm(2, 4)),
    ("S1_SO(1,p)_real", {"p": 2}, 4, SignatureForm(2, 4)),
    ("APPENDIX_SO12", {}, 3, SignatureForm(2, 3)),
    ("APPENDIX_SO12", {"n": 4}, 3, SignatureForm(2, 4)),
    ("APPENDIX_SO3", {}, 3, SignatureForm(0, 5)),
    ("SL2_SL2_on_R22", {}, 6, SignatureForm(2, 2)),
    ("SO12_BLOCK_P2", {"n": 3}, 3, SignatureForm(2, 3)),
    ("SO12_BLOCK", {"n": 3}, 3, SignatureForm(2, 3)),
    ("SO1K_IN_SU", {"k": 2, "p": 2}, 3, SignatureForm(2, 4)),
    ("SO1K1_SO1K2", {"k1": 1, "k2": 2, "n": 3}, 4, SignatureForm(2, 3)),
    ("SO1K_P1", {"k": 2, "n": 3}, 3, SignatureForm(2, 3)),
    ("SU2", {}, 3, SignatureForm(0, 2)),
    ("SU2_real", {}, 3, SignatureForm(0, 4)),
    ("U1_WEIGHT", {"weight": 3}, 1, SignatureForm(0, 1)),
]


@pytest.mark.parametrize("name,params,dim,eta", DIAGONAL_FORMS)
def test_builtins_preserve_their_forms(name, params, dim, eta):
    g = builtin(name, params)
    assert g.dim == dim
    assert is_closed(g)
    if g.field.is_gaussian:
        assert check_unitarity(g, eta)
    else:
        assert check_orthogonality(g, eta)


def test_every_builtin_has_a_form_check():
    covered = {name for name, _, _, _ in DIAGONAL_FORMS} | {"SL2", "SO_STAR"}
    assert covered == set(BUILTINS)


def test_builtins_with_non_diagonal_forms():
    omega = ExactMatrix.from_rows([[0, 1], [-1, 0]])
    g = builtin("SL2")
    assert g.dim == 3
    assert all((A.transpose() @ omega + omega @ A).is_zero() for A in g.basis)

    for m, dim in ((1, 1), (2, 6)):
        g = builtin("SO_STAR", {"m": m})
        assert g.dim == dim
        assert is_closed(g)
        H = quaternionic_structure(m).scale(I)
        assert all((A + A.transpose()).is_zero() for A in g.basis)
        assert all((A.adjoint() @ H + H @ A).is_zero() for A in g.basis)


def test_complex_algebras_are_real_spans():
    su = builtin("SU2")
    assert su.contains(ExactMatrix.from_rows([[I, 0], [0, -I]], Field.GAUSS_RAT))
    # in sl(2,C) but not in the real span of su(2)
    assert not su.contains(ExactMatrix.from_rows([[1, 0], [0, -1]], Field.GAUSS_RAT))
    assert not su.contains(ExactMatrix.from_rows([[0, 1], [1, 0]], Field.GAUSS_RAT))

    u1 = builtin("U1_WEIGHT", {"weight": 1})
    assert u1.basis == (ExactMatrix.from_rows([[I]], Field.GAUSS_RAT),)
    assert not u1.contains(ExactMatrix.from_rows([[1]], Field.GAUSS_RAT))

    u11 = unitary_1p(1)
    assert u11.dim == 4
    assert check_unitarity(u11, SignatureForm(1, 1))
    assert not u11.contains(ExactMatrix.identity(2, Field.GAUSS_RAT))

    closed = bracket_closure(su.basis[:2], name="su2")
    assert closed.dim == 3


def test_centers_of_unitary_algebras():
    u11 = unitary_1p(1)
    Z = center(u11)
    assert Z.dim == 1
    assert u11.matrices(Z) == [ExactMatrix.diagonal([I, I], Field.GAUSS_RAT)]

    real = builtin("U(1,p)_real", {"p": 1})
    Z = center(real)
    assert Z.dim == 1
    J = complex_structure(2)
    assert real.matrices(Z)[0] in (J, J.scale(-1))

    assert center(builtin("SU(1,p)_real", {"p": 2})).dim == 0
