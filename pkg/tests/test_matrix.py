import sys
from pathlib import Path

import pytest

# Ensure the project root is on the import path for tests without installation
sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from lieball.errors import DimensionMismatch
from lieball.matrix import (
    ExactMatrix,
    Subspace,
    bracket,
    charpoly,
    is_invariant,
    kernel,
    kron,
    poly_divmod,
    poly_eval_matrix,
    rank,
    solve,
    span,
    spin,
    squarefree_part,
)
from lieball.scalar import Field, GaussExt, QuadExt


def test_rank_kernel_and_solve():
    A = ExactMatrix.from_rows([[1, 1], [2, 2]])
    assert rank(A) == 1
    K = kernel(A)
    assert K.dim == 1
    assert K.contains((1, -1))

    B = ExactMatrix.from_rows([[1, 2], [3, 4]])
    x = solve(B, [5, 6])
    assert B.apply(x) == (5, 6)
    assert solve(A, [1, 0]) is None


def test_charpoly_is_exact():
    A = ExactMatrix.from_rows([[1, 2], [3, 4]])
    assert charpoly(A) == [-2, -5, 1]

    r3 = QuadExt(0, 1, 3)
    S = ExactMatrix.from_rows([[0, r3], [r3, 0]], Field.QUAD, 3)
    assert charpoly(S) == [-3, 0, 1]
    assert poly_eval_matrix(charpoly(S), S).is_zero()


def test_polynomial_helpers():
    # (x - 1)^2 (x + 1)
    p = [1, -1, -1, 1]
    assert squarefree_part(p) == [-1, 0, 1]
    quo, rem = poly_divmod(p, [-1, 1])
    assert quo == [-1, 0, 1]
    assert rem == [0]


def test_subspace_algebra():
    e = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    U = span([e[0], e[1]], 3)
    W = span([e[1], e[2]], 3)
    assert U.intersection(W) == span([e[1]], 3)
    assert (U + W).is_full()
    assert U.annihilator() == span([e[2]], 3)
    # reduced echelon bases compare equal whatever spans them
    assert span([(1, 1, 0), (1, -1, 0)], 3) == U


def test_spin_and_invariance():
    rotation = ExactMatrix.from_rows([[0, -1], [1, 0]])
    scaling = ExactMatrix.from_rows([[1, 0], [0, 2]])
    assert spin([rotation], [(1, 0)], 2).is_full()
    line = spin([scaling], [(1, 0)], 2)
    assert line.dim == 1
    assert is_invariant([scaling], line)
    assert not is_invariant([rotation], line)


def test_gaussian_matrices():
    A = ExactMatrix.from_rows([[GaussExt(0, 1), 1], [0, 2]])
    assert A.field is Field.GAUSS_RAT
    assert A.adjoint()[0, 0] == GaussExt(0, -1)
    assert A.adjoint()[1, 0] == 1
    assert A.trace() == GaussExt(2, 1)


def test_kron_and_bracket():
    h = ExactMatrix.from_rows([[1, 0], [0, -1]])
    e = ExactMatrix.from_rows([[0, 1], [0, 0]])
    assert bracket(h, e) == e.scale(2)
    K = kron(h, ExactMatrix.identity(2))
    assert (K.rows, K.cols) == (4, 4)
    assert K[2, 2] == -1


def test_shape_errors():
    with pytest.raises(DimensionMismatch):
        ExactMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(DimensionMismatch):
        ExactMatrix.identity(2) + ExactMatrix.identity(3)
    with pytest.raises(DimensionMismatch):
        solve(ExactMatrix.identity(2), [1, 2, 3])
    assert Subspace.zero(3).is_zero()
    assert kernel(ExactMatrix.identity(2)).is_zero()
