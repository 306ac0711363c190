"""Matrix Lie algebras: bracket closure, built-in algebras and structural checks.

Every algebra is stored as a ``LieAlgebraBasis`` whose basis is the reduced
echelon basis of the flattened matrices, so equal algebras compare equal.
Algebras of complex matrices are real Lie algebras: their basis is reduced
over the real subfield in the coordinates [Re | Im] of the flattened
entries, never over the complex numbers. Complex algebras are realified in
interleaved coordinates: complex coordinate k becomes the real coordinates
(2k, 2k+1).
"""

from __future__ import annotations

import inspect
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .const import APPENDIX_D, DEFAULT_D, DEFAULT_MAX_DIM
from .errors import BadParams, BadStructure, ClosureBudgetExceeded, DimensionMismatch, FieldMismatch
from .matrix import Echelon, ExactMatrix, Subspace, Vector, bracket, kron, solution_space, span
from .scalar import I, Field, GaussExt, QuadExt, Scalar, imag_part, real_part, zero

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignatureForm:
    """eta(p, q) = diag(-1 x p, +1 x q)."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or self.p + self.q < 1:
            raise BadParams(f"invalid signature ({self.p}, {self.q})")

    @property
    def dim(self) -> int:
        return self.p + self.q

    def diagonal(self) -> List[int]:
        return [-1] * self.p + [1] * self.q

    def matrix(self, field: Field = Field.RAT, D: int = DEFAULT_D) -> ExactMatrix:
        return ExactMatrix.diagonal(self.diagonal(), field, D)


def _coordinates_of(X: ExactMatrix, field: Field) -> Vector:
    """Flattened entries; real then imaginary parts over a Gaussian field."""
    flat = X.with_field(field).flatten()
    if not field.is_gaussian:
        return flat
    return tuple(real_part(x) for x in flat) + tuple(imag_part(x) for x in flat)


def _matrix_of(v: Sequence[Scalar], n: int, field: Field, D: int) -> ExactMatrix:
    if not field.is_gaussian:
        return ExactMatrix.from_flat(tuple(v), n, n, field, D)
    n2 = n * n
    grid = [[GaussExt(v[i * n + j], v[n2 + i * n + j]) for j in range(n)] for i in range(n)]
    return ExactMatrix.from_rows(grid, field, D)


def _coordinate_space(n: int, field: Field) -> Tuple[int, Field]:
    """Length and field of the coordinate vectors of n x n matrices over ``field``."""
    if field.is_gaussian:
        return 2 * n * n, field.real()
    return n * n, field


@dataclass(frozen=True)
class LieAlgebraBasis:
    ambient_dim: int
    basis: Tuple[ExactMatrix, ...]
    name: Optional[str] = None
    field: Field = Field.RAT
    D: int = DEFAULT_D

    @classmethod
    def from_matrices(
        cls,
        matrices: Sequence[ExactMatrix],
        name: Optional[str] = None,
        ambient_dim: Optional[int] = None,
        field: Optional[Field] = None,
        D: Optional[int] = None,
    ) -> "LieAlgebraBasis":
        """Normal-form basis of the real span of the given matrices (closure not checked)."""
        if matrices:
            ambient_dim = matrices[0].rows
            field = matrices[0].field if field is None else field
            D = matrices[0].D if D is None else D
        if ambient_dim is None:
            raise BadParams("an empty algebra needs an explicit ambient dimension")
        field = field or Field.RAT
        D = DEFAULT_D if D is None else D
        _check_square(matrices, ambient_dim, field, D)
        size, scalars = _coordinate_space(ambient_dim, field)
        sub = span([_coordinates_of(m, field) for m in matrices], size, scalars, D)
        basis = tuple(_matrix_of(v, ambient_dim, field, D) for v in sub.basis)
        return cls(ambient_dim, basis, name, field, D)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, X: ExactMatrix) -> Vector:
        return _coordinates_of(X, self.field)

    def subspace(self) -> Subspace:
        """The basis as a subspace of coordinate vectors, spanned over the real subfield."""
        size, scalars = _coordinate_space(self.ambient_dim, self.field)
        return Subspace(size, tuple(self.coordinates(b) for b in self.basis), scalars, self.D)

    def matrices(self, sub: Subspace) -> List[ExactMatrix]:
        """Matrices of a subspace given in the coordinates of ``subspace()``."""
        return [_matrix_of(v, self.ambient_dim, self.field, self.D) for v in sub.basis]

    def contains(self, X: ExactMatrix) -> bool:
        return self.subspace().contains(self.coordinates(X))

    def renamed(self, name: str) -> "LieAlgebraBasis":
        return LieAlgebraBasis(self.ambient_dim, self.basis, name, self.field, self.D)


def _check_square(matrices: Sequence[ExactMatrix], n: int, field: Field, D: int) -> None:
    for m in matrices:
        if m.rows != n or m.cols != n:
            raise DimensionMismatch(f"expected {n}x{n} matrices, got {m.rows}x{m.cols}")
        if m.field is not field and not (m.field is Field.RAT):
            raise FieldMismatch(f"{m.field.value} generator in a {field.value} algebra")
        if m.field.has_radical and m.D != D:
            raise FieldMismatch(f"generator over sqrt({m.D}) in an algebra over sqrt({D})")


def bracket_closure(
    generators: Sequence[ExactMatrix],
    max_dim: int = DEFAULT_MAX_DIM,
    name: Optional[str] = None,
) -> LieAlgebraBasis:
    """Smallest bracket-closed subspace containing the generators."""
    if not generators:
        raise BadParams("bracket_closure needs at least one generator")
    n, field, D = generators[0].rows, generators[0].field, generators[0].D
    _check_square(generators, n, field, D)
    size, scalars = _coordinate_space(n, field)
    ech = Echelon(size, scalars, D)
    elements: List[ExactMatrix] = []
    queue: List[ExactMatrix] = []

    def admit(X: ExactMatrix) -> None:
        if ech.add(_coordinates_of(X, field)):
            elements.append(X)
            queue.append(X)
            if ech.rank > max_dim:
                raise ClosureBudgetExceeded(f"closure exceeds dimension {max_dim}")

    for g in generators:
        admit(g.with_field(field))
    while queue:
        X = queue.pop(0)
        for Y in list(elements):
            admit(bracket(X, Y))
    log.debug("closure of %d generators has dimension %d", len(generators), ech.rank)
    basis = tuple(_matrix_of(v, n, field, D) for v in ech.rows())
    return LieAlgebraBasis(n, basis, name, field, D)


def is_closed(g: LieAlgebraBasis) -> bool:
    sub = g.subspace().echelon()
    return all(
        sub.contains(g.coordinates(bracket(g.basis[i], g.basis[j])))
        for i in range(g.dim)
        for j in range(i + 1, g.dim)
    )


def check_jacobi(g: LieAlgebraBasis) -> bool:
    B = g.basis
    for i in range(len(B)):
        for j in range(i + 1, len(B)):
            for k in range(j + 1, len(B)):
                total = (
                    bracket(B[i], bracket(B[j], B[k]))
                    + bracket(B[j], bracket(B[k], B[i]))
                    + bracket(B[k], bracket(B[i], B[j]))
                )
                if not total.is_zero():
                    return False
    return True


def check_orthogonality(g: LieAlgebraBasis, eta: SignatureForm) -> bool:
    """True iff A^T eta + eta A = 0 for every basis element."""
    if g.ambient_dim != eta.dim:
        raise DimensionMismatch(f"algebra on dimension {g.ambient_dim} against form of dimension {eta.dim}")
    E = eta.matrix(g.field, g.D)
    return all((A.transpose() @ E + E @ A).is_zero() for A in g.basis)


def check_unitarity(g: LieAlgebraBasis, eta: SignatureForm) -> bool:
    """Hermitian analogue: A^* eta + eta A = 0 for complex matrices."""
    if g.ambient_dim != eta.dim:
        raise DimensionMismatch(f"algebra on dimension {g.ambient_dim} against form of dimension {eta.dim}")
    E = eta.matrix(g.field, g.D)
    return all((A.adjoint() @ E + E @ A).is_zero() for A in g.basis)


def center(g: LieAlgebraBasis) -> Subspace:
    """{Z in g : [Z, X] = 0 for all X in g}, in the coordinates of ``g.subspace()``.

    ``g.matrices(center(g))`` gives the central matrices.
    """
    size, scalars = _coordinate_space(g.ambient_dim, g.field)
    if g.dim == 0:
        return Subspace.zero(size, scalars, g.D)
    coords = [g.coordinates(B) for B in g.basis]
    brackets = [[g.coordinates(bracket(Bk, Bj)) for Bk in g.basis] for Bj in g.basis]
    # real coefficients: each complex entry gives its real and imaginary equation
    equations = (
        [brackets[j][k][e] for k in range(g.dim)] for j in range(g.dim) for e in range(size)
    )
    coeffs = solution_space(equations, g.dim, scalars, g.D)
    vectors = []
    for c in coeffs.basis:
        flat = [zero(scalars, g.D)] * size
        for ck, vk in zip(c, coords):
            if ck:
                flat = [x + ck * y for x, y in zip(flat, vk)]
        vectors.append(flat)
    return span(vectors, size, scalars, g.D)


# realification


def realify(M: ExactMatrix) -> ExactMatrix:
    """Interleaved realification: a+bi becomes the block [[a, -b], [b, a]]."""
    if not M.field.is_gaussian:
        raise FieldMismatch("realify expects a matrix over a Gaussian field")
    rows = []
    for r in M.entries:
        top, bottom = [], []
        for x in r:
            a, b = real_part(x), imag_part(x)
            top += [a, -b]
            bottom += [b, a]
        rows += [top, bottom]
    return ExactMatrix.from_rows(rows, M.field.real(), M.D)


def unrealify(R: ExactMatrix) -> ExactMatrix:
    """Inverse of realify; the matrix must commute with the complex structure."""
    if R.field.is_gaussian or R.rows % 2 or R.cols % 2:
        raise BadStructure("unrealify expects a real matrix of even shape")
    rows = []
    for i in range(0, R.rows, 2):
        row = []
        for j in range(0, R.cols, 2):
            a, mb, b, a2 = R[i, j], R[i, j + 1], R[i + 1, j], R[i + 1, j + 1]
            if a != a2 or mb != -b:
                raise BadStructure(f"block ({i // 2}, {j // 2}) is not complex-linear")
            row.append(GaussExt(a, b))
        rows.append(row)
    return ExactMatrix.from_rows(rows, R.field.gaussian(), R.D)


def complexify(M: ExactMatrix) -> ExactMatrix:
    return M.with_field(M.field.gaussian())


def complex_structure(m: int, field: Field = Field.RAT, D: int = DEFAULT_D) -> ExactMatrix:
    """J0 = realify(i Id_m)."""
    return realify(ExactMatrix.diagonal([I] * m, field.gaussian(), D))


def real_conjugation(m: int, field: Field = Field.RAT, D: int = DEFAULT_D) -> ExactMatrix:
    """Complex conjugation of C^m in interleaved coordinates, diag(1, -1, ...)."""
    return ExactMatrix.diagonal([1, -1] * m, field, D)


def realify_algebra(g: LieAlgebraBasis, name: Optional[str] = None) -> LieAlgebraBasis:
    return LieAlgebraBasis.from_matrices([realify(A) for A in g.basis], name or g.name)


def complexify_algebra(g: LieAlgebraBasis) -> LieAlgebraBasis:
    field = g.field.gaussian()
    return LieAlgebraBasis(g.ambient_dim, tuple(A.with_field(field) for A in g.basis), g.name, field, g.D)


def circle_extension(g: LieAlgebraBasis, name: Optional[str] = None) -> LieAlgebraBasis:
    """i R + g acting on C^n, realified; g is a real algebra acting C-linearly."""
    if g.field.is_gaussian:
        raise FieldMismatch("circle_extension expects a real algebra")
    mats = [complex_structure(g.ambient_dim, g.field, g.D)]
    mats += [realify(complexify(A)) for A in g.basis]
    return LieAlgebraBasis.from_matrices(mats, name)


# block placement


def place(A: ExactMatrix, coords: Sequence[int], n: int) -> ExactMatrix:
    """The n x n matrix acting as A on the listed coordinates and as 0 elsewhere."""
    if len(coords) != A.rows or not A.is_square:
        raise DimensionMismatch(f"{A.rows}x{A.cols} block on {len(coords)} coordinates")
    grid: List[List[Scalar]] = [[Fraction(0)] * n for _ in range(n)]
    for a, ca in enumerate(coords):
        for b, cb in enumerate(coords):
            grid[ca][cb] = A[a, b]
    return ExactMatrix.from_rows(grid, A.field, A.D)


def place_algebra(g: LieAlgebraBasis, coords: Sequence[int], n: int, name: Optional[str] = None) -> LieAlgebraBasis:
    mats = [place(A, coords, n) for A in g.basis]
    return LieAlgebraBasis.from_matrices(mats, name or g.name, n, g.field, g.D)


# built-in algebras


def _elementary(n: int, i: int, j: int, value: Scalar = 1) -> List[List[Scalar]]:
    grid: List[List[Scalar]] = [[Fraction(0)] * n for _ in range(n)]
    grid[i][j] = value
    return grid


def so_pq(p: int, q: int, name: Optional[str] = None) -> LieAlgebraBasis:
    """so(p, q) with basis eta (E_ij - E_ji), i < j."""
    if p < 0 or q < 0 or p + q < 2:
        raise BadParams(f"so({p},{q}) needs p, q >= 0 and p + q >= 2")
    eta = SignatureForm(p, q).diagonal()
    n = p + q
    mats = []
    for i in range(n):
        for j in range(i + 1, n):
            grid = _elementary(n, i, j, eta[i])
            grid[j][i] = -eta[j]
            mats.append(ExactMatrix.from_rows(grid, Field.RAT))
    return LieAlgebraBasis.from_matrices(mats, name or f"SO({p},{q})")


def _unitary_basis(p: int, special: bool) -> List[ExactMatrix]:
    """u(1,p) (or su(1,p)) on C^{1,p}: A = h S with S skew-hermitian, h = diag(-1, 1, ...)."""
    m = p + 1
    h = [-1] + [1] * p
    field = Field.GAUSS_RAT
    mats = []
    if special:
        for j in range(m - 1):
            grid = _elementary(m, j, j, I)
            grid[j + 1][j + 1] = -I
            mats.append(ExactMatrix.from_rows(grid, field))
    else:
        for j in range(m):
            mats.append(ExactMatrix.from_rows(_elementary(m, j, j, I), field))
    for j in range(m):
        for k in range(j + 1, m):
            real = _elementary(m, j, k, h[j])
            real[k][j] = -h[k]
            imag = _elementary(m, j, k, I * h[j])
            imag[k][j] = I * h[k]
            mats.append(ExactMatrix.from_rows(real, field))
            mats.append(ExactMatrix.from_rows(imag, field))
    return mats


def unitary_1p(p: int, special: bool = False) -> LieAlgebraBasis:
    """u(1,p) or su(1,p) as complex matrices on C^{1,p}."""
    if p < 1:
        raise BadParams(f"u(1,{p}) needs p >= 1")
    name = f"{'SU' if special else 'U'}(1,{p})"
    return LieAlgebraBasis.from_matrices(_unitary_basis(p, special), name)


def _u1p_real(p: int) -> LieAlgebraBasis:
    return realify_algebra(unitary_1p(p), f"U(1,{p})_real")


def _su1p_real(p: int) -> LieAlgebraBasis:
    return realify_algebra(unitary_1p(p, special=True), f"SU(1,{p})_real")


def _s1_so1p_real(p: int) -> LieAlgebraBasis:
    if p < 1:
        raise BadParams(f"S1.SO(1,{p}) needs p >= 1")
    return circle_extension(so_pq(1, p), f"S1_SO(1,{p})_real")


def _quad(a: Scalar, b: Scalar = 0) -> QuadExt:
    return QuadExt(Fraction(a), Fraction(b), APPENDIX_D)


def appendix_matrices() -> Dict[str, ExactMatrix]:
    """U, V, W of so(5) and the symmetric U*, V* of so(2,3) (blocks split 2 | 3)."""
    s = _quad(0, 1)
    rows = {
        "U": [[0, 0, -2, 0, 0], [0, 0, 0, -1, 0], [2, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 0, 0, 0]],
        "V": [[0, 0, 0, -1, 0], [0, 0, -1, 0, -s], [0, 1, 0, 0, 0], [1, 0, 0, 0, 0], [0, s, 0, 0, 0]],
        "W": [[0, -1, 0, 0, 0], [1, 0, 0, 0, 0], [0, 0, 0, -1, 0], [0, 0, 1, 0, -s], [0, 0, 0, s, 0]],
        "U*": [[0, 0, -2, 0, 0], [0, 0, 0, -1, 0], [-2, 0, 0, 0, 0], [0, -1, 0, 0, 0], [0, 0, 0, 0, 0]],
        "V*": [[0, 0, 0, -1, 0], [0, 0, -1, 0, -s], [0, -1, 0, 0, 0], [-1, 0, 0, 0, 0], [0, -s, 0, 0, 0]],
    }
    return {key: ExactMatrix.from_rows(grid, Field.QUAD, APPENDIX_D) for key, grid in rows.items()}


def _appendix_so3() -> LieAlgebraBasis:
    mats = appendix_matrices()
    return LieAlgebraBasis.from_matrices([mats["U"], mats["V"], mats["W"]], "APPENDIX_SO3")


def _appendix_so12(n: int = 3) -> LieAlgebraBasis:
    if n < 3:
        raise BadParams(f"APPENDIX_SO12 needs n >= 3, got {n}")
    mats = appendix_matrices()
    g = LieAlgebraBasis.from_matrices([mats["U*"], mats["V*"], mats["W"]], "APPENDIX_SO12")
    if n == 3:
        return g
    return place_algebra(g, range(5), n + 2, f"APPENDIX_SO12(n={n})")


def sl2() -> LieAlgebraBasis:
    h = ExactMatrix.from_rows([[1, 0], [0, -1]])
    e = ExactMatrix.from_rows([[0, 1], [0, 0]])
    f = ExactMatrix.from_rows([[0, 0], [1, 0]])
    return LieAlgebraBasis.from_matrices([h, e, f], "SL2")


def _sl2_sl2_on_r22() -> LieAlgebraBasis:
    """sl2 + sl2 acting on R^2 (x) R^2, moved so the invariant form is 2 eta(2,2)."""
    ident = ExactMatrix.identity(2)
    tensor = [kron(X, ident) for X in sl2().basis] + [kron(ident, X) for X in sl2().basis]
    P = ExactMatrix.from_rows([[1, 0, 1, 0], [0, 1, 0, 1], [0, 1, 0, -1], [-1, 0, 1, 0]])
    P_inv = P.transpose().scale(Fraction(1, 2))
    return LieAlgebraBasis.from_matrices([P_inv @ A @ P for A in tensor], "SL2_SL2_on_R22")


def _so12_block_p2(n: int = 3) -> LieAlgebraBasis:
    """so(2,1) on the coordinates 0, 1, 2 of R^{2,n}."""
    if n < 1:
        raise BadParams(f"SO12_BLOCK_P2 needs n >= 1, got {n}")
    return place_algebra(so_pq(2, 1), range(3), n + 2, f"SO12_BLOCK_P2(n={n})")


def _so12_block(n: int = 3) -> LieAlgebraBasis:
    """so(1,2) on the coordinates 1, 2, 3 of R^{2,n}."""
    if n < 2:
        raise BadParams(f"SO12_BLOCK needs n >= 2, got {n}")
    return place_algebra(so_pq(1, 2), range(1, 4), n + 2, f"SO12_BLOCK(n={n})")


def _so1k_in_su(k: int, p: int) -> LieAlgebraBasis:
    """so(1,k) acting C-linearly on the first k+1 coordinates of C^{1,p}, realified."""
    if not 1 <= k <= p:
        raise BadParams(f"SO1K_IN_SU needs 1 <= k <= p, got k={k}, p={p}")
    g = so_pq(1, k)
    mats = [realify(place(complexify(A), range(k + 1), p + 1)) for A in g.basis]
    return LieAlgebraBasis.from_matrices(mats, f"SO1K_IN_SU(k={k},p={p})")


def g2_coordinates(k1: int, k2: int) -> Tuple[List[int], List[int]]:
    """Real coordinates of the two hyperbolic factors of [x0 : i y0 : x1.. : i y1.. : 0..]."""
    return [0] + list(range(2, k1 + 2)), [1] + list(range(k1 + 2, k1 + k2 + 2))


def _so1k1_so1k2(k1: int, k2: int, n: int) -> LieAlgebraBasis:
    if k1 < 1 or k2 < 1 or k1 + k2 > n:
        raise BadParams(f"SO1K1_SO1K2 needs k1, k2 >= 1 and k1 + k2 <= n, got {k1}, {k2}, {n}")
    xs, ys = g2_coordinates(k1, k2)
    mats = [place(A, xs, n + 2) for A in so_pq(1, k1).basis]
    mats += [place(A, ys, n + 2) for A in so_pq(1, k2).basis]
    return LieAlgebraBasis.from_matrices(mats, f"SO1K1_SO1K2(k1={k1},k2={k2},n={n})")


def _so1k_p1(k: int, n: int) -> LieAlgebraBasis:
    """so(1,k) on the coordinates 1..k+1, fixing e0."""
    if not 1 <= k <= n:
        raise BadParams(f"SO1K_P1 needs 1 <= k <= n, got k={k}, n={n}")
    return place_algebra(so_pq(1, k), range(1, k + 2), n + 2, f"SO1K_P1(k={k},n={n})")


def su2() -> LieAlgebraBasis:
    field = Field.GAUSS_RAT
    mats = [
        ExactMatrix.from_rows([[I, 0], [0, -I]], field),
        ExactMatrix.from_rows([[0, 1], [-1, 0]], field),
        ExactMatrix.from_rows([[0, I], [I, 0]], field),
    ]
    return LieAlgebraBasis.from_matrices(mats, "SU2")


def _su2_real() -> LieAlgebraBasis:
    return realify_algebra(su2(), "SU2_real")


def _u1_weight(weight: int = 1) -> LieAlgebraBasis:
    mats = [ExactMatrix.from_rows([[I * weight]], Field.GAUSS_RAT)]
    return LieAlgebraBasis.from_matrices(mats, f"U1_WEIGHT({weight})", 1, Field.GAUSS_RAT)


def quaternionic_structure(m: int, field: Field = Field.GAUSS_RAT, D: int = DEFAULT_D) -> ExactMatrix:
    """M = diag([[0, -1], [1, 0]] x m); x -> M conj(x) squares to -Id on C^{2m}."""
    grid: List[List[Scalar]] = [[Fraction(0)] * (2 * m) for _ in range(2 * m)]
    for b in range(m):
        grid[2 * b][2 * b + 1] = -1
        grid[2 * b + 1][2 * b] = 1
    return ExactMatrix.from_rows(grid, field, D)


def _so_star(m: int = 1) -> LieAlgebraBasis:
    """so*(2m) = {A in so(2m, C) : A M = M conj(A)} for the quaternionic structure M."""
    if m < 1:
        raise BadParams(f"SO_STAR needs m >= 1, got {m}")
    n = 2 * m
    M = quaternionic_structure(m, Field.RAT)
    n2 = n * n

    # unknowns: X then Y with A = X + iY; X, Y skew, X M = M X, Y M = -M Y
    def conditions(vec: Sequence[Scalar]) -> List[Scalar]:
        X = ExactMatrix.from_flat(vec[:n2], n, n, Field.RAT)
        Y = ExactMatrix.from_flat(vec[n2:], n, n, Field.RAT)
        parts = [X + X.transpose(), Y + Y.transpose(), X @ M - M @ X, Y @ M + M @ Y]
        return [x for P in parts for x in P.flatten()]

    columns = []
    for k in range(2 * n2):
        unit = [Fraction(0)] * (2 * n2)
        unit[k] = Fraction(1)
        columns.append(conditions(unit))
    sols = solution_space(zip(*columns), 2 * n2, Field.RAT)
    mats = []
    for v in sols.basis:
        grid = [[GaussExt(v[i * n + j], v[n2 + i * n + j]) for j in range(n)] for i in range(n)]
        mats.append(ExactMatrix.from_rows(grid, Field.GAUSS_RAT))
    return LieAlgebraBasis.from_matrices(mats, f"SO_STAR({m})", n, Field.GAUSS_RAT)


_Builder = Callable[..., LieAlgebraBasis]

BUILTINS: Dict[str, Tuple[_Builder, Tuple[str, ...]]] = {
    "SO(p,q)": (lambda p, q: so_pq(p, q), ("p", "q")),
    "U(1,p)_real": (_u1p_real, ("p",)),
    "SU(1,p)_real": (_su1p_real, ("p",)),
    "S1_SO(1,p)_real": (_s1_so1p_real, ("p",)),
    "APPENDIX_SO12": (_appendix_so12, ("n",)),
    "APPENDIX_SO3": (_appendix_so3, ()),
    "SL2_SL2_on_R22": (_sl2_sl2_on_r22, ()),
    "SO12_BLOCK_P2": (_so12_block_p2, ("n",)),
    "SO12_BLOCK": (_so12_block, ("n",)),
    "SO1K_IN_SU": (_so1k_in_su, ("k", "p")),
    "SO1K1_SO1K2": (_so1k1_so1k2, ("k1", "k2", "n")),
    "SO1K_P1": (_so1k_p1, ("k", "n")),
    "SL2": (sl2, ()),
    "SU2": (su2, ()),
    "SU2_real": (_su2_real, ()),
    "U1_WEIGHT": (_u1_weight, ("weight",)),
    "SO_STAR": (_so_star, ("m",)),
}

_CONCRETE = re.compile(r"^(SO|U|SU|S1_SO)\((\d+),(\d+)\)(_real)?$")


def resolve_builtin(name: str, params: Optional[Mapping[str, int]] = None) -> Tuple[str, Dict[str, int]]:
    """Map a builtin name (generic like "U(1,p)_real" or concrete like "U(1,2)_real") to key and params."""
    params = dict(params or {})
    if name in BUILTINS:
        return name, params
    match = _CONCRETE.match(name)
    if match is None:
        raise BadParams(f"unknown builtin algebra {name!r}")
    family, a, b, real = match.group(1), int(match.group(2)), int(match.group(3)), match.group(4)
    if family == "SO" and not real:
        found = {"p": a, "q": b}
        key = "SO(p,q)"
    elif family != "SO" and real and a == 1:
        found = {"p": b}
        key = f"{family}(1,p)_real"
    else:
        raise BadParams(f"unknown builtin algebra {name!r}")
    for k, v in found.items():
        if params.setdefault(k, v) != v:
            raise BadParams(f"parameter {k}={params[k]} conflicts with the name {name!r}")
    return key, params


def builtin(name: str, params: Optional[Mapping[str, int]] = None) -> LieAlgebraBasis:
    key, params = resolve_builtin(name, params)
    build, names = BUILTINS[key]
    unknown = set(params) - set(names)
    if unknown:
        raise BadParams(f"{key} does not take parameter(s) {', '.join(sorted(unknown))}")
    try:
        values = {k: int(v) for k, v in params.items()}
        inspect.signature(build).bind(**values)
    except (TypeError, ValueError) as err:
        raise BadParams(f"{key}: {err}") from err
    g = build(**values)
    log.debug("built %s with dimension %d on R^%d", g.name, g.dim, g.ambient_dim)
    return g
