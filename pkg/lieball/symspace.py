"""The Lie ball of R^{2,n} and its totally geodesic pieces, in exact arithmetic.

Points of the Lie ball are negative definite oriented 2-planes of R^{2,n},
written projectively as Z = A + iB on the quadric
-z0^2 - z1^2 + z2^2 + ... + z_{n+1}^2 = 0 with q(Z, Z) < 0 and
Im(conj(z0) z1) > 0 (the component of Pi_0 = [1 : i : 0 : ... : 0]).
Complex coordinates of C^{1,k} are interleaved: w_j sits at (2j, 2j+1).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import List, Optional, Sequence, Tuple, Union

from .const import DEFAULT_D
from .errors import (
    BadParams,
    BadStructure,
    DimensionMismatch,
    DomainViolation,
    FieldMismatch,
    NotInLieBall,
    NotInM,
    NotLightlike,
    NotNegativePlane,
)
from .liealg import (
    LieAlgebraBasis,
    SignatureForm,
    _so12_block_p2,
    _so1k1_so1k2,
    _so1k_in_su,
    _so1k_p1,
    _su1p_real,
    place_algebra,
    so_pq,
)
from .matrix import ExactMatrix, Subspace, bracket, solution_space, span, spin
from .scalar import (
    I,
    Field,
    GaussExt,
    Scalar,
    abs2,
    coerce,
    conj,
    field_of,
    format_scalar,
    imag_part,
    join_fields,
    sqrt_in_field,
    real_part,
    sign,
)

log = logging.getLogger(__name__)


class Variant(str, Enum):
    NONCOMPACT = "NONCOMPACT"
    COMPACT = "COMPACT"


class EmbeddingType(str, Enum):
    I1 = "I1"
    I2 = "I2"
    G1 = "G1"
    G2 = "G2"
    P1 = "P1"
    P2 = "P2"


# Cartan decompositions


@dataclass(frozen=True)
class CartanDecomposition:
    n: int
    variant: Variant
    algebra: LieAlgebraBasis
    k_basis: Tuple[ExactMatrix, ...]
    m_basis: Tuple[ExactMatrix, ...]

    def m_subspace(self, field: Field = Field.RAT, D: int = DEFAULT_D) -> Subspace:
        size = (self.n + 2) ** 2
        return span([ExactMatrix.from_rows(X.entries, field, D).flatten() for X in self.m_basis], size, field, D)

    def k_subspace(self, field: Field = Field.RAT, D: int = DEFAULT_D) -> Subspace:
        size = (self.n + 2) ** 2
        return span([ExactMatrix.from_rows(X.entries, field, D).flatten() for X in self.k_basis], size, field, D)


def _unit(size: int, pairs: Sequence[Tuple[int, int, int]]) -> ExactMatrix:
    grid = [[Fraction(0)] * size for _ in range(size)]
    for i, j, v in pairs:
        grid[i][j] = Fraction(v)
    return ExactMatrix.from_rows(grid, Field.RAT)


def off_diagonal(u: Sequence[Scalar], v: Sequence[Scalar], variant: Variant = Variant.NONCOMPACT) -> ExactMatrix:
    """M(u, v): the 2 x n upper block has rows u, v; the lower block is X^T (or -X^T when compact)."""
    if len(u) != len(v):
        raise DimensionMismatch("u and v must have the same length")
    n = len(u)
    field = Field.RAT
    for x in list(u) + list(v):
        field = join_fields(field, field_of(x))
    grid: List[List[Scalar]] = [[Fraction(0)] * (n + 2) for _ in range(n + 2)]
    lower = 1 if variant is Variant.NONCOMPACT else -1
    for a, row in enumerate((u, v)):
        for b, x in enumerate(row):
            grid[a][2 + b] = x
            grid[2 + b][a] = lower * x
    return ExactMatrix.from_rows(grid, field)


def cartan(n: int, variant: Variant = Variant.NONCOMPACT) -> CartanDecomposition:
    """so(2,n) = k + m* (symmetric off-diagonal blocks) or so(n+2) = k + m (skew ones)."""
    if n < 1:
        raise BadParams(f"cartan needs n >= 1, got {n}")
    size = n + 2
    k = [_unit(size, [(0, 1, 1), (1, 0, -1)])]
    k += [_unit(size, [(i, j, 1), (j, i, -1)]) for i in range(2, size) for j in range(i + 1, size)]
    lower = 1 if variant is Variant.NONCOMPACT else -1
    m = [_unit(size, [(a, 2 + b, 1), (2 + b, a, lower)]) for a in range(2) for b in range(n)]
    algebra = so_pq(2, n) if variant is Variant.NONCOMPACT else so_pq(0, n + 2)
    decomposition = CartanDecomposition(n, variant, algebra, tuple(k), tuple(m))
    _check_cartan(decomposition)
    return decomposition


def _check_cartan(dec: CartanDecomposition) -> None:
    k_sub, m_sub = dec.k_subspace(), dec.m_subspace()
    if dec.algebra.dim != len(dec.k_basis) + len(dec.m_basis):
        raise BadStructure("k + m does not exhaust the algebra")
    checks = [
        (dec.k_basis, dec.k_basis, k_sub, "[k,k]"),
        (dec.k_basis, dec.m_basis, m_sub, "[k,m]"),
        (dec.m_basis, dec.m_basis, k_sub, "[m,m]"),
    ]
    for left, right, target, label in checks:
        ech = target.echelon()
        for X, Y in product(left, right):
            if not ech.contains(bracket(X, Y).flatten()):
                raise BadStructure(f"{label} is not contained where it should be")
    log.debug("cartan decomposition of %s verified (k=%d, m=%d)", dec.algebra.name, len(dec.k_basis), len(dec.m_basis))


def _blocks_of(X: ExactMatrix) -> Tuple[int, List[List[Scalar]], List[List[Scalar]]]:
    if not X.is_square or X.rows < 3:
        raise NotInM(f"{X.rows}x{X.cols} matrix is not in m")
    n = X.rows - 2
    for i in range(X.rows):
        for j in range(X.cols):
            if (i < 2) == (j < 2) and X[i, j]:
                raise NotInM("diagonal blocks must vanish")
    upper = [[X[a, 2 + b] for b in range(n)] for a in range(2)]
    lower = [[X[2 + b, a] for a in range(2)] for b in range(n)]
    return n, upper, lower


def dualize(X: ExactMatrix) -> ExactMatrix:
    """The element of m* dual to X in m: the lower off-diagonal block changes sign."""
    n, upper, lower = _blocks_of(X)
    for a in range(2):
        for b in range(n):
            if lower[b][a] != -upper[a][b]:
                raise NotInM("off-diagonal blocks are not skew")
    grid = [list(r) for r in X.entries]
    for b in range(n):
        for a in range(2):
            grid[2 + b][a] = -grid[2 + b][a]
    return ExactMatrix(X.rows, X.cols, tuple(tuple(r) for r in grid), X.field, X.D)


def _as_matrices(space: Union[Subspace, Sequence[ExactMatrix]], size: int) -> List[ExactMatrix]:
    if isinstance(space, Subspace):
        return space.as_matrices(size, size)
    return list(space)


def is_lie_triple(m_prime: Union[Subspace, Sequence[ExactMatrix]], decomposition: CartanDecomposition) -> bool:
    """[[m', m'], m'] is contained in m'."""
    size = decomposition.n + 2
    mats = _as_matrices(m_prime, size)
    if not mats:
        return True
    field, D = Field.RAT, DEFAULT_D
    for X in mats:
        field = join_fields(field, X.field)
        D = X.D if X.field.has_radical else D
    mats = [ExactMatrix.from_rows(X.entries, field, D) for X in mats]
    m_ech = decomposition.m_subspace(field, D).echelon()
    for X in mats:
        if X.rows != size or not m_ech.contains(X.flatten()):
            raise NotInM("the subspace is not inside m")
    sub = span([X.flatten() for X in mats], size * size, field, D)
    basis = sub.as_matrices(size, size)
    ech = sub.echelon()
    for X, Y in product(basis, repeat=2):
        XY = bracket(X, Y)
        if XY.is_zero():
            continue
        for Z in basis:
            if not ech.contains(bracket(XY, Z).flatten()):
                return False
    return True


# projective points and planes


def _gaussian(values: Sequence[Scalar]) -> Tuple[Field, int]:
    field, D = Field.GAUSS_RAT, DEFAULT_D
    for x in values:
        field = join_fields(field, field_of(x))
        D = getattr(real_part(x), "D", getattr(imag_part(x), "D", D))
    return field.gaussian(), D


@dataclass(frozen=True, eq=False)
class ProjectivePoint:
    """Homogeneous coordinates [z0 : ... : z_{n+1}]; equality is projective."""

    coords: Tuple[GaussExt, ...]

    @classmethod
    def of(cls, values: Sequence[Scalar]) -> "ProjectivePoint":
        field, D = _gaussian(values)
        return cls(tuple(coerce(x, field, D) for x in values))

    def __post_init__(self):
        if len(self.coords) < 3:
            raise BadParams("a point of the quadric needs at least 3 coordinates")
        if not any(self.coords):
            raise BadParams("homogeneous coordinates cannot all vanish")

    @property
    def n(self) -> int:
        return len(self.coords) - 2

    def canonical(self) -> Tuple[Scalar, ...]:
        lead = next(x for x in self.coords if x)
        return tuple(x / lead for x in self.coords)

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __str__(self):
        return "[" + " : ".join(format_scalar(x) for x in self.coords) + "]"


def base_point(n: int) -> ProjectivePoint:
    """Pi_0 = [1 : i : 0 : ... : 0]."""
    return ProjectivePoint.of([Fraction(1), I] + [Fraction(0)] * n)


def quadric_residual(Z: ProjectivePoint) -> Scalar:
    z = Z.coords
    total = -(z[0] * z[0]) - z[1] * z[1]
    for x in z[2:]:
        total = total + x * x
    return total


def hermitian_norm(Z: ProjectivePoint):
    """q(Z, Z) = -|z0|^2 - |z1|^2 + sum |zj|^2."""
    z = Z.coords
    total = -abs2(z[0]) - abs2(z[1])
    for x in z[2:]:
        total = total + abs2(x)
    return total


def orientation(Z: ProjectivePoint) -> int:
    """Sign of Im(conj(z0) z1); positive on the component of Pi_0."""
    return sign(imag_part(conj(Z.coords[0]) * Z.coords[1]))


def on_quadric(Z: ProjectivePoint) -> bool:
    return not quadric_residual(Z)


def in_lieball(Z: ProjectivePoint) -> bool:
    return on_quadric(Z) and sign(hermitian_norm(Z)) < 0 and orientation(Z) > 0


def _eta_pairing(a: Sequence[Scalar], b: Sequence[Scalar]) -> Scalar:
    total = -(a[0] * b[0]) - a[1] * b[1]
    for x, y in zip(a[2:], b[2:]):
        total = total + x * y
    return total


@dataclass(frozen=True)
class NegativePlane:
    """Real vectors A, B with <A,B> = 0 and <A,A> = <B,B> < 0."""

    A: Tuple[Scalar, ...]
    B: Tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.A) != len(self.B) or len(self.A) < 3:
            raise NotNegativePlane("plane vectors must have the same length >= 3")
        if any(isinstance(x, GaussExt) for x in self.A + self.B):
            raise NotNegativePlane("plane vectors must be real")
        if _eta_pairing(self.A, self.B):
            raise NotNegativePlane("A and B are not orthogonal")
        qa, qb = _eta_pairing(self.A, self.A), _eta_pairing(self.B, self.B)
        if qa != qb or sign(qa) >= 0:
            raise NotNegativePlane("A and B must have equal negative norms")

    @property
    def field(self) -> Field:
        field = Field.RAT
        for x in self.A + self.B:
            field = join_fields(field, field_of(x))
        return field

    def subspace(self, field: Optional[Field] = None, D: int = DEFAULT_D) -> Subspace:
        field = join_fields(field or Field.RAT, self.field)
        D = next((x.D for x in self.A + self.B if hasattr(x, "D")), D)
        vecs = [tuple(coerce(x, field, D) for x in v) for v in (self.A, self.B)]
        return span(vecs, len(self.A), field, D)


def plane_to_point(P: NegativePlane) -> ProjectivePoint:
    return ProjectivePoint.of([GaussExt(a, b) for a, b in zip(P.A, P.B)])


def point_to_plane(Z: ProjectivePoint) -> NegativePlane:
    if not on_quadric(Z) or sign(hermitian_norm(Z)) >= 0:
        raise NotInLieBall(f"{Z} is not a negative point of the quadric")
    z = Z.canonical()
    return NegativePlane(tuple(real_part(x) for x in z), tuple(imag_part(x) for x in z))


# embeddings


@dataclass(frozen=True)
class EmbeddingSpec:
    kind: EmbeddingType
    n: int
    k: int = 1
    k2: int = 0

    def __post_init__(self):
        kind, n, k = EmbeddingType(self.kind), self.n, self.k
        object.__setattr__(self, "kind", kind)
        if n < 1:
            raise BadParams(f"n must be >= 1, got {n}")
        if kind in (EmbeddingType.I1, EmbeddingType.I2) and not 1 <= k <= n // 2:
            raise BadParams(f"{kind.value} needs 1 <= k <= n/2, got k={k}, n={n}")
        if kind is EmbeddingType.G1 and not 1 <= k <= n - 1:
            raise BadParams(f"G1 needs 1 <= k <= n-1, got k={k}, n={n}")
        if kind is EmbeddingType.G2 and (k < 1 or self.k2 < 1 or k + self.k2 > n):
            raise BadParams(f"G2 needs k1, k2 >= 1 and k1 + k2 <= n, got {k}, {self.k2}, n={n}")
        if kind is EmbeddingType.P1 and not 1 <= k <= n:
            raise BadParams(f"P1 needs 1 <= k <= n, got k={k}, n={n}")

    @property
    def input_length(self) -> int:
        """Number of input coordinates embed() expects."""
        if self.kind is EmbeddingType.G1:
            return self.k + 2
        if self.kind is EmbeddingType.P2:
            return 3
        if self.kind is EmbeddingType.G2:
            return self.k + self.k2 + 2
        return self.k + 1

    @property
    def label(self) -> str:
        if self.kind is EmbeddingType.G2:
            return f"G2(k1={self.k},k2={self.k2},n={self.n})"
        if self.kind is EmbeddingType.P2:
            return f"P2(n={self.n})"
        return f"{self.kind.value}(k={self.k},n={self.n})"


def _real_inputs(point: Sequence[Scalar]) -> List[Scalar]:
    out = []
    for x in point:
        if isinstance(x, GaussExt):
            if x.im:
                raise DomainViolation("this embedding takes real coordinates")
            x = x.re
        out.append(Fraction(x) if isinstance(x, int) else x)
    return out


def _level(x: Sequence[Scalar]) -> Scalar:
    """-x0^2 + x1^2 + ... + xk^2."""
    total = -(x[0] * x[0])
    for c in x[1:]:
        total = total + c * c
    return total


def _rescaled(x: Sequence[Scalar], ratio) -> List[Scalar]:
    root = sqrt_in_field(ratio)
    if root is None:
        raise DomainViolation("hyperboloid levels differ by an irrational factor; rescale the input")
    return [c * root for c in x]


def embed(spec: EmbeddingSpec, point: Sequence[Scalar]) -> ProjectivePoint:
    """Image of an input point under the embedding of the given type.

    I1 takes [z0 : ... : zk] with -|z0|^2 + sum |zi|^2 < 0; I2 the same with
    real coordinates; G1 a point of the Lie ball of R^{2,k}; P2 one of R^{2,1};
    G2 the concatenation of x (k1+1 reals) and y (k2+1 reals) in real
    hyperbolic space; P1 a real point with -x0^2 + sum xi^2 < 0.
    """
    if len(point) != spec.input_length:
        raise BadParams(f"{spec.label} takes {spec.input_length} coordinates, got {len(point)}")
    n, kind = spec.n, spec.kind
    pad = [Fraction(0)] * (n + 2)
    if kind in (EmbeddingType.I1, EmbeddingType.I2):
        z = _real_inputs(point) if kind is EmbeddingType.I2 else list(point)
        neg = -abs2(z[0])
        for c in z[1:]:
            neg = neg + abs2(c)
        if sign(neg) >= 0:
            raise DomainViolation(f"{spec.label}: -|z0|^2 + sum |zi|^2 must be negative")
        coords = list(pad)
        for j, c in enumerate(z):
            coords[2 * j] = c
            coords[2 * j + 1] = I * c
    elif kind in (EmbeddingType.G1, EmbeddingType.P2):
        inner = ProjectivePoint.of(list(point))
        if not in_lieball(inner):
            raise DomainViolation(f"{spec.label}: input is not in the Lie ball of R^(2,{inner.n})")
        coords = list(inner.coords) + pad[len(point):]
    elif kind is EmbeddingType.G2:
        values = _real_inputs(point)
        x, y = values[: spec.k + 1], values[spec.k + 1:]
        lx, ly = _level(x), _level(y)
        if sign(lx) >= 0 or sign(ly) >= 0:
            raise DomainViolation(f"{spec.label}: both factors must lie in real hyperbolic space")
        if sign(x[0]) < 0:
            x = [-c for c in x]
        if sign(y[0]) < 0:
            y = [-c for c in y]
        if lx != ly:
            y = _rescaled(y, lx / ly)
        coords = list(pad)
        coords[0], coords[1] = x[0], I * y[0]
        for j, c in enumerate(x[1:]):
            coords[2 + j] = c
        for j, c in enumerate(y[1:]):
            coords[spec.k + 2 + j] = I * c
    else:
        x = _real_inputs(point)
        level = _level(x)
        if sign(level) >= 0:
            raise DomainViolation(f"{spec.label}: -x0^2 + sum xi^2 must be negative")
        if sign(x[0]) > 0:
            x = [-c for c in x]
        if level != -1:
            x = _rescaled(x, -1 / level)
        coords = list(pad)
        coords[0] = I
        for j, c in enumerate(x):
            coords[1 + j] = c
    Z = ProjectivePoint.of(coords)
    if not (on_quadric(Z) and in_lieball(Z)):
        raise DomainViolation(f"{spec.label}: image {Z} left the Lie ball")
    return Z


def isometry_algebra(spec: EmbeddingSpec) -> LieAlgebraBasis:
    """Isometry algebra of the embedded piece, inside so(2,n)."""
    n, k, kind = spec.n, spec.k, spec.kind
    if kind is EmbeddingType.I1:
        return place_algebra(_su1p_real(k), range(2 * k + 2), n + 2, f"SU(1,{k}) in so(2,{n})")
    if kind is EmbeddingType.I2:
        return place_algebra(_so1k_in_su(k, k), range(2 * k + 2), n + 2, f"SO(1,{k}) in so(2,{n})")
    if kind is EmbeddingType.G1:
        return place_algebra(so_pq(2, k), range(k + 2), n + 2, f"SO(2,{k}) in so(2,{n})")
    if kind is EmbeddingType.G2:
        return _so1k1_so1k2(k, spec.k2, n)
    if kind is EmbeddingType.P1:
        return _so1k_p1(k, n)
    return _so12_block_p2(n)


# orbit hulls, fixers, parabolics


def _algebra_in(g: LieAlgebraBasis, field: Field, D: int) -> List[ExactMatrix]:
    return [ExactMatrix.from_rows(A.entries, field, D) for A in g.basis]


def _require_real(g: LieAlgebraBasis) -> None:
    if g.field.is_gaussian:
        raise FieldMismatch(f"{g.name or 'the algebra'} acts by complex matrices; realify it first")


def invariant_hull(g: LieAlgebraBasis, seeds: Sequence[Sequence[Scalar]]) -> Subspace:
    """Smallest g-invariant subspace containing the seeds."""
    field, D = g.field, g.D
    for v in seeds:
        for x in v:
            field = join_fields(field, field_of(x))
    vectors = [tuple(coerce(x, field, D) for x in v) for v in seeds]
    for v in vectors:
        if len(v) != g.ambient_dim:
            raise DimensionMismatch(f"seed of length {len(v)} in R^{g.ambient_dim}")
    hull = spin(_algebra_in(g, field, D), vectors, g.ambient_dim, field, D)
    log.debug("invariant hull of %d seed(s) under %s has dimension %d", len(vectors), g.name, hull.dim)
    return hull


def is_full(hull: Subspace) -> bool:
    return hull.is_full()


def orbit_hull(g: LieAlgebraBasis, Z: ProjectivePoint) -> Subspace:
    """Invariant hull of the plane of Z: the span of the lift of the orbit through Z."""
    P = point_to_plane(Z)
    return invariant_hull(g, [P.A, P.B])


def _coordinates(g: LieAlgebraBasis, X: ExactMatrix) -> List[Scalar]:
    """Coefficients of X in the reduced echelon basis of g (X assumed inside g)."""
    flat = X.flatten()
    coords = []
    for B in g.basis:
        b = B.flatten()
        pivot = next(i for i, x in enumerate(b) if x)
        coords.append(flat[pivot])
    return coords


def _combination(g: LieAlgebraBasis, c: Sequence[Scalar]) -> ExactMatrix:
    total = ExactMatrix.zeros(g.ambient_dim, g.ambient_dim, g.field, g.D)
    for ci, B in zip(c, g.basis):
        if ci:
            total = total + B.scale(ci)
    return total


def _stabilizer_rows(g: LieAlgebraBasis, target: Subspace, vectors: Sequence[Sequence[Scalar]]) -> List[List[Scalar]]:
    """Rows in the coefficients of X in g expressing X v in target for each v."""
    rows = []
    for w in target.annihilator().basis:
        for v in vectors:
            rows.append([sum((a * b for a, b in zip(w, B.apply(v))), g.basis[0].zero_scalar) for B in g.basis])
    return rows


def _from_coefficients(g: LieAlgebraBasis, sub: Subspace, name: str) -> LieAlgebraBasis:
    mats = [_combination(g, c) for c in sub.basis]
    return LieAlgebraBasis.from_matrices(mats, name, g.ambient_dim, g.field, g.D)


def fixer_algebra(g: LieAlgebraBasis, plane: NegativePlane) -> LieAlgebraBasis:
    """Largest ideal of g inside the stabilizer of the plane.

    Iterates N_{k+1} = {X in N_k : [g, X] in N_k} from the stabilizer; for a
    bracket-closed g this is the algebra of the pointwise fixer of the orbit.
    """
    if len(plane.A) != g.ambient_dim:
        raise NotNegativePlane(f"plane in R^{len(plane.A)} for an algebra on R^{g.ambient_dim}")
    _require_real(g)
    if g.dim == 0:
        return g.renamed("fixer")
    field, D = g.field, g.D
    target = plane.subspace(field, D)
    vectors = [tuple(coerce(x, field, D) for x in v) for v in (plane.A, plane.B)]
    current = solution_space(_stabilizer_rows(g, target, vectors), g.dim, field, D)
    ad = [[_coordinates(g, bracket(Bj, Bi)) for Bi in g.basis] for Bj in g.basis]
    while True:
        rows = []
        for w in current.annihilator().basis:
            rows.append(list(w))
            for j in range(g.dim):
                # w . (ad_j c) = sum_i c_i (w . coords[B_j, B_i])
                rows.append([sum((a * b for a, b in zip(w, ad[j][i])), g.basis[0].zero_scalar) for i in range(g.dim)])
        nxt = solution_space(rows, g.dim, field, D)
        if nxt.dim == current.dim:
            break
        current = nxt
    log.debug("fixer of the plane in %s has dimension %d", g.name, current.dim)
    return _from_coefficients(g, current, f"I({g.name})")


def stabilizes_line(X: ExactMatrix, v: Sequence[Scalar]) -> bool:
    Xv = X.apply(tuple(coerce(x, X.field, X.D) for x in v))
    return span([tuple(coerce(x, X.field, X.D) for x in v), Xv], X.rows, X.field, X.D).dim <= 1


def parabolic_algebra(p: int, q: int, v: Sequence[Scalar]) -> LieAlgebraBasis:
    """Stabilizer of the light-like line span{v} in so(p+1, q+1)."""
    eta = SignatureForm(p + 1, q + 1).diagonal()
    if len(v) != p + q + 2:
        raise NotLightlike(f"vector of length {len(v)} in R^({p + 1},{q + 1})")
    norm = sum((e * x * x for e, x in zip(eta, v)), Fraction(0))
    if not any(v) or norm:
        raise NotLightlike("v must be a nonzero light-like vector")
    g = so_pq(p + 1, q + 1)
    field = Field.RAT
    for x in v:
        field = join_fields(field, field_of(x))
    D = next((x.D for x in v if hasattr(x, "D")), g.D)
    if field is not Field.RAT:
        g = LieAlgebraBasis.from_matrices(_algebra_in(g, field, D), g.name)
    vec = tuple(coerce(x, field, D) for x in v)
    line = span([vec], len(vec), field, D)
    sub = solution_space(_stabilizer_rows(g, line, [vec]), g.dim, field, D)
    parabolic = _from_coefficients(g, sub, f"P({g.name})")
    log.debug("parabolic of %s has dimension %d", g.name, parabolic.dim)
    return parabolic


def local_transitivity(g: LieAlgebraBasis, p: LieAlgebraBasis, ambient: LieAlgebraBasis) -> bool:
    """g + p spans the whole ambient algebra."""
    if g.ambient_dim != ambient.ambient_dim or p.ambient_dim != ambient.ambient_dim:
        raise DimensionMismatch("g, p and the ambient algebra act on different spaces")
    for h in (g, p, ambient):
        _require_real(h)
    field, D = ambient.field, ambient.D
    for h in (g, p):
        field = join_fields(field, h.field)
        D = h.D if h.field.has_radical else D
    size = ambient.ambient_dim ** 2
    whole = span([A.flatten() for A in _algebra_in(ambient, field, D)], size, field, D)
    parts = span([A.flatten() for h in (g, p) for A in _algebra_in(h, field, D)], size, field, D)
    if not whole.contains_all(parts.basis):
        raise BadStructure("g and p must lie inside the ambient algebra")
    return parts.dim == whole.dim
