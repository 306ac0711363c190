"""Dense exact linear algebra over the scalar fields of ``lieball.scalar``.

Rational systems are reduced fraction-free on integer rows (each row kept
primitive); the other fields use ordinary Gauss-Jordan steps with exact
division. Subspaces are kept as reduced row echelon bases so two bases of the
same subspace compare equal.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .const import DEFAULT_D
from .errors import DimensionMismatch, FieldMismatch
from .scalar import Field, Scalar, coerce, conj, field_of, join_fields, one, zero

log = logging.getLogger(__name__)

Vector = Tuple[Scalar, ...]


def _dot(row: Sequence[Scalar], vec: Sequence[Scalar], z: Scalar) -> Scalar:
    s = z
    for a, x in zip(row, vec):
        if a and x:
            s = s + a * x
    return s


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: Tuple[Tuple[Scalar, ...], ...]
    field: Field = Field.RAT
    D: int = DEFAULT_D

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise DimensionMismatch(f"matrix dimensions must be >= 1, got {self.rows}x{self.cols}")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch("entry grid does not match the declared shape")

    @classmethod
    def from_rows(
        cls,
        rows: Iterable[Iterable[Scalar]],
        field: Optional[Field] = None,
        D: int = DEFAULT_D,
    ) -> "ExactMatrix":
        grid = [list(r) for r in rows]
        if not grid or not grid[0]:
            raise DimensionMismatch("matrix needs at least one row and one column")
        if field is None:
            field = Field.RAT
            for r in grid:
                for x in r:
                    field = join_fields(field, field_of(x))
        entries = tuple(tuple(coerce(x, field, D) for x in r) for r in grid)
        return cls(len(grid), len(grid[0]), entries, field, D)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = Field.RAT, D: int = DEFAULT_D) -> "ExactMatrix":
        z = zero(field, D)
        return cls(rows, cols, tuple((z,) * cols for _ in range(rows)), field, D)

    @classmethod
    def identity(cls, n: int, field: Field = Field.RAT, D: int = DEFAULT_D) -> "ExactMatrix":
        return cls.diagonal([one(field, D)] * n, field, D)

    @classmethod
    def diagonal(cls, values: Sequence[Scalar], field: Optional[Field] = None, D: int = DEFAULT_D) -> "ExactMatrix":
        n = len(values)
        z = Fraction(0)
        return cls.from_rows([[values[i] if i == j else z for j in range(n)] for i in range(n)], field, D)

    @classmethod
    def from_flat(cls, flat: Sequence[Scalar], rows: int, cols: int, field: Field, D: int = DEFAULT_D) -> "ExactMatrix":
        if len(flat) != rows * cols:
            raise DimensionMismatch(f"{len(flat)} entries cannot fill a {rows}x{cols} matrix")
        entries = tuple(tuple(flat[i * cols:(i + 1) * cols]) for i in range(rows))
        return cls(rows, cols, entries, field, D)

    def __getitem__(self, ij: Tuple[int, int]) -> Scalar:
        i, j = ij
        return self.entries[i][j]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def zero_scalar(self) -> Scalar:
        return zero(self.field, self.D)

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def flatten(self) -> Vector:
        return tuple(x for r in self.entries for x in r)

    def with_field(self, field: Field) -> "ExactMatrix":
        if field is self.field:
            return self
        return ExactMatrix.from_rows(self.entries, field, self.D)

    def is_zero(self) -> bool:
        return not any(x for r in self.entries for x in r)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, tuple(zip(*self.entries)), self.field, self.D)

    T = property(transpose)

    def conj(self) -> "ExactMatrix":
        if not self.field.is_gaussian:
            return self
        return ExactMatrix(self.rows, self.cols, tuple(tuple(conj(x) for x in r) for r in self.entries), self.field, self.D)

    def adjoint(self) -> "ExactMatrix":
        """Conjugate transpose."""
        return self.conj().transpose()

    def trace(self) -> Scalar:
        if not self.is_square:
            raise DimensionMismatch("trace of a non-square matrix")
        s = self.zero_scalar
        for i in range(self.rows):
            s = s + self.entries[i][i]
        return s

    def scale(self, c: Scalar) -> "ExactMatrix":
        if self.field.is_gaussian:
            c = coerce(c, self.field, self.D)
        return ExactMatrix(self.rows, self.cols, tuple(tuple(c * x for x in r) for r in self.entries), self.field, self.D)

    def apply(self, vec: Sequence[Scalar]) -> Vector:
        if len(vec) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vec)} against {self.cols} columns")
        z = self.zero_scalar
        return tuple(_dot(r, vec, z) for r in self.entries)

    def _check(self, other: "ExactMatrix") -> None:
        if self.field is not other.field:
            raise FieldMismatch(f"{self.field.value} matrix combined with {other.field.value} matrix")
        if self.field.has_radical and self.D != other.D:
            raise FieldMismatch(f"sqrt({self.D}) matrix combined with sqrt({other.D}) matrix")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch(f"{self.rows}x{self.cols} + {other.rows}x{other.cols}")
        entries = tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries))
        return ExactMatrix(self.rows, self.cols, entries, self.field, self.D)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch(f"{self.rows}x{self.cols} - {other.rows}x{other.cols}")
        entries = tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries))
        return ExactMatrix(self.rows, self.cols, entries, self.field, self.D)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, tuple(tuple(-x for x in r) for r in self.entries), self.field, self.D)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return matmul(self, other)


def matmul(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    A._check(B)
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    z = A.zero_scalar
    cols = list(zip(*B.entries))
    entries = tuple(tuple(_dot(r, c, z) for c in cols) for r in A.entries)
    return ExactMatrix(A.rows, B.cols, entries, A.field, A.D)


def bracket(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    """Commutator AB - BA."""
    return matmul(A, B) - matmul(B, A)


def kron(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    A._check(B)
    rows = []
    for ra in A.entries:
        for rb in B.entries:
            rows.append(tuple(a * b for a in ra for b in rb))
    return ExactMatrix(A.rows * B.rows, A.cols * B.cols, tuple(rows), A.field, A.D)


def unit_vector(n: int, i: int, field: Field = Field.RAT, D: int = DEFAULT_D) -> Vector:
    z, o = zero(field, D), one(field, D)
    return tuple(o if k == i else z for k in range(n))


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    """Bilinear pairing sum u_k v_k (no conjugation)."""
    s: Scalar = Fraction(0)
    for a, b in zip(u, v):
        s = s + a * b
    return s


def _primitive(row: List[int]) -> List[int]:
    g = 0
    for x in row:
        if x:
            g = math.gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


class Echelon:
    """Incrementally maintained reduced row echelon basis of a row space."""

    def __init__(self, ncols: int, field: Field = Field.RAT, D: int = DEFAULT_D):
        self.ncols = ncols
        self.field = field
        self.D = D
        self._integral = field is Field.RAT
        self._rows: Dict[int, list] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _prepare(self, row: Sequence[Scalar]) -> list:
        if len(row) != self.ncols:
            raise DimensionMismatch(f"row of length {len(row)} in a {self.ncols}-column system")
        if not self._integral:
            return list(row)
        fr = [Fraction(x) for x in row]
        den = 1
        for x in fr:
            if x:
                den = den * x.denominator // math.gcd(den, x.denominator)
        return [x.numerator * (den // x.denominator) for x in fr]

    def _reduce(self, r: list) -> list:
        for c, p in self._rows.items():
            rc = r[c]
            if not rc:
                continue
            if self._integral:
                pc = p[c]
                r = _primitive([pc * x - rc * y for x, y in zip(r, p)])
            else:
                r = [x - rc * y if y else x for x, y in zip(r, p)]
        return r

    def reduce(self, row: Sequence[Scalar]) -> list:
        return self._reduce(self._prepare(row))

    def contains(self, row: Sequence[Scalar]) -> bool:
        return not any(self.reduce(row))

    def add(self, row: Sequence[Scalar]) -> bool:
        """Add a row; returns True when it enlarged the row space."""
        r = self.reduce(row)
        c = next((k for k, x in enumerate(r) if x), None)
        if c is None:
            return False
        if self._integral:
            if r[c] < 0:
                r = [-x for x in r]
        else:
            inv = one(self.field, self.D) / r[c]
            r = [x * inv if x else x for x in r]
        for pc, p in list(self._rows.items()):
            pv = p[c]
            if not pv:
                continue
            if self._integral:
                self._rows[pc] = _primitive([r[c] * x - pv * y for x, y in zip(p, r)])
                if self._rows[pc][pc] < 0:
                    self._rows[pc] = [-x for x in self._rows[pc]]
            else:
                self._rows[pc] = [x - pv * y if y else x for x, y in zip(p, r)]
        self._rows[c] = r
        return True

    def pivots(self) -> List[int]:
        return sorted(self._rows)

    def nullspace(self) -> "Subspace":
        """{x : r . x = 0 for every row r} of the system built so far."""
        rows, pivots = self.rows(), self.pivots()
        z, o = zero(self.field, self.D), one(self.field, self.D)
        pivot_set = set(pivots)
        vectors = []
        for f in range(self.ncols):
            if f in pivot_set:
                continue
            v = [z] * self.ncols
            v[f] = o
            for r, c in zip(rows, pivots):
                if r[f]:
                    v[c] = -r[f]
            vectors.append(v)
        return span(vectors, self.ncols, self.field, self.D)

    def rows(self) -> List[Vector]:
        """Normalized rows (pivot entries 1), ordered by pivot column."""
        out = []
        for c in sorted(self._rows):
            r = self._rows[c]
            if self._integral:
                out.append(tuple(Fraction(x, r[c]) for x in r))
            else:
                out.append(tuple(coerce(x, self.field, self.D) for x in r))
        return out


@dataclass(frozen=True)
class Subspace:
    """A subspace of K^ambient_dim given by its reduced echelon basis."""

    ambient_dim: int
    basis: Tuple[Vector, ...]
    field: Field = Field.RAT
    D: int = DEFAULT_D

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.ambient_dim

    def is_proper(self) -> bool:
        return 0 < len(self.basis) < self.ambient_dim

    def echelon(self) -> Echelon:
        ech = Echelon(self.ambient_dim, self.field, self.D)
        for b in self.basis:
            ech.add(b)
        return ech

    def contains(self, vec: Sequence[Scalar]) -> bool:
        return self.echelon().contains(vec)

    def contains_all(self, vecs: Iterable[Sequence[Scalar]]) -> bool:
        ech = self.echelon()
        return all(ech.contains(v) for v in vecs)

    def __add__(self, other: "Subspace") -> "Subspace":
        return span(list(self.basis) + list(other.basis), self.ambient_dim, self.field, self.D)

    def annihilator(self) -> "Subspace":
        """{x : b . x = 0 for every basis vector b}."""
        if not self.basis:
            return Subspace.full(self.ambient_dim, self.field, self.D)
        return kernel(ExactMatrix(len(self.basis), self.ambient_dim, self.basis, self.field, self.D))

    def intersection(self, other: "Subspace") -> "Subspace":
        return (self.annihilator() + other.annihilator()).annihilator()

    def as_matrices(self, rows: int, cols: int) -> List[ExactMatrix]:
        return [ExactMatrix.from_flat(b, rows, cols, self.field, self.D) for b in self.basis]

    @classmethod
    def zero(cls, n: int, field: Field = Field.RAT, D: int = DEFAULT_D) -> "Subspace":
        return cls(n, (), field, D)

    @classmethod
    def full(cls, n: int, field: Field = Field.RAT, D: int = DEFAULT_D) -> "Subspace":
        return cls(n, tuple(unit_vector(n, i, field, D) for i in range(n)), field, D)


def span(vectors: Iterable[Sequence[Scalar]], ambient_dim: int, field: Field = Field.RAT, D: int = DEFAULT_D) -> Subspace:
    ech = Echelon(ambient_dim, field, D)
    for v in vectors:
        ech.add(v)
    return Subspace(ambient_dim, tuple(ech.rows()), field, D)


def _rref(A: ExactMatrix) -> Tuple[List[Vector], List[int]]:
    ech = Echelon(A.cols, A.field, A.D)
    for r in A.entries:
        ech.add(r)
    return ech.rows(), ech.pivots()


def solution_space(
    equations: Iterable[Sequence[Scalar]],
    nvars: int,
    field: Field = Field.RAT,
    D: int = DEFAULT_D,
) -> Subspace:
    """Solutions of the homogeneous system whose coefficient rows are given."""
    ech = Echelon(nvars, field, D)
    for row in equations:
        if any(row):
            ech.add(row)
            if ech.rank == nvars:
                break
    return ech.nullspace()


def kernel(A: ExactMatrix) -> Subspace:
    return solution_space(A.entries, A.cols, A.field, A.D)


def rank(A: ExactMatrix) -> int:
    ech = Echelon(A.cols, A.field, A.D)
    for r in A.entries:
        ech.add(r)
    return ech.rank


def solve(A: ExactMatrix, b: Sequence[Scalar]) -> Optional[Vector]:
    """Some x with A x = b, or None when the system is inconsistent."""
    if len(b) != A.rows:
        raise DimensionMismatch(f"right-hand side of length {len(b)} for {A.rows} equations")
    aug = ExactMatrix(A.rows, A.cols + 1, tuple(tuple(r) + (coerce(x, A.field, A.D),) for r, x in zip(A.entries, b)), A.field, A.D)
    rows, pivots = _rref(aug)
    if pivots and pivots[-1] == A.cols:
        return None
    x = [zero(A.field, A.D)] * A.cols
    for r, c in zip(rows, pivots):
        x[c] = r[A.cols]
    return tuple(x)


def spin(
    generators: Sequence[ExactMatrix],
    seeds: Iterable[Sequence[Scalar]],
    ambient_dim: int,
    field: Field = Field.RAT,
    D: int = DEFAULT_D,
) -> Subspace:
    """Smallest subspace containing the seeds and invariant under the generators."""
    ech = Echelon(ambient_dim, field, D)
    queue = []
    for s in seeds:
        if ech.add(s):
            queue.append(tuple(s))
    while queue and ech.rank < ambient_dim:
        v = queue.pop()
        for g in generators:
            w = g.apply(v)
            if ech.add(w):
                queue.append(w)
    return Subspace(ambient_dim, tuple(ech.rows()), field, D)


def is_invariant(generators: Sequence[ExactMatrix], sub: Subspace) -> bool:
    ech = sub.echelon()
    return all(ech.contains(g.apply(b)) for g in generators for b in sub.basis)


# polynomials are coefficient lists, constant term first


def poly_trim(p: Sequence[Scalar]) -> List[Scalar]:
    p = list(p)
    while len(p) > 1 and not p[-1]:
        p.pop()
    return p


def poly_degree(p: Sequence[Scalar]) -> int:
    p = poly_trim(p)
    return -1 if len(p) == 1 and not p[0] else len(p) - 1


def poly_mul(a: Sequence[Scalar], b: Sequence[Scalar]) -> List[Scalar]:
    out: List[Scalar] = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return poly_trim(out)


def poly_divmod(a: Sequence[Scalar], b: Sequence[Scalar]) -> Tuple[List[Scalar], List[Scalar]]:
    b = poly_trim(b)
    db = poly_degree(b)
    if db < 0:
        raise DimensionMismatch("polynomial division by zero")
    rem = poly_trim(a)
    if poly_degree(rem) < db:
        return [Fraction(0)], rem
    quo: List[Scalar] = [Fraction(0)] * (len(rem) - db)
    lead = b[-1]
    while poly_degree(rem) >= db:
        shift = len(rem) - 1 - db
        c = rem[-1] / lead
        quo[shift] = c
        for k, y in enumerate(b):
            rem[shift + k] = rem[shift + k] - c * y
        rem.pop()
        rem = poly_trim(rem) if rem else [Fraction(0)]
    return poly_trim(quo), rem


def poly_monic(p: Sequence[Scalar]) -> List[Scalar]:
    p = poly_trim(p)
    lead = p[-1]
    return [x / lead for x in p]


def poly_gcd(a: Sequence[Scalar], b: Sequence[Scalar]) -> List[Scalar]:
    a, b = poly_trim(a), poly_trim(b)
    while poly_degree(b) >= 0:
        a, b = b, poly_divmod(a, b)[1]
    return poly_monic(a)


def poly_derivative(p: Sequence[Scalar]) -> List[Scalar]:
    if len(p) == 1:
        return [Fraction(0)]
    return poly_trim([k * p[k] for k in range(1, len(p))])


def squarefree_part(p: Sequence[Scalar]) -> List[Scalar]:
    g = poly_gcd(p, poly_derivative(p))
    return poly_monic(poly_divmod(p, g)[0])


def poly_eval(p: Sequence[Scalar], x: Scalar) -> Scalar:
    acc: Scalar = Fraction(0)
    for c in reversed(list(p)):
        acc = acc * x + c
    return acc


def poly_eval_matrix(p: Sequence[Scalar], A: ExactMatrix) -> ExactMatrix:
    """p(A) by Horner's rule."""
    n = A.rows
    ident = ExactMatrix.identity(n, A.field, A.D)
    p = poly_trim(p)
    result = ident.scale(p[-1])
    for c in reversed(p[:-1]):
        result = matmul(result, A) + ident.scale(c)
    return result


def charpoly(A: ExactMatrix) -> List[Scalar]:
    """Monic characteristic polynomial by the Faddeev-LeVerrier recurrence."""
    if not A.is_square:
        raise DimensionMismatch(f"charpoly of a {A.rows}x{A.cols} matrix")
    n = A.rows
    ident = ExactMatrix.identity(n, A.field, A.D)
    coeffs: List[Scalar] = [zero(A.field, A.D)] * (n + 1)
    coeffs[n] = one(A.field, A.D)
    M = ExactMatrix.zeros(n, n, A.field, A.D)
    for k in range(1, n + 1):
        M = matmul(A, M) + ident.scale(coeffs[n - k + 1])
        coeffs[n - k] = -matmul(A, M).trace() / k
    return coeffs
