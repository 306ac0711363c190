"""Representation analysis: commutants, certified irreducibility, type, invariant forms.

Irreducibility follows the Norton/Holt-Rees criterion over the exact field:
for an element theta of the enveloping algebra and an irreducible factor p of
its characteristic polynomial with dim ker p(theta) = deg p, the module is
irreducible iff a kernel vector of p(theta) spins to the whole space under
the generators and a kernel vector of p(theta)^T spins to the whole space
under the transposed generators. Roots of characteristic polynomials are
located numerically only to propose factors; every factor is checked by exact
division before use.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .const import (
    DEFAULT_BUDGET,
    DEFAULT_SEED,
    EXHAUSTIVE_MAX_DIM,
    RATIONAL_GUESS_DENOMINATOR,
)
from .errors import (
    AnalysisBudgetExceeded,
    BadParams,
    BadStructure,
    FieldMismatch,
    LieBallError,
    NotIrreducible,
    NotSymmetric,
)
from .liealg import LieAlgebraBasis, complexify_algebra, realify, real_conjugation, unrealify, complex_structure
from .matrix import (
    Echelon,
    ExactMatrix,
    Subspace,
    charpoly,
    is_invariant,
    kernel,
    kron,
    poly_degree,
    poly_divmod,
    poly_eval,
    poly_eval_matrix,
    poly_monic,
    rank,
    solve,
    solution_space,
    span,
    spin,
    squarefree_part,
)
from .models import (
    ConjugationKind,
    ConjugationVerdict,
    FormSpace,
    HermitianForm,
    IrreducibilityVerdict,
    NortonCertificate,
    RepType,
    StructuralCertificate,
    Symmetry,
    TypeVerdict,
    Verdict,
    Word,
)
from .scalar import (
    Field,
    GaussExt,
    QuadExt,
    Scalar,
    coerce,
    conj,
    format_scalar,
    imaginary_unit,
    one,
    sign,
    sqrt_in_field,
    zero,
)

log = logging.getLogger(__name__)

_ROOT_TOL = 1e-7
_MATCH_TOL = 1e-6


@dataclass(frozen=True)
class Representation:
    """A matrix Lie algebra acting on its ambient coordinate space."""

    algebra: LieAlgebraBasis

    @classmethod
    def of(cls, matrices: Sequence[ExactMatrix], name: Optional[str] = None) -> "Representation":
        return cls(LieAlgebraBasis.from_matrices(matrices, name))

    @property
    def ambient_dim(self) -> int:
        return self.algebra.ambient_dim

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def D(self) -> int:
        return self.algebra.D

    @property
    def generators(self) -> Tuple[ExactMatrix, ...]:
        return self.algebra.basis

    @property
    def name(self) -> Optional[str]:
        return self.algebra.name


def complexify_rep(rep: Representation) -> Representation:
    return Representation(complexify_algebra(rep.algebra))


def tensor_rep(rep1: Representation, rep2: Representation) -> Representation:
    """g1 + g2 acting on V1 (x) V2 by A (x) I + I (x) B."""
    if rep1.field is not rep2.field or (rep1.field.has_radical and rep1.D != rep2.D):
        raise FieldMismatch(f"cannot tensor {rep1.field.value} and {rep2.field.value} representations")
    id1 = ExactMatrix.identity(rep1.ambient_dim, rep1.field, rep1.D)
    id2 = ExactMatrix.identity(rep2.ambient_dim, rep2.field, rep2.D)
    mats = [kron(A, id2) for A in rep1.generators] + [kron(id1, B) for B in rep2.generators]
    name = f"{rep1.name or 'V1'} (x) {rep2.name or 'V2'}"
    n = rep1.ambient_dim * rep2.ambient_dim
    return Representation(LieAlgebraBasis.from_matrices(mats, name, n, rep1.field, rep1.D))


# linear systems built entry by entry


def _commutation_rows(A: ExactMatrix) -> Iterator[List[Scalar]]:
    """Rows of (X A - A X)_{rs} = 0 in the unknowns X (row-major)."""
    n = A.rows
    z = A.zero_scalar
    for r in range(n):
        for s in range(n):
            row = [z] * (n * n)
            for v in range(n):
                if A[v, s]:
                    row[r * n + v] = row[r * n + v] + A[v, s]
            for u in range(n):
                if A[r, u]:
                    row[u * n + s] = row[u * n + s] - A[r, u]
            yield row


def _invariance_rows(A: ExactMatrix, conjugate: bool = False) -> Iterator[List[Scalar]]:
    """Rows of (A^T S + S B)_{rs} = 0 with B = A, or conj(A) when ``conjugate``."""
    n = A.rows
    z = A.zero_scalar
    B = A.conj() if conjugate else A
    for r in range(n):
        for s in range(n):
            row = [z] * (n * n)
            for u in range(n):
                if A[u, r]:
                    row[u * n + s] = row[u * n + s] + A[u, r]
            for v in range(n):
                if B[v, s]:
                    row[r * n + v] = row[r * n + v] + B[v, s]
            yield row


def _symmetry_rows(n: int, skew: bool, field: Field, D: int) -> Iterator[List[Scalar]]:
    z, o = zero(field, D), one(field, D)
    for u in range(n):
        for v in range(u, n):
            row = [z] * (n * n)
            row[u * n + v] = o
            row[v * n + u] = row[v * n + u] + (o if skew else -o)
            if any(row):
                yield row


def commutant(rep: Representation) -> Subspace:
    """{X : X A = A X for every generator A}, flattened row-major."""
    n = rep.ambient_dim
    rows = (row for A in rep.generators for row in _commutation_rows(A))
    return solution_space(rows, n * n, rep.field, rep.D)


def commutant_matrices(rep: Representation) -> List[ExactMatrix]:
    n = rep.ambient_dim
    return commutant(rep).as_matrices(n, n)


def enveloping_algebra(rep: Representation) -> List[ExactMatrix]:
    """A basis of the associative algebra generated by Id and the generators."""
    n, field, D = rep.ambient_dim, rep.field, rep.D
    ident = ExactMatrix.identity(n, field, D)
    ech = Echelon(n * n, field, D)
    ech.add(ident.flatten())
    elements, queue = [ident], [ident]
    while queue:
        X = queue.pop()
        for A in rep.generators:
            Y = A @ X
            if ech.add(Y.flatten()):
                elements.append(Y)
                queue.append(Y)
    log.debug("enveloping algebra of %s has dimension %d", rep.name, len(elements))
    return elements


def _trace_product(X: ExactMatrix, Y: ExactMatrix) -> Scalar:
    n = X.rows
    total = X.zero_scalar
    for r in range(n):
        for s in range(n):
            if X[r, s] and Y[s, r]:
                total = total + X[r, s] * Y[s, r]
    return total


def _combine(coeffs: Sequence[Scalar], mats: Sequence[ExactMatrix]) -> ExactMatrix:
    total = ExactMatrix.zeros(mats[0].rows, mats[0].cols, mats[0].field, mats[0].D)
    for c, X in zip(coeffs, mats):
        if c:
            total = total + X.scale(c)
    return total


# polynomial factors proposed numerically, accepted exactly


def _sigma(x: Scalar) -> Scalar:
    """The automorphism sqrt(D) -> -sqrt(D)."""
    if isinstance(x, QuadExt):
        return QuadExt(x.a, -x.b, x.D)
    if isinstance(x, GaussExt):
        return GaussExt(_sigma(x.re), _sigma(x.im))
    return x


def _numeric_roots(p: Sequence[Scalar]) -> List[complex]:
    if len(p) < 2:
        return []
    coeffs = [complex(c) if isinstance(c, GaussExt) else float(c) for c in reversed(list(p))]
    return [complex(r) for r in np.roots(np.array(coeffs, dtype=complex))]


def _snap(value: float) -> Fraction:
    return Fraction(value).limit_denominator(RATIONAL_GUESS_DENOMINATOR)


def _guess_real(t: float, t_sigma: float, field: Field, D: int):
    if not field.has_radical:
        return _snap(t)
    return QuadExt(_snap((t + t_sigma) / 2), _snap((t - t_sigma) / (2 * math.sqrt(D))), D)


def _approx(x: Scalar) -> complex:
    return complex(x) if isinstance(x, GaussExt) else complex(float(x))


def _guess(value: complex, value_sigma: complex, field: Field, D: int) -> Optional[Scalar]:
    """Element of the field close to ``value`` whose conjugate is close to ``value_sigma``."""
    re = _guess_real(value.real, value_sigma.real, field, D)
    if field.is_gaussian:
        guess: Scalar = GaussExt(re, _guess_real(value.imag, value_sigma.imag, field, D))
    elif abs(value.imag) > _ROOT_TOL:
        return None
    else:
        guess = re
    if abs(_approx(guess) - value) > _MATCH_TOL:
        return None
    if field.has_radical and abs(_approx(_sigma(guess)) - value_sigma) > _MATCH_TOL:
        return None
    return coerce(guess, field, D)


def _is_square(x: Scalar) -> bool:
    return sqrt_in_field(x) is not None


def candidate_factors(p: Sequence[Scalar], field: Field, D: int) -> List[List[Scalar]]:
    """Monic factors of degree 1, and irreducible ones of degree 2, dividing p exactly."""
    p = poly_monic(p)
    if poly_degree(p) < 1:
        return []
    roots = _numeric_roots(p)
    roots_sigma = _numeric_roots([_sigma(c) for c in p]) if field.has_radical else None
    o = one(field, D)
    found: List[List[Scalar]] = []
    seen = set()

    def accept(f: List[Scalar]) -> None:
        key = tuple(format_scalar(c) for c in f)
        if key in seen:
            return
        if poly_degree(poly_divmod(p, f)[1]) < 0:
            seen.add(key)
            found.append(f)

    for r in roots:
        for rs in roots_sigma if roots_sigma is not None else [r]:
            lam = _guess(r, rs, field, D)
            if lam is not None and not poly_eval(p, lam):
                accept([-lam, o])
    if poly_degree(p) >= 2:
        pairs = [(a + b, a * b) for a, b in combinations(roots, 2)]
        pairs_sigma = (
            [(a + b, a * b) for a, b in combinations(roots_sigma, 2)] if roots_sigma is not None else None
        )
        for i, (s, t) in enumerate(pairs):
            for ss, ts in pairs_sigma if pairs_sigma is not None else [(s, t)]:
                S, T = _guess(s, ss, field, D), _guess(t, ts, field, D)
                if S is None or T is None or _is_square(S * S - 4 * T):
                    continue
                accept([T, -S, o])
    return found


# irreducibility


def evaluate_element(
    terms: Sequence[Tuple[Scalar, Word]], generators: Sequence[ExactMatrix], n: int, field: Field, D: int
) -> ExactMatrix:
    """Sum of coeff * (product of generators along the word)."""
    total = ExactMatrix.zeros(n, n, field, D)
    for coeff, word in terms:
        prod = ExactMatrix.identity(n, field, D)
        for idx in word:
            prod = prod @ generators[idx]
        total = total + prod.scale(coerce(Fraction(coeff) if isinstance(coeff, int) else coeff, field, D))
    return total


def _candidate_elements(count: int, rng: np.random.Generator, budget: int) -> Iterator[Tuple[Tuple[Fraction, Word], ...]]:
    """Generators first, then pairs B_a + 3 B_b alternating with random sparse words."""
    emitted = 0
    for a in range(count):
        if emitted >= budget:
            return
        emitted += 1
        yield ((Fraction(1), (a,)),)
    pairs = ((a, b) for a in range(count) for b in range(count) if a != b)
    use_pair = True
    while emitted < budget:
        pair = next(pairs, None) if use_pair else None
        use_pair = not use_pair
        if pair is not None:
            a, b = pair
            element = ((Fraction(1), (a,)), (Fraction(3), (b,)))
        else:
            terms = []
            for _ in range(int(rng.integers(2, 4))):
                coeff = int(rng.integers(1, 4)) * (1 if rng.integers(0, 2) else -1)
                word = tuple(int(x) for x in rng.integers(0, count, size=int(rng.integers(1, 3))))
                terms.append((Fraction(coeff), word))
            element = tuple(terms)
        emitted += 1
        yield element


def decide_irreducibility(
    rep: Representation,
    seed: int = DEFAULT_SEED,
    budget: int = DEFAULT_BUDGET,
    exhaustive: bool = False,
) -> IrreducibilityVerdict:
    """Certified verdict; raises AnalysisBudgetExceeded rather than guessing."""
    gens = rep.generators
    if not gens:
        raise BadParams("irreducibility needs a nonzero algebra")
    n, field, D = rep.ambient_dim, rep.field, rep.D
    transposes = [A.transpose() for A in gens]
    rng = np.random.default_rng(seed)
    attempts = 0
    for terms in _candidate_elements(len(gens), rng, budget):
        attempts += 1
        theta = evaluate_element(terms, gens, n, field, D)
        factors = candidate_factors(squarefree_part(charpoly(theta)), field, D)
        log.debug("candidate %d: %d usable factor(s)", attempts, len(factors))
        for p in factors:
            z = poly_eval_matrix(p, theta)
            N = kernel(z)
            if N.is_zero():
                continue
            S = spin(gens, N.basis, n, field, D)
            if S.is_proper():
                return _reducible(rep, S, attempts)
            if N.dim == len(p) - 1:
                v = N.basis[0]
                Sv = spin(gens, [v], n, field, D)
                if Sv.is_proper():
                    return _reducible(rep, Sv, attempts)
                w = kernel(z.transpose()).basis[0]
                Sw = spin(transposes, [w], n, field, D)
                if not Sw.is_full():
                    return _reducible(rep, Sw.annihilator(), attempts)
                cert = NortonCertificate(
                    theta_terms=tuple(terms),
                    factor=tuple(p),
                    kernel_vector=v,
                    transpose_vector=w,
                    kernel_dim=N.dim,
                    spin_dim=Sv.dim,
                    transpose_spin_dim=Sw.dim,
                )
                log.info("%s: IRREDUCIBLE after %d candidate(s)", rep.name, attempts)
                return IrreducibilityVerdict(Verdict.IRREDUCIBLE, certificate=cert, attempts=attempts)
            for b in N.basis:
                Sb = spin(gens, [b], n, field, D)
                if Sb.is_proper():
                    return _reducible(rep, Sb, attempts)
    if exhaustive and n <= EXHAUSTIVE_MAX_DIM:
        log.info("%s: no decisive element in %d candidates, using the structural decision", rep.name, attempts)
        verdict = structural_decision(rep)
        return IrreducibilityVerdict(verdict.verdict, verdict.witness, verdict.certificate, attempts)
    raise AnalysisBudgetExceeded(f"no decisive singular element for {rep.name or 'representation'} in {budget} attempts")


def _reducible(rep: Representation, witness: Subspace, attempts: int) -> IrreducibilityVerdict:
    log.info("%s: REDUCIBLE, invariant subspace of dimension %d", rep.name, witness.dim)
    return IrreducibilityVerdict(Verdict.REDUCIBLE, witness=witness, attempts=attempts)


def _column_span(mats: Sequence[ExactMatrix]) -> Subspace:
    n = mats[0].rows
    return span([X.column(j) for X in mats for j in range(X.cols)], n, mats[0].field, mats[0].D)


def _reducing_kernel(rep: Representation, comm: Sequence[ExactMatrix]) -> Optional[Subspace]:
    """A proper kernel of some p(c), c in the commutant; kernels of intertwiners are invariant."""
    n, field, D = rep.ambient_dim, rep.field, rep.D
    candidates = list(comm) + [a + b.scale(3) for a, b in combinations(comm, 2)]
    for c in candidates:
        for p in candidate_factors(squarefree_part(charpoly(c)), field, D):
            K = kernel(poly_eval_matrix(p, c))
            if K.is_proper():
                return K
    return None


def _quadratic_min_poly(c: ExactMatrix) -> Optional[Tuple[Scalar, Scalar]]:
    """(alpha, beta) with c^2 = alpha c + beta Id, when such exist."""
    n = c.rows
    ident = ExactMatrix.identity(n, c.field, c.D)
    system = ExactMatrix.from_rows(list(zip(c.flatten(), ident.flatten())), c.field, c.D)
    sol = solve(system, (c @ c).flatten())
    return None if sol is None else (sol[0], sol[1])


def _non_scalar(comm: Sequence[ExactMatrix], ident: ExactMatrix) -> ExactMatrix:
    n2 = ident.rows * ident.rows
    for X in comm:
        if span([X.flatten(), ident.flatten()], n2, ident.field, ident.D).dim == 2:
            return X
    raise BadStructure("commutant has no non-scalar element")


def _discriminant(c: ExactMatrix) -> Scalar:
    """alpha^2 + 4 beta for the quadratic minimal polynomial of c."""
    coeffs = _quadratic_min_poly(c)
    if coeffs is None:
        raise BadStructure("commutant element has no quadratic minimal polynomial")
    alpha, beta = coeffs
    return alpha * alpha + 4 * beta


def structural_decision(rep: Representation) -> IrreducibilityVerdict:
    """Exact decision from the enveloping algebra: trace radical, then the commutant."""
    n, field, D = rep.ambient_dim, rep.field, rep.D
    env = enveloping_algebra(rep)
    gram = ExactMatrix.from_rows([[_trace_product(X, Y) for Y in env] for X in env], field, D)
    radical = kernel(gram)
    if not radical.is_zero():
        witness = _column_span([_combine(c, env) for c in radical.basis])
        return _reducible(rep, witness, 0)
    comm = commutant_matrices(rep)
    dc = len(comm)
    if dc == 1:
        return _structural(rep, len(env), dc, "commutant is the scalars")
    ident = ExactMatrix.identity(n, field, D)
    if dc == 2:
        c = _non_scalar(comm, ident)
        root = sqrt_in_field(_discriminant(c))
        if root is None:
            return _structural(rep, len(env), dc, "commutant is a quadratic field")
        lam = (_quadratic_min_poly(c)[0] + root) / 2
        return _reducible(rep, kernel(c - ident.scale(lam)), 0)
    witness = _reducing_kernel(rep, comm)
    if witness is not None:
        return _reducible(rep, witness, 0)
    if dc == 4 and not field.is_gaussian and not _is_commutative(comm) and _pure_part_definite(comm):
        return _structural(rep, len(env), dc, "commutant is a quaternion division algebra")
    raise AnalysisBudgetExceeded(f"structural analysis of {rep.name or 'representation'} is inconclusive (commutant dimension {dc})")


def _structural(rep: Representation, env_dim: int, dc: int, reason: str) -> IrreducibilityVerdict:
    log.info("%s: IRREDUCIBLE (%s)", rep.name, reason)
    cert = StructuralCertificate(envelope_dim=env_dim, commutant_dim=dc, reason=reason)
    return IrreducibilityVerdict(Verdict.IRREDUCIBLE, certificate=cert)


def _is_commutative(mats: Sequence[ExactMatrix]) -> bool:
    return all((X @ Y - Y @ X).is_zero() for X, Y in combinations(mats, 2))


def _pure_part_definite(comm: Sequence[ExactMatrix]) -> bool:
    """tr(c^2) is negative definite on the trace-zero part of the commutant."""
    n, field, D = comm[0].rows, comm[0].field, comm[0].D
    traces = [[X.trace()] for X in comm]
    coeffs = kernel(ExactMatrix.from_rows(traces, field, D).transpose())
    pure = [_combine(c, comm) for c in coeffs.basis]
    if not pure:
        return False
    gram = ExactMatrix.from_rows([[_trace_product(X, Y) for Y in pure] for X in pure], field, D)
    neg, pos, null = signature(gram)
    return pos == 0 and null == 0


def _check_norton(rep: Representation, cert: NortonCertificate) -> bool:
    n, field, D = rep.ambient_dim, rep.field, rep.D
    p = [coerce(c, field, D) for c in cert.factor]
    deg = poly_degree(p)
    if deg not in (1, 2) or p[-1] != 1 or cert.kernel_dim != deg:
        return False
    if deg == 2 and _is_square(p[1] * p[1] - 4 * p[0]):
        return False
    theta = evaluate_element(cert.theta_terms, rep.generators, n, field, D)
    z = poly_eval_matrix(p, theta)
    v = tuple(coerce(x, field, D) for x in cert.kernel_vector)
    w = tuple(coerce(x, field, D) for x in cert.transpose_vector)
    if not any(v) or not any(w) or any(z.apply(v)) or any(z.transpose().apply(w)):
        return False
    if rank(z) != n - deg:
        return False
    if not spin(rep.generators, [v], n, field, D).is_full():
        return False
    transposes = [A.transpose() for A in rep.generators]
    return spin(transposes, [w], n, field, D).is_full()


def verify_verdict(rep: Representation, verdict: IrreducibilityVerdict) -> bool:
    """Re-check a verdict from its stored data; never raises."""
    try:
        if verdict.verdict is Verdict.REDUCIBLE:
            W = verdict.witness
            return (
                W is not None
                and W.ambient_dim == rep.ambient_dim
                and W.is_proper()
                and is_invariant(rep.generators, W)
            )
        cert = verdict.certificate
        if isinstance(cert, NortonCertificate):
            return _check_norton(rep, cert)
        if isinstance(cert, StructuralCertificate):
            again = structural_decision(rep)
            return again.irreducible and again.certificate == cert
        return False
    except (LieBallError, IndexError, TypeError, ValueError) as err:
        log.debug("verdict failed to re-check: %s", err)
        return False


# type classification


def classify_type(
    rep: Representation,
    verdict: Optional[IrreducibilityVerdict] = None,
    seed: int = DEFAULT_SEED,
    budget: int = DEFAULT_BUDGET,
) -> TypeVerdict:
    if rep.field.is_gaussian:
        raise FieldMismatch("classify_type expects a real representation; see conjugation_analysis")
    if verdict is None:
        verdict = decide_irreducibility(rep, seed, budget, exhaustive=True)
    if not verdict.irreducible:
        raise NotIrreducible(f"{rep.name or 'representation'} is reducible")
    comm = commutant_matrices(rep)
    dc = len(comm)
    if dc == 1:
        rep_type = RepType.REAL
    elif dc == 2:
        ident = ExactMatrix.identity(rep.ambient_dim, rep.field, rep.D)
        c = _non_scalar(comm, ident)
        if sign(_discriminant(c)) >= 0:
            raise NotIrreducible("commutant splits over the reals")
        rep_type = RepType.COMPLEX
    elif dc == 4:
        rep_type = RepType.QUATERNIONIC
    else:
        raise NotIrreducible(f"commutant of dimension {dc} is not a real division algebra")
    complexified: Optional[bool] = None
    agrees: Optional[bool] = None
    try:
        complexified = decide_irreducibility(complexify_rep(rep), seed, budget, exhaustive=True).irreducible
        agrees = (rep_type is RepType.REAL) == complexified
        if not agrees:
            log.warning("%s: type %s disagrees with the complexification check", rep.name, rep_type.value)
    except AnalysisBudgetExceeded as err:
        log.warning("%s: complexification check withheld: %s", rep.name, err)
    return TypeVerdict(rep_type, dc, tuple(comm), complexified, agrees)


# forms


def signature(S: ExactMatrix) -> Tuple[int, int, int]:
    """(neg, pos, null) of a real symmetric matrix by congruence diagonalization."""
    if not S.is_square or S != S.transpose():
        raise NotSymmetric("signature needs a symmetric matrix")
    if S.field.is_gaussian:
        raise FieldMismatch("signature of a complex matrix; use hermitian_signature")
    a = [list(r) for r in S.entries]
    remaining = list(range(S.rows))
    neg = pos = 0
    while remaining:
        k = next((i for i in remaining if a[i][i]), None)
        if k is None:
            pair = next(((i, j) for i in remaining for j in remaining if i != j and a[i][j]), None)
            if pair is None:
                break
            i, j = pair
            for c in remaining:
                a[i][c] = a[i][c] + a[j][c]
            for c in remaining:
                a[c][i] = a[c][i] + a[c][j]
            k = i
        d = a[k][k]
        if sign(d) < 0:
            neg += 1
        else:
            pos += 1
        remaining.remove(k)
        for i in remaining:
            if not a[i][k]:
                continue
            f = a[i][k] / d
            for j in remaining:
                if a[k][j]:
                    a[i][j] = a[i][j] - f * a[k][j]
    return neg, pos, len(remaining)


def hermitian_signature(H: ExactMatrix) -> Tuple[int, int, int]:
    if not H.field.is_gaussian or H != H.adjoint():
        raise NotSymmetric("hermitian_signature needs a hermitian matrix")
    neg, pos, null = signature(realify(H))
    return neg // 2, pos // 2, null // 2


def bilinear_forms(rep: Representation) -> Subspace:
    """All S with A^T S + S A = 0, flattened."""
    n = rep.ambient_dim
    rows = (row for A in rep.generators for row in _invariance_rows(A))
    return solution_space(rows, n * n, rep.field, rep.D)


def is_self_dual(rep: Representation) -> bool:
    return not bilinear_forms(rep).is_zero()


def _hermitian_solutions(rep: Representation) -> List[ExactMatrix]:
    """H with H^* = H and A^T H + H conj(A) = 0, over the real subfield."""
    n, D = rep.ambient_dim, rep.D
    real = rep.field.real()
    n2 = n * n
    z = zero(real, D)
    rows: List[List[Scalar]] = []
    for A in rep.generators:
        for row in _invariance_rows(A, conjugate=True):
            re_row = [x.re if isinstance(x, GaussExt) else x for x in row]
            im_row = [x.im if isinstance(x, GaussExt) else z for x in row]
            # H = X + iY: coefficient c of H_uv acts as c on X_uv and i c on Y_uv
            rows.append(re_row + [-x for x in im_row])
            rows.append(im_row + re_row)
    for u in range(n):
        for v in range(u, n):
            sym = [z] * (2 * n2)
            sym[u * n + v] = sym[u * n + v] + 1
            sym[v * n + u] = sym[v * n + u] - 1
            skew = [z] * (2 * n2)
            skew[n2 + u * n + v] = skew[n2 + u * n + v] + 1
            skew[n2 + v * n + u] = skew[n2 + v * n + u] + 1
            rows += [sym, skew]
    sols = solution_space(rows, 2 * n2, real, D)
    mats = []
    for v in sols.basis:
        grid = [[GaussExt(v[i * n + j], v[n2 + i * n + j]) for j in range(n)] for i in range(n)]
        mats.append(ExactMatrix.from_rows(grid, rep.field, D))
    return mats


def invariant_forms(rep: Representation, symmetry: Symmetry) -> FormSpace:
    """Invariant forms of one symmetry class; hermitian forms read <x, y> = x^T H conj(y)."""
    n, field, D = rep.ambient_dim, rep.field, rep.D
    if symmetry is Symmetry.HERMITIAN:
        if not field.is_gaussian:
            raise FieldMismatch("hermitian forms need a representation over a Gaussian field")
        basis = _hermitian_solutions(rep)
        sigs = tuple(hermitian_signature(H) for H in basis)
        return FormSpace(symmetry, tuple(basis), sigs)
    skew = symmetry is Symmetry.ANTISYMMETRIC
    rows = [row for A in rep.generators for row in _invariance_rows(A)]
    rows += list(_symmetry_rows(n, skew, field, D))
    basis = solution_space(rows, n * n, field, D).as_matrices(n, n)
    if skew or field.is_gaussian:
        sigs: Tuple = tuple(None for _ in basis)
    else:
        # each member is fixed up to scale; take the sign with neg <= pos
        signed, found = [], []
        for S in basis:
            neg, pos, null = signature(S)
            if neg > pos:
                S, (neg, pos) = -S, (pos, neg)
            signed.append(S)
            found.append((neg, pos, null))
        basis, sigs = signed, tuple(found)
    return FormSpace(symmetry, tuple(basis), sigs)


# the hermitian forms attached to a quaternionic structure


def _antilinear_part(J: ExactMatrix, rep: Representation) -> ExactMatrix:
    """M with J(x) = M conj(x), after checking J is an invariant quaternionic structure."""
    m = rep.ambient_dim
    if J.field.is_gaussian or J.rows != 2 * m or J.cols != 2 * m:
        raise BadStructure(f"J must be a real {2 * m}x{2 * m} matrix")
    J0 = complex_structure(m, J.field, J.D)
    if not (J @ J0 + J0 @ J).is_zero():
        raise BadStructure("J does not anti-commute with the complex structure")
    M = unrealify(J @ real_conjugation(m, J.field, J.D)).with_field(rep.field)
    ident = ExactMatrix.identity(m, rep.field, rep.D)
    if M @ M.conj() != -ident:
        raise BadStructure("J does not square to -Id")
    for A in rep.generators:
        if M @ A.conj() != A @ M:
            raise BadStructure("J is not invariant")
    return M


def _compatible_rescale(M: ExactMatrix, B: ExactMatrix) -> Scalar:
    """lambda with (lambda B)(Jx, Jy) = conj((lambda B)(x, y))."""
    lhs = M.transpose() @ B @ M
    target = B.conj()
    r, s = next((r, s) for r in range(B.rows) for s in range(B.cols) if target[r, s])
    c = lhs[r, s] / target[r, s]
    if lhs != target.scale(c):
        raise BadStructure("the form is not carried to a multiple of its conjugate by J")
    if c == -1:
        return imaginary_unit(B.field, B.D)
    return 1 + conj(c)


def _check_form(B: ExactMatrix, rep: Representation, skew: bool) -> ExactMatrix:
    m = rep.ambient_dim
    B = B.with_field(rep.field)
    if B.rows != m or B.cols != m:
        raise BadStructure(f"form must be {m}x{m}")
    expected = -B if skew else B
    if B.transpose() != expected:
        raise BadStructure("form has the wrong symmetry")
    if rank(B) != m:
        raise BadStructure("form is degenerate")
    for A in rep.generators:
        if not (A.transpose() @ B + B @ A).is_zero():
            raise BadStructure("form is not invariant")
    return B


def _hermitian_from(J: ExactMatrix, B: ExactMatrix, rep: Representation, skew: bool) -> HermitianForm:
    if not rep.field.is_gaussian:
        raise BadStructure("the representation must be over a Gaussian field")
    M = _antilinear_part(J, rep)
    B = _check_form(B, rep, skew)
    lam = _compatible_rescale(M, B)
    H = (B @ M).scale(lam)
    compatibility = 1
    if not skew:
        H = H.scale(imaginary_unit(rep.field, rep.D))
        compatibility = -1
    if H.adjoint() != H:
        raise BadStructure("constructed form is not hermitian")
    if M.transpose() @ H @ M.conj() != H.conj().scale(compatibility):
        raise BadStructure("constructed form is not J-compatible")
    for A in rep.generators:
        if not (A.transpose() @ H + H @ A.conj()).is_zero():
            raise BadStructure("constructed form is not invariant")
    sig = hermitian_signature(H)
    if not skew and (sig[0] != sig[1] or sig[2]):
        raise BadStructure(f"expected a neutral signature, got {sig}")
    log.debug("hermitian form with rescale %s and signature %s", format_scalar(lam), sig)
    return HermitianForm(H, lam, compatibility, sig)


def hermitian_from_symplectic(J: ExactMatrix, omega: ExactMatrix, rep: Representation) -> HermitianForm:
    """<x, y> = omega'(x, Jy) for omega rescaled so that omega'(Jx, Jy) = conj omega'(x, y)."""
    return _hermitian_from(J, omega, rep, skew=True)


def hermitian_from_symmetric(J: ExactMatrix, sigma: ExactMatrix, rep: Representation) -> HermitianForm:
    """<x, y> = i sigma'(x, Jy); neutral by construction."""
    return _hermitian_from(J, sigma, rep, skew=False)


def hermitian_value(H: ExactMatrix, x: Sequence[Scalar], y: Sequence[Scalar]) -> Scalar:
    """<x, y> = x^T H conj(y)."""
    Hy = H.apply(tuple(conj(c) for c in y))
    total = H.zero_scalar
    for a, b in zip(x, Hy):
        total = total + a * b
    return total


def lightlike_vectors(H: ExactMatrix, vectors: Sequence[Sequence[Scalar]]) -> bool:
    return all(not hermitian_value(H, v, v) for v in vectors)


# conjugations


def _antilinear_rows(A: ExactMatrix) -> Iterator[List[Scalar]]:
    """Rows of (A M - M conj(A))_{rs} = 0 in the unknowns M."""
    n = A.rows
    z = A.zero_scalar
    Ab = A.conj()
    for r in range(n):
        for s in range(n):
            row = [z] * (n * n)
            for u in range(n):
                if A[r, u]:
                    row[u * n + s] = row[u * n + s] + A[r, u]
            for v in range(n):
                if Ab[v, s]:
                    row[r * n + v] = row[r * n + v] - Ab[v, s]
            yield row


def conjugation_analysis(rep: Representation) -> ConjugationVerdict:
    """Antilinear intertwiner C(x) = M conj(x) and the sign of C^2."""
    if not rep.field.is_gaussian:
        raise FieldMismatch("conjugation_analysis expects a representation over a Gaussian field")
    n, field, D = rep.ambient_dim, rep.field, rep.D
    rows = (row for A in rep.generators for row in _antilinear_rows(A))
    sols = solution_space(rows, n * n, field, D)
    if sols.is_zero():
        return ConjugationVerdict(ConjugationKind.NOT_SELF_CONJUGATE)
    if sols.dim > 1:
        raise NotIrreducible(f"antilinear intertwiners form a space of dimension {sols.dim}")
    M = sols.as_matrices(n, n)[0]
    square = M @ M.conj()
    lam = square[0, 0]
    ident = ExactMatrix.identity(n, field, D)
    if square != ident.scale(lam) or lam.im:
        raise NotIrreducible("C^2 is not a real scalar")
    lam_real = lam.re
    kind = ConjugationKind.REAL_CONJ if sign(lam_real) > 0 else ConjugationKind.QUATERNIONIC_CONJ
    root = sqrt_in_field(lam_real if sign(lam_real) > 0 else -lam_real)
    normalized = root is not None
    if normalized:
        M = M.scale(coerce(1 / root, field, D))
        lam_real = lam_real / (root * root)
    log.info("%s: %s (C^2 = %s)", rep.name, kind.value, format_scalar(lam_real))
    return ConjugationVerdict(kind, M, lam_real, normalized)


def is_self_conjugate(rep: Representation) -> bool:
    return conjugation_analysis(rep).kind is not ConjugationKind.NOT_SELF_CONJUGATE
