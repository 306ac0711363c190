"""Fixed verification batteries.

Each runner returns named pass/fail items; a check that raises counts as a
failure with the error as detail, so one broken construction does not hide
the rest of a battery.
"""

from __future__ import annotations

import logging
from enum import Enum
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .const import DEFAULT_BUDGET, DEFAULT_SEED, MAX_BATTERY_N, SAMPLE_COUNT
from .domainiv import DomainPoint, cartan_iv_map, chained_bound_holds, domain_iv_defect, in_domain_iv
from .errors import BadParams, DomainViolation, LieBallError
from .liealg import (
    LieAlgebraBasis,
    SignatureForm,
    appendix_matrices,
    bracket_closure,
    builtin,
    check_orthogonality,
    complexify_algebra,
    quaternionic_structure,
    real_conjugation,
    realify,
    so_pq,
)
from .matrix import ExactMatrix, bracket, unit_vector
from .models import BatteryItem, ConjugationKind, RepType, Symmetry, Verdict
from .repcheck import (
    Representation,
    classify_type,
    conjugation_analysis,
    decide_irreducibility,
    hermitian_from_symmetric,
    hermitian_from_symplectic,
    hermitian_value,
    invariant_forms,
    is_self_dual,
    lightlike_vectors,
    tensor_rep,
    verify_verdict,
)
from .scalar import Field, GaussExt, Scalar, conj
from .symspace import (
    EmbeddingSpec,
    EmbeddingType,
    NegativePlane,
    Variant,
    base_point,
    cartan,
    dualize,
    embed,
    fixer_algebra,
    in_lieball,
    is_full,
    is_lie_triple,
    isometry_algebra,
    local_transitivity,
    off_diagonal,
    on_quadric,
    orbit_hull,
    parabolic_algebra,
    point_to_plane,
    quadric_residual,
    stabilizes_line,
)

log = logging.getLogger(__name__)

THEOREM1_N = (2, 3, 4, 6)
EMBEDDING_N = (2, 3, 4)
DOMAIN_IV_N = (1, 2, 3, 4)
OUT_OF_DOMAIN_SAMPLES = 10


class Battery(str, Enum):
    THEOREM1 = "THEOREM1"
    APPENDIX_A = "APPENDIX_A"
    APPENDIX_B = "APPENDIX_B"
    EMBEDDINGS = "EMBEDDINGS"
    LEMMA_FORMS = "LEMMA_FORMS"


def _check(items: List[BatteryItem], name: str, fn: Callable[[], Tuple[bool, str]]) -> None:
    try:
        passed, detail = fn()
    except LieBallError as err:
        passed, detail = False, f"{type(err).__name__}: {err}"
    if not passed:
        log.warning("battery item failed: %s (%s)", name, detail)
    items.append(BatteryItem(name, passed, detail))


def _bool(value: bool, detail: str = "") -> Tuple[bool, str]:
    return bool(value), detail


# sampling


def _small(rng: np.random.Generator, bound: int) -> Fraction:
    """A rational with |x| <= 1/bound."""
    return Fraction(int(rng.integers(-4, 5)), 4 * bound)


def _real_scale(rng: np.random.Generator) -> Fraction:
    num = int(rng.integers(1, 5)) * (1 if rng.integers(0, 2) else -1)
    return Fraction(num, int(rng.integers(1, 4)))


def _gauss_scale(rng: np.random.Generator) -> GaussExt:
    while True:
        a, b = (int(x) for x in rng.integers(-3, 4, size=2))
        if a or b:
            return GaussExt(Fraction(a), Fraction(b))


def sample_domain_iv(rng: np.random.Generator, n: int, wide: bool = False) -> DomainPoint:
    """Seeded Gaussian rational point of C^n.

    Narrow samples have |z|^2 <= 1/2 and fall inside the domain except on the
    measure-zero edge; wide ones cover [-1, 1]^(2n) and land on both sides.
    """
    if wide:
        coords = [
            GaussExt(Fraction(int(rng.integers(-4, 5)), 4), Fraction(int(rng.integers(-4, 5)), 4))
            for _ in range(n)
        ]
    else:
        coords = [GaussExt(_small(rng, n + 1), _small(rng, n + 1)) for _ in range(n)]
    return DomainPoint.of(coords)


def _inner_lieball_point(rng: np.random.Generator, k: int) -> List[Scalar]:
    while True:
        z = sample_domain_iv(rng, k)
        if in_domain_iv(z):
            return list(cartan_iv_map(z).coords)


def _hyperboloid(rng: np.random.Generator, k: int) -> List[Fraction]:
    """Rational x with -x0^2 + x1^2 + ... + xk^2 = -1 and x0 > 0."""
    t = [_small(rng, k + 1) for _ in range(k)]
    s = sum((c * c for c in t), Fraction(0))
    return [(1 + s) / (1 - s)] + [2 * c / (1 - s) for c in t]


def sample_embedding_input(spec: EmbeddingSpec, rng: np.random.Generator, inside: bool = True) -> List[Scalar]:
    """Seeded rational input for embed(); outside inputs must be rejected with DomainViolation."""
    kind, k = spec.kind, spec.k
    if kind in (EmbeddingType.I1, EmbeddingType.I2):
        if kind is EmbeddingType.I1:
            tail: List[Scalar] = [GaussExt(_small(rng, 2 * k), _small(rng, 2 * k)) for _ in range(k)]
            c: Scalar = _gauss_scale(rng)
        else:
            tail = [_small(rng, 2 * k) for _ in range(k)]
            c = _real_scale(rng)
        if not inside:
            tail[0] = 1 + abs(_small(rng, 1))
        return [c * x for x in [Fraction(1)] + tail]
    if kind in (EmbeddingType.G1, EmbeddingType.P2):
        inner = _inner_lieball_point(rng, 1 if kind is EmbeddingType.P2 else k)
        c = _gauss_scale(rng)
        point = [c * x for x in inner]
        return point if inside else [conj(x) for x in point]
    if kind is EmbeddingType.G2:
        c = _real_scale(rng)
        x = [c * v for v in _hyperboloid(rng, k)]
        y = [c * v for v in _hyperboloid(rng, spec.k2)]
        if rng.integers(0, 2):
            y = [-v for v in y]
        if not inside:
            x = [Fraction(0), Fraction(1)] + [Fraction(0)] * (k - 1)
        return x + y
    if not inside:
        return [Fraction(0), Fraction(1)] + [Fraction(0)] * (k - 1)
    c = _real_scale(rng)
    return [c * v for v in _hyperboloid(rng, k)]


def embedding_specs(n: int) -> List[EmbeddingSpec]:
    """Every admissible embedding of each type into the Lie ball of R^{2,n}."""
    specs = [EmbeddingSpec(EmbeddingType.I1, n, k) for k in range(1, n // 2 + 1)]
    specs += [EmbeddingSpec(EmbeddingType.I2, n, k) for k in range(1, n // 2 + 1)]
    specs += [EmbeddingSpec(EmbeddingType.G1, n, k) for k in range(1, n)]
    specs += [
        EmbeddingSpec(EmbeddingType.G2, n, k1, k2)
        for k1 in range(1, n)
        for k2 in range(1, n - k1 + 1)
    ]
    specs += [EmbeddingSpec(EmbeddingType.P1, n, k) for k in range(1, n + 1)]
    specs.append(EmbeddingSpec(EmbeddingType.P2, n))
    return specs


def _hull_size(spec: EmbeddingSpec) -> int:
    """Dimension of the lift of the totally geodesic piece."""
    if spec.kind in (EmbeddingType.I1, EmbeddingType.I2):
        return 2 * spec.k + 2
    if spec.kind is EmbeddingType.G2:
        return spec.k + spec.k2 + 2
    if spec.kind is EmbeddingType.P2:
        return 3
    return spec.k + 2


def base_plane(n: int) -> NegativePlane:
    return point_to_plane(base_point(n))


# THEOREM1


def _membership(
    items: List[BatteryItem], label: str, g: LieAlgebraBasis, expected: Verdict, seed: int, budget: int
) -> None:
    def run() -> Tuple[bool, str]:
        rep = Representation(g)
        verdict = decide_irreducibility(rep, seed, budget, exhaustive=True)
        verified = verify_verdict(rep, verdict)
        if verdict.witness is not None:
            how = f"witness of dimension {verdict.witness.dim}"
        else:
            how = type(verdict.certificate).__name__
        detail = f"{verdict.verdict.value} ({how}), re-check {'ok' if verified else 'FAILED'}"
        return verdict.verdict is expected and verified, detail

    _check(items, f"{label} on R^{g.ambient_dim} is {expected.value.lower()}", run)


def run_theorem1(n_values: Sequence[int] = THEOREM1_N, seed: int = DEFAULT_SEED, budget: int = DEFAULT_BUDGET) -> List[BatteryItem]:
    items: List[BatteryItem] = []
    irreducible, reducible = Verdict.IRREDUCIBLE, Verdict.REDUCIBLE
    for n in n_values:
        _membership(items, f"so(2,{n})", so_pq(2, n), irreducible, seed, budget)
        if n % 2 == 0:
            p = n // 2
            _membership(items, f"u(1,{p})", builtin("U(1,p)_real", {"p": p}), irreducible, seed, budget)
            # su(1,1) is one sl(2,R) factor of so(2,2)
            expected = irreducible if p >= 2 else reducible
            _membership(items, f"su(1,{p})", builtin("SU(1,p)_real", {"p": p}), expected, seed, budget)
            if p > 1:
                _membership(items, f"S1.so(1,{p})", builtin("S1_SO(1,p)_real", {"p": p}), irreducible, seed, budget)
            for k in sorted({1, p}):
                g = builtin("SO1K_IN_SU", {"k": k, "p": p})
                _membership(items, f"so(1,{k}) in su(1,{p})", g, reducible, seed, budget)
        if n == 3:
            _membership(items, "appendix so(1,2)", builtin("APPENDIX_SO12", {"n": 3}), irreducible, seed, budget)
        if n == 4:
            _membership(items, "appendix so(1,2) in so(2,4)", builtin("APPENDIX_SO12", {"n": 4}), reducible, seed, budget)
        if n >= 2:
            g = builtin("SO1K1_SO1K2", {"k1": 1, "k2": n - 1, "n": n})
            _membership(items, f"so(1,1) + so(1,{n - 1})", g, reducible, seed, budget)
            _membership(items, "so(2,1) block", builtin("SO12_BLOCK_P2", {"n": n}), reducible, seed, budget)
    return items


# APPENDIX_A


def run_appendix_a(seed: int = DEFAULT_SEED, budget: int = DEFAULT_BUDGET) -> List[BatteryItem]:
    items: List[BatteryItem] = []
    m = appendix_matrices()
    U, V, W, Us, Vs = m["U"], m["V"], m["W"], m["U*"], m["V*"]
    identities = [
        ("[V,W] = U", bracket(V, W), U),
        ("[W,U] = V", bracket(W, U), V),
        ("[U,V] = W", bracket(U, V), W),
        ("[U*,V*] = -W", bracket(Us, Vs), -W),
        ("[V*,W] = U*", bracket(Vs, W), Us),
        ("[W,U*] = V*", bracket(W, Us), Vs),
    ]
    for name, lhs, rhs in identities:
        _check(items, name, lambda lhs=lhs, rhs=rhs: _bool((lhs - rhs).is_zero(), "zero residual"))

    compact = bracket_closure([U, V], name="so(3)")
    noncompact = bracket_closure([Us, Vs], name="so(1,2)")
    _check(items, "closure of {U, V} has dimension 3", lambda: _bool(compact.dim == 3, f"dim {compact.dim}"))
    _check(items, "closure of {U*, V*} has dimension 3", lambda: _bool(noncompact.dim == 3, f"dim {noncompact.dim}"))
    _check(items, "so(3) preserves eta(0,5)", lambda: _bool(check_orthogonality(compact, SignatureForm(0, 5))))
    _check(items, "so(1,2) preserves eta(2,3)", lambda: _bool(check_orthogonality(noncompact, SignatureForm(2, 3))))
    _check(items, "U and V dualize to U* and V*", lambda: _bool(dualize(U) == Us and dualize(V) == Vs))

    dec = cartan(3, Variant.NONCOMPACT)
    _check(items, "span{U*, V*} is a Lie triple", lambda: _bool(is_lie_triple([Us, Vs], dec)))
    crafted = [
        off_diagonal([1, 0, 0], [0, 0, 0]),
        off_diagonal([0, 1, 0], [1, 0, 0]),
    ]
    _check(items, "crafted 2-plane is not a Lie triple", lambda: _bool(not is_lie_triple(crafted, dec)))
    _check(
        items,
        "every line of m* is a Lie triple",
        lambda: _bool(all(is_lie_triple([X], dec) for X in dec.m_basis), f"{len(dec.m_basis)} lines"),
    )

    g = builtin("APPENDIX_SO12", {"n": 3})
    ambient = so_pq(2, 3)
    e = [Fraction(0)] * 5
    v = list(e)
    v[0], v[2] = Fraction(1), Fraction(1)
    w = list(e)
    w[1], w[3] = Fraction(1), Fraction(1)
    p = parabolic_algebra(1, 2, v)
    _check(items, "parabolic at e0 + e2 has dimension 7", lambda: _bool(p.dim == 7, f"dim {p.dim}"))
    _check(items, "U* stabilizes span{e1 + e3}", lambda: _bool(stabilizes_line(Us, w)))
    _check(items, "so(1,2) + p does not span so(2,3)", lambda: _bool(not local_transitivity(g, p, ambient)))
    _check(items, "so(2,3) + p spans so(2,3)", lambda: _bool(local_transitivity(ambient, p, ambient)))

    rep = Representation(g)

    def irreducible_real() -> Tuple[bool, str]:
        verdict = decide_irreducibility(rep, seed, budget, exhaustive=True)
        t = classify_type(rep, verdict, seed, budget)
        ok = verdict.irreducible and verify_verdict(rep, verdict) and t.rep_type is RepType.REAL
        return ok, f"{verdict.verdict.value}, type {t.rep_type.value}"

    def form_signature() -> Tuple[bool, str]:
        forms = invariant_forms(rep, Symmetry.SYMMETRIC)
        return forms.dim == 1 and forms.signatures[0] == (2, 3, 0), f"signatures {list(forms.signatures)}"

    _check(items, "appendix so(1,2) is irreducible of real type", irreducible_real)
    _check(items, "its invariant symmetric form has signature (2,3)", form_signature)
    _check(
        items,
        "fixer of the base plane is trivial",
        lambda: _bool(fixer_algebra(g, base_plane(3)).dim == 0),
    )
    return items


# APPENDIX_B


def run_appendix_b(
    n_values: Sequence[int] = DOMAIN_IV_N, seed: int = DEFAULT_SEED, samples: int = SAMPLE_COUNT
) -> List[BatteryItem]:
    items: List[BatteryItem] = []
    rng = np.random.default_rng(seed)
    for n in n_values:
        origin = DomainPoint.of([Fraction(0)] * n)
        _check(items, f"f(0) is the base point (n={n})", lambda: _bool(cartan_iv_map(origin) == base_point(n)))
        edge = DomainPoint.of([Fraction(1)] + [Fraction(0)] * (n - 1))
        _check(
            items,
            f"z = (1, 0, ...) sits on the boundary (n={n})",
            lambda: _bool(domain_iv_defect(edge) == 0 and not in_domain_iv(edge), f"defect {domain_iv_defect(edge)}"),
        )
        points = [sample_domain_iv(rng, n, wide=bool(i % 2)) for i in range(samples)]
        images = [cartan_iv_map(z) for z in points]
        inside = sum(in_domain_iv(z) for z in points)
        _check(
            items,
            f"quadric residual vanishes on {samples} samples (n={n})",
            lambda: _bool(all(not quadric_residual(Z) for Z in images)),
        )
        _check(
            items,
            f"f(z) lies in the Lie ball exactly when z lies in the domain (n={n})",
            lambda: _bool(
                all(in_lieball(Z) == in_domain_iv(z) for z, Z in zip(points, images)),
                f"{inside} of {samples} inside",
            ),
        )
        _check(
            items,
            f"inside points satisfy the chained bound (n={n})",
            lambda: _bool(all(chained_bound_holds(z) for z in points if in_domain_iv(z))),
        )
    return items


# EMBEDDINGS


def _embedding_items(items: List[BatteryItem], spec: EmbeddingSpec, rng: np.random.Generator, samples: int) -> None:
    n = spec.n

    def in_domain() -> Tuple[bool, str]:
        images = [embed(spec, sample_embedding_input(spec, rng)) for _ in range(samples)]
        ok = all(on_quadric(Z) and in_lieball(Z) for Z in images)
        return ok, f"{samples} samples"

    def rejects() -> Tuple[bool, str]:
        for _ in range(OUT_OF_DOMAIN_SAMPLES):
            try:
                embed(spec, sample_embedding_input(spec, rng, inside=False))
            except DomainViolation:
                continue
            return False, "accepted an outside input"
        return True, ""

    def isometries() -> Tuple[bool, str]:
        return _bool(check_orthogonality(isometry_algebra(spec), SignatureForm(2, n)))

    def lift() -> Tuple[bool, str]:
        Z = embed(spec, sample_embedding_input(spec, rng))
        hull = orbit_hull(isometry_algebra(spec), Z)
        expected = _hull_size(spec)
        return hull.dim == expected and is_full(hull) == (expected == n + 2), f"lift of dimension {hull.dim}"

    _check(items, f"{spec.label} maps into the Lie ball", in_domain)
    _check(items, f"{spec.label} rejects outside inputs", rejects)
    _check(items, f"{spec.label} isometries lie in so(2,{n})", isometries)
    _check(items, f"{spec.label} orbit lift has the expected span", lift)


def run_embeddings(
    n_values: Sequence[int] = EMBEDDING_N, seed: int = DEFAULT_SEED, samples: int = SAMPLE_COUNT
) -> List[BatteryItem]:
    items: List[BatteryItem] = []
    rng = np.random.default_rng(seed)
    for n in n_values:
        for spec in embedding_specs(n):
            _embedding_items(items, spec, rng, samples)
        if n >= 2:
            i1 = EmbeddingSpec(EmbeddingType.I1, n, 1)
            origin = [Fraction(1), Fraction(0)]
            _check(items, f"I1 at (1, 0) is the base point (n={n})", lambda: _bool(embed(i1, origin) == base_point(n)))
            g2 = EmbeddingSpec(EmbeddingType.G2, n, 1, 1)
            pair = [Fraction(1), Fraction(0), Fraction(1), Fraction(0)]
            _check(items, f"G2 at ([1:0], [1:0]) is the base point (n={n})", lambda: _bool(embed(g2, pair) == base_point(n)))
    for k in (1, 2, 3):
        g = builtin("U(1,p)_real", {"p": k})
        _check(
            items,
            f"fixer of the base plane in u(1,{k}) is one-dimensional",
            lambda g=g, k=k: _bool(fixer_algebra(g, base_plane(2 * k)).dim == 1),
        )
    return items


# LEMMA_FORMS


def _gaussian_reps() -> Dict[str, Representation]:
    return {
        "sl2": Representation(complexify_algebra(builtin("SL2"))),
        "so3": Representation(complexify_algebra(so_pq(0, 3))),
        "su2": Representation(builtin("SU2")),
        "u1": Representation(builtin("U1_WEIGHT", {"weight": 1})),
    }


def _structure_map(m: int) -> ExactMatrix:
    """Real matrix of x -> M conj(x) for the standard quaternionic structure on C^m."""
    return realify(quaternionic_structure(m // 2)) @ real_conjugation(m)


def run_lemma_forms(seed: int = DEFAULT_SEED, budget: int = DEFAULT_BUDGET) -> List[BatteryItem]:
    items: List[BatteryItem] = []

    su2 = Representation(builtin("SU2"))
    omega = ExactMatrix.from_rows([[0, 1], [-1, 0]], Field.GAUSS_RAT)

    def symplectic() -> Tuple[bool, str]:
        form = hermitian_from_symplectic(_structure_map(2), omega, su2)
        H = form.matrix
        vectors = [unit_vector(2, 0, Field.GAUSS_RAT), [GaussExt(Fraction(1), Fraction(2)), Fraction(3)]]
        symmetric = all(
            hermitian_value(H, x, y) == conj(hermitian_value(H, y, x)) for x in vectors for y in vectors
        )
        return symmetric and form.compatibility == 1, f"signature {form.signature}"

    _check(items, "su(2) on C^2: hermitian form from the symplectic form", symplectic)

    for m in (1, 2):
        rep = Representation(builtin("SO_STAR", {"m": m}))
        sigma = ExactMatrix.identity(2 * m, Field.GAUSS_RAT)

        def neutral(m: int = m, rep: Representation = rep, sigma: ExactMatrix = sigma) -> Tuple[bool, str]:
            form = hermitian_from_symmetric(_structure_map(2 * m), sigma, rep)
            basis = [unit_vector(2 * m, j, Field.GAUSS_RAT) for j in range(2 * m)]
            ok = form.signature == (m, m, 0) and lightlike_vectors(form.matrix, basis)
            return ok, f"signature {form.signature}"

        _check(items, f"so*({2 * m}): hermitian form from the symmetric form is neutral", neutral)

    types = [
        ("SO(p,q)", {"p": 1, "q": 2}, RepType.REAL),
        ("SO(p,q)", {"p": 2, "q": 3}, RepType.REAL),
        ("U(1,p)_real", {"p": 1}, RepType.COMPLEX),
        ("U(1,p)_real", {"p": 2}, RepType.COMPLEX),
        ("SU2_real", {}, RepType.QUATERNIONIC),
    ]
    for name, params, expected in types:
        g = builtin(name, params)

        def classify(g: LieAlgebraBasis = g, expected: RepType = expected) -> Tuple[bool, str]:
            t = classify_type(Representation(g), seed=seed, budget=budget)
            ok = t.rep_type is expected and t.cross_check_agrees is True
            return ok, f"{t.rep_type.value}, commutant dim {t.commutant_dim}"

        _check(items, f"{g.name} is of {expected.value.lower()} type", classify)

    reps = _gaussian_reps()
    conjugations = {key: conjugation_analysis(rep).kind for key, rep in reps.items()}
    duals = {key: is_self_dual(rep) for key, rep in reps.items()}
    for a, b in combinations_with_replacement(sorted(reps), 2):
        tensor = tensor_rep(reps[a], reps[b])

        def dual(a: str = a, b: str = b, tensor: Representation = tensor) -> Tuple[bool, str]:
            return _bool(is_self_dual(tensor) == (duals[a] and duals[b]))

        def conjugate(a: str = a, b: str = b, tensor: Representation = tensor) -> Tuple[bool, str]:
            kind = conjugation_analysis(tensor).kind
            ka, kb = conjugations[a], conjugations[b]
            none = ConjugationKind.NOT_SELF_CONJUGATE
            if none in (ka, kb):
                expected = none
            else:
                expected = ConjugationKind.REAL_CONJ if ka is kb else ConjugationKind.QUATERNIONIC_CONJ
            return kind is expected, kind.value

        _check(items, f"{a} (x) {b}: self-dual exactly when both factors are", dual)
        _check(items, f"{a} (x) {b}: conjugation kind is the product of the factors'", conjugate)

    g = builtin("SL2_SL2_on_R22")

    def sl2_pair() -> Tuple[bool, str]:
        rep = Representation(g)
        verdict = decide_irreducibility(rep, seed, budget, exhaustive=True)
        forms = invariant_forms(rep, Symmetry.SYMMETRIC)
        ok = verdict.irreducible and forms.dim == 1 and forms.signatures[0] == (2, 2, 0)
        return ok, f"{verdict.verdict.value}, signatures {list(forms.signatures)}"

    _check(items, "sl(2) + sl(2) on R^{2,2} is irreducible with a form of signature (2,2)", sl2_pair)
    return items


def run_battery(
    battery: Battery,
    n_values: Optional[Sequence[int]] = None,
    seed: int = DEFAULT_SEED,
    budget: int = DEFAULT_BUDGET,
    samples: int = SAMPLE_COUNT,
) -> List[BatteryItem]:
    battery = Battery(battery)
    if n_values is not None:
        bad = [n for n in n_values if not 1 <= n <= MAX_BATTERY_N]
        if bad:
            raise BadParams(f"battery n must lie in 1..{MAX_BATTERY_N}, got {bad}")
    if battery is Battery.THEOREM1:
        items = run_theorem1(n_values or THEOREM1_N, seed, budget)
    elif battery is Battery.APPENDIX_A:
        items = run_appendix_a(seed, budget)
    elif battery is Battery.APPENDIX_B:
        items = run_appendix_b(n_values or DOMAIN_IV_N, seed, samples)
    elif battery is Battery.EMBEDDINGS:
        items = run_embeddings(n_values or EMBEDDING_N, seed, samples)
    else:
        items = run_lemma_forms(seed, budget)
    failed = sum(not item.passed for item in items)
    log.info("%s: %d item(s), %d failed", battery.value, len(items), failed)
    return items
