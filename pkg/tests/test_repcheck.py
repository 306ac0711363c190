import dataclasses
import sys
from fractions import Fraction
from pathlib import Path

import pytest

# Ensure the project root is on the import path for tests without installation
sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from lieball.errors import AnalysisBudgetExceeded, FieldMismatch, NotIrreducible, NotSymmetric
from lieball.liealg import builtin, sl2, su2
from lieball.matrix import ExactMatrix, span
from lieball.models import (
    ConjugationKind,
    NortonCertificate,
    RepType,
    StructuralCertificate,
    Symmetry,
    Verdict,
)
from lieball.repcheck import (
    Representation,
    candidate_factors,
    classify_type,
    commutant,
    complexify_rep,
    conjugation_analysis,
    decide_irreducibility,
    invariant_forms,
    signature,
    structural_decision,
    tensor_rep,
    verify_verdict,
)
from lieball.scalar import Field, QuadExt


def rep_of(name, **params):
    return Representation(builtin(name, params))


def test_so23_has_a_norton_certificate():
    rep = rep_of("SO(2,3)")
    verdict = decide_irreducibility(rep)
    assert verdict.verdict is Verdict.IRREDUCIBLE
    assert isinstance(verdict.certificate, NortonCertificate)
    assert verdict.certificate.spin_dim == 5
    assert verify_verdict(rep, verdict)


def test_reducible_subalgebras_carry_invariant_witnesses():
    rep = rep_of("SO12_BLOCK_P2", n=3)
    verdict = decide_irreducibility(rep)
    assert verdict.verdict is Verdict.REDUCIBLE
    assert verdict.witness.is_proper()
    assert verify_verdict(rep, verdict)

    # su(1,1) realified splits as two copies of the standard sl2 module
    su11 = rep_of("SU(1,p)_real", p=1)
    assert decide_irreducibility(su11, exhaustive=True).verdict is Verdict.REDUCIBLE


def test_tampered_verdicts_fail_to_recheck():
    rep = rep_of("SO(2,3)")
    verdict = decide_irreducibility(rep)
    cert = verdict.certificate
    forged = dataclasses.replace(verdict, certificate=dataclasses.replace(cert, factor=(Fraction(5), Fraction(1))))
    assert not verify_verdict(rep, forged)

    line = span([(1, 0, 0, 0, 0)], 5)
    fake = dataclasses.replace(verdict, verdict=Verdict.REDUCIBLE, witness=line, certificate=None)
    assert not verify_verdict(rep, fake)


def test_quaternionic_module_needs_the_structural_decision():
    rep = rep_of("SU2_real")
    with pytest.raises(AnalysisBudgetExceeded):
        decide_irreducibility(rep, budget=4)
    verdict = decide_irreducibility(rep, budget=4, exhaustive=True)
    assert verdict.irreducible
    assert isinstance(verdict.certificate, StructuralCertificate)
    assert verdict.certificate.commutant_dim == 4
    assert verify_verdict(rep, verdict)


@pytest.mark.parametrize(
    "name,params",
    [
        ("SO(p,q)", {"p": 1, "q": 2}),
        ("SO(p,q)", {"p": 2, "q": 3}),
        ("SL2", {}),
        ("APPENDIX_SO12", {}),
        ("SO12_BLOCK_P2", {"n": 3}),
        ("U(1,p)_real", {"p": 1}),
    ],
)
def test_verdict_agrees_with_structural_decision(name, params):
    rep = Representation(builtin(name, params))
    assert decide_irreducibility(rep, exhaustive=True).verdict is structural_decision(rep).verdict


def test_decision_is_deterministic():
    rep = rep_of("APPENDIX_SO12")
    assert decide_irreducibility(rep, seed=7) == decide_irreducibility(rep, seed=7)


@pytest.mark.parametrize(
    "name,params,expected,dc",
    [
        ("SO(p,q)", {"p": 1, "q": 2}, RepType.REAL, 1),
        ("U(1,p)_real", {"p": 1}, RepType.COMPLEX, 2),
        ("SU2_real", {}, RepType.QUATERNIONIC, 4),
    ],
)
def test_classify_type(name, params, expected, dc):
    result = classify_type(Representation(builtin(name, params)))
    assert result.rep_type is expected
    assert result.commutant_dim == dc
    assert result.cross_check_agrees is True


def test_classify_type_rejects_bad_input():
    with pytest.raises(NotIrreducible):
        classify_type(rep_of("SO12_BLOCK_P2", n=3))
    with pytest.raises(FieldMismatch):
        classify_type(Representation(su2()))


def test_invariant_forms_of_so23():
    rep = rep_of("SO(2,3)")
    sym = invariant_forms(rep, Symmetry.SYMMETRIC)
    assert sym.dim == 1
    assert sym.signatures == ((2, 3, 0),)
    assert invariant_forms(rep, Symmetry.ANTISYMMETRIC).dim == 0
    assert commutant(rep).dim == 1


def test_hermitian_forms_of_su2():
    forms = invariant_forms(Representation(su2()), Symmetry.HERMITIAN)
    assert forms.dim == 1
    assert forms.signatures == ((0, 2, 0),)
    with pytest.raises(FieldMismatch):
        invariant_forms(rep_of("SL2"), Symmetry.HERMITIAN)


def test_signature_by_congruence():
    assert signature(ExactMatrix.from_rows([[0, 1], [1, 0]])) == (1, 1, 0)
    assert signature(ExactMatrix.from_rows([[1, 0, 0], [0, 0, 0], [0, 0, 2]])) == (0, 2, 1)
    with pytest.raises(NotSymmetric):
        signature(ExactMatrix.from_rows([[0, 1], [0, 0]]))


def test_conjugation_kinds():
    real = conjugation_analysis(complexify_rep(Representation(sl2())))
    assert real.kind is ConjugationKind.REAL_CONJ
    assert real.square == 1
    assert conjugation_analysis(Representation(su2())).kind is ConjugationKind.QUATERNIONIC_CONJ
    weight = conjugation_analysis(rep_of("U1_WEIGHT", weight=1))
    assert weight.kind is ConjugationKind.NOT_SELF_CONJUGATE
    with pytest.raises(FieldMismatch):
        conjugation_analysis(rep_of("SL2"))


def test_tensor_needs_matching_fields():
    with pytest.raises(FieldMismatch):
        tensor_rep(Representation(sl2()), Representation(su2()))
    both = tensor_rep(Representation(sl2()), Representation(sl2()))
    assert both.ambient_dim == 4


def test_candidate_factors_are_exact_divisors():
    one, zero = Fraction(1), Fraction(0)
    assert candidate_factors([Fraction(-2), zero, one], Field.RAT, 3) == [[-2, 0, 1]]
    assert sorted(candidate_factors([Fraction(-1), zero, one], Field.RAT, 3)) == [[-1, 1], [1, 1]]

    r3 = [QuadExt(-3, 0, 3), QuadExt(0, 0, 3), QuadExt(1, 0, 3)]
    factors = candidate_factors(r3, Field.QUAD, 3)
    assert [QuadExt(0, -1, 3), 1] in factors
    assert [QuadExt(0, 1, 3), 1] in factors
