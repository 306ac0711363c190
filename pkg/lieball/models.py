"""Result records shared by the analysis modules, the batteries and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple, Union

from .const import DEFAULT_BUDGET, DEFAULT_SEED
from .matrix import ExactMatrix, Subspace, Vector
from .scalar import Scalar


class Verdict(str, Enum):
    IRREDUCIBLE = "IRREDUCIBLE"
    REDUCIBLE = "REDUCIBLE"


class RepType(str, Enum):
    REAL = "REAL"
    COMPLEX = "COMPLEX"
    QUATERNIONIC = "QUATERNIONIC"


class Symmetry(str, Enum):
    SYMMETRIC = "SYMMETRIC"
    ANTISYMMETRIC = "ANTISYMMETRIC"
    HERMITIAN = "HERMITIAN"


class ConjugationKind(str, Enum):
    NOT_SELF_CONJUGATE = "NOT_SELF_CONJUGATE"
    REAL_CONJ = "REAL_CONJ"
    QUATERNIONIC_CONJ = "QUATERNIONIC_CONJ"


class Task(str, Enum):
    """Analysis tasks, in the order the CLI runs them."""

    CLOSURE = "CLOSURE"
    COMMUTANT = "COMMUTANT"
    IRREDUCIBILITY = "IRREDUCIBILITY"
    TYPE = "TYPE"
    FORMS = "FORMS"
    CENTER = "CENTER"
    FIXER = "FIXER"
    TRANSITIVITY = "TRANSITIVITY"


Word = Tuple[int, ...]


@dataclass(frozen=True)
class NortonCertificate:
    """Data from which irreducibility is re-checked without any search.

    ``theta_terms`` is a linear combination of words in the generators (each
    word a product of generator matrices, the empty word being the identity);
    ``factor`` is the polynomial p, constant term first, with z = p(theta).
    """

    theta_terms: Tuple[Tuple[Scalar, Word], ...]
    factor: Tuple[Scalar, ...]
    kernel_vector: Vector
    transpose_vector: Vector
    kernel_dim: int
    spin_dim: int
    transpose_spin_dim: int


@dataclass(frozen=True)
class StructuralCertificate:
    """Irreducibility from the enveloping algebra: semisimple with a division commutant."""

    envelope_dim: int
    commutant_dim: int
    reason: str


Certificate = Union[NortonCertificate, StructuralCertificate]


@dataclass(frozen=True)
class IrreducibilityVerdict:
    verdict: Verdict
    witness: Optional[Subspace] = None
    certificate: Optional[Certificate] = None
    attempts: int = 0

    @property
    def irreducible(self) -> bool:
        return self.verdict is Verdict.IRREDUCIBLE


@dataclass(frozen=True)
class TypeVerdict:
    rep_type: RepType
    commutant_dim: int
    commutant_basis: Tuple[ExactMatrix, ...]
    complexification_irreducible: Optional[bool] = None
    # None when the complexified decision was withheld
    cross_check_agrees: Optional[bool] = None


@dataclass(frozen=True)
class FormSpace:
    symmetry: Symmetry
    basis: Tuple[ExactMatrix, ...]
    # (neg, pos, null) per basis member; None for antisymmetric members
    signatures: Tuple[Optional[Tuple[int, int, int]], ...] = ()

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class HermitianForm:
    """<x, y> = x^T H conj(y) on C^m, built from an invariant real-type form."""

    matrix: ExactMatrix
    rescale: Scalar
    # +1: <Jx, Jy> = conj<x, y>; -1: <Jx, Jy> = -conj<x, y>
    compatibility: int
    signature: Tuple[int, int, int]


@dataclass(frozen=True)
class ConjugationVerdict:
    """Antilinear intertwiner C(x) = M conj(x) with C^2 = square * Id."""

    kind: ConjugationKind
    witness: Optional[ExactMatrix] = None
    square: Optional[Scalar] = None
    normalized: bool = False


@dataclass
class AnalysisRequest:
    builtin: Optional[str] = None
    params: Dict[str, int] = field(default_factory=dict)
    path: Optional[str] = None
    tasks: Tuple[Task, ...] = (Task.IRREDUCIBILITY,)
    seed: int = DEFAULT_SEED
    budget: int = DEFAULT_BUDGET
    exhaustive: bool = False


@dataclass
class BatteryItem:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    command: str
    request: Dict[str, Any]
    results: Dict[str, Any] = field(default_factory=dict)
    items: list = field(default_factory=list)
    tool_version: str = ""
    exact: bool = True

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)
