"""Exact analysis of irreducible subalgebras of so(2,n) and of the Lie ball."""

from .const import DEFAULT_BUDGET, DEFAULT_D, DEFAULT_SEED, TOOL_VERSION
from .errors import LieBallError
from .liealg import LieAlgebraBasis, SignatureForm, bracket_closure, builtin
from .matrix import ExactMatrix, Subspace
from .models import IrreducibilityVerdict, RepType, Verdict
from .repcheck import Representation, classify_type, decide_irreducibility, verify_verdict
from .scalar import Field, GaussExt, QuadExt
from .symspace import EmbeddingSpec, EmbeddingType, ProjectivePoint, embed, in_lieball

__all__ = [
    "DEFAULT_BUDGET",
    "DEFAULT_D",
    "DEFAULT_SEED",
    "TOOL_VERSION",
    "EmbeddingSpec",
    "EmbeddingType",
    "ExactMatrix",
    "Field",
    "GaussExt",
    "IrreducibilityVerdict",
    "LieAlgebraBasis",
    "LieBallError",
    "ProjectivePoint",
    "QuadExt",
    "RepType",
    "Representation",
    "SignatureForm",
    "Subspace",
    "Verdict",
    "bracket_closure",
    "builtin",
    "classify_type",
    "decide_irreducibility",
    "embed",
    "in_lieball",
    "verify_verdict",
]
