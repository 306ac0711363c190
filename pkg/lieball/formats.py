"""
lieball/formats.py

JSON surfaces of the tool:
- the algebra input file (generators as grids of exact entry strings)
- codecs for scalars, vectors, matrices, subspaces and verdicts
- report rendering, JSON with a stable key order or a plain-text table

Entries use the scalar grammar of ``parse_scalar``; encoding always goes through
``format_scalar`` so a report read back yields the same exact values.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from .const import DEFAULT_D
from .errors import BadParams, DimensionMismatch, FieldMismatch, ParseError
from .liealg import LieAlgebraBasis, SignatureForm
from .matrix import ExactMatrix, Subspace, Vector, span
from .models import (
    BatteryItem,
    ConjugationVerdict,
    FormSpace,
    HermitianForm,
    IrreducibilityVerdict,
    NortonCertificate,
    Report,
    StructuralCertificate,
    TypeVerdict,
    Verdict,
)
from .scalar import Field, Scalar, check_radicand, coerce, field_of, format_scalar, join_fields, parse_scalar

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlgebraFile:
    """A parsed algebra input document."""

    generators: Tuple[ExactMatrix, ...]
    field: Field
    D: int
    ambient_dim: int
    signature: Optional[SignatureForm] = None
    name: Optional[str] = None


def _parse_json_text(text: str) -> Any:
    sanitized = text.lstrip("\ufeff")
    try:
        return json.loads(sanitized)
    except json.JSONDecodeError as err:
        raise ParseError(f"malformed JSON: {err.msg} (line {err.lineno}, column {err.colno})", err.pos) from err


def _require(doc: Dict[str, Any], key: str) -> Any:
    if key not in doc:
        raise ParseError(f"missing field {key!r}")
    return doc[key]


def _int_field(doc: Dict[str, Any], key: str, default: Optional[int] = None) -> int:
    value = doc.get(key, default) if default is not None else _require(doc, key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"field {key!r} must be an integer, got {value!r}")
    return value


def parse_entry(value: Any, D: int, where: str) -> Scalar:
    """One matrix entry: a grammar string, or a JSON integer."""
    if isinstance(value, bool):
        raise ParseError(f"{where}: booleans are not matrix entries")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise ParseError(f"{where}: entries must be exact strings, got {value!r}")
    try:
        return parse_scalar(value, D)
    except ParseError as err:
        raise err.located(where) from err


def _parse_matrix(grid: Any, field: Field, D: int, n: int, where: str) -> ExactMatrix:
    if not isinstance(grid, list) or not grid:
        raise ParseError(f"{where}: a matrix is a non-empty list of rows")
    if len(grid) != n:
        raise DimensionMismatch(f"{where}: {len(grid)} rows, ambient_dim is {n}")
    rows: List[List[Scalar]] = []
    for i, row in enumerate(grid):
        if not isinstance(row, list):
            raise ParseError(f"{where}[{i}]: a row is a list of entries")
        if len(row) != n:
            raise DimensionMismatch(f"{where}[{i}]: {len(row)} entries, ambient_dim is {n}")
        parsed = []
        for j, value in enumerate(row):
            x = parse_entry(value, D, f"{where}[{i}][{j}]")
            if join_fields(field, field_of(x)) != field:
                raise FieldMismatch(f"{where}[{i}][{j}]: {value!r} is not in field {field.value}")
            parsed.append(x)
        rows.append(parsed)
    return ExactMatrix.from_rows(rows, field, D)


def parse_algebra_document(text: str) -> AlgebraFile:
    doc = _parse_json_text(text)
    if not isinstance(doc, dict):
        raise ParseError("an algebra file is a JSON object")
    try:
        D = check_radicand(_int_field(doc, "D", DEFAULT_D))
    except BadParams as err:
        raise ParseError(str(err)) from err
    try:
        field = Field(doc.get("field", Field.RAT.value))
    except ValueError as err:
        raise ParseError(f"unknown field {doc.get('field')!r}") from err
    n = _int_field(doc, "ambient_dim")
    if n < 1:
        raise ParseError(f"ambient_dim must be positive, got {n}")
    eta = None
    if doc.get("signature") is not None:
        sig = doc["signature"]
        if not isinstance(sig, list) or len(sig) != 2 or not all(isinstance(v, int) for v in sig):
            raise ParseError(f"signature must be [p, q], got {sig!r}")
        eta = SignatureForm(*sig)
        if eta.dim != n:
            raise DimensionMismatch(f"signature {sig} does not match ambient_dim {n}")
    grids = _require(doc, "generators")
    if not isinstance(grids, list) or not grids:
        raise ParseError("generators must be a non-empty list of matrices")
    generators = tuple(
        _parse_matrix(grid, field, D, n, f"generators[{k}]") for k, grid in enumerate(grids)
    )
    name = doc.get("name")
    log.debug("parsed %d generators on %s^%d", len(generators), field.value, n)
    return AlgebraFile(generators, field, D, n, eta, str(name) if name is not None else None)


def load_algebra_file(path: Union[str, Path]) -> AlgebraFile:
    return parse_algebra_document(Path(path).read_text(encoding="utf-8"))


def algebra_document(g: LieAlgebraBasis, eta: Optional[SignatureForm] = None) -> Dict[str, Any]:
    """Inverse of parse_algebra_document for a basis."""
    doc: Dict[str, Any] = {
        "name": g.name,
        "D": g.D,
        "field": g.field.value,
        "ambient_dim": g.ambient_dim,
    }
    if eta is not None:
        doc["signature"] = [eta.p, eta.q]
    doc["generators"] = [matrix_to_json(A) for A in g.basis]
    return doc


# codecs


def vector_to_json(v: Sequence[Scalar]) -> List[str]:
    return [format_scalar(x) for x in v]


def vector_from_json(data: Any, field: Field, D: int, where: str = "vector") -> Vector:
    if not isinstance(data, list):
        raise ParseError(f"{where}: expected a list of entries")
    return tuple(coerce(parse_entry(x, D, f"{where}[{i}]"), field, D) for i, x in enumerate(data))


def matrix_to_json(A: ExactMatrix) -> List[List[str]]:
    return [vector_to_json(A.row(i)) for i in range(A.rows)]


def subspace_to_json(W: Subspace) -> Dict[str, Any]:
    return {
        "ambient_dim": W.ambient_dim,
        "dim": W.dim,
        "basis": [vector_to_json(v) for v in W.basis],
    }


def subspace_from_json(data: Any, field: Field, D: int) -> Subspace:
    if not isinstance(data, dict):
        raise ParseError("witness must be an object")
    n = _int_field(data, "ambient_dim")
    basis = [vector_from_json(v, field, D, f"witness.basis[{i}]") for i, v in enumerate(_require(data, "basis"))]
    if any(len(v) != n for v in basis):
        raise DimensionMismatch("witness vectors do not match ambient_dim")
    # rebuilt so the basis is in echelon form whatever the report holds
    return span(basis, n, field, D)


def _certificate_to_json(cert: Union[NortonCertificate, StructuralCertificate, None]) -> Optional[Dict[str, Any]]:
    if cert is None:
        return None
    if isinstance(cert, StructuralCertificate):
        return {
            "kind": "STRUCTURAL",
            "envelope_dim": cert.envelope_dim,
            "commutant_dim": cert.commutant_dim,
            "reason": cert.reason,
        }
    return {
        "kind": "NORTON",
        "theta": [{"coeff": format_scalar(c), "word": list(word)} for c, word in cert.theta_terms],
        "factor": vector_to_json(cert.factor),
        "kernel_vector": vector_to_json(cert.kernel_vector),
        "transpose_vector": vector_to_json(cert.transpose_vector),
        "kernel_dim": cert.kernel_dim,
        "spin_dim": cert.spin_dim,
        "transpose_spin_dim": cert.transpose_spin_dim,
    }


def _certificate_from_json(data: Any, field: Field, D: int) -> Union[NortonCertificate, StructuralCertificate]:
    if not isinstance(data, dict):
        raise ParseError("certificate must be an object")
    kind = _require(data, "kind")
    if kind == "STRUCTURAL":
        return StructuralCertificate(
            _int_field(data, "envelope_dim"), _int_field(data, "commutant_dim"), str(_require(data, "reason"))
        )
    if kind != "NORTON":
        raise ParseError(f"unknown certificate kind {kind!r}")
    terms = []
    for i, term in enumerate(_require(data, "theta")):
        word = term.get("word") if isinstance(term, dict) else None
        if not isinstance(word, list) or not all(isinstance(k, int) and not isinstance(k, bool) for k in word):
            raise ParseError(f"theta[{i}]: a term is {{'coeff': entry, 'word': [generator indices]}}")
        terms.append((parse_entry(term.get("coeff"), D, f"theta[{i}].coeff"), tuple(word)))
    return NortonCertificate(
        theta_terms=tuple(terms),
        factor=vector_from_json(_require(data, "factor"), field, D, "factor"),
        kernel_vector=vector_from_json(_require(data, "kernel_vector"), field, D, "kernel_vector"),
        transpose_vector=vector_from_json(_require(data, "transpose_vector"), field, D, "transpose_vector"),
        kernel_dim=_int_field(data, "kernel_dim"),
        spin_dim=_int_field(data, "spin_dim"),
        transpose_spin_dim=_int_field(data, "transpose_spin_dim"),
    )


def verdict_to_json(verdict: IrreducibilityVerdict) -> Dict[str, Any]:
    return {
        "verdict": verdict.verdict.value,
        "attempts": verdict.attempts,
        "witness": subspace_to_json(verdict.witness) if verdict.witness is not None else None,
        "certificate": _certificate_to_json(verdict.certificate),
    }


def verdict_from_json(data: Any, field: Field, D: int) -> IrreducibilityVerdict:
    """Rebuild a verdict from a report entry; the values are not trusted until verify_verdict."""
    if not isinstance(data, dict):
        raise ParseError("verdict must be an object")
    try:
        kind = Verdict(_require(data, "verdict"))
    except ValueError as err:
        raise ParseError(f"unknown verdict {data.get('verdict')!r}") from err
    witness = data.get("witness")
    cert = data.get("certificate")
    return IrreducibilityVerdict(
        verdict=kind,
        witness=subspace_from_json(witness, field, D) if witness is not None else None,
        certificate=_certificate_from_json(cert, field, D) if cert is not None else None,
        attempts=_int_field(data, "attempts", 0),
    )


def type_to_json(t: TypeVerdict) -> Dict[str, Any]:
    return {
        "type": t.rep_type.value,
        "commutant_dim": t.commutant_dim,
        "complexification_irreducible": t.complexification_irreducible,
        "cross_check_agrees": t.cross_check_agrees,
    }


def forms_to_json(forms: FormSpace) -> Dict[str, Any]:
    return {
        "symmetry": forms.symmetry.value,
        "dim": forms.dim,
        "signatures": [list(s) if s is not None else None for s in forms.signatures],
        "basis": [matrix_to_json(B) for B in forms.basis],
    }


def hermitian_to_json(form: HermitianForm) -> Dict[str, Any]:
    return {
        "matrix": matrix_to_json(form.matrix),
        "rescale": format_scalar(form.rescale),
        "compatibility": form.compatibility,
        "signature": list(form.signature),
    }


def conjugation_to_json(c: ConjugationVerdict) -> Dict[str, Any]:
    return {
        "kind": c.kind.value,
        "square": format_scalar(c.square) if c.square is not None else None,
        "normalized": c.normalized,
        "witness": matrix_to_json(c.witness) if c.witness is not None else None,
    }


def item_to_json(item: BatteryItem) -> Dict[str, Any]:
    return {"name": item.name, "passed": item.passed, "detail": item.detail}


# reports


def report_to_json(report: Report) -> Dict[str, Any]:
    doc: Dict[str, Any] = {
        "tool_version": report.tool_version,
        "exact": report.exact,
        "command": report.command,
        "request": report.request,
    }
    if report.results:
        doc["results"] = report.results
    if report.items:
        doc["items"] = [item_to_json(item) for item in report.items]
        doc["passed"] = report.passed
    return doc


def render_json(report: Report) -> str:
    """Key order follows construction order; no timestamps, so equal runs give equal bytes."""
    return json.dumps(report_to_json(report), indent=2, ensure_ascii=False) + "\n"


def _is_flat(value: Any) -> bool:
    return not isinstance(value, (dict, list)) or all(not isinstance(v, (dict, list)) for v in value)


def _cell(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return "[" + ", ".join(_cell(v) for v in value) + "]"
    return str(value)


def _table(doc: Dict[str, Any], indent: int, lines: List[str]) -> None:
    width = max((len(k) for k in doc), default=0)
    pad = " " * indent
    for key, value in doc.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}")
            _table(value, indent + 2, lines)
        elif _is_flat(value):
            lines.append(f"{pad}{key.ljust(width)}  {_cell(value)}")
        else:
            # matrices and bases: summarised, the JSON report carries them
            lines.append(f"{pad}{key.ljust(width)}  <{len(value)} entries>")


def render_human(report: Report) -> str:
    lines = [f"lieball {report.tool_version}  {report.command}  (exact arithmetic)", "", "request"]
    _table(report.request, 2, lines)
    if report.results:
        lines += ["", "results"]
        _table(report.results, 2, lines)
    if report.items:
        lines += ["", "items"]
        for item in report.items:
            status = "PASS" if item.passed else "FAIL"
            detail = f"  ({item.detail})" if item.detail else ""
            lines.append(f"  {status}  {item.name}{detail}")
        failed = sum(not item.passed for item in report.items)
        lines += ["", f"{len(report.items) - failed} passed, {failed} failed"]
    return "\n".join(lines) + "\n"


def render(report: Report, human: bool = False) -> str:
    return render_human(report) if human else render_json(report)


def load_report(path: Union[str, Path]) -> Dict[str, Any]:
    doc = _parse_json_text(Path(path).read_text(encoding="utf-8"))
    if not isinstance(doc, dict):
        raise ParseError("a report is a JSON object")
    return doc
