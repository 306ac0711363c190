"""Command line front end: analyze algebras, run the verification batteries, evaluate embeddings."""

from __future__ import annotations

import argparse
import asyncio
import logging
import sys
from pathlib import Path
from typing import Any, Awaitable, Callable, Dict, List, Optional, Sequence, Tuple

from .batteries import Battery, base_plane, run_battery
from .const import (
    DEFAULT_BUDGET,
    DEFAULT_D,
    DEFAULT_MAX_DIM,
    DEFAULT_SEED,
    EXIT_BATTERY_FAILED,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_VERDICT_WITHHELD,
    MAX_BATTERY_N,
    SAMPLE_COUNT,
    TOOL_VERSION,
)
from .domainiv import DomainPoint, cartan_iv_map, chained_bound_holds, domain_iv_defect, in_domain_iv
from .errors import AnalysisBudgetExceeded, BadParams, ClosureBudgetExceeded, LieBallError, ParseError
from .formats import (
    conjugation_to_json,
    forms_to_json,
    load_algebra_file,
    load_report,
    matrix_to_json,
    render,
    type_to_json,
    vector_to_json,
    verdict_from_json,
    verdict_to_json,
)
from .liealg import LieAlgebraBasis, bracket_closure, builtin, center, so_pq
from .models import AnalysisRequest, IrreducibilityVerdict, Report, Symmetry, Task
from .repcheck import (
    Representation,
    classify_type,
    commutant_matrices,
    conjugation_analysis,
    decide_irreducibility,
    invariant_forms,
    verify_verdict,
)
from .scalar import format_scalar, parse_scalar
from .symspace import (
    EmbeddingSpec,
    EmbeddingType,
    embed,
    fixer_algebra,
    hermitian_norm,
    in_lieball,
    local_transitivity,
    on_quadric,
    parabolic_algebra,
    quadric_residual,
)

_LOGGER = logging.getLogger(__name__)

_INPUT_ERRORS = (LieBallError, OSError)
_WITHHELD = (AnalysisBudgetExceeded, ClosureBudgetExceeded)


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lieball-cli",
        description="Exact analysis of subalgebras of so(2,n) and of the Lie ball of R^{2,n}.",
    )
    p.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help=f"Seed of the singular-element search and of the battery samples (default: {DEFAULT_SEED})",
    )
    p.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help=f"Singular-element attempts before a verdict is withheld (default: {DEFAULT_BUDGET})",
    )
    p.add_argument(
        "--exhaustive",
        action="store_true",
        help="Fall back to the exact structural decision when the budget runs out.",
    )
    p.add_argument("--human", action="store_true", help="Render tables instead of JSON.")
    p.add_argument("--output", default=None, help="Write the report to this path instead of stdout.")
    p.add_argument("--verbose", action="store_true", help="Enable debug logging.")

    sub = p.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="Analyze a builtin algebra or an algebra file.")
    analyze.add_argument("source", nargs="?", default=None, help="Algebra definition file (JSON)")
    analyze.add_argument("--builtin", default=None, help="Builtin algebra name, e.g. 'APPENDIX_SO12' or 'U(1,2)_real'")
    analyze.add_argument(
        "--param",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="Builtin parameter, repeatable (e.g. --param p=2)",
    )
    analyze.add_argument(
        "--tasks",
        default=Task.IRREDUCIBILITY.value,
        help="Comma separated tasks from " + ",".join(t.value for t in Task) + " (default: IRREDUCIBILITY)",
    )
    analyze.add_argument(
        "--recheck",
        default=None,
        metavar="REPORT",
        help="Re-verify the irreducibility verdict stored in an earlier report instead of running tasks.",
    )

    verify = sub.add_parser("verify", help="Run a verification battery.")
    verify.add_argument("battery", choices=[b.value for b in Battery])
    verify.add_argument(
        "--n",
        default=None,
        help=f"n values as 'a..b' or 'a,b,c' within 1..{MAX_BATTERY_N} (default: the battery's own)",
    )
    verify.add_argument(
        "--samples",
        type=int,
        default=SAMPLE_COUNT,
        help=f"Random points per sampled check (default: {SAMPLE_COUNT})",
    )

    emb = sub.add_parser("embed", help="Evaluate a totally geodesic embedding at a point.")
    emb.add_argument("kind", choices=[t.value for t in EmbeddingType])
    emb.add_argument("--n", type=int, required=True, help="Target Lie ball of R^{2,n}")
    emb.add_argument("--k", type=int, default=1, help="Dimension parameter k (k1 for G2) (default: 1)")
    emb.add_argument("--k2", type=int, default=0, help="Second dimension parameter of G2 (default: 0)")
    emb.add_argument("point", nargs="+", help="Input coordinates as exact entries, e.g. 1 '(1/2,1/3)'; put -- before negative ones")

    iv = sub.add_parser("map-iv", help="Evaluate the map from the type IV domain onto the Lie ball.")
    iv.add_argument("z", nargs="+", help="Coordinates z_1 .. z_n as exact entries")

    return p


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else logging.INFO
    # stderr keeps stdout reports byte-identical
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
    root = logging.getLogger()
    root.handlers[:] = [handler]
    root.setLevel(level)


def _parse_params(pairs: Sequence[str]) -> Dict[str, int]:
    params: Dict[str, int] = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise BadParams(f"parameter {pair!r} is not KEY=VALUE")
        try:
            params[key.strip()] = int(value)
        except ValueError as err:
            raise BadParams(f"parameter {key} must be an integer, got {value!r}") from err
    return params


def _parse_tasks(text: str) -> Tuple[Task, ...]:
    names = [t.strip().upper() for t in text.split(",") if t.strip()]
    if not names:
        raise BadParams("at least one task is required")
    try:
        wanted = {Task(name) for name in names}
    except ValueError as err:
        raise BadParams(f"unknown task in {text!r}") from err
    return tuple(t for t in Task if t in wanted)


def _parse_n_range(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as err:
        raise BadParams(f"n range {text!r} is neither 'a..b' nor 'a,b,c'") from err


def _parse_entries(values: Sequence[str]) -> List[Any]:
    out = []
    for i, text in enumerate(values):
        try:
            out.append(parse_scalar(text, DEFAULT_D))
        except ParseError as err:
            raise err.located(f"coordinate {i}") from err
    return out


# analyze


def _request_of(args: argparse.Namespace) -> AnalysisRequest:
    if (args.builtin is None) == (args.source is None):
        raise BadParams("give either an algebra file or --builtin")
    return AnalysisRequest(
        builtin=args.builtin,
        params=_parse_params(args.param),
        path=args.source,
        tasks=_parse_tasks(args.tasks),
        seed=args.seed,
        budget=args.budget,
        exhaustive=args.exhaustive,
    )


def _echo(request: AnalysisRequest, recheck: Optional[str]) -> Dict[str, Any]:
    echo: Dict[str, Any] = {}
    if request.builtin is not None:
        echo["builtin"] = request.builtin
        echo["params"] = dict(sorted(request.params.items()))
    else:
        echo["path"] = request.path
    if recheck is not None:
        echo["recheck"] = recheck
    else:
        echo["tasks"] = [t.value for t in request.tasks]
    echo["seed"] = request.seed
    echo["budget"] = request.budget
    echo["exhaustive"] = request.exhaustive
    return echo


def _load_algebra(request: AnalysisRequest) -> Tuple[LieAlgebraBasis, int]:
    """The bracket-closed algebra and the number of input generators."""
    if request.builtin is not None:
        g = builtin(request.builtin, request.params)
        return g, g.dim
    doc = load_algebra_file(request.path)
    name = doc.name or Path(request.path).stem
    g = bracket_closure(doc.generators, DEFAULT_MAX_DIM, name)
    return g, len(doc.generators)


def _matrices(g: LieAlgebraBasis) -> Dict[str, Any]:
    return {"dim": g.dim, "basis": [matrix_to_json(A) for A in g.basis]}


def _closure_result(g: LieAlgebraBasis, generators: int) -> Dict[str, Any]:
    return {"name": g.name, "generators": generators, "dim": g.dim, "ambient_dim": g.ambient_dim, "field": g.field.value}


def _commutant_result(rep: Representation) -> Dict[str, Any]:
    comm = commutant_matrices(rep)
    return {"dim": len(comm), "basis": [matrix_to_json(C) for C in comm]}


def _forms_result(rep: Representation) -> Dict[str, Any]:
    kinds = [Symmetry.SYMMETRIC, Symmetry.ANTISYMMETRIC]
    if rep.field.is_gaussian:
        kinds.append(Symmetry.HERMITIAN)
    return {kind.value: forms_to_json(invariant_forms(rep, kind)) for kind in kinds}


def _center_result(g: LieAlgebraBasis) -> Dict[str, Any]:
    Z = center(g)
    return {"dim": Z.dim, "basis": [matrix_to_json(A) for A in g.matrices(Z)]}


def _fixer_result(g: LieAlgebraBasis) -> Dict[str, Any]:
    if g.ambient_dim < 3:
        raise BadParams("the fixer needs an algebra on R^{2,n} with n >= 1")
    return _matrices(fixer_algebra(g, base_plane(g.ambient_dim - 2)))


def _transitivity_result(g: LieAlgebraBasis) -> Dict[str, Any]:
    n = g.ambient_dim - 2
    if n < 1:
        raise BadParams("transitivity needs an algebra on R^{2,n} with n >= 1")
    v = [0] * (n + 2)
    v[0] = v[2] = 1
    p = parabolic_algebra(1, n - 1, v)
    return {
        "lightlike": vector_to_json(v),
        "parabolic_dim": p.dim,
        "transitive": local_transitivity(g, p, so_pq(2, n)),
    }


def _irreducibility(rep: Representation, request: AnalysisRequest, want_type: bool) -> Dict[str, Any]:
    verdict = decide_irreducibility(rep, request.seed, request.budget, request.exhaustive)
    out: Dict[str, Any] = {}
    if Task.IRREDUCIBILITY in request.tasks:
        entry = verdict_to_json(verdict)
        entry["verified"] = verify_verdict(rep, verdict)
        out[Task.IRREDUCIBILITY.value] = entry
    if want_type:
        out[Task.TYPE.value] = _type_result(rep, verdict, request)
    return out


def _type_result(rep: Representation, verdict: IrreducibilityVerdict, request: AnalysisRequest) -> Dict[str, Any]:
    if rep.field.is_gaussian:
        return conjugation_to_json(conjugation_analysis(rep))
    return type_to_json(classify_type(rep, verdict, request.seed, request.budget))


async def _analyze_tasks(g: LieAlgebraBasis, generators: int, request: AnalysisRequest) -> Dict[str, Any]:
    rep = Representation(g)
    independent: Dict[Task, Callable[[], Dict[str, Any]]] = {
        Task.CLOSURE: lambda: _closure_result(g, generators),
        Task.COMMUTANT: lambda: _commutant_result(rep),
        Task.FORMS: lambda: _forms_result(rep),
        Task.CENTER: lambda: _center_result(g),
        Task.FIXER: lambda: _fixer_result(g),
        Task.TRANSITIVITY: lambda: _transitivity_result(g),
    }
    selected = [t for t in request.tasks if t in independent]
    jobs = [asyncio.to_thread(independent[t]) for t in selected]
    want_type = Task.TYPE in request.tasks
    if Task.IRREDUCIBILITY in request.tasks or want_type:
        jobs.append(asyncio.to_thread(_irreducibility, rep, request, want_type))
    outputs = await asyncio.gather(*jobs)
    found: Dict[str, Any] = {t.value: out for t, out in zip(selected, outputs)}
    if len(outputs) > len(selected):
        found.update(outputs[-1])
    # assembled in the fixed task order whatever finished first
    return {t.value: found[t.value] for t in request.tasks}


async def _cmd_analyze(args: argparse.Namespace) -> Tuple[Report, int]:
    request = _request_of(args)
    report = Report("analyze", _echo(request, args.recheck), tool_version=TOOL_VERSION)
    g, generators = await asyncio.to_thread(_load_algebra, request)
    _LOGGER.info("analyzing %s (dimension %d on %s^%d)", g.name, g.dim, g.field.value, g.ambient_dim)
    if args.recheck is None:
        report.results = await _analyze_tasks(g, generators, request)
        return report, EXIT_OK
    stored = load_report(args.recheck).get("results", {}).get(Task.IRREDUCIBILITY.value)
    if stored is None:
        raise ParseError(f"{args.recheck} holds no irreducibility verdict")
    rep = Representation(g)
    verdict = verdict_from_json(stored, rep.field, rep.D)
    verified = await asyncio.to_thread(verify_verdict, rep, verdict)
    report.results = {"RECHECK": {"verdict": verdict.verdict.value, "verified": verified}}
    if not verified:
        _LOGGER.error("stored %s verdict does not re-verify", verdict.verdict.value)
    return report, EXIT_OK if verified else EXIT_BATTERY_FAILED


async def _cmd_verify(args: argparse.Namespace) -> Tuple[Report, int]:
    battery = Battery(args.battery)
    n_values = _parse_n_range(args.n)
    request = {
        "battery": battery.value,
        "n": n_values,
        "seed": args.seed,
        "budget": args.budget,
        "samples": args.samples,
    }
    items = await asyncio.to_thread(run_battery, battery, n_values, args.seed, args.budget, args.samples)
    report = Report("verify", request, items=items, tool_version=TOOL_VERSION)
    return report, EXIT_OK if report.passed else EXIT_BATTERY_FAILED


async def _cmd_embed(args: argparse.Namespace) -> Tuple[Report, int]:
    spec = EmbeddingSpec(EmbeddingType(args.kind), args.n, args.k, args.k2)
    point = _parse_entries(args.point)
    Z = embed(spec, point)
    request = {"embedding": spec.label, "point": vector_to_json(point)}
    results = {
        "image": vector_to_json(Z.coords),
        "quadric_residual": format_scalar(quadric_residual(Z)),
        "hermitian_norm": format_scalar(hermitian_norm(Z)),
        "on_quadric": on_quadric(Z),
        "in_lieball": in_lieball(Z),
    }
    return Report("embed", request, results, tool_version=TOOL_VERSION), EXIT_OK


async def _cmd_map_iv(args: argparse.Namespace) -> Tuple[Report, int]:
    z = DomainPoint.of(_parse_entries(args.z))
    Z = cartan_iv_map(z)
    request = {"z": vector_to_json(z.z)}
    results = {
        "image": vector_to_json(Z.coords),
        "defect": format_scalar(domain_iv_defect(z)),
        "in_domain": in_domain_iv(z),
        "chained_bound": chained_bound_holds(z),
        "quadric_residual": format_scalar(quadric_residual(Z)),
        "in_lieball": in_lieball(Z),
    }
    return Report("map-iv", request, results, tool_version=TOOL_VERSION), EXIT_OK


_COMMANDS: Dict[str, Callable[[argparse.Namespace], Awaitable[Tuple[Report, int]]]] = {
    "analyze": _cmd_analyze,
    "verify": _cmd_verify,
    "embed": _cmd_embed,
    "map-iv": _cmd_map_iv,
}


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


async def _run(args: argparse.Namespace) -> int:
    try:
        report, rc = await _COMMANDS[args.command](args)
        _emit(render(report, args.human), args.output)
        if rc == EXIT_BATTERY_FAILED and report.items:
            failed = sum(not item.passed for item in report.items)
            _LOGGER.error("%d of %d item(s) failed", failed, len(report.items))
        return rc
    except _WITHHELD as e:
        _LOGGER.error("verdict withheld: %s", e)
        return EXIT_VERDICT_WITHHELD
    except _INPUT_ERRORS as e:
        _LOGGER.error(str(e))
        return EXIT_INPUT_ERROR
    except KeyboardInterrupt:
        return 130


def main() -> None:
    parser = _build_parser()
    args = parser.parse_args()

    _configure_logging(args.verbose)

    rc = asyncio.run(_run(args))
    raise SystemExit(rc)


if __name__ == "__main__":
    main()
