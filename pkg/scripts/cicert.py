# Path: scripts/cicert.py
# Purpose: Command-line front end for Bott dimensions, vanishing certificates, stability reports,
#          splitting types along curves and the multidegree survey.
# Layer: scripts.
# Details: Results go to stdout (canonical JSON with --json), diagnostics to stderr through loguru.
#          Exit codes: 0 success, 1 negative finding, 2 usage or input error.

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from loguru import logger

from config import AppSettings, SurveySettings
from core.curves import (
    CurveAnalysis,
    CurveInputError,
    DegenerateGradientError,
    SplittingWindowError,
    parse_input,
    positive_rank_lower_bound,
    splitting_of_pullback_tangent,
    uniruledness_evidence,
)
from core.models.domain import CohomologyQuery, CompleteIntersectionSpec
from core.projective import bott_dimension, euler_characteristic_omega
from core.stability import StabilityVerdict, Tri, slope_report
from core.survey import SurveyPipeline
from core.vanish import (
    CertificateStructureError,
    VanishingClaim,
    certificate_depth,
    certificate_from_dict,
    certificate_size,
    check_certificate,
    default_t_min,
    summarize_sweep,
    sweep_range,
    verify_vanishing,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    """Bad flags or input that argparse itself cannot catch."""


def dump_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)


def parse_degrees(text: str) -> List[int]:
    if not text.strip():
        return []
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise UsageError(f"Degrees must be comma-separated integers, got {text!r}.") from exc


def spec_from_args(args: argparse.Namespace) -> CompleteIntersectionSpec:
    if args.n is None:
        raise UsageError("-n is required.")
    try:
        return CompleteIntersectionSpec.normalized(args.n, parse_degrees(args.degrees))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def configure_logging(settings: AppSettings, verbose: bool) -> None:
    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if verbose else settings.log_level)


# Subcommands
def cmd_bott(args: argparse.Namespace, settings: AppSettings) -> int:
    try:
        if args.chi:
            value = euler_characteristic_omega(args.n, args.q, args.t)
        else:
            value = bott_dimension(args.n, CohomologyQuery(args.p, args.q, args.t))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(value)
    return EXIT_OK


def _replay(path: Path, as_json: bool) -> int:
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"Cannot read certificate {path}: {exc}") from exc
    if isinstance(payload, dict) and "certificate" in payload:
        payload = payload["certificate"]
    try:
        certificate = certificate_from_dict(payload)
        valid = check_certificate(certificate)
        problem = "" if valid else "replay rejected the certificate"
    except (CertificateStructureError, ValueError) as exc:
        valid, problem = False, str(exc)
    if as_json:
        print(dump_json({"valid": valid, "error": problem or None}))
    else:
        print("certificate valid" if valid else f"certificate invalid: {problem}")
    return EXIT_OK if valid else EXIT_NEGATIVE


def cmd_vanish(args: argparse.Namespace, settings: AppSettings) -> int:
    if args.replay is not None:
        return _replay(args.replay, args.json)
    spec = spec_from_args(args)

    if args.sweep:
        t_min = args.tmin if args.tmin is not None else default_t_min(spec, settings.vanish.t_min_margin)
        try:
            results = sweep_range(spec, t_min, settings.vanish, progress=settings.progress)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        status = summarize_sweep(results)
        if args.json:
            failures = [query.to_dict() for query, outcome in results if not outcome.certified]
            print(
                dump_json(
                    {
                        "spec": spec.to_dict(),
                        "t_min": t_min,
                        "total": status.total,
                        "certified": status.certified,
                        "status": status.describe(),
                        "failures": failures,
                    }
                )
            )
        elif status.all_certified:
            print(f"all {status.total} claims certified")
        else:
            print(f"{status.certified} of {status.total} claims certified; {status.describe()}")
        return EXIT_OK if status.all_certified else EXIT_NEGATIVE

    if args.p is None or args.q is None or args.t is None:
        raise UsageError("vanish needs -p, -q and -t unless --sweep or --replay is given.")
    try:
        claim = VanishingClaim.top(spec, args.p, args.q, args.t)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    outcome = verify_vanishing(claim)
    if args.json:
        print(dump_json(outcome.to_dict()))
    elif outcome.certified:
        cert = outcome.certificate
        print(f"certified (size {certificate_size(cert)}, depth {certificate_depth(cert)})")
    else:
        reason = outcome.reason.value.replace("-", " ")
        print(f"not certified: {reason}" + (f" ({outcome.detail})" if outcome.detail else ""))
    return EXIT_OK if outcome.certified else EXIT_NEGATIVE


def cmd_stability(args: argparse.Namespace, settings: AppSettings) -> int:
    report = slope_report(spec_from_args(args))
    if args.json:
        print(dump_json(report.to_dict(include_certificates=args.certificates)))
    elif report.verdict is StabilityVerdict.STABLE:
        print(
            f"stable; mu(Omega_X) = {report.mu_omega}, "
            f"subsheaf slope bound {report.subsheaf_slope_bound}"
        )
    elif report.verdict is StabilityVerdict.EXCLUDED_EXCEPTIONAL:
        print(f"excluded: {report.exceptional.value}")
    else:
        print(f"not-applicable: {report.reason}")
    withheld = report.verdict is StabilityVerdict.NOT_APPLICABLE and report.reason == "vanishing not certified"
    return EXIT_NEGATIVE if withheld else EXIT_OK


def cmd_splitting(args: argparse.Namespace, settings: AppSettings) -> int:
    try:
        text = sys.stdin.read() if str(args.file) == "-" else args.file.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"Cannot read {args.file}: {exc}") from exc
    try:
        data = parse_input(text, settings.default_characteristic)
    except CurveInputError as exc:
        raise UsageError(str(exc)) from exc
    if not data.curves:
        raise UsageError("Input has no 'phi:' lines.")

    analyses: List[CurveAnalysis] = []
    for index, curve in enumerate(data.curves):
        try:
            splitting = splitting_of_pullback_tangent(data.hypersurface, curve, settings.splitting)
        except DegenerateGradientError as exc:
            logger.debug("{}", exc)
            print(f"cicert splitting: degenerate gradient along curve #{index}", file=sys.stderr)
            return EXIT_NEGATIVE
        except CurveInputError as exc:
            raise UsageError(str(exc)) from exc
        except SplittingWindowError as exc:
            logger.error("{}", exc)
            return EXIT_NEGATIVE
        analyses.append(CurveAnalysis(index, curve, splitting))

    bound = positive_rank_lower_bound(data.hypersurface, data.curves, analyses=analyses)
    evidence = uniruledness_evidence(data.hypersurface, data.curves, analyses=analyses)
    if args.json:
        print(
            dump_json(
                {
                    "hypersurface": str(data.hypersurface),
                    "curves": [a.to_dict() for a in analyses],
                    "positive_rank": bound.to_dict(),
                    "evidence": evidence.to_dict(),
                }
            )
        )
        return EXIT_OK

    for analysis in analyses:
        splitting = analysis.splitting
        line = str(splitting)
        if splitting.free:
            line += "; free; very free" if splitting.very_free else "; free"
            line += f"; positive rank ≥ {splitting.positive_count}"
        else:
            line += "; not free"
        prefix = f"[{analysis.index}] " if len(analyses) > 1 else ""
        print(prefix + line)
    if len(analyses) > 1:
        print(f"positive rank ≥ {bound.bound}; separably uniruled: {evidence.separably_uniruled.value}")
    return EXIT_OK


def cmd_survey(args: argparse.Namespace, settings: AppSettings) -> int:
    update: Dict[str, Any] = {}
    for name in ("nmax", "dmax", "cmax"):
        if getattr(args, name) is not None:
            update[name] = getattr(args, name)
    if args.tmin is not None:
        update["t_min"] = args.tmin
    try:
        survey_settings = SurveySettings.model_validate({**settings.survey.model_dump(), **update})
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    pipeline = SurveyPipeline(
        settings=survey_settings,
        vanish_settings=settings.vanish,
        separably_uniruled=Tri(args.separably_uniruled),
        n1_generated_by_free=Tri(args.n1_free),
        progress=settings.progress,
    )
    rows = pipeline.run()
    if args.json:
        print(dump_json([row.to_dict() for row in rows]))
    else:
        for row in rows:
            print(row.describe())
    return EXIT_OK if all(row.sweep.all_certified for row in rows) else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cicert", description="Certified cohomology and stability computations for complete intersections")
    parser.add_argument("--char", type=int, default=None, help="Base field characteristic for curve input (0 or a prime)")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug diagnostics to stderr")
    parser.add_argument("--progress", action="store_true", help="Show progress bars on stderr")
    parser.add_argument("--workers", type=int, default=None, help="Threads for vanishing sweeps")
    sub = parser.add_subparsers(dest="command", required=True)

    bott = sub.add_parser("bott", help="dim H^p(P^n, Omega^q(t)) by the Bott formula")
    bott.add_argument("-n", type=int, required=True)
    bott.add_argument("-p", type=int, default=0)
    bott.add_argument("-q", type=int, required=True)
    bott.add_argument("-t", type=int, required=True)
    bott.add_argument("--chi", action="store_true", help="Print the Euler characteristic instead")
    bott.set_defaults(handler=cmd_bott)

    def add_spec(command: argparse.ArgumentParser) -> None:
        command.add_argument("-n", type=int, help="Ambient dimension")
        command.add_argument("-d", "--degrees", default="", help="Multidegree, e.g. 2,3 (empty for P^n)")

    vanish = sub.add_parser("vanish", help="Certify H^p(X, Omega^q(t)) = 0")
    add_spec(vanish)
    vanish.add_argument("-p", type=int)
    vanish.add_argument("-q", type=int)
    vanish.add_argument("-t", type=int)
    vanish.add_argument("--sweep", action="store_true", help="Certify the whole range down to --tmin")
    vanish.add_argument("--tmin", type=int, default=None)
    vanish.add_argument("--replay", type=Path, default=None, help="Re-check a certificate JSON file")
    vanish.add_argument("--json", action="store_true")
    vanish.set_defaults(handler=cmd_vanish)

    stability = sub.add_parser("stability", help="Slope report and stability verdict for Omega_X")
    add_spec(stability)
    stability.add_argument("--json", action="store_true")
    stability.add_argument("--certificates", action="store_true", help="Embed the vanishing certificates in JSON")
    stability.set_defaults(handler=cmd_stability)

    splitting = sub.add_parser("splitting", help="Splitting type of phi^*T_X for curves on a hypersurface")
    splitting.add_argument("file", type=Path, help="Input file with 'F:' and 'phi:' lines ('-' for stdin)")
    splitting.add_argument("--json", action="store_true")
    splitting.set_defaults(handler=cmd_splitting)

    survey = sub.add_parser("survey", help="Survey all Fano multidegrees in a box")
    survey.add_argument("--nmax", type=int, default=None)
    survey.add_argument("--dmax", type=int, default=None)
    survey.add_argument("--cmax", type=int, default=None)
    survey.add_argument("--tmin", type=int, default=None)
    survey.add_argument("--json", action="store_true")
    survey.add_argument("--separably-uniruled", choices=[t.value for t in Tri], default=Tri.UNKNOWN.value)
    survey.add_argument("--n1-free", choices=[t.value for t in Tri], default=Tri.UNKNOWN.value)
    survey.set_defaults(handler=cmd_survey)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run one subcommand and return its exit code."""

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    try:
        settings = AppSettings.from_env()
        merged = settings.model_dump()
        if args.progress:
            merged["progress"] = True
        if args.char is not None:
            merged["default_characteristic"] = args.char
        if args.workers is not None:
            merged["vanish"]["workers"] = args.workers
        settings = AppSettings.model_validate(merged)
    except ValueError as exc:
        print(f"cicert: {exc}", file=sys.stderr)
        return EXIT_USAGE
    configure_logging(settings, args.verbose)

    try:
        return args.handler(args, settings)
    except UsageError as exc:
        print(f"cicert {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
