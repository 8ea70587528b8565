"""Command-line front end: every operation with JSON input and output.

All rationals cross the pipe as strings ("p/q" or "p") so downstream
consumers never see floats.  Identical invocations produce byte-identical
output.  Exit codes: 0 success, 2 malformed input, 3 internal invariant
violation (a diagnostic dump goes to stderr).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import t244
from .apolarity import binary_rank
from .binary import BinaryForm
from .errors import InternalInvariantError
from .forms import (
    MultiForm,
    essential_variables,
    generic_waring_rank,
    max_rank_bounds,
    reznick_quartic_identity,
    reznick_sextic_identity,
    verify_identity,
)
from .orbits import form_stabilizer, pencil_stabilizer
from .pencils import Pencil, pencil_rank
from .rationals import rat_str


def _json_arg(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON for {what}: {exc}") from exc


def _fixture_version_light() -> str:
    return json.loads(t244._fixture_text())["fixture_version"]


# -- subcommand handlers: each returns (input_echo, result, seed) -------------


def _cmd_binary_rank(args):
    form = BinaryForm.from_json(_json_arg(args.form, "--form"))
    report = binary_rank(form)
    return {"form": form.to_json()}, report.to_json(), None


def _cmd_pencil_rank(args):
    pen = Pencil.from_json(_json_arg(args.m1, "--m1"), _json_arg(args.m2, "--m2"))
    report = pencil_rank(pen)
    return {"pencil": pen.to_json()}, report.to_json(), None


def _cmd_waring(args):
    g, hypersurface = generic_waring_rank(args.n, args.d)
    bounds = max_rank_bounds(args.n, args.d)
    result = {
        "n": args.n,
        "d": args.d,
        "generic_rank": g,
        "last_secant_is_hypersurface": hypersurface,
        "max_rank_bounds": bounds.to_json(),
    }
    return {"n": args.n, "d": args.d}, result, None


def _cmd_concise(args):
    form = MultiForm.from_json(_json_arg(args.form, "--form"))
    report = essential_variables(form)
    return {"form": form.to_json()}, report.to_json(), None


def _cmd_verify_identity(args):
    builder = {"reznick4": reznick_quartic_identity, "reznick6": reznick_sextic_identity}[args.id]
    expr, target, bound = builder(args.n)
    ok = verify_identity(expr, target)
    result = {
        "identity": args.id,
        "n": args.n,
        "verified": ok,
        "rank_bound": bound,
        "terms_used": expr.term_count,
        "target_degree": target.degree,
    }
    return {"id": args.id, "n": args.n}, result, None


def _cmd_orbit_dim(args):
    if (args.pencil is None) == (args.form is None):
        raise ValueError("orbit-dim needs exactly one of --pencil or --form")
    if args.pencil is not None:
        obj = _json_arg(args.pencil, "--pencil")
        if not isinstance(obj, dict) or "m1" not in obj or "m2" not in obj:
            raise ValueError('--pencil expects {"m1": [...], "m2": [...]}')
        pen = Pencil.from_json(obj["m1"], obj["m2"])
        report = pencil_stabilizer(pen)
        return {"pencil": pen.to_json()}, report.to_json(), None
    form = MultiForm.from_json(_json_arg(args.form, "--form"))
    report = form_stabilizer(form)
    return {"form": form.to_json()}, report.to_json(), None


def _parse_tensor(args):
    if args.tensor is not None:
        arr = _json_arg(args.tensor, "--tensor")
        if not (isinstance(arr, list) and len(arr) == 2):
            raise ValueError("--tensor expects a 2 x 4 x 4 nested array")
        return Pencil.from_json(arr[0], arr[1])
    if args.m1 is None or args.m2 is None:
        raise ValueError("t244 classify needs --tensor or both --m1 and --m2")
    return Pencil.from_json(_json_arg(args.m1, "--m1"), _json_arg(args.m2, "--m2"))


def _cmd_t244_classify(args):
    pen = _parse_tensor(args)
    report = t244.classify_t244(pen)
    return {"pencil": pen.to_json()}, report.to_json(), None


def _cmd_t244_nesting(args):
    summary = t244.nesting_experiment(seed=args.seed, trials=args.trials)
    return {"seed": args.seed, "trials": args.trials}, summary, args.seed


def _cmd_reproduce_table1(args):
    registry = t244.load_registry()
    rows = []
    all_match = True
    for entry in registry.entries:
        rank_report = pencil_rank(entry.pencil)
        orbit = pencil_stabilizer(entry.pencil)
        match = rank_report.rank == entry.rank and orbit.projective_orbit_dim == entry.dim
        all_match = all_match and match
        rows.append(
            {
                "orbit_id": entry.orbit_id,
                "pencil": entry.pencil.to_json(),
                "computed_rank": rank_report.rank,
                "computed_dim": orbit.projective_orbit_dim,
                "fixture_rank": entry.rank,
                "fixture_dim": entry.dim,
                "match": match,
            }
        )
    return {}, {"rows": rows, "all_match": all_match}, None


def _cmd_reproduce_wm_dims(args):
    ns = [args.n] if args.n is not None else [2, 3, 4]
    rows = []
    all_match = True
    for n in ns:
        report = pencil_stabilizer(t244.max_rank_tensor(n))
        match = (
            report.stabilizer_dim == 2 * n * n + 3
            and report.projective_orbit_dim == 6 * n * n
        )
        all_match = all_match and match
        rows.append(
            {
                "n": n,
                "stabilizer_dim": report.stabilizer_dim,
                "expected_stabilizer_dim": 2 * n * n + 3,
                "projective_orbit_dim": report.projective_orbit_dim,
                "expected_orbit_dim": 6 * n * n,
                "match": match,
            }
        )
    return {"n": args.n}, {"rows": rows, "all_match": all_match}, None


# -- table rendering -----------------------------------------------------------


def _render_table(command, result):
    lines = []
    if command == "reproduce table1":
        lines.append(f"{'orbit':<12}{'rank':>6}{'dim':>6}  match")
        for row in result["rows"]:
            lines.append(
                f"{row['orbit_id']:<12}{row['computed_rank']:>6}{row['computed_dim']:>6}  "
                f"{'ok' if row['match'] else 'MISMATCH'}"
            )
        lines.append(f"all_match: {result['all_match']}")
    elif command == "reproduce wm-dims":
        lines.append(f"{'n':>3}{'stab':>8}{'orbit':>8}  match")
        for row in result["rows"]:
            lines.append(
                f"{row['n']:>3}{row['stabilizer_dim']:>8}{row['projective_orbit_dim']:>8}  "
                f"{'ok' if row['match'] else 'MISMATCH'}"
            )
    elif command == "waring":
        lines.append(f"generic rank g = {result['generic_rank']}")
        lines.append(f"last secant hypersurface: {result['last_secant_is_hypersurface']}")
        for k, v in result["max_rank_bounds"].items():
            lines.append(f"{k}: {v}")
    else:
        return None
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "table"), default=argparse.SUPPRESS,
                        help="table rendering exists for tabular commands; json otherwise")
    parser = argparse.ArgumentParser(
        prog="rankloci",
        description="Exact ranks and rank-locus classification: binary forms, "
        "matrix pencils, and 2x4x4 tensors.",
        parents=[common],
    )
    parser.set_defaults(output="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("binary-rank", parents=[common], help="Waring rank and stratum of a binary form")
    p.add_argument("--form", required=True, help='{"degree": d, "coeffs": ["1", "0/1", ...]}')
    p.set_defaults(handler=_cmd_binary_rank)

    p = sub.add_parser("pencil-rank", parents=[common], help="Kronecker invariants and tensor rank of a pencil")
    p.add_argument("--m1", required=True, help="row-major matrix of rational strings")
    p.add_argument("--m2", required=True, help="row-major matrix of rational strings")
    p.set_defaults(handler=_cmd_pencil_rank)

    p = sub.add_parser("waring", parents=[common], help="generic rank and maximal-rank bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(handler=_cmd_waring)

    p = sub.add_parser("concise", parents=[common], help="essential variables of a multivariate form")
    p.add_argument("--form", required=True, help='{"n":.., "d":.., "terms": {"[2,1,0]": "1"}}')
    p.set_defaults(handler=_cmd_concise)

    p = sub.add_parser("verify-identity", parents=[common], help="exact power-sum identities for quadric powers")
    p.add_argument("--id", choices=("reznick4", "reznick6"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_verify_identity)

    p = sub.add_parser("orbit-dim", parents=[common], help="Lie-algebra stabilizer and orbit dimensions")
    p.add_argument("--pencil", help='{"m1": [...], "m2": [...]}')
    p.add_argument("--form", help="multivariate form JSON")
    p.set_defaults(handler=_cmd_orbit_dim)

    p244 = sub.add_parser("t244", help="2x4x4 tensor classification and experiments")
    sub244 = p244.add_subparsers(dest="subcommand", required=True)
    p = sub244.add_parser("classify", parents=[common], help="classify one 2x4x4 tensor")
    p.add_argument("--tensor", help="2x4x4 nested array of rational strings")
    p.add_argument("--m1", help="4x4 matrix (alternative to --tensor)")
    p.add_argument("--m2", help="4x4 matrix (alternative to --tensor)")
    p.set_defaults(handler=_cmd_t244_classify, command_name="t244 classify")
    p = sub244.add_parser("nesting", parents=[common], help="rank-one join experiments onto T6 and T5")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(handler=_cmd_t244_nesting, command_name="t244 nesting")

    prep = sub.add_parser("reproduce", help="reproduce the classification tables")
    subrep = prep.add_subparsers(dest="subcommand", required=True)
    p = subrep.add_parser("table1", parents=[common], help="all fourteen low-dimensional concise orbits")
    p.set_defaults(handler=_cmd_reproduce_table1, command_name="reproduce table1")
    p = subrep.add_parser("wm-dims", parents=[common], help="maximal-rank locus dimensions 6n^2")
    p.add_argument("--n", type=int, default=None, help="single n (default: 2, 3, 4)")
    p.set_defaults(handler=_cmd_reproduce_wm_dims, command_name="reproduce wm-dims")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = getattr(args, "command_name", args.command)
    try:
        input_echo, result, seed = args.handler(args)
        envelope = {
            "command": command,
            "input_echo": input_echo,
            "result": result,
            "fixture_version": _fixture_version_light(),
        }
        if seed is not None:
            envelope["seed"] = seed
    except InternalInvariantError as exc:
        dump = {"error": str(exc), "details": exc.details}
        sys.stderr.write(json.dumps(dump, sort_keys=True, indent=2, default=str) + "\n")
        return 3
    except (ValueError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    if args.output == "table":
        rendered = _render_table(command, result)
        if rendered is not None:
            sys.stdout.write(rendered)
            return 0
    sys.stdout.write(json.dumps(envelope, sort_keys=True, indent=2) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
