"""Command-line interface: ``hwav {av,diagram,census,verify,hasse}``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .avcore import ConsistencyError, associated_variety
from .census import (
    InfeasibleCensusError,
    antichain_checks,
    oracle_sweep,
    verify_bijection_classical,
    verify_springer_identities,
    width_census,
)
from .diagram import (
    CoordKind,
    DominanceError,
    WeightInput,
    WeightMode,
    check_k_dominant,
    compute_diagram,
    resolve_weight,
)
from .poset import build_poset, emit_hasse_dot, root_label, width
from .rational import RationalParseError, format_vector, parse_vector
from .root_data import Family, HermitianType, ParameterError, build_root_data
from .rs_oracle import k_prime

EXIT_OK, EXIT_PARSE, EXIT_DOMINANCE, EXIT_VERIFY, EXIT_INFEASIBLE = 0, 2, 3, 4, 5

_WEIGHT_FLAGS = ("--rho-shifted", "--highest-weight", "--coroot-labels")

# ranks at which `verify` also runs the oracle sweep
_SWEEP_LIMITS = {
    Family.SU: 3,
    Family.SP: 4,
    Family.SOSTAR: 5,
    Family.SO_ODD: 4,
    Family.SO_EVEN: 4,
}


class UsageError(ValueError):
    pass


def _glue_weight_values(argv: Sequence[str]) -> list[str]:
    # weights such as "-3/2,1/2" would otherwise be mistaken for options
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _WEIGHT_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def _add_type_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", required=True, choices=[f.value for f in Family])
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)


def _add_weight_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--rho-shifted", metavar="V", help="λ+ρ in epsilon coordinates")
    g.add_argument("--highest-weight", metavar="V", help="λ in epsilon coordinates (ρ is added)")
    g.add_argument("--coroot-labels", metavar="V", help="<λ+ρ, α_i^∨> for the simple roots")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hwav", description="Associated varieties of highest weight modules")
    sub = parser.add_subparsers(dest="command", required=True)

    av = sub.add_parser("av", help="orbit index, orbit data and GK dimension")
    _add_type_args(av)
    _add_weight_args(av)
    av.add_argument("--verify", action="store_true", help="also run the RS oracle")

    dg = sub.add_parser("diagram", help="list the diagram and a maximum antichain")
    _add_type_args(dg)
    _add_weight_args(dg)

    cs = sub.add_parser("census", help="count downsets by width")
    _add_type_args(cs)

    vf = sub.add_parser("verify", help="run the built-in consistency checks")
    _add_type_args(vf)

    hs = sub.add_parser("hasse", help="Hasse diagram in DOT format")
    _add_type_args(hs)
    return parser


def parse_type(args: argparse.Namespace) -> HermitianType:
    fam = Family(args.type)
    given = {k for k in ("p", "q", "n") if getattr(args, k) is not None}
    if fam is Family.SU:
        if given != {"p", "q"}:
            raise UsageError("--type su needs --p and --q (and no --n)")
        return HermitianType.su(args.p, args.q)
    if fam in (Family.E6, Family.E7):
        if given:
            raise UsageError(f"--type {fam.value} takes no rank parameters")
        return HermitianType(fam)
    if given != {"n"}:
        raise UsageError(f"--type {fam.value} needs --n (and no --p/--q)")
    return HermitianType(fam, (args.n,))


def parse_weight(args: argparse.Namespace) -> WeightInput:
    if args.coroot_labels is not None:
        return WeightInput(parse_vector(args.coroot_labels), WeightMode.RHO_SHIFTED, CoordKind.COROOT_LABELS)
    if args.highest_weight is not None:
        return WeightInput(parse_vector(args.highest_weight), WeightMode.HIGHEST_WEIGHT)
    return WeightInput(parse_vector(args.rho_shifted), WeightMode.RHO_SHIFTED)


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2)


def cmd_av(htype: HermitianType, weight: WeightInput, verify: bool) -> tuple[dict, int]:
    res = associated_variety(htype, weight)
    out = {
        "type": str(htype),
        "lambda_rho": format_vector(res.lambda_rho),
        "integrality": res.integrality.value,
        "y_size": res.y_size,
        "width": res.width_m,
        "k": res.k,
        "orbit_label": res.orbit_label,
        "orbit_dim": res.orbit_dim,
        "gk_dim": res.gk_dim,
        "delta": res.delta,
    }
    code = EXIT_OK
    if verify:
        oracle = k_prime(htype, res.lambda_rho)
        out["oracle_k"] = oracle
        out["agree"] = oracle == res.k
        if oracle != res.k:
            code = EXIT_VERIFY
    return out, code


def cmd_diagram(htype: HermitianType, weight: WeightInput) -> dict:
    rs = build_root_data(htype)
    lr = resolve_weight(weight, rs)
    check_k_dominant(lr, rs)
    diag = compute_diagram(lr, rs)
    m, witness = width(diag.poset, diag.y)
    return {
        "type": str(htype),
        "lambda_rho": format_vector(lr),
        "integrality": diag.integrality.value,
        "y": [root_label(r) for r in diag.roots],
        "width": m,
        "witness": [root_label(diag.poset.roots[i]) for i in witness],
    }


def cmd_verify(htype: HermitianType) -> dict:
    reports = []
    census = width_census(htype)
    reports.append({"check": "census", **census.to_json()})
    reports.append(verify_springer_identities(htype, census).to_json())
    if htype.family not in (Family.E6, Family.E7) and htype.rank <= 6:
        reports.append(verify_bijection_classical(htype).to_json())
    if htype.appendix_c is not None:
        reports.append(antichain_checks(htype).to_json())
    limit = _SWEEP_LIMITS.get(htype.family)
    if limit is None or max(htype.params) <= limit:
        sweep = oracle_sweep(htype)
        reports.append({"check": "oracle_sweep", **sweep.to_json()})
    return {"type": str(htype), "checks": reports, "pass": all(r["pass"] for r in reports)}


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_glue_weight_values(argv))
    try:
        htype = parse_type(args)
        if args.command == "av":
            out, code = cmd_av(htype, parse_weight(args), args.verify)
            print(_dump(out))
            return code
        if args.command == "diagram":
            print(_dump(cmd_diagram(htype, parse_weight(args))))
            return EXIT_OK
        if args.command == "census":
            report = width_census(htype)
            print(_dump(report.to_json()))
            return EXIT_OK if report.passed else EXIT_VERIFY
        if args.command == "verify":
            out = cmd_verify(htype)
            print(_dump(out))
            return EXIT_OK if out["pass"] else EXIT_VERIFY
        sys.stdout.write(emit_hasse_dot(build_poset(htype)))
        return EXIT_OK
    except (UsageError, ParameterError, RationalParseError) as exc:
        print(f"hwav: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DominanceError as exc:
        print(f"hwav: error: {exc}", file=sys.stderr)
        return EXIT_DOMINANCE
    except InfeasibleCensusError as exc:
        print(f"hwav: error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except ConsistencyError as exc:
        print(f"hwav: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ValueError as exc:
        print(f"hwav: error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
