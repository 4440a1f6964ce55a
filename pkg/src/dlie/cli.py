"""Command-line front end: build forms, run verification suites, run the
non-cube oracle.

Exit codes: 0 all checks pass, 1 verification failure, 2 parse error,
3 ineligible parameters.  JSON goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .descent_engine import (
    SemilinearAction,
    action_D4,
    action_typeA_Z2,
    action_typeD_Z2,
    fixed_points,
    verify_descent,
)
from .dlie_core import LieElement
from .errors import IneligibleParameterError, MismatchError, ParseError
from .explicit_forms import basis_D4_form, basis_typeA_form, basis_typeD_form, subspace_equal
from .field_tower.noncube import check_s3_extension, noncube_certify
from .field_tower.parse import parse_element
from .field_tower.tower import TowerSpec
from .report import VerificationReport, timed_report

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_INELIGIBLE = 3

STANDARD_CONFIGS = (
    {"type": "A", "n": 3, "alpha": "t"},
    {"type": "D", "m": 8, "alpha": "t"},
    {"type": "D4", "group": "Z3", "beta": "t"},
    {"type": "D4", "group": "S3", "alpha": "1 - t^3", "beta": "1 + r2", "gamma": "t"},
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dlie",
        description="Twisted forms of differential Lie algebras over Q(w)(t): "
        "explicit bases, exact fixed-point verification, non-cube oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(p, with_suite=False):
        p.add_argument("--type", choices=("A", "D", "D4"), required=False)
        p.add_argument("--n", type=int, help="size for type A (default 3)")
        p.add_argument("--m", type=int, help="size for type D (default 8)")
        p.add_argument("--group", choices=("Z2", "Z3", "S3"),
                       help="group for type D4 (default S3)")
        p.add_argument("--alpha", help="quadratic radicand, e.g. 't' or '1 - t^3'")
        p.add_argument("--beta", help="cubic radicand over K or K(r2), e.g. '1 + r2'")
        p.add_argument("--gamma", help="norm cube root for the S3 tower, e.g. 't'")
        p.add_argument("--format", choices=("json", "text"), default="json")
        if with_suite:
            p.add_argument("--suite", choices=("full", "fast"), default="full",
                           help="'fast' skips the kernel elimination")
            p.add_argument("--all", action="store_true",
                           help="run the four standard configurations")

    p_form = sub.add_parser("form", help="print an explicit form basis")
    add_params(p_form)
    p_verify = sub.add_parser("verify", help="verify explicit form == fixed points")
    add_params(p_verify, with_suite=True)

    p_oracle = sub.add_parser("oracle", help="non-cube / S3-extension oracles")
    osub = p_oracle.add_subparsers(dest="oracle_command", required=True)
    p_nc = osub.add_parser("noncube", help="certify beta not a cube in K(r2)")
    p_nc.add_argument("--alpha", required=True)
    p_nc.add_argument("--beta", required=True)
    p_nc.add_argument("--limit", type=int, help="specialization points to try")
    p_nc.add_argument("--format", choices=("json", "text"), default="json")
    p_s3 = osub.add_parser("s3check", help="check the S3-tower conditions (a)(b)(c)")
    p_s3.add_argument("--alpha", required=True)
    p_s3.add_argument("--beta", required=True)
    p_s3.add_argument("--gamma", required=True)
    p_s3.add_argument("--limit", type=int)
    p_s3.add_argument("--format", choices=("json", "text"), default="json")
    return parser


def _resolve_config(args) -> dict:
    cfg = {"type": args.type or "A"}
    if cfg["type"] == "A":
        cfg["n"] = args.n or 3
        cfg["alpha"] = args.alpha or "t"
    elif cfg["type"] == "D":
        cfg["m"] = args.m or 8
        cfg["alpha"] = args.alpha or "t"
    else:
        cfg["group"] = args.group or "S3"
        if cfg["group"] == "Z2":
            cfg["alpha"] = args.alpha or "t"
        elif cfg["group"] == "Z3":
            cfg["beta"] = args.beta or "t"
            if args.alpha:
                cfg["alpha"] = args.alpha
        else:
            cfg["alpha"] = args.alpha or "1 - t^3"
            cfg["beta"] = args.beta or "1 + r2"
            cfg["gamma"] = args.gamma or "t"
    return cfg


def _build_instance(cfg: dict):
    """(tower, action, explicit form, expected dim, extra checks) for a config."""
    extra = []
    if cfg["type"] == "A":
        tower = TowerSpec(alpha=cfg["alpha"])
        action = action_typeA_Z2(cfg["n"], tower)
        form = basis_typeA_form(cfg["n"], tower)
        expected = cfg["n"] ** 2 - 1
    elif cfg["type"] == "D":
        tower = TowerSpec(alpha=cfg["alpha"])
        action = action_typeD_Z2(cfg["m"], tower)
        form = basis_typeD_form(cfg["m"], tower)
        expected = cfg["m"] * (cfg["m"] - 1) // 2
    elif cfg["group"] == "Z2":
        tower = TowerSpec(alpha=cfg["alpha"])
        action = action_typeD_Z2(8, tower)
        form = basis_typeD_form(8, tower)
        expected = 28
    elif cfg["group"] == "Z3":
        tower = TowerSpec(alpha=cfg.get("alpha"), beta=cfg["beta"])
        action = action_D4(["sigma"], tower)
        form = basis_D4_form("Z3", tower)
        expected = 28
    else:
        s3 = check_s3_extension(cfg["alpha"], cfg["beta"], cfg["gamma"])
        extra.append(("s3_alpha_nonsquare", s3.alpha_nonsquare, None))
        extra.append(("s3_beta_noncube", s3.beta_noncube.certified,
                      s3.beta_noncube.to_dict()))
        extra.append(("s3_gamma_identity", bool(s3.gamma_identity), None))
        if s3.beta_noncube.status == "cube":
            raise IneligibleParameterError(
                f"beta is a cube (root {s3.beta_noncube.cube_root})")
        if not s3.alpha_nonsquare:
            raise IneligibleParameterError("alpha is a square")
        if not s3.gamma_identity:
            raise IneligibleParameterError("gamma^3 != beta * conj(beta)")
        tower = TowerSpec(alpha=cfg["alpha"], beta=cfg["beta"], gamma=cfg["gamma"],
                          beta_certified=s3.beta_noncube.certified)
        action = action_D4(["sigma", "tau"], tower)
        form = basis_D4_form("S3", tower)
        expected = 28
    return tower, action, form, expected, extra


def _sample_elements(action: SemilinearAction, count: int = 5) -> list:
    algebra, spec = action.algebra, action.spec
    out = []
    for k in range(count):
        x = LieElement.basis(algebra, (7 * k + 3) % algebra.dim, spec)
        x = x.scaled(spec.t()) + LieElement.basis(algebra, (3 * k + 1) % algebra.dim, spec)
        if spec.has_quadratic:
            x = x + LieElement.basis(algebra, k % algebra.dim, spec).scaled(spec.r2())
        if spec.has_cubic:
            x = x + LieElement.basis(algebra, (k + 5) % algebra.dim, spec).scaled(spec.r3())
        out.append(x)
    return out


def run_verify(cfg: dict, suite: str = "full") -> VerificationReport:
    report = VerificationReport(configuration=dict(cfg, suite=suite))
    with timed_report(report):
        tower, action, form, expected, extra = _build_instance(cfg)
        for name, ok, details in extra:
            report.add(name, ok, details)
        report.add("expected_dimension", form.dim == expected,
                   {"expected": expected, "found": form.dim})
        report.add("group_relations", action.relations_hold_on(_sample_elements(action)))
        report.add("explicit_basis_fixed_by_action", action.fixes_all(form.basis))
        descent_report = verify_descent(form)
        for c in descent_report.checks:
            report.add(f"explicit_{c.name}", c.passed, c.details)
        if suite == "full":
            computed = fixed_points(action)
            report.add("fixed_points_dimension", computed.dim == expected,
                       {"expected": expected, "found": computed.dim})
            report.add("explicit_equals_fixed_points", subspace_equal(form, computed))
            computed_report = verify_descent(computed)
            report.add("computed_verify_descent", computed_report.overall)
    return report


def cmd_form(args) -> int:
    cfg = _resolve_config(args)
    _, _, form, _, _ = _build_instance(cfg)
    doc = form.to_dict()
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(f"{doc['algebra']} form over {doc['tower']}")
        for vec in doc["basis"]:
            print("  " + "; ".join(f"{k}: {v}" for k, v in vec.items()))
    return EXIT_OK


def cmd_verify(args) -> int:
    configs = [dict(c) for c in STANDARD_CONFIGS] if args.all else [_resolve_config(args)]
    reports = [run_verify(cfg, suite=args.suite) for cfg in configs]
    if args.format == "json":
        if len(reports) == 1:
            print(reports[0].to_json())
        else:
            print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.to_text())
    return EXIT_OK if all(r.overall for r in reports) else EXIT_VERIFY_FAILED


def cmd_oracle(args) -> int:
    if args.oracle_command == "noncube":
        quad = TowerSpec(alpha=args.alpha)
        beta = parse_element(args.beta, quad)
        result = noncube_certify(beta, limit=args.limit)
        if args.format == "json":
            print(json.dumps(result.to_dict(), indent=2))
        elif result.status == "certified":
            print(f"certified non-cube: {result.certificate}")
        elif result.status == "cube":
            print(f"cube: root {result.cube_root}")
        else:
            print("unknown")
        return EXIT_OK
    report = check_s3_extension(args.alpha, args.beta, args.gamma, limit=args.limit)
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        d = report.to_dict()
        print(f"(a) alpha non-square: {d['alpha_nonsquare']}")
        print(f"(b) beta non-cube:    {d['beta_noncube']['status']}")
        print(f"(c) gamma identity:   {d['gamma_identity']}")
        print(f"overall: {'PASS' if d['overall'] else 'FAIL'}")
    return EXIT_OK if report.overall else EXIT_VERIFY_FAILED


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "form":
            return cmd_form(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_oracle(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except ZeroDivisionError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except IneligibleParameterError as exc:
        print(f"ineligible parameters: {exc}", file=sys.stderr)
        return EXIT_INELIGIBLE
    except MismatchError as exc:
        print(f"ineligible parameters: {exc}", file=sys.stderr)
        return EXIT_INELIGIBLE


if __name__ == "__main__":
    sys.exit(main())
