"""Command-line front end.

Subcommands: order, hpoly, strata, lattice, verify.  Exit codes: 0 success,
1 usage error, 2 computation error, 3 verification failure.  The environment
variable MONOID_ORDERS_ENUM_BOUND overrides every enumeration bound.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import verify as verify_mod
from .crosssection import (
    CrossSectionLattice,
    j_irreducible_lattice,
    load_lattice,
)
from .errors import (
    GroupTooLarge,
    MonoidOrdersError,
    NotJIrreducible,
    UnsupportedType,
)
from .orders import (
    OrderReport,
    gl_strata,
    h_polynomial,
    order_thm31,
    order_thm33,
    order_thm34,
    order_thm41,
    symplectic_order,
)
from .qpoly import QPolynomial, eval_big, is_palindromic
from .rootsystem import CartanType, build, parse_subset

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COMPUTE = 2
EXIT_VERIFY = 3

FORMULAS = {
    "thm31": order_thm31,
    "thm33": order_thm33,
    "thm34": order_thm34,
    "thm41": order_thm41,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="monoid-orders",
        description="Exact orders of finite reductive monoids with zero.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_lattice_source(p, with_preset=True):
        p.add_argument("--type", help="Cartan type, e.g. A3 or C4")
        if with_preset:
            p.add_argument(
                "--preset",
                choices=["last-fundamental", "first-fundamental"],
                help="weight support: last-fundamental means J0 = Delta \\ {alpha_l}",
            )
            p.add_argument("--j0", help="explicit weight-support set, e.g. 1,2")
            p.add_argument("--lattice-file", help="JSON lattice description")

    def add_q(p):
        p.add_argument(
            "--q",
            action="append",
            default=[],
            metavar="Q",
            help="prime power(s) to evaluate at; repeatable or comma list",
        )

    def add_format(p):
        p.add_argument(
            "--format", choices=["table", "csv", "json"], default="table"
        )

    p_order = sub.add_parser("order", help="per-entry terms and total order")
    add_lattice_source(p_order)
    add_q(p_order)
    p_order.add_argument(
        "--formula",
        choices=[*FORMULAS, "all"],
        default="all",
        help="which order formula to use; 'all' cross-checks every route",
    )
    add_format(p_order)

    p_hpoly = sub.add_parser("hpoly", help="H-polynomial of the order")
    add_lattice_source(p_hpoly)
    add_format(p_hpoly)

    p_strata = sub.add_parser("strata", help="rank-stratum sizes")
    add_lattice_source(p_strata, with_preset=False)
    p_strata.add_argument(
        "--preset",
        choices=["last-fundamental", "first-fundamental"],
        required=True,
    )
    add_q(p_strata)
    add_format(p_strata)

    p_lattice = sub.add_parser("lattice", help="cross-section lattice table")
    add_lattice_source(p_lattice)
    add_format(p_lattice)

    sub.add_parser("verify", help="run every oracle cross-check")
    return parser


def _parse_qs(values: list[str], parser_error) -> list[int]:
    qs: list[int] = []
    for chunk in values:
        for part in chunk.split(","):
            part = part.strip()
            if not part:
                continue
            try:
                q0 = int(part)
            except ValueError:
                parser_error(f"bad q value {part!r}")
            if q0 < 2:
                parser_error(f"q values must be >= 2, got {q0}")
            qs.append(q0)
    return qs


def _resolve_lattice(args) -> CrossSectionLattice:
    lattice_file = getattr(args, "lattice_file", None)
    if lattice_file:
        with open(lattice_file, encoding="utf-8") as fh:
            raw = json.load(fh)
        type_spec = args.type or raw.get("type")
        if not type_spec:
            raise UnsupportedType("lattice file carries no type and --type not given")
        rs = build(CartanType.parse(str(type_spec)))
        return load_lattice(rs, raw)
    if not args.type:
        raise UnsupportedType("--type is required without --lattice-file")
    ct = CartanType.parse(args.type)
    rs = build(ct)
    preset = getattr(args, "preset", None)
    j0_spec = getattr(args, "j0", None)
    if preset and j0_spec:
        raise UnsupportedType("--preset and --j0 are mutually exclusive")
    delta = frozenset(range(1, rs.rank + 1))
    if j0_spec is not None:
        j0 = parse_subset(j0_spec, rs.rank)
    elif preset == "first-fundamental":
        j0 = delta - {1}
    elif preset == "last-fundamental":
        j0 = delta - {rs.rank}
    else:
        raise UnsupportedType("give one of --preset, --j0, or --lattice-file")
    return j_irreducible_lattice(rs, j0)


def _subset_str(indices) -> str:
    return "{" + ",".join(str(i) for i in sorted(indices)) + "}"


def _print_order_table(report: OrderReport, agreed: list[str] | None) -> None:
    print(f"type {report.cartan_type}  formula {report.formula}")
    for note in report.notes:
        print(f"note: {note}")
    entries = {e.label: e for e in report.lattice.entries} if report.lattice else {}
    width = max(len(label) for label, _ in report.terms)
    for label, term in report.terms:
        entry = entries.get(label)
        if entry is not None:
            shape = (
                f"  lambda*={_subset_str(entry.lambda_star):<12}"
                f" lambda_*={_subset_str(entry.lambda_substar):<12}"
            )
        else:
            shape = ""
        print(f"  {label:<{width}}{shape}  {term}")
    print(f"total: {report.total}")
    for q0, value in report.evaluations.items():
        print(f"q={q0}: {value}")
    if agreed is not None:
        print(f"{len(agreed)} formulas agree")


def _order_csv(report: OrderReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    qs = sorted(report.evaluations)
    writer.writerow(["label", "coeffs"] + [f"q={q0}" for q0 in qs])
    for label, term in report.terms:
        writer.writerow(
            [label, " ".join(map(str, term.coeffs))]
            + [str(eval_big(term, q0)) for q0 in qs]
        )
    writer.writerow(
        ["total", " ".join(map(str, report.total.coeffs))]
        + [str(report.evaluations[q0]) for q0 in qs]
    )
    return buf.getvalue()


def _cmd_order(args, enum_bound: int | None) -> int:
    lat = _resolve_lattice(args)
    qs = _parse_qs(args.q, _usage_error)
    selected = list(FORMULAS) if args.formula == "all" else [args.formula]
    reports: dict[str, OrderReport] = {}
    skipped: list[str] = []
    for name in selected:
        fn = FORMULAS[name]
        try:
            if name in ("thm31", "thm33"):
                reports[name] = fn(lat, enum_bound=enum_bound)
            else:
                reports[name] = fn(lat)
        except (NotJIrreducible, GroupTooLarge) as exc:
            # thm34 needs neither enumeration nor the weight-support rule,
            # so 'all' can still cross-check whatever routes remain
            if args.formula == "all":
                skipped.append(f"{name} ({type(exc).__name__})")
            else:
                raise
    totals = {name: r.total for name, r in reports.items()}
    if len(set(totals.values())) > 1:
        print("formula disagreement:", file=sys.stderr)
        for name, total in totals.items():
            print(f"  {name}: {total}", file=sys.stderr)
        return EXIT_VERIFY
    primary = reports[[name for name in selected if name in reports][-1]]
    primary.evaluate(qs)
    if skipped:
        primary.notes = primary.notes + tuple(
            f"skipped {name}" for name in skipped
        )
    agreed = list(reports) if args.formula == "all" else None
    if args.format == "json":
        payload = primary.to_json()
        if agreed is not None:
            payload["agreement"] = agreed
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        print(_order_csv(primary), end="")
    else:
        _print_order_table(primary, agreed)
    return EXIT_OK


def _cmd_hpoly(args) -> int:
    lat = _resolve_lattice(args)
    report = order_thm34(lat)
    h = h_polynomial(report.total)
    palindromic = is_palindromic(h)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "type": str(report.cartan_type),
                    "h_coeffs": h.to_json(),
                    "palindromic": palindromic,
                    "notes": list(report.notes),
                },
                indent=2,
            )
        )
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["power", "coefficient"])
        for i, c in enumerate(h.coeffs):
            writer.writerow([i, c])
        print(buf.getvalue(), end="")
    else:
        print(f"type {report.cartan_type}  H-polynomial of the order")
        for note in report.notes:
            print(f"note: {note}")
        print(f"coefficients ({len(h.coeffs)}): {' '.join(map(str, h.coeffs))}")
        print(f"H(q) = {h}")
        print(f"palindromic: {'yes' if palindromic else 'no'}")
    return EXIT_OK


def _strata_rows(args) -> tuple[str, list[tuple[str, QPolynomial]]]:
    if not args.type:
        raise UnsupportedType("--type is required")
    ct = CartanType.parse(args.type)
    if args.preset == "first-fundamental" and ct.family == "A":
        n = ct.rank + 1
        return f"matrix monoid M_{n}", [
            (f"M^{r}", gl_strata(n, r)) for r in range(n + 1)
        ]
    if args.preset == "last-fundamental" and ct.family == "C":
        report = symplectic_order(ct.rank)
        return f"symplectic monoid on 2*{ct.rank} dimensions", list(report.terms)
    raise UnsupportedType(
        "strata formulas cover type A with first-fundamental and "
        "type C with last-fundamental"
    )


def _cmd_strata(args) -> int:
    title, rows = _strata_rows(args)
    qs = _parse_qs(args.q, _usage_error)
    total = QPolynomial()
    for _, term in rows:
        total = total + term
    if args.format == "json":
        print(
            json.dumps(
                {
                    "strata": [
                        {
                            "label": label,
                            "coeffs": term.to_json(),
                            "evaluations": {
                                str(q0): str(eval_big(term, q0)) for q0 in qs
                            },
                        }
                        for label, term in rows
                    ],
                    "total_coeffs": total.to_json(),
                },
                indent=2,
            )
        )
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["label", "coeffs"] + [f"q={q0}" for q0 in qs])
        for label, term in rows:
            writer.writerow(
                [label, " ".join(map(str, term.coeffs))]
                + [str(eval_big(term, q0)) for q0 in qs]
            )
        print(buf.getvalue(), end="")
    else:
        print(title)
        for label, term in rows:
            values = "".join(f"  q={q0}: {eval_big(term, q0)}" for q0 in qs)
            print(f"  {label:<8} {term}{values}")
        print(f"total: {total}")
    return EXIT_OK


def _cmd_lattice(args) -> int:
    lat = _resolve_lattice(args)
    if args.format == "json":
        print(json.dumps(lat.to_json(), indent=2))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(
            ["label", "lambda_star", "lambda_substar", "torus_index_exponent"]
        )
        for e in lat.entries:
            writer.writerow(
                [
                    e.label,
                    " ".join(map(str, sorted(e.lambda_star))),
                    " ".join(map(str, sorted(e.lambda_substar))),
                    e.torus_index_exponent,
                ]
            )
        print(buf.getvalue(), end="")
    else:
        print(
            f"type {lat.root_system.cartan_type}  "
            f"torus rank {lat.torus_rank}  ({lat.provenance})"
        )
        width = max(len(e.label) for e in lat.entries)
        for e in lat.entries:
            print(
                f"  {e.label:<{width}}  lambda*={_subset_str(e.lambda_star):<12}"
                f" lambda_*={_subset_str(e.lambda_substar):<12}"
                f" [T:T(e)]=(q-1)^{e.torus_index_exponent}"
            )
    return EXIT_OK


def _cmd_verify(enum_bound: int | None) -> int:
    results = verify_mod.run_all(enum_bound)
    failed = 0
    for res in results:
        status = "ok  " if res.ok else "FAIL"
        print(f"{status} {res.name}: {res.detail}")
        if not res.ok:
            failed += 1
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_VERIFY


class _UsageError(Exception):
    pass


def _usage_error(message: str):
    raise _UsageError(message)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    enum_bound: int | None = None
    env = os.environ.get("MONOID_ORDERS_ENUM_BOUND")
    if env:
        try:
            enum_bound = int(env)
        except ValueError:
            print(
                f"error: MONOID_ORDERS_ENUM_BOUND={env!r} is not an integer",
                file=sys.stderr,
            )
            return EXIT_USAGE

    try:
        if args.command == "order":
            return _cmd_order(args, enum_bound)
        if args.command == "hpoly":
            return _cmd_hpoly(args)
        if args.command == "strata":
            return _cmd_strata(args)
        if args.command == "lattice":
            return _cmd_lattice(args)
        return _cmd_verify(enum_bound)
    except (_UsageError, UnsupportedType) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except json.JSONDecodeError as exc:
        print(f"error: bad lattice file: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except MonoidOrdersError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


def run_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run_main()
