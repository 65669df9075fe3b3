"""Command-line front end: invariants of WCI models, Table 1, novelty checks.

Usage:
    python src/cli.py compute "1,1,1,1,1,2/2,4" --cover
    python src/cli.py table1 --format markdown
    python src/cli.py check-novelty --db data/known_cy.tsv
    python src/cli.py cover-model X1
    python src/cli.py list
"""

import argparse
import logging
import os
import sys
import time

from dotenv import load_dotenv

# Before the local imports: known_db and usage_logger read the environment at import.
load_dotenv()

from catalog import (
    TABLE1_HEADERS, builtin_families, consistency_report, etale_cover, family,
    family_names, table1,
)
from covers import FanoInput, cover_invariants, quotient_h_cubed
from exactnum import is_integral, rational_text
from export_table import FORMATS, OutputTable
from known_db import DEFAULT_DB_PATH, load_database, novelty
from usage_logger import cleanup_old_logs, log_usage
from varieties import (
    WciModel, calabi_yau_invariants, describe, first_chern_degree,
    intrinsic_invariants,
)

logger = logging.getLogger(__name__)

TABLE1_TITLE = "Invariants of Calabi-Yau double coverings"


class ModelSpecError(ValueError):
    """A model spec could not be parsed; carries the offending token."""

    def __init__(self, token, message):
        self.token = token
        super().__init__(message)


def _parse_int_list(text, label):
    text = text.strip()
    if not text:
        return ()
    values = []
    for token in text.split(","):
        token = token.strip()
        if not (token.isascii() and token.isdigit()) or int(token) <= 0:
            raise ModelSpecError(
                token, f"bad {label} token {token!r}: expected a positive integer"
            )
        values.append(int(token))
    return tuple(values)


def parse_model_spec(spec):
    """Parse `w0,w1,...,wn / d1,...,dc` into a WciModel; degrees may be empty."""
    if spec.count("/") != 1:
        raise ModelSpecError(
            spec, f"model spec {spec!r} must have the form 'w0,...,wn/d1,...,dc'"
        )
    weights_text, degrees_text = spec.split("/")
    weights = _parse_int_list(weights_text, "weight")
    if not weights:
        raise ModelSpecError(spec, f"model spec {spec!r} has no weights")
    return WciModel(weights, _parse_int_list(degrees_text, "degree"))


def _exact_int(value, label):
    if not is_integral(value):
        raise ValueError(
            f"{label} = {rational_text(value)} is not an integer; "
            "the model does not describe a smooth Fano threefold"
        )
    return int(value)


def _print_block(pairs):
    for key, value in pairs:
        print(f"{key}: {value}")


def _cover_lines(f):
    inv = cover_invariants(f)
    return [
        ("H_Y^3", inv.h_y_cubed),
        ("H_Y.c2", inv.h_c2),
        ("h11", inv.h11),
        ("h12", inv.h12),
        ("h2(W,Y,X)", ",".join(str(h) for h in inv.picard_sandwich)),
        ("e(Y)", inv.euler_y),
        ("l", inv.l_factor),
        ("chi(Y,H_Y)", inv.chi_h),
        ("e(W)", rational_text(inv.euler_w)),
        ("e(S)", rational_text(inv.euler_s)),
        ("e(S_X)", rational_text(inv.euler_sx)),
        ("H_W^3", rational_text(quotient_h_cubed(f))),
    ]


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_compute(args):
    m = parse_model_spec(args.spec)
    lines = [("model", describe(m)), ("dimension", m.dimension)]

    if first_chern_degree(m) == 0 and not args.cover:
        cy = calabi_yau_invariants(m)
        lines += [
            ("type", "calabi-yau"),
            ("H^3", rational_text(cy.h_cubed)),
            ("H.c2", rational_text(cy.h_c2)),
            ("e", rational_text(cy.euler)),
            ("h11", cy.h11),
            ("h12", rational_text(cy.h12)),
        ]
        _print_block(lines)
        return 0

    inv = intrinsic_invariants(m)
    lines += [
        ("type", "fano"),
        ("r", inv.index_r),
        ("(-K)^3", rational_text(inv.minus_k_cubed)),
        ("e", rational_text(inv.euler)),
        ("c2.(-K)", rational_text(inv.c2_dot_minus_k)),
        ("chi(O)", rational_text(inv.chi_structure)),
    ]
    if args.cover:
        f = FanoInput(
            euler_x=_exact_int(inv.euler, "e(X)"),
            k3=_exact_int(inv.minus_k_cubed, "(-K)^3"),
            index_r=inv.index_r,
            h2_x=1,
        )
        lines.append(("cover", "h2(X) = 1 assumed"))
        lines += _cover_lines(f)
    _print_block(lines)
    return 0


def cmd_table1(args):
    rows = [[row.name, *row.values()] for row in table1()]
    table = OutputTable(TABLE1_HEADERS, rows, args.format)
    sys.stdout.write(table.render(TABLE1_TITLE))
    return 0


def cmd_check_novelty(args):
    db_path = args.db or DEFAULT_DB_PATH
    database = load_database(db_path)
    logger.info("loaded %d known entries", len(database))
    rows = []
    for row in table1():
        status, label = novelty(database, row.values())
        rows.append([row.name, *row.values(), status, label or "-"])
    headers = TABLE1_HEADERS + ["status", "label"]
    sys.stdout.write(OutputTable(headers, rows, "tsv").render())
    return 0


def cmd_cover_model(args):
    record = family(args.name)
    cover, euler, twice_euler_y = etale_cover(record)
    cy = calabi_yau_invariants(cover)
    _print_block([
        ("family", record.name),
        ("model", describe(cover)),
        ("weights", ",".join(str(w) for w in cover.weights)),
        ("degrees", ",".join(str(d) for d in cover.degrees)),
        ("e", rational_text(euler)),
        ("2*e(Y)", twice_euler_y),
        ("match", "yes" if euler == twice_euler_y else "no"),
        ("H^3", rational_text(cy.h_cubed)),
        ("H.c2", rational_text(cy.h_c2)),
        ("h11", cy.h11),
        ("h12", rational_text(cy.h12)),
    ])
    return 0 if euler == twice_euler_y else 1


def cmd_list(args):
    rows = []
    for record in builtin_families():
        report = consistency_report(record)
        rows.append([
            record.name,
            describe(record.model),
            *(rational_text(computed) for _, computed in report.values()),
            record.description,
        ])
    headers = ["name", "model", "r", "k3", "e", "description"]
    sys.stdout.write(OutputTable(headers, rows, "tsv").render())
    return 0


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="enriques-cy",
        description="Invariants of Calabi-Yau double covers of Fano-Enriques threefolds.",
    )
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="log diagnostics at DEBUG level")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="invariants of a weighted complete intersection")
    p.add_argument("spec", help="weights/degrees, e.g. 1,1,1,1,1,2/2,4")
    p.add_argument("--cover", action="store_true",
                   help="assume h2(X) = 1 and print the Calabi-Yau cover invariants")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table1", help="print the table of cover invariants")
    p.add_argument("--format", choices=FORMATS, default="tsv")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("check-novelty", help="compare the table against a known-CY database")
    p.add_argument("--db", help=f"database TSV (default: {DEFAULT_DB_PATH})")
    p.set_defaults(func=cmd_check_novelty)

    p = sub.add_parser("cover-model", help="etale cover model of a builtin family")
    p.add_argument("name", choices=family_names())
    p.set_defaults(func=cmd_cover_model)

    p = sub.add_parser("list", help="list the builtin Fano families")
    p.set_defaults(func=cmd_list)
    return parser


def _log_level(verbose):
    if verbose:
        return logging.DEBUG
    name = os.environ.get("LOG_LEVEL", "WARNING").upper()
    levels = logging.getLevelNamesMapping() if hasattr(logging, "getLevelNamesMapping") else dict(logging._nameToLevel)
    if name not in levels:
        raise ValueError(f"LOG_LEVEL {name!r} is not one of {', '.join(sorted(levels))}")
    return levels[name]


def main(argv=None):
    args = build_parser().parse_args(argv)

    start = time.perf_counter()
    status = 1
    try:
        logging.basicConfig(
            format="%(name)s:%(levelname)s:%(message)s", level=_log_level(args.verbose)
        )
        status = args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    finally:
        log_usage(args.command, status, (time.perf_counter() - start) * 1000)
        cleanup_old_logs()
    return status


if __name__ == "__main__":
    sys.exit(main())
