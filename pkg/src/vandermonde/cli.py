"""Batch command-line front end.

Exit status: 0 success, 1 identity violated, 2 malformed input,
3 library precondition failed.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import serialize as io
from .convolution import (
    CATALOG,
    ZERO_FAMILY,
    builtin_psi,
    check_convolution,
    check_multinomial,
    check_weak_convolution,
    family_from_psi,
    recover_psi,
    to_binomial_type,
)
from .errors import VandermondeError
from .pascal import (
    check_matrix_identity,
    classify_corollary4,
    classify_nogo,
    column_interpolation_bridge,
    matrices_from_spec,
    recover_spec as recover_row_spec,
    riordan_array,
)
from .serialize import FormatError
from .sheffer import check_generalized_convolution, recover_spec as recover_sheffer_spec
from .xpoly import format_poly

EXIT_OK, EXIT_VIOLATED, EXIT_INPUT, EXIT_LIBRARY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _read_doc(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    return io.loads(text)


def _read_block(path: str):
    if path.endswith(".tsv"):
        try:
            return io.block_from_tsv(Path(path).read_text(encoding="utf-8"))
        except OSError as exc:
            raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    return io.block_from_doc(_read_doc(path))


def _read_matrices(paths: list):
    if len(paths) == 1:
        if paths[0].endswith(".tsv"):
            m = _read_block(paths[0])
            return m, m, m
        return io.matrices_from_doc(_read_doc(paths[0]))
    if len(paths) == 3:
        return tuple(_read_block(p) for p in paths)
    raise FormatError("matrix input takes one triple/block file or three block files")


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _order(args, default=None):
    value = args.order if args.order is not None else default
    if value is None:
        raise FormatError("an order is required (positional N or --order N)")
    return value


# -- subcommands -------------------------------------------------------------

def cmd_family(args) -> int:
    n_max = _order(args, args.n_max)
    if args.source in CATALOG:
        psi = builtin_psi(args.source, n_max)
    else:
        psi = io.series_from_doc(_read_doc(args.source))
    fam = family_from_psi(psi, n_max)
    if args.format == "tsv":
        _emit(args, io.table_to_tsv(fam.table(range(n_max + 1))))
    else:
        _emit(args, io.dumps(io.family_to_doc(fam)))
    return EXIT_OK


def cmd_verify(args) -> int:
    kind, inputs = args.kind, args.inputs
    if kind != "matrix" and len(inputs) != 1:
        raise FormatError(f"verify {kind} takes exactly one input file")
    if kind == "convolution":
        result = check_convolution(io.family_from_doc(_read_doc(inputs[0])))
    elif kind == "weak":
        result = check_weak_convolution(io.family_from_doc(_read_doc(inputs[0])))
    elif kind == "multinomial":
        fam = io.family_from_doc(_read_doc(inputs[0]))
        result = check_multinomial(fam, args.m, args.order)
    elif kind == "generalized":
        result = check_generalized_convolution(io.triple_from_doc(_read_doc(inputs[0])))
    else:
        result = check_matrix_identity(*_read_matrices(inputs))
    print(str(result))
    return EXIT_OK if result else EXIT_VIOLATED


def cmd_decompose(args) -> int:
    kind, inputs = args.kind, args.inputs
    if kind in ("psi", "sheffer") and len(inputs) != 1:
        raise FormatError(f"decompose {kind} takes exactly one input file")
    if kind == "psi":
        psi = recover_psi(io.family_from_doc(_read_doc(inputs[0])))
        doc = {"zero_family": True} if psi is ZERO_FAMILY else io.series_to_doc(psi)
    elif kind == "sheffer":
        doc = io.sheffer_spec_to_doc(recover_sheffer_spec(io.triple_from_doc(_read_doc(inputs[0]))))
    elif kind == "matrix":
        doc = io.row_spec_to_doc(recover_row_spec(*_read_matrices(inputs)))
    elif kind == "nogo":
        if len(inputs) != 1:
            raise FormatError("decompose nogo takes one block file")
        form = classify_nogo(_read_block(inputs[0]))
        doc = {"kappa": str(form.kappa), "lambda": str(form.lam)}
    else:
        form = classify_corollary4(*_read_matrices(inputs))
        doc = {"alpha": str(form.alpha), "beta": str(form.beta),
               "h": io.series_to_doc(form.h)}
        if form.is_scaled_pascal:
            doc["kappa"], doc["lambda"] = str(form.kappa), str(form.lam)
    _emit(args, io.dumps(doc))
    return EXIT_OK


def _need_shape(args) -> tuple:
    if args.rows is None or args.cols is None:
        raise FormatError("--rows and --cols are required")
    if args.rows < 1 or args.cols < 1:
        raise FormatError("--rows and --cols must be positive")
    return args.rows, args.cols


def cmd_matrix(args) -> int:
    rows, cols = _need_shape(args)
    blocks = matrices_from_spec(io.row_spec_from_doc(_read_doc(args.spec)), rows, cols)
    if args.format == "tsv":
        _emit(args, "\n".join(f"# {name}\n{io.block_to_tsv(m)}" for name, m in zip("ABC", blocks)))
    else:
        _emit(args, io.dumps(io.matrices_to_doc(*blocks)))
    return EXIT_OK


def cmd_riordan(args) -> int:
    rows, cols = _need_shape(args)
    doc = _read_doc(args.spec)
    if not isinstance(doc, dict) or "f" not in doc or "h" not in doc:
        raise FormatError('riordan input must be {"f": series, "h": series}')
    m = riordan_array(io.series_from_doc(doc["f"]), io.series_from_doc(doc["h"]), rows, cols)
    _emit(args, io.block_to_tsv(m) if args.format == "tsv" else io.dumps(io.block_to_doc(m)))
    return EXIT_OK


def cmd_bridge(args) -> int:
    n_max = _order(args)
    i_max = (args.rows - 1) if args.rows is not None else n_max
    if i_max < 0:
        raise FormatError("--rows must be positive")
    report = column_interpolation_bridge(io.row_spec_from_doc(_read_doc(args.spec)), n_max, i_max)
    doc = {"verified": report.certified, "psi": io.series_to_doc(report.psi),
           "f": io.family_to_doc(report.f), "g": io.family_to_doc(report.g),
           "h": io.family_to_doc(report.h)}
    _emit(args, io.dumps(doc))
    return EXIT_OK


def cmd_examples(args) -> int:
    order = args.order if args.order is not None else 4
    lines = []
    for name, (_, closed_form) in CATALOG.items():
        psi = builtin_psi(name, order)
        fam = to_binomial_type(family_from_psi(psi, order))
        lines.append(f"{name}: psi(t) = {closed_form} = {format_poly(psi.coeffs, 't')} + ...")
        for n, p in enumerate(fam):
            lines.append(f"  F_{n}(x) = {n}!·f_{n}(x) = {p}")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, help="truncation order N")
    common.add_argument("--rows", type=int, help="block rows R")
    common.add_argument("--cols", type=int, help="block columns C")
    common.add_argument("--m", type=int, default=3, help="number of variables for multinomial")
    common.add_argument("--out", help="write output to PATH instead of stdout")
    common.add_argument("--format", choices=("json", "tsv"), default="json")

    parser = _Parser(prog="vandermonde", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("family", parents=[common], help="build a convolution family from psi")
    p.add_argument("source", help=f"catalog key ({', '.join(CATALOG)}) or series JSON path")
    p.add_argument("n_max", nargs="?", type=int)
    p.set_defaults(run=cmd_family)

    p = sub.add_parser("verify", parents=[common], help="check an identity on input files")
    p.add_argument("kind", choices=("convolution", "weak", "multinomial", "generalized", "matrix"))
    p.add_argument("inputs", nargs="+")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("decompose", parents=[common], help="recover generating data")
    p.add_argument("kind", choices=("psi", "sheffer", "matrix", "nogo", "corollary4"))
    p.add_argument("inputs", nargs="+")
    p.set_defaults(run=cmd_decompose)

    p = sub.add_parser("matrix", parents=[common], help="build A, B, C blocks from a row-series spec")
    p.add_argument("spec")
    p.set_defaults(run=cmd_matrix)

    p = sub.add_parser("riordan", parents=[common], help="build a wide-sense Riordan array")
    p.add_argument("spec")
    p.set_defaults(run=cmd_riordan)

    p = sub.add_parser("bridge", parents=[common], help="interpolate matrix columns by polynomials")
    p.add_argument("spec")
    p.set_defaults(run=cmd_bridge)

    p = sub.add_parser("examples", parents=[common], help="list the built-in psi catalog")
    p.set_defaults(run=cmd_examples)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except VandermondeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_LIBRARY
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
