"""Batch command-line interface.

Exit status is 0 on success, 2 for bad input (unreadable file, unknown
attribute or object, syntax error) and 1 for anything unexpected. Results go
to standard output, diagnostics to standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Sequence, TextIO

from . import __version__
from .approximations import lower_mask, upper_mask
from .descriptors import describe_set, meaning_mask
from .errors import RoughKitError
from .fca import all_concepts, context_from_binary_table, context_from_information_system, is_binary_table, to_dot
from .bits import iter_bits
from .formula import parse, parse_modal, to_text
from .information_system import InformationSystem, indiscernibility, load_table, read_rows
from .s5 import build_model, extension_mask


def _split(text: str) -> list[str]:
    return [t for t in text.split(",")] if text else []


def _braced(names: Iterable[str]) -> str:
    return "{" + ",".join(names) + "}"


class _Output:
    def __init__(self, stream: TextIO, structured: bool):
        self.stream = stream
        self.structured = structured

    def line(self, text: str) -> None:
        self.stream.write(text + "\n")

    def record(self, **fields) -> None:
        self.stream.write(json.dumps(fields, ensure_ascii=False) + "\n")


def _names(sys_: InformationSystem, mask: int) -> list[str]:
    return [sys_.objects[i] for i in iter_bits(mask)]


def _object_mask(sys_: InformationSystem, literal: str) -> int:
    return sys_.to_mask(_split(literal))


def cmd_partition(table: InformationSystem, attrs: list[str], out: _Output) -> None:
    space = indiscernibility(table, attrs)
    for block in space.block_masks:
        names = _names(table, block)
        if out.structured:
            out.record(record="elementary_set", objects=names)
        else:
            out.line(_braced(names))


def cmd_approx(table: InformationSystem, attrs: list[str], literal: str, out: _Output) -> None:
    space = indiscernibility(table, attrs)
    x = _object_mask(table, literal)
    lo, up = lower_mask(space, x), upper_mask(space, x)
    parts = {"lower": _names(table, lo), "upper": _names(table, up), "boundary": _names(table, up & ~lo)}
    exact = lo == up
    if out.structured:
        out.record(record="regions", **parts, exact=exact)
    else:
        for key, names in parts.items():
            out.line(f"{key}: {_braced(names)}")
        out.line(f"exact: {'true' if exact else 'false'}")


def cmd_describe(table: InformationSystem, attrs: list[str], literal: str, mode: str, out: _Output) -> None:
    text = to_text(describe_set(table, attrs, _split(literal), mode))
    if out.structured:
        out.record(record="description", mode=mode, formula=text)
    else:
        out.line(text)


def cmd_query(table: InformationSystem, formula: str, out: _Output) -> None:
    f = parse(formula)
    names = _names(table, meaning_mask(table, f))
    if out.structured:
        out.record(record="query", formula=to_text(f), objects=names)
    else:
        out.line(_braced(names))


def cmd_lattice(rows: list[list[str]], kind: str, max_properties: int, out: _Output) -> None:
    table = load_table(rows)
    if kind == "context" or (kind == "auto" and is_binary_table(table)):
        ctx = context_from_binary_table(table)
    else:
        ctx = context_from_information_system(table)
    lattice = all_concepts(ctx, max_properties=max_properties)
    if not out.structured:
        out.stream.write(to_dot(lattice))
        return
    for i, (a, b) in enumerate(zip(lattice.extents, lattice.intents)):
        out.record(
            record="concept",
            id=i,
            extent=[ctx.objects[k] for k in iter_bits(a)],
            intent=[ctx.properties[k] for k in iter_bits(b)],
        )
    for i, j in sorted(lattice.covers):
        out.record(record="cover", lower=i, upper=j)


def cmd_modal(table: InformationSystem, attrs: list[str], formula: str, out: _Output) -> None:
    model = build_model(table, attrs)
    f = parse_modal(formula)
    ext = extension_mask(model, f)
    names = _names(table, ext)
    if out.structured:
        out.record(record="extension", formula=to_text(f), objects=names)
    else:
        out.line(f"extension: {_braced(names)}")
    for i, w in enumerate(table.objects):
        holds = bool(ext >> i & 1)
        if out.structured:
            out.record(record="world", world=w, holds=holds)
        else:
            out.line(f"{w}: {'true' if holds else 'false'}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, metavar="PATH", help="comma-separated table, header starting with 'id'")
    common.add_argument("--format", choices=("plain", "structured"), default="plain")

    attrs = argparse.ArgumentParser(add_help=False)
    attrs.add_argument("--attrs", required=True, type=_split, metavar="A,B,...")

    objset = argparse.ArgumentParser(add_help=False)
    objset.add_argument("--set", dest="objects", default="", metavar="IDS", help="comma-separated object ids; empty for the empty set")

    formula = argparse.ArgumentParser(add_help=False)
    formula.add_argument("--formula", required=True, metavar="TEXT")

    p = argparse.ArgumentParser(prog="roughkit", description="Rough-set, concept-lattice and S5 analyses of attribute-value tables.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("partition", parents=[common, attrs], help="list elementary sets")
    sub.add_parser("approx", parents=[common, attrs, objset], help="lower/upper approximation of a set")
    d = sub.add_parser("describe", parents=[common, attrs, objset], help="formula denoting an approximation")
    d.add_argument("--mode", choices=("lower", "upper"), default="lower")
    sub.add_parser("query", parents=[common, formula], help="objects satisfying a descriptor formula")
    lat = sub.add_parser("lattice", parents=[common], help="concept lattice as Graphviz source")
    lat.add_argument("--input-kind", choices=("auto", "context", "table"), default="auto",
                     help="auto treats all-0/1 files as binary contexts")
    lat.add_argument("--max-properties", type=int, default=24)
    sub.add_parser("modal", parents=[common, attrs, formula], help="evaluate a box/dia formula")
    return p


def run(args: argparse.Namespace, stdout: TextIO) -> None:
    out = _Output(stdout, args.format == "structured")
    rows = read_rows(args.input)
    if args.command == "lattice":
        cmd_lattice(rows, args.input_kind, args.max_properties, out)
        return
    table = load_table(rows)
    if args.command == "partition":
        cmd_partition(table, args.attrs, out)
    elif args.command == "approx":
        cmd_approx(table, args.attrs, args.objects, out)
    elif args.command == "describe":
        cmd_describe(table, args.attrs, args.objects, args.mode, out)
    elif args.command == "query":
        cmd_query(table, args.formula, out)
    elif args.command == "modal":
        cmd_modal(table, args.attrs, args.formula, out)


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        run(args, stdout)
    except (RoughKitError, OSError, UnicodeDecodeError) as e:
        print(f"roughkit: error: {e}", file=stderr)
        return 2
    except Exception as e:  # noqa: BLE001
        print(f"roughkit: internal error: {type(e).__name__}: {e}", file=stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
