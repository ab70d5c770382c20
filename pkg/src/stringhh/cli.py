"""Command line interface: ``stringhh <command> ...``."""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import fixtures
from .basis import chains, max_chain_length, nonzero_paths
from .cohomology import cohomology
from .generate import CLASSES, GenerationExhausted, RandomSpec, random_presentation
from .gerstenhaber import LITERAL, VARIANTS, lie_table, ring_table
from .harness import FAIL, PROPERTIES, UnknownProperty, fuzz, verify
from .linalg import json_scalar
from .presentation import Presentation, PresentationError, classify, emit_presentation, parse_presentation

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


class InvalidInput(Exception):
    pass


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def load_presentation(arg: str) -> Presentation:
    """A file path, or the name of a bundled fixture."""
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
        name = os.path.splitext(os.path.basename(arg))[0]
    elif arg in fixtures.NAMES:
        text, name = fixtures.text(arg), arg
    else:
        raise InvalidInput(f"{arg}: no such file or bundled fixture")
    try:
        return parse_presentation(text, name=name)
    except PresentationError as exc:
        raise InvalidInput(f"{arg}: {exc}") from exc


def _field_char(token: str) -> int:
    if token == "Q":
        return 0
    if token.startswith("F") and token[1:].isdigit():
        return int(token[1:])
    raise InvalidInput(f"field must be Q or F<prime>, got {token!r}")


def _support_text(support) -> str:
    return " + ".join(f"{a}*{c_p}" for c_p, a in support) or "0"


def _cochain_terms(c) -> list:
    return [(f"({ch} | {pa})", json_scalar(a)) for ch, pa, a in c.support()]


def _write_plot(paths: list[str], out: list[str]) -> None:
    out += [f"figure: {p}" for p in paths]


# --- commands -------------------------------------------------------------


def cmd_check(args) -> int:
    p = load_presentation(args.file)
    report = classify(p)
    if args.json:
        print(_dump_json({"format": 1, "name": p.name, **report.as_dict()}))
        return EXIT_OK
    print(f"presentation: {p.name}")
    for k, v in report.as_dict()["flags"].items():
        print(f"{k}: {'yes' if v else 'no'}")
    for k, v in report.witnesses.items():
        print(f"witness-{k}: {' '.join(v)}")
    return EXIT_OK


def _basis_dump(p: Presentation) -> dict:
    top = max_chain_length(p)
    return {
        "paths": [path.label() for path in nonzero_paths(p)],
        "chains": {str(n): [c.label() for c in chains(p, n)] for n in range(top + 1)},
    }


def _complex_dump(p: Presentation, top: int) -> dict:
    cx = cohomology(p).cx
    out = {}
    for n in range(top + 1):
        out[str(n)] = {
            "basis": [b.label() for b in cx.basis(n)],
            "delta": [list(t) for t in cx.delta_matrix(n).triplets()],
        }
    return out


def cmd_hh(args) -> int:
    p = load_presentation(args.file)
    if args.field is not None:
        try:
            p = p.with_characteristic(_field_char(args.field))
        except PresentationError as exc:
            raise InvalidInput(str(exc)) from exc
    H = cohomology(p)
    top = H.top_degree if args.max_degree is None else args.max_degree
    if top < 0:
        raise InvalidInput("--max-degree must be >= 0")
    summary = H.summary(top)
    data = summary.as_dict()
    if args.dump_basis:
        data["basis"] = _basis_dump(p)
    if args.dump_complex:
        data["complex"] = _complex_dump(p, top)
    lines = []
    if args.plot_dir:
        from .plotting import plot_dims

        _write_plot([plot_dims(summary.dims, [H.cx.dim(n) for n in range(top + 1)], args.plot_dir, p.name or "")], lines)
    if args.json:
        data["field"] = p.field_name
        print(_dump_json(data))
        for line in lines:
            print(line, file=sys.stderr)
        return EXIT_OK
    out = [f"presentation: {p.name}", f"field: {p.field_name}", "dims: " + " ".join(map(str, summary.dims)), f"euler: {summary.euler}"]
    for g in data["generators"]:
        out.append(f"HH^{g['degree']}: " + _support_text([(f"({c} | {q})", a) for c, q, a in g["support"]]))
    if args.dump_basis:
        out.append("paths: " + ", ".join(data["basis"]["paths"]))
        for n, cs in data["basis"]["chains"].items():
            out.append(f"Gamma_{n}: " + ", ".join(cs))
    if args.dump_complex:
        for n, d in data["complex"].items():
            out.append(f"B^{n}: " + ", ".join(d["basis"]))
            out.append(f"delta^{n}: " + " ".join(f"({i},{j},{v})" for i, j, v in d["delta"]))
    print("\n".join(out + lines))
    return EXIT_OK


def _table_lines(table) -> list[str]:
    names = [f"{n}.{j}" for n, j in table.labels]
    out = ["\t".join(["", *names])]
    for a in table.labels:
        row = [f"{a[0]}.{a[1]}"]
        for b in table.labels:
            cls = table.entries[(a, b)]
            row.append("0" if cls.is_zero else "[" + ",".join(str(json_scalar(x)) for x in cls.coordinates) + "]")
        out.append("\t".join(row))
    return out


def cmd_products(args) -> int:
    p = load_presentation(args.file)
    H = cohomology(p)
    cup = ring_table(H)
    lie = lie_table(H, args.circ_variant)
    gens = {f"{c.degree}.{j}": _cochain_terms(c.representative) for n in range(1, H.top_degree + 1) for j, c in enumerate(H.basis(n))}
    figures = []
    if args.plot_dir:
        from .plotting import plot_table

        figures = [plot_table(cup, args.plot_dir), plot_table(lie, args.plot_dir)]
    if args.json:
        data = {
            "format": 1,
            "name": p.name,
            "classes": {k: [[t, a] for t, a in v] for k, v in gens.items()},
            "cup": cup.as_dict(),
            "bracket": lie.as_dict(),
        }
        print(_dump_json(data))
        for f in figures:
            print(f"figure: {f}", file=sys.stderr)
        return EXIT_OK
    out = [f"presentation: {p.name}"]
    out += [f"class {k}: {_support_text(v)}" for k, v in gens.items()]
    out += ["cup table:"] + _table_lines(cup)
    out += [f"bracket table ({lie.variant}):"] + _table_lines(lie)
    out.append(f"cup-trivial: {'yes' if cup.trivial else 'no'}")
    out.append(f"bracket-trivial(deg>1): {'yes' if lie.trivial_above_one else 'no'}")
    _write_plot(figures, out)
    print("\n".join(out))
    return EXIT_OK


def cmd_verify(args) -> int:
    p = load_presentation(args.file)
    rep = verify(p, args.property, replay=f"stringhh verify {args.file} --property {args.property}")
    if args.json:
        print(_dump_json(rep.as_dict()))
    else:
        print("\n".join(rep.lines()))
    return EXIT_FAIL if rep.verdict == FAIL else EXIT_OK


def _spec(args) -> RandomSpec:
    try:
        return RandomSpec(args.target, args.vertices, args.arrows, args.density, args.seed)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from exc


def cmd_random(args) -> int:
    spec = _spec(args)
    p = random_presentation(spec)
    text = emit_presentation(p)
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.emit}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_fuzz(args) -> int:
    spec = _spec(args)
    if args.count < 0 or args.jobs < 1:
        raise InvalidInput("--count must be >= 0 and --jobs >= 1")
    rep = fuzz(spec, args.property, args.count, jobs=args.jobs, out_dir=args.out_dir)
    figures = []
    if args.plot_dir:
        from .plotting import plot_fuzz

        figures = [plot_fuzz(rep, args.plot_dir)]
    if args.json:
        print(_dump_json(rep.as_dict()))
        for f in figures:
            print(f"figure: {f}", file=sys.stderr)
    else:
        out = rep.lines()
        _write_plot(figures, out)
        print("\n".join(out))
    return EXIT_OK if rep.ok else EXIT_FAIL


# --- parser ---------------------------------------------------------------


def _random_args(sp: argparse.ArgumentParser, count_defaults: bool) -> None:
    sp.add_argument("--class", dest="target", required=True, choices=CLASSES)
    sp.add_argument("--vertices", type=int, default=6 if count_defaults else None, required=not count_defaults)
    sp.add_argument("--arrows", type=int, default=8 if count_defaults else None, required=not count_defaults)
    sp.add_argument("--density", type=float, default=0.5 if count_defaults else None, required=not count_defaults)
    sp.add_argument("--seed", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stringhh", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("check", help="classify a presentation")
    sp.add_argument("file")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("hh", help="Hochschild cohomology dimensions and generators")
    sp.add_argument("file")
    sp.add_argument("--max-degree", type=int)
    sp.add_argument("--field", help="Q or F<prime>; overrides the file's field")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--dump-basis", action="store_true")
    sp.add_argument("--dump-complex", action="store_true")
    sp.add_argument("--plot-dir")
    sp.set_defaults(func=cmd_hh)

    sp = sub.add_parser("products", help="cup and bracket tables on cohomology")
    sp.add_argument("file")
    sp.add_argument("--circ-variant", choices=VARIANTS, default=LITERAL)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--plot-dir")
    sp.set_defaults(func=cmd_products)

    sp = sub.add_parser("verify", help="check one property on one presentation")
    sp.add_argument("file")
    sp.add_argument("--property", required=True, help=", ".join(PROPERTIES))
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("random", help="emit a seeded random presentation")
    _random_args(sp, count_defaults=False)
    sp.add_argument("--emit", help="write to this file instead of stdout")
    sp.set_defaults(func=cmd_random)

    sp = sub.add_parser("fuzz", help="verify a property on many seeded presentations")
    _random_args(sp, count_defaults=True)
    sp.add_argument("--property", required=True, help=", ".join(PROPERTIES))
    sp.add_argument("--count", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--out-dir", help="directory for counterexample DSL files")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--plot-dir")
    sp.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInput, UnknownProperty, GenerationExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
