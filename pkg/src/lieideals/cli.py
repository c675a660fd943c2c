"""Command-line interface.

Exit codes: 0 ok, 1 a verification check failed, 2 bad input, 3 the ideal
lattice is infinite, 4 the ideal budget ran out.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import families, formats
from . import lattice as lat
from .ideals import Status, enumerate_ideals
from .lie import InvalidAlgebra, structure_report

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_INFINITE, EXIT_BUDGET = 0, 1, 2, 3, 4
MAX_CAP = 12


class InputError(Exception):
    pass


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return json.loads(text)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def _write(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _load_algebra(path):
    try:
        return formats.algebra_from_json(_read_json(path))
    except InvalidAlgebra as exc:
        raise InputError("invalid algebra:\n" + "\n".join(f"  {v}" for v in exc.violations)) from exc
    except formats.FormatError as exc:
        raise InputError(str(exc)) from exc


def _load_lattice(path):
    data = _read_json(path)
    try:
        return lat.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"invalid lattice: {exc}") from exc


def _status_exit(status: Status) -> int:
    return {Status.COMPLETE: EXIT_OK, Status.INFINITE: EXIT_INFINITE, Status.BUDGET: EXIT_BUDGET}[status]


# ----------------------------------------------------------------------------
# commands


def cmd_build(args) -> int:
    try:
        spec = families.spec_from_json(_read_json(args.spec))
        L = families.build(spec)
    except families.InvalidSpec as exc:
        raise InputError(f"invalid spec: {exc}") from exc
    except InvalidAlgebra as exc:
        raise InputError("built algebra is invalid:\n" + "\n".join(f"  {v}" for v in exc.violations)) from exc
    _write(formats.dumps(formats.algebra_to_json(L)), args.output)
    return EXIT_OK


def cmd_analyze(args) -> int:
    L = _load_algebra(args.algebra)
    summary = structure_report(L).summary()
    if args.format == "json":
        _write(formats.dumps(summary), args.output)
    else:
        lines = [f"{k}: {v}" for k, v in summary.items()]
        _write("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_ideals(args) -> int:
    if args.budget < 2:
        raise InputError("budget must be at least 2")
    L = _load_algebra(args.algebra)
    result = enumerate_ideals(L, budget=args.budget)
    _write(formats.dumps(formats.idealset_to_json(result)), args.output)
    if result.status is Status.INFINITE:
        w = result.witness
        print(
            f"infinite ideal lattice: atoms of dim {w.source.dim - w.base.dim} above an ideal of "
            f"dim {w.base.dim} are isomorphic; phi = {[[str(x) for x in r] for r in w.phi]}",
            file=sys.stderr,
        )
    elif result.status is Status.BUDGET:
        print(f"more than {args.budget} candidate ideals; enumeration stopped", file=sys.stderr)
    return _status_exit(result.status)


def classification_line(l: lat.FiniteLattice) -> str:
    yn = lambda b: "yes" if b else "no"  # noqa: E731
    return (
        f"size={l.size} modular={yn(lat.is_modular(l))} distributive={yn(lat.is_distributive(l))} "
        f"complemented={yn(lat.is_complemented(l))} boolean={yn(lat.is_boolean(l))} "
        f"dp={yn(lat.has_dp(l))} length={lat.length(l)} atoms={len(lat.atoms(l))}"
    )


def cmd_lattice(args) -> int:
    try:
        result = formats.idealset_from_json(_read_json(args.idealset))
    except (formats.FormatError, InvalidAlgebra) as exc:
        raise InputError(str(exc)) from exc
    if not result.complete:
        print(f"ideal set status is {result.status.value}; no lattice", file=sys.stderr)
        return _status_exit(result.status)
    l = lat.lattice_of(result)
    print(classification_line(l), file=sys.stderr if args.output in (None, "-") else sys.stdout)
    _write(lat.dumps(l), args.output)
    return EXIT_OK


def cmd_hasse(args) -> int:
    l = _load_lattice(args.lattice)
    _write(lat.to_dot(l, labels=args.labels), args.output)
    return EXIT_OK


def cmd_enum_distributive(args) -> int:
    if not 1 <= args.n <= min(args.cap, MAX_CAP):
        raise InputError(f"n must be between 1 and {min(args.cap, MAX_CAP)}")
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    lats = lat.enumerate_distributive(args.n, cap=min(args.cap, MAX_CAP))
    sheet = [f"graph d{args.n} {{", "  rankdir=BT;", '  node [shape=point, width=0.12, label=""];']
    for k, l in enumerate(lats, start=1):
        name = f"d{args.n}.{k}"
        (out / f"{name}.json").write_text(lat.dumps(l))
        sheet.append(f'  subgraph cluster_{k} {{ label="{name}";')
        for a in range(l.size):
            sheet.append(f"    k{k}_{a};")
        for a, b in lat.hasse_edges(l):
            sheet.append(f"    k{k}_{a} -- k{k}_{b};")
        sheet.append("  }")
    sheet.append("}")
    (out / f"d{args.n}.dot").write_text("\n".join(sheet) + "\n")
    print(f"{len(lats)} distributive lattices with {args.n} elements written to {out}")
    return EXIT_OK


def cmd_product(args) -> int:
    l = lat.product(_load_lattice(args.first), _load_lattice(args.second))
    _write(lat.dumps(l), args.output)
    return EXIT_OK


def cmd_dual(args) -> int:
    _write(lat.dumps(lat.dual(_load_lattice(args.lattice))), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import CRITERIA, run_criterion

    failed = 0
    for number, _, _ in CRITERIA:
        if args.only and number not in args.only:
            continue
        r = run_criterion(number)
        print(r.line(), flush=True)
        failed += not r.passed
    print(f"{'all checks passed' if not failed else f'{failed} check(s) failed'}")
    return EXIT_FAILED if failed else EXIT_OK


# ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lieideals", description="Ideal lattices of Lie algebras over Q.")
    sub = p.add_subparsers(dest="command", required=True)

    def out(sp):
        sp.add_argument("-o", "--output", help="output file (default stdout)")

    sp = sub.add_parser("build", help="build an algebra from a family spec")
    sp.add_argument("spec")
    out(sp)
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("analyze", help="structure report of an algebra")
    sp.add_argument("algebra")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    out(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("ideals", help="enumerate the ideals of an algebra")
    sp.add_argument("algebra")
    sp.add_argument("--budget", type=int, default=512)
    out(sp)
    sp.set_defaults(func=cmd_ideals)

    sp = sub.add_parser("lattice", help="classify the lattice of an enumerated ideal set")
    sp.add_argument("idealset")
    out(sp)
    sp.set_defaults(func=cmd_lattice)

    sp = sub.add_parser("hasse", help="DOT Hasse diagram of a lattice file")
    sp.add_argument("lattice")
    sp.add_argument("--labels", action="store_true", help="label nodes instead of drawing points")
    out(sp)
    sp.set_defaults(func=cmd_hasse)

    sp = sub.add_parser("enum-distributive", help="all distributive lattices of a given size")
    sp.add_argument("n", type=int)
    sp.add_argument("--outdir", default=".")
    sp.add_argument("--cap", type=int, default=MAX_CAP)
    sp.set_defaults(func=cmd_enum_distributive)

    sp = sub.add_parser("product", help="direct product of two lattice files")
    sp.add_argument("first")
    sp.add_argument("second")
    out(sp)
    sp.set_defaults(func=cmd_product)

    sp = sub.add_parser("dual", help="dual of a lattice file")
    sp.add_argument("lattice")
    out(sp)
    sp.set_defaults(func=cmd_dual)

    sp = sub.add_parser("verify", help="run the acceptance checks")
    sp.add_argument("--only", type=int, nargs="*", help="criterion numbers to run")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (lat.NotAPoset, lat.NotALattice) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
