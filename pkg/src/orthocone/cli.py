"""Command-line driver.

Exit status: 0 success, 1 verification failure, 2 usage error, 3 resource cap hit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from typing import Sequence

from .algebra import (
    FieldError,
    Limits,
    OrderError,
    ResourceLimitExceeded,
    buchberger,
    initial_ideal,
    make_order,
    parse_field,
)
from .chains import ChainError, VChain, all_new_forms, new_form
from .lattice import (
    InvalidIndexError,
    IsotropicIndex,
    bruhat_leq,
    enumerate_isotropic,
    isotropy_violation,
    roots_of,
)
from .pfaffian import (
    AntiSkewMatrix,
    MatrixError,
    PatchMatrix,
    f_tau,
    generator_indices,
    pfaffian,
    ring_for,
)
from .simplicial import ComplexTooLarge, NonSquareFreeError, SimplicialComplex
from .verify import SUITES, run_suite

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class Output:
    """What a command produced: a table (header + rows) and a JSON payload."""

    json: object
    header: list[str] | None = None
    rows: list[list] | None = None
    text: str | None = None
    status: int = EXIT_OK


# --- argument helpers --------------------------------------------------------------

def parse_tuple(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").strip("()").split(",") if x)
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def parse_chain(text: str) -> list[tuple[int, int]]:
    pairs = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        p = parse_tuple(part)
        if len(p) != 2:
            raise UsageError(f"chain element {part!r} is not a pair r,c")
        pairs.append(p)
    if not pairs:
        raise UsageError("empty chain")
    return pairs


def parse_matrix(text: str, field) -> list[list]:
    rows = [r for r in text.split(";") if r.strip()]
    try:
        return [[field(int(x)) for x in r.split(",")] for r in rows]
    except ValueError:
        raise UsageError("matrix entries must be integers, rows separated by ';'") from None


def isotropic(text: str | None, d: int | None, label: str) -> IsotropicIndex:
    if text is None:
        raise UsageError(f"--{label} is required")
    entries = parse_tuple(text)
    if d is not None and len(entries) != d:
        raise UsageError(f"--{label} has {len(entries)} entries but --d is {d}")
    n = len(entries)
    if n == 0:
        raise UsageError(f"--{label} is empty")
    if list(entries) != sorted(set(entries)) or entries[0] < 1 or entries[-1] > 2 * n:
        raise UsageError(f"--{label}={text}: entries must be strictly increasing in 1..{2 * n}")
    bad = isotropy_violation(entries, n)
    if bad:
        raise UsageError(f"--{label}={text} is not in I({n}): {bad}")
    return IsotropicIndex(entries)


def job_v_w(args, need_w: bool = True):
    v = isotropic(args.v, args.d, "v")
    if not need_w:
        return v, None
    w = isotropic(args.w, args.d or v.d, "w")
    if w.d != v.d:
        raise UsageError("--v and --w have different lengths")
    if not bruhat_leq(v, w):
        raise UsageError(f"v={v} is not <= w={w} in the Bruhat order")
    return v, w


def limits_of(args) -> Limits:
    lim = Limits()
    if args.max_terms is not None:
        if args.max_terms <= 0:
            raise UsageError("--max-terms must be positive")
        lim.max_terms = args.max_terms
    if args.max_degree is not None:
        if args.max_degree <= 0:
            raise UsageError("--max-degree must be positive")
        lim.max_degree = args.max_degree
    return lim


def field_of(args):
    try:
        return parse_field(args.field)
    except FieldError as exc:
        raise UsageError(str(exc)) from None


def make_ring(args, v):
    return ring_for(v, field_of(args), aliases=args.aliases)


def poly_json(f, order=None) -> dict:
    return {"text": f.format(order), **f.to_json(order)}


# --- commands ----------------------------------------------------------------------

def cmd_enum_id(args) -> Output:
    if args.d is None:
        raise UsageError("--d is required")
    if args.d < 1:
        raise UsageError("--d must be positive")
    elems = enumerate_isotropic(args.d)
    return Output([e.to_json() for e in elems], ["index", "entries"],
                  [[i + 1, str(e)] for i, e in enumerate(elems)])


def cmd_patch_matrix(args) -> Output:
    v, _ = job_v_w(args, need_w=False)
    P = PatchMatrix(v)
    header = ["row"] + [f"col {c}" for c in v.entries]
    return Output(P.to_json(), header, [[r + 1] + row for r, row in enumerate(P.rows())])


def cmd_pfaffian(args) -> Output:
    if args.matrix:
        field = field_of(args)
        try:
            A = AntiSkewMatrix(parse_matrix(args.matrix, field), field)
        except MatrixError as exc:
            raise UsageError(str(exc)) from None
        value = pfaffian(A)
        return Output({"pfaffian": str(value)}, ["pfaffian"], [[str(value)]])
    v, _ = job_v_w(args, need_w=False)
    tau = isotropic(args.tau, v.d, "tau")
    ring = make_ring(args, v)
    f = f_tau(v, tau, ring)
    order = make_order(args.order, ring)
    return Output({"v": v.to_json(), "tau": tau.to_json(), "polynomial": poly_json(f, order)},
                  ["tau", "f_tau"], [[str(tau), f.format(order)]])


def cmd_generators(args) -> Output:
    v, w = job_v_w(args)
    ring = make_ring(args, v)
    order = make_order(args.order, ring)
    patch = PatchMatrix(v)
    taus = generator_indices(v, w, above_v=not args.all_tau)
    gens = [f_tau(v, t, ring, patch) for t in taus]
    return Output(
        [{"tau": t.to_json(), "polynomial": poly_json(f, order)} for t, f in zip(taus, gens)],
        ["tau", "degree", "f_tau"],
        [[str(t), f.degree(), f.format(order)] for t, f in zip(taus, gens)],
    )


def _basis(args):
    v, w = job_v_w(args)
    ring = make_ring(args, v)
    order = make_order(args.order, ring)
    patch = PatchMatrix(v)
    gens = [f_tau(v, t, ring, patch) for t in generator_indices(v, w, above_v=not args.all_tau)]
    G = buchberger(gens, order, limits_of(args)) if gens else []
    return v, w, ring, order, G


def cmd_groebner(args) -> Output:
    _, _, ring, order, G = _basis(args)
    return Output(
        [poly_json(g, order) for g in G],
        ["leading monomial", "element"],
        [[ring.format_monomial(order.leading(g)[0]), g.format(order)] for g in G],
    )


def cmd_initial_ideal(args) -> Output:
    _, _, ring, order, G = _basis(args)
    ideal = initial_ideal(G, order)
    payload = {"order": order.name, "square_free": ideal.is_squarefree(), "generators": ideal.to_json()}
    return Output(payload, ["generator"], [[g] for g in ideal.to_json()])


def cmd_complex(args) -> Output:
    _, _, ring, order, G = _basis(args)
    ideal = initial_ideal(G, order)
    try:
        K = SimplicialComplex.from_initial_ideal(ideal)
    except NonSquareFreeError as exc:
        return Output({"error": str(exc)}, text=f"initial ideal is not square-free: {exc}",
                      status=EXIT_VERIFY)
    label = {x: n for x, n in zip(ring.variables, ring.names)}
    facets = [[label[x] for x in facet] for facet in K.ordered_facets()]
    payload = {"f_vector": K.f_vector(), "facets": facets,
               "minimal_nonfaces": ideal.to_json()}
    rows = [[i + 1, " ".join(f)] for i, f in enumerate(facets)]
    text = "f-vector: " + " ".join(map(str, payload["f_vector"]))
    return Output(payload, ["facet", "vertices"], rows, text=text)


def cmd_newform(args) -> Output:
    v, _ = job_v_w(args, need_w=False)
    if not args.chain:
        raise UsageError("--chain is required, e.g. --chain '7,1;5,2'")
    system = roots_of(v)
    try:
        E = VChain(tuple(system.root(r, c) for r, c in parse_chain(args.chain)))
    except (ChainError, InvalidIndexError) as exc:
        raise UsageError(str(exc)) from None
    if not E.all_in_ON:
        raise UsageError(f"chain {E!r} is not contained in ON(v)")
    try:
        if args.cutoff is None:
            if args.choice:
                raise UsageError("--choice needs --cutoff")
            forms = all_new_forms(E)
        else:
            choice = None
            if args.choice:
                r = parse_tuple(args.choice)
                if len(r) not in (1, 2) or (len(r) == 2 and r[1] != 2 * v.d + 1 - r[0]):
                    raise UsageError("--choice is a diagonal point: give its row r or r,r*")
                choice = system.root(r[0], 2 * v.d + 1 - r[0])
            forms = [new_form(E, args.cutoff, choice)]
    except (ChainError, InvalidIndexError) as exc:
        raise UsageError(str(exc)) from None
    rows = []
    for nf in forms:
        rows.append([
            nf.cutoff,
            "" if nf.choice is None else f"({nf.choice.row},{nf.choice.col})",
            repr(nf.chain) if nf.defined else f"undefined: {nf.reason}",
        ])
    return Output({"chain": E.to_json(), "new_forms": [nf.to_json() for nf in forms]},
                  ["cutoff", "choice", "new form"], rows)


def cmd_verify(args) -> Output:
    kwargs = {"seed": args.seed}
    if args.suite in ("paper-example", "theorem-smalld"):
        kwargs["field"] = field_of(args)
    res = run_suite(args.suite, **kwargs)
    rows = [["PASS" if c.passed else "FAIL", c.name, c.detail] for c in res.checks]
    summary = f"{args.suite}: {'PASS' if res.passed else 'FAIL'}"
    return Output(res.to_json(), ["status", "check", "detail"], rows, text=summary,
                  status=EXIT_OK if res.passed else EXIT_VERIFY)


COMMANDS = {
    "enum-id": cmd_enum_id,
    "patch-matrix": cmd_patch_matrix,
    "pfaffian": cmd_pfaffian,
    "generators": cmd_generators,
    "groebner": cmd_groebner,
    "initial-ideal": cmd_initial_ideal,
    "complex": cmd_complex,
    "newform": cmd_newform,
    "verify": cmd_verify,
}


# --- parsing and rendering ---------------------------------------------------------

def load_config(path: str) -> dict[str, str]:
    """key = value lines; '#' starts a comment; keys use flag names without dashes."""
    out = {}
    try:
        with open(path, encoding="utf-8") as fh:
            for n, line in enumerate(fh, 1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise UsageError(f"{path}:{n}: expected key = value")
                key, value = (x.strip() for x in line.split("=", 1))
                out[key.replace("-", "_")] = value
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror}") from None
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value file supplying defaults")
    common.add_argument("--d", type=int)
    common.add_argument("--v", help="element of I(d), e.g. 1,2,3,4,5")
    common.add_argument("--w", help="element of I(d) with v <= w")
    common.add_argument("--tau")
    common.add_argument("--order", default="hlex", choices=["hlex", "rlex", "diagproj"])
    common.add_argument("--field", default="rat", help="rat or fp:<p>")
    common.add_argument("--max-degree", type=int)
    common.add_argument("--max-terms", type=int)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default="table", choices=["table", "json", "csv"])
    common.add_argument("--aliases", action="store_true",
                        help="name variables a..j (only for v = 1,2,3,4,5)")
    common.add_argument("--all-tau", action="store_true",
                        help="use every tau not <= w, not only those above v")
    common.add_argument("--log-level", default="WARNING")

    parser = argparse.ArgumentParser(prog="orthocone", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)
    parser.commands = {}
    for name in COMMANDS:
        p = parser.commands[name] = sub.add_parser(name, parents=[common])
        if name == "pfaffian":
            p.add_argument("--matrix", help="numeric matrix, rows ';'-separated, e.g. '0,1;-1,0'")
        if name == "newform":
            p.add_argument("--chain", help="roots r,c separated by ';'")
            p.add_argument("--cutoff", type=int)
            p.add_argument("--choice", help="row of the chosen diagonal point")
        if name == "verify":
            p.add_argument("suite", choices=list(SUITES))
    return parser


def render(out: Output, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(out.json, indent=2, sort_keys=False) + "\n"
    if out.header is None:
        return (out.text or "") + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(out.header)
        writer.writerows(out.rows)
        return buf.getvalue()
    table = [out.header] + [[str(x) for x in r] for r in out.rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(out.header))]
    lines = ["  ".join(c.ljust(wd) for c, wd in zip(r, widths)).rstrip() for r in table]
    lines.insert(1, "  ".join("-" * wd for wd in widths))
    if out.text:
        lines.append(out.text)
    return "\n".join(lines) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.config:
            # config values become defaults; flags given on the command line still win
            cfg = load_config(args.config)
            sub = parser.commands[args.command]
            known = {a.dest for a in sub._actions}
            unknown = sorted(set(cfg) - known)
            if unknown:
                raise UsageError(f"unknown config keys: {', '.join(unknown)}")
            sub.set_defaults(**{k: _coerce(sub, k, v) for k, v in cfg.items()})
            args = parser.parse_args(argv)
        logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(name)s: %(message)s")
        if args.aliases and args.v and parse_tuple(args.v) != (1, 2, 3, 4, 5):
            raise UsageError("--aliases is only available for v = 1,2,3,4,5")
        out = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidIndexError, OrderError, FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceLimitExceeded, ComplexTooLarge) as exc:
        print(f"resource cap hit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    sys.stdout.write(render(out, args.out))
    return out.status


def _coerce(parser: argparse.ArgumentParser, dest: str, value: str):
    for action in parser._actions:
        if action.dest == dest:
            if isinstance(action, argparse._StoreTrueAction):
                return value.lower() in ("1", "true", "yes", "on")
            if action.type is int:
                try:
                    return int(value)
                except ValueError:
                    raise UsageError(f"config key {dest} needs an integer") from None
            if action.choices and value not in action.choices:
                raise UsageError(f"config key {dest}: {value!r} not in {list(action.choices)}")
    return value


if __name__ == "__main__":
    sys.exit(main())
