"""Command-line entry point.

Exit status: 0 when a check passes or a formula is valid, 1 when a
counterexample or violation was found, 2 on usage, format or cap errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import emit
from . import frames as F
from . import logic as L
from . import witness as W
from .structures import (
    KINDS,
    CapExceeded,
    StructureError,
    add_fixed_point,
    class_frame,
    congruences,
    iso_classes,
    load_structure_file,
    quotient_structures,
    structure_to_doc,
    submodel_structures,
    submodels,
    sum_of_cycles,
)

OK, FOUND, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _json_arg(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"{what} is not valid JSON: {e}") from None


def _write(path: str | None, text: str, out) -> None:
    if path is None or path == "-":
        out.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(path, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


# ---------------------------------------------------------------------------
# handlers

def cmd_parse(args, out) -> int:
    f = L.parse_formula(args.formula)
    out.write(L.to_text(f) + "\n")
    return OK


def cmd_structure_info(args, out) -> int:
    s = load_structure_file(args.file)
    sig = s.signature
    out.write(f"universe: {s.size}\n")
    out.write(f"functions: {', '.join(f'{n}/{a}' for n, a in sig.functions) or '-'}\n")
    out.write(f"predicates: {', '.join(f'{n}/{a}' for n, a in sig.predicates) or '-'}\n")
    out.write(f"constants: {', '.join(f'{c}={s.constants[c]}' for c in sig.constants) or '-'}\n")
    for label, fn in (("submodels", submodels), ("congruences", congruences)):
        try:
            out.write(f"{label}: {len(fn(s))}\n")
        except CapExceeded as e:
            out.write(f"{label}: refused ({e})\n")
    return OK


def _listing(args, out, kind: str) -> int:
    s = load_structure_file(args.file)
    if kind == "sub":
        items, structs = submodels(s), submodel_structures(s)
        fmt = emit.subsets_text(items)
    else:
        items, structs = congruences(s), quotient_structures(s)
        fmt = "\n".join(" | ".join(" ".join(map(str, b)) for b in p) for p in items)
    if args.up_to_iso:
        reps, classes = iso_classes(structs)
        counts = [classes.count(i) for i in range(len(reps))]
        out.write(f"{len(items)} {'submodels' if kind == 'sub' else 'congruences'}, {len(reps)} up to isomorphism\n")
        for i, r in enumerate(reps):
            out.write(f"class {i}: size {r.size}, {counts[i]} member(s)\n")
    else:
        out.write(fmt + "\n")
    if args.dot:
        cf = class_frame(structs, kind)
        _write(args.dot, emit.class_frame_dot(cf), out)
    return OK


def cmd_submodels(args, out) -> int:
    return _listing(args, out, "sub")


def cmd_quotients(args, out) -> int:
    return _listing(args, out, "quot")


def cmd_classframe(args, out) -> int:
    cs = [load_structure_file(p) for p in args.files]
    if args.expand:
        grown = []
        for s in cs:
            grown.extend(quotient_structures(s) if args.kind == "quot" else submodel_structures(s))
        cs = grown
    cf = class_frame(cs, args.kind)
    out.write(f"orientation: {emit.ORIENTATION}\n")
    out.write(f"{cf.size} classes, {len(cf.relation)} pairs\n")
    for i, r in enumerate(cf.representatives):
        succ = sorted(b for a, b in cf.relation if a == i)
        out.write(f"class {i}: size {r.size}, sees {succ}\n")
    if args.dot:
        _write(args.dot, emit.class_frame_dot(cf), out)
    if args.json:
        _write(args.json, emit.class_frame_json(cf), out)
    return OK


def cmd_frame_check(args, out) -> int:
    g = F.load_frame_file(args.frame)
    f = L.parse_formula(args.formula)
    r = L.valid_in(g, f, budget=args.budget, method=args.method)
    if args.json:
        doc = {
            "formula": L.to_text(f),
            "valid": r.valid,
            "method": r.method,
            "countervaluation": None if r.valid else {k: list(v) for k, v in r.countervaluation.items()},
            "world": r.world,
        }
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    elif r.valid:
        out.write(f"valid: {L.to_text(f)} ({r.method})\n")
    else:
        out.write(f"INVALID: {L.to_text(f)} ({r.method})\n")
        for k, v in r.countervaluation.items():
            out.write(f"  {k} = {{{', '.join(map(str, v))}}}\n")
        out.write(f"  fails at world {r.world}\n")
    return OK if r.valid else FOUND


def cmd_frame_axioms(args, out) -> int:
    g = F.load_frame_file(args.frame)
    names = args.names.split(",") if args.names else None
    if names:
        unknown = [n for n in names if n not in L.AXIOMS]
        if unknown:
            raise UsageError(f"unknown axioms: {', '.join(unknown)}")
    rep = L.axiom_battery(g, names, budget=args.budget, method=args.method)
    if args.json:
        doc = [
            {"name": r.name, "formula": r.formula, "valid": r.valid,
             "countervaluation": None if r.valid else {k: list(v) for k, v in r.countervaluation.items()},
             "world": r.world}
            for r in rep.results
        ]
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        out.write(rep.table() + "\n")
    return OK


def cmd_frame_op(args, out) -> int:
    op = args.op
    frames = [F.load_frame_file(p) for p in args.frames]
    need = {"sum": 2, "lex": 2}.get(op, 1)
    if len(frames) != need:
        raise UsageError(f"frame op {op} takes {need} frame file(s), got {len(frames)}")
    if op == "sum":
        res = F.full_general(F.ordered_sum(frames[0].base, frames[1].base), cap=64)
    elif op == "lex":
        res = F.full_general(F.lex_product(frames[0].base, frames[1].base), cap=64)
    elif op == "gensub":
        if args.world is None:
            raise UsageError("gensub needs --world")
        res = F.generated_subframe(frames[0], args.world)
    elif op == "refine":
        res = F.refine(frames[0])
    elif op == "quotient":
        if args.blocks is None:
            raise UsageError("quotient needs --blocks")
        res = F.quotient_frame(frames[0], _json_arg(args.blocks, "--blocks"))
    else:
        if args.generators is None:
            raise UsageError("subalg needs --generators")
        res = F.subalgebra_generated(frames[0], _json_arg(args.generators, "--generators"))
    _write(args.out, emit.frame_json(res), out)
    if args.dot:
        _write(args.dot, emit.frame_dot(res), out)
    return OK


def cmd_pmorphism(args, out) -> int:
    src = F.load_frame_file(args.src).base
    tgt = F.load_frame_file(args.tgt).base
    with open(args.map) as fh:
        m = F.load_map(fh.read())
    v = F.check_pmorphism(src, tgt, m)
    if v is None:
        out.write("p-morphism: ok\n")
        return OK
    out.write(json.dumps({"violation": v.kind, "worlds": list(v.worlds), "message": v.message}) + "\n")
    return FOUND


def cmd_witness(args, out) -> int:
    w = args.witness
    if w == "qn":
        _write(args.out, emit.frame_json(F.full_general(F.pretree_q(args.n, args.top), cap=F.PRETREE_CAP)), out)
    elif w == "medvedev":
        f = F.powerset_frame(args.k, args.drop_empty, args.reversed)
        _write(args.out, emit.frame_json(F.full_general(f, cap=64)), out)
    elif w == "cycles":
        s = sum_of_cycles(args.lengths)
        if args.fixedpoint:
            s = add_fixed_point(s, constant="c")
        _write(args.out, json.dumps(structure_to_doc(s), sort_keys=True), out)
    elif w == "shehtman":
        src, tgt, m = F.shehtman_map(args.h)
        v = F.check_pmorphism(src, tgt, m)
        doc = {"source": F.frame_to_doc(src), "target": F.frame_to_doc(tgt), "map": list(m.mapping),
               "pmorphism": v is None}
        _write(args.out, json.dumps(doc, sort_keys=True), out)
        return OK if v is None else FOUND
    else:
        rep = W.an_lemma_suite(args.n, args.bound)
        out.write(rep.to_json() + "\n" if args.json else rep.table() + "\n")
        return OK if rep.passed else FOUND
    return OK


def cmd_verify(args, out) -> int:
    cfg = W.Config()
    if args.config:
        with open(args.config) as fh:
            cfg = W.load_config(fh.read())
    rep = W.verify_paper(cfg)
    out.write(rep.to_json() + "\n" if args.json else rep.table() + "\n")
    return OK if rep.passed else FOUND


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="modaltheory", description=__doc__.splitlines()[0], allow_abbrev=False)
    sub = p.add_subparsers(dest="command", required=True)

    def sp(parent, name, help, handler):
        q = parent.add_parser(name, help=help, allow_abbrev=False)
        q.set_defaults(handler=handler)
        return q

    q = sp(sub, "parse", "parse a formula and print it back", cmd_parse)
    q.add_argument("formula")

    st = sub.add_parser("structure", help="structure documents", allow_abbrev=False)
    st_sub = st.add_subparsers(dest="structure_cmd", required=True)
    q = sp(st_sub, "info", "summarize a structure", cmd_structure_info)
    q.add_argument("file")

    for name, handler in (("submodels", cmd_submodels), ("quotients", cmd_quotients)):
        q = sp(sub, name, f"list {name} of a structure", handler)
        q.add_argument("file")
        q.add_argument("--up-to-iso", action="store_true")
        q.add_argument("--dot", metavar="OUT")

    q = sp(sub, "classframe", "frame on iso-classes of structures", cmd_classframe)
    q.add_argument("--kind", choices=KINDS, required=True)
    q.add_argument("files", nargs="+")
    q.add_argument("--expand", action="store_true", help="use all submodels (or quotients) of the inputs")
    q.add_argument("--dot", metavar="OUT")
    q.add_argument("--json", metavar="OUT")

    fr = sub.add_parser("frame", help="frame checks and operations", allow_abbrev=False)
    fr_sub = fr.add_subparsers(dest="frame_cmd", required=True)
    q = sp(fr_sub, "check", "decide validity of a formula", cmd_frame_check)
    q.add_argument("frame")
    q.add_argument("--formula", required=True)
    q.add_argument("--budget", type=int, default=L.DEFAULT_BUDGET)
    q.add_argument("--method", choices=("enumerate", "sat", "auto"), default="enumerate")
    q.add_argument("--json", action="store_true")
    q = sp(fr_sub, "axioms", "run the axiom battery", cmd_frame_axioms)
    q.add_argument("frame")
    q.add_argument("--names", help="comma-separated axiom names")
    q.add_argument("--budget", type=int, default=L.DEFAULT_BUDGET)
    q.add_argument("--method", choices=("enumerate", "sat", "auto"), default="auto")
    q.add_argument("--json", action="store_true")
    q = sp(fr_sub, "op", "build a frame from others", cmd_frame_op)
    q.add_argument("op", choices=("sum", "lex", "gensub", "refine", "quotient", "subalg"))
    q.add_argument("frames", nargs="+")
    q.add_argument("--world", type=int)
    q.add_argument("--blocks", help="JSON list of world lists")
    q.add_argument("--generators", help="JSON list of world lists")
    q.add_argument("--out", metavar="OUT")
    q.add_argument("--dot", metavar="OUT")

    pm = sub.add_parser("pmorphism", help="p-morphism checks", allow_abbrev=False)
    pm_sub = pm.add_subparsers(dest="pm_cmd", required=True)
    q = sp(pm_sub, "check", "check a map between frames", cmd_pmorphism)
    q.add_argument("src")
    q.add_argument("tgt")
    q.add_argument("--map", required=True)

    wt = sub.add_parser("witness", help="constructed witnesses", allow_abbrev=False)
    wt_sub = wt.add_subparsers(dest="witness", required=True)
    q = sp(wt_sub, "qn", "the pre-tree frame Q_n", cmd_witness)
    q.add_argument("n", type=int)
    q.add_argument("--top", action="store_true")
    q.add_argument("--out", metavar="OUT")
    q = sp(wt_sub, "cycles", "a disjoint sum of cycles", cmd_witness)
    q.add_argument("lengths", type=_int_list)
    q.add_argument("--fixedpoint", action="store_true")
    q.add_argument("--out", metavar="OUT")
    q = sp(wt_sub, "medvedev", "a powerset frame", cmd_witness)
    q.add_argument("k", type=int)
    q.add_argument("--drop-empty", action="store_true")
    q.add_argument("--reversed", action="store_true")
    q.add_argument("--out", metavar="OUT")
    q = sp(wt_sub, "shehtman", "the powerset-onto-tree map", cmd_witness)
    q.add_argument("h", type=int)
    q.add_argument("--out", metavar="OUT")
    q = sp(wt_sub, "an", "pointwise checks of the A_n operation", cmd_witness)
    q.add_argument("n", type=int)
    q.add_argument("--bound", type=int, required=True)
    q.add_argument("--json", action="store_true")

    vf = sub.add_parser("verify", help="verification suites", allow_abbrev=False)
    vf_sub = vf.add_subparsers(dest="verify_cmd", required=True)
    q = sp(vf_sub, "paper", "run the full acceptance suite", cmd_verify)
    q.add_argument("--config", metavar="FILE")
    q.add_argument("--json", action="store_true")
    return p


ERRORS = (
    UsageError,
    StructureError,
    F.FrameError,
    L.FormulaSyntaxError,
    L.BudgetExceeded,
    L.UnboundVariable,
    W.WitnessError,
    CapExceeded,
    OSError,
    json.JSONDecodeError,
)


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return args.handler(args, out)
    except ERRORS as e:
        err.write(f"error: {e}\n")
        return USAGE


run = main


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
