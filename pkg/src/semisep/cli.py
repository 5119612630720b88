"""Command line entry point.

    semisep run WORKSPACE [--task ID ...]
    semisep check|classify-induction|classify-coinduction|tensor|factorize|transport WORKSPACE [--target NAME]
    semisep duoidal prebraided|additive|WORKSPACE
    semisep oracle [WORKSPACE] [--max-size N] [--family NAME ...]

Global flags: --field, --cap, --side, --report PATH, --timing, --jobs.
Exit codes: 0 all pass, 1 assertion failure, 2 input error, 3 cap exceeded.
"""

import argparse
import json
import sys

from .errors import LawViolation, ParseError, SemisepError, UnknownReference
from .runner import SCHEMA, exit_code, run, run_task
from .workspace import Workspace, parse_workspace

TARGET_KEY = {
    "check": "target",
    "classify-induction": "morphism",
    "classify-coinduction": "morphism",
    "factorize": "morphism",
    "transport": "morphism",
    "tensor": "algebra",
}


def render(ws, results, timing=False):
    """Human section followed by a fenced JSON block; no timing unless asked for."""
    counts = {s: sum(r.status == s for r in results) for s in ("pass", "fail", "error", "cap")}
    lines = ["# semisep report", "", f"workspace: {ws.name}", f"field: {ws.field}", f"schema: {SCHEMA}", ""]
    for r in results:
        head = f"[{r.id}] {r.op}: {r.status.upper()}"
        if timing and r.seconds is not None:
            head += f" ({r.seconds:.3f}s)"
        lines.append(head)
        lines.extend("    " + s for s in r.summary)
        lines.extend("    ! " + f for f in r.failures)
        if r.error:
            lines.append("    ! " + r.error)
        lines.append("")
    lines.append("summary: " + ", ".join(f"{v} {k}" for k, v in counts.items()) + f" of {len(results)} tasks")
    doc = {
        "schema": SCHEMA,
        "workspace": ws.name,
        "field": ws.field,
        "summary": counts,
        "exit_code": exit_code(results),
        "tasks": [r.to_dict(timing=timing) for r in results],
    }
    lines += ["", "```json", json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False), "```", ""]
    return "\n".join(lines)


def parse_report(text):
    """The machine-readable block of a report."""
    start = text.index("```json\n") + len("```json\n")
    end = text.index("\n```", start)
    return json.loads(text[start:end])


def _emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    sys.stdout.write(text)


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="override the workspace field: Q or Fp:<p>")
    common.add_argument("--cap", type=int, help="candidate cap for finite searches")
    common.add_argument("--side", choices=("right", "left"), help="module side for induction")
    common.add_argument("--report", metavar="PATH", help="also write the report to PATH")
    common.add_argument("--timing", action="store_true", help="include task timings (breaks byte-identical reports)")
    common.add_argument("--jobs", type=int, default=1, help="run tasks on this many threads")

    p = argparse.ArgumentParser(prog="semisep", description="Classify (co)induction functors on finite structures.")
    sub = p.add_subparsers(dest="command", required=True)
    r = sub.add_parser("run", parents=[common], help="run every task of a workspace")
    r.add_argument("workspace")
    r.add_argument("--task", action="append", help="only this task id (repeatable)")
    for op in TARGET_KEY:
        s = sub.add_parser(op, parents=[common], help=f"run the {op} tasks of a workspace")
        s.add_argument("workspace")
        s.add_argument("--target", help="run on this named entity instead of the declared tasks")
        if op == "tensor":
            s.add_argument("--coalgebra", action="store_true", help="--target names a coalgebra")
        if op == "transport":
            s.add_argument("--functor", help="functor for an ad hoc --target")
    d = sub.add_parser("duoidal", parents=[common], help="coherence and combination checks")
    d.add_argument("instance", help="prebraided, additive, or a workspace file")
    d.add_argument("--zeta-sign", type=int, default=1, choices=(1, -1), help="-1 corrupts the interchange map")
    o = sub.add_parser("oracle", parents=[common], help="compare classifiers with brute force")
    o.add_argument("workspace", nargs="?")
    o.add_argument("--max-size", type=int, default=3, help="largest monoid / set in the corpus run")
    o.add_argument("--family", action="append", help="corpus family to run (repeatable)")
    return p


def _adhoc(ws, op, args):
    spec = {"id": f"{op}:{args.target}", "op": op, TARGET_KEY[op]: args.target}
    if op == "tensor" and getattr(args, "coalgebra", False):
        spec = {"id": spec["id"], "op": op, "coalgebra": args.target}
    if op == "transport":
        if not args.functor:
            raise ParseError("transport --target needs --functor")
        spec["functor"] = args.functor
    return spec


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        if args.command == "duoidal" and args.instance in ("prebraided", "additive"):
            ws = Workspace(name=f"duoidal {args.instance}", field=args.field or "Q")
            ws = _builtin(ws, args)
            specs = ws.tasks
        elif args.command == "oracle" and not args.workspace:
            ws = Workspace(name="corpus", field="Q")
            corpus = {"max_size": args.max_size}
            if args.family:
                corpus["families"] = args.family
            specs = [{"id": "corpus", "op": "oracle", "corpus": corpus}]
        else:
            path = args.workspace if args.command != "duoidal" else args.instance
            ws = parse_workspace(path, field=args.field)
            if args.command == "run":
                specs = [t for t in ws.tasks if not args.task or t["id"] in args.task]
                if args.task and len(specs) != len(set(args.task)):
                    raise UnknownReference(f"unknown task id among {args.task}")
            elif getattr(args, "target", None):
                specs = [_adhoc(ws, args.command, args)]
            else:
                specs = [t for t in ws.tasks if t["op"] == args.command]
    except (ParseError, LawViolation, UnknownReference, SemisepError) as exc:
        sys.stderr.write(f"semisep: input error: {exc}\n")
        return 2
    results = [run_task(ws, s, cap=args.cap, side=args.side, timing=args.timing) for s in specs] if args.jobs <= 1 \
        else _threaded(ws, specs, args)
    _emit(render(ws, results, timing=args.timing), args.report)
    return exit_code(results)


def _threaded(ws, specs, args):
    ids = {s["id"] for s in specs}
    ws.tasks, saved = specs, ws.tasks
    try:
        return run(ws, lambda t: t["id"] in ids, cap=args.cap, side=args.side, timing=args.timing, jobs=args.jobs)
    finally:
        ws.tasks = saved


def _builtin(ws, args):
    """A small built-in sample for the named duoidal instance."""
    from .catalog import diagonal_algebra, group_algebra, matrix_algebra, truncated_polynomials
    from .finvec import FinVec
    from .fixtures import group_like_coalgebra
    from .modalg import unit_morphism

    V = FinVec(ws.field)
    ws.field = V.field.name
    ws.algebras.update(kG=group_algebra(V, 2), k2=diagonal_algebra(V, 2), M2=matrix_algebra(V, 2),
                       N=truncated_polynomials(V, 2))
    ws.morphisms.update(u_kG=unit_morphism(ws.algebras["kG"]), u_k2=unit_morphism(ws.algebras["k2"]),
                        u_M2=unit_morphism(ws.algebras["M2"]))
    spec = {"id": args.instance, "op": "duoidal", "instance": args.instance, "zeta_sign": args.zeta_sign,
            "algebras": [["kG", "k2"], ["kG", "N"]], "algebra_morphisms": [["u_kG", "u_k2"]]}
    if args.instance == "prebraided":
        from .comodcoalg import counit_morphism

        ws.coalgebras.update(g2=group_like_coalgebra(V, 2), g1=group_like_coalgebra(V, 1))
        ws.morphisms["eps_g2"] = counit_morphism(ws.coalgebras["g2"])
        spec["coalgebras"] = [["g2", "g1"]]
        spec["coalgebra_morphisms"] = [["eps_g2", "eps_g2"]]
    else:
        spec["sum_coalgebras"] = [[2, 1]]
    ws.tasks = [spec]
    return ws


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
