"""Command-line interface.

Exit codes: 0 success (or the checked property holds), 1 the checked property
fails, 2 parse or validation error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import families, io
from .errors import ContextTreeError
from .lattice import intersection_at_root, union_at_root
from .pm import CRITERIA, closure_oracle, closure_trim, metrics, pm_chain
from .scot import Scot, build_markov, simulate, stationary
from .tree import complete_hull, count_complete_trees, is_complete

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def _emit(text: str, out: str | None = None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_validate(args) -> int:
    v = io.load(args.file)
    kind = "scot" if isinstance(v, Scot) else "ctree"
    t = v.tree if isinstance(v, Scot) else v
    print(f"ok {kind}: n={t.n} contexts={len(t)} depth={t.depth} complete={str(is_complete(t)).lower()}")
    return EXIT_OK


def cmd_check(args) -> int:
    t = io.load_tree(args.file)
    names = list(CRITERIA) if args.criterion == "all" else [args.criterion]
    verdicts = {name: CRITERIA[name](t) for name in names}
    for name, v in verdicts.items():
        if v:
            print(f"{name}: perfect-memory")
        else:
            print(f"{name}: not perfect-memory: {v.witness.describe(t)}")
    results = {bool(v) for v in verdicts.values()}
    if len(results) > 1:
        print("error: criteria disagree", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK if results.pop() else EXIT_FAIL


def cmd_close(args) -> int:
    t = io.load_tree(args.file)
    out = closure_oracle(t) if args.method == "oracle" else closure_trim(complete_hull(t))
    _emit(io.render(out), args.output)
    return EXIT_OK


def cmd_complete(args) -> int:
    _emit(io.render(complete_hull(io.load_tree(args.file))), args.output)
    return EXIT_OK


def cmd_metrics(args) -> int:
    m = metrics(io.load_tree(args.file))
    if args.json:
        print(json.dumps(m.as_dict(), indent=2))
    else:
        for k, v in m.as_dict().items():
            print(f"{k}: {v}")
    return EXIT_OK


def cmd_chain(args) -> int:
    chain = pm_chain(io.load_tree(args.a), io.load_tree(args.b))
    outdir = Path(args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    width = max(3, len(str(len(chain) - 1)))
    for k, t in enumerate(chain):
        path = outdir / f"step_{k:0{width}d}.ctree"
        path.write_text(io.render(t), encoding="utf-8")
        print(f"{path}\tleaves={len(t)}")
    return EXIT_OK


def cmd_lattice(args) -> int:
    a, b = io.load_tree(args.a), io.load_tree(args.b)
    op = union_at_root if args.op == "union" else intersection_at_root
    _emit(io.render(op(a, b)), args.output)
    return EXIT_OK


def cmd_example(args) -> int:
    if args.family == "sparse":
        t = families.sparse_example()
    elif args.family == "minfull":
        t = families.minimal_full_mc(args.depth)
    else:
        if args.n is None:
            raise ContextTreeError(f"example {args.family} needs --n")
        t = families.GENERATORS[args.family](args.n, args.depth)
    _emit(io.render(t), args.output)
    return EXIT_OK


def cmd_count(args) -> int:
    print(count_complete_trees(args.n, args.depth))
    return EXIT_OK


def cmd_markov(args) -> int:
    v = io.load(args.file)
    if not isinstance(v, Scot):
        raise ContextTreeError("markov needs a scot file")
    mc = build_markov(v)
    if args.stationary:
        st = stationary(mc)
        print("state,probability")
        for c, p in zip(mc.states, st.pi):
            print(f"{io.state_label(mc.alphabet, c)},{format(float(p), '.17g')}")
        if not st.unique:
            print("warning: stationary distribution is not unique", file=sys.stderr)
    else:
        sys.stdout.write(io.render_matrix_csv(mc))
    return EXIT_OK


def cmd_simulate(args) -> int:
    v = io.load(args.file)
    if not isinstance(v, Scot):
        raise ContextTreeError("simulate needs a scot file")
    init = v.alphabet.word(args.init.split()) if args.init is not None else None
    seq = simulate(v, args.steps, args.seed, init)
    print(" ".join(v.alphabet.symbols[a] for a in seq))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pmtree", description="Perfect-memory context trees.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="parse a ctree/scot file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("check", help="test perfect memory")
    s.add_argument("--criterion", choices=[*CRITERIA, "all"], default="all")
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("close", help="perfect-memory closure")
    s.add_argument("--method", choices=["trim", "oracle"], default="trim")
    s.add_argument("-o", "--output")
    s.add_argument("file")
    s.set_defaults(func=cmd_close)

    s = sub.add_parser("complete", help="minimal complete tree containing the input")
    s.add_argument("-o", "--output")
    s.add_argument("file")
    s.set_defaults(func=cmd_complete)

    s = sub.add_parser("metrics", help="depth, counts and sparsity ratios")
    s.add_argument("--json", action="store_true")
    s.add_argument("file")
    s.set_defaults(func=cmd_metrics)

    s = sub.add_parser("chain", help="leaf-set chain from A down to B")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--out-dir", default="chain")
    s.set_defaults(func=cmd_chain)

    s = sub.add_parser("lattice", help="union/intersection at the root")
    s.add_argument("op", choices=["union", "intersect"])
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_lattice)

    s = sub.add_parser("example", help="generate a worked family")
    s.add_argument("family", choices=["comb", "sparse", "minfull", "wide"])
    s.add_argument("--n", type=int)
    s.add_argument("--depth", type=int, default=4)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_example)

    s = sub.add_parser("count", help="number of complete trees of bounded depth")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--depth", type=int, required=True)
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("markov", help="transition matrix on leaves (CSV)")
    s.add_argument("--stationary", action="store_true", help="print the stationary distribution instead")
    s.add_argument("file")
    s.set_defaults(func=cmd_markov)

    s = sub.add_parser("simulate", help="sample a symbol sequence")
    s.add_argument("file")
    s.add_argument("--steps", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--init", help='initial context, tokens oldest first, e.g. "1 1"')
    s.set_defaults(func=cmd_simulate)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ContextTreeError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
