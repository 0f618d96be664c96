"""Command line front-end.

    mod2coh check --builtin-catalog [--file F] [--max-degree D] [--format tsv|json] [--out PATH]
    mod2coh sq --space RPinf --element "x^3" --i 1
    mod2coh catalog --list | --export

Exit status: 0 all pass, 1 some task failed or errored, 2 configuration or parse error.
"""

import argparse
import sys

from .catalog import builtin_catalog, builtin_source
from .dsl import TaskFile, load, parse
from .errors import Mod2CohError
from .report import render_json, render_tsv, summarize
from .steenrod import sq
from .verify import run_suite

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def _build_parser():
    p = argparse.ArgumentParser(prog="mod2coh", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run verification tasks")
    c.add_argument("--file", help="task file to run (may reference built-in names with --builtin-catalog)")
    c.add_argument("--builtin-catalog", action="store_true", help="include the built-in catalog and its tasks")
    c.add_argument("--max-degree", type=int, default=None, help="clamp degree bounds of sweep tasks")
    c.add_argument("--format", choices=("tsv", "json"), default="tsv")
    c.add_argument("--out", help="write the report here instead of stdout")

    s = sub.add_parser("sq", help="evaluate Sq^i on one element")
    s.add_argument("--space", required=True)
    s.add_argument("--element", required=True)
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--file", help="task file declaring extra spaces")

    k = sub.add_parser("catalog", help="inspect the built-in catalog")
    g = k.add_mutually_exclusive_group(required=True)
    g.add_argument("--list", action="store_true")
    g.add_argument("--export", action="store_true", help="print the catalog as task-file source")
    return p


def _load(args, with_builtin):
    prelude = builtin_catalog() if with_builtin else None
    if args.file:
        tf = load(args.file, prelude)
    else:
        tf = TaskFile()
        if prelude is not None:
            tf.spaces.update(prelude.spaces)
            tf.maps.update(prelude.maps)
            tf.bundles.update(prelude.bundles)
    tasks = (list(prelude.tasks) if prelude is not None else []) + tf.tasks
    return tf, tasks


def _check(args, out):
    if not args.file and not args.builtin_catalog:
        print("mod2coh check: give --file and/or --builtin-catalog", file=sys.stderr)
        return EXIT_CONFIG
    tf, tasks = _load(args, args.builtin_catalog)
    verdicts = run_suite(tasks, tf, max_degree=args.max_degree)
    text = render_json(verdicts) if args.format == "json" else render_tsv(verdicts)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    counts = summarize(verdicts)
    print(f"pass={counts['pass']} fail={counts['fail']} error={counts['error']}", file=sys.stderr)
    return EXIT_OK if counts["fail"] == 0 and counts["error"] == 0 else EXIT_FAIL


def _sq(args, out):
    tf, _ = _load(args, True)
    if args.space not in tf.spaces:
        print(f"mod2coh sq: unknown space {args.space!r}", file=sys.stderr)
        return EXIT_CONFIG
    ring = tf.spaces[args.space].ring
    out.write(f"{sq(args.i, ring.element(args.element))}\n")
    return EXIT_OK


def _catalog(args, out):
    if args.export:
        out.write(builtin_source())
        return EXIT_OK
    tf = builtin_catalog()
    for name, space in tf.spaces.items():
        out.write(f"space\t{name}\tdim={space.ring.dimension}\n")
    for name, f in tf.maps.items():
        out.write(f"map\t{name}\t{f.source.name} -> {f.target.name}\tcodim={f.codim}\n")
    out.write(f"tasks\t{len(tf.tasks)}\n")
    return EXIT_OK


def main(argv=None, out=None):
    out = out or sys.stdout
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "check":
            return _check(args, out)
        if args.command == "sq":
            return _sq(args, out)
        return _catalog(args, out)
    except OSError as exc:
        print(f"mod2coh: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except Mod2CohError as exc:
        print(f"mod2coh: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
