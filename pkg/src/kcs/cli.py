"""Command line front end: ``kcs run FILE`` and ``kcs check FILE``."""

import argparse
import json
import sys

from .errors import KcsError
from .exact_poly import ORDERS
from .script import RunOptions, error_object, execute, parse, render_text
from .script.runner import is_negative
from .support import DEFAULT_NILPOTENCE_CAP


def _parser():
    p = argparse.ArgumentParser(prog="kcs", description="Supports of curved modules over QQ.")
    sub = p.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="execute a script and report the query results")
    run.add_argument("file")
    run.add_argument("--json", metavar="OUT", help="write the JSON report to OUT ('-' for stdout)")
    run.add_argument("--verify", action="store_true", help="replay every certificate")
    run.add_argument("--strict", action="store_true",
                     help="exit 1 if any query answers false or not found")
    run.add_argument("--order", default="degrevlex", choices=ORDERS)
    run.add_argument("--max-nilpotence", type=int, default=DEFAULT_NILPOTENCE_CAP, metavar="N")
    run.add_argument("--gb-step-limit", type=int, default=None, metavar="N")
    check = sub.add_parser("check", help="parse and statically check a script")
    check.add_argument("file")
    return p


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _dump(doc):
    return json.dumps(doc, sort_keys=True, indent=2)


def main(argv=None):
    args = _parser().parse_args(argv)
    out_path = getattr(args, "json", None)
    try:
        text = _read(args.file)
        script = parse(text)
        if args.command == "check":
            print(f"ok: {len(script)} statements")
            return 0
        options = RunOptions(order=args.order, max_nilpotence=args.max_nilpotence,
                             gb_step_limit=args.gb_step_limit, verify=args.verify)
        report = execute(script, options)
    except (KcsError, OSError) as exc:
        err = _dump(error_object(exc))
        print(err)
        if out_path and out_path != "-":
            with open(out_path, "w", encoding="utf-8") as fh:
                fh.write(err + "\n")
        return 2
    if out_path == "-":
        print(_dump(report))
    else:
        if out_path:
            with open(out_path, "w", encoding="utf-8") as fh:
                fh.write(_dump(report) + "\n")
        if report["results"]:
            print(render_text(report))
    if args.strict and any(is_negative(r) for r in report["results"]):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
