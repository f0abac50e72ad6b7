"""
Running a kcs script
====================

The same computations through the small scripting language.  This is what
``kcs run demos/exterior.kcs --json -`` does from the shell.
"""

import json
import pathlib

from kcs.script import execute, parse, print_script, render_text, verify_report

text = (pathlib.Path(__file__).parent / "exterior.kcs").read_text()
script = parse(text)
print(print_script(script))

report = execute(script)
print(render_text(report))
print("report re-verifies:", verify_report(report))
print(json.dumps(report, sort_keys=True)[:200], "...")
