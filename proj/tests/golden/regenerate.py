#!/usr/bin/env python3
# Rewrites the golden outputs from a built skein binary:
#   tests/golden/regenerate.py build/tools/skein
import json
import pathlib
import subprocess
import sys

here = pathlib.Path(__file__).resolve().parent
exe = sys.argv[1] if len(sys.argv) > 1 else "build/tools/skein"
for case in json.loads((here / "cases.json").read_text()):
    out = subprocess.run([exe, *case["args"]], check=True, capture_output=True).stdout
    (here / f"{case['name']}.txt").write_bytes(out)
    print("wrote", case["name"])
