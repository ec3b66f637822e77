"""Drive the command line interface end to end.

Every subcommand writes plain CSV plus a JSON sidecar into an output
directory, so downstream plotting never needs this package. This script
runs the four subcommands into demos/output/ and shows what lands on
disk, then provokes the two error exits on purpose.
"""

import contextlib
import io
import json
import pathlib

from zickey.cli import main

out = pathlib.Path(__file__).resolve().parent / "output"
channel = ["--h11", "1", "--h22", "1", "--h21", "0.6",
           "--p1", "100", "--p2", "100"]

print("== region: one CSV per scheme plus the outer region ==")
rc = main(["region", *channel, "--rk", "1", "--grid", "coarse", "--svg",
           "--out-dir", str(out / "region")])
print(f"exit code {rc}")
meta = json.loads((out / "region" / "region_meta.json").read_text())
print(f"regime {meta['regime']}, suppressed {meta['suppressed']}")
print()

print("== sumrate: best sum rate along a key-rate sweep ==")
rc = main(["sumrate", *channel, "--rk-list", "0,0.5,1,2",
           "--grid", "coarse", "--out-dir", str(out / "sumrate")])
print(f"exit code {rc}")
lines = (out / "sumrate" / "sumrate.csv").read_text().splitlines()
for line in lines[:3]:
    print(f"  {line}")
print(f"  ... {len(lines) - 3} more rows")
print()

print("== gdof: normalized high-power polytopes ==")
rc = main(["gdof", "--alpha", "0.5", "--gamma", "0.2", "--eta", "0.6",
           "--svg", "--out-dir", str(out / "gdof")])
print(f"exit code {rc}")
print()

print("== verify: the invariant battery as a machine-readable report ==")
with contextlib.redirect_stdout(io.StringIO()):  # report also goes to stdout
    rc = main(["verify", "--seed", "7", "--out", str(out / "report.json")])
report = json.loads((out / "report.json").read_text())
print(f"exit code {rc}, all_pass {report['all_pass']}, "
      f"{report['n_scenarios']} scenarios")
print()

print("== error handling ==")
quiet = io.StringIO()
with contextlib.redirect_stderr(quiet):
    rc = main(["region", "--h11", "1", "--rk", "1"])  # channel left undefined
print(f"missing channel:     exit {rc} (configuration error)")
with contextlib.redirect_stderr(quiet):
    rc = main(["region", *channel, "--rk", "-1"])
print(f"negative key rate:   exit {rc} (domain error)")
print("messages on stderr:", ", ".join(
    line for line in quiet.getvalue().splitlines() if line))
print()
print(f"everything written under {out}")
