"""Drive the command-line interface in process.

Everything here is also reachable as `gf2synth <subcommand>` (or
`python3 -m gf2synth`) from a shell.
"""
import tempfile
from pathlib import Path

from gf2synth.cli import main

print("== params: which representations exist for a degree ==")
main(["params", "-m", "10"])
print()
rc = main(["params", "-m", "8"])
print(f"(exit {rc}: no representation at m=8)")

print("\n== synth: netlist plus resource summary ==")
with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp) / "selfmult.qc"
    main(["synth", "selfmult", "-m", "5", "--rep", "gnb", "-r", "1", "--out", str(out)])
    print("\nnetlist head:")
    for line in out.read_text().splitlines()[:10]:
        print(" ", line)

    print("\n== verify: exhaustive check against the field oracle ==")
    rc = main(["verify", "selfmult", "-m", "5", "--rep", "gnb", "-r", "1",
               "--in", str(out)])
    assert rc == 0

print("\n== verify: seeded random sampling for a large degree ==")
rc = main(["verify", "mult", "-m", "163", "--rep", "gnb", "--random", "20"])
assert rc == 0

print("\n== table: measured costs next to the closed-form bounds ==")
main(["table", "-m", "4,5,7,10"])
