"""Instance files and the command line, driven from Python."""

import tempfile
from pathlib import Path

from onepmaxcut import GenParams, gen_one_planar, parse_instance, serialize_instance
from onepmaxcut.cli import main

inst = gen_one_planar(GenParams(nodes=8, crossings=2, weight_lo=-3, weight_hi=3, seed=2))
text = serialize_instance(inst, comments=("two crossings on eight nodes",))
print(text)
assert parse_instance(text) == inst.canonical()

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "inst.txt"
    path.write_text(text)
    for argv in (["validate", path], ["solve", path, "--stats"], ["solve", path, "--json"], ["oracle", path]):
        print("$ onepmaxcut", *argv)
        code = main([str(a) for a in argv])
        print(f"(exit {code})\n")

    bad = Path(tmp) / "bad.txt"
    bad.write_text("p onep 3 1 0\ne 1 4 2\n")
    print("$ onepmaxcut validate bad.txt")
    print(f"(exit {main(['validate', str(bad)])})")
