"""Rewrite tests/golden/ from the current CLI output.

Run only after a deliberate output change, then review the diff by hand.
"""
import io
from pathlib import Path

from cp2arr.cli import run

ROOT = Path(__file__).resolve().parents[1]
DATA = ROOT / "tests" / "data"
GOLDEN = ROOT / "tests" / "golden"

FILES = ["pencil5", "nearpencil4", "triangle", "generic4", "cased_23", "cased_32"]
COMMANDS = {"lattice": [], "poincare": [], "classify": [], "blowup": ["--dot"]}
PAIRS = [
    ("cased_23", "cased_32"),
    ("pencil5", "nearpencil4"),
    ("triangle", "generic4"),
    ("nearpencil4", "generic4"),
    ("generic4", "generic4"),
]


def golden_cases():
    for name in FILES:
        for cmd, extra in COMMANDS.items():
            yield f"{cmd}_{name}", [cmd, str(DATA / f"{name}.arr"), *extra]
        yield f"json_{name}", ["--json", "lattice", str(DATA / f"{name}.arr")]
    for a, b in PAIRS:
        yield f"compare_{a}_{b}", ["compare", str(DATA / f"{a}.arr"), str(DATA / f"{b}.arr")]


def capture(argv):
    out = io.StringIO()
    code = run(argv, out=out)
    return code, out.getvalue()


if __name__ == "__main__":
    GOLDEN.mkdir(exist_ok=True)
    for key, argv in golden_cases():
        code, text = capture(argv)
        (GOLDEN / f"{key}.txt").write_text(text, encoding="utf-8")
        print(f"{key}: exit {code}")
