import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from conftest import DATA, GOLDEN
from cp2arr.blowup import blow_up
from cp2arr.cli import emit_dot, parse_file, run
from cp2arr.corpus import standard_corpus
from cp2arr.geometry import DuplicateLine, build_arrangement
from cp2arr.lattice import build_lattice, is_pencil

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "scripts"))
from regen_goldens import golden_cases  # noqa: E402


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, text, name="a.arr"):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return str(p)


def test_parse_pencil(tmp_path):
    lat = build_lattice(parse_file(write(tmp_path, "1 0 0\n0 1 0\n1 1 0\n")))
    assert is_pencil(lat) and lat.n_lines == 3


def test_parse_duplicate_names_file_lines(tmp_path):
    path = write(tmp_path, "# dup\n1 0 0\n\n2 0 0\n")
    with pytest.raises(DuplicateLine) as exc:
        parse_file(path)
    assert (exc.value.first, exc.value.second) == (2, 4)
    code, out, err = cli("lattice", write(tmp_path, "1 0 0\n2 0 0\n"))
    assert code == 2 and out == ""
    assert "lines 1 and 2" in err and err.count("\n") == 1


def test_parse_comment_skipped(tmp_path):
    lat = build_lattice(parse_file(write(tmp_path, "# triangle\n1 0 0\n0 1 0\n0 0 1\n")))
    assert lat.multiplicities == [2, 2, 2]


@pytest.mark.parametrize("text, fragment", [
    ("1 0\n", ":1: expected 3 integers"),
    ("1 0 0\n0 x 1\n", ":2: not an integer"),
    ("0 0 0\n", ":1: the zero triple"),
    ("# nothing\n\n", "no lines"),
    ("1 0 0 # inline ok\n1 2 3 4\n", ":2: expected 3"),
])
def test_parse_errors(tmp_path, text, fragment):
    code, out, err = cli("lattice", write(tmp_path, text))
    assert code == 2 and fragment in err and err.count("\n") == 1


def test_missing_file():
    code, _, err = cli("lattice", "/nonexistent/x.arr")
    assert code == 2 and err.startswith("cp2arr: error")


@pytest.mark.parametrize("argv", [["frobnicate", "x"], ["betti", str(DATA / "triangle.arr")], ["lattice"], ["--bogus"]])
def test_usage_errors(argv, capsys):
    assert run(argv) == 2
    assert "usage" in capsys.readouterr().err


def test_betti_out_of_range():
    code, _, err = cli("betti", str(DATA / "triangle.arr"), "-k", "5")
    assert code == 2 and "outside 0..3" in err


def test_cli_examples():
    assert cli("classify", str(DATA / "nearpencil4.arr"))[:2] == (0, "NearPencil\n")
    code, out, _ = cli("compare", str(DATA / "cased_23.arr"), str(DATA / "cased_32.arr"))
    assert code == 0 and out.startswith("Isomorphic\nbijection ")
    assert cli("betti", str(DATA / "pencil5.arr"), "-k", "3")[:2] == (0, "0\n")
    assert cli("betti", str(DATA / "pencil5.arr"), "-k", "1")[:2] == (0, "5\n")


@pytest.mark.parametrize("key, argv", list(golden_cases()), ids=[k for k, _ in golden_cases()])
def test_golden(key, argv):
    code, out, _ = cli(*argv)
    assert out == (GOLDEN / f"{key}.txt").read_text(encoding="utf-8")
    if argv[0] == "compare":
        assert code == (0 if out.startswith("Isomorphic") else 1)
    else:
        assert code == 0


def test_json_round_trip_stable():
    for name in ["pencil5", "cased_23", "triangle"]:
        for argv in (["--json", "lattice"], ["--json", "blowup"]):
            _, out, _ = cli(*argv, str(DATA / f"{name}.arr"))
            data = json.loads(out)
            assert data["schema_version"] == "1"
            assert json.dumps(data, sort_keys=True, indent=2) + "\n" == out
            assert set(data) == {"schema_version", "lattice", "poincare", "class", "graph"}
            assert not _floats(data)
    _, out, _ = cli("compare", "--json", str(DATA / "cased_23.arr"), str(DATA / "cased_32.arr"))
    verdict = json.loads(out)["verdict"]
    assert verdict["outcome"] == "Isomorphic" and len(verdict["bijection"]) == 6


def _floats(obj):
    if isinstance(obj, float):
        return True
    if isinstance(obj, dict):
        return any(_floats(v) for v in obj.values())
    if isinstance(obj, list):
        return any(_floats(v) for v in obj)
    return False


def test_json_flag_position_independent():
    path = str(DATA / "cased_23.arr")
    assert cli("--json", "classify", path) == cli("classify", path, "--json")


def test_compare_self_exit_zero(tmp_path):
    for name, raw in standard_corpus().items():
        path = write(tmp_path, "".join(f"{a} {b} {c}\n" for a, b, c in raw), f"{name}.arr")
        assert cli("compare", path, path)[0] == 0


def test_roundtrip_command():
    for name in ["pencil5", "nearpencil4", "cased_23", "generic4", "triangle"]:
        assert cli("roundtrip", str(DATA / f"{name}.arr"))[:2] == (0, "roundtrip ok\n")


@pytest.mark.parametrize("family, params", [
    ("pencil", ["1"]), ("pencil", ["9"]), ("nearpencil", ["3"]), ("nearpencil", ["8"]),
    ("generic", ["1"]), ("generic", ["12"]), ("cased", ["2", "2"]), ("cased", ["5", "3"]),
])
def test_gen_files_parse(tmp_path, family, params):
    out = tmp_path / "g.arr"
    assert cli("gen", family, *params, "-o", str(out))[0] == 0
    arr = parse_file(out)
    assert arr.n == sum(int(x) for x in params) + (1 if family == "cased" else 0)


def test_gen_generic_seeded(tmp_path):
    a = cli("--seed", "4", "gen", "generic", "7")[1]
    assert a == cli("gen", "generic", "7", "--seed", "4")[1]
    arr = parse_file(write(tmp_path, a))
    assert all(len(inc) == 2 for _, inc in arr.points)


def test_gen_bad_params():
    assert cli("gen", "cased", "2")[0] == 2
    assert cli("gen", "pencil", "x")[0] == 2


def test_emit_dot_shapes():
    tri = emit_dot(blow_up(build_lattice(build_arrangement([(1, 0, 0), (0, 1, 0), (0, 0, 1)]))))
    assert tri.count("w=1") == 3 and tri.count(" -- ") == 3
    near = emit_dot(blow_up(build_lattice(build_arrangement([(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)]))))
    assert sorted(int(x.split('w=')[1].split('"')[0]) for x in near.splitlines() if "w=" in x) == [-1, 0, 0, 0, 1]
    assert near.count(" -- ") == 6
    single = emit_dot(blow_up(build_lattice(build_arrangement([(0, 0, 1)]))))
    assert single == 'graph G {\n  v0 [label="L0 line w=1"];\n}\n'


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cp2arr", "classify", str(DATA / "pencil5.arr")],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "Pencil\n"
