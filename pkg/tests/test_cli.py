from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from ababfree.cli import run

TRIANGLE = '{"vertices":["a","b","c"],"edges":[[0,1],[1,2],[0,2]]}'
CROSSING = '{"vertices":["0","1","2","3"],"edges":[[0,2],[1,3]]}'
SMALL = '{"vertices":["a","b","c","d"],"edges":[[0,1,3],[1,2]]}'


def call(argv, stdin=""):
    return run(argv, io.StringIO(stdin))


def test_color3_triangle():
    assert call(["color3"], TRIANGLE) == (0, '{"colors":[0,1,2],"palette":3}\n', "")


def test_check_free_violation():
    code, out, _ = call(["check-free", "--l", "2"], CROSSING)
    assert code == 2
    assert json.loads(out)["witness"] == [0, 1, 2, 3]
    assert call(["check-free", "--l", "2.5"], CROSSING)[0] == 0


def test_gen_hc_oracle_color():
    _, k4, _ = call(["gen-hc", "--c", "3", "--m", "2"])
    assert call(["oracle-color", "--c", "3"], k4) == (2, '"none"\n', "")
    code, out, _ = call(["oracle-color", "--c", "4"], k4)
    assert code == 0 and json.loads(out)["colors"] == [0, 1, 2, 3]


@pytest.mark.parametrize("argv", [["gen-hc", "--c", "2", "--m", "3"], ["gen-hc", "--c", "3", "--m", "3"], ["gen-tree", "--a", "3", "--b", "4"]])
def test_generated_hypergraphs_are_ababa_free(argv):
    _, h, _ = call(argv)
    assert call(["check-free", "--l", "2.5"], h)[0] == 0


def test_find_order():
    code, out, _ = call(["find-order", "--l", "2"], CROSSING)
    assert code == 0 and json.loads(out) == {"order": [0, 1, 3, 2]}
    code, out, _ = call(["find-order", "--l", "2", "--reorder"], CROSSING)
    assert call(["check-free", "--l", "2"], out)[0] == 0


def test_color3_verify_input_and_failure():
    code, out, _ = call(["color3", "--verify-input"], CROSSING)
    assert code == 2 and json.loads(out)["witness"] == [0, 1, 2, 3]
    code, out, _ = call(["color3"], CROSSING)
    assert code == 2 and "not ABAB-free" in json.loads(out)["error"]


def test_curve_pipeline():
    code, curves, _ = call(["realize"], SMALL)
    assert code == 0
    assert json.loads(call(["from-curves"], curves)[1]) == json.loads(SMALL)
    _, even, _ = call(["evenize"], curves)
    assert json.loads(call(["from-curves"], even)[1]) == json.loads(SMALL)
    code, polys, _ = call(["compactify"], even)
    assert code == 0
    doc = json.loads(polys)
    assert len(doc["polygons"]) == 2 and doc["stab"] == ["0", "15/2"]
    code, svg, _ = call(["render"], polys)
    assert code == 0 and svg.startswith("<?xml")


def test_compactify_rejects_odd_family():
    _, curves, _ = call(["realize"], '{"vertices":["a","b"],"edges":[[0],[1]]}')
    code, _, err = call(["compactify"], curves)
    assert code == 1 and "evenize" in err


def test_disk_pipeline():
    code, disks, _ = call(["enum-disks", "--random", "7", "--seed", "5", "--emit-disks"])
    assert code == 0
    _, h1, _ = call(["from-disks"], disks)
    _, h2, _ = call(["enum-disks", "--random", "7", "--seed", "5"])
    assert h1 == h2
    _, col, _ = call(["color3", "--attach"], h2)
    assert call(["verify"], col)[0] == 0


def test_verify_detects_bad_coloring(tmp_path):
    f = tmp_path / "h.json"
    f.write_text(TRIANGLE)
    code, out, _ = call(["verify", "--hypergraph", str(f)], '{"colors":[0,0,1]}')
    assert code == 2 and json.loads(out)["monochromatic"] == [[0, 1]]
    code, out, _ = call(["verify", "--hypergraph", str(f), "--max-colors", "2"], '{"colors":[0,1,2]}')
    assert code == 2


def test_render_with_colors(tmp_path):
    _, curves, _ = call(["realize"], SMALL)
    f = tmp_path / "c.json"
    f.write_text(call(["color3"], SMALL)[1])
    code, svg, _ = call(["render", "--colors", str(f)], curves)
    assert code == 0 and "#e41a1c" in svg


def test_files_in_and_out(tmp_path):
    src, dst = tmp_path / "in.json", tmp_path / "out.json"
    src.write_text(TRIANGLE)
    assert call(["color3", "-i", str(src), "-o", str(dst)]) == (0, "", "")
    assert json.loads(dst.read_text())["palette"] == 3


@pytest.mark.parametrize(
    "argv, stdin, fragment",
    [
        (["color3"], '{"vertices":["a"],"edges":[[]]}', "empty hyperedge"),
        (["color3"], "{", "malformed JSON"),
        (["color3", "-i", "/nonexistent/x.json"], "", "cannot read"),
        (["oracle-color", "--c", "2"], json.dumps({"vertices": [str(i) for i in range(40)], "edges": []}), "too large"),
        (["gen-hc", "--c", "6", "--m", "3"], "", "vertices"),
        (["from-disks"], '{"points":[],"disks":[]}', "stab"),
        (["enum-disks", "--random", "30"], "", "limited"),
    ],
)
def test_errors_exit_one(argv, stdin, fragment):
    code, out, err = call(argv, stdin)
    assert code == 1 and out == ""
    assert fragment in err and err.count("\n") == 1


def test_usage_errors_exit_one():
    assert call(["bogus"])[0] == 1
    assert call(["color3", "--nope"])[0] == 1
    assert call(["check-free", "--l", "1/3"], TRIANGLE)[0] == 1


def test_console_script_pipeline():
    exe = [sys.executable, "-m", "ababfree.cli"]
    gen = subprocess.run(exe + ["enum-disks", "--random", "6", "--seed", "1"], capture_output=True, text=True, check=True)
    col = subprocess.run(exe + ["color3", "--attach"], input=gen.stdout, capture_output=True, text=True, check=True)
    ver = subprocess.run(exe + ["verify"], input=col.stdout, capture_output=True, text=True)
    assert ver.returncode == 0
