import io
import json

import pytest

from signedcolor import build_graph, signatures_equivalent
from signedcolor.cli import main
from signedcolor.formats import coloring_from_dict, coloring_to_dict, to_dot
from signedcolor.generators import fat_triangle

FAT1 = "e a b -\ne b c -\ne c a -\n"
K4 = "".join(f"e {u} {v} +\n" for u, v in ["ab", "ac", "ad", "bc", "bd", "cd"])
NEG_TRIANGLE = "e a b +\ne b c +\ne c a -\n"


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_chi_fat_triangle(write):
    code, out, _ = run("chi", write("fat.sg", FAT1))
    assert code == 0
    doc = json.loads(out)
    assert doc["chi"] == 3 and doc["witness"]["palette"] == {"t": 1, "k": 1}


def test_color_koenig_k4(write):
    code, out, _ = run("color", "--method", "koenig", write("k4.sg", K4))
    assert code == 0
    doc = json.loads(out)
    assert doc["colors"] == 3 and doc["method"] == "koenig"


def test_color_auto_picks_method(write):
    assert json.loads(run("color", write("k4.sg", K4))[1])["method"] == "koenig"
    assert json.loads(run("color", write("f.sg", FAT1))[1])["method"] == "shannon"


def test_color_output_is_byte_stable(write):
    path = write("f.sg", FAT1 * 2)
    assert run("color", path)[1] == run("color", path)[1]


def test_color_then_verify(write, tmp_path):
    g = write("f.sg", FAT1 + "e a d +\n")
    code, out, _ = run("color", "--method", "shannon", g)
    assert code == 0
    c = write("col.json", out)
    code, out, _ = run("verify", g, c)
    assert code == 0 and json.loads(out)["valid"]


def test_verify_rejects_bad_coloring(write):
    g = write("g.sg", "e a b +\ne b c +\n")
    doc = {"palette": {"t": 0, "k": 1}, "edges": [
        {"id": 0, "u": "a", "v": "b", "halves": ["+s_1", "-s_1"]},
        {"id": 1, "u": "b", "v": "c", "halves": ["-s_1", "+s_1"]},
    ]}
    code, out, _ = run("verify", g, write("c.json", json.dumps(doc)))
    assert code == 1
    assert not json.loads(out)["valid"]


def test_verify_rejects_inequivalent_signature(write):
    g = write("g.sg", NEG_TRIANGLE)
    doc = {"palette": {"t": 0, "k": 1}, "signature": {"0": 1, "1": 1, "2": 1}, "edges": [
        {"id": i, "u": "x", "v": "y", "halves": ["+s_1", "-s_1"]} for i in range(3)
    ]}
    code, out, _ = run("verify", g, write("c.json", json.dumps(doc)))
    assert code == 1 and "equivalent" in out


def test_verify_malformed_and_out_of_palette(write):
    g = write("g.sg", "e a b -\n")
    assert run("verify", g, write("x.json", "{not json"))[0] == 2
    assert run("verify", g, write("y.json", json.dumps({"edges": []})))[0] == 2
    doc = {"palette": {"t": 0, "k": 1}, "edges": [{"id": 0, "u": "a", "v": "b", "halves": ["+s_2", "+s_2"]}]}
    code, out, _ = run("verify", g, write("z.json", json.dumps(doc)))
    assert code == 1 and "outside" in out


def test_dot_export(write, tmp_path):
    dot = tmp_path / "out.dot"
    code, _, _ = run("color", write("f.sg", FAT1), "--dot", str(dot))
    assert code == 0
    text = dot.read_text()
    assert text.startswith("graph G {") and text.count("style=dashed") == 3


def test_layers(write):
    code, out, _ = run("layers", write("k4.sg", K4))
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 2
    ids = sorted(int(x) for line in lines for x in line.split())
    assert ids == list(range(6))


def test_balance(write):
    code, out, _ = run("balance", write("t.sg", NEG_TRIANGLE))
    assert code == 0
    first, rest = out.split("\n", 1)
    assert first == "unbalanced"
    assert sorted(json.loads(rest)["circuit"]["edges"]) == [0, 1, 2]
    code, out, _ = run("balance", write("k4.sg", K4))
    assert out.startswith("balanced\n")


def test_equiv(write):
    a = write("a.sg", "e a b +\ne b c +\ne c a -\n")
    b = write("b.sg", "e a b -\ne b c +\ne c a +\n")
    c = write("c.sg", "e a b +\ne b c +\ne c a +\n")
    assert run("equiv", a, b)[1] == "equivalent\n"
    assert run("equiv", a, c)[1] == "not equivalent\n"
    d = write("d.sg", "e a b +\ne b d +\ne d a -\n")
    assert run("equiv", a, d)[0] == 1


def test_resign_at(write, tmp_path):
    g = write("k4.sg", K4)
    out_path = tmp_path / "r.sg"
    code, _, _ = run("resign", g, "--at", "a", "-o", str(out_path))
    assert code == 0
    H = build_graph(out_path.read_text())
    assert H.negative_edges() == frozenset({0, 1, 2})


def test_resign_random_is_seeded(write):
    g = write("k4.sg", K4)
    one = run("resign", g, "--random", "--seed", "4")[1]
    assert one == run("resign", g, "--random", "--seed", "4")[1]
    G = build_graph(K4)
    assert signatures_equivalent(G, G.signature(), build_graph(one).signature())


def test_exit_codes(write):
    assert run("color", write("l.sg", "e a a -\n"))[0] == 1
    code, _, err = run("color", "--method", "koenig", write("t.sg", NEG_TRIANGLE))
    assert code == 1 and "balanced" in err
    assert run("chi", write("bad.sg", "e a b ?\n"))[0] == 2
    assert run("chi", "/nonexistent/file.sg")[0] == 2
    assert run("resign", write("k.sg", K4), "--at", "zz")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("color")[0] == 2
    big = write("big.sg", "".join(f"e a b -\n" for _ in range(17)))
    assert run("chi", big)[0] == 1


def test_negative_loop_message(write):
    code, _, err = run("chi", write("l.sg", "e a b +\ne a a -\n"))
    assert code == 1 and "negative loop" in err


def test_json_round_trip():
    from signedcolor import shannon_color

    G = fat_triangle(2)
    col = shannon_color(G).coloring
    back = coloring_from_dict(json.loads(json.dumps(coloring_to_dict(G, col))))
    assert back.palette == col.palette and back.halves == col.halves


def test_dot_without_coloring():
    text = to_dot(build_graph("e a b -\ne b c +"))
    assert 'label="0"' in text and text.count("dashed") == 1
