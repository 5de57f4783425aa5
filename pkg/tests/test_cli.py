"""End-to-end tests that drive main() in process."""
import json

import pytest

from matchkit.cli import PatternSpec, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_pattern_spec_parsing():
    assert PatternSpec.parse("132").label == "132"
    assert PatternSpec.parse("C4").label == "C4"
    assert PatternSpec.parse("Cfam").label == "Cfam"
    with pytest.raises(ValueError):
        PatternSpec.parse("xyz")
    with pytest.raises(ValueError):
        PatternSpec.parse("")


def test_pattern_spec_from_file(tmp_path):
    f = tmp_path / "pat.txt"
    f.write_text("1-3,2-4\n")
    spec = PatternSpec.parse(f"file:{f}")
    assert spec.patterns[0].size == 2


def test_count_plain_lists_bases(capsys):
    code, out, _ = run(capsys, "count", "--size", "2", "--pattern", "132")
    assert code == 0
    assert out.splitlines() == ["0011\t2", "0101\t1", "total\t3"]


def test_count_single_base_prints_bare_number(capsys):
    code, out, _ = run(
        capsys, "count", "-m", "3", "--pattern", "123", "--base", "000111"
    )
    assert code == 0
    assert out.strip() == "5"


def test_count_csv(capsys):
    code, out, _ = run(capsys, "count", "--size", "3", "--pattern", "231",
                       "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "m,w,pattern_set,count"
    assert "3,000111,231,5" in lines


def test_count_json(capsys):
    code, out, _ = run(capsys, "count", "--size", "3", "--pattern", "132",
                       "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["schema_version"] == "1"
    assert obj["totals"] == {"132": 14}


def test_count_combined_patterns(capsys):
    code, out, _ = run(capsys, "count", "--size", "4", "--pattern", "132",
                       "--pattern", "123", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert "132+123" in obj["totals"]


def test_enumerate_bases(capsys):
    code, out, _ = run(capsys, "enumerate", "bases", "--size", "3")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5
    assert lines[0] == "000111"
    assert lines == sorted(lines)


def test_enumerate_matchings(capsys):
    code, out, _ = run(capsys, "enumerate", "matchings", "--base", "0011")
    assert code == 0
    assert sorted(out.splitlines()) == ["1-3,2-4", "1-4,2-3"]


def test_enumerate_matchings_filtered(capsys):
    code, out, _ = run(capsys, "enumerate", "matchings", "--base", "000111",
                       "--pattern", "123")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5
    assert "1-4,2-5,3-6" not in lines  # the triple crossing is the one hit


def test_enumerate_noncrossing(capsys):
    code, out, _ = run(capsys, "enumerate", "noncrossing", "--base", "001011")
    assert code == 0
    lines = out.splitlines()
    assert sorted(lines) == ["001011", "001101", "010011", "010101"]


def test_enumerate_missing_argument(capsys):
    code, _, err = run(capsys, "enumerate", "matchings")
    assert code == 2
    assert "needs --base" in err


def test_classify_plain(capsys):
    code, out, _ = run(capsys, "classify", "--a", "132", "--b", "123",
                       "--max-size", "4")
    assert code == 0
    assert "verdict (sizes up to 4): A-strictly-below" in out
    assert "witness A<B: m=4" in out


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--a", "132", "--b", "213",
                       "--max-size", "4", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["tag"] == "equal-everywhere"
    assert obj["a"] == "132"


def test_tree_writes_dot_and_phi(capsys, tmp_path):
    dot = tmp_path / "t.dot"
    phi_json = tmp_path / "phi.json"
    code, out, _ = run(capsys, "tree", "--base", "000111", "--kind", "TM",
                       "--out", str(dot), "--phi-out", str(phi_json))
    assert code == 0
    assert out.splitlines()[0] == "leaves\t5"
    assert dot.read_text().startswith("digraph")
    obj = json.loads(phi_json.read_text())
    assert len(obj["pairs"]) == 5
    assert {"avoider_132", "avoider_chain"} <= obj["pairs"][0].keys()


def test_bijection_forward(capsys):
    code, out, _ = run(capsys, "bijection", "--matching", "1-3,2-5,4-6")
    assert code == 0
    assert out.splitlines() == ["W\t001011", "P\t010101"]


def test_bijection_backward(capsys):
    code, out, _ = run(capsys, "bijection", "--pair", "001011", "010101")
    assert code == 0
    assert out.strip() == "1-3,2-5,4-6"


def test_bijection_svg(capsys, tmp_path):
    svg = tmp_path / "pair.svg"
    code, _, _ = run(capsys, "bijection", "--matching", "1-6,2-3,4-5",
                     "--svg", str(svg))
    assert code == 0
    assert svg.read_text().startswith("<svg ")


def test_ferrers_ascii(capsys):
    code, out, _ = run(capsys, "ferrers", "--matching", "1-4,2-6,3-5")
    assert code == 0
    assert out.splitlines()[1:] == [". X .", ". . X", "X . ."]


def test_ferrers_json(capsys):
    code, out, _ = run(capsys, "ferrers", "--matching", "1-4,2-6,3-5",
                       "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["rows_bottom_up"] == [3, 3, 3]


def test_render_matching(capsys, tmp_path):
    out_path = tmp_path / "m.svg"
    code, _, _ = run(capsys, "render", "--matching", "1-4,2-6,3-5",
                     "--out", str(out_path))
    assert code == 0
    assert 'class="arc"' in out_path.read_text()


def test_render_pair(capsys, tmp_path):
    out_path = tmp_path / "p.svg"
    code, _, _ = run(capsys, "render", "--pair", "001011", "010101",
                     "--out", str(out_path))
    assert code == 0
    assert 'class="tunnel"' in out_path.read_text()


def test_render_tree(capsys, tmp_path):
    out_path = tmp_path / "t.dot"
    code, _, _ = run(capsys, "render", "--tree", "0011", "TC",
                     "--out", str(out_path))
    assert code == 0
    assert "shape=box" in out_path.read_text()


def test_render_wrong_suffix(capsys, tmp_path):
    code, _, err = run(capsys, "render", "--matching", "1-2",
                       "--out", str(tmp_path / "m.png"))
    assert code == 2
    assert "error:" in err


def test_verify_quiet(capsys):
    code, out, _ = run(capsys, "verify", "--check", "mirror",
                       "--max-size", "3", "--quiet")
    assert code == 0
    assert "verify mirror (max size 3): PASS" in out
    assert "ok  [" not in out  # cell lines suppressed


def test_verify_prints_cells(capsys):
    code, out, _ = run(capsys, "verify", "--check", "ferrers", "--max-size", "3")
    assert code == 0
    assert "[ferrers] m=3" in out
    assert out.count("\nok") > 1


def test_bound_exceeded_exit_code(capsys):
    code, _, err = run(capsys, "count", "--size", "99", "--pattern", "132")
    assert code == 3
    assert "error:" in err


def test_bad_pattern_exit_code(capsys):
    code, _, err = run(capsys, "count", "--size", "2", "--pattern", "nope")
    assert code == 2
    assert "bad pattern spec" in err


def test_bad_base_word_exit_code(capsys):
    code, _, _ = run(capsys, "count", "--size", "2", "--pattern", "132",
                     "--base", "0110")
    assert code == 2
