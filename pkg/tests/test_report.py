"""Report writer: files appear and the numbers in them are right."""
import csv

from matchkit import write_report
from matchkit.cli import main


def test_write_report_files_and_numbers(tmp_path):
    paths = write_report(3, tmp_path)
    names = [p.name for p in paths]
    assert names == ["counts.csv", "totals.csv", "counts_growth.png", "base_profile.png"]
    for p in paths:
        assert p.exists() and p.stat().st_size > 0

    with open(tmp_path / "totals.csv", newline="") as fh:
        rows = list(csv.DictReader(fh))
    by_key = {(int(r["m"]), r["pattern_set"]): int(r["count"]) for r in rows}
    assert by_key[(1, "231")] == 1
    assert by_key[(2, "231")] == 3
    assert by_key[(3, "231")] == 14
    assert by_key[(3, "132")] == 14
    assert by_key[(3, "Cfam")] == 14

    with open(tmp_path / "counts.csv", newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert {"m", "w", "pattern_set", "count"} == set(rows[0])
    cell = [r for r in rows if r["m"] == "3" and r["w"] == "000111" and r["pattern_set"] == "231"]
    assert len(cell) == 1 and cell[0]["count"] == "5"


def test_write_report_custom_patterns(tmp_path):
    from matchkit import permutational

    paths = write_report(2, tmp_path, {"only132": (permutational("132"),)})
    text = (tmp_path / "totals.csv").read_text()
    assert "only132" in text
    assert "213" not in text
    assert len(paths) == 4


def test_report_cli(tmp_path, capsys):
    out = tmp_path / "rep"
    code = main(["report", "--max-size", "2", "--out", str(out),
                 "--pattern", "132", "--pattern", "231"])
    assert code == 0
    printed = capsys.readouterr().out.splitlines()
    assert len(printed) == 4
    assert (out / "counts.csv").exists()
    assert (out / "counts_growth.png").stat().st_size > 0
