import io
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from hpdcalc.cli import render_grid, run
from hpdcalc.hpd_engine import (
    CATALOG,
    SODReport,
    example_catalog,
    generation_schedule,
    hpd2_decomposition,
    mutation_walkthrough,
)

GOLDEN = Path(__file__).parent / "golden"
REGEN = os.environ.get("HPDCALC_REGEN_GOLDEN") == "1"

CATALOG_ARGS = {
    "quadric_even_n1": ["example", "--name", "quadric_even", "--n", "1"],
    "quadric_even_n2": ["example", "--name", "quadric_even", "--n", "2"],
    "quadric_even_n3": ["example", "--name", "quadric_even", "--n", "3"],
    "cubic_fourfold": ["example", "--name", "cubic_fourfold"],
    "grassmannian_lefschetz_n3": ["example", "--name", "grassmannian_lefschetz", "--n", "3"],
    "two_cubics_pencil": ["example", "--name", "two_cubics_pencil"],
    "hpd2_m5_d3_ell4": ["hpd2", "--m", "5", "--d", "3", "--ell", "4"],
    "walk_i3_ell3": ["walk", "--i", "3", "--ell", "3"],
}


def call(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


GOLDEN_CASES = [
    (stem, fmt)
    for stem in sorted(CATALOG_ARGS)
    for fmt in ("json", "ascii", "tsv")
    if not (stem.startswith("walk") and fmt == "tsv")  # no block table
]


@pytest.mark.parametrize("stem,fmt", GOLDEN_CASES)
def test_golden(stem, fmt):
    code, text, _ = call(CATALOG_ARGS[stem] + ["--format", fmt])
    path = GOLDEN / f"{stem}.{fmt}"
    if REGEN:
        path.write_text(text, encoding="utf-8")
    assert code == 0
    assert text == path.read_text(encoding="utf-8")


def test_every_catalog_entry_has_golden():
    covered = {args[2] for args in CATALOG_ARGS.values() if args[0] == "example"}
    assert covered == set(CATALOG)


def test_golden_json_values():
    def hpd_rank(stem):
        rep = json.loads((GOLDEN / f"{stem}.json").read_text())
        return next(b["rank"] for b in rep["blocks"] if b["label"] == "HPD_CATEGORY")

    assert hpd_rank("cubic_fourfold") == 24
    assert [hpd_rank(f"quadric_even_n{n}") for n in (1, 2, 3)] == [2, 2, 2]
    assert hpd_rank("two_cubics_pencil") == -144


def test_json_round_trip():
    for name in CATALOG:
        code, text, _ = call(["example", "--name", name])
        assert code == 0
        data = json.loads(text)
        assert set(data) >= {"command", "inputs", "blocks", "certificates"}
        rep = SODReport.from_dict(data)
        assert rep == example_catalog(name)


def test_hpd2_round_trip_and_schema():
    code, text, _ = call(["hpd2", "--m", "5", "--d", "3", "--ell", "1"])
    data = json.loads(text)
    assert code == 0
    assert [(b["label"], b["rank"]) for b in data["blocks"]] == [("HPD_CATEGORY", 24), ("LEFSCHETZ_BLOCK", 3)]
    assert all(set(c) == {"name", "lhs", "rhs", "pass"} for c in data["certificates"])
    assert SODReport.from_dict(data) == hpd2_decomposition(5, 3, 1)


def test_deterministic_in_subprocess():
    argv = [sys.executable, "-m", "hpdcalc.cli", "walk", "--i", "3", "--ell", "4", "--format", "svg"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first.startswith(b"<svg")


def test_exit_codes():
    assert call(["cohom", "--n", "3", "--p", "2", "--k", "2"])[0] == 0
    assert json.loads(call(["cohom", "--n", "3", "--p", "2", "--k", "2"])[1])["table"] == {}
    code, _, err = call(["hpd1", "--m", "2", "--d", "1", "--ell", "5"])
    assert code == 2 and "usage:" in err
    assert call(["gram", "--n", "1", "--twists", "1,0"])[0] == 1
    assert call(["hpd2", "--m", "5"])[0] == 2
    assert call(["frobnicate"])[0] == 2
    assert call(["hpd2", "--m", "5", "--d", "3", "--ell", "1", "--sweep", "bogus"])[0] == 2


def test_exit_code_matches_certificates():
    for argv in (["gram", "--n", "2", "--twists", "0,3"], ["mutate", "--n", "2", "--twists", "0,1", "--t", "1"],
                 ["ext", "--m", "2", "--d", "1", "--ell", "2", "--from", "0,0", "--to", "0,0"],
                 ["chi", "--dims", "5", "--degree", "3"]):
        code, text, _ = call(argv)
        assert code == (0 if all(c["pass"] for c in json.loads(text)["certificates"]) else 1)


def test_other_commands():
    _, text, _ = call(["chi", "--dims", "5", "--degree", "3", "--degree", "3"])
    assert json.loads(text)["chi"] == -144
    _, text, _ = call(["mutate", "--n", "1", "--twists", "0,1", "--t", "1"])
    mutated = json.loads(text)["collection"]
    assert mutated[0]["terms"] == [[[0], -2], [[1], 1]]
    assert mutated[1]["class"] == "[O(0)]"
    _, text, _ = call(["ext", "--m", "3", "--d", "2", "--ell", "2", "--from", "2,0", "--to", "0,0"])
    assert json.loads(text)["table"] == {}
    _, text, _ = call(["gram", "--dims", "1,1", "--twists", "0,0;1,1"])
    assert json.loads(text)["gram"] == [[1, 4], [0, 1]]


def test_tsv_flattens_blocks_only():
    _, text, _ = call(["hpd2", "--m", "5", "--d", "3", "--ell", "1", "--format", "tsv"])
    assert text == "label\talpha\tbeta\trank\nHPD_CATEGORY\t\t\t24\nLEFSCHETZ_BLOCK\t1\t0\t3\n"


def test_grid_layout():
    text = render_grid(hpd2_decomposition(5, 3, 4))
    rows = text.splitlines()
    assert rows[0].split("|")[1].split() == ["0", "‖", "1", "2", "3"]
    assert rows[2].startswith("     0 |") and rows[3].startswith("     1 |")
    assert render_grid(hpd2_decomposition(5, 3, 4)) == text


def test_degenerate_grid_has_no_divider():
    text = render_grid(hpd2_decomposition(5, 6, 1))
    assert "‖" not in text
    assert text.splitlines()[2].split("|")[1].split() == ["."]


def test_walkthrough_and_schedule_grids():
    text = render_grid(mutation_walkthrough(3, 3))
    assert text.count("stage ") == 2 and "final support" in text
    sched = render_grid(generation_schedule(2, 4, 3))
    cells = [row.split("|")[1].split() for row in sched.splitlines() if "|" in row][1:]
    assert cells == [[".", "‖", ".", ".", "."], [".", "‖", ".", ".", "d1"], ["1", "‖", ".", ".", "."]]


def test_grid_rejects_reports_without_grid():
    with pytest.raises(ValueError):
        render_grid(example_catalog("grassmannian_lefschetz"))
    with pytest.raises(ValueError):
        render_grid(hpd2_decomposition(5, 3, 2), "png")


def test_svg_output():
    code, text, _ = call(["hpd2", "--m", "5", "--d", "3", "--ell", "4", "--format", "svg"])
    assert code == 0
    assert text.startswith("<svg") and text.rstrip().endswith("</svg>")


def test_sweep_is_ordered_and_merged():
    code, text, _ = call(["hpd2", "--m", "5", "--d", "3", "--ell", "1", "--sweep", "ell=1:4"])
    reports = json.loads(text)
    assert code == 0
    assert [r["inputs"]["ell"] for r in reports] == [1, 2, 3, 4]
    assert reports[1] == json.loads(call(["hpd2", "--m", "5", "--d", "3", "--ell", "2"])[1])


def test_sweep_with_failure_propagates_exit():
    code, _, _ = call(["hpd2", "--m", "5", "--d", "3", "--ell", "1", "--sweep", "ell=1:6"])
    assert code == 2


def test_out_file(tmp_path):
    target = tmp_path / "report.json"
    code, text, _ = call(["example", "--name", "cubic_fourfold", "--out", str(target)])
    assert code == 0 and text == ""
    assert json.loads(target.read_text(encoding="utf-8"))["command"] == "example"
