import os

import pytest

from defram.cli import main
from defram.generate import DefectParams, SearchParams, run_ramsey
from defram.graph import cycle_graph, to_graph6
from defram.recognition import GraphClass


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ramsey_small_cell(capsys):
    code, out, _ = run_cli(
        capsys, "ramsey", "--class", "perfect", "-k", "1", "-i", "4", "-j", "4"
    )
    assert code == 0
    assert "R_1^perfect(4,4) = 6" in out
    assert "extremal: 1 graphs" in out


def test_ramsey_writes_output_file(capsys, tmp_path):
    out_file = tmp_path / "extremal.g6"
    code, _, _ = run_cli(
        capsys, "ramsey", "--class", "bipartite", "-k", "2", "-i", "5",
        "-j", "5", "--out", str(out_file),
    )
    assert code == 0
    lines = out_file.read_text().splitlines()
    assert len(lines) == 4


def test_ramsey_usage_error(capsys):
    # j below k + 2 is a contract violation
    code, _, err = run_cli(
        capsys, "ramsey", "--class", "perfect", "-k", "2", "-i", "5", "-j", "3"
    )
    assert code == 2
    assert "error" in err


def test_ramsey_bad_class_exits_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["ramsey", "--class", "planar", "-k", "1", "-i", "4", "-j", "4"])
    assert info.value.code == 2


def test_ramsey_checkpoint_and_resume(capsys, tmp_path):
    ckdir = str(tmp_path)
    code, out, _ = run_cli(
        capsys, "ramsey", "--class", "perfect", "-k", "1", "-i", "4",
        "-j", "4", "--checkpoint", ckdir, "--stop-order", "4",
    )
    assert code == 0
    files = sorted(os.listdir(ckdir))
    assert files
    seed = os.path.join(ckdir, files[-1])
    code, out, _ = run_cli(
        capsys, "ramsey", "--class", "perfect", "-k", "1", "-i", "4",
        "-j", "4", "--seed", seed,
    )
    assert code == 0
    assert "R_1^perfect(4,4) = 6" in out


def test_cocolor_formula(capsys):
    code, out, _ = run_cli(
        capsys, "cocolor", "--class", "cograph", "-k", "0", "-m", "2"
    )
    assert code == 0
    assert "c = 5" in out


def test_cocolor_search_prints_witnesses(capsys):
    code, out, _ = run_cli(
        capsys, "cocolor", "--class", "cograph", "-k", "0", "-m", "2",
        "--long-run",
    )
    assert code == 0
    assert "c = 5" in out
    assert "witness " in out


def test_cocolor_upper_bound(capsys):
    code, out, _ = run_cli(
        capsys, "cocolor", "--class", "perfect", "-k", "2", "-m", "2",
        "--upper-bound",
    )
    assert code == 0
    assert "c[k=2][m=2][class=perfect] <= 11" in out


def test_cocolor_upper_bound_bipartite_rejected(capsys):
    code, _, err = run_cli(
        capsys, "cocolor", "--class", "bipartite", "-k", "1", "-m", "2",
        "--upper-bound",
    )
    assert code == 2
    assert "error" in err


def test_verify_round_trip(capsys, tmp_path):
    r = run_ramsey(SearchParams(GraphClass.PERFECT, DefectParams(1, 4, 5)))
    path = tmp_path / "graphs.g6"
    path.write_text("".join(to_graph6(g) + "\n" for g in r.extremal))
    code, out, _ = run_cli(
        capsys, "verify", "--class", "perfect", "-k", "1", "-i", "4",
        "-j", "5", str(path),
    )
    assert code == 0
    assert "2/2 graphs verified" in out


def test_verify_rejects_c5_as_chordal(capsys, tmp_path):
    path = tmp_path / "c5.g6"
    path.write_text(to_graph6(cycle_graph(5)) + "\n")
    code, out, _ = run_cli(
        capsys, "verify", "--class", "chordal", "-k", "1", "-i", "3",
        "-j", "3", str(path),
    )
    assert code == 1
    assert "FAIL" in out


def test_verify_non_cocolorable(capsys, tmp_path):
    from defram.cocolor import disjoint_cliques
    path = tmp_path / "w.g6"
    path.write_text(to_graph6(disjoint_cliques(2)) + "\n")
    code, out, _ = run_cli(
        capsys, "verify", "--class", "perfect", "-k", "0", "-m", "2",
        str(path),
    )
    assert code == 0  # not 2-cocolorable, as claimed
    code, out, _ = run_cli(
        capsys, "verify", "--class", "perfect", "-k", "0", "-m", "3",
        str(path),
    )
    assert code == 1  # it is 3-cocolorable, so the witness claim fails


def test_tables_only_filter(capsys):
    code, out, _ = run_cli(
        capsys, "tables", "--only", "perfect k=1 i=3",
    )
    assert code == 0
    assert "PASS" in out and "FAIL" not in out


def test_convert(capsys, tmp_path):
    path = tmp_path / "g.g6"
    path.write_text(to_graph6(cycle_graph(4)) + "\n")
    code, out, _ = run_cli(capsys, "convert", str(path))
    assert code == 0
    assert "n=4" in out
