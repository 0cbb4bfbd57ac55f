import argparse
import io
import json
from pathlib import Path

import pytest

from frameless import cli
from frameless.avoidance import find_frame, find_overlap, witness_from_dict
from frameless.cli import InputError, main, parse_grid, parse_word
from frameless.coloring import parse_pbm
from frameless.grid import Grid

DATA = Path(__file__).parent / "data"


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_tm_prefix(capsys):
    assert run(capsys, "tm", "--len", "16")[:2] == (0, "0110100110010110\n")


def test_tm_two_sided(capsys):
    assert run(capsys, "tm", "--lo=-2", "--hi", "1")[:2] == (0, "1001\n")
    assert run(capsys, "tm", "--len", "2", "--extended")[:2] == (0, "1001\n")


def test_tm_usage_errors(capsys):
    code, _, err = run(capsys, "tm", "--lo", "3", "--hi", "1")
    assert code == 2 and "lo=3" in err
    assert run(capsys, "tm")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_frame_on_ermine_file(capsys):
    code, out, _ = run(capsys, "frame", str(DATA / "ermine.txt"))
    assert code == 1 and out == "m=0 n=0 p=2 q=5\n"


def test_frame_json_round_trips(capsys):
    code, out, _ = run(capsys, "frame", str(DATA / "ermine.txt"), "--json")
    doc = json.loads(out)
    assert code == 1
    assert doc == {"kind": "frame", "found": True, "m": 0, "n": 0, "p": 2, "q": 5,
                   "bounds": {"rows": [0, 2], "cols": [0, 5]}}
    grid = parse_grid((DATA / "ermine.txt").read_text())
    assert witness_from_dict(doc).holds(grid)


def test_frame_on_generated_window(capsys):
    code, out, _ = run(capsys, "frame", "--source", "additive", "--rows=-8..7", "--cols=-8..7")
    assert (code, out) == (0, "none\n")


def test_frame_stdin_and_malformed_input(capsys, monkeypatch):
    code, out, _ = run(capsys, "frame", stdin="2 2\n0 0\n0 0\n", monkeypatch=monkeypatch)
    assert (code, out) == (1, "m=0 n=0 p=1 q=1\n")
    code, _, err = run(capsys, "frame", stdin="2 2\n0 1\n1\n", monkeypatch=monkeypatch)
    assert code == 2 and "line 3" in err
    code, _, err = run(capsys, "frame", stdin="2 2\n0 1 0\n1 0\n", monkeypatch=monkeypatch)
    assert code == 2 and "line 2, column 5" in err


def test_parse_grid_errors():
    with pytest.raises(InputError) as e:
        parse_grid("two by two\n")
    assert e.value.line == 1
    with pytest.raises(InputError) as e:
        parse_grid("1 2\na b\nc d\n")
    assert e.value.line == 3
    assert parse_grid("2 3\n0 1 1\n1 1 0\n") == Grid([[0, 1, 1], [1, 1, 0]])


def test_overlap_command(capsys, monkeypatch):
    code, out, _ = run(capsys, "overlap", stdin="alfalfa\n", monkeypatch=monkeypatch)
    assert (code, out) == (1, "i=0 n=3\n")
    code, out, _ = run(capsys, "overlap", "--tm", "256")
    assert (code, out) == (0, "none\n")
    code, out, _ = run(capsys, "overlap", "--json", stdin="01101101\n", monkeypatch=monkeypatch)
    doc = json.loads(out)
    assert code == 1 and doc["kind"] == "overlap" and doc["bounds"] == {"length": 8}
    assert witness_from_dict(doc) == find_overlap("01101101")
    assert witness_from_dict(doc).holds("01101101")


def test_parse_word_errors():
    with pytest.raises(InputError) as e:
        parse_word("01 10\n")
    assert (e.value.line, e.value.column) == (1, 3)
    with pytest.raises(InputError) as e:
        parse_word("0110\n1001\n")
    assert e.value.line == 2


def test_color_text(capsys):
    code, out, _ = run(capsys, "color", "--source", "additive", "--rows", "0..3", "--cols", "0..3",
                       "--format", "text")
    assert code == 0 and out == "0 1 1 0\n1 1 0 1\n1 0 1 0\n0 1 0 0\n"


def test_color_pbm_matches_golden(capsys, tmp_path):
    target = tmp_path / "w.pbm"
    assert main(["color", "--rows", "0..15", "--cols", "0..15", "--format", "pbm", "-o", str(target)]) == 0
    assert target.read_bytes() == (DATA / "additive_16x16.pbm").read_bytes()


def test_color_domain_error(capsys):
    code, _, err = run(capsys, "color", "--source", "additive-quarter", "--rows=-1..2", "--cols", "0..2")
    assert code == 2 and "i, j >= 0" in err


def test_morph(capsys):
    code, out, _ = run(capsys, "morph", "--steps", "2")
    assert code == 0 and out == "0 1 3 0\n1 3 0 3\n3 0 3 2\n0 3 2 0\n"
    code, out, _ = run(capsys, "morph", "--steps", "1", "--square", "--seed", "3")
    assert out.split("\n")[:4] == ["3 2 0 3", "2 0 3 0", "0 3 0 1", "3 0 1 3"]
    code, out, _ = run(capsys, "morph", "--steps", "1", "--quadrant", "--coded")
    assert out.split("\n")[0] == "0 1 1 0 1 0 0 1"
    assert run(capsys, "morph", "--format", "pbm")[0] == 2


def test_morph_pbm(capsysbinary):
    assert main(["morph", "--steps", "4", "--coded", "--format", "pbm"]) == 0
    g = parse_pbm(capsysbinary.readouterr().out)
    assert g.rows == g.cols == 16 and find_frame(g) is None


def test_verify_commands(capsys):
    code, out, _ = run(capsys, "verify", "overlap", "--i-max", "200", "--n-max", "100")
    assert code == 0 and out.startswith("pass\nnone\nbounds ")
    code, out, _ = run(capsys, "verify", "frameless", "--m=-8..7", "--n=-8..7", "--p-max", "4",
                       "--q-max", "4", "--source", "additive", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["outcome"] == "pass" and doc["found"] is False
    assert doc["bounds"] == {"m": [-8, 7], "n": [-8, 7], "p": [1, 4], "q": [1, 4]}
    code, out, _ = run(capsys, "verify", "reduction", "--x=-64..63", "--p-max", "16")
    assert code == 0 and out.startswith("pass")


@pytest.mark.parametrize("argv", [
    ["tm", "--len", "100"],
    ["color", "--rows=-5..5", "--cols", "0..40", "--format", "pbm"],
    ["morph", "--steps", "3", "--quadrant"],
])
def test_generation_is_deterministic(capfdbinary, argv):
    outputs = []
    for _ in range(2):
        assert main(argv) == 0
        outputs.append(capfdbinary.readouterr().out)
    assert outputs[0] == outputs[1] and outputs[0]


def test_range_parser():
    assert cli.parse_range("-3..4") == (-3, 4)
    assert cli.parse_range("7") == (7, 7)
    with pytest.raises(argparse.ArgumentTypeError):
        cli.parse_range("4..3")
