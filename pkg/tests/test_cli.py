import json
import subprocess
import sys

import pytest

from ringlat.cli import BAD_INPUT, FAILED, OK, main
from ringlat.cli.specfile import SpecError, dump_spec, parse_spec, spec_from_extension
from ringlat.corpus import NAMES, build

DIAG3 = {
    "name": "d3",
    "base_modulus": 2,
    "unit": [1, 1, 1],
    "mul": [[[1, 0, 0]], [[0, 0, 0], [0, 1, 0]], [[0, 0, 0], [0, 0, 0], [0, 0, 1]]],
}


def write(tmp_path, data, name="spec.json"):
    p = tmp_path / name
    p.write_text(data if isinstance(data, str) else json.dumps(data, indent=1))
    return str(p)


@pytest.mark.parametrize("name", NAMES)
def test_export_then_parse_round_trips(name):
    item = build(name)
    text = dump_spec(spec_from_extension(item.extension, {"node_count": 1}))
    spec = parse_spec(text)
    E = spec.extension()
    assert E.S.mul_table == item.extension.S.mul_table
    assert E.R == item.extension.R
    assert dump_spec(spec) == text


def test_analyze_reports_and_checks_expectations(tmp_path, capsys):
    good = write(tmp_path, dict(DIAG3, expected={"node_count": 5, "delta": True}))
    assert main(["analyze", good, "--assert-expected"]) == OK
    out = capsys.readouterr().out
    assert "nodes: 5" in out and "delta: true" in out and "PASS node_count" in out
    bad = write(tmp_path, dict(DIAG3, expected={"node_count": 6}), "bad.json")
    assert main(["analyze", bad, "--assert-expected"]) == FAILED
    assert main(["analyze", bad]) == OK


def test_markdown_tables_and_figure(tmp_path, capsys):
    spec = write(tmp_path, DIAG3)
    md = tmp_path / "r.md"
    fig = tmp_path / "h.png"
    tables = tmp_path / "t"
    rc = main(["analyze", spec, "--format", "markdown", "--out", str(md),
               "--figure", str(fig), "--tables", str(tables)])
    assert rc == OK
    assert md.read_text().startswith("# d3")
    assert fig.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    nodes = (tables / "nodes.tsv").read_text().splitlines()
    assert nodes[0].split("\t")[:2] == ["node", "size"] and len(nodes) == 6
    assert len((tables / "covers.tsv").read_text().splitlines()) == 1 + 6


def test_trivial_interval(tmp_path, capsys):
    spec = write(tmp_path, dict(DIAG3, subring_generators=[[1, 0, 0], [0, 1, 0]]))
    assert main(["analyze", spec]) == OK
    assert "trivial interval" in capsys.readouterr().out


def test_dot_output_is_stable(tmp_path):
    spec = tmp_path / "dc.json"
    assert main(["export", "dual-cubed", "--out", str(spec)]) == OK
    a, b = tmp_path / "a.dot", tmp_path / "b.dot"
    main(["lattice", str(spec), "--dot", str(a)])
    main(["lattice", str(spec), "--dot", str(b)])
    text = a.read_text()
    assert text == b.read_text()
    assert text.startswith("digraph")
    assert sum(1 for line in text.splitlines() if "label=" in line and "->" not in line) == 12


@pytest.mark.parametrize(
    "data, fragment",
    [
        ('{"base_modulus": 2,\n "unit": [1, 0],,}', ":2:"),
        (dict(DIAG3, unit=[0, 1, 1]), "unit"),
        (dict(DIAG3, rank=3.0), "rank"),
        (dict(DIAG3, colour=1), "unknown field"),
        (dict(DIAG3, mul=[[[1, 0, 0]]]), "mul"),
        ({"unit": [1]}, "missing field"),
    ],
)
def test_bad_specs_exit_2_with_position(tmp_path, capsys, data, fragment):
    spec = write(tmp_path, data)
    assert main(["analyze", spec]) == BAD_INPUT
    err = capsys.readouterr().err
    assert err.startswith("error: ") and fragment in err


def test_parse_errors_carry_line_numbers():
    with pytest.raises(SpecError) as exc:
        parse_spec(json.dumps(dict(DIAG3, unit=[1, 1, 0]), indent=1))
    assert exc.value.line is not None


def test_missing_file_and_unknown_names(tmp_path, capsys):
    assert main(["analyze", str(tmp_path / "nope.json")]) == BAD_INPUT
    assert main(["export", "nope"]) == BAD_INPUT
    assert main(["corpus", "--only", "nope"]) == BAD_INPUT
    assert main(["fuzz", "--count", "1", "--negate", "nope"]) == BAD_INPUT


def test_corpus_subset_writes_tables_and_figures(tmp_path, capsys):
    assert main(["corpus", "--only", "diag-F2-2", "spir-ram", "--out-dir", str(tmp_path)]) == OK
    out = capsys.readouterr().out
    assert "2/2 items pass" in out
    assert (tmp_path / "diag-F2-2.png").exists() and (tmp_path / "spir-ram.png").exists()
    rows = (tmp_path / "corpus.tsv").read_text().splitlines()
    assert rows[0].split("\t") == ["item", "check", "source", "expected", "got", "result"]
    assert all(r.endswith("PASS") for r in rows[1:])


def test_fuzz_and_negation_sentinel(tmp_path, capsys):
    table = tmp_path / "f.tsv"
    assert main(["fuzz", "--count", "5", "--table", str(table)]) == OK
    assert len(table.read_text().splitlines()) == 6
    capsys.readouterr()
    assert main(["fuzz", "--count", "2", "--negate", "routes_agree"]) == FAILED
    out = capsys.readouterr().out
    assert "law routes_agree violated" in out and '"base_modulus"' in out


def test_console_entry_point_runs():
    proc = subprocess.run([sys.executable, "-m", "ringlat", "corpus", "--only", "diag-F2-2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("PASS diag-F2-2")
