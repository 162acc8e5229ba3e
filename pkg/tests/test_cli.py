import io
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from hexforcing.cli import main
from hexforcing.hexgrid import parse, parse_edges


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


@pytest.fixture
def ws(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def test_gen_then_cf(ws):
    assert run("gen", "parallelogram", "-p", 2, "-q", 2, "-o", "p22.hex")[0] == 0
    assert parse((ws / "p22.hex").read_text()).n == 4
    code, out = run("cf", "p22.hex", "-o", "w.edges")
    assert (code, out) == (0, "cf = 5\n")
    assert len(parse_edges((ws / "w.edges").read_text())) == 5


def test_construct_then_verify(ws):
    run("gen", "hexagon", "-p", 2, "-o", "h2.hex")
    run("construct", "hexagon", "-p", 2, "-o", "s.edges")
    code, out = run("verify", "h2.hex", "--set", "s.edges", "--oracle")
    assert (code, out) == (0, "PASS\n")


def test_verify_fail_reports_a_hexagon_frame(ws):
    (ws / "hex1.hex").write_text("HEXSYS 1\n0 0\n")
    (ws / "empty.edges").write_text("")
    code, out = run("verify", "hex1.hex", "--set", "empty.edges")
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "FAIL"
    assert lines[1].startswith("cycle\t6\t")
    assert sum(line.startswith("frame\t") for line in lines) == 3


def test_cf_limit(ws):
    run("gen", "hexagon", "-p", 3, "-o", "h3.hex")
    assert run("cf", "h3.hex")[0] == 3
    assert run("cf", "p.hex", "--limit", 2)[0] == 2  # missing file is an input error


def test_input_errors(ws):
    (ws / "bad.hex").write_text("HEXSYS 1\n1 0\n")
    assert run("bounds", "bad.hex")[0] == 2
    assert run("gen", "oblate", "-p", 2, "-q", 2)[0] == 2
    assert run("frobnicate")[0] == 2
    (ws / "one.hex").write_text("HEXSYS 1\n0 0\n")
    (ws / "far.edges").write_text("10 10 10 12\n")
    assert run("verify", "one.hex", "--set", "far.edges")[0] == 2


def test_bounds_report_is_tab_delimited(ws):
    run("gen", "hexagon", "-p", 2, "-o", "h2.hex")
    code, out = run("bounds", "h2.hex", "--figure", "b.svg")
    assert code == 0
    rows = dict(line.split("\t", 1) for line in out.splitlines() if line.count("\t") == 1)
    assert rows["lower_bound_matching"] == "9"
    assert rows["k"] == "3"
    ET.parse(ws / "b.svg")


def test_certify(ws):
    code, out = run("certify", "prolate", "-p", 3, "-q", 2, "--figure", "c.svg")
    assert code == 0
    rows = dict(line.split("\t") for line in out.splitlines())
    assert rows["verdict"] == "OPTIMAL" and rows["construction"] == "6"
    ET.parse(ws / "c.svg")


def test_construct_cuts(ws):
    code, out = run("construct", "oblate", "-p", 3, "-q", 2, "--cuts")
    assert code == 0
    assert len(out.strip().split("\n\n")) == 2


def test_decompose(ws):
    run("gen", "prolate", "-p", 3, "-q", 2, "-o", "rp.hex")
    code, out = run("decompose", "rp.hex", "-o", "parts")
    assert code == 0
    files = sorted((ws / "parts").iterdir())
    assert len(files) == 2
    assert all(parse(f.read_text()).n == 2 for f in files)


def test_viz_outputs(ws):
    run("gen", "parallelogram", "-p", 2, "-q", 2, "-o", "p.hex")
    run("construct", "parallelogram", "-p", 2, "-q", 2, "-o", "s.edges")
    assert run("viz", "p.hex", "--set", "s.edges", "--svg", "p.svg", "--dot", "p.dot")[0] == 0
    root = ET.parse(ws / "p.svg").getroot()
    assert root.tag.endswith("svg")
    dot = (ws / "p.dot").read_text()
    assert dot.startswith("graph dual {") and dot.rstrip().endswith("}")
    assert dot.count(" -- ") == len(parse((ws / "p.hex").read_text()).edges)
    assert dot.count("style=bold") == 5


def test_outputs_are_byte_identical(ws):
    for tag in ("a", "b"):
        run("gen", "hexagon", "-p", 2, "-o", f"{tag}.hex")
        run("cf", f"{tag}.hex", "-o", f"{tag}.edges")
        run("construct", "hexagon", "-p", 2, "-o", f"{tag}.s")
        run("viz", f"{tag}.hex", "--set", f"{tag}.s", "--svg", f"{tag}.svg", "--dot", f"{tag}.dot")
    for ext in ("hex", "edges", "s", "svg", "dot"):
        assert (ws / f"a.{ext}").read_bytes() == (ws / f"b.{ext}").read_bytes()


def test_module_entry_point(ws):
    proc = subprocess.run(
        [sys.executable, "-m", "hexforcing", "gen", "parallelogram", "-p", "1", "-q", "2"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout == "HEXSYS 1\n0 0\n2 0\n"
