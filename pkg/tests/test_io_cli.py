"""Text formats and the command-line front end."""

import json
import os

import pytest

from lochom.cli import main
from lochom.complexes import parse_complex, serialize_complex
from lochom.fixtures import circle3, hexagon, hexagon_cover_map
from lochom.io import (parse_filtration, parse_map, parse_sheaf,
                       serialize_map, serialize_sheaf)
from lochom.rings import ZZ
from lochom.sheaves import ConstantSheaf

FIXDIR = os.path.join(os.path.dirname(__file__), os.pardir, "fixtures")


def fix(name):
    return os.path.join(FIXDIR, name)


def test_map_round_trip():
    f = parse_map("map: 0 -> 0\nmap: 1 -> 1\nmap: 2 -> 2\n"
                  "map: 3 -> 0\nmap: 4 -> 1\nmap: 5 -> 2",
                  hexagon(), circle3())
    assert f.vertex_map == hexagon_cover_map()
    g = parse_map(serialize_map(f), hexagon(), circle3())
    assert g.vertex_map == f.vertex_map


def test_map_parse_errors():
    with pytest.raises(ValueError):
        parse_map("map: 0 -> 0\nmap: 0 -> 1", circle3(), circle3())
    with pytest.raises(ValueError):
        parse_map("0 to 1", circle3(), circle3())


def test_filtration_parse():
    stages = parse_filtration("stage: 0\n# comment\nstage: 0 1\nstage: 0 1 2")
    assert stages == [[0], [0, 1], [0, 1, 2]]
    with pytest.raises(ValueError):
        parse_filtration("")


def test_sheaf_dsl_round_trip_through_files():
    X = circle3()
    F = ConstantSheaf(ZZ, X, rank=1)
    text = serialize_sheaf(F)
    G = parse_sheaf(text, X, ZZ)
    assert serialize_sheaf(G) == text


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out else None)


def test_cli_check_cm_bowtie(capsys):
    code, rep = run_cli(capsys, "check-cm", "--ring", "z",
                        "--complex", fix("bowtie.cplx"), "--dim", "2")
    assert code == 1
    assert rep["verdict"] is False
    assert any(w[0] == ["0"] or w[0] == [0] for w in rep["witnesses"])


def test_cli_duality_rp6_mod2(capsys):
    code, rep = run_cli(capsys, "duality", "--item", "1ai", "--ring", "fp:2",
                        "--complex", fix("rp6.cplx"))
    assert code == 0 and rep["verdict"]
    assert [rep["degrees"][str(l)]["source"] for l in (0, 1, 2)] == \
        [[1, []]] * 3


def test_cli_identities_t4(capsys):
    code, rep = run_cli(capsys, "identities", "--complex", fix("t4.cplx"))
    assert code == 0 and rep["ok"]


def test_cli_naturality(capsys):
    code, rep = run_cli(capsys, "naturality", "--complex", fix("hex.cplx"),
                        "--target", fix("c3.cplx"),
                        "--map", fix("hex_to_c3.map"))
    assert code == 0 and rep["ok"] and rep["level"] == "homology"


def test_cli_sections_with_filtration(capsys):
    code, rep = run_cli(capsys, "sections", "--complex", fix("c3.cplx"),
                        "--dim", "1", "--filtration", fix("c3_arcs.filt"))
    assert code == 0 and rep["ok"]
    assert rep["semistability"]["semistable"]


def test_cli_homology_report(capsys):
    code, rep = run_cli(capsys, "homology", "--complex", fix("rp6.cplx"))
    assert code == 0
    assert rep["simplicial"]["1"]["torsion"] == [2]
    assert rep["ring"] == "Z" and rep["order"] == [0, 1, 2, 3, 4, 5]


def test_cli_local_with_uct(capsys):
    code, rep = run_cli(capsys, "local", "--complex", fix("c3.cplx"),
                        "--dim", "1")
    assert code == 0 and rep["ok"]


def test_cli_out_file_and_determinism(tmp_path, capsys):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    for out in (out1, out2):
        code = main(["homology", "--complex", fix("t4.cplx"),
                     "--out", str(out)])
        assert code == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_cli_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["duality", "--complex", fix("c3.cplx")])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["duality", "--item", "9zz", "--complex", fix("c3.cplx")])
    code = main(["homology", "--complex", fix("missing.cplx")])
    assert code == 2


def test_cli_threads_flag_accepted(capsys):
    code, rep = run_cli(capsys, "homology", "--complex", fix("c3.cplx"),
                        "--threads", "4")
    assert code == 0


def test_fixture_files_match_builtins(capsys):
    X = parse_complex(open(fix("c3.cplx")).read())
    assert set(X.all_simplices()) == set(circle3().all_simplices())
    assert serialize_complex(X) == open(fix("c3.cplx")).read()
