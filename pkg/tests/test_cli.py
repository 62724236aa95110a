import json
import math

import pytest

from slrgeom import cli, reference
from slrgeom.cylinders import Cylinder, quadric_residual
from slrgeom.formats import OutputSpec, read_csv
from slrgeom.errors import InvalidArgument
from slrgeom.model import InhomPoint


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_helpers():
    assert cli.parse_int_set("3,4..6") == [3, 4, 5, 6]
    assert cli.parse_pairs("3:7,3..4:8") == [(3, 7), (3, 8), (4, 8)]
    assert cli.parse_real("pi/4") == pytest.approx(math.pi / 4)
    assert cli.parse_real("-2*pi/5") == pytest.approx(-2 * math.pi / 5)
    with pytest.raises(cli.UsageError):
        cli.parse_pairs("3-7")
    with pytest.raises(cli.UsageError):
        cli.parse_int_set("5..3")
    for bad in ("__import__('os')", "1/0", "x", "1e999"):
        with pytest.raises(Exception):
            cli.parse_real(bad)


def test_output_spec_validation():
    with pytest.raises(InvalidArgument):
        OutputSpec(precision=0)
    with pytest.raises(InvalidArgument):
        OutputSpec(format="xml")


def test_table_packing(capsys):
    code, out, _ = run(capsys, "table", "packing", "--pairs", "3:7,7:3", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "p,q,radius,circle_area,base_area,density"
    assert lines[1] == "3,7,0.14156,0.06338,0.11220,0.56489"
    rows = read_csv(out)
    assert rows[1]["density"] == pytest.approx(0.91430, abs=5e-5)


def test_table_covering(capsys):
    code, out, _ = run(capsys, "table", "covering", "--pairs", "3:7")
    assert code == 0
    assert read_csv(out)[0]["density"] == pytest.approx(2.78432, abs=5e-5)


def test_table_invalid_pair(capsys):
    code, _, err = run(capsys, "table", "packing", "--pairs", "3:6")
    assert code == 2
    assert "q must exceed 2p/(p-2)" in err


def test_table_cross_product_and_skip(capsys):
    code, out, _ = run(capsys, "table", "packing", "--p", "3..4", "--q", "5..7", "--skip-invalid")
    assert code == 0
    assert [(r["p"], r["q"]) for r in read_csv(out)] == [(3, 7), (4, 5), (4, 6), (4, 7)]
    code, _, _ = run(capsys, "table", "packing", "--p", "3..4", "--q", "5..7")
    assert code == 2
    code, _, _ = run(capsys, "table", "packing", "--p", "3")
    assert code == 2


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "covering", "--pairs", "4:5", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data[0]["p"] == 4
    assert data[0]["density"] == pytest.approx(1.88191, abs=5e-5)
    # shortest round-trip floats, not fixed decimals
    assert repr(data[0]["radius"]) in out


def test_table_markdown_and_meta(capsys):
    code, out, _ = run(capsys, "table", "packing", "--pairs", "3:7", "--format", "md", "--meta")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("<!--")
    assert lines[1].startswith("| p | q |")
    code, out, _ = run(capsys, "table", "packing", "--pairs", "3:7", "--format", "json", "--meta")
    assert set(json.loads(out)) == {"meta", "rows"}


def test_table_precision(capsys):
    _, out, _ = run(capsys, "table", "packing", "--pairs", "3:7", "--precision", "9")
    cell = out.splitlines()[1].split(",")[2]
    assert len(cell.split(".")[1]) == 9
    assert float(cell) == pytest.approx(0.14156, abs=5e-6)
    code, _, _ = run(capsys, "table", "packing", "--pairs", "3:7", "--precision", "16")
    assert code == 2


def test_table_output_file(tmp_path, capsys):
    path = tmp_path / "t.csv"
    code, out, _ = run(capsys, "table", "packing", "--pairs", "3:7", "-o", str(path))
    assert code == 0 and out == ""
    assert path.read_text().startswith("p,q,")
    code, _, err = run(capsys, "table", "packing", "--pairs", "3:7", "-o", str(tmp_path / "no" / "x.csv"))
    assert code == 3 and "error" in err


def test_table_jobs_env(monkeypatch, capsys):
    monkeypatch.setenv("SLR_JOBS", "3")
    _, par, _ = run(capsys, "table", "covering", "--pairs", "3:7,4:5,7:3,20:3")
    monkeypatch.setenv("SLR_JOBS", "1")
    _, seq, _ = run(capsys, "table", "covering", "--pairs", "3:7,4:5,7:3,20:3")
    assert par == seq
    monkeypatch.setenv("SLR_JOBS", "many")
    code, _, _ = run(capsys, "table", "covering", "--pairs", "3:7")
    assert code == 2


def test_csv_round_trip(capsys):
    from slrgeom.densities import generate_table
    pairs = reference.pairs("packing")
    arg = ",".join(f"{p}:{q}" for p, q in pairs)
    _, out, _ = run(capsys, "table", "packing", "--pairs", arg, "--precision", "12")
    parsed = read_csv(out)
    for rec, row in zip(parsed, generate_table("packing", pairs)):
        for k, v in row.as_dict().items():
            assert rec[k] == pytest.approx(v, abs=0.5e-12 * max(1, abs(v)) + 1e-15)


def test_geodesic_light_row(capsys):
    code, out, _ = run(capsys, "geodesic", "--alpha", "pi/4", "--s-end", "1", "--steps", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "s,r,theta,phi,X,Y,Z"
    vals = [float(x) for x in lines[2].split(",")]
    h = math.sqrt(2) / 2
    assert vals[1] == pytest.approx(math.asinh(h), abs=1e-10)
    assert vals[2] == pytest.approx(-math.atan(h), abs=1e-10)
    assert vals[3] == pytest.approx(math.sqrt(2) - math.atan(h), abs=1e-10)


def test_geodesic_radial(capsys):
    _, out, _ = run(capsys, "geodesic", "--alpha", "0", "--s-end", "2", "--steps", "9")
    for line in out.splitlines()[1:]:
        s, r = (float(x) for x in line.split(",")[:2])
        assert r == pytest.approx(s, abs=1e-10)


def test_geodesic_ode_footer(capsys):
    code, out, _ = run(capsys, "geodesic", "--alpha", "0.6", "--s-end", "2", "--steps", "21", "--ode")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].endswith("r_ode,theta_ode,phi_ode")
    assert lines[-1].startswith("# max_deviation=")
    assert float(lines[-1].split("=")[1]) < 1e-6


def test_geodesic_ode_failure(monkeypatch, capsys):
    from slrgeom.errors import IntegrationError

    def boom(*a, **k):
        raise IntegrationError("step size too small", 0.5)

    monkeypatch.setattr(cli, "geodesic_ode", boom)
    code, out, err = run(capsys, "geodesic", "--alpha", "0.6", "--s-end", "1", "--steps", "3", "--ode")
    assert code == 4
    assert out.splitlines()[0] == "s,r,theta,phi,X,Y,Z" and len(out.splitlines()) == 4
    assert "step size" in err


def test_geodesic_bad_args(capsys):
    assert run(capsys, "geodesic", "--alpha", "0.1", "--s-end", "1", "--steps", "1")[0] == 2
    assert run(capsys, "geodesic", "--alpha", "2", "--s-end", "1")[0] == 2
    with pytest.raises(SystemExit) as info:
        cli.main(["geodesic", "--alpha", "oops", "--s-end", "1"])
    assert info.value.code == 2


def test_mesh_cylinder(tmp_path, capsys):
    path = tmp_path / "c.obj"
    code, _, _ = run(capsys, "mesh", "cylinder", "--r", "0.5", "--psi", "1", "--resolution", "32,8",
                     "-o", str(path))
    assert code == 0
    verts = [ln.split()[1:] for ln in path.read_text().splitlines() if ln.startswith("v ")]
    assert len(verts) == 288
    cyl = Cylinder(0.5)
    assert max(abs(quadric_residual(cyl, InhomPoint(*map(float, v)))) for v in verts) < 1e-9


def test_mesh_prism_default_height(tmp_path, capsys):
    path = tmp_path / "p.obj"
    code, _, _ = run(capsys, "mesh", "prism", "--p", "4", "--q", "6", "-o", str(path))
    assert code == 0
    xs = [float(ln.split()[1]) for ln in path.read_text().splitlines() if ln.startswith("v ")]
    assert max(xs) == pytest.approx(math.tan(math.pi / 6), abs=1e-9)


def test_mesh_errors(tmp_path, capsys):
    assert run(capsys, "mesh", "cylinder", "--r", "0.5", "--psi", "1", "--resolution", "4,2")[0] == 2
    assert run(capsys, "mesh", "cylinder", "--r", "0.5")[0] == 2
    assert run(capsys, "mesh", "prism", "--p", "3", "--q", "6")[0] == 2
    # the sweep must stay below pi/2
    assert run(capsys, "mesh", "prism", "--p", "3", "--q", "7", "--psi", "2")[0] == 2
    assert run(capsys, "mesh", "cylinder", "--r", "0.5", "--psi", "1",
               "-o", str(tmp_path / "missing" / "c.obj"))[0] == 3


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "tables")
    assert code == 0 and out.count("PASS") == 40
    code, out, _ = run(capsys, "verify", "ode")
    assert code == 0 and "FAIL" not in out


def test_verify_failure_exit(monkeypatch, capsys):
    from slrgeom import verify
    monkeypatch.setattr(verify, "run", lambda s: [verify.CheckResult("x", False, 1.0, 0.1)])
    code, out, _ = run(capsys, "verify", "all")
    assert code == 1 and out.startswith("FAIL")
