import csv
import io
import json
import subprocess
import sys

import pytest

from bessel_radii import make_context, radius
from bessel_radii.cli import main
from bessel_radii.tables import TABLES


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


COEFFS = ["--a", "2", "--b", "1", "--c", "0"]


def test_table1_text(capsys):
    code, out, _ = run(capsys, "radii", "--table", "1")
    assert code == 0
    row0 = next(line for line in out.splitlines() if line.startswith("0 "))
    assert row0.split()[1] == "0.8231"


def test_free_form_radius(capsys):
    code, out, _ = run(capsys, "radii", "--norm", "g", "--kind", "convex", *COEFFS, "--nu", "2.5", "--beta", "0.5")
    assert code == 0 and out.strip().endswith("0.5219")


def test_convex_h_carries_warning(capsys):
    code, out, _ = run(capsys, "radii", "--norm", "h", "--kind", "convex", *COEFFS, "--nu", "2.5", "--beta", "0")
    assert code == 0 and "WARNING" in out and out.strip().endswith("1.1386")
    code, out, _ = run(capsys, "radii", "--table", "6")
    assert out.startswith("WARNING")
    code, out, _ = run(capsys, "radii", "--table", "6", "--format", "json")
    assert all(row["warnings"] for row in json.loads(out))


def test_zeros(capsys):
    code, out, _ = run(capsys, "zeros", "--family", "psi", "--count", "3", "--a", "0", "--b", "1", "--c", "0",
                       "--nu", "1")
    assert code == 0
    assert [line.split()[1] for line in out.splitlines()[1:]] == ["1.8412", "5.3314", "8.5363"]


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--target", "starlike_g", "--nu", "1.5", *COEFFS, "--k", "2")
    assert code == 0 and "k=2: [0.71836, 0.71984]" in out
    code, out, _ = run(capsys, "bounds", "--target", "convex_h", "--nu", "2.5", *COEFFS, "--k", "2", "--all",
                       "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["k"] for r in rows] == ["1", "2"]
    assert float(rows[0]["lower"]) == pytest.approx(0.97222, abs=1e-5)


def test_bounds_audit(capsys):
    code, out, _ = run(capsys, "bounds", "--audit", "--nu", "1.5", *COEFFS)
    assert code == 0 and "omega_2 (theta)" in out and "MISMATCH" in out
    code, out, _ = run(capsys, "bounds", "--nu", "1.5", *COEFFS)
    assert code == 2


def test_sums(capsys):
    code, out, _ = run(capsys, "sums", "--n", "2", "--nu", "1.5", *COEFFS, "--format", "json")
    rows = json.loads(out)
    assert code == 0 and rows[0]["s_det"] == pytest.approx(0.7)
    assert rows[1]["s_det"] == pytest.approx(0.3590476190476, rel=1e-12)


def test_map(capsys, tmp_path):
    svg = tmp_path / "out.svg"
    code, out, _ = run(capsys, "map", "--norm", "g", "--nu", "1.5", "--a", "1", "--b", "2", "--c", "0",
                       "--radius", "0.9477", "-o", str(svg))
    assert code == 0 and "test: pass" in out
    first = svg.read_bytes(), svg.with_suffix(".csv").read_bytes()
    run(capsys, "map", "--norm", "g", "--nu", "1.5", "--a", "1", "--b", "2", "--c", "0",
        "--radius", "0.9477", "-o", str(svg))
    assert (svg.read_bytes(), svg.with_suffix(".csv").read_bytes()) == first
    code, out, _ = run(capsys, "map", "--norm", "g", "--nu", "1.5", "--a", "1", "--b", "2", "--c", "0",
                       "--radius", "1.2", "-o", str(svg))
    assert code == 0 and "test: fail" in out


def test_map_defaults_to_radius(capsys, tmp_path):
    code, out, _ = run(capsys, "map", "--nu", "1.5", "--a", "1", "--b", "2", "--c", "0",
                       "-o", str(tmp_path / "x.svg"), "--format", "json")
    row = json.loads(out)[0]
    assert row["radius"] == radius(make_context(1, 2, 0, 1.5), "g", "starlike").radius
    assert row["samples"] == 720 and row["starlike_curve"]


def test_csv_round_trip_bit_for_bit(capsys):
    for n in (2, 4):
        code, out, _ = run(capsys, "radii", "--table", str(n), "--format", "csv")
        spec = TABLES[n]
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 18
        for row in rows:
            ctx = make_context(float(row["a"]), float(row["b"]), float(row["c"]), float(row["nu"]))
            direct = radius(ctx, spec.normalization, spec.kind, float(row["beta"])).radius
            assert float(row["radius"]) == direct


def test_deterministic_and_banner(capsys):
    _, first, _ = run(capsys, "radii", "--table", "3", "--format", "json")
    _, second, _ = run(capsys, "radii", "--table", "3", "--format", "json")
    assert first == second and "bessel-radii" not in first
    _, out, _ = run(capsys, "--banner", "radii", "--table", "3")
    assert out.startswith("# bessel-radii")


@pytest.mark.parametrize("argv", [
    ["radii", "--norm", "g", "--kind", "starlike", "--a", "1", "--b", "1", "--c", "0", "--nu", "1"],
    ["radii", "--norm", "g", "--kind", "starlike", *COEFFS, "--nu", "0.3"],
    ["radii", "--norm", "g", "--kind", "starlike", *COEFFS, "--nu", "1.5", "--beta", "1.5"],
    ["radii", "--table", "1", "--nu", "2"],
    ["radii", "--table", "9"],
    ["radii", "--norm", "g"],
    ["zeros", "--a", "1"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 2
    _, err = capsys.readouterr()
    assert err.strip()


def test_allow_unverified(capsys):
    code, out, _ = run(capsys, "radii", "--norm", "g", "--kind", "starlike", *COEFFS, "--nu", "0.3",
                       "--allow-unverified", "--format", "json")
    assert code == 0 and any("UnverifiedOrder" in w for w in json.loads(out)[0]["warnings"])


def test_numerical_failure_exit_3(capsys, monkeypatch):
    monkeypatch.setenv("BESSEL_RADII_MAX_TERMS", "3")
    code, _, err = run(capsys, "radii", "--norm", "g", "--kind", "starlike", *COEFFS, "--nu", "1.5")
    assert code == 3 and "numerical failure" in err
    monkeypatch.setenv("BESSEL_RADII_MAX_TERMS", "many")
    code, _, _ = run(capsys, "radii", "--table", "1")
    assert code == 2


def test_verify_quick(capsys):
    code, out, _ = run(capsys, "verify", "--quick")
    assert code == 0
    assert out.count("PASS") == 7


def test_verify_failure_exit_4(capsys, monkeypatch):
    from bessel_radii import verify
    from bessel_radii.oracle import compare

    monkeypatch.setattr(verify, "CRITERIA", (("broken", lambda: [compare("x", 1.0, 2.0, 0.1)]),))
    code, out, _ = run(capsys, "verify")
    assert code == 4 and "FAIL" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bessel_radii", "radii", "--table", "5"],
                          capture_output=True, text=True, check=True)
    assert "0.6839" in proc.stdout
