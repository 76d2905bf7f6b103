from pathlib import Path

import pytest

from vtpoly.cli import main
from vtpoly.realize import parse_off

MAPS = Path(__file__).resolve().parent.parent / "maps"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def body(out):
    return [ln for ln in out.splitlines() if ln and not ln.startswith(("class\t", "total:"))]


class TestEnumerate:
    def test_all(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--group", "T")
        assert code == 0
        rows = body(out)
        assert len(rows) == 7
        assert sorted(int(r.split("\t")[2]) for r in rows) == [0, 1, 3, 3, 4, 4, 6]
        assert out.splitlines()[-1] == "total: 7"

    def test_filtered(self, capsys, tmp_path):
        code, out, _ = run(capsys, "enumerate", "--group", "T", "--filter", "tucker",
                           "--filter", "schewe", "--min-genus", "2", "--out", str(tmp_path))
        assert code == 0
        names = sorted(r.split("\t")[1] for r in body(out))
        assert names == ["M1", "M2"]
        files = sorted(tmp_path.glob("*.map"))
        assert len(files) == 2
        code, out, _ = run(capsys, "report", str(files[0]))
        assert code == 0 and "genus: 3" in out

    def test_unsupported_group(self, capsys):
        code, _, err = run(capsys, "enumerate", "--group", "O")
        assert code == 2
        assert "unsupported" in err

    def test_deterministic(self, capsys):
        first = run(capsys, "enumerate")[1]
        assert run(capsys, "enumerate")[1] == first


class TestVerify:
    def test_embedded(self, capsys):
        code, out, _ = run(capsys, "verify", str(MAPS / "M1.map"), "--base", "1,2,6")
        assert code == 0
        assert out.splitlines()[0] == "verdict: Embedded"
        assert "edges: 48" in out and "faces: 32" in out and "genus: 3" in out

    def test_failed(self, capsys):
        code, out, _ = run(capsys, "verify", str(MAPS / "M2.map"), "--base", "1,2,6")
        assert code == 1
        assert "verdict: Failed" in out
        assert "witness: FaceIntersection" in out

    def test_rational_base(self, capsys):
        code, out, _ = run(capsys, "verify", str(MAPS / "M1.map"), "--base", "1/3,2/3,2")
        assert code == 0
        assert "base: 1/3,2/3,2" in out

    def test_malformed_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.map"
        bad.write_text("# comment\n(Y1,Y4,I1)\n(I1)\n")
        code, _, err = run(capsys, "verify", str(bad), "--base", "1,2,6")
        assert code == 2
        assert "line 3" in err

    def test_invalid_set(self, capsys, tmp_path):
        bad = tmp_path / "bad.map"
        bad.write_text("(I1,I2,I3)\n")
        code, _, err = run(capsys, "verify", str(bad), "--base", "1,2,6")
        assert code == 2

    def test_bad_base(self, capsys):
        for base in ("1,2", "1,x,3", "0,0,0", "1.5,2,3"):
            code, _, _ = run(capsys, "verify", str(MAPS / "M1.map"), "--base", base)
            assert code == 2, base

    def test_missing_file(self, capsys):
        code, _, _ = run(capsys, "verify", "nope.map", "--base", "1,2,6")
        assert code == 2


class TestSearch:
    def test_m1(self, capsys):
        code, out, _ = run(capsys, "search", str(MAPS / "M1.map"), "--bound", "6", "--workers", "2")
        assert code == 0
        assert "1,2,6" in out.splitlines()

    @pytest.mark.slow
    def test_m2_empty(self, capsys):
        code, out, _ = run(capsys, "search", str(MAPS / "M2.map"), "--bound", "10")
        assert code == 1
        assert out.strip() == "total: 0"

    def test_bound_zero(self, capsys):
        code, _, _ = run(capsys, "search", str(MAPS / "M1.map"), "--bound", "0")
        assert code == 2


class TestExport:
    def test_round_trip(self, capsys, tmp_path):
        out_file = tmp_path / "m1.off"
        code, _, _ = run(capsys, "export", str(MAPS / "M1.map"), "--base", "1,2,6",
                         "--format", "off", "--out", str(out_file))
        assert code == 0
        text = out_file.read_text()
        assert text.splitlines()[1] == "12 32 48"
        positions, faces = parse_off(text)
        assert len(positions) == 12 and len(faces) == 32

    def test_stdout(self, capsys):
        code, out, _ = run(capsys, "export", str(MAPS / "M1.map"), "--base", "1,2,6")
        assert code == 0 and out.startswith("OFF\n")

    def test_not_embedded(self, capsys, tmp_path):
        code, _, err = run(capsys, "export", str(MAPS / "M2.map"), "--base", "1,2,6",
                           "--out", str(tmp_path / "x.off"))
        assert code == 1
        assert not (tmp_path / "x.off").exists()


class TestIsomorphic:
    def test_witness(self, capsys):
        code, out, _ = run(capsys, "isomorphic", str(MAPS / "table_a.map"), str(MAPS / "table_b.map"))
        assert code == 0
        assert out.startswith("witness: ") and "none" not in out

    def test_none(self, capsys):
        code, out, _ = run(capsys, "isomorphic", str(MAPS / "M1.map"), str(MAPS / "M2.map"))
        assert code == 1
        assert out.strip() == "witness: none"

    def test_identity(self, capsys):
        code, out, _ = run(capsys, "isomorphic", str(MAPS / "M1.map"), str(MAPS / "M1.map"))
        assert code == 0
        assert out.strip() == "witness: identity"


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", str(MAPS / "M0.map"))
    assert code == 0
    assert out.splitlines()[0].split("\t")[1] == "one_involution"
    assert [ln.split("\t")[1] for ln in out.splitlines()[1:]] == ["stabilized", "stabilized"]


def test_classify_unrealizable(capsys, tmp_path):
    f = tmp_path / "k4.map"
    f.write_text("(I1,I2,I3)\n")
    code, out, _ = run(capsys, "classify", str(f))
    assert code == 1 and "unrealizable" in out


def test_report(capsys):
    code, out, _ = run(capsys, "report", str(MAPS / "M1.map"))
    assert code == 0
    assert "degree: 8" in out
    assert out.splitlines()[-1].startswith("rotation: ")


def test_no_command(capsys):
    assert main([]) == 2
