import pytest

from equidiv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def xor_file(tmp_path):
    path = tmp_path / "xor.eqd"
    path.write_text(
        "EQUIDIV 1\n"
        "bij nA 2 nB 2 nC 2\n"
        "labels C: a b\n"
        "row 0: 0:0 1:0\n"
        "row 1: 1:1 0:1\n"
    )
    return str(path)


class TestUsage:
    def test_no_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_unknown_option(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["divide", "--nope"])
        assert exc.value.code == 2

    def test_missing_file_is_invalid_input(self, capsys):
        code, _, err = run(capsys, "divide", "--in", "/nonexistent", "--base", "0")
        assert code == 3 and "error:" in err

    def test_malformed_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.eqd"
        bad.write_text("what\n")
        code, _, err = run(capsys, "divide", "--in", str(bad), "--base", "0")
        assert code == 3 and "EQUIDIV 1" in err

    def test_bad_group_spec(self, capsys, xor_file):
        code, _, err = run(capsys, "stab", "--in", xor_file, "--group", "weird")
        assert code == 3


class TestDivide:
    def test_by_label(self, capsys, xor_file):
        code, out, _ = run(capsys, "divide", "--in", xor_file, "--base", "a")
        assert code == 0 and out == "0 1\n"

    def test_by_index(self, capsys, xor_file):
        code, out, _ = run(capsys, "divide", "--in", xor_file, "--base", "1")
        assert code == 0 and out == "1 0\n"

    def test_out_file(self, capsys, tmp_path, xor_file):
        dest = tmp_path / "h.txt"
        code, out, _ = run(capsys, "divide", "--in", xor_file, "--base", "b", "--out", str(dest))
        assert code == 0 and out == ""
        assert dest.read_text() == "1 0\n"

    def test_bad_base(self, capsys, xor_file):
        code, _, err = run(capsys, "divide", "--in", xor_file, "--base", "z")
        assert code == 3


class TestParallelize:
    def test_roundtrip(self, capsys, xor_file):
        code, out, _ = run(capsys, "parallelize", "--in", xor_file)
        assert code == 0
        assert "row 0: 0:0 1:0" in out and "row 1: 1:1 0:1" in out


class TestStab:
    def test_full(self, capsys, xor_file):
        code, out, _ = run(capsys, "stab", "--in", xor_file)
        lines = out.splitlines()
        assert code == 0 and len(lines) % 3 == 0
        assert "gamma (a,b)" in lines

    def test_trivial(self, capsys, xor_file):
        code, out, _ = run(capsys, "stab", "--in", xor_file, "--group", "trivial")
        assert code == 0 and "gamma (a,b)" not in out

    def test_gens(self, capsys, xor_file):
        code, out, _ = run(capsys, "stab", "--in", xor_file, "--group", "gens:(a,b)")
        assert code == 0 and "gamma (a,b)" in out

    def test_budget_exit(self, capsys, tmp_path):
        ident = tmp_path / "id.eqd"
        ident.write_text(
            "EQUIDIV 1\nbij nA 4 nB 4 nC 1\nrow 0: 0:0 1:0 2:0 3:0\n"
        )
        code, _, err = run(capsys, "stab", "--in", str(ident), "--budget", "2")
        assert code == 4 and "exceeded" in err


class TestQuotient:
    def test_not_exists_full(self, capsys, xor_file):
        code, out, _ = run(capsys, "quotient", "--in", xor_file, "--group", "full")
        assert code == 1
        assert out.splitlines()[0] == "verdict not-exists"
        assert "witness: alpha () beta (0,1) gamma (a,b)" in out

    def test_exists_trivial(self, capsys, xor_file):
        code, out, _ = run(capsys, "quotient", "--in", xor_file, "--group", "trivial")
        assert code == 0
        assert out.splitlines()[0] == "verdict exists"
        assert "quotient: 0 1" in out

    def test_certificate_file(self, capsys, tmp_path, xor_file):
        dest = tmp_path / "cert.txt"
        code, out, _ = run(
            capsys, "quotient", "--in", xor_file, "--certificate", str(dest)
        )
        assert code == 1 and dest.read_text() == out

    def test_symmetry_subset_mode(self, capsys, tmp_path, xor_file):
        syms = tmp_path / "syms.txt"
        syms.write_text("alpha ()\nbeta (0,1)\ngamma (a,b)\n")
        code, out, _ = run(capsys, "quotient", "--in", xor_file, "--symmetries", str(syms))
        assert code == 1 and "half-fixed-witness" in out

    def test_symmetry_subset_undecided(self, capsys, tmp_path, xor_file):
        syms = tmp_path / "syms.txt"
        syms.write_text("alpha (0,1)\nbeta (0,1)\ngamma ()\n")
        code, out, _ = run(capsys, "quotient", "--in", xor_file, "--symmetries", str(syms))
        assert code == 0 and out.startswith("undecided")

    def test_symmetry_subset_rejects_non_symmetry(self, capsys, tmp_path, xor_file):
        syms = tmp_path / "syms.txt"
        syms.write_text("alpha (0,1)\nbeta ()\ngamma ()\n")
        code, _, err = run(capsys, "quotient", "--in", xor_file, "--symmetries", str(syms))
        assert code == 3


class TestGallery:
    def test_cyclic(self, capsys):
        code, out, _ = run(capsys, "gallery", "cyclic", "2")
        assert code == 0
        assert "row 1: 1:1 0:1" in out

    def test_klein(self, capsys):
        code, out, _ = run(capsys, "gallery", "klein")
        assert code == 0 and "bij nA 4 nB 4 nC 4" in out

    def test_regular_rep_from_file(self, capsys, tmp_path):
        table = tmp_path / "z3.txt"
        table.write_text("0 1 2\n1 2 0\n2 0 1\n")
        code, out, _ = run(capsys, "gallery", "regular-rep", str(table))
        assert code == 0 and "bij nA 3 nB 3 nC 3" in out

    def test_regular_rep_rejects_non_group(self, capsys, tmp_path):
        table = tmp_path / "bad.txt"
        table.write_text("0 1\n0 1\n")
        code, _, err = run(capsys, "gallery", "regular-rep", str(table))
        assert code == 3

    def test_checkered(self, capsys):
        code, out, _ = run(capsys, "gallery", "checkered", "(a,b,c)(d,e)")
        assert code == 0 and "bij nA 12 nB 12 nC 5" in out

    def test_thm4(self, capsys):
        code, out, _ = run(capsys, "gallery", "thm4", "(a,b)", "--window", "3")
        assert code == 0
        assert out.splitlines() == ["row a: Ka Kb 1a", "row b: Qb Qa 1b"]

    def test_thm4_with_labels(self, capsys):
        code, out, _ = run(
            capsys, "gallery", "thm4", "(x,y)", "--labels", "x y z", "--window", "3"
        )
        assert code == 0 and out.splitlines()[0] == "row x: Kx Ky Kz"

    def test_gadget_xyz(self, capsys):
        code, out, _ = run(capsys, "gallery", "gadget-xyz", "y,z,x")
        assert code == 0
        assert out.splitlines() == ["row x: 2 0 1", "row y: 0 1 2", "row z: 1 2 0"]


class TestProbeCli:
    def test_exhaustive(self, capsys):
        code, out, _ = run(capsys, "probe", "--nA", "2", "--nC", "2")
        assert code == 0 and "summary counterexamples 12 of 24" in out

    def test_cert_dir(self, capsys, tmp_path):
        certs = tmp_path / "certs"
        code, out, _ = run(
            capsys, "probe", "--nA", "2", "--nC", "2", "--cert-dir", str(certs)
        )
        assert code == 0
        eqds = sorted(p.name for p in certs.glob("*.eqd"))
        assert len(eqds) == 12 and eqds[0] == "cex-000001.eqd"
        assert (certs / "cex-000001.cert").read_text().startswith("verdict not-exists")

    def test_sampled_seeded(self, capsys):
        code1, out1, _ = run(
            capsys, "probe", "--nA", "3", "--nC", "2", "--sample", "20", "--seed", "5"
        )
        code2, out2, _ = run(
            capsys, "probe", "--nA", "3", "--nC", "2", "--sample", "20", "--seed", "5"
        )
        assert code1 == code2 == 0 and out1 == out2

    def test_cap_exit(self, capsys):
        code, _, err = run(capsys, "probe", "--nA", "4", "--nC", "4")
        assert code == 4


class TestVerifyPaper:
    def test_passes(self, capsys):
        code, out, _ = run(capsys, "verify-paper")
        assert code == 0
        lines = out.splitlines()
        assert lines[-1] == "all checks passed"
        assert all(l.startswith("ok ") for l in lines[:-1])
