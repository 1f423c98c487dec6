"""Command-line interface: output text is part of the contract, so these
tests pin exact lines; exit codes distinguish verification failures (1),
input errors (2), and cap overruns (3)."""

import pytest

from heckeseries.cli import main
from heckeseries.rmatrix import build_standard, serialize_symmetry


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPredict:
    def test_symmetric_series_from_alphas(self, capsys):
        code, out, _ = run(
            capsys, "predict", "--what", "sym", "--alphas", "1,1", "--degree", "5"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "1, 2, 3, 4, 5, 6"
        assert lines[1] == "birank: (2, 0)"
        assert lines[2] == "certificate: f0=1,-2,1; f1=1; roots positive real: verified"

    def test_exterior_series_from_series_flag(self, capsys):
        code, out, _ = run(
            capsys,
            "predict",
            "--what",
            "ext",
            "--series",
            "1;1,-2,1",
            "--degree",
            "4",
        )
        assert code == 0
        assert out.splitlines()[0] == "1, 2, 1, 0, 0"

    def test_super_series_with_betas(self, capsys):
        code, out, _ = run(
            capsys,
            "predict",
            "--what",
            "sym",
            "--alphas",
            "1",
            "--betas",
            "1",
            "--degree",
            "5",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "1, 2, 2, 2, 2, 2"
        assert lines[1] == "birank: (1, 1)"

    def test_hom_prediction_pair(self, capsys):
        code, out, _ = run(
            capsys,
            "predict",
            "--what",
            "A",
            "--alphas",
            "1,1",
            "--alphas2",
            "1,1",
            "--degree",
            "4",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "1, 4, 10, 20, 35"
        assert lines[1] == "birank: (2, 0)"
        assert lines[3] == "birank2: (2, 0)"

    def test_dual_component_pair(self, capsys):
        code, out, _ = run(
            capsys,
            "predict",
            "--what",
            "E",
            "--alphas",
            "1,1",
            "--alphas2",
            "1,1",
            "--degree",
            "4",
        )
        assert code == 0
        assert out.splitlines()[0] == "1, 4, 6, 4, 1"

    def test_pair_requires_second_certificate(self, capsys):
        code, _, err = run(capsys, "predict", "--what", "A", "--alphas", "1,1")
        assert code == 2
        assert "--alphas2" in err

    def test_rejects_both_series_and_roots(self, capsys):
        code, _, err = run(
            capsys,
            "predict",
            "--what",
            "sym",
            "--series",
            "1;1,-1",
            "--alphas",
            "1",
        )
        assert code == 2

    def test_negative_root_rejected(self, capsys):
        code, _, err = run(capsys, "predict", "--what", "sym", "--series", "1;1,1")
        assert code == 1
        assert "positive" in err or "root" in err

    def test_noninteger_certificate_rejected(self, capsys):
        code, _, err = run(capsys, "predict", "--what", "sym", "--alphas", "1/2")
        assert code == 1


class TestCompute:
    def test_symmetric_dims(self, capsys):
        code, out, _ = run(
            capsys,
            "compute",
            "--symmetry",
            "std:r=2,q=2",
            "--what",
            "sym",
            "--degree",
            "5",
        )
        assert code == 0
        assert out.strip() == "1, 2, 3, 4, 5, 6"

    def test_exterior_dims(self, capsys):
        code, out, _ = run(
            capsys,
            "compute",
            "--symmetry",
            "std:r=2,q=2",
            "--what",
            "ext",
            "--degree",
            "5",
        )
        assert code == 0
        assert out.strip() == "1, 2, 1, 0, 0, 0"

    def test_super_symmetry(self, capsys):
        code, out, _ = run(
            capsys,
            "compute",
            "--symmetry",
            "super:1,1,q=1",
            "--what",
            "sym",
            "--degree",
            "4",
        )
        assert code == 0
        assert out.strip() == "1, 2, 2, 2, 2"

    def test_quotient_scalar_case(self, capsys):
        code, out, _ = run(
            capsys,
            "compute",
            "--symmetry",
            "std:r=1,q=3",
            "--what",
            "quotient:[1];[1]",
        )
        assert code == 0
        assert out.strip() == "1"

    def test_quotient_matches_product_law(self, capsys):
        code, out, _ = run(
            capsys,
            "compute",
            "--symmetry",
            "std:r=2,q=2",
            "--what",
            "quotient:[1];[1]",
        )
        assert code == 0
        assert out.strip() == "4"

    def test_quotient_mixed(self, capsys):
        code, out, _ = run(
            capsys,
            "compute",
            "--symmetry",
            "std:r=2,q=2",
            "--what",
            "quotient:[2,1];[]",
        )
        assert code == 0
        assert out.strip() == "6"

    def test_hom_dims_pair(self, capsys):
        code, out, _ = run(
            capsys,
            "compute",
            "--symmetry",
            "std:r=1,q=2",
            "--what",
            "A:std:r=2,q=2",
            "--degree",
            "4",
        )
        assert code == 0
        assert out.strip() == "1, 2, 3, 4, 5"

    def test_e_dims_pair(self, capsys):
        code, out, _ = run(
            capsys,
            "compute",
            "--symmetry",
            "std:r=2,q=2",
            "--what",
            "E:std:r=2,q=2",
            "--degree",
            "4",
        )
        assert code == 0
        assert out.strip() == "1, 4, 6, 4, 1"

    def test_file_symmetry(self, capsys, tmp_path):
        path = tmp_path / "sym.txt"
        path.write_text(serialize_symmetry(build_standard(2, 2)))
        code, out, _ = run(
            capsys,
            "compute",
            "--symmetry",
            f"file:{path}",
            "--what",
            "sym",
            "--degree",
            "3",
        )
        assert code == 0
        assert out.strip() == "1, 2, 3, 4"

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(
            capsys,
            "compute",
            "--symmetry",
            f"file:{tmp_path}/absent.txt",
            "--what",
            "sym",
        )
        assert code == 2

    def test_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("not a symmetry file\n")
        code, _, err = run(
            capsys, "compute", "--symmetry", f"file:{path}", "--what", "sym"
        )
        assert code == 2
        assert "line 1" in err

    def test_invalid_symmetry_rejected(self, capsys, tmp_path):
        path = tmp_path / "braidless.txt"
        path.write_text(
            "hecke-symmetry v1\nd = 2\nq = 2\n"
            "2 0 0 0\n0 -1 0 0\n0 0 -1 0\n0 0 0 2\n"
        )
        code, _, err = run(
            capsys, "compute", "--symmetry", f"file:{path}", "--what", "sym"
        )
        assert code == 1
        assert "rejected" in err
        assert "(1, 1, 2)" in err

    def test_cap_exceeded(self, capsys):
        code, _, err = run(
            capsys,
            "compute",
            "--symmetry",
            "std:r=4,q=2",
            "--what",
            "sym",
            "--degree",
            "12",
        )
        assert code == 3

    def test_unknown_what(self, capsys):
        code, _, err = run(
            capsys, "compute", "--symmetry", "std:r=2,q=2", "--what", "nope"
        )
        assert code == 2

    def test_bad_symmetry_spec(self, capsys):
        code, _, err = run(
            capsys, "compute", "--symmetry", "std:r=two,q=2", "--what", "sym"
        )
        assert code == 2


class TestVerify:
    def test_all_suites_pass_for_standard(self, capsys):
        code, out, _ = run(
            capsys,
            "verify",
            "--suite",
            "all",
            "--symmetry",
            "std:r=2,q=2",
            "--nmax",
            "3",
            "--max-weight",
            "5",
        )
        assert code == 0
        assert "suite hilbert" in out
        assert "suite character" in out
        assert "suite homspace" in out
        assert "suite positivity" in out
        assert "FAIL" not in out

    def test_single_suite_machine_format(self, capsys):
        code, out, _ = run(
            capsys,
            "verify",
            "--suite",
            "hilbert",
            "--symmetry",
            "std:r=2,q=2",
            "--machine",
        )
        assert code == 0
        for line in out.strip().splitlines():
            assert line.startswith("#") or len(line.split("\t")) == 4
        assert all(
            line.endswith("pass")
            for line in out.strip().splitlines()
            if not line.startswith("#")
        )

    def test_nonsemisimple_full_pipeline(self, capsys):
        code, out, _ = run(
            capsys,
            "verify",
            "--suite",
            "all",
            "--symmetry",
            "std:r=2,q=-1",
            "--nmax",
            "3",
            "--max-weight",
            "4",
        )
        assert code == 0

    def test_homspace_pair(self, capsys):
        code, out, _ = run(
            capsys,
            "verify",
            "--suite",
            "homspace",
            "--symmetry",
            "std:r=1,q=2",
            "--symmetry2",
            "super:1,1,q=2",
            "--nmax",
            "3",
        )
        assert code == 0

    def test_conjectural_banner_for_file_input(self, capsys, tmp_path):
        path = tmp_path / "sym.txt"
        path.write_text(serialize_symmetry(build_standard(2, 2)))
        code, out, _ = run(
            capsys,
            "verify",
            "--suite",
            "hilbert",
            "--symmetry",
            f"file:{path}",
            "--nmax",
            "3",
        )
        assert code == 0
        assert "conjectural" in out

    def test_q_mismatch_is_usage_error(self, capsys):
        code, _, err = run(
            capsys,
            "verify",
            "--suite",
            "homspace",
            "--symmetry",
            "std:r=2,q=2",
            "--symmetry2",
            "std:r=2,q=3",
        )
        assert code == 2


class TestSeries:
    def test_detect_rational(self, capsys):
        code, out, _ = run(
            capsys, "series", "detect-rational", "--coeffs", "1,2,3,4,5,6,7"
        )
        assert code == 0
        assert out.strip() == "num=1; den=1,-2,1"

    def test_detect_rational_fibonacci(self, capsys):
        code, out, _ = run(
            capsys,
            "series",
            "detect-rational",
            "--coeffs",
            "1,1,2,3,5,8,13,21",
            "--rmax",
            "2",
        )
        assert code == 0
        assert out.strip() == "num=1; den=1,-1,-1"

    def test_detect_rational_inconclusive(self, capsys):
        code, out, _ = run(
            capsys,
            "series",
            "detect-rational",
            "--coeffs",
            "1,2,3,5,7,11,13",
            "--rmax",
            "2",
        )
        assert code == 1
        assert "inconclusive" in out

    def test_diamond(self, capsys):
        code, out, _ = run(
            capsys,
            "series",
            "diamond",
            "--f",
            "1,1",
            "--g",
            "1,1",
            "--degree",
            "5",
        )
        assert code == 0
        assert out.strip() == "1, 1, 1, 1, 1, 1"

    def test_total_positivity_ok(self, capsys):
        code, out, _ = run(
            capsys,
            "series",
            "total-positivity",
            "--coeffs",
            "1,2,4,8,16",
            "--max-weight",
            "4",
        )
        assert code == 0
        assert out.strip() == "ok"

    def test_total_positivity_violation(self, capsys):
        code, out, _ = run(
            capsys,
            "series",
            "total-positivity",
            "--coeffs",
            "1,1,1",
            "--max-weight",
            "3",
        )
        assert code == 1
        assert out.strip() == "violation at [1,1,1]: -1"

    def test_missing_required_flag(self, capsys):
        code, _, err = run(capsys, "series", "detect-rational")
        assert code == 2


class TestParser:
    def test_no_command_is_usage_error(self, capsys):
        assert run(capsys, )[0] == 2

    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_bad_flag_value(self, capsys):
        code, _, _ = run(
            capsys, "predict", "--what", "sym", "--alphas", "1,1", "--degree", "x"
        )
        assert code == 2
