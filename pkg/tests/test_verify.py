"""Verification suites: report structure, determinism, and outcomes on the
built-in families."""

import pytest

from heckeseries.rmatrix import (
    build_standard,
    build_super,
    parse_symmetry_text,
    serialize_symmetry,
)
from heckeseries.series import BirankCertificate
from heckeseries.verify import (
    VerificationReport,
    detected_certificate,
    series_horizon,
    suite_character,
    suite_hilbert,
    suite_homspace,
    suite_positivity,
)


def check_map(report):
    return {c.name: c for c in report.checks}


class TestReportRendering:
    def test_machine_format(self):
        report = VerificationReport("demo")
        report.add("alpha", 1, 1, True)
        report.add("beta", "x", "y", False)
        lines = report.render_machine().splitlines()
        assert lines[0] == "alpha\t1\t1\tpass"
        assert lines[1] == "beta\tx\ty\tfail"

    def test_human_format(self):
        report = VerificationReport("demo")
        report.add("alpha", 1, 1, True)
        report.add("beta", "x", "y", False)
        text = report.render_human()
        assert text.startswith("suite demo")
        assert "[PASS] alpha: 1" in text
        assert "[FAIL] beta: x expected y" in text
        assert "1/2 checks passed" in text

    def test_conjectural_banner(self):
        report = VerificationReport("demo", conjectural=True)
        report.add("alpha", 1, 1, True)
        assert report.render_machine().startswith("# conjectural:")
        assert "conjectural" in report.render_human()

    def test_passed_property(self):
        report = VerificationReport("demo")
        assert report.passed
        report.add("a", 1, 1, True)
        assert report.passed
        report.add("b", 1, 2, False)
        assert not report.passed


def test_series_horizon():
    # enough coefficients for a depth-d recurrence, without blowing the cap
    assert series_horizon(2, 4) == 4
    assert series_horizon(3, 4) == 5
    assert series_horizon(4, 4) == 6
    assert series_horizon(2, 9) == 9


def test_detected_certificate():
    cert = detected_certificate(build_standard(2, 2), 4)
    assert cert.f0 == (1, -2, 1) and cert.f1 == (1,)
    cert = detected_certificate(build_super(1, 1, 1), 4)
    assert cert.birank == (1, 1)


class TestSuiteHilbert:
    def test_standard_all_pass(self):
        report = suite_hilbert(build_standard(2, 2), 4)
        assert report.passed
        names = [c.name for c in report.checks]
        assert names == [
            "duality_product",
            "certificate",
            "birank_bound",
            "symmetric_series_matches_certificate",
            "exterior_series_matches_certificate",
        ]
        cert_line = check_map(report)["certificate"].lhs
        assert "f0=1,-2,1" in cert_line and "f1=1" in cert_line

    def test_super_all_pass(self):
        report = suite_hilbert(build_super(1, 1, 1), 5)
        assert report.passed
        cert_line = check_map(report)["certificate"].lhs
        assert "f0=1,-1;" in cert_line and "f1=1,-1" in cert_line

    def test_nonsemisimple_parameter(self):
        assert suite_hilbert(build_standard(2, -1), 4).passed

    def test_not_conjectural_for_builtins(self):
        assert not suite_hilbert(build_standard(2, 2), 3).conjectural

    def test_deterministic(self):
        a = suite_hilbert(build_standard(2, 2), 4).render_machine()
        b = suite_hilbert(build_standard(2, 2), 4).render_machine()
        assert a == b


class TestSuiteCharacter:
    def test_standard_values(self):
        report = suite_character(build_standard(2, 2), 3)
        assert report.passed
        checks = check_map(report)
        assert checks["quotient_dim[[2,1]]"].lhs == "6"
        assert checks["tensor_dimension_identity[n=4]"].lhs == "16"

    def test_super_values(self):
        report = suite_character(build_super(1, 1, 1), 3)
        assert report.passed
        checks = check_map(report)
        assert checks["quotient_dim[[2]]"].lhs == "2"
        assert checks["tensor_dimension_identity[n=2]"].lhs == "4"

    def test_identity_runs_one_degree_past_matrix_checks(self):
        report = suite_character(build_standard(2, 2), 2)
        names = [c.name for c in report.checks]
        assert "tensor_dimension_identity[n=3]" in names
        assert "quotient_dim[[3]]" not in names


class TestSuiteHomspace:
    def test_standard_pair(self):
        a = build_standard(2, 2)
        report = suite_homspace(a, a, 3)
        assert report.passed
        checks = check_map(report)
        assert checks["hom_dim[n=2]"].lhs == "10"
        assert checks["hom_dual_dim[n=2]"].lhs == "6"

    def test_mixed_pair(self):
        report = suite_homspace(build_standard(2, 2), build_standard(1, 2), 3)
        assert report.passed

    def test_super_pair(self):
        report = suite_homspace(build_standard(1, 2), build_super(1, 1, 2), 3)
        assert report.passed

    def test_q_mismatch(self):
        with pytest.raises(ValueError):
            suite_homspace(build_standard(2, 2), build_standard(2, 3), 2)

    def test_user_input_marks_conjectural(self):
        loaded = parse_symmetry_text(serialize_symmetry(build_standard(2, 2)))
        report = suite_homspace(loaded, build_standard(2, 2), 2)
        assert report.conjectural
        assert report.passed


class TestSuitePositivity:
    def test_two_zero_hook(self):
        cert = BirankCertificate.from_polynomials([1, -2, 1], [1])
        report = suite_positivity(cert, 6)
        assert report.passed
        checks = check_map(report)
        assert checks["schur_support[[1,1,1]]"].lhs == "value 0"
        assert checks["schur_support[[3,3]]"].lhs == "value 1"

    def test_mixed_hook(self):
        cert = BirankCertificate.from_polynomials([1, -1], [1, -1])
        report = suite_positivity(cert, 6)
        assert report.passed
        checks = check_map(report)
        # shapes with a second row longer than 1 sit outside the (1,1) hook
        assert checks["schur_support[[2,2]]"].lhs == "value 0"
        assert checks["schur_support[[3,2]]"].lhs == "value 0"
        assert checks["schur_support[[2,1,1]]"].lhs == "value 2"
        assert checks["schur_support[[3,1]]"].lhs == "value 2"

    def test_rectangle_checks_present(self):
        cert = BirankCertificate.from_polynomials([1, -2, 1], [1])
        report = suite_positivity(cert, 4)
        names = [c.name for c in report.checks]
        assert "rectangle_vanishing[k=1]" in names
        assert "rectangle_vanishing[k=4]" in names
