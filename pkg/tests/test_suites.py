import math

import pytest

from wigneralg.operators import OperatorMatrix, check_relation, fock_basis
from wigneralg.reports import AlgebraReport, CheckMode, Verdict, Witness
from wigneralg.scalars import NuPolynomial, RadicalSum, deformed_number
from wigneralg.spin import extract_js_block, build_js_spin_rep
from wigneralg.suites import (
    aggregate,
    block_extraction_suite,
    hp_suite,
    number_suite,
    numeric_suite,
    realization_suite,
    single_mode_suite,
    so3_suite,
    spin_suite,
    two_mode_suite,
    verify_all,
)
from wigneralg.two_mode import build_two_mode


def report(verdict, rid="x", caveat=None, witness=None, residual=0.0, mode=CheckMode.EXACT):
    return AlgebraReport(rid, mode, residual, verdict, caveat=caveat, witness=witness)


def test_aggregate_fail_wins():
    w = Witness(1, 2, "a", "b")
    out = aggregate(
        "family",
        [report(Verdict.PASS), report(Verdict.FAIL, witness=w), report(Verdict.PASS)],
    )
    assert out.verdict is Verdict.FAIL
    assert out.witness == w


def test_aggregate_caveat_survives():
    out = aggregate(
        "family", [report(Verdict.PASS), report(Verdict.PASS_WITH_CAVEAT, caveat="note")]
    )
    assert out.verdict is Verdict.PASS_WITH_CAVEAT
    assert out.caveat == "note"


def test_aggregate_all_pass():
    out = aggregate("family", [report(Verdict.PASS), report(Verdict.PASS)])
    assert out.verdict is Verdict.PASS
    assert out.mode is CheckMode.EXACT and out.max_residual == 0.0


def test_numeric_verified_fallback_surfaces_in_reports():
    # two matrices equal in value but with unmerged canonical forms: the
    # check falls back to sampling and reports a numeric-verified caveat
    basis = fock_basis(2)
    hidden = OperatorMatrix.from_entries(
        basis, {(0, 0): RadicalSum.sqrt_poly(deformed_number(1) * deformed_number(1))}
    )
    plain = OperatorMatrix.from_entries(
        basis, {(0, 0): RadicalSum.from_polynomial(deformed_number(1))}
    )
    out = check_relation("unmerged", hidden, plain)
    assert out.verdict is Verdict.PASS_WITH_CAVEAT
    assert out.mode is CheckMode.MIXED
    assert "numeric-verified" in out.caveat
    assert out.max_residual <= 1e-12


def test_suites_all_green_small():
    assert all(r.passed for r in number_suite(12))
    assert all(r.passed for r in single_mode_suite(2, 8))
    assert all(r.passed for r in realization_suite(6))
    assert all(r.passed for r in two_mode_suite(4, 5))
    assert all(r.passed for r in spin_suite(4))
    assert all(r.passed for r in block_extraction_suite(3, 5, 5))
    assert all(r.passed for r in hp_suite((2, 4), (1,)))
    assert all(r.passed for r in so3_suite(3))
    assert all(r.passed for r in numeric_suite(3, (5, 5), single_dim=6))


def test_verify_all_sections_present():
    sections = verify_all(max_two_j=2, dims=(4, 4), max_n=4, max_number=8, max_single_dim=6)
    assert list(sections) == [
        "deformed-numbers",
        "single-mode",
        "coordinate-realizations",
        "two-mode",
        "su_nu2",
        "block-extraction",
        "reference-matrices",
        "holstein-primakoff",
        "so_nu3",
        "numeric-grid",
    ]
    assert all(r.passed for reports in sections.values() for r in reports)


def test_block_extraction_asymmetric_ambient():
    ambient = build_two_mode(10, 7)
    for two_j in (1, 4, 6):
        extracted = extract_js_block(ambient, two_j)
        closed = build_js_spin_rep(two_j)
        assert extracted.j_plus == closed.j_plus
        assert extracted.p_op == closed.p_op


def test_deformed_factorial_large_n_exact():
    # intermediate products overflow 64-bit ranges; coefficients stay exact
    p = deformed_number(49) * deformed_number(50)
    fact = __import__("wigneralg").deformed_factorial(50)
    assert fact.degree == 25
    lead = fact.coeffs[-1].re
    assert lead.denominator == 1
    # leading coefficient is 2^25 * 2*4*...*50 = 2^25 * 2^25 * 25!
    assert lead.numerator == 2**50 * math.factorial(25)
    assert p.degree == 1  # [49][50] has a single nu power from the odd factor
