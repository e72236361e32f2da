"""
Tests for oracle.py

Tests the brute Hom description, extension closure, the windowed torsion
checks, lattice and count sweeps and suite dispatch. Windows are kept small.
"""

import pytest
from unittest.mock import patch

from src.infgon.arcsets import FinArcSet, all_arcs
from src.infgon.errors import ContractViolation
from src.infgon.gon_model import Arc, GonConfig, Model, reg
from src.infgon.ncp import enumerate_alt, enumerate_hd, enumerate_ncp
from src.infgon.oracle import (
    Report, brute_hom, brute_hom_table, brute_perp, catalan, check_coheart,
    check_heart, count_structures, hom_discrepancies, in_window, independent_ncps, is_interior,
    ptolemy_closure, run_suite, verify_counts, verify_hom, verify_lattice, verify_roundtrip,
    verify_torsion, verify_ttf,
)
from src.infgon.torsion import cot_aisle, cot_coaisle, t_aisle, t_coaisle


def bar(a, b):
    return Arc(reg(1, a), reg(1, b), Model.BAR)


class TestReport:
    """Test cases for the Report container."""

    def test_passed_until_failure(self):
        """Test that a report passes until something fails."""
        report = Report("hom")
        assert report.passed

        report.fail("m=1", "witness")

        assert not report.passed
        assert report.failures == [("m=1", "witness")]

    def test_merge_adds_counters(self):
        """Test that merge sums checks and integer details."""
        first = Report("torsion", checked=2, details={"direct": 1})
        second = Report("torsion", checked=3, details={"direct": 4, "note": "x"})

        first.merge(second)

        assert first.checked == 5
        assert first.details == {"direct": 5, "note": "x"}

    def test_to_dict(self):
        """Test the serialised report shape."""
        report = Report("counts", checked=1)
        report.fail("w=0", "bad")

        data = report.to_dict()

        assert set(data) == {"suite", "checked", "failures", "passed", "details"}
        assert data["failures"] == [{"instance": "w=0", "witness": "bad"}]
        assert data["passed"] is False


class TestBruteHom:
    """Test cases for the crossing/rotation description of Hom."""

    @pytest.mark.parametrize("model", [Model.TWO_M, Model.BAR])
    def test_agrees_with_hammocks(self, cfg1, model):
        """Test that the hammocks and the brute description agree on a window."""
        assert hom_discrepancies(cfg1, 3, model) == []

    def test_identity(self, cfg1, blob_arc):
        """Test Hom(a, a) = 1."""
        assert brute_hom(cfg1, blob_arc(0), blob_arc(0)) == 1
        assert brute_hom(cfg1, bar(0, 3), bar(0, 3)) == 1

    def test_mixed_models(self, cfg1, blob_arc):
        """Test that both arcs must live in one model."""
        with pytest.raises(ContractViolation, match="share the model"):
            brute_hom(cfg1, blob_arc(0), Arc(reg(1, 0), reg(1, 2), Model.TWO_M))

    def test_table_shape(self, cfg1):
        """Test that the table is square over the window arcs."""
        arcs, table = brute_hom_table(cfg1, 2, Model.BAR)

        assert len(table) == len(arcs)
        assert all(len(row) == len(arcs) for row in table)
        assert all(table[i][i] == 1 for i in range(len(arcs)))

    def test_table_needs_window(self, cfg1):
        """Test the lower bound on W."""
        with pytest.raises(ContractViolation, match="W >= 2"):
            brute_hom_table(cfg1, 1, Model.BAR)

    def test_brute_perp_of_nothing(self, cfg1):
        """Test that the perpendicular of the empty set is the whole window."""
        P = brute_perp(cfg1, FinArcSet(3, frozenset()), 3)

        assert len(P) == len(brute_hom_table(cfg1, 3, Model.BAR)[0])

    def test_brute_perp_side(self, cfg1):
        """Test the side argument."""
        with pytest.raises(ContractViolation, match="side must be"):
            brute_perp(cfg1, FinArcSet(3, frozenset()), 3, "up")


class TestWindows:
    """Test cases for window and interior tests."""

    def test_in_window(self, blob_arc):
        """Test that blob ends never leave the window."""
        assert in_window(blob_arc(3), 3)
        assert not in_window(blob_arc(4), 3)

    def test_interior(self):
        """Test the margin."""
        assert is_interior(bar(-2, 2), 4, 2)
        assert not is_interior(bar(-3, 2), 4, 2)


class TestPtolemyClosure:
    """Test cases for the windowed extension closure."""

    def test_crossing_pair(self, cfg1):
        """Test that (0,3), (2,5) close up to five arcs."""
        F = FinArcSet(6, frozenset({bar(0, 3), bar(2, 5)}))

        closure = ptolemy_closure(cfg1, F, 6)

        assert closure.arcs == {bar(0, 3), bar(2, 5), bar(0, 5), bar(0, 2), bar(3, 5)}

    def test_closed_set_is_fixed(self, cfg1, blob_arc):
        """Test that a single arc is already closed."""
        F = FinArcSet(4, frozenset({blob_arc(0)}))

        assert ptolemy_closure(cfg1, F, 4) == F


class TestTorsionChecks:
    """Test cases for windowed torsion pair checks."""

    def test_t_structure_passes(self, cfg1, hd_single_block):
        """Test the single-block t-structure on a small window."""
        report = verify_torsion(cfg1, t_aisle(cfg1, hd_single_block), t_coaisle(cfg1, hd_single_block), 4)

        assert report.passed, report.failures
        assert report.details["hom_pairs"] > 0

    def test_corrupted_coaisle_fails(self, cfg1, hd_single_block):
        """Test that replacing Y by every arc produces a Hom witness."""
        report = verify_torsion(cfg1, t_aisle(cfg1, hd_single_block), all_arcs(cfg1, Model.BAR), 4)

        assert not report.passed
        assert report.failures[0][1].startswith("Hom(")

    def test_models_must_match(self, cfg1):
        """Test that X and Y live in one model."""
        with pytest.raises(ContractViolation, match="one model"):
            verify_torsion(cfg1, all_arcs(cfg1, Model.BAR), all_arcs(cfg1, Model.TWO_M), 3)

    def test_heart_formula(self, cfg1, hd_single_block):
        """Test the heart against X ∩ ΣY on a window."""
        assert check_heart(cfg1, hd_single_block, 4) is None

    def test_coheart_formula(self, cfg1, alt_reg0):
        """Test the co-heart against X ∩ Σ⁻¹Y on a window."""
        assert check_coheart(cfg1, alt_reg0, 4) is None

    def test_cot_structure_passes(self, cfg1, alt_reg0):
        """Test the co-t-structure ({1'}, 0) on a small window."""
        report = verify_torsion(cfg1, cot_aisle(cfg1, alt_reg0), cot_coaisle(cfg1, alt_reg0), 4)

        assert report.passed, report.failures

    @pytest.mark.slow
    def test_ttf_triple(self, cfg2, alt_ttf):
        """Test both halves of the TTF triple."""
        report = verify_ttf(cfg2, alt_ttf, 3)

        assert report.suite == "ttf"
        assert report.passed, report.failures
        assert report.checked > 0


class TestRoundTrip:
    """Test cases for the round-trip sweep."""

    def test_m1(self, cfg1):
        """Test every instance of m=1 with three positions."""
        report = verify_roundtrip(cfg1, (-1, 1), axioms=True)

        assert report.passed, report.failures
        assert report.checked == len(enumerate_hd(cfg1, range(-1, 2))) + len(enumerate_alt(cfg1, range(-1, 2)))


class TestLatticeSweeps:
    """Test cases for the non-crossing partition lattice sweep."""

    def test_catalan(self):
        """Test the Catalan numbers."""
        assert [catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]

    @pytest.mark.parametrize("k", range(1, 6))
    def test_independent_enumeration(self, k):
        """Test the direct crossing filter against the recursive enumeration."""
        assert set(independent_ncps(k)) == set(enumerate_ncp(k))

    def test_verify_lattice(self):
        """Test the lattice laws up to k=4."""
        report = verify_lattice(4)

        assert report.passed, report.failures
        assert report.checked == 1 + 2 + 5 + 14


class TestCounts:
    """Test cases for structure counts."""

    @pytest.mark.parametrize("m,w,expected", [(1, 3, 5), (2, 3, 50)])
    def test_alternating_counts(self, m, w, expected):
        """Test Catalan(m) · (w + 2)^m by both enumerations."""
        row = count_structures(GonConfig(m), w)

        assert row["alt"] == row["alt_independent"] == row["alt_expected"] == expected

    def test_functorially_finite_thick_m1(self, cfg1):
        """Test that m=1 has two functorially finite thick subcategories."""
        assert count_structures(cfg1, 0)["functorially_finite_thick"] == 2

    def test_verify_counts(self, cfg1):
        """Test the counts suite rows."""
        report = verify_counts(cfg1, max_w=2)

        assert report.passed
        assert [row["w"] for row in report.details["rows"]] == [0, 1, 2]


class TestSuites:
    """Test cases for suite dispatch."""

    def test_hom_suite_m1(self, cfg1):
        """Test the Hom suite and the non-2-Calabi-Yau witness."""
        report = verify_hom(cfg1, 3)

        assert report.passed, report.failures
        assert report.details["non_2cy_witness"] == [1, 0]

    def test_unknown_suite(self, cfg1):
        """Test that unknown names raise ContractViolation."""
        with pytest.raises(ContractViolation, match="Unknown suite"):
            run_suite("nope", cfg1, 3)

    @patch('src.infgon.oracle.verify_counts')
    def test_dispatch(self, mock_counts, cfg1):
        """Test that run_suite calls the named suite and names the report."""
        # Setup mocks
        mock_counts.return_value = Report("whatever", checked=4)

        report = run_suite("counts", cfg1, 3)

        mock_counts.assert_called_once_with(cfg1)
        assert report.suite == "counts"
        assert report.checked == 4

    @patch('src.infgon.oracle.verify_roundtrip')
    def test_roundtrip_checks_axioms(self, mock_roundtrip, cfg1):
        """Test that the round-trip suite also checks the constructed aisles."""
        # Setup mocks
        mock_roundtrip.return_value = Report("whatever", checked=2)

        report = run_suite("roundtrip", cfg1, 3)

        mock_roundtrip.assert_called_once_with(cfg1, axioms=True)
        assert report.suite == "roundtrip"
