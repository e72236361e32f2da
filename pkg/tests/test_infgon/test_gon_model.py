"""
Tests for gon_model.py

Tests labels, token order, arc validity, projection and window enumeration.
"""

import pytest

from src.infgon.errors import ContractViolation
from src.infgon.gon_model import (
    AccLabel, Arc, GonConfig, Model, Ordering,
    blob, closed, compare, crosses, enumerate_window, is_valid_arc, lift_arc, make_arc,
    marker, offset, project_arc, reg, seg_point, shift_point, span, try_arc,
)


class TestAccLabel:
    """Test cases for accumulation labels."""

    def test_slots_follow_chain_order(self):
        """Test that 1' < 1 < 2' < 2 map to consecutive slots."""
        labels = [AccLabel(1, True), AccLabel(1), AccLabel(2, True), AccLabel(2)]

        assert [label.slot for label in labels] == [0, 1, 2, 3]
        assert [AccLabel.from_slot(s) for s in range(4)] == labels

    @pytest.mark.parametrize("value,expected", [
        (2, AccLabel(2)),
        ("2", AccLabel(2)),
        ("2'", AccLabel(2, True)),
        ("2′", AccLabel(2, True)),
    ])
    def test_parse(self, value, expected):
        """Test parsing of integer and string labels."""
        assert AccLabel.parse(value) == expected

    @pytest.mark.parametrize("value", ["x", "'", True, "2''a"])
    def test_parse_rejects_garbage(self, value):
        """Test that non-labels raise ContractViolation."""
        with pytest.raises(ContractViolation, match="Not a label"):
            AccLabel.parse(value)

    def test_str(self):
        """Test label rendering."""
        assert str(AccLabel(3, True)) == "3'"
        assert str(AccLabel(3)) == "3"


class TestGonConfig:
    """Test cases for the engine configuration."""

    @pytest.mark.parametrize("m", [0, -1, 1.5, True])
    def test_rejects_invalid_m(self, m):
        """Test that m must be a positive integer."""
        with pytest.raises(ContractViolation, match="positive integer"):
            GonConfig(m)

    def test_succ_and_pred_wrap(self, cfg2):
        """Test the cyclic successor and predecessor."""
        assert cfg2.succ(AccLabel(2)) == AccLabel(1, True)
        assert cfg2.pred(AccLabel(1, True)) == AccLabel(2)
        assert cfg2.succ(AccLabel(1, True)) == AccLabel(1)

    def test_out_of_range_label(self, cfg1):
        """Test that labels beyond m are rejected."""
        with pytest.raises(ContractViolation, match="out of range"):
            cfg1.succ(AccLabel(2))

    def test_blob_slots(self, cfg2):
        """Test that only primed slots of the completed gon are blobs."""
        assert cfg2.is_blob_slot(0, Model.BAR)
        assert not cfg2.is_blob_slot(1, Model.BAR)
        assert not cfg2.is_blob_slot(0, Model.TWO_M)


class TestTokenOrder:
    """Test cases for compare, offset and shift."""

    def test_compare_within_segment(self, cfg1):
        """Test order by position inside a segment."""
        assert compare(cfg1, reg(1, -1), reg(1, 3)) == Ordering.LT
        assert compare(cfg1, reg(1, 3), reg(1, 3)) == Ordering.EQ

    def test_marker_precedes_its_segment(self, cfg1):
        """Test that the marker of a segment is below all of its points."""
        assert compare(cfg1, marker(1), reg(1, -1000)) == Ordering.LT

    def test_blob_precedes_next_segment(self, cfg1):
        """Test 1' < every point of segment 1 in the completed gon."""
        assert compare(cfg1, blob(1), reg(1, -5)) == Ordering.LT
        assert compare(cfg1, reg(1, 5), blob(1)) == Ordering.GT

    def test_compare_across_models(self, cfg1):
        """Test that a blob and a primed point share no model."""
        with pytest.raises(ContractViolation, match="different models"):
            compare(cfg1, blob(1), seg_point(1, 0, primed=True))

    def test_offset_fixes_accumulation_tokens(self):
        """Test that blobs and markers do not move."""
        assert offset(reg(1, 2), 3) == reg(1, 5)
        assert offset(blob(1), 3) == blob(1)
        assert offset(marker(1), -3) == marker(1)

    def test_shift_point_decrements(self):
        """Test Σ on points."""
        assert shift_point(reg(2, 0), 1) == reg(2, -1)
        assert shift_point(blob(2), 4) == blob(2)


class TestArcs:
    """Test cases for arc validity and crossing."""

    def test_gap_two_inside_segment(self, cfg1):
        """Test that arcs inside a segment need x2 >= x1 + 2."""
        assert is_valid_arc(cfg1, reg(1, 0), reg(1, 2), Model.BAR)
        assert not is_valid_arc(cfg1, reg(1, 0), reg(1, 1), Model.BAR)

    def test_cross_segment_pairs_are_valid(self, cfg2):
        """Test that any pair from two segments is an arc."""
        assert is_valid_arc(cfg2, reg(1, 10), reg(2, -10), Model.TWO_M)

    def test_blob_arcs_only_in_completed_gon(self, cfg1):
        """Test that blobs are endpoints of the completed gon only."""
        assert is_valid_arc(cfg1, blob(1), reg(1, 0), Model.BAR)
        assert not is_valid_arc(cfg1, blob(1), reg(1, 0), Model.TWO_M)

    def test_markers_are_never_endpoints(self, cfg1):
        """Test that markers cannot be arc endpoints."""
        assert not is_valid_arc(cfg1, marker(1), reg(1, 3), Model.BAR)

    def test_try_arc_sorts_endpoints(self, cfg1):
        """Test that try_arc accepts either endpoint order."""
        arc = try_arc(cfg1, reg(1, 4), blob(1), Model.BAR)

        assert arc == Arc(blob(1), reg(1, 4), Model.BAR)

    def test_make_arc_raises(self, cfg1):
        """Test make_arc on an invalid pair."""
        with pytest.raises(ContractViolation, match="not a valid bar arc"):
            make_arc(cfg1, reg(1, 0), reg(1, 1), Model.BAR)

    def test_direct_construction_validates(self):
        """Test that Arc itself refuses unsorted endpoints."""
        with pytest.raises(ContractViolation, match="Invalid"):
            Arc(reg(1, 3), reg(1, 0), Model.BAR)

    def test_crossing(self, cfg1):
        """Test strict interleaving; shared endpoints do not cross."""
        a = Arc(reg(1, 0), reg(1, 3), Model.TWO_M)
        b = Arc(reg(1, 1), reg(1, 4), Model.TWO_M)
        c = Arc(reg(1, 3), reg(1, 6), Model.TWO_M)

        assert crosses(cfg1, a, b)
        assert crosses(cfg1, b, a)
        assert not crosses(cfg1, a, c)

    def test_blob_count(self, cfg2):
        """Test the number of blob endpoints."""
        assert Arc(blob(1), blob(2), Model.BAR).blob_count() == 2
        assert Arc(blob(1), reg(2, 0), Model.BAR).blob_count() == 1


class TestProjection:
    """Test cases for π and its section."""

    def test_project_collapses_primed_points(self, cfg1):
        """Test that a primed point projects to its blob."""
        a = Arc(seg_point(1, -4, primed=True), reg(1, 2), Model.TWO_M)

        assert project_arc(cfg1, a) == Arc(blob(1), reg(1, 2), Model.BAR)

    def test_project_kills_arcs_of_d(self, cfg1):
        """Test that arcs inside one primed segment go to zero."""
        a = Arc(seg_point(1, 0, primed=True), seg_point(1, 5, primed=True), Model.TWO_M)

        assert project_arc(cfg1, a) is None

    def test_lift_then_project(self, cfg2):
        """Test that π recovers an arc from its representative in A."""
        a = Arc(blob(1), blob(2), Model.BAR)

        lifted = lift_arc(cfg2, a)

        assert lifted.model == Model.TWO_M
        assert project_arc(cfg2, lifted) == a

    def test_project_requires_doubled_gon(self, cfg1):
        """Test model checks of project_arc."""
        with pytest.raises(ContractViolation, match="doubled gon"):
            project_arc(cfg1, Arc(blob(1), reg(1, 0), Model.BAR))


class TestEnumerateWindow:
    """Test cases for window enumeration."""

    def test_doubled_gon_count(self, cfg1):
        """Test the 11 arcs of m=1, W=1 in the doubled gon."""
        arcs = enumerate_window(cfg1, 1, Model.TWO_M)

        assert len(arcs) == 11
        assert sum(a.x1.segment == a.x2.segment for a in arcs) == 2

    def test_completed_gon_count(self, cfg1):
        """Test the 4 arcs of m=1, W=1 in the completed gon."""
        arcs = enumerate_window(cfg1, 1, Model.BAR)

        assert [str(a) for a in arcs] == ["(1', 1:-1)", "(1', 1:0)", "(1', 1:1)", "(1:-1, 1:1)"]

    def test_window_zero(self, cfg1):
        """Test that a single position per segment leaves only cross-segment arcs."""
        arcs = enumerate_window(cfg1, 0, Model.TWO_M)

        assert arcs == [Arc(seg_point(1, 0, primed=True), reg(1, 0), Model.TWO_M)]

    def test_sorted_lexicographically(self, cfg2):
        """Test the output order."""
        arcs = enumerate_window(cfg2, 2, Model.BAR)

        assert arcs == sorted(arcs, key=lambda a: a.sort_key)

    def test_negative_window(self, cfg1):
        """Test that negative windows raise ContractViolation."""
        with pytest.raises(ContractViolation, match="non-negative"):
            enumerate_window(cfg1, -1, Model.BAR)


class TestInterval:
    """Test cases for token intervals."""

    def test_closed_interval(self):
        """Test membership in a closed interval."""
        interval = closed(reg(1, 0), reg(1, 3))

        assert interval.contains(reg(1, 0))
        assert interval.contains(reg(1, 3))
        assert not interval.contains(reg(1, 4))

    def test_half_open_to_top(self):
        """Test an interval unbounded above."""
        interval = span(reg(1, 0), False, None, True)

        assert not interval.contains(reg(1, 0))
        assert interval.contains(reg(1, 100))

    def test_wrapping_interval(self, cfg2):
        """Test an interval running past the top of the order."""
        interval = span(reg(2, 0), True, reg(1, 0), True)

        assert interval.wraps
        assert interval.contains(reg(2, 5))
        assert interval.contains(blob(1))
        assert not interval.contains(reg(1, 1))
        assert len(interval.pieces()) == 2
