"""
Tests for schemas.py

Tests JSON loading, payload validation and conversion to engine objects.
"""

import json

import pytest

from src.infgon.arcsets import SlotRect, normalize
from src.infgon.errors import SchemaError
from src.infgon.gon_model import Arc, Marker, Model, Point, AccLabel, blob, reg
from src.infgon.ncp import AltNcp, Decoration, HalfDecNcp, NcPartition
from src.infgon.schemas import (
    arc_from_list, arc_to_list, decorated_from_dict, decorated_to_dict, dumps, finset_from_dict,
    load_payload, partition_from_dict, point_from_dict, point_to_dict, symset_from_dict,
    symset_to_dict,
)


class TestLoadPayload:
    """Test cases for raw JSON parsing."""

    def test_valid_object(self):
        """Test that an object is returned as a dict."""
        assert load_payload('{"m": 2}') == {"m": 2}

    def test_malformed_json_reports_position(self):
        """Test that syntax errors carry line and column."""
        with pytest.raises(SchemaError, match=r"at line 1, column"):
            load_payload('{"m": }')

    def test_top_level_must_be_object(self):
        """Test that arrays are rejected."""
        with pytest.raises(SchemaError, match="must be an object"):
            load_payload("[1, 2]")

    def test_dumps_is_deterministic(self):
        """Test sorted keys and configured indentation."""
        text = dumps({"b": 1, "a": [1]})

        assert text.index('"a"') < text.index('"b"')
        assert json.loads(text) == {"a": [1], "b": 1}


class TestPoints:
    """Test cases for point payloads."""

    @pytest.mark.parametrize("data,expected", [
        ({"blob": "2'"}, blob(2)),
        ({"blob": 2}, blob(2)),
        ({"seg": 1, "pos": -3}, reg(1, -3)),
        ({"seg": "1'", "pos": 4}, Point(AccLabel(1, True), 4)),
        ({"marker": 2}, Marker(AccLabel(2))),
    ])
    def test_forms(self, data, expected):
        """Test every accepted point form."""
        assert point_from_dict(data) == expected

    @pytest.mark.parametrize("data", [
        {},
        {"blob": "1'", "seg": 1, "pos": 0},
        {"seg": 1},
        {"seg": 1, "pos": 0, "extra": True},
    ])
    def test_invalid_forms(self, data):
        """Test that malformed points raise SchemaError."""
        with pytest.raises(SchemaError, match="Invalid point"):
            point_from_dict(data)

    def test_bad_label(self):
        """Test that an unparsable label reports its location."""
        with pytest.raises(SchemaError) as exc_info:
            point_from_dict({"seg": "x", "pos": 0})

        assert exc_info.value.location == "point"

    def test_to_dict(self):
        """Test point serialisation."""
        assert point_to_dict(blob(1)) == {"blob": "1'"}
        assert point_to_dict(reg(2, 5)) == {"seg": 2, "pos": 5}


class TestArcs:
    """Test cases for arc payloads."""

    def test_round_trip(self, cfg2):
        """Test arc → list → arc."""
        arc = Arc(blob(1), reg(2, -1), Model.BAR)

        assert arc_from_list(cfg2, arc_to_list(arc), Model.BAR) == arc

    def test_unsorted_endpoints_are_accepted(self, cfg1, blob_arc):
        """Test that endpoint order in the payload does not matter."""
        data = [{"seg": 1, "pos": 3}, {"blob": "1'"}]

        assert arc_from_list(cfg1, data, Model.BAR) == blob_arc(3)

    def test_invalid_arc(self, cfg1):
        """Test that gap-one arcs raise SchemaError."""
        with pytest.raises(SchemaError, match="not a valid"):
            arc_from_list(cfg1, [{"seg": 1, "pos": 0}, {"seg": 1, "pos": 1}], Model.BAR)

    def test_wrong_length(self, cfg1):
        """Test that arcs have exactly two ends."""
        with pytest.raises(SchemaError, match="Invalid arc"):
            arc_from_list(cfg1, [{"seg": 1, "pos": 0}], Model.BAR)


class TestArcSets:
    """Test cases for symbolic and finite set payloads."""

    def test_symset_round_trip(self, cfg1):
        """Test set → dict → set."""
        S = normalize(cfg1, Model.BAR, [SlotRect(0, 0, 0, 1, None, 0), SlotRect(1, None, None, 1, None, 0)])

        assert symset_from_dict(cfg1, symset_to_dict(S)) == S

    def test_symset_payload_shape(self, cfg1):
        """Test the I/J axis format."""
        data = {"model": "bar", "rects": [{"I": {"seg": "1'"}, "J": {"seg": 1, "lo": 0}}]}

        S = symset_from_dict(cfg1, data)

        assert S.rects == (SlotRect(0, 0, 0, 1, 0, None),)

    def test_axes_in_either_order(self, cfg1):
        """Test that I and J are sorted by slot."""
        data = {"model": "bar", "rects": [{"I": {"seg": 1, "lo": 0}, "J": {"seg": "1'"}}]}

        assert symset_from_dict(cfg1, data).rects == (SlotRect(0, 0, 0, 1, 0, None),)

    def test_label_out_of_range(self, cfg1):
        """Test that labels beyond m are rejected with their location."""
        data = {"model": "bar", "rects": [{"I": {"seg": 3}, "J": {"seg": 1}}]}

        with pytest.raises(SchemaError, match=r"rects/0"):
            symset_from_dict(cfg1, data)

    def test_unknown_model(self, cfg1):
        """Test that the model must be 2m or bar."""
        with pytest.raises(SchemaError, match="Invalid arcset"):
            symset_from_dict(cfg1, {"model": "3m", "rects": []})

    def test_finset(self, cfg1, blob_arc):
        """Test finite arc sets."""
        F = finset_from_dict(cfg1, {"W": 2, "arcs": [[{"blob": "1'"}, {"seg": 1, "pos": 2}]]})

        assert F.W == 2
        assert blob_arc(2) in F


class TestPartitions:
    """Test cases for partition payloads."""

    def test_plain_partition(self):
        """Test a plain partition payload."""
        assert partition_from_dict({"k": 3, "blocks": [[1, 3], [2]]}) == NcPartition.of(3, [[1, 3], [2]])

    def test_bad_blocks(self):
        """Test that blocks must partition [k]."""
        with pytest.raises(SchemaError, match="partition/blocks"):
            partition_from_dict({"k": 3, "blocks": [[1, 3]]})

    def test_hd_payload(self, cfg1, hd_payload, hd_single_block):
        """Test a half-decorated payload with string labels."""
        assert decorated_from_dict(cfg1, hd_payload) == hd_single_block

    def test_alt_payload(self, cfg1, alt_payload, alt_reg0):
        """Test an alternating payload."""
        assert decorated_from_dict(cfg1, alt_payload) == alt_reg0

    def test_decorated_round_trip(self, cfg2):
        """Test marker and accend decorations through a payload."""
        datum = HalfDecNcp(NcPartition.of(4, [[1, 4], [2], [3]]), (Decoration.marker(), Decoration.accend()))

        assert decorated_from_dict(cfg2, decorated_to_dict(cfg2, datum)) == datum

    def test_accend_target(self, cfg2):
        """Test that x_1 may only end at 2'."""
        data = decorated_to_dict(cfg2, AltNcp(NcPartition.finest(2), (Decoration.accend(), Decoration.marker())))

        assert data["decor"]["1"] == {"accend": "2'"}
        data["decor"]["1"] = {"accend": "1'"}
        with pytest.raises(SchemaError, match="may only end at 2'"):
            decorated_from_dict(cfg2, data)

    def test_decoration_on_wrong_segment(self, cfg1, hd_payload):
        """Test that x_1 must lie on segment 1."""
        hd_payload["decor"]["1"] = {"seg": "1'", "pos": 0}

        with pytest.raises(SchemaError, match="must lie on segment 1"):
            decorated_from_dict(cfg1, hd_payload)

    def test_m_mismatch(self, cfg2, hd_payload):
        """Test that the payload m must match the engine m."""
        with pytest.raises(SchemaError, match="decorated/m"):
            decorated_from_dict(cfg2, hd_payload)

    def test_missing_decorations(self, cfg1, hd_payload):
        """Test that every x_i is required."""
        hd_payload["decor"] = {}

        with pytest.raises(SchemaError, match="decor needs keys"):
            decorated_from_dict(cfg1, hd_payload)

    def test_invalid_decorated_partition(self, cfg1, hd_payload):
        """Test that decoration rules are enforced."""
        hd_payload["blocks"] = [["1'"], ["1"]]
        hd_payload["decor"]["1"] = {"accend": "1'"}

        with pytest.raises(SchemaError, match="not a half-decorated"):
            decorated_from_dict(cfg1, hd_payload)

    def test_alt_rejects_unprimed_labels(self, cfg1, alt_payload):
        """Test that alternating blocks hold primed labels only."""
        alt_payload["blocks"] = [["1"]]

        with pytest.raises(SchemaError, match="primed labels"):
            decorated_from_dict(cfg1, alt_payload)
