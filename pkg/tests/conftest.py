"""
Pytest configuration and shared fixtures for the infgon engine tests.
"""

import pytest

from src.infgon.gon_model import Arc, GonConfig, Model, blob, reg
from src.infgon.ncp import Decoration, NcPartition, make_alt, make_hd


@pytest.fixture
def cfg1():
    """Engine configuration with a single accumulation pair."""
    return GonConfig(1)


@pytest.fixture
def cfg2():
    """Engine configuration with two accumulation pairs."""
    return GonConfig(2)


@pytest.fixture
def hd_single_block(cfg1):
    """m=1, P = {{1', 1}}, x_1 = 0."""
    return make_hd(cfg1, NcPartition.of(2, [[1, 2]]), [Decoration.reg(0)])


@pytest.fixture
def alt_reg0(cfg1):
    """m=1, P = {{1'}}, x_1 = 0."""
    return make_alt(cfg1, NcPartition.of(1, [[1]]), [Decoration.reg(0)])


@pytest.fixture
def alt_ttf(cfg2):
    """m=2, P = {{1', 2'}}, x_1 = marker, x_2 = accumulation end."""
    return make_alt(cfg2, NcPartition.of(2, [[1, 2]]), [Decoration.marker(), Decoration.accend()])


@pytest.fixture
def hd_payload():
    """Half-decorated partition payload for m=1."""
    return {
        "kind": "hd",
        "m": 1,
        "blocks": [["1'", "1"]],
        "decor": {"1": {"seg": 1, "pos": 0}},
    }


@pytest.fixture
def alt_payload():
    """Alternating partition payload for m=1."""
    return {
        "kind": "alt",
        "m": 1,
        "blocks": [["1'"]],
        "decor": {"1": {"seg": 1, "pos": 0}},
    }


@pytest.fixture
def blob_arc():
    """Factory for blob arcs (i', n) of the completed gon."""
    def make(pos=0, index=1):
        return Arc(blob(index), reg(index, pos), Model.BAR)
    return make
