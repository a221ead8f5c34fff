"""Shared fixtures: the documented three-player instance and small scales."""

import json

import pytest

from symsug import Capacity, Profile, levels_scale, unit_scale, worked_example


@pytest.fixture(scope="session")
def unit():
    return unit_scale()


@pytest.fixture(scope="session")
def l3():
    return levels_scale(3)


@pytest.fixture(scope="session")
def worked():
    """The documented capacity/profile pair on the unit scale."""
    return worked_example()


WORKED_DOCUMENT = {
    "scale": {"kind": "unit"},
    "players": ["cost", "quality", "delivery"],
    "capacity": {
        "{}": "0",
        "{1}": "0.3",
        "{2}": "0.25",
        "{3}": "0.2",
        "{1,2}": "0.4",
        "{1,3}": "0.3",
        "{2,3}": "0.6",
        "{1,2,3}": "1",
    },
    "profile": ["-1", "0.3", "1"],
}


@pytest.fixture()
def worked_file(tmp_path):
    """The same instance serialized as a problem document on disk."""
    path = tmp_path / "worked.json"
    path.write_text(json.dumps(WORKED_DOCUMENT), encoding="utf-8")
    return path


def make_capacity(scale, grades):
    """Capacity from a mask-ordered tuple of raw grades."""
    return Capacity(
        (len(grades)).bit_length() - 1,
        scale,
        tuple(scale.value(g) for g in grades),
    )


def make_profile(scale, grades):
    return Profile(scale, tuple(scale.value(g) for g in grades))
