import json
import pathlib

import pytest

from morseflow import flowgraph

FIXTURES = pathlib.Path(__file__).parent / "fixtures"

FLOW_FIXTURES = [
    "polar", "sphere1", "torus", "chain2", "cyclic", "homoclinic", "cycleface",
]
PROFILE_FIXTURES = [
    "genus2_morse", "genus1_morse", "genus0_polar", "genus0_degenerate",
]


def fixture_path(name: str) -> pathlib.Path:
    return FIXTURES / f"{name}.json"


def load_description(name: str) -> dict:
    return json.loads(fixture_path(name).read_text())


def load_flow(name: str) -> flowgraph.FlowGraph:
    return flowgraph.build(load_description(name))


@pytest.fixture
def polar():
    return load_flow("polar")


@pytest.fixture
def sphere1():
    return load_flow("sphere1")


@pytest.fixture
def torus():
    return load_flow("torus")


@pytest.fixture
def chain2():
    return load_flow("chain2")


@pytest.fixture
def cyclic():
    return load_flow("cyclic")


@pytest.fixture
def homoclinic():
    return load_flow("homoclinic")


@pytest.fixture
def cycleface():
    return load_flow("cycleface")
