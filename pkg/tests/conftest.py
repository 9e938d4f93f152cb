from lrpcdec.core.config import (
    CodeParameters,
    Config,
    DecoderParameters,
    RunParameters,
    WorkspaceParameters,
)
from lrpcdec.core.field import FieldParams, make_field
from lrpcdec.core.lrpc import PlantedInstance, plant_instance

from pytest import fixture
import numpy as np


@fixture(scope="session")
def f2_4() -> FieldParams:
    return make_field(2, 4)


@fixture(scope="session")
def f2_10() -> FieldParams:
    return make_field(2, 10)


@fixture(scope="session")
def f3_6() -> FieldParams:
    return make_field(3, 6)


@fixture(scope="session")
def f2_16() -> FieldParams:
    return make_field(2, 16)


@fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240601)


@fixture
def planted():
    """Build planted (A, E, S) instances from a seed"""

    def build(params: FieldParams, r: int, d: int, c: int, seed: int = 0) -> PlantedInstance:
        return plant_instance(params, r, d, c, np.random.default_rng(seed))

    return build


@fixture
def small_config(tmp_path) -> Config:
    """A fast intersect experiment over F_2^16 writing into a temporary workspace"""
    return Config(
        workspace=WorkspaceParameters(workspace_path=str(tmp_path / "workspace")),
        code=CodeParameters(q=2, m=16, n=None, k=1, r=2, d=3, c=1),
        decoder=DecoderParameters(algorithm="intersect", t=2),
        run=RunParameters(trials=8, seed=7),
    )
