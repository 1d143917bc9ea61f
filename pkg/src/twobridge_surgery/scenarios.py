import logging
import os
from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel, Field, ValidationError, model_validator

from .conway import parse_word
from .errors import ScenarioError, TwoBridgeError
from .models import BasicClassSet, ConwayWord, LogTransformParams, RelativeSWVector, TorusClass
from .resources import get_scenario_files

logger = logging.getLogger(__name__)

SCENARIO_PATH_ENV_VAR = "TWOBRIDGE_SCENARIO_PATH"


class StrictSafeLoader(yaml.SafeLoader):
    """YAML Loader that disallows duplicate keys."""

    def construct_mapping(self, node: yaml.MappingNode, deep: bool = False) -> dict[Any, Any]:
        seen_keys: set = set()
        for key_node, _value_node in node.value:
            key = self.construct_object(key_node, deep=deep)
            if key in seen_keys:
                raise yaml.constructor.ConstructorError(
                    f"Duplicate key found in YAML: {key}", key_node.start_mark
                )
            seen_keys.add(key)
        return super().construct_mapping(node, deep=deep)


def load_yaml(path: Path) -> Any:
    with open(path) as f:
        return yaml.load(f, Loader=StrictSafeLoader)  # nosec B506


class TransformCandidate(BaseModel):
    """Relative SW sums for one admissible log transform with null-homologous core."""

    params: LogTransformParams
    relative: RelativeSWVector

    @model_validator(mode="before")
    @classmethod
    def coerce(cls, data: Any) -> Any:
        if isinstance(data, dict):
            data = dict(data)
            params = data.get("params")
            if isinstance(params, list | tuple):
                data["params"] = dict(zip(("p", "q", "r"), params))
            if isinstance(data.get("relative"), list):
                data["relative"] = {"values": data["relative"]}
        return data


class Scenario(BaseModel):
    name: str
    description: str | None = None
    rank: int = Field(..., ge=1, description="Rank of the free homology lattice")
    torus: TorusClass
    basic_classes: BasicClassSet
    knots: list[str] = Field(default_factory=list, description="Conway words, in report order")
    family: int | None = Field(None, ge=1, description="Append this many default family members")
    transforms: list[TransformCandidate] = Field(default_factory=list)
    simply_connected_complement: bool | None = Field(
        None, description="Recorded hypothesis on the torus complement; not checked"
    )

    @model_validator(mode="before")
    @classmethod
    def coerce(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        data = dict(data)
        if isinstance(data.get("torus"), list | tuple | str):
            data["torus"] = {"vector": data["torus"]}
        if isinstance(data.get("basic_classes"), list | dict):
            data["basic_classes"] = {"rank": data.get("rank"), "support": data["basic_classes"]}
        return data

    @model_validator(mode="after")
    def check_ranks(self) -> "Scenario":
        if self.torus.rank != self.rank:
            raise ValueError(f"torus {self.torus.vector} does not have rank {self.rank}")
        for candidate in self.transforms:
            for k in candidate.relative.values:
                if len(k) != self.rank:
                    raise ValueError(f"relative class {k} does not have rank {self.rank}")
        return self

    def words(self) -> list[ConwayWord]:
        words = []
        for text in self.knots:
            try:
                words.append(parse_word(text))
            except TwoBridgeError as exc:
                raise ScenarioError(f"scenario {self.name}: knot {text!r}: {exc}") from exc
        return words


def load_scenario(path: Path) -> Scenario:
    logger.debug("Loading scenario file: %s", path)
    try:
        data = load_yaml(path)
    except (OSError, yaml.YAMLError) as exc:
        raise ScenarioError(f"{path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ScenarioError(f"{path}: expected a mapping at top level")
    data.setdefault("name", path.stem)
    try:
        scenario = Scenario(**data)
    except ValidationError as exc:
        raise ScenarioError(f"{path}: {exc}") from exc
    except TwoBridgeError as exc:
        raise ScenarioError(f"{path}: {exc}") from exc
    scenario.words()
    return scenario


def _search_dirs() -> list[Path]:
    extra = os.getenv(SCENARIO_PATH_ENV_VAR)
    return [Path(extra).expanduser()] if extra else []


def list_scenarios() -> list[str]:
    names = {p.stem for p in get_scenario_files()}
    for directory in _search_dirs():
        if directory.is_dir():
            names |= {p.stem for p in directory.iterdir() if p.suffix in (".yaml", ".yml")}
    return sorted(names)


def resolve_scenario(name_or_path: str) -> Path:
    """A file path wins; otherwise ``name`` is looked up in the search path, then in the bundle."""
    candidate = Path(name_or_path).expanduser()
    if candidate.is_file():
        return candidate
    for directory in _search_dirs():
        for suffix in (".yaml", ".yml"):
            path = directory / f"{name_or_path}{suffix}"
            if path.is_file():
                return path
    for path in get_scenario_files():
        if path.stem == name_or_path:
            return path
    raise ScenarioError(
        f"scenario {name_or_path!r} not found; available: {', '.join(list_scenarios())}"
    )
