import importlib.resources
from collections.abc import Iterator
from pathlib import Path

PACKAGE_DATA_PATH = "twobridge_surgery.data"
SCENARIOS_DIR = "scenarios"
CONVENTION_FIXTURE = "convention.yaml"


def get_convention_fixture_path() -> Path:
    """Returns the path to the bundled convention fixture."""
    return Path(str(importlib.resources.files(PACKAGE_DATA_PATH).joinpath(CONVENTION_FIXTURE)))


def get_scenario_files() -> Iterator[Path]:
    """Yields paths to all bundled YAML scenario files."""
    data_dir = importlib.resources.files(PACKAGE_DATA_PATH).joinpath(SCENARIOS_DIR)
    if not data_dir.is_dir():
        return

    for entry in sorted(data_dir.iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".yaml") or entry.name.endswith(".yml"):
            yield Path(str(entry))
