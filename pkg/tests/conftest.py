import os
import tempfile

import pytest

# The invariant cache opens at import time; point it somewhere disposable first.
os.environ.setdefault("TWOBRIDGE_CACHE_DIR", tempfile.mkdtemp(prefix="twobridge-cache-"))


@pytest.fixture
def scenario_dir(tmp_path, monkeypatch):
    directory = tmp_path / "scenarios"
    directory.mkdir()
    monkeypatch.setenv("TWOBRIDGE_SCENARIO_PATH", str(directory))
    return directory
