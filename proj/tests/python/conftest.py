import os
import pathlib
import subprocess

import pytest

ROOT = pathlib.Path(os.environ.get("OLOGISM_ROOT", pathlib.Path(__file__).resolve().parents[2]))
DATA = ROOT / "data"


@pytest.fixture
def data():
    return DATA


@pytest.fixture
def run():
    binary = os.environ.get("OLOGISM_BIN", str(ROOT / "build" / "ologism"))
    if not os.path.exists(binary):
        pytest.skip("ologism binary not built")

    def go(*args, stdin=None):
        env = dict(os.environ, NO_COLOR="1")
        return subprocess.run([binary, *map(str, args)], input=stdin, capture_output=True, text=True, env=env)

    return go
