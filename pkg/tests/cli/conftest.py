import json
from pathlib import Path

import pytest

from highgenus.config import THREADS_ENV

CUBE_OFF = """OFF
8 6 0
0 0 0
1 0 0
0 1 0
1 1 0
0 0 1
1 0 1
0 1 1
{top}
4 0 2 3 1
4 4 5 7 6
4 0 1 5 4
4 2 6 7 3
4 0 4 6 2
4 1 3 7 5
"""


@pytest.fixture(autouse=True)
def single_thread(monkeypatch):
    monkeypatch.delenv(THREADS_ENV, raising=False)


@pytest.fixture
def cube_off(tmp_path) -> Path:
    path = tmp_path / "cube.off"
    path.write_text(CUBE_OFF.format(top="1 1 1"))
    return path


@pytest.fixture
def lifted_cube_off(tmp_path) -> Path:
    path = tmp_path / "lifted.off"
    path.write_text(CUBE_OFF.format(top="1 1 2"))
    return path


@pytest.fixture
def read_stdout(capsys):
    """Parse what the last command printed as JSON."""

    def read() -> dict:
        return json.loads(capsys.readouterr().out)

    return read
