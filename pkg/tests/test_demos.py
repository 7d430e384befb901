import runpy
from pathlib import Path

import pytest

from cas_workbench.repl import run_script

DEMOS = Path(__file__).resolve().parent.parent / "demos"


@pytest.mark.parametrize("script", sorted(p.name for p in DEMOS.glob("*.py")))
def test_demo_runs(script, capsys):
    runpy.run_path(str(DEMOS / script), run_name="__main__")
    assert capsys.readouterr().out


def test_session_demo():
    transcript = run_script(DEMOS / "session.sing")
    assert transcript.ok
    assert "48" in transcript.outputs
