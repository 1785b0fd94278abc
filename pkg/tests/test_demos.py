"""The narrative demo scripts run clean end to end."""

import subprocess
import sys
from pathlib import Path

import pytest

DEMOS = Path(__file__).resolve().parent.parent / "demos"
TOURS = sorted(DEMOS.glob("tour_*.py"))


@pytest.mark.parametrize("script", TOURS, ids=lambda p: p.stem)
def test_tour_runs_clean(script, tmp_path):
    args = [sys.executable, str(script)]
    if "figures" in script.name:
        args.append(str(tmp_path / "out.svg"))
    proc = subprocess.run(
        args, cwd=tmp_path, capture_output=True, text=True, timeout=120
    )
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip()


def test_three_tours_shipped():
    assert len(TOURS) == 3
