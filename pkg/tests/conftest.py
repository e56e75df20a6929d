import json
from pathlib import Path

import numpy as np
import pytest

from trendcast.series import Month, MonthlySeries, TransformState

ORACLE_DIR = Path(__file__).parent / "fixtures" / "oracle"
ORACLE_NAMES = sorted(p.stem for p in ORACLE_DIR.glob("*.json"))


def load_oracle(name):
    return json.loads((ORACLE_DIR / f"{name}.json").read_text())


def diff_series(values, id="x", start=Month(2004, 2)):
    return MonthlySeries(id, start, np.asarray(values, float), TransformState.DIFF)


@pytest.fixture(params=ORACLE_NAMES)
def oracle(request):
    return load_oracle(request.param)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        status, title, detail = results[number]
        line = f"{status} criterion {number}: {title}"
        terminalreporter.write_line(line + (f" ({detail})" if detail else ""))
