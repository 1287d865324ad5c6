import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from latticeiso import _kernels  # noqa: E402

BACKENDS = [("python", _kernels.pure)]
if _kernels.compiled is not None:
    BACKENDS.append(("cython", _kernels.compiled))


@pytest.fixture(params=BACKENDS, ids=[name for name, _ in BACKENDS])
def kernels(request):
    return request.param[1]


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for ok, name, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
