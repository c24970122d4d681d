import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import _acceptance  # noqa: E402


def pytest_terminal_summary(terminalreporter):
    if not _acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in _acceptance.summary_lines():
        terminalreporter.write_line(line)
