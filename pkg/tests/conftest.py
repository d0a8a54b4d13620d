import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

# criterion number -> title, outcomes, notes
_CRITERIA: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion a test belongs to")


def _entry(item):
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return None
    number, title = mark.args
    return _CRITERIA.setdefault(number, {"title": title, "outcomes": [], "notes": []})


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    entry = _entry(item)
    if entry is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        if report.skipped:
            entry["outcomes"].append("skipped")
        else:
            entry["outcomes"].append("passed" if report.passed else "failed")


@pytest.fixture
def acceptance_log(request):
    """Notes attached to the criterion line in the acceptance summary."""
    entry = _entry(request.node)
    return entry["notes"].append if entry is not None else (lambda note: None)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        entry = _CRITERIA[number]
        outcomes = entry["outcomes"]
        if outcomes and all(o == "skipped" for o in outcomes):
            status = "NOT RUN"
        elif outcomes and all(o != "failed" for o in outcomes):
            status = "PASS"
        else:
            status = "FAIL"
        tr.write_line(f"criterion {number}: {status:<7} {entry['title']}")
        for note in entry["notes"]:
            tr.write_line(f"    {note}")

