import pytest

from motzkin_amplitude import explicit

_criteria: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for the acceptance summary."""
    record = {"detail": ""}
    yield record
    failed = getattr(request.node, "rep_call", None)
    ok = failed is not None and failed.passed
    _criteria.append((request.node.name, ok, record["detail"]))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _criteria:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


def off_by_one_kernel(n, a, row=None):
    """kernel_coeff with the leading index shifted from n+2-ka to n+1-ka."""
    if row is None:
        row = explicit.trinomial_row(n)
    total, ka = 0, a
    while ka <= n + 2:
        total += row[n + 1 - ka] - 2 * row[n - ka] + row[n - 2 - ka]
        ka += a
    return -total


@pytest.fixture
def faulty_kernel(monkeypatch):
    monkeypatch.setattr(explicit, "kernel_coeff", off_by_one_kernel)
