import pytest

_LEDGER_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LEDGER_KEY] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; the summary prints one PASS/FAIL line each."""
    ledger = request.config.stash[_LEDGER_KEY]

    def record(cid: str, ok: bool, detail: str = "") -> bool:
        line = f"{'PASS' if ok else 'FAIL'} {cid} {detail}".rstrip()
        ledger.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LEDGER_KEY, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
