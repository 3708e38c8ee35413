import pytest

from covres import cache


@pytest.fixture(autouse=True)
def no_disk_cache():
    """Tests run without the on-disk cache unless they configure one."""
    previous = cache.active()
    cache.configure(enabled=False)
    yield
    cache._active = previous


ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    return request.config.stash.setdefault(ACCEPTANCE, [])


def pytest_terminal_summary(terminalreporter, config):
    rows = config.stash.get(ACCEPTANCE, [])
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, ok, elapsed, limit in sorted(rows):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {num:>2}. {title} ({elapsed:.2f}s, limit {limit:.0f}s)")
