import pytest

from slcob import genus

_CRITERIA: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture(scope="session")
def g12():
    return genus.curve_log(N=12)


@pytest.fixture(scope="session")
def g8():
    return genus.curve_log(N=8)


@pytest.fixture
def criterion():
    """record(number, title, ok, detail) prints one line and keeps it for the summary."""
    def record(number: int, title: str, ok: bool, detail: str = ""):
        line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else "")
        print(line)
        _CRITERIA[number] = (title, ok, detail)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, ok, detail = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}"
                                    + (f"  [{detail}]" if detail else ""))
