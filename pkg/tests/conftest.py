import contextlib
import time

ACCEPTANCE_LINES = []


@contextlib.contextmanager
def criterion(number, title):
    """Record one PASS/FAIL line for an acceptance criterion."""
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        line = f"criterion {number} FAIL  {title} ({type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        raise
    line = f"criterion {number} PASS  {title} [{time.perf_counter() - start:.1f}s]"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
