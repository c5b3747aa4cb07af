import contextlib

ACCEPTANCE = []


@contextlib.contextmanager
def criterion(label, description):
    """Record a PASS/FAIL line for the acceptance summary."""
    try:
        yield
    except BaseException:
        ACCEPTANCE.append((label, description, False))
        raise
    ACCEPTANCE.append((label, description, True))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, description, ok in sorted(ACCEPTANCE, key=lambda r: r[0]):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {label}: {description}")
