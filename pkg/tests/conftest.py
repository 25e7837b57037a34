import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

# filled by tests/test_acceptance.py: criterion number -> (description, passed, seconds, limit)
ACCEPTANCE_RESULTS: dict[int, tuple[str, bool, float, float]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        what, ok, secs, limit = ACCEPTANCE_RESULTS[num]
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {num:>2}: {verdict}  {what}  ({secs:.2f}s, limit {limit:g}s)")
