import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import support  # noqa: E402


def pytest_terminal_summary(terminalreporter):
    results = support.ACCEPTANCE
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title in support.CRITERIA.items():
        entries = results.get(number, [])
        if not entries:
            terminalreporter.write_line(f"criterion {number} ({title}): FAIL - no result recorded")
            continue
        ok = all(e[1] for e in entries)
        detail = "; ".join(f"{label}: {'ok' if passed else 'FAIL'} {info}".strip() for label, passed, info in entries)
        terminalreporter.write_line(f"criterion {number} ({title}): {'PASS' if ok else 'FAIL'} - {detail}")
