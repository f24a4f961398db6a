from __future__ import annotations

import re

_AC = re.compile(r"test_acceptance\.py::test_ac(\d+)")


def pytest_terminal_summary(terminalreporter):
    outcomes: dict[int, str] = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            hit = _AC.search(getattr(rep, "nodeid", ""))
            if not hit:
                continue
            k = int(hit.group(1))
            if status != "passed":
                outcomes[k] = "FAIL"
            else:
                outcomes.setdefault(k, "PASS")
    if outcomes:
        terminalreporter.section("acceptance criteria")
        for k in sorted(outcomes):
            terminalreporter.write_line(f"AC-{k} {outcomes[k]}")
