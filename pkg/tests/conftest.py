"""Shared acceptance-criteria recorder.

Acceptance tests call ``record(n, ok, detail)`` for criterion n; the
terminal summary then prints one ACCEPTANCE line per criterion so the
aggregate gate is readable at a glance even inside a long pytest run.
"""

from __future__ import annotations

from collections import defaultdict

_RESULTS: dict[int, list[tuple[bool, str]]] = defaultdict(list)

CRITERIA = range(1, 10)


def record(num: int, ok: bool, detail: str = "") -> None:
    _RESULTS[num].append((bool(ok), detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config) -> None:
    if not _RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for n in CRITERIA:
        if n not in _RESULTS:
            terminalreporter.write_line(f"ACCEPTANCE C{n} NOT RUN")
            continue
        entries = _RESULTS[n]
        ok = all(e[0] for e in entries)
        details = "; ".join(d for _, d in entries if d)
        line = f"ACCEPTANCE C{n} {'PASS' if ok else 'FAIL'}"
        if details:
            line += f" - {details}"
        terminalreporter.write_line(line)
