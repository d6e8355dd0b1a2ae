import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", []))
            if "criterion" in props and rep.when == "call":
                rows.append((props["criterion"], outcome))
    if rows:
        terminalreporter.section("acceptance criteria")
        for crit, outcome in sorted(rows, key=lambda r: int(r[0].split()[0])):
            terminalreporter.write_line(f"[{'PASS' if outcome == 'passed' else 'FAIL'}] criterion {crit}")
