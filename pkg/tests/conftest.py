import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    """One verdict line per acceptance criterion."""
    verdicts = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            n = int(nodeid.split("test_criterion_")[1].split("_")[0])
            verdicts[n] = verdicts.get(n, True) and key == "passed"
    if verdicts:
        terminalreporter.section("acceptance")
        for n in sorted(verdicts):
            terminalreporter.write_line(f"criterion {n}: {'PASS' if verdicts[n] else 'FAIL'}")
