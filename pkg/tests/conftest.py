"""Shared hooks: one pass/fail summary line per acceptance criterion."""


def pytest_terminal_summary(terminalreporter):
    results = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            if getattr(rep, "when", "call") != "call" and status == "passed":
                continue
            tag = nodeid.split("test_criterion_")[1]
            num = int(tag.split("_")[0])
            results[num] = results.get(num, True) and status == "passed"
    if results:
        terminalreporter.write_sep("-", "acceptance criteria")
        for num in sorted(results):
            verdict = "PASS" if results[num] else "FAIL"
            terminalreporter.write_line(f"criterion {num}: {verdict}")
