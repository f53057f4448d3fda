import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        title, ok, elapsed, limit = mod.RESULTS[number]
        tr.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}  "
                      f"({elapsed:.2f} s, limit {limit} s)")
