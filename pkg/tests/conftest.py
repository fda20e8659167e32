def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import CRITERIA, RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        if n not in RESULTS:
            terminalreporter.write_line(f"acceptance {n:2d}: not run  {CRITERIA[n][0]}")
            continue
        ok, text = RESULTS[n]
        terminalreporter.write_line(f"acceptance {n:2d}: {'pass' if ok else 'FAIL'}  {text}")
