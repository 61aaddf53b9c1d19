import pytest

CRITERIA = {
    1: "crown-P5 census sweep within 3/2(w^2-w)",
    2: "M(v) has no odd hole or antihole around every claw (crown, fork)",
    3: "crown-fork census sweep within 1/2(w^2+w) and at least chi",
    4: "crown-P3+P2 census sweep within 1/2w^2+3/2w+1, N2..N8 within 2w",
    5: "Groetzsch fixture",
    6: "claw-free census: chi <= 1/2(w^2+w)",
    7: "odd holes and antiholes split neither way; P4 and C4 do",
    8: "oracles agree with brute force",
    9: "hole attachment constructed instances",
    10: "sweep log is byte-identical across runs",
}


def pytest_configure(config):
    config._acceptance = {}
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number n")


@pytest.fixture
def criterion(request):
    number = request.node.get_closest_marker("criterion").args[0]
    results = request.config._acceptance
    results[number] = (False, "crashed before reporting")

    def report(passed: bool, detail: str = "") -> None:
        results[number] = (passed, detail)

    return report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config._acceptance
    if not results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number, title in CRITERIA.items():
        if number not in results:
            continue
        passed, detail = results[number]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:2d}. {title}" + (f" ({detail})" if detail else ""))
