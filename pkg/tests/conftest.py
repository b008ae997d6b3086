import pytest

from resolve_lab import kernels

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=["pure", "compiled"])
def backend(request):
    if request.param == "compiled" and kernels._fast is None:
        pytest.skip("compiled kernels not built")
    previous = kernels.use_backend(request.param)
    yield request.param
    kernels.use_backend(previous)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
