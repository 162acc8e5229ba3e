import pytest

from hexforcing.families import Family, FamilySpec, generate
from hexforcing.hexgrid import HexSystem

# filled by test_acceptance, printed once at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


def family(name, p, q=1) -> HexSystem:
    return generate(FamilySpec(Family(name), p, q))[0]


SINGLE = HexSystem([(0, 0)])
NAPHTHALENE = family("parallelogram", 1, 2)
ANTHRACENE = family("parallelogram", 1, 3)
P22 = family("parallelogram", 2, 2)
PHENANTHRENE = HexSystem([(0, 0), (2, 0), (3, 3)])
CORONENE = family("hexagon", 2)


@pytest.fixture(params=["single", "naphthalene", "anthracene", "p22", "phenanthrene"])
def small_system(request):
    return {
        "single": SINGLE,
        "naphthalene": NAPHTHALENE,
        "anthracene": ANTHRACENE,
        "p22": P22,
        "phenanthrene": PHENANTHRENE,
    }[request.param]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
