import pytest

from crcodes.code import code_from_parity
from crcodes.constructions import construction_I, cyclic_hamming
from crcodes.gfq import field_new
from crcodes.matgf import GFMatrix


@pytest.fixture(scope="session")
def gf2():
    return field_new(2, 1)


@pytest.fixture(scope="session")
def hamming7():
    return code_from_parity(cyclic_hamming(2, 3), family="hamming")


@pytest.fixture(scope="session")
def even3(gf2):
    return code_from_parity(GFMatrix(gf2, [[1, 1, 1]]))


@pytest.fixture(scope="session")
def i232():
    return construction_I(2, 3, 2)


# filled by test_acceptance; echoed after the run so the table survives capture
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
