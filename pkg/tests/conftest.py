import pytest

from torsionkit.corpus import RingCorpus, builtin_ring

CORPUS_NAMES = ("zmod2", "zmod3", "zmod4", "zmod6", "zmod8", "f2xf2", "t2f2", "m2f2")

# T2(F2) entries are (1,1), (1,2), (2,2), first entry most significant
E11, E12, E22 = 4, 2, 1


@pytest.fixture(scope="session")
def corpora():
    return {name: RingCorpus(builtin_ring(name), name) for name in CORPUS_NAMES}


@pytest.fixture(scope="session")
def z4():
    return builtin_ring("zmod4")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
