import pytest

from srg216.graph import build_graph, certify_srg
from srg216.hermitian import HermitianSurface, UnitaryPolarity
from srg216.ovoids import all_vertices
from srg216.projective import ProjectiveSpace
from srg216.subquadrangles import enumerate_subquadrangles

# scoreboard lines collected by the acceptance tests, echoed after the
# run so they show even without -s
ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_verdict():
    def _verdict(name, ok):
        line = "ACCEPTANCE %s: %s" % (name, "PASS" if ok else "FAIL")
        print(line)
        ACCEPTANCE_LINES.append(line)
        assert ok, "acceptance criterion %s failed" % name

    return _verdict


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_line("")
        terminalreporter.write_line("acceptance scoreboard:")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def space():
    return ProjectiveSpace()


@pytest.fixture(scope="session")
def polarity():
    return UnitaryPolarity.identity()


@pytest.fixture(scope="session")
def surface(space, polarity):
    return HermitianSurface(space, polarity)


@pytest.fixture(scope="session")
def subs(surface):
    return enumerate_subquadrangles(surface)


@pytest.fixture(scope="session")
def vertices(subs):
    return all_vertices(subs)


@pytest.fixture(scope="session")
def graph(surface, subs, vertices):
    return build_graph(surface, subs, vertices)


@pytest.fixture(scope="session")
def srg_params(graph):
    return certify_srg(graph)


@pytest.fixture(scope="session")
def build(space, polarity, surface, subs, vertices, graph):
    from srg216.pipeline import Build

    return Build(
        space=space,
        polarity=polarity,
        surface=surface,
        subquadrangles=subs,
        vertices=vertices,
        graph=graph,
    )
