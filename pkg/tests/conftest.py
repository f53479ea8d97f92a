import pytest

import helpers


@pytest.fixture(scope="session")
def uniforms():
    return helpers.uniform_corpus()


@pytest.fixture(scope="session")
def graphs():
    return helpers.graph_corpus()


@pytest.fixture(scope="session")
def gf2s():
    return helpers.gf2_corpus()


@pytest.fixture(scope="session")
def corpus(uniforms, graphs, gf2s):
    out = list(uniforms)
    out += [(name, m) for name, _, m in graphs]
    out += list(gf2s)
    return out


@pytest.fixture(scope="session")
def small_corpus(corpus):
    return [(name, m) for name, m in corpus if len(m.ground) <= 6]
