import pathlib

import pytest

from causalspan.deptree import parse_conllu
from causalspan.extender import load_stopwords
from causalspan.patterns import load_library

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fig1():
    return parse_conllu((FIXTURES / "fig1.conllu").read_text())[0]


@pytest.fixture(scope="session")
def casestudy():
    return parse_conllu((FIXTURES / "casestudy.conllu").read_text())[0]


@pytest.fixture(scope="session")
def library():
    return load_library()


@pytest.fixture(scope="session")
def stopwords():
    return load_stopwords()
