import pytest

import arabiclint as al


@pytest.fixture(scope="session")
def engine():
    return al.Engine.default()


@pytest.fixture(scope="session")
def lexicon(engine):
    return engine.lexicon


@pytest.fixture(scope="session")
def affixes(engine):
    return engine.affixes


@pytest.fixture(scope="session")
def corpus_path():
    return al.data_path("corpus/table_4_1.jsonl")
