import pytest

from blockatlas import treegen


@pytest.fixture(scope="session")
def corpus():
    """Deterministic tree corpus shared by the slower sweep tests."""
    return treegen.standard_corpus(treegen.DEFAULT_SEED)
