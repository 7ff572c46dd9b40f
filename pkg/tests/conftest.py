import pathlib

import pytest

from ccgcomment.lexicon import load_bundled_lexicon, load_lexicon

REPO = pathlib.Path(__file__).resolve().parent.parent
CORPUS = REPO / "corpus"

# The sort/array grammar used across parser and realizer tests: an
# imperative verb, a determiner and a noun, root VP.
SORT_LEXICON = r"""
roots: VP
sort := VP/NP : \x. sort'(x)
the := NP/N : \x. x
array := N : array'
"""


@pytest.fixture(scope="session")
def english():
    return load_bundled_lexicon()


@pytest.fixture(scope="session")
def sort_lexicon():
    return load_lexicon(SORT_LEXICON)


@pytest.fixture(scope="session")
def corpus_files():
    files = sorted(CORPUS.glob("*.py")) + sorted((CORPUS / "snippets").glob("*.py"))
    assert files, "bundled corpus is missing"
    return files


@pytest.fixture(scope="session")
def golden_dir():
    return CORPUS / "golden"
