"""Crash-safety fuzzing: the hand-written parsers may reject input only
with their declared error types, never with anything else."""

from hypothesis import given, settings, strategies as st

from ccgcomment import pyparse as py
from ccgcomment.categories import CategorySyntaxError, parse_category
from ccgcomment.lexicon import LexiconError, load_lexicon
from ccgcomment.terms import TermSyntaxError, parse_term

source_alphabet = st.sampled_from(
    list("abxyz013 _=+-*/%<>!().[]{}:,#'\"\n\t") + ["if ", "def ", "for ", "while ",
                                                   "return", "in ", "and ", "not ", "else:"])


@settings(max_examples=300, deadline=None)
@given(st.lists(source_alphabet, max_size=40).map("".join))
def test_parse_source_total(text):
    try:
        stmts = py.parse_source(text)
    except py.SourceSyntaxError:
        return
    assert isinstance(stmts, tuple)


@settings(max_examples=300, deadline=None)
@given(st.text(alphabet="abx'\\.&(), ", max_size=30))
def test_parse_term_total(text):
    try:
        parse_term(text)
    except TermSyntaxError:
        pass


@settings(max_examples=300, deadline=None)
@given(st.text(alphabet="SNP/\\()[]imp ", max_size=25))
def test_parse_category_total(text):
    try:
        parse_category(text)
    except CategorySyntaxError:
        pass


@settings(max_examples=200, deadline=None)
@given(st.text(alphabet="abxyz:=\\. &()#@\nSNP/", max_size=80))
def test_load_lexicon_total(text):
    try:
        load_lexicon(text)
    except LexiconError:
        pass


@settings(max_examples=200, deadline=None)
@given(st.text(max_size=60))
def test_ingest_ast_total(text):
    try:
        py.ingest_ast(text)
    except py.SchemaError:
        pass
