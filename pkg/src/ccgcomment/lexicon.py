"""Lexicon representation and the lexicon file loader.

File format (UTF-8 text):

    # comment lines and blank lines are ignored
    roots: S[imp], S[ger]          exactly one roots declaration
    word := Category : lambda-term
    word := Category : lambda-term @weight 2

Words in a file are lowercase; homonyms are simply repeated entries.
Entry semantics must be closed and are stored beta-normal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources

from .categories import Atom, Category, CategorySyntaxError, parse_category
from .terms import (
    Const,
    FuelExhausted,
    Term,
    TermSyntaxError,
    beta_normalize,
    free_vars,
    parse_term,
)


class LexiconError(Exception):
    pass


class LexiconSyntaxError(LexiconError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class DuplicateRootDecl(LexiconError):
    def __init__(self, line: int):
        super().__init__(f"line {line}: duplicate roots declaration")
        self.line = line


class EmptyLexicon(LexiconError):
    def __init__(self):
        super().__init__("lexicon has no entries")


@dataclass(frozen=True)
class LexEntry:
    word: str
    cat: Category
    sem: Term
    weight: int = 1


@dataclass(frozen=True)
class Lexicon:
    entries: tuple[LexEntry, ...]
    root_cats: tuple[Category, ...]
    _by_word: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        index: dict[str, list[LexEntry]] = {}
        for entry in self.entries:
            index.setdefault(entry.word, []).append(entry)
        object.__setattr__(self, "_by_word", {w: tuple(es) for w, es in index.items()})

    def lookup(self, word: str) -> tuple[LexEntry, ...]:
        return self._by_word.get(word, ())

    def words(self) -> tuple[str, ...]:
        return tuple(self._by_word)


_WORD_RE = re.compile(r"[a-z][a-z0-9_']*\Z")
_WEIGHT_RE = re.compile(r"(.*?)\s*@weight\s+(\d+)\s*\Z")


def load_lexicon(source) -> Lexicon:
    """Parse a lexicon from a string or a readable text stream."""
    text = source.read() if hasattr(source, "read") else source
    entries: list[LexEntry] = []
    roots: tuple[Category, ...] | None = None
    roots_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("roots:"):
            if roots is not None:
                raise DuplicateRootDecl(lineno)
            parts = [p.strip() for p in line[len("roots:"):].split(",")]
            if not all(parts):
                raise LexiconSyntaxError(lineno, "empty root category")
            try:
                roots = tuple(parse_category(p) for p in parts)
            except CategorySyntaxError as exc:
                raise LexiconSyntaxError(lineno, str(exc)) from exc
            roots_line = lineno
            continue
        if ":=" not in line:
            raise LexiconSyntaxError(lineno, "expected 'word := Category : term'")
        word_part, rest = line.split(":=", 1)
        word = word_part.strip()
        if not _WORD_RE.match(word):
            raise LexiconSyntaxError(lineno, f"bad word {word!r}")
        weight = 1
        wm = _WEIGHT_RE.match(rest)
        if wm:
            rest, weight = wm.group(1), int(wm.group(2))
        if ":" not in rest:
            raise LexiconSyntaxError(lineno, "missing ':' between category and term")
        cat_part, term_part = rest.split(":", 1)
        try:
            cat = parse_category(cat_part.strip())
        except CategorySyntaxError as exc:
            raise LexiconSyntaxError(lineno, str(exc)) from exc
        try:
            sem = parse_term(term_part.strip())
        except TermSyntaxError as exc:
            raise LexiconSyntaxError(lineno, str(exc)) from exc
        if free_vars(sem):
            raise LexiconSyntaxError(
                lineno, f"entry semantics not closed: free {sorted(free_vars(sem))}")
        try:
            sem = beta_normalize(sem)
        except FuelExhausted as exc:
            raise LexiconSyntaxError(lineno, f"semantics do not normalize: {exc}") from exc
        entries.append(LexEntry(word, cat, sem, weight))

    if not entries:
        raise EmptyLexicon()
    if roots is None:
        raise LexiconSyntaxError(roots_line or 1, "missing roots declaration")
    return Lexicon(tuple(entries), roots)


def extend_with_identifiers(lex: Lexicon, names) -> Lexicon:
    """Extended copy of `lex` with an `NP : name` entry per identifier.

    Identifiers come from analyzed source code, so any spelling is
    accepted verbatim.  Re-adding a name is a no-op.
    """
    existing = {(e.word, e.cat, e.sem) for e in lex.entries}
    added: list[LexEntry] = []
    for name in names:
        entry = LexEntry(name, Atom("NP"), Const(name), 1)
        key = (entry.word, entry.cat, entry.sem)
        if key not in existing:
            existing.add(key)
            added.append(entry)
    if not added:
        return lex
    return Lexicon(lex.entries + tuple(added), lex.root_cats)


def bundled_lexicon_text(name: str = "english.ccg") -> str:
    return resources.files(__package__).joinpath("lexicons").joinpath(name).read_text("utf-8")


def load_bundled_lexicon(name: str = "english.ccg") -> Lexicon:
    return load_lexicon(bundled_lexicon_text(name))
