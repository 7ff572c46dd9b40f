"""Lambda-calculus terms: substitution, beta normalization, equivalence.

Terms carry the word meanings in the lexicon and the logical forms
extracted from source statements.  Conjunction is a first-class node and
is compared as a flattened multiset, so `p() & q()` and `q() & p()` are
equivalent.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce


class FuelExhausted(Exception):
    """Normalization did not reach a normal form within its step budget."""


class TermSyntaxError(Exception):
    def __init__(self, position: int, message: str):
        super().__init__(f"term syntax error at offset {position}: {message}")
        self.position = position
        self.message = message


@dataclass(frozen=True, slots=True)
class Var:
    name: str


@dataclass(frozen=True, slots=True)
class Const:
    name: str


@dataclass(frozen=True, slots=True)
class Pred:
    name: str
    args: tuple = ()


@dataclass(frozen=True, slots=True)
class Abs:
    param: str
    body: "Term"


@dataclass(frozen=True, slots=True)
class App:
    fn: "Term"
    arg: "Term"


@dataclass(frozen=True, slots=True)
class Conj:
    left: "Term"
    right: "Term"


Term = Var | Const | Pred | Abs | App | Conj


def free_vars(term: Term) -> frozenset[str]:
    match term:
        case Var(name):
            return frozenset((name,))
        case Const():
            return frozenset()
        case Pred(_, args):
            return frozenset().union(*(free_vars(a) for a in args)) if args else frozenset()
        case Abs(param, body):
            return free_vars(body) - {param}
        case App(fn, arg):
            return free_vars(fn) | free_vars(arg)
        case Conj(left, right):
            return free_vars(left) | free_vars(right)
    raise TypeError(f"not a term: {term!r}")


def node_count(term: Term) -> int:
    match term:
        case Var() | Const():
            return 1
        case Pred(_, args):
            return 1 + sum(node_count(a) for a in args)
        case Abs(_, body):
            return 1 + node_count(body)
        case App(fn, arg) | Conj(fn, arg):
            return 1 + node_count(fn) + node_count(arg)
    raise TypeError(f"not a term: {term!r}")


def is_ground(term: Term) -> bool:
    """Ground terms contain no variables and no abstractions."""
    match term:
        case Var() | Abs():
            return False
        case Const():
            return True
        case Pred(_, args):
            return all(is_ground(a) for a in args)
        case App(fn, arg) | Conj(fn, arg):
            return is_ground(fn) and is_ground(arg)
    raise TypeError(f"not a term: {term!r}")


def fresh_name(base: str, avoid: frozenset[str] | set[str]) -> str:
    name = base
    while name in avoid:
        name += "'"
    return name


def substitute(term: Term, var: str, value: Term) -> Term:
    """Capture-avoiding substitution of `value` for free occurrences of `var`."""
    match term:
        case Var(name):
            return value if name == var else term
        case Const():
            return term
        case Pred(name, args):
            return Pred(name, tuple(substitute(a, var, value) for a in args))
        case App(fn, arg):
            return App(substitute(fn, var, value), substitute(arg, var, value))
        case Conj(left, right):
            return Conj(substitute(left, var, value), substitute(right, var, value))
        case Abs(param, body):
            if param == var:
                return term
            if var not in free_vars(body):
                return term
            if param in free_vars(value):
                renamed = fresh_name(param, free_vars(body) | free_vars(value) | {var})
                body = substitute(body, param, Var(renamed))
                return Abs(renamed, substitute(body, var, value))
            return Abs(param, substitute(body, var, value))
    raise TypeError(f"not a term: {term!r}")


def _reduce_once(term: Term) -> Term | None:
    """One leftmost-outermost beta step; None when the term is normal."""
    match term:
        case App(Abs(param, body), arg):
            return substitute(body, param, arg)
        case App(fn, arg):
            step = _reduce_once(fn)
            if step is not None:
                return App(step, arg)
            step = _reduce_once(arg)
            return App(fn, step) if step is not None else None
        case Abs(param, body):
            step = _reduce_once(body)
            return Abs(param, step) if step is not None else None
        case Conj(left, right):
            step = _reduce_once(left)
            if step is not None:
                return Conj(step, right)
            step = _reduce_once(right)
            return Conj(left, step) if step is not None else None
        case Pred(name, args):
            for i, a in enumerate(args):
                step = _reduce_once(a)
                if step is not None:
                    return Pred(name, args[:i] + (step,) + args[i + 1:])
            return None
        case Var() | Const():
            return None
    raise TypeError(f"not a term: {term!r}")


def beta_normalize(term: Term, fuel: int | None = None) -> Term:
    """Reduce to beta-normal form by leftmost-outermost steps.

    `fuel` bounds the number of reduction steps; the default scales with
    term size.  Raises FuelExhausted when the budget runs out, which
    signals a malformed (non-terminating) lexicon entry.
    """
    if fuel is None:
        fuel = 10 * node_count(term) + 32
    if fuel <= 0:
        raise ValueError("fuel must be positive")
    for _ in range(fuel):
        step = _reduce_once(term)
        if step is None:
            return term
        term = step
    if _reduce_once(term) is None:
        return term
    raise FuelExhausted(f"no normal form within {fuel} steps")


def conjuncts(term: Term) -> list[Term]:
    """Flatten the Conj spine of a term into its conjunct list."""
    if isinstance(term, Conj):
        return conjuncts(term.left) + conjuncts(term.right)
    return [term]


def conj_of(parts: list[Term] | tuple[Term, ...]) -> Term:
    """Left-nested conjunction of one or more terms."""
    if not parts:
        raise ValueError("empty conjunction")
    return reduce(Conj, parts)


def _canonical(term: Term, env: dict[str, str], depth: int) -> Term:
    match term:
        case Var(name):
            return Var(env.get(name, name))
        case Const():
            return term
        case Pred(name, args):
            return Pred(name, tuple(_canonical(a, env, depth) for a in args))
        case App(fn, arg):
            return App(_canonical(fn, env, depth), _canonical(arg, env, depth))
        case Abs(param, body):
            slot = f"${depth}"
            return Abs(slot, _canonical(body, {**env, param: slot}, depth + 1))
        case Conj():
            parts = [_canonical(c, env, depth) for c in conjuncts(term)]
            parts.sort(key=format_term)
            return conj_of(parts)
    raise TypeError(f"not a term: {term!r}")


def canonical(term: Term) -> Term:
    """Alpha-canonical form with Conj spines sorted as multisets."""
    return _canonical(term, {}, 0)


def equivalent(a: Term, b: Term) -> bool:
    """Alpha-equivalence, treating conjunction as a multiset of conjuncts.

    Both terms are expected to be beta-normal.
    """
    return canonical(a) == canonical(b)


# ---------------------------------------------------------------------------
# Textual syntax
#
#   term := '\' ident '.' term | conj
#   conj := app ('&' app)*               left-associative
#   app  := atom+                        juxtaposition, left-associative
#   atom := ident '(' [term (',' term)*] ')' | ident | '(' term ')'
#
# An identifier is a Var exactly when it is bound by an enclosing lambda.
# ---------------------------------------------------------------------------

_IDENT_RE = re.compile(r"[A-Za-z0-9_][A-Za-z0-9_]*'*")


class _TermParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise TermSyntaxError(self.pos, message)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def ident(self) -> str:
        self.skip_ws()
        m = _IDENT_RE.match(self.text, self.pos)
        if not m:
            self.error("expected identifier")
        self.pos = m.end()
        return m.group()

    def term(self, bound: frozenset[str]) -> Term:
        if self.peek() == "\\":
            self.pos += 1
            param = self.ident()
            self.expect(".")
            return Abs(param, self.term(bound | {param}))
        return self.conj(bound)

    def conj(self, bound: frozenset[str]) -> Term:
        left = self.app(bound)
        while self.peek() == "&":
            self.pos += 1
            left = Conj(left, self.app(bound))
        return left

    def app(self, bound: frozenset[str]) -> Term:
        fn = self.atom(bound)
        while self._starts_atom():
            fn = App(fn, self.atom(bound))
        return fn

    def _starts_atom(self) -> bool:
        ch = self.peek()
        return ch == "(" or bool(_IDENT_RE.match(ch))

    def atom(self, bound: frozenset[str]) -> Term:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.term(bound)
            self.expect(")")
            return inner
        name = self.ident()
        # predicate parentheses attach directly to the name; a space means
        # application to a parenthesized term instead
        if self.pos < len(self.text) and self.text[self.pos] == "(":
            self.pos += 1
            args: list[Term] = []
            if self.peek() != ")":
                args.append(self.term(bound))
                while self.peek() == ",":
                    self.pos += 1
                    args.append(self.term(bound))
            self.expect(")")
            return Pred(name, tuple(args))
        return Var(name) if name in bound else Const(name)


def parse_term(text: str) -> Term:
    parser = _TermParser(text)
    term = parser.term(frozenset())
    parser.skip_ws()
    if parser.pos != len(text):
        parser.error("trailing input")
    return term


def _fmt_atom(term: Term) -> str:
    match term:
        case Var(name) | Const(name):
            return name
        case Pred(name, args):
            return f"{name}({', '.join(_fmt_top(a) for a in args)})"
        case _:
            return f"({_fmt_top(term)})"


def _fmt_app(term: Term) -> str:
    if isinstance(term, App):
        return f"{_fmt_app(term.fn) if isinstance(term.fn, App) else _fmt_atom(term.fn)} {_fmt_atom(term.arg)}"
    return _fmt_atom(term)


def _fmt_conj(term: Term) -> str:
    if isinstance(term, Conj):
        if isinstance(term.left, Conj):
            left = _fmt_conj(term.left)
        elif isinstance(term.left, Abs):
            left = f"({_fmt_top(term.left)})"
        else:
            left = _fmt_app(term.left)
        if isinstance(term.right, (Conj, Abs)):
            right = f"({_fmt_top(term.right)})"
        else:
            right = _fmt_app(term.right)
        return f"{left} & {right}"
    return _fmt_app(term)


def _fmt_top(term: Term) -> str:
    if isinstance(term, Abs):
        return f"\\{term.param}. {_fmt_top(term.body)}"
    return _fmt_conj(term)


def format_term(term: Term) -> str:
    """Print a term with minimal parentheses and single spaces."""
    return _fmt_top(term)
