"""Surface realization as A* search over shift-reduce derivation states.

The communicative goal is a multiset of ground predicates.  A state is a
stack of adjacent constituents plus the multiset of predicate and
constant symbols introduced so far.  Successors either shift a lexicon
entry whose symbols still fit inside the goal, or reduce the top two
stack constituents with one combinator.  Search cost is the summed
entry weight of the shifted words; the heuristic counts how many
covering shifts are still needed, so it never overestimates.

A shift is also skipped when the new word could never interact with the
constituent to its left: since reduction only ever touches the top two
stack items, the pair must eventually combine, either directly or after
the right item absorbs later material.  The reachable right-hand
categories are over-approximated from the lexicon, so that filter, like
the goal-subterm checks on reductions, only discards provably dead
states (provided word meanings use each argument exactly once, which
the bundled lexicon does).
"""

from __future__ import annotations

import heapq
import itertools
from collections import Counter
from dataclasses import dataclass
from math import ceil

from .categories import Atom, Backward, Category, Forward, format_category, unifies
from .chart import Derivation, combine
from .lexicon import Lexicon
from .terms import (
    Abs,
    App,
    Conj,
    Const,
    Pred,
    Term,
    Var,
    canonical,
    conj_of,
    conjuncts as term_conjuncts,
    equivalent,
    format_term,
    is_ground,
)


class NoRealization(Exception):
    """The search space was exhausted without reaching the goal."""


class LimitExceeded(Exception):
    """The expansion budget ran out; retry with larger limits."""


@dataclass(frozen=True)
class Goal:
    predicates: tuple[Term, ...]

    def __post_init__(self):
        if not self.predicates:
            raise ValueError("goal must contain at least one predicate")
        for p in self.predicates:
            if not isinstance(p, Pred) or not is_ground(p):
                raise ValueError(f"goal predicates must be ground: {p!r}")

    def as_term(self) -> Term:
        return conj_of(self.predicates)


@dataclass(frozen=True)
class SearchLimits:
    max_words: int = 12
    max_expansions: int = 200_000


@dataclass(frozen=True)
class Realization:
    tokens: tuple[str, ...]
    derivation: Derivation
    sem: Term
    cost: int


def symbol_counts(term: Term) -> Counter:
    """Multiset of predicate and constant symbols occurring in a term.

    Word meanings never drop or duplicate their arguments, so every
    symbol a shifted entry introduces survives into the final semantics;
    the goal's symbol multiset therefore bounds what may be shifted.
    """
    counts: Counter = Counter()
    stack = [term]
    while stack:
        t = stack.pop()
        match t:
            case Pred(name, args):
                counts[("p", name)] += 1
                stack.extend(args)
            case Const(name):
                counts[("c", name)] += 1
            case Abs(_, body):
                stack.append(body)
            case App(a, b) | Conj(a, b):
                stack.append(a)
                stack.append(b)
            case _:
                pass
    return counts


def _suffixes(cat: Category) -> set[Category]:
    out = {cat}
    while isinstance(cat, (Forward, Backward)):
        cat = cat.result
        out.add(cat)
    return out


def _right_reach(cat: Category, backward_functors: tuple[Category, ...]) -> tuple[Category, ...]:
    """Categories a constituent may end up with after absorbing material
    to its right (over-approximation)."""
    seen: dict[str, Category] = {format_category(cat): cat}
    frontier = [cat]
    while frontier:
        c = frontier.pop()
        grown = []
        if isinstance(c, Forward):
            grown.append(c.result)
        for b in backward_functors:
            if unifies(b.arg, c):
                grown.append(b.result)
        for g in grown:
            key = format_category(g)
            if key not in seen:
                seen[key] = g
                frontier.append(g)
    return tuple(seen.values())


def _coord_head_arity(cat: Category, sem: Term) -> int | None:
    """Arity of the Church tuple this entry builds with its left argument
    as first component, or None for ordinary entries.

    Recognizes `\\y. \\x. \\f. f x y` under `(T\\A)/B` (pair) and
    `\\p. \\x. \\f. p (f x)` (tuple extension by one component).
    """
    if not (isinstance(cat, Forward) and isinstance(cat.result, Backward)):
        return None
    if not (isinstance(sem, Abs) and isinstance(sem.body, Abs)
            and isinstance(sem.body.body, Abs)):
        return None
    right_p, left_p, f = sem.param, sem.body.param, sem.body.body.param
    t = sem.body.body.body
    if (isinstance(t, App) and isinstance(t.fn, App)
            and t.fn.fn == Var(f) and t.fn.arg == Var(left_p)
            and t.arg == Var(right_p)):
        return 2
    if (isinstance(t, App) and t.fn == Var(right_p)
            and isinstance(t.arg, App) and t.arg.fn == Var(f)
            and t.arg.arg == Var(left_p)):
        return 3
    return None


def _may_follow(top: Category, reach: tuple[Category, ...]) -> bool:
    """Could a constituent with right-reach `reach` ever combine with the
    constituent `top` on its left?"""
    if isinstance(top, Forward) and not isinstance(top.arg, Atom):
        return True  # composition can build functor arguments we do not enumerate
    for c in reach:
        if isinstance(top, Forward):
            if unifies(top.arg, c):
                return True
            if isinstance(c, Forward) and unifies(top.arg, c.result):
                return True
        if isinstance(c, Backward):
            if unifies(c.arg, top):
                return True
            if isinstance(top, Backward) and unifies(c.arg, top.result):
                return True
    return False


_reach_cache: dict[tuple, tuple[Category, ...]] = {}


class _Domain:
    """Per-lexicon tables shared across realization calls."""

    def __init__(self, lex: Lexicon):
        self.lex = lex
        backward = tuple(
            {format_category(s): s
             for e in lex.entries for s in _suffixes(e.cat)
             if isinstance(s, Backward)}.values())
        backward_sig = tuple(sorted(format_category(b) for b in backward))
        self.entry_symbols = [symbol_counts(e.sem) for e in lex.entries]
        if len(_reach_cache) > 4096:
            _reach_cache.clear()
        self.entry_reach = []
        for e in lex.entries:
            key = (backward_sig, format_category(e.cat))
            reach = _reach_cache.get(key)
            if reach is None:
                reach = _right_reach(e.cat, backward)
                _reach_cache[key] = reach
            self.entry_reach.append(reach)
        self.entry_coord_arity = [_coord_head_arity(e.cat, e.sem) for e in lex.entries]
        covering = [i for i, c in enumerate(self.entry_symbols) if c]
        self.max_preds = max((sum(self.entry_symbols[i].values()) for i in covering), default=1)
        self.min_cover_weight = min((lex.entries[i].weight for i in covering), default=1)
        # The first word of a sentence has nothing to its left, so its
        # right-closure must reach a root category outright.
        self.left_edge_ok = [
            any(unifies(c, root) for c in reach for root in lex.root_cats)
            for reach in self.entry_reach
        ]

    def heuristic(self, uncovered: int) -> int:
        return ceil(uncovered / self.max_preds) * self.min_cover_weight


_domain_cache: dict[int, tuple[Lexicon, _Domain]] = {}


def _domain_for(lex: Lexicon) -> _Domain:
    cached = _domain_cache.get(id(lex))
    if cached is not None and cached[0] is lex:
        return cached[1]
    domain = _Domain(lex)
    if len(_domain_cache) > 8:
        _domain_cache.clear()
    _domain_cache[id(lex)] = (lex, domain)
    return domain


def realize_all(lex: Lexicon, goal: Goal, k: int = 1,
                limits: SearchLimits = SearchLimits(),
                audit: bool = False) -> list[Realization]:
    """Up to k distinct realizations in nondecreasing cost order.

    Ties in cost are broken by lexicographic token order.  Raises
    NoRealization when the space is exhausted with no result and
    LimitExceeded when the expansion budget runs out first; if the budget
    runs out after at least one result was found, the results found so
    far are returned.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if limits.max_words < 1 or limits.max_expansions < 1:
        raise ValueError("limits must be positive")

    domain = _domain_for(lex)
    goal_term = goal.as_term()
    goal_symbols = Counter()
    for p in goal.predicates:
        goal_symbols.update(symbol_counts(p))
    total = sum(goal_symbols.values())

    coverable = Counter()
    for syms in domain.entry_symbols:
        coverable |= syms
    if any(coverable[s] == 0 for s in goal_symbols):
        missing = sorted(n for _, n in (s for s in goal_symbols if coverable[s] == 0))
        raise NoRealization(f"no lexicon entry introduces {missing}")

    entries = lex.entries
    entry_items = [tuple(syms.items()) for syms in domain.entry_symbols]
    root_cats = lex.root_cats
    counter = itertools.count()

    # Word meanings keep their arguments intact, so a constituent whose
    # meaning is already ground can only end up verbatim inside the final
    # semantics; prune reductions whose ground meaning is no goal subterm.
    # Conjunctions may only join whole goal predicates, and coordination
    # tuples must line up with consecutive arguments of a goal predicate.
    goal_subterms: set[str] = set()
    goal_conjuncts: set[str] = set()
    goal_arg_windows: set[tuple[str, ...]] = set()

    def _ckey(t: Term) -> str:
        return format_term(canonical(t))

    def note_subterms(t: Term):
        goal_subterms.add(_ckey(t))
        if isinstance(t, Pred):
            keys = [_ckey(a) for a in t.args]
            for size in (2, 3):
                for i in range(len(keys) - size + 1):
                    goal_arg_windows.add(tuple(keys[i:i + size]))
            for a in t.args:
                note_subterms(a)
        elif isinstance(t, Conj):
            for c in term_conjuncts(t):
                goal_conjuncts.add(_ckey(c))
                note_subterms(c)
        elif isinstance(t, App):
            note_subterms(t.fn)
            note_subterms(t.arg)

    for p in goal.predicates:
        note_subterms(p)
        goal_conjuncts.add(_ckey(p))

    def ground_ok(sem: Term) -> bool:
        if isinstance(sem, Conj):
            return all(_ckey(c) in goal_conjuncts for c in term_conjuncts(sem))
        return _ckey(sem) in goal_subterms

    def tuple_components(sem: Term) -> list[Term] | None:
        # \f. f a1 ... an with ground components (a coordination tuple)
        if not isinstance(sem, Abs):
            return None
        parts: list[Term] = []
        t = sem.body
        while isinstance(t, App):
            parts.append(t.arg)
            t = t.fn
        if not (isinstance(t, Var) and t.name == sem.param and len(parts) >= 2):
            return None
        parts.reverse()
        return parts if all(is_ground(p) for p in parts) else None

    def reduction_ok(sem: Term) -> bool:
        if is_ground(sem):
            return ground_ok(sem)
        parts = tuple_components(sem)
        if parts is not None:
            return tuple(_ckey(p) for p in parts) in goal_arg_windows
        return True

    # first components of goal argument windows, by window size
    window_heads: dict[int, set[str]] = {}
    for w in goal_arg_windows:
        window_heads.setdefault(len(w), set()).add(w[0])

    sig_memo: dict[int, tuple] = {}  # id(derivation) -> (derivation, signature)
    follow_memo: dict[tuple[str, int], bool] = {}
    lex_memo: dict[tuple[int, int], Derivation] = {}
    ckey_memo: dict[int, tuple] = {}  # id(derivation) -> (derivation, canonical key | None)
    h_table = [domain.heuristic(u) for u in range(total + 1)]

    def ground_key(d: Derivation) -> str | None:
        cached = ckey_memo.get(id(d))
        if cached is None:
            cached = (d, _ckey(d.sem) if is_ground(d.sem) else None)
            ckey_memo[id(d)] = cached
        return cached[1]

    def dsig(d: Derivation) -> tuple[str, str]:
        cached = sig_memo.get(id(d))
        if cached is None:
            cached = (d, (format_category(d.cat), format_term(d.sem)))
            sig_memo[id(d)] = cached
        return cached[1]

    def may_follow(top: Derivation, i: int) -> bool:
        key = (dsig(top)[0], i)
        ok = follow_memo.get(key)
        if ok is None:
            ok = _may_follow(top.cat, domain.entry_reach[i])
            follow_memo[key] = ok
        return ok

    # state: (stack, covered Counter, words, g)
    start = ((), Counter(), (), 0)
    heap: list[tuple[int, int, tuple]] = [(domain.heuristic(total), next(counter), start)]
    closed: set = set()
    class_cost: dict = {}  # (stack sig, covered sig) -> cheapest popped g
    expansions = 0
    limit_hit = False
    found: dict[tuple[str, ...], Realization] = {}
    found_costs: list[int] = []

    def kth_cost() -> int | None:
        return found_costs[k - 1] if len(found_costs) >= k else None

    while heap:
        bound = kth_cost()
        if bound is not None and heap[0][0] > bound:
            break
        f, _, state = heapq.heappop(heap)
        stack, covered, words, g = state
        ssig = tuple(dsig(d) for d in stack)
        csig = tuple(sorted(covered.items()))
        key = (ssig, csig, words)
        if key in closed:
            continue
        if k == 1:
            # a same-class state already popped strictly cheaper dominates
            # this one: any completion of this state costs more
            cg = class_cost.get((ssig, csig))
            if cg is not None and g > cg:
                continue
            if cg is None:
                class_cost[(ssig, csig)] = g
        closed.add(key)

        if expansions >= limits.max_expansions:
            limit_hit = True
            break
        expansions += 1

        uncovered = total - sum(covered.values())
        h_here = h_table[uncovered]
        if len(stack) == 1 and uncovered == 0:
            d = stack[0]
            if any(unifies(d.cat, r) for r in root_cats):
                if symbol_counts(d.sem) == goal_symbols and equivalent(d.sem, goal_term):
                    if words not in found:
                        found[words] = Realization(words, d, d.sem, g)
                        found_costs.append(g)

        # reduce the top two constituents
        if len(stack) >= 2:
            for d in combine(stack[-2], stack[-1], normal_form=True):
                if not reduction_ok(d.sem):
                    continue
                heapq.heappush(heap, (g + h_here, next(counter),
                                      (stack[:-2] + (d,), covered, words, g)))

        # shift a lexicon entry
        if len(words) < limits.max_words:
            budget = (limits.max_words - len(words)) * domain.max_preds
            if budget < uncovered:
                continue
            top = stack[-1] if stack else None
            pos = len(words)
            for i, entry in enumerate(entries):
                items = entry_items[i]
                if items and any(covered[s] + c > goal_symbols[s] for s, c in items):
                    continue
                if top is None:
                    if not domain.left_edge_ok[i]:
                        continue
                elif not may_follow(top, i):
                    continue
                else:
                    arity = domain.entry_coord_arity[i]
                    if arity is not None:
                        # a coordinator's left argument is the current top;
                        # if that is already ground it must open a window
                        tk = ground_key(top)
                        if tk is not None and tk not in window_heads.get(arity, ()):
                            continue
                d = lex_memo.get((i, pos))
                if d is None:
                    d = Derivation(entry.cat, entry.sem, "Lex", (pos, pos + 1), (), entry.word)
                    lex_memo[(i, pos)] = d
                syms = domain.entry_symbols[i]
                new_covered = covered + syms if syms else covered
                new_u = uncovered - sum(syms.values())
                ng = g + entry.weight
                if audit:
                    assert h_here <= entry.weight + h_table[new_u], \
                        "heuristic is not consistent"
                heapq.heappush(heap, (ng + h_table[new_u], next(counter),
                                      (stack + (d,), new_covered, words + (entry.word,), ng)))

    results = sorted(found.values(), key=lambda r: (r.cost, r.tokens))[:k]
    if results:
        return results
    if limit_hit:
        raise LimitExceeded(f"no realization within {limits.max_expansions} expansions")
    raise NoRealization("search space exhausted")


def realize(lex: Lexicon, goal: Goal, limits: SearchLimits = SearchLimits(),
            audit: bool = False) -> Realization:
    """Minimum-cost realization of the goal (ties: lexicographic tokens)."""
    return realize_all(lex, goal, 1, limits, audit)[0]
