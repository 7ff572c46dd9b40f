"""End-to-end pipeline: source file in, comments out.

Modes:
  annotate     original source with `# <comment>` inserted above each
               commented statement (all other bytes preserved)
  jsonl        one report object per statement
  emit-lf      one {loc, kind, goal} object per statement
  parse-debug  treat the input as one space-tokenized sentence per line
               and print its derivations

Exit status: 0 when at least one comment was produced, 2 when none was,
1 on errors (unreadable input, bad lexicon, or a --verify failure).
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import pyparse as py
from .chart import UnknownWord, format_derivation, parse as chart_parse
from .extract import AnnotatedStmt, extract, goal_constants, goal_strings
from .lexicon import Lexicon, LexiconError, extend_with_identifiers, load_bundled_lexicon, load_lexicon
from .postprocess import finalize
from .realize import Goal, LimitExceeded, NoRealization, SearchLimits, realize_all
from .categories import CategorySyntaxError, parse_category
from .terms import equivalent

MODES = ("annotate", "jsonl", "emit-lf", "parse-debug")

SKIP_UNSUPPORTED = "unsupported-stmt"
SKIP_NO_REALIZATION = "no-realization"
SKIP_LIMIT = "limit-exceeded"


@dataclass
class RunConfig:
    input_path: str
    lexicon_path: str | None = None
    mode: str = "annotate"
    roots: str | None = None
    max_words: int = 12
    max_expansions: int = 200_000
    variants: int = 1
    verify: bool = False


@dataclass(frozen=True)
class StmtReport:
    loc: tuple[int, int]
    source: str
    goal: list[str] | None
    comment: str | None = None
    skip_reason: str | None = None

    def to_json(self) -> dict:
        doc = {"loc": list(self.loc), "source": self.source, "goal": self.goal}
        if self.comment is not None:
            doc["comment"] = self.comment
        else:
            doc["skip_reason"] = self.skip_reason
        return doc


@dataclass(frozen=True)
class StmtResult:
    report: StmtReport
    variants: tuple  # finalized variant strings, best first
    tokens: tuple[str, ...] | None
    goal: Goal | None


class VerifyFailure(Exception):
    pass


def _source_line(lines: list[str], loc: tuple[int, int]) -> str:
    line = loc[0]
    if 1 <= line <= len(lines):
        return lines[line - 1].strip()
    return ""


def _kind_name(stmt: py.SourceStmt) -> str:
    return type(stmt).__name__


def process_statements(lex: Lexicon, annotated: list[AnnotatedStmt],
                       lines: list[str], cfg: RunConfig) -> list[StmtResult]:
    limits = SearchLimits(cfg.max_words, cfg.max_expansions)
    results: list[StmtResult] = []
    for item in annotated:
        loc = item.stmt.loc
        source = _source_line(lines, loc)
        if item.goal is None:
            report = StmtReport(loc, source, None, skip_reason=SKIP_UNSUPPORTED)
            results.append(StmtResult(report, (), None, None))
            continue
        goal_text = goal_strings(item.goal)
        scoped = extend_with_identifiers(lex, goal_constants(item.goal))
        try:
            realizations = realize_all(scoped, item.goal, cfg.variants, limits)
        except NoRealization:
            report = StmtReport(loc, source, goal_text, skip_reason=SKIP_NO_REALIZATION)
            results.append(StmtResult(report, (), None, item.goal))
            continue
        except LimitExceeded:
            report = StmtReport(loc, source, goal_text, skip_reason=SKIP_LIMIT)
            results.append(StmtResult(report, (), None, item.goal))
            continue
        variants = tuple(finalize(r.tokens).text for r in realizations)
        report = StmtReport(loc, source, goal_text, comment=variants[0])
        if cfg.verify:
            for r in realizations:
                _verify(scoped, r.tokens, item.goal, loc)
        results.append(StmtResult(report, variants, realizations[0].tokens, item.goal))
    return results


def _verify(lex: Lexicon, tokens, goal: Goal, loc):
    """Re-parse the emitted tokens and require a goal-equivalent reading."""
    goal_term = goal.as_term()
    try:
        derivations = chart_parse(lex, tokens)
    except UnknownWord as exc:
        raise VerifyFailure(f"{loc[0]}:{loc[1]}: {exc}") from exc
    if not any(equivalent(d.sem, goal_term) for d in derivations):
        raise VerifyFailure(
            f"{loc[0]}:{loc[1]}: comment {' '.join(tokens)!r} does not re-parse to its goal")


def report_coverage(reports: list[StmtReport], stream=None) -> dict:
    """Count totals and print a one-line summary to `stream` (stderr)."""
    stream = stream if stream is not None else sys.stderr
    counts = {
        "total": len(reports),
        "supported": sum(1 for r in reports if r.skip_reason != SKIP_UNSUPPORTED),
        "commented": sum(1 for r in reports if r.comment is not None),
        "skipped": {
            SKIP_UNSUPPORTED: sum(1 for r in reports if r.skip_reason == SKIP_UNSUPPORTED),
            SKIP_NO_REALIZATION: sum(1 for r in reports if r.skip_reason == SKIP_NO_REALIZATION),
            SKIP_LIMIT: sum(1 for r in reports if r.skip_reason == SKIP_LIMIT),
        },
    }
    skips = counts["skipped"]
    print(
        f"coverage: {counts['commented']}/{counts['supported']} supported statements"
        f" commented ({counts['total']} total;"
        f" {skips[SKIP_UNSUPPORTED]} unsupported,"
        f" {skips[SKIP_NO_REALIZATION]} no-realization,"
        f" {skips[SKIP_LIMIT]} limit-exceeded)",
        file=stream,
    )
    return counts


def _load_lexicon_for(cfg: RunConfig) -> Lexicon:
    if cfg.lexicon_path is None:
        lex = load_bundled_lexicon()
    else:
        with open(cfg.lexicon_path, "r", encoding="utf-8") as fh:
            lex = load_lexicon(fh)
    if cfg.roots:
        roots = tuple(parse_category(p.strip()) for p in cfg.roots.split(","))
        lex = Lexicon(lex.entries, roots)
    return lex


def _annotate_output(text: str, results: list[StmtResult]) -> str:
    lines = text.splitlines(keepends=True)
    inserts: dict[int, list[str]] = {}
    for res in results:
        if not res.variants:
            continue
        line_no, _ = res.report.loc
        raw = lines[line_no - 1] if 1 <= line_no <= len(lines) else ""
        indent = raw[:len(raw) - len(raw.lstrip(" "))]
        inserts.setdefault(line_no, []).extend(
            f"{indent}# {v}\n" for v in res.variants)
    out: list[str] = []
    for i, line in enumerate(lines, start=1):
        out.extend(inserts.get(i, ()))
        out.append(line)
    return "".join(out)


def _run_parse_debug(cfg: RunConfig, lex: Lexicon, text: str, stdout) -> int:
    any_parse = False
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens:
            continue
        print(f"% {' '.join(tokens)}", file=stdout)
        try:
            derivations = chart_parse(lex, tokens)
        except UnknownWord as exc:
            print(f"  unknown word: {exc}", file=stdout)
            continue
        if not derivations:
            print("  no parse", file=stdout)
            continue
        any_parse = True
        for d in derivations:
            print(format_derivation(d, 1), file=stdout)
    return 0 if any_parse else 2


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    if cfg.mode not in MODES:
        print(f"error: unknown mode {cfg.mode!r}", file=stderr)
        return 1
    if cfg.variants < 1 or cfg.max_words < 1 or cfg.max_expansions < 1:
        print("error: limits and variant count must be positive", file=stderr)
        return 1
    try:
        lex = _load_lexicon_for(cfg)
    except (OSError, LexiconError, CategorySyntaxError) as exc:
        print(f"error: lexicon: {exc}", file=stderr)
        return 1
    try:
        text = Path(cfg.input_path).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return 1

    if cfg.mode == "parse-debug":
        return _run_parse_debug(cfg, lex, text, stdout)

    if cfg.input_path.endswith(".json"):
        try:
            stmts = py.ingest_ast(text)
        except py.SchemaError as exc:
            print(f"error: {cfg.input_path}: {exc}", file=stderr)
            return 1
    else:
        try:
            stmts = py.parse_source(text)
        except py.SourceSyntaxError as exc:
            print(f"error: {cfg.input_path}: {exc}", file=stderr)
            return 1
    annotated = extract(stmts)
    lines = text.splitlines()

    if cfg.mode == "emit-lf":
        for item in annotated:
            doc = {"loc": list(item.stmt.loc), "kind": _kind_name(item.stmt),
                   "goal": goal_strings(item.goal) if item.goal else None}
            print(json.dumps(doc), file=stdout)
        return 0 if any(a.goal for a in annotated) else 2

    try:
        results = process_statements(lex, annotated, lines, cfg)
    except VerifyFailure as exc:
        print(f"error: verification failed: {exc}", file=stderr)
        return 1
    reports = [r.report for r in results]

    if cfg.mode == "jsonl":
        for report in reports:
            print(json.dumps(report.to_json()), file=stdout)
    else:
        stdout.write(_annotate_output(text, results))
    report_coverage(reports, stderr)
    commented = sum(1 for r in reports if r.comment is not None)
    return 0 if commented > 0 else 2
