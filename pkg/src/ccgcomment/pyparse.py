"""Frontend for the analyzed Python subset.

An indentation-aware recursive-descent parser producing one statement
node per source statement.  Constructs outside the subset never abort a
file: they turn into Unsupported markers (with location) and the rest of
the file still parses.  A lexical-level problem (inconsistent
indentation, an unterminated string) is the only hard error.

The same statements can also be ingested from, and dumped to, a JSON
interchange document (`schema_version` 1, one object per statement with
`kind`, `loc` and kind-specific operand fields).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, fields


class SourceSyntaxError(Exception):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.message = message


class SchemaError(Exception):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


# --------------------------------------------------------------------------
# Expressions
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Name:
    id: str


@dataclass(frozen=True)
class NumLit:
    value: int


@dataclass(frozen=True)
class StrLit:
    value: str


@dataclass(frozen=True)
class ListLit:
    items: tuple = ()


@dataclass(frozen=True)
class DictLit:
    pairs: tuple = ()  # of (key, value) expression pairs


@dataclass(frozen=True)
class BinOp:
    op: str  # + - * / % **
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Compare:
    op: str  # == != < <= > >=
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class BoolOp:
    op: str  # and or not
    args: tuple


@dataclass(frozen=True)
class Call:
    fn: Name
    args: tuple = ()


@dataclass(frozen=True)
class Index:
    base: "Expr"
    sub: "Expr"


Expr = Name | NumLit | StrLit | ListLit | DictLit | BinOp | Compare | BoolOp | Call | Index


# --------------------------------------------------------------------------
# Statements.  loc is (line, column): 1-based line, 0-based column.
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Assign:
    target: Expr
    value: Expr
    loc: tuple[int, int]


@dataclass(frozen=True)
class AugAssign:
    target: Expr
    op: str
    value: Expr
    loc: tuple[int, int]


@dataclass(frozen=True)
class If:
    cond: Expr
    body: tuple
    orelse: tuple
    loc: tuple[int, int]


@dataclass(frozen=True)
class While:
    cond: Expr
    body: tuple
    loc: tuple[int, int]


@dataclass(frozen=True)
class ForIn:
    var: str
    iterable: Expr
    body: tuple
    loc: tuple[int, int]


@dataclass(frozen=True)
class FuncDef:
    name: str
    params: tuple
    body: tuple
    loc: tuple[int, int]


@dataclass(frozen=True)
class Return:
    value: Expr | None
    loc: tuple[int, int]


@dataclass(frozen=True)
class ExprCall:
    call: Call
    loc: tuple[int, int]


@dataclass(frozen=True)
class IOPrint:
    args: tuple
    loc: tuple[int, int]


@dataclass(frozen=True)
class IORead:
    target: Expr
    prompt: tuple
    loc: tuple[int, int]


@dataclass(frozen=True)
class Unsupported:
    reason: str
    loc: tuple[int, int]


SourceStmt = (Assign | AugAssign | If | While | ForIn | FuncDef | Return
              | ExprCall | IOPrint | IORead | Unsupported)

_COMPOUND = (If, While, ForIn, FuncDef)


# --------------------------------------------------------------------------
# Tokenizer
# --------------------------------------------------------------------------

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NUM_RE = re.compile(r"\d+(\.\d+)?")
_OPS = (
    "**=", "//=", "==", "!=", "<=", ">=", "+=", "-=", "*=", "/=", "%=",
    "**", "//", "->", "+", "-", "*", "/", "%", "<", ">", "=", "(", ")",
    "[", "]", "{", "}", ",", ":", ".", ";", "@",
)

_KEYWORDS = {"def", "return", "if", "elif", "else", "while", "for", "in",
             "and", "or", "not", "pass", "break", "continue", "import",
             "from", "class", "lambda", "with", "try", "except", "raise",
             "global", "del", "assert", "yield", "is"}


@dataclass(frozen=True)
class Tok:
    kind: str  # NAME KEYWORD NUMBER FLOAT STRING OP NEWLINE INDENT DEDENT END
    value: str
    line: int
    col: int


def _tokenize(text: str) -> list[Tok]:
    toks: list[Tok] = []
    indents = [0]
    depth = 0
    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.expandtabs(8)
        stripped = line.strip()
        if depth == 0:
            if not stripped or stripped.startswith("#"):
                continue
            indent = len(line) - len(line.lstrip(" "))
            if line.lstrip(" ").startswith("\t"):
                raise SourceSyntaxError(lineno, indent, "mixed tabs and spaces")
            if indent > indents[-1]:
                indents.append(indent)
                toks.append(Tok("INDENT", "", lineno, 0))
            else:
                while indent < indents[-1]:
                    indents.pop()
                    toks.append(Tok("DEDENT", "", lineno, 0))
                if indent != indents[-1]:
                    raise SourceSyntaxError(lineno, indent, "inconsistent indentation")
        had_token = False
        col = len(line) - len(line.lstrip(" ")) if depth == 0 else 0
        i = col
        while i < len(line):
            ch = line[i]
            if ch in " \t":
                i += 1
                continue
            if ch == "#":
                break
            if ch in "\"'":
                quote = ch
                j = i + 1
                buf = []
                while j < len(line):
                    c = line[j]
                    if c == "\\" and j + 1 < len(line):
                        buf.append({"n": "\n", "t": "\t", "\\": "\\", quote: quote}
                                   .get(line[j + 1], line[j + 1]))
                        j += 2
                        continue
                    if c == quote:
                        break
                    buf.append(c)
                    j += 1
                else:
                    raise SourceSyntaxError(lineno, i, "unterminated string literal")
                toks.append(Tok("STRING", "".join(buf), lineno, i))
                i = j + 1
                had_token = True
                continue
            m = _NAME_RE.match(line, i)
            if m:
                kind = "KEYWORD" if m.group() in _KEYWORDS else "NAME"
                toks.append(Tok(kind, m.group(), lineno, i))
                i = m.end()
                had_token = True
                continue
            m = _NUM_RE.match(line, i)
            if m:
                kind = "FLOAT" if m.group(1) else "NUMBER"
                toks.append(Tok(kind, m.group(), lineno, i))
                i = m.end()
                had_token = True
                continue
            for op in _OPS:
                if line.startswith(op, i):
                    if op in "([{":
                        depth += 1
                    elif op in ")]}":
                        depth = max(0, depth - 1)
                    toks.append(Tok("OP", op, lineno, i))
                    i += len(op)
                    had_token = True
                    break
            else:
                raise SourceSyntaxError(lineno, i, f"unexpected character {ch!r}")
        if depth == 0 and had_token:
            toks.append(Tok("NEWLINE", "", lineno, len(line)))
    if depth != 0:
        raise SourceSyntaxError(len(lines) or 1, 0, "unbalanced brackets at end of file")
    while len(indents) > 1:
        indents.pop()
        toks.append(Tok("DEDENT", "", len(lines) + 1, 0))
    toks.append(Tok("END", "", len(lines) + 1, 0))
    return toks


# --------------------------------------------------------------------------
# Parser
# --------------------------------------------------------------------------

class _Unsupported(Exception):
    def __init__(self, reason: str):
        self.reason = reason


class _Parser:
    def __init__(self, toks: list[Tok]):
        self.toks = toks
        self.i = 0

    def peek(self) -> Tok:
        return self.toks[self.i]

    def next(self) -> Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def at_op(self, value: str) -> bool:
        t = self.peek()
        return t.kind == "OP" and t.value == value

    def at_kw(self, value: str) -> bool:
        t = self.peek()
        return t.kind == "KEYWORD" and t.value == value

    def eat_op(self, value: str):
        if not self.at_op(value):
            raise _Unsupported(f"expected {value!r}")
        self.next()

    def eat_kw(self, value: str):
        if not self.at_kw(value):
            raise _Unsupported(f"expected {value!r}")
        self.next()

    def module(self) -> tuple:
        stmts = []
        while self.peek().kind != "END":
            tok = self.peek()
            if tok.kind == "INDENT":
                raise SourceSyntaxError(tok.line, tok.col, "unexpected indent")
            if tok.kind in ("NEWLINE", "DEDENT"):
                self.next()
                continue
            stmts.append(self.statement())
        return tuple(stmts)

    def statement(self) -> SourceStmt:
        tok = self.peek()
        loc = (tok.line, tok.col)
        mark = self.i
        try:
            return self.statement_inner(loc)
        except _Unsupported as exc:
            self.i = mark
            self.skip_statement()
            return Unsupported(exc.reason, loc)

    def skip_statement(self):
        """Advance past the current logical line and any suite under it."""
        while self.peek().kind not in ("NEWLINE", "END"):
            if self.peek().kind in ("INDENT", "DEDENT"):
                break
            self.next()
        if self.peek().kind == "NEWLINE":
            self.next()
        if self.peek().kind == "INDENT":
            depth = 0
            while True:
                t = self.next()
                if t.kind == "INDENT":
                    depth += 1
                elif t.kind == "DEDENT":
                    depth -= 1
                    if depth == 0:
                        break
                elif t.kind == "END":
                    self.i -= 1
                    break

    def statement_inner(self, loc) -> SourceStmt:
        if self.at_kw("def"):
            return self.funcdef(loc)
        if self.at_kw("if"):
            return self.if_stmt(loc)
        if self.at_kw("while"):
            self.next()
            cond = self.expression()
            body = self.suite()
            return While(cond, body, loc)
        if self.at_kw("for"):
            return self.for_stmt(loc)
        if self.at_kw("return"):
            self.next()
            value = None
            if self.peek().kind != "NEWLINE":
                value = self.expression()
            self.end_simple()
            return Return(value, loc)
        if self.peek().kind == "KEYWORD":
            raise _Unsupported(f"{self.peek().value!r} statement")
        return self.simple_stmt(loc)

    def funcdef(self, loc) -> FuncDef:
        self.eat_kw("def")
        name = self.name_token()
        self.eat_op("(")
        params = []
        if not self.at_op(")"):
            params.append(self.name_token())
            while self.at_op(","):
                self.next()
                params.append(self.name_token())
        self.eat_op(")")
        body = self.suite()
        return FuncDef(name, tuple(params), body, loc)

    def if_stmt(self, loc) -> If:
        self.next()  # if / elif
        cond = self.expression()
        body = self.suite()
        orelse: tuple = ()
        if self.at_kw("elif"):
            tok = self.peek()
            orelse = (self.if_stmt((tok.line, tok.col)),)
        elif self.at_kw("else"):
            self.next()
            orelse = self.suite()
        return If(cond, body, orelse, loc)

    def for_stmt(self, loc) -> ForIn:
        self.eat_kw("for")
        var = self.name_token()
        if self.at_op(","):
            raise _Unsupported("tuple unpacking in for")
        self.eat_kw("in")
        iterable = self.expression()
        body = self.suite()
        return ForIn(var, iterable, body, loc)

    def suite(self) -> tuple:
        self.eat_op(":")
        if self.peek().kind != "NEWLINE":
            raise _Unsupported("inline suite")
        self.next()
        if self.peek().kind != "INDENT":
            raise _Unsupported("missing indented suite")
        self.next()
        stmts = []
        while self.peek().kind not in ("DEDENT", "END"):
            if self.peek().kind == "NEWLINE":
                self.next()
                continue
            stmts.append(self.statement())
        if self.peek().kind == "DEDENT":
            self.next()
        return tuple(stmts)

    def name_token(self) -> str:
        if self.peek().kind != "NAME":
            raise _Unsupported("expected identifier")
        return self.next().value

    def end_simple(self):
        if self.peek().kind == "NEWLINE":
            self.next()
        elif self.peek().kind not in ("DEDENT", "END"):
            raise _Unsupported("trailing tokens after statement")

    def simple_stmt(self, loc) -> SourceStmt:
        target = self.expression()
        if self.at_op("="):
            if not isinstance(target, (Name, Index)):
                raise _Unsupported("unsupported assignment target")
            self.next()
            value = self.expression()
            self.end_simple()
            if isinstance(value, Call) and value.fn.id == "input":
                return IORead(target, value.args, loc)
            return Assign(target, value, loc)
        aug = next((op for op in ("+=", "-=", "*=", "/=", "%=", "**=")
                    if self.at_op(op)), None)
        if aug:
            if not isinstance(target, (Name, Index)):
                raise _Unsupported("unsupported assignment target")
            self.next()
            value = self.expression()
            self.end_simple()
            return AugAssign(target, aug[:-1], value, loc)
        self.end_simple()
        if isinstance(target, Call):
            if target.fn.id == "print":
                return IOPrint(target.args, loc)
            return ExprCall(target, loc)
        raise _Unsupported("expression statement is not a call")

    # ---- expressions, loosest binding first ----

    def expression(self) -> Expr:
        return self.or_expr()

    def or_expr(self) -> Expr:
        first = self.and_expr()
        args = [first]
        while self.at_kw("or"):
            self.next()
            args.append(self.and_expr())
        return first if len(args) == 1 else BoolOp("or", tuple(args))

    def and_expr(self) -> Expr:
        first = self.not_expr()
        args = [first]
        while self.at_kw("and"):
            self.next()
            args.append(self.not_expr())
        return first if len(args) == 1 else BoolOp("and", tuple(args))

    def not_expr(self) -> Expr:
        if self.at_kw("not"):
            self.next()
            return BoolOp("not", (self.not_expr(),))
        return self.comparison()

    def comparison(self) -> Expr:
        left = self.arith()
        op = next((o for o in ("==", "!=", "<=", ">=", "<", ">")
                   if self.at_op(o)), None)
        if op is None:
            return left
        self.next()
        right = self.arith()
        if any(self.at_op(o) for o in ("==", "!=", "<=", ">=", "<", ">")):
            raise _Unsupported("chained comparison")
        return Compare(op, left, right)

    def arith(self) -> Expr:
        left = self.mul_expr()
        while self.at_op("+") or self.at_op("-"):
            op = self.next().value
            left = BinOp(op, left, self.mul_expr())
        return left

    def mul_expr(self) -> Expr:
        left = self.power()
        while self.at_op("*") or self.at_op("/") or self.at_op("%"):
            op = self.next().value
            left = BinOp(op, left, self.power())
        return left

    def power(self) -> Expr:
        base = self.atom_trailer()
        if self.at_op("**"):
            self.next()
            return BinOp("**", base, self.power())
        return base

    def atom_trailer(self) -> Expr:
        expr = self.atom()
        while True:
            if self.at_op("("):
                if not isinstance(expr, Name):
                    raise _Unsupported("call of a non-name")
                self.next()
                args = []
                if not self.at_op(")"):
                    args.append(self.expression())
                    while self.at_op(","):
                        self.next()
                        args.append(self.expression())
                self.eat_op(")")
                expr = Call(expr, tuple(args))
            elif self.at_op("["):
                self.next()
                sub = self.expression()
                self.eat_op("]")
                expr = Index(expr, sub)
            elif self.at_op("."):
                raise _Unsupported("attribute access")
            else:
                return expr

    def atom(self) -> Expr:
        tok = self.peek()
        if tok.kind == "NAME":
            self.next()
            return Name(tok.value)
        if tok.kind == "NUMBER":
            self.next()
            return NumLit(int(tok.value))
        if tok.kind == "FLOAT":
            raise _Unsupported("float literal")
        if tok.kind == "STRING":
            self.next()
            return StrLit(tok.value)
        if self.at_op("("):
            self.next()
            inner = self.expression()
            if self.at_op(","):
                raise _Unsupported("tuple literal")
            self.eat_op(")")
            return inner
        if self.at_op("["):
            self.next()
            items = []
            if not self.at_op("]"):
                items.append(self.expression())
                if self.at_kw("for"):
                    raise _Unsupported("list comprehension")
                while self.at_op(","):
                    self.next()
                    if self.at_op("]"):
                        break
                    items.append(self.expression())
            self.eat_op("]")
            return ListLit(tuple(items))
        if self.at_op("{"):
            self.next()
            pairs = []
            if not self.at_op("}"):
                key = self.expression()
                self.eat_op(":")
                pairs.append((key, self.expression()))
                while self.at_op(","):
                    self.next()
                    if self.at_op("}"):
                        break
                    key = self.expression()
                    self.eat_op(":")
                    pairs.append((key, self.expression()))
            self.eat_op("}")
            return DictLit(tuple(pairs))
        if tok.kind == "KEYWORD":
            raise _Unsupported(f"{tok.value!r} in expression")
        raise _Unsupported(f"unexpected token {tok.value!r}")


def parse_source(text: str) -> tuple:
    """Parse subset source text into a statement tuple."""
    return _Parser(_tokenize(text)).module()


# --------------------------------------------------------------------------
# JSON interchange.  True/False/None are ordinary Name atoms here.
# --------------------------------------------------------------------------

SCHEMA_VERSION = 1

_EXPR_KINDS = {
    "Name": Name, "NumLit": NumLit, "StrLit": StrLit, "ListLit": ListLit,
    "DictLit": DictLit, "BinOp": BinOp, "Compare": Compare, "BoolOp": BoolOp,
    "Call": Call, "Index": Index,
}
_STMT_KINDS = {
    "Assign": Assign, "AugAssign": AugAssign, "If": If, "While": While,
    "ForIn": ForIn, "FuncDef": FuncDef, "Return": Return, "ExprCall": ExprCall,
    "IOPrint": IOPrint, "IORead": IORead, "Unsupported": Unsupported,
}


def _expr_to_json(e: Expr):
    match e:
        case Name(id_):
            return {"kind": "Name", "id": id_}
        case NumLit(v):
            return {"kind": "NumLit", "value": v}
        case StrLit(v):
            return {"kind": "StrLit", "value": v}
        case ListLit(items):
            return {"kind": "ListLit", "items": [_expr_to_json(x) for x in items]}
        case DictLit(pairs):
            return {"kind": "DictLit",
                    "pairs": [[_expr_to_json(k), _expr_to_json(v)] for k, v in pairs]}
        case BinOp(op, l, r):
            return {"kind": "BinOp", "op": op,
                    "left": _expr_to_json(l), "right": _expr_to_json(r)}
        case Compare(op, l, r):
            return {"kind": "Compare", "op": op,
                    "left": _expr_to_json(l), "right": _expr_to_json(r)}
        case BoolOp(op, args):
            return {"kind": "BoolOp", "op": op,
                    "args": [_expr_to_json(a) for a in args]}
        case Call(fn, args):
            return {"kind": "Call", "fn": _expr_to_json(fn),
                    "args": [_expr_to_json(a) for a in args]}
        case Index(base, sub):
            return {"kind": "Index", "base": _expr_to_json(base),
                    "sub": _expr_to_json(sub)}
    raise TypeError(f"not an expression: {e!r}")


def _stmt_to_json(s: SourceStmt):
    loc = list(s.loc)
    match s:
        case Assign(t, v, _):
            return {"kind": "Assign", "loc": loc,
                    "target": _expr_to_json(t), "value": _expr_to_json(v)}
        case AugAssign(t, op, v, _):
            return {"kind": "AugAssign", "loc": loc, "op": op,
                    "target": _expr_to_json(t), "value": _expr_to_json(v)}
        case If(c, body, orelse, _):
            return {"kind": "If", "loc": loc, "cond": _expr_to_json(c),
                    "body": [_stmt_to_json(x) for x in body],
                    "orelse": [_stmt_to_json(x) for x in orelse]}
        case While(c, body, _):
            return {"kind": "While", "loc": loc, "cond": _expr_to_json(c),
                    "body": [_stmt_to_json(x) for x in body]}
        case ForIn(var, it, body, _):
            return {"kind": "ForIn", "loc": loc, "var": var,
                    "iterable": _expr_to_json(it),
                    "body": [_stmt_to_json(x) for x in body]}
        case FuncDef(name, params, body, _):
            return {"kind": "FuncDef", "loc": loc, "name": name,
                    "params": list(params),
                    "body": [_stmt_to_json(x) for x in body]}
        case Return(v, _):
            return {"kind": "Return", "loc": loc,
                    "value": None if v is None else _expr_to_json(v)}
        case ExprCall(call, _):
            return {"kind": "ExprCall", "loc": loc, "call": _expr_to_json(call)}
        case IOPrint(args, _):
            return {"kind": "IOPrint", "loc": loc,
                    "args": [_expr_to_json(a) for a in args]}
        case IORead(t, prompt, _):
            return {"kind": "IORead", "loc": loc, "target": _expr_to_json(t),
                    "prompt": [_expr_to_json(a) for a in prompt]}
        case Unsupported(reason, _):
            return {"kind": "Unsupported", "loc": loc, "reason": reason}
    raise TypeError(f"not a statement: {s!r}")


def dump_ast(stmts) -> str:
    doc = {"schema_version": SCHEMA_VERSION,
           "body": [_stmt_to_json(s) for s in stmts]}
    return json.dumps(doc, indent=2)


def _need(obj, key, path):
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object")
    if key not in obj:
        raise SchemaError(path, f"missing field {key!r}")
    return obj[key]


def _expr_from_json(obj, path) -> Expr:
    kind = _need(obj, "kind", path)
    if kind == "Name":
        id_ = _need(obj, "id", path)
        if not isinstance(id_, str) or not _NAME_RE.fullmatch(id_):
            raise SchemaError(path + ".id", "not an identifier")
        return Name(id_)
    if kind == "NumLit":
        v = _need(obj, "value", path)
        if not isinstance(v, int) or isinstance(v, bool):
            raise SchemaError(path + ".value", "expected an integer")
        return NumLit(v)
    if kind == "StrLit":
        v = _need(obj, "value", path)
        if not isinstance(v, str):
            raise SchemaError(path + ".value", "expected a string")
        return StrLit(v)
    if kind == "ListLit":
        items = _need(obj, "items", path)
        return ListLit(tuple(_expr_from_json(x, f"{path}.items[{i}]")
                             for i, x in enumerate(items)))
    if kind == "DictLit":
        pairs = _need(obj, "pairs", path)
        out = []
        for i, pair in enumerate(pairs):
            if not isinstance(pair, list) or len(pair) != 2:
                raise SchemaError(f"{path}.pairs[{i}]", "expected a [key, value] pair")
            out.append((_expr_from_json(pair[0], f"{path}.pairs[{i}][0]"),
                        _expr_from_json(pair[1], f"{path}.pairs[{i}][1]")))
        return DictLit(tuple(out))
    if kind == "BinOp":
        op = _need(obj, "op", path)
        if op not in ("+", "-", "*", "/", "%", "**"):
            raise SchemaError(path + ".op", f"unknown operator {op!r}")
        return BinOp(op, _expr_from_json(_need(obj, "left", path), path + ".left"),
                     _expr_from_json(_need(obj, "right", path), path + ".right"))
    if kind == "Compare":
        op = _need(obj, "op", path)
        if op not in ("==", "!=", "<", "<=", ">", ">="):
            raise SchemaError(path + ".op", f"unknown operator {op!r}")
        return Compare(op, _expr_from_json(_need(obj, "left", path), path + ".left"),
                       _expr_from_json(_need(obj, "right", path), path + ".right"))
    if kind == "BoolOp":
        op = _need(obj, "op", path)
        if op not in ("and", "or", "not"):
            raise SchemaError(path + ".op", f"unknown operator {op!r}")
        args = _need(obj, "args", path)
        return BoolOp(op, tuple(_expr_from_json(a, f"{path}.args[{i}]")
                                for i, a in enumerate(args)))
    if kind == "Call":
        fn = _expr_from_json(_need(obj, "fn", path), path + ".fn")
        if not isinstance(fn, Name):
            raise SchemaError(path + ".fn", "call target must be a Name")
        args = _need(obj, "args", path)
        return Call(fn, tuple(_expr_from_json(a, f"{path}.args[{i}]")
                              for i, a in enumerate(args)))
    if kind == "Index":
        return Index(_expr_from_json(_need(obj, "base", path), path + ".base"),
                     _expr_from_json(_need(obj, "sub", path), path + ".sub"))
    raise SchemaError(path + ".kind", f"unknown expression kind {kind!r}")


def _loc_from_json(obj, path) -> tuple[int, int]:
    loc = _need(obj, "loc", path)
    if (not isinstance(loc, list) or len(loc) != 2
            or not all(isinstance(x, int) for x in loc)):
        raise SchemaError(path + ".loc", "expected [line, column]")
    return (loc[0], loc[1])


def _stmts_from_json(items, path) -> tuple:
    if not isinstance(items, list):
        raise SchemaError(path, "expected a list of statements")
    return tuple(_stmt_from_json(s, f"{path}[{i}]") for i, s in enumerate(items))


def _stmt_from_json(obj, path) -> SourceStmt:
    kind = _need(obj, "kind", path)
    if kind not in _STMT_KINDS:
        raise SchemaError(path + ".kind", f"unknown statement kind {kind!r}")
    loc = _loc_from_json(obj, path)
    if kind == "Assign":
        return Assign(_expr_from_json(_need(obj, "target", path), path + ".target"),
                      _expr_from_json(_need(obj, "value", path), path + ".value"), loc)
    if kind == "AugAssign":
        op = _need(obj, "op", path)
        if op not in ("+", "-", "*", "/", "%", "**"):
            raise SchemaError(path + ".op", f"unknown operator {op!r}")
        return AugAssign(_expr_from_json(_need(obj, "target", path), path + ".target"),
                         op,
                         _expr_from_json(_need(obj, "value", path), path + ".value"), loc)
    if kind == "If":
        return If(_expr_from_json(_need(obj, "cond", path), path + ".cond"),
                  _stmts_from_json(_need(obj, "body", path), path + ".body"),
                  _stmts_from_json(_need(obj, "orelse", path), path + ".orelse"), loc)
    if kind == "While":
        return While(_expr_from_json(_need(obj, "cond", path), path + ".cond"),
                     _stmts_from_json(_need(obj, "body", path), path + ".body"), loc)
    if kind == "ForIn":
        var = _need(obj, "var", path)
        if not isinstance(var, str) or not _NAME_RE.fullmatch(var):
            raise SchemaError(path + ".var", "not an identifier")
        return ForIn(var,
                     _expr_from_json(_need(obj, "iterable", path), path + ".iterable"),
                     _stmts_from_json(_need(obj, "body", path), path + ".body"), loc)
    if kind == "FuncDef":
        name = _need(obj, "name", path)
        params = _need(obj, "params", path)
        if not isinstance(params, list) or not all(
                isinstance(p, str) and _NAME_RE.fullmatch(p) for p in params):
            raise SchemaError(path + ".params", "expected identifier list")
        return FuncDef(name, tuple(params),
                       _stmts_from_json(_need(obj, "body", path), path + ".body"), loc)
    if kind == "Return":
        v = _need(obj, "value", path)
        return Return(None if v is None else _expr_from_json(v, path + ".value"), loc)
    if kind == "ExprCall":
        call = _expr_from_json(_need(obj, "call", path), path + ".call")
        if not isinstance(call, Call):
            raise SchemaError(path + ".call", "expected a Call expression")
        return ExprCall(call, loc)
    if kind == "IOPrint":
        args = _need(obj, "args", path)
        return IOPrint(tuple(_expr_from_json(a, f"{path}.args[{i}]")
                             for i, a in enumerate(args)), loc)
    if kind == "IORead":
        prompt = _need(obj, "prompt", path)
        return IORead(_expr_from_json(_need(obj, "target", path), path + ".target"),
                      tuple(_expr_from_json(a, f"{path}.prompt[{i}]")
                            for i, a in enumerate(prompt)), loc)
    return Unsupported(str(_need(obj, "reason", path)), loc)


def ingest_ast(json_text: str) -> tuple:
    """Load statements from a schema-version-1 JSON document."""
    try:
        doc = json.loads(json_text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON: {exc}") from exc
    version = _need(doc, "schema_version", "$")
    if version != SCHEMA_VERSION:
        raise SchemaError("$.schema_version", f"unsupported version {version!r}")
    return _stmts_from_json(_need(doc, "body", "$"), "$.body")


# --------------------------------------------------------------------------
# Pretty printer (round-trips through parse_source, up to locations)
# --------------------------------------------------------------------------

_BINOP_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "%": 2, "**": 3}


def format_expr(e: Expr, prec: int = 0) -> str:
    match e:
        case Name(id_):
            return id_
        case NumLit(v):
            return str(v)
        case StrLit(v):
            body = v.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n").replace("\t", "\\t")
            return f'"{body}"'
        case ListLit(items):
            return "[" + ", ".join(format_expr(x) for x in items) + "]"
        case DictLit(pairs):
            return "{" + ", ".join(f"{format_expr(k)}: {format_expr(v)}" for k, v in pairs) + "}"
        case BinOp(op, l, r):
            p = _BINOP_PREC[op] + 3
            if op == "**":
                text = f"{format_expr(l, p + 1)} {op} {format_expr(r, p)}"
            else:
                text = f"{format_expr(l, p)} {op} {format_expr(r, p + 1)}"
            return f"({text})" if prec > p else text
        case Compare(op, l, r):
            text = f"{format_expr(l, 4)} {op} {format_expr(r, 4)}"
            return f"({text})" if prec > 3 else text
        case BoolOp("not", (arg,)):
            text = f"not {format_expr(arg, 3)}"
            return f"({text})" if prec > 2 else text
        case BoolOp("and", args):
            text = " and ".join(format_expr(a, 3) for a in args)
            return f"({text})" if prec > 2 else text
        case BoolOp("or", args):
            text = " or ".join(format_expr(a, 2) for a in args)
            return f"({text})" if prec > 1 else text
        case Call(fn, args):
            return f"{fn.id}(" + ", ".join(format_expr(a) for a in args) + ")"
        case Index(base, sub):
            return f"{format_expr(base, 9)}[{format_expr(sub)}]"
    raise TypeError(f"not an expression: {e!r}")


def format_stmt(s: SourceStmt, indent: int = 0) -> list[str]:
    pad = "    " * indent
    match s:
        case Assign(t, v, _):
            return [f"{pad}{format_expr(t)} = {format_expr(v)}"]
        case AugAssign(t, op, v, _):
            return [f"{pad}{format_expr(t)} {op}= {format_expr(v)}"]
        case If(c, body, orelse, _):
            lines = [f"{pad}if {format_expr(c)}:"]
            for x in body:
                lines.extend(format_stmt(x, indent + 1))
            if len(orelse) == 1 and isinstance(orelse[0], If):
                elif_lines = format_stmt(orelse[0], indent)
                lines.append(pad + "el" + elif_lines[0].strip())
                lines.extend(elif_lines[1:])
            elif orelse:
                lines.append(f"{pad}else:")
                for x in orelse:
                    lines.extend(format_stmt(x, indent + 1))
            return lines
        case While(c, body, _):
            lines = [f"{pad}while {format_expr(c)}:"]
            for x in body:
                lines.extend(format_stmt(x, indent + 1))
            return lines
        case ForIn(var, it, body, _):
            lines = [f"{pad}for {var} in {format_expr(it)}:"]
            for x in body:
                lines.extend(format_stmt(x, indent + 1))
            return lines
        case FuncDef(name, params, body, _):
            lines = [f"{pad}def {name}({', '.join(params)}):"]
            for x in body:
                lines.extend(format_stmt(x, indent + 1))
            return lines
        case Return(None, _):
            return [f"{pad}return"]
        case Return(v, _):
            return [f"{pad}return {format_expr(v)}"]
        case ExprCall(call, _):
            return [f"{pad}{format_expr(call)}"]
        case IOPrint(args, _):
            return [f"{pad}print(" + ", ".join(format_expr(a) for a in args) + ")"]
        case IORead(t, prompt, _):
            return [f"{pad}{format_expr(t)} = input("
                    + ", ".join(format_expr(a) for a in prompt) + ")"]
        case Unsupported(_, _):
            return [f"{pad}pass  # unsupported"]
    raise TypeError(f"not a statement: {s!r}")


def format_source(stmts) -> str:
    lines: list[str] = []
    for s in stmts:
        lines.extend(format_stmt(s))
    return "\n".join(lines) + ("\n" if lines else "")


def strip_locations(stmts):
    """Structural copy with locations zeroed (and marker diagnostics
    blanked), for layout-free comparison."""
    def strip(s):
        kwargs = {}
        for f in fields(s):
            v = getattr(s, f.name)
            if f.name == "loc":
                kwargs[f.name] = (0, 0)
            elif f.name == "reason":
                kwargs[f.name] = ""
            elif f.name in ("body", "orelse"):
                kwargs[f.name] = tuple(strip(x) for x in v)
            else:
                kwargs[f.name] = v
        return type(s)(**kwargs)
    return tuple(strip(s) for s in stmts)
