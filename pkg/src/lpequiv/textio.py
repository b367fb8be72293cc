"""Text syntax for smodels programs (``.lp``) and weight constraint
programs (``.wlp``): parser, printer and model formatting.

Statements end with ``.``; ``%`` starts a comment.  Example::

    { coffee, tea }.
    happy :- 1 { biscuit, cake }.
    bankrupt :- 6 [ coffee=1, cake=2, cognac=4 ].
    acceptable :- happy, not bankrupt.
    compute { acceptable }.
    #hide happy.

Names starting with ``__`` belong to generated atoms and are only
accepted when ``allow_reserved`` is set.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass

from .errors import LpeqError
from .program import (
    MAX_NATURAL,
    Basic,
    Choice,
    Compute,
    Constraint,
    SymbolTable,
    Weight,
    build_program,
)

RESERVED_PREFIX = "__"


@dataclass(frozen=True)
class SourceSpan:
    file: str
    line: int
    column: int

    def __str__(self):
        return f"{self.file}:{self.line}:{self.column}"


class ParseError(LpeqError):
    def __init__(self, message, span=None):
        self.span = span
        super().__init__(f"{span}: {message}" if span else message)


_TOKEN = re.compile(
    r"""
     (?P<ws>[ \t\r\n]+|%[^\n]*)
    |(?P<if>:-)
    |(?P<directive>\#[A-Za-z]+)
    |(?P<num>\d+)
    |(?P<reserved>__(?:[A-Za-z0-9_]+\.)*[A-Za-z0-9_]+(?:\([^()]*\))?)
    |(?P<ident>[a-z_][A-Za-z0-9_]*(?:\([^()]*\))?)
    |(?P<punct>[{}\[\],.=])
    |(?P<minus>-\s*\d+)
    """,
    re.X,
)


@dataclass
class _Tok:
    kind: str
    text: str
    span: SourceSpan


def _tokenize(text, filename):
    toks = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        span = SourceSpan(filename, line, pos - line_start + 1)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", span)
        kind = m.lastgroup
        chunk = m.group()
        if kind == "minus":
            raise ParseError(
                "negative numbers are not supported (negative weights can be "
                "translated away before loading)",
                span,
            )
        if kind != "ws":
            if kind == "reserved":
                kind = "ident"
            toks.append(_Tok(kind, chunk, span))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = pos + chunk.rfind("\n") + 1
        pos = m.end()
    toks.append(_Tok("eof", "", SourceSpan(filename, line, pos - line_start + 1)))
    return toks


class _Parser:
    def __init__(self, text, filename, allow_reserved):
        self.toks = _tokenize(text, filename)
        self.i = 0
        self.allow_reserved = allow_reserved
        self.names = {}
        self.declared = {"#hide": None, "#visible": None, "#atoms": []}

    # -- token helpers
    @property
    def tok(self):
        return self.toks[self.i]

    def peek(self, k=1):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def at(self, text):
        return self.tok.kind != "ident" and self.tok.text == text

    def expect(self, text):
        if not self.at(text):
            raise ParseError(f"expected {text!r}, found {self.tok.text or 'end of input'!r}",
                             self.tok.span)
        self.i += 1

    def number(self):
        tok = self.tok
        if tok.kind != "num":
            raise ParseError(f"expected a number, found {tok.text or 'end of input'!r}",
                             tok.span)
        value = int(tok.text)
        if value > MAX_NATURAL:
            raise ParseError(f"number {value} exceeds 2^63-1", tok.span)
        self.i += 1
        return value

    def atom(self):
        tok = self.tok
        if tok.kind != "ident" or tok.text == "not":
            raise ParseError(f"expected an atom, found {tok.text or 'end of input'!r}",
                             tok.span)
        if tok.text.startswith(RESERVED_PREFIX) and not self.allow_reserved:
            raise ParseError(f"atom names starting with {RESERVED_PREFIX!r} are reserved",
                             tok.span)
        self.i += 1
        return self.names.setdefault(tok.text, len(self.names))

    def literal(self):
        if self.tok.kind == "ident" and self.tok.text == "not" and self.peek().kind == "ident":
            self.i += 1
            return False, self.atom()
        return True, self.atom()

    def separated(self, item, closer):
        out = []
        if self.at(closer):
            return out
        out.append(item())
        while self.at(","):
            self.i += 1
            out.append(item())
        return out

    def weighted_literal(self):
        sign, a = self.literal()
        w = 1
        if self.at("="):
            self.i += 1
            w = self.number()
        return sign, a, w

    # -- statements
    def directive(self):
        tok = self.tok
        if tok.text not in self.declared:
            raise ParseError(f"unknown directive {tok.text}", tok.span)
        self.i += 1
        atoms = self.separated(self.atom, ".")
        self.expect(".")
        if tok.text == "#atoms":
            self.declared["#atoms"].extend(atoms)
        else:
            prev = self.declared[tok.text] or []
            self.declared[tok.text] = prev + atoms

    def body(self):
        lits = self.separated(self.literal, ".")
        return [a for s, a in lits if s], [a for s, a in lits if not s]

    def smodels_statement(self):
        tok = self.tok
        if tok.kind == "ident" and tok.text == "compute" and self.peek().text == "{":
            self.i += 2
            lits = self.separated(self.literal, "}")
            self.expect("}")
            self.expect(".")
            pos = [a for s, a in lits if s]
            neg = [a for s, a in lits if not s]
            if set(pos) & set(neg):
                warnings.warn(
                    f"{tok.span}: compute statement requires an atom both true "
                    "and false; it can never be satisfied",
                    stacklevel=4,
                )
            return Compute(pos, neg)
        if self.at("{"):
            self.i += 1
            hs = self.separated(self.atom, "}")
            if not hs:
                raise ParseError("choice rule needs at least one head atom", tok.span)
            self.expect("}")
            pos, neg = [], []
            if self.at(":-"):
                self.i += 1
                pos, neg = self.body()
            self.expect(".")
            return Choice(hs, pos, neg)
        head = self.atom()
        if self.at("."):
            self.i += 1
            return Basic(head)
        self.expect(":-")
        if self.tok.kind == "num":
            bound = self.number()
            if self.at("{"):
                self.i += 1
                lits = self.separated(self.literal, "}")
                self.expect("}")
                self.expect(".")
                return Constraint(
                    head, bound, [a for s, a in lits if s], [a for s, a in lits if not s]
                )
            self.expect("[")
            lits = self.separated(self.weighted_literal, "]")
            self.expect("]")
            self.expect(".")
            return Weight(
                head,
                bound,
                [(a, w) for s, a, w in lits if s],
                [(a, w) for s, a, w in lits if not s],
            )
        pos, neg = self.body()
        self.expect(".")
        return Basic(head, pos, neg)

    def weight_constraint(self):
        from .wcp import WeightConstraint

        start = self.tok.span
        lower = self.number() if self.tok.kind == "num" else 0
        self.expect("{")
        lits = self.separated(self.weighted_literal, "}")
        self.expect("}")
        upper = self.number() if self.tok.kind == "num" else None
        if upper is not None and lower > upper:
            raise ParseError(f"lower bound {lower} exceeds upper bound {upper}", start)
        return WeightConstraint(
            lower,
            upper,
            [(a, w) for s, a, w in lits if s],
            [(a, w) for s, a, w in lits if not s],
        )

    def wcp_statement(self):
        from .wcp import WCRule

        head = self.weight_constraint()
        body = []
        if self.at(":-"):
            self.i += 1
            body.append(self.weight_constraint())
            while self.at(","):
                self.i += 1
                body.append(self.weight_constraint())
        self.expect(".")
        return WCRule(head, body)

    def run(self, statement):
        rules = []
        while self.tok.kind != "eof":
            if self.tok.kind == "directive":
                self.directive()
            else:
                rules.append(statement())
        return rules

    def declarations(self):
        return self.declared["#visible"], self.declared["#hide"], self.declared["#atoms"]

    def symbols(self):
        return SymbolTable(tuple(sorted(self.names, key=self.names.get)))


def parse_program(text: str, *, filename: str = "<string>", allow_reserved: bool = False):
    """Parse smodels source text into a :class:`~lpequiv.program.Program`."""
    p = _Parser(text, filename, allow_reserved)
    rules = p.run(p.smodels_statement)
    visible, hidden, extra = p.declarations()
    try:
        return build_program(rules, p.symbols(), visible, hidden, extra)
    except LpeqError as exc:
        raise ParseError(str(exc), SourceSpan(filename, 1, 1)) from exc


def parse_wcp(text: str, *, filename: str = "<string>", allow_reserved: bool = False):
    """Parse weight constraint program text into a :class:`~lpequiv.wcp.WCProgram`."""
    from .wcp import build_wcp

    p = _Parser(text, filename, allow_reserved)
    rules = p.run(p.wcp_statement)
    visible, hidden, extra = p.declarations()
    try:
        return build_wcp(rules, p.symbols(), visible, hidden, extra)
    except LpeqError as exc:
        raise ParseError(str(exc), SourceSpan(filename, 1, 1)) from exc


def parse(text: str, *, wcp: bool = False, **kwargs):
    return parse_wcp(text, **kwargs) if wcp else parse_program(text, **kwargs)


# -- printing


def _lits(name, pos, neg):
    return [name(a) for a in pos] + ["not " + name(b) for b in neg]


def _wlits(name, pos, neg):
    return [f"{name(a)}={w}" for a, w in pos] + [f"not {name(b)}={w}" for b, w in neg]


def format_rule(rule, name) -> str:
    if isinstance(rule, Basic):
        body = _lits(name, rule.pos, rule.neg)
        if not body:
            return f"{name(rule.head)}."
        return f"{name(rule.head)} :- {', '.join(body)}."
    if isinstance(rule, Constraint):
        body = ", ".join(_lits(name, rule.pos, rule.neg))
        return f"{name(rule.head)} :- {rule.bound} {{ {body} }}.".replace("{  }", "{}")
    if isinstance(rule, Choice):
        hs = ", ".join(name(h) for h in rule.heads)
        body = _lits(name, rule.pos, rule.neg)
        if not body:
            return f"{{ {hs} }}."
        return f"{{ {hs} }} :- {', '.join(body)}."
    if isinstance(rule, Weight):
        body = ", ".join(_wlits(name, rule.pos, rule.neg))
        return f"{name(rule.head)} :- {rule.bound} [ {body} ].".replace("[  ]", "[]")
    if isinstance(rule, Compute):
        body = ", ".join(_lits(name, rule.pos, rule.neg))
        return f"compute {{ {body} }}.".replace("{  }", "{}")
    raise TypeError(f"not a rule: {rule!r}")


def _directives(P):
    lines = []
    if P.hidden:
        lines.append("#hide " + ", ".join(P.name(a) for a in sorted(P.hidden)) + ".")
    if P.hba:
        lines.append("#atoms " + ", ".join(P.name(a) for a in sorted(P.hba)) + ".")
    return lines


def format_program(P) -> str:
    """Program text, one statement per line; parses back to the same program."""
    lines = [format_rule(r, P.symbols.name) for r in P.rules]
    lines += _directives(P)
    return "".join(line + "\n" for line in lines)


def format_constraint(C, name) -> str:
    body = ", ".join(_wlits(name, C.pos, C.neg))
    text = f"{C.lower} {{ {body} }}".replace("{  }", "{}")
    if C.upper is not None:
        text += f" {C.upper}"
    return text


def format_wcp(P) -> str:
    name = P.symbols.name
    lines = []
    for r in P.rules:
        text = format_constraint(r.head, name)
        if r.body:
            text += " :- " + ", ".join(format_constraint(c, name) for c in r.body)
        lines.append(text + ".")
    lines += _directives(P)
    return "".join(line + "\n" for line in lines)


def unparse(obj) -> str:
    from .wcp import WCProgram

    return format_wcp(obj) if isinstance(obj, WCProgram) else format_program(obj)


def format_model(P, M) -> str:
    """``{a, b, *h}``: visible atoms first, then hidden ones marked ``*``."""
    vis = sorted(P.name(a) for a in M if a in P.visible)
    hid = sorted("*" + P.name(a) for a in M if a not in P.visible)
    return "{" + ", ".join(vis + hid) + "}"


def format_atoms(P, atoms) -> str:
    return "{" + ", ".join(sorted(P.name(a) for a in atoms)) + "}"
