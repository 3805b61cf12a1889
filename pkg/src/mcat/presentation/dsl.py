"""Text format for monoidal presentations.

::

    coefficients Q            # or: coefficients Q(q)
    object a
    morphism s : a a -> a a
    relation involution : s ; s = a a
    relation braid : s a ; a s ; s a = a s ; s a ; a s

Layers are separated by ``;`` and listed first-applied first.  Inside a
layer, object names are identity strands and morphism names are generators.
``lhs = rhs`` is stored as ``lhs - rhs``.  A term consisting of a coefficient
alone is that multiple of the identity on the relation's endpoints.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..coefficients import CoefficientSyntaxError, Field, QQ, field_by_name
from .model import (
    EndpointMismatchError,
    GeneratorEdge,
    MonoidalPresentation,
    MorphismExpr,
    PresentationError,
    Relation,
    Term,
    UndeclaredIdentifierError,
    format_word,
    make_presentation,
)


class DSLSyntaxError(PresentationError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line, self.column = line, column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_.']*")
_NUMBER = re.compile(r"\d+(?:/\d+)?")


@dataclass
class _Tok:
    kind: str  # name, num, paren, +, -, ;, =
    text: str
    col: int


def _tokenize(text: str, line: int, col0: int) -> list[_Tok]:
    toks: list[_Tok] = []
    i = 0
    while i < len(text):
        ch = text[i]
        col = col0 + i
        if ch.isspace():
            i += 1
        elif ch in "+-;=":
            toks.append(_Tok(ch, ch, col))
            i += 1
        elif ch == "(":
            depth, j = 0, i
            while j < len(text):
                if text[j] == "(":
                    depth += 1
                elif text[j] == ")":
                    depth -= 1
                    if depth == 0:
                        break
                j += 1
            if depth:
                raise DSLSyntaxError("unbalanced parenthesis", line, col)
            toks.append(_Tok("paren", text[i + 1:j], col))
            i = j + 1
        elif m := _NUMBER.match(text, i):
            toks.append(_Tok("num", m.group(), col))
            i = m.end()
        elif m := _NAME.match(text, i):
            toks.append(_Tok("name", m.group(), col))
            i = m.end()
        else:
            raise DSLSyntaxError(f"unexpected character {ch!r}", line, col)
    return toks


def parse_expression(text: str, field: Field, symbols: dict, line: int = 0, col0: int = 1) -> MorphismExpr:
    """Parse a linear combination of layered composites.

    ``symbols`` maps names to object letters (``str``) or :class:`GeneratorEdge`.
    """
    toks = _tokenize(text, line, col0)
    raw: list[tuple] = []  # (coeff, layers or None for a bare scalar)
    side = 1
    i = 0
    if not toks:
        raise DSLSyntaxError("empty expression", line, col0)
    while i < len(toks):
        sign = 1
        while i < len(toks) and toks[i].kind in "+-":
            if toks[i].kind == "-":
                sign = -sign
            i += 1
        if i == len(toks):
            raise DSLSyntaxError("expression ends with an operator", line, toks[-1].col)
        if toks[i].kind == "=":
            raise DSLSyntaxError("misplaced '='", line, toks[i].col)
        coeff = field.one
        if toks[i].kind in ("num", "paren"):
            try:
                coeff = field.parse(toks[i].text)
            except (CoefficientSyntaxError, ZeroDivisionError) as exc:
                raise DSLSyntaxError(str(exc), line, toks[i].col) from None
            i += 1
        layers: list[list] = [[]]
        saw_layer = False
        while i < len(toks) and toks[i].kind in ("name", ";"):
            tok = toks[i]
            if tok.kind == ";":
                layers.append([])
            else:
                if tok.text not in symbols:
                    raise UndeclaredIdentifierError(f"line {line}, column {tok.col}: undeclared name {tok.text!r}")
                layers[-1].append(symbols[tok.text])
            saw_layer = True
            i += 1
        c = coeff * (sign * side)
        raw.append((c, tuple(tuple(layer) for layer in layers) if saw_layer else None))
        if i == len(toks):
            break
        tok = toks[i]
        if tok.kind == "=":
            if side == -1:
                raise DSLSyntaxError("misplaced '='", line, tok.col)
            side = -1
            i += 1
            if i == len(toks):
                raise DSLSyntaxError("missing right-hand side", line, tok.col)
        elif tok.kind not in "+-":
            raise DSLSyntaxError("coefficients must come before the layers of a term", line, tok.col)

    concrete = [Term(c, layers) for c, layers in raw if layers is not None]
    for t in concrete:
        try:
            t.check()
        except EndpointMismatchError as exc:
            raise EndpointMismatchError(f"line {line}: {exc}") from None
    if concrete:
        dom, cod = concrete[0].domain, concrete[0].codomain
    else:
        dom = cod = ()
    terms: list[Term] = []
    for c, layers in raw:
        if layers is None:
            if dom != cod:
                raise EndpointMismatchError(
                    f"line {line}: a scalar term needs equal endpoints, got {format_word(dom)} -> {format_word(cod)}"
                )
            layers = (tuple(dom),)
        if c:
            terms.append(Term(c, layers))
    expr = MorphismExpr(tuple(terms))
    try:
        expr.check()
    except EndpointMismatchError as exc:
        raise EndpointMismatchError(f"line {line}: {exc}") from None
    return expr


def _parse_word(text: str, objects: set, line: int, col: int) -> tuple:
    parts = text.split()
    if parts in ([], ["-"], ["1"]):
        return ()
    for p in parts:
        if p not in objects:
            raise UndeclaredIdentifierError(f"line {line}, column {col}: undeclared object {p!r}")
    return tuple(parts)


def parse_presentation(text: str, name: str = "") -> MonoidalPresentation:
    field = None
    objects: list[str] = []
    edges: list[GeneratorEdge] = []
    symbols: dict = {}
    relations: list[Relation] = []
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        keyword, _, rest = line.strip().partition(" ")
        rest_col = indent + len(keyword) + 2
        if keyword == "coefficients":
            if field is not None or objects or edges or relations:
                raise DSLSyntaxError("'coefficients' must come first and only once", lineno, indent + 1)
            try:
                field = field_by_name(rest)
            except ValueError as exc:
                raise DSLSyntaxError(str(exc), lineno, rest_col) from None
        elif keyword == "object":
            names = rest.split()
            if not names:
                raise DSLSyntaxError("missing object name", lineno, rest_col)
            for n in names:
                if not _NAME.fullmatch(n):
                    raise DSLSyntaxError(f"bad object name {n!r}", lineno, rest_col)
                if n in symbols:
                    raise DSLSyntaxError(f"{n!r} declared twice", lineno, rest_col)
                objects.append(n)
                symbols[n] = n
        elif keyword == "morphism":
            m = re.fullmatch(r"\s*([A-Za-z_][A-Za-z0-9_.']*)\s*:(.*)->(.*)", rest)
            if not m:
                raise DSLSyntaxError("expected 'morphism NAME : WORD -> WORD'", lineno, rest_col)
            n = m.group(1)
            if n in symbols:
                raise DSLSyntaxError(f"{n!r} declared twice", lineno, rest_col)
            objs = set(objects)
            e = GeneratorEdge(
                n,
                _parse_word(m.group(2), objs, lineno, rest_col),
                _parse_word(m.group(3), objs, lineno, rest_col),
                len(edges),
            )
            edges.append(e)
            symbols[n] = e
        elif keyword == "relation":
            m = re.fullmatch(r"\s*([A-Za-z_][A-Za-z0-9_.'\[\]|-]*)\s*:(.*)", rest)
            if not m:
                raise DSLSyntaxError("expected 'relation NAME : EXPRESSION'", lineno, rest_col)
            expr_col = rest_col + m.start(2)
            expr = parse_expression(m.group(2), field or QQ, symbols, lineno, expr_col)
            relations.append(Relation(m.group(1), expr))
        else:
            raise DSLSyntaxError(f"unknown declaration {keyword!r}", lineno, indent + 1)
    return make_presentation(field or QQ, objects, edges, relations, name)


def format_expression(expr: MorphismExpr) -> str:
    if not expr.terms:
        return "0"
    parts = []
    for t in expr.terms:
        body = " ; ".join(" ".join(f.name if isinstance(f, GeneratorEdge) else f for f in layer) for layer in t.layers)
        if not body.strip():
            parts.append(f"+ ({t.coeff})")
        elif t.coeff == 1:
            parts.append(f"+ {body}")
        elif t.coeff == -1:
            parts.append(f"- {body}")
        else:
            parts.append(f"+ ({t.coeff}) {body}")
    out = " ".join(parts)
    return out[2:] if out.startswith("+ ") else out


def serialize_presentation(p: MonoidalPresentation) -> str:
    lines = [f"coefficients {p.field.name}"]
    lines += [f"object {x}" for x in p.objects]
    lines += [f"morphism {e.name} : {format_word(e.domain)} -> {format_word(e.codomain)}" for e in p.edges]
    lines += [f"relation {r.name} : {format_expression(r.expr)}" for r in p.relations]
    return "\n".join(lines) + "\n"
