"""Built-in presentations: symmetric, degenerate affine Hecke, braid, Hecke,
wreath and affine wreath categories.

Each is written in the text format and parsed, so the library doubles as a
set of worked examples of that format.
"""
from __future__ import annotations

from .dsl import parse_presentation
from .frobenius import FrobeniusAlgebraData, algebra_by_name
from .model import MonoidalPresentation, PresentationError

SYMMETRIC = """\
coefficients Q
object a
morphism s : a a -> a a
relation involution : s ; s = a a
relation braid : s a ; a s ; s a = a s ; s a ; a s
"""

# the dot x sits on one strand; a crossing carries a dot from its bottom-right
# input to its top-left output up to the identity
DAHA = SYMMETRIC + """\
morphism x : a -> a
relation dot_slide : s ; x a - a x ; s = a a
"""

BRAID = """\
coefficients {field}
object a
morphism sigma : a a -> a a
morphism sigma_inv : a a -> a a
relation inverse_right : sigma ; sigma_inv = a a
relation inverse_left : sigma_inv ; sigma = a a
relation braid : sigma a ; a sigma ; sigma a = a sigma ; sigma a ; a sigma
"""

HECKE_SKEIN = "relation skein : sigma - sigma_inv = (q - 1/q) a a\n"

NAMES = ("symmetric", "daha", "braid", "hecke", "wreath", "affine-wreath")


def _coeff(c) -> str:
    return f"({c})"


def _token(label: str) -> str:
    return f"u_{label}"


def _wreath_text(A: FrobeniusAlgebraData) -> str:
    lines = [SYMMETRIC.rstrip("\n")]
    for b in A.labels:
        lines.append(f"morphism {_token(b)} : a -> a")
    unit = " + ".join(f"{_coeff(c)} {_token(b)}" for b, c in A.unit.items())
    lines.append(f"relation token_unit : {unit} = a")
    for x in A.labels:
        for y in A.labels:
            # token y applied first, then token x: equals the token of x*y
            prod = A.mult[(x, y)]
            rhs = " + ".join(f"{_coeff(c)} {_token(b)}" for b, c in prod.items() if c) or "0"
            lines.append(f"relation token_product_{x}_{y} : {_token(y)} ; {_token(x)} = {rhs}")
    for b in A.labels:
        lines.append(f"relation token_slide_{b} : {_token(b)} a ; s = s ; a {_token(b)}")
    return "\n".join(lines) + "\n"


def _affine_wreath_text(A: FrobeniusAlgebraData) -> str:
    if not A.has_trace:
        raise PresentationError(f"affine wreath needs trace and dual basis data for {A.name}")
    lines = [_wreath_text(A).rstrip("\n"), "morphism x : a -> a"]
    casimir = " + ".join(f"{_coeff(c)} {_token(b)} {_token(bd)}" for (b, bd), c in sorted(A.casimir.items()))
    lines.append(f"relation dot_slide : s ; x a - a x ; s = {casimir or '0'}")
    for b in A.labels:
        lines.append(f"relation dot_token_{b} : x ; {_token(b)} = {_token(b)} ; x")
    return "\n".join(lines) + "\n"


def builtin(name: str, **params) -> MonoidalPresentation:
    """Return one of the library presentations.

    ``wreath`` and ``affine-wreath`` take ``algebra=`` (a
    :class:`FrobeniusAlgebraData` or a name such as ``"Z2"``); it defaults
    to the group algebra of Z/2.
    """
    key = name.replace("_", "-").lower()
    algebra = params.pop("algebra", None)
    if params:
        raise PresentationError(f"unexpected parameters for {name}: {sorted(params)}")
    if key in ("wreath", "affine-wreath"):
        if algebra is None:
            algebra = "Z2"
        if isinstance(algebra, str):
            algebra = algebra_by_name(algebra)
        if not isinstance(algebra, FrobeniusAlgebraData):
            raise PresentationError("algebra must be FrobeniusAlgebraData or a builtin algebra name")
        text = _wreath_text(algebra) if key == "wreath" else _affine_wreath_text(algebra)
        return parse_presentation(text, name=f"{key}({algebra.name})")
    if algebra is not None:
        raise PresentationError(f"{name} takes no algebra parameter")
    if key == "symmetric":
        return parse_presentation(SYMMETRIC, name="symmetric")
    if key == "daha":
        return parse_presentation(DAHA, name="daha")
    if key == "braid":
        return parse_presentation(BRAID.format(field="Q"), name="braid")
    if key == "hecke":
        return parse_presentation(BRAID.format(field="Q(q)") + HECKE_SKEIN, name="hecke")
    raise PresentationError(f"unknown builtin {name!r}; choose from {', '.join(NAMES)}")


def builtin_source(name: str, **params) -> str:
    from .dsl import serialize_presentation

    return serialize_presentation(builtin(name, **params))

