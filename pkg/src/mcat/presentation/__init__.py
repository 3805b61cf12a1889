"""Monoidal presentations, their text format, and the built-in library."""
from .dsl import DSLSyntaxError, format_expression, parse_expression, parse_presentation, serialize_presentation
from .frobenius import FrobeniusAlgebraData, InvalidAlgebraError, algebra_by_name, group_algebra
from .library import NAMES as BUILTIN_NAMES, builtin, builtin_source
from .model import (
    EndpointMismatchError,
    GeneratorEdge,
    MonoidalPresentation,
    MorphismExpr,
    PresentationError,
    Relation,
    Term,
    UndeclaredIdentifierError,
    Word,
    format_word,
    make_presentation,
    word,
    word_concat,
    word_len,
)

__all__ = [
    "BUILTIN_NAMES",
    "DSLSyntaxError",
    "EndpointMismatchError",
    "FrobeniusAlgebraData",
    "GeneratorEdge",
    "InvalidAlgebraError",
    "MonoidalPresentation",
    "MorphismExpr",
    "PresentationError",
    "Relation",
    "Term",
    "UndeclaredIdentifierError",
    "Word",
    "algebra_by_name",
    "builtin",
    "builtin_source",
    "format_expression",
    "format_word",
    "group_algebra",
    "make_presentation",
    "parse_expression",
    "parse_presentation",
    "serialize_presentation",
    "word",
    "word_concat",
    "word_len",
]
