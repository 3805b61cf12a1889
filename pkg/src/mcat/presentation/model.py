"""Monoidal presentations: object words, generating edges, formal relation terms."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Union

from ..coefficients import Field, QQ

Word = tuple  # tuple[str, ...]; the empty tuple is the unit object


class PresentationError(ValueError):
    """Base class for invalid presentations."""


class EndpointMismatchError(PresentationError):
    pass


class UndeclaredIdentifierError(PresentationError):
    pass


def word(text: Union[str, Iterable[str]] = ()) -> Word:
    """Build an object word from ``"a a b"``, ``"-"`` (the unit) or an iterable."""
    if isinstance(text, str):
        parts = text.split()
        if parts in (["-"], ["1"]):
            return ()
        return tuple(parts)
    return tuple(text)


def word_concat(u: Word, v: Word) -> Word:
    return tuple(u) + tuple(v)


def word_len(u: Word) -> int:
    return len(u)


def format_word(u: Word) -> str:
    return " ".join(u) if u else "-"


@dataclass(frozen=True)
class GeneratorEdge:
    name: str
    domain: Word
    codomain: Word
    index: int = 0

    @property
    def is_endomorphism(self) -> bool:
        return self.domain == self.codomain

    def __str__(self):
        return f"{self.name} : {format_word(self.domain)} -> {format_word(self.codomain)}"


Factor = Union[str, GeneratorEdge]  # a bare string is an identity strand
Layer = tuple  # tuple[Factor, ...]


def layer_domain(layer: Layer) -> Word:
    out: list[str] = []
    for f in layer:
        out.extend(f.domain if isinstance(f, GeneratorEdge) else (f,))
    return tuple(out)


def layer_codomain(layer: Layer) -> Word:
    out: list[str] = []
    for f in layer:
        out.extend(f.codomain if isinstance(f, GeneratorEdge) else (f,))
    return tuple(out)


@dataclass(frozen=True)
class Term:
    coeff: object
    layers: tuple  # tuple[Layer, ...], first-applied layer first

    @property
    def domain(self) -> Word:
        return layer_domain(self.layers[0])

    @property
    def codomain(self) -> Word:
        return layer_codomain(self.layers[-1])

    def check(self) -> None:
        if not self.layers:
            raise PresentationError("a term needs at least one layer")
        for i in range(len(self.layers) - 1):
            cod = layer_codomain(self.layers[i])
            dom = layer_domain(self.layers[i + 1])
            if cod != dom:
                raise EndpointMismatchError(
                    f"layer {i + 1} ends at {format_word(cod)} but layer {i + 2} starts at {format_word(dom)}"
                )


@dataclass(frozen=True)
class MorphismExpr:
    """A formal linear combination of layered composites."""

    terms: tuple

    @property
    def domain(self) -> Word:
        return self.terms[0].domain if self.terms else ()

    @property
    def codomain(self) -> Word:
        return self.terms[0].codomain if self.terms else ()

    def check(self) -> None:
        for t in self.terms:
            t.check()
        for t in self.terms[1:]:
            if (t.domain, t.codomain) != (self.domain, self.codomain):
                raise EndpointMismatchError(
                    f"terms disagree on endpoints: {format_word(self.domain)} -> {format_word(self.codomain)}"
                    f" versus {format_word(t.domain)} -> {format_word(t.codomain)}"
                )

    def edges(self) -> set:
        return {f for t in self.terms for layer in t.layers for f in layer if isinstance(f, GeneratorEdge)}


@dataclass(frozen=True)
class Relation:
    name: str
    expr: MorphismExpr  # read as expr = 0


@dataclass(frozen=True)
class MonoidalPresentation:
    field: Field
    objects: tuple
    edges: tuple
    relations: tuple
    name: str = field(default="", compare=False)

    def __post_init__(self):
        self.validate()

    def edge(self, name: str) -> GeneratorEdge:
        for e in self.edges:
            if e.name == name:
                return e
        raise UndeclaredIdentifierError(f"no morphism named {name!r}")

    def relation(self, name: str) -> Relation:
        for r in self.relations:
            if r.name == name:
                return r
        raise KeyError(name)

    def validate(self) -> None:
        objs = set(self.objects)
        if len(objs) != len(self.objects):
            raise PresentationError("duplicate object names")
        names = [e.name for e in self.edges]
        if len(set(names)) != len(names):
            raise PresentationError("duplicate morphism names")
        if objs & set(names):
            raise PresentationError(f"names used for both objects and morphisms: {sorted(objs & set(names))}")
        for e in self.edges:
            for x in e.domain + e.codomain:
                if x not in objs:
                    raise UndeclaredIdentifierError(f"morphism {e.name} uses undeclared object {x!r}")
        declared = set(self.edges)
        rel_names = set()
        for r in self.relations:
            if r.name in rel_names:
                raise PresentationError(f"duplicate relation name {r.name!r}")
            rel_names.add(r.name)
            for t in r.expr.terms:
                if not self.field.contains(t.coeff):
                    raise PresentationError(f"relation {r.name}: coefficient {t.coeff!r} is not in {self.field.name}")
                for layer in t.layers:
                    for f in layer:
                        if isinstance(f, GeneratorEdge):
                            if f not in declared:
                                raise UndeclaredIdentifierError(f"relation {r.name}: unknown morphism {f.name!r}")
                        elif f not in objs:
                            raise UndeclaredIdentifierError(f"relation {r.name}: unknown object {f!r}")
            try:
                r.expr.check()
            except EndpointMismatchError as exc:
                raise EndpointMismatchError(f"relation {r.name}: {exc}") from None

    @property
    def all_endomorphisms(self) -> bool:
        return all(e.is_endomorphism for e in self.edges)


def make_presentation(field: Field = QQ, objects=(), edges=(), relations=(), name: str = "") -> MonoidalPresentation:
    """Build a presentation, numbering edges in the given order."""
    numbered = tuple(
        GeneratorEdge(e.name, tuple(e.domain), tuple(e.codomain), i) for i, e in enumerate(edges)
    )
    by_name = {e.name: e for e in numbered}

    def renumber(f):
        return by_name.get(f.name, f) if isinstance(f, GeneratorEdge) else f

    rels = tuple(
        Relation(
            r.name,
            MorphismExpr(tuple(
                Term(t.coeff, tuple(tuple(renumber(f) for f in layer) for layer in t.layers))
                for t in r.expr.terms
            )),
        )
        for r in relations
    )
    return MonoidalPresentation(field, tuple(objects), numbered, rels, name)
