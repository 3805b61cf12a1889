"""From a monoidal presentation to a linear presentation and to algebra presentations.

A monoidal presentation ``<X, E, R>`` presents the same category as the
linear presentation with objects ``M(X)``, generators the whiskered triples
``(v, e, w)``, and relations the interchange instances ``C`` together with all
whiskered relation instances ``r_{a,b}``.  Both families are infinite; here
they are truncated by ambient word length.  When every generator is an
endomorphism, restricting to one object ``a`` gives an algebra presentation
of ``End(a)``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .coefficients import Field
from .freemon import (
    Morphism,
    Path,
    Triple,
    expr_to_morphism,
    normal_form,
    object_words,
    tensor,
    triples_from,
    whisker_left,
    whisker_right,
)
from .ncalg import MonomialOrder, NCPolynomial
from .presentation.model import GeneratorEdge, MonoidalPresentation, Word, format_word


class TruncationError(ValueError):
    pass


class EndomorphismHypothesisError(ValueError):
    """Algebra presentations need every generating morphism to be an endomorphism."""


def whisker_relation(r: Morphism, a: Word, b: Word) -> Morphism:
    """``1_a (x) r (x) 1_b`` in normal form."""
    return normal_form(whisker_left(a, whisker_right(r, b)))


def termwise_instance(r: Morphism, a: Word, b: Word) -> Morphism:
    """Replace every step ``(v, e, w)`` of every term of ``r`` by ``(a v, e, w b)``."""
    return whisker_left(a, whisker_right(r, b))


def tensor_instance(r: Morphism, a: Word, b: Word, one=1) -> Morphism:
    """``1_a (x) r (x) 1_b`` built with the tensor product."""
    return tensor(Morphism.identity(a, one), tensor(r, Morphism.identity(b, one)))


def _path_words(p: Path) -> list:
    return [p.base] + [t.codomain for t in p.steps]


def _fits(m: Morphism, n: int) -> bool:
    return all(len(w) <= n for _, p in m.terms for w in _path_words(p)) and len(m.domain) <= n


@dataclass(frozen=True)
class LinearRelation:
    """One emitted relation; ``source`` is a relation name or ``interchange``."""

    name: str
    source: str
    left: Word
    right: Word
    morphism: Morphism
    middle: Word = ()

    @property
    def is_interchange(self) -> bool:
        return self.source == "interchange"

    def sort_key(self) -> tuple:
        return (self.source, len(self.left), len(self.right), self.left, self.right, self.name)


def _generator_key(t: Triple) -> tuple:
    return (t.edge.index, len(t.left), len(t.right), t.left, t.right)


@dataclass
class LinearPresentation:
    """The truncation to words of length at most ``max_len`` of the linearized presentation."""

    source: MonoidalPresentation
    max_len: int
    objects: list
    generators: list
    relations: list

    @property
    def interchange(self) -> list:
        return [r for r in self.relations if r.is_interchange]

    @property
    def whiskered(self) -> list:
        return [r for r in self.relations if not r.is_interchange]

    def generator_index(self) -> dict:
        return {t: i for i, t in enumerate(self.generators)}

    def to_json(self) -> dict:
        gidx = self.generator_index()
        fld = self.source.field

        def rel(r: LinearRelation) -> dict:
            return {
                "name": r.name,
                "kind": "C" if r.is_interchange else "R'",
                "source": r.source,
                "frame": [format_word(r.left), format_word(r.right)],
                "domain": format_word(r.morphism.domain),
                "codomain": format_word(r.morphism.codomain),
                "terms": [
                    {"coeff": fld.format(c), "steps": [gidx[t] for t in p.steps]}
                    for c, p in r.morphism.terms
                ],
                "text": str(r.morphism),
            }

        return {
            "presentation": self.source.name,
            "coefficients": fld.name,
            "max_len": self.max_len,
            "objects": [format_word(w) for w in self.objects],
            "generators": [
                {
                    "index": i,
                    "edge": t.edge.name,
                    "left": format_word(t.left),
                    "right": format_word(t.right),
                    "domain": format_word(t.domain),
                    "codomain": format_word(t.codomain),
                    "text": str(t),
                }
                for i, t in enumerate(self.generators)
            ],
            "relations": [rel(r) for r in self.relations],
        }

    def to_text(self) -> str:
        lines = [
            f"linear presentation of {self.source.name or 'presentation'} truncated at word length {self.max_len}",
            f"objects: {len(self.objects)}",
            f"generators: {len(self.generators)}",
        ]
        lines += [f"  {t}" for t in self.generators]
        lines.append(f"relations: {len(self.relations)} ({len(self.interchange)} interchange, {len(self.whiskered)} whiskered)")
        for r in self.relations:
            lines.append(f"  {r.name}: {r.morphism} = 0")
        return "\n".join(lines) + "\n"


def _interchange_instances(edges: Sequence[GeneratorEdge], objects: Sequence[str], n: int) -> list:
    out = []
    for e1 in edges:
        for e2 in edges:
            w1 = max(len(e1.domain), len(e1.codomain))
            w2 = max(len(e2.domain), len(e2.codomain))
            room = n - w1 - w2
            if room < 0:
                continue
            for v in object_words(objects, room):
                for m in object_words(objects, room - len(v)):
                    for w in object_words(objects, room - len(v) - len(m)):
                        # e1 on the left, e2 on the right; apply either one first
                        left_first = Path(
                            v + e1.domain + m + e2.domain + w,
                            (Triple(v, e1, m + e2.domain + w), Triple(v + e1.codomain + m, e2, w)),
                        )
                        right_first = Path(
                            v + e1.domain + m + e2.domain + w,
                            (Triple(v + e1.domain + m, e2, w), Triple(v, e1, m + e2.codomain + w)),
                        )
                        if left_first == right_first:
                            continue
                        f = Morphism.from_path(right_first) - Morphism.from_path(left_first)
                        name = f"interchange[{e1.name}|{e2.name}]({format_word(v)} | {format_word(m)} | {format_word(w)})"
                        out.append(LinearRelation(name, "interchange", v, w, f, m))
    return out


def linearize(P: MonoidalPresentation, max_len: int) -> LinearPresentation:
    """Emit generators, interchange instances and whiskered relations up to word length ``max_len``."""
    objects = list(object_words(P.objects, max_len))
    generators = sorted(
        {t for w in objects for t in triples_from(w, P.edges) if len(t.codomain) <= max_len},
        key=_generator_key,
    )
    relations = _interchange_instances(P.edges, P.objects, max_len)
    for rel in P.relations:
        r = expr_to_morphism(rel.expr, P.field.one)
        room = max_len - max(len(r.domain), len(r.codomain))
        for a in object_words(P.objects, room):
            for b in object_words(P.objects, room - len(a)):
                inst = termwise_instance(r, a, b)
                if _fits(inst, max_len):
                    name = f"{rel.name}({format_word(a)} | {format_word(b)})"
                    relations.append(LinearRelation(name, rel.name, a, b, inst))
    if not any(not r.is_interchange for r in relations) and P.relations:
        raise TruncationError(f"max_len={max_len} is too small for any relation instance")
    relations.sort(key=LinearRelation.sort_key)
    return LinearPresentation(P, max_len, objects, generators, relations)


# ---------------------------------------------------------------------------
# endomorphism algebras


@dataclass(frozen=True)
class AlgebraRelation:
    name: str
    source: str
    terms: tuple  # ((coeff, word), ...); words in product order, last-applied letter first
    left: Word = ()
    right: Word = ()

    def polynomial(self, order: MonomialOrder) -> NCPolynomial:
        return NCPolynomial(self.terms, order)


def _index_from_right(t: Triple) -> int:
    # strands to the right of the generator, plus one
    return len(t.right) + 1


@dataclass
class AlgebraPresentation:
    """Generators ``e[offset]`` and relations of ``End(a)``."""

    obj: Word
    field: Field
    generators: list  # Triples, emission order
    relations: list = field(default_factory=list)
    source: str = ""

    @property
    def names(self) -> list:
        return [f"{t.edge.name}[{t.offset}]" for t in self.generators]

    @property
    def index(self) -> dict:
        return {t: i for i, t in enumerate(self.generators)}

    def default_order(self) -> MonomialOrder:
        return MonomialOrder.deglex(len(self.generators))

    def polynomials(self, order: MonomialOrder | None = None) -> list:
        order = order or self.default_order()
        return [r.polynomial(order) for r in self.relations]

    def max_relation_degree(self) -> int:
        return max((len(w) for r in self.relations for _, w in r.terms), default=0)

    def indices_from_right(self) -> dict:
        """Name -> index counted from the right (``1`` for the rightmost position)."""
        return {n: _index_from_right(t) for n, t in zip(self.names, self.generators)}

    def word_to_morphism(self, word: Sequence[int], one=1) -> Morphism:
        steps = tuple(self.generators[g] for g in reversed(word))
        return Morphism.from_path(Path(self.obj, steps), one)

    def relation_morphism(self, rel: AlgebraRelation) -> Morphism:
        out = Morphism.zero(self.obj, self.obj)
        for c, w in rel.terms:
            out = out + self.word_to_morphism(w, self.field.one).scale(c)
        return out

    def to_json(self) -> dict:
        names = self.names
        order = self.default_order()
        return {
            "presentation": self.source,
            "object": format_word(self.obj),
            "coefficients": self.field.name,
            "generators": [
                {
                    "name": n,
                    "triple": str(t),
                    "index_from_right": _index_from_right(t),
                }
                for n, t in zip(names, self.generators)
            ],
            "relations": [
                {
                    "name": r.name,
                    "source": r.source,
                    "terms": [{"coeff": self.field.format(c), "word": [names[g] for g in w]} for c, w in r.polynomial(order).terms],
                    "text": r.polynomial(order).format(names),
                }
                for r in self.relations
            ],
        }

    def to_text(self) -> str:
        names = self.names
        order = self.default_order()
        d = len(self.obj)
        lines = [
            f"End({format_word(self.obj)}) over {self.field.name}",
            f"generators: {len(self.generators)}",
        ]
        for n, t in zip(names, self.generators):
            lines.append(f"  {n} = {t}   (index from the right: {_index_from_right(t)})")
        lines.append(
            f"index dictionary: index from the right = strands to the right + 1; for a crossing at offset k this is {d} - 1 - k"
        )
        lines.append(f"relations: {len(self.relations)}")
        for r in self.relations:
            lines.append(f"  {r.name}: {r.polynomial(order).format(names)} = 0")
        return "\n".join(lines) + "\n"


def _check_endomorphisms(P: MonoidalPresentation) -> None:
    bad = [e for e in P.edges if not e.is_endomorphism]
    if bad:
        listing = ", ".join(str(e) for e in bad)
        raise EndomorphismHypothesisError(
            "an algebra presentation of End(a) by whiskered generators needs every generating"
            f" morphism to be an endomorphism; these are not: {listing}"
        )


def end_algebra(P: MonoidalPresentation, a: Word) -> AlgebraPresentation:
    """Generators and relations of ``End(a)``: commutators of disjoint generators and whiskered relations."""
    _check_endomorphisms(P)
    a = tuple(a)
    for x in a:
        if x not in P.objects:
            raise ValueError(f"unknown object {x!r}")
    gens = sorted(triples_from(a, P.edges), key=_generator_key)
    idx = {t: i for i, t in enumerate(gens)}
    A = AlgebraPresentation(a, P.field, gens, source=P.name)
    one = P.field.one
    rels = []
    for i, t1 in enumerate(gens):
        for j, t2 in enumerate(gens):
            if j <= i:
                continue
            lo, hi = (t1, t2) if t1.offset <= t2.offset else (t2, t1)
            if lo.offset + len(lo.edge.domain) > hi.offset:
                continue
            # hi applied after lo versus before lo
            w1 = (idx[hi], idx[lo])
            w2 = (idx[lo], idx[hi])
            name = f"interchange({A.names[idx[lo]]}, {A.names[idx[hi]]})"
            rels.append(AlgebraRelation(name, "interchange", ((one, w1), (-one, w2))))
    for rel in P.relations:
        r = expr_to_morphism(rel.expr, one)
        room = len(a) - len(r.domain)
        if room < 0:
            continue
        for k in range(room + 1):
            left, right = a[:k], a[k + len(r.domain):]
            if left + r.domain + right != a:
                continue
            inst = termwise_instance(r, left, right)
            terms = tuple((c, tuple(idx[t] for t in reversed(p.steps))) for c, p in inst.terms)
            name = f"{rel.name}({format_word(left)} | {format_word(right)})"
            rels.append(AlgebraRelation(name, rel.name, terms, left, right))
    A.relations = rels
    return A


def end_algebra_of_power(P: MonoidalPresentation, obj: str, d: int) -> AlgebraPresentation:
    return end_algebra(P, (obj,) * d)


def default_max_degree(A: AlgebraPresentation) -> int:
    """``2 d m`` with ``d`` the object length and ``m`` the largest relation degree."""
    return max(1, 2 * len(A.obj) * max(1, A.max_relation_degree()))


def dumps(doc) -> str:
    return json.dumps(doc.to_json(), indent=2)
