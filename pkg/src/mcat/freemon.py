"""Morphisms of the free linear monoidal category on a monoidal quiver.

A morphism is a linear combination of paths of whiskered generators
``(v, e, w)``.  Composition concatenates paths; the tensor product is
``f (x) g = (f (x) 1_d) o (1_a (x) g)``.  Terms keep the raw paths they were
built from; :func:`normal_form` applies the interchange law, moving a step
that acts strictly to the left of its predecessor below it, and returns the
canonical representative.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .presentation.model import (
    GeneratorEdge,
    MonoidalPresentation,
    MorphismExpr,
    Word,
    format_word,
)


class EndpointError(ValueError):
    pass


@dataclass(frozen=True)
class Triple:
    """A generator with identity strands ``left`` and ``right`` beside it."""

    left: Word
    edge: GeneratorEdge
    right: Word

    @property
    def domain(self) -> Word:
        return self.left + self.edge.domain + self.right

    @property
    def codomain(self) -> Word:
        return self.left + self.edge.codomain + self.right

    @property
    def offset(self) -> int:
        return len(self.left)

    def key(self) -> tuple:
        return (len(self.left), self.edge.index, len(self.right), self.edge.name, self.left, self.right)

    def whiskered(self, left: Word = (), right: Word = ()) -> "Triple":
        return Triple(tuple(left) + self.left, self.edge, self.right + tuple(right))

    def __str__(self):
        return f"({format_word(self.left)} | {self.edge.name} | {format_word(self.right)})"


@dataclass(frozen=True)
class Path:
    """Steps listed first-applied first; no steps means the identity on ``base``."""

    base: Word
    steps: tuple = ()

    def __post_init__(self):
        cur = self.base
        for t in self.steps:
            if t.domain != cur:
                raise EndpointError(f"step {t} does not start at {format_word(cur)}")
            cur = t.codomain

    @property
    def domain(self) -> Word:
        return self.base

    @property
    def codomain(self) -> Word:
        return self.steps[-1].codomain if self.steps else self.base

    def key(self) -> tuple:
        return (len(self.steps), tuple(t.key() for t in self.steps))

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        if not self.steps:
            return f"1_{{{format_word(self.base)}}}"
        # written as a composite, last-applied step leftmost
        return " o ".join(str(t) for t in reversed(self.steps))


def _unchecked_path(base: Word, steps: tuple) -> Path:
    p = object.__new__(Path)
    object.__setattr__(p, "base", base)
    object.__setattr__(p, "steps", steps)
    return p


class Morphism:
    """A canonical linear combination of paths with common endpoints.

    Terms are merged, zero coefficients dropped, and sorted by path key.
    Equality is equality of these canonical term lists; it does not apply
    the interchange law (compare normal forms for that).
    """

    __slots__ = ("domain", "codomain", "terms")

    def __init__(self, domain: Word, codomain: Word, terms: Iterable = ()):
        self.domain = tuple(domain)
        self.codomain = tuple(codomain)
        acc: dict = {}
        for c, p in terms:
            if p.domain != self.domain or p.codomain != self.codomain:
                raise EndpointError(
                    f"path {p} is not a morphism {format_word(self.domain)} -> {format_word(self.codomain)}"
                )
            if p in acc:
                acc[p] = acc[p] + c
            else:
                acc[p] = c
        self.terms = tuple(sorted(((c, p) for p, c in acc.items() if c), key=lambda cp: cp[1].key()))

    @classmethod
    def identity(cls, w: Word, one=Fraction(1)) -> "Morphism":
        w = tuple(w)
        return cls(w, w, [(one, Path(w))])

    @classmethod
    def zero(cls, domain: Word, codomain: Word) -> "Morphism":
        return cls(domain, codomain)

    @classmethod
    def from_triple(cls, t: Triple, coeff=Fraction(1)) -> "Morphism":
        return cls(t.domain, t.codomain, [(coeff, Path(t.domain, (t,)))])

    @classmethod
    def from_path(cls, p: Path, coeff=Fraction(1)) -> "Morphism":
        return cls(p.domain, p.codomain, [(coeff, p)])

    @classmethod
    def generator(cls, e: GeneratorEdge, coeff=Fraction(1)) -> "Morphism":
        return cls.from_triple(Triple((), e, ()), coeff)

    def is_zero(self) -> bool:
        return not self.terms

    def _check_parallel(self, other: "Morphism") -> None:
        if (self.domain, self.codomain) != (other.domain, other.codomain):
            raise EndpointError("cannot add morphisms with different endpoints")

    def __add__(self, other: "Morphism") -> "Morphism":
        self._check_parallel(other)
        return Morphism(self.domain, self.codomain, self.terms + other.terms)

    def __neg__(self) -> "Morphism":
        return Morphism(self.domain, self.codomain, [(-c, p) for c, p in self.terms])

    def __sub__(self, other: "Morphism") -> "Morphism":
        return self + (-other)

    def scale(self, k) -> "Morphism":
        return Morphism(self.domain, self.codomain, [(k * c, p) for c, p in self.terms])

    def __rmul__(self, k):
        if isinstance(k, Morphism):
            return NotImplemented
        return self.scale(k)

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (self.domain, self.codomain, self.terms) == (other.domain, other.codomain, other.terms)

    def __hash__(self):
        return hash((self.domain, self.codomain, tuple(p for _, p in self.terms)))

    def max_steps(self) -> int:
        return max((len(p) for _, p in self.terms), default=0)

    def paths(self) -> list:
        return [p for _, p in self.terms]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for c, p in self.terms:
            if c == 1:
                parts.append(f"+ {p}")
            elif c == -1:
                parts.append(f"- {p}")
            else:
                parts.append(f"+ ({c}) {p}")
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else out

    def __repr__(self):
        return f"Morphism({format_word(self.domain)} -> {format_word(self.codomain)}: {self})"


# ---------------------------------------------------------------------------
# composition and tensor product


def compose(f: Morphism, g: Morphism) -> Morphism:
    """``f o g``: apply ``g`` first."""
    if f.domain != g.codomain:
        raise EndpointError(
            f"cannot compose: {format_word(g.codomain)} (end of second) != {format_word(f.domain)} (start of first)"
        )
    terms = []
    for cf, pf in f.terms:
        for cg, pg in g.terms:
            terms.append((cf * cg, _unchecked_path(pg.base, pg.steps + pf.steps)))
    return Morphism(g.domain, f.codomain, terms)


def compose_all(*fs: Morphism) -> Morphism:
    """``fs[0] o fs[1] o ...``"""
    out = fs[-1]
    for f in reversed(fs[:-1]):
        out = compose(f, out)
    return out


def whisker_left(a: Word, f: Morphism) -> Morphism:
    a = tuple(a)
    if not a:
        return f
    return Morphism(
        a + f.domain,
        a + f.codomain,
        [(c, _unchecked_path(a + p.base, tuple(t.whiskered(left=a) for t in p.steps))) for c, p in f.terms],
    )


def whisker_right(f: Morphism, a: Word) -> Morphism:
    a = tuple(a)
    if not a:
        return f
    return Morphism(
        f.domain + a,
        f.codomain + a,
        [(c, _unchecked_path(p.base + a, tuple(t.whiskered(right=a) for t in p.steps))) for c, p in f.terms],
    )


def tensor(f: Morphism, g: Morphism) -> Morphism:
    """``f (x) g = (f (x) 1_d) o (1_a (x) g)`` for ``f: a -> b``, ``g: c -> d``."""
    return compose(whisker_right(f, g.codomain), whisker_left(f.domain, g))


def tensor_all(*fs: Morphism) -> Morphism:
    out = fs[0]
    for f in fs[1:]:
        out = tensor(out, f)
    return out


# ---------------------------------------------------------------------------
# interchange normal form


def _is_inverted(earlier: Triple, later: Triple) -> bool:
    """True if ``later`` acts left of ``earlier`` and should be applied first."""
    if later.offset + len(later.edge.domain) > earlier.offset:
        return False
    if later.offset == earlier.offset and not earlier.edge.domain and _unit_loop(later.edge) != _unit_loop(earlier.edge):
        # a unit endomorphism beside a step with empty domain at the same point:
        # both orders look inverted, so apply the unit endomorphism first
        return _unit_loop(later.edge)
    # two unit endomorphisms at the same point stay in place
    return not (later.offset == earlier.offset and _unit_loop(later.edge) and _unit_loop(earlier.edge))


def _unit_loop(e: GeneratorEdge) -> bool:
    return not e.domain and not e.codomain


def _swap(earlier: Triple, later: Triple) -> tuple:
    """Apply the interchange law to an inverted adjacent pair."""
    a, b = later, earlier
    start = a.offset + len(a.edge.domain)
    middle = b.left[start:]
    first = Triple(a.left, a.edge, middle + b.edge.domain + b.right)
    second = Triple(a.left + a.edge.codomain + middle, b.edge, b.right)
    return first, second


def inversions(steps: Sequence[Triple]) -> list:
    """Indices ``i`` where steps ``i`` and ``i+1`` are an inverted pair."""
    return [i for i in range(len(steps) - 1) if _is_inverted(steps[i], steps[i + 1])]


def normalize_steps(steps: Sequence[Triple], rng: random.Random | None = None) -> tuple:
    """Rewrite a step sequence to left-greedy form.

    With ``rng`` the inverted pair to swap is chosen at random (used to check
    that the result does not depend on the rewriting order).
    """
    steps = list(steps)
    n = len(steps)
    budget = 4 * n * n + 16
    while True:
        if rng is None:
            hit = next((i for i in range(n - 1) if _is_inverted(steps[i], steps[i + 1])), None)
        else:
            inv = inversions(steps)
            hit = rng.choice(inv) if inv else None
        if hit is None:
            return tuple(steps)
        steps[hit], steps[hit + 1] = _swap(steps[hit], steps[hit + 1])
        budget -= 1
        if budget < 0:
            raise RuntimeError("interchange rewriting did not terminate")


def normal_path(p: Path, rng: random.Random | None = None) -> Path:
    return _unchecked_path(p.base, normalize_steps(p.steps, rng))


def normal_form(f: Morphism, rng: random.Random | None = None) -> Morphism:
    return Morphism(f.domain, f.codomain, [(c, normal_path(p, rng)) for c, p in f.terms])


def equal_in_free_category(f: Morphism, g: Morphism) -> bool:
    return normal_form(f) == normal_form(g)


# ---------------------------------------------------------------------------
# ideal elements


def ideal_element(r: Morphism, pre: Morphism, post: Morphism) -> Morphism:
    """``post o r o pre``, normalized."""
    return normal_form(compose(post, compose(r, pre)))


def tensor_ideal_element(r: Morphism, f: Morphism, f_post: Morphism, g: Morphism, g_post: Morphism) -> Morphism:
    """``f_post o (g_post (x) r (x) g) o f``, normalized."""
    return normal_form(compose(f_post, compose(tensor(g_post, tensor(r, g)), f)))


# ---------------------------------------------------------------------------
# enumeration


def triples_from(w: Word, edges: Iterable[GeneratorEdge]) -> list:
    """All whiskered generators whose domain is ``w``."""
    w = tuple(w)
    out = []
    for e in edges:
        k = len(e.domain)
        for i in range(len(w) - k + 1):
            if w[i:i + k] == e.domain:
                out.append(Triple(w[:i], e, w[i + k:]))
    out.sort(key=Triple.key)
    return out


def enumerate_paths(domain: Word, edges: Sequence[GeneratorEdge], max_steps: int, codomain: Word | None = None) -> Iterator[Path]:
    """Paths out of ``domain`` with at most ``max_steps`` steps (optionally ending at ``codomain``)."""
    domain = tuple(domain)
    cache: dict = {}

    def out_of(w):
        if w not in cache:
            cache[w] = triples_from(w, edges)
        return cache[w]

    def walk(cur: Word, steps: tuple):
        if codomain is None or cur == tuple(codomain):
            yield _unchecked_path(domain, steps)
        if len(steps) == max_steps:
            return
        for t in out_of(cur):
            yield from walk(t.codomain, steps + (t,))

    yield from walk(domain, ())


# ---------------------------------------------------------------------------
# from presentation syntax


def expr_to_morphism(expr: MorphismExpr, one=Fraction(1)) -> Morphism:
    """Read a layered expression as a raw morphism; each layer is a tensor product."""
    total = None
    for t in expr.terms:
        layer_maps = []
        for layer in t.layers:
            factors = [
                Morphism.generator(f, one) if isinstance(f, GeneratorEdge) else Morphism.identity((f,), one)
                for f in layer
            ]
            layer_maps.append(tensor_all(*factors) if factors else Morphism.identity((), one))
        m = layer_maps[0]
        for nxt in layer_maps[1:]:
            m = compose(nxt, m)
        m = m.scale(t.coeff)
        total = m if total is None else total + m
    if total is None:
        return Morphism.zero(expr.domain, expr.codomain)
    return total


def relation_morphisms(P: MonoidalPresentation) -> dict:
    """Each relation of ``P`` as a raw morphism, by name."""
    return {r.name: expr_to_morphism(r.expr, P.field.one) for r in P.relations}


def parse_morphism(P: MonoidalPresentation, text: str) -> Morphism:
    from .presentation.dsl import parse_expression

    symbols = {x: x for x in P.objects}
    symbols.update({e.name: e for e in P.edges})
    return expr_to_morphism(parse_expression(text, P.field, symbols), P.field.one)


# ---------------------------------------------------------------------------
# brute-force hom-space quotients


class BoundTooSmallWarning(UserWarning):
    pass


def object_words(objects: Sequence[str], max_len: int) -> Iterator[Word]:
    """All words over ``objects`` of length at most ``max_len``, shortest first."""
    layer = [()]
    for _ in range(max_len + 1):
        yield from layer
        layer = [w + (x,) for w in layer for x in objects]


def whiskered_generators(relations: Iterable[Morphism], objects: Sequence[str], max_word_len: int) -> list:
    """All ``1_a (x) r (x) 1_b`` with ambient words of length at most ``max_word_len``."""
    out = []
    for r in relations:
        room = max_word_len - max(len(r.domain), len(r.codomain))
        for a in object_words(objects, room):
            for b in object_words(objects, room - len(a)):
                out.append(whisker_left(a, whisker_right(r, b)))
    return out


def tensor_framed_generators(
    relations: Iterable[Morphism],
    edges: Sequence[GeneratorEdge],
    objects: Sequence[str],
    max_word_len: int,
    framing_bound: int,
) -> list:
    """All ``g' (x) r (x) g`` for paths ``g, g'`` of at most ``framing_bound`` steps."""
    out = []
    for r in relations:
        room = max_word_len - max(len(r.domain), len(r.codomain))
        for c in object_words(objects, room):
            for c2 in object_words(objects, room - len(c)):
                for g in enumerate_paths(c, edges, framing_bound):
                    if len(g.codomain) + len(c2) + len(r.codomain) > max_word_len:
                        continue
                    for g2 in enumerate_paths(c2, edges, framing_bound):
                        if len(g.codomain) + len(g2.codomain) + len(r.codomain) > max_word_len:
                            continue
                        out.append(tensor(Morphism.from_path(g2), tensor(r, Morphism.from_path(g))))
    return out


def _vector(f: Morphism) -> dict:
    return {p: c for c, p in f.terms}


def ideal_subspace(
    domain: Word,
    codomain: Word,
    max_steps: int,
    ideal_generators: Iterable[Morphism],
    framing_bound: int,
    edges: Sequence[GeneratorEdge],
    normalize: bool = True,
):
    """The span of framed elements ``f' o i o f`` inside ``hom(domain, codomain)``.

    Returns ``(basis paths, RowSpace)``.  Only elements all of whose paths
    have at most ``max_steps`` steps are included.  With ``normalize`` the
    computation happens modulo the interchange law, otherwise on raw paths.
    """
    from .linalg import RowSpace

    domain, codomain = tuple(domain), tuple(codomain)
    basis = set()
    for p in enumerate_paths(domain, edges, max_steps, codomain):
        basis.add(normal_path(p) if normalize else p)
    space = RowSpace()
    found = False
    for i in ideal_generators:
        pres = [p for p in enumerate_paths(domain, edges, framing_bound, i.domain)]
        posts = [p for p in enumerate_paths(i.codomain, edges, framing_bound, codomain)]
        for f in pres:
            for f2 in posts:
                if len(f) + len(f2) + i.max_steps() > max_steps:
                    continue
                found = True
                el = compose(Morphism.from_path(f2), compose(i, Morphism.from_path(f)))
                if normalize:
                    el = normal_form(el)
                space.add(_vector(el))
    if not found:
        import warnings

        warnings.warn("no ideal-generator instance fits within the bounds", BoundTooSmallWarning, stacklevel=2)
    return sorted(basis, key=Path.key), space


def hom_span_quotient_dim(
    domain: Word,
    codomain: Word,
    max_steps: int,
    ideal_generators: Iterable[Morphism],
    framing_bound: int,
    edges: Sequence[GeneratorEdge],
    normalize: bool = True,
) -> int:
    """``dim span(paths) - dim(ideal subspace)`` for paths of at most ``max_steps`` steps."""
    basis, space = ideal_subspace(domain, codomain, max_steps, ideal_generators, framing_bound, edges, normalize)
    return len(basis) - space.rank
