"""Noncommutative polynomials and degree-bounded Groebner bases.

Words are tuples of generator indices read as products: ``(i, j)`` is
``g_i g_j``.  Monomials are ordered deglex with an explicit generator
precedence.  :func:`complete` runs Buchberger-Mora completion, resolving
every overlap and inclusion ambiguity up to a degree bound, and the
resulting :class:`GroebnerState` reduces polynomials, counts normal words
and multiplies in the quotient.
"""
from __future__ import annotations

import heapq
import itertools
import json
import warnings
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .coefficients import Field, QQ, field_by_name, field_of
from .linalg import RowSpace

NCWord = tuple  # tuple[int, ...]


class DegreeOverflowWarning(UserWarning):
    """A product exceeded the verified degree of the Groebner state."""


@dataclass(frozen=True)
class MonomialOrder:
    """Deglex order; ``precedence`` lists generator indices from smallest to largest."""

    precedence: tuple

    def __post_init__(self):
        if sorted(self.precedence) != list(range(len(self.precedence))):
            raise ValueError("precedence must be a permutation of the generator indices")
        rank = [0] * len(self.precedence)
        for r, g in enumerate(self.precedence):
            rank[g] = r
        object.__setattr__(self, "_rank", tuple(rank))

    @classmethod
    def deglex(cls, n: int, precedence: Sequence[int] | None = None) -> "MonomialOrder":
        return cls(tuple(range(n)) if precedence is None else tuple(precedence))

    @property
    def ngens(self) -> int:
        return len(self.precedence)

    def key(self, w: NCWord) -> tuple:
        return (len(w), tuple(self._rank[g] for g in w))

    def heap_key(self, w: NCWord) -> tuple:
        # ascending heap_key means descending order
        return (-len(w), tuple(-self._rank[g] for g in w))

    def less(self, u: NCWord, v: NCWord) -> bool:
        return self.key(u) < self.key(v)


def _add_into(acc: dict, w, c) -> None:
    nv = acc.get(w, 0) + c
    if nv:
        acc[w] = nv
    else:
        acc.pop(w, None)


class NCPolynomial:
    """An element of the free algebra; terms sorted descending, leading term first."""

    __slots__ = ("order", "terms")

    def __init__(self, terms: Mapping | Iterable = (), order: MonomialOrder | None = None):
        if order is None:
            raise ValueError("NCPolynomial needs a monomial order")
        self.order = order
        items = terms.items() if isinstance(terms, Mapping) else ((w, c) for c, w in terms)
        acc: dict = {}
        for w, c in items:
            _add_into(acc, tuple(w), c)
        self.terms = tuple(sorted(((c, w) for w, c in acc.items()), key=lambda cw: order.key(cw[1]), reverse=True))

    @classmethod
    def monomial(cls, w: NCWord, order: MonomialOrder, coeff=Fraction(1)) -> "NCPolynomial":
        return cls({tuple(w): coeff}, order)

    @classmethod
    def constant(cls, c, order: MonomialOrder) -> "NCPolynomial":
        return cls({(): c}, order)

    def as_dict(self) -> dict:
        return {w: c for c, w in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def lead_word(self) -> NCWord:
        return self.terms[0][1]

    @property
    def lead_coeff(self):
        return self.terms[0][0]

    @property
    def degree(self) -> int:
        return max((len(w) for _, w in self.terms), default=-1)

    def monic(self) -> "NCPolynomial":
        inv = 1 / self.lead_coeff
        return NCPolynomial({w: c * inv for c, w in self.terms}, self.order)

    def __add__(self, other: "NCPolynomial") -> "NCPolynomial":
        acc = self.as_dict()
        for c, w in other.terms:
            _add_into(acc, w, c)
        return NCPolynomial(acc, self.order)

    def __neg__(self):
        return NCPolynomial({w: -c for c, w in self.terms}, self.order)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k) -> "NCPolynomial":
        return NCPolynomial({w: k * c for c, w in self.terms}, self.order)

    def __mul__(self, other):
        if not isinstance(other, NCPolynomial):
            return self.scale(other)
        acc: dict = {}
        for c1, w1 in self.terms:
            for c2, w2 in other.terms:
                _add_into(acc, w1 + w2, c1 * c2)
        return NCPolynomial(acc, self.order)

    def __rmul__(self, k):
        return self.scale(k)

    def __eq__(self, other):
        if isinstance(other, NCPolynomial):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == (((Fraction(other), ()),) if other else ())
        return NotImplemented

    def __hash__(self):
        return hash(self.terms)

    def format(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        parts = []
        for c, w in self.terms:
            body = "*".join(names[g] if names else f"g{g}" for g in w) or "1"
            if c == 1:
                parts.append(f"+ {body}")
            elif c == -1:
                parts.append(f"- {body}")
            elif not w:
                parts.append(f"+ ({c})")
            else:
                parts.append(f"+ ({c})*{body}")
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"NCPolynomial({self})"


# ---------------------------------------------------------------------------
# rewriting against a set of monic leading words


class _Rules:
    """Rewriting rules ``lead -> tail`` taken from monic polynomials."""

    def __init__(self, order: MonomialOrder):
        self.order = order
        self.tail: dict = {}  # lead word -> {word: coeff}, lead == sum of tail
        self.lengths: dict = {}  # length -> count of leads of that length

    def add(self, lead: NCWord, tail: dict) -> None:
        self.tail[lead] = tail
        self.lengths[len(lead)] = self.lengths.get(len(lead), 0) + 1

    def remove(self, lead: NCWord) -> dict:
        n = len(lead)
        self.lengths[n] -= 1
        if not self.lengths[n]:
            del self.lengths[n]
        return self.tail.pop(lead)

    def find(self, w: NCWord):
        for n in self.lengths:
            for i in range(len(w) - n + 1):
                if w[i:i + n] in self.tail:
                    return i, n
        return None

    def reduce(self, p: dict) -> dict:
        hk = self.order.heap_key
        work = {w: c for w, c in p.items() if c}
        heap = [(hk(w), w) for w in work]
        heapq.heapify(heap)
        out: dict = {}
        while heap:
            _, w = heapq.heappop(heap)
            c = work.pop(w, None)
            if not c:
                continue
            hit = self.find(w)
            if hit is None:
                out[w] = c
                continue
            i, n = hit
            left, right = w[:i], w[i + n:]
            for tw, tc in self.tail[w[i:i + n]].items():
                nw = left + tw + right
                if nw not in work:
                    heapq.heappush(heap, (hk(nw), nw))
                _add_into(work, nw, c * tc)
        return out


def _monic_rule(p: dict, order: MonomialOrder) -> tuple:
    lead = max(p, key=order.key)
    inv = 1 / p[lead]
    return lead, {w: -c * inv for w, c in p.items() if w != lead}


def _rule_poly(lead: NCWord, tail: dict) -> dict:
    out = {w: -c for w, c in tail.items()}
    out[lead] = 1
    return out


def _overlaps(u: NCWord, v: NCWord):
    """Proper overlaps ``u = A X``, ``v = X B`` with ``X`` nonempty; yields ``(len X)``."""
    for k in range(1, min(len(u), len(v))):
        if u[len(u) - k:] == v[:k]:
            yield k


# ---------------------------------------------------------------------------
# normal words


class _Automaton:
    """Aho-Corasick automaton recognising words that contain a leading word."""

    def __init__(self, leads: Iterable[NCWord], ngens: int):
        self.ngens = ngens
        goto = [dict()]
        dead = [False]
        for w in leads:
            s = 0
            for g in w:
                if g not in goto[s]:
                    goto.append({})
                    dead.append(False)
                    goto[s][g] = len(goto) - 1
                s = goto[s][g]
            dead[s] = True
        fail = [0] * len(goto)
        delta = [[0] * ngens for _ in goto]
        queue = deque()
        for g in range(ngens):
            if g in goto[0]:
                t = goto[0][g]
                delta[0][g] = t
                queue.append(t)
            else:
                delta[0][g] = 0
        while queue:
            s = queue.popleft()
            dead[s] = dead[s] or dead[fail[s]]
            for g in range(ngens):
                if g in goto[s]:
                    t = goto[s][g]
                    fail[t] = delta[fail[s]][g]
                    delta[s][g] = t
                    queue.append(t)
                else:
                    delta[s][g] = delta[fail[s]][g]
        self.delta = delta
        self.dead = dead

    def counts(self, max_len: int) -> list:
        live = {0: 1}
        out = [1]
        for _ in range(max_len):
            nxt: dict = {}
            for s, n in live.items():
                for t in self.delta[s]:
                    if not self.dead[t]:
                        nxt[t] = nxt.get(t, 0) + n
            live = nxt
            out.append(sum(live.values()))
        return out

    def words(self, max_len: int) -> list:
        out = []
        stack = [(0, ())]
        while stack:
            s, w = stack.pop()
            out.append(w)
            if len(w) == max_len:
                continue
            for g in range(self.ngens):
                t = self.delta[s][g]
                if not self.dead[t]:
                    stack.append((t, w + (g,)))
        return out


@dataclass(frozen=True)
class QuotientDimension:
    """``counts[k]`` is the number of normal words of degree exactly ``k``."""

    finite: bool
    dimension: int | None
    counts: tuple
    verified_degree: int

    def cumulative(self) -> list:
        return list(itertools.accumulate(self.counts))


class GroebnerState:
    """A Groebner basis verified up to ``verified_degree``."""

    def __init__(self, order: MonomialOrder, rules: _Rules, verified_degree: int, field: Field = QQ, names=None):
        self.order = order
        self._rules = rules
        self.verified_degree = verified_degree
        self.field = field
        self.names = list(names) if names is not None else None
        self._auto = _Automaton(rules.tail, order.ngens)
        self.normal_word_counts = tuple(self._auto.counts(verified_degree))

    @property
    def basis(self) -> list:
        leads = sorted(self._rules.tail, key=lambda w: (len(w), w))
        return [NCPolynomial(_rule_poly(w, self._rules.tail[w]), self.order) for w in leads]

    @property
    def leading_words(self) -> list:
        return sorted(self._rules.tail, key=lambda w: (len(w), w))

    def reduce(self, p: NCPolynomial) -> NCPolynomial:
        return NCPolynomial(self._rules.reduce(p.as_dict()), self.order)

    def is_member(self, p: NCPolynomial) -> bool:
        return not self._rules.reduce(p.as_dict())

    def is_normal(self, w: NCWord) -> bool:
        return self._rules.find(tuple(w)) is None

    def quotient_dim(self) -> QuotientDimension:
        counts = self.normal_word_counts
        for n in counts:
            if n == 0:
                return QuotientDimension(True, sum(counts), counts, self.verified_degree)
        return QuotientDimension(False, None, counts, self.verified_degree)

    def normal_words(self, max_len: int | None = None) -> list:
        if max_len is None:
            max_len = self.verified_degree
        return sorted(self._auto.words(max_len), key=self.order.key)

    def mul(self, p: NCPolynomial, q: NCPolynomial) -> NCPolynomial:
        return quotient_mul(p, q, self)

    def poly(self, terms) -> NCPolynomial:
        return NCPolynomial(terms, self.order)

    def word_of(self, *names: str) -> NCPolynomial:
        idx = {n: i for i, n in enumerate(self.names or ())}
        return NCPolynomial.monomial(tuple(idx[n] for n in names), self.order, self.field.one)

    def to_json(self) -> dict:
        return {
            "field": self.field.name,
            "generators": self.names,
            "precedence": list(self.order.precedence),
            "verified_degree": self.verified_degree,
            "basis": [
                [{"word": list(w), "coeff": self.field.format(c)} for c, w in p.terms]
                for p in self.basis
            ],
            "counts": list(self.normal_word_counts),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, data) -> "GroebnerState":
        if isinstance(data, str):
            data = json.loads(data)
        fld = field_by_name(data["field"])
        order = MonomialOrder(tuple(data["precedence"]))
        rules = _Rules(order)
        for poly in data["basis"]:
            p = {tuple(t["word"]): fld.parse(t["coeff"]) for t in poly}
            lead, tail = _monic_rule(p, order)
            rules.add(lead, tail)
        return cls(order, rules, data["verified_degree"], fld, data.get("generators"))


def complete(
    relations: Iterable[NCPolynomial],
    order: MonomialOrder,
    max_degree: int,
    names: Sequence[str] | None = None,
    field: Field | None = None,
) -> GroebnerState:
    """Buchberger-Mora completion up to ambiguity degree ``max_degree``."""
    rels = [p for p in relations if p]
    if field is None:
        field = field_of(rels[0].lead_coeff) if rels else QQ
    rules = _Rules(order)
    ids: dict = {}  # lead -> serial of the current rule with that lead
    serial = itertools.count()
    pairs: list = []
    pending = [p.as_dict() for p in rels]

    def queue_pairs(u: NCWord, su: int) -> None:
        for v, sv in list(ids.items()):
            for k in _overlaps(u, v):
                deg = len(u) + len(v) - k
                if deg <= max_degree:
                    heapq.heappush(pairs, (deg, next(serial), u, su, v, sv, k))
            if v != u:
                for k in _overlaps(v, u):
                    deg = len(u) + len(v) - k
                    if deg <= max_degree:
                        heapq.heappush(pairs, (deg, next(serial), v, sv, u, su, k))

    def insert(p: dict) -> None:
        r = rules.reduce(p)
        if not r:
            return
        lead, tail = _monic_rule(r, order)
        for old in [v for v in rules.tail if len(v) > len(lead) and _contains(v, lead)]:
            pending.append(_rule_poly(old, rules.remove(old)))
            del ids[old]
        rules.add(lead, tail)
        s = next(serial)
        ids[lead] = s
        queue_pairs(lead, s)

    while pending or pairs:
        if pending:
            insert(pending.pop())
            continue
        deg, _, u, su, v, sv, k = heapq.heappop(pairs)
        if ids.get(u) != su or ids.get(v) != sv:
            continue
        # u = A X, v = X B: resolve A X B both ways
        a, b = u[: len(u) - k], v[k:]
        s_poly: dict = {}
        for w, c in _rule_poly(u, rules.tail[u]).items():
            _add_into(s_poly, w + b, c)
        for w, c in _rule_poly(v, rules.tail[v]).items():
            _add_into(s_poly, a + w, -c)
        insert(s_poly)

    for lead in list(rules.tail):
        rules.tail[lead] = rules.reduce(rules.tail[lead])
    return GroebnerState(order, rules, max_degree, field, names)


def _contains(w: NCWord, sub: NCWord) -> bool:
    n = len(sub)
    return any(w[i:i + n] == sub for i in range(len(w) - n + 1))


def reduce(p: NCPolynomial, G: GroebnerState) -> NCPolynomial:
    return G.reduce(p)


def quotient_dim(G: GroebnerState) -> QuotientDimension:
    return G.quotient_dim()


def quotient_mul(p: NCPolynomial, q: NCPolynomial, G: GroebnerState) -> NCPolynomial:
    """``reduce(p q)``; warns when the product leaves the verified degree range."""
    if p and q and p.degree + q.degree > G.verified_degree:
        warnings.warn(
            f"product of degree {p.degree + q.degree} exceeds verified degree {G.verified_degree}",
            DegreeOverflowWarning,
            stacklevel=2,
        )
    return G.reduce(p * q)


# ---------------------------------------------------------------------------
# reference algebras and homomorphism checks


@dataclass
class ReferenceAlgebra:
    """A finite-dimensional algebra on a basis, with images for presentation generators.

    ``mult[(i, j)]`` is the product of basis elements ``i`` and ``j`` as a
    dict ``{k: coeff}``; ``images[name]`` is a vector.
    """

    labels: list
    mult: dict
    unit: dict
    images: dict = field(default_factory=dict)
    name: str = ""

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def product(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.mult[(i, j)].items():
                    _add_into(out, k, a * b * c)
        return out

    def validate(self) -> None:
        n = self.dimension
        basis = [{i: 1} for i in range(n)]
        for i in range(n):
            if self.product(self.unit, basis[i]) != basis[i] or self.product(basis[i], self.unit) != basis[i]:
                raise ValueError(f"{self.name}: unit fails on {self.labels[i]}")
            for j in range(n):
                ij = self.product(basis[i], basis[j])
                for k in range(n):
                    if self.product(ij, basis[k]) != self.product(basis[i], self.mult[(j, k)]):
                        raise ValueError(f"{self.name}: not associative at {self.labels[i], self.labels[j], self.labels[k]}")

    def evaluate(self, p: NCPolynomial, names: Sequence[str]) -> dict:
        out: dict = {}
        for c, w in p.terms:
            v = dict(self.unit)
            for g in w:
                v = self.product(v, self.images[names[g]])
            for k, x in v.items():
                _add_into(out, k, c * x)
        return out

    def format_vector(self, v: dict) -> str:
        if not v:
            return "0"
        return " + ".join(f"({c})*{self.labels[k]}" for k, c in sorted(v.items()))


@dataclass
class HomomorphismVerdict:
    well_defined: bool
    violations: list  # (relation name, image vector as text)
    image_dim: int
    target_dim: int
    surjective: bool
    quotient: QuotientDimension | None = None

    @property
    def isomorphism(self) -> bool:
        return (
            self.well_defined
            and self.surjective
            and self.quotient is not None
            and self.quotient.finite
            and self.quotient.dimension == self.target_dim
        )

    def to_json(self) -> dict:
        return {
            "well_defined": self.well_defined,
            "violations": [{"relation": n, "image": v} for n, v in self.violations],
            "image_dim": self.image_dim,
            "target_dim": self.target_dim,
            "surjective": self.surjective,
            "quotient_dim": None if self.quotient is None else self.quotient.dimension,
            "quotient_finite": None if self.quotient is None else self.quotient.finite,
            "isomorphism": self.isomorphism,
        }


def image_span(T: ReferenceAlgebra, names: Sequence[str]) -> RowSpace:
    """The subalgebra generated by the images of ``names`` (closed under right multiplication)."""
    space = RowSpace([T.unit])
    frontier = [dict(T.unit)]
    gens = [T.images[n] for n in names]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = T.product(v, g)
                if space.add(w):
                    nxt.append(w)
        frontier = nxt
    return space


def check_homomorphism(P, T: ReferenceAlgebra, G: GroebnerState | None = None, max_degree: int | None = None):
    """Check that generator images respect every relation of ``P`` and generate ``T``.

    ``P`` is an algebra presentation (see :mod:`mcat.linearize`).  When ``G``
    or ``max_degree`` is given the quotient dimension is compared as well.
    """
    missing = [n for n in P.names if n not in T.images]
    if missing:
        raise ValueError(f"no image for generators {missing}")
    order = P.default_order()
    violations = []
    for rel in P.relations:
        v = T.evaluate(rel.polynomial(order), P.names)
        if v:
            violations.append((rel.name, T.format_vector(v)))
    span = image_span(T, P.names)
    if G is None and max_degree is not None:
        G = complete(P.polynomials(order), order, max_degree, P.names, P.field)
    return HomomorphismVerdict(
        well_defined=not violations,
        violations=violations,
        image_dim=span.rank,
        target_dim=T.dimension,
        surjective=span.rank == T.dimension,
        quotient=None if G is None else G.quotient_dim(),
    )


def _transposition(d: int, k: int) -> tuple:
    p = list(range(d))
    p[k], p[k + 1] = p[k + 1], p[k]
    return tuple(p)


def _compose_perm(p: tuple, q: tuple) -> tuple:
    """``p o q``: apply ``q`` first."""
    return tuple(p[q[i]] for i in range(len(q)))


def symmetric_group_algebra(d: int, crossing: str = "s") -> ReferenceAlgebra:
    """The group algebra of S_d; ``crossing[k]`` maps to the swap of positions ``k`` and ``k+1``."""
    perms = sorted(itertools.permutations(range(d)))
    index = {p: i for i, p in enumerate(perms)}
    one = Fraction(1)
    mult = {(i, j): {index[_compose_perm(p, q)]: one} for i, p in enumerate(perms) for j, q in enumerate(perms)}
    images = {f"{crossing}[{k}]": {index[_transposition(d, k)]: one} for k in range(d - 1)}
    return ReferenceAlgebra(perms, mult, {index[tuple(range(d))]: one}, images, f"kS{d}")


def wreath_product_algebra(A, d: int, crossing: str = "s", token: str = "u_") -> ReferenceAlgebra:
    """``A^{(x)d}`` semidirect ``S_d`` with ``(a1, p1)(a2, p2) = (a1 (p1 . a2), p1 p2)``.

    ``p . (a_1 (x) ... (x) a_d)`` puts ``a_i`` in position ``p(i)``.  Tokens
    ``u_b[k]`` map to ``b`` in position ``k``.
    """
    perms = sorted(itertools.permutations(range(d)))
    tensors = list(itertools.product(A.labels, repeat=d))
    labels = [(t, p) for p in perms for t in tensors]
    index = {x: i for i, x in enumerate(labels)}

    def act(p, t):
        out = [None] * d
        for i in range(d):
            out[p[i]] = t[i]
        return tuple(out)

    def tensor_product(t1, t2) -> dict:
        out = {(): Fraction(1)}
        for a, b in zip(t1, t2):
            nxt: dict = {}
            for pre, c in out.items():
                for lab, cc in A.mult[(a, b)].items():
                    _add_into(nxt, pre + (lab,), c * cc)
            out = nxt
        return out

    mult = {}
    for i, (t1, p1) in enumerate(labels):
        for j, (t2, p2) in enumerate(labels):
            p = _compose_perm(p1, p2)
            mult[(i, j)] = {index[(t, p)]: c for t, c in tensor_product(t1, act(p1, t2)).items()}

    def pure(vectors, p) -> dict:
        out = {(): Fraction(1)}
        for vec in vectors:
            out = {pre + (lab,): c * cc for pre, c in out.items() for lab, cc in vec.items()}
        return {index[(t, p)]: c for t, c in out.items() if c}

    ident = tuple(range(d))
    unit = pure([A.unit] * d, ident)
    images = {f"{crossing}[{k}]": pure([A.unit] * d, _transposition(d, k)) for k in range(d - 1)}
    for b in A.labels:
        for k in range(d):
            vecs = [A.unit] * d
            vecs[k] = {b: Fraction(1)}
            images[f"{token}{b}[{k}]"] = pure(vecs, ident)
    return ReferenceAlgebra(labels, mult, unit, images, f"{A.name}^{d} x S{d}")
