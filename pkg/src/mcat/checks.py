"""Self-checks: dimension counts against brute-force oracles and interchange property runs.

Each check recomputes a quantity through the full pipeline (presentation,
end algebra, completion) and compares it with an independent enumeration.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable

from .freemon import (
    Morphism,
    Path,
    compose,
    ideal_subspace,
    normal_form,
    relation_morphisms,
    tensor,
    tensor_framed_generators,
    triples_from,
    whiskered_generators,
)
from .linearize import default_max_degree, end_algebra, linearize
from .ncalg import (
    NCPolynomial,
    check_homomorphism,
    complete,
    quotient_mul,
    symmetric_group_algebra,
    wreath_product_algebra,
)
from .presentation import GeneratorEdge, algebra_by_name, builtin


# ---------------------------------------------------------------------------
# oracles


def permutation_count(d: int) -> int:
    return sum(1 for _ in itertools.permutations(range(d)))


def inversions(p) -> int:
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def wreath_count(labels, d: int) -> int:
    return sum(1 for _ in itertools.product(labels, repeat=d)) * permutation_count(d)


def daha_cumulative(d: int, L: int) -> list:
    """Number of ``x^l sigma`` with total ``|l| + length(sigma) <= k``, for ``k = 0..L``."""
    out = []
    for k in range(L + 1):
        n = 0
        for p in itertools.permutations(range(d)):
            for ls in itertools.product(range(k + 1), repeat=d):
                if sum(ls) + inversions(p) <= k:
                    n += 1
        out.append(n)
    return out


def affine_wreath_cumulative(labels, unit_label: str, d: int, L: int) -> list:
    """Monomials ``x^l (x) b_1..b_d (x) sigma`` with every non-unit token of degree one."""
    out = []
    for k in range(L + 1):
        n = 0
        for p in itertools.permutations(range(d)):
            for toks in itertools.product(labels, repeat=d):
                tdeg = sum(1 for b in toks if b != unit_label)
                for ls in itertools.product(range(k + 1), repeat=d):
                    if sum(ls) + tdeg + inversions(p) <= k:
                        n += 1
        out.append(n)
    return out


def laurent_cumulative(L: int) -> list:
    return [sum(1 for e in range(-k, k + 1)) for k in range(L + 1)]


# ---------------------------------------------------------------------------
# pipeline helpers


def end_state(name: str, d: int, max_degree: int | None = None, **params):
    P = builtin(name, **params)
    A = end_algebra(P, ("a",) * d)
    D = max_degree if max_degree is not None else default_max_degree(A)
    G = complete(A.polynomials(), A.default_order(), D, A.names, A.field)
    return A, G


# ---------------------------------------------------------------------------
# random morphisms for the interchange properties


_PLANAR = (
    ("s", ("a", "a"), ("a", "a")),
    ("x", ("a",), ("a",)),
    ("m", ("a", "b"), ("b",)),
    ("t", ("b",), ("a", "a")),
    ("cup", (), ("a", "b")),
    ("cap", ("b", "a"), ()),
)
_UNIT_LOOPS = (("z", (), ()), ("y", (), ()))


def property_edges(family: str = "planar") -> list:
    """Test quivers: ``planar`` has crossings, dots, merges, splits, cups and caps;
    ``loops`` replaces cups and caps by two endomorphisms of the unit object."""
    if family == "planar":
        table = _PLANAR
    elif family == "loops":
        table = _PLANAR[:4] + _UNIT_LOOPS
    else:
        raise ValueError(f"unknown quiver family {family!r}")
    return [GeneratorEdge(n, d, c, i) for i, (n, d, c) in enumerate(table)]


_OBJECTS = ("a", "b")


def random_word(rng: random.Random, max_len: int = 3) -> tuple:
    return tuple(rng.choice(_OBJECTS) for _ in range(rng.randint(0, max_len)))


def random_path(rng: random.Random, edges, start: tuple, max_steps: int = 3, max_width: int = 6) -> Path:
    cur, steps = start, []
    for _ in range(rng.randint(0, max_steps)):
        options = [t for t in triples_from(cur, edges) if len(t.codomain) <= max_width]
        if not options:
            break
        t = rng.choice(options)
        steps.append(t)
        cur = t.codomain
    return Path(start, tuple(steps))


def random_morphism(rng: random.Random, edges, start: tuple | None = None, max_steps: int = 3) -> Morphism:
    """A combination of up to three paths sharing endpoints."""
    if start is None:
        start = random_word(rng)
    p = random_path(rng, edges, start, max_steps)
    f = Morphism.from_path(p, rng.randint(1, 3))
    for _ in range(rng.randint(0, 4)):
        other = random_path(rng, edges, start, max_steps)
        if other.codomain == p.codomain:
            f = f + Morphism.from_path(other, rng.randint(-3, 3) or 1)
    return f


def _nf(f):
    return normal_form(f)


def prop_idempotent(rng, edges) -> bool:
    f = random_morphism(rng, edges, max_steps=5)
    return _nf(_nf(f)) == _nf(f)


def prop_strategy_independent(rng, edges) -> bool:
    f = random_morphism(rng, edges, max_steps=5)
    return normal_form(f, rng) == _nf(f)


def prop_bifunctorial(rng, edges) -> bool:
    f2 = random_morphism(rng, edges)
    f1 = random_morphism(rng, edges, f2.codomain)
    g2 = random_morphism(rng, edges)
    g1 = random_morphism(rng, edges, g2.codomain)
    lhs = tensor(compose(f1, f2), compose(g1, g2))
    rhs = compose(tensor(f1, g1), tensor(f2, g2))
    return _nf(lhs) == _nf(rhs)


def prop_tensor_assoc_unit(rng, edges) -> bool:
    f, g, h = (random_morphism(rng, edges, max_steps=2) for _ in range(3))
    one = Morphism.identity(())
    return (
        _nf(tensor(tensor(f, g), h)) == _nf(tensor(f, tensor(g, h)))
        and tensor(one, f) == f
        and tensor(f, one) == f
    )


def prop_interchange(rng, edges) -> bool:
    f = random_morphism(rng, edges)
    g = random_morphism(rng, edges)
    a, b, c, d = f.domain, f.codomain, g.domain, g.codomain
    lhs = compose(tensor(f, Morphism.identity(d)), tensor(Morphism.identity(a), g))
    rhs = compose(tensor(Morphism.identity(b), g), tensor(f, Morphism.identity(c)))
    return _nf(lhs) == _nf(rhs) == _nf(tensor(f, g))


# Unit endomorphisms at one point are never reordered, so the loop family
# only runs the properties that do not rely on reordering them.
INTERCHANGE_PROPERTIES = (
    ("normal form idempotence", prop_idempotent, "planar"),
    ("strategy independence", prop_strategy_independent, "planar"),
    ("bifunctoriality", prop_bifunctorial, "planar"),
    ("tensor associativity and unitality", prop_tensor_assoc_unit, "planar"),
    ("interchange identity", prop_interchange, "planar"),
    ("unit loops: idempotence", prop_idempotent, "loops"),
    ("unit loops: strategy independence", prop_strategy_independent, "loops"),
    ("unit loops: tensor associativity and unitality", prop_tensor_assoc_unit, "loops"),
)


def run_interchange(seed: int = 0, cases: int = 1000) -> dict:
    """Failures per property over ``cases`` seeded random instances each."""
    out = {}
    for i, (name, prop, family) in enumerate(INTERCHANGE_PROPERTIES):
        rng = random.Random(f"{seed}:{i}")
        edges = property_edges(family)
        failures = sum(0 if prop(rng, edges) else 1 for _ in range(cases))
        out[name] = failures
    return out


# ---------------------------------------------------------------------------
# check registry


@dataclass
class CheckResult:
    name: str
    passed: bool
    expected: object
    actual: object
    seconds: float
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "expected": _jsonable(self.expected),
            "actual": _jsonable(self.actual),
            "seconds": round(self.seconds, 3),
            "detail": self.detail,
        }


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)


@dataclass
class Check:
    name: str
    suites: tuple
    run: Callable  # (seed, cases) -> (passed, expected, actual, detail)


def _dim_check(name: str, d: int, oracle: int, max_degree=None, **params):
    def run(seed, cases):
        A, G = end_state(name, d, max_degree, **params)
        q = G.quotient_dim()
        actual = q.dimension if q.finite else f"not finite within degree {q.verified_degree}"
        return q.finite and q.dimension == oracle, oracle, actual, f"{len(A.generators)} generators, {len(A.relations)} relations"

    return run


def _iso_check(name: str, d: int, reference, **params):
    def run(seed, cases):
        A, G = end_state(name, d, **params)
        v = check_homomorphism(A, reference(), G)
        detail = (
            f"well-defined={v.well_defined} surjective={v.surjective} "
            f"image={v.image_dim} quotient={v.quotient.dimension} target={v.target_dim}"
        )
        return v.isomorphism, "isomorphism", "isomorphism" if v.isomorphism else "no", detail

    return run


def _graded_check(name: str, d: int, L: int, oracle: Callable, max_degree: int, **params):
    def run(seed, cases):
        _, G = end_state(name, d, max_degree, **params)
        got = G.quotient_dim().cumulative()[: L + 1]
        want = oracle()
        return got == want, want, got, f"cumulative normal words, degree bound {max_degree}"

    return run


def _span_check(seed, cases):
    P = builtin("symmetric")
    rels = list(relation_morphisms(P).values())
    aa = ("a", "a")
    framed = tensor_framed_generators(rels, P.edges, P.objects, 2, 2)
    whiskered = whiskered_generators(rels, P.objects, 2)
    basis, tensor_span = ideal_subspace(aa, aa, 4, framed, 2, P.edges)
    _, r_span = ideal_subspace(aa, aa, 4, whiskered, 2, P.edges)
    same = tensor_span.same_span(r_span)
    # the linearized presentation (interchange plus whiskered instances) on raw paths
    lin = linearize(P, 2)
    raw_basis, lin_span = ideal_subspace(aa, aa, 4, [r.morphism for r in lin.relations], 2, P.edges, normalize=False)
    dims = (len(basis) - tensor_span.rank, len(basis) - r_span.rank, len(raw_basis) - lin_span.rank)
    ok = same and tensor_span.rank == r_span.rank and len(set(dims)) == 1
    return ok, "equal spans", f"ranks {tensor_span.rank}/{r_span.rank}, same span={same}", f"quotient dims {dims}"


def _interchange_check(seed, cases):
    fails = run_interchange(seed, cases)
    total = sum(fails.values())
    detail = "; ".join(f"{n}: {cases - k}/{cases}" for n, k in fails.items())
    return total == 0, 0, total, detail


def _braid_check(seed, cases):
    ok, parts = True, []
    for d in (2, 3):
        A, G = end_state("braid", d, 6)
        for k in range(d - 1):
            s = G.word_of(f"sigma[{k}]")
            si = G.word_of(f"sigma_inv[{k}]")
            one = NCPolynomial.constant(A.field.one, G.order)
            good = quotient_mul(s, si, G) == one and quotient_mul(si, s, G) == one
            ok = ok and good
            parts.append(f"d={d} offset {k}: {'ok' if good else 'FAIL'}")
        if d == 2:
            got = G.quotient_dim().cumulative()[:7]
            want = laurent_cumulative(6)
            ok = ok and got == want
            parts.append(f"d=2 counts {got} vs {want}")
    return ok, "sigma sigma_inv = 1 and 2L+1 counts", "ok" if ok else "mismatch", "; ".join(parts)


def _registry() -> list:
    Z2 = algebra_by_name("Z2")
    checks = []
    for d, want in ((1, 1), (2, 2), (3, 6), (4, 24)):
        checks.append(Check(f"symmetric dim d={d}", ("core", "acceptance"), _dim_check("symmetric", d, permutation_count(d))))
    for d in (3, 4):
        checks.append(
            Check(f"symmetric isomorphism d={d}", ("acceptance",), _iso_check("symmetric", d, lambda d=d: symmetric_group_algebra(d)))
        )
    for d in (2, 3):
        checks.append(Check(f"hecke dim d={d}", ("core", "acceptance"), _dim_check("hecke", d, permutation_count(d))))
    for d in (1, 2, 3):
        checks.append(
            Check(f"wreath Z2 dim d={d}", ("core", "acceptance"), _dim_check("wreath", d, wreath_count(Z2.labels, d), algebra=Z2))
        )
    checks.append(
        Check("wreath Z2 isomorphism d=2", ("acceptance",), _iso_check("wreath", 2, lambda: wreath_product_algebra(Z2, 2), algebra=Z2))
    )
    checks.append(
        Check("daha graded counts d=2 L=6", ("acceptance",), _graded_check("daha", 2, 6, lambda: daha_cumulative(2, 6), 8))
    )
    checks.append(
        Check(
            "affine wreath Z2 graded counts d=2 L=4",
            ("acceptance",),
            _graded_check("affine-wreath", 2, 4, lambda: affine_wreath_cumulative(Z2.labels, "1", 2, 4), 6, algebra=Z2),
        )
    )
    checks.append(Check("tensor ideal span equivalence", ("acceptance",), _span_check))
    checks.append(Check("interchange properties", ("interchange", "acceptance"), _interchange_check))
    checks.append(Check("braid invertibility", ("acceptance",), _braid_check))
    return checks


SUITES = ("core", "interchange", "acceptance", "all")


def checks_in(suite: str) -> list:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    return [c for c in _registry() if suite == "all" or suite in c.suites]


def run_suite(suite: str, seed: int = 0, cases: int = 1000) -> list:
    results = []
    for c in checks_in(suite):
        t = time.perf_counter()
        try:
            passed, expected, actual, detail = c.run(seed, cases)
        except Exception as exc:  # report, don't abort the suite
            passed, expected, actual, detail = False, None, f"error: {exc!r}", ""
        results.append(CheckResult(c.name, passed, expected, actual, time.perf_counter() - t, detail))
    return results
