"""Finite-dimensional algebras with a trace and dual bases (token data for wreath categories)."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .model import PresentationError


class InvalidAlgebraError(PresentationError):
    pass


Vector = dict  # basis label -> coefficient, zero entries omitted


def _clean(v: dict) -> dict:
    return {k: c for k, c in v.items() if c}


@dataclass(frozen=True, eq=False)
class FrobeniusAlgebraData:
    """An algebra A given on a basis by structure constants.

    ``mult[(a, b)]`` is the product ``a*b`` as a vector over the basis.
    ``trace`` and ``dual`` are optional; they are only needed by the affine
    wreath construction.  ``dual[b]`` is the dual basis element of ``b``
    written in the same basis.
    """

    name: str
    labels: tuple
    mult: dict
    unit: Vector
    trace: dict = field(default=None)
    dual: dict = field(default=None)

    def __post_init__(self):
        self.validate()

    @property
    def dimension(self) -> int:
        return len(self.labels)

    @property
    def has_trace(self) -> bool:
        return self.trace is not None and self.dual is not None

    def product(self, x: Vector, y: Vector) -> Vector:
        out: dict = {}
        for a, ca in x.items():
            for b, cb in y.items():
                for c, cc in self.mult[(a, b)].items():
                    out[c] = out.get(c, 0) + ca * cb * cc
        return _clean(out)

    def tr(self, x: Vector):
        return sum((self.trace.get(a, 0) * c for a, c in x.items()), Fraction(0))

    def validate(self) -> None:
        labels = self.labels
        if len(set(labels)) != len(labels) or not labels:
            raise InvalidAlgebraError(f"{self.name}: basis labels must be distinct and nonempty")
        for a in labels:
            for b in labels:
                if (a, b) not in self.mult:
                    raise InvalidAlgebraError(f"{self.name}: missing product {a}*{b}")
        basis = {a: {a: Fraction(1)} for a in labels}
        for a in labels:
            if self.product(self.unit, basis[a]) != basis[a] or self.product(basis[a], self.unit) != basis[a]:
                raise InvalidAlgebraError(f"{self.name}: unit is not a two-sided identity on {a}")
            for b in labels:
                ab = self.product(basis[a], basis[b])
                for c in labels:
                    if self.product(ab, basis[c]) != self.product(basis[a], self.product(basis[b], basis[c])):
                        raise InvalidAlgebraError(f"{self.name}: product is not associative on ({a}, {b}, {c})")
        if self.trace is None and self.dual is None:
            return
        if self.trace is None or self.dual is None:
            raise InvalidAlgebraError(f"{self.name}: trace and dual basis must be given together")
        for a in labels:
            for b in labels:
                if self.tr(self.product(basis[a], basis[b])) != self.tr(self.product(basis[b], basis[a])):
                    raise InvalidAlgebraError(f"{self.name}: trace is not symmetric on ({a}, {b})")
                want = 1 if a == b else 0
                if self.tr(self.product(self.dual[a], basis[b])) != want:
                    raise InvalidAlgebraError(f"{self.name}: tr(dual({a}) {b}) != {want}")

    @cached_property
    def casimir(self) -> dict:
        """The element sum_b b (x) dual(b) as {(left label, right label): coefficient}."""
        if not self.has_trace:
            raise InvalidAlgebraError(f"{self.name}: no trace/dual data")
        out: dict = {}
        for b in self.labels:
            for c, coeff in self.dual[b].items():
                out[(b, c)] = out.get((b, c), 0) + coeff
        return _clean(out)


def group_algebra(n: int) -> FrobeniusAlgebraData:
    """The group algebra of Z/n with tr(g^k) = [k == 0] and dual(g^k) = g^-k."""
    if n < 1:
        raise InvalidAlgebraError("cyclic group order must be positive")
    labels = tuple("1" if k == 0 else ("g" if k == 1 else f"g{k}") for k in range(n))
    one = Fraction(1)
    mult = {(labels[i], labels[j]): {labels[(i + j) % n]: one} for i in range(n) for j in range(n)}
    trace = {labels[0]: one}
    dual = {labels[k]: {labels[(-k) % n]: one} for k in range(n)}
    name = "trivial" if n == 1 else f"Z{n}"
    return FrobeniusAlgebraData(name, labels, mult, {labels[0]: one}, trace, dual)


# structure constants are validated by brute force, so keep named algebras small
MAX_CYCLIC_ORDER = 12


def algebra_by_name(name: str) -> FrobeniusAlgebraData:
    key = name.strip()
    if key in ("trivial", "k", "Q"):
        return group_algebra(1)
    if key.startswith("Z") and key[1:].isdigit() and 1 <= int(key[1:]) <= MAX_CYCLIC_ORDER:
        return group_algebra(int(key[1:]))
    raise InvalidAlgebraError(f"unknown algebra {name!r} (try trivial or Zn with 1 <= n <= {MAX_CYCLIC_ORDER})")
