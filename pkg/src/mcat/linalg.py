"""Exact incremental row reduction over a field, with sparse dict rows."""
from __future__ import annotations

from typing import Hashable, Iterable


class RowSpace:
    """Reduced row echelon form, maintained one vector at a time.

    Vectors are dicts ``{column key: coefficient}``.  Column keys may be any
    hashable; they are ordered by first appearance, and the pivot of a row is
    its latest-seen column.  Pivot rows are kept fully reduced and monic, so
    two spaces are equal iff :meth:`canonical` agrees.
    """

    def __init__(self, vectors: Iterable[dict] = ()):
        self._col: dict = {}
        self.pivots: dict = {}  # column key -> monic row, zero in every other pivot column
        for v in vectors:
            self.add(v)

    def _rank_of(self, key: Hashable) -> int:
        if key not in self._col:
            self._col[key] = len(self._col)
        return self._col[key]

    def reduce(self, v: dict) -> dict:
        out = {k: c for k, c in v.items() if c}
        for k in [k for k in out if k in self.pivots]:
            c = out.get(k)
            if not c:
                continue
            for kk, cc in self.pivots[k].items():
                nv = out.get(kk, 0) - c * cc
                if nv:
                    out[kk] = nv
                else:
                    out.pop(kk, None)
        return out

    def add(self, v: dict) -> bool:
        """Insert ``v``; return True if the rank went up."""
        r = self.reduce(v)
        if not r:
            return False
        piv = max(r, key=self._rank_of)
        inv = 1 / r[piv]
        r = {k: c * inv for k, c in r.items()}
        for k, row in self.pivots.items():
            c = row.get(piv)
            if c:
                for kk, cc in r.items():
                    nv = row.get(kk, 0) - c * cc
                    if nv:
                        row[kk] = nv
                    else:
                        row.pop(kk, None)
        self.pivots[piv] = r
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def __len__(self):
        return self.rank

    def canonical(self) -> frozenset:
        return frozenset((k, frozenset(row.items())) for k, row in self.pivots.items())

    def same_span(self, other: "RowSpace") -> bool:
        """Equality of row spaces, independent of column ordering."""
        return self.rank == other.rank and all(other.contains(r) for r in self.pivots.values())
