"""Exact Gaussian elimination over Scalars on sparse vectors (dicts)."""
from __future__ import annotations

from .scalar import Scalar


def _sub_scaled(v: dict, w: dict, c: Scalar) -> dict:
    out = dict(v)
    for k, a in w.items():
        val = out.get(k)
        val = -(c * a) if val is None else val - c * a
        if val.is_zero():
            out.pop(k, None)
        else:
            out[k] = val
    return out


class Echelon:
    """Incrementally maintained reduced row echelon basis of a span."""

    def __init__(self):
        self.rows: dict = {}  # pivot key -> row with coefficient 1 at pivot
        self.order: list = []

    def reduce(self, v: dict) -> dict:
        v = {k: a for k, a in v.items() if not a.is_zero()}
        for p in self.order:
            c = v.get(p)
            if c is not None:
                v = _sub_scaled(v, self.rows[p], c)
        return v

    def add(self, v: dict) -> bool:
        """Insert v; return True if it enlarged the span."""
        v = self.reduce(v)
        if not v:
            return False
        pivot = min(v, key=_sort_key)
        inv = v[pivot].inverse()
        v = {k: a * inv for k, a in v.items()}
        for p in self.order:
            c = self.rows[p].get(pivot)
            if c is not None:
                self.rows[p] = _sub_scaled(self.rows[p], v, c)
        self.rows[pivot] = v
        self.order.append(pivot)
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    @property
    def dim(self) -> int:
        return len(self.order)


def _sort_key(k):
    # auxiliary tag coordinates never become pivots before real ones
    if isinstance(k, tuple) and len(k) == 2 and k[0] == "__tag__":
        return (1, k[1])
    return (0, repr(k) if not isinstance(k, int) else f"{k:012d}")


def rank(vectors) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.dim


def solve_in_span(vectors: list[dict], target: dict) -> list[Scalar] | None:
    """Coefficients c with sum c_i v_i = target, or None if target is outside the span."""
    tagged = []
    for i, v in enumerate(vectors):
        w = dict(v)
        w[("__tag__", i)] = Scalar.of(-1)
        tagged.append(w)
    ech = Echelon()
    for w in tagged:
        ech.add(w)
    rest = ech.reduce(dict(target))
    if any(not (isinstance(k, tuple) and len(k) == 2 and k[0] == "__tag__") for k in rest):
        return None
    coeffs = [Scalar.of(0)] * len(vectors)
    for k, a in rest.items():
        coeffs[k[1]] = a
    return coeffs
