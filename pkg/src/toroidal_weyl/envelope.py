"""Truncated U(L(sl_2)) in PBW form, Garland series, and tensor symmetrisers.

Letters are ``(kind, a)`` with kind 0 = y, 1 = h, 2 = x and loop degree a;
the PBW order is lexicographic on that pair, so all y's come before all h's
before all x's.  With x's rightmost, the left ideal U . L(Cx) is spanned by the
monomials containing at least one x.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .scalar import ONE, ZERO, Scalar

Y, H, X = 0, 1, 2
_NAMES = {Y: "y", H: "h", X: "x"}


class TruncationError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Bounds:
    max_length: int = 8
    max_degree: int = 8

    def check(self, word):
        if len(word) > self.max_length:
            raise TruncationError(f"word length {len(word)} exceeds {self.max_length}")
        for _, a in word:
            if abs(a) > self.max_degree:
                raise TruncationError(f"loop degree {a} exceeds {self.max_degree}")


DEFAULT_BOUNDS = Bounds()


def letter_bracket(p, q) -> tuple:
    """[p, q] in L(sl_2) as ((coef, letter), ...)."""
    (u, a), (v, b) = p, q
    if u == v:
        return ()
    if u == X and v == Y:
        return ((1, (H, a + b)),)
    if u == Y and v == X:
        return ((-1, (H, a + b)),)
    if u == H:
        return ((2, (X, a + b)),) if v == X else ((-2, (Y, a + b)),)
    # v == H
    return ((-2, (X, a + b)),) if u == X else ((2, (Y, a + b)),)


@lru_cache(maxsize=200_000)
def _straighten(word: tuple) -> tuple:
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            break
    else:
        return ((word, 1),)
    out: dict = {}
    head, b, a, tail = word[:i], word[i], word[i + 1], word[i + 2:]
    for w, c in _straighten(head + (a, b) + tail):
        out[w] = out.get(w, 0) + c
    for c0, l in letter_bracket(b, a):
        for w, c in _straighten(head + (l,) + tail):
            out[w] = out.get(w, 0) + c0 * c
    return tuple((w, c) for w, c in out.items() if c)


class PbwElement:
    """Straightened element: dict word -> Scalar."""

    __slots__ = ("terms", "bounds")

    def __init__(self, terms=None, bounds: Bounds = DEFAULT_BOUNDS):
        self.terms = {w: c for w, c in (terms or {}).items() if not c.is_zero()}
        self.bounds = bounds

    @classmethod
    def word(cls, letters, coef=1, bounds: Bounds = DEFAULT_BOUNDS) -> "PbwElement":
        letters = tuple(letters)
        bounds.check(letters)
        out: dict = {}
        c0 = Scalar.of(coef)
        for w, c in _straighten(letters):
            out[w] = out.get(w, ZERO) + c0 * c
        return cls(out, bounds)

    @classmethod
    def one(cls, bounds: Bounds = DEFAULT_BOUNDS) -> "PbwElement":
        return cls({(): ONE}, bounds)

    @classmethod
    def letter(cls, kind: int, a: int, bounds: Bounds = DEFAULT_BOUNDS) -> "PbwElement":
        return cls.word(((kind, a),), 1, bounds)

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return PbwElement(out, self.bounds)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "PbwElement":
        c = Scalar.of(c)
        return PbwElement({w: c * v for w, v in self.terms.items()}, self.bounds)

    def __mul__(self, other):
        if not isinstance(other, PbwElement):
            return self.scale(other)
        return pbw_mul(self, other)

    __rmul__ = scale

    def __pow__(self, k: int):
        out = PbwElement.one(self.bounds)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, PbwElement) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            mono = "".join(f"{_NAMES[k]}{a}" if a >= 0 else f"{_NAMES[k]}({a})" for k, a in w) or "1"
            parts.append(f"({self.terms[w]})*{mono}")
        return " + ".join(parts)

    __repr__ = __str__


def pbw_mul(a: PbwElement, b: PbwElement) -> PbwElement:
    out: dict = {}
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            word = wa + wb
            a.bounds.check(word)
            c0 = ca * cb
            for w, c in _straighten(word):
                out[w] = out.get(w, ZERO) + c0 * c
    return PbwElement(out, a.bounds)


def in_left_ideal(a: PbwElement) -> bool:
    """Membership in U(L(sl_2)) L(Cx) for a straightened element."""
    return all(any(k == X for k, _ in w) for w in a.terms)


@dataclass
class GarlandSeries:
    coeffs: list = field(default_factory=list)

    def __getitem__(self, s: int) -> PbwElement:
        return self.coeffs[s]


def garland_coeffs(S: int, bounds: Bounds = DEFAULT_BOUNDS) -> GarlandSeries:
    """p^(s) from s p^(s) = -sum_{j=1}^s h_j p^(s-j)."""
    ps = [PbwElement.one(bounds)]
    for s in range(1, S + 1):
        acc = PbwElement({}, bounds)
        for j in range(1, s + 1):
            acc = acc + PbwElement.letter(H, j, bounds) * ps[s - j]
        ps.append(acc.scale(Scalar.of(-1) / s))
    return GarlandSeries(ps)


def garland_sides(j: int, bounds: Bounds = DEFAULT_BOUNDS, form: str = "divided") -> tuple:
    """The two differences that must lie in the left ideal.

    ``form="divided"``: (x_1)^(j) (y_0)^(j+1) - (-1)^j sum_m y_{j-m} p^(m) and
    (x_1)^(j+1) (y_0)^(j+1) - (-1)^(j+1) p^(j+1), with divided powers z^(k) = z^k / k!.
    ``form="printed"``: plain powers and no signs.
    """
    if form not in ("divided", "printed"):
        raise ValueError(f"unknown form {form!r}")
    p = garland_coeffs(j + 1, bounds)
    x1 = PbwElement.letter(X, 1, bounds)
    y0 = PbwElement.letter(Y, 0, bounds)
    ys = y0 ** (j + 1)
    tail = PbwElement({}, bounds)
    for m in range(j + 1):
        tail = tail + PbwElement.letter(Y, j - m, bounds) * p[m]
    first = x1 ** j * ys
    second = x1 ** (j + 1) * ys
    last = p[j + 1]
    if form == "divided":
        first = first.scale(Fraction(1, factorial(j) * factorial(j + 1)))
        second = second.scale(Fraction(1, factorial(j + 1) ** 2))
        tail = tail.scale((-1) ** j)
        last = last.scale((-1) ** (j + 1))
    return first - tail, second - last


def verify_garland(j: int, bounds: Bounds | None = None, form: str = "divided") -> dict:
    if j < 1:
        raise ValueError("j must be positive")
    bounds = bounds or Bounds(max(8, 2 * j + 2), max(8, j + 1))
    first, second = garland_sides(j, bounds, form)
    ok1, ok2 = in_left_ideal(first), in_left_ideal(second)
    return {"j": j, "form": form, "first": ok1, "second": ok2, "ok": ok1 and ok2}


# ---------------------------------------------------------------------------
# sym_Lambda


def _mono_one(k: int) -> tuple:
    return (0,) * k


def sym_lambda(counts, i: int, b) -> dict:
    """sym^i_Lambda(b) in M^{(x)P}: dict from P-tuples of exponent vectors to integer coefficients."""
    counts = tuple(counts)
    if not 0 <= i < len(counts):
        raise IndexError("node index out of range")
    if counts[i] < 1:
        raise ValueError("sym_lambda needs a_i >= 1")
    b = tuple(b)
    one = _mono_one(len(b))
    P = sum(counts)
    start = sum(counts[:i])
    out: dict = {}
    for k in range(counts[i]):
        slots = [one] * P
        slots[start + k] = b
        key = tuple(slots)
        out[key] = out.get(key, 0) + 1
    return out


def tensor_mul(u: dict, v: dict) -> dict:
    """Slotwise product in M^{(x)P} (monomials multiply by adding exponents)."""
    out: dict = {}
    for ku, cu in u.items():
        for kv, cv in v.items():
            key = tuple(tuple(x + y for x, y in zip(a, b)) for a, b in zip(ku, kv))
            out[key] = out.get(key, 0) + cu * cv
    return {k: c for k, c in out.items() if c}


def block_permutations(counts):
    """Generators of S_{a_0} x ... x S_{a_l} as slot permutations (adjacent transpositions)."""
    P = sum(counts)
    start = 0
    for a in counts:
        for k in range(start, start + a - 1):
            perm = list(range(P))
            perm[k], perm[k + 1] = perm[k + 1], perm[k]
            yield tuple(perm)
        start += a


def is_block_invariant(counts, elem: dict) -> bool:
    for perm in block_permutations(counts):
        moved = {tuple(key[p] for p in perm): c for key, c in elem.items()}
        if moved != elem:
            return False
    return True


# ---------------------------------------------------------------------------
# transport of loop-sl_2 identities into T(mu)


class Sl2Transport:
    """psi: x (x) z^k -> X (x) b^k, y (x) z^k -> Y (x) b^k, h (x) z^k -> [X, Y] (x) b^k,
    where X = x^(m)_alpha (x) t_1^m and Y = x^(r-m)_{-alpha} (x) t_1^{-m} in T(mu).

    Brackets of transported letters agree with the transported bracket up to
    K_i terms with i >= 2, which vanish on the modules considered.
    """

    def __init__(self, T, alpha: tuple, m: int, b: tuple):
        gp = T.gp
        self.T, self.m, self.b = T, m, tuple(b)
        x = self._root_vector(gp, alpha, m)
        y = self._root_vector(gp, tuple(-a for a in alpha), -m)
        if x is None or y is None:
            raise ValueError(f"{alpha}+{m}delta is not a real root of the twisted loop algebra")
        zero = (0,) * (T.n - 1)
        X = T.loop(x, (m,) + zero)
        Y = T.loop(y, (-m,) + zero)
        Hc = T.bracket(X, Y)
        # normalise so that [H, X] = 2X
        ratio = self._ratio(T.bracket(Hc, X), X)
        if ratio is None or ratio.is_zero():
            raise ValueError("root vectors do not span an sl_2")
        y = (Scalar.of(2) / ratio) * y
        self.x, self.y = x, y
        self.X = X
        self.Y = T.loop(y, (-m,) + zero)

    @staticmethod
    def _root_vector(gp, alpha, m):
        s = m % gp.r
        for v, w in zip(gp.pieces[s], gp.piece_weights[s]):
            if tuple(w) == tuple(alpha):
                return v
        return None

    @staticmethod
    def _ratio(u, v):
        for k, c in v.loop.items():
            if k in u.loop:
                return u.loop[k] / c
            return None
        return None

    def image(self, kind: int, k: int):
        T = self.T
        bk = tuple(k * e for e in self.b)
        if kind == X:
            return T.loop(self.x, (self.m,) + bk)
        if kind == Y:
            return T.loop(self.y, (-self.m,) + bk)
        X0 = T.loop(self.x, (self.m,) + bk)
        Y0 = T.loop(self.y, (-self.m,) + (0,) * len(bk))
        return T.bracket(X0, Y0)

    def drop_higher_central(self, z):
        central = {key: c for key, c in z.central.items() if key[0] == 1}
        return type(z)(z.amb, dict(z.loop), central, dict(z.deriv))

    def check_relations(self, degrees=range(-2, 3)) -> dict:
        T = self.T
        checked = 0
        bad = []
        for (p, a), (q, c) in itertools.product(itertools.product((Y, H, X), degrees), repeat=2):
            checked += 1
            lhs = T.bracket(self.image(p, a), self.image(q, c))
            rhs = T.zero()
            for coef, (kind, deg) in letter_bracket((p, a), (q, c)):
                rhs = rhs + self.image(kind, deg).scale(coef)
            if self.drop_higher_central(lhs - rhs) != T.zero():
                bad.append(((p, a), (q, c)))
        return {"checked": checked, "ok": not bad, "failures": bad[:3]}
