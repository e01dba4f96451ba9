"""Multiloop algebras with their universal central extension and derivations.

An element of ``T = L_n(g) + Z + D`` is stored as three sparse maps:

* ``loop``: ``(basis index of g, exponent tuple) -> Scalar``
* ``central``: ``(i, exponent tuple) -> Scalar`` for ``t^s K_i`` (1-based ``i``),
  always reduced modulo ``sum_i s_i t^s K_i = 0`` by eliminating ``K_j`` at the
  largest ``j`` with ``s_j != 0``
* ``deriv``: ``j -> Scalar`` for ``d_j``
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .liealg import GradedPieces, SimpleLie, Vec, add_into
from .scalar import ONE, ZERO, Scalar, parse

Mono = tuple


class AmbientMismatch(ValueError):
    pass


def _acc(d: dict, key, val: Scalar):
    cur = d.get(key)
    if cur is None:
        if not val.is_zero():
            d[key] = val
    else:
        s = cur + val
        if s.is_zero():
            del d[key]
        else:
            d[key] = s


def canonical_central(raw: dict, n: int) -> dict:
    """Reduce a map (i, s) -> c modulo the relations sum_i s_i t^s K_i = 0."""
    by_mono: dict = {}
    for (i, s), c in raw.items():
        if c.is_zero():
            continue
        by_mono.setdefault(s, {})
        _acc(by_mono[s], i, c)
    out = {}
    for s, vec in by_mono.items():
        p = max((j for j in range(n) if s[j]), default=None)
        if p is not None and (p + 1) in vec:
            lam = vec[p + 1] / s[p]
            for j in range(n):
                if s[j]:
                    _acc(vec, j + 1, -(lam * s[j]))
            vec.pop(p + 1, None)
        for i, c in vec.items():
            out[(i, s)] = c
    return out


class LieElement:
    __slots__ = ("amb", "loop", "central", "deriv")

    def __init__(self, amb: "Toroidal", loop=None, central=None, deriv=None, *, canonical=False):
        self.amb = amb
        self.loop = loop or {}
        c = central or {}
        self.central = c if canonical else canonical_central(c, amb.n)
        self.deriv = deriv or {}

    # linear structure ------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, LieElement):
            raise TypeError("expected LieElement")
        if other.amb is not self.amb:
            raise AmbientMismatch("elements live in different algebras")

    def __add__(self, other):
        self._check(other)
        loop = dict(self.loop)
        for k, v in other.loop.items():
            _acc(loop, k, v)
        central = dict(self.central)
        for k, v in other.central.items():
            _acc(central, k, v)
        deriv = dict(self.deriv)
        for k, v in other.deriv.items():
            _acc(deriv, k, v)
        # sums of canonical central parts are canonical (same pivot per monomial)
        return LieElement(self.amb, loop, central, deriv, canonical=True)

    def __neg__(self):
        return self.scale(Scalar.of(-1))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "LieElement":
        c = Scalar.of(c)
        if c.is_zero():
            return self.amb.zero()
        return LieElement(
            self.amb,
            {k: c * v for k, v in self.loop.items()},
            {k: c * v for k, v in self.central.items()},
            {k: c * v for k, v in self.deriv.items()},
            canonical=True,
        )

    __rmul__ = scale

    def __mul__(self, c):
        return self.scale(c)

    def is_zero(self) -> bool:
        return not (self.loop or self.central or self.deriv)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return (
            self.amb is other.amb
            and self.loop == other.loop
            and self.central == other.central
            and self.deriv == other.deriv
        )

    __hash__ = None

    def monomials(self) -> set:
        return {m for (_, m) in self.loop} | {m for (_, m) in self.central}

    def __str__(self):
        return self.amb.render(self)

    def __repr__(self):
        return f"LieElement({self.amb.render(self)})"


class Toroidal:
    """The toroidal algebra T over g in n variables; with graded pieces it also
    knows the twisted subalgebra T(mu)."""

    def __init__(self, g: SimpleLie, n: int, gp: GradedPieces | None = None):
        if n < 1:
            raise ValueError("need at least one variable")
        self.g = g
        self.n = n
        self.gp = gp
        self.r = gp.r if gp is not None else 1

    # constructors ----------------------------------------------------------
    def zero(self) -> LieElement:
        return LieElement(self, canonical=True)

    def mono(self, *exps) -> Mono:
        if len(exps) == 1 and isinstance(exps[0], (tuple, list)):
            exps = tuple(exps[0])
        if len(exps) > self.n:
            raise ValueError("too many exponents")
        return tuple(exps) + (0,) * (self.n - len(exps))

    def loop(self, x: dict, m=()) -> LieElement:
        m = self.mono(m)
        return LieElement(self, {(k, m): v for k, v in x.items() if not v.is_zero()}, canonical=True)

    def K(self, i: int, m=()) -> LieElement:
        if not 1 <= i <= self.n:
            raise ValueError("K index out of range")
        return LieElement(self, central={(i, self.mono(m)): ONE})

    def d(self, j: int) -> LieElement:
        if not 1 <= j <= self.n:
            raise ValueError("derivation index out of range")
        return LieElement(self, deriv={j: ONE}, canonical=True)

    # bracket ---------------------------------------------------------------
    def bracket(self, x: LieElement, y: LieElement) -> LieElement:
        if x.amb is not self or y.amb is not self:
            raise AmbientMismatch("bracket of elements from different algebras")
        n = self.n
        table = self.g._table
        form = self.g._form
        loop: dict = {}
        central: dict = {}
        xl, yl = x.loop, y.loop
        for (a, m), ca in xl.items():
            row = table[a]
            for (b, m2), cb in yl.items():
                terms = row.get(b)
                fv = form.get((a, b))
                if not terms and not fv:
                    continue
                mm = tuple(p + q for p, q in zip(m, m2))
                cab = ca * cb
                if terms:
                    for c, v in terms:
                        _acc(loop, (c, mm), cab * v)
                if fv:
                    w = cab * fv
                    for i in range(n):
                        if m[i]:
                            _acc(central, (i + 1, mm), w * m[i])
        # derivations
        for sgn, dx, other in ((1, x.deriv, y), (-1, y.deriv, x)):
            for j, cd in dx.items():
                c = cd if sgn == 1 else -cd
                for (a, m), v in other.loop.items():
                    if m[j - 1]:
                        _acc(loop, (a, m), c * v * m[j - 1])
                for (i, m), v in other.central.items():
                    if m[j - 1]:
                        _acc(central, (i, m), c * v * m[j - 1])
        return LieElement(self, loop, central)

    def ad_power(self, z: LieElement, x: LieElement, k: int) -> LieElement:
        for _ in range(k):
            x = self.bracket(z, x)
        return x

    # twisted structure -------------------------------------------------------
    def _need_gp(self):
        if self.gp is None:
            raise ValueError("operation requires a diagram automorphism")

    def mu_tilde(self, x: LieElement, power: int = 1) -> LieElement:
        """x (x) t^s -> xi^{-s_1} mu(x) (x) t^s; t^s K_i -> xi^{-s_1} t^s K_i."""
        self._need_gp()
        gp = self.gp
        out = x
        for _ in range(power % self.r):
            loop: dict = {}
            for (a, m), v in out.loop.items():
                w = v * gp.xi ** (-m[0])
                b = gp.mu.target[a]
                _acc(loop, (b, m), w if gp.mu.sign[a] == 1 else -w)
            central = {k: v * gp.xi ** (-k[1][0]) for k, v in out.central.items()}
            out = LieElement(self, loop, central, dict(out.deriv), canonical=True)
        return out

    def project_twisted(self, x: LieElement) -> LieElement:
        """Average over the cyclic group generated by mu-tilde."""
        self._need_gp()
        acc = self.zero()
        for k in range(self.r):
            acc = acc + self.mu_tilde(x, k)
        return acc.scale(Fraction(1, self.r))

    def loop_groups(self, x: LieElement) -> dict:
        groups: dict = {}
        for (a, m), v in x.loop.items():
            groups.setdefault(m, {})[a] = v
        return groups

    def in_twisted(self, x: LieElement) -> bool:
        self._need_gp()
        gp = self.gp
        for m, vec in self.loop_groups(x).items():
            if gp.degree_of(vec) != m[0] % self.r:
                return False
        return all(m[0] % self.r == 0 for (_, m) in x.central)

    def in_plus(self, x: LieElement) -> bool:
        """Membership in the subalgebra generated by e_{i,k}, f_{i,k}, d_1 with k >= 0."""
        if not self.in_twisted(x):
            return False
        if any(j != 1 for j in x.deriv):
            return False
        if any(any(e < 0 for e in m[1:]) for (_, m) in x.loop):
            return False
        for (i, s) in x.central:
            if any(e < 0 for e in s[1:]):
                return False
            if i != 1 and s[i - 1] < 1:
                return False
        return True

    def in_bar(self, x: LieElement) -> bool:
        return self.in_twisted(x) and all(j == 1 for j in x.deriv)

    def in_affine(self, x: LieElement) -> bool:
        if not self.in_twisted(x):
            return False
        if any(j != 1 for j in x.deriv):
            return False
        if any(any(m[1:]) for (_, m) in x.loop):
            return False
        return all(i == 1 and not any(s) for (i, s) in x.central)

    def triangular_part(self, x: LieElement) -> tuple:
        """(minus, zero, plus) components of an element of T(mu)."""
        self._need_gp()
        if not self.in_twisted(x):
            raise ValueError("element is not in the twisted algebra")
        g = self.g
        parts = {"-": ({}, {}, {}), "0": ({}, {}, {}), "+": ({}, {}, {})}
        for (a, m), v in x.loop.items():
            if m[0] > 0:
                key = "+"
            elif m[0] < 0:
                key = "-"
            else:
                key = {"e": "+", "h": "0", "f": "-"}[g.kind_of(a)]
            parts[key][0][(a, m)] = v
        for (i, s), v in x.central.items():
            key = "+" if s[0] > 0 else "-" if s[0] < 0 else "0"
            parts[key][1][(i, s)] = v
        for j, v in x.deriv.items():
            parts["0"][2][j] = v
        return tuple(LieElement(self, *parts[k], canonical=True) for k in ("-", "0", "+"))

    # weights ---------------------------------------------------------------
    def weight_of(self, x: LieElement) -> "WeightFunctional | None":
        """Weight for the Cartan subalgebra h_0 + sum C K_i + sum C d_i, or None."""
        self._need_gp()
        if x.is_zero():
            raise ValueError("zero element has no weight")
        gp = self.gp
        if x.deriv:
            return None
        monos = x.monomials()
        if len(monos) != 1:
            return None
        (m,) = monos
        if x.central:
            if x.loop:
                return None
            return WeightFunctional.make(gp, (0,) * len(gp.I0), m, (0,) * self.n)
        vec = {a: v for (a, _), v in x.loop.items()}
        evals = []
        for i in gp.I0:
            br = self.g.bracket(gp.h0[i], vec)
            k = next(iter(vec))
            lam = br.get(k, ZERO) / vec[k]
            if br != {a: lam * v for a, v in vec.items() if not (lam * v).is_zero()}:
                return None
            evals.append(lam.to_fraction())
        # convert lambda(alpha_j^vee) values to alpha coordinates
        A = gp.cartan0
        nI = len(gp.I0)
        coords = _solve_rational([[Fraction(A[j][i]) for i in range(nI)] for j in range(nI)], evals)
        return WeightFunctional.make(gp, tuple(coords), m, (0,) * self.n)

    # rendering -------------------------------------------------------------
    def render(self, x: LieElement) -> str:
        if x.is_zero():
            return "0"
        parts = []
        for (a, m) in sorted(x.loop, key=lambda k: (k[1], k[0])):
            parts.append(f"({x.loop[(a, m)]}) · {self.g.basis_name(a)}⊗t^{list(m)}")
        for (i, m) in sorted(x.central, key=lambda k: (k[1], k[0])):
            parts.append(f"({x.central[(i, m)]}) · t^{list(m)}K{i}")
        for j in sorted(x.deriv):
            parts.append(f"({x.deriv[j]}) · d{j}")
        return " ⊕ ".join(parts)

    def to_json(self, x: LieElement) -> dict:
        return {
            "loop": [[a, list(m), str(x.loop[(a, m)])] for (a, m) in sorted(x.loop, key=lambda k: (k[1], k[0]))],
            "central": [[i, list(m), str(x.central[(i, m)])] for (i, m) in sorted(x.central, key=lambda k: (k[1], k[0]))],
            "deriv": [[j, str(x.deriv[j])] for j in sorted(x.deriv)],
        }

    def from_json(self, data: dict) -> LieElement:
        loop = {(a, tuple(m)): parse(c) for a, m, c in data["loop"]}
        central = {(i, tuple(m)): parse(c) for i, m, c in data["central"]}
        deriv = {j: parse(c) for j, c in data["deriv"]}
        return LieElement(self, loop, central, deriv)

    def dumps(self, x: LieElement) -> str:
        return json.dumps(self.to_json(x), sort_keys=True)


def _solve_rational(A, b):
    n = len(b)
    M = [list(A[i]) + [Fraction(b[i])] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [v / p for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * c for a, c in zip(M[r], M[col])]
    return [M[i][n] for i in range(n)]


# ---------------------------------------------------------------------------
# weight functionals and roots


@dataclass(frozen=True)
class WeightFunctional:
    """Coordinates over alpha_i (i in I_0), delta_j and gamma_j (1 <= j <= n)."""

    alpha: tuple
    delta: tuple
    gamma: tuple
    gram: tuple  # form on the alpha_i

    @classmethod
    def make(cls, gp: GradedPieces, alpha, delta, gamma) -> "WeightFunctional":
        return cls(tuple(Fraction(a) for a in alpha), tuple(delta), tuple(gamma), gp.gram0)

    def __add__(self, other):
        return WeightFunctional(
            tuple(a + b for a, b in zip(self.alpha, other.alpha)),
            tuple(a + b for a, b in zip(self.delta, other.delta)),
            tuple(a + b for a, b in zip(self.gamma, other.gamma)),
            self.gram,
        )

    def __neg__(self):
        return WeightFunctional(
            tuple(-a for a in self.alpha), tuple(-a for a in self.delta), tuple(-a for a in self.gamma), self.gram
        )

    def is_zero(self) -> bool:
        return not (any(self.alpha) or any(self.delta) or any(self.gamma))

    def form(self, other) -> Fraction:
        """<.|.> with <delta_i|gamma_j> = delta_ij and delta, gamma isotropic."""
        G = self.gram
        n = len(self.alpha)
        val = sum(self.alpha[i] * G[i][j] * other.alpha[j] for i in range(n) for j in range(n))
        val += sum(Fraction(a) * b for a, b in zip(self.delta, other.gamma))
        val += sum(Fraction(a) * b for a, b in zip(self.gamma, other.delta))
        return Fraction(val)

    # pairing with the Cartan subalgebra: alpha on h_0, delta_i(d_j) = gamma_i(K_j) = delta_ij
    def on_d(self, j: int):
        return self.delta[j - 1]

    def on_K(self, j: int):
        return self.gamma[j - 1]


def finite_roots(gp: GradedPieces) -> tuple:
    """(all roots, positive roots, short roots) of g_0 as I_0-coordinate tuples."""
    roots = {w for w in gp.piece_weights[0] if any(w)}
    pos = {w for w in roots if all(c >= 0 for c in w)}
    norms = {w: gp.pair0(w, w) for w in roots}
    lo = min(norms.values())
    hi = max(norms.values())
    short = {w for w in roots if norms[w] == lo} if lo != hi else set(roots)
    return frozenset(roots), frozenset(pos), frozenset(short)


def root_membership(lam: WeightFunctional, gp: GradedPieces) -> str:
    """Classify lam as 'positive', 'negative', 'null-family' or 'not-a-root'."""
    if any(lam.gamma) or any(c.denominator != 1 for c in lam.alpha):
        return "not-a-root"
    alpha = tuple(int(c) for c in lam.alpha)
    m = lam.delta
    r = gp.r
    R0, R0p, R0s = finite_roots(gp)

    def positive(alpha, m) -> bool:
        m1 = m[0]
        if not any(alpha):
            return m1 > 0
        if gp.family == "A_even":
            if alpha in R0 and (m1 > 0 or (m1 == 0 and alpha in R0p)):
                return True
            half = tuple(c // r for c in alpha) if all(c % r == 0 for c in alpha) else None
            return half is not None and half in R0s and m1 > 0 and m1 % r != 0
        if m1 == 0:
            return alpha in R0p
        if m1 > 0 and m1 % r == 0:
            return alpha in R0
        return m1 > 0 and alpha in R0s

    if positive(alpha, m):
        return "positive"
    neg_alpha = tuple(-c for c in alpha)
    if positive(neg_alpha, tuple(-c for c in m)):
        return "negative"
    if not any(alpha) and m[0] == 0 and any(m):
        return "null-family"
    return "not-a-root"


@lru_cache(maxsize=None)
def twisted_ambient(kind: str, rank: int, n: int, r: int | None = None) -> Toroidal:
    from .liealg import grade

    gp = grade(kind, rank, r)
    return Toroidal(gp.g, n, gp)
