"""Generators-and-relations presentation of the twisted toroidal algebra.

Relation families are stored as data (``FAMILIES``): each entry names the
family, its guard, and builders for the left/right hand sides as formal
expressions in the generator symbols.  ``phi`` sends symbols into ``T(mu)`` and
``check_relation`` compares both sides there.

Family labels follow the printed order of the relation list:

====== ==========================================================
(i)     delta_r(s) + delta_k(s) = delta_{r+k}(s)
(ii)    delta_r(r) = 0
(iii)   delta_r(s) is central
(iv)    [d_1, delta] = 0, [d_j, delta_r(s)] = s_j delta_r(s)
(v)     [alpha_0(k), alpha_0(l)]
(vi)    [alpha_0(k), alpha_j(l)], j in I_0
(vii)   [alpha_i(k), alpha_j(l)], i <= j, excluding (l-1, l), (l, l)
(viii)  [alpha_{l-1}(k), alpha_l(l)]
(ix)    [alpha_l(k), alpha_l(l)]
(x)     [alpha_i(k), X(+-alpha_j, l)] = +-a_ij X(+-alpha_j, k+l)
(xi)    [X(+-alpha_i, k), X(+-alpha_i, l)] = 0
(xii)   [X(alpha_i, k), X(-alpha_j, l)]
(xiii)  Serre, a_ij = 0
(xiv)   Serre, a_ij = -1
(xv)    Serre, a_ij = -2
(xvi)   Serre, a_ij = -3
(xvii)  [d_1, alpha_i] = 0, [d_1, X(+-alpha_i, k)] = +-delta_{i0} X
(xviii) [d_j, alpha_i(k)] = k_j alpha_i(k), same for X
(xix)   [d_i, d_j] = 0
====== ==========================================================
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .liealg import GradedPieces, LieAlgebraError, grade
from .linalg import Echelon
from .scalar import ONE, Scalar
from .toroidal import LieElement, Toroidal, twisted_ambient

# ---------------------------------------------------------------------------
# generator symbols


@dataclass(frozen=True)
class DeltaCentral:
    r: tuple
    s: tuple

    def __str__(self):
        return f"δ_{list(self.r)}({list(self.s)})"


@dataclass(frozen=True)
class CartanGen:
    i: int
    k: tuple

    def __str__(self):
        return f"α{self.i}({list(self.k)})"


@dataclass(frozen=True)
class RootGen:
    sign: int
    i: int
    k: tuple

    def __str__(self):
        return f"X({'+' if self.sign > 0 else '-'}α{self.i},{list(self.k)})"


@dataclass(frozen=True)
class Derivation:
    j: int

    def __str__(self):
        return f"d{self.j}"


MryGenerator = DeltaCentral | CartanGen | RootGen | Derivation

# formal expressions: ("g", gen) | ("br", a, b) | ("lin", ((coef, expr), ...))
ZERO_EXPR = ("lin", ())


def G(gen):
    return ("g", gen)


def br(a, b):
    return ("br", a, b)


def lin(*terms):
    return ("lin", tuple((Scalar.of(c) if not isinstance(c, Scalar) else c, e) for c, e in terms))


def render_expr(e) -> str:
    tag = e[0]
    if tag == "g":
        return str(e[1])
    if tag == "br":
        return f"[{render_expr(e[1])}, {render_expr(e[2])}]"
    if not e[1]:
        return "0"
    return " + ".join(f"({c})·{render_expr(x)}" for c, x in e[1])


# ---------------------------------------------------------------------------
# table variants


@dataclass(frozen=True)
class TableVariant:
    """Which reading of the printed data to use.

    ``phi_reading``: ``"orbit-sum"`` applies the coefficient factors of the
    isomorphism to orbit sums sum_j mu^j(x) for every node (for the A_{2l}
    node l, to e'_l + e'_{l+1}); ``"literal"`` applies them to the g_0
    Chevalley generators as defined for fixed nodes.

    ``cartan``: ``"derived"`` computes the extended Cartan matrix from the
    affine Gram matrix; ``"printed"`` uses the printed case list.

    ``rank_two_fix``: for A_3 (l = 2) node 0 is short and adjacent to the long
    node l, so the alpha_0/alpha_l coefficient behaves like the (l-1, l) one
    (no factor r).
    """

    phi_reading: str = "orbit-sum"
    cartan: str = "derived"
    rank_two_fix: bool = True

    @property
    def name(self) -> str:
        return f"{self.phi_reading}/{self.cartan}/{'fix' if self.rank_two_fix else 'verbatim'}"


CORRECTED = TableVariant()
PRINTED = TableVariant("literal", "printed", False)


# ---------------------------------------------------------------------------
# configuration context


def printed_extended_cartan(gp: GradedPieces) -> tuple:
    fam, ell = gp.family, gp.ell
    A = gp.cartan0
    size = len(gp.I0) + 1
    M = [[0] * size for _ in range(size)]
    M[0][0] = 2
    for i in range(1, size):
        for j in range(1, size):
            M[i][j] = A[i - 1][j - 1]
    if fam == "A_even":
        M[0][1], M[1][0] = -1, -2
    elif fam == "A_odd":
        M[0][2] = M[2][0] = -1
    elif fam == "D":
        M[0][1], M[1][0] = -2, -1
    else:
        M[0][1] = M[1][0] = -1
    return tuple(tuple(r) for r in M)


def derived_extended_cartan(gp: GradedPieces) -> tuple:
    """a_ij = 2(alpha_i|alpha_j)/(alpha_i|alpha_i) with alpha_0 = delta - theta^0."""
    nI = len(gp.I0)
    th = gp.theta_upper

    def simple(i):
        return tuple(int(j == i - 1) for j in range(nI))

    def pair(i, j):
        if i == 0 and j == 0:
            return gp.pair0(th, th)
        if i == 0:
            return -gp.pair0(th, simple(j))
        if j == 0:
            return -gp.pair0(simple(i), th)
        return gp.pair0(simple(i), simple(j))

    out = []
    for i in range(nI + 1):
        row = []
        for j in range(nI + 1):
            v = Fraction(2) * pair(i, j) / pair(i, i)
            if v.denominator != 1:
                raise LieAlgebraError("non-integral Cartan entry")
            row.append(int(v))
        out.append(tuple(row))
    return tuple(out)


def extended_cartan(kind: str, rank: int, source: str = "derived") -> tuple:
    gp = grade(kind, rank)
    if source == "printed":
        return printed_extended_cartan(gp)
    return derived_extended_cartan(gp)


def exponent_box(n: int, radius: int = 1) -> tuple:
    return tuple(itertools.product(range(-radius, radius + 1), repeat=n - 1))


class Presentation:
    def __init__(self, kind: str, rank: int, n: int, variant: TableVariant = CORRECTED, r: int | None = None):
        if n < 2:
            raise ValueError("the presentation needs n >= 2")
        self.T: Toroidal = twisted_ambient(kind, rank, n, r)
        self.gp: GradedPieces = self.T.gp
        self.g = self.gp.g
        self.n = n
        self.r = self.gp.r
        self.ell = self.gp.ell
        self.family = self.gp.family
        self.variant = variant
        self.A = derived_extended_cartan(self.gp) if variant.cartan == "derived" else printed_extended_cartan(self.gp)
        self.nodes = (0,) + tuple(self.gp.I0)
        self._phi_cache: dict = {}
        self._build_images()

    @property
    def label(self) -> str:
        return f"{self.gp.cfg.label}^({self.r})"

    # phi ------------------------------------------------------------------
    def _build_images(self):
        gp, g, r = self.gp, self.g, self.r
        img_e, img_f, img_h = {}, {}, {}
        for i in gp.I0:
            fixed = gp.mu.node(i) == i
            # A_{2l} has no fixed nodes, so both readings agree there
            if self.variant.phi_reading == "orbit-sum" or not fixed:
                img_e[i], img_f[i], img_h[i] = gp.e0[i], gp.f0[i], gp.h0[i]
            else:
                c = Fraction(1, r)
                img_e[i], img_f[i], img_h[i] = c * gp.e0[i], c * gp.f0[i], c * gp.h0[i]
        if self.family == "A_even":
            th = gp.theta0
            img_h[0] = -1 * g.h(th)
            img_e[0] = -1 * g.f(th)
            img_f[0] = -1 * g.e(th)
            self.k1_coeff = 1
        else:
            img_h[0] = -1 * gp.h_theta_sum()
            img_e[0] = -1 * gp.theta_f(1)
            img_f[0] = -1 * gp.theta_e(r - 1)
            self.k1_coeff = r
        self.img_e, self.img_f, self.img_h = img_e, img_f, img_h

    def full(self, k: tuple, m1: int = 0) -> tuple:
        return (m1,) + tuple(k)

    def phi(self, gen) -> LieElement:
        hit = self._phi_cache.get(gen)
        if hit is not None:
            return hit
        T = self.T
        if isinstance(gen, DeltaCentral):
            out = T.zero()
            s = self.full(gen.s)
            for i in range(2, self.n + 1):
                if gen.r[i - 2]:
                    out = out + T.K(i, s).scale(gen.r[i - 2])
        elif isinstance(gen, CartanGen):
            out = T.loop(self.img_h[gen.i], self.full(gen.k))
            if gen.i == 0:
                out = out + T.K(1, self.full(gen.k)).scale(self.k1_coeff)
        elif isinstance(gen, RootGen):
            m1 = 0 if gen.i else gen.sign
            src = self.img_e if gen.sign > 0 else self.img_f
            out = T.loop(src[gen.i], self.full(gen.k, m1))
        elif isinstance(gen, Derivation):
            out = T.d(gen.j)
        else:
            raise TypeError(f"unknown generator {gen!r}")
        self._phi_cache[gen] = out
        return out

    def evaluate(self, expr, cache: dict | None = None) -> LieElement:
        if cache is None:
            cache = {}
        hit = cache.get(expr)
        if hit is not None:
            return hit
        tag = expr[0]
        if tag == "g":
            out = self.phi(expr[1])
        elif tag == "br":
            out = self.T.bracket(self.evaluate(expr[1], cache), self.evaluate(expr[2], cache))
        else:
            out = self.T.zero()
            for c, e in expr[1]:
                out = out + self.evaluate(e, cache).scale(c)
        cache[expr] = out
        return out

    # coefficient tables ----------------------------------------------------
    def a(self, i: int, j: int) -> int:
        return self.A[i][j]

    def coeff_a0a0(self) -> int:
        return 2 if self.family == "A_even" else 2 * self.r

    def coeff_a0aj(self, j: int) -> int:
        if self.family == "D":
            return self.a(0, j)
        if self.variant.rank_two_fix and self.family == "A_odd" and self.ell == 2 and j == self.ell:
            return self.a(0, j)
        return self.r * self.a(0, j)

    def coeff_aiaj(self, i: int, j: int) -> int:
        return self.a(i, j) if self.family == "D" else self.r * self.a(i, j)

    def coeff_prev_last(self) -> int:
        a = self.a(self.ell - 1, self.ell)
        return {"A_even": 4 * a, "A_odd": a, "D4": a, "D": 2 * a}[self.family]

    def coeff_last_last(self) -> int:
        return {"A_even": 8, "A_odd": 2, "D4": 2, "D": 4}[self.family]

    def coeff_x_opposite(self, i: int) -> int:
        r, ell = self.r, self.ell
        d0, dl = int(i == 0), int(i == ell)
        if self.family == "A_even":
            return r * (1 + dl * (r - 1)) - d0 * (r - 1)
        if self.family in ("A_odd", "D4"):
            return r - dl * (r - 1)
        return 1 + (d0 + dl) * (r - 1)

    def aiaj_pairs(self) -> list:
        ell = self.ell
        out = []
        for i in self.gp.I0:
            for j in self.gp.I0:
                if i <= j and (i, j) not in ((ell - 1, ell), (ell, ell)):
                    out.append((i, j))
        return out


# ---------------------------------------------------------------------------
# relation instances


@dataclass(frozen=True)
class RelationInstance:
    family: str
    name: str
    indices: tuple
    lhs: tuple
    rhs: tuple

    def describe(self) -> str:
        idx = ", ".join(f"{k}={v}" for k, v in self.indices)
        return f"({self.family}) {self.name} [{idx}]: {render_expr(self.lhs)} = {render_expr(self.rhs)}"


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _delta(r, s):
    return G(DeltaCentral(tuple(r), tuple(s)))


def _fam_i(P, box):
    for r, k, s in itertools.product(box, repeat=3):
        yield (("r", r), ("k", k), ("s", s)), lin((1, _delta(r, s)), (1, _delta(k, s))), _delta(_vadd(r, k), s)


def _fam_ii(P, box):
    for r in box:
        yield (("r", r),), _delta(r, r), ZERO_EXPR


def _fam_iii(P, box):
    for r, s, k, l in itertools.product(box, repeat=4):
        yield (("r", r), ("s", s), ("k", k), ("l", l), ("with", "delta")), br(_delta(r, s), _delta(k, l)), ZERO_EXPR
    for r, s, k in itertools.product(box, repeat=3):
        for i in P.nodes:
            yield (("r", r), ("s", s), ("k", k), ("i", i), ("with", "alpha")), br(_delta(r, s), G(CartanGen(i, k))), ZERO_EXPR
            for sign in (1, -1):
                yield (
                    (("r", r), ("s", s), ("k", k), ("i", i), ("sign", sign)),
                    br(_delta(r, s), G(RootGen(sign, i, k))),
                    ZERO_EXPR,
                )


def _fam_iv(P, box):
    for r, s in itertools.product(box, repeat=2):
        yield (("r", r), ("s", s), ("j", 1)), br(G(Derivation(1)), _delta(r, s)), ZERO_EXPR
        for j in range(2, P.n + 1):
            yield (("r", r), ("s", s), ("j", j)), br(G(Derivation(j)), _delta(r, s)), lin((s[j - 2], _delta(r, s)))


def _pairs_kl(box):
    return itertools.product(box, repeat=2)


def _fam_v(P, box):
    c = P.coeff_a0a0()
    for k, l in _pairs_kl(box):
        yield (("k", k), ("l", l)), br(G(CartanGen(0, k)), G(CartanGen(0, l))), lin((c, _delta(k, _vadd(k, l))))


def _fam_vi(P, box):
    for j in P.gp.I0:
        c = P.coeff_a0aj(j)
        for k, l in _pairs_kl(box):
            yield (("j", j), ("k", k), ("l", l)), br(G(CartanGen(0, k)), G(CartanGen(j, l))), lin(
                (c, _delta(k, _vadd(k, l)))
            )


def _fam_vii(P, box):
    for i, j in P.aiaj_pairs():
        c = P.coeff_aiaj(i, j)
        for k, l in _pairs_kl(box):
            yield (("i", i), ("j", j), ("k", k), ("l", l)), br(G(CartanGen(i, k)), G(CartanGen(j, l))), lin(
                (c, _delta(k, _vadd(k, l)))
            )


def _fam_viii(P, box):
    if P.ell < 2:
        return
    c = P.coeff_prev_last()
    for k, l in _pairs_kl(box):
        yield (("k", k), ("l", l)), br(G(CartanGen(P.ell - 1, k)), G(CartanGen(P.ell, l))), lin(
            (c, _delta(k, _vadd(k, l)))
        )


def _fam_ix(P, box):
    c = P.coeff_last_last()
    for k, l in _pairs_kl(box):
        yield (("k", k), ("l", l)), br(G(CartanGen(P.ell, k)), G(CartanGen(P.ell, l))), lin(
            (c, _delta(k, _vadd(k, l)))
        )


def _fam_x(P, box):
    for i in P.nodes:
        for j in P.nodes:
            for sign in (1, -1):
                c = sign * P.a(i, j)
                for k, l in _pairs_kl(box):
                    yield (("i", i), ("j", j), ("sign", sign), ("k", k), ("l", l)), br(
                        G(CartanGen(i, k)), G(RootGen(sign, j, l))
                    ), lin((c, G(RootGen(sign, j, _vadd(k, l)))))


def _fam_xi(P, box):
    for i in P.nodes:
        for sign in (1, -1):
            for k, l in _pairs_kl(box):
                yield (("i", i), ("sign", sign), ("k", k), ("l", l)), br(
                    G(RootGen(sign, i, k)), G(RootGen(sign, i, l))
                ), ZERO_EXPR


def _fam_xii(P, box):
    for i in P.nodes:
        for j in P.nodes:
            for k, l in _pairs_kl(box):
                lhs = br(G(RootGen(1, i, k)), G(RootGen(-1, j, l)))
                if i == j:
                    rhs = lin((1, G(CartanGen(i, _vadd(k, l)))), (P.coeff_x_opposite(i), _delta(k, _vadd(k, l))))
                else:
                    rhs = ZERO_EXPR
                yield (("i", i), ("j", j), ("k", k), ("l", l)), lhs, rhs


def _serre(a_value):
    def fam(P, box):
        nad = 1 - a_value
        for i in P.nodes:
            for j in P.nodes:
                if i == j or P.a(i, j) != a_value:
                    continue
                for sign in (1, -1):
                    for exps in itertools.product(box, repeat=nad + 1):
                        expr = G(RootGen(sign, j, exps[-1]))
                        for kk in reversed(exps[:-1]):
                            expr = br(G(RootGen(sign, i, kk)), expr)
                        yield (("i", i), ("j", j), ("sign", sign), ("exps", exps)), expr, ZERO_EXPR

    return fam


def _fam_xvii(P, box):
    d1 = G(Derivation(1))
    for i in P.nodes:
        for k in box:
            yield (("i", i), ("k", k), ("gen", "alpha")), br(d1, G(CartanGen(i, k))), ZERO_EXPR
            for sign in (1, -1):
                rhs = lin((sign, G(RootGen(sign, i, k)))) if i == 0 else ZERO_EXPR
                yield (("i", i), ("k", k), ("sign", sign)), br(d1, G(RootGen(sign, i, k))), rhs


def _fam_xviii(P, box):
    for j in range(2, P.n + 1):
        dj = G(Derivation(j))
        for i in P.nodes:
            for k in box:
                kj = k[j - 2]
                yield (("j", j), ("i", i), ("k", k), ("gen", "alpha")), br(dj, G(CartanGen(i, k))), lin(
                    (kj, G(CartanGen(i, k)))
                )
                for sign in (1, -1):
                    yield (("j", j), ("i", i), ("k", k), ("sign", sign)), br(dj, G(RootGen(sign, i, k))), lin(
                        (kj, G(RootGen(sign, i, k)))
                    )


def _fam_xix(P, box):
    for i in range(1, P.n + 1):
        for j in range(1, P.n + 1):
            yield (("i", i), ("j", j)), br(G(Derivation(i)), G(Derivation(j))), ZERO_EXPR


@dataclass(frozen=True)
class Family:
    label: str
    name: str
    guard: str
    builder: object


FAMILIES = (
    Family("i", "delta additivity", "all r, k, s", _fam_i),
    Family("ii", "delta diagonal vanishes", "all r", _fam_ii),
    Family("iii", "delta central", "all indices", _fam_iii),
    Family("iv", "derivations on delta", "j = 1..n", _fam_iv),
    Family("v", "[alpha_0, alpha_0]", "-", _fam_v),
    Family("vi", "[alpha_0, alpha_j]", "j in I_0", _fam_vi),
    Family("vii", "[alpha_i, alpha_j]", "i <= j, not (l-1,l), (l,l)", _fam_vii),
    Family("viii", "[alpha_{l-1}, alpha_l]", "l >= 2", _fam_viii),
    Family("ix", "[alpha_l, alpha_l]", "-", _fam_ix),
    Family("x", "[alpha_i, X(+-alpha_j)]", "i, j in extended I_0", _fam_x),
    Family("xi", "[X(+-alpha_i), X(+-alpha_i)] = 0", "i in extended I_0", _fam_xi),
    Family("xii", "[X(alpha_i), X(-alpha_j)]", "i, j in extended I_0", _fam_xii),
    Family("xiii", "Serre a_ij = 0", "i != j, a_ij = 0", _serre(0)),
    Family("xiv", "Serre a_ij = -1", "i != j, a_ij = -1", _serre(-1)),
    Family("xv", "Serre a_ij = -2", "i != j, a_ij = -2", _serre(-2)),
    Family("xvi", "Serre a_ij = -3", "i != j, a_ij = -3", _serre(-3)),
    Family("xvii", "[d_1, .]", "i in extended I_0", _fam_xvii),
    Family("xviii", "[d_j, .], j >= 2", "i in extended I_0", _fam_xviii),
    Family("xix", "[d_i, d_j] = 0", "-", _fam_xix),
)
FAMILY_BY_LABEL = {f.label: f for f in FAMILIES}


def enumerate_relations(P: Presentation, box, families=None):
    """All relation instances over the exponent box (a sequence of (n-1)-tuples)."""
    chosen = FAMILIES if families is None else [FAMILY_BY_LABEL[f] for f in families]
    for fam in chosen:
        for indices, lhs, rhs in fam.builder(P, box):
            yield RelationInstance(fam.label, fam.name, indices, lhs, rhs)


@dataclass
class CheckResult:
    ok: bool
    difference: LieElement | None = None


def check_relation(P: Presentation, rel: RelationInstance, cache: dict | None = None) -> CheckResult:
    if cache is None:
        cache = {}
    diff = P.evaluate(rel.lhs, cache) - P.evaluate(rel.rhs, cache)
    return CheckResult(diff.is_zero(), None if diff.is_zero() else diff)


@dataclass
class FamilyReport:
    label: str
    name: str
    checked: int = 0
    passed: int = 0
    first_failure: dict | None = None

    def as_dict(self) -> dict:
        return {
            "family": self.label,
            "name": self.name,
            "checked": self.checked,
            "passed": self.passed,
            "first_failure": self.first_failure,
        }


def check_family(P: Presentation, label: str, box) -> FamilyReport:
    fam = FAMILY_BY_LABEL[label]
    rep = FamilyReport(fam.label, fam.name)
    cache: dict = {}
    for rel in enumerate_relations(P, box, [label]):
        res = check_relation(P, rel, cache)
        rep.checked += 1
        if res.ok:
            rep.passed += 1
        elif rep.first_failure is None:
            rep.first_failure = {"relation": rel.describe(), "difference": str(res.difference)}
    return rep


def _worker(args):
    kind, rank, n, radius, label, variant = args
    P = _presentation(kind, rank, n, variant)
    return check_family(P, label, exponent_box(n, radius)).as_dict()


@lru_cache(maxsize=None)
def _presentation(kind, rank, n, variant):
    return Presentation(kind, rank, n, variant)


def verify_presentation(kind: str, rank: int, n: int, radius: int = 1, variant: TableVariant = CORRECTED, jobs: int = 1) -> dict:
    """Check every family over {-radius..radius}^{n-1}; returns a JSON-ready report."""
    P = _presentation(kind, rank, n, variant)
    labels = [f.label for f in FAMILIES]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            fams = list(ex.map(_worker, [(kind, rank, n, radius, lab, variant) for lab in labels]))
    else:
        box = exponent_box(n, radius)
        fams = [check_family(P, lab, box).as_dict() for lab in labels]
    total = sum(f["checked"] for f in fams)
    passed = sum(f["passed"] for f in fams)
    return {
        "algebra": P.label,
        "n": n,
        "box_radius": radius,
        "table": variant.name,
        "extended_cartan": [list(r) for r in P.A],
        "families": fams,
        "checked": total,
        "passed": passed,
        "ok": total == passed,
    }


def table_findings(kind: str, rank: int, n: int = 2, radius: int = 1) -> list:
    """Failures of the verbatim printed readings, one entry per (variant, family)."""
    out = []
    variants = (
        TableVariant("literal", "derived", True),
        TableVariant("orbit-sum", "printed", True),
        TableVariant("orbit-sum", "derived", False),
    )
    gp = grade(kind, rank)
    if printed_extended_cartan(gp) != derived_extended_cartan(gp):
        out.append(
            {
                "variant": "extended Cartan matrix",
                "printed": [list(r) for r in printed_extended_cartan(gp)],
                "derived": [list(r) for r in derived_extended_cartan(gp)],
            }
        )
    for v in variants:
        rep = verify_presentation(kind, rank, n, radius, v)
        for f in rep["families"]:
            if f["passed"] != f["checked"]:
                out.append(
                    {
                        "variant": v.name,
                        "family": f["family"],
                        "failed": f["checked"] - f["passed"],
                        "checked": f["checked"],
                        "example": f["first_failure"],
                    }
                )
    return out


def spanning_check(P: Presentation, depth: int = 4) -> dict:
    """Iterated brackets of phi X(+-alpha_i, 0) up to the given depth against the
    loop basis of T(mu) in t_1-degrees -1, 0, 1 whose affine height is <= depth."""
    T, gp = P.T, P.gp
    gens = [P.phi(RootGen(s, i, (0,) * (P.n - 1))) for i in P.nodes for s in (1, -1)]
    ech = Echelon()
    layer = []
    for x in gens:
        if ech.add(dict(x.loop)):
            layer.append(x)
    for _ in range(depth - 1):
        nxt = []
        for z in gens:
            for x in layer:
                y = T.bracket(z, x)
                if y.loop and ech.add(dict(y.loop)):
                    nxt.append(y)
        layer = nxt
    missing = 0
    checked = 0
    th = gp.theta_upper
    for m1 in (-1, 0, 1):
        s = m1 % P.r
        for v, w in zip(gp.pieces[s], gp.piece_weights[s]):
            if not any(w) and m1 == 0:
                continue
            coeffs = [c + m1 * t for c, t in zip(w, th)]
            height = abs(m1) + abs(sum(coeffs))
            if height > depth or height == 0:
                continue
            checked += 1
            target = {(a, (m1,) + (0,) * (P.n - 1)): c for a, c in v.items()}
            if not ech.contains(target):
                missing += 1
    return {"depth": depth, "targets": checked, "missing": missing, "ok": missing == 0}
