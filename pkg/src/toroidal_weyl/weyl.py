"""Weyl-module relation schemas, the highest-weight algebras as descriptions,
and the level-one character targets."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import characters as ch
from .presentation import CartanGen, Presentation, RootGen, extended_cartan
from .scalar import Scalar


def _kernel_vector(rows) -> tuple:
    """Primitive integer vector v, first entry positive, with rows . v = 0 (kernel must be a line)."""
    M = [[Fraction(x) for x in row] for row in rows]
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        M[r] = [x / M[r][c] for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                M[i] = [a - M[i][c] * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    if len(free) != 1:
        raise ValueError("expected a one-dimensional kernel")
    v = [Fraction(0)] * ncols
    v[free[0]] = Fraction(1)
    for row, c in zip(M, pivots):
        v[c] = -row[free[0]]
    den = math.lcm(*(x.denominator for x in v))
    w = [int(x * den) for x in v]
    g = math.gcd(*w)
    w = [x // g for x in w]
    return tuple(-x for x in w) if w[0] < 0 else tuple(w)


def marks(kind: str, rank: int) -> tuple:
    """(a_0..a_l): delta = sum a_i alpha_i."""
    return _kernel_vector(extended_cartan(kind, rank))


def comarks(kind: str, rank: int) -> tuple:
    """(a_0^vee..a_l^vee): K = sum a_i^vee alpha_i^vee."""
    A = extended_cartan(kind, rank)
    return _kernel_vector([list(col) for col in zip(*A)])


@dataclass(frozen=True)
class HighestWeight:
    coeffs: tuple  # a_0..a_l over Lambda_0..Lambda_l
    shift: int = 0  # coefficient of delta_1

    def __post_init__(self):
        if any(a < 0 for a in self.coeffs):
            raise ValueError("dominant integral weights have nonnegative coefficients")

    @classmethod
    def basic(cls, ell: int) -> "HighestWeight":
        return cls((1,) + (0,) * ell)

    def level(self, kind: str, rank: int) -> int:
        return sum(a * c for a, c in zip(self.coeffs, comarks(kind, rank)))

    @property
    def is_basic(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    @property
    def P(self) -> int:
        return sum(self.coeffs)

    def __str__(self):
        parts = [f"{a}Λ{i}" for i, a in enumerate(self.coeffs) if a]
        if self.shift:
            parts.append(f"{self.shift}δ1")
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class SchemaRelation:
    """``operator`` applied to the generator gives ``value`` times the generator,
    for every index in the stated ranges."""

    operator: str
    nodes: str
    exponents: str
    value: str

    def render(self, gen: str) -> str:
        return f"{self.operator}.{gen} = {self.value} for {self.nodes}, {self.exponents}"


@dataclass
class WeylPresentation:
    weight: HighestWeight
    n: int
    plus: bool = False
    relations: list = field(default_factory=list)

    @property
    def generator(self) -> str:
        return "v_Λ^+" if self.plus else "v_Λ"


def weyl_presentation(kind: str, rank: int, n: int, weight: HighestWeight, plus: bool = False) -> WeylPresentation:
    """Defining relations of the global Weyl module (``plus`` for the T^+(mu) version,
    whose generator is v_Λ^+)."""
    ell = len(weight.coeffs) - 1
    zrange = "m in Z_{>=0}^{n-1}" if plus else "m in Z^{n-1}"
    rels = [
        SchemaRelation("e_{i,m}", "i in 0..l", zrange, "0"),
        SchemaRelation("h", "h in T_aff(mu)^0", "-", "Λ(h)"),
    ]
    for i in range(1, ell + 1):
        rels.append(SchemaRelation(f"f_{i}^{weight.coeffs[i] + 1}", f"i = {i}", "-", "0"))
    rels.append(SchemaRelation(f"f_0^{weight.coeffs[0] + 1}", "i = 0", "-", "0"))
    krange = "m in Z_{>0}^{n-1}" if plus else "m in Z^{n-1}"
    rels.append(SchemaRelation("t^m K_i", "i in 2..n", krange, "0"))
    if not plus:
        rels.append(SchemaRelation("d_i", "i in 2..n", "-", "0"))
    return WeylPresentation(weight, n, plus, rels)


@dataclass(frozen=True)
class InvariantAlgebra:
    """B(Λ) = (M^{(x) a_0})^{S_{a_0}} (x) ... (x) (M^{(x) a_l})^{S_{a_l}}, M = C[t_2^{+-1}..t_n^{+-1}]
    (polynomial M^+ for the plus version)."""

    weight: HighestWeight
    n: int
    plus: bool = False

    def describe(self) -> str:
        M = "C[" + ",".join(f"t{i}" for i in range(2, self.n + 1)) + "]" if self.plus else \
            "C[" + ",".join(f"t{i}^±1" for i in range(2, self.n + 1)) + "]"
        blocks = [f"({M}^⊗{a})^S{a}" for a in self.weight.coeffs if a]
        return " ⊗ ".join(blocks) or "C"

    def level_one_form(self) -> str:
        if not self.weight.is_basic:
            raise ValueError("concrete identification only for Λ_0")
        ys = ",".join(f"y{i}" for i in range(2, self.n + 1))
        if self.plus:
            return f"C[{ys}]"
        return "C[" + ",".join(f"y{i}^±1" for i in range(2, self.n + 1)) + "]"


# ---------------------------------------------------------------------------
# level one


def _nonneg_box(n: int, radius: int):
    return tuple(itertools.product(range(0, radius + 1), repeat=n - 1))


def level_one_relations(kind: str, rank: int, n: int, radius: int = 1) -> list:
    """The relations on v_0 in the local Weyl module W(Λ_0, 0)^+, as instances over a box."""
    P = Presentation(kind, rank, n)
    nodes = P.nodes
    out = []
    for m in _nonneg_box(n, radius):
        nonzero = any(m)
        for i in nodes:
            out.append({"operator": f"e_{i},{list(m)}", "gen": RootGen(1, i, m), "why": "highest weight"})
        for i in nodes[1:]:
            out.append({"operator": f"h_{i},{list(m)}", "gen": CartanGen(i, m), "why": "Λ_0(h_i) = 0"})
            out.append({"operator": f"f_{i},{list(m)}", "gen": RootGen(-1, i, m), "why": "f_i^{Λ_0(h_i)+1} = f_i"})
        if nonzero:
            out.append({"operator": f"h_0,{list(m)}", "gen": CartanGen(0, m), "why": "local quotient at 0"})
            out.append({"operator": f"f_0,{list(m)}", "gen": RootGen(-1, 0, m), "why": "from [e_{0,m}, f_0^2]"})
    out.append({"operator": "f_0^2", "gen": None, "why": "f_0^{Λ_0(h_0)+1}"})
    for rel in out:
        rel["in_plus"] = rel["gen"] is None or P.T.in_plus(P.phi(rel["gen"]))
    return out


class _Words:
    """Tiny PBW straightener over a finite set of labelled Lie elements closed under bracket."""

    def __init__(self, T, labelled: dict, order: list):
        self.T = T
        self.el = labelled
        self.order = {name: k for k, name in enumerate(order)}
        self.table = {}

    def bracket(self, a: str, b: str) -> dict:
        if (a, b) not in self.table:
            self.table[(a, b)] = self._express(self.T.bracket(self.el[a], self.el[b]))
        return self.table[(a, b)]

    def _express(self, x) -> dict:
        if x.is_zero():
            return {}
        for name, y in self.el.items():
            key = next(iter(y.loop), None)
            if key is None or key not in x.loop:
                continue
            c = x.loop[key] / y.loop[key]
            if x == y.scale(c):
                return {name: c}
        raise ValueError("bracket leaves the labelled span")

    def straighten(self, word_terms: dict) -> dict:
        out: dict = {}
        todo = list(word_terms.items())
        while todo:
            w, c = todo.pop()
            for k in range(len(w) - 1):
                a, b = w[k], w[k + 1]
                if self.order[a] > self.order[b]:
                    swapped = w[:k] + (b, a) + w[k + 2:]
                    todo.append((swapped, c))
                    for name, cc in self.bracket(a, b).items():
                        todo.append((w[:k] + (name,) + w[k + 2:], c * cc))
                    break
            else:
                out[w] = out.get(w, Scalar.of(0)) + c
        return {w: c for w, c in out.items() if not c.is_zero()}


def check_f0_square_bracket(kind: str, rank: int, n: int, m) -> dict:
    """[e_{0,m}, f_0^2] straightened in U with f's left of h's: expect 2 f_0 h_{0,m} - 2 f_{0,m}."""
    P = Presentation(kind, rank, n)
    m = tuple(m)
    zero = (0,) * (n - 1)
    labelled = {
        "f0m": P.phi(RootGen(-1, 0, m)),
        "f0": P.phi(RootGen(-1, 0, zero)),
        "h0m": P.phi(CartanGen(0, m)),
        "e0m": P.phi(RootGen(1, 0, m)),
    }
    if m == zero:
        labelled.pop("f0m")
        labelled["h0m"] = P.phi(CartanGen(0, zero))
    order = [k for k in ("f0m", "f0", "h0m", "e0m") if k in labelled]
    W = _Words(P.T, labelled, order)
    one = Scalar.of(1)
    got = W.straighten({("e0m", "f0", "f0"): one, ("f0", "f0", "e0m"): -one})
    if m == zero:
        want = {("f0", "h0m"): Scalar.of(2), ("f0",): Scalar.of(-2)}
    else:
        want = {("f0", "h0m"): Scalar.of(2), ("f0m",): Scalar.of(-2)}
    return {"m": list(m), "straightened": {" ".join(w): str(c) for w, c in sorted(got.items())},
            "ok": got == want}


def check_h0(kind: str, rank: int, n: int) -> dict:
    """[e_0, f_0] = phi(alpha_0(0)) = -sum_j mu^j(h'_theta0) + r K_1; the canonical central
    element sum_i a_i^vee phi(alpha_i(0)) is kappa K_1, and Λ_0 (level one, a_0^vee = 1) takes
    the value k/kappa = 1 on phi(alpha_0(0)), k its K_1 coefficient."""
    P = Presentation(kind, rank, n)
    zero = (0,) * (n - 1)
    T = P.T
    lhs = T.bracket(P.phi(RootGen(1, 0, zero)), P.phi(RootGen(-1, 0, zero)))
    img = P.phi(CartanGen(0, zero))
    explicit = T.loop(P.img_h[0]) + T.K(1).scale(P.k1_coeff)
    cm = comarks(kind, rank)
    K = T.zero()
    for i, a in zip(P.nodes, cm):
        K = K + P.phi(CartanGen(i, zero)).scale(a)
    kappa = None
    if not K.loop and not K.deriv and set(K.central) <= {(1, (0,) * n)}:
        kappa = K.central.get((1, (0,) * n), Scalar.of(0)).to_fraction()
    lam0 = Fraction(P.k1_coeff) / kappa if kappa else None
    return {"bracket_equals_image": lhs == img, "image_explicit": img == explicit,
            "comarks": list(cm), "central_multiple": str(kappa), "lambda0_value": str(lam0),
            "ok": lhs == img and img == explicit and cm[0] == 1 and lam0 == 1}


# ---------------------------------------------------------------------------
# character targets


def weyl_character_target(kind: str, rank: int, n: int, D: int, B: int) -> tuple:
    """(q_1 target, multivariate target), both with ch L(Λ_0) from the Freudenthal oracle."""
    return ch.q1_target(kind, rank, n, D), ch.multivariate_target(kind, rank, n, D, B)


def corollary_form(kind: str, rank: int, n: int, D: int) -> list:
    """e^{Λ_0} prod_p (1-q_1^p)^{-mult p delta_1} (prod_s 1/(1-q_1^s))^{n-1}, q_1-coefficients."""
    s = ch.basic_char_product(kind, rank, D)
    for p in range(1, D + 1):
        s = s.inv_one_minus(m=p, power=n - 1)
    return s.q1_coeffs()


def upper_bound_form(kind: str, rank: int, n: int, D: int) -> ch.CharacterSeries:
    """ch L(Λ_0) (prod_p 1/(1-q_1^p))^{n-1}, built factor by factor in the other order."""
    s = ch.CharacterSeries.one(D, rank0=ch.freudenthal_basic(kind, rank, D).rank0)
    for p in range(D, 0, -1):
        for _ in range(n - 1):
            s = s.inv_one_minus(m=p)
    return s * ch.freudenthal_basic(kind, rank, D)


def verify_targets(kind: str, rank: int, n: int, D: int = 6) -> dict:
    q1, multi = weyl_character_target(kind, rank, n, D, D)
    lam0 = (0,) * q1.rank0
    spec_ok = multi.specialize(q=True) == q1
    cor = corollary_form(kind, rank, n, D)
    cor_ok = q1.slice(lam0) == cor
    bound_ok = upper_bound_form(kind, rank, n, D) == q1
    # the n-dependence: target / ch L(Λ_0) is prod (1-q^s)^{-(n-1)}, checked on the Λ_0 key
    base = ch.freudenthal_basic(kind, rank, D).slice(lam0)
    fock = ch.fock_product(n, D)
    conv = [sum(base[i] * fock[d - i] for i in range(d + 1)) for d in range(D + 1)]
    return {"algebra": kind + str(rank), "n": n, "depth": D,
            "specialization": spec_ok, "corollary_on_lambda0_key": cor_ok,
            "upper_bound_identical": bound_ok, "ratio_is_fock": conv == q1.slice(lam0),
            "q1_lambda0_key": q1.slice(lam0),
            "ok": spec_ok and cor_ok and bound_ok and conv == q1.slice(lam0)}
