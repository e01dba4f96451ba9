"""Exponentials of ad-nilpotent elements and the automorphisms Psi_0, Psi_theta_s.

``Psi_0 = exp ad(e_0) exp ad(-f_0) exp ad(e_0)`` with ``e_0 = f^(1) (x) t_1`` and
``f_0 = e^(r-1) (x) t_1^-1``; ``Psi_theta_s`` uses the degree-0 triple
``e^(0), f^(0)``.  Both are applied right to left.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .liealg import LieAlgebraError
from .scalar import Scalar
from .toroidal import LieElement, Toroidal, twisted_ambient

DEFAULT_CAP = 8


class NilpotencyError(ArithmeticError):
    pass


@dataclass(frozen=True)
class AdExp:
    """exp ad(z), summed until (ad z)^k x vanishes; more than ``cap`` terms is an error."""

    z: LieElement
    cap: int = DEFAULT_CAP

    def __call__(self, x: LieElement) -> LieElement:
        if self.z.is_zero():
            return x
        T = self.z.amb
        out = x
        term = x
        for k in range(1, self.cap + 1):
            term = T.bracket(self.z, term)
            if term.is_zero():
                return out
            out = out + term.scale(Fraction(1, factorial(k)))
        if not T.bracket(self.z, term).is_zero():
            raise NilpotencyError(f"ad z not nilpotent within {self.cap} steps")
        return out


@dataclass(frozen=True)
class Composite:
    """Product of AdExp factors; ``factors[0]`` is the leftmost (applied last)."""

    factors: tuple

    def __call__(self, x: LieElement) -> LieElement:
        for f in reversed(self.factors):
            x = f(x)
        return x

    def then(self, other: "Composite") -> "Composite":
        """self o other."""
        return Composite(self.factors + other.factors)


def reflection(e: LieElement, f: LieElement, cap: int = DEFAULT_CAP) -> Composite:
    return Composite((AdExp(e, cap), AdExp(-f, cap), AdExp(e, cap)))


class ThetaAutos:
    """Psi_0, Psi_theta_s and the theta_s triples lifted into T(mu)."""

    def __init__(self, kind: str, rank: int, n: int = 2, cap: int = DEFAULT_CAP):
        self.T: Toroidal = twisted_ambient(kind, rank, n)
        self.gp = self.T.gp
        if self.gp.family == "A_even":
            raise LieAlgebraError("Psi_theta_s is only defined for A_{2l-1}, D_{l+1}, D_4")
        self.n = n
        self.r = self.gp.r
        self.cap = cap
        T, r = self.T, self.r
        self.e0 = T.loop(self.gp.theta_f(1), (1,) + (0,) * (n - 1))
        self.f0 = T.loop(self.gp.theta_e(r - 1), (-1,) + (0,) * (n - 1))
        self.psi0 = reflection(self.e0, self.f0, cap)
        self.psi_theta = reflection(T.loop(self.gp.theta_e(0)), T.loop(self.gp.theta_f(0)), cap)
        self.psi = self.psi0.then(self.psi_theta)

    def e(self, j: int, m1: int, m) -> LieElement:
        """e^(j)_theta_s (x) t_1^{m1} t^m (j taken mod r)."""
        return self.T.loop(self.gp.theta_e(j % self.r), (m1,) + tuple(m))

    def f(self, j: int, m1: int, m) -> LieElement:
        return self.T.loop(self.gp.theta_f(j % self.r), (m1,) + tuple(m))


def _grid(A: ThetaAutos, m1_range, box):
    for j in range(A.r):
        for m1 in m1_range:
            for m in box:
                yield j, m1, m


def _check_grid(A, m1_range, box, lhs, rhs, name):
    checked = 0
    failure = None
    for j, m1, m in _grid(A, m1_range, box):
        checked += 1
        got, want = lhs(j, m1, m), rhs(j, m1, m)
        if got != want and failure is None:
            failure = {"j": j, "m1": m1, "m": list(m), "got": str(got), "expected": str(want)}
    return {"identity": name, "checked": checked, "passed": checked if failure is None else None,
            "ok": failure is None, "first_counterexample": failure}


def _box(n: int, radius: int = 1):
    return tuple(itertools.product(range(-radius, radius + 1), repeat=n - 1))


def verify_rp1(kind: str, rank: int, n: int = 2, m1_range=range(-2, 3), radius: int = 1) -> dict:
    """Psi_0 Psi_theta_s (e^(j) (x) t_1^{r m1 + j} t^m) = e^(r+j-2) (x) t_1^{r m1 + j - 2} t^m,
    together with the two intermediate claims.

    The second claim is checked as Psi_0(f^(j) (x) t_1^{rm1+j}) = -e^(j-2) (x) t_1^{rm1+j-2},
    the superscript forced by the t_1-degree; the printed superscript r-j is
    reported separately under ``claim2_printed``.
    """
    A = ThetaAutos(kind, rank, n)
    r = A.r
    box = _box(n, radius)
    m1_range = tuple(m1_range)

    def deg(j, m1):
        return r * m1 + j

    reports = [
        _check_grid(A, m1_range, box,
                    lambda j, m1, m: A.psi(A.e(j, deg(j, m1), m)),
                    lambda j, m1, m: A.e(r + j - 2, deg(j, m1) - 2, m), "RP1"),
        _check_grid(A, m1_range, box,
                    lambda j, m1, m: A.psi_theta(A.e(j, deg(j, m1), m)),
                    lambda j, m1, m: -A.f(j, deg(j, m1), m), "claim1"),
        _check_grid(A, m1_range, box,
                    lambda j, m1, m: A.psi0(A.f(j, deg(j, m1), m)),
                    lambda j, m1, m: -A.e(j - 2, deg(j, m1) - 2, m), "claim2"),
    ]
    printed = _check_grid(A, m1_range, box,
                          lambda j, m1, m: A.psi0(A.f(j, deg(j, m1), m)),
                          lambda j, m1, m: -A.e(r - j, deg(j, m1) - 2, m), "claim2_printed")
    return {
        "algebra": f"{A.gp.cfg.label}^({r})",
        "n": n,
        "m1_range": [m1_range[0], m1_range[-1]],
        "box_radius": radius,
        "identities": reports,
        "findings": [] if printed["ok"] else [printed],
        "ok": all(x["ok"] for x in reports),
    }


def verify_prom5_brackets(kind: str, rank: int, n: int = 2, l_range=range(-2, 3), radius: int = 1) -> dict:
    A = ThetaAutos(kind, rank, n)
    gp, g, T, r = A.gp, A.gp.g, A.T, A.r
    out = []
    # the printed right-hand side uses e^(r-j); only e^(j-2) has matching degree when r = 3
    def ident(sup):
        return [j for j in range(r)
                if g.bracket(gp.theta_e(r - 1), gp.theta_f(j)) != -1 * g.bracket(gp.theta_f(1), gp.theta_e(sup(j) % r))]

    bad = ident(lambda j: j - 2)
    out.append({"identity": "e(r-1) f(j) = -f(1) e(j-2)", "checked": r, "ok": not bad, "failing_j": bad})
    printed_bad = ident(lambda j: r - j)
    findings = []
    if printed_bad:
        findings.append({"identity": "e(r-1) f(j) = -f(1) e(r-j)", "checked": r, "failing_j": printed_bad})

    fails = []
    checked = 0
    e0, f0 = gp.theta_e(0), gp.theta_f(0)
    for l in l_range:
        for m in _box(n, radius):
            for i in range(2, n + 1):
                checked += 1
                shifted = list(m)
                shifted[i - 2] += 1
                ti = [0] * n
                ti[i - 1] = 1
                lhs = T.K(i, (-r * l,) + tuple(shifted))
                rhs = (T.bracket(T.loop(f0, ti), T.loop(e0, (-r * l,) + tuple(m)))
                       - T.bracket(T.loop(f0), T.loop(e0, (-r * l,) + tuple(shifted)))).scale(Fraction(1, r))
                if lhs != rhs:
                    fails.append({"l": l, "m": list(m), "i": i})
    out.append({"identity": "central term from two commutators", "checked": checked, "ok": not fails,
                "failures": fails[:1]})

    val = g.form(gp.theta_f(r - 1), gp.theta_e(1))
    out.append({"identity": "(f(r-1) | e(1)) = r", "value": str(val), "ok": val == Scalar.of(r)})
    return {"algebra": f"{gp.cfg.label}^({r})", "n": n, "identities": out, "findings": findings,
            "ok": all(x["ok"] for x in out)}


def random_homogeneous(T: Toroidal, rng: random.Random, radius: int = 2) -> LieElement:
    """A random homogeneous element of T(mu): a projected loop vector, a K, or a d."""
    gp, n = T.gp, T.n
    roll = rng.random()
    m = tuple(rng.randint(-radius, radius) for _ in range(n))
    if roll < 0.8:
        s = m[0] % gp.r
        piece = gp.pieces[s]
        if not piece:
            return T.K(1, m)
        v = piece[rng.randrange(len(piece))]
        return T.loop(v, m).scale(rng.choice((1, -1, 2, Fraction(1, 2))))
    if roll < 0.93:
        i = rng.randint(1, n)
        m = (gp.r * (m[0] // gp.r),) + m[1:]
        return T.K(i, m)
    return T.d(rng.randint(1, n))


def check_automorphism(psi, T: Toroidal, pairs: int = 100, seed: int = 0) -> dict:
    rng = random.Random(seed)
    failure = None
    for k in range(pairs):
        x, y = random_homogeneous(T, rng), random_homogeneous(T, rng)
        lhs = psi(T.bracket(x, y))
        rhs = T.bracket(psi(x), psi(y))
        if lhs != rhs and failure is None:
            failure = {"x": str(x), "y": str(y)}
    return {"pairs": pairs, "seed": seed, "ok": failure is None, "first_counterexample": failure}
