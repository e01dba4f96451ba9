"""Lattice vertex algebras V_Gamma and V_Gamma1 with exact mode actions.

A basis state is ``(letters, gamma)``: ``letters`` is a sorted tuple of
``(b, k)`` meaning the Heisenberg creation operator (basis vector b)_(-k),
k >= 1, and ``gamma`` is a lattice vector in basis coordinates.  Fields are
never expanded; only single modes a_(n) c are computed, through

    (h_(-k) a)_(n) c = sum_j C(k+j-1, j) [ h_(-k-j) a_(n+j) c - (-1)^k a_(n-k-j) h_(j) c ]

for Heisenberg letters and the vertex operator formula for 1 (x) e^gamma.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb



@dataclass(frozen=True)
class Lattice:
    labels: tuple
    gram: tuple
    eps_table: tuple  # eps_table[i][j] in {1, -1} on basis pairs

    @property
    def rank(self) -> int:
        return len(self.labels)

    def pair(self, x, y) -> int:
        return sum(x[i] * self.gram[i][j] * y[j] for i in range(self.rank) for j in range(self.rank)
                   if x[i] and y[j] and self.gram[i][j])

    def eps(self, x, y) -> int:
        """Bimultiplicative extension of the basis table."""
        e = 0
        for i in range(self.rank):
            if not x[i]:
                continue
            for j in range(self.rank):
                if y[j] and self.eps_table[i][j] == -1:
                    e += x[i] * y[j]
        return -1 if e % 2 else 1

    def unit(self, i: int) -> tuple:
        return tuple(int(k == i) for k in range(self.rank))

    def zero(self) -> tuple:
        return (0,) * self.rank

    def check_cocycle(self) -> bool:
        """eps(a,b) eps(b,a) = (-1)^<a,b> on basis pairs (hence everywhere)."""
        for i in range(self.rank):
            for j in range(self.rank):
                a, b = self.unit(i), self.unit(j)
                if self.eps(a, b) * self.eps(b, a) != (-1) ** (self.pair(a, b) % 2):
                    return False
        return True


@lru_cache(maxsize=None)
def gamma_lattice(n: int) -> Lattice:
    """Rank 2n-2: delta_2..delta_n, Lambda_2..Lambda_n with <delta_i, Lambda_j> = delta_ij."""
    k = n - 1
    labels = tuple(f"δ{i}" for i in range(2, n + 1)) + tuple(f"Λ{i}" for i in range(2, n + 1))
    gram = [[0] * (2 * k) for _ in range(2 * k)]
    eps = [[1] * (2 * k) for _ in range(2 * k)]
    for i in range(k):
        gram[i][k + i] = gram[k + i][i] = 1
        eps[i][k + i] = -1
    return Lattice(labels, tuple(map(tuple, gram)), tuple(map(tuple, eps)))


@lru_cache(maxsize=None)
def gamma1_lattice(n: int) -> Lattice:
    """Rank n-1: delta_2..delta_n, totally isotropic."""
    k = n - 1
    labels = tuple(f"δ{i}" for i in range(2, n + 1))
    z = tuple((0,) * k for _ in range(k))
    one = tuple((1,) * k for _ in range(k))
    return Lattice(labels, z, one)


class FockVector:
    __slots__ = ("lat", "terms")

    def __init__(self, lat: Lattice, terms=None):
        self.lat = lat
        self.terms = {k: _exact(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def state(cls, lat: Lattice, letters=(), gamma=None, coef=1) -> "FockVector":
        gamma = lat.zero() if gamma is None else tuple(gamma)
        return cls(lat, {(tuple(sorted(letters)), gamma): _exact(Fraction(coef))})

    @classmethod
    def vacuum(cls, lat: Lattice) -> "FockVector":
        return cls.state(lat)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return FockVector(self.lat, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "FockVector":
        c = _exact(Fraction(c))
        if not c:
            return FockVector(self.lat)
        return FockVector(self.lat, {k: c * v for k, v in self.terms.items()})

    __rmul__ = scale

    def __eq__(self, other):
        return isinstance(other, FockVector) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def max_degree(self) -> int:
        return max((sum(k for _, k in letters) for letters, _ in self.terms), default=0)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (letters, gamma) in sorted(self.terms):
            mono = "".join(f"{self.lat.labels[b]}({-k})" for b, k in letters)
            parts.append(f"({self.terms[(letters, gamma)]}) {mono or '1'}⊗e^{list(gamma)}")
        return " + ".join(parts)

    __repr__ = __str__


def degree(letters) -> int:
    return sum(k for _, k in letters)


def _exact(x):
    """int when integral, else Fraction; keeps the common case on fast int arithmetic."""
    return x.numerator if isinstance(x, Fraction) and x.denominator == 1 else x


def _insert(letters, letter):
    return tuple(sorted(letters + (letter,)))


def heis_mode(h, n: int, v: FockVector) -> FockVector:
    """h_(n) for a lattice vector h (coordinates in the lattice basis)."""
    lat = v.lat
    out: dict = {}
    for (letters, gamma), c in v.terms.items():
        if n < 0:
            for b, hb in enumerate(h):
                if hb:
                    key = (_insert(letters, (b, -n)), gamma)
                    out[key] = out.get(key, 0) + c * hb
        elif n == 0:
            val = lat.pair(h, gamma)
            if val:
                key = (letters, gamma)
                out[key] = out.get(key, 0) + c * val
        else:
            seen = set()
            for idx, (b, k) in enumerate(letters):
                if k != n or (b, k) in seen:
                    continue
                seen.add((b, k))
                mult = sum(1 for x in letters if x == (b, k))
                val = n * lat.pair(h, lat.unit(b)) * mult
                if val:
                    rest = list(letters)
                    rest.remove((b, k))
                    key = (tuple(rest), gamma)
                    out[key] = out.get(key, 0) + c * val
    return FockVector(lat, out)


def _lowering(gamma, v: FockVector, dmax: int) -> list:
    """A_d v for d = 0..dmax where exp(-sum_{n>0} gamma_(n) z^-n / n) = sum_d A_d z^-d."""
    out = [v]
    for d in range(1, dmax + 1):
        acc = FockVector(v.lat)
        for m in range(1, d + 1):
            acc = acc + heis_mode(gamma, m, out[d - m])
        out.append(acc.scale(Fraction(-1, d)))
    return out


@lru_cache(maxsize=None)
def _schur(gamma: tuple, d: int) -> tuple:
    """S_d(gamma) as ((letters, coef), ...): coefficient of z^d in exp(sum_{m>0} gamma_(-m) z^m / m).
    Only creation modes occur, so it acts on any state by multiplying letters."""
    S = [{(): 1}]
    for e in range(1, d + 1):
        acc: dict = {}
        for m in range(1, e + 1):
            for letters, c in S[e - m].items():
                for b, gb in enumerate(gamma):
                    if gb:
                        key = _insert(letters, (b, m))
                        acc[key] = acc.get(key, 0) + c * gb
        S.append({k: _exact(Fraction(v, e) if isinstance(v, int) else v / e) for k, v in acc.items() if v})
    return tuple(S[d].items())


def vertex_mode(gamma, k: int, v: FockVector) -> FockVector:
    """(1 (x) e^gamma)_(k) v: coefficient of z^{-k-1} in
    e^gamma z^{gamma_0} E^-(gamma, z) E^+(gamma, z) v."""
    lat = v.lat
    gamma = tuple(gamma)
    out: dict = {}
    for (letters, alpha), c in v.terms.items():
        base = FockVector(lat, {(letters, alpha): c})
        shift = lat.pair(gamma, alpha)
        sign = lat.eps(gamma, alpha)
        target = tuple(a + b for a, b in zip(gamma, alpha))
        lows = _lowering(gamma, base, degree(letters))
        for dp, low in enumerate(lows):
            dm = -k - 1 - shift + dp
            if dm < 0 or low.is_zero():
                continue
            schur = _schur(gamma, dm)
            for (l2, _), c2 in low.terms.items():
                for sl, sc in schur:
                    key = (tuple(sorted(l2 + sl)), target)
                    out[key] = out.get(key, 0) + sign * c2 * sc
    return FockVector(lat, out)


def _accumulate(out: dict, v: FockVector, coef=1):
    for key, c in v.terms.items():
        out[key] = out.get(key, 0) + coef * c


def mode_bound(a_letters, a_gamma, c: FockVector) -> int:
    """a_(p) c = 0 for every p >= this bound."""
    lat = c.lat
    if c.is_zero():
        return -(10 ** 9)
    return max(degree(a_letters) + degree(l) - lat.pair(a_gamma, g) for (l, g) in c.terms)


def _basis_nproduct(letters, gamma, n: int, c: FockVector) -> FockVector:
    lat = c.lat
    if c.is_zero():
        return c
    if not letters:
        return vertex_mode(gamma, n, c)
    (b, k), rest = letters[0], letters[1:]
    h = lat.unit(b)
    out: dict = {}
    top = mode_bound(rest, gamma, c)
    for j in range(0, max(top - n, 0) + 1):
        inner = _basis_nproduct(rest, gamma, n + j, c)
        if not inner.is_zero():
            _accumulate(out, heis_mode(h, -k - j, inner), comb(k + j - 1, j))
    sign = -1 if k % 2 else 1
    for j in range(0, c.max_degree() + 1):
        hc = heis_mode(h, j, c)
        if hc.is_zero():
            continue
        _accumulate(out, _basis_nproduct(rest, gamma, n - k - j, hc), -comb(k + j - 1, j) * sign)
    return FockVector(lat, out)


def nproduct(a: FockVector, n: int, c: FockVector) -> FockVector:
    """a_(n) c."""
    out: dict = {}
    for (letters, gamma), coef in a.terms.items():
        _accumulate(out, _basis_nproduct(letters, gamma, n, c), coef)
    return FockVector(c.lat, out)


def translation(a: FockVector) -> FockVector:
    return nproduct(a, -2, FockVector.vacuum(a.lat))


# ---------------------------------------------------------------------------
# the n-th product table in V_Gamma


def _qd(lat: Lattice, q) -> tuple:
    k = len(q)
    return tuple(q) + (0,) * (lat.rank - k)


def _delta(lat, i):  # i in 2..n
    return i - 2


def _Lam(lat, i):
    return (lat.rank // 2) + i - 2


@dataclass(frozen=True)
class TableLine:
    key: str
    text: str


TABLE_LINES = (
    TableLine("e_-1", "e^{qδ}_(-1) e^{pδ} = e^{(q+p)δ}"),
    TableLine("e_-2", "e^{qδ}_(-2) e^{pδ} = (qδ)(-1) e^{(q+p)δ}"),
    TableLine("iso", "(α(-1)e^{qδ})_(n) (β(-1)e^{pδ}) = 0, n >= 0, α, β in {1, δ_2..δ_n}"),
    TableLine("L0e", "(Λ_i(-1)e^{qδ})_(0) e^{pδ} = q_i e^{(q+p)δ}"),
    TableLine("Lne", "(Λ_i(-1)e^{qδ})_(n) e^{pδ} = 0, n >= 1"),
    TableLine("L0d", "(Λ_i(-1)e^{qδ})_(0) (δ_j(-1)e^{pδ}) = p_i δ_j(-1)e^{(q+p)δ} + δ_ij (qδ)(-1)e^{(q+p)δ}"),
    TableLine("L1d", "(Λ_i(-1)e^{qδ})_(1) (δ_j(-1)e^{pδ}) = δ_ij e^{(q+p)δ}"),
    TableLine("Lnd", "(Λ_i(-1)e^{qδ})_(n) (δ_j(-1)e^{pδ}) = 0, n >= 2"),
    TableLine("L0L", "(Λ_i(-1)e^{qδ})_(0) (Λ_j(-1)e^{pδ}) = (-q_j Λ_i(-1) + p_i Λ_j(-1) - p_i q_j (qδ)(-1)) e^{(q+p)δ}"),
    TableLine("L1L", "(Λ_i(-1)e^{qδ})_(1) (Λ_j(-1)e^{pδ}) = -p_i q_j e^{(q+p)δ}"),
    TableLine("LnL", "(Λ_i(-1)e^{qδ})_(n) (Λ_j(-1)e^{pδ}) = 0, n >= 2"),
)


def _table_instances(n: int, box, nmax: int = 3):
    """Yields (line key, params, a, m, b, printed rhs)."""
    lat = gamma_lattice(n)
    idx = range(2, n + 1)

    def st(letters, q):
        return FockVector.state(lat, letters, _qd(lat, q))

    def qdl(q):  # (q delta)(-1) as letters with coefficients: return a FockVector factory
        return q

    def with_qdelta(q, target):
        # (q delta)_(-1) e^{target}
        return heis_mode(_qd(lat, q), -1, st((), target))

    for q, p in itertools.product(box, repeat=2):
        s = tuple(a + b for a, b in zip(q, p))
        yield "e_-1", {"q": q, "p": p}, st((), q), -1, st((), p), st((), s)
        yield "e_-2", {"q": q, "p": p}, st((), q), -2, st((), p), with_qdelta(q, s)
        alphas = [None] + list(idx)
        for al, be in itertools.product(alphas, repeat=2):
            la = () if al is None else ((_delta(lat, al), 1),)
            lb = () if be is None else ((_delta(lat, be), 1),)
            for m in range(0, nmax + 1):
                yield "iso", {"q": q, "p": p, "alpha": al, "beta": be, "n": m}, st(la, q), m, st(lb, p), FockVector(lat)
        for i in idx:
            Li = ((_Lam(lat, i), 1),)
            yield "L0e", {"q": q, "p": p, "i": i}, st(Li, q), 0, st((), p), st((), s).scale(q[i - 2])
            for m in range(1, nmax + 1):
                yield "Lne", {"q": q, "p": p, "i": i, "n": m}, st(Li, q), m, st((), p), FockVector(lat)
            for j in idx:
                dj = ((_delta(lat, j), 1),)
                Lj = ((_Lam(lat, j), 1),)
                rhs = st(dj, s).scale(p[i - 2])
                if i == j:
                    rhs = rhs + with_qdelta(q, s)
                yield "L0d", {"q": q, "p": p, "i": i, "j": j}, st(Li, q), 0, st(dj, p), rhs
                yield "L1d", {"q": q, "p": p, "i": i, "j": j}, st(Li, q), 1, st(dj, p), st((), s).scale(int(i == j))
                for m in range(2, nmax + 1):
                    yield "Lnd", {"q": q, "p": p, "i": i, "j": j, "n": m}, st(Li, q), m, st(dj, p), FockVector(lat)
                rhs = (st(Li, s).scale(-q[j - 2]) + st(Lj, s).scale(p[i - 2])
                       - with_qdelta(q, s).scale(p[i - 2] * q[j - 2]))
                yield "L0L", {"q": q, "p": p, "i": i, "j": j}, st(Li, q), 0, st(Lj, p), rhs
                yield "L1L", {"q": q, "p": p, "i": i, "j": j}, st(Li, q), 1, st(Lj, p), st((), s).scale(-p[i - 2] * q[j - 2])
                for m in range(2, nmax + 1):
                    yield "LnL", {"q": q, "p": p, "i": i, "j": j, "n": m}, st(Li, q), m, st(Lj, p), FockVector(lat)


def _jsonable(params):
    return {k: (list(v) if isinstance(v, tuple) else v) for k, v in params.items()}


def verify_nproduct_table(n: int, radius: int = 1, nmax: int = 3) -> dict:
    """Compare every printed line against the first-principles value."""
    box = tuple(itertools.product(range(-radius, radius + 1), repeat=n - 1))
    lines = {t.key: {"line": t.text, "checked": 0, "agree": 0, "first_discrepancy": None} for t in TABLE_LINES}
    for key, params, a, m, b, printed in _table_instances(n, box, nmax):
        got = nproduct(a, m, b)
        rec = lines[key]
        rec["checked"] += 1
        if got == printed:
            rec["agree"] += 1
        elif rec["first_discrepancy"] is None:
            rec["first_discrepancy"] = {"params": _jsonable(params), "printed": str(printed), "computed": str(got)}
    return {"n": n, "box_radius": radius, "lines": list(lines.values()),
            "discrepancies": [l["line"] for l in lines.values() if l["agree"] != l["checked"]]}


# ---------------------------------------------------------------------------
# axioms and Borcherds spot-checks


def low_degree_states(lat: Lattice, max_letters: int = 1, gamma_radius: int = 1, kmax: int = 2) -> list:
    out = []
    letters_pool = [((b, k),) for b in range(lat.rank) for k in range(1, kmax + 1)]
    choices = [()] + (letters_pool if max_letters >= 1 else [])
    for g in itertools.product(range(-gamma_radius, gamma_radius + 1), repeat=lat.rank):
        for l in choices:
            out.append(FockVector.state(lat, l, g))
    return out


def borcherds_sides(a, b, c, p: int, q: int, n: int) -> tuple:
    lat = c.lat
    lhs = FockVector(lat)
    bound = 0
    for (la, ga) in a.terms:
        bound = max(bound, mode_bound(la, ga, c) - p, mode_bound(la, ga, b) - n)
    for (lb, gb) in b.terms:
        bound = max(bound, mode_bound(lb, gb, c) - q)
    # a_(p+n-s) b_(q+s) c vanishes once q+s passes b's bound on c; symmetric for the other term
    for s in range(0, bound + 1):
        cf = comb(n, s) if n >= 0 else (-1) ** s * comb(-n + s - 1, s)
        if cf == 0:
            continue
        t1 = nproduct(a, p + n - s, nproduct(b, q + s, c))
        t2 = nproduct(b, q + n - s, nproduct(a, p + s, c))
        lhs = lhs + (t1 - t2.scale((-1) ** (n % 2))).scale((-1) ** s * cf)
    rhs = FockVector(lat)
    for s in range(0, bound + 1):
        cf = comb(p, s) if p >= 0 else (-1) ** s * comb(-p + s - 1, s)
        if cf == 0:
            continue
        rhs = rhs + nproduct(nproduct(a, n + s, b), p + q - s, c).scale(cf)
    return lhs, rhs


def borcherds_spot_checks(lat: Lattice, count: int = 50, seed: int = 0, radius: int = 2) -> dict:
    rng = random.Random(seed)
    pool = low_degree_states(lat)
    failure = None
    for t in range(count):
        a, b, c = (rng.choice(pool) for _ in range(3))
        p, q, n = (rng.randint(-radius, radius) for _ in range(3))
        lhs, rhs = borcherds_sides(a, b, c, p, q, n)
        if lhs != rhs and failure is None:
            failure = {"a": str(a), "b": str(b), "c": str(c), "p": p, "q": q, "n": n}
    return {"lattice": list(lat.labels), "triples": count, "seed": seed, "ok": failure is None,
            "first_failure": failure}


def check_vacuum_axioms(lat: Lattice, states) -> bool:
    vac = FockVector.vacuum(lat)
    for a in states:
        if nproduct(a, -1, vac) != a:
            return False
        for m in range(-3, 3):
            expect = a if m == -1 else FockVector(lat)
            if nproduct(vac, m, a) != expect:
                return False
    return True


def check_translation(lat: Lattice, nrange=range(-3, 3)) -> bool:
    """(T a)_(n) = -n a_(n-1) for Heisenberg generator states a = h(-1)|0>."""
    vac = FockVector.vacuum(lat)
    targets = low_degree_states(lat, gamma_radius=1)[:12]
    for b in range(lat.rank):
        a = FockVector.state(lat, ((b, 1),))
        Ta = translation(a)
        for c in targets:
            for m in nrange:
                if nproduct(Ta, m, c) != nproduct(a, m - 1, c).scale(-m):
                    return False
    return True


# ---------------------------------------------------------------------------
# central and derivation assignments on V_Gamma1


def fock_basis(n: int, D: int, gammas) -> list:
    """Basis states of V_Gamma1 of Fock degree <= D with lattice parts from ``gammas``."""
    lat = gamma1_lattice(n)
    letters_by_deg = {0: [()]}
    for d in range(1, D + 1):
        seen = set()
        for d0 in range(d):
            for l in letters_by_deg[d0]:
                k = d - d0
                for b in range(lat.rank):
                    seen.add(_insert(l, (b, k)))
        # keep only genuinely degree-d sorted multisets
        letters_by_deg[d] = sorted(x for x in seen if degree(x) == d)
    out = []
    for g in gammas:
        for d in range(D + 1):
            for l in letters_by_deg[d]:
                out.append(FockVector.state(lat, l, g))
    return out


def fock_graded_dim(n: int, D: int) -> list:
    """dim of the degree-d part of C[delta_i(k): 2 <= i <= n, k < 0], d = 0..D, by enumeration."""
    k = n - 1
    counts = []
    for d in range(D + 1):
        total = 0
        for parts in _partitions(d):
            # each part size can carry any of k colours; count multisets of (size, colour)
            mult = {}
            for s in parts:
                mult[s] = mult.get(s, 0) + 1
            ways = 1
            for c in mult.values():
                ways *= comb(c + k - 1, k - 1)
            total += ways
        counts.append(total)
    return counts


def _partitions(d: int, maxpart: int | None = None):
    if maxpart is None:
        maxpart = d
    if d == 0:
        yield ()
        return
    for first in range(min(d, maxpart), 0, -1):
        for rest in _partitions(d - first, first):
            yield (first,) + rest


class CentralImages:
    """Operators of the K_i and d_i assignments on the V_Gamma1 factor."""

    def __init__(self, n: int, r: int):
        self.n, self.r = n, r
        self.lat = gamma1_lattice(n)

    def K(self, i: int, s: int, m, v: FockVector) -> FockVector:
        """Image of t_1^{rs} t^m K_i (K_1 carries the 1/r)."""
        gamma = tuple(m)
        if i == 1:
            return vertex_mode(gamma, s - 1, v).scale(Fraction(1, self.r))
        a = FockVector.state(self.lat, ((i - 2, 1),), gamma)
        return nproduct(a, s, v)

    def d(self, i: int, v: FockVector) -> FockVector:
        """d_1 -> r d^M, where d^M gives delta_i(k) (k < 0) the degree k; d_i -> tau_i degree."""
        out: dict = {}
        for (letters, gamma), c in v.terms.items():
            val = -self.r * degree(letters) if i == 1 else gamma[i - 2]
            if val:
                out[(letters, gamma)] = c * val
        return FockVector(self.lat, out)


def verify_central_assignments(n: int, r: int = 2, D: int = 3, radius: int = 1, s_range=range(-1, 3)) -> dict:
    C = CentralImages(n, r)
    box = tuple(itertools.product(range(-radius, radius + 1), repeat=n - 1))
    states = fock_basis(n, D, box)
    labels = [(i, s, m) for i in range(1, n + 1) for s in s_range for m in box]
    report = {"n": n, "r": r, "degree_cap": D, "states": len(states)}

    comm_fail = None
    comm_checked = 0
    rng = random.Random(0)
    pairs = [(x, y) for x in labels for y in labels]
    rng.shuffle(pairs)
    for (x, y) in pairs[:400]:
        for v in states:
            comm_checked += 1
            lhs = C.K(*x, C.K(*y, v))
            rhs = C.K(*y, C.K(*x, v))
            if lhs != rhs and comm_fail is None:
                comm_fail = {"x": list(x), "y": list(y), "v": str(v)}
    report["central_commute"] = {"checked": comm_checked, "ok": comm_fail is None, "first_failure": comm_fail}

    der_fail = None
    der_checked = 0
    for (i, s, m) in labels:
        for j in range(1, n + 1):
            for v in states:
                der_checked += 1
                lhs = C.d(j, C.K(i, s, m, v)) - C.K(i, s, m, C.d(j, v))
                factor = r * s if j == 1 else m[j - 2]
                if lhs != C.K(i, s, m, v).scale(factor) and der_fail is None:
                    der_fail = {"K": [i, s, list(m)], "d": j, "v": str(v)}
    report["derivations"] = {"checked": der_checked, "ok": der_fail is None, "first_failure": der_fail}

    # sum_i s_i t^s K_i = 0 with s_1 = rs must map to zero
    kah_fail = None
    kah_checked = 0
    for s in s_range:
        for m in box:
            for v in states:
                kah_checked += 1
                tot = C.K(1, s, m, v).scale(r * s)
                for i in range(2, n + 1):
                    tot = tot + C.K(i, s, m, v).scale(m[i - 2])
                if not tot.is_zero() and kah_fail is None:
                    kah_fail = {"s": s, "m": list(m), "v": str(v)}
    report["kahler"] = {"checked": kah_checked, "ok": kah_fail is None, "first_failure": kah_fail}
    report["ok"] = all(report[k]["ok"] for k in ("central_commute", "derivations", "kahler"))
    return report
