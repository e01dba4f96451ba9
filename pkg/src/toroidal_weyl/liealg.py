"""Simply-laced simple Lie algebras with a Chevalley basis, diagram automorphisms
and the Z/rZ grading they induce.

Structure constants come from a bimultiplicative asymmetry function on the root
lattice (Frenkel-Kac construction); every algebra is checked for the Jacobi
identity and for invariance of the form when it is built.

Labelings used throughout:

* ``A_n``: nodes ``1..n`` along a path.
* ``D_n``: path ``1..n-1`` with node ``n`` attached to node ``n-2``.

Diagram automorphisms:

============  =====  ===================================  =========
algebra        r     permutation                           g_0
============  =====  ===================================  =========
A_{2l-1}       2     i -> 2l - i                           C_l
A_{2l}         2     i -> 2l + 1 - i                       B_l
D_{l+1}        2     l <-> l + 1                           B_l
D_4            3     1 -> 3 -> 4 -> 1 (node 2 fixed)       G_2
============  =====  ===================================  =========

The index set ``I_0`` is ``1..l`` (``{1, 2}`` for ``D_4``); node ``i`` of ``I_0``
stands for the orbit of node ``i`` of the original diagram.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product

from .linalg import Echelon
from .scalar import ONE, ZERO, Scalar, root_of_unity, sqrt2

Root = tuple  # integer coordinates in the simple-root basis


class LieAlgebraError(ValueError):
    pass


# ---------------------------------------------------------------------------
# root systems


def cartan_matrix(kind: str, rank: int) -> tuple[tuple[int, ...], ...]:
    if kind == "A":
        if rank < 1:
            raise LieAlgebraError("A_n needs n >= 1")
        edges = [(i, i + 1) for i in range(rank - 1)]
    elif kind == "D":
        if rank < 4:
            raise LieAlgebraError("D_n needs n >= 4")
        edges = [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
    else:
        raise LieAlgebraError(f"unsupported type {kind!r}")
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in edges:
        a[i][j] = a[j][i] = -1
    return tuple(tuple(row) for row in a)


@dataclass(frozen=True)
class RootSystem:
    kind: str
    rank: int
    cartan: tuple
    positive: tuple  # positive roots, ordered by height then lexicographically

    @classmethod
    def build(cls, kind: str, rank: int) -> "RootSystem":
        a = cartan_matrix(kind, rank)
        simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
        found = set(simple)
        layer = list(simple)
        while layer:
            nxt = []
            for beta in layer:
                for i in range(rank):
                    # simply laced: beta + alpha_i is a root iff (beta|alpha_i) = -1
                    if sum(beta[j] * a[i][j] for j in range(rank)) == -1:
                        gamma = tuple(b + (j == i) for j, b in enumerate(beta))
                        if gamma not in found:
                            found.add(gamma)
                            nxt.append(gamma)
            layer = nxt
        positive = tuple(sorted(found, key=lambda r: (sum(r), tuple(-x for x in r))))
        return cls(kind, rank, a, positive)

    def pair(self, x: Root, y: Root) -> int:
        a = self.cartan
        return sum(x[i] * a[i][j] * y[j] for i in range(self.rank) for j in range(self.rank) if x[i] and y[j])

    @cached_property
    def root_set(self) -> frozenset:
        return frozenset(self.positive) | frozenset(tuple(-x for x in r) for r in self.positive)

    @cached_property
    def highest_root(self) -> Root:
        return self.positive[-1]

    def simple_root(self, i: int) -> Root:
        return tuple(int(j == i - 1) for j in range(self.rank))

    def expected_positive_count(self) -> int:
        n = self.rank
        return n * (n + 1) // 2 if self.kind == "A" else n * (n - 1)


def _asym(rs: RootSystem, x: Root, y: Root) -> int:
    """Bimultiplicative sign with eps(a,a) = -1 on simple roots."""
    a = rs.cartan
    e = 0
    n = rs.rank
    for i in range(n):
        if not x[i]:
            continue
        for j in range(i, n):
            if y[j] and (i == j or a[i][j] == -1):
                e += x[i] * y[j]
    return -1 if e % 2 else 1


# ---------------------------------------------------------------------------
# the Lie algebra


class Vec(dict):
    """Element of a finite-dimensional Lie algebra: basis index -> Scalar."""

    __slots__ = ("parent",)

    def __init__(self, parent, data=()):
        super().__init__(data)
        self.parent = parent

    def __add__(self, other):
        _same(self, other)
        return Vec(self.parent, add_into(dict(self), other))

    def __sub__(self, other):
        _same(self, other)
        return Vec(self.parent, add_into(dict(self), other, Scalar.of(-1)))

    def __neg__(self):
        return Vec(self.parent, {k: -v for k, v in self.items()})

    def __rmul__(self, c):
        c = Scalar.of(c)
        if c.is_zero():
            return Vec(self.parent)
        return Vec(self.parent, {k: c * v for k, v in self.items()})

    __mul__ = __rmul__

    def __eq__(self, other):
        if isinstance(other, Vec) and other.parent is not self.parent:
            return False
        return dict.__eq__(self, other)

    __hash__ = None

    def __str__(self):
        return self.parent.render(self)


def _same(x, y):
    if isinstance(y, Vec) and y.parent is not x.parent:
        raise LieAlgebraError("elements belong to different algebras")


def add_into(target: dict, other: dict, c: Scalar = ONE) -> dict:
    one = c == ONE
    for k, v in other.items():
        w = v if one else c * v
        cur = target.get(k)
        if cur is None:
            target[k] = w
        else:
            s = cur + w
            if s.is_zero():
                del target[k]
            else:
                target[k] = s
    return target


class SimpleLie:
    """Chevalley basis ``e'_a`` (a > 0), ``h'_i``, ``f'_a`` of a simply-laced algebra.

    Basis indices: ``0..N-1`` are the ``e`` vectors (order of ``roots.positive``),
    ``N..N+n-1`` the ``h'_i``, ``N+n..2N+n-1`` the ``f`` vectors.
    """

    def __init__(self, roots: RootSystem):
        self.roots = roots
        self.kind, self.rank = roots.kind, roots.rank
        N, n = len(roots.positive), roots.rank
        self.npos = N
        self.dim = 2 * N + n
        self.root_index = {r: k for k, r in enumerate(roots.positive)}
        self._build_tables()

    # basis bookkeeping --------------------------------------------------
    def e_index(self, root: Root) -> int:
        return self.root_index[tuple(root)]

    def f_index(self, root: Root) -> int:
        return self.npos + self.rank + self.root_index[tuple(root)]

    def h_index(self, i: int) -> int:
        return self.npos + i - 1

    def kind_of(self, idx: int) -> str:
        if idx < self.npos:
            return "e"
        if idx < self.npos + self.rank:
            return "h"
        return "f"

    def root_of(self, idx: int) -> Root:
        """Root (in simple-root coordinates) of a basis vector; zero for Cartan."""
        kind = self.kind_of(idx)
        if kind == "h":
            return (0,) * self.rank
        if kind == "e":
            return self.roots.positive[idx]
        return tuple(-x for x in self.roots.positive[idx - self.npos - self.rank])

    def basis_name(self, idx: int) -> str:
        kind = self.kind_of(idx)
        if kind == "h":
            return f"h{idx - self.npos + 1}"
        root = self.root_of(idx)
        label = "".join(str(abs(x)) for x in root)
        return f"{kind}[{label}]"

    # elements -----------------------------------------------------------
    def vec(self, data=()) -> Vec:
        return Vec(self, data)

    def basis(self, idx: int) -> Vec:
        return Vec(self, {idx: ONE})

    def e(self, root) -> Vec:
        if isinstance(root, int):
            root = self.roots.simple_root(root)
        return self.basis(self.e_index(root))

    def f(self, root) -> Vec:
        if isinstance(root, int):
            root = self.roots.simple_root(root)
        return self.basis(self.f_index(root))

    def h(self, root) -> Vec:
        """Coroot h'_a; an int selects the simple coroot h'_i."""
        if isinstance(root, int):
            return self.basis(self.h_index(root))
        return Vec(self, {self.h_index(i + 1): Scalar.of(c) for i, c in enumerate(root) if c})

    # tables -------------------------------------------------------------
    def _build_tables(self):
        rs = self.roots
        N, n = self.npos, self.rank
        table: list[dict[int, tuple]] = [dict() for _ in range(self.dim)]

        def put(a, b, terms):
            if terms:
                table[a][b] = tuple(terms)
                table[b][a] = tuple((c, -v) for c, v in terms)

        pos = rs.positive
        for i in range(1, n + 1):
            hi = self.h_index(i)
            ai = rs.simple_root(i)
            for k, r in enumerate(pos):
                p = rs.pair(ai, r)
                if p:
                    put(hi, k, [(k, p)])
                    put(hi, self.f_index(r), [(self.f_index(r), -p)])
        for ka, a in enumerate(pos):
            for kb, b in enumerate(pos):
                s = tuple(x + y for x, y in zip(a, b))
                if kb > ka and s in self.root_index:
                    eps = _asym(rs, a, b)
                    put(ka, kb, [(self.e_index(s), eps)])
                    put(self.f_index(a), self.f_index(b), [(self.f_index(s), -eps)])
                # [e_a, f_b]
                fa = self.f_index(b)
                if a == b:
                    put(ka, fa, [(self.h_index(i + 1), c) for i, c in enumerate(a) if c])
                else:
                    d = tuple(x - y for x, y in zip(a, b))
                    if d in rs.root_set:
                        eps = _asym(rs, a, b)
                        if d in self.root_index:
                            put(ka, fa, [(self.e_index(d), -eps)])
                        else:
                            put(ka, fa, [(self.f_index(tuple(-x for x in d)), eps)])
        self._table = table

        form: dict[tuple[int, int], int] = {}
        for k in range(N):
            form[(k, self.f_index(pos[k]))] = 1
            form[(self.f_index(pos[k]), k)] = 1
        for i in range(n):
            for j in range(n):
                if rs.cartan[i][j]:
                    form[(N + i, N + j)] = rs.cartan[i][j]
        self._form = form

    def bracket_basis(self, a: int, b: int) -> tuple:
        return self._table[a].get(b, ())

    def bracket(self, x: dict, y: dict) -> Vec:
        if isinstance(x, Vec):
            _same(x, y)
        out: dict = {}
        table = self._table
        for a, ca in x.items():
            row = table[a]
            for b, cb in y.items():
                terms = row.get(b)
                if terms:
                    cab = ca * cb
                    for c, v in terms:
                        w = cab * v
                        cur = out.get(c)
                        if cur is None:
                            out[c] = w
                        else:
                            s = cur + w
                            if s.is_zero():
                                del out[c]
                            else:
                                out[c] = s
        return Vec(self, out)

    def form_basis(self, a: int, b: int) -> int:
        return self._form.get((a, b), 0)

    def form(self, x: dict, y: dict) -> Scalar:
        total = ZERO
        for a, ca in x.items():
            for b, cb in y.items():
                v = self._form.get((a, b))
                if v:
                    total = total + ca * cb * v
        return total

    # checks -------------------------------------------------------------
    def check_jacobi(self) -> list:
        bad = []
        d = self.dim
        for a in range(d):
            ea = self.basis(a)
            for b in range(a + 1, d):
                eb = self.basis(b)
                ab = self.bracket(ea, eb)
                for c in range(b + 1, d):
                    ec = self.basis(c)
                    tot = add_into(dict(self.bracket(ab, ec)), self.bracket(self.bracket(eb, ec), ea))
                    add_into(tot, self.bracket(self.bracket(ec, ea), eb))
                    if tot:
                        bad.append((a, b, c))
        return bad

    def check_form(self) -> list:
        bad = []
        d = self.dim
        for a in range(d):
            for b in range(d):
                if self._form.get((a, b), 0) != self._form.get((b, a), 0):
                    bad.append(("sym", a, b))
        for a in range(d):
            for b in range(d):
                xy = self.bracket(self.basis(a), self.basis(b))
                for c in range(d):
                    lhs = self.form(xy, self.basis(c))
                    rhs = self.form(self.basis(a), self.bracket(self.basis(b), self.basis(c)))
                    if lhs != rhs:
                        bad.append(("inv", a, b, c))
        for r in self.roots.positive:
            if self.roots.pair(r, r) != 2:
                bad.append(("norm", r))
        return bad

    def render(self, x: dict) -> str:
        if not x:
            return "0"
        parts = []
        for k in sorted(x):
            c = x[k]
            parts.append(f"({c})*{self.basis_name(k)}")
        return " + ".join(parts)

    def structure_csv(self) -> str:
        """Nonzero structure constants [b_a, b_b] = sum c b_c as CSV rows."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["a", "b", "c", "coefficient"])
        for a in range(self.dim):
            for b in sorted(self._table[a]):
                for c, v in self._table[a][b]:
                    w.writerow([self.basis_name(a), self.basis_name(b), self.basis_name(c), v])
        return buf.getvalue()


@lru_cache(maxsize=None)
def _build_simple_cached(kind: str, rank: int) -> SimpleLie:
    g = SimpleLie(RootSystem.build(kind, rank))
    if len(g.roots.positive) != g.roots.expected_positive_count():
        raise LieAlgebraError("root enumeration failed")
    return g


def build_simple(kind: str, rank: int, verify: bool = False) -> SimpleLie:
    """Construct A_n or D_n; ``verify`` runs the exhaustive Jacobi/form checks."""
    if not isinstance(rank, int) or rank < 1:
        raise LieAlgebraError(f"invalid rank {rank!r}")
    g = _build_simple_cached(kind, rank)
    if verify:
        bad = g.check_jacobi()
        if bad:
            raise LieAlgebraError(f"Jacobi fails on {bad[:3]}")
        bad = g.check_form()
        if bad:
            raise LieAlgebraError(f"form check fails on {bad[:3]}")
    return g


# ---------------------------------------------------------------------------
# diagram automorphisms


@dataclass(frozen=True)
class DiagramAut:
    """Signed basis permutation induced by a Dynkin diagram symmetry."""

    g: SimpleLie
    perm: tuple  # node permutation, perm[i-1] = mu(i)
    order: int
    target: tuple  # basis index image
    sign: tuple  # +-1 per basis index

    def apply(self, x: dict, power: int = 1) -> Vec:
        power %= self.order
        out = dict(x)
        for _ in range(power):
            out = {self.target[k]: (v if self.sign[k] == 1 else -v) for k, v in out.items()}
        return Vec(self.g, out)

    def node(self, i: int, power: int = 1) -> int:
        for _ in range(power % self.order):
            i = self.perm[i - 1]
        return i

    def root(self, root: Root) -> Root:
        out = [0] * len(root)
        for i, c in enumerate(root):
            out[self.perm[i] - 1] += c
        return tuple(out)


def build_aut(g: SimpleLie, perm, verify: bool = True) -> DiagramAut:
    perm = tuple(perm)
    n = g.rank
    if sorted(perm) != list(range(1, n + 1)):
        raise LieAlgebraError("not a permutation of the nodes")
    a = g.roots.cartan
    for i in range(n):
        for j in range(n):
            if a[perm[i] - 1][perm[j] - 1] != a[i][j]:
                raise LieAlgebraError("permutation is not a diagram symmetry")
    order = 1
    p = perm
    while p != tuple(range(1, n + 1)):
        p = tuple(perm[x - 1] for x in p)
        order += 1

    def mroot(r):
        out = [0] * n
        for i, c in enumerate(r):
            out[perm[i] - 1] += c
        return tuple(out)

    rs = g.roots
    sgn: dict[Root, int] = {}
    for r in rs.positive:
        if sum(r) == 1:
            sgn[r] = 1
            continue
        for i in range(n):
            if r[i]:
                beta = tuple(x - (j == i) for j, x in enumerate(r))
                if beta in g.root_index:
                    ai = rs.simple_root(i + 1)
                    sgn[r] = _asym(rs, ai, beta) * sgn[beta] * _asym(rs, mroot(ai), mroot(beta))
                    break
    target = [0] * g.dim
    sign = [1] * g.dim
    for r in rs.positive:
        target[g.e_index(r)] = g.e_index(mroot(r))
        target[g.f_index(r)] = g.f_index(mroot(r))
        sign[g.e_index(r)] = sign[g.f_index(r)] = sgn[r]
    for i in range(1, n + 1):
        target[g.h_index(i)] = g.h_index(perm[i - 1])
    mu = DiagramAut(g, perm, order, tuple(target), tuple(sign))
    if verify:
        bad = check_aut(mu)
        if bad:
            raise LieAlgebraError(f"automorphism check failed: {bad[:3]}")
    return mu


def check_aut(mu: DiagramAut) -> list:
    g = mu.g
    bad = []
    for a in range(g.dim):
        x = g.basis(a)
        if mu.apply(x, mu.order) != x:
            bad.append(("order", a))
        for b in range(g.dim):
            y = g.basis(b)
            if mu.apply(g.bracket(x, y)) != g.bracket(mu.apply(x), mu.apply(y)):
                bad.append(("bracket", a, b))
            if g.form_basis(a, b) != g.form(mu.apply(x), mu.apply(y)):
                bad.append(("form", a, b))
    return bad


# ---------------------------------------------------------------------------
# twisting data


@dataclass(frozen=True)
class TwistConfig:
    kind: str
    rank: int

    @property
    def label(self) -> str:
        return f"{self.kind}{self.rank}"

    @property
    def family(self) -> str:
        """One of 'A_even', 'A_odd', 'D', 'D4'."""
        if self.kind == "A":
            return "A_even" if self.rank % 2 == 0 else "A_odd"
        return "D4" if self.rank == 4 and self.r == 3 else "D"

    @property
    def r(self) -> int:
        return 3 if (self.kind == "D" and self.rank == 4 and self._triality) else 2

    _triality: bool = True

    @property
    def ell(self) -> int:
        if self.kind == "A":
            return (self.rank + 1) // 2 if self.rank % 2 else self.rank // 2
        if self.r == 3:
            return 2
        return self.rank - 1

    def perm(self) -> tuple:
        n = self.rank
        if self.kind == "A":
            return tuple(n + 1 - i for i in range(1, n + 1))
        if self.r == 3:
            return (3, 2, 4, 1)
        return tuple(range(1, n - 1)) + (n, n - 1)

    def validate(self):
        if self.kind == "A":
            if self.rank < 2:
                raise LieAlgebraError("twisting needs A_n with n >= 2")
        elif self.kind == "D":
            if self.rank < 4:
                raise LieAlgebraError("twisting needs D_n with n >= 4")
        else:
            raise LieAlgebraError(f"unsupported type {self.kind!r}")


def twist_config(kind: str, rank: int, r: int | None = None) -> TwistConfig:
    """Standard twisting data; D_4 defaults to triality (r = 3), r = 2 selects D_4^(2)."""
    triality = kind == "D" and rank == 4 and r != 2
    cfg = TwistConfig(kind, rank, triality)
    cfg.validate()
    if r is not None and r != cfg.r:
        raise LieAlgebraError(f"{kind}{rank} has no diagram automorphism of order {r} in this labeling")
    return cfg


class GradedPieces:
    """Eigenspace decomposition of g under a diagram automorphism, plus the
    Chevalley data of g_0 and the theta elements."""

    def __init__(self, cfg: TwistConfig):
        self.cfg = cfg
        self.g = build_simple(cfg.kind, cfg.rank)
        self.mu = build_aut(self.g, cfg.perm())
        self.r = self.mu.order
        self.xi = root_of_unity(self.r)
        self.family = cfg.family
        self.ell = cfg.ell
        g = self.g
        # I_0 representatives (nodes of the original diagram)
        self.I0 = tuple(range(1, self.ell + 1))
        self.rep = {i: i for i in self.I0}
        self.orbit_of_node = {}
        for i in range(1, g.rank + 1):
            orb = sorted({self.mu.node(i, k) for k in range(self.r)})
            self.orbit_of_node[i] = min(orb)
        # node -> I_0 index of its restriction
        self.restrict_node = {i: self.orbit_of_node[i] for i in range(1, g.rank + 1)}
        self._build_pieces()
        self._build_g0()

    # restriction of roots to h_0 ------------------------------------------
    def restrict(self, root: Root) -> tuple:
        out = [0] * len(self.I0)
        for i, c in enumerate(root):
            if c:
                out[self.restrict_node[i + 1] - 1] += c
        return tuple(out)

    @cached_property
    def gram0(self) -> tuple:
        """Form on the restricted simple roots alpha_i (i in I_0), as Fractions."""
        g, r = self.g, self.r
        avg = []
        for i in self.I0:
            v = [Fraction(0)] * g.rank
            for k in range(r):
                v[self.mu.node(i, k) - 1] += Fraction(1, r)
            avg.append(v)
        a = g.roots.cartan
        return tuple(
            tuple(sum(x[p] * a[p][q] * y[q] for p in range(g.rank) for q in range(g.rank)) for y in avg) for x in avg
        )

    def pair0(self, x, y) -> Fraction:
        G = self.gram0
        n = len(self.I0)
        return sum(Fraction(x[i]) * G[i][j] * y[j] for i in range(n) for j in range(n) if x[i] and y[j])

    @cached_property
    def cartan0(self) -> tuple:
        G = self.gram0
        n = len(self.I0)
        return tuple(tuple(int(2 * G[i][j] / G[i][i]) for j in range(n)) for i in range(n))

    # eigenspaces ------------------------------------------------------------
    def project(self, x: dict, s: int) -> Vec:
        """r * (component of x in g_s) = sum_k xi^{-sk} mu^k(x)."""
        out: dict = {}
        cur = dict(x)
        for k in range(self.r):
            add_into(out, cur, self.xi ** (-s * k))
            cur = self.mu.apply(cur)
        return Vec(self.g, out)

    def _build_pieces(self):
        g = self.g
        seen = set()
        pieces = {s: [] for s in range(self.r)}
        weights = {s: [] for s in range(self.r)}
        cartan = {s: [] for s in range(self.r)}
        for idx in range(g.dim):
            if idx in seen:
                continue
            orbit = []
            j = idx
            while j not in orbit:
                orbit.append(j)
                j = self.mu.target[j]
            seen.update(orbit)
            for s in range(self.r):
                v = self.project(g.basis(idx), s)
                if v:
                    pieces[s].append(v)
                    if g.kind_of(idx) == "h":
                        cartan[s].append(v)
                        weights[s].append((0,) * len(self.I0))
                    else:
                        weights[s].append(self.restrict(g.root_of(idx)))
        self.pieces = pieces
        self.piece_weights = weights
        self.cartan_pieces = cartan

    def dims(self) -> tuple:
        return tuple(len(self.pieces[s]) for s in range(self.r))

    def cartan_dims(self) -> tuple:
        return tuple(len(self.cartan_pieces[s]) for s in range(self.r))

    def degree_of(self, x: dict) -> int | None:
        """s if mu(x) = xi^s x, else None."""
        if not x:
            return None
        mx = self.mu.apply(x)
        for s in range(self.r):
            if all(mx.get(k, ZERO) == self.xi**s * v for k, v in x.items()) and len(mx) == len(x):
                return s
        return None

    # g_0 Chevalley data ---------------------------------------------------
    def orbit_sum(self, x: dict) -> Vec:
        return self.project(x, 0)

    def _build_g0(self):
        g = self.g
        e0, f0, h0 = {}, {}, {}
        for i in self.I0:
            fixed = self.mu.node(i) == i
            if fixed:
                e0[i], f0[i], h0[i] = g.e(i), g.f(i), g.h(i)
            elif self.family == "A_even" and i == self.ell:
                s2 = sqrt2()
                e0[i] = s2 * (g.e(i) + g.e(i + 1))
                f0[i] = s2 * (g.f(i) + g.f(i + 1))
                h0[i] = 2 * (g.h(i) + g.h(i + 1))
            else:
                e0[i], f0[i], h0[i] = self.orbit_sum(g.e(i)), self.orbit_sum(g.f(i)), self.orbit_sum(g.h(i))
        self.e0, self.f0, self.h0 = e0, f0, h0

    def check_g0_chevalley(self) -> list:
        g = self.g
        bad = []
        A = self.cartan0
        for i in self.I0:
            for j in self.I0:
                br = g.bracket(self.e0[i], self.f0[j])
                want = self.h0[i] if i == j else g.vec()
                if br != want:
                    bad.append(("ef", i, j))
                if g.bracket(self.h0[i], self.e0[j]) != A[i - 1][j - 1] * self.e0[j]:
                    bad.append(("he", i, j))
                if g.bracket(self.h0[i], self.f0[j]) != (-A[i - 1][j - 1]) * self.f0[j]:
                    bad.append(("hf", i, j))
        return bad

    # theta elements -------------------------------------------------------
    @cached_property
    def theta0(self) -> Root:
        n = self.g.rank
        fam = self.family
        if fam == "A_even":
            k = n
        elif fam == "A_odd":
            k = 2 * self.ell - 2
        elif fam == "D":
            k = self.ell
        else:
            k = 3
        return tuple(int(i < k) for i in range(n))

    @cached_property
    def theta_upper(self) -> tuple:
        """theta^0 as a weight of h_0 (coordinates over alpha_i, i in I_0)."""
        return self.restrict(self.theta0)

    def theta_triple(self, j: int):
        """(e, f, h)^{(j)}_{theta_s}; undefined for A_{2l}."""
        if self.family == "A_even":
            raise LieAlgebraError("theta_s triples are not defined for A_{2l}")
        j %= self.r
        g = self.g
        e = g.e(self.theta0)
        f = g.f(self.theta0)
        h = g.h(self.theta0)
        out = []
        for x in (e, f, h):
            acc: dict = {}
            for i in range(self.r):
                add_into(acc, self.mu.apply(x, i), self.xi ** ((self.r - i) * j))
            out.append(Vec(g, acc))
        return tuple(out)

    def theta_e(self, j: int) -> Vec:
        return self.theta_triple(j)[0]

    def theta_f(self, j: int) -> Vec:
        return self.theta_triple(j)[1]

    def theta_h(self, j: int) -> Vec:
        return self.theta_triple(j)[2]

    def h_theta_sum(self) -> Vec:
        """sum_j mu^j(h'_{theta_0})."""
        return self.orbit_sum(self.g.h(self.theta0))


@lru_cache(maxsize=None)
def grade(kind: str, rank: int, r: int | None = None) -> GradedPieces:
    return GradedPieces(twist_config(kind, rank, r))


def theta_elements(gp: GradedPieces) -> dict:
    """All triples {(e, f, h)^{(j)}_{theta_s} : 0 <= j < r}."""
    return {j: gp.theta_triple(j) for j in range(gp.r)}


def check_theta_table(gp: GradedPieces) -> list:
    """Bracket and pairing table of the theta triples."""
    g, r = gp.g, gp.r
    T = theta_elements(gp)
    bad = []
    for i in range(r):
        for j in range(r):
            ei, fi, hi = T[i]
            ej, fj, hj = T[j]
            k = (i + j) % r
            if g.bracket(ei, fj) != T[k][2]:
                bad.append(("ef", i, j))
            if g.bracket(hi, ej) != 2 * T[k][0]:
                bad.append(("he", i, j))
            if g.bracket(hi, fj) != -2 * T[k][1]:
                bad.append(("hf", i, j))
            if 1 <= i and 1 <= j:
                for x, y, tag in ((ei, ej, "ee"), (fi, fj, "ff"), (hi, hj, "hh")):
                    if g.bracket(x, y):
                        bad.append((tag, i, j))
            want = r if i == j else 0
            if g.form(T[(r - i) % r][0], fj) != want:
                bad.append(("pair", i, j))
    return bad
