import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from toroidal_weyl.autos import random_homogeneous
from toroidal_weyl.scalar import Scalar
from toroidal_weyl.toroidal import canonical_central, twisted_ambient

ALGEBRAS = [("A", 3), ("A", 4), ("A", 5), ("D", 4), ("D", 5)]


@pytest.mark.parametrize("kind,rank", ALGEBRAS)
def test_jacobi_random_triples(kind, rank):
    T = twisted_ambient(kind, rank, 2)
    rng = random.Random(7)
    for _ in range(200):
        x, y, z = (random_homogeneous(T, rng) for _ in range(3))
        tot = T.bracket(T.bracket(x, y), z) + T.bracket(T.bracket(y, z), x) + T.bracket(T.bracket(z, x), y)
        assert tot.is_zero()


@pytest.mark.parametrize("kind,rank", [("A", 3), ("D", 4)])
def test_antisymmetry_and_twisted_closure(kind, rank):
    T = twisted_ambient(kind, rank, 3)
    rng = random.Random(1)
    for _ in range(60):
        x, y = random_homogeneous(T, rng), random_homogeneous(T, rng)
        b = T.bracket(x, y)
        assert (b + T.bracket(y, x)).is_zero()
        assert T.in_twisted(b)


exps = st.tuples(*[st.integers(-2, 2)] * 3)
raw_central = st.dictionaries(st.tuples(st.integers(1, 3), exps), st.integers(-3, 3).filter(bool), max_size=6)


@given(raw_central)
def test_central_canonical_form_idempotent(raw):
    raw = {k: Scalar.of(v) for k, v in raw.items()}
    once = canonical_central(raw, 3)
    assert canonical_central(once, 3) == once


@given(raw_central)
def test_central_canonical_form_respects_kahler(raw):
    # adding any multiple of sum_i s_i t^s K_i does not change the canonical form
    raw = {k: Scalar.of(v) for k, v in raw.items()}
    s = (1, -2, 1)
    bumped = dict(raw)
    for i in range(3):
        key = (i + 1, s)
        bumped[key] = bumped.get(key, Scalar.of(0)) + Scalar.of(5 * s[i])
    bumped = {k: v for k, v in bumped.items() if not v.is_zero()}
    assert canonical_central(bumped, 3) == canonical_central(raw, 3)


def test_derivation_grading():
    T = twisted_ambient("A", 3, 2)
    x = T.loop(T.gp.pieces[1][0], (3, -1))
    assert T.bracket(T.d(1), x) == x.scale(3)
    assert T.bracket(T.d(2), x) == x.scale(-1)
