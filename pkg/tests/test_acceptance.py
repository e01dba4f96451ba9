"""Acceptance criteria 1-7, one PASS/FAIL line each.

Run under pytest (lines appear in the terminal summary and on stdout with -s)
or directly: ``python3 tests/test_acceptance.py``.
"""
from __future__ import annotations

import json
import random
import sys
import tempfile
import time
from pathlib import Path

import pytest

from toroidal_weyl import autos, characters, envelope, presentation, vertex
from toroidal_weyl.cli import main as cli_main
from toroidal_weyl.scalar import Scalar
from toroidal_weyl.toroidal import canonical_central, twisted_ambient

SWEEP = [("A", 3), ("A", 5), ("D", 4), ("D", 5)]


def criterion_1():
    parts = []
    ok = True
    for kind, rank in SWEEP + [("A", 4)]:
        for n in (2, 3):
            t = time.perf_counter()
            rep = presentation.verify_presentation(kind, rank, n, radius=1)
            dt = time.perf_counter() - t
            ok &= rep["ok"] and dt <= 120
            parts.append(f"{rep['algebra']} n={n} {rep['passed']}/{rep['checked']} {dt:.1f}s")
    return ok, "; ".join(parts)


def criterion_2():
    ok = True
    parts = []
    for kind, rank in (("A", 3), ("D", 4)):
        for n in (2, 3):
            rep = autos.verify_rp1(kind, rank, n, range(-2, 3), 1)
            ok &= rep["ok"]
            counts = ", ".join(f"{x['identity']} {x['checked']}" for x in rep["identities"])
            parts.append(f"{rep['algebra']} n={n}: {counts}")
    return ok, "; ".join(parts)


def criterion_3():
    reps = [envelope.verify_garland(j) for j in (1, 2, 3)]
    ok = all(r["ok"] for r in reps)
    return ok, "j=1..3 both families " + ("hold" if ok else "FAIL") + " (divided powers)"


def criterion_4():
    ok = True
    parts = []
    with tempfile.TemporaryDirectory() as tmp:
        for n in (2, 3):
            out = Path(tmp) / f"v{n}.json"
            code = cli_main(["verify", "vertex-identities", "--n", str(n), "--box", "1", "--out", str(out)])
            rep = json.loads(out.read_text())["results"]
            lines = rep["table"]["lines"]
            checked = sum(l["checked"] for l in lines)
            triples = sum(b["triples"] for b in rep["borcherds"])
            ok &= code == 0 and all(b["ok"] for b in rep["borcherds"]) and all(rep["axioms"].values())
            ok &= all(l["checked"] > 0 for l in lines) and all(b["triples"] >= 50 for b in rep["borcherds"])
            parts.append(f"n={n}: {checked} instances, {len(rep['table']['discrepancies'])} printed-line "
                         f"discrepancies reported, Borcherds {triples} triples ok, exit {code}")
    return ok, "; ".join(parts)


def criterion_5():
    ok = True
    parts = []
    for n, r in ((2, 2), (3, 2)):
        rep = vertex.verify_central_assignments(n, r, D=3)
        ok &= rep["ok"]
        parts.append(f"n={n}: {rep['states']} states, commute/derivation/Kähler "
                     f"{rep['central_commute']['ok']}/{rep['derivations']['ok']}/{rep['kahler']['ok']}")
    return ok, "; ".join(parts)


def criterion_6():
    t = time.perf_counter()
    fock = all(characters.fock_vs_product(n, 10)["ok"] for n in (2, 3))
    mults = (characters.imaginary_mults("A", 3) == (2, 1) and characters.imaginary_mults("D", 5) == (4, 1)
             and characters.imaginary_mults("D", 4) == (2, 1, 1))
    verdicts = {}
    full_tables = True
    for kind, rank in (("A", 3), ("D", 4)):
        rep = characters.adjudicate_char(kind, rank, 6)
        verdicts[rep["algebra"]] = rep["verdict"]
        full_tables &= len(rep["table"]) == 7
    dt = time.perf_counter() - t
    ok = fock and mults and full_tables and all(v != "mismatch" for v in verdicts.values()) and dt <= 120
    return ok, f"fock d<=10 {fock}, mults {mults}, verdicts {verdicts}, {dt:.1f}s"


def criterion_7():
    ok = True
    parts = []
    for kind, rank in SWEEP + [("A", 4)]:
        T = twisted_ambient(kind, rank, 2)
        rng = random.Random(11)
        bad = 0
        for _ in range(200):
            x, y, z = (autos.random_homogeneous(T, rng) for _ in range(3))
            tot = T.bracket(T.bracket(x, y), z) + T.bracket(T.bracket(y, z), x) + T.bracket(T.bracket(z, x), y)
            bad += not tot.is_zero()
        ok &= bad == 0
        parts.append(f"Jacobi {kind}{rank} 200 ({bad} bad)")
    for kind, rank in SWEEP:
        A = autos.ThetaAutos(kind, rank, 2)
        a = autos.check_automorphism(A.psi0, A.T, 100, seed=0)["ok"]
        b = autos.check_automorphism(A.psi_theta, A.T, 100, seed=1)["ok"]
        ok &= a and b
        parts.append(f"Ψ0/Ψθs {kind}{rank} 100 pairs {a}/{b}")
    rng = random.Random(5)
    idem = True
    for _ in range(300):
        raw = {}
        for _ in range(rng.randint(1, 6)):
            key = (rng.randint(1, 3), tuple(rng.randint(-2, 2) for _ in range(3)))
            raw[key] = Scalar.of(rng.randint(-3, 3))
        raw = {k: v for k, v in raw.items() if not v.is_zero()}
        once = canonical_central(raw, 3)
        idem &= canonical_central(once, 3) == once
    ok &= idem
    parts.append(f"canonical form idempotent on 300 samples {idem}")
    return ok, "; ".join(parts)


CRITERIA = {
    1: ("presentation sweep", criterion_1),
    2: ("Psi_0 Psi_theta_s lemma and claims", criterion_2),
    3: ("Garland identities", criterion_3),
    4: ("vertex n-th product table", criterion_4),
    5: ("central/derivation assignments", criterion_5),
    6: ("character pipeline", criterion_6),
    7: ("structural properties", criterion_7),
}


def run_criterion(k: int) -> tuple:
    name, fn = CRITERIA[k]
    t = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # report, then fail
        ok, detail = False, f"error: {exc!r}"
    line = f"criterion {k} [{'PASS' if ok else 'FAIL'}] {name} ({time.perf_counter() - t:.1f}s): {detail}"
    return ok, line


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    from conftest import ACCEPTANCE_LINES

    ok, line = run_criterion(k)
    ACCEPTANCE_LINES[k] = line
    print(line)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(k) for k in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
