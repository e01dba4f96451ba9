"""Command-line runner: ``toroidal-weyl verify <suite>`` and ``toroidal-weyl characters``.

Exit codes: 0 all checks pass, 1 a check failed (witness in the report),
2 invalid configuration, 3 internal error.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import traceback
from dataclasses import asdict, dataclass
from pathlib import Path

from .liealg import LieAlgebraError, twist_config

SCHEMA = 1
SUITES = ("presentation", "rp1", "garland", "vertex-identities", "central-assignments", "characters")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    kind: str = "A"
    rank: int = 3
    n: int = 2
    box: int = 1
    depth: int | None = None
    pbox: int = 3
    m1: tuple = (-2, 2)
    emit: str = "json"
    out: str | None = None
    seed: int = 0
    jobs: int = 1
    force: bool = False

    @property
    def r(self) -> int:
        return twist_config(self.kind, self.rank).r

    def validate(self) -> "RunConfig":
        try:
            twist_config(self.kind, self.rank)
        except LieAlgebraError as exc:
            raise ConfigError(str(exc)) from exc
        if self.n < 2:
            raise ConfigError("--n must be at least 2")
        if self.box < 0 or self.pbox < 0 or (self.depth is not None and self.depth < 0):
            raise ConfigError("--box, --pbox and --depth must be nonnegative")
        if self.m1[0] > self.m1[1]:
            raise ConfigError("--m1 range is empty")
        if self.jobs < 1:
            raise ConfigError("--jobs must be positive")
        if self.emit not in ("json", "csv"):
            raise ConfigError("--emit is json or csv")
        return self

    def echo(self) -> dict:
        d = asdict(self)
        d["m1"] = list(self.m1)
        d["r"] = self.r
        for k in ("out", "force", "jobs", "emit"):  # do not affect results
            d.pop(k)
        return d


def content_hash(obj) -> str:
    """git blob hash of the canonical JSON text."""
    data = json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha1(b"blob %d\0" % len(data) + data).hexdigest()


# ---------------------------------------------------------------------------
# suites


def _needs_theta(cfg: RunConfig, suite: str):
    if twist_config(cfg.kind, cfg.rank).family == "A_even":
        raise ConfigError(f"suite {suite} is not defined for A_{{2l}}")


def run_presentation(cfg: RunConfig) -> dict:
    from .presentation import Presentation, spanning_check, table_findings, verify_presentation

    rep = verify_presentation(cfg.kind, cfg.rank, cfg.n, cfg.box, jobs=cfg.jobs)
    rep["spanning"] = spanning_check(Presentation(cfg.kind, cfg.rank, cfg.n))
    rep["findings"] = table_findings(cfg.kind, cfg.rank, cfg.n, min(cfg.box, 1))
    rep["ok"] = rep["ok"] and rep["spanning"]["ok"]
    return rep


def run_rp1(cfg: RunConfig) -> dict:
    from .autos import ThetaAutos, check_automorphism, verify_prom5_brackets, verify_rp1

    _needs_theta(cfg, "rp1")
    m1 = range(cfg.m1[0], cfg.m1[1] + 1)
    rep = verify_rp1(cfg.kind, cfg.rank, cfg.n, m1, cfg.box)
    rep["brackets"] = verify_prom5_brackets(cfg.kind, cfg.rank, cfg.n, m1, cfg.box)
    A = ThetaAutos(cfg.kind, cfg.rank, cfg.n)
    rep["automorphisms"] = {
        "psi0": check_automorphism(A.psi0, A.T, 100, cfg.seed),
        "psi_theta": check_automorphism(A.psi_theta, A.T, 100, cfg.seed),
    }
    rep["ok"] = rep["ok"] and rep["brackets"]["ok"] and all(x["ok"] for x in rep["automorphisms"].values())
    return rep


def run_garland(cfg: RunConfig) -> dict:
    from .envelope import verify_garland

    top = cfg.depth or 3
    checks = [verify_garland(j) for j in range(1, top + 1)]
    printed = [verify_garland(j, form="printed") for j in range(1, top + 1)]
    return {"identities": checks, "findings": [p for p in printed if not p["ok"]],
            "ok": all(c["ok"] for c in checks)}


def run_vertex(cfg: RunConfig) -> dict:
    from .vertex import (borcherds_spot_checks, check_translation, check_vacuum_axioms, gamma1_lattice,
                         gamma_lattice, low_degree_states, verify_nproduct_table)

    table = verify_nproduct_table(cfg.n, cfg.box)
    lat, lat1 = gamma_lattice(cfg.n), gamma1_lattice(cfg.n)
    b1 = borcherds_spot_checks(lat1, 50, cfg.seed)
    b = borcherds_spot_checks(lat, 50, cfg.seed)
    axioms = {
        "cocycle": lat.check_cocycle() and lat1.check_cocycle(),
        "vacuum": check_vacuum_axioms(lat, low_degree_states(lat)) and check_vacuum_axioms(lat1, low_degree_states(lat1)),
        "translation": check_translation(lat) and check_translation(lat1),
    }
    ok = b1["ok"] and b["ok"] and all(axioms.values())
    return {"table": table, "borcherds": [b1, b], "axioms": axioms, "ok": ok}


def run_central(cfg: RunConfig) -> dict:
    from .vertex import verify_central_assignments

    return verify_central_assignments(cfg.n, cfg.r, cfg.depth if cfg.depth is not None else 3, cfg.box)


def run_characters(cfg: RunConfig) -> dict:
    from .characters import adjudicate_char, fock_vs_product, imaginary_mults
    from .weyl import verify_targets

    _needs_theta(cfg, "characters")
    D = cfg.depth if cfg.depth is not None else 6
    fock = [fock_vs_product(n, 10) for n in (2, 3)]
    adj = adjudicate_char(cfg.kind, cfg.rank, D)
    targets = verify_targets(cfg.kind, cfg.rank, cfg.n, D)
    mults = list(imaginary_mults(cfg.kind, cfg.rank))
    return {"fock_vs_product": fock, "imaginary_mults": mults, "adjudication": adj, "targets": targets,
            "ok": all(f["ok"] for f in fock) and adj["ok"] and targets["ok"]}


RUNNERS = {
    "presentation": run_presentation,
    "rp1": run_rp1,
    "garland": run_garland,
    "vertex-identities": run_vertex,
    "central-assignments": run_central,
    "characters": run_characters,
}


def run_suite(name: str, cfg: RunConfig) -> dict:
    if name == "all":
        parts = {}
        for s in SUITES:
            if s in ("rp1", "characters") and twist_config(cfg.kind, cfg.rank).family == "A_even":
                parts[s] = {"skipped": "not defined for A_{2l}", "ok": True}
                continue
            parts[s] = RUNNERS[s](cfg)
        return {"suites": parts, "ok": all(p["ok"] for p in parts.values())}
    return RUNNERS[name](cfg)


# ---------------------------------------------------------------------------
# output


def _write(text: str, cfg: RunConfig):
    if cfg.out is None:
        sys.stdout.write(text)
        return
    path = Path(cfg.out)
    if path.exists() and not cfg.force:
        raise ConfigError(f"{path} exists; pass --force to overwrite")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def report(command: str, cfg: RunConfig, results: dict) -> dict:
    echo = cfg.echo()
    return {"schema": SCHEMA, "command": command, "config": echo,
            "input_hash": content_hash({"command": command, "config": echo}),
            "ok": bool(results.get("ok")), "results": results}


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False, default=str) + "\n"


def character_table(cfg: RunConfig) -> tuple:
    """(report dict, csv text) for the ``characters`` command."""
    from .characters import adjudicate_char
    from .weyl import weyl_character_target

    _needs_theta(cfg, "characters")
    D = cfg.depth if cfg.depth is not None else 6
    q1, multi = weyl_character_target(cfg.kind, cfg.rank, cfg.n, D, cfg.pbox)
    adj = adjudicate_char(cfg.kind, cfg.rank, D)
    rows = [{"weight": list(l), "m": m, "p": list(p), "coefficient": c} for l, m, p, c in multi.rows()]
    res = {"adjudication": adj, "verdict": adj["verdict"], "q1_coefficients": q1.specialize(lam=True).q1_coeffs(),
           "table": rows, "ok": adj["ok"]}
    return res, multi.to_csv()


# ---------------------------------------------------------------------------
# argument parsing


def _m1(text: str) -> tuple:
    try:
        a, b = text.split("..")
        return int(a), int(b)
    except ValueError as exc:
        raise argparse.ArgumentTypeError("expected a..b, e.g. -2..2") from exc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="toroidal-weyl", description="exact verification of twisted toroidal identities")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", dest="kind", default="A", help="Cartan type, A or D")
    common.add_argument("--rank", type=int, default=3)
    common.add_argument("--n", type=int, default=2, help="number of loop variables")
    common.add_argument("--box", type=int, default=1, help="exponent box radius")
    common.add_argument("--depth", type=int, default=None, help="degree / truncation cap (suite default if omitted)")
    common.add_argument("--pbox", type=int, default=3, help="cap on |p_i| for multivariate characters")
    common.add_argument("--m1", type=_m1, default=(-2, 2), help="t_1 exponent range a..b")
    common.add_argument("--emit", choices=("json", "csv"), default="json")
    common.add_argument("--out", default=None, help="output file (stdout if omitted)")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled property checks")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--force", action="store_true", help="overwrite an existing --out file")
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=SUITES + ("all",))
    sub.add_parser("characters", parents=[common], help="emit character tables and the adjudication")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        cfg = RunConfig(args.kind, args.rank, args.n, args.box, args.depth, args.pbox, tuple(args.m1),
                        args.emit, args.out, args.seed, args.jobs, args.force).validate()
        if cfg.out is not None and Path(cfg.out).exists() and not cfg.force:
            raise ConfigError(f"{cfg.out} exists; pass --force to overwrite")
        if args.command == "verify":
            results = run_suite(args.suite, cfg)
            rep = report(f"verify {args.suite}", cfg, results)
            _write(_dump(rep), cfg)
        else:
            results, csv_text = character_table(cfg)
            rep = report("characters", cfg, results)
            _write(csv_text if cfg.emit == "csv" else _dump(rep), cfg)
        return 0 if rep["ok"] else 1
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except Exception:  # internal invariant breach
        traceback.print_exc()
        return 3


if __name__ == "__main__":
    sys.exit(main())
