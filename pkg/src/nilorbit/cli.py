"""Command line interface: ``nilorbit <command> --type T [options]``.

Exit codes: 0 when every check passes, 1 on a mathematical mismatch,
2 on a usage or configuration error.  JSON output always carries
``schema: 1`` and the seed actually used.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from typing import Optional

from sympy import isprime

from . import golden, linalg
from .analysis import analyze_orbit, theorem_suite
from .chevalley import build_algebra, structure_constants_json
from .classify import cached_orbits, enumerate_orbits
from .covariants import CovariantError, table1_report
from .rootsys import RootSystemError, SimpleType, build_root_system, is_theta_fundamental
from .special import bigrading, special_suite

SCHEMA = 1
EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

# default type lists when --type is omitted
THEOREM_TYPES = ["A1", "A2", "A3", "A4", "A5", "A6", "A7", "B2", "B3", "B4",
                 "C2", "C3", "C4", "D4", "G2", "F4", "E6"]
SLOW_TYPES = ["E7", "E8"]
SPECIAL_TYPES = ["B3", "B4", "D4", "D5", "G2", "F4", "E6", "E7"]


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    stype: Optional[SimpleType]
    prime: int = linalg.DEFAULT_PRIME
    seed: int = 0
    trials: int = 3
    conj_rounds: int = 8
    numbering: str = "paper"
    fmt: str = "text"
    slow: bool = False

    def validate(self) -> None:
        if not isprime(self.prime):
            raise UsageError(f"--prime {self.prime} is not prime")
        try:
            linalg.check_prime(self.prime)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if self.stype is not None:
            dim = build_algebra(build_root_system(self.stype)).dim
            if self.prime <= 2 * dim:
                raise UsageError(f"--prime must exceed 2 dim g = {2 * dim}")
        if self.trials < 1 or self.conj_rounds < 1:
            raise UsageError("--trials and --conj-rounds must be positive")

    def header(self, command: str) -> dict:
        return {"schema": SCHEMA, "command": command,
                "type": str(self.stype) if self.stype else None,
                "prime": self.prime, "seed": self.seed, "numbering": self.numbering}


def _types(cfg: RunConfig, default: list[str]) -> list[str]:
    if cfg.stype is not None:
        return [str(cfg.stype)]
    return default + (SLOW_TYPES if cfg.slow else [])


def _require_type(cfg: RunConfig) -> SimpleType:
    if cfg.stype is None:
        raise UsageError("--type is required for this command")
    return cfg.stype


def _require_enumerable(st: SimpleType) -> None:
    if st.rank > 8:
        raise UsageError("orbit enumeration is limited to rank <= 8")


# ---------------------------------------------------------------- commands

def cmd_orbits(cfg: RunConfig) -> tuple[int, dict, str]:
    st = _require_type(cfg)
    _require_enumerable(st)
    alg = build_algebra(st)
    records = enumerate_orbits(alg, cfg.prime, cfg.seed, cfg.trials)
    from .analysis import index_of_centralizer, is_spherical
    for rec in records:
        rec.spherical = is_spherical(alg, rec, cfg.prime, cfg.seed, cfg.conj_rounds)
        if rec.height <= 3:
            rec.index_z = index_of_centralizer(alg, rec, cfg.prime, cfg.seed, cfg.trials)
    data = {**cfg.header("orbits"), "orbits": [r.to_json(cfg.numbering) for r in records]}
    lines = [f"{st}: {len(records)} nonzero nilpotent orbits (prime {cfg.prime}, seed {cfg.seed})",
             f"{'diagram':>12} {'partition':>18} {'dim':>5} {'height':>6} {'spherical':>9} {'index':>5}"]
    for r in records:
        labs = r.diagram.paper_labels() if cfg.numbering == "paper" else r.labels
        part = r.name() if r.partition is not None else "-"
        idx = "-" if r.index_z is None else str(r.index_z)
        lines.append(f"{''.join(map(str, labs)):>12} {part:>18} {r.dim_orbit:>5} "
                     f"{r.height:>6} {str(r.spherical):>9} {idx:>5}")
    return EXIT_OK, data, "\n".join(lines)


def _parse_orbit_spec(st: SimpleType, text: str, numbering: str):
    """Match a diagram ("0010") or a partition ("3,2,2,1", suffix I/II)."""
    text = text.strip()
    records = cached_orbits(str(st))
    if "," in text or text.startswith("("):
        m = re.fullmatch(r"\(?([\d,\s]+)\)?\s*(I{1,2})?", text)
        if not m:
            raise UsageError(f"cannot parse orbit {text!r}")
        part = tuple(sorted((int(x) for x in m.group(1).split(",") if x.strip()), reverse=True))
        variant = None if m.group(2) is None else len(m.group(2)) - 1
        hits = [r for r in records if r.partition == part
                and (variant is None or r.variant == variant)]
    else:
        if not re.fullmatch(r"[012]+", text) or len(text) != st.rank:
            raise UsageError(f"diagram must have {st.rank} labels in {{0,1,2}}")
        labs = tuple(int(c) for c in text)
        hits = [r for r in records
                if (r.diagram.paper_labels() if numbering == "paper" else r.labels) == labs]
    if not hits:
        raise UsageError(f"no nilpotent orbit matches {text!r} in {st}")
    return hits


def cmd_analyze(cfg: RunConfig, orbit: Optional[str]) -> tuple[int, dict, str]:
    st = _require_type(cfg)
    _require_enumerable(st)
    alg = build_algebra(st)
    records = (_parse_orbit_spec(st, orbit, cfg.numbering) if orbit
               else list(cached_orbits(str(st), cfg.prime, cfg.seed, cfg.trials)))
    reports = []
    bad = False
    lines = []
    for rec in records:
        rep = analyze_orbit(alg, rec, cfg.prime, cfg.seed, cfg.conj_rounds, cfg.trials)
        rep["diagram"] = list(rec.diagram.paper_labels() if cfg.numbering == "paper" else rec.labels)
        consistent = rep["structure_ok"] and rep["spherical"] == (rec.height <= 3)
        if rec.height <= 3:
            consistent = consistent and rep["index"] == st.rank
        if rep["odd_top_checks"] is not None:
            consistent = consistent and rep["odd_top_checks"]["ok"]
        rep["consistent"] = consistent
        bad |= not consistent
        reports.append(rep)
        lines.append(f"{rec.name(cfg.numbering):>18}  dim {rep['dim']:>4}  height {rep['height']}  "
                     f"spherical {rep['spherical']}  index {rep['index']}  "
                     f"z dims {rep['z_graded_dims']}  k dim {rep['k_dim']}"
                     + ("" if consistent else "  INCONSISTENT"))
    data = {**cfg.header("analyze"), "orbits": reports}
    return (EXIT_MISMATCH if bad else EXIT_OK), data, "\n".join(lines)


def cmd_table1(cfg: RunConfig) -> tuple[int, dict, str]:
    st = _require_type(cfg)
    _require_enumerable(st)
    alg = build_algebra(st)
    rows = []
    lines = [f"{st}: height-2 orbits, upper canonical strings and generator weights"]
    for rec in cached_orbits(str(st), cfg.prime, cfg.seed, cfg.trials):
        if rec.height != 2:
            continue
        try:
            row = table1_report(alg, rec, cfg.numbering)
        except CovariantError as exc:
            return EXIT_MISMATCH, {**cfg.header("table1"), "error": str(exc)}, str(exc)
        rows.append(row)
        lines.append(f"  {rec.name(cfg.numbering):>14}  ucs {row['ucs']}")
        lines.append(f"  {'':>14}  generators " + ", ".join(
            f"{t} (deg {g['degree']})" for t, g in zip(row["generators_text"], row["generators"])))
    data = {**cfg.header("table1"), "rows": rows}
    return EXIT_OK, data, "\n".join(lines)


def cmd_special(cfg: RunConfig) -> tuple[int, dict, str]:
    st = _require_type(cfg)
    rs = build_root_system(st)
    if not is_theta_fundamental(rs):
        raise UsageError(f"{st}: the highest root is not a fundamental weight")
    alg = build_algebra(rs)
    rep = special_suite(alg, cfg.prime, cfg.seed)
    bg = bigrading(alg)
    rep["bigrading"] = bg.to_json()
    lines = [f"{st}: {'ok' if rep['ok'] else 'FAILED'}"]
    for k, v in rep.items():
        if k in ("ok", "type", "bigrading", "bigrading_matrix", "hexagon"):
            continue
        lines.append(f"  {k}: {v}")
    lines.append(bg.matrix_text())
    lines.append(bg.hexagon_text())
    data = {**cfg.header("special"), "report": rep}
    return (EXIT_OK if rep["ok"] else EXIT_MISMATCH), data, "\n".join(lines)


def cmd_constants(cfg: RunConfig) -> tuple[int, dict, str]:
    st = _require_type(cfg)
    alg = build_algebra(st)
    data = {**cfg.header("constants"), **structure_constants_json(alg)}
    return EXIT_OK, data, f"{st}: dim {alg.dim}, {len(data['triples'])} nonzero constants (use --json)"


def _verify_table1(cfg):
    types = None if cfg.stype is None else [str(cfg.stype)]
    results = golden.verify_height2(types, cfg.prime, cfg.seed)
    if cfg.stype is None or cfg.stype.family in "EFG":
        fams = [str(cfg.stype)] if cfg.stype else ["E6", "E7", "E8", "F4", "G2"]
        results += [golden.minimal_exceptional_row(t) for t in fams]
    return results


def _verify_table2(cfg):
    types = None if cfg.stype is None else [str(cfg.stype)]
    results = golden.verify_height3(types, cfg.prime, cfg.seed, cfg.conj_rounds)
    if cfg.stype is None or str(cfg.stype) == "E7":
        ex = golden.e7_example_check()
        results.append({"row": "E7 1000001 monomials", "ok": ex["ok"], "count": ex["count"],
                        "diffs": [] if ex["ok"] else ["monomial weights differ from the row"]})
    return results


def _verify_special(cfg):
    out = []
    for t in _types(cfg, SPECIAL_TYPES):
        rs = build_root_system(t)
        if not is_theta_fundamental(rs):
            raise UsageError(f"{t}: the highest root is not a fundamental weight")
        rep = special_suite(build_algebra(rs), cfg.prime, cfg.seed)
        out.append({"row": t, "ok": rep["ok"], "diffs": rep.get("failures", []), "report": rep})
    return out


def _verify_theorems(cfg):
    out = []
    for t in _types(cfg, THEOREM_TYPES):
        st = SimpleType.parse(t)
        _require_enumerable(st)
        alg = build_algebra(st)
        orbits = cached_orbits(t, cfg.prime, cfg.seed, cfg.trials)
        rep = theorem_suite(alg, orbits, cfg.prime, (cfg.seed,), cfg.conj_rounds, cfg.trials)
        out.append({"row": t, "ok": rep["ok"], "diffs": rep["failures"],
                    "orbits": len(orbits)})
    return out


VERIFY = {"table1": _verify_table1, "table2-structural": _verify_table2,
          "special": _verify_special, "theorems": _verify_theorems}


def cmd_verify(cfg: RunConfig, suite: str) -> tuple[int, dict, str]:
    results = VERIFY[suite](cfg)
    ok = all(r["ok"] for r in results)
    lines = []
    for r in results:
        extra = ""
        if "dim_gamma" in r:
            extra = f"  [dim_gamma {r['dim_gamma']}, normal {r['normal']}"
            if "rank_annotation" in r:
                extra += f"; {r['rank_annotation']}"
            extra += "]"
        lines.append(f"{'PASS' if r['ok'] else 'FAIL'}  {r['row']}{extra}")
        for dline in r.get("diffs", []):
            lines.append(f"      {dline}")
    lines.append(f"{sum(r['ok'] for r in results)}/{len(results)} passed")
    data = {**cfg.header("verify"), "suite": suite, "ok": ok, "results": results}
    return (EXIT_OK if ok else EXIT_MISMATCH), data, "\n".join(lines)


# ---------------------------------------------------------------- parsing

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", dest="stype", help="simple type, e.g. A3, E8")
    common.add_argument("--prime", type=int, default=linalg.DEFAULT_PRIME)
    common.add_argument("--seed", type=int, default=0,
                        help="random seed (NILORBIT_SEED overrides)")
    common.add_argument("--trials", type=int, default=3)
    common.add_argument("--conj-rounds", type=int, default=8)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--numbering", choices=("paper", "internal"), default="paper",
                        help="node numbering used for diagrams and weights")
    common.add_argument("--slow", action="store_true", help="include E7 and E8 in default lists")

    p = argparse.ArgumentParser(prog="nilorbit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("orbits", parents=[common], help="enumerate nilpotent orbits")
    a = sub.add_parser("analyze", parents=[common], help="per-orbit invariants")
    a.add_argument("--orbit", help="diagram like 0010 or partition like 3,2,2,1 (suffix I/II)")
    v = sub.add_parser("verify", parents=[common], help="check against reference data")
    v.add_argument("suite", choices=sorted(VERIFY))
    sub.add_parser("special", parents=[common], help="special height-3 orbit report")
    sub.add_parser("table1", parents=[common], help="canonical strings of height-2 orbits")
    sub.add_parser("constants", parents=[common], help="dump structure constants")
    return p


def make_config(args: argparse.Namespace) -> RunConfig:
    seed = args.seed
    env = os.environ.get("NILORBIT_SEED")
    if env is not None and env.strip():
        try:
            seed = int(env)
        except ValueError as exc:
            raise UsageError(f"NILORBIT_SEED={env!r} is not an integer") from exc
    try:
        stype = SimpleType.parse(args.stype) if args.stype else None
    except RootSystemError as exc:
        raise UsageError(str(exc)) from exc
    cfg = RunConfig(stype, args.prime, seed, args.trials, args.conj_rounds, args.numbering,
                    "json" if args.json else "text", args.slow)
    cfg.validate()
    return cfg


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = make_config(args)
        if args.command == "orbits":
            code, data, text = cmd_orbits(cfg)
        elif args.command == "analyze":
            code, data, text = cmd_analyze(cfg, args.orbit)
        elif args.command == "verify":
            code, data, text = cmd_verify(cfg, args.suite)
        elif args.command == "special":
            code, data, text = cmd_special(cfg)
        elif args.command == "table1":
            code, data, text = cmd_table1(cfg)
        else:
            code, data, text = cmd_constants(cfg)
    except UsageError as exc:
        print(f"nilorbit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.fmt == "json":
        print(json.dumps(data, indent=1, default=str))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
