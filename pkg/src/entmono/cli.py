"""Command-line front end: single-state reports, seeded sampling sweeps,
grid scans, boundary finding and a self-check suite.  Sweeps and scans are
written as CSV with one fixed schema; summaries go to stdout as JSON.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import measures, monogamy, operational
from .states import (
    FamilyTag,
    GhzParams,
    SampleSpec,
    WParams,
    build_ghz_amplitudes,
    build_w_amplitudes,
    classify,
    sample_family,
)

CSV_COLUMNS = (
    "family", "g1", "g2", "g3", "z_re", "z_im", "t", "x", "y", "z",
    "c12", "c13", "c23", "e12", "e13", "e23", "tau", "c3",
    "e_s", "e_a", "m1", "m2", "verdict1", "verdict2",
)

_GHZ_COORDS = ("g1", "g2", "g3", "z_re", "z_im")
_W_COORDS = ("t", "x", "y", "z")
_MEASURES = ("c12", "c13", "c23", "e12", "e13", "e23",
             "tau", "c3", "e_s", "e_a", "m1", "m2")

DEFAULT_SEED = 42


def fmt(v: float) -> str:
    """Fixed 12-significant-digit float formatting for byte-stable output."""
    return f"{v:.12g}"


def _rows_from_columns(family_col, columns: dict, n: int):
    coord_names = _W_COORDS if "t" in columns else _GHZ_COORDS
    v1 = np.where(columns["m1"] >= -monogamy.VERDICT_TOL, "satisfied", "violated")
    v2 = np.where(columns["m2"] >= -monogamy.VERDICT_TOL, "satisfied", "violated")
    for i in range(n):
        row = dict.fromkeys(CSV_COLUMNS, "")
        row["family"] = family_col if isinstance(family_col, str) else family_col[i]
        for name in coord_names:
            row[name] = fmt(float(columns[name][i]))
        for name in _MEASURES:
            row[name] = fmt(float(columns[name][i]))
        row["verdict1"] = str(v1[i])
        row["verdict2"] = str(v2[i])
        yield [row[c] for c in CSV_COLUMNS]


def _write_rows(path: str, rows, fmt_kind: str) -> None:
    if fmt_kind == "csv":
        lines = [",".join(CSV_COLUMNS)]
        lines.extend(",".join(r) for r in rows)
        payload = "\n".join(lines) + "\n"
    else:
        payload = json.dumps([dict(zip(CSV_COLUMNS, r)) for r in rows],
                             separators=(",", ":"), sort_keys=True) + "\n"
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(payload)


def _print_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _record_json(rec: monogamy.MeasureRecord) -> dict:
    p = rec.params
    if isinstance(p, GhzParams):
        coords = {"g1": p.g1, "g2": p.g2, "g3": p.g3,
                  "z_re": p.z.real, "z_im": p.z.imag}
    else:
        coords = {"t": p.t, "x": p.x, "y": p.y, "z": p.z}
    out = {"family": rec.family.value, **coords}
    for name in _MEASURES:
        out[name] = getattr(rec, name)
    out["verdict1"] = rec.verdict1
    out["verdict2"] = rec.verdict2
    return out


def _state_params(args):
    if args.ghz == args.w:
        raise ValueError("exactly one of --ghz / --w is required")
    if args.ghz:
        if args.g is None:
            raise ValueError("--ghz requires --g g1,g2,g3")
        parts = [float(v) for v in args.g.split(",")]
        if len(parts) != 3:
            raise ValueError("--g must hold three comma-separated values")
        return GhzParams(parts[0], parts[1], parts[2],
                         complex(args.z_re, args.z_im))
    missing = [n for n in ("t", "x", "y", "z") if getattr(args, n) is None]
    if missing:
        raise ValueError(f"--w requires --{' --'.join(missing)}")
    return WParams(args.t, args.x, args.y, args.z)


def cmd_state(args) -> int:
    rec = monogamy.evaluate(_state_params(args))
    _print_json(_record_json(rec))
    return 0


def cmd_sample(args) -> int:
    spec = SampleSpec(family=FamilyTag(args.family), count=args.n, seed=args.seed)
    result = monogamy.batch_evaluate(spec)
    rows = _rows_from_columns(FamilyTag(args.family).value, result.columns, args.n)
    _write_rows(args.out, rows, args.format)
    _print_json({"command": "sample", "out": args.out, "format": args.format,
                 **result.summary})
    return 0


def cmd_scan(args) -> int:
    result = monogamy.scan_region(args.case, grid=args.grid)
    n = result.n_cells
    cols = result.columns
    fams = [classify(GhzParams(float(cols["g1"][i]), float(cols["g2"][i]),
                               float(cols["g3"][i]),
                               complex(cols["z_re"][i], cols["z_im"][i]))).value
            for i in range(n)]
    rows = _rows_from_columns(fams, cols, n)
    _write_rows(args.out, rows, args.format)
    m1, m2 = cols["m1"], cols["m2"]
    _print_json({"command": "scan", "case": args.case, "grid": args.grid,
                 "out": args.out, "format": args.format,
                 "n_cells": n, "axes": list(result.axis_names),
                 "min_m1": float(m1.min()), "min_m2": float(m2.min()),
                 "frac_m1_violated": float(np.mean(m1 < -monogamy.VERDICT_TOL)),
                 "frac_m2_violated": float(np.mean(m2 < -monogamy.VERDICT_TOL))})
    return 0


def _parse_fixed(items) -> dict:
    fixed = {}
    for item in items or ():
        for part in item.split(","):
            name, sep, value = part.partition("=")
            if not sep:
                raise ValueError(f"--fixed entries look like name=value, got {part!r}")
            fixed[name.strip()] = float(value)
    return fixed


def cmd_boundary(args) -> int:
    fixed = _parse_fixed(args.fixed)
    root = monogamy.find_boundary(args.case, fixed=fixed, score=args.score)
    case = monogamy.SCAN_CASES[args.case]
    axis = [ax.name for ax in case.axes if ax.name not in fixed][0]
    _print_json({"command": "boundary", "case": args.case, "score": args.score,
                 "axis": axis, "fixed": fixed, "root": root})
    return 0


def _ghz_param_arrays(params):
    return (np.array([p.g1 for p in params]), np.array([p.g2 for p in params]),
            np.array([p.g3 for p in params]),
            np.array([complex(p.z) for p in params]))


def _w_param_arrays(params):
    return (np.array([p.t for p in params]), np.array([p.x for p in params]),
            np.array([p.y for p in params]), np.array([p.z for p in params]))


def _oracle_checks(n: int, seed: int) -> list[dict]:
    ghz_families = (FamilyTag.GHZ_ALL_ZERO, FamilyTag.GHZ_ONE_NONZERO,
                    FamilyTag.GHZ_TWO_NONZERO, FamilyTag.GHZ_GENERIC,
                    FamilyTag.GHZ_MES_NONZERO, FamilyTag.GHZ_MES_ALL_ZERO)
    worst = 0.0
    for fam in ghz_families:
        g1, g2, g3, z = _ghz_param_arrays(sample_family(SampleSpec(fam, n, seed)))
        psi = build_ghz_amplitudes(g1, g2, g3, z)
        closed = measures.ghz_closed_form_batch(g1, g2, g3, z)
        for i, pair in enumerate(measures.PAIRS):
            dev = float(np.max(np.abs(
                measures.pair_concurrence_from_state(psi, pair) - closed[i])))
            worst = max(worst, dev)
    checks = [{"name": "ghz-closed-vs-state-vector", "deviation": worst,
               "tolerance": 1e-9, "pass": bool(worst <= 1e-9)}]
    worst = 0.0
    for fam in (FamilyTag.W_CLASS, FamilyTag.W_CLASS_MES):
        t, x, y, z = _w_param_arrays(sample_family(SampleSpec(fam, n, seed)))
        psi = build_w_amplitudes(t, x, y, z)
        closed = measures.w_closed_form_batch(x, y, z)
        for i, pair in enumerate(measures.PAIRS):
            dev = float(np.max(np.abs(
                measures.pair_concurrence_from_state(psi, pair) - closed[i])))
            worst = max(worst, dev)
    checks.append({"name": "w-closed-vs-state-vector", "deviation": worst,
                   "tolerance": 1e-9, "pass": bool(worst <= 1e-9)})
    return checks


def _volume_checks(n: int, seed: int) -> list[dict]:
    points = [
        ("source", GhzParams(0.0, 0.0, 0.0, complex(0.25)), 0.75),
        ("source", GhzParams(0.25, 0.0, 0.0, complex(0.5)), 0.125),
        ("source", GhzParams(0.1, 0.2, 0.0, complex(0.5)), 0.01),
        ("accessible", GhzParams(0.0, 0.0, 0.0, complex(0.5)), 0.375),
        ("accessible", GhzParams(0.25, 0.0, 0.0, complex(0.5)), 0.125),
        ("accessible", GhzParams(0.1, 0.2, 0.0, complex(1.0)), 0.12),
    ]
    checks = []
    for kind, p, expected in points:
        est = (operational.estimate_source_volume(p, n, seed) if kind == "source"
               else operational.estimate_accessible_volume(p, n, seed))
        dev = abs(est.mean - expected)
        tol = 4.0 * est.std_error
        checks.append({"name": f"{kind}-volume({p.g1:g},{p.g2:g},{p.g3:g},r={abs(p.z):g})",
                       "measured": est.mean, "expected": expected,
                       "deviation": dev, "tolerance": tol, "pass": bool(dev <= tol)})
    return checks


def _ckw_check(n: int, seed: int) -> dict:
    worst = 0.0
    pair_of = {1: ((1, 2), (1, 3)), 2: ((1, 2), (2, 3)), 3: ((1, 3), (2, 3))}
    for fam in FamilyTag:
        params = sample_family(SampleSpec(fam, n, seed))
        if isinstance(params[0], GhzParams):
            psi = build_ghz_amplitudes(*_ghz_param_arrays(params))
        else:
            psi = build_w_amplitudes(*_w_param_arrays(params))
        for q in (1, 2, 3):
            pa, pb = pair_of[q]
            res = (measures.cut_concurrence_from_state(psi, q) ** 2
                   - measures.pair_concurrence_from_state(psi, pa) ** 2
                   - measures.pair_concurrence_from_state(psi, pb) ** 2)
            worst = min(worst, float(res.min()))
    return {"name": "squared-concurrence-monogamy", "deviation": -worst,
            "tolerance": 1e-10, "pass": bool(worst >= -1e-10)}


def _gradient_check() -> dict:
    h = 1e-4
    worst = 0.0
    for f in np.arange(0.1, 0.95, 0.1):
        num = (operational.phase_volume_factor(f + h)
               - operational.phase_volume_factor(f - h)) / (2 * h)
        exact = -0.5 * np.log(f) ** 2
        worst = max(worst, abs(num - exact) / abs(exact))
    end = abs(operational.phase_volume_factor(1.0))
    ok = worst <= 1e-6 and end <= 1e-12
    return {"name": "volume-factor-gradient", "deviation": float(worst),
            "tolerance": 1e-6, "endpoint": float(end), "pass": bool(ok)}


def _w_constants_check() -> dict:
    rec = monogamy.evaluate(WParams(0.0, 1 / 3, 1 / 3, 1 / 3))
    dev = max(abs(rec.e12 - 0.550048), abs(rec.e13 - 0.550048),
              abs(rec.e23 - 0.550048), abs(rec.m1 - 0.0923424),
              abs(rec.m2 - 0.0923424))
    return {"name": "w-state-constants", "deviation": float(dev),
            "tolerance": 1e-5, "pass": bool(dev <= 1e-5)}


def cmd_verify(args) -> int:
    checks = []
    checks.extend(_oracle_checks(args.n, args.seed))
    checks.append(_w_constants_check())
    checks.extend(_volume_checks(args.volume_n, args.seed))
    checks.append(_gradient_check())
    checks.append(_ckw_check(min(args.n, 2000), args.seed))
    all_pass = all(c["pass"] for c in checks)
    _print_json({"command": "verify", "n": args.n, "volume_n": args.volume_n,
                 "seed": args.seed, "checks": checks, "all_pass": all_pass})
    return 0 if all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="entmono",
        description="Three-qubit entanglement monogamy laboratory")
    sub = ap.add_subparsers(dest="command", required=True)

    st = sub.add_parser("state", help="evaluate one parameter record")
    st.add_argument("--ghz", action="store_true")
    st.add_argument("--w", action="store_true")
    st.add_argument("--g", help="comma-separated g1,g2,g3")
    st.add_argument("--z-re", type=float, default=1.0)
    st.add_argument("--z-im", type=float, default=0.0)
    for name in ("t", "x", "y", "z"):
        st.add_argument(f"--{name}", type=float, default=None)
    st.set_defaults(func=cmd_state)

    sa = sub.add_parser("sample", help="seeded random sweep of one family")
    sa.add_argument("--family", required=True,
                    choices=[f.value for f in FamilyTag])
    sa.add_argument("--n", type=int, required=True)
    sa.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sa.add_argument("--out", required=True)
    sa.add_argument("--format", choices=("csv", "json"), default="csv")
    sa.set_defaults(func=cmd_sample)

    sc = sub.add_parser("scan", help="grid scan of a named parameter region")
    sc.add_argument("--case", required=True, choices=sorted(monogamy.SCAN_CASES))
    sc.add_argument("--grid", type=int, default=201)
    sc.add_argument("--out", required=True)
    sc.add_argument("--format", choices=("csv", "json"), default="csv")
    sc.set_defaults(func=cmd_scan)

    bo = sub.add_parser("boundary", help="root of a score along a preset axis")
    bo.add_argument("--case", required=True, choices=sorted(monogamy.SCAN_CASES))
    bo.add_argument("--score", choices=("m1", "m2"), default="m1")
    bo.add_argument("--fixed", action="append",
                    help="pin axes as name=value (repeatable or comma-joined)")
    bo.set_defaults(func=cmd_boundary)

    ve = sub.add_parser("verify", help="run the bundled consistency checks")
    ve.add_argument("--n", type=int, default=2000)
    ve.add_argument("--volume-n", dest="volume_n", type=int, default=200000)
    ve.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ve.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
