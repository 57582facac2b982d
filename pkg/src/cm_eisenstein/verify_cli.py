"""Batch checks of deg Z^(alpha) = -(|C_K|/w) sqrt(N d)/(2^(r-1) [K:Q]) b_Phi(alpha, y).

Config files are flat ``key = value`` text with ``#`` comments::

    base_disc = 1          # 1 for F = Q, else a real fundamental discriminant
    delta = -7             # or "a, b" = a + b*w
    h = 1                  # optional; required (with ck) when F != Q
    ck = 1                 # optional
    alphas = 1 2 -3 1:1    # explicit alphas; a:b means a + b*w, a/d allowed
    alpha_bound = 50       # used when alphas is absent
    y = 0.5 1 5            # y points; a point y1:y2 gives one value per real place
    tolerance = 1e-9

Reports are deterministic: floats are always written with ``%.15e``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from pathlib import Path

from .cm_fields import FieldTower, TowerError, build_tower, validate_conditions
from .degree_side import arithmetic_degree
from .eisenstein_side import (
    b_phi,
    b_phi_closed,
    coeff_derivative_for_class,
    diff_set,
    enumerate_Xi,
    value_at_zero,
)
from .ideal_arith import ElementF, ideal_norm

SCHEMA_VERSION = 1
ABS_FLOOR = 1e-12
REPORT_DIR_ENV = "CMEIS_REPORT_DIR"
REPORT_NAME = "identity_report"


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    base_disc: int
    delta: tuple[int, int]
    h: int | None = None
    ck: int | None = None
    alphas: tuple[tuple[Fraction, Fraction], ...] = ()
    alpha_bound: int | None = None
    y_points: tuple[tuple[float, ...], ...] = ((1.0,),)
    tolerance: float = 1e-9

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ConfigError("tolerance must be positive")
        if not self.alphas and not self.alpha_bound:
            raise ConfigError("give alphas or a positive alpha_bound")
        if not self.y_points or any(v <= 0 for pt in self.y_points for v in pt):
            raise ConfigError("y values must be positive")


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def _parse_alpha(token: str) -> tuple[Fraction, Fraction]:
    parts = token.split(":")
    if len(parts) > 2:
        raise ConfigError(f"bad alpha {token!r}")
    try:
        coords = [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad alpha {token!r}") from exc
    if len(coords) == 1:
        coords.append(Fraction(0))
    return coords[0], coords[1]


def _tokens(value: str) -> list[str]:
    return value.replace(",", " ").split()


def parse_config_text(text: str) -> RunConfig:
    raw: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        if key in raw:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        raw[key] = value
    known = {"base_disc", "delta", "h", "ck", "alphas", "alpha_bound", "y", "tolerance"}
    unknown = set(raw) - known
    if unknown:
        raise ConfigError(f"unknown keys: {', '.join(sorted(unknown))}")
    for key in ("base_disc", "delta"):
        if key not in raw:
            raise ConfigError(f"missing required key {key!r}")
    try:
        base_disc = int(raw["base_disc"])
        delta_tokens = [int(t) for t in _tokens(raw["delta"])]
        if len(delta_tokens) == 1:
            delta_tokens.append(0)
        if len(delta_tokens) != 2:
            raise ConfigError("delta takes one or two integers")
        h = int(raw["h"]) if "h" in raw else None
        ck = int(raw["ck"]) if "ck" in raw else None
        bound = int(raw["alpha_bound"]) if "alpha_bound" in raw else None
        tolerance = float(raw.get("tolerance", "1e-9"))
        y_points = tuple(tuple(float(v) for v in tok.split(":"))
                         for tok in _tokens(raw.get("y", "1")))
    except ValueError as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(str(exc)) from exc
    alphas = tuple(_parse_alpha(t) for t in _tokens(raw.get("alphas", "")))
    return RunConfig(base_disc, tuple(delta_tokens), h, ck, alphas, bound, y_points, tolerance)


def load_config(path: str | os.PathLike) -> RunConfig:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    return parse_config_text(text)


def tower_from_config(cfg: RunConfig) -> FieldTower:
    return build_tower(cfg.base_disc, cfg.delta, h=cfg.h, ck=cfg.ck)


def expand_alphas(cfg: RunConfig, tower: FieldTower) -> list[ElementF]:
    if cfg.alphas:
        out = [tower.element(c) for c in cfg.alphas]
    elif tower.degree_n == 1:
        B = cfg.alpha_bound
        out = [tower.element(a) for a in list(range(1, B + 1)) + list(range(-1, -B - 1, -1))]
    else:
        B = cfg.alpha_bound
        out = []
        for a, b in product(range(-B, B + 1), repeat=2):
            if a == b == 0:
                continue
            alpha = tower.element((a, b))
            # negative at both places: every quantity is 0
            if sum(s < 0 for s in alpha.signs()) <= 1:
                out.append(alpha)
    if any(a.is_zero for a in out):
        raise ConfigError("alpha = 0 is not allowed")
    if not out:
        raise ConfigError("no alphas after expansion")
    return out


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------

def fmt(x: float) -> str:
    return "%.15e" % (x + 0.0)


def _dump_json(obj, indent: int = 0) -> str:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_dump_json(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [inner + _dump_json(v, indent + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return json.dumps(str(obj))
        return fmt(obj)
    return json.dumps(obj)


def _y_label(y: tuple[float, ...]) -> str:
    return ":".join(fmt(v) for v in y)


def _field_summary(tower: FieldTower) -> dict:
    return {
        "base_disc": tower.base_disc,
        "delta": str(tower.delta),
        "finite_ramified": [P.label() for P in tower.finite_ramified],
        "r": tower.r,
        "w": tower.w,
        "h": tower.class_data.h,
        "ck": tower.class_data.ck,
        "ck_source": tower.class_data.ck_source,
        "rel_disc_norm": int(ideal_norm(tower.rel_disc)),
    }


def rhs_from_b_phi(tower: FieldTower, b: float, sign: int = -1) -> float:
    scale = math.sqrt(ideal_norm(tower.rel_disc)) / (2 ** (tower.r - 1) * tower.degree_K)
    return sign * float(tower.mass) * scale * b + 0.0


def _rel_err(a: float, b: float) -> tuple[float, float]:
    abs_err = abs(a - b)
    size = max(abs(a), abs(b))
    rel = abs_err / size if size > 0 else 0.0
    return abs_err, rel


def _passes(abs_err: float, rel_err: float, tol: float) -> bool:
    return abs_err <= ABS_FLOOR or rel_err <= tol


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def identity_records(tower: FieldTower, alphas, y_points, tolerance: float) -> list[dict]:
    records = []
    for alpha in alphas:
        for y in y_points:
            deg = arithmetic_degree(tower, alpha, y)
            b_sum = b_phi(tower, alpha, y)
            b_closed = b_phi_closed(tower, alpha, y)
            rhs = rhs_from_b_phi(tower, b_sum)
            abs_err, rel_err = _rel_err(deg.total, rhs)
            route_abs, route_rel = _rel_err(b_sum, b_closed)
            records.append({
                "alpha": str(alpha),
                "y": _y_label(y),
                "case_tag": deg.case_tag.value,
                "degree_total": deg.total,
                "b_phi_sum_route": b_sum,
                "b_phi_closed_route": b_closed,
                "rhs": rhs,
                "abs_err": abs_err,
                "rel_err": rel_err,
                "route_rel_err": route_rel,
                "pass": _passes(abs_err, rel_err, tolerance) and _passes(route_abs, route_rel, tolerance),
            })
    return records


def build_report(cfg: RunConfig) -> tuple[dict, FieldTower]:
    tower = tower_from_config(cfg)
    diag = validate_conditions(tower)
    if not diag.passed:
        raise TowerError("; ".join(diag.failures))
    alphas = expand_alphas(cfg, tower)
    records = identity_records(tower, alphas, cfg.y_points, cfg.tolerance)
    summary = {
        "n_checked": len(records),
        "n_pass": sum(r["pass"] for r in records),
        "max_rel_err": max(r["rel_err"] for r in records),
        "max_route_rel_err": max(r["route_rel_err"] for r in records),
    }
    report = {
        "schema": SCHEMA_VERSION,
        "field": _field_summary(tower),
        "tolerance": cfg.tolerance,
        "records": records,
        "summary": summary,
    }
    return report, tower


def report_csv(records: list[dict]) -> str:
    cols = ["alpha", "y", "case_tag", "degree_total", "b_phi_sum_route", "b_phi_closed_route",
            "rhs", "abs_err", "rel_err", "route_rel_err", "pass"]
    return _csv([cols] + [[_cell(r[c]) for c in cols] for r in records])


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return fmt(v)
    return str(v)


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def report_dir(out: str | None) -> Path:
    if out:
        return Path(out)
    return Path(os.environ.get(REPORT_DIR_ENV, "."))


def cmd_check_identity(cfg: RunConfig, out: str | None = None,
                       stream=None) -> tuple[dict | None, int]:
    stream = stream or sys.stdout
    try:
        report, tower = build_report(cfg)
    except (TowerError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None, 2
    target = report_dir(out)
    target.mkdir(parents=True, exist_ok=True)
    (target / f"{REPORT_NAME}.json").write_text(_dump_json(report) + "\n")
    (target / f"{REPORT_NAME}.csv").write_text(report_csv(report["records"]))
    s = report["summary"]
    print(f"{tower.describe()}: {s['n_pass']}/{s['n_checked']} pass, "
          f"max rel err {fmt(s['max_rel_err'])}", file=stream)
    return report, 0 if s["n_pass"] == s["n_checked"] else 1


def degree_table(cfg: RunConfig) -> str:
    tower = tower_from_config(cfg)
    rows = [["alpha", "y", "case_tag", "total", "green_term",
             "prime", "ord", "rho_shifted", "length", "term"]]
    for alpha in expand_alphas(cfg, tower):
        for y in cfg.y_points:
            deg = arithmetic_degree(tower, alpha, y)
            head = [str(alpha), _y_label(y), deg.case_tag.value, fmt(deg.total), fmt(deg.green_term)]
            if not deg.per_prime:
                rows.append(head + ["", "", "", "", ""])
            for t in deg.per_prime:
                rows.append(head + [t.P.label(), str(t.ord_a), str(t.rho_shifted),
                                    str(t.length), fmt(t.term)])
    return _csv(rows)


def eisenstein_table(cfg: RunConfig) -> str:
    tower = tower_from_config(cfg)
    rows = [["alpha", "y", "class", "diff", "value_at_zero", "coeff_derivative",
             "b_phi_sum_route", "b_phi_closed_route"]]
    for alpha in expand_alphas(cfg, tower):
        for y in cfg.y_points:
            total = fmt(b_phi(tower, alpha, y))
            closed = fmt(b_phi_closed(tower, alpha, y))
            for c in enumerate_Xi(tower):
                rows.append([str(alpha), _y_label(y), c.label(),
                             diff_set(tower, alpha, c).label(),
                             fmt(value_at_zero(tower, alpha, y, c)),
                             fmt(coeff_derivative_for_class(tower, alpha, y, c)),
                             total, closed])
    return _csv(rows)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="cmeis", description=__doc__.split("\n", 1)[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("check-identity", help="compare both sides over an alpha grid")
    p.add_argument("--config", required=True)
    p.add_argument("--tolerance", type=float)
    p.add_argument("--out", help=f"report directory (default ${REPORT_DIR_ENV} or .)")
    for name, text in (("degree", "tabulate the degree side"),
                       ("eisenstein", "tabulate per-class Eisenstein coefficients")):
        q = sub.add_parser(name, help=text)
        q.add_argument("--config", required=True)
        q.add_argument("--out", help="write the CSV here instead of stdout")
    sub.add_parser("selftest", help="run the built-in invariant suites")
    args = parser.parse_args(argv)

    if args.command == "selftest":
        from .selftest import run_selftest
        return run_selftest()

    try:
        cfg = load_config(args.config)
        if getattr(args, "tolerance", None) is not None:
            cfg = RunConfig(**{**cfg.__dict__, "tolerance": args.tolerance})
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.command == "check-identity":
        _, code = cmd_check_identity(cfg, args.out)
        return code
    try:
        text = degree_table(cfg) if args.command == "degree" else eisenstein_table(cfg)
    except (TowerError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
