"""Command-line front end: scenario runs, summary tables, LHV audit, HOM demo.

Exit codes: 0 success, 2 usage or config-file errors, 3 domain errors
(e.g. reaction probability outside [0, 1]).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import bosonic, hardy, lhv
from .amplitude import EXACT, FLOAT, ExactScalar
from .errors import SimulationError

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DOMAIN = 3


def _prob_fields(value):
    """(exact string, 12-significant-digit float string) for one probability."""
    if isinstance(value, Fraction):
        return str(value), f"{float(value):.12g}"
    if isinstance(value, ExactScalar):  # real element of Q(sqrt2)
        return value.to_string(), f"{value.to_complex().real:.12g}"
    return "", f"{value:.12g}"


def _fmt_prob(value) -> str:
    exact, flt = _prob_fields(value)
    return f"{exact or '-'} | {flt}"


def _table_lines(table: hardy.OutcomeTable, title: str):
    lines = [title]
    for (dp, dm) in sorted(table.rows):
        lines.append(f"  {dp},{dm} | {_fmt_prob(table.rows[(dp, dm)])}")
    if not table.conditional:
        lines.append(f"  gamma | {_fmt_prob(table.gamma_prob)}")
    return lines


def _table_records(table: hardy.OutcomeTable):
    records = []
    for (dp, dm) in sorted(table.rows):
        exact, flt = _prob_fields(table.rows[(dp, dm)])
        records.append({"config": table.config, "detector_plus": dp,
                        "detector_minus": dm, "prob_exact": exact,
                        "prob_float": flt,
                        "conditional": str(table.conditional).lower()})
    if not table.conditional:
        exact, flt = _prob_fields(table.gamma_prob)
        records.append({"config": table.config, "detector_plus": "gamma",
                        "detector_minus": "gamma", "prob_exact": exact,
                        "prob_float": flt, "conditional": "false"})
    return records


CSV_FIELDS = ["config", "detector_plus", "detector_minus",
              "prob_exact", "prob_float", "conditional"]


def _write_csv(path: str, records):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS)
        writer.writeheader()
        writer.writerows(records)


def _write_json(path: str, payload):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def _load_config(path: str) -> hardy.ScenarioConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    try:
        bs2_plus = bool(raw["bs2_plus"])
        bs2_minus = bool(raw["bs2_minus"])
    except KeyError as exc:
        raise ConfigError(f"config missing field {exc}") from exc
    p_raw = raw.get("reaction_probability", raw.get("p", 1))
    try:
        p = Fraction(p_raw) if isinstance(p_raw, str) else Fraction(p_raw)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ConfigError(f"bad reaction probability {p_raw!r}") from exc
    backend = raw.get("backend", EXACT)
    if backend not in (EXACT, FLOAT):
        raise ConfigError(f"unknown backend {backend!r}")
    return hardy.ScenarioConfig(bs2_plus, bs2_minus, p, backend)


class ConfigError(Exception):
    pass


def cmd_run(args) -> int:
    cfg = _load_config(args.config)
    _, table = hardy.run_scenario(cfg)
    cond = table.conditioned()
    lines = []
    lines += _table_lines(cond, f"config {cfg.key}  p={cfg.reaction_prob}  "
                                f"backend={cfg.backend}  (conditional on no gamma)")
    lines += _table_lines(table, "unconditional")
    print("\n".join(lines))
    records = _table_records(cond) + _table_records(table)
    if args.csv:
        _write_csv(args.csv, records)
    if args.json:
        _write_json(args.json, {
            "config": cfg.key,
            "backend": cfg.backend,
            "reaction_probability": str(cfg.reaction_prob),
            "rows": records,
        })
    return EXIT_OK


def cmd_table(args) -> int:
    tables = hardy.full_table()
    for key in hardy.CONFIG_KEYS:
        table = tables[key]
        layout = {"O": "out", "I": "in"}
        title = (f"config {key} (BS2+ {layout[key[0]]}, BS2- {layout[key[1]]}), "
                 f"p=1, conditional")
        print("\n".join(_table_lines(table, title)))
    _, table_ii = hardy.run_scenario(hardy.ScenarioConfig(True, True))
    print("Hardy chain:")
    print(f"P(c+,c-|out,out) = {tables['OO'].prob('c', 'c')}")
    print(f"P(d+,d-|in,out) = {tables['IO'].prob('d', 'd')}")
    print(f"P(d+,d-|out,in) = {tables['OI'].prob('d', 'd')}")
    print(f"P(d+,d-|in,in) = {tables['II'].prob('d', 'd')} (cond), "
          f"{table_ii.prob('d', 'd')} (uncond)")
    print(f"gamma probability = {table_ii.gamma_prob}")
    return EXIT_OK


def cmd_lhv_audit(args) -> int:
    print(lhv.audit_report())
    return EXIT_OK


def cmd_hom(args) -> int:
    prob = bosonic.hom_coincidence_probability()
    dist = bosonic.distinguishable_coincidence_probability()
    print("Hong-Ou-Mandel: |1,1> through one 50/50 beam splitter")
    print(f"P(coincidence) = {prob}")
    print(f"P(coincidence, distinguishable particles) = {dist}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hardysim",
        description="Exact simulator of the two-interferometer annihilation "
                    "thought experiment")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one scenario from a JSON config")
    p_run.add_argument("--config", required=True, help="path to JSON config")
    p_run.add_argument("--csv", help="also write the table as CSV")
    p_run.add_argument("--json", help="also write the table as JSON")
    p_run.set_defaults(func=cmd_run)

    p_table = sub.add_parser("table", help="all four layouts at p=1")
    p_table.set_defaults(func=cmd_table)

    p_lhv = sub.add_parser("lhv-audit", help="local-hidden-variable audit")
    p_lhv.set_defaults(func=cmd_lhv_audit)

    p_hom = sub.add_parser("hom", help="Hong-Ou-Mandel bunching demo")
    p_hom.set_defaults(func=cmd_hom)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except SimulationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
