"""Command-line front end.

Subcommands:

  trees        list all unlabeled trees on n vertices
  poset        export the proper-shift digraph (DOT or JSON)
  alpha-table  binomial-transform table of a basis, all shapes of n
  gmf          generalized matrix polynomial of one tree (optionally checked
               against the permutation-sum oracle)
  air-table    the a[i][r] polynomial table of one tree
  verify       full monotonicity sweep over all proper shift pairs

Every subcommand accepts --config FILE with KEY=VALUE lines mirroring the
long flag names; explicit flags override the file.  When TREEGMF_OUT_DIR is
set, relative --out paths are resolved inside it.  Output is byte
deterministic for a fixed configuration.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .gmf import (
    air_monotone_report_from_tables,
    air_table,
    coefficients_from_profile,
    gmf_poly_bruteforce,
    gmf_poly_matching,
    matching_profile,
    monotone_report_from_coeffs,
)
from .gts import pairs_to_json_obj, poset_to_dot, proper_gts_pairs
from .partitions import Partition, enumerate_partitions
from .qpoly import QPolynomial, rational_to_json
from .symfunc import BASES, involution_class_values, power_expansion
from .trees import LabeledTree, ahu_canonical, enumerate_free_trees, parse_tree

OUT_DIR_ENV = "TREEGMF_OUT_DIR"


# ---------------------------------------------------------------------------
# shared plumbing
# ---------------------------------------------------------------------------


def load_config(path: str) -> dict[str, str]:
    cfg: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected KEY=VALUE, got {line!r}")
            key, value = line.split("=", 1)
            cfg[key.strip()] = value.strip()
    return cfg


def _as_bool(v: str) -> bool:
    return v.lower() in ("1", "true", "yes", "on")


class _Options:
    """Flag > config-file > default resolution for one subcommand."""

    def __init__(self, args: argparse.Namespace) -> None:
        self.args = args
        self.config = load_config(args.config) if getattr(args, "config", None) else {}

    def get(self, key: str, default=None, conv=None):
        value = getattr(self.args, key.replace("-", "_"), None)
        if value is None and key in self.config:
            raw = self.config[key]
            value = (conv or str)(raw) if conv is not bool else _as_bool(raw)
        if value is None:
            value = default
        return value


def resolve_out_path(out: str | None) -> str | None:
    if out is None:
        return None
    base = os.environ.get(OUT_DIR_ENV)
    if base and not os.path.isabs(out):
        return os.path.join(base, out)
    return out


def _write_or_print(text: str, out: str | None) -> None:
    path = resolve_out_path(out)
    if path is None:
        sys.stdout.write(text)
    else:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def parse_partition_arg(text: str) -> Partition:
    """Accept "2,1,1" or exponential "2^2,1^3"."""
    parts: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if "^" in token:
            v, m = token.split("^", 1)
            parts.extend([int(v)] * int(m))
        else:
            parts.append(int(token))
    if not parts:
        raise ValueError(f"empty partition {text!r}")
    return Partition(parts)


def parse_shape_pattern(text: str | None):
    """Shape patterns for --lambda: a comma list of tokens "V", "V^E",
    "V^k" or "V^*" (the last two meaning any multiplicity, zero included).
    A shape matches when its part values are among the tokens' values and
    every fixed multiplicity is met.  "*" or omission matches everything."""
    if text is None or text.strip() == "*":
        return lambda lam: True
    fixed: dict[int, int] = {}
    free: set[int] = set()
    for token in text.split(","):
        token = token.strip()
        if "^" in token:
            v_s, m_s = token.split("^", 1)
            v = int(v_s)
            if m_s in ("k", "*"):
                free.add(v)
            else:
                fixed[v] = int(m_s)
        else:
            fixed[int(token)] = fixed.get(int(token), 0) + 1
    allowed = set(fixed) | free

    def match(lam: Partition) -> bool:
        form = lam.exponential_form()
        if any(v not in allowed for v in form):
            return False
        return all(form.get(v, 0) == m for v, m in fixed.items())

    return match


def _frac_str(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _parse_bases(text: str) -> tuple[str, ...]:
    bases = tuple(b.strip() for b in text.split(",") if b.strip())
    bad = [b for b in bases if b not in BASES]
    if bad:
        raise ValueError(f"unknown bases {bad}; choose from {','.join(BASES)}")
    # fixed canonical order regardless of how the user listed them
    return tuple(b for b in BASES if b in bases)


def _json_dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------------------
# trees / poset
# ---------------------------------------------------------------------------


def cmd_trees(args: argparse.Namespace) -> int:
    opts = _Options(args)
    n = opts.get("n", conv=int)
    if n is None or n < 1:
        print("error: --n must be a positive integer", file=sys.stderr)
        return 2
    trees = enumerate_free_trees(n)
    lines = [f"{len(trees)} tree(s) on {n} vertices"]
    for idx, t in enumerate(trees, 1):
        degs = ",".join(str(d) for d in sorted(t.representative.degrees(), reverse=True))
        edges = " ".join(f"{u + 1}-{v + 1}" for u, v in t.representative.edges())
        lines.append(f"[{idx}] code={t.code} degrees=({degs}) edges: {edges}")
    _write_or_print("\n".join(lines) + "\n", opts.get("out"))
    return 0


def cmd_poset(args: argparse.Namespace) -> int:
    opts = _Options(args)
    n = opts.get("n", conv=int)
    if n is None or n < 2:
        print("error: --n must be >= 2", file=sys.stderr)
        return 2
    fmt = opts.get("format", "json")
    if opts.get("dot", conv=bool):
        fmt = "dot"
    pairs = proper_gts_pairs(n)
    if fmt == "dot":
        text = poset_to_dot(n, pairs)
    elif fmt == "json":
        text = _json_dump(pairs_to_json_obj(n, pairs))
    else:
        print(f"error: poset format must be dot or json, got {fmt}", file=sys.stderr)
        return 2
    _write_or_print(text, opts.get("out"))
    return 0


# ---------------------------------------------------------------------------
# alpha-table
# ---------------------------------------------------------------------------


def cmd_alpha_table(args: argparse.Namespace) -> int:
    opts = _Options(args)
    n = opts.get("n", conv=int)
    basis = opts.get("basis", "m")
    fmt = opts.get("format", "text")
    if n is None or n < 2:
        print("error: --n must be >= 2", file=sys.stderr)
        return 2
    if basis not in BASES:
        print(f"error: basis must be one of {','.join(BASES)}", file=sys.stderr)
        return 2
    from .symfunc import alpha_table

    rows = alpha_table(n, basis)
    half = n // 2
    if fmt == "text":
        label_w = max(len(lam.to_exp_string()) for lam, _ in rows) + 2
        cells = [[_frac_str(v) for v in vals] for _, vals in rows]
        col_w = max(4, max((len(c) for row in cells for c in row), default=4)) + 1
        header = "lambda".ljust(label_w) + "".join(f"i={i}".rjust(col_w) for i in range(half + 1))
        lines = [f"alpha table: n={n} basis={basis}", header]
        for (lam, _), row in zip(rows, cells):
            lines.append(lam.to_exp_string().ljust(label_w) + "".join(c.rjust(col_w) for c in row))
        text = "\n".join(lines) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["lambda"] + [f"i={i}" for i in range(half + 1)])
        for lam, vals in rows:
            writer.writerow([lam.to_exp_string()] + [_frac_str(v) for v in vals])
        text = buf.getvalue()
    elif fmt == "json":
        obj = {
            "n": n,
            "basis": basis,
            "rows": [
                {"lambda": list(lam.parts), "values": [rational_to_json(v) for v in vals]}
                for lam, vals in rows
            ],
        }
        text = _json_dump(obj)
    else:
        print(f"error: format must be text, csv or json, got {fmt}", file=sys.stderr)
        return 2
    _write_or_print(text, opts.get("out"))
    return 0


# ---------------------------------------------------------------------------
# gmf / air-table
# ---------------------------------------------------------------------------


def _load_tree(path: str) -> LabeledTree:
    with open(path, encoding="utf-8") as fh:
        return parse_tree(fh.read())


def cmd_gmf(args: argparse.Namespace) -> int:
    opts = _Options(args)
    tree_path = opts.get("tree")
    basis = opts.get("basis", "s")
    lam_text = opts.get("lambda")
    max_brute = opts.get("max-brute", 9, conv=int)
    if tree_path is None or lam_text is None:
        print("error: gmf needs --tree FILE and --lambda PARTS", file=sys.stderr)
        return 2
    try:
        tree = _load_tree(tree_path)
        lam = parse_partition_arg(lam_text)
        if basis not in BASES:
            raise ValueError(f"basis must be one of {','.join(BASES)}")
        if lam.n != tree.n:
            raise ValueError(f"lambda sums to {lam.n} but the tree has {tree.n} vertices")
        gamma = power_expansion(basis, lam)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    result = gmf_poly_matching(tree, gamma, basis=basis, lam=lam)
    if opts.get("oracle", conv=bool):
        if tree.n > max_brute:
            print(
                f"error: --oracle needs n <= {max_brute} (raise with --max-brute)",
                file=sys.stderr,
            )
            return 2
        oracle = gmf_poly_bruteforce(tree, gamma, max_brute=max_brute)
        if oracle.poly != result.poly:
            print("ORACLE MISMATCH: permutation sum disagrees with matching expansion",
                  file=sys.stderr)
            return 1
    fmt = opts.get("format", "text")
    code = result.tree.code
    if fmt == "text":
        lines = [
            f"tree: n={tree.n} code={code}",
            f"basis={basis} lambda={lam.to_exp_string()}",
            "signed coefficients c_r (raw coefficient of x^(n-r) is (-1)^r c_r):",
        ]
        for r in range(tree.n + 1):
            lines.append(f"  r={r}: {result.poly.signed_coefficient(r)}")
        if opts.get("oracle", conv=bool):
            lines.append("oracle: permutation sum agrees")
        text = "\n".join(lines) + "\n"
    elif fmt == "json":
        obj = {
            "tree": code,
            "n": tree.n,
            "basis": basis,
            "lambda": list(lam.parts),
            "poly": result.poly.to_json_obj(),
        }
        text = _json_dump(obj)
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["tree", "basis", "lambda", "r", "coefficient"])
        for r in range(tree.n + 1):
            writer.writerow(
                [code, basis, ",".join(map(str, lam.parts)), r,
                 result.poly.signed_coefficient(r).csv_cell()]
            )
        text = buf.getvalue()
    else:
        print(f"error: format must be text, csv or json, got {fmt}", file=sys.stderr)
        return 2
    _write_or_print(text, opts.get("out"))
    return 0


def cmd_air_table(args: argparse.Namespace) -> int:
    opts = _Options(args)
    tree_path = opts.get("tree")
    if tree_path is None:
        print("error: air-table needs --tree FILE", file=sys.stderr)
        return 2
    try:
        tree = _load_tree(tree_path)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    table = air_table(tree)
    fmt = opts.get("format", "text")
    n = tree.n
    if fmt == "text":
        lines = [f"a[i][r] table: n={n} code={table.tree.code}"]
        for i in range(n // 2 + 1):
            for r in range(n + 1):
                lines.append(f"  i={i} r={r}: {table.at(i, r)}")
        text = "\n".join(lines) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["tree", "i", "r", "value"])
        for i in range(n // 2 + 1):
            for r in range(n + 1):
                writer.writerow([table.tree.code, i, r, table.at(i, r).csv_cell()])
        text = buf.getvalue()
    elif fmt == "json":
        obj = {
            "tree": table.tree.code,
            "n": n,
            "values": [
                {"i": i, "r": r, "value": table.at(i, r).to_json_obj()}
                for i in range(n // 2 + 1)
                for r in range(n + 1)
            ],
        }
        text = _json_dump(obj)
    else:
        print(f"error: format must be text, csv or json, got {fmt}", file=sys.stderr)
        return 2
    _write_or_print(text, opts.get("out"))
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


@dataclass
class SweepConfig:
    """Configuration of one verification sweep."""

    n: int
    bases: tuple[str, ...] = BASES
    lambda_filter: str | None = None
    mode: str = "auto"  # signed | absolute | auto (absolute for f, signed otherwise)
    out: str | None = None
    fmt: str = "json"
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("sweep needs n >= 2")
        if not self.bases:
            raise ValueError("sweep needs at least one basis")
        bad = [b for b in self.bases if b not in BASES]
        if bad:
            raise ValueError(f"unknown bases {bad}")
        if self.mode not in ("signed", "absolute", "auto"):
            raise ValueError(f"mode must be signed, absolute or auto, got {self.mode}")
        if self.fmt not in ("json", "csv"):
            raise ValueError(f"format must be json or csv, got {self.fmt}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")

    def effective_mode(self, basis: str) -> str:
        if self.mode == "auto":
            return "absolute" if basis == "f" else "signed"
        return self.mode


def _tree_tables_worker(payload):
    """Per-tree table computation: signed coefficient lists for every gamma
    plus the a[i][r] table, all from one matching profile."""
    n, code, edges, gamma_items, air_items = payload
    tree = LabeledTree(n, edges)
    profile = matching_profile(tree)
    coeffs = {}
    for basis, parts, gamma_j in gamma_items:
        poly = coefficients_from_profile(profile, n, gamma_j)
        coeffs[(basis, parts)] = poly.signed
    air_values = {}
    for i, gamma_j in air_items:
        poly = coefficients_from_profile(profile, n, gamma_j)
        scale = Fraction(1, 2**i)
        for r in range(n + 1):
            air_values[(i, r)] = poly.signed_coefficient(r) * scale
    return code, coeffs, air_values


def run_sweep(cfg: SweepConfig, collect_reports: bool = False):
    """Run the full monotonicity sweep.

    Returns (summary, monotone_reports, air_reports, ok); the report lists
    are populated only when collect_reports is set (they can be large)."""
    n = cfg.n
    trees = enumerate_free_trees(n)
    pairs = proper_gts_pairs(n)
    match = parse_shape_pattern(cfg.lambda_filter)
    lambdas = [lam for lam in enumerate_partitions(n) if match(lam)]
    gamma_items = [
        (basis, lam.parts, involution_class_values(power_expansion(basis, lam)))
        for basis in cfg.bases
        for lam in lambdas
    ]
    air_items = [
        (i, involution_class_values(power_expansion("m", Partition.involution_shape(n, i))))
        for i in range(n // 2 + 1)
    ]
    payloads = [
        (n, t.code, tuple(t.representative.edges()), gamma_items, air_items) for t in trees
    ]
    if cfg.jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_tree_tables_worker, payloads, chunksize=1))
    else:
        results = [_tree_tables_worker(p) for p in payloads]
    coeff_tables = {code: coeffs for code, coeffs, _ in results}
    air_tables = {code: air for code, _, air in results}

    monotone_reports = []
    air_reports = []
    failures: list[str] = []
    monotone_total = monotone_failed = 0
    air_total = air_failed = 0
    for pair in pairs:
        lo, up = pair.lower.code, pair.upper.code
        for basis in cfg.bases:
            mode = cfg.effective_mode(basis)
            for lam in lambdas:
                report = monotone_report_from_coeffs(
                    lo, up,
                    coeff_tables[lo][(basis, lam.parts)],
                    coeff_tables[up][(basis, lam.parts)],
                    mode, basis=basis, lam=lam,
                )
                monotone_total += 1
                if not report.ok:
                    monotone_failed += 1
                    bad_r = [e.r for e in report.per_r if not e.ok]
                    failures.append(
                        f"monotone lower={lo} upper={up} basis={basis} "
                        f"lambda={lam.to_exp_string()} mode={mode} r={bad_r}"
                    )
                if collect_reports:
                    monotone_reports.append(report)
        report = air_monotone_report_from_tables(lo, up, air_tables[lo], air_tables[up], n)
        air_total += 1
        if not report.ok:
            air_failed += 1
            bad = [(e.i, e.r) for e in report.entries if not e.ok]
            failures.append(f"air lower={lo} upper={up} entries={bad}")
        if collect_reports:
            air_reports.append(report)

    summary = {
        "n": n,
        "bases": list(cfg.bases),
        "lambda": cfg.lambda_filter or "*",
        "mode": cfg.mode,
        "jobs": cfg.jobs,
        "trees": len(trees),
        "pairs": len(pairs),
        "lambdas": len(lambdas),
        "monotoneChecks": monotone_total,
        "monotoneFailures": monotone_failed,
        "airChecks": air_total,
        "airFailures": air_failed,
        "failures": failures,
    }
    ok = monotone_failed == 0 and air_failed == 0
    return summary, monotone_reports, air_reports, ok


def _sweep_report_text(cfg: SweepConfig, summary: dict,
                       monotone_reports, air_reports) -> str:
    if cfg.fmt == "json":
        obj = {
            "config": {
                "n": cfg.n,
                "bases": list(cfg.bases),
                "lambda": cfg.lambda_filter or "*",
                "mode": cfg.mode,
            },
            "summary": {k: v for k, v in summary.items() if k not in ("failures", "jobs")},
            "monotone": [r.to_json_obj() for r in monotone_reports],
            "air": [r.to_json_obj() for r in air_reports],
        }
        return _json_dump(obj)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["check", "lower", "upper", "basis", "lambda", "mode", "i", "r",
                     "difference", "pass"])
    for rep in monotone_reports:
        lam_s = ",".join(map(str, rep.lam.parts)) if rep.lam else ""
        for e in rep.per_r:
            writer.writerow(["monotone", rep.lower_code, rep.upper_code, rep.basis,
                             lam_s, rep.mode, "", e.r, e.difference.csv_cell(),
                             "pass" if e.ok else "FAIL"])
    for rep in air_reports:
        for e in rep.entries:
            writer.writerow(["air", rep.lower_code, rep.upper_code, "", "", "",
                             e.i, e.r, e.difference.csv_cell(),
                             "pass" if e.ok else "FAIL"])
    return buf.getvalue()


def cmd_verify(args: argparse.Namespace) -> int:
    opts = _Options(args)
    try:
        bases_text = opts.get("bases", ",".join(BASES))
        cfg = SweepConfig(
            n=opts.get("n", conv=int) or 0,
            bases=_parse_bases(bases_text),
            lambda_filter=opts.get("lambda"),
            mode=opts.get("mode", "auto"),
            out=opts.get("out"),
            fmt=opts.get("format", "json"),
            jobs=opts.get("jobs", 1, conv=int),
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    summary, monotone_reports, air_reports, ok = run_sweep(
        cfg, collect_reports=cfg.out is not None
    )
    if cfg.out is not None:
        _write_or_print(_sweep_report_text(cfg, summary, monotone_reports, air_reports),
                        cfg.out)
    print(
        f"verify n={cfg.n} bases={','.join(cfg.bases)} lambda={summary['lambda']} "
        f"mode={cfg.mode} jobs={cfg.jobs}"
    )
    print(
        f"trees={summary['trees']} pairs={summary['pairs']} lambdas={summary['lambdas']}"
    )
    print(f"monotone checks: {summary['monotoneChecks']}, failures: {summary['monotoneFailures']}")
    print(f"air checks: {summary['airChecks']}, failures: {summary['airFailures']}")
    for line in summary["failures"][:20]:
        print(f"  FAIL {line}")
    if len(summary["failures"]) > 20:
        print(f"  ... and {len(summary['failures']) - 20} more")
    print(f"RESULT: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treegmf",
        description="Exact generalized matrix polynomials of tree q-Laplacians "
        "and monotonicity verification over the proper-shift poset.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", help="KEY=VALUE config file; flags override")
        p.add_argument("--out", help=f"output path (relative paths resolve under ${OUT_DIR_ENV})")

    p = sub.add_parser("trees", help="list all unlabeled trees on n vertices")
    p.add_argument("--n", type=int)
    add_common(p)
    p.set_defaults(func=cmd_trees)

    p = sub.add_parser("poset", help="export the proper-shift digraph")
    p.add_argument("--n", type=int)
    p.add_argument("--format", choices=["dot", "json"])
    p.add_argument("--dot", action="store_true", default=None, help="shorthand for --format dot")
    add_common(p)
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("alpha-table", help="binomial-transform table for one basis")
    p.add_argument("--n", type=int)
    p.add_argument("--basis", choices=list(BASES))
    p.add_argument("--format", choices=["text", "csv", "json"])
    add_common(p)
    p.set_defaults(func=cmd_alpha_table)

    p = sub.add_parser("gmf", help="generalized matrix polynomial of one tree")
    p.add_argument("--tree", help="tree file (edge-list text or JSON)")
    p.add_argument("--basis", choices=list(BASES))
    p.add_argument("--lambda", dest="lambda", help='partition, e.g. "2,1,1" or "2^2,1^3"')
    p.add_argument("--oracle", action="store_true", default=None,
                   help="also run the permutation-sum oracle and compare")
    p.add_argument("--max-brute", type=int, help="size guard for the oracle (default 9)")
    p.add_argument("--format", choices=["text", "csv", "json"])
    add_common(p)
    p.set_defaults(func=cmd_gmf)

    p = sub.add_parser("air-table", help="a[i][r] polynomial table of one tree")
    p.add_argument("--tree", help="tree file (edge-list text or JSON)")
    p.add_argument("--format", choices=["text", "csv", "json"])
    add_common(p)
    p.set_defaults(func=cmd_air_table)

    p = sub.add_parser("verify", help="monotonicity sweep over all proper shift pairs")
    p.add_argument("--n", type=int)
    p.add_argument("--bases", "--basis", dest="bases",
                   help=f"comma list from {{{','.join(BASES)}}} (default all)")
    p.add_argument("--lambda", dest="lambda", help='shape pattern, e.g. "2^k,1^*" (default all)')
    p.add_argument("--mode", choices=["signed", "absolute", "auto"])
    p.add_argument("--format", choices=["json", "csv"])
    p.add_argument("--jobs", type=int, help="parallel workers for per-tree tables")
    add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
