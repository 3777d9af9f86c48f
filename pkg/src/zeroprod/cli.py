"""Command-line front end.

Every command takes an algebra as a JSON file path, ``-`` for stdin, or a
builtin spec such as ``mat:2:3`` or ``ut:2:2``.  Exit codes: 0 success,
1 invalid input, 2 failed hypothesis, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path

from . import algebra as alg_mod
from .algebra import DEFAULT_ELEMENT_BUDGET, Algebra
from .classify import (
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_SUBSPACE_BUDGET,
    ClassificationReport,
    classify_max_zero_product,
    oracle_max_zero_product,
    oracle_randomized,
)
from .exceptions import AlgebraValidationError, BudgetExceeded, HypothesisFailed
from .lie import cross_check_lie, jacobi_violations
from .linalg import Subspace, subspace_count

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_HYPOTHESIS = 2
EXIT_BUDGET = 3


@dataclass
class Config:
    budget_subspaces: int = DEFAULT_SUBSPACE_BUDGET
    budget_elements: int = DEFAULT_ELEMENT_BUDGET
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    output: str | None = None
    format: str = "json"

    def __post_init__(self):
        if self.budget_subspaces <= 0 or self.budget_elements <= 0:
            raise ValueError("budgets must be positive")


def load_algebra(source: str) -> Algebra:
    if source == "-":
        return alg_mod.from_json(sys.stdin.read())
    path = Path(source)
    if path.is_file():
        alg = alg_mod.from_json(path.read_text())
        if not alg.name:
            alg.name = path.stem
        return alg
    if ":" in source:
        return alg_mod.from_spec(source)
    raise AlgebraValidationError(f"no such file or builtin spec: {source!r}")


# ---------------------------------------------------------------------------
# text rendering


def _render_subspace(alg: Algebra, s: Subspace, indent: str = "    ") -> list[str]:
    if s.is_zero():
        return [indent + "(zero)"]
    width = max(len(n) for n in alg.basis_names)
    head = " ".join(n.rjust(width) for n in alg.basis_names)
    lines = [indent + " " + head]
    for row in s.rows:
        lines.append(indent + "[" + " ".join(str(x).rjust(width) for x in row) + "]")
    return lines


def render_report_text(alg: Algebra, report: ClassificationReport) -> str:
    lines = [f"algebra: {report.algebra} (dim {alg.dim} over GF({alg.p}))"]
    lines.append("hypotheses: " + ", ".join(f"{k}={v}" for k, v in report.hypotheses.items()))
    lines.append(f"count: {report.count}")
    for i, e in enumerate(report.entries):
        lines.append(f"entry {i}: dim S = {e.S.dim}")
        for label, s in (("S", e.S), ("R", e.R), ("L", e.L)):
            lines.append(f"  {label}:")
            lines.extend(_render_subspace(alg, s))
    o = report.oracle
    lines.append(f"oracle: ran={o.ran} agrees={o.agrees} mode={o.mode} seed={o.seed}")
    if report.lie is not None:
        lines.append("lie: " + ", ".join(f"{k}={v}" for k, v in report.lie.items()))
    return "\n".join(lines)


def _render_dict_text(data: dict) -> str:
    return "\n".join(f"{k}: {v}" for k, v in data.items())


_INT_LIST = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]")


def dumps(data) -> str:
    """Indented JSON with integer rows kept on one line."""
    text = json.dumps(data, indent=2)
    return _INT_LIST.sub(lambda m: "[" + ", ".join(re.split(r",\s*", m.group(1))) + "]", text)


def _emit(text: str, cfg: Config) -> None:
    if cfg.output:
        Path(cfg.output).write_text(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _emit_dict(data: dict, cfg: Config) -> None:
    _emit(dumps(data) if cfg.format == "json" else _render_dict_text(data), cfg)


# ---------------------------------------------------------------------------
# commands


def cmd_validate(source: str, cfg: Config) -> int:
    try:
        alg = load_algebra(source)
    except AlgebraValidationError as exc:
        _emit_dict({"valid": False, "errors": [str(exc)]}, cfg)
        return EXIT_INVALID
    report = alg_mod.validate(alg)
    jac = jacobi_violations(alg)
    _emit_dict(
        {
            "valid": report.ok,
            "errors": report.errors,
            "dim": alg.dim,
            "p": alg.p,
            "unital": alg.unit is not None,
            "jacobi_ok": not jac,
        },
        cfg,
    )
    return EXIT_OK if report.ok else EXIT_INVALID


def analyze(alg: Algebra, cfg: Config) -> dict:
    b = cfg.budget_elements
    nil = alg_mod.has_nonzero_nilpotent(alg, b)
    semi = alg_mod.is_semiprime(alg, b)
    prime = alg_mod.is_prime(alg, b)
    return {
        "algebra": alg.name or "inline",
        "dim": alg.dim,
        "p": alg.p,
        "unital": alg.unit is not None,
        "simple": alg_mod.is_simple(alg, b),
        "prime": prime.holds,
        "semiprime": semi.holds,
        "semiprime_witness": None if semi.holds else alg.format_element(semi.witness),
        "core_dim": alg_mod.core(alg, b).dim,
        "nilpotent_witness": alg.format_element(nil.witness) if nil.holds else None,
        "idempotent_count": len(alg_mod.enumerate_idempotents(alg, b)),
    }


def cmd_analyze(source: str, cfg: Config) -> int:
    _emit_dict(analyze(load_algebra(source), cfg), cfg)
    return EXIT_OK


def classify_report(alg: Algebra, cfg: Config, oracle: str = "auto") -> ClassificationReport:
    report = classify_max_zero_product(
        alg,
        oracle=oracle,
        seed=cfg.seed,
        samples=cfg.samples,
        budget_subspaces=cfg.budget_subspaces,
        budget_elements=cfg.budget_elements,
    )
    if alg.p >= 5:
        report.lie = cross_check_lie(alg, report).to_dict()
    else:
        report.lie = {"checked": False, "all_abelian_inner": False, "unital_obstruction_found": False}
    return report


def cmd_classify(source: str, cfg: Config, oracle: str = "auto") -> int:
    alg = load_algebra(source)
    report = classify_report(alg, cfg, oracle)
    if cfg.format == "json":
        _emit(dumps(report.to_dict()), cfg)
    else:
        _emit(render_report_text(alg, report), cfg)
    return EXIT_OK


def cmd_oracle(source: str, cfg: Config, mode: str = "auto") -> int:
    alg = load_algebra(source)
    if mode == "auto":
        mode = "exhaustive" if subspace_count(alg.dim, alg.p) <= cfg.budget_subspaces else "randomized"
    if mode == "exhaustive":
        found = oracle_max_zero_product(alg, cfg.budget_subspaces, cfg.budget_elements)
    else:
        found = sorted(
            set(oracle_randomized(alg, cfg.samples, cfg.seed, cfg.budget_elements)),
            key=Subspace.sort_key,
        )
    data = {
        "algebra": alg.name or "inline",
        "mode": mode,
        "seed": cfg.seed,
        "count": len(found),
        "subspaces": [s.to_lists() for s in found],
    }
    _emit(dumps(data) if cfg.format == "json" else _render_dict_text(data), cfg)
    return EXIT_OK


def cmd_lie(source: str, cfg: Config) -> int:
    alg = load_algebra(source)
    rep = cross_check_lie(
        alg,
        oracle="none",
        budget_subspaces=cfg.budget_subspaces,
        budget_elements=cfg.budget_elements,
    )
    data = rep.to_dict()
    data["algebra"] = alg.name or "inline"
    data["obstructions"] = [
        {"S_basis": s.to_lists(), "larger_basis": big.to_lists()} for s, big in rep.obstructions
    ]
    _emit_dict(data, cfg)
    return EXIT_OK


def cmd_matrix(n: int, p: int, cfg: Config) -> int:
    _emit(alg_mod.to_json(alg_mod.mat_algebra(n, p), indent=2), cfg)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


def _int(text: str) -> int:
    return int(text, 0)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_int, default=DEFAULT_SEED)
    common.add_argument("--samples", type=_int, default=DEFAULT_SAMPLES)
    common.add_argument("--budget-subspaces", type=_int, default=DEFAULT_SUBSPACE_BUDGET)
    common.add_argument("--budget-elements", type=_int, default=DEFAULT_ELEMENT_BUDGET)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", default=None, help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="zeroprod",
        description="Annihilator lattices and maximal zero-product subspaces of finite algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("validate", "check associativity and unit axioms"),
        ("analyze", "ring predicates: simple, prime, semiprime, core, nilpotents"),
        ("lie", "commutator-algebra cross-check of the classification"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("input")

    p = sub.add_parser("classify", parents=[common], help="classify maximal zero-product subspaces")
    p.add_argument("input")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--oracle", dest="oracle", action="store_const", const="auto",
                       help="run the oracle: exhaustive within budget, randomized otherwise (default)")
    group.add_argument("--exhaustive-oracle", dest="oracle", action="store_const", const="exhaustive",
                       help="require the exhaustive oracle (budget refusal if it does not fit)")
    group.add_argument("--no-oracle", dest="oracle", action="store_const", const="none")
    group.add_argument("--randomized-oracle", dest="oracle", action="store_const", const="randomized")
    p.set_defaults(oracle="auto")

    p = sub.add_parser("oracle", parents=[common], help="run the brute-force oracle alone")
    p.add_argument("input")
    p.add_argument("--mode", choices=("auto", "exhaustive", "randomized"), default="auto")

    p = sub.add_parser("matrix", parents=[common], help="print mat_algebra(n, p) as JSON")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = Config(
            budget_subspaces=args.budget_subspaces,
            budget_elements=args.budget_elements,
            seed=args.seed,
            samples=args.samples,
            output=args.out,
            format=args.format,
        )
        if args.command == "validate":
            return cmd_validate(args.input, cfg)
        if args.command == "analyze":
            return cmd_analyze(args.input, cfg)
        if args.command == "classify":
            return cmd_classify(args.input, cfg, args.oracle)
        if args.command == "oracle":
            return cmd_oracle(args.input, cfg, args.mode)
        if args.command == "lie":
            return cmd_lie(args.input, cfg)
        if args.command == "matrix":
            return cmd_matrix(args.n, args.p, cfg)
    except (AlgebraValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except HypothesisFailed as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_HYPOTHESIS
    except BudgetExceeded as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BUDGET
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
