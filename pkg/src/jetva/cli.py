"""Command-line interface.

Every subcommand reads a scheme-with-symmetry description from a JSON file

    {"m": 2, "variables": ["x1", "x2"], "relations": ["x1^2 - x2"],
     "exponents": [1, 0]}

and emits a report, as JSON or as text rendering the same content:

    {"command": ..., "inputs": ..., "results": ...,
     "checks": [{"name": ..., "pass": ..., "witness"?: ...}]}

Scalars are serialized as exact strings.  Exit status: 0 when every check
passed, 1 when some check failed, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from fractions import Fraction

from .coinv import OrbiSetup, verify_fixed_ring
from .jetpoly import JetPoly, eigen_index
from .jetscheme import (
    DiagAutomorphism,
    IdealNotPreservedError,
    SchemeSpec,
    fixed_point_ring,
    jet_generators,
    twisted_jet_generators,
)
from .parse import ParseError, format_poly, parse_expression
from .quasiconf import check_commutators
from .reports import CheckResult
from .twisted import check_twisted_axioms, check_twisted_borcherds
from .va import check_borcherds, check_va_axioms

_IDENT = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")


class InputError(ValueError):
    """Invalid input file or flag combination (exit status 2)."""


def load_spec(path: str):
    """Read and validate a scheme description, returning
    (spec, automorphism, variable names, relation source strings)."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON in {path}: {e}") from e
    if not isinstance(data, dict):
        raise InputError("the description must be a JSON object")
    missing = {"m", "variables", "relations", "exponents"} - set(data)
    if missing:
        raise InputError(f"missing keys: {', '.join(sorted(missing))}")

    m = data["m"]
    if not isinstance(m, int) or m < 1:
        raise InputError("m must be an integer >= 1")

    names = data["variables"]
    if not isinstance(names, list) or not all(isinstance(s, str) for s in names):
        raise InputError("variables must be a list of strings")
    for s in names:
        if not _IDENT.match(s):
            raise InputError(f"invalid variable name {s!r}")
        if s == "zeta":
            raise InputError('"zeta" is reserved for the root of unity')
    if len(set(names)) != len(names):
        raise InputError("variable names must be distinct")

    rel_texts = data["relations"]
    if not isinstance(rel_texts, list) or not all(
        isinstance(s, str) for s in rel_texts
    ):
        raise InputError("relations must be a list of strings")
    relations = []
    for text in rel_texts:
        try:
            relations.append(parse_expression(text, m, names))
        except ParseError as e:
            raise InputError(f"cannot parse relation {text!r}: {e}") from e

    exps = data["exponents"]
    if (
        not isinstance(exps, list)
        or len(exps) != len(names)
        or not all(isinstance(a, int) for a in exps)
    ):
        raise InputError("exponents must be a list of integers, one per variable")
    if any(not 0 <= a < m for a in exps):
        raise InputError(f"exponents must lie in 0..{m - 1}")

    spec = SchemeSpec(m, tuple(range(1, len(names) + 1)), tuple(relations))
    g = DiagAutomorphism(m, tuple(exps))
    return spec, g, names, rel_texts


def _fraction_flag(text: str, flag: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"invalid {flag} {text!r}: {e}") from e


def _base_inputs(args, spec, g, names) -> dict:
    return {
        "input": args.input,
        "m": g.order,
        "variables": list(names),
        "relations": [format_poly(p, names) for p in spec.relations],
        "exponents": list(g.exponents),
        "seed": args.seed,
    }


def _gen_records(pres) -> list[dict]:
    return [
        {"relation": gen.relation, "weight": str(gen.weight), "poly": str(gen.poly)}
        for gen in pres.generators
    ]


def _random_sources(rng: random.Random, order: int, k: int, count: int) -> list[JetPoly]:
    out = []
    for _ in range(count):
        p = JetPoly.one(order)
        for _f in range(rng.randint(1, 3)):
            p = p * JetPoly.var(order, rng.randint(1, k), -rng.randint(0, 2))
        out.append(p)
    return out


def _coset_indices(r: int, m: int, bound: int) -> list[Fraction]:
    base = Fraction(r, m)
    out = []
    t = -bound - 1
    while base + t <= bound:
        if abs(base + t) <= bound:
            out.append(base + t)
        t += 1
    return out


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_jet(args):
    spec, g, names, _ = load_spec(args.input)
    W = _fraction_flag(args.max_weight, "--max-weight")
    if W.denominator != 1 or W < 0:
        raise InputError("--max-weight must be a nonnegative integer here")
    pres_t = jet_generators(spec, int(W), "T_recursion")
    pres_s = jet_generators(spec, int(W), "substitution")
    seen_t = {(g_.relation, g_.weight): g_.poly for g_ in pres_t.generators}
    seen_s = {(g_.relation, g_.weight): g_.poly for g_ in pres_s.generators}
    ok = seen_t == seen_s
    witness = None
    if not ok:
        key = sorted(set(seen_t) ^ set(seen_s) | {
            k for k in set(seen_t) & set(seen_s) if seen_t[k] != seen_s[k]
        })[0]
        witness = f"relation {key[0]}, weight {key[1]}"
    checks = [CheckResult("translation and substitution generators agree", ok, witness)]
    inputs = _base_inputs(args, spec, g, names)
    inputs["max_weight"] = str(W)
    results = {
        "variables": [str(v) for v in pres_t.variables],
        "generators": _gen_records(pres_t),
    }
    return {"command": "jet", "inputs": inputs, "results": results}, checks


def cmd_twisted_jet(args):
    spec, g, names, _ = load_spec(args.input)
    W = _fraction_flag(args.max_weight, "--max-weight")
    try:
        pres = twisted_jet_generators(spec, g, W)
    except IdealNotPreservedError as e:
        raise InputError(str(e)) from e
    checks = [CheckResult("relation span preserved by the action", True)]
    inputs = _base_inputs(args, spec, g, names)
    inputs["max_weight"] = str(W)
    results = {
        "variables": [str(v) for v in pres.variables],
        "generators": _gen_records(pres),
    }
    return {"command": "twisted-jet", "inputs": inputs, "results": results}, checks


def cmd_fixed_points(args):
    spec, g, names, _ = load_spec(args.input)
    fixed = fixed_point_ring(spec, g)
    inputs = _base_inputs(args, spec, g, names)
    results = {
        "variables": [names[idx - 1] for idx in fixed.variables],
        "relations": [format_poly(p, names) for p in fixed.relations],
    }
    return {"command": "fixed-points", "inputs": inputs, "results": results}, []


def _sources(args, spec, g, names, require_eigen: bool):
    rng = random.Random(args.seed)
    alpha = g.alpha_by_index(spec)
    sources: list[tuple[str, JetPoly]] = []
    for i, name in enumerate(names, start=1):
        sources.append((name, JetPoly.var(g.order, i)))
    skipped = []
    for text, p in zip(
        [format_poly(p, names) for p in spec.relations], spec.relations
    ):
        if p.is_zero:
            continue
        if require_eigen and eigen_index(p, alpha) is None:
            skipped.append(text)
            continue
        sources.append((text, p))
    for p in _random_sources(rng, g.order, len(names), args.random_samples):
        sources.append((str(p), p))
    return sources, skipped


def cmd_check_va(args):
    spec, g, names, _ = load_spec(args.input)
    W = Fraction(args.window)
    B = args.index_bound
    sources, _ = _sources(args, spec, g, names, require_eigen=False)
    alpha = g.alpha_by_index(spec)
    checks: list[CheckResult] = []
    for label, a in sources:
        for c in check_va_axioms(a, W, alpha=alpha, samples=[p for _, p in sources]):
            checks.append(CheckResult(f"[a = {label}] {c.name}", c.passed, c.witness))
    for la, a in sources:
        for lb, b in sources:
            for mi in range(-B, B + 1):
                for ni in range(-B, B + 1):
                    for ki in range(-B, B + 1):
                        c = check_borcherds(a, b, mi, ni, ki, W)
                        checks.append(
                            CheckResult(
                                f"[a = {la}, b = {lb}] {c.name}", c.passed, c.witness
                            )
                        )
    inputs = _base_inputs(args, spec, g, names)
    inputs["window"] = str(W)
    inputs["index_bound"] = B
    inputs["random_samples"] = args.random_samples
    failed = sum(1 for c in checks if not c.passed)
    results = {
        "sources": [label for label, _ in sources],
        "counts": {"total": len(checks), "failed": failed},
    }
    return {"command": "check-va", "inputs": inputs, "results": results}, checks


def cmd_check_twisted(args):
    spec, g, names, _ = load_spec(args.input)
    W = Fraction(args.window)
    B = args.index_bound
    alpha = g.alpha_by_index(spec)
    sources, skipped = _sources(args, spec, g, names, require_eigen=True)
    checks: list[CheckResult] = []
    for (la, a), (lb, b) in zip(sources, sources[1:] + sources[:1]):
        for c in check_twisted_axioms(a, b, g, W, spec):
            checks.append(CheckResult(f"[a = {la}, b = {lb}] {c.name}", c.passed, c.witness))
    for la, a in sources:
        ra = eigen_index(a, alpha)
        for lb, b in sources:
            rb = eigen_index(b, alpha)
            for li in range(-B, B + 1):
                for mi in _coset_indices(ra, g.order, B):
                    for ni in _coset_indices(rb, g.order, B):
                        c = check_twisted_borcherds(a, b, g, li, mi, ni, W, spec)
                        checks.append(
                            CheckResult(
                                f"[a = {la}, b = {lb}] {c.name}", c.passed, c.witness
                            )
                        )
    inputs = _base_inputs(args, spec, g, names)
    inputs["window"] = str(W)
    inputs["index_bound"] = B
    inputs["random_samples"] = args.random_samples
    failed = sum(1 for c in checks if not c.passed)
    results = {
        "sources": [label for label, _ in sources],
        "skipped_sources": skipped,
        "counts": {"total": len(checks), "failed": failed},
    }
    return {"command": "check-twisted", "inputs": inputs, "results": results}, checks


def cmd_check_quasiconf(args):
    spec, g, names, _ = load_spec(args.input)
    W = _fraction_flag(args.max_weight, "--max-weight")
    checks = check_commutators(g, args.index_bound, W)
    inputs = _base_inputs(args, spec, g, names)
    inputs["max_weight"] = str(W)
    inputs["index_bound"] = args.index_bound
    failed = sum(1 for c in checks if not c.passed)
    results = {"counts": {"total": len(checks), "failed": failed}}
    return {
        "command": "check-quasiconf",
        "inputs": inputs,
        "results": results,
    }, checks


def cmd_coinvariants(args):
    spec, g, names, _ = load_spec(args.input)
    W = _fraction_flag(args.max_weight, "--max-weight")
    D = args.max_degree
    try:
        setup = OrbiSetup(spec, g, W, D)
        dims, checks = verify_fixed_ring(setup)
    except IdealNotPreservedError as e:
        raise InputError(str(e)) from e
    inputs = _base_inputs(args, spec, g, names)
    inputs["max_weight"] = str(W)
    inputs["max_degree"] = D
    results = {
        "dimensions": [
            {"weight": str(w), "degree": d, "dim": v}
            for (w, d), v in sorted(dims.items())
        ]
    }
    return {"command": "coinvariants", "inputs": inputs, "results": results}, checks


# ---------------------------------------------------------------------------
# report rendering
# ---------------------------------------------------------------------------


def render_text(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    lines.append("inputs:")
    _render_obj(report["inputs"], lines, 2)
    lines.append("results:")
    _render_obj(report["results"], lines, 2)
    lines.append("checks:")
    for c in report["checks"]:
        mark = "PASS" if c["pass"] else "FAIL"
        line = f"  [{mark}] {c['name']}"
        if c.get("witness"):
            line += f" :: {c['witness']}"
        lines.append(line)
    return "\n".join(lines)


def _render_obj(obj, lines: list[str], indent: int) -> None:
    pad = " " * indent
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                _render_obj(v, lines, indent + 2)
            else:
                lines.append(f"{pad}{k}: {v}")
        return
    for v in obj:
        if isinstance(v, dict) and all(
            not isinstance(x, (dict, list)) for x in v.values()
        ):
            body = "  ".join(f"{k}={x}" for k, x in v.items())
            lines.append(f"{pad}- {body}")
        elif isinstance(v, (dict, list)):
            lines.append(f"{pad}-")
            _render_obj(v, lines, indent + 2)
        else:
            lines.append(f"{pad}- {v}")


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="jetva",
        description="Exact jet-scheme fields, their axioms, and orbifold "
        "coinvariants.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--input", required=True, help="scheme description JSON")
        p.add_argument(
            "--format", choices=("json", "text"), default="text", help="report format"
        )
        p.add_argument("--seed", type=int, default=0, help="sampling seed")

    p = sub.add_parser("jet", help="jet-equation generators, two ways")
    common(p)
    p.add_argument("--max-weight", default="4")
    p.set_defaults(run=cmd_jet)

    p = sub.add_parser("twisted-jet", help="twisted jet-equation generators")
    common(p)
    p.add_argument("--max-weight", default="4")
    p.set_defaults(run=cmd_twisted_jet)

    p = sub.add_parser("fixed-points", help="fixed subscheme presentation")
    common(p)
    p.set_defaults(run=cmd_fixed_points)

    p = sub.add_parser("check-va", help="vertex-algebra axioms at a window")
    common(p)
    p.add_argument("--window", type=int, default=6)
    p.add_argument("--index-bound", type=int, default=1)
    p.add_argument("--random-samples", type=int, default=1)
    p.set_defaults(run=cmd_check_va)

    p = sub.add_parser("check-twisted", help="twisted-module axioms at a window")
    common(p)
    p.add_argument("--window", type=int, default=6)
    p.add_argument("--index-bound", type=int, default=1)
    p.add_argument("--random-samples", type=int, default=1)
    p.set_defaults(run=cmd_check_twisted)

    p = sub.add_parser("check-quasiconf", help="weight-shift commutators")
    common(p)
    p.add_argument("--max-weight", default="4")
    p.add_argument("--index-bound", type=int, default=3)
    p.set_defaults(run=cmd_check_quasiconf)

    p = sub.add_parser("coinvariants", help="orbifold coinvariant dimensions")
    common(p)
    p.add_argument("--max-weight", default="3")
    p.add_argument("--max-degree", type=int, default=3)
    p.set_defaults(run=cmd_coinvariants)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, checks = args.run(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    report["checks"] = [c.to_dict() for c in checks]
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(render_text(report))
    return 0 if all(c.passed for c in checks) else 1


if __name__ == "__main__":
    sys.exit(main())
