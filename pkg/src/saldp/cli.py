"""Command-line interface.

Exit codes: 0 whenever a verdict was computed (the verdict is in the JSON),
1 for unreadable or invalid input, 2 for an internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .classifier import NotSALdP, classify
from .descriptor import dumps, from_config, parse, parse_rational
from .enumeration import DEFAULT_N_MAX, enumerate_rank2_saldp, minimal_base_list
from .errors import InvalidInputError, InvariantViolation
from .flags import FlagWitness, default_max_degree, enumerate_flag_families
from .lattice import DivisorClass
from .positivity import ample_at_beta, failing_forms, is_strongly_asymptotically_ample
from .reduction import DEFAULT_BOUND, blowdown_type, partition_minus_one, reduce_to_rank2


def _cls(c: DivisorClass) -> dict:
    out = {"base": list(c.base)}
    if c.exceptional:
        out["exceptional"] = list(c.exceptional)
    return out


def _witness(w: FlagWitness) -> dict:
    return {
        "kind": w.kind,
        "sigma": list(w.sigma.base),
        "component": w.component,
        "points": list(w.point_ids),
        "mults": list(w.mults),
        "condition": w.fired_condition,
    }


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text)


def cmd_base_list(args) -> list:
    families = enumerate_rank2_saldp(args.n_max)
    if args.minimal:
        families = minimal_base_list(args.n_max, families)
    return [f.to_json() for f in families]


def cmd_flags(args) -> dict:
    desc = _load(args.pair)
    pair = desc.pair()
    max_degree = args.max_degree if args.max_degree is not None else default_max_degree()
    fams = enumerate_flag_families(pair, max_degree, args.max_m)
    out = []
    for f in fams:
        d = {"kind": f.kind, "unbounded": f.unbounded}
        if f.kind == "boundary":
            d.update(component=f.component, comparison=f.comparison, threshold=f.threshold)
        else:
            d.update(sigma=list(f.sigma.base), points_per_component=list(f.points_per_component))
        out.append(d)
    return {"families": out, "max_degree": max_degree, "max_m": args.max_m}


def cmd_classify(args) -> dict:
    desc = _load(args.pair)
    verdict = classify(desc.config())
    if isinstance(verdict, NotSALdP):
        out = {"verdict": False, "reason": verdict.reason}
        if verdict.witness is not None:
            out["witness"] = _witness(verdict.witness)
        if verdict.failing_forms:
            out["failing_forms"] = [
                {"constant": f.constant, "coefficients": list(f.coefficients), "text": str(f)}
                for f in verdict.failing_forms
            ]
        return out
    return {"verdict": True, "tag": str(verdict), "label": verdict.label, "n": verdict.n, "m": verdict.m,
            "max_degree": default_max_degree()}


def cmd_check(args) -> dict:
    desc = _load(args.pair)
    pair = desc.pair()
    if args.beta is not None:
        beta = tuple(parse_rational(x.strip(), "--beta") for x in args.beta.split(","))
    elif desc.beta is not None:
        beta = desc.beta
    else:
        raise InvalidInputError("no beta given: pass --beta or put \"beta\" in the descriptor")
    return {
        "ample_at_beta": ample_at_beta(pair, beta),
        "beta": [str(b) for b in beta],
        "strongly_asymptotically_ample": is_strongly_asymptotically_ample(pair),
        "failing_forms": [str(f) for f in failing_forms(pair)],
    }


def cmd_minus_one(args) -> dict:
    config = _load(args.pair).config()
    part = partition_minus_one(config, bound=args.bound)
    return {
        "perp": [_cls(c) for c in part.perp],
        "away": [_cls(c) for c in part.away],
        "in_boundary": [{**_cls(c), "type": blowdown_type(config, c, part)} for c in part.in_boundary],
        "out_of_model": [_cls(c) for c in part.out_of_model],
        "bound": part.bound,
        "capped": part.capped,
    }


def cmd_reduce(args) -> dict:
    config = _load(args.pair).config()
    base, report = reduce_to_rank2(config)
    return {
        "reduced_base": from_config(type(config)(base)).to_json(),
        "equivalent": from_config(report.equivalent).to_json(),
        "contractions": [
            {**_cls(c.curve), "type": c.kind, "point": c.point_id, "on": c.on} for c in report.contractions
        ],
    }


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="saldp", description="Strongly asymptotically log del Pezzo pairs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("base-list", help="rank <= 2 families found by exhaustive search")
    s.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    s.add_argument("--minimal", action="store_true", help="drop one-point blow-ups of other families")
    s.set_defaults(func=cmd_base_list)

    s = sub.add_parser("flags", help="flag families of a rank <= 2 pair")
    s.add_argument("--pair", required=True)
    s.add_argument("--max-degree", type=int, default=None)
    s.add_argument("--max-m", type=int, default=12)
    s.set_defaults(func=cmd_flags)

    s = sub.add_parser("classify", help="verdict and label for a pair or blow-up configuration")
    s.add_argument("--pair", required=True)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("check", help="ampleness at a concrete rational beta")
    s.add_argument("--pair", required=True)
    s.add_argument("--beta", help='comma-separated rationals, e.g. "1/8,1/16"')
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("minus-one", help="-1-curves split by how they meet the boundary")
    s.add_argument("--pair", required=True)
    s.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    s.set_defaults(func=cmd_minus_one)

    s = sub.add_parser("reduce", help="contract proper -1-curves down to a rank <= 2 base")
    s.add_argument("--pair", required=True)
    s.set_defaults(func=cmd_reduce)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except InvalidInputError as exc:
        sys.stderr.write(dumps({"error": "invalid-input", "message": str(exc)}))
        return 1
    except InvariantViolation as exc:
        sys.stderr.write(dumps({"error": "invariant-violation", "message": str(exc)}))
        return 2
    sys.stdout.write(dumps(result))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
