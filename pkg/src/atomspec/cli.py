"""Command surface: JSON files in, JSON or text records out.

Exit codes: 0 success, 2 malformed input, 3 unsupported input (including
enumeration caps and gradings that need a truncation bound), 4 internal
invariant violation (notably any disagreement between the two decision
routes, which is never reported as a silent answer).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Optional

from . import corpus
from .atoms import atom_support_generators, fiber_classes, fiber_invariants
from .errors import (
    AtomspecError,
    InputError,
    InternalInvariantError,
    UnsupportedInputError,
)
from .filtration import prime_filtration, verify_filtration
from .intlinalg import GroupElement
from .rings import MonomialPrime, PresentedModule, iterate_monomials
from .serialize import (
    dump_cox,
    dump_element,
    load_cox,
    load_json_file,
    load_module,
    load_ring_context,
)
from .sheafkernel import sheafifies_to_zero, sheafifies_to_zero_loc
from .toric import irrelevant_ideal
from .verification import run_verification, window_cyclic_modules

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_UNSUPPORTED = 3
EXIT_INTERNAL = 4


@dataclass
class CommandRequest:
    """A parsed invocation: command name, input paths, and options."""

    command: str
    paths: dict[str, str] = field(default_factory=dict)
    options: dict[str, Any] = field(default_factory=dict)


def max_threads_from_env() -> int:
    raw = os.environ.get("ATOMSPEC_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise InputError(f"ATOMSPEC_THREADS must be an integer, got {raw!r}")


def _prime_from_option(ring, raw: Optional[str]) -> MonomialPrime:
    if not raw:
        return MonomialPrime(ring, frozenset())
    try:
        indices = frozenset(int(part) for part in raw.split(",") if part.strip() != "")
    except ValueError:
        raise InputError(f"prime must be a comma-separated index list, got {raw!r}")
    return MonomialPrime(ring, indices)


def _factor_record(prime: MonomialPrime, twist: GroupElement, reason: Optional[str] = None) -> dict:
    record = {"prime": sorted(prime.indices), "twist": dump_element(twist)}
    if reason is not None:
        record["reason"] = reason
    return record


def _default_sample_degrees(module: PresentedModule, depth: int) -> list[GroupElement]:
    ring = module.ring
    seen = {}
    for b in module.generator_degrees:
        for m in iterate_monomials(ring.nvars, depth):
            g = b + ring.degree_of(m)
            seen.setdefault(g.canonical_coords(), g)
    return [seen[key] for key in sorted(seen)]


def run(request: CommandRequest) -> tuple[dict, int]:
    """Execute a request and return (output record, exit code)."""
    handler = _HANDLERS.get(request.command)
    if handler is None:
        raise InputError(f"unknown command {request.command!r}")
    return handler(request)


def _cmd_check_zero(request: CommandRequest) -> tuple[dict, int]:
    cox = load_cox(load_json_file(request.paths["cox"]))
    module = load_module(cox.ring, load_json_file(request.paths["module"]))
    decision = sheafifies_to_zero(cox, module)
    loc_verdict = sheafifies_to_zero_loc(cox, module, max_threads=max_threads_from_env())
    record = {
        "zero": decision.verdict,
        "factors": [
            _factor_record(f.prime, f.twist, f.reason) for f in decision.factors
        ],
        "loc_route": loc_verdict,
        "routes_agree": decision.verdict == loc_verdict,
    }
    if decision.verdict != loc_verdict:
        raise InternalInvariantError(
            "decision routes disagree: "
            + json.dumps(record, sort_keys=True)
        )
    return record, EXIT_OK


def _cmd_filtration(request: CommandRequest) -> tuple[dict, int]:
    ring = load_ring_context(load_json_file(request.paths["ring"]))
    module = load_module(ring, load_json_file(request.paths["module"]))
    filtration = prime_filtration(module, allow_uncertified=True)
    record: dict[str, Any] = {
        "factors": [_factor_record(p, twist) for p, twist in filtration.factors]
    }
    depth = request.options.get("sample_depth", 4)
    truncate = request.options.get("truncate")
    degrees = _default_sample_degrees(module, depth)
    try:
        passed = verify_filtration(module, filtration, degrees, truncate)
        record["verification"] = {
            "passed": passed,
            "sampled_degrees": [dump_element(g) for g in degrees],
        }
    except UnsupportedInputError:
        record["verification"] = {"skipped": "needs-bound"}
    return record, EXIT_OK


def _cmd_asupp(request: CommandRequest) -> tuple[dict, int]:
    ring = load_ring_context(load_json_file(request.paths["ring"]))
    module = load_module(ring, load_json_file(request.paths["module"]))
    atoms = atom_support_generators(module)
    return {
        "atoms": [
            {
                "prime": sorted(a.prime.indices),
                "rep": dump_element(a.rep),
                "standard": a.is_standard(),
            }
            for a in atoms
        ]
    }, EXIT_OK


def _cmd_fiber(request: CommandRequest) -> tuple[dict, int]:
    ring = load_ring_context(load_json_file(request.paths["ring"]))
    prime = _prime_from_option(ring, request.options.get("prime"))
    free_rank, torsion = fiber_invariants(ring, prime)
    return {
        "prime": sorted(prime.indices),
        "free_rank": free_rank,
        "torsion": list(torsion),
    }, EXIT_OK


def _cmd_fiber_classes(request: CommandRequest) -> tuple[dict, int]:
    ring = load_ring_context(load_json_file(request.paths["ring"]))
    cap = request.options.get("cap", 20)
    classes = fiber_classes(ring, cap)
    ordered = sorted(classes, key=lambda c: (c[0], c[1]))
    return {
        "classes": [{"free_rank": r, "torsion": list(t)} for r, t in ordered]
    }, EXIT_OK


def _cmd_irrelevant(request: CommandRequest) -> tuple[dict, int]:
    cox = load_cox(load_json_file(request.paths["cox"]))
    ideal = irrelevant_ideal(cox)
    return {
        "generators": [list(m.exponents) for m in ideal.generators],
        "pretty": [cox.ring.format_monomial(m) for m in ideal.generators],
    }, EXIT_OK


def _cmd_cox_from_fan(request: CommandRequest) -> tuple[dict, int]:
    cox = load_cox(load_json_file(request.paths["fan"]))
    return dump_cox(cox), EXIT_OK


def _cmd_verify(request: CommandRequest) -> tuple[dict, int]:
    cox = load_cox(load_json_file(request.paths["cox"]))
    seed = request.options.get("seed", 0)
    window = request.options.get("coset_window", 3)
    k_max = request.options.get("k_max", 6)
    samples = request.options.get("samples", 50)
    oracle_modules = list(window_cyclic_modules(cox, window))
    for path in request.options.get("oracle_modules", []):
        oracle_modules.append(load_module(cox.ring, load_json_file(path)))
    report = run_verification(
        cox,
        seed=seed,
        coset_window=window,
        k_max=k_max,
        samples=samples,
        oracle_modules=oracle_modules,
        max_threads=max_threads_from_env(),
    )
    record = {
        "identity_check": report.identity_check,
        "decomposition_check": report.decomposition_check,
        "route_agreement": {
            "checked": report.route_agreement[0],
            "disagreements": report.route_agreement[1],
        },
        "oracle": {
            "checked": report.oracle_consistency[0],
            "inconsistencies": report.oracle_consistency[1],
        },
        "seed": seed,
        "coset_window": window,
        "k_max": k_max,
        "ok": report.ok,
    }
    if not report.ok:
        raise InternalInvariantError(
            "verification failed: " + json.dumps(record, sort_keys=True)
        )
    return record, EXIT_OK


def _cmd_corpus(request: CommandRequest) -> tuple[dict, int]:
    return {
        "directory": str(corpus.corpus_dir()),
        "cox": list(corpus.COX_NAMES),
        "modules": dict(corpus.MODULE_NAMES),
    }, EXIT_OK


_HANDLERS = {
    "check-zero": _cmd_check_zero,
    "filtration": _cmd_filtration,
    "asupp": _cmd_asupp,
    "fiber": _cmd_fiber,
    "fiber-classes": _cmd_fiber_classes,
    "irrelevant": _cmd_irrelevant,
    "cox-from-fan": _cmd_cox_from_fan,
    "verify": _cmd_verify,
    "corpus": _cmd_corpus,
}


def _render_text(record: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for key, value in record.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_render_text(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(_render_text(item, indent + 1))
                lines.append(f"{pad}  -")
            lines.pop()
        else:
            lines.append(f"{pad}{key}: {json.dumps(value)}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="atomspec",
        description="Atom-spectrum data of graded rings and sheafification-kernel decisions.",
    )
    parser.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-zero", help="decide whether a module sheafifies to zero")
    p.add_argument("cox", help="Cox data file")
    p.add_argument("module", help="module file")

    p = sub.add_parser("filtration", help="prime filtration with a verification report")
    p.add_argument("ring", help="ring or Cox data file")
    p.add_argument("module", help="module file")
    p.add_argument("--sample-depth", type=int, default=4, dest="sample_depth")
    p.add_argument("--truncate", type=int, default=None)

    p = sub.add_parser("asupp", help="atom-support generators of a module")
    p.add_argument("ring", help="ring or Cox data file")
    p.add_argument("module", help="module file")

    p = sub.add_parser("fiber", help="fiber invariants over a monomial prime")
    p.add_argument("ring", help="ring or Cox data file")
    p.add_argument("--prime", default="", help="comma-separated variable indices")

    p = sub.add_parser("fiber-classes", help="all fiber classes of a ring")
    p.add_argument("ring", help="ring or Cox data file")
    p.add_argument("--cap", type=int, default=20)

    p = sub.add_parser("irrelevant", help="irrelevant ideal of Cox data")
    p.add_argument("cox", help="Cox data file")

    p = sub.add_parser("cox-from-fan", help="Cox data derived from a fan file")
    p.add_argument("fan", help="fan file")

    p = sub.add_parser("verify", help="run the verification harness on Cox data")
    p.add_argument("cox", help="Cox data file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--coset-window", type=int, default=3, dest="coset_window")
    p.add_argument("--k-max", type=int, default=6, dest="k_max")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument(
        "--oracle-module",
        action="append",
        default=[],
        dest="oracle_modules",
        help="additional module file for the oracle consistency check",
    )

    sub.add_parser("corpus", help="locations of the bundled example corpus")
    return parser


_PATH_KEYS = {
    "check-zero": ("cox", "module"),
    "filtration": ("ring", "module"),
    "asupp": ("ring", "module"),
    "fiber": ("ring",),
    "fiber-classes": ("ring",),
    "irrelevant": ("cox",),
    "cox-from-fan": ("fan",),
    "verify": ("cox",),
    "corpus": (),
}


def request_from_args(args: argparse.Namespace) -> CommandRequest:
    paths = {key: getattr(args, key) for key in _PATH_KEYS[args.command]}
    options = {
        key: value
        for key, value in vars(args).items()
        if key not in ("command", "format") and key not in _PATH_KEYS[args.command]
    }
    return CommandRequest(command=args.command, paths=paths, options=options)


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    request = request_from_args(args)
    try:
        record, code = run(request)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except UnsupportedInputError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except InternalInvariantError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except AtomspecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "json":
        print(json.dumps(record, sort_keys=True, indent=2))
    else:
        print(_render_text(record))
    return code


if __name__ == "__main__":
    sys.exit(main())
