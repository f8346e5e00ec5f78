"""JSON wire formats for groups, rings, modules, and Cox data.

All files are UTF-8 JSON.  Groups are written in invariant-factor form
{"free_rank": r, "torsion": [t_1, ...]}, realized on r + #torsion ambient
coordinates with the diagonal relation lattice; elements are plain integer
arrays of that length.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Union

from .errors import InputError, ParseError
from .intlinalg import FgAbelianGroup, GroupElement
from .rings import GradedRing, Monomial, PresentedModule, Term
from .toric import CoxData, FanInput, SigmaComplex, cox_from_fan


def load_json_file(path: Union[str, Path]) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _expect(obj: Any, key: str, context: str) -> Any:
    if not isinstance(obj, dict) or key not in obj:
        raise InputError(f"{context}: missing key '{key}'")
    return obj[key]


def _int_list(value: Any, context: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) for x in value):
        raise InputError(f"{context}: expected a list of integers")
    return value


# ---------------------------------------------------------------------------
# Groups and elements


def load_group(obj: Any) -> FgAbelianGroup:
    free_rank = _expect(obj, "free_rank", "group")
    torsion = _int_list(_expect(obj, "torsion", "group"), "group torsion")
    if not isinstance(free_rank, int) or free_rank < 0:
        raise InputError("group free_rank must be a nonnegative integer")
    return FgAbelianGroup.with_invariants(free_rank, torsion)


def dump_group(group: FgAbelianGroup) -> dict:
    free_rank, torsion = group.invariants()
    normal = FgAbelianGroup.with_invariants(free_rank, torsion)
    if normal != group:
        raise InputError("only groups in invariant-factor presentation serialize")
    return {"free_rank": free_rank, "torsion": list(torsion)}


def load_element(group: FgAbelianGroup, value: Any, context: str = "element") -> GroupElement:
    coords = _int_list(value, context)
    if len(coords) != group.ambient_rank:
        raise InputError(
            f"{context}: expected {group.ambient_rank} coordinates, got {len(coords)}"
        )
    return group.element(coords)


def dump_element(element: GroupElement) -> list[int]:
    return list(element.coords)


# ---------------------------------------------------------------------------
# Rings


def load_ring(obj: Any) -> GradedRing:
    group = load_group(_expect(obj, "group", "ring"))
    variables = _expect(obj, "variables", "ring")
    if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
        raise InputError("ring variables must be a list of names")
    degrees_raw = _expect(obj, "degrees", "ring")
    if not isinstance(degrees_raw, list) or len(degrees_raw) != len(variables):
        raise InputError("ring needs one degree per variable")
    degrees = tuple(
        load_element(group, d, f"degree of {name}") for name, d in zip(variables, degrees_raw)
    )
    return GradedRing(group=group, variables=tuple(variables), degrees=degrees)


def dump_ring(ring: GradedRing) -> dict:
    return {
        "group": dump_group(ring.group),
        "variables": list(ring.variables),
        "degrees": [dump_element(d) for d in ring.degrees],
    }


# ---------------------------------------------------------------------------
# Modules


def parse_rational(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise InputError(f"not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational number: {value!r}") from exc
    raise InputError(f"not a rational number: {value!r}")


def dump_rational(value: Fraction) -> str:
    return str(value)


def load_module(ring: GradedRing, obj: Any) -> PresentedModule:
    generators = _expect(obj, "generators", "module")
    if not isinstance(generators, list):
        raise InputError("module generators must be a list")
    degrees = [
        load_element(ring.group, _expect(g, "degree", "generator"), "generator degree")
        for g in generators
    ]
    columns = []
    for col in obj.get("relations", []):
        degree = None
        if "degree" in col:
            degree = load_element(ring.group, col["degree"], "relation degree")
        entries = []
        for entry in _expect(col, "entries", "relation"):
            row = _expect(entry, "row", "relation entry")
            if not isinstance(row, int):
                raise InputError("relation entry row must be an integer")
            coeff = parse_rational(_expect(entry, "coeff", "relation entry"))
            raw_monomial = _expect(entry, "monomial", "relation entry")
            if isinstance(raw_monomial, str):
                monomial = parse_monomial(ring, raw_monomial)
            else:
                exponents = _int_list(raw_monomial, "relation entry monomial")
                if len(exponents) != ring.nvars:
                    raise InputError("relation monomial has the wrong number of exponents")
                monomial = Monomial(tuple(exponents))
            entries.append((row, Term(coeff, monomial)))
        columns.append((degree, entries))
    return PresentedModule.build(ring, degrees, columns)


def dump_module(module: PresentedModule) -> dict:
    return {
        "generators": [{"degree": dump_element(b)} for b in module.generator_degrees],
        "relations": [
            {
                "degree": dump_element(col.degree),
                "entries": [
                    {
                        "row": row,
                        "coeff": dump_rational(term.coeff),
                        "monomial": list(term.monomial.exponents),
                    }
                    for row, term in col.entries
                ],
            }
            for col in module.relations
        ],
    }


# ---------------------------------------------------------------------------
# Cox data


def load_cox(obj: Any) -> CoxData:
    if "fan" in obj:
        fan = obj["fan"]
        rays = _expect(fan, "rays", "fan")
        if not isinstance(rays, list) or not rays:
            raise InputError("fan rays must be a nonempty list of integer vectors")
        max_cones = _expect(fan, "max_cones", "fan")
        ray_columns = [_int_list(r, "fan ray") for r in rays]
        cones = [_int_list(c, "fan cone") for c in max_cones]
        return cox_from_fan(FanInput.of(ray_columns, cones))
    ring = load_ring(_expect(obj, "ring", "cox data"))
    sigma_raw = _expect(obj, "sigma", "cox data")
    if not isinstance(sigma_raw, list):
        raise InputError("sigma must be a list of index lists")
    sigma = SigmaComplex.closure(ring.nvars, [_int_list(s, "sigma member") for s in sigma_raw])
    return CoxData(ring, sigma)


def dump_cox(cox: CoxData) -> dict:
    return {
        "ring": dump_ring(cox.ring),
        "sigma": [sorted(cone) for cone in cox.sigma.maximal()],
    }


def load_ring_context(obj: Any) -> GradedRing:
    """Accept either a ring file or a Cox file and return the ring."""
    if "fan" in obj or "sigma" in obj:
        return load_cox(obj).ring
    return load_ring(obj)


# ---------------------------------------------------------------------------
# Monomial text grammar: factors `name` or `name^k` joined by `*`; `1` is the unit.


def parse_monomial(ring: GradedRing, text: str) -> Monomial:
    exponents = [0] * ring.nvars
    position = 0
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty monomial", 0)
    offset = text.index(stripped[0])
    for factor in stripped.split("*"):
        factor_start = offset
        offset += len(factor) + 1
        name = factor.strip()
        inner = factor_start + factor.index(name) if name else factor_start
        if not name:
            raise ParseError("empty factor", factor_start)
        if name == "1":
            continue
        power = 1
        if "^" in name:
            name, _, raw_power = name.partition("^")
            if not raw_power.lstrip("-").isdigit():
                raise ParseError(f"malformed exponent {raw_power!r}", inner + len(name) + 1)
            power = int(raw_power)
            if power < 0:
                raise ParseError("negative exponent", inner + len(name) + 1)
        if name not in ring.variables:
            raise ParseError(f"unknown variable {name!r}", inner)
        exponents[ring.variables.index(name)] += power
    return Monomial(tuple(exponents))
