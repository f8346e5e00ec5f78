"""Access to the bundled example corpus.

The corpus spans a torsion-free weighted case, product Picard rank two, a
fan-derived presentation, a torsion class group, and the affine edge case
where the irrelevant ideal is the unit ideal.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .errors import InputError
from .rings import GradedRing, PresentedModule
from .serialize import load_cox, load_json_file, load_module
from .toric import CoxData

#: Cox data bundled with the package.
COX_NAMES = ("p1", "p2", "p112", "p1xp1", "fan_121", "fan_torsion", "affine_z2")

#: Bundled modules, each tagged with the Cox datum it is defined over.
MODULE_NAMES = {
    "p112_point": "p112",
    "p112_point_shift1": "p112",
    "p2_origin": "p2",
    "p1_structure": "p1",
    "affine_z2_point_shift1": "affine_z2",
}


def corpus_dir() -> Path:
    return Path(str(resources.files("atomspec").joinpath("data")))


def corpus_path(name: str) -> Path:
    path = corpus_dir() / f"{name}.json"
    if not path.exists():
        raise InputError(f"no bundled file named {name!r}")
    return path


def load_corpus_cox(name: str) -> CoxData:
    if name not in COX_NAMES:
        raise InputError(f"no bundled Cox datum named {name!r}")
    return load_cox(load_json_file(corpus_path(name)))


def load_corpus_module(name: str, ring: GradedRing | None = None) -> PresentedModule:
    if name not in MODULE_NAMES:
        raise InputError(f"no bundled module named {name!r}")
    if ring is None:
        ring = load_corpus_cox(MODULE_NAMES[name]).ring
    return load_module(ring, load_json_file(corpus_path(name)))
