"""Bundled example targets and knot presentations.

Targets: ``t``, ``t2``, ``t4``, ``t5`` (``.biq``).
Knots: ``unknot``, ``virtual_trefoil``, ``kishino`` (``.pv``).
"""

from __future__ import annotations

from importlib.resources import files

from .core import BiquandleMatrix
from .formats import parse_biq
from .presentation import Presentation, parse_knot

TARGETS = ("t", "t2", "t4", "t5")
KNOTS = ("unknot", "virtual_trefoil", "kishino")


def path(filename: str):
    return files("biquandle") / "data" / filename


def target(name: str) -> BiquandleMatrix:
    return parse_biq(path(name + ".biq").read_text(encoding="utf-8"))


def knot(name: str) -> Presentation:
    return parse_knot(path(name + ".pv").read_text(encoding="utf-8"))
