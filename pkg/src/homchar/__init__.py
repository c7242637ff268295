"""Homotopy characters of DG-bialgebras, computed exactly over the rationals."""

from .cobar import Cobar, NotInvertible, NotMaurerCartan
from .holim import HolimCategory
from .hopf import BUILTINS, TableHopf, builtin
from .specfile import parse_spec, render

__all__ = [
    "BUILTINS",
    "Cobar",
    "HolimCategory",
    "NotInvertible",
    "NotMaurerCartan",
    "TableHopf",
    "builtin",
    "parse_spec",
    "render",
]
