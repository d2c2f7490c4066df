"""Rationality classes of finite groups: cut, semi-rational and relatives."""

from __future__ import annotations

from .classify import GroupReport
from .dsl import parse_spec, render
from .engine import (
    Abelian,
    AbelianByCyclic,
    DirectProduct,
    FiniteGroup,
    Metacyclic,
    Named,
    Permutation,
    realize,
)
from .errors import CutGroupsError, InvalidSpec, NOutOfRange, OrderCapExceeded, ParseError
from .report import analyze

__version__ = "0.1.0"

__all__ = [
    "Abelian", "AbelianByCyclic", "CutGroupsError", "DirectProduct", "FiniteGroup",
    "GroupReport", "InvalidSpec", "Metacyclic", "NOutOfRange", "Named", "OrderCapExceeded",
    "ParseError", "Permutation", "analyze", "parse_spec", "realize", "render",
]
