"""Permutation-group toolkit for conjugacy and rationality questions."""

from .analysis import (are_isomorphic, center, conjugacy_classes, group_report, is_oc_group,
                       is_rational_group, odd_order_conjugacy, all_order_conjugacy, p_core,
                       quotient)
from .constructions import builtin
from .perm import Permutation, compose, inverse, parse_perm, format_perm
from .permgroup import PermGroup, build_bsgs

__version__ = "0.1.0"

__all__ = [
    "Permutation", "PermGroup", "compose", "inverse", "parse_perm", "format_perm", "build_bsgs",
    "builtin", "conjugacy_classes", "center", "quotient", "p_core", "are_isomorphic",
    "is_oc_group", "is_rational_group", "odd_order_conjugacy", "all_order_conjugacy",
    "group_report", "__version__",
]
