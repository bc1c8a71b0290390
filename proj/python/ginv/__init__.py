"""Exact generalized inverses in rings with involution.

Rings are built from descriptor strings (``zmod:8``, ``mat:rat:2``,
``mat:gf:2:2``, ``mat:zmod:4:2``); elements support ``+``, ``-``, ``*``,
unary ``-`` and ``.star()``.  Inverse computations raise ``GinvError``
when the element has no inverse of the requested kind.
"""

from ._ginv import (
    Element,
    GinvError,
    Ring,
    check_core_characterizations,
    classify,
    core_inverse,
    core_sum,
    dual_core_inverse,
    dual_core_sum,
    find_all,
    group_inverse,
    group_sum,
    inner_inverse,
    one_four_inverse,
    one_three_inverse,
    run_scenario,
    scenario_ids,
    unit_inverse,
    verify,
)

__all__ = [
    "Element",
    "GinvError",
    "Ring",
    "check_core_characterizations",
    "classify",
    "core_inverse",
    "core_sum",
    "dual_core_inverse",
    "dual_core_sum",
    "find_all",
    "group_inverse",
    "group_sum",
    "inner_inverse",
    "one_four_inverse",
    "one_three_inverse",
    "run_scenario",
    "scenario_ids",
    "unit_inverse",
    "verify",
]
