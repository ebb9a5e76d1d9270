"""Padovan numbers that are concatenations of two distinct repdigits.

Exact sequence search, certified ball arithmetic over the plastic-number
cubic, Matveev-type initial bounds, and two rounds of continued-fraction
reduction, ending in a machine-checkable proof certificate.
"""

from ._core import (
    __version__,
    initial_bounds,
    padovan,
    parse_concat,
    prove,
    repdigit_concat_value,
    search,
    tau_convergent,
    tau_quotients,
)

__all__ = [
    "__version__",
    "initial_bounds",
    "padovan",
    "parse_concat",
    "prove",
    "repdigit_concat_value",
    "search",
    "tau_convergent",
    "tau_quotients",
]
