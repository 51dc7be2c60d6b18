"""Size caps. ``DSC_CAP_SIMPLICES`` overrides every simplex-count cap at once."""

import os

DEFAULT_BARYCENTRIC_CAP = 10**6
DEFAULT_CONNECTION_CAP = 4096
DEFAULT_PAIR_CAP = 10**7
DEFAULT_CONTRACTIBLE_VERTEX_CAP = 13
DEFAULT_RECURSION_BUDGET = 10**6


def simplex_cap(default: int) -> int:
    value = os.environ.get("DSC_CAP_SIMPLICES")
    if value is None or value.strip() == "":
        return default
    try:
        cap = int(value)
    except ValueError:
        return default
    return cap if cap > 0 else default
