"""Compute-budget knobs.

All enumeration guards compare an estimated basic-operation count against a
single budget.  The TWL_BUDGET environment variable overrides the default;
explicit function arguments override both.
"""

import os

# Full log/antilog tables are built eagerly, so r is capped.
DEFAULT_R_CAP = 1 << 20

# Guard for codeword enumerations, in estimated basic ops (r^2 * n for the
# trace-form enumeration, q^dim * n for generator-matrix row spans).
DEFAULT_OPS_BUDGET = 10**9


def ops_budget(override: int | None = None) -> int:
    if override is not None:
        return int(override)
    env = os.environ.get("TWL_BUDGET")
    if env:
        return int(env)
    return DEFAULT_OPS_BUDGET


def r_cap(override: int | None = None) -> int:
    if override is not None:
        return int(override)
    return DEFAULT_R_CAP
