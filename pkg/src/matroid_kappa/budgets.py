"""Default enumeration budgets.

Every exhaustive scan in this package is exponential in the worst case, so
each one is guarded by an explicit budget and raises ``CapacityError``
instead of silently running for hours.  All defaults can be overridden per
call; the command line additionally accepts ``--budget=N`` and honours the
``MATROID_KAPPA_BUDGET`` environment variable (the flag wins).
"""

import os

from .errors import DomainError

CIRCUIT_ENUMERATION = 20
"""Maximum ground-set size for circuit enumeration."""

AXIOM_GROUND = 12
"""Maximum ground-set size for the exhaustive axiom checker."""

AXIOM_C3_TUPLES = 20_000
"""Cap on the number of (circuit, subset, family, element) tuples scanned
for the strong circuit-exchange check."""

KAPPA_BETWEEN_FREE = 20
"""Maximum number of free elements in the kappa(X, Y) subset scan."""

SEPARATION_SCAN = 16
"""Maximum ground-set size for the separation search."""

LINKING_FREE = 16
"""Maximum number of free elements in the linking partition scan."""

WINDOW_ELEMENTS = 256
"""Largest window an infinite family will materialise."""

ENV_VAR = "MATROID_KAPPA_BUDGET"


def resolve_budget(flag_value, default):
    """Pick the effective budget: explicit flag, then environment, then default."""
    if flag_value is not None:
        return flag_value
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
