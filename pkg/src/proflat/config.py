"""Size bounds.

Group materialization is capped so that multiplication tables stay at desk
scale. The default bound can be raised or lowered per process through the
PROFLAT_MAX_ORDER environment variable.
"""

import os

DEFAULT_MAX_ORDER = 2000
ISO_SEARCH_MAX_NODES = 64


def max_order() -> int:
    raw = os.environ.get("PROFLAT_MAX_ORDER", "")
    if not raw:
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"PROFLAT_MAX_ORDER must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"PROFLAT_MAX_ORDER must be positive, got {value}")
    return value
