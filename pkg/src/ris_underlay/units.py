"""dB / linear conversions.

All internal quantities are linear (watts for powers); dB only appears at
input/output boundaries such as the CLI and sweep configs.
"""

import math


def db_to_linear(db: float) -> float:
    """10^(db/10); also converts dBW to watts."""
    return 10.0 ** (db / 10.0)


def linear_to_db(x: float) -> float:
    """10*log10(x); x must be positive."""
    if x <= 0.0:
        raise ValueError(f"cannot express non-positive value {x!r} in dB")
    return 10.0 * math.log10(x)
