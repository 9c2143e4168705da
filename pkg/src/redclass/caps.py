"""Size caps, overridable through the ``REDCLASS_CAPS`` environment variable.

``REDCLASS_CAPS="group_order=500,h2_materialize=10000"`` raises the given caps.
"""

import dataclasses
import os

from .errors import CapExceeded, ParseError


@dataclasses.dataclass
class Caps:
    group_order: int = 200
    h2_materialize: int = 4096
    weight_orbit: int = 10**6
    assoc_check: int = 64
    oracle_order: int = 200


def _from_env():
    caps = Caps()
    raw = os.environ.get("REDCLASS_CAPS", "").strip()
    if not raw:
        return caps
    names = {f.name for f in dataclasses.fields(Caps)}
    for item in raw.split(","):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in names:
            raise ParseError(f"bad REDCLASS_CAPS entry {item!r}")
        try:
            number = int(value)
        except ValueError:
            raise ParseError(f"bad REDCLASS_CAPS value {item!r}") from None
        if number <= 0:
            raise ParseError(f"caps must be positive: {item!r}")
        setattr(caps, key, number)
    return caps


CAPS = _from_env()


def check(name, value, hint=""):
    limit = getattr(CAPS, name)
    if value > limit:
        raise CapExceeded(name, f"{value} > {limit}", hint)
