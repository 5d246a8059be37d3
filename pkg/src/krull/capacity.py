"""Size guards for the brute-force searches.

Defaults can be overridden with the ``KRULL_CAPACITY`` environment variable,
a comma separated list of ``key=value`` pairs, e.g.
``KRULL_CAPACITY="quotient=10000,degree=20"``.
"""

import os
from dataclasses import dataclass, fields, replace

from .errors import CapacityError, DomainError

ENV_VAR = "KRULL_CAPACITY"


@dataclass(frozen=True)
class Capacity:
    quotient: int = 4096        # elements of a materialized finite quotient
    integer: int = 10**12       # Euclidean size of integers / norms under trial division
    degree: int = 16            # degree of polynomials fed to exhaustive searches
    search: int = 10**6         # candidates examined by a single exhaustive search


def current() -> Capacity:
    raw = os.environ.get(ENV_VAR, "").strip()
    if not raw:
        return Capacity()
    known = {f.name for f in fields(Capacity)}
    overrides = {}
    for item in raw.split(","):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in known:
            raise DomainError(
                f"{ENV_VAR}: expected key=value with key in {sorted(known)}, got {item!r}")
        try:
            overrides[key] = int(float(value)) if "e" in value.lower() else int(value)
        except ValueError:
            raise DomainError(f"{ENV_VAR}: {key} must be an integer, got {value!r}") from None
    return replace(Capacity(), **overrides)


def check(what: str, size: int, limit: int) -> None:
    if size > limit:
        raise CapacityError(f"{what} of size {size} exceeds the capacity guard {limit} "
                            f"(raise it via {ENV_VAR})")
