# config.py
"""
Tiers, sample sizes, budgets and the default seed.

Every knob the engine reads lives on one frozen Settings object. The CLI maps
its flags onto fields with configure(); tests use overridden() as a context
manager so a changed tier never leaks into the next test.
"""

from contextlib import contextmanager
from dataclasses import asdict, dataclass, replace

import numpy as np

from errors import TierExceededError

DEFAULT_SEED = 20240917


@dataclass(frozen=True)
class Settings:
    small_tier: int = 4096
    sample_triples: int = 100_000
    sample_pairs: int = 10_000
    seed: int = DEFAULT_SEED
    ideal_cap: int = 4096
    pair_budget: int = 4096
    triple_budget: int = 20_000
    exhaustive_limit: int = 512
    enumeration_limit: int = 2 ** 20
    jobs: int = 1

    def as_dict(self):
        return asdict(self)


_current = Settings()


def current():
    """Return the settings in force."""
    return _current


def configure(**overrides):
    """Replace fields of the current settings and return the new object."""
    global _current
    unknown = set(overrides) - set(asdict(_current))
    if unknown:
        raise KeyError(f"unknown settings: {sorted(unknown)}")
    _current = replace(_current, **overrides)
    return _current


@contextmanager
def overridden(**overrides):
    global _current
    saved = _current
    try:
        yield configure(**overrides)
    finally:
        _current = saved


def require_tier(ring, what):
    """Raise TierExceededError when `ring` is above the small-ring tier."""
    tier = _current.small_tier
    if ring.size > tier:
        raise TierExceededError(
            f"{what} needs a ring of at most {tier} elements, "
            f"{ring.label} has {ring.size}",
            size=ring.size, tier=tier)


def rng_for(salt):
    """Seeded generator for one sampled computation.

    The salt keeps two checks from drawing the same stream while leaving each
    of them reproducible under a fixed seed.
    """
    mixed = [_current.seed] + [ord(ch) for ch in str(salt)]
    return np.random.default_rng(mixed)
