"""Size limits guarding the brute-force operations.

All exact semantic operations are desk-scale by design; these knobs say
where "desk scale" ends.  They are configuration, not constants: every
operation that enumerates takes a Limits value and raises a TooLarge
subclass beyond it.
"""
from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Limits:
    enumeration_vars: int = 20   # max universe size for model enumeration
    envelope_vars: int = 12      # max universe size for envelope clause search
    core_models: int = 20        # max model-set size for the exact core modes
    gap_vars: int = 12           # record upper/lower model gaps up to this size
    closure_cap: int = 1 << 20   # abort AND-closures that grow past this

    def with_vars_limit(self, n: int) -> "Limits":
        return replace(self, enumeration_vars=n, envelope_vars=n, gap_vars=n)


DEFAULT_LIMITS = Limits()
