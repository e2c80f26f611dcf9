"""Named geometric inputs: surface fans and the three-dimensional ambient fan.

Ray orders are chosen so that variable T_i corresponds to the curve the
propositions call C_i or D_i; the checks compare Gale duals against printed
degree matrices, so a wrong order shows up immediately.
"""

from __future__ import annotations

from . import printed
from .toric import Fan, complete_surface_fan, hirzebruch, p2

# F4 with [C1 negative section, C2 fiber, S0 zero section, C3 fiber]
_F4_RAYS = [(0, 1), (-1, 4), (0, -1), (1, 0)]

# F4 listed as [C1, C2, C3, S0]; used to build its blow-ups
_F4_BLOWUP_ORDER = [(0, 1), (-1, 4), (1, 0), (0, -1)]


def fan_F0() -> Fan:
    return complete_surface_fan([(1, 0), (0, 1), (-1, 0), (0, -1)])


def fan_F4() -> Fan:
    return complete_surface_fan(_F4_RAYS)


def fan_Bl2F4() -> Fan:
    """F4 blown up at the two fixed points on the zero section, rays v1..v6."""
    return complete_surface_fan([(0, 1), (-1, 4), (1, 0), (-1, 3), (0, -1), (1, -1)])


def fan_Bl1F4() -> Fan:
    """[C1, C2, C3, S0, E] with E over the fixed point S0 and fiber C2."""
    return complete_surface_fan(_F4_BLOWUP_ORDER + [(-1, 3)])


def fan_Bl1F0() -> Fan:
    return complete_surface_fan([(1, 0), (0, 1), (1, 1), (-1, 0), (0, -1)])


def fan_Bl2F0() -> Fan:
    return complete_surface_fan([(-1, 0), (0, -1), (-1, -1), (1, 1), (1, 0), (0, 1)])


def fan_Sigma0() -> Fan:
    rays = list(zip(*printed.SIGMA0_P))
    cones = [[i - 1 for i in c] for c in printed.SIGMA0_CONES]
    return Fan(rays, cones, 3)


def fan_Bl1P2() -> Fan:
    return hirzebruch(1)


BUILTIN_FANS = {
    "F0": fan_F0,
    "F1": fan_Bl1P2,
    "F4": fan_F4,
    "P2": p2,
    "Bl1P2": fan_Bl1P2,
    "Bl1F0": fan_Bl1F0,
    "Bl2F0": fan_Bl2F0,
    "Bl1F4": fan_Bl1F4,
    "Bl2F4": fan_Bl2F4,
    "Sigma0": fan_Sigma0,
}


def builtin_fan(name: str) -> Fan:
    key = name.split(":", 1)[1] if name.startswith("builtin:") else name
    if key in BUILTIN_FANS:
        return BUILTIN_FANS[key]()
    if key.startswith("F") and key[1:].isdigit():
        return hirzebruch(int(key[1:]))
    raise KeyError(f"unknown builtin fan {name!r}; known: {', '.join(sorted(BUILTIN_FANS))}")
