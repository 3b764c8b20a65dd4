"""Lower and upper approximations and the comparisons built on them.

Public functions take and return sets of object ids. The ``*_mask``
variants work directly on bit masks over ``space.universe`` and are what
the rest of the package uses internally.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .bits import is_subset
from .information_system import ApproximationSpace


def lower_mask(space: ApproximationSpace, x: int) -> int:
    out = 0
    for b in space.block_masks:
        if b & ~x == 0:
            out |= b
    return out


def upper_mask(space: ApproximationSpace, x: int) -> int:
    out = 0
    for b in space.block_masks:
        if b & x:
            out |= b
    return out


def lower(space: ApproximationSpace, objs: Iterable[str]) -> frozenset[str]:
    """Union of the elementary sets included in ``objs``."""
    return space.from_mask(lower_mask(space, space.to_mask(objs)))


def upper(space: ApproximationSpace, objs: Iterable[str]) -> frozenset[str]:
    """Union of the elementary sets that meet ``objs``."""
    return space.from_mask(upper_mask(space, space.to_mask(objs)))


@dataclass(frozen=True)
class RoughRegions:
    lower: frozenset[str]
    upper: frozenset[str]
    boundary: frozenset[str]
    outside: frozenset[str]

    @property
    def exact(self) -> bool:
        return not self.boundary


def regions(space: ApproximationSpace, objs: Iterable[str]) -> RoughRegions:
    x = space.to_mask(objs)
    lo = lower_mask(space, x)
    up = upper_mask(space, x)
    return RoughRegions(
        lower=space.from_mask(lo),
        upper=space.from_mask(up),
        boundary=space.from_mask(up & ~lo),
        outside=space.from_mask(space.full & ~up),
    )


def is_exact(space: ApproximationSpace, objs: Iterable[str]) -> bool:
    """True when ``objs`` is a union of elementary sets; otherwise the set is rough."""
    x = space.to_mask(objs)
    return lower_mask(space, x) == upper_mask(space, x)


class RoughEquality(NamedTuple):
    lower_equal: bool
    upper_equal: bool
    rough_equal: bool


class RoughInclusion(NamedTuple):
    lower_incl: bool
    upper_incl: bool
    rough_incl: bool


def rough_equal(space: ApproximationSpace, xs: Iterable[str], ys: Iterable[str]) -> RoughEquality:
    x, y = space.to_mask(xs), space.to_mask(ys)
    lo = lower_mask(space, x) == lower_mask(space, y)
    up = upper_mask(space, x) == upper_mask(space, y)
    return RoughEquality(lo, up, lo and up)


def rough_included(space: ApproximationSpace, xs: Iterable[str], ys: Iterable[str]) -> RoughInclusion:
    x, y = space.to_mask(xs), space.to_mask(ys)
    lo = is_subset(lower_mask(space, x), lower_mask(space, y))
    up = is_subset(upper_mask(space, x), upper_mask(space, y))
    return RoughInclusion(lo, up, lo and up)
