"""Meaning of descriptor formulas over an information system, and synthesis
of formulas that denote exactly the lower or upper approximation of a set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from .approximations import lower_mask, upper_mask
from .errors import RoughKitError
from .formula import FALSE, And, Atom, Box, Const, Diamond, Formula, Not, Or, conjunction, disjunction
from .information_system import InformationSystem, indiscernibility

Descriptor = tuple[str, str]


@dataclass(frozen=True)
class DescriptiveSystem:
    """Objects, elementary descriptors ``(attribute, value)`` and the relation between them."""

    objects: frozenset[str]
    descriptors: frozenset[Descriptor]
    description: frozenset[tuple[str, Descriptor]]

    def __post_init__(self):
        for x, d in self.description:
            if x not in self.objects or d not in self.descriptors:
                raise RoughKitError(f"description pair ({x!r}, {d!r}) outside objects x descriptors")

    @classmethod
    def from_information_system(cls, sys: InformationSystem) -> "DescriptiveSystem":
        description = frozenset((x, (a, sys.value(x, a))) for x in sys.objects for a in sys.attributes)
        return cls(
            objects=frozenset(sys.objects),
            descriptors=frozenset(d for _, d in description),
            description=description,
        )

    def is_functional(self) -> bool:
        """True when no object carries two values of one attribute."""
        seen = set()
        for x, (a, _) in self.description:
            if (x, a) in seen:
                return False
            seen.add((x, a))
        return True

    def objects_with(self, descriptor: Descriptor) -> frozenset[str]:
        return frozenset(x for x, d in self.description if d == descriptor)


def meaning_mask(sys: InformationSystem, f: Formula) -> int:
    full = (1 << len(sys.objects)) - 1
    cache: dict[Atom, int] = {}

    def ev(g: Formula) -> int:
        if isinstance(g, Atom):
            if g not in cache:
                cache[g] = sys.descriptor_mask(g.attribute, g.value)
            return cache[g]
        if isinstance(g, Const):
            return full if g.value else 0
        if isinstance(g, Not):
            return full & ~ev(g.operand)
        if isinstance(g, And):
            return ev(g.left) & ev(g.right)
        if isinstance(g, Or):
            return ev(g.left) | ev(g.right)
        if isinstance(g, (Box, Diamond)):
            raise RoughKitError("modal operator in a descriptor formula; evaluate it in a Kripke model")
        raise TypeError(f"not a formula: {g!r}")

    return ev(f)


def meaning(sys: InformationSystem, f: Formula) -> frozenset[str]:
    """Objects satisfying ``f``.

    An atom ``a=v`` denotes the objects whose ``a`` value is ``v``; a value
    that never occurs denotes the empty set, but an unknown attribute is an
    error.
    """
    return sys.from_mask(meaning_mask(sys, f))


def block_description(sys: InformationSystem, attrs: Iterable[str], obj: str) -> Formula:
    """Conjunction of ``a=value(obj, a)`` over ``attrs`` in table order."""
    return conjunction(Atom(a, sys.value(obj, a)) for a in attrs)


def describe_set(
    sys: InformationSystem,
    attrs: Iterable[str],
    objs: Iterable[str],
    mode: Literal["lower", "upper"],
) -> Formula:
    """A formula whose meaning is the lower or upper approximation of ``objs``.

    The result is the disjunction, in block order, of the descriptions of
    the qualifying elementary sets; ``false`` when none qualifies.
    """
    attrs = sys.check_attributes(attrs)
    space = indiscernibility(sys, attrs)
    x = space.to_mask(objs)
    if mode == "lower":
        target = lower_mask(space, x)
    elif mode == "upper":
        target = upper_mask(space, x)
    else:
        raise RoughKitError(f"mode must be 'lower' or 'upper', got {mode!r}")
    disjuncts = []
    for b in space.block_masks:
        if b & target:
            rep = space.universe[(b & -b).bit_length() - 1]
            disjuncts.append(block_description(sys, attrs, rep))
    return disjunction(disjuncts) if disjuncts else FALSE
