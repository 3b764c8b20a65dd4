"""Formal contexts, derivation operators and concept lattices."""

from __future__ import annotations

from dataclasses import dataclass, field
from os import PathLike
from typing import Iterable, Iterator

from .bits import full_mask, is_subset, iter_bits, mask_of
from .errors import BoundExceededError, RoughKitError, TableFormatError
from .information_system import InformationSystem, load_table, read_rows

DEFAULT_MAX_PROPERTIES = 24


class FormalContext:
    """Objects, properties and the incidence relation between them.

    Incidence is held twice as bit masks: ``rows[i]`` is the property set
    of object ``i`` and ``cols[j]`` the object set of property ``j``.
    """

    __slots__ = ("objects", "properties", "rows", "cols", "_oindex", "_pindex")

    def __init__(self, objects: Iterable[str], properties: Iterable[str], incidence: Iterable[tuple[str, str]]):
        self.objects = tuple(objects)
        self.properties = tuple(properties)
        self._oindex = {x: i for i, x in enumerate(self.objects)}
        self._pindex = {y: j for j, y in enumerate(self.properties)}
        if len(self._oindex) != len(self.objects):
            raise RoughKitError("context objects must be distinct")
        if len(self._pindex) != len(self.properties):
            raise RoughKitError("context properties must be distinct")
        rows = [0] * len(self.objects)
        cols = [0] * len(self.properties)
        for x, y in incidence:
            i, j = self.object_index(x), self.property_index(y)
            rows[i] |= 1 << j
            cols[j] |= 1 << i
        self.rows = tuple(rows)
        self.cols = tuple(cols)

    @classmethod
    def from_masks(cls, objects, properties, rows: Iterable[int]) -> "FormalContext":
        objects, properties = tuple(objects), tuple(properties)
        return cls(objects, properties, [
            (objects[i], properties[j]) for i, r in enumerate(rows) for j in iter_bits(r)
        ])

    @property
    def incidence(self) -> frozenset[tuple[str, str]]:
        return frozenset(
            (self.objects[i], self.properties[j]) for i, r in enumerate(self.rows) for j in iter_bits(r)
        )

    def __repr__(self):
        return f"FormalContext({len(self.objects)} objects, {len(self.properties)} properties)"

    def object_index(self, x: str) -> int:
        try:
            return self._oindex[x]
        except KeyError:
            raise RoughKitError(f"unknown object {x!r}") from None

    def property_index(self, y: str) -> int:
        try:
            return self._pindex[y]
        except KeyError:
            raise RoughKitError(f"unknown property {y!r}") from None

    def object_mask(self, xs: Iterable[str]) -> int:
        return mask_of(self.object_index(x) for x in xs)

    def property_mask(self, ys: Iterable[str]) -> int:
        return mask_of(self.property_index(y) for y in ys)

    def objects_of(self, mask: int) -> frozenset[str]:
        return frozenset(self.objects[i] for i in iter_bits(mask))

    def properties_of(self, mask: int) -> frozenset[str]:
        return frozenset(self.properties[j] for j in iter_bits(mask))

    def extent_mask(self, b: int) -> int:
        out = full_mask(len(self.objects))
        for j in iter_bits(b):
            out &= self.cols[j]
        return out

    def intent_mask(self, a: int) -> int:
        out = full_mask(len(self.properties))
        for i in iter_bits(a):
            out &= self.rows[i]
        return out

    def closure_mask(self, b: int) -> int:
        return self.intent_mask(self.extent_mask(b))


def extent_of(ctx: FormalContext, props: Iterable[str]) -> frozenset[str]:
    """Objects having every property in ``props``."""
    return ctx.objects_of(ctx.extent_mask(ctx.property_mask(props)))


def intent_of(ctx: FormalContext, objs: Iterable[str]) -> frozenset[str]:
    """Properties shared by every object in ``objs``."""
    return ctx.properties_of(ctx.intent_mask(ctx.object_mask(objs)))


def is_formal_concept(ctx: FormalContext, objs: Iterable[str], props: Iterable[str]) -> bool:
    a, b = ctx.object_mask(objs), ctx.property_mask(props)
    return ctx.extent_mask(b) == a and ctx.intent_mask(a) == b


@dataclass(frozen=True)
class FormalConcept:
    extent: frozenset[str]
    intent: frozenset[str]


@dataclass
class ConceptLattice:
    """Concepts in lectic order of their intents, plus the cover relation.

    ``(i, j)`` in ``covers`` means concept ``i`` sits directly below ``j``.
    """

    context: FormalContext = field(repr=False)
    extents: list[int] = field(repr=False)
    intents: list[int] = field(repr=False)
    covers: frozenset[tuple[int, int]]

    @property
    def concepts(self) -> list[FormalConcept]:
        return [
            FormalConcept(self.context.objects_of(a), self.context.properties_of(b))
            for a, b in zip(self.extents, self.intents)
        ]

    def __len__(self) -> int:
        return len(self.extents)

    def leq(self, i: int, j: int) -> bool:
        return is_subset(self.extents[i], self.extents[j])

    @property
    def top(self) -> int:
        full = full_mask(len(self.context.objects))
        return self.extents.index(full)

    @property
    def bottom(self) -> int:
        full = full_mask(len(self.context.properties))
        return self.intents.index(full)

    def label(self, i: int) -> str:
        """``{o1,o2}|{a=v,...}`` with members in context order."""
        ctx = self.context
        ext = ",".join(ctx.objects[k] for k in iter_bits(self.extents[i]))
        itt = ",".join(ctx.properties[k] for k in iter_bits(self.intents[i]))
        return f"{{{ext}}}|{{{itt}}}"


def next_closures(ctx: FormalContext) -> Iterator[int]:
    """Yield every closed intent as a mask, in lectic order (Ganter's NextClosure).

    Property ``j`` is bit ``j``; earlier properties are the more significant
    ones for the lectic order, so a candidate is canonical when closing it
    adds nothing before the property just inserted.
    """
    n = len(ctx.properties)
    current = ctx.closure_mask(0)
    full = full_mask(n)
    yield current
    while current != full:
        for i in range(n - 1, -1, -1):
            bit = 1 << i
            if current & bit:
                continue
            before = bit - 1
            candidate = ctx.closure_mask((current & before) | bit)
            if (candidate & ~current) & before == 0:
                current = candidate
                break
        else:  # pragma: no cover - the full set is always reachable
            return
        yield current


def _covers(extents: list[int]) -> frozenset[tuple[int, int]]:
    out = set()
    for i, a in enumerate(extents):
        above = [j for j, b in enumerate(extents) if j != i and is_subset(a, b)]
        for j in above:
            b = extents[j]
            if not any(k != j and is_subset(extents[k], b) for k in above):
                out.add((i, j))
    return frozenset(out)


def all_concepts(ctx: FormalContext, max_properties: int = DEFAULT_MAX_PROPERTIES) -> ConceptLattice:
    """Enumerate every formal concept and the covering pairs between them."""
    if len(ctx.properties) > max_properties:
        raise BoundExceededError(
            f"context has {len(ctx.properties)} properties; limit is {max_properties}"
        )
    intents = list(next_closures(ctx))
    extents = [ctx.extent_mask(b) for b in intents]
    return ConceptLattice(ctx, extents, intents, _covers(extents))


def property_name(attr: str, value: str) -> str:
    return f"{attr}={value}"


def context_from_information_system(sys: InformationSystem) -> FormalContext:
    """Nominal scaling: one property ``a=v`` per value occurring in column ``a``."""
    props = [property_name(a, v) for a in sys.attributes for v in sys.column_values(a)]
    incidence = [(x, property_name(a, sys.value(x, a))) for x in sys.objects for a in sys.attributes]
    return FormalContext(sys.objects, props, incidence)


def context_from_binary_table(sys: InformationSystem) -> FormalContext:
    """Read a table of ``0``/``1`` cells as an incidence relation."""
    incidence = []
    for r, x in enumerate(sys.objects, start=2):
        for c, y in enumerate(sys.attributes, start=2):
            v = sys.value(x, y)
            if v == "1":
                incidence.append((x, y))
            elif v != "0":
                raise TableFormatError(f"incidence cell must be 0 or 1, got {v!r}", row=r, column=c)
    return FormalContext(sys.objects, sys.attributes, incidence)


def is_binary_table(sys: InformationSystem) -> bool:
    return all(v in ("0", "1") for v in sys.values.values())


def read_context(path: str | PathLike) -> FormalContext:
    return context_from_binary_table(load_table(read_rows(path)))


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(lattice: ConceptLattice) -> str:
    """Graphviz source: one node per concept, one edge per cover, lower -> upper."""
    lines = ["digraph lattice {", "  rankdir=BT;"]
    for i in range(len(lattice)):
        lines.append(f"  c{i} [label={_dot_quote(lattice.label(i))}];")
    for i, j in sorted(lattice.covers):
        lines.append(f"  c{i} -> c{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
