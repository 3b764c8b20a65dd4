"""Attribute-value tables and the partitions they induce.

An :class:`InformationSystem` is a finite objects x attributes table with a
total value function. Choosing a subset of attributes groups together the
objects that cannot be told apart by those attributes; the result is an
:class:`ApproximationSpace` whose blocks are the elementary sets.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from os import PathLike
from typing import Iterable, Mapping, Sequence

from .bits import full_mask, iter_bits, mask_of
from .errors import (
    EmptyAttributeSetError,
    RoughKitError,
    TableFormatError,
    UnknownAttributeError,
    UnknownObjectError,
)

ID_COLUMN = "id"


@dataclass(frozen=True)
class InformationSystem:
    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    values: Mapping[tuple[str, str], str] = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "attributes", tuple(self.attributes))
        if len(set(self.objects)) != len(self.objects):
            raise RoughKitError("object identifiers must be distinct")
        if len(set(self.attributes)) != len(self.attributes):
            raise RoughKitError("attribute names must be distinct")
        for x in self.objects:
            for a in self.attributes:
                if (x, a) not in self.values:
                    raise RoughKitError(f"value function undefined at ({x!r}, {a!r})")
        object.__setattr__(self, "values", dict(self.values))
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(self.objects)})

    @classmethod
    def from_rows(cls, attributes: Sequence[str], rows: Mapping[str, Sequence[str]]) -> "InformationSystem":
        """Build from ``{object: [value per attribute]}``."""
        values = {}
        for x, row in rows.items():
            if len(row) != len(attributes):
                raise RoughKitError(f"object {x!r} has {len(row)} values, expected {len(attributes)}")
            for a, v in zip(attributes, row):
                values[x, a] = v
        return cls(tuple(rows), tuple(attributes), values)

    def __len__(self) -> int:
        return len(self.objects)

    def value(self, obj: str, attr: str) -> str:
        return self.values[obj, attr]

    def index(self, obj: str) -> int:
        try:
            return self._index[obj]
        except KeyError:
            raise UnknownObjectError(obj) from None

    def check_attributes(self, attrs: Iterable[str]) -> tuple[str, ...]:
        """Validate ``attrs`` and return them deduplicated, in table order."""
        wanted = set()
        for a in attrs:
            if a not in self.attributes:
                raise UnknownAttributeError(a)
            wanted.add(a)
        if not wanted:
            raise EmptyAttributeSetError()
        return tuple(a for a in self.attributes if a in wanted)

    def to_mask(self, objs: Iterable[str]) -> int:
        return mask_of(self.index(x) for x in objs)

    def from_mask(self, mask: int) -> frozenset[str]:
        return frozenset(self.objects[i] for i in iter_bits(mask))

    def sorted_objects(self, objs: Iterable[str]) -> list[str]:
        """Objects in table order."""
        return sorted(objs, key=self.index)

    def descriptor_mask(self, attr: str, value: str) -> int:
        """Objects whose ``attr`` equals ``value``, as a mask."""
        if attr not in self.attributes:
            raise UnknownAttributeError(attr)
        return mask_of(i for i, x in enumerate(self.objects) if self.values[x, attr] == value)

    def column_values(self, attr: str) -> list[str]:
        """Distinct values of a column, in order of first occurrence."""
        return list(dict.fromkeys(self.values[x, attr] for x in self.objects))


def load_table(rows: Iterable[Sequence[str]]) -> InformationSystem:
    """Build an information system from a header row followed by data rows.

    The first header cell names the object-id column; the remaining header
    cells are attribute names. Cells are kept verbatim as string tokens.
    Row and column numbers in errors are 1-based and count the header.
    """
    it = iter(rows)
    try:
        header = list(next(it))
    except StopIteration:
        raise TableFormatError("missing header", row=1) from None
    if len(header) < 2:
        raise TableFormatError("empty attribute set", row=1)
    attributes = header[1:]
    seen: dict[str, int] = {}
    for col, a in enumerate(attributes, start=2):
        if a in seen:
            raise TableFormatError(f"duplicate attribute name {a!r}", row=1, column=col)
        seen[a] = col

    objects: list[str] = []
    values: dict[tuple[str, str], str] = {}
    ids: set[str] = set()
    for rownum, row in enumerate(it, start=2):
        row = list(row)
        if len(row) != len(header):
            raise TableFormatError(
                f"ragged row: {len(row)} cells, expected {len(header)}",
                row=rownum,
                column=min(len(row), len(header)) + 1,
            )
        x = row[0]
        if x in ids:
            raise TableFormatError(f"duplicate object id {x!r}", row=rownum, column=1)
        ids.add(x)
        objects.append(x)
        for a, v in zip(attributes, row[1:]):
            values[x, a] = v
    return InformationSystem(tuple(objects), tuple(attributes), values)


def read_rows(path: str | PathLike) -> list[list[str]]:
    """Read a comma-separated UTF-8 file whose header starts with ``id``."""
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [row for row in csv.reader(fh, quoting=csv.QUOTE_NONE) if row]
    if not rows:
        raise TableFormatError("missing header", row=1)
    if rows[0][0] != ID_COLUMN:
        raise TableFormatError(f"first header cell must be {ID_COLUMN!r}", row=1, column=1)
    return rows


def read_table(path: str | PathLike) -> InformationSystem:
    return load_table(read_rows(path))


class ApproximationSpace:
    """A universe together with a partition of it into elementary sets.

    Blocks are stored as bit masks over the universe order and kept sorted
    by their least member. The equivalence relation itself is never
    materialised.
    """

    __slots__ = ("universe", "_index", "_blocks", "_block_of")

    def __init__(self, universe: Sequence[str], block_masks: Iterable[int]):
        self.universe = tuple(universe)
        self._index = {x: i for i, x in enumerate(self.universe)}
        if len(self._index) != len(self.universe):
            raise RoughKitError("universe members must be distinct")
        blocks = sorted(block_masks, key=lambda m: (m & -m))
        covered = 0
        for m in blocks:
            if m == 0:
                raise RoughKitError("elementary sets must be nonempty")
            if m & covered:
                raise RoughKitError("elementary sets must be pairwise disjoint")
            covered |= m
        if covered != full_mask(len(self.universe)):
            raise RoughKitError("elementary sets must cover the universe")
        self._blocks = tuple(blocks)
        block_of = [0] * len(self.universe)
        for m in blocks:
            for i in iter_bits(m):
                block_of[i] = m
        self._block_of = tuple(block_of)

    @classmethod
    def from_blocks(cls, universe: Sequence[str], blocks: Iterable[Iterable[str]]) -> "ApproximationSpace":
        index = {x: i for i, x in enumerate(universe)}
        masks = []
        for b in blocks:
            m = 0
            for x in b:
                if x not in index:
                    raise UnknownObjectError(x)
                m |= 1 << index[x]
            masks.append(m)
        return cls(universe, masks)

    @classmethod
    def from_labels(cls, universe: Sequence[str], label) -> "ApproximationSpace":
        """Partition ``universe`` by the value of ``label(x)``."""
        groups: dict[object, int] = {}
        for i, x in enumerate(universe):
            key = label(x)
            groups[key] = groups.get(key, 0) | (1 << i)
        return cls(universe, groups.values())

    def __len__(self) -> int:
        return len(self.universe)

    def __eq__(self, other):
        if not isinstance(other, ApproximationSpace):
            return NotImplemented
        return self.universe == other.universe and self._blocks == other._blocks

    def __hash__(self):
        return hash((self.universe, self._blocks))

    def __repr__(self):
        shown = ", ".join("{" + ",".join(b) + "}" for b in self.ordered_blocks())
        return f"ApproximationSpace([{shown}])"

    @property
    def full(self) -> int:
        return full_mask(len(self.universe))

    @property
    def block_masks(self) -> tuple[int, ...]:
        return self._blocks

    @property
    def partition(self) -> frozenset[frozenset[str]]:
        return frozenset(self.from_mask(m) for m in self._blocks)

    def block_mask_of(self, i: int) -> int:
        return self._block_of[i]

    def block_index(self, x: str) -> frozenset[str]:
        """The elementary set containing ``x``."""
        return self.from_mask(self._block_of[self.index(x)])

    def index(self, x: str) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise UnknownObjectError(x) from None

    def to_mask(self, objs: Iterable[str]) -> int:
        return mask_of(self.index(x) for x in objs)

    def from_mask(self, mask: int) -> frozenset[str]:
        return frozenset(self.universe[i] for i in iter_bits(mask))

    def ordered(self, mask: int) -> list[str]:
        return [self.universe[i] for i in iter_bits(mask)]

    def ordered_blocks(self) -> list[list[str]]:
        return [self.ordered(m) for m in self._blocks]


def indiscernibility(sys: InformationSystem, attrs: Iterable[str]) -> ApproximationSpace:
    """Group objects that agree on every attribute in ``attrs``."""
    attrs = sys.check_attributes(attrs)
    return ApproximationSpace.from_labels(
        sys.objects, lambda x: tuple(sys.values[x, a] for a in attrs)
    )


def elementary_sets(space: ApproximationSpace) -> list[frozenset[str]]:
    """Blocks of the partition, ordered by their least member in universe order."""
    return [space.from_mask(m) for m in space.block_masks]
