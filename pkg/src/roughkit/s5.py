"""Kripke semantics over indiscernibility frames.

Worlds are the objects of an information system, two worlds see each other
when they share an elementary set, and the atom ``a=v`` is true at ``x``
when ``x`` has value ``v`` for ``a``. ``box`` and ``dia`` are evaluated by
their quantifier clauses over accessible worlds; on these frames they agree
with the lower and upper approximations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .bits import full_mask, is_subset, iter_bits, mask_of
from .formula import And, Atom, Box, Const, Diamond, Formula, Not, Or, implies, to_text
from .information_system import ApproximationSpace, InformationSystem, indiscernibility


class KripkeModel:
    __slots__ = ("system", "space", "access")

    def __init__(self, system: InformationSystem, space: ApproximationSpace | None, access: Sequence[int]):
        self.system = system
        self.space = space
        # access[i]: mask of worlds accessible from world i
        self.access = tuple(access)

    @property
    def worlds(self) -> tuple[str, ...]:
        return self.system.objects

    @property
    def full(self) -> int:
        return full_mask(len(self.worlds))

    def __repr__(self):
        return f"KripkeModel({len(self.worlds)} worlds)"

    @classmethod
    def _unchecked_frame(cls, system: InformationSystem, relation: Iterable[tuple[str, str]]) -> "KripkeModel":
        """Test hook: a model over an arbitrary accessibility relation.

        The public constructor only produces equivalence frames; this one
        exists so the axiom checker can be shown to detect failures.
        """
        access = [0] * len(system.objects)
        for u, v in relation:
            access[system.index(u)] |= 1 << system.index(v)
        return cls(system, None, access)


def build_model(sys: InformationSystem, attrs: Iterable[str]) -> KripkeModel:
    space = indiscernibility(sys, attrs)
    access = [space.block_mask_of(i) for i in range(len(sys.objects))]
    return KripkeModel(sys, space, access)


def extension_mask(model: KripkeModel, f: Formula) -> int:
    sys = model.system
    full = model.full
    n = len(model.worlds)

    def ev(g: Formula) -> int:
        if isinstance(g, Atom):
            return sys.descriptor_mask(g.attribute, g.value)
        if isinstance(g, Const):
            return full if g.value else 0
        if isinstance(g, Not):
            return full & ~ev(g.operand)
        if isinstance(g, And):
            return ev(g.left) & ev(g.right)
        if isinstance(g, Or):
            return ev(g.left) | ev(g.right)
        if isinstance(g, Box):
            inner = ev(g.operand)
            return mask_of(w for w in range(n) if is_subset(model.access[w], inner))
        if isinstance(g, Diamond):
            inner = ev(g.operand)
            return mask_of(w for w in range(n) if model.access[w] & inner)
        raise TypeError(f"not a formula: {g!r}")

    return ev(f)


def extension(model: KripkeModel, f: Formula) -> frozenset[str]:
    """Worlds at which ``f`` holds."""
    return model.system.from_mask(extension_mask(model, f))


def holds_at(model: KripkeModel, world: str, f: Formula) -> bool:
    return bool(extension_mask(model, f) >> model.system.index(world) & 1)


@dataclass(frozen=True)
class Counterexample:
    axiom: str
    formula: str
    world: str


@dataclass(frozen=True)
class AxiomReport:
    checked: int
    counterexamples: tuple[Counterexample, ...]

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def failed_axioms(self) -> set[str]:
        return {c.axiom for c in self.counterexamples}


def axiom_instances(samples: Sequence[Formula]) -> list[tuple[str, Formula]]:
    """Instances of K, T, 4 and 5 over the samples (K over all ordered pairs)."""
    out = []
    for p in samples:
        for q in samples:
            out.append(("K", implies(Box(implies(p, q)), implies(Box(p), Box(q)))))
    for p in samples:
        out.append(("T", implies(Box(p), p)))
        out.append(("4", implies(Box(p), Box(Box(p)))))
        out.append(("5", implies(Diamond(p), Box(Diamond(p)))))
    return out


def check_s5_axioms(model: KripkeModel, samples: Sequence[Formula]) -> AxiomReport:
    """Check that every axiom instance is true at every world.

    Any world where an instance fails is reported; on an equivalence frame
    there should be none.
    """
    found = []
    instances = axiom_instances(samples)
    for name, inst in instances:
        bad = model.full & ~extension_mask(model, inst)
        for w in iter_bits(bad):
            found.append(Counterexample(name, to_text(inst), model.worlds[w]))
    return AxiomReport(len(instances), tuple(found))
