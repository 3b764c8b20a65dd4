"""Brute-force reference implementations, written directly from the
definitions on plain Python sets. Nothing here touches bit masks or the
package's evaluation code."""

from itertools import chain, combinations

from roughkit.formula import And, Atom, Box, Const, Diamond, Not, Or


def powerset(items):
    items = list(items)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))]


def classes_by_pairwise(objects, same):
    """Equivalence classes from an explicit pairwise test (no hashing of keys)."""
    classes = []
    for x in objects:
        for c in classes:
            if same(x, next(iter(c))):
                c.add(x)
                break
        else:
            classes.append({x})
    return [frozenset(c) for c in classes]


def indiscernibility_classes(table, attrs):
    return classes_by_pairwise(table.objects, lambda x, y: all(table.value(x, a) == table.value(y, a) for a in attrs))


def lower(blocks, x):
    return frozenset().union(*[b for b in blocks if b <= x])


def upper(blocks, x):
    return frozenset().union(*[b for b in blocks if b & x])


def holds(table, world, f, access=None):
    """Per-world evaluation; ``access(w)`` lists accessible worlds."""
    if isinstance(f, Atom):
        return table.value(world, f.attribute) == f.value
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Not):
        return not holds(table, world, f.operand, access)
    if isinstance(f, And):
        return holds(table, world, f.left, access) and holds(table, world, f.right, access)
    if isinstance(f, Or):
        return holds(table, world, f.left, access) or holds(table, world, f.right, access)
    if isinstance(f, Box):
        return all(holds(table, v, f.operand, access) for v in access(world))
    if isinstance(f, Diamond):
        return any(holds(table, v, f.operand, access) for v in access(world))
    raise TypeError(f)


def brute_meaning(table, f, access=None):
    return frozenset(x for x in table.objects if holds(table, x, f, access))


def brute_concepts(objects, properties, incidence):
    """All (extent, intent) pairs obtained by closing every property subset."""
    def ext(b):
        return frozenset(x for x in objects if all((x, y) in incidence for y in b))

    def itt(a):
        return frozenset(y for y in properties if all((x, y) in incidence for x in a))

    return {(ext(b), itt(ext(b))) for b in powerset(properties)}


def brute_covers(concepts):
    concepts = list(concepts)
    out = set()
    for lo in concepts:
        for hi in concepts:
            if lo[0] < hi[0] and not any(lo[0] < mid[0] < hi[0] for mid in concepts):
                out.add((lo, hi))
    return out
