"""Pure-Python element kernels: closure, conjugacy partition, lookups.

Elements cross this boundary as length-``degree`` byte strings (image maps).
All outputs are deterministic and must match the compiled kernel bit for bit:
closures come back lexicographically sorted and class ids are the index of
the smallest member of each class.
"""

from __future__ import annotations


def closure(degree, gens, max_elements):
    """Every product of the generators, sorted; None if the group is larger
    than max_elements."""
    identity = bytes(range(degree))
    gens = [bytes(g) for g in gens]
    seen = {identity}
    frontier = [identity]
    while frontier:
        fresh = []
        for p in frontier:
            for g in gens:
                q = bytes(map(g.__getitem__, p))
                if q not in seen:
                    if len(seen) >= max_elements:
                        return None
                    seen.add(q)
                    fresh.append(q)
        frontier = fresh
    return sorted(seen)


def class_partition(elements, gens):
    """Conjugacy class ids for a sorted, closed element list: ids[i] is the
    index of the first element of the class of elements[i]."""
    index = {e: i for i, e in enumerate(elements)}
    gens = [bytes(g) for g in gens]
    invs = []
    for g in gens:
        inv = bytearray(len(g))
        for i, j in enumerate(g):
            inv[j] = i
        invs.append(bytes(inv))
    ids = [-1] * len(elements)
    for root, x in enumerate(elements):
        if ids[root] != -1:
            continue
        ids[root] = root
        stack = [x]
        while stack:
            y = stack.pop()
            for g, ginv in zip(gens, invs):
                # z = g^-1 y g: z[i] = g[y[ginv[i]]]
                z = bytes(map(g.__getitem__, map(y.__getitem__, ginv)))
                k = index[z]
                if ids[k] == -1:
                    ids[k] = root
                    stack.append(z)
    return ids


def positions(elements, queries):
    """Index of each query in the element list, -1 when absent."""
    index = {e: i for i, e in enumerate(elements)}
    return [index.get(bytes(q), -1) for q in queries]


def find_conjugator(elements, h_gens, target_elements):
    """Index of the first g in elements conjugating every h generator into
    the target element set, or -1."""
    target = set(target_elements)
    h_gens = [bytes(h) for h in h_gens]
    for idx, g in enumerate(elements):
        inv = bytearray(len(g))
        for i, j in enumerate(g):
            inv[j] = i
        ok = True
        for h in h_gens:
            z = bytes(map(g.__getitem__, map(h.__getitem__, bytes(inv))))
            if z not in target:
                ok = False
                break
        if ok:
            return idx
    return -1
