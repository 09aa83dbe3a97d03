"""Deterministic Schreier-Sims: base, strong generating set, transversals.

Permutations are image tuples composed left to right.  Transversal entries
``u_b`` satisfy ``u_b[point] == b``.  Level ``i`` keeps the strong generators
fixing the base prefix ``base[:i]``; levels are completed bottom-up so that
sifting below a level is a sound membership test while the level itself is
being processed (the usual Schreier-Sims invariant).  Base points are always
the smallest available moved point and orbits are explored breadth-first, so
the chain depends only on the input generator list.
"""

from __future__ import annotations


def _mult(p, q):
    return tuple(q[i] for i in p)


def _inv(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def _is_id(p):
    return all(i == j for i, j in enumerate(p))


class StabilizerChain:
    """Built once from a generator list; read-only afterwards."""

    def __init__(self, degree: int, generators):
        self.degree = degree
        self.base = []
        self._gens = []  # per level: generators fixing base[:i]
        self._transversals = []

        seen = set()
        initial = []
        for gen in generators:
            g = tuple(gen)
            if len(g) != degree:
                raise ValueError("generator degree mismatch")
            if not _is_id(g) and g not in seen:
                seen.add(g)
                initial.append(g)
        for g in initial:
            self._insert(g, 0)
        for i in range(len(self.base) - 1, -1, -1):
            self._complete_level(i)

    # -- construction -------------------------------------------------------

    def _insert(self, g, start):
        """Store g, known to fix base[:start], at every level whose base
        prefix it fixes; extend the base when it fixes all of it."""
        level = start
        while level < len(self.base) and g[self.base[level]] == self.base[level]:
            level += 1
        if level == len(self.base):
            self.base.append(min(p for p in range(self.degree) if g[p] != p))
            self._gens.append([])
            self._transversals.append({})
        for k in range(start, level + 1):
            self._gens[k].append(g)
        return level

    def _rebuild_transversal(self, i):
        point = self.base[i]
        transversal = {point: tuple(range(self.degree))}
        queue = [point]
        gens = self._gens[i]
        while queue:
            b = queue.pop(0)
            u_b = transversal[b]
            for g in gens:
                c = g[b]
                if c not in transversal:
                    transversal[c] = _mult(u_b, g)
                    queue.append(c)
        self._transversals[i] = transversal

    def _complete_level(self, i):
        """Sift every Schreier generator of level i; on failure insert the
        residue below and re-complete the affected levels, then rescan."""
        while True:
            self._rebuild_transversal(i)
            transversal = self._transversals[i]
            residue = None
            for b in sorted(transversal):
                u_b = transversal[b]
                for x in self._gens[i]:
                    schreier = _mult(_mult(u_b, x), _inv(transversal[x[b]]))
                    h, drop = self._sift(schreier, i + 1)
                    if not _is_id(h):
                        residue = (h, drop)
                        break
                if residue:
                    break
            if residue is None:
                return
            h, _ = residue
            drop = self._insert(h, i + 1)
            for level in range(drop, i, -1):
                self._complete_level(level)

    # -- queries -------------------------------------------------------------

    def _sift(self, p, start=0):
        for level in range(start, len(self.base)):
            b = p[self.base[level]]
            if b not in self._transversals[level]:
                return p, level
            p = _mult(p, _inv(self._transversals[level][b]))
        return p, len(self.base)

    def sift(self, p, start: int = 0):
        """Residue after dividing out transversal elements; the identity iff
        the element lies in the group."""
        residue, _ = self._sift(tuple(p), start)
        return residue

    def order(self) -> int:
        n = 1
        for transversal in self._transversals:
            n *= len(transversal)
        return n

    def contains(self, p) -> bool:
        return _is_id(self.sift(p))

    def basic_orbits(self):
        return [sorted(t) for t in self._transversals]
