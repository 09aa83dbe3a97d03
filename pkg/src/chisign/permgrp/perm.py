"""Permutations on {0..degree-1} stored as image tuples.

Composition is left-to-right: ``(p * q)(i) == q(p(i))``.
"""

from __future__ import annotations

from ..errors import InvalidInput

MAX_DEGREE = 255  # images are exchanged with the kernels as single bytes


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        n = len(images)
        if n == 0 or n > MAX_DEGREE:
            raise InvalidInput(f"degree must be between 1 and {MAX_DEGREE}")
        if sorted(images) != list(range(n)):
            raise InvalidInput(f"not a permutation of 0..{n - 1}: {images!r}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(range(degree))

    @staticmethod
    def from_cycles(degree: int, cycles) -> "Permutation":
        images = list(range(degree))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:]):
                images[a] = b
            if cycle:
                images[cycle[-1]] = cycle[0]
        return Permutation(images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise InvalidInput("degree mismatch")
        o = other.images
        return Permutation(tuple(o[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def conjugate_by(self, g: "Permutation") -> "Permutation":
        """g^-1 * self * g in left-to-right composition."""
        gi = g.images
        out = [0] * self.degree
        for j, img in enumerate(self.images):
            out[gi[j]] = gi[img]
        return Permutation(out)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycle_type(self) -> tuple:
        """Multiset of cycle lengths, fixed points included, sorted descending."""
        seen = [False] * self.degree
        lengths = []
        for start in range(self.degree):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                length += 1
                j = self.images[j]
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    def to_bytes(self) -> bytes:
        return bytes(self.images)

    @staticmethod
    def from_bytes(data: bytes) -> "Permutation":
        return Permutation(data)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def cycle_type(p: Permutation) -> tuple:
    return p.cycle_type()
