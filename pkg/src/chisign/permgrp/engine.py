"""Permutation group engine: orders, stabilizers, conjugacy classes, almost
conjugate subgroup pairs, and the degree-6d search predicate.

Group orders and membership run over the stabilizer chain; anything that
needs the full element list (conjugacy classes, class intersection counts,
conjugator scans) goes through the selected kernel backend and is guarded by
an element bound.
"""

from __future__ import annotations

from ..errors import InvalidInput, NotSubgroup, NotTransitive, TooLarge
from .bsgs import StabilizerChain
from .kernel import class_partition, closure, find_conjugator, positions
from .perm import Permutation

DEFAULT_MAX_ELEMENTS = 2_000_000


class PermGroup:
    """A finite permutation group given by generators on {0..degree-1}."""

    def __init__(self, degree: int, generators):
        self.degree = int(degree)
        self.generators = tuple(generators)
        for g in self.generators:
            if not isinstance(g, Permutation) or g.degree != self.degree:
                raise InvalidInput("generators must be permutations of the stated degree")
        self._chain = None
        self._elements = None
        self._class_ids = None

    @staticmethod
    def from_json(data: dict) -> "PermGroup":
        degree = int(data["degree"])
        gens = [Permutation(images) for images in data["generators"]]
        return PermGroup(degree, gens)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "generators": [list(g.images) for g in self.generators],
        }

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self.degree, [g.images for g in self.generators])
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def contains(self, p: Permutation) -> bool:
        return p.degree == self.degree and self.chain.contains(p.images)

    def orbit(self, point: int) -> tuple:
        seen = {point}
        queue = [point]
        while queue:
            a = queue.pop(0)
            for g in self.generators:
                b = g(a)
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return tuple(sorted(seen))

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def point_stabilizer(self, point: int) -> "Subgroup":
        """Stabilizer via Schreier generators of the orbit transversal."""
        if not 0 <= point < self.degree:
            raise InvalidInput(f"no point {point} in degree {self.degree}")
        identity = Permutation.identity(self.degree)
        transversal = {point: identity}
        queue = [point]
        while queue:
            b = queue.pop(0)
            for g in self.generators:
                c = g(b)
                if c not in transversal:
                    transversal[c] = transversal[b] * g
                    queue.append(c)
        schreier = []
        seen = set()
        for b in sorted(transversal):
            u_b = transversal[b]
            for g in self.generators:
                s = u_b * g * transversal[g(b)].inverse()
                if not s.is_identity() and s.images not in seen:
                    seen.add(s.images)
                    schreier.append(s)
        return Subgroup(self, schreier, _validated=True)

    def elements_bytes(self, max_elements: int = DEFAULT_MAX_ELEMENTS):
        if self._elements is None:
            if self.order() > max_elements:
                raise TooLarge(
                    f"group of order {self.order()} exceeds the element bound {max_elements}"
                )
            elems = closure(self.degree, [g.to_bytes() for g in self.generators], max_elements)
            if elems is None:
                raise TooLarge(f"closure exceeded the element bound {max_elements}")
            self._elements = elems
        return self._elements

    def class_ids(self, max_elements: int = DEFAULT_MAX_ELEMENTS):
        if self._class_ids is None:
            elems = self.elements_bytes(max_elements)
            self._class_ids = class_partition(elems, [g.to_bytes() for g in self.generators])
        return self._class_ids

    def conjugacy_classes(self, max_elements: int = DEFAULT_MAX_ELEMENTS):
        """(representative, class size) pairs, ordered by representative."""
        elems = self.elements_bytes(max_elements)
        ids = self.class_ids(max_elements)
        sizes = {}
        for i in ids:
            sizes[i] = sizes.get(i, 0) + 1
        return [
            (Permutation.from_bytes(elems[root]), sizes[root]) for root in sorted(sizes)
        ]


class Subgroup:
    """A subgroup of a PermGroup, given by generator lists."""

    def __init__(self, parent: PermGroup, generators, _validated=False):
        self.parent = parent
        self.generators = tuple(generators)
        if not _validated:
            for g in self.generators:
                if not parent.contains(g):
                    raise NotSubgroup(f"generator {g!r} is not a member of the parent group")
        self._chain = None
        self._elements = None

    @staticmethod
    def from_json(parent: PermGroup, data: dict) -> "Subgroup":
        gens = [Permutation(images) for images in data["generators"]]
        if int(data.get("degree", parent.degree)) != parent.degree:
            raise InvalidInput("subgroup degree must match the parent group")
        return Subgroup(parent, gens)

    @property
    def degree(self) -> int:
        return self.parent.degree

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self.degree, [g.images for g in self.generators])
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def contains(self, p: Permutation) -> bool:
        return p.degree == self.degree and self.chain.contains(p.images)

    def elements_bytes(self, max_elements: int = DEFAULT_MAX_ELEMENTS):
        if self._elements is None:
            elems = closure(self.degree, [g.to_bytes() for g in self.generators], max_elements)
            if elems is None:
                raise TooLarge(f"subgroup closure exceeded the element bound {max_elements}")
            self._elements = elems
        return self._elements


# ---------------------------------------------------------------------------
# spec operations


def group_order(g: PermGroup) -> int:
    return g.order()


def is_transitive(g: PermGroup) -> bool:
    return g.is_transitive()


def point_stabilizer(g: PermGroup, point: int) -> Subgroup:
    return g.point_stabilizer(point)


def conjugacy_classes(g: PermGroup, max_elements: int = DEFAULT_MAX_ELEMENTS):
    return g.conjugacy_classes(max_elements)


def has_required_class(g: PermGroup, max_elements: int = DEFAULT_MAX_ELEMENTS) -> bool:
    """Some conjugacy class has cycle type containing at least three 6-cycles
    and at least six 3-cycles."""
    for rep, _ in g.conjugacy_classes(max_elements):
        ct = rep.cycle_type()
        if ct.count(6) >= 3 and ct.count(3) >= 6:
            return True
    return False


def _class_counts(group: PermGroup, sub: Subgroup, max_elements: int):
    elems = group.elements_bytes(max_elements)
    ids = group.class_ids(max_elements)
    sub_elems = sub.elements_bytes(max_elements)
    counts = {}
    for pos in positions(elems, sub_elems):
        if pos < 0:
            raise NotSubgroup("subgroup element outside the parent group")
        counts[ids[pos]] = counts.get(ids[pos], 0) + 1
    return counts


def gassmann_equivalent(h1: Subgroup, h2: Subgroup,
                        max_elements: int = DEFAULT_MAX_ELEMENTS) -> bool:
    """Equal intersection counts with every conjugacy class of the parent."""
    if h1.parent is not h2.parent:
        raise InvalidInput("both subgroups must live in the same parent group")
    if h1.order() != h2.order():
        return False
    g = h1.parent
    return _class_counts(g, h1, max_elements) == _class_counts(g, h2, max_elements)


def are_conjugate_subgroups(h1: Subgroup, h2: Subgroup,
                            max_elements: int = DEFAULT_MAX_ELEMENTS) -> bool:
    """Exhaustive scan for an element conjugating h1 onto h2."""
    if h1.parent is not h2.parent:
        raise InvalidInput("both subgroups must live in the same parent group")
    if h1.order() != h2.order():
        return False
    g = h1.parent
    idx = find_conjugator(
        g.elements_bytes(max_elements),
        [p.to_bytes() for p in h1.generators],
        h2.elements_bytes(max_elements),
    )
    return idx >= 0


def quotient_is_s3(u, h: Subgroup) -> bool:
    """H normal in U with nonabelian quotient of order 6 (hence S3)."""
    for gen in h.generators:
        if not u.contains(gen):
            raise NotSubgroup("h is not contained in u")
    u_order, h_order = u.order(), h.order()
    if u_order != 6 * h_order:
        return False
    for ug in u.generators:
        for hg in h.generators:
            if not h.contains(hg.conjugate_by(ug)):
                return False
    degree = h.degree
    reps = [Permutation.identity(degree)]
    queue = [Permutation.identity(degree)]
    while queue:
        r = queue.pop(0)
        for ug in u.generators:
            x = r * ug
            if not any(h.contains(x * s.inverse()) for s in reps):
                reps.append(x)
                queue.append(x)
    if len(reps) != 6:
        return False

    def coset_of(p):
        for i, r in enumerate(reps):
            if h.contains(p * r.inverse()):
                return i
        raise NotSubgroup("coset decomposition failed; h is not normal in u")

    for a in reps:
        for b in reps:
            if coset_of(a * b) != coset_of(b * a):
                return True
    return False


def search_candidates(g: PermGroup, candidates=(), intermediates=(),
                      max_elements: int = DEFAULT_MAX_ELEMENTS,
                      allow_intransitive: bool = False) -> dict:
    """Run the degree-6d predicate: almost conjugate non-conjugate subgroup
    pairs among the point stabilizer and supplied candidates, S3 quotients
    over supplied intermediate subgroups, and the required cycle type.

    Candidate and intermediate subgroups come from input data; the whole
    group itself is always tried as an intermediate.
    """
    transitive = g.is_transitive()
    if not transitive and not allow_intransitive:
        raise NotTransitive("the search predicate expects a transitive group")
    order = g.order()
    if order > max_elements:
        raise TooLarge(f"group of order {order} exceeds the element bound {max_elements}")

    stab = g.point_stabilizer(0)
    pool = [("stabilizer(0)", stab)]
    pool += [(f"candidate_{i}", sub) for i, sub in enumerate(candidates)]
    inter_pool = [("group", g)]
    inter_pool += [(f"intermediate_{i}", sub) for i, sub in enumerate(intermediates)]

    pairs = []
    for i in range(len(pool)):
        for j in range(i + 1, len(pool)):
            name1, h1 = pool[i]
            name2, h2 = pool[j]
            if not gassmann_equivalent(h1, h2, max_elements):
                continue
            if are_conjugate_subgroups(h1, h2, max_elements):
                continue
            s3_names = []
            for uname, u in inter_pool:
                try:
                    ok = quotient_is_s3(u, h1) and quotient_is_s3(u, h2)
                except NotSubgroup:
                    ok = False
                if ok:
                    s3_names.append(uname)
            pairs.append({
                "h1": name1,
                "h2": name2,
                "order": h1.order(),
                "gassmann": True,
                "conjugate": False,
                "s3_intermediates": s3_names,
            })

    flag = has_required_class(g, max_elements)
    if not pairs:
        verdict = "no almost conjugate pair found"
    elif not flag:
        verdict = "fails cycle-type condition"
    elif any(p["s3_intermediates"] for p in pairs):
        verdict = "candidate configuration found"
    else:
        verdict = "no intermediate subgroup with S3 quotients"

    return {
        "degree": g.degree,
        "order": order,
        "transitive": transitive,
        "stabilizer_order": stab.order(),
        "has_required_class": flag,
        "pairs": pairs,
        "verdict": verdict,
    }
