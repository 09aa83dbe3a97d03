"""Realizability of families of local invariants as a global invariant.

Families of local cohomology classes that arise from a global class are
exactly the kernel of a sum map: for the centers mu2, mu2 x mu2,
R_{l/k}(mu2), and the norm-one modules R^(1)_{l/k}(mu_2n) over a CM
extension, a family is in the image of the global group if and only if the
Z/2-reductions of its coordinates sum to zero.  Centers with no rational
order-2 character (trivial center, odd cyclic ones) impose no condition at
all, and the triality D4 centers are refused because no sum rule is
available for them.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .core import BWValue, CenterModule, Place
from .errors import InvalidInput, UnsupportedCenter


class H2Group(NamedTuple):
    """Shape of a local degree-2 cohomology group: Z/order or Z/2 x Z/2."""

    kind: str  # "cyclic" | "pair"
    order: int

    def to_json(self):
        return [2, 2] if self.kind == "pair" else self.order


CYCLIC1 = H2Group("cyclic", 1)
CYCLIC2 = H2Group("cyclic", 2)
PAIR = H2Group("pair", 2)


def local_h2_group(center: CenterModule, place: Place) -> H2Group:
    """The local H^2 group at a place, by center kind and splitting behavior."""
    if place.kind == "complex":
        return CYCLIC1
    kind = center.kind
    if kind == "trivial":
        return CYCLIC1
    if kind == "mu2":
        return CYCLIC2
    if kind == "mu_n":
        m = center.modulus
        if place.kind == "finite":
            return H2Group("cyclic", m)
        return CYCLIC2 if m % 2 == 0 else CYCLIC1
    if kind == "mu2xmu2":
        return PAIR
    if kind == "norm_one_mu":
        m = center.modulus
        if place.kind == "finite" and place.l_behavior == "split":
            return H2Group("cyclic", m)
        # Non-split finite places, and archimedean ones, see only the 2-part.
        return CYCLIC2 if m % 2 == 0 else CYCLIC1
    if kind == "restricted_mu2":
        if place.l_behavior == "split":
            return PAIR
        # Shapiro: H^2 of the induced module is Br_2 of the quadratic
        # extension, which vanishes for C over R.
        return CYCLIC2 if place.kind == "finite" else CYCLIC1
    raise UnsupportedCenter(f"no local group structure available for center {kind!r}")


@dataclass(frozen=True)
class LocalH2Profile:
    """A center module together with the local group at each chosen place."""

    center: CenterModule
    per_place: tuple  # tuple of (Place, H2Group)

    @staticmethod
    def for_places(center: CenterModule, places) -> "LocalH2Profile":
        entries = tuple((p, local_h2_group(center, p)) for p in places)
        return LocalH2Profile(center, entries)

    def __post_init__(self):
        object.__setattr__(self, "per_place", tuple(tuple(e) for e in self.per_place))
        for place, group in self.per_place:
            expected = local_h2_group(self.center, place)
            if group != expected:
                raise InvalidInput(
                    f"group {group} at a {place.kind}/{place.l_behavior} place "
                    f"contradicts center {self.center.kind} (expected {expected})"
                )


@dataclass(frozen=True)
class InvariantFamily:
    """A finitely supported family of local values aligned with a profile.

    Places outside the family carry the zero class implicitly, matching the
    direct sum in which global classes live.
    """

    profile: LocalH2Profile
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != len(self.profile.per_place):
            raise InvalidInput("one value per profile place required")
        for value, (place, group) in zip(self.values, self.profile.per_place):
            if not isinstance(value, BWValue):
                raise InvalidInput(f"family values must be BWValue, got {value!r}")
            if value.kind != group.kind or value.order != group.order:
                raise InvalidInput(
                    f"value {value} does not lie in the local group {group} "
                    f"at a {place.kind} place"
                )

    def __add__(self, other: "InvariantFamily") -> "InvariantFamily":
        if self.profile != other.profile:
            raise InvalidInput("pointwise addition needs a common profile")
        summed = []
        for a, b in zip(self.values, other.values):
            if a.kind == "pair":
                summed.append(BWValue.pair(a.value[0] + b.value[0], a.value[1] + b.value[1]))
            else:
                summed.append(BWValue.cyclic(a.order, (a.value + b.value) % max(a.order, 1)))
        return InvariantFamily(self.profile, tuple(summed))

    def to_json(self) -> dict:
        return {
            "center": self.center.to_json(),
            "places": [
                {
                    "kind": place.kind,
                    "l_behavior": place.l_behavior,
                    "group": group.to_json(),
                    "value": list(v.value) if v.kind == "pair" else v.value,
                }
                for (place, group), v in zip(self.profile.per_place, self.values)
            ],
        }

    @property
    def center(self) -> CenterModule:
        return self.profile.center


def family_from_json(data: dict) -> InvariantFamily:
    center = CenterModule.from_json(data["center"])
    places, values = [], []
    for item in data["places"]:
        kind = item["kind"]
        place = Place(
            kind=kind,
            residue_char=item.get("residue_char", 2 if kind == "finite" else None),
            l_behavior=item.get("l_behavior", "not_applicable"),
        )
        places.append(place)
        group = local_h2_group(center, place)
        declared = item.get("group")
        if declared is not None and declared != group.to_json():
            raise InvalidInput(f"declared group {declared} contradicts center at {kind} place")
        raw = item["value"]
        if group.kind == "pair":
            values.append(BWValue.pair(*raw))
        else:
            values.append(BWValue.cyclic(group.order, int(raw)))
    profile = LocalH2Profile.for_places(center, places)
    return InvariantFamily(profile, tuple(values))


def reduced_sum(family: InvariantFamily) -> int:
    """Sum of the Z/2-reductions of all coordinates, in Z/2."""
    return sum(v.reduced() for v in family.values) % 2


class RealizabilityResult(NamedTuple):
    realizable: bool
    vacuous: bool
    reason: Optional[str]


_SUM_RULE_KINDS = ("mu2", "mu2xmu2", "restricted_mu2")


def realizability(family: InvariantFamily) -> RealizabilityResult:
    """Decide whether the family is the localization of a global class.

    For the sum-rule centers the answer is exactly ``reduced_sum == 0``.  For
    the unconstrained centers the result is vacuously true and flagged; for
    triality centers UnsupportedCenter is raised.
    """
    center = family.center
    kind = center.kind
    if kind == "triality":
        raise UnsupportedCenter("no realizability criterion is available for triality D4 centers")
    if kind == "trivial":
        return RealizabilityResult(True, True, "trivial center: H^2 vanishes")
    if kind == "mu_n":
        return RealizabilityResult(
            True, True,
            "cyclic center of order %d: no orbit-level sum rule applies" % center.modulus,
        )
    if kind == "norm_one_mu":
        if center.modulus % 2 == 1:
            return RealizabilityResult(
                True, True, "norm-one module of odd order: the character group vanishes"
            )
        for place, _ in family.profile.per_place:
            if place.kind == "real" and place.l_behavior == "split":
                raise UnsupportedCenter(
                    "norm-one center needs CM splitting data (real places must be non-split)"
                )
        return RealizabilityResult(reduced_sum(family) == 0, False, None)
    if kind in _SUM_RULE_KINDS:
        return RealizabilityResult(reduced_sum(family) == 0, False, None)
    raise UnsupportedCenter(f"unknown center kind {kind!r}")


def is_realizable(family: InvariantFamily) -> bool:
    """True iff the reduced coordinate sum vanishes; vacuously true (with a
    warning) for centers that impose no condition."""
    result = realizability(family)
    if result.vacuous:
        warnings.warn(f"realizability is vacuous here: {result.reason}", stacklevel=2)
    return result.realizable


def fiber_count(profile: LocalH2Profile, omitted_place: Place) -> int:
    """Number of global classes over a family omitting one place.

    Defined for norm-one centers of even order 2n over a CM extension: the
    restriction map away from a split place is n-to-one, and injective away
    from a non-split place.
    """
    center = profile.center
    if center.kind != "norm_one_mu" or center.modulus % 2 == 1:
        raise UnsupportedCenter("fiber counts require a norm-one center of even order")
    for place, _ in profile.per_place:
        if place.kind == "real" and place.l_behavior == "split":
            raise UnsupportedCenter("fiber counts require CM splitting data")
    if omitted_place.kind == "finite" and omitted_place.l_behavior == "split":
        return center.modulus // 2
    return 1


def mod2_sum_equal(f1: InvariantFamily, f2: InvariantFamily) -> bool:
    """Whether two families have the same reduced coordinate sum."""
    for family in (f1, f2):
        result = realizability(family)  # validates the center; may raise
        if result.vacuous:
            warnings.warn(
                f"mod-2 sums carry no information here: {result.reason}", stacklevel=2
            )
    return reduced_sum(f1) == reduced_sum(f2)
