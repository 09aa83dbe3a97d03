"""Domain types shared by every module.

A simple algebraic group enters the computations only through discrete data:
its Cartan-Killing type (family, rank, outer twist), the center of its
quasi-split inner form, local invariant values living in small finite
2-groups, and the places of the base field together with their decomposition
behavior in the minimal splitting field of the outer twist.  A global
configuration is a field signature plus one chosen local form per place of S.

Everything here is an immutable value; all types round-trip through JSON with
the field names used below and enums rendered as lowercase strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import InvalidInput, InvalidSignatures, InvalidType, MissingD4Data, UnknownForm

TWIST_NAMES = {1: "inner", 2: "outer2", 3: "outer3", 6: "outer6"}
TWIST_VALUES = {v: k for k, v in TWIST_NAMES.items()}

# Superscript prefixes accepted when parsing compact type names like "²A3".
_SUPERSCRIPTS = {"¹": "1", "²": "2", "³": "3", "⁶": "6"}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True, order=True)
class CartanType:
    """A family letter, a rank, and an outer twist degree (1, 2, 3 or 6)."""

    family: str
    rank: int
    twist: int = 1

    def __post_init__(self):
        if self.family not in "ABCDEFG":
            raise InvalidType(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise InvalidType(f"rank must be a positive integer, got {self.rank!r}")
        if self.twist not in (1, 2, 3, 6):
            raise InvalidType(f"twist must be one of 1, 2, 3, 6, got {self.twist!r}")

    def __str__(self):
        prefix = "" if self.twist == 1 else str(self.twist)
        return f"{prefix}{self.family}{self.rank}"

    @staticmethod
    def parse(text: str) -> "CartanType":
        """Parse compact names like "A1", "2A3", "²D4" or "6D4"."""
        s = text.strip()
        for sup, digit in _SUPERSCRIPTS.items():
            s = s.replace(sup, digit)
        twist = 1
        if s and s[0] in "1236":
            twist = int(s[0])
            s = s[1:]
        if not s or s[0].upper() not in "ABCDEFG":
            raise InvalidType(f"cannot parse Cartan type {text!r}")
        family = s[0].upper()
        try:
            rank = int(s[1:])
        except ValueError:
            raise InvalidType(f"cannot parse rank in {text!r}") from None
        return canonicalize(CartanType(family, rank, twist))

    def to_json(self) -> dict:
        return {
            "family": self.family.lower(),
            "rank": self.rank,
            "twist": TWIST_NAMES[self.twist],
        }

    @staticmethod
    def from_json(data: dict) -> "CartanType":
        try:
            family = str(data["family"]).upper()
            rank = data["rank"]
            twist = data.get("twist", "inner")
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed CartanType object: {data!r}") from exc
        if isinstance(twist, str):
            if twist not in TWIST_VALUES:
                raise InvalidType(f"unknown twist {twist!r}")
            twist = TWIST_VALUES[twist]
        return CartanType(family, int(rank), int(twist))


def canonicalize(cartan: CartanType) -> CartanType:
    """Map low-rank coincidences to a canonical representative and validate.

    B1 and C1 become A1, C2 becomes B2, D3 becomes A3 (preserving the outer
    twist).  Raises InvalidType for impossible family/rank/twist combinations,
    e.g. a triality twist outside D4.
    """
    family, rank, twist = cartan.family, cartan.rank, cartan.twist

    if family == "B" and rank == 1:
        family, rank = "A", 1
    elif family == "C" and rank == 1:
        family, rank = "A", 1
    elif family == "C" and rank == 2:
        family = "B"
    elif family == "D":
        if rank < 3:
            raise InvalidType(f"D{rank} is not a simple type")
        if rank == 3:
            if twist in (3, 6):
                raise InvalidType("triality twists require D4")
            family = "A"

    if twist in (3, 6) and (family, rank) != ("D", 4):
        raise InvalidType(f"twist {twist} is only possible for D4, not {cartan}")
    if twist == 2:
        if family == "A" and rank < 2:
            raise InvalidType("A1 has no outer twist")
        if family in ("B", "C", "F", "G"):
            raise InvalidType(f"{family}{rank} has no diagram symmetry")
        if family == "E" and rank != 6:
            raise InvalidType(f"E{rank} has no diagram symmetry")

    if family == "E" and rank not in (6, 7, 8):
        raise InvalidType(f"E{rank} does not exist")
    if family == "F" and rank != 4:
        raise InvalidType(f"F{rank} does not exist")
    if family == "G" and rank != 2:
        raise InvalidType(f"G{rank} does not exist")
    if family == "B" and rank < 2 or family == "C" and rank < 3:
        raise InvalidType(f"{family}{rank} escaped canonicalization")

    return CartanType(family, rank, twist)


@dataclass(frozen=True)
class CenterModule:
    """The center of the quasi-split inner form, as a Galois module kind.

    kinds: trivial, mu2, mu2xmu2, mu_n (cyclic of order ``modulus``),
    norm_one_mu (norm-one restriction of scalars of mu_``modulus`` along a
    quadratic extension), restricted_mu2 (plain restriction of scalars of
    mu2), and triality for the twisted D4 centers.
    """

    kind: str
    modulus: Optional[int] = None

    _KINDS = ("trivial", "mu2", "mu2xmu2", "mu_n", "norm_one_mu", "restricted_mu2", "triality")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise InvalidInput(f"unknown center kind {self.kind!r}")
        if self.kind in ("mu_n", "norm_one_mu"):
            if not isinstance(self.modulus, int) or self.modulus < 2:
                raise InvalidInput(f"{self.kind} requires a modulus >= 2")
        elif self.modulus is not None:
            raise InvalidInput(f"{self.kind} takes no modulus")

    def to_json(self) -> dict:
        return {"kind": self.kind, "modulus": self.modulus}

    @staticmethod
    def from_json(data: dict) -> "CenterModule":
        return CenterModule(data["kind"], data.get("modulus"))


def center_of(cartan: CartanType) -> CenterModule:
    """Center module of the simply connected quasi-split group of this type."""
    ct = canonicalize(cartan)
    f, n, tw = ct.family, ct.rank, ct.twist
    if f == "A":
        if n == 1:
            return CenterModule("mu2")
        if tw == 2:
            return CenterModule("norm_one_mu", n + 1)
        return CenterModule("mu_n", n + 1)
    if f in ("B", "C"):
        return CenterModule("mu2")
    if f == "D":
        if tw in (3, 6):
            return CenterModule("triality")
        if n % 2 == 0:
            return CenterModule("mu2xmu2") if tw == 1 else CenterModule("restricted_mu2")
        return CenterModule("mu_n", 4) if tw == 1 else CenterModule("norm_one_mu", 4)
    if f == "E":
        if n == 6:
            return CenterModule("norm_one_mu", 3) if tw == 2 else CenterModule("mu_n", 3)
        if n == 7:
            return CenterModule("mu2")
        return CenterModule("trivial")
    return CenterModule("trivial")  # F4, G2


@dataclass(frozen=True)
class BWValue:
    """An element (or outer-action orbit) of a local degree-2 cohomology group.

    Either a residue in Z/m (``kind="cyclic"``, any m >= 1; the groups that
    actually occur are Z/1, Z/2, Z/2n and Z/odd) or a pair of residues in
    Z/2 x Z/2 (``kind="pair"``).  When ``orbit_collapsed`` is set the stored
    value is the canonical orbit representative under the outer action:
    min(x, m-x) for cyclic inversion, the lexicographic minimum of
    {(a,b),(b,a)} for the pair swap.
    """

    kind: str
    order: int
    value: Union[int, tuple]
    orbit_collapsed: bool = False

    def __post_init__(self):
        if self.kind == "cyclic":
            if self.order < 1:
                raise InvalidInput("cyclic group order must be >= 1")
            if not isinstance(self.value, int) or not 0 <= self.value < self.order:
                raise InvalidInput(f"value {self.value!r} not a residue mod {self.order}")
            if self.orbit_collapsed and self.value != min(self.value, self.order - self.value):
                raise InvalidInput("collapsed cyclic value must be the representative min(x, m-x)")
        elif self.kind == "pair":
            if self.order != 2:
                raise InvalidInput("pair values live in Z/2 x Z/2")
            v = self.value
            if not (isinstance(v, tuple) and len(v) == 2 and all(x in (0, 1) for x in v)):
                raise InvalidInput(f"pair value must be two residues mod 2, got {v!r}")
            if self.orbit_collapsed and v != min(v, (v[1], v[0])):
                raise InvalidInput("collapsed pair must be the lexicographic orbit minimum")
        else:
            raise InvalidInput(f"unknown BWValue kind {self.kind!r}")

    @staticmethod
    def cyclic(order: int, value: int, collapsed: bool = False) -> "BWValue":
        value %= order if order else 1
        if collapsed:
            value = min(value, order - value) if value else 0
        return BWValue("cyclic", order, value, collapsed)

    @staticmethod
    def pair(a: int, b: int, collapsed: bool = False) -> "BWValue":
        v = (a % 2, b % 2)
        if collapsed:
            v = min(v, (v[1], v[0]))
        return BWValue("pair", 2, v, collapsed)

    def collapse(self) -> "BWValue":
        if self.kind == "cyclic":
            return BWValue.cyclic(self.order, self.value, collapsed=True)
        return BWValue.pair(*self.value, collapsed=True)

    def orbit(self) -> tuple:
        """Both members of the outer-action orbit (may coincide)."""
        if self.kind == "cyclic":
            return tuple(sorted({self.value, (-self.value) % self.order}))
        return tuple(sorted({self.value, (self.value[1], self.value[0])}))

    def reduced(self) -> int:
        """The Z/2 reduction: value mod 2 for even cyclic order, coordinate
        sum for pairs, and 0 for odd cyclic order (the zero map is the only
        homomorphism to Z/2 there).  Constant on outer-action orbits."""
        if self.kind == "pair":
            return (self.value[0] + self.value[1]) % 2
        if self.order % 2 == 0:
            return self.value % 2
        return 0

    def is_trivial(self) -> bool:
        return self.value == 0 or self.value == (0, 0)

    def to_json(self) -> dict:
        if self.kind == "pair":
            return {"pair": list(self.value), "orbit_collapsed": self.orbit_collapsed}
        return {
            "group_order": self.order,
            "value": self.value,
            "orbit_collapsed": self.orbit_collapsed,
        }

    @staticmethod
    def from_json(data: dict) -> "BWValue":
        collapsed = bool(data.get("orbit_collapsed", False))
        if "pair" in data:
            a, b = data["pair"]
            return BWValue("pair", 2, (int(a), int(b)), collapsed)
        return BWValue("cyclic", int(data["group_order"]), int(data["value"]), collapsed)


@dataclass(frozen=True)
class Place:
    """A place of the base field with its splitting data in the outer field.

    ``l_behavior`` records the decomposition in the minimal field over which
    the twist becomes inner; it is "not_applicable" exactly for inner types.
    For the D4 triality twists the binary split/nonsplit is refined by
    ``d4_split_count``, the number of places of the splitting field above
    this one.
    """

    kind: str
    residue_char: Optional[int] = None
    l_behavior: str = "not_applicable"
    d4_split_count: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("real", "complex", "finite"):
            raise InvalidInput(f"unknown place kind {self.kind!r}")
        if self.kind == "finite":
            if self.residue_char is None or not _is_prime(self.residue_char):
                raise InvalidInput(f"finite place needs a prime residue characteristic, got {self.residue_char!r}")
        elif self.residue_char is not None:
            raise InvalidInput("archimedean places have no residue characteristic")
        if self.l_behavior not in ("split", "nonsplit", "not_applicable"):
            raise InvalidInput(f"unknown l_behavior {self.l_behavior!r}")
        if self.d4_split_count is not None and self.d4_split_count not in (1, 2, 3, 6):
            raise InvalidInput(f"d4_split_count must be 1, 2, 3 or 6, got {self.d4_split_count!r}")

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "residue_char": self.residue_char,
            "l_behavior": self.l_behavior,
            "d4_split_count": self.d4_split_count,
        }

    @staticmethod
    def from_json(data: dict) -> "Place":
        return Place(
            data["kind"],
            data.get("residue_char"),
            data.get("l_behavior", "not_applicable"),
            data.get("d4_split_count"),
        )


@dataclass(frozen=True)
class FieldSignature:
    """Signature (r, s): number of real and of complex places."""

    real_count: int
    complex_count: int

    def __post_init__(self):
        if self.real_count < 0 or self.complex_count < 0:
            raise InvalidInput("signature counts must be nonnegative")
        if self.degree < 1:
            raise InvalidInput("a number field has degree at least 1")

    @property
    def degree(self) -> int:
        return self.real_count + 2 * self.complex_count

    def to_json(self) -> dict:
        return {"real_count": self.real_count, "complex_count": self.complex_count}

    @staticmethod
    def from_json(data: dict) -> "FieldSignature":
        return FieldSignature(int(data["real_count"]), int(data["complex_count"]))


@dataclass(frozen=True)
class LocalFormRecord:
    """One census row: a real or p-adic form with its discrete invariants.

    ``cartan`` is the *local* type of the form (the localization of an outer
    global type at a split place is the corresponding inner type).
    ``dim_sym`` and ``fundamental_rank`` are meaningful for real records only
    and are None for the p-adic ones.
    """

    cartan: CartanType
    place_class: str
    label: str
    rank: int
    bw: BWValue
    dim_sym: Optional[int] = None
    fundamental_rank: Optional[int] = None

    def __post_init__(self):
        if self.place_class not in ("real", "padic_split", "padic_nonsplit"):
            raise InvalidInput(f"unknown place_class {self.place_class!r}")
        if self.rank < 0:
            raise InvalidInput("rank must be nonnegative")
        if self.place_class == "real":
            if self.dim_sym is None or self.fundamental_rank is None:
                raise InvalidInput("real records need dim_sym and fundamental_rank")
            if self.fundamental_rank == 0 and self.dim_sym % 2:
                raise InvalidInput("dim_sym must be even when the fundamental rank vanishes")
        elif self.dim_sym is not None or self.fundamental_rank is not None:
            raise InvalidInput("dim_sym/fundamental_rank apply to real records only")

    def to_json(self) -> dict:
        return {
            "cartan": self.cartan.to_json(),
            "place_class": self.place_class,
            "label": self.label,
            "rank": self.rank,
            "dim_sym": self.dim_sym,
            "fundamental_rank": self.fundamental_rank,
            "bw": self.bw.to_json(),
        }

    @staticmethod
    def from_json(data: dict) -> "LocalFormRecord":
        return LocalFormRecord(
            cartan=CartanType.from_json(data["cartan"]),
            place_class=data["place_class"],
            label=data["label"],
            rank=int(data["rank"]),
            bw=BWValue.from_json(data["bw"]),
            dim_sym=data.get("dim_sym"),
            fundamental_rank=data.get("fundamental_rank"),
        )


@dataclass(frozen=True)
class GlobalDescriptor:
    """Field signatures plus the chosen local form at every place of S.

    Complex places carry no census record (the complex form is unique and
    forces Euler characteristic zero); their entry in ``places_in_S`` pairs
    the place with None.
    """

    cartan: CartanType
    k_sig: FieldSignature
    places_in_S: tuple
    l_sig: Optional[FieldSignature] = None

    def __post_init__(self):
        object.__setattr__(self, "places_in_S", tuple(tuple(p) for p in self.places_in_S))
        self.validate()

    def validate(self):
        from . import tables  # deferred: tables builds on core

        ct = canonicalize(self.cartan)
        if ct != self.cartan:
            raise InvalidInput(f"descriptor type {self.cartan} is not canonical (use {ct})")
        if ct.twist == 1 and self.l_sig is not None:
            raise InvalidInput("inner types have no outer splitting field signature")
        if ct.twist > 1 and self.l_sig is not None:
            if self.l_sig.degree != ct.twist * self.k_sig.degree:
                raise InvalidSignatures(
                    f"splitting field of {ct} must have degree {ct.twist} over k: "
                    f"k has degree {self.k_sig.degree}, l has degree {self.l_sig.degree}"
                )

        reals = sum(1 for p, _ in self.places_in_S if p.kind == "real")
        complexes = sum(1 for p, _ in self.places_in_S if p.kind == "complex")
        if reals != self.k_sig.real_count or complexes != self.k_sig.complex_count:
            raise InvalidInput(
                "S must contain every archimedean place: expected "
                f"{self.k_sig.real_count} real and {self.k_sig.complex_count} complex entries, "
                f"got {reals} and {complexes}"
            )

        for place, record in self.places_in_S:
            self._validate_entry(ct, place, record, tables)

    @staticmethod
    def _validate_entry(ct, place, record, tables):
        if place.kind == "complex":
            if record is not None:
                raise InvalidInput("complex places take no census record")
            if ct.twist > 1 and place.l_behavior == "nonsplit":
                raise InvalidInput("a complex place has split semantics in any outer extension")
            return
        if ct.twist == 1 and place.l_behavior != "not_applicable":
            raise InvalidInput("l_behavior applies to outer twists only")
        if ct.twist == 2 and place.l_behavior == "not_applicable":
            raise InvalidInput(f"outer type {ct} needs split/nonsplit data at {place.kind} places")
        if ct.twist in (3, 6):
            if place.d4_split_count is None:
                raise MissingD4Data(f"triality type {ct} needs d4_split_count at every place")
            _check_d4_consistency(ct, place)
        if record is None:
            raise InvalidInput(f"missing local form record at a {place.kind} place")
        allowed = tables.forms_for_place(ct, place)
        if record not in allowed:
            raise UnknownForm(
                f"record {record.label!r} ({record.cartan}, {record.place_class}) is not an "
                f"admissible form of {ct} at a {place.kind} place with behavior "
                f"{place.l_behavior}/{place.d4_split_count}"
            )


def _check_d4_consistency(ct, place):
    counts = (1, 3) if ct.twist == 3 else (1, 2, 3, 6)
    if place.d4_split_count not in counts:
        raise InvalidInput(
            f"d4_split_count {place.d4_split_count} impossible for {ct} "
            f"(allowed: {counts})"
        )
    full = 3 if ct.twist == 3 else 6
    split = place.d4_split_count == full
    if place.l_behavior == "split" and not split or place.l_behavior == "nonsplit" and split:
        raise InvalidInput("l_behavior inconsistent with d4_split_count")
    if place.kind == "real" and place.d4_split_count in (1, 2) and ct.twist == 6:
        raise InvalidInput("a real place decomposes into at least 3 places of a sextic splitting field")
    if place.kind == "real" and ct.twist == 3 and place.d4_split_count != 3:
        raise InvalidInput("real places split completely in a cubic extension")


def descriptor_to_json(desc: GlobalDescriptor) -> dict:
    return {
        "cartan": desc.cartan.to_json(),
        "k_sig": desc.k_sig.to_json(),
        "l_sig": desc.l_sig.to_json() if desc.l_sig else None,
        "places_in_S": [
            {"place": p.to_json(), "record": r.to_json() if r else None}
            for p, r in desc.places_in_S
        ],
    }


def descriptor_from_json(data: dict) -> GlobalDescriptor:
    """Parse a descriptor; records may omit everything but the label, in which
    case they are resolved against the census."""
    from . import tables

    ct = CartanType.from_json(data["cartan"])
    ct = canonicalize(ct)
    entries = []
    for item in data["places_in_S"]:
        place = Place.from_json(item["place"])
        raw = item.get("record")
        if raw is None:
            record = None
        elif "bw" in raw:
            record = LocalFormRecord.from_json(raw)
        else:
            record = tables.resolve_record(ct, place, raw["label"])
        entries.append((place, record))
    l_sig = data.get("l_sig")
    return GlobalDescriptor(
        cartan=ct,
        k_sig=FieldSignature.from_json(data["k_sig"]),
        places_in_S=tuple(entries),
        l_sig=FieldSignature.from_json(l_sig) if l_sig else None,
    )
