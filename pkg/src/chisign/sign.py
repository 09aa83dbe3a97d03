"""Parity invariant and sign of the Euler characteristic.

For a configuration with totally real base field and vanishing fundamental
rank at every real place, the sign of the Euler characteristic of the
associated S-arithmetic groups is (-1)^d with

    d = sum over real places of dim(X_v)/2
      + sum over finite places in S of rank_{k_v}  (mod 2).

Complex places or a positive fundamental rank force the Euler characteristic
to vanish.  The classifier enumerates bounded configurations from the census
to report which signs a type can attain at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Optional

from . import tables
from .core import CartanType, FieldSignature, GlobalDescriptor, Place, canonicalize, center_of
from .errors import InvalidSignatures, MissingD4Data, NotApplicable

SIGN_ORDER = ("negative", "zero", "positive")


@dataclass(frozen=True)
class SignResult:
    sign: str
    d_parity: Optional[int] = None
    zero_reason: Optional[str] = None

    def to_json(self) -> dict:
        return {"sign": self.sign, "d_parity": self.d_parity, "zero_reason": self.zero_reason}


def d_parity(desc: GlobalDescriptor) -> int:
    """The mod-2 invariant governing the sign; requires the nonvanishing
    regime (no complex places, fundamental rank zero at real places)."""
    total = 0
    for place, record in desc.places_in_S:
        if place.kind == "complex":
            raise NotApplicable("complex places force Euler characteristic zero")
        if place.kind == "real":
            if record.fundamental_rank != 0:
                raise NotApplicable(
                    f"real form {record.label} has positive fundamental rank; "
                    "the parity invariant is undefined there"
                )
            total += record.dim_sym // 2
        else:
            total += record.rank
    return total % 2


def sign_chi(desc: GlobalDescriptor) -> SignResult:
    """Sign of the Euler characteristic of the configured S-arithmetic
    groups: zero with a reason, else (-1)^d."""
    if any(place.kind == "complex" for place, _ in desc.places_in_S):
        return SignResult("zero", None, "complex_place")
    if any(
        place.kind == "real" and record.fundamental_rank > 0
        for place, record in desc.places_in_S
    ):
        return SignResult("zero", None, "positive_fundamental_rank")
    d = d_parity(desc)
    return SignResult("positive" if d == 0 else "negative", d, None)


def archimedean_factor_counts(k_sig: FieldSignature, l_sig: FieldSignature):
    """(inner real, outer real, complex) factor counts of the archimedean
    part for a quadratic extension l/k with the given signatures."""
    r, s = k_sig.real_count, k_sig.complex_count
    R, S = l_sig.real_count, l_sig.complex_count
    if R + 2 * S != 2 * (r + 2 * s):
        raise InvalidSignatures(
            f"l must be quadratic over k: degree {R + 2 * S} versus 2*{r + 2 * s}"
        )
    if R % 2 != 0:
        raise InvalidSignatures("real places of l pair up over real places of k; R must be even")
    if R > 2 * r:
        raise InvalidSignatures("more real places of l than real embeddings above k allow")
    return (R // 2, S - s, s)


def d4_sextic_d_parity(nonarch_places) -> int:
    """Parity contribution of non-archimedean places for the sextic D4
    twist: the count of places with exactly three places of the splitting
    field above them (the places of local quadratic type), mod 2."""
    count = 0
    for place in nonarch_places:
        if place.d4_split_count is None:
            raise MissingD4Data(f"place {place} carries no decomposition count")
        if place.d4_split_count == 3:
            count += 1
    return count % 2


# ---------------------------------------------------------------------------
# bounded sign classifier


def _dedup(options):
    return tuple(sorted(set(options)))


def _real_options(ct: CartanType):
    """(dim/2 parity, reduced invariant) of fundamental-rank-zero real forms
    reachable at a real place, over all splitting behaviors."""
    slices = []
    if ct.twist == 1:
        slices.append(tables.real_forms(ct))
    elif ct.twist == 2:
        slices.append(tables.forms_for_place(ct, _REAL_NONSPLIT))
        slices.append(tables.real_forms(CartanType(ct.family, ct.rank, 1)))
    elif ct.twist == 3:
        slices.append(tables.d4_forms(ct, "real", 3))
    else:
        slices.append(tables.d4_forms(ct, "real", 6))
        slices.append(tables.d4_forms(ct, "real", 3))
    options = []
    for slice_ in slices:
        for rec in slice_:
            if rec.fundamental_rank == 0:
                options.append(((rec.dim_sym // 2) % 2, rec.bw.reduced()))
    return _dedup(options)


def _finite_options(ct: CartanType):
    """(rank parity, reduced invariant) of forms reachable at a finite
    place, over all splitting behaviors."""
    slices = [tables.padic_forms(ct, "split")]
    if ct.twist == 2:
        slices.append(tables.padic_forms(ct, "nonsplit"))
    elif ct.twist == 3:
        slices.append(tables.d4_forms(ct, "finite", 1))
    elif ct.twist == 6:
        for count in (3, 2, 1):
            slices.append(tables.d4_forms(ct, "finite", count))
    options = []
    for slice_ in slices:
        for rec in slice_:
            options.append((rec.rank % 2, rec.bw.reduced()))
    return _dedup(options)


# Placeholder used to fetch the nonsplit real slice of outer types.
_REAL_NONSPLIT = Place("real", None, "nonsplit")

_SUM_RULE_KINDS = ("mu2", "mu2xmu2", "restricted_mu2")


def _has_sum_rule(ct: CartanType) -> bool:
    center = center_of(ct)
    if center.kind in _SUM_RULE_KINDS:
        return True
    return center.kind == "norm_one_mu" and center.modulus % 2 == 0


def classify(cartan: CartanType, max_real_places: int, max_finite_places: int,
             require_realizable: bool = False, threads: int = 1) -> set:
    """Set of sign values attainable within the given place bounds.

    Zero is always attainable (a complex place kills the Euler
    characteristic), so the enumeration only decides whether positive and
    negative parities occur.  With ``require_realizable`` the enumeration is
    restricted, for centers carrying the Z/2 sum rule, to configurations
    whose invariants already sum to zero over S; this models groups that are
    quasi-split outside S and can only shrink the attainable set, since in
    general the invariants away from S are unconstrained.
    """
    ct = canonicalize(cartan)
    if max_real_places < 1 or max_finite_places < 0:
        raise NotApplicable("bounds must allow at least one real place")
    filtered = require_realizable and _has_sum_rule(ct)

    real_opts = _real_options(ct)
    finite_opts = _finite_options(ct)
    signs = {"zero"}
    if not real_opts:
        return signs

    finite_combos = []
    for f in range(max_finite_places + 1):
        finite_combos.extend(combinations_with_replacement(finite_opts, f))

    def handle(real_combo):
        found = set()
        d_real = sum(p for p, _ in real_combo) % 2
        r_real = sum(r for _, r in real_combo) % 2
        for combo in finite_combos:
            d = (d_real + sum(p for p, _ in combo)) % 2
            if filtered and (r_real + sum(r for _, r in combo)) % 2 != 0:
                continue
            found.add("positive" if d == 0 else "negative")
        return found

    real_combos = []
    for r in range(1, max_real_places + 1):
        real_combos.extend(combinations_with_replacement(real_opts, r))

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            for found in pool.map(handle, real_combos):
                signs |= found
    else:
        for combo in real_combos:
            signs |= handle(combo)
    return signs
