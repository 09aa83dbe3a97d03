import pytest

from chisign.core import (
    BWValue,
    CartanType,
    CenterModule,
    FieldSignature,
    GlobalDescriptor,
    LocalFormRecord,
    Place,
    canonicalize,
    center_of,
    descriptor_from_json,
    descriptor_to_json,
)
from chisign.errors import InvalidInput, InvalidType, UnknownForm

from conftest import make_descriptor


def all_canonical_types(max_rank=9):
    types = [CartanType("A", 1)]
    types += [CartanType("A", n, tw) for n in range(2, max_rank + 1) for tw in (1, 2)]
    types += [CartanType("B", n) for n in range(2, max_rank + 1)]
    types += [CartanType("C", n) for n in range(3, max_rank + 1)]
    types += [CartanType("D", n, tw) for n in range(4, max_rank + 1) for tw in (1, 2)]
    types += [CartanType("D", 4, 3), CartanType("D", 4, 6)]
    types += [CartanType("E", 6, 1), CartanType("E", 6, 2), CartanType("E", 7), CartanType("E", 8)]
    types += [CartanType("F", 4), CartanType("G", 2)]
    return types


class TestCanonicalize:
    def test_low_rank_coincidences(self):
        assert canonicalize(CartanType("C", 1)) == CartanType("A", 1)
        assert canonicalize(CartanType("B", 1)) == CartanType("A", 1)
        assert canonicalize(CartanType("C", 2)) == CartanType("B", 2)
        assert canonicalize(CartanType("D", 3)) == CartanType("A", 3)
        assert canonicalize(CartanType("D", 3, 2)) == CartanType("A", 3, 2)

    def test_identity_on_valid(self):
        assert canonicalize(CartanType("D", 4, 2)) == CartanType("D", 4, 2)
        assert canonicalize(CartanType("E", 8)) == CartanType("E", 8)

    def test_triality_only_d4(self):
        with pytest.raises(InvalidType):
            canonicalize(CartanType("A", 5, 3))
        with pytest.raises(InvalidType):
            canonicalize(CartanType("D", 5, 6))

    def test_impossible_combinations(self):
        for bad in [("E", 6, 3), ("E", 7, 2), ("B", 3, 2), ("C", 4, 2),
                    ("F", 4, 2), ("G", 2, 2), ("A", 1, 2), ("E", 5, 1),
                    ("F", 3, 1), ("G", 1, 1), ("D", 2, 1)]:
            with pytest.raises(InvalidType):
                canonicalize(CartanType(*bad))

    def test_idempotent(self):
        for ct in all_canonical_types():
            once = canonicalize(ct)
            assert canonicalize(once) == once

    def test_parse(self):
        assert CartanType.parse("2A3") == CartanType("A", 3, 2)
        assert CartanType.parse("²A3") == CartanType("A", 3, 2)
        assert CartanType.parse("6D4") == CartanType("D", 4, 6)
        assert CartanType.parse("A1") == CartanType("A", 1)
        assert CartanType.parse("C1") == CartanType("A", 1)


class TestCenterOf:
    def test_examples(self):
        assert center_of(CartanType("E", 8)) == CenterModule("trivial")
        assert center_of(CartanType.parse("2A3")) == CenterModule("norm_one_mu", 4)
        assert center_of(CartanType.parse("2D6")) == CenterModule("restricted_mu2")

    def test_table(self):
        cases = {
            "A1": CenterModule("mu2"),
            "B4": CenterModule("mu2"),
            "C5": CenterModule("mu2"),
            "E7": CenterModule("mu2"),
            "1A4": CenterModule("mu_n", 5),
            "1A5": CenterModule("mu_n", 6),
            "2A4": CenterModule("norm_one_mu", 5),
            "1D6": CenterModule("mu2xmu2"),
            "1D5": CenterModule("mu_n", 4),
            "2D5": CenterModule("norm_one_mu", 4),
            "1E6": CenterModule("mu_n", 3),
            "2E6": CenterModule("norm_one_mu", 3),
            "3D4": CenterModule("triality"),
            "6D4": CenterModule("triality"),
            "F4": CenterModule("trivial"),
            "G2": CenterModule("trivial"),
        }
        for name, expected in cases.items():
            assert center_of(CartanType.parse(name)) == expected, name

    def test_total_and_deterministic(self):
        for ct in all_canonical_types():
            assert center_of(ct) == center_of(ct)


class TestBWValue:
    def test_reduced_constant_on_orbits(self):
        for order in (2, 3, 4, 6, 8, 5, 1):
            for value in range(order):
                v = BWValue.cyclic(order, value)
                reductions = {BWValue.cyclic(order, member).reduced() for member in v.orbit()}
                assert len(reductions) == 1
        for a in (0, 1):
            for b in (0, 1):
                v = BWValue.pair(a, b)
                reductions = {BWValue.pair(*member).reduced() for member in v.orbit()}
                assert len(reductions) == 1

    def test_canonical_representatives(self):
        assert BWValue.cyclic(4, 3, collapsed=True).value == 1
        assert BWValue.cyclic(4, 2, collapsed=True).value == 2
        assert BWValue.pair(1, 0, collapsed=True).value == (0, 1)
        with pytest.raises(InvalidInput):
            BWValue("cyclic", 4, 3, True)
        with pytest.raises(InvalidInput):
            BWValue("pair", 2, (1, 0), True)

    def test_reduced_values(self):
        assert BWValue.cyclic(4, 2).reduced() == 0
        assert BWValue.cyclic(4, 1).reduced() == 1
        assert BWValue.cyclic(3, 2).reduced() == 0  # odd order: zero map
        assert BWValue.pair(1, 0).reduced() == 1
        assert BWValue.pair(1, 1).reduced() == 0

    def test_json_roundtrip(self):
        for v in [BWValue.cyclic(6, 5), BWValue.pair(1, 1), BWValue.cyclic(4, 1, True)]:
            assert BWValue.from_json(v.to_json()) == v


class TestPlaceAndSignature:
    def test_finite_needs_prime(self):
        Place("finite", 7, "split")
        with pytest.raises(InvalidInput):
            Place("finite", 6, "split")
        with pytest.raises(InvalidInput):
            Place("finite", None)
        with pytest.raises(InvalidInput):
            Place("real", 3)

    def test_signature_degree(self):
        assert FieldSignature(1, 1).degree == 3
        with pytest.raises(InvalidInput):
            FieldSignature(0, 0)

    def test_json_roundtrip(self):
        p = Place("finite", 5, "nonsplit")
        assert Place.from_json(p.to_json()) == p
        s = FieldSignature(2, 1)
        assert FieldSignature.from_json(s.to_json()) == s


class TestCartanJson:
    def test_lowercase_enums(self):
        data = CartanType("D", 4, 6).to_json()
        assert data == {"family": "d", "rank": 4, "twist": "outer6"}
        assert CartanType.from_json(data) == CartanType("D", 4, 6)


class TestDescriptor:
    def test_roundtrip_and_validation(self):
        desc = make_descriptor("A1", real_forms=["SL(2,R)"], finite_forms=[(5, "not_applicable", "split")])
        data = descriptor_to_json(desc)
        again = descriptor_from_json(data)
        assert again == desc

    def test_complex_place_has_no_record(self):
        desc = make_descriptor("A1", real_forms=[], complex_places=1)
        assert desc.places_in_S[0][1] is None
        record = make_descriptor("A1", real_forms=["SU(2)"]).places_in_S[0][1]
        with pytest.raises(InvalidInput):
            GlobalDescriptor(
                cartan=CartanType("A", 1),
                k_sig=FieldSignature(0, 1),
                places_in_S=((Place("complex"), record),),
            )

    def test_archimedean_count_must_match(self):
        ct = CartanType("A", 1)
        with pytest.raises(InvalidInput):
            GlobalDescriptor(cartan=ct, k_sig=FieldSignature(2, 0), places_in_S=())

    def test_record_must_be_admissible(self):
        ct = CartanType("A", 1)
        bogus = LocalFormRecord(
            cartan=ct, place_class="real", label="SL(99,R)", rank=1,
            bw=BWValue.cyclic(2, 0), dim_sym=2, fundamental_rank=0,
        )
        with pytest.raises(UnknownForm):
            GlobalDescriptor(
                cartan=ct, k_sig=FieldSignature(1, 0),
                places_in_S=((Place("real"), bogus),),
            )

    def test_label_resolution_from_json(self):
        desc = descriptor_from_json({
            "cartan": {"family": "a", "rank": 1, "twist": "inner"},
            "k_sig": {"real_count": 1, "complex_count": 0},
            "places_in_S": [{"place": {"kind": "real"}, "record": {"label": "SL(2,R)"}}],
        })
        assert desc.places_in_S[0][1].dim_sym == 2
        with pytest.raises(UnknownForm):
            descriptor_from_json({
                "cartan": {"family": "a", "rank": 1, "twist": "inner"},
                "k_sig": {"real_count": 1, "complex_count": 0},
                "places_in_S": [{"place": {"kind": "real"}, "record": {"label": "E8(8)"}}],
            })
