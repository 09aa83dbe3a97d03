"""Census checks: spec'd slice contents plus the structural invariants
(parity functionality, group membership of invariant values, closed forms)."""

import pytest

from chisign import duality, tables
from chisign.core import CartanType, Place, center_of
from chisign.errors import InvalidQuery, UnknownForm

from test_core import all_canonical_types


def by_label(rows):
    return {r.label: r for r in rows}


class TestRealSlices:
    def test_outer_e6(self):
        rows = by_label(tables.real_forms(CartanType.parse("2E6")))
        assert {r.dim_sym for r in rows.values()} == {40, 32, 0}
        assert all(r.fundamental_rank == 0 for r in rows.values())

    def test_inner_a2_all_positive_fundamental_rank(self):
        rows = tables.real_forms(CartanType.parse("1A2"))
        assert rows
        assert all(r.fundamental_rank > 0 for r in rows)

    def test_su_dimensions_against_lie_algebra_count(self):
        # dim of the symmetric space of SU(p,q) two ways: the closed form 2pq
        # and dim su(p,q) - dim s(u(p) x u(q)).
        rows = tables.real_forms(CartanType.parse("2A3"))
        expected = {}
        for q in range(0, 3):
            p = 4 - q
            lie = ((p + q) ** 2 - 1) - (p * p + q * q - 1)
            assert lie == 2 * p * q
            expected["SU(%d,%d)" % (p, q)] = lie
        assert {r.label: r.dim_sym for r in rows} == expected
        assert {r.dim_sym for r in rows} == {0, 6, 8}

    def test_so_star_parities(self):
        # dim SO*(2m)/U(m) = m(m-1); half of it is m(m-1)/2.
        d6 = by_label(tables.real_forms(CartanType.parse("1D6")))["SO*(12)"]
        assert d6.dim_sym == 30 and d6.bw.reduced() == 1
        d5 = by_label(tables.real_forms(CartanType.parse("2D5")))["SO*(10)"]
        assert d5.dim_sym == 20 and d5.bw.reduced() == 1

    def test_compact_forms_present(self):
        assert "SU(4,0)" in by_label(tables.real_forms(CartanType.parse("2A3")))
        assert "SO(12,0)" in by_label(tables.real_forms(CartanType.parse("1D6")))
        assert "Sp(3,0)" in by_label(tables.real_forms(CartanType.parse("C3")))

    def test_d4_real_slice_merged(self):
        rows = by_label(tables.real_forms(CartanType("D", 4, 1)))
        assert set(rows) == {"SO(8,0)", "SO(6,2)", "SO(4,4)"}
        assert rows["SO(6,2)"].dim_sym == 12
        assert rows["SO(4,4)"].dim_sym == 16


class TestPadicSlices:
    def test_g2_split_only(self):
        rows = tables.padic_forms(CartanType.parse("G2"), "split")
        assert len(rows) == 1
        assert rows[0].rank == 2 and rows[0].bw.is_trivial()

    def test_outer_a3_nonsplit(self):
        rows = tables.padic_forms(CartanType.parse("2A3"), "nonsplit")
        assert sorted(r.rank for r in rows) == [1, 2]

    def test_outer_a3_split_schur_indices(self):
        rows = tables.padic_forms(CartanType.parse("2A3"), "split")
        got = {r.label: (r.rank, r.bw.value) for r in rows}
        assert got == {"split": (3, 0), "SL_2(D_2)": (1, 2), "SL_1(D_4)": (0, 1)}

    def test_nonsplit_for_inner_rejected(self):
        with pytest.raises(InvalidQuery):
            tables.padic_forms(CartanType.parse("B3"), "nonsplit")

    def test_sextic_d4_union(self):
        rows = tables.padic_forms(CartanType.parse("6D4"), "nonsplit")
        assert sorted(r.rank for r in rows) == [1, 2, 2, 3]
        counts = {(3, "finite"): [3, 1], (2, "finite"): [2], (1, "finite"): [2]}
        for count, expected in ((3, [1, 3]), (2, [2]), (1, [2])):
            got = sorted(r.rank for r in tables.d4_forms(CartanType.parse("6D4"), "finite", count))
            assert got == expected, count

    def test_e7(self):
        rows = by_label(tables.padic_forms(CartanType.parse("E7"), "split"))
        assert rows["split"].rank == 7 and rows["split"].bw.is_trivial()
        assert rows["nonsplit"].rank == 4 and not rows["nonsplit"].bw.is_trivial()


class TestLookupBw:
    def test_so_star_10_nontrivial(self):
        rec = by_label(tables.real_forms(CartanType.parse("2D5")))["SO*(10)"]
        assert not tables.lookup_bw(rec).is_trivial()
        assert tables.lookup_bw(rec).reduced() == 1

    def test_split_c_forms_trivial(self):
        for n in (3, 4, 5, 6, 7):
            rows = by_label(tables.padic_forms(CartanType("C", n), "split"))
            assert tables.lookup_bw(rows["split"]).is_trivial()
            assert not tables.lookup_bw(rows["quaternionic"]).is_trivial()

    def test_d6_quaternionic_orbit(self):
        rec = by_label(tables.padic_forms(CartanType.parse("1D6"), "split"))["quaternionic"]
        bw = tables.lookup_bw(rec)
        assert bw.orbit() == ((0, 1), (1, 0))
        assert bw.value == (0, 1) and bw.orbit_collapsed

    def test_unknown_form(self):
        from chisign.core import BWValue, LocalFormRecord

        fake = LocalFormRecord(
            cartan=CartanType("G", 2), place_class="padic_split",
            label="imaginary", rank=1, bw=BWValue.cyclic(1, 0),
        )
        with pytest.raises(UnknownForm):
            tables.lookup_bw(fake)


def iter_slices(ct):
    yield "real", tables.real_forms(ct)
    yield "padic_split", tables.padic_forms(ct, "split")
    if ct.twist > 1:
        yield "padic_nonsplit", tables.padic_forms(ct, "nonsplit")


class TestStructuralInvariants:
    def test_slices_nonempty_finite(self):
        for ct in all_canonical_types():
            for _, rows in iter_slices(ct):
                assert 0 < len(rows) < 40

    def test_rank_parity_functionality_on_non_exempt_slices(self):
        for ct in all_canonical_types():
            if tables.rank_parity_exempt(ct):
                continue
            for cls, rows in iter_slices(ct):
                seen = {}
                for rec in rows:
                    if cls == "real":
                        if rec.fundamental_rank != 0:
                            continue
                        parity = (rec.dim_sym // 2) % 2
                    else:
                        parity = rec.rank % 2
                    key = rec.bw.reduced()
                    assert seen.setdefault(key, parity) == parity, (str(ct), cls, rec.label)

    def test_zero_parity_types(self):
        # Trivial-center types and the cyclic-cubic D4 twist: even ranks
        # p-adically and dimensions divisible by four at real places.
        for name in ("E8", "F4", "G2", "3D4"):
            ct = CartanType.parse(name)
            for rec in tables.real_forms(ct):
                assert rec.dim_sym % 4 == 0, (name, rec.label)
            for rec in tables.padic_forms(ct, "split"):
                assert rec.rank % 2 == 0, (name, rec.label)
            if ct.twist > 1:
                for rec in tables.padic_forms(ct, "nonsplit"):
                    assert rec.rank % 2 == 0, (name, rec.label)

    def test_even_outer_a_real_dims_mod_4(self):
        for n in range(1, 7):  # types of diagram rank 2n
            ct = CartanType("A", 2 * n, 2)
            for rec in tables.real_forms(ct):
                assert rec.dim_sym % 4 == 0, (str(ct), rec.label)

    def test_outer_a_even_split_ranks(self):
        for n in range(1, 7):
            ct = CartanType("A", 2 * n, 2)
            for rec in tables.padic_forms(ct, "split"):
                assert rec.rank % 2 == 0
            nonsplit = tables.padic_forms(ct, "nonsplit")
            assert len(nonsplit) == 1 and nonsplit[0].rank == n

    def test_outer_a_odd_nonsplit_ranks(self):
        for n in range(2, 7):  # diagram rank 2n-1
            ct = CartanType("A", 2 * n - 1, 2)
            rows = tables.padic_forms(ct, "nonsplit")
            assert sorted(r.rank for r in rows) == [n - 1, n]
            split_rows = tables.padic_forms(ct, "split")
            for rec in split_rows:
                if rec.label == "split":
                    assert rec.bw.value == 0
                elif rec.label.startswith("SL_"):
                    d = int(rec.label.split("D_")[1].rstrip(")"))
                    assert rec.bw.orbit()[0] in ((2 * n // d) % (2 * n), (-2 * n // d) % (2 * n))

    def test_b_family_closed_form(self):
        # The invariant of SO(p,q), q of them negative squares, equals the
        # parity of (t(t-1) - n(n-1))/2 where t = the count congruent to n.
        for n in range(2, 9):
            ct = CartanType("B", n)
            for rec in tables.real_forms(ct):
                p_str, q_str = rec.label[3:-1].split(",")
                p, q = int(p_str), int(q_str)
                assert p + q == 2 * n + 1 and rec.dim_sym == p * q
                t = q if (q - n) % 2 == 0 else p
                expected = ((t * (t - 1) - n * (n - 1)) // 2) % 2
                assert rec.bw.value == expected, (n, rec.label)

    def test_b2_matches_c2_isogeny(self):
        # Spin(5) = Sp(2): the invariant is trivial exactly for the split form.
        rows = by_label(tables.real_forms(CartanType("B", 2)))
        assert rows["SO(3,2)"].bw.is_trivial()          # = Sp(4,R), split
        assert not rows["SO(4,1)"].bw.is_trivial()      # = Sp(1,1)
        assert not rows["SO(5,0)"].bw.is_trivial()      # = Sp(2), compact

    def test_bw_values_live_in_the_local_groups(self):
        real_split = Place("real", None, "split")
        real_nonsplit = Place("real", None, "nonsplit")
        real_inner = Place("real")
        fin_split = Place("finite", 5, "split")
        fin_nonsplit = Place("finite", 5, "nonsplit")
        fin_inner = Place("finite", 5)
        for ct in all_canonical_types():
            center = center_of(ct)
            if center.kind == "triality":
                continue
            if ct.twist == 1:
                combos = [("real", real_inner, tables.real_forms(ct)),
                          ("padic", fin_inner, tables.padic_forms(ct, "split"))]
            else:
                combos = [
                    ("real", real_nonsplit, tables.real_forms(ct)),
                    ("real", real_split,
                     tables.forms_for_place(ct, real_split)),
                    ("padic", fin_split, tables.padic_forms(ct, "split")),
                    ("padic", fin_nonsplit, tables.padic_forms(ct, "nonsplit")),
                ]
            for _, place, rows in combos:
                group = duality.local_h2_group(center, place)
                for rec in rows:
                    assert rec.bw.kind == group.kind, (str(ct), place, rec.label)
                    assert rec.bw.order == group.order, (str(ct), place, rec.label)

    def test_exempt_tags(self):
        exempt = ["2A2", "2A6", "1D4", "1D8", "2D4", "2D8", "6D4", "C3", "C7"]
        not_exempt = ["A1", "2A3", "2A4", "1D6", "2D5", "2D6", "3D4", "C4", "C5", "B3", "E7"]
        for name in exempt:
            assert tables.rank_parity_exempt(CartanType.parse(name)), name
        for name in not_exempt:
            assert not tables.rank_parity_exempt(CartanType.parse(name)), name


class TestDispatch:
    def test_outer_real_split_uses_inner_slice(self):
        place = Place("real", None, "split")
        rows = by_label(tables.forms_for_place(CartanType.parse("2D6"), place))
        assert "SO*(12)" in rows

    def test_sextic_count_dispatch(self):
        ct = CartanType.parse("6D4")
        real6 = Place("real", None, "split", 6)
        real3 = Place("real", None, "nonsplit", 3)
        assert {r.label for r in tables.forms_for_place(ct, real6)} == {"SO(8,0)", "SO(6,2)", "SO(4,4)"}
        assert {r.label for r in tables.forms_for_place(ct, real3)} == {"SO(7,1)", "SO(5,3)"}
        fin3 = Place("finite", 7, "nonsplit", 3)
        assert sorted(r.rank for r in tables.forms_for_place(ct, fin3)) == [1, 3]

    def test_census_dump_shape(self):
        data = tables.census(["2A3", "G2"])
        assert set(data["types"]) == {"2A3", "G2"}
        entry = data["types"]["2A3"]
        assert entry["center"]["kind"] == "norm_one_mu"
        assert entry["padic_nonsplit"]
