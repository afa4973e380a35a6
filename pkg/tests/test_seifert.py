from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from domcensus.errors import DomainError
from domcensus.seifert import (
    Geometry,
    SeifertData,
    classify_geometry,
    enumerate_flat_bases,
    euler_number,
    invariant_summary,
    is_normalized,
    minimal_horizontal,
    normalize,
    orbifold_euler,
    orientation_canonical,
    rank_lower_bound,
    reverse_orientation,
    seifert_volume,
    torsion_order,
)

N236 = SeifertData(0, 1, ((2, 1), (3, 1), (6, 1)))
N237 = SeifertData(0, 1, ((2, 1), (3, 1), (7, 1)))


raw_seifert = st.builds(
    SeifertData,
    st.integers(0, 3),
    st.integers(-10, 10),
    st.lists(
        st.tuples(st.integers(1, 9), st.integers(-12, 12)), max_size=4
    ).map(tuple),
)

# twists never divisible by the multiplicity, so no fiber is deleted and
# chi is preserved on the nose
clean_seifert = st.builds(
    SeifertData,
    st.integers(0, 3),
    st.integers(-10, 10),
    st.lists(
        st.tuples(st.integers(2, 9), st.integers(-12, 12)).filter(
            lambda f: f[1] % f[0] != 0
        ),
        max_size=4,
    ).map(tuple),
)


class TestNormalize:
    def test_absorbs_quotients_and_unit_fibers(self):
        raw = SeifertData(0, 0, ((2, 3), (1, 5)))
        assert normalize(raw) == SeifertData(0, 6, ((2, 1),))

    def test_identity_on_normal_form(self):
        assert normalize(SeifertData(1, 0)) == SeifertData(1, 0)

    def test_negative_twist(self):
        raw = SeifertData(0, -2, ((3, -1),))
        assert normalize(raw) == SeifertData(0, -3, ((3, 2),))

    def test_rejects_nonpositive_multiplicity(self):
        with pytest.raises(DomainError):
            SeifertData(0, 0, ((0, 1),))
        with pytest.raises(DomainError):
            SeifertData(0, 0, ((-3, 1),))

    @given(raw_seifert)
    def test_idempotent(self, raw):
        once = normalize(raw)
        assert is_normalized(once)
        assert normalize(once) == once

    @given(raw_seifert)
    def test_preserves_euler_number(self, raw):
        assert euler_number(normalize(raw)) == euler_number(raw)

    @given(clean_seifert)
    def test_preserves_chi_without_deleted_fibers(self, raw):
        assert orbifold_euler(normalize(raw)) == orbifold_euler(raw)


class TestInvariants:
    def test_euler_number_examples(self):
        assert euler_number(N236) == -2
        assert euler_number(SeifertData(1, 0)) == 0
        assert euler_number(N237) == Fraction(-83, 42)

    def test_orbifold_euler_examples(self):
        assert orbifold_euler(N237) == Fraction(-1, 42)
        assert orbifold_euler(SeifertData(1, 0)) == 0
        assert orbifold_euler(SeifertData(2, 0)) == -2

    def test_classify_examples(self):
        assert classify_geometry(N237) is Geometry.TILDE_PSL2R
        assert classify_geometry(N236) is Geometry.NIL
        assert classify_geometry(SeifertData(1, 0)) is Geometry.OUT_OF_SCOPE
        assert classify_geometry(SeifertData(2, 0)) is Geometry.H2XE1
        assert classify_geometry(SeifertData(0, 0)) is Geometry.OUT_OF_SCOPE

    def test_torsion_examples(self):
        assert torsion_order(N236) == 72
        assert torsion_order(SeifertData(0, 2, ((2, 1), (2, 1)))) == 12
        with pytest.raises(DomainError):
            torsion_order(SeifertData(1, 0))

    def test_volume_examples(self):
        assert seifert_volume(N237) == Fraction(1, 3486)
        assert seifert_volume(SeifertData(2, 1)) == 4
        with pytest.raises(DomainError):
            seifert_volume(SeifertData(1, 0))

    def test_summary_field_presence(self):
        s = invariant_summary(N237)
        assert (s.sv, s.torsion_order) == (Fraction(1, 3486), 83)
        flat = invariant_summary(SeifertData(2, 0))
        assert flat.sv is None and flat.torsion_order is None
        nil = invariant_summary(N236)
        assert nil.sv is None and nil.torsion_order == 72


class TestFlatBases:
    def test_exact_answer(self):
        bases = enumerate_flat_bases()
        assert len(bases) == 5
        assert set(bases) == {
            (1, ()),
            (0, (2, 3, 6)),
            (0, (2, 4, 4)),
            (0, (3, 3, 3)),
            (0, (2, 2, 2, 2)),
        }

    def test_stable_across_runs(self):
        assert enumerate_flat_bases() == enumerate_flat_bases()


class TestMinimalHorizontal:
    def test_surface_bundle(self):
        surf = minimal_horizontal(SeifertData(2, 0))
        assert (surf.d, surf.chi_minus) == (1, 2)

    def test_with_cone_points(self):
        surf = minimal_horizontal(SeifertData(1, -1, ((2, 1), (2, 1))))
        assert (surf.d, surf.chi_minus) == (2, 2)

    def test_preconditions(self):
        # chi = 0 here, so no negative-curvature base
        with pytest.raises(DomainError):
            minimal_horizontal(SeifertData(0, -1, ((2, 1), (3, 2), (6, 1))))
        # e != 0: no horizontal surface at all
        with pytest.raises(DomainError):
            minimal_horizontal(N237)

    @given(clean_seifert)
    def test_chi_minus_is_integral(self, raw):
        data = normalize(raw)
        if euler_number(data) != 0 or orbifold_euler(data) >= 0:
            return
        surf = minimal_horizontal(data)
        assert surf.chi_minus >= 0
        assert surf.chi_minus == surf.d * abs(orbifold_euler(data))


def test_rank_lower_bound():
    assert rank_lower_bound(N237) == 1
    assert rank_lower_bound(SeifertData(2, 0)) == 2
    assert rank_lower_bound(SeifertData(0, 0)) == -2


class TestReverseOrientation:
    def test_amphichiral_torus(self):
        assert reverse_orientation(SeifertData(1, 0)) == SeifertData(1, 0)

    def test_hyperbolic_example(self):
        rev = reverse_orientation(N237)
        assert rev == SeifertData(0, -4, ((2, 1), (3, 2), (7, 6)))
        assert euler_number(rev) == Fraction(83, 42)

    @given(raw_seifert)
    def test_involution_negates_e_fixes_chi(self, raw):
        data = normalize(raw)
        rev = reverse_orientation(data)
        assert euler_number(rev) == -euler_number(data)
        assert orbifold_euler(rev) == orbifold_euler(data)
        assert reverse_orientation(rev) == data

    @given(raw_seifert)
    def test_canonical_form_is_orientation_invariant(self, raw):
        data = normalize(raw)
        assert orientation_canonical(data) == orientation_canonical(
            reverse_orientation(data)
        )
