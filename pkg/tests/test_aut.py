"""Automorphism groups, lifting maps on semidirect products, caps."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groupkit.aut import (
    DEFAULT_AUT_CAP,
    aut_group,
    automorphisms,
    is_characteristic,
    lambda_lift,
    mixed_pair_check,
    zeta_lift,
)
from groupkit.construct import (
    actions,
    cyclic,
    dihedral,
    direct_product,
    semidirect,
    trivial_action,
)
from groupkit.core import (
    SizeCapError,
    center,
    element_orders,
    is_abelian,
    subgroup_generated,
    verify_group_axioms,
)
from groupkit.iso import are_isomorphic
from groupkit.numth import euler_phi
from groupkit._search import generating_sequence


def _elementary_abelian(p: int, m: int):
    g = cyclic(p)
    for _ in range(m - 1):
        g = direct_product(g, cyclic(p))
    return g


class TestAutomorphismCounts:
    @pytest.mark.parametrize(
        "g, count",
        [
            (cyclic(1), 1),
            (cyclic(5), 4),
            (cyclic(8), 4),
            (direct_product(cyclic(2), cyclic(2)), 6),
            (dihedral(3), 6),
            (dihedral(4), 8),
            (direct_product(cyclic(2), cyclic(4)), 8),
            (dihedral(6), 12),
        ],
    )
    def test_known_counts(self, g, count):
        assert len(automorphisms(g)) == count

    def test_every_result_is_an_automorphism(self):
        for a in automorphisms(dihedral(4)):
            assert a.is_isomorphism()
            assert a.source is a.target

    def test_results_are_distinct_and_sorted(self):
        images = [a.image for a in automorphisms(dihedral(4))]
        assert images == sorted(images)
        assert len(set(images)) == len(images)

    @pytest.mark.parametrize("n", range(1, 21))
    def test_cyclic_aut_count_is_phi(self, n):
        assert len(automorphisms(cyclic(n))) == euler_phi(n)

    def test_aut_of_cyclic_is_abelian(self):
        for n in (5, 8, 12, 15):
            assert is_abelian(aut_group(cyclic(n)).table)

    def test_aut_of_z5_is_cyclic_of_order_4(self):
        ag = aut_group(cyclic(5))
        assert are_isomorphic(ag.table, cyclic(4)) is not None


class TestAutGroup:
    def test_table_passes_axioms_and_identity_first(self):
        ag = aut_group(dihedral(4))
        assert verify_group_axioms(ag.table).ok
        assert ag.table.identity == 0
        assert ag.elements[0].image == tuple(range(8))

    def test_table_encodes_composition(self):
        ag = aut_group(dihedral(3))
        for i, a in enumerate(ag.elements):
            for j, b in enumerate(ag.elements):
                composed = tuple(a.image[b.image[x]] for x in range(6))
                assert ag.elements[ag.table.mul[i][j]].image == composed

    def test_aut_of_klein_four_is_d3(self):
        ag = aut_group(direct_product(cyclic(2), cyclic(2)))
        assert are_isomorphic(ag.table, dihedral(3)) is not None

    def test_element_names_cover_generators(self):
        ag = aut_group(cyclic(5))
        assert ag.table.elem_names[0] == "id"


class TestElementaryAbelianCap:
    def test_formula_refusal_mentions_projected_count(self):
        g = _elementary_abelian(2, 5)
        with pytest.raises(SizeCapError) as exc:
            automorphisms(g)
        assert "9999360" in str(exc.value)

    def test_refusal_at_default_cap_for_16(self):
        with pytest.raises(SizeCapError):
            automorphisms(_elementary_abelian(2, 4))

    def test_raising_the_cap_enumerates(self):
        autos = automorphisms(_elementary_abelian(2, 4), cap=30_000)
        assert len(autos) == 20160

    @pytest.mark.parametrize(
        "p, m, count",
        [(2, 2, 6), (2, 3, 168), (3, 2, 48)],
    )
    def test_small_elementary_abelian_counts(self, p, m, count):
        assert len(automorphisms(_elementary_abelian(p, m))) == count

    def test_search_cap_applies_to_general_groups(self):
        with pytest.raises(SizeCapError):
            automorphisms(dihedral(6), cap=5)


class TestCharacteristic:
    def test_center_is_characteristic(self):
        for g in [dihedral(4), dihedral(6), direct_product(cyclic(2), cyclic(4))]:
            assert is_characteristic(g, center(g))

    def test_unique_cyclic_subgroup_is_characteristic(self):
        g = dihedral(4)
        assert is_characteristic(g, subgroup_generated(g, [2]))

    def test_klein_four_factor_is_not_characteristic(self):
        g = direct_product(cyclic(2), cyclic(2))
        assert not is_characteristic(g, subgroup_generated(g, [1]))

    def test_whole_group_and_trivial_subgroup_always_characteristic(self):
        g = dihedral(5)
        assert is_characteristic(g, subgroup_generated(g, []))
        assert is_characteristic(g, subgroup_generated(g, [1, 2]))


def _faithful_action_z4_on_z5():
    k, h = cyclic(5), cyclic(4, "s")
    for a in actions(h, k):
        if len({m.image for m in a.maps}) == 4:
            return k, h, a
    raise AssertionError("expected a faithful action")


class TestLifts:
    def test_zeta_lifts_all_succeed_when_aut_k_is_abelian(self):
        k, h, act = _faithful_action_z4_on_z5()
        g = semidirect(k, h, act)
        verdicts = [zeta_lift(om, act, g)[1] for om in automorphisms(k)]
        assert verdicts == [True, True, True, True]

    def test_zeta_candidates_fix_h_coordinate(self):
        k, h, act = _faithful_action_z4_on_z5()
        g = semidirect(k, h, act)
        om = automorphisms(k)[1]
        candidate, _ = zeta_lift(om, act, g)
        for p in range(g.order):
            assert candidate.image[p] % 4 == p % 4

    def test_zeta_fails_exactly_off_the_centralizer(self):
        # K = Z2 x Z2 has nonabelian Aut; an involution's centralizer there
        # has order 2, so exactly 2 of the 6 lifts succeed
        k = direct_product(cyclic(2), cyclic(2))
        h = cyclic(2, "s")
        act = next(a for a in actions(h, k) if not a.is_trivial())
        g = semidirect(k, h, act)
        verdicts = [zeta_lift(om, act, g)[1] for om in automorphisms(k)]
        assert sum(verdicts) == 2

    def test_zeta_all_succeed_on_direct_products(self):
        k = dihedral(3)
        h = cyclic(2, "s")
        act = trivial_action(h, k)
        g = semidirect(k, h, act)
        assert all(zeta_lift(om, act, g)[1] for om in automorphisms(k))

    def test_lambda_succeeds_only_when_action_is_preserved(self):
        k, h, act = _faithful_action_z4_on_z5()
        g = semidirect(k, h, act)
        verdicts = [lambda_lift(d, act, g)[1] for d in automorphisms(h)]
        # the action is faithful, so only the identity of Aut(H) preserves it
        assert sorted(verdicts) == [False, True]

    def test_lambda_all_succeed_on_direct_products(self):
        k, h = cyclic(5), cyclic(4, "s")
        g = direct_product(k, h)
        act = trivial_action(h, k)
        assert all(lambda_lift(d, act, g)[1] for d in automorphisms(h))

    def test_lift_images_meet_only_at_identity(self):
        k, h, act = _faithful_action_z4_on_z5()
        g = semidirect(k, h, act)
        zetas = {zeta_lift(om, act, g)[0].image
                 for om in automorphisms(k) if zeta_lift(om, act, g)[1]}
        lambdas = {lambda_lift(d, act, g)[0].image
                   for d in automorphisms(h) if lambda_lift(d, act, g)[1]}
        assert zetas & lambdas == {tuple(range(g.order))}

    def test_lift_rejects_mismatched_product(self):
        k, h, act = _faithful_action_z4_on_z5()
        wrong = direct_product(k, h)
        with pytest.raises(ValueError):
            zeta_lift(automorphisms(k)[0], act, wrong)

    def test_lift_rejects_non_automorphism(self):
        from groupkit.core import Morphism

        k, h, act = _faithful_action_z4_on_z5()
        g = semidirect(k, h, act)
        squash = Morphism(k, k, (0, 0, 0, 0, 0))
        with pytest.raises(ValueError):
            zeta_lift(squash, act, g)


class TestMixedPairCheck:
    def test_agrees_with_full_homomorphism_check_on_split_maps(self):
        # candidates (k, h) -> (omega(k), delta(h)) restrict to homomorphisms
        # on both factors, so the mixed-pair shortcut must match the full check
        k, h, act = _faithful_action_z4_on_z5()
        g = semidirect(k, h, act)
        from groupkit.core import Morphism

        for om in automorphisms(k):
            for d in automorphisms(h):
                image = tuple(om.image[p // 4] * 4 + d.image[p % 4]
                              for p in range(g.order))
                candidate = Morphism(g, g, image)
                assert mixed_pair_check(candidate, 5, 4) == candidate.is_homomorphism()

    def test_rejects_wrong_dimensions(self):
        g = dihedral(3)
        from groupkit.core import identity_morphism

        with pytest.raises(ValueError):
            mixed_pair_check(identity_morphism(g), 5, 4)


class TestGeneratingSequence:
    @pytest.mark.parametrize(
        "g, expected",
        [(cyclic(6), [1]), (dihedral(4), [2, 1]), (cyclic(1), [])],
    )
    def test_known_sequences(self, g, expected):
        assert generating_sequence(g) == expected

    def test_first_pick_has_maximal_order(self):
        for g in [dihedral(6), direct_product(cyclic(2), cyclic(8)), cyclic(12)]:
            gens = generating_sequence(g)
            orders = element_orders(g)
            assert orders[gens[0]] == max(orders)

    @settings(max_examples=25, deadline=None)
    @given(st.sampled_from([3, 4, 5, 6, 8, 9, 10, 12]))
    def test_sequence_generates_whole_group(self, n):
        for g in (dihedral(n), cyclic(n)):
            gens = generating_sequence(g)
            assert len(subgroup_generated(g, gens)) == g.order


class TestDefaultCap:
    def test_default_cap_value(self):
        assert DEFAULT_AUT_CAP == 10_000
