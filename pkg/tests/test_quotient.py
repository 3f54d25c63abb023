import random

import pytest

from hecke5.golden import GoldenInt
from hecke5.ideals import IdealHNF, ideal_from_generator, ideal_mul
from hecke5.matrices import IDENTITY, MINUS_IDENTITY, S, T, eval_word
from hecke5.quotient import (
    CapExceededError,
    QuotientGroup,
    ResMat,
    build_quotient,
    coset_words,
    index_g,
    index_h,
    is_normal,
    is_surjective,
    minus_i_in_level,
    power_subgroup,
    sl2_order,
    subgroup_from_predicate,
    subgroup_generated,
)

from conftest import random_word

TAU = GoldenInt(2, 1)


class TestBuildQuotient:
    @pytest.mark.parametrize(
        "gen,order",
        [
            (2, 10),
            (3, 120),
            (TAU, 120),
            (4, 320),
            (5, 15000),
            (GoldenInt(3, 1), 1320),
        ],
    )
    def test_orders(self, quotient_cache, gen, order):
        assert quotient_cache(gen).order == order

    def test_elements_unique_and_start_at_identity(self, quotient_cache):
        q = quotient_cache(3)
        assert len(set(q.elements)) == q.order
        assert q.elements[0] == ResMat.identity(q.ring).key

    def test_deterministic(self, quotient_cache):
        q1 = quotient_cache(3)
        q2 = build_quotient(ideal_from_generator(3))
        assert q1.elements == q2.elements

    def test_unit_ideal_rejected(self):
        with pytest.raises(ValueError):
            build_quotient(IdealHNF(1, 0, 1))

    def test_cap_error_carries_partial(self):
        with pytest.raises(CapExceededError) as exc:
            build_quotient(ideal_from_generator(5), cap=100)
        assert exc.value.cap == 100
        assert exc.value.partial == 101

    def test_closure_under_product(self, quotient_cache):
        q = quotient_cache(TAU)
        rng = random.Random(1)
        keys = list(q.elements)
        for _ in range(100):
            u = q.resmat(rng.choice(keys))
            v = q.resmat(rng.choice(keys))
            assert (u * v).key in q.element_set
            assert u.inverse().key in q.element_set

    def test_all_elements_have_det_one(self, quotient_cache):
        q = quotient_cache(4)
        one = q.ring.one()
        assert all(q.resmat(k).det() == one for k in q.elements)


class TestIndexHelpers:
    def test_index_multiplicative_for_coprime_levels(self, quotient_cache):
        two, three = ideal_from_generator(2), ideal_from_generator(3)
        six = ideal_mul(two, three)
        assert index_h(six) == quotient_cache(2).order * quotient_cache(3).order == 1200

    def test_index_g(self):
        assert index_g(ideal_from_generator(2)) == 10
        assert index_g(ideal_from_generator(4)) == 160

    def test_minus_i(self):
        assert minus_i_in_level(ideal_from_generator(2))
        assert not minus_i_in_level(ideal_from_generator(4))
        assert not minus_i_in_level(ideal_from_generator(3))

    def test_sl2_order_small(self):
        # |SL(2, F_4)| = 60, |SL(2, F_5)| = 120, |SL(2, F_9)| = 720
        assert sl2_order(ideal_from_generator(2)) == 60
        assert sl2_order(IdealHNF(1, 3, 5)) == 120
        assert sl2_order(ideal_from_generator(3)) == 720

    def test_sl2_order_rejects_unit_ideal(self):
        with pytest.raises(ValueError):
            sl2_order(IdealHNF(1, 0, 1))

    def test_surjectivity(self):
        assert is_surjective(ideal_from_generator(GoldenInt(3, 1)))  # norm 11
        assert not is_surjective(ideal_from_generator(2))
        assert not is_surjective(ideal_from_generator(3))


class TestCosetWords:
    def test_words_evaluate_back(self, quotient_cache):
        q = quotient_cache(2)
        for mat, word in coset_words(q):
            assert set(word) <= set("ST")
            assert ResMat.from_mat2(q.ring, eval_word(word)).key == mat.key

    def test_one_word_per_element(self, quotient_cache):
        q = quotient_cache(TAU)
        pairs = coset_words(q)
        assert len(pairs) == q.order
        assert len({m.key for m, _ in pairs}) == q.order

    def test_random_elements_hit_listed_words(self, quotient_cache):
        q = quotient_cache(3)
        rng = random.Random(9)
        for _ in range(50):
            m = ResMat.from_mat2(q.ring, eval_word(random_word(rng)))
            word = q.word_for(m.key)
            assert ResMat.from_mat2(q.ring, eval_word(word)).key == m.key


class TestSubgroups:
    def test_h0_h1_mod_eleven_prime(self, quotient_cache):
        q = quotient_cache(GoldenInt(3, 1))
        h0 = subgroup_from_predicate(q, "H0")
        h1 = subgroup_from_predicate(q, "H1")
        assert h0.index == 12
        assert h1.members <= h0.members
        assert not is_normal(h0)

    def test_unknown_predicate(self, quotient_cache):
        with pytest.raises(ValueError):
            subgroup_from_predicate(quotient_cache(2), "H2")

    def test_subgroup_generated_whole_group(self, quotient_cache):
        q = quotient_cache(2)
        s = ResMat.from_mat2(q.ring, S)
        t = ResMat.from_mat2(q.ring, T)
        sub = subgroup_generated(q, [s, t])
        assert sub.order == q.order

    def test_subgroup_generated_rejects_outsiders(self, quotient_cache):
        q = quotient_cache(2)
        bad = ResMat.from_mat2(q.ring, MINUS_IDENTITY * T)
        stray = ResMat(q.ring, tuple(x + 1 for x in bad.key))
        with pytest.raises(ValueError):
            subgroup_generated(q, [stray])

    def test_order_divides_group_order(self, quotient_cache):
        q = quotient_cache(TAU)
        rng = random.Random(4)
        for _ in range(10):
            gens = [q.resmat(rng.choice(q.elements)) for _ in range(2)]
            sub = subgroup_generated(q, gens)
            assert q.order % sub.order == 0


class TestPowerSubgroup:
    def test_first_powers_give_whole_group(self, quotient_cache):
        q = quotient_cache(2)
        assert power_subgroup(q, 1).order == q.order

    def test_fifth_powers_mod_two(self, quotient_cache):
        q = quotient_cache(2)
        assert power_subgroup(q, 5).index == 1

    def test_against_naive_closure_oracle(self, quotient_cache):
        q = quotient_cache(TAU)
        for k in (2, 3, 5):
            fast = power_subgroup(q, k)
            # oracle: repeatedly multiply the set of k-th powers until stable
            gens = {(q.resmat(key) ** k).key for key in q.elements}
            members = set(gens) | {q.elements[0]}
            changed = True
            while changed:
                changed = False
                for a in list(members):
                    for g in gens:
                        w = (q.resmat(a) * q.resmat(g)).key
                        if w not in members:
                            members.add(w)
                            changed = True
            assert fast.members == frozenset(members)
            assert is_normal(fast)

    def test_bad_exponent(self, quotient_cache):
        with pytest.raises(ValueError):
            power_subgroup(quotient_cache(2), 0)
