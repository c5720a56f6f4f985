from fractions import Fraction

import pytest

from echarr.atomic_complex import AtomicComplex
from echarr.bicomplex import BicomplexConfig, WordBicomplex, word_dMu, word_dW
from echarr.corpus import disjoint_pair, ex28, ex28_2, mcs7, single_color, smalldude
from echarr.errors import ResourceLimitError


@pytest.fixture(scope="module")
def sphere_bc():
    return WordBicomplex(AtomicComplex(single_color(2)), BicomplexConfig(max_total_degree=8))


@pytest.fixture(scope="module")
def pair_bc():
    return WordBicomplex(AtomicComplex(disjoint_pair()), BicomplexConfig(max_total_degree=8))


class TestEnumeration:
    def test_square_zero_letter_words(self, sphere_bc):
        # one letter of degree 3: words a, a|a, a|a|a, ... within the window
        assert {k: len(v) for k, v in sphere_bc.words_by_bidegree.items()} == {
            (1, 3): 1,
            (2, 6): 1,
            (3, 9): 1,
            (4, 12): 1,
        }

    def test_total_degree_bookkeeping(self, pair_bc):
        for (n, q), words in pair_bc.words_by_bidegree.items():
            for w in words:
                q_check = sum(pair_bc.cx.degree[m] for m in w)
                assert q_check == q and len(w) == n
            assert pair_bc.total_degree((n, q)) == q - n + 1

    def test_budget_guard(self):
        with pytest.raises(ResourceLimitError):
            WordBicomplex(
                AtomicComplex(mcs7()),
                BicomplexConfig(max_total_degree=8, max_words=10),
            )

    def test_degree_one_flag(self):
        bc = WordBicomplex(
            AtomicComplex(ex28()), BicomplexConfig(max_total_degree=3, max_weight=3)
        )
        assert bc.has_degree_one_letters
        assert not WordBicomplex(
            AtomicComplex(disjoint_pair()), BicomplexConfig(max_total_degree=4)
        ).has_degree_one_letters


class TestShuffleQuotient:
    def test_odd_letter_square_killed(self, sphere_bc):
        # a|a for |a| = 3 dies: the shuffle a sh a = 2 a|a spans it
        assert sphere_bc.quotients[(2, 6)].dim == 0
        assert sphere_bc.quotients[(3, 9)].dim == 0

    def test_two_distinct_odd_letters_rank_one(self, pair_bc):
        assert pair_bc.quotients[(2, 6)].dim == 1

    def test_mixed_weight2(self, pair_bc):
        # a_i | a_union for letter degrees (3, 6): two classes survive
        assert pair_bc.quotients[(2, 9)].dim == 2


class TestDifferentials:
    def test_two_letter_merge_sign(self, pair_bc):
        cx = pair_bc.cx
        a, b = cx.mask_of(["A"]), cx.mask_of(["B"])
        out = word_dMu(cx, {(a, b): Fraction(1)})
        expected_sign, union = cx.product_masks(a, b)
        assert out == {(union,): Fraction((-1) ** cx.degree[a] * expected_sign)}

    def test_square_zero_letter_merge(self, sphere_bc):
        cx = sphere_bc.cx
        a = cx.mask_of(["A"])
        assert word_dMu(cx, {(a, a): Fraction(1)}) == {}

    def test_letterwise_differential(self):
        cx = AtomicComplex(mcs7())
        x = cx.mask_of(["L1", "L2", "L4"])
        a3 = cx.mask_of(["L3"])
        out = word_dW(cx, {(x, a3): Fraction(1)})
        a12 = cx.mask_of(["L1", "L2"])
        assert out == {(a12, a3): Fraction(-1)}
        # second slot picks up the desuspended prefix sign (-1)^{|x|-1}
        out2 = word_dW(cx, {(a3, x): Fraction(1)})
        assert out2 == {(a3, a12): Fraction(-1)}

    def test_identities_on_larger_instances(self):
        # ex28_2 and smalldude have nonzero d_W; build - which self-validates
        for h in (ex28_2(), smalldude()):
            WordBicomplex(
                AtomicComplex(h), BicomplexConfig(max_total_degree=6, max_weight=5)
            )

    def test_mcs7_window(self):
        WordBicomplex(AtomicComplex(mcs7()), BicomplexConfig(max_total_degree=7))


class TestProjectionWellDefined:
    def test_relation_images_die(self, pair_bc):
        cx = pair_bc.cx
        a, b = cx.mask_of(["A"]), cx.mask_of(["B"])
        rel = pair_bc.shuffle((a,), (b,))
        assert pair_bc.project(rel, (2, 6)) == {}
        image = pair_bc.word_dMu(rel)
        assert pair_bc.project(image, (1, 6)) == {}


class TestRandomInstances:
    def test_sign_identities_fuzz(self):
        # small windows over random hypergraphs; the build raises on any
        # failed identity
        import random

        from echarr.corpus import random_hypergraph

        rng = random.Random(99)
        built = 0
        for _ in range(12):
            h = random_hypergraph(rng, max_vertices=5, max_colors=3)
            if not h.colors:
                continue
            bc = WordBicomplex(
                AtomicComplex(h),
                BicomplexConfig(max_total_degree=4, max_weight=3, max_words=20_000),
            )
            assert bc.quotients is not None
            built += 1
        assert built >= 8
