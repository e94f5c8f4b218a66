import itertools
import random
from fractions import Fraction

import pytest

from finitary.linalg import mat_vec
from finitary.representation import (
    compile_hmm,
    compile_model,
    compile_qrw,
)
from finitary.models import pfa_to_hmm

import generators as g
from conftest import corpus_names, load_corpus_model

F = Fraction


def corpus_lr(name):
    return compile_model(load_corpus_model(name))


class TestHmmCompilation:
    def test_coin_word_probabilities(self):
        # fair coin, i.i.d.: every length-t word has probability 2^-t
        lr = corpus_lr("coin.hmm")
        assert lr.prob(()) == 1
        assert lr.prob((0,)) == F(1, 2)
        assert lr.prob((0, 1)) == F(1, 4)
        assert lr.prob((1, 1, 0)) == F(1, 8)

    def test_step_matrix_entries(self):
        # T_a[i][j] = emission[i][a] * transition[i][j]
        hmm = load_corpus_model("distinct_2state.hmm")
        lr = compile_hmm(hmm)
        n = hmm.num_states
        for a in range(2):
            for i in range(n):
                for j in range(n):
                    assert lr.matrices[a][i][j] == \
                        hmm.emission[i][a] * hmm.transition[i][j]

    def test_fin_is_all_ones(self):
        lr = corpus_lr("padded_3state.hmm")
        assert all(x == 1 for x in lr.fin)


class TestQrwCompilation:
    def test_dimension_is_k_squared(self):
        assert corpus_lr("swap.qrw").dimension == 4
        assert corpus_lr("trivial_vertex_k3.qrw").dimension == 9

    def test_swap_walk_alternates(self):
        # U swaps the two coordinates, psi0 sits on the a-coordinate, so
        # the observed sequence is deterministic: b, a, b, a, ...
        lr = corpus_lr("swap.qrw")
        assert lr.prob((1,)) == 1
        assert lr.prob((0,)) == 0
        assert lr.prob((1, 0)) == 1
        assert lr.prob((1, 0, 1)) == 1
        assert lr.prob((1, 1)) == 0

    def test_identity_walk_is_constant(self):
        lr = corpus_lr("identity.qrw")
        for t in range(5):
            assert lr.prob((0,) * t) == 1

    def test_hadamard_is_a_float_fair_coin(self):
        lr = corpus_lr("hadamard.qrw")
        for word in [(0,), (1,)]:
            assert lr.prob(word) == pytest.approx(0.5, abs=1e-12)
        for word in itertools.product(range(2), repeat=2):
            assert lr.prob(word) == pytest.approx(0.25, abs=1e-12)

    def test_level_sums_are_exactly_one(self):
        # collapse probabilities over all coordinates sum to 1, so every
        # level of the word tree carries total mass 1, with no rounding
        # in exact mode
        for name in ("swap.qrw", "trivial_vertex_k3.qrw"):
            lr = corpus_lr(name)
            ns = len(lr.alphabet.symbols)
            for t in range(4):
                total = sum(lr.prob(w)
                            for w in itertools.product(range(ns), repeat=t))
                assert total == 1, (name, t)

    def test_random_qrw_probabilities_are_rational_and_normalized(self):
        rng = random.Random(20)
        for _ in range(5):
            qrw = g.random_qrw(rng, rng.choice((2, 3)), 2)
            lr = compile_qrw(qrw)
            for t in range(3):
                total = F(0)
                for w in itertools.product(range(2), repeat=t):
                    p = lr.prob(w)
                    assert isinstance(p, (Fraction, int))
                    assert 0 <= p <= 1
                    total += p
                assert total == 1


@pytest.fixture(scope="module")
def lr():
    return compile_model(g.random_hmm(random.Random(5), 3, 2))


class TestVectorAlgebra:
    def test_forward_matches_prob(self, lr):
        for t in range(4):
            for w in itertools.product(range(2), repeat=t):
                fv = lr.forward(w)
                assert fv.word == w
                assert lr.prob_bilinear(fv, None, lr.backward(())) == lr.prob(w)

    def test_backward_reverses_word_order(self, lr):
        bv = lr.backward((0, 1))
        assert bv.word == (0, 1)
        # suffix product: T_a (T_b fin), built right to left
        by_hand = mat_vec(lr.matrices[0], mat_vec(lr.matrices[1], lr.fin))
        assert bv.coords == by_hand

    def test_bilinear_split_invariance(self, lr):
        word = (0, 1, 1, 0, 1)
        p = lr.prob(word)
        for cut in range(len(word) + 1):
            fv = lr.forward(word[:cut])
            bv = lr.backward(word[cut:])
            assert lr.prob_bilinear(fv, None, bv) == p
        for cut in range(len(word)):
            fv = lr.forward(word[:cut])
            bv = lr.backward(word[cut + 1:])
            assert lr.prob_bilinear(fv, word[cut], bv) == p

    def test_extend_forward_appends(self, lr):
        fv = lr.forward((1,))
        assert lr.extend_forward(fv, 0).word == (1, 0)

    def test_symbol_out_of_range(self, lr):
        with pytest.raises(ValueError, match="out of range"):
            lr.prob((7,))

    def test_vector_length_checked(self, lr):
        from finitary.representation import ForwardVector
        with pytest.raises(ValueError, match="does not match"):
            lr.extend_forward(ForwardVector((), (F(1),)), 0)


class TestCompileDispatch:
    def test_pfa_goes_through_stop_reduction(self):
        pfa = load_corpus_model("half_stop.pfa")
        direct = compile_hmm(pfa_to_hmm(pfa))
        dispatched = compile_model(pfa)
        assert dispatched == direct

    def test_conservation_for_all_corpus_models(self):
        # sum of the one-step extensions of any word returns its own
        # probability; (sum_a T_a) fin == fin is the vector form
        for name in corpus_names():
            lr = corpus_lr(name)
            ns = len(lr.alphabet.symbols)
            summed = lr.fin
            total = [0] * lr.dimension
            for a in range(ns):
                img = mat_vec(lr.matrices[a], lr.fin)
                total = [x + y for x, y in zip(total, img)]
            if lr.mode == "exact":
                assert tuple(total) == tuple(summed), name
            else:
                assert all(abs(x - y) < 1e-12
                           for x, y in zip(total, summed)), name

    def test_rejects_non_model(self):
        with pytest.raises(TypeError):
            compile_model(object())
