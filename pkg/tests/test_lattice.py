import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heis import core, lattice
from heis.errors import DimensionError, WordSyntaxError


def triple(k, l, m):
    if not isinstance(k, tuple):
        k, l = (k,), (l,)
    return lattice.LatticeElement(k, l, m)


def triples(n, bound=100):
    entry = st.integers(min_value=-bound, max_value=bound)
    vec = st.tuples(*([entry] * n))
    return st.builds(lattice.LatticeElement, vec, vec, entry)


class TestParse:
    def test_empty_is_identity(self):
        w = lattice.parse_word("", 1)
        assert w.tokens == ()
        assert lattice.evaluate_word(w) == lattice.LatticeElement.identity(1)

    def test_tokenization(self):
        w = lattice.parse_word("a1^2 b1 c^-1", 1)
        assert [(t.kind, t.index, t.exponent) for t in w.tokens] == [
            ("a", 1, 2),
            ("b", 1, 1),
            ("c", 0, -1),
        ]

    def test_index_out_of_range(self):
        with pytest.raises(WordSyntaxError):
            lattice.parse_word("b3", 2)

    def test_syntax_error_offset(self):
        with pytest.raises(WordSyntaxError) as exc:
            lattice.parse_word("a1 ?b2", 2)
        assert exc.value.offset == 3

    def test_indexed_c_rejected(self):
        with pytest.raises(WordSyntaxError):
            lattice.parse_word("c2", 2)

    def test_roundtrip_printing(self):
        text = "a1^2 b1 c^-1"
        assert str(lattice.parse_word(text, 1)) == text


class TestEvaluate:
    def test_normal_form_word(self):
        w = lattice.parse_word("a1^2 b1^3 c^5", 1)
        assert lattice.evaluate_word(w) == triple(2, 3, 5)

    def test_b_then_a_picks_up_center(self):
        assert lattice.evaluate_word(lattice.parse_word("b1 a1", 1)) == triple(1, 1, 1)

    def test_a_then_b_does_not(self):
        assert lattice.evaluate_word(lattice.parse_word("a1 b1", 1)) == triple(1, 1, 0)

    def test_noncommutativity_witness(self):
        ab = lattice.evaluate_word(lattice.parse_word("a1 b1", 1))
        ba = lattice.evaluate_word(lattice.parse_word("b1 a1", 1))
        assert ab != ba
        assert lattice.lmul(ab, lattice.gen_c(1)) == ba

    def test_big_exponents_use_python_ints(self):
        w = lattice.parse_word("a1^1000000000000 b1^1000000000000", 1)
        g = lattice.evaluate_word(w)
        assert lattice.lmul(g, g).m == 10**24


class TestNormalForm:
    def test_identity_empty(self):
        assert str(lattice.normal_form(lattice.LatticeElement.identity(1))) == ""

    def test_displayed_form(self):
        assert str(lattice.normal_form(triple(2, 3, 5))) == "a1^2 b1^3 c^5"

    def test_zero_exponents_omitted(self):
        g = lattice.LatticeElement((1, 0), (0, -2), 7)
        assert str(lattice.normal_form(g)) == "a1 b2^-2 c^7"
        assert lattice.evaluate_word(lattice.normal_form(g)) == g

    @given(triples(3))
    @settings(max_examples=300)
    def test_roundtrip(self, g):
        assert lattice.evaluate_word(lattice.normal_form(g)) == g

    def test_injective_on_distinct_triples(self):
        seen = {}
        for g in (triple(1, 2, 3), triple(1, 2, 4), triple(2, 1, 3), triple(0, 0, 0)):
            key = str(lattice.normal_form(g))
            assert key not in seen
            seen[key] = g


class TestNormalize:
    def test_swap_relation(self):
        assert str(lattice.normalize_word(lattice.parse_word("b1 a1", 1))) == "a1 b1 c"

    def test_cancellation(self):
        assert str(lattice.normalize_word(lattice.parse_word("a1 a1^-1", 1))) == ""

    def test_cross_index_already_normal(self):
        assert str(lattice.normalize_word(lattice.parse_word("a1 b2", 2))) == "a1 b2"

    def test_random_word_oracle(self):
        rng = random.Random(7)
        for _ in range(300):
            n = rng.randint(1, 3)
            tokens = []
            for _ in range(rng.randint(0, 50)):
                kind = rng.choice("abc")
                idx = 0 if kind == "c" else rng.randint(1, n)
                exp = rng.choice([e for e in range(-5, 6) if e != 0])
                tokens.append(lattice.GeneratorToken(kind, idx, exp))
            w = lattice.Word(n, tuple(tokens))
            nw = lattice.normalize_word(w)
            assert lattice.evaluate_word(nw) == lattice.evaluate_word(w)


class TestRelations:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_all_relations_hold(self, n):
        report = lattice.check_relations(n)
        assert report.ok
        assert report.counterexamples == ()

    def test_counts_cover_pairs(self):
        # n=2: 3 per-index relations x2, plus a/b commutations over all pairs
        report = lattice.check_relations(2)
        assert report.checked == 2 * 3 + 2 * (2 * 2) + 2

    def test_rejects_bad_dimension(self):
        with pytest.raises(DimensionError):
            lattice.check_relations(0)


class TestEmbed:
    @given(triples(2, bound=50), triples(2, bound=50))
    @settings(max_examples=200)
    def test_inclusion_homomorphism(self, g, h):
        lhs = lattice.embed(lattice.lmul(g, h))
        rhs = core.mul(lattice.embed(g), lattice.embed(h))
        assert lhs == rhs

    @given(triples(2, bound=50))
    @settings(max_examples=100)
    def test_inverse_consistent(self, g):
        assert lattice.embed(lattice.linverse(g)) == core.inverse(lattice.embed(g))
