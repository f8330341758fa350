import random

import pytest

from grassdegen.initial_forms import (
    EQUAL,
    GREATER,
    LESS,
    inequalities_from_csv,
    inequalities_to_csv,
    inequality_set,
    initial_form,
    order_compare,
    reduce_content,
)
from grassdegen.plucker import MultiIndex, all_relations, plucker_relation
from grassdegen.sequences import IteratedSequence, enumerate_sequences, standard_sequence
from grassdegen.valuation import DimensionError, height_weight, weighting_matrix


def test_order_compare_examples():
    S = standard_sequence(6)
    a = (1, 0, 0, 0, 1, 0, 0, 0, 1)
    assert order_compare(S, a, a) == EQUAL
    # heights 5 versus 1: the second vector has the smaller weighted total
    assert order_compare(S, (1, 0, 0, 0, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 0, 0, 0, 1)) == GREATER
    # equal totals, first is lex-larger, hence earlier in the order
    b = (1, 0, 0, 0, 0, 1, 0, 1, 0)
    assert height_weight(S, a) == height_weight(S, b) == 9
    assert order_compare(S, a, b) == LESS
    with pytest.raises(DimensionError):
        order_compare(S, (1, 0), (0, 1))


def test_order_compare_is_a_total_order():
    S = standard_sequence(6)
    rng = random.Random(7)
    vectors = [tuple(rng.randrange(3) for _ in range(9)) for _ in range(25)]
    for a in vectors:
        for b in vectors:
            ab, ba = order_compare(S, a, b), order_compare(S, b, a)
            assert ab == -ba
            assert (ab == EQUAL) == (a == b)
    # antisymmetry + transitivity via sort consistency
    import functools

    ordered = sorted(vectors, key=functools.cmp_to_key(lambda x, y: order_compare(S, x, y)))
    for x, y in zip(ordered, ordered[1:]):
        assert order_compare(S, x, y) in (LESS, EQUAL)


def test_worked_initial_form():
    S = standard_sequence(6)
    M = weighting_matrix(S)
    R = plucker_relation(MultiIndex((1, 2), 6), MultiIndex((3, 4, 5, 6), 6))
    form = initial_form(S, M, R)
    assert form.is_binomial
    assert {(t.sign, t.monomial) for t in form.initial_terms} == {
        (-1, ((1, 2, 3), (4, 5, 6))),
        (1, ((1, 2, 4), (3, 5, 6))),
    }
    assert all(tv.vector == (1, 0, 0, 0, 1, 0, 0, 0, 1) for tv in form.term_valuations[:2])


def test_initial_form_weight_is_constant_within_a_relation():
    S = standard_sequence(6)
    M = weighting_matrix(S)
    for R in all_relations(6):
        form = initial_form(S, M, R)
        weights = {tv.weight for tv in form.term_valuations}
        assert weights == {sum(R.I) + sum(R.J) - 12}


def test_min_order_equals_lex_max_on_every_relation():
    """The two routes to the initial terms coincide: full order comparison
    versus the lexicographic shortcut."""
    S = IteratedSequence(6, ((3, 1, 4), (2, 3, 1)), (3, 2, 1))
    M = weighting_matrix(S)
    for R in all_relations(6):
        form = initial_form(S, M, R)
        vectors = [tv.vector for tv in form.term_valuations]
        minimal = [
            v
            for v in vectors
            if all(order_compare(S, v, u) in (LESS, EQUAL) for u in vectors)
        ]
        assert set(minimal) == {max(vectors)}


@pytest.mark.parametrize("n", [5])
def test_binomiality_exhaustive_small(n):
    relations = all_relations(n)
    for seq in enumerate_sequences(n):
        M = weighting_matrix(seq)
        for R in relations:
            assert initial_form(seq, M, R).is_binomial


def test_binomiality_sampled_n8():
    relations = all_relations(8)
    assert len(relations) == 1540
    rng = random.Random(5)
    for _ in range(20):
        levels = tuple(tuple(rng.sample(range(1, 8 - t), 3)) for t in range(4))
        seq = IteratedSequence(8, levels, tuple(rng.sample((1, 2, 3), 3)))
        M = weighting_matrix(seq)
        for R in relations:
            assert initial_form(seq, M, R).is_binomial


def test_inequality_set_worked_example():
    S = standard_sequence(6)
    M = weighting_matrix(S)
    R = plucker_relation(MultiIndex((1, 2), 6), MultiIndex((3, 4, 5, 6), 6))
    diffs = inequality_set(S, M, [R])
    assert set(diffs) == {
        (0, 0, 0, 0, -1, 1, 0, 1, -1),
        (-1, 0, 1, 1, -1, 0, 0, 1, -1),
    }


def test_inequality_vectors_have_negative_leading_entry():
    S = standard_sequence(6)
    diffs = inequality_set(S, weighting_matrix(S))
    assert diffs
    assert len(diffs) <= 2 * 135
    for d in diffs:
        lead = next(x for x in d if x)
        assert lead < 0


def test_reduce_content():
    assert reduce_content((2, -4, 6)) == (1, -2, 3)
    assert reduce_content((0, 3, 0)) == (0, 1, 0)
    assert reduce_content((1, -1, 0)) == (1, -1, 0)


def test_inequality_csv_roundtrip():
    S = standard_sequence(6)
    diffs = inequality_set(S, weighting_matrix(S))
    text = inequalities_to_csv(diffs)
    assert inequalities_from_csv(text) == diffs
