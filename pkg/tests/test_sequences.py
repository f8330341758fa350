import itertools

import pytest
from hypothesis import given, strategies as st

from grassdegen.plucker import InvalidSize
from grassdegen.sequences import (
    IteratedSequence,
    all_labels,
    count_labels,
    enumerate_sequences,
    fiber_size,
    format_label,
    label_of,
    parse_label,
    representative_sequence,
    sequence_count,
    standard_sequence,
    validate_label,
)


@pytest.mark.parametrize("n,count", [(4, 6), (5, 144), (6, 8640)])
def test_enumeration_counts(n, count):
    assert sum(1 for _ in enumerate_sequences(n)) == count
    assert sequence_count(n) == count


def test_counts_match_closed_form_up_to_8():
    for n in range(4, 9):
        expected = 1
        for l in range(n - 3):
            expected *= (n - l - 1) * (n - l - 2) * (n - l - 3)
        assert sequence_count(n) == expected


def test_enumeration_count_n7():
    assert sum(1 for _ in enumerate_sequences(7)) == sequence_count(7) == 1036800


def test_enumeration_is_unique_and_lexicographic():
    seen = list(enumerate_sequences(5))
    assert len(set(s.serialize() for s in seen)) == len(seen)
    keys = [s.triples for s in seen]
    assert keys == sorted(keys)


def test_rejects_small_n():
    with pytest.raises(InvalidSize):
        list(enumerate_sequences(3))
    with pytest.raises(InvalidSize):
        count_labels(4)


def test_invalid_sequences_rejected():
    with pytest.raises(ValueError):
        IteratedSequence(6, ((1, 2, 5),), (1, 2, 3))  # missing a level
    with pytest.raises(ValueError):
        IteratedSequence(6, ((1, 2, 7), (1, 2, 3)), (1, 2, 3))  # out of range
    with pytest.raises(ValueError):
        IteratedSequence(6, ((1, 2, 2), (1, 2, 3)), (1, 2, 3))  # repeated entry
    with pytest.raises(ValueError):
        IteratedSequence(6, ((1, 2, 3), (1, 2, 3)), (1, 2, 4))  # non-PBW base


def test_label_projection():
    seq = IteratedSequence(6, ((1, 2, 3), (3, 4, 1)), (2, 1, 3))
    assert label_of(seq) == ((1, 2), (3, 4))
    # third indices and base permutation do not enter the label
    other = IteratedSequence(6, ((1, 2, 4), (3, 4, 2)), (3, 1, 2))
    assert label_of(other) == label_of(seq)


@pytest.mark.parametrize("n,count", [(5, 12), (6, 240), (7, 7200)])
def test_label_counts(n, count):
    # product over levels of (n-l-1)(n-l-2), checked against enumeration
    assert count_labels(n) == count
    assert sum(1 for _ in all_labels(n)) == count


@pytest.mark.parametrize("n", [5, 6])
def test_labels_surjective_with_uniform_fibers(n):
    fibers = {}
    for seq in enumerate_sequences(n):
        fibers.setdefault(label_of(seq), 0)
        fibers[label_of(seq)] += 1
    assert len(fibers) == count_labels(n)
    assert set(fibers.values()) == {fiber_size(n)}


def test_serialization_example():
    seq = IteratedSequence(6, ((1, 2, 3), (3, 4, 1)), (2, 1, 3))
    assert seq.serialize() == "6:[1,2,3|3,4,1|2,1,3]"
    assert IteratedSequence.parse("6:[1,2,3|3,4,1|2,1,3]") == seq


@given(st.integers(4, 7), st.randoms(use_true_random=False))
def test_serialization_roundtrip(n, rng):
    levels = []
    for t in range(n - 4):
        levels.append(tuple(rng.sample(range(1, n - t), 3)))
    base = tuple(rng.sample((1, 2, 3), 3))
    seq = IteratedSequence(n, tuple(levels), base)
    assert IteratedSequence.parse(seq.serialize()) == seq


def test_parse_rejects_garbage():
    for bad in ["", "6:[1,2,3]", "6:1,2,3|1,2,3|1,2,3", "x:[1,2,3]"]:
        with pytest.raises(ValueError):
            IteratedSequence.parse(bad)


def test_label_formatting_roundtrip():
    label = ((1, 3), (2, 1))
    assert format_label(label) == "(1,3;2,1)"
    assert parse_label("(1,3;2,1)") == label
    validate_label(label, 6)
    with pytest.raises(ValueError):
        validate_label(((9, 9), (9, 9)), 6)
    with pytest.raises(ValueError):
        parse_label("1,3;2,1")


def test_representative_sequence_has_its_label():
    for label in itertools.islice(all_labels(6), 40):
        assert label_of(representative_sequence(label, 6)) == label


def test_standard_sequence():
    assert standard_sequence(6).serialize() == "6:[1,2,3|1,2,3|1,2,3]"
