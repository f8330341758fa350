"""Iterated birational sequences for Gr(3,n).

A sequence is built from a PBW base for Gr(3,4) by prepending, for each new
top index r = n, n-1, ..., 5, an ordered triple of pairwise-distinct indices
in [r-1] (the roots used to pass from Gr(3,r-1) to Gr(3,r)).  Positions are
numbered top-down: triad t covers positions 3t+1 .. 3t+3 and belongs to top
index n - t; the last triad is the PBW base, recorded as a permutation of
(1, 2, 3).
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterator

from .plucker import InvalidSize

Triple = tuple[int, int, int]
Label = tuple[tuple[int, int], ...]

_SERIAL_RE = re.compile(r"^(\d+):\[([0-9,|]+)\]$")


def _check_triple(t, bound, what):
    if len(t) != 3 or len(set(t)) != 3:
        raise ValueError(f"{what} {t} must have 3 pairwise-distinct entries")
    if any(not (1 <= x <= bound) for x in t):
        raise ValueError(f"{what} {t} has entries outside 1..{bound}")


@dataclass(frozen=True, slots=True)
class IteratedSequence:
    """Levels t = 0..n-5 (triples in [n-t-1]) plus the base PBW permutation."""

    n: int
    levels: tuple[Triple, ...]
    base_perm: Triple

    def __post_init__(self):
        if self.n < 4:
            raise InvalidSize(f"need n >= 4, got {self.n}")
        if len(self.levels) != self.n - 4:
            raise ValueError(f"expected {self.n - 4} levels, got {len(self.levels)}")
        for t, triple in enumerate(self.levels):
            _check_triple(triple, self.n - t - 1, f"level-{t} triple")
        _check_triple(self.base_perm, 3, "base permutation")

    @property
    def triples(self) -> tuple[Triple, ...]:
        """All n-3 triads top-down, the base permutation last."""
        return self.levels + (self.base_perm,)

    def serialize(self) -> str:
        body = "|".join(",".join(str(x) for x in t) for t in self.triples)
        return f"{self.n}:[{body}]"

    @classmethod
    def parse(cls, text: str) -> "IteratedSequence":
        m = _SERIAL_RE.match(text.strip())
        if m is None:
            raise ValueError(f"cannot parse sequence {text!r}")
        n = int(m.group(1))
        parts = m.group(2).split("|")
        if len(parts) != max(n - 3, 1):
            raise ValueError(f"expected {n - 3} triads in {text!r}")
        triples = tuple(tuple(int(x) for x in p.split(",")) for p in parts)
        return cls(n, triples[:-1], triples[-1])

    def __str__(self):
        return self.serialize()


def standard_sequence(n: int) -> IteratedSequence:
    """All level triples (1,2,3) and the identity base permutation."""
    return IteratedSequence(n, ((1, 2, 3),) * (n - 4), (1, 2, 3))


def sequence_count(n: int) -> int:
    """Closed form for the number of iterated sequences."""
    if n < 4:
        raise InvalidSize(f"need n >= 4, got {n}")
    return math.prod((n - l - 1) * (n - l - 2) * (n - l - 3) for l in range(n - 3))


def enumerate_sequences(n: int) -> Iterator[IteratedSequence]:
    """Yield every iterated sequence exactly once, in lexicographic order.

    Order: level-0 triple, then level-1 triple, ..., then the base
    permutation, each running through ordered triples lexicographically.
    """
    if n < 4:
        raise InvalidSize(f"need n >= 4, got {n}")
    pools = [list(itertools.permutations(range(1, n - t), 3)) for t in range(n - 4)]
    pools.append(list(itertools.permutations((1, 2, 3))))
    for combo in itertools.product(*pools):
        yield IteratedSequence(n, combo[:-1], combo[-1])


def label_of(seq: IteratedSequence) -> Label:
    """First two indices of each non-base level.

    The dropped data (third indices and the base permutation) does not
    change the induced initial forms, so labels index initial ideals.
    """
    return tuple(t[:2] for t in seq.levels)


def count_labels(n: int) -> int:
    """Number of distinct labels: prod over levels of (n-l-1)(n-l-2)."""
    if n < 5:
        raise InvalidSize(f"need n >= 5, got {n}")
    return math.prod((n - l - 1) * (n - l - 2) for l in range(n - 4))


def all_labels(n: int) -> Iterator[Label]:
    """Every label in lexicographic order (level-0 pair most significant)."""
    if n < 4:
        raise InvalidSize(f"need n >= 4, got {n}")
    pools = [list(itertools.permutations(range(1, n - t), 2)) for t in range(n - 4)]
    for combo in itertools.product(*pools):
        yield tuple(combo)


def fiber_size(n: int) -> int:
    """Number of sequences sharing one label: 6 * prod (n-l-3)."""
    if n < 5:
        raise InvalidSize(f"need n >= 5, got {n}")
    return 6 * math.prod(n - l - 3 for l in range(n - 4))


def representative_sequence(label: Label, n: int) -> IteratedSequence:
    """Deterministic sequence with the given label: smallest free third
    index at each level, identity base."""
    levels = []
    for t, (a, b) in enumerate(label):
        third = min(x for x in range(1, n - t) if x not in (a, b))
        levels.append((a, b, third))
    return IteratedSequence(n, tuple(levels), (1, 2, 3))


def format_label(label: Label) -> str:
    return "(" + ";".join(f"{a},{b}" for a, b in label) + ")"


def parse_label(text: str) -> Label:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"cannot parse label {text!r}")
    pairs = []
    for part in body[1:-1].split(";"):
        fields = part.split(",")
        if len(fields) != 2:
            raise ValueError(f"cannot parse label {text!r}")
        pairs.append((int(fields[0]), int(fields[1])))
    return tuple(pairs)


def validate_label(label: Label, n: int) -> None:
    """Raise ValueError unless the label is realized by some sequence."""
    if len(label) != n - 4:
        raise ValueError(f"label {format_label(label)} has {len(label)} levels, expected {n - 4}")
    for t, (a, b) in enumerate(label):
        if a == b or not all(1 <= x <= n - t - 1 for x in (a, b)):
            raise ValueError(
                f"label pair ({a},{b}) invalid at level {t}: need distinct entries in 1..{n - t - 1}"
            )
