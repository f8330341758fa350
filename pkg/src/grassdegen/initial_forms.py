"""Initial forms of Pluecker relations under a weighting matrix.

Each term p_A * p_B of a relation is valued by row(A) + row(B).  All terms
of one relation share the same height-weighted total, so the minimum in the
height-weighted reverse lexicographic order is attained exactly at the
lexicographically largest valuation vectors; those terms form the initial
form.  Every non-initial term contributes the strict inequality
e . (v(term) - v(initial)) > 0 that an order-preserving projection e has to
satisfy.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

from .plucker import PluckerRelation, SignedTerm, all_relations
from .sequences import IteratedSequence
from .valuation import DimensionError, Vector, WeightingMatrix, height_weight

LESS, EQUAL, GREATER = -1, 0, 1


def order_compare(seq: IteratedSequence, a: Vector, b: Vector) -> int:
    """Compare in the height-weighted reverse lexicographic order.

    a precedes b iff its height-weighted total is smaller, or the totals tie
    and a is lexicographically larger.  Returns LESS, EQUAL or GREATER.
    """
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} vs {len(b)}")
    wa, wb = height_weight(seq, a), height_weight(seq, b)
    if wa != wb:
        return LESS if wa < wb else GREATER
    if a == b:
        return EQUAL
    return LESS if a > b else GREATER


@dataclass(frozen=True)
class TermValuation:
    term: SignedTerm
    vector: Vector
    weight: int


@dataclass(frozen=True)
class InitialForm:
    relation: PluckerRelation
    term_valuations: tuple[TermValuation, ...]
    initial_terms: tuple[SignedTerm, ...]
    is_binomial: bool


def term_vector(matrix: WeightingMatrix, term: SignedTerm) -> Vector:
    a, b = term.factors
    ra, rb = matrix.row(a.entries), matrix.row(b.entries)
    return tuple(x + y for x, y in zip(ra, rb))


def initial_form(seq: IteratedSequence, matrix: WeightingMatrix, relation: PluckerRelation) -> InitialForm:
    """Terms of the relation attaining the lex-max valuation vector."""
    valued = []
    for t in relation.terms:
        v = term_vector(matrix, t)
        valued.append(TermValuation(t, v, height_weight(seq, v)))
    valued = tuple(valued)
    best = max(tv.vector for tv in valued)
    initial = tuple(tv.term for tv in valued if tv.vector == best)
    return InitialForm(relation, valued, initial, len(initial) == 2)


def reduce_content(d: Vector) -> Vector:
    g = math.gcd(*d)
    return d if g in (0, 1) else tuple(x // g for x in d)


def inequality_set(
    seq: IteratedSequence,
    matrix: WeightingMatrix,
    relations: list[PluckerRelation] | None = None,
) -> tuple[Vector, ...]:
    """Deduplicated difference vectors v(non-initial) - v(initial).

    Vectors are reduced by the gcd of their entries and returned sorted; the
    leading nonzero entry of each is negative because the initial vector is
    the lex-max.
    """
    if relations is None:
        relations = all_relations(seq.n)
    diffs = set()
    for relation in relations:
        vectors = [term_vector(matrix, t) for t in relation.terms]
        best = max(vectors)
        for v in vectors:
            if v != best:
                diffs.add(reduce_content(tuple(x - y for x, y in zip(v, best))))
    return tuple(sorted(diffs))


def inequalities_to_csv(diffs) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for d in diffs:
        writer.writerow(d)
    return buf.getvalue()


def inequalities_from_csv(text: str) -> tuple[Vector, ...]:
    out = []
    for record in csv.reader(io.StringIO(text)):
        if record:
            out.append(tuple(int(x) for x in record))
    return tuple(out)
