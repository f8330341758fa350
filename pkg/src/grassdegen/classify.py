"""Canonical fingerprints of binomial initial ideals and their orbits under
the signed symmetric-group action on Pluecker variables.

A fingerprint is the sorted set of sign-normalized initial binomials of all
nonzero relations: each binomial is stored as (lead, trail, sign) where lead
is the order-smallest of its two degree-2 monomials, the lead coefficient is
normalized to +1 and sign is the trailing coefficient.  The simple
transposition s_i = (i, i+1) sends p_T to p_{s_i(T)} when T contains at most
one of i, i+1 and to -p_T when it contains both; signs multiply over the two
factors of each monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .initial_forms import initial_form
from .plucker import all_relations
from .sequences import IteratedSequence, Label, all_labels, representative_sequence
from .valuation import WeightingMatrix, weighting_matrix

Triple = tuple[int, int, int]
Monomial = tuple[Triple, Triple]
Binomial = tuple[Monomial, Monomial, int]
Fingerprint = tuple[Binomial, ...]


class NotFound(KeyError):
    """Label has no fingerprint in the classified set."""


def canonical_binomial(sign_a: int, mono_a: Monomial, sign_b: int, mono_b: Monomial) -> Binomial:
    """Normalize sign_a*mono_a + sign_b*mono_b to lead coefficient +1."""
    if mono_a <= mono_b:
        return (mono_a, mono_b, sign_a * sign_b)
    return (mono_b, mono_a, sign_a * sign_b)


@lru_cache(maxsize=8)
def _relations(n: int):
    return tuple(all_relations(n))


def fingerprint(seq: IteratedSequence, matrix: WeightingMatrix | None = None) -> Fingerprint:
    """Sorted canonical initial binomials of all nonzero relations."""
    if matrix is None:
        matrix = weighting_matrix(seq)
    gens = set()
    for relation in _relations(seq.n):
        form = initial_form(seq, matrix, relation)
        if not form.is_binomial:
            raise ValueError(f"non-binomial initial form for {seq.serialize()}")
        (ta, tb) = form.initial_terms
        gens.add(canonical_binomial(ta.sign, ta.monomial, tb.sign, tb.monomial))
    return tuple(sorted(gens))


def _map_triple(i: int, t: Triple) -> tuple[Triple, int]:
    if i in t and i + 1 in t:
        return t, -1
    image = tuple(sorted(i + 1 if x == i else i if x == i + 1 else x for x in t))
    return image, 1


def _map_monomial(i: int, m: Monomial) -> tuple[Monomial, int]:
    a, sa = _map_triple(i, m[0])
    b, sb = _map_triple(i, m[1])
    return ((a, b) if a <= b else (b, a)), sa * sb


def apply_transposition(i: int, fp: Fingerprint) -> Fingerprint:
    """Image of a fingerprint under the signed transposition (i, i+1)."""
    if i < 1:
        raise ValueError(f"transpositions are indexed from 1, got {i}")
    out = set()
    for lead, trail, sign in fp:
        lead_image, lead_sign = _map_monomial(i, lead)
        trail_image, trail_sign = _map_monomial(i, trail)
        out.add(canonical_binomial(lead_sign, lead_image, trail_sign * sign, trail_image))
    return tuple(sorted(out))


def apply_word(word, fp: Fingerprint) -> Fingerprint:
    """Apply a word in simple transpositions, rightmost letter first.

    General signed permutations are realized this way; the sign of a
    composite is whatever the letter-by-letter composition yields.
    """
    for i in reversed(tuple(word)):
        fp = apply_transposition(i, fp)
    return fp


def orbit_closure(fp: Fingerprint, n: int) -> set[Fingerprint]:
    """Full orbit of a fingerprint under the group generated by s_1..s_{n-1}."""
    seen = {fp}
    frontier = [fp]
    while frontier:
        fresh = []
        for current in frontier:
            for i in range(1, n):
                image = apply_transposition(i, current)
                if image not in seen:
                    seen.add(image)
                    fresh.append(image)
        frontier = fresh
    return seen


@dataclass(frozen=True)
class OrbitReport:
    orbit_id: int
    members: tuple[Fingerprint, ...]
    labels: tuple[Label, ...]
    intersection_size: int
    ambient_size: int
    escaped_count: int


def compute_orbits(
    fingerprints,
    n: int,
    labels_by_fingerprint: dict[Fingerprint, tuple[Label, ...]] | None = None,
) -> list[OrbitReport]:
    """Partition the input fingerprints into orbits of the signed action.

    Two inputs are equivalent when some group element maps one to the other,
    even if intermediate images leave the input set; ``escaped_count``
    records how many images do.  Orbits are ordered by (intersection size,
    smallest member) and numbered from 1.
    """
    input_set = set(fingerprints)
    raw = []
    unassigned = set(input_set)
    while unassigned:
        seed = min(unassigned)
        closure = orbit_closure(seed, n)
        members = tuple(sorted(input_set & closure))
        raw.append((members, len(closure)))
        unassigned -= set(members)
    raw.sort(key=lambda item: (len(item[0]), item[0][0]))
    reports = []
    for orbit_id, (members, ambient) in enumerate(raw, start=1):
        labels = []
        if labels_by_fingerprint is not None:
            for member in members:
                labels.extend(labels_by_fingerprint.get(member, ()))
        reports.append(
            OrbitReport(
                orbit_id=orbit_id,
                members=members,
                labels=tuple(sorted(labels)),
                intersection_size=len(members),
                ambient_size=ambient,
                escaped_count=ambient - len(members),
            )
        )
    return reports


def matches_o2(label: Label) -> bool:
    """Pattern (k, s1; s2, k): first top-level index equals last pair's second."""
    return len(label) == 2 and label[0][0] == label[1][1]


def matches_o3(label: Label) -> bool:
    """Pattern (s1, k; s2, k): both pairs share the same second index."""
    return len(label) == 2 and label[0][1] == label[1][1]


# Names of the isomorphism classes of the matching maximal tropical cones,
# attached as annotation only.
ORBIT_CLASS_NAMES = {"O1": "EEFF1", "O2": "EFFG", "O3": "EEFF2", "O4": "EEFG"}


def annotate_gr36_orbits(
    reports: list[OrbitReport],
    labels_by_fingerprint: dict[Fingerprint, tuple[Label, ...]],
) -> dict[int, str]:
    """Map orbit ids to the classes O1..O4 for Gr(3,6).

    O2 and O3 are identified by their label patterns; O1 is the remaining
    orbit meeting the input set in 48 ideals, O4 is the rest.
    """
    names: dict[int, str] = {}
    for report in reports:
        labels = [lab for member in report.members for lab in labels_by_fingerprint.get(member, ())]
        if labels and all(matches_o2(lab) for lab in labels):
            names[report.orbit_id] = "O2"
        elif labels and all(matches_o3(lab) for lab in labels):
            names[report.orbit_id] = "O3"
    for report in reports:
        if report.orbit_id in names:
            continue
        names[report.orbit_id] = "O1" if report.intersection_size == 48 else "O4"
    return names


@dataclass(frozen=True)
class Gr36Classification:
    reports: tuple[OrbitReport, ...]
    fingerprint_of_label: dict[Label, Fingerprint]
    orbit_of_fingerprint: dict[Fingerprint, int]
    orbit_names: dict[int, str]


@lru_cache(maxsize=1)
def classify_gr36() -> Gr36Classification:
    """Orbit classification of the 240 initial ideals of Gr(3,6).

    Fingerprints are computed from one representative sequence per label;
    constancy on label fibers is covered by the test suite.
    """
    fingerprint_of_label = {
        lab: fingerprint(representative_sequence(lab, 6)) for lab in all_labels(6)
    }
    labels_by_fingerprint: dict[Fingerprint, tuple[Label, ...]] = {}
    for lab, fp in fingerprint_of_label.items():
        labels_by_fingerprint[fp] = labels_by_fingerprint.get(fp, ()) + (lab,)
    reports = compute_orbits(labels_by_fingerprint, 6, labels_by_fingerprint)
    orbit_of_fingerprint = {
        member: report.orbit_id for report in reports for member in report.members
    }
    names = annotate_gr36_orbits(reports, labels_by_fingerprint)
    return Gr36Classification(
        tuple(reports), fingerprint_of_label, orbit_of_fingerprint, names
    )


def label_orbit_membership(label: Label) -> int:
    """Orbit id of the initial ideal with the given Gr(3,6) label."""
    classification = classify_gr36()
    fp = classification.fingerprint_of_label.get(tuple(tuple(p) for p in label))
    if fp is None:
        raise NotFound(f"no Gr(3,6) ideal with label {label}")
    return classification.orbit_of_fingerprint[fp]
