"""End-to-end driver: valuations -> initial forms -> cone -> classification
-> toricity evidence, fanned out over sequences with a deterministic merge.

The per-sequence sweep uses a compiled relation table (term signs plus row
indices into the weighting matrix) so the inner loop stays allocation-light;
results are merged in enumeration order, fingerprints are renumbered in
canonical sorted order, and all emitted files are byte-stable across runs.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from dataclasses import dataclass
from multiprocessing import Pool

from . import __version__
from .classify import (
    Fingerprint,
    annotate_gr36_orbits,
    canonical_binomial,
    compute_orbits,
    ORBIT_CLASS_NAMES,
    OrbitReport,
)
from .cone import DEFAULT_BOX_BOUND, strict_interior_point
from .exactlinalg import exact_rank
from .initial_forms import reduce_content
from .plucker import all_relations, all_triples
from .sequences import (
    IteratedSequence,
    Label,
    enumerate_sequences,
    format_label,
    label_of,
)
from .toricity import binomial_form, graded_rank, lattice_saturation, relation_form
from .valuation import compute_valuation, weighting_matrix

DEFAULT_JOBS_ENV = "GRASS_DEGEN_JOBS"


@dataclass(frozen=True)
class SequenceOutcome:
    serialized: str
    label: Label
    fingerprint_id: int
    all_binomial: bool
    matrix_rank: int
    projection: tuple[int, ...]
    projection_sound: bool
    scalar_matches: bool


@dataclass(frozen=True)
class VerificationRecord:
    fingerprint_id: int
    rank2: int
    rank3: int
    snf_ok: bool
    pure_difference: bool


@dataclass
class PipelineResult:
    n: int
    outcomes: list[SequenceOutcome]
    fingerprints: list[Fingerprint]
    labels_of_fingerprint: dict[int, tuple[Label, ...]]
    label_weights: dict[Label, tuple[str, tuple[int, ...], tuple[int, ...]]]
    orbit_reports: list[OrbitReport]
    orbit_names: dict[int, str]
    plucker_ranks: tuple[int, int] | None
    verification: list[VerificationRecord]
    timings: dict[str, float]

    def orbit_sizes(self) -> list[int]:
        return sorted(r.intersection_size for r in self.orbit_reports)

    def summary(self) -> str:
        sizes = ",".join(str(s) for s in self.orbit_sizes())
        return (
            f"sequences={len(self.outcomes)} ideals={len(self.fingerprints)} "
            f"orbits=[{sizes}]"
        )


def resolve_jobs(jobs: int | None) -> int:
    if jobs is not None:
        return max(1, jobs)
    env = os.environ.get(DEFAULT_JOBS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"{DEFAULT_JOBS_ENV} must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


# Worker-side state, rebuilt once per process.
_CTX = None


class _Context:
    def __init__(self, n: int, box_bound: int):
        self.n = n
        self.box_bound = box_bound
        self.triples = all_triples(n)
        position = {t: i for i, t in enumerate(self.triples)}
        self.compiled = []
        for relation in all_relations(n):
            self.compiled.append(
                tuple(
                    (t.sign, position[t.factors[0].entries], position[t.factors[1].entries], t.monomial)
                    for t in relation.terms
                )
            )
        self.dim = 3 * (n - 3)
        self.solver_cache: dict = {}

    def solve(self, diffs: tuple) -> tuple[int, ...]:
        e = self.solver_cache.get(diffs)
        if e is None:
            e = strict_interior_point(diffs, self.dim, self.box_bound)
            self.solver_cache[diffs] = e
        return e


def _init_worker(n: int, box_bound: int):
    global _CTX
    _CTX = _Context(n, box_bound)


def _sweep_one(ctx: _Context, serialized: str):
    seq = IteratedSequence.parse(serialized)
    rows = [compute_valuation(seq, K) for K in ctx.triples]

    gens = set()
    diffs = set()
    binomial = True
    matrix_initials = []
    for terms in ctx.compiled:
        valued = [
            (tuple(x + y for x, y in zip(rows[a], rows[b])), s, mono)
            for (s, a, b, mono) in terms
        ]
        best = max(v for v, _, _ in valued)
        initial = [(s, mono) for v, s, mono in valued if v == best]
        if len(initial) != 2:
            binomial = False
        else:
            (sa, ma), (sb, mb) = initial
            gens.add(canonical_binomial(sa, ma, sb, mb))
        matrix_initials.append(frozenset(mono for _, mono in initial))
        for v, _, _ in valued:
            if v != best:
                diffs.add(reduce_content(tuple(x - y for x, y in zip(v, best))))

    fp = tuple(sorted(gens))
    rank = exact_rank({i: x for i, x in enumerate(row) if x} for row in rows)

    ordered_diffs = tuple(sorted(diffs))
    e = ctx.solve(ordered_diffs)
    sound = all(sum(a * b for a, b in zip(e, d)) >= 1 for d in ordered_diffs)

    weights = [sum(a * b for a, b in zip(e, row)) for row in rows]
    scalar_ok = True
    for terms, expected in zip(ctx.compiled, matrix_initials):
        scored = [(weights[a] + weights[b], mono) for (_, a, b, mono) in terms]
        low = min(s for s, _ in scored)
        if frozenset(mono for s, mono in scored if s == low) != expected:
            scalar_ok = False
            break

    return seq, fp, rank, e, tuple(weights), sound, scalar_ok, binomial


def _sweep_chunk(chunk: list[str]):
    ctx = _CTX
    fp_table: list[Fingerprint] = []
    fp_index: dict[Fingerprint, int] = {}
    records = []
    label_weights = {}
    for serialized in chunk:
        seq, fp, rank, e, weights, sound, scalar_ok, binomial = _sweep_one(ctx, serialized)
        local = fp_index.get(fp)
        if local is None:
            local = len(fp_table)
            fp_index[fp] = local
            fp_table.append(fp)
        label = label_of(seq)
        if label not in label_weights:
            label_weights[label] = (serialized, e, weights)
        records.append((serialized, label, local, binomial, rank, e, sound, scalar_ok))
    return records, fp_table, label_weights


def _verify_chunk(payload):
    items, n = payload
    out = []
    for fp_id, fp in items:
        forms = [binomial_form(g) for g in fp]
        rank2 = graded_rank(forms, 2, n).rank
        rank3 = graded_rank(forms, 3, n).rank
        cert = lattice_saturation(fp)
        out.append(
            VerificationRecord(fp_id, rank2, rank3, cert.saturated, cert.pure_difference)
        )
    return out


def _chunked(items: list, pieces: int) -> list[list]:
    size = max(1, (len(items) + pieces - 1) // pieces)
    return [items[i : i + size] for i in range(0, len(items), size)]


def run_pipeline(
    n: int,
    jobs: int | None = None,
    skip_verify: bool = False,
    sequences: list[IteratedSequence] | None = None,
    box_bound: int | None = None,
) -> PipelineResult:
    """Run the whole chain for Gr(3,n); raises Infeasible only on a bug."""
    jobs = resolve_jobs(jobs)
    box = box_bound if box_bound is not None else DEFAULT_BOX_BOUND
    timings: dict[str, float] = {}

    start = time.perf_counter()
    if sequences is None:
        serialized = [s.serialize() for s in enumerate_sequences(n)]
    else:
        serialized = [s.serialize() for s in sequences]
    timings["enumerate"] = time.perf_counter() - start

    start = time.perf_counter()
    chunks = _chunked(serialized, jobs * 8)
    if jobs > 1 and len(serialized) > 64:
        with Pool(jobs, initializer=_init_worker, initargs=(n, box)) as pool:
            chunk_results = pool.map(_sweep_chunk, chunks)
    else:
        _init_worker(n, box)
        chunk_results = [_sweep_chunk(c) for c in chunks]

    raw_records = []
    label_weights: dict[Label, tuple] = {}
    for records, fp_table, chunk_weights in chunk_results:
        for record in records:
            raw_records.append((record, fp_table))
        for label, pair in chunk_weights.items():
            label_weights.setdefault(label, pair)
    timings["sweep"] = time.perf_counter() - start

    # canonical renumbering
    distinct = sorted({fp for _, fp_table, _ in chunk_results for fp in fp_table})
    fp_id = {fp: i for i, fp in enumerate(distinct)}
    outcomes = []
    labels_of_fingerprint: dict[int, list[Label]] = {}
    for (serialized_seq, label, local, binomial, rank, e, sound, scalar_ok), fp_table in raw_records:
        fid = fp_id[fp_table[local]]
        outcomes.append(
            SequenceOutcome(serialized_seq, label, fid, binomial, rank, e, sound, scalar_ok)
        )
        bucket = labels_of_fingerprint.setdefault(fid, [])
        if label not in bucket:
            bucket.append(label)

    start = time.perf_counter()
    labels_by_fp = {fp: tuple(sorted(labels_of_fingerprint[fp_id[fp]])) for fp in distinct}
    orbit_reports = compute_orbits(distinct, n, labels_by_fp)
    orbit_names = annotate_gr36_orbits(orbit_reports, labels_by_fp) if n == 6 else {}
    timings["orbits"] = time.perf_counter() - start

    plucker_ranks = None
    verification: list[VerificationRecord] = []
    if not skip_verify:
        start = time.perf_counter()
        reference_forms = [relation_form(R) for R in all_relations(n)]
        plucker_ranks = (
            graded_rank(reference_forms, 2, n).rank,
            graded_rank(reference_forms, 3, n).rank,
        )
        items = list(enumerate(distinct))
        if jobs > 1 and len(items) > 16:
            payloads = [(chunk, n) for chunk in _chunked(items, jobs * 2)]
            with Pool(jobs) as pool:
                for part in pool.map(_verify_chunk, payloads):
                    verification.extend(part)
        else:
            verification = _verify_chunk((items, n))
        verification.sort(key=lambda r: r.fingerprint_id)
        timings["verify"] = time.perf_counter() - start

    return PipelineResult(
        n=n,
        outcomes=outcomes,
        fingerprints=distinct,
        labels_of_fingerprint={k: tuple(sorted(v)) for k, v in labels_of_fingerprint.items()},
        label_weights=label_weights,
        orbit_reports=orbit_reports,
        orbit_names=orbit_names,
        plucker_ranks=plucker_ranks,
        verification=verification,
        timings=timings,
    )


# ---------------------------------------------------------------------------
# serialization of results


def _triple_key(triple) -> str:
    return "".join(str(x) for x in triple)


def generator_to_json(gen) -> dict:
    lead, trail, sign = gen
    return {
        "lead": [_triple_key(lead[0]), _triple_key(lead[1])],
        "trail": [_triple_key(trail[0]), _triple_key(trail[1])],
        "sign": sign,
    }


def dump_json(path: str, payload) -> None:
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _label_filename(label: Label) -> str:
    if not label:
        return "base.csv"
    return "-".join(f"{a}{b}" for a, b in label) + ".csv"


def write_outputs(result: PipelineResult, outdir: str, command: str = "pipeline") -> str:
    """Write matrices/, weights.json, fingerprints.json, orbits.json,
    verify.json (unless skipped) and a manifest; returns the manifest path."""
    os.makedirs(outdir, exist_ok=True)
    matrices_dir = os.path.join(outdir, "matrices")
    os.makedirs(matrices_dir, exist_ok=True)

    written = []

    for label in sorted(result.label_weights):
        witness = result.label_weights[label][0]
        matrix = weighting_matrix(IteratedSequence.parse(witness))
        path = os.path.join(matrices_dir, _label_filename(label))
        with open(path, "w") as fh:
            fh.write(matrix.to_csv())
        written.append(path)

    triples = all_triples(result.n)
    weights_payload = {
        "n": result.n,
        "labels": {
            format_label(label): {
                "e": list(e),
                "w": {_triple_key(t): value for t, value in zip(triples, w)},
            }
            for label, (_, e, w) in result.label_weights.items()
        },
    }
    path = os.path.join(outdir, "weights.json")
    dump_json(path, weights_payload)
    written.append(path)

    fingerprints_payload = {
        "n": result.n,
        "count": len(result.fingerprints),
        "fingerprints": [
            {
                "id": fid,
                "labels": [format_label(l) for l in result.labels_of_fingerprint[fid]],
                "generators": [generator_to_json(g) for g in fp],
            }
            for fid, fp in enumerate(result.fingerprints)
        ],
    }
    path = os.path.join(outdir, "fingerprints.json")
    dump_json(path, fingerprints_payload)
    written.append(path)

    fp_ids = {fp: i for i, fp in enumerate(result.fingerprints)}
    orbits_payload = {
        "n": result.n,
        "orbits": [
            {
                "id": r.orbit_id,
                "intersection_size": r.intersection_size,
                "ambient_size": r.ambient_size,
                "escaped_count": r.escaped_count,
                "fingerprint_ids": [fp_ids[m] for m in r.members],
                "labels": [format_label(l) for l in r.labels],
                **(
                    {
                        "class": result.orbit_names[r.orbit_id],
                        "isomorphism_class": ORBIT_CLASS_NAMES[result.orbit_names[r.orbit_id]],
                    }
                    if r.orbit_id in result.orbit_names
                    else {}
                ),
            }
            for r in result.orbit_reports
        ],
    }
    path = os.path.join(outdir, "orbits.json")
    dump_json(path, orbits_payload)
    written.append(path)

    path = os.path.join(outdir, "orbits.csv")
    with open(path, "w") as fh:
        fh.write("orbit,class,intersection_size,ambient_size,labels\n")
        for r in result.orbit_reports:
            name = result.orbit_names.get(r.orbit_id, "")
            labels = " ".join(format_label(l) for l in r.labels)
            fh.write(f"{r.orbit_id},{name},{r.intersection_size},{r.ambient_size},{labels}\n")
    written.append(path)

    if result.verification:
        verify_payload = {
            "n": result.n,
            "plucker": {
                "rank2": result.plucker_ranks[0],
                "rank3": result.plucker_ranks[1],
            },
            "fingerprints": [
                {
                    "id": r.fingerprint_id,
                    "rank2": r.rank2,
                    "rank3": r.rank3,
                    "snf_ok": r.snf_ok,
                    "pure_difference": r.pure_difference,
                }
                for r in result.verification
            ],
        }
        path = os.path.join(outdir, "verify.json")
        dump_json(path, verify_payload)
        written.append(path)

    manifest = {
        "command": command,
        "n": result.n,
        "version": __version__,
        "inputs": {
            "sha256": hashlib.sha256(
                json.dumps({"n": result.n, "command": command}, sort_keys=True).encode()
            ).hexdigest()
        },
        "timings": {k: round(v, 3) for k, v in result.timings.items()},
        "outputs": [
            {
                "path": os.path.relpath(p, outdir),
                "sha256": hashlib.sha256(open(p, "rb").read()).hexdigest(),
                "bytes": os.path.getsize(p),
            }
            for p in written
        ],
    }
    manifest_path = os.path.join(outdir, "manifest.json")
    dump_json(manifest_path, manifest)
    return manifest_path
