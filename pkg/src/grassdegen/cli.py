"""Command-line driver: enumerate, pipeline, orbit-of, verify, solve-cone,
version.

Exit codes: 0 on success, 1 on an internal invariant violation, 2 on usage
errors.  A key=value config file can override the solver box bound and the
ambient-size ceiling; GRASS_DEGEN_JOBS sets the default worker count.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .classify import ORBIT_CLASS_NAMES, NotFound, classify_gr36, fingerprint
from .cone import DEFAULT_BOX_BOUND, Infeasible, strict_interior_point, weight_vector
from .initial_forms import inequalities_from_csv
from .pipeline import dump_json, resolve_jobs, run_pipeline, write_outputs
from .sequences import (
    IteratedSequence,
    all_labels,
    enumerate_sequences,
    format_label,
    parse_label,
    representative_sequence,
    validate_label,
)
from .toricity import binomial_form, graded_rank, lattice_saturation, relation_form
from .plucker import all_relations
from .valuation import WeightingMatrix

DEFAULT_MAX_N = 8


def load_config(path: str) -> dict:
    """Parse a key=value config file; '#' starts a comment."""
    values = {}
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, _, raw = line.partition("=")
            if not _:
                raise ValueError(f"malformed config line {line!r}")
            values[key.strip()] = raw.strip()
    config = {}
    for key, raw in values.items():
        if key in ("solver_box_bound", "max_n"):
            config[key] = int(raw)
        else:
            raise ValueError(f"unknown config key {key!r}")
    return config


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grass-degen",
        description="Toric degenerations of Gr(3,n) from iterated birational sequences",
    )
    parser.add_argument("--config", help="key=value config file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list all iterated sequences")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-o", "--output", help="write sequences here instead of stdout")

    p = sub.add_parser("pipeline", help="run the full degeneration pipeline")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--out", default="grass-degen-out", help="output directory")
    p.add_argument("--seq", help="run a single serialized sequence")
    p.add_argument("--skip-verify", action="store_true")
    p.add_argument("--jobs", type=int)

    p = sub.add_parser("orbit-of", help="orbit of a Gr(3,6) label, e.g. '(1,3;2,1)'")
    p.add_argument("label")

    p = sub.add_parser("verify", help="toricity evidence for a fingerprint set")
    p.add_argument("--fingerprints", help="fingerprints.json from a pipeline run")
    p.add_argument("-n", type=int, help="compute fingerprints for this n instead")
    p.add_argument("-o", "--output", help="write the report here instead of stdout")

    p = sub.add_parser("solve-cone", help="interior point for an inequality CSV")
    p.add_argument("--inequalities", required=True)
    p.add_argument("--matrix", required=True, help="weighting-matrix CSV")
    p.add_argument("-o", "--output", help="write the JSON here instead of stdout")

    sub.add_parser("version", help="print the tool version")
    return parser


def _check_n(parser, n: int, max_n: int):
    if not 4 <= n <= max_n:
        parser.error(f"n must be in 4..{max_n}, got {n}")


def cmd_enumerate(args, parser, config) -> int:
    _check_n(parser, args.n, config.get("max_n", DEFAULT_MAX_N))
    out = open(args.output, "w") if args.output else sys.stdout
    count = 0
    try:
        for seq in enumerate_sequences(args.n):
            out.write(seq.serialize() + "\n")
            count += 1
    finally:
        if args.output:
            out.close()
    print(f"count={count}", file=sys.stderr)
    return 0


def cmd_pipeline(args, parser, config) -> int:
    _check_n(parser, args.n, config.get("max_n", DEFAULT_MAX_N))
    try:
        resolve_jobs(args.jobs)
    except ValueError as exc:
        parser.error(str(exc))
    sequences = None
    if args.seq:
        try:
            seq = IteratedSequence.parse(args.seq)
        except ValueError as exc:
            parser.error(str(exc))
        if seq.n != args.n:
            parser.error(f"--seq has n={seq.n}, but -n {args.n} was given")
        sequences = [seq]
    result = run_pipeline(
        args.n,
        jobs=args.jobs,
        skip_verify=args.skip_verify,
        sequences=sequences,
        box_bound=config.get("solver_box_bound", DEFAULT_BOX_BOUND),
    )
    broken = [
        o.serialized
        for o in result.outcomes
        if not (o.all_binomial and o.projection_sound and o.scalar_matches)
    ]
    if broken:
        print(f"internal invariant violation for {broken[0]}", file=sys.stderr)
        return 1
    write_outputs(result, args.out)
    print(result.summary())
    return 0


def cmd_orbit_of(args, parser) -> int:
    try:
        label = parse_label(args.label)
        validate_label(label, 6)
    except ValueError as exc:
        parser.error(str(exc))
    classification = classify_gr36()
    try:
        fp = classification.fingerprint_of_label[label]
    except KeyError:
        raise NotFound(args.label)
    orbit_id = classification.orbit_of_fingerprint[fp]
    report = next(r for r in classification.reports if r.orbit_id == orbit_id)
    name = classification.orbit_names[orbit_id]
    print(
        f"label={format_label(label)} orbit={orbit_id} class={name} "
        f"isomorphism_class={ORBIT_CLASS_NAMES[name]} "
        f"intersection={report.intersection_size} ambient={report.ambient_size}"
    )
    return 0


def _fingerprints_from_file(path: str):
    with open(path) as fh:
        payload = json.load(fh)

    def triple(text: str):
        return tuple(int(c) for c in text)

    fps = []
    for entry in payload["fingerprints"]:
        gens = []
        for g in entry["generators"]:
            lead = (triple(g["lead"][0]), triple(g["lead"][1]))
            trail = (triple(g["trail"][0]), triple(g["trail"][1]))
            gens.append((lead, trail, g["sign"]))
        fps.append(tuple(sorted(gens)))
    return payload["n"], fps


def cmd_verify(args, parser, config) -> int:
    if bool(args.fingerprints) == bool(args.n):
        parser.error("give exactly one of --fingerprints or -n")
    if args.fingerprints:
        n, fps = _fingerprints_from_file(args.fingerprints)
    else:
        n = args.n
        _check_n(parser, n, config.get("max_n", DEFAULT_MAX_N))
        if n == 4:
            fps = [fingerprint(representative_sequence((), 4))]
        else:
            fps = sorted({fingerprint(representative_sequence(lab, n)) for lab in all_labels(n)})
    reference = [relation_form(R) for R in all_relations(n)]
    payload = {
        "n": n,
        "plucker": {
            "rank2": graded_rank(reference, 2, n).rank,
            "rank3": graded_rank(reference, 3, n).rank,
        },
        "fingerprints": [],
    }
    for fid, fp in enumerate(fps):
        forms = [binomial_form(g) for g in fp]
        cert = lattice_saturation(fp)
        payload["fingerprints"].append(
            {
                "id": fid,
                "rank2": graded_rank(forms, 2, n).rank,
                "rank3": graded_rank(forms, 3, n).rank,
                "snf_ok": cert.saturated,
                "pure_difference": cert.pure_difference,
            }
        )
    if args.output:
        dump_json(args.output, payload)
    else:
        json.dump(payload, sys.stdout, indent=2, sort_keys=True)
        print()
    return 0


def cmd_solve_cone(args, parser, config) -> int:
    with open(args.inequalities) as fh:
        diffs = inequalities_from_csv(fh.read())
    with open(args.matrix) as fh:
        text = fh.read()
    n = max((int(c) for line in text.splitlines() if line for c in line.split(",", 1)[0]), default=4)
    matrix = WeightingMatrix.from_csv(text, n)
    dim = len(matrix.rows[0])
    e = strict_interior_point(diffs, dim, config.get("solver_box_bound", DEFAULT_BOX_BOUND))
    w = weight_vector(e, matrix)
    payload = {
        "e": list(e),
        "w": {"".join(str(x) for x in t): value for t, value in zip(matrix.triples, w)},
    }
    if args.output:
        dump_json(args.output, payload)
    else:
        json.dump(payload, sys.stdout, indent=2, sort_keys=True)
        print()
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    config = {}
    if args.config:
        try:
            config = load_config(args.config)
        except (OSError, ValueError) as exc:
            parser.error(str(exc))
    try:
        if args.command == "enumerate":
            return cmd_enumerate(args, parser, config)
        if args.command == "pipeline":
            return cmd_pipeline(args, parser, config)
        if args.command == "orbit-of":
            return cmd_orbit_of(args, parser)
        if args.command == "verify":
            return cmd_verify(args, parser, config)
        if args.command == "solve-cone":
            return cmd_solve_cone(args, parser, config)
        if args.command == "version":
            print(__version__)
            return 0
    except (Infeasible, NotFound, RuntimeError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        parser.error(str(exc))
    parser.error(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
