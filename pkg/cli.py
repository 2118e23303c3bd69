# cli.py
"""
Command-line entry point.

    python cli.py info data/specs/ut3_z2.json
    python cli.py idempotents data/specs/z6.json --classify
    python cli.py decompose data/specs/ut3_z2.json --set E11,E22,E33
    python cli.py npeirce data/specs/ut3_z2.json --exhaustive-n
    python cli.py check ideal-extending data/specs/not_ideal_extending.json
    python cli.py verify --suite all --family gmr-2x2-over-z4 --jobs 4 --record
    python cli.py examples --run all
    python cli.py explore units-generation --family morita
    python cli.py results --run 1

Exit codes: 0 all pass, 1 a check failed, 2 invalid input, 3 budget exceeded.
"""

import argparse
import logging
import sys
import time

import config
from errors import EXIT_BUDGET, EXIT_CHECK_FAILED, EXIT_INVALID, EXIT_OK, BudgetExceeded, RingError
from checks import set_partitions
from gmr import GmrRing, annihilating_subrings, block_partition, is_Tn, units_generated
from peirce import classification_report, classify_idempotent, peirce_decompose
from reports import (carrier_grid, idempotent_rows, new_report, render_report, tree_outline,
                     witness_rows)
from ring_core import is_prime, is_semiprime, structure_invariants
from ring_spec import build_ring, load_spec, parse_idempotents
from structure import (achievable_peirce_numbers, is_1_peirce, is_fi_extending_right,
                       is_ideal_extending, is_quasi_baer, nontrivial_peirce_trivial,
                       npeirce_decompose, tn_partitions)
import results_db
import verify
import worked_examples

logger = logging.getLogger(__name__)

SETTING_FLAGS = ("small_tier", "sample_triples", "sample_pairs", "ideal_cap", "seed", "jobs")
PROPERTIES = ("tn", "ideal-extending", "quasi-baer", "fi-extending", "1-peirce", "prime",
              "semiprime")
QUESTIONS = ("units-generation", "block-partitions")


def _load(path):
    return build_ring(load_spec(path))


def _members(ring, subset):
    return [ring.format(x) for x in subset.sorted_members]


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_info(args):
    ring = _load(args.spec)
    report = new_report(f"info {args.spec}", f"ring {ring.label}")
    if ring.size <= config.current().small_tier:
        report.add("ring", structure_invariants(ring).as_dict())
    else:
        report.add("ring", {"ring": ring.label, "size": ring.size,
                            "characteristic": ring.characteristic,
                            "invariants": "skipped: above the small tier"})
    if isinstance(ring, GmrRing):
        report.add("entries", carrier_grid(ring))
        verdict = is_Tn(ring)
        report.add("T_n", {"in_tn": verdict.holds, **(verdict.witness or {})})
    return report


def cmd_idempotents(args):
    ring = _load(args.spec)
    report = new_report(f"idempotents {args.spec}", f"idempotents of {ring.label}")
    if not args.classify:
        report.add("idempotents", [ring.format(e) for e in sorted(ring.idempotents())])
        return report
    classified = classification_report(ring)
    report.add("idempotents", idempotent_rows(ring, classified.classes))
    report.add("sets", {name: [ring.format(e) for e in es]
                        for name, es in classified.sets.items()})
    report.add("witnesses", witness_rows(ring, classified.classes))
    return report


def cmd_decompose(args):
    ring = _load(args.spec)
    es = parse_idempotents(ring, args.set)
    report = new_report(f"decompose {args.spec} --set {args.set}",
                        f"Peirce decomposition of {ring.label}")
    decomposition = peirce_decompose(ring, es)
    report.add("idempotents", [ring.format(e) for e in es])
    report.add("verdicts", {"in_tn": decomposition.in_tn,
                            "all_inner": decomposition.all_inner,
                            "corners_vanish": decomposition.corners_vanish,
                            "dminus_right_ideal": decomposition.dminus_right_ideal,
                            "isomorphism": decomposition.isomorphism,
                            "agrees": decomposition.agrees})
    report.add("entries", carrier_grid(decomposition.ring))
    if not decomposition.in_tn:
        report.add("T_n witness", decomposition.ring.tn_witness)
    if decomposition.dminus_witness:
        report.add("D^- witness", decomposition.dminus_witness)
    report.failed = not (decomposition.agrees and decomposition.isomorphism)
    return report


def cmd_npeirce(args):
    ring = _load(args.spec)
    report = new_report(f"npeirce {args.spec}", f"Peirce tree of {ring.label}")
    tree = npeirce_decompose(ring)
    report.add("summary", {"canonical n": tree.peirce_number, **tree.post_checks})
    report.add("tree", tree_outline(ring, tree.root))
    report.add("T_k partitions", [
        {"k": row["k"], "idempotents": [ring.format(e) for e in row["idempotents"]],
         "in_tn": row["in_tn"]} for row in tn_partitions(ring, tree)])
    if args.exhaustive_n:
        report.add("achievable n", {"values": achievable_peirce_numbers(ring)})
    report.failed = not all(tree.post_checks.values())
    return report


def _extending(test):
    def run(ring):
        config.require_tier(ring, test.__name__)
        verdict = test(ring)
        if verdict.holds:
            return True, {}
        return False, {"ideal": verdict.failing.label,
                       "members": _members(ring, verdict.failing)}
    return run


def _check_tn(ring):
    if not isinstance(ring, GmrRing):
        raise RingError(f"{ring.label} is not given as a generalized matrix ring")
    verdict = is_Tn(ring)
    return verdict.holds, verdict.witness or {}


def _check_one_peirce(ring):
    if is_1_peirce(ring):
        return True, {}
    return False, {"peirce_trivial": ring.format(nontrivial_peirce_trivial(ring)[0])}


CHECKERS = {
    "tn": _check_tn,
    "ideal-extending": _extending(is_ideal_extending),
    "quasi-baer": _extending(is_quasi_baer),
    "fi-extending": _extending(is_fi_extending_right),
    "1-peirce": _check_one_peirce,
    "prime": lambda ring: (is_prime(ring), {}),
    "semiprime": lambda ring: (is_semiprime(ring), {}),
}


def cmd_check(args):
    ring = _load(args.spec)
    report = new_report(f"check {args.property} {args.spec}", f"{args.property} for {ring.label}")
    holds, witness = CHECKERS[args.property](ring)
    report.add("verdict", {"property": args.property, "ring": ring.label, "holds": holds})
    if witness:
        report.add("witness", witness)
    report.failed = not holds
    return report


def cmd_verify(args):
    family = verify.get_family(args.family)
    suite = verify.resolve_suite(args.suite)
    command = f"verify --suite {args.suite} --family {args.family}"
    if args.max_size:
        command += f" --max-size {args.max_size}"
    if args.mutation:
        command += f" --mutation {args.mutation}"
    report = new_report(command, f"suite over {family.family_id}")
    start = time.perf_counter()
    outcome = verify.run_suite(family, suite, max_size=args.max_size, mutation=args.mutation,
                               progress=args.progress)
    report.timings["suite"] = time.perf_counter() - start
    report.add("summary", {"family": family.family_id, "description": family.description,
                           "checks": len(suite), "max_size": outcome.max_size,
                           "mutation": outcome.mutation or "none", **outcome.counts,
                           "coverage_gaps": outcome.coverage_gaps or "none"})
    report.add("results", [r.as_dict(args.timings) for r in outcome.results])
    if args.record:
        run_id = results_db.record_run(outcome, config.current().seed, path=args.record)
        report.add("recorded", {"run": run_id, "db": args.record})
    report.failed = outcome.failed
    return report


def cmd_examples(args):
    if not args.run:
        report = new_report("examples", "worked examples")
        report.add("examples", [{"id": e.example_id, "title": e.title,
                                 "numbers": worked_examples.numbers_of(e.example_id)}
                                for e in worked_examples.EXAMPLES.values()])
        return report
    ids = worked_examples.example_ids() if args.run == "all" else [args.run]
    report = new_report(f"examples --run {args.run}", "worked example reproduction")
    results = []
    for example_id in ids:
        result = verify.check_example(example_id)
        report.timings[example_id] = result.seconds
        results.append(result)
    report.add("results", [r.as_dict(args.timings) for r in results])
    report.failed = any(r.verdict == "fail" for r in results)
    return report


def _explore_rings(args):
    if args.spec:
        return [_load(args.spec)]
    if not args.family:
        raise RingError("explore needs a spec file or --family")
    tier = config.current().small_tier
    rings = []
    for builder in verify.get_family(args.family).builders():
        ring = builder()
        if ring.size <= tier:
            rings.append(ring)
    return rings


def _units_row(ring):
    rla, rua = annihilating_subrings(ring)
    generated = units_generated(ring, rla.units() | rua.units())
    units = ring.units()
    return {"ring": ring.label, "in_tn": ring.in_tn, "U(R)": len(units),
            "U(R^la)": len(rla.units()), "U(R^ua)": len(rua.units()),
            "generated": len(generated), "equal": generated == units}


def _partition_rows(ring):
    diagonal = [classify_idempotent(ring, e) for e in ring.diagonal_units()]
    rows = []
    for partition in set_partitions(range(1, ring.n + 1)):
        if len(partition) < 2:
            continue
        blocks, _ = block_partition(ring, partition)
        rows.append({"ring": ring.label,
                     "blocks": "|".join("".join(str(i) for i in b) for b in partition),
                     "in_T_m": blocks.in_tn,
                     "diagonal_inner": all(c.inner for c in diagonal),
                     "diagonal_trivial": all(c.peirce_trivial for c in diagonal)})
    return rows


def cmd_explore(args):
    rings = [r for r in _explore_rings(args) if isinstance(r, GmrRing) and r.n >= 2]
    source = args.spec or f"--family {args.family}"
    report = new_report(f"explore {args.question} {source}", f"exploring {args.question}")
    rows = []
    for ring in rings:
        if args.question == "units-generation":
            rows.append(_units_row(ring))
        else:
            rows.extend(_partition_rows(ring))
    report.add("table", rows)
    return report


def cmd_results(args):
    if args.run is None:
        report = new_report(f"results --db {args.db}", "recorded runs")
        report.add("runs", results_db.list_runs(args.db))
    else:
        report = new_report(f"results --db {args.db} --run {args.run}", f"run {args.run}")
        report.add("results", results_db.run_results(args.run, args.db))
    return report


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json"), default="human")
    common.add_argument("--timings", action="store_true", help="include timings in the report")
    common.add_argument("-v", "--verbose", action="count", default=0)
    common.add_argument("--no-progress", dest="progress", action="store_false")
    common.add_argument("--seed", type=int)
    common.add_argument("--jobs", type=int)
    common.add_argument("--small-tier", type=int)
    common.add_argument("--sample-triples", type=int)
    common.add_argument("--sample-pairs", type=int)
    common.add_argument("--ideal-cap", type=int)

    parser = argparse.ArgumentParser(description="Peirce structure of finite unital rings")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("info", parents=[common], help="size, radicals and entries")
    p.add_argument("spec")
    p.set_defaults(handler=cmd_info)

    p = commands.add_parser("idempotents", parents=[common], help="list or classify idempotents")
    p.add_argument("spec")
    p.add_argument("--classify", action="store_true")
    p.set_defaults(handler=cmd_idempotents)

    p = commands.add_parser("decompose", parents=[common], help="Peirce decomposition of a set")
    p.add_argument("spec")
    p.add_argument("--set", required=True,
                   help="'diagonal', a JSON list of encodings, or E11,E22+E33")
    p.set_defaults(handler=cmd_decompose)

    p = commands.add_parser("npeirce", parents=[common], help="canonical Peirce tree")
    p.add_argument("spec")
    p.add_argument("--exhaustive-n", action="store_true")
    p.set_defaults(handler=cmd_npeirce)

    p = commands.add_parser("check", parents=[common], help="test one ring property")
    p.add_argument("property", choices=PROPERTIES)
    p.add_argument("spec")
    p.set_defaults(handler=cmd_check)

    p = commands.add_parser("verify", parents=[common], help="run checks over a ring family")
    p.add_argument("--suite", default="all")
    p.add_argument("--family", required=True, choices=sorted(verify.FAMILIES))
    p.add_argument("--max-size", type=int)
    p.add_argument("--mutation", choices=verify.MUTATIONS)
    p.add_argument("--record", nargs="?", const=results_db.DEFAULT_DB, metavar="DB")
    p.set_defaults(handler=cmd_verify)

    p = commands.add_parser("examples", parents=[common], help="list or run worked examples")
    p.add_argument("--run", metavar="ID|all")
    p.set_defaults(handler=cmd_examples)

    p = commands.add_parser("explore", parents=[common], help="empirical tables, no assertions")
    p.add_argument("question", choices=QUESTIONS)
    p.add_argument("spec", nargs="?")
    p.add_argument("--family", choices=sorted(verify.FAMILIES))
    p.set_defaults(handler=cmd_explore)

    p = commands.add_parser("results", parents=[common], help="recorded suite runs")
    p.add_argument("--db", default=results_db.DEFAULT_DB)
    p.add_argument("--run", type=int)
    p.set_defaults(handler=cmd_results)
    return parser


def _configure_logging(verbosity):
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="[%(levelname)s] %(name)s: %(message)s")


def main(argv=None):
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    args.progress = args.progress and sys.stderr.isatty()
    overrides = {name: getattr(args, name) for name in SETTING_FLAGS
                 if getattr(args, name) is not None}
    try:
        with config.overridden(**overrides):
            report = args.handler(args)
            text = render_report(report, args.format, args.timings)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except RingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    sys.stdout.write(text)
    return EXIT_CHECK_FAILED if report.failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
