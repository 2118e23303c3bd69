# verify.py
"""
Suite runner: ring families x check catalogue.

A family is an ordered list of ring builders. The parent process builds each
member once to learn its size and label; workers rebuild members by index, so
nothing unpicklable crosses the process boundary. Results come back in family
order whatever the number of workers.

Mutations make the suite prove it can fail:
    corrupt-theta   theta_121 of every GMR member sends (0, 0) to 1 and shifts
                    one product of nonzero generators by 1
    drop-closure    every additive span loses its largest element
"""

import logging
import multiprocessing
import time
from dataclasses import dataclass, field
from functools import partial
from typing import Callable

from tqdm import tqdm

import config
from checks import CATALOGUE, Analysis, evaluate
from errors import BudgetExceeded, RingError
from gmr import (RING, ZERO, Entry, GmrRing, matrix_ring, theta_from_ambient,
                 triangular_ring, with_corrupted_pairing)
from ring_core import make_cyclic, make_monomial_quotient, make_product, set_span_mutation
import worked_examples

logger = logging.getLogger(__name__)

MUTATIONS = ("corrupt-theta", "drop-closure")


@dataclass
class CheckResult:
    check_id: str
    ring: str
    verdict: str
    witness: dict = field(default_factory=dict)
    reason: str = ""
    sampled: bool = False
    seconds: float = 0.0
    notes: dict = field(default_factory=dict)

    def as_dict(self, timings=False):
        row = {"check": self.check_id, "ring": self.ring, "verdict": self.verdict}
        if self.reason:
            row["reason"] = self.reason
        if self.witness:
            row["witness"] = self.witness
        if self.sampled:
            row["sampled"] = True
        if self.notes:
            row["notes"] = self.notes
        if timings:
            row["seconds"] = round(self.seconds, 4)
        return row


@dataclass(frozen=True)
class RingFamily:
    family_id: str
    description: str
    members: Callable

    def builders(self):
        return self.members()

    def build(self, index):
        return self.builders()[index]()


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

def _ideal(*gens):
    return Entry("ideal", tuple(gens))


def _cyclic_members():
    return [partial(make_cyclic, n) for n in range(2, 65)]


def _two_cyclics(m, n):
    return make_product([make_cyclic(m), make_cyclic(n)])


def _product_members():
    return [partial(_two_cyclics, m, n) for m in range(2, 9) for n in range(m, 9)]


MONOMIAL_CASES = (
    (2, ["x"], ["x^2"]),
    (2, ["x"], ["x^3"]),
    (4, ["x"], ["x^2"]),
    (2, ["x", "y"], ["x^2", "y^2"]),
    (2, ["x", "y"], ["x^2", "y^2", "x*y"]),
    (4, ["x", "y"], ["x^2", "y^2", "x*y"]),
    (4, ["x", "y"], ["x^2", "y^2"]),
)


def _monomial_members():
    return [partial(make_monomial_quotient, *case) for case in MONOMIAL_CASES]


def _triangular(modulus, n, side):
    return triangular_ring(make_cyclic(modulus), n, side)


def _triangular_members():
    return [partial(_triangular, modulus, n, side)
            for n in (2, 3) for modulus in (2, 4, 6) for side in ("upper", "lower")]


def _matrix(modulus, n):
    return matrix_ring(make_cyclic(modulus), n)


def _matrix_members():
    return [partial(_matrix, 2, 2), partial(_matrix, 3, 2), partial(_matrix, 4, 2),
            partial(_matrix, 2, 3)]


def _morita(ambient, entries, zero_thetas=(), label=None):
    return theta_from_ambient(ambient(), entries, zero_thetas=zero_thetas, label=label)


def _dual_numbers():
    return make_monomial_quotient(2, ["x"], ["x^2"])


def _z(n):
    return partial(make_cyclic, n)


def _morita_members():
    dual = _dual_numbers()
    x = dual.monomial("x")
    quotient = Entry("quotient", (2,))
    return [
        partial(_morita, _z(4), [[RING, _ideal(2)], [_ideal(2), RING]],
                label="[Z4, (2); (2), Z4]"),
        partial(_morita, _z(8), [[RING, _ideal(2)], [_ideal(4), RING]],
                label="[Z8, (2); (4), Z8]"),
        partial(_morita, _z(6), [[RING, _ideal(2)], [_ideal(3), RING]],
                label="[Z6, (2); (3), Z6]"),
        partial(_morita, _z(4), [[RING, _ideal(2)], [RING, RING]],
                label="[Z4, (2); Z4, Z4]"),
        partial(_morita, _z(4), [[RING, quotient], [quotient, RING]],
                zero_thetas=((1, 2, 1), (2, 1, 2)), label="[Z4, Z4/(2); Z4/(2), Z4]"),
        partial(_morita, _dual_numbers, [[RING, _ideal(x)], [_ideal(x), RING]],
                label="[A, (x); (x), A] over Z2[x]/(x^2)"),
    ]


_Z4_ENTRIES = (("0", ZERO), ("(2)", _ideal(2)), ("Z4", RING))


def _gmr_z4_members():
    members = []
    for upper_name, upper in _Z4_ENTRIES:
        for lower_name, lower in _Z4_ENTRIES:
            members.append(partial(_morita, _z(4), [[RING, upper], [lower, RING]],
                                   label=f"[Z4, {upper_name}; {lower_name}, Z4]"))
    return members


def _example_members():
    return [worked_examples.RINGS[name] for name in worked_examples.builder_names()]


FAMILIES = {family.family_id: family for family in (
    RingFamily("cyclic", "Z_n for 2 <= n <= 64", _cyclic_members),
    RingFamily("products", "Z_m x Z_n for 2 <= m <= n <= 8", _product_members),
    RingFamily("monomial", "monomial quotients over Z2 and Z4 in at most two variables",
               _monomial_members),
    RingFamily("triangular", "upper and lower triangular 2x2 and 3x3 over Z2, Z4, Z6",
               _triangular_members),
    RingFamily("matrix", "M2 over Z2, Z3, Z4 and M3(Z2)", _matrix_members),
    RingFamily("morita", "2x2 Morita contexts with ideal and quotient bimodules",
               _morita_members),
    RingFamily("gmr-2x2-over-z4", "[Z4, X; Y, Z4] for X, Y in {0, (2), Z4}",
               _gmr_z4_members),
    RingFamily("examples", "rings of the worked examples", _example_members),
)}


def get_family(family_id):
    if family_id not in FAMILIES:
        raise RingError(f"unknown family {family_id!r}; known: {', '.join(FAMILIES)}")
    return FAMILIES[family_id]


def resolve_suite(spec):
    """'all' or a comma separated list of check ids, in catalogue order."""
    if spec in (None, "", "all"):
        return list(CATALOGUE)
    wanted = [s.strip() for s in spec.split(",") if s.strip()]
    unknown = [s for s in wanted if s not in CATALOGUE]
    if unknown:
        raise RingError(f"unknown check ids: {', '.join(unknown)}")
    return [check_id for check_id in CATALOGUE if check_id in wanted]


# ---------------------------------------------------------------------------
# Running
# ---------------------------------------------------------------------------

@dataclass
class SuiteReport:
    family: str
    suite: list
    max_size: int
    mutation: str = None
    results: list = field(default_factory=list)

    @property
    def counts(self):
        counts = {"pass": 0, "fail": 0, "skipped": 0}
        for r in self.results:
            counts[r.verdict] += 1
        return counts

    @property
    def failed(self):
        return any(r.verdict == "fail" for r in self.results)

    @property
    def coverage_gaps(self):
        """Check ids that never passed or failed on any member."""
        executed = {r.check_id for r in self.results if r.verdict in ("pass", "fail")}
        return [check_id for check_id in self.suite if check_id not in executed]


def _apply_mutation(ring, mutation):
    if mutation == "corrupt-theta" and isinstance(ring, GmrRing) and ring.n >= 2:
        return with_corrupted_pairing(ring)
    return ring


def _run_member(task):
    family_id, index, suite, settings, mutation = task
    with config.overridden(**settings):
        set_span_mutation(mutation == "drop-closure")
        try:
            try:
                ring = _apply_mutation(get_family(family_id).build(index), mutation)
            except RingError as exc:
                label = f"{family_id}[{index}]"
                verdict = "skipped" if isinstance(exc, BudgetExceeded) else "fail"
                return [CheckResult(check_id, label, verdict, dict(exc.details), str(exc))
                        for check_id in suite]
            analysis = Analysis(ring)
            rows = []
            for check_id in suite:
                start = time.perf_counter()
                outcome = evaluate(check_id, analysis)
                rows.append(CheckResult(check_id, ring.label, outcome.verdict, outcome.witness,
                                        outcome.reason, outcome.sampled,
                                        time.perf_counter() - start, outcome.notes))
            logger.info("%s: %s done", family_id, ring.label)
            return rows
        finally:
            set_span_mutation(False)


def _oversized(label, size, max_size, suite):
    reason = f"budget: {size} elements is above --max-size {max_size}"
    return [CheckResult(check_id, label, "skipped", {"size": size}, reason)
            for check_id in suite]


def run_suite(family, suite, max_size=None, mutation=None, jobs=None, progress=True):
    """Run `suite` over every member of `family`; oversized members are skipped, not dropped."""
    if mutation is not None and mutation not in MUTATIONS:
        raise RingError(f"unknown mutation {mutation!r}; known: {', '.join(MUTATIONS)}")
    settings = config.current()
    max_size = max_size or settings.small_tier
    jobs = jobs or settings.jobs
    report = SuiteReport(family.family_id, list(suite), max_size, mutation)
    slots, tasks = [], []
    for index, builder in enumerate(family.builders()):
        ring = builder()
        if ring.size > max_size:
            slots.append(_oversized(ring.label, ring.size, max_size, suite))
        else:
            slots.append(None)
            tasks.append((family.family_id, index, list(suite), settings.as_dict(), mutation))
    logger.info("family %s: %d members, %d within %d elements", family.family_id,
                len(slots), len(tasks), max_size)
    bar = dict(total=len(tasks), desc=family.family_id, dynamic_ncols=True, ascii=True,
               disable=not progress)
    if jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(min(jobs, len(tasks))) as pool:
            finished = list(tqdm(pool.imap(_run_member, tasks), **bar))
    else:
        finished = [_run_member(task) for task in tqdm(tasks, **bar)]
    pending = iter(finished)
    for slot in slots:
        report.results.extend(slot if slot is not None else next(pending))
    return report


def check_example(name):
    """Run a worked example and fold its claims into one CheckResult."""
    example_id = worked_examples.resolve_example(name)
    start = time.perf_counter()
    try:
        claims = worked_examples.run_example(example_id)
    except BudgetExceeded as exc:
        return CheckResult(example_id, example_id, "skipped", dict(exc.details),
                           f"budget: {exc}", seconds=time.perf_counter() - start)
    except RingError as exc:
        return CheckResult(example_id, example_id, "fail", dict(exc.details), str(exc),
                           seconds=time.perf_counter() - start)
    seconds = time.perf_counter() - start
    notes = {"claims": len(claims)}
    failing = [c for c in claims if not c.holds]
    if failing:
        first = failing[0]
        witness = {"claim": first.statement}
        witness.update({k: str(v) for k, v in first.witness.items()})
        return CheckResult(example_id, example_id, "fail", witness,
                           f"{len(failing)} of {len(claims)} claims fail",
                           seconds=seconds, notes=notes)
    return CheckResult(example_id, example_id, "pass", seconds=seconds, notes=notes)
