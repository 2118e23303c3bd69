# checks.py
"""
The check catalogue run by the verification suite.

Each check takes an Analysis of one ring and returns an Outcome. A check that
does not apply to a ring (wrong shape, hypothesis not met) raises
NotApplicable and is reported as skipped; budget errors are skipped too, and
any other RingError is a failure carrying the error details as witness.

Quantifiers over idempotent pairs are exhaustive up to Settings.pair_budget
and seeded samples beyond it; a sampled check says so in its result. Sampling
is only used where a sampled pass cannot hide a disagreement.
"""

import itertools
import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

import config
from errors import BudgetExceeded, RingAxiomError, RingError
from gmr import (ZERO, RING, Entry, GmrRing, annihilating_subrings, bar, diagonal_parts,
                 gmr_center, sub_unit_formula, theta_from_ambient, triangular_parts,
                 triangular_ring, matrix_ring, unit_group_decomposition, validate_gmr)
from peirce import (central_mod_prime_radical, classify_idempotent, classify_in_ideal,
                    complete_set_criteria, check_complete_set, peirce_decompose,
                    row_idempotents)
from ring_core import (ProductRing, Subset, SubRing, annihilator, center, corner_ring,
                       enumerate_ideals, greedy_generators, ideal_generated, ideal_power,
                       is_prime, is_semiprime, jacobson_radical, nilpotence_index, prime_radical,
                       quasi_regular_radical, quotient_ring, right_ideal_of, span,
                       structure_invariants, subring_generated, validate_ring_axioms)
from structure import (achievable_peirce_numbers, bisubmodule_essential,
                       central_idempotents, is_1_peirce, is_fi_extending_right,
                       is_ideal_essential, is_ideal_extending, is_quasi_baer,
                       npeirce_decompose, rer_lattice, tn_partitions)

logger = logging.getLogger(__name__)

CORNER_SAMPLE = 32


class NotApplicable(Exception):
    """The ring does not meet the hypotheses of a check."""


@dataclass
class Outcome:
    verdict: str
    witness: dict = field(default_factory=dict)
    reason: str = ""
    sampled: bool = False
    notes: dict = field(default_factory=dict)


def _plain(value):
    if value is None or isinstance(value, (str, int, float, bool)):
        return value
    if isinstance(value, (list, tuple)) and all(isinstance(v, str) for v in value):
        return list(value)
    return str(value)


def passed(sampled=False, **notes):
    return Outcome("pass", sampled=sampled, notes={k: _plain(v) for k, v in notes.items()})


def failed(reason, **witness):
    return Outcome("fail", {k: _plain(v) for k, v in witness.items()}, reason)


def skipped(reason, **witness):
    return Outcome("skipped", {k: _plain(v) for k, v in witness.items()}, reason)


@dataclass(frozen=True)
class CheckSpec:
    check_id: str
    statement: str
    func: Callable


CATALOGUE = {}


def check(check_id, statement):
    def register(func):
        CATALOGUE[check_id] = CheckSpec(check_id, statement, func)
        return func
    return register


# ---------------------------------------------------------------------------
# Shared per-ring computations
# ---------------------------------------------------------------------------

class Analysis:
    """Lazily computed facts about one ring, shared by every check on it."""

    def __init__(self, ring, complete_sets=None):
        self.ring = ring
        self.extra_sets = dict(complete_sets or {})

    def fmt(self, x):
        return self.ring.format(x)

    @cached_property
    def idempotents(self):
        return sorted(self.ring.idempotents())

    def cls(self, e):
        return classify_idempotent(self.ring, e)

    @cached_property
    def nontrivial_idempotents(self):
        ring = self.ring
        return [e for e in self.idempotents if e not in (ring.zero, ring.one)]

    @cached_property
    def peirce_trivial(self):
        return [e for e in self.idempotents if self.cls(e).peirce_trivial]

    @cached_property
    def ideals(self):
        return enumerate_ideals(self.ring)

    @cached_property
    def semiprime(self):
        return is_semiprime(self.ring)

    @cached_property
    def tree(self):
        if self.ring.is_zero_ring():
            raise NotApplicable("the zero ring has no Peirce tree")
        return npeirce_decompose(self.ring)

    def gmr(self, tn=True, min_n=2):
        ring = self.ring
        if not isinstance(ring, GmrRing):
            raise NotApplicable("not a generalized matrix ring")
        if ring.n < min_n:
            raise NotApplicable(f"{ring.label} has fewer than {min_n} diagonal rings")
        if tn and not ring.in_tn:
            raise NotApplicable(f"{ring.label} is not in T_n")
        return ring

    @cached_property
    def complete_sets(self):
        """Registered complete orthogonal sets of size at least two."""
        ring, sets, seen = self.ring, {}, set()
        candidates = []
        if isinstance(ring, GmrRing) and ring.n >= 2:
            candidates.append(("diagonal", ring.diagonal_units()))
        if not ring.is_zero_ring():
            flat = self.tree.flatten()
            if len(flat) > 1:
                candidates.append(("canonical", flat))
        candidates.extend(self.extra_sets.items())
        for name, es in candidates:
            key = tuple(sorted(es))
            if key not in seen:
                seen.add(key)
                sets[name] = list(es)
        return sets

    def sample(self, items, budget, salt):
        """Up to `budget` items, seeded; the flag says whether it is a sample."""
        items = list(items)
        if len(items) <= budget:
            return items, False
        rng = config.rng_for(f"{salt}:{self.ring.label}")
        picked = sorted(rng.choice(len(items), size=budget, replace=False))
        return [items[i] for i in picked], True

    def idempotent_pairs(self, salt, budget=None):
        budget = budget or config.current().pair_budget
        es = self.idempotents
        if len(es) ** 2 <= budget:
            return list(itertools.product(es, repeat=2)), False
        rng = config.rng_for(f"{salt}:{self.ring.label}")
        draws = rng.integers(len(es), size=(budget, 2))
        pairs = sorted({(es[i], es[j]) for i, j in draws})
        return pairs, True


def evaluate(check_id, analysis):
    """Run one check; exceptions become skipped or failed outcomes."""
    spec = CATALOGUE[check_id]
    try:
        return spec.func(analysis)
    except NotApplicable as exc:
        return skipped(str(exc))
    except BudgetExceeded as exc:
        return skipped(f"budget: {exc}", **exc.details)
    except RingAxiomError as exc:
        return failed(str(exc), **exc.witness)
    except RingError as exc:
        return failed(str(exc), **exc.details)
    except (KeyError, ValueError, ZeroDivisionError) as exc:
        # a corrupted ring can break internal tables; report it against the ring
        logger.debug("check %s raised", check_id, exc_info=True)
        return failed(f"{type(exc).__name__}: {exc}")


# ---------------------------------------------------------------------------
# Ring core
# ---------------------------------------------------------------------------

@check("ring-axioms", "associativity, distributivity and unity hold")
def ring_axioms(a):
    ring = a.ring
    validate_ring_axioms(ring)
    if isinstance(ring, GmrRing):
        validate_gmr(ring)
    return passed(sampled=ring.size > config.current().small_tier)


@check("idempotent-filter", "enumerated idempotents are exactly the solutions of x*x = x")
def idempotent_filter(a):
    ring = a.ring
    brute = [x for x in ring.element_list if ring.mul(x, x) == x]
    if brute != a.idempotents:
        extra = sorted(set(brute) ^ set(a.idempotents))
        return failed("idempotent enumeration disagrees with brute force",
                      element=a.fmt(extra[0]))
    if ring.zero not in brute or ring.one not in brute:
        return failed("0 or 1 missing from the idempotents")
    return passed(count=len(brute))


@check("quotient-homomorphism", "R -> R/I is a surjective homomorphism with cosets of size |I|")
def quotient_homomorphism(a):
    ring = a.ring
    config.require_tier(ring, "quotient checks")
    rng = config.rng_for(f"quotient:{ring.label}")
    extra = [ring.random_element(rng) for _ in range(6)]
    tests = list(ring.additive_generators) + extra
    for I in a.ideals:
        Q = quotient_ring(ring, I)
        reps = list(Q.elements())
        if len(reps) * I.size != ring.size:
            return failed("cosets do not partition the ring", ideal=I.label,
                          representatives=len(reps))
        if Q.project(ring.one) != Q.one:
            return failed("projection does not preserve 1", ideal=I.label)
        for x in tests:
            px = Q.project(x)
            for y in tests:
                py = Q.project(y)
                if Q.project(ring.add(x, y)) != Q.add(px, py):
                    return failed("projection is not additive", ideal=I.label,
                                  x=a.fmt(x), y=a.fmt(y))
                if Q.project(ring.mul(x, y)) != Q.mul(px, py):
                    return failed("projection is not multiplicative", ideal=I.label,
                                  x=a.fmt(x), y=a.fmt(y))
    return passed(ideals=len(a.ideals))


@check("radical-agreement", "J(R) = P(R), J(R) is quasi-regular, R/P simple for prime P")
def radical_agreement(a):
    ring = a.ring
    invariants = structure_invariants(ring)
    J = invariants.jacobson
    if ring.size <= 256:
        oracle = quasi_regular_radical(ring)
        if oracle.members != J.members:
            return failed("largest nilpotent ideal differs from the quasi-regular radical",
                          nilpotent=J.size, quasi_regular=oracle.size)
    for P in enumerate_ideals(ring, prime_only=True):
        quotient = quotient_ring(ring, P)
        if len(enumerate_ideals(quotient)) != 2:
            return failed("quotient by a prime ideal is not simple", ideal=P.describe())
    return passed(radical=J.size)


@check("annihilator-definition", "computed annihilators of ideals match their definition")
def annihilator_definition(a):
    ring = a.ring
    config.require_tier(ring, "annihilator checks")
    elements, sampled = a.sample(ring.element_list, 512, "annihilator")
    mul, zero = ring.mul, ring.zero
    for X in a.ideals:
        tests = X.sorted_members if X.size <= 64 else X.additive_generators
        for side in ("left", "right"):
            A = annihilator(ring, X, side)
            for x in set(elements) | set(A.members):
                if side == "right":
                    by_definition = all(mul(b, x) == zero for b in tests)
                else:
                    by_definition = all(mul(x, b) == zero for b in tests)
                if by_definition != (x in A.members):
                    return failed(f"{side} annihilator membership is wrong", ideal=X.label,
                                  element=a.fmt(x))
    return passed(sampled=sampled)


@check("ideal-closure", "every enumerated ideal is closed and the lattice is closed under sums")
def ideal_closure(a):
    ring = a.ring
    add, mul = ring.add, ring.mul
    rgens = ring.additive_generators
    found = {I.members for I in a.ideals}
    for I in a.ideals:
        gens = greedy_generators(ring, I.sorted_members)
        for x in I.sorted_members:
            for g in gens:
                if add(x, g) not in I.members:
                    return failed("ideal is not closed under addition", ideal=I.label,
                                  x=a.fmt(x), g=a.fmt(g))
        for g in gens:
            for r in rgens:
                if mul(r, g) not in I.members or mul(g, r) not in I.members:
                    return failed("ideal is not closed under multiplication by R",
                                  ideal=I.label, x=a.fmt(g), r=a.fmt(r))
    pairs, sampled = a.sample(itertools.combinations(a.ideals, 2),
                              config.current().pair_budget, "ideal-sums")
    for I, J in pairs:
        total = span(ring, list(I.additive_generators) + list(J.additive_generators))
        if total not in found:
            return failed("sum of two ideals is missing from the lattice",
                          left=I.label, right=J.label)
    return passed(sampled=sampled, ideals=len(a.ideals))


@check("semiprime-collapse", "in a semiprime ring every triviality class equals B(R)")
def semiprime_collapse(a):
    if not a.semiprime:
        raise NotApplicable("ring is not semiprime")
    for e in a.idempotents:
        c = a.cls(e)
        flags = (c.left_semicentral, c.right_semicentral, c.inner, c.outer)
        if any(flag != c.central for flag in flags):
            return failed("triviality classes differ in a semiprime ring",
                          idempotent=a.fmt(e), classes=c.memberships())
    return passed()


@check("semiprime-one-peirce", "a semiprime ring is 1-Peirce iff B(R) = {0, 1}")
def semiprime_one_peirce(a):
    ring = a.ring
    if ring.is_zero_ring() or not a.semiprime:
        raise NotApplicable("ring is not a nonzero semiprime ring")
    one_peirce = is_1_peirce(ring)
    central = central_idempotents(ring)
    if one_peirce != (len(central) == 2):
        return failed("1-Peirce verdict disagrees with the central idempotents",
                      one_peirce=one_peirce, central=[a.fmt(e) for e in central])
    return passed()


# ---------------------------------------------------------------------------
# Idempotent classification
# ---------------------------------------------------------------------------

def _corner_span(ring, left, right):
    """span{left g right} with the products used to generate it."""
    mul = ring.mul
    products = [mul(mul(left, g), right) for g in ring.additive_generators]
    return products, span(ring, products)


def _closed(ring, products, members, side):
    mul = ring.mul
    for p in products:
        for h in ring.additive_generators:
            q = mul(p, h) if side == "right" else mul(h, p)
            if q not in members:
                return False
    return True


def _kernel_vanishes(ring, e):
    """eRtRe = 0 for every t with ete = 0."""
    mul, zero = ring.mul, ring.zero
    kernel = [t for t in ring.element_list if mul(mul(e, t), e) == zero]
    gens = ring.additive_generators
    for t in greedy_generators(ring, kernel):
        for g in gens:
            egt = mul(mul(e, g), t)
            for h in gens:
                if mul(mul(egt, h), e) != zero:
                    return False
    return True


def _inside_left_annihilator(ring, e, f):
    """ReR is annihilated on the right by fRe."""
    mul, zero = ring.mul, ring.zero
    gens = ring.additive_generators
    rer = [mul(mul(g, e), h) for g in gens for h in gens]
    fre = [mul(mul(f, k), e) for k in gens]
    return all(mul(x, y) == zero for x in rer for y in fre)


def _pair_budget_per(a):
    return max(64, config.current().pair_budget // max(1, len(a.idempotents)))


@check("inner-equivalences", "seven characterizations of inner Peirce triviality agree")
def inner_equivalences(a):
    ring = a.ring
    config.require_tier(ring, "inner triviality equivalences")
    mul, one = ring.mul, ring.one
    gens = ring.additive_generators
    sampled_any = False
    for e in a.idempotents:
        f = ring.sub(one, e)
        ef, ef_members = _corner_span(ring, e, f)
        fe, fe_members = _corner_span(ring, f, e)
        pairs, sampled = a.sample(itertools.product(a.idempotents, repeat=2),
                                  _pair_budget_per(a), f"inner:{e}")
        sampled_any |= sampled
        idempotent_identity = all(
            mul(mul(mul(e, p), q), e) == mul(mul(mul(mul(e, p), e), q), e) for p, q in pairs)
        conditions = {
            "definition": a.cls(e).inner,
            "eRf_right_ideal": _closed(ring, ef, ef_members, "right"),
            "fRe_left_ideal": _closed(ring, fe, fe_members, "left"),
            "efge_identity": idempotent_identity,
            "corner_map_homomorphism": all(
                mul(mul(e, mul(x, y)), e) == mul(mul(mul(e, x), e), mul(mul(e, y), e))
                for x in gens for y in gens),
            "kernel_vanishes": _kernel_vanishes(ring, e),
            "ReR_annihilates_fRe": _inside_left_annihilator(ring, e, f),
        }
        exact = {k: v for k, v in conditions.items() if not (sampled and k == "efge_identity")}
        if len(set(exact.values())) > 1 or (not idempotent_identity and conditions["definition"]):
            return failed("inner triviality characterizations disagree",
                          idempotent=a.fmt(e),
                          conditions=", ".join(f"{k}={v}" for k, v in conditions.items()))
    return passed(sampled=sampled_any)


@check("outer-equivalences", "four characterizations of outer Peirce triviality agree")
def outer_equivalences(a):
    ring = a.ring
    mul, add, one = ring.mul, ring.add, ring.one
    sampled_any = False
    for e in a.idempotents:
        f = ring.sub(one, e)
        ef, ef_members = _corner_span(ring, e, f)
        fe, fe_members = _corner_span(ring, f, e)
        pairs, sampled = a.sample(itertools.product(a.idempotents, repeat=2),
                                  _pair_budget_per(a), f"outer:{e}")
        sampled_any |= sampled
        identity = True
        for p, q in pairs:
            pe, ep = mul(p, e), mul(e, p)
            epe = mul(ep, e)
            lhs = add(mul(pe, q), mul(mul(epe, q), e))
            rhs = add(mul(mul(pe, q), e), mul(epe, q))
            if lhs != rhs:
                identity = False
                break
        conditions = {
            "definition": a.cls(e).outer,
            "eRf_left_ideal": _closed(ring, ef, ef_members, "left"),
            "fRe_right_ideal": _closed(ring, fe, fe_members, "right"),
            "feg_identity": identity,
        }
        exact = {k: v for k, v in conditions.items() if not (sampled and k == "feg_identity")}
        if len(set(exact.values())) > 1 or (not identity and conditions["definition"]):
            return failed("outer triviality characterizations disagree",
                          idempotent=a.fmt(e),
                          conditions=", ".join(f"{k}={v}" for k, v in conditions.items()))
    return passed(sampled=sampled_any)


@check("trivial-equivalences", "four characterizations of Peirce triviality agree")
def trivial_equivalences(a):
    ring = a.ring
    for e in a.idempotents:
        f = ring.sub(ring.one, e)
        ef, ef_members = _corner_span(ring, e, f)
        fe, fe_members = _corner_span(ring, f, e)
        conditions = {
            "definition": a.cls(e).peirce_trivial,
            "eRf_ideal": (_closed(ring, ef, ef_members, "left")
                          and _closed(ring, ef, ef_members, "right")),
            "fRe_ideal": (_closed(ring, fe, fe_members, "left")
                          and _closed(ring, fe, fe_members, "right")),
            "e_and_f_inner": a.cls(e).inner and a.cls(f).inner,
        }
        if len(set(conditions.values())) > 1:
            return failed("Peirce triviality characterizations disagree", idempotent=a.fmt(e),
                          conditions=", ".join(f"{k}={v}" for k, v in conditions.items()))
        if a.cls(e).inner != a.cls(f).outer:
            return failed("e inner trivial but 1 - e not outer trivial (or conversely)",
                          idempotent=a.fmt(e))
    return passed()


@check("idempotent-products", "products of idempotents with inner or Peirce trivial factors")
def idempotent_products(a):
    ring = a.ring
    mul = ring.mul
    pairs, sampled = a.idempotent_pairs("products")
    for e, f in pairs:
        ce = a.cls(e)
        efe, fef = mul(mul(e, f), e), mul(mul(f, e), f)
        if ce.inner:
            ef, fe = mul(e, f), mul(f, e)
            if mul(efe, efe) != efe:
                return failed("efe is not idempotent for inner trivial e",
                              e=a.fmt(e), f=a.fmt(f))
            if ring.power(ef, 2) != ring.power(ef, 3) or ring.power(fe, 2) != ring.power(fe, 3):
                return failed("(ef)^2 != (ef)^3 or (fe)^2 != (fe)^3 for inner trivial e",
                              e=a.fmt(e), f=a.fmt(f))
        if ce.peirce_trivial and mul(fef, fef) != fef:
            return failed("fef is not idempotent for Peirce trivial e", e=a.fmt(e), f=a.fmt(f))
        if ce.inner and a.cls(f).inner:
            if not (a.cls(efe).inner and a.cls(fef).inner):
                return failed("efe or fef is not inner trivial", e=a.fmt(e), f=a.fmt(f))
    return passed(sampled=sampled)


@check("diagonal-entries", "diagonal entries of an inner trivial idempotent are inner trivial")
def diagonal_entries(a):
    G = a.gmr(min_n=1)
    for e in a.idempotents:
        if not a.cls(e).inner:
            continue
        for i in range(G.n):
            entry = G.entry(e, i, i)
            if not classify_idempotent(G.diagonal[i], entry).inner:
                return failed("diagonal entry is not inner trivial in its ring",
                              idempotent=a.fmt(e), index=i + 1)
    return passed()


@check("corner-heredity", "P_it(eRe) = eRe ∩ P_it(R) iff e in P_it; P_t(R) ∩ cRc ⊆ P_t(cRc)")
def corner_heredity(a):
    ring = a.ring
    es, sampled = a.sample(a.nontrivial_idempotents, CORNER_SAMPLE, "corner-heredity")
    for e in es:
        corner = corner_ring(ring, e)
        inside = [x for x in a.idempotents if x in corner.members]
        corner_inner = {x for x in inside if classify_idempotent(corner, x).inner}
        ambient_inner = {x for x in inside if a.cls(x).inner}
        if (corner_inner == ambient_inner) != a.cls(e).inner:
            return failed("inner trivial idempotents of eRe do not match e's class",
                          idempotent=a.fmt(e), inner=a.cls(e).inner)
        for x in inside:
            if a.cls(x).peirce_trivial and not classify_idempotent(corner, x).peirce_trivial:
                return failed("Peirce trivial idempotent of R loses triviality in cRc",
                              c=a.fmt(e), idempotent=a.fmt(x))
    return passed(sampled=sampled)


@check("ideal-heredity", "for an ideal I, the inner trivial idempotents of I are I ∩ P_it(R)")
def ideal_heredity(a):
    ring = a.ring
    pairs = [(I, e) for I in a.ideals if not I.is_zero()
             for e in a.idempotents if e in I.members]
    pairs, sampled = a.sample(pairs, config.current().pair_budget, "ideal-heredity")
    for I, e in pairs:
        inner, _ = classify_in_ideal(ring, I, e)
        if inner != a.cls(e).inner:
            return failed("inner triviality inside the ideal differs from R",
                          ideal=I.label, idempotent=a.fmt(e))
    return passed(sampled=sampled)


@check("semicentral-containment", "B ⊆ S_l ∩ S_r and S_l ∪ S_r ⊆ P_t")
def semicentral_containment(a):
    for e in a.idempotents:
        c = a.cls(e)
        if c.central and not (c.left_semicentral and c.right_semicentral):
            return failed("central idempotent is not semicentral", idempotent=a.fmt(e))
        if (c.left_semicentral or c.right_semicentral) and not c.peirce_trivial:
            return failed("semicentral idempotent is not Peirce trivial", idempotent=a.fmt(e))
    return passed()


# ---------------------------------------------------------------------------
# Transfer and special idempotent sets
# ---------------------------------------------------------------------------

@check("central-mod-radical", "P_it ∪ P_ot ⊆ E_P (central modulo the prime radical)")
def central_mod_radical(a):
    EP = set(central_mod_prime_radical(a.ring))
    for e in a.idempotents:
        c = a.cls(e)
        if (c.inner or c.outer) and e not in EP:
            return failed("trivial idempotent is not central modulo the prime radical",
                          idempotent=a.fmt(e))
    return passed(E_P=len(EP))


@check("lying-over", "primes lie over D(T) primes and R/(K∩R) has the order of T/K")
def lying_over(a):
    G = a.gmr()
    config.require_tier(G, "lying over")
    D = diagonal_parts(G).D
    d_members = frozenset(D.element_list)
    t_primes = enumerate_ideals(G, prime_only=True)
    for P in enumerate_ideals(D, prime_only=True):
        if not any(Q.members & d_members == P.members for Q in t_primes):
            return failed("prime ideal of D(T) has no prime of T lying over it",
                          prime=P.describe())
    for K in t_primes:
        meet = K.members & d_members
        if D.size * K.size != G.size * len(meet):
            return failed("D/(K∩D) and T/K have different orders", prime=K.describe())
    return passed(primes=len(t_primes))


@check("row-idempotents", "row idempotents E_k lie in P_it and |E_1| is the product of row orders")
def row_idempotents_check(a):
    G = a.gmr()
    for k in range(G.n):
        for e in row_idempotents(G, k):
            if not a.cls(e).inner:
                return failed("row idempotent is not inner trivial", row=k + 1,
                              idempotent=a.fmt(e))
    expected = math.prod(G.carriers[0][j].size for j in range(1, G.n))
    first = len(row_idempotents(G, 0))
    if first != expected:
        return failed("first row has the wrong number of idempotents", found=first,
                      expected=expected)
    return passed(first_row=first)


@check("generated-overring", "D(T) together with the row idempotents generates T")
def generated_overring(a):
    G = a.gmr()
    D = diagonal_parts(G).D
    rows = [e for k in range(G.n) for e in row_idempotents(G, k)]
    S = subring_generated(G, list(D.additive_generators) + rows)
    if S.size != G.size:
        return failed("generated subring is proper", generated=S.size, size=G.size)
    return passed()


@check("radical-transfer", "ρ(D(T)) = ρ(T) ∩ D(T) for the prime and Jacobson radicals")
def radical_transfer(a):
    G = a.gmr()
    config.require_tier(G, "radical transfer")
    D = diagonal_parts(G).D
    d_members = frozenset(D.element_list)
    for name, radical in (("Jacobson", jacobson_radical), ("prime", prime_radical)):
        if radical(D).members != radical(G).members & d_members:
            return failed(f"{name} radical of D(T) is not the trace of T's")
    return passed()


# ---------------------------------------------------------------------------
# Complete sets and T_n
# ---------------------------------------------------------------------------

@check("complete-set-criteria", "corner criteria for inner and outer triviality of a complete set")
def complete_set_criteria_check(a):
    if not a.complete_sets:
        raise NotApplicable("no complete set of two or more idempotents")
    for name, es in a.complete_sets.items():
        criteria = complete_set_criteria(a.ring, es)
        if not criteria["agrees"]:
            return failed("corner criteria disagree with the classification", set=name,
                          idempotents=[a.fmt(e) for e in es])
    return passed(sets=len(a.complete_sets))


@check("morita-idempotents", "idempotents of a T_2 ring and Peirce triviality with central corners")
def morita_idempotents(a):
    G = a.gmr()
    if G.n != 2:
        raise NotApplicable("needs a 2 x 2 generalized matrix ring")
    config.require_tier(G, "Morita idempotents")
    R1, R2 = G.diagonal
    M12, M21 = G.bimodules[(0, 1)], G.bimodules[(1, 0)]
    for x in G.element_list:
        e, m, n, f = x
        by_entries = (R1.mul(e, e) == e and R2.mul(f, f) == f
                      and M12.carrier.add(M12.left_action(e, m), M12.right_action(m, f)) == m
                      and M21.carrier.add(M21.right_action(n, e), M21.left_action(f, n)) == n)
        if by_entries != G.is_idempotent(x):
            return failed("entrywise idempotent test disagrees", element=a.fmt(x))
    for x in a.idempotents:
        e, _, _, f = x
        if (classify_idempotent(R1, e).central and classify_idempotent(R2, f).central
                and not a.cls(x).peirce_trivial):
            return failed("idempotent with central corners is not Peirce trivial",
                          idempotent=a.fmt(x))
    return passed()


@check("tn-agreement",
       "T_n ⇔ diagonal idempotents inner trivial ⇔ corners vanish ⇔ D^- right ideal")
def tn_agreement(a):
    ring = a.ring
    if isinstance(ring, GmrRing) and ring.n >= 2:
        decomposition = peirce_decompose(ring, ring.diagonal_units())
        verdicts = {"tn": ring.in_tn, "peirce_tn": decomposition.in_tn,
                    "all_inner": decomposition.all_inner,
                    "corners_vanish": decomposition.corners_vanish,
                    "dminus_right_ideal": decomposition.dminus_right_ideal}
        if len(set(verdicts.values())) > 1:
            witness = ring.tn_witness or {}
            return failed("T_n verdicts disagree on the diagonal set",
                          verdicts=", ".join(f"{k}={v}" for k, v in verdicts.items()),
                          **witness)
    if not a.complete_sets:
        raise NotApplicable("no complete set of two or more idempotents")
    for name, es in a.complete_sets.items():
        decomposition = peirce_decompose(ring, es)
        if not decomposition.agrees:
            return failed("T_n verdicts disagree", set=name,
                          idempotents=[a.fmt(e) for e in es])
        if not decomposition.isomorphism:
            return failed("x -> [e_i x e_j] is not an isomorphism", set=name)
    return passed(sets=len(a.complete_sets))


@check("diagonal-product", "the diagonal of a product is the product of diagonals iff T_n")
def diagonal_product(a):
    G = a.gmr(tn=False)
    gens = G.additive_generators
    holds, witness = True, {}
    for x in gens:
        for y in gens:
            xy = G.mul(x, y)
            for i in range(G.n):
                if G.entry(xy, i, i) != G.diagonal[i].mul(G.entry(x, i, i), G.entry(y, i, i)):
                    holds, witness = False, {"x": a.fmt(x), "y": a.fmt(y), "index": i + 1}
                    break
            if not holds:
                break
        if not holds:
            break
    if holds != G.in_tn:
        return failed("diagonal multiplicativity disagrees with the T_n verdict",
                      in_tn=G.in_tn, **(witness or G.tn_witness or {}))
    return passed()


def _check_parts(a, G, origin):
    parts = diagonal_parts(G)
    verified = parts.verified
    for key in ("ideal", "nilpotent", "projection_homomorphism", "quotient_bijective"):
        if key in verified and not verified[key]:
            extra = verified.get("ideal_witness") or verified.get("projection_witness") or {}
            return failed(f"off-diagonal part fails: {key}", ring=origin, **extra)
    if all(classify_idempotent(G, u).peirce_trivial for u in G.diagonal_units()):
        if not ideal_power(G, parts.Dminus, 2).is_zero():
            return failed("D^- does not square to zero over a Peirce trivial set", ring=origin)
    return None


@check("offdiagonal-nilpotent", "in T_n, D^- is an ideal with (D^-)^n = 0 and R/D^- ≅ ⊕R_i")
def offdiagonal_nilpotent(a):
    ring, checked = a.ring, 0
    if isinstance(ring, GmrRing) and ring.n >= 2 and ring.in_tn:
        outcome = _check_parts(a, ring, ring.label)
        if outcome:
            return outcome
        checked += 1
    if not isinstance(ring, GmrRing):
        for name, es in a.complete_sets.items():
            decomposition = peirce_decompose(ring, es)
            if decomposition.in_tn:
                outcome = _check_parts(a, decomposition.ring, name)
                if outcome:
                    return outcome
                checked += 1
    if not checked:
        raise NotApplicable("no decomposition in T_n with two or more corners")
    return passed(decompositions=checked)


@check("bounded-index", "nilpotence index of R is at most n times that of D(R)")
def bounded_index(a):
    G = a.gmr()
    D = diagonal_parts(G).D
    ours, diagonal = nilpotence_index(G), nilpotence_index(D)
    if ours > G.n * diagonal:
        return failed("nilpotence index exceeds n times the diagonal index", index=ours,
                      diagonal=diagonal, n=G.n)
    return passed(index=ours, diagonal=diagonal)


@check("commutator-nilpotent", "with a commutative diagonal, (xy - yx)^n = 0")
def commutator_nilpotent(a):
    G = a.gmr()
    if not diagonal_parts(G).D.is_commutative:
        raise NotApplicable("diagonal is not commutative")
    elements = G.element_list
    settings = config.current()
    if len(elements) ** 2 <= settings.pair_budget:
        pairs, sampled = list(itertools.product(elements, repeat=2)), False
    else:
        rng = config.rng_for(f"commutator:{G.label}")
        draws = rng.integers(len(elements), size=(settings.sample_pairs, 2))
        pairs, sampled = [(elements[i], elements[j]) for i, j in draws], True
    for x, y in pairs:
        c = G.sub(G.mul(x, y), G.mul(y, x))
        if G.power(c, G.n) != G.zero:
            return failed("commutator is not nilpotent of index n", x=a.fmt(x), y=a.fmt(y))
    return passed(sampled=sampled)


@check("subdirect-triangular", "psi embeds R in UT(R) x LT(R); a homomorphism for n = 2")
def subdirect_triangular(a):
    G = a.gmr()
    parts = triangular_parts(G)
    for sub, coordinate in ((parts.UT, 0), (parts.LT, 1)):
        for g in sub.additive_generators:
            if parts.psi(g)[coordinate] != g:
                return failed("triangular projection is not onto", ring=sub.label,
                              element=a.fmt(g))
    if not parts.homomorphism:
        if G.n == 2:
            return failed("psi is not multiplicative", **parts.witness)
        return skipped("psi is not multiplicative for n >= 3", **parts.witness)
    return passed()


@check("center-formula", "Cen(R) is the diagonal characterization and equals Cen(R bar)")
def center_formula(a):
    G = a.gmr(tn=False)
    config.require_tier(G, "centers")
    brute = center(G).members
    if gmr_center(G).members != brute:
        return failed("entrywise center differs from the brute-force center")
    try:
        barred = bar(G)
    except RingAxiomError as exc:
        return passed(bar=f"not a ring: {exc}")
    if center(barred).members != brute:
        return failed("Cen(R) differs from Cen(R bar)")
    return passed()


# ---------------------------------------------------------------------------
# Annihilating subrings
# ---------------------------------------------------------------------------

def _annihilating(a):
    G = a.gmr(tn=False)
    config.require_tier(G, "annihilating subrings")
    rla, rua = annihilating_subrings(G)
    return G, rla, rua


@check("annihilating-maximal", "R^la and R^ua lie in T_n and no larger entry keeps them there")
def annihilating_maximal(a):
    G, rla, rua = _annihilating(a)
    for S in (rla, rua):
        if not S.in_tn:
            return failed("annihilating subring is not in T_n", ring=S.label, **S.tn_witness)
    for i, j in itertools.permutations(range(G.n), 2):
        S = rla if i > j else rua
        into_i, into_j = G.raw_product(i, j, i), G.raw_product(j, i, j)
        back = G.carriers[j][i].additive_generators
        for m in G.carriers[i][j].element_list:
            if S.carriers[i][j].contains(m):
                continue
            blocked = any(into_i is not None and into_i(m, k) != G.diagonal[i].zero
                          or into_j is not None and into_j(k, m) != G.diagonal[j].zero
                          for k in back)
            if not blocked:
                return failed("entry outside the annihilator pairs to zero",
                              position=f"({i + 1},{j + 1})", entry=G.carriers[i][j].format(m))
    if G.n == 2:
        barred = bar(G)
        for S in (rla, rua):
            for x in S.additive_generators:
                for y in S.additive_generators:
                    if barred.mul(x, y) != G.mul(x, y):
                        return failed("products in the subring differ in R bar",
                                      x=a.fmt(x), y=a.fmt(y))
    return passed()


def _escape_witness(G, S, y):
    """s, t in S and an index with 0 != s y E_jj or E_ii y t in S."""
    sgens = S.additive_generators
    for i in range(G.n):
        E = G.unit(i)
        left, right = G.mul(E, y), G.mul(y, E)
        for t in sgens:
            z = G.mul(left, t)
            if z != G.zero and S.contains(z):
                return {"form": "E y t", "index": i + 1, "t": G.format(t), "product": G.format(z)}
            z = G.mul(t, right)
            if z != G.zero and S.contains(z):
                return {"form": "s y E", "index": i + 1, "s": G.format(t), "product": G.format(z)}
    return None


@check("annihilating-witness", "every y outside R^la or R^ua is pulled back into it nontrivially")
def annihilating_witness(a):
    G, rla, rua = _annihilating(a)
    sampled_any = False
    for S in (rla, rua):
        outside = [y for y in G.element_list if not S.contains(y)]
        outside, sampled = a.sample(outside, config.current().pair_budget,
                                    f"escape:{S.label}")
        sampled_any |= sampled
        for y in outside:
            if _escape_witness(G, S, y) is None:
                return failed("no witness pulls the element back", ring=S.label,
                              element=a.fmt(y))
    return passed(sampled=sampled_any)


@check("annihilating-essential",
       "every nonzero ideal meets R^la and R^ua; essential as bisubmodules")
def annihilating_essential(a):
    G, rla, rua = _annihilating(a)
    whole = Subset(G, G.element_list, label=G.label)
    for S in (rla, rua):
        members = frozenset(S.element_list)
        for I in enumerate_ideals(G):
            if not I.is_zero() and len(I.members & members) <= 1:
                return failed("nonzero ideal misses the annihilating subring", ring=S.label,
                              ideal=I.describe())
        if G.size <= config.current().pair_budget:
            inside = Subset(G, members, label=S.label)
            if not bisubmodule_essential(S, G, inside, whole):
                return failed("subring is not essential as a bisubmodule", ring=S.label)
    return passed()


@check("annihilating-center", "Cen(R) = Cen(R^la) ∩ Cen(R^ua) ⊆ Cen(D(R))")
def annihilating_center(a):
    G, rla, rua = _annihilating(a)
    ours = gmr_center(G).members
    meet = gmr_center(rla).members & gmr_center(rua).members
    if ours != meet:
        return failed("center differs from the meet of the annihilating centers",
                      center=len(ours), meet=len(meet))
    if not ours <= gmr_center(diagonal_parts(G).D).members:
        return failed("center is not inside Cen(D(R))")
    return passed(center=len(ours))


@check("unit-formula", "U(R bar) = U(D) + D^- and U(S) = U(D) + D(S)^- ⊆ U(R)")
def unit_formula(a):
    G, rla, rua = _annihilating(a)
    try:
        barred = bar(G)
    except RingAxiomError:
        barred = None
    if barred is not None and unit_group_decomposition(barred) != barred.units():
        return failed("unit formula for R bar differs from brute force")
    ambient_units = G.units()
    for S in (rla, rua):
        formula = sub_unit_formula(G, S)
        if formula != S.units():
            return failed("unit formula differs from brute force", ring=S.label)
        if not formula <= ambient_units:
            return failed("units of the subring are not units of R", ring=S.label)
    return passed()


@check("annihilating-inner-maximal", "R^la and R^ua have inner trivial E_ii and are maximal so")
def annihilating_inner_maximal(a):
    G, rla, rua = _annihilating(a)
    sampled_any = False
    for S in (rla, rua):
        for i in range(G.n):
            if not classify_idempotent(S, S.unit(i)).inner:
                return failed("E_ii is not inner trivial in the subring", ring=S.label,
                              index=i + 1)
        outside = [y for y in G.element_list if not S.contains(y)]
        outside, sampled = a.sample(outside, 8, f"maximal:{S.label}")
        sampled_any |= sampled
        for y in outside:
            T = subring_generated(G, list(S.additive_generators) + [y])
            bigger = SubRing(G, T.members, G.one, label=f"<{S.label}, y>")
            if all(classify_idempotent(bigger, G.unit(i)).inner for i in range(G.n)):
                return failed("a larger subring keeps every E_ii inner trivial", ring=S.label,
                              element=a.fmt(y))
    return passed(sampled=sampled_any)


# ---------------------------------------------------------------------------
# Extending properties
# ---------------------------------------------------------------------------

@check("semiprime-extending", "for semiprime R: ideal extending ⇔ quasi-Baer ⇔ FI-extending")
def semiprime_extending(a):
    if not a.semiprime:
        raise NotApplicable("ring is not semiprime")
    ring = a.ring
    verdicts = {"ideal_extending": is_ideal_extending(ring).holds,
                "quasi_baer": is_quasi_baer(ring).holds,
                "fi_extending": is_fi_extending_right(ring).holds}
    if len(set(verdicts.values())) > 1:
        return failed("extending verdicts disagree on a semiprime ring",
                      verdicts=", ".join(f"{k}={v}" for k, v in verdicts.items()))
    return passed(holds=verdicts["ideal_extending"])


@check("product-extending", "a product is ideal extending iff every factor is")
def product_extending(a):
    ring = a.ring
    if not isinstance(ring, ProductRing):
        raise NotApplicable("not a direct product")
    whole = is_ideal_extending(ring).holds
    factors = [is_ideal_extending(f).holds for f in ring.factors]
    if whole != all(factors):
        return failed("product verdict disagrees with the factors", product=whole,
                      factors=", ".join(str(v) for v in factors))
    return passed(holds=whole)


@check("matrix-extending", "R is ideal extending iff M_2(R) is")
def matrix_extending(a):
    ring = a.ring
    if ring.size > 8:
        raise NotApplicable("M_2 spot-check is limited to rings of at most 8 elements")
    ours = is_ideal_extending(ring).holds
    theirs = is_ideal_extending(matrix_ring(ring, 2)).holds
    if ours != theirs:
        return failed("R and M_2(R) disagree", ring_verdict=ours, matrix_verdict=theirs)
    return passed(holds=ours)


@check("annihilating-extending",
       "R^la ideal extending ⇒ each ideal is essential in eR, e in B(R^la)")
def annihilating_extending(a):
    G, rla, _ = _annihilating(a)
    if not is_ideal_extending(rla).holds:
        raise NotApplicable("R^la is not ideal extending")
    corners = [right_ideal_of(G, e) for e in central_idempotents(rla)]
    for X in enumerate_ideals(G):
        if not any(X.issubset(eR) and is_ideal_essential(G, X, eR) for eR in corners):
            return failed("ideal is essential in no eR with e central in R^la",
                          ideal=X.describe())
    return passed()


@check("triangular-extending", "A ideal extending ⇒ UT_2(A) ideal extending")
def triangular_extending(a):
    ring = a.ring
    if ring.size > 16 or isinstance(ring, GmrRing):
        raise NotApplicable("upper triangular spot-check needs a base ring of at most 16 elements")
    if not is_ideal_extending(ring).holds:
        raise NotApplicable("base ring is not ideal extending")
    UT = triangular_ring(ring, 2)
    if not is_ideal_extending(UT).holds:
        return failed("UT_2 over an ideal extending ring is not ideal extending", ring=UT.label)
    return passed()


@check("pattern-extending", "[[A, A], [X, A]] is ideal extending iff A is")
def pattern_extending(a):
    A = a.ring
    if A.size > 16 or isinstance(A, GmrRing):
        raise NotApplicable("pattern spot-check needs a base ring of at most 16 elements")
    base = is_ideal_extending(A).holds
    tried = 0
    for X in a.ideals:
        if A.size ** 3 * X.size > config.current().small_tier:
            continue
        corner = ZERO if X.is_zero() else Entry("ideal", tuple(X.additive_generators))
        R = theta_from_ambient(A, [[RING, RING], [corner, RING]],
                               label=f"[[A, A], [{X.label}, A]]")
        if is_ideal_extending(R).holds != base:
            return failed("pattern ring disagrees with its base", ideal=X.label, base=base)
        tried += 1
    if not tried:
        raise NotApplicable("every pattern ring is above the small tier")
    return passed(patterns=tried, holds=base)


def set_partitions(items):
    """Every partition of `items` into nonempty blocks, in a fixed order."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in set_partitions(rest):
        for k in range(len(partition)):
            yield partition[:k] + [[first] + partition[k]] + partition[k + 1:]
        yield [[first]] + partition


def block_compositions(n):
    """Partitions of 0..n-1 into runs of consecutive indices, in a fixed order."""
    if n == 0:
        yield []
        return
    for size in range(n, 0, -1):
        for rest in block_compositions(n - size):
            yield [list(range(size))] + [[i + size for i in b] for b in rest]


@check("block-partition", "regrouping a Peirce trivial complete set keeps every block ring in T_m")
def block_partition_check(a):
    ring, tried = a.ring, 0
    for name, es in a.complete_sets.items():
        n = len(es)
        if n < 3:
            continue
        trivial = all(a.cls(e).peirce_trivial for e in es)
        inner = all(a.cls(e).inner for e in es)
        if not (trivial or (n == 3 and inner)):
            continue
        # inner triviality alone covers groupings of consecutive idempotents only
        partitions = set_partitions(range(n)) if trivial else block_compositions(n)
        for partition in partitions:
            if len(partition) < 2:
                continue
            blocks = []
            for block in partition:
                total = ring.zero
                for i in block:
                    total = ring.add(total, es[i])
                blocks.append(total)
            if not peirce_decompose(ring, blocks).in_tn:
                return failed("block decomposition leaves T_m", set=name,
                              blocks="|".join("".join(str(i + 1) for i in b) for b in partition))
            tried += 1
    if not tried:
        raise NotApplicable("no complete set of three or more trivial idempotents")
    return passed(partitions=tried)


# ---------------------------------------------------------------------------
# Peirce structure
# ---------------------------------------------------------------------------

class _CornerCache:
    def __init__(self, ring):
        self.ring = ring
        self._one_peirce, self._trivial = {}, {}

    def one_peirce(self, e):
        if e not in self._one_peirce:
            self._one_peirce[e] = is_1_peirce(corner_ring(self.ring, e))
        return self._one_peirce[e]

    def peirce_trivial(self, c):
        if c not in self._trivial:
            C = corner_ring(self.ring, c)
            self._trivial[c] = [x for x in sorted(C.idempotents())
                                if classify_idempotent(C, x).peirce_trivial]
        return self._trivial[c]


def _one_peirce_pairs(a):
    ring = a.ring
    nonzero = [e for e in a.idempotents if e != ring.zero]
    es, sampled = a.sample(nonzero, CORNER_SAMPLE, "one-peirce-corners")
    corners = _CornerCache(ring)
    es = [e for e in es if corners.one_peirce(e)]
    pairs, more = a.sample(itertools.product(es, a.peirce_trivial),
                           config.current().pair_budget, "corner-pairs")
    return pairs, corners, sampled or more


@check("corner-criteria", "for eRe 1-Peirce and c in P_t: cec != 0 ⇔ ece = e ⇔ (1-c)e(1-c) = 0")
def corner_criteria(a):
    ring = a.ring
    mul, zero = ring.mul, ring.zero
    pairs, _, sampled = _one_peirce_pairs(a)
    for e, c in pairs:
        f = ring.sub(ring.one, c)
        flags = (mul(mul(c, e), c) != zero, mul(mul(e, c), e) == e,
                 mul(mul(f, e), f) == zero)
        if len(set(flags)) > 1:
            return failed("corner criteria disagree", e=a.fmt(e), c=a.fmt(c),
                          flags=", ".join(str(x) for x in flags))
    return passed(sampled=sampled, pairs=len(pairs))


@check("corner-one-peirce", "cec != 0 forces ece = e = ec'e and a 1-Peirce corner cecRcec")
def corner_one_peirce(a):
    ring = a.ring
    mul, zero = ring.mul, ring.zero
    pairs, corners, sampled = _one_peirce_pairs(a)
    for e, c in pairs:
        cec = mul(mul(c, e), c)
        if cec == zero:
            continue
        if mul(mul(e, c), e) != e:
            return failed("ece != e although cec != 0", e=a.fmt(e), c=a.fmt(c))
        if not corners.one_peirce(cec):
            return failed("cecRcec is not 1-Peirce", e=a.fmt(e), c=a.fmt(c))
        for c1 in corners.peirce_trivial(c):
            if mul(mul(c1, e), c1) != zero and mul(mul(e, c1), e) != e:
                return failed("ec'e != e for c' Peirce trivial in cRc", e=a.fmt(e),
                              c=a.fmt(c), c_prime=a.fmt(c1))
    return passed(sampled=sampled)


@check("split-count",
       "a Peirce trivial c splits a 1-Peirce complete set into |J1| + |J2| = n parts")
def split_count(a):
    ring = a.ring
    mul, zero = ring.mul, ring.zero
    es = a.tree.flatten()
    corners = _CornerCache(ring)
    cs = [c for c in a.peirce_trivial if c not in (ring.zero, ring.one)]
    if not cs:
        raise NotApplicable("no nontrivial Peirce trivial idempotent")
    cs, sampled = a.sample(cs, CORNER_SAMPLE, "split-count")
    for c in cs:
        f = ring.sub(ring.one, c)
        top = [mul(mul(c, e), c) for e in es]
        bottom = [mul(mul(f, e), f) for e in es]
        J1 = [x for x in top if x != zero]
        J2 = [x for x in bottom if x != zero]
        if len(J1) + len(J2) != len(es):
            return failed("|J1| + |J2| differs from n", c=a.fmt(c), J1=len(J1), J2=len(J2))
        for part, target in ((J1, c), (J2, f)):
            total = zero
            for x in part:
                total = ring.add(total, x)
            if total != target:
                return failed("split parts do not sum to c or 1 - c", c=a.fmt(c))
        check_complete_set(ring, J1 + J2)
        if not all(corners.one_peirce(x) for x in J1 + J2):
            return failed("a split part has a corner that is not 1-Peirce", c=a.fmt(c))
    return passed(sampled=sampled)


@check("npeirce-sets", "the canonical tree gives a complete P_it set with 1-Peirce corners in T_n")
def npeirce_sets(a):
    tree = a.tree
    failing = [k for k, v in tree.post_checks.items() if not v]
    if failing:
        return failed("canonical tree post-checks fail", checks=", ".join(failing))
    check_complete_set(a.ring, tree.flatten())
    return passed(peirce_number=tree.peirce_number)


@check("npeirce-bound", "a complete set with k_i-Peirce corners bounds the Peirce number by Σ k_i")
def npeirce_bound(a):
    ring = a.ring
    n = a.tree.peirce_number
    corners = _CornerCache(ring)
    tried = 0
    for name, es in a.complete_sets.items():
        if any(e == ring.zero for e in es):
            continue
        if all(corners.one_peirce(e) for e in es) and n > len(es):
            return failed("Peirce number exceeds a complete set with 1-Peirce corners",
                          set=name, peirce_number=n, size=len(es))
        if all(a.cls(e).inner for e in es):
            bound = sum(npeirce_decompose(corner_ring(ring, e)).peirce_number for e in es)
            if n > bound:
                return failed("Peirce number exceeds the sum over corners", set=name,
                              peirce_number=n, bound=bound)
        tried += 1
    notes = {"peirce_number": n}
    if ring.size <= config.current().exhaustive_limit:
        notes["achievable"] = ", ".join(str(k) for k in achievable_peirce_numbers(ring))
    if not tried:
        return passed(**notes)
    return passed(sets=tried, **notes)


@check("rer-strict", "e in P_it(cRc), e != c gives ReR strictly inside RcR")
def rer_strict(a):
    ring = a.ring
    cs, sampled = a.sample([c for c in a.idempotents if c != ring.zero], 16, "rer-strict")
    for c in cs:
        C = corner_ring(ring, c)
        RcR = ideal_generated(ring, [c])
        for e in sorted(C.idempotents()):
            if e == c or not classify_idempotent(C, e).inner:
                continue
            ReR = ideal_generated(ring, [e])
            if not ReR.members < RcR.members:
                return failed("ReR is not strictly inside RcR", c=a.fmt(c), e=a.fmt(e))
    return passed(sampled=sampled)


@check("rer-dcc", "along the canonical tree the ideals R b R strictly descend")
def rer_dcc(a):
    ring = a.ring
    for node, child in a.tree.splits():
        parent_ideal = ideal_generated(ring, [node.unity])
        child_ideal = ideal_generated(ring, [child.unity])
        if not child_ideal.members < parent_ideal.members:
            return failed("R b R does not descend along a split", parent=a.fmt(node.unity),
                          child=a.fmt(child.unity))
    return passed(depth=len(a.tree.splits()))


@check("rer-bound", "at most 2^n ideals ReR, each a sum of leaf ideals")
def rer_bound(a):
    view = rer_lattice(a.ring, a.tree)
    bound = view.bound
    if not bound.get("hypothesis"):
        return skipped("a leaf corner has inner trivial idempotents besides 0 and 1",
                       distinct=view.distinct_count, limit=bound.get("limit"))
    if not bound["within"]:
        return failed("more ReR ideals than 2^n", distinct=view.distinct_count,
                      limit=bound["limit"])
    if not bound.get("sums_match"):
        return failed("an ReR is not the sum of the leaf ideals it meets")
    return passed(distinct=view.distinct_count, limit=bound["limit"])


@check("prime-criterion", "R is prime iff it is quasi-Baer and 1-Peirce")
def prime_criterion(a):
    ring = a.ring
    if ring.is_zero_ring():
        raise NotApplicable("zero ring")
    prime = is_prime(ring)
    quasi_baer = is_quasi_baer(ring).holds
    one_peirce = is_1_peirce(ring)
    if prime != (quasi_baer and one_peirce):
        return failed("primeness disagrees with quasi-Baer and 1-Peirce", prime=prime,
                      quasi_baer=quasi_baer, one_peirce=one_peirce)
    return passed(prime=prime)


@check("quasi-baer-corners", "quasi-Baer with a 1-Peirce P_it complete set: every corner is prime")
def quasi_baer_corners(a):
    ring = a.ring
    if not is_quasi_baer(ring).holds:
        raise NotApplicable("ring is not quasi-Baer")
    tried = 0
    sets = dict(a.complete_sets)
    sets.setdefault("canonical", a.tree.flatten())
    corners = _CornerCache(ring)
    for name, es in sets.items():
        if not all(a.cls(e).inner and e != ring.zero and corners.one_peirce(e) for e in es):
            continue
        for e in es:
            if not is_prime(corner_ring(ring, e)):
                return failed("corner of a quasi-Baer ring is not prime", set=name,
                              idempotent=a.fmt(e))
        if len(es) > 1 and not peirce_decompose(ring, es).in_tn:
            return failed("decomposition is not in T_n", set=name)
        tried += 1
    if not tried:
        raise NotApplicable("no complete inner trivial set with 1-Peirce corners")
    return passed(sets=tried)


@check("tn-partitions", "for every 1 < k <= n a complete set of k idempotents lies in T_k")
def tn_partitions_check(a):
    tree = a.tree
    if tree.peirce_number < 2:
        raise NotApplicable("ring is 1-Peirce")
    rows = tn_partitions(a.ring, tree)
    for row in rows:
        if not row["in_tn"]:
            return failed("partial flattening leaves T_k", k=row["k"],
                          idempotents=[a.fmt(e) for e in row["idempotents"]])
    return passed(levels=len(rows))
