# peirce.py
"""
Peirce triviality of idempotents and Peirce decompositions.

For an idempotent e with f = 1 - e:
    inner Peirce trivial   eRfRe = 0
    outer Peirce trivial   fReRf = 0
    left semicentral       fRe = 0
    right semicentral      eRf = 0
Each is biadditive in the ring elements involved, so it is decided on
additive generators: eRfRe = 0 exactly when (e g f)(f h e) = 0 for all
generators g, h.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Optional

import config
from errors import IncompleteSetError, NotIdempotentError, NotInTnError
from gmr import GmrRing, dminus_right_witness, from_complete_set, is_Tn
from ring_core import prime_radical, quotient_ring

logger = logging.getLogger(__name__)

SET_NAMES = ("B", "S_l", "S_r", "P_it", "P_ot", "P_t")


@dataclass
class IdempotentClass:
    element: object
    central: bool
    left_semicentral: bool
    right_semicentral: bool
    inner: bool
    outer: bool
    inner_witness: Optional[dict] = None
    outer_witness: Optional[dict] = None

    @property
    def peirce_trivial(self):
        return self.inner and self.outer

    def memberships(self):
        flags = (self.central, self.left_semicentral, self.right_semicentral,
                 self.inner, self.outer, self.peirce_trivial)
        return [name for name, flag in zip(SET_NAMES, flags) if flag]


def _products(ring, e):
    f = ring.sub(ring.one, e)
    mul, zero = ring.mul, ring.zero
    gens = ring.additive_generators
    e_g_f = [(g, mul(mul(e, g), f)) for g in gens]
    f_g_e = [(g, mul(mul(f, g), e)) for g in gens]
    return ([(g, p) for g, p in e_g_f if p != zero],
            [(g, p) for g, p in f_g_e if p != zero])


def _first_nonzero_product(ring, lefts, rights):
    mul, zero = ring.mul, ring.zero
    for g, p in lefts:
        for h, q in rights:
            product = mul(p, q)
            if product != zero:
                return {"g": ring.format(g), "h": ring.format(h),
                        "product": ring.format(product)}
    return None


def classify_idempotent(ring, e):
    """Membership of e in B, S_l, S_r, P_it, P_ot and P_t (unital criteria)."""
    cache = ring.__dict__.setdefault("_peirce_classes", {})
    if e in cache:
        return cache[e]
    if not ring.is_idempotent(e):
        raise NotIdempotentError(f"{ring.format(e)} is not idempotent in {ring.label}")
    ef, fe = _products(ring, e)
    inner_witness = _first_nonzero_product(ring, ef, fe)
    outer_witness = _first_nonzero_product(ring, fe, ef)
    mul = ring.mul
    central = all(mul(e, g) == mul(g, e) for g in ring.additive_generators)
    cls = IdempotentClass(
        element=e,
        central=central,
        left_semicentral=not fe,
        right_semicentral=not ef,
        inner=inner_witness is None,
        outer=outer_witness is None,
        inner_witness=inner_witness,
        outer_witness=outer_witness,
    )
    cache[e] = cls
    return cls


def classify_in_ideal(ring, ideal, e):
    """Inner/outer triviality of e inside the (possibly non-unital) ring I.

    Uses the identities that do not mention 1:
        inner  exye = exeye
        outer  xey + exeye = xeye + exey
    for x, y ranging over additive generators of I.
    """
    if e not in ideal.members:
        raise NotIdempotentError(f"{ring.format(e)} is not in {ideal.label}")
    mul, add = ring.mul, ring.add
    gens = ideal.additive_generators
    inner = outer = True
    for x in gens:
        ex, xe = mul(e, x), mul(x, e)
        exe = mul(ex, e)
        for y in gens:
            exey = mul(exe, y)
            if inner and mul(mul(ex, y), e) != mul(exey, e):
                inner = False
            if outer:
                xey = mul(xe, y)
                if add(xey, mul(exey, e)) != add(mul(xey, e), exey):
                    outer = False
            if not inner and not outer:
                return False, False
    return inner, outer


@dataclass
class IdempotentReport:
    ring: object
    classes: list
    sets: dict
    complete_sets: dict = field(default_factory=dict)


def classification_report(ring, complete_sets=None):
    """Classify every idempotent and collect the six named sets."""
    classes = [classify_idempotent(ring, e) for e in sorted(ring.idempotents())]
    sets = {name: [c.element for c in classes if name in c.memberships()]
            for name in SET_NAMES}
    report = IdempotentReport(ring, classes, sets)
    for name, es in (complete_sets or {}).items():
        report.complete_sets[name] = complete_set_criteria(ring, es)
    return report


def check_complete_set(ring, idempotents):
    """Raise unless the idempotents are pairwise orthogonal and sum to 1."""
    es = list(idempotents)
    if not es:
        raise IncompleteSetError("an empty set of idempotents is not complete")
    for e in es:
        if not ring.is_idempotent(e):
            raise NotIdempotentError(f"{ring.format(e)} is not idempotent")
    for i, j in itertools.permutations(range(len(es)), 2):
        if ring.mul(es[i], es[j]) != ring.zero:
            raise IncompleteSetError(
                f"{ring.format(es[i])} and {ring.format(es[j])} are not orthogonal")
    total = ring.zero
    for e in es:
        total = ring.add(total, e)
    if total != ring.one:
        raise IncompleteSetError(f"idempotents sum to {ring.format(total)}, not 1")
    return es


def _corner_chain_vanishes(ring, a, b, c):
    """aRbRc = 0, decided on generators."""
    mul, zero = ring.mul, ring.zero
    gens = ring.additive_generators
    lefts = [p for p in (mul(mul(a, g), b) for g in gens) if p != zero]
    if not lefts:
        return True
    rights = [q for q in (mul(mul(b, h), c) for h in gens) if q != zero]
    return all(mul(p, q) == zero for p in lefts for q in rights)


def complete_set_criteria(ring, idempotents):
    """Corner criteria for inner/outer triviality of a complete set.

    e_i is inner trivial iff e_i R e_j R e_i = 0 for j != i, and e_j is outer
    trivial iff e_i R e_j R e_k = 0 for i, k != j. The whole set is outer
    trivial iff it is Peirce trivial.
    """
    es = check_complete_set(ring, idempotents)
    n = len(es)
    rows = []
    for i in range(n):
        cls = classify_idempotent(ring, es[i])
        inner_by_corners = all(_corner_chain_vanishes(ring, es[i], es[j], es[i])
                               for j in range(n) if j != i)
        outer_by_corners = all(_corner_chain_vanishes(ring, es[a], es[i], es[c])
                               for a in range(n) for c in range(n) if a != i and c != i)
        rows.append({"index": i + 1, "inner": cls.inner, "inner_by_corners": inner_by_corners,
                     "outer": cls.outer, "outer_by_corners": outer_by_corners,
                     "trivial": cls.peirce_trivial})
    all_outer = all(r["outer"] for r in rows)
    all_trivial = all(r["trivial"] for r in rows)
    agrees = (all(r["inner"] == r["inner_by_corners"] and r["outer"] == r["outer_by_corners"]
                  for r in rows) and all_outer == all_trivial)
    return {"rows": rows, "all_outer": all_outer, "all_trivial": all_trivial,
            "agrees": agrees}


@dataclass
class PeirceDecomposition:
    source: object
    idempotents: list
    ring: GmrRing
    h: Callable
    in_tn: bool
    all_inner: bool
    corners_vanish: bool
    dminus_right_ideal: bool
    isomorphism: bool
    dminus_witness: Optional[dict] = None

    @property
    def agrees(self):
        return self.in_tn == self.all_inner == self.corners_vanish == self.dminus_right_ideal


def _verify_isomorphism(ring, gmr, h, es):
    if gmr.size != ring.size:
        return False
    gens = ring.additive_generators
    n = len(es)
    for a in gens:
        ha = h(a)
        total = ring.zero
        for v in ha:
            total = ring.add(total, v)
        if total != a:
            return False
        for b in gens:
            if h(ring.add(a, b)) != gmr.add(ha, h(b)):
                return False
            if h(ring.mul(a, b)) != gmr.mul(ha, h(b)):
                return False
    return n == gmr.n


def peirce_decompose(ring, idempotents):
    """R^pi = [e_i R e_j] with its isomorphism and the four-way T_n verdict."""
    es = check_complete_set(ring, idempotents)
    gmr, h = from_complete_set(ring, es)
    n = len(es)
    dminus_witness = dminus_right_witness(gmr)
    decomposition = PeirceDecomposition(
        source=ring,
        idempotents=es,
        ring=gmr,
        h=h,
        in_tn=is_Tn(gmr).holds,
        all_inner=all(classify_idempotent(ring, e).inner for e in es),
        corners_vanish=all(_corner_chain_vanishes(ring, es[i], es[j], es[i])
                           for i, j in itertools.permutations(range(n), 2)),
        dminus_right_ideal=dminus_witness is None,
        isomorphism=_verify_isomorphism(ring, gmr, h, es),
        dminus_witness=dminus_witness,
    )
    logger.debug("decomposed %s over %d idempotents: T_n=%s", ring.label, n,
                 decomposition.in_tn)
    return decomposition


def central_mod_prime_radical(ring):
    """E_P(R): idempotents central modulo the prime radical."""
    config.require_tier(ring, "idempotents central modulo the prime radical")
    P = prime_radical(ring)
    quotient = quotient_ring(ring, P)
    gens = quotient.additive_generators
    result = []
    for e in sorted(ring.idempotents()):
        pe = quotient.project(e)
        if all(quotient.mul(pe, g) == quotient.mul(g, pe) for g in gens):
            result.append(e)
    return result


def row_idempotents(gmr, k):
    """E_k: t_kk = 1, t_kj arbitrary in M_kj, every other entry zero."""
    n = gmr.n
    choices = []
    for i in range(n):
        for j in range(n):
            if i != k:
                choices.append([gmr.carriers[i][j].zero])
            elif j == k:
                choices.append([gmr.diagonal[k].one])
            else:
                choices.append(gmr.carriers[k][j].element_list)
    return [tuple(x) for x in itertools.product(*choices)]


def special_idempotent_sets(ring):
    """(E_P, {k: E_k}); the rows need a GMR in T_n."""
    rows = {}
    if isinstance(ring, GmrRing):
        if not ring.in_tn:
            raise NotInTnError(f"{ring.label} is not in T_n", witness=ring.tn_witness)
        rows = {k + 1: row_idempotents(ring, k) for k in range(ring.n)}
    return central_mod_prime_radical(ring), rows
