# structure.py
"""
1-Peirce and n-Peirce rings, the ReR ideals, and the ideal-extending,
quasi-Baer and FI-extending tests.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

import config
from errors import RingError, TierExceededError, ZeroRingError
from peirce import classify_idempotent, peirce_decompose
from ring_core import (Subset, SubRing, annihilator, corner_ring, enumerate_ideals,
                       ideal_generated, right_ideal_of, span)

logger = logging.getLogger(__name__)


def nontrivial_peirce_trivial(ring):
    """Peirce trivial idempotents other than 0 and 1, ascending."""
    return [e for e in sorted(ring.idempotents())
            if e != ring.zero and e != ring.one and classify_idempotent(ring, e).peirce_trivial]


def is_1_peirce(ring):
    """P_t(R) = {0, 1}."""
    if ring.is_zero_ring():
        raise ZeroRingError("the zero ring is not 1-Peirce by convention")
    for e in sorted(ring.idempotents()):
        if e in (ring.zero, ring.one):
            continue
        if classify_idempotent(ring, e).peirce_trivial:
            return False
    return True


def central_idempotents(ring):
    return [e for e in sorted(ring.idempotents()) if classify_idempotent(ring, e).central]


def is_indecomposable(ring):
    return len(central_idempotents(ring)) == 2


@dataclass
class PeirceNode:
    ring: object
    split: object = None
    children: tuple = ()
    # leaves only: the scan showing the corner is 1-Peirce
    certificate: Optional[dict] = None

    @property
    def unity(self):
        return self.ring.one

    def leaves(self):
        if not self.children:
            return [self]
        return [leaf for child in self.children for leaf in child.leaves()]


@dataclass
class PeirceTree:
    root: PeirceNode
    post_checks: dict = field(default_factory=dict)

    @property
    def peirce_number(self):
        return len(self.root.leaves())

    def flatten(self):
        return [leaf.unity for leaf in self.root.leaves()]

    def splits(self):
        """(node, child) pairs along every split, parents before children."""
        pending, pairs = [self.root], []
        while pending:
            node = pending.pop(0)
            for child in node.children:
                pairs.append((node, child))
                pending.append(child)
        return pairs


def _canonical_split(node_ring):
    candidates = nontrivial_peirce_trivial(node_ring)
    if not candidates:
        return None
    sized = [(corner_ring(node_ring, e).size, e) for e in candidates]
    return min(sized)[1]


def one_peirce_certificate(ring):
    """Every nontrivial idempotent with the side on which it fails Peirce triviality."""
    es = sorted(ring.idempotents())
    nontrivial = [e for e in es if e != ring.zero and e != ring.one]
    classes = [classify_idempotent(ring, e) for e in nontrivial]
    return {"idempotents": len(es),
            "nontrivial_checked": len(nontrivial),
            "not_inner": sum(not c.inner for c in classes),
            "not_outer": sum(not c.outer for c in classes),
            "peirce_trivial": sum(c.peirce_trivial for c in classes)}


def _grow(node_ring):
    e = _canonical_split(node_ring)
    if e is None:
        return PeirceNode(node_ring, certificate=one_peirce_certificate(node_ring))
    f = node_ring.sub(node_ring.one, e)
    left = _grow(corner_ring(node_ring, e))
    right = _grow(corner_ring(node_ring, f))
    return PeirceNode(node_ring, split=e, children=(left, right))


def npeirce_decompose(ring):
    """The canonical Peirce tree.

    Each split uses the nontrivial Peirce trivial idempotent with the smallest
    corner eRe, ties broken by encoding. The leaf unities form a complete set
    of inner Peirce trivial idempotents whose decomposition lies in T_n.
    """
    if ring.is_zero_ring():
        raise ZeroRingError("the zero ring has no Peirce decomposition")
    tree = PeirceTree(_grow(ring))
    flat = tree.flatten()
    tree.post_checks["leaves_inner_trivial"] = all(
        classify_idempotent(ring, e).inner for e in flat)
    tree.post_checks["leaves_one_peirce"] = all(
        is_1_peirce(leaf.ring) for leaf in tree.root.leaves())
    if len(flat) > 1:
        tree.post_checks["decomposition_in_tn"] = peirce_decompose(ring, flat).in_tn
    else:
        tree.post_checks["decomposition_in_tn"] = True
    logger.info("%s is %d-Peirce", ring.label, tree.peirce_number)
    return tree


def achievable_peirce_numbers(ring):
    """Every n for which some split tree of R has n leaves."""
    limit = config.current().exhaustive_limit
    if ring.size > limit:
        raise TierExceededError(
            f"exhaustive Peirce search is limited to {limit} elements", size=ring.size,
            tier=limit)
    memo = {}

    def numbers(node_ring):
        key = frozenset(node_ring.members) if isinstance(node_ring, SubRing) else "root"
        if key in memo:
            return memo[key]
        result = set()
        for e in nontrivial_peirce_trivial(node_ring):
            f = node_ring.sub(node_ring.one, e)
            for a in numbers(corner_ring(node_ring, e)):
                for b in numbers(corner_ring(node_ring, f)):
                    result.add(a + b)
        if not result:
            result = {1}
        memo[key] = frozenset(result)
        return memo[key]

    return sorted(numbers(ring))


def partial_flattening(tree, k):
    """First k nodes obtained by expanding splits breadth-first from the root."""
    nodes = [tree.root]
    while len(nodes) < k:
        for index, node in enumerate(nodes):
            if node.children:
                nodes[index:index + 1] = list(node.children)
                break
        else:
            break
    return nodes


def tn_partitions(ring, tree=None):
    """For each 1 < k <= n a complete set of k idempotents with R^pi in T_k."""
    tree = tree or npeirce_decompose(ring)
    rows = []
    for k in range(2, tree.peirce_number + 1):
        nodes = partial_flattening(tree, k)
        es = [node.unity for node in nodes]
        rows.append({"k": k, "idempotents": es,
                     "in_tn": peirce_decompose(ring, es).in_tn})
    return rows


# ---------------------------------------------------------------------------
# Essentiality and the extending tests
# ---------------------------------------------------------------------------

def is_ideal_essential(ring, X, Y):
    """Every nonzero ideal of R inside Y meets X."""
    if not X.issubset(Y):
        raise RingError(f"{X.label} is not contained in {Y.label}")
    for I in enumerate_ideals(ring):
        if I.is_zero() or not I.issubset(Y):
            continue
        if not I.meets_nontrivially(X):
            return False
    return True


@dataclass
class ExtendingVerdict:
    prop: str
    holds: bool
    assignment: list = field(default_factory=list)
    failing: Optional[Subset] = None

    def __bool__(self):
        return self.holds


def is_ideal_extending(ring):
    """Each ideal X is ideal-essential in eR for some central idempotent e."""
    central = central_idempotents(ring)
    corners = [(e, right_ideal_of(ring, e)) for e in central]
    verdict = ExtendingVerdict("ideal-extending", True)
    for X in enumerate_ideals(ring):
        match = next((e for e, eR in corners
                      if X.issubset(eR) and is_ideal_essential(ring, X, eR)), None)
        if match is None:
            verdict.holds, verdict.failing = False, X
            return verdict
        verdict.assignment.append((X, match))
    return verdict


def is_quasi_baer(ring):
    """The right annihilator of every ideal is generated by an idempotent."""
    idempotents = sorted(ring.idempotents())
    verdict = ExtendingVerdict("quasi-Baer", True)
    for X in enumerate_ideals(ring):
        rX = annihilator(ring, X, "right")
        match = next((e for e in idempotents
                      if e in rX.members and right_ideal_of(ring, e).members == rX.members),
                     None)
        if match is None:
            verdict.holds, verdict.failing = False, X
            return verdict
        verdict.assignment.append((X, match))
    return verdict


def is_fi_extending_right(ring):
    """Each ideal X is essential as a right submodule of eR for some idempotent e."""
    idempotents = sorted(ring.idempotents())
    cyclic = {}

    def right_cyclic(y):
        if y not in cyclic:
            cyclic[y] = right_ideal_of(ring, y).members
        return cyclic[y]

    def essential_in(X, eR):
        return all(y in X.members or len(right_cyclic(y) & X.members) > 1
                   for y in eR.sorted_members if y != ring.zero)

    verdict = ExtendingVerdict("FI-extending", True)
    for X in enumerate_ideals(ring):
        match = None
        for e in idempotents:
            eR = right_ideal_of(ring, e)
            if X.issubset(eR) and essential_in(X, eR):
                match = e
                break
        if match is None:
            verdict.holds, verdict.failing = False, X
            return verdict
        verdict.assignment.append((X, match))
    return verdict


def bisubmodule_essential(S, ring, X, Y):
    """X essential in Y as (S, S)-bisubmodules of R.

    Every nonzero bisubmodule inside Y contains some C(y) = span{s y t} with
    y in Y and C(y) inside Y, so those are the only ones tested. Y itself need
    not be a bisubmodule (eR usually is not closed under S on the left).
    """
    if not X.issubset(Y):
        raise RingError(f"{X.label} is not contained in {Y.label}")
    tier = config.current().small_tier
    if Y.size > tier:
        raise TierExceededError(f"bisubmodule essentiality over {Y.size} elements",
                                size=Y.size, tier=tier)
    mul = ring.mul
    sgens = S.additive_generators
    for s in sgens:
        for w in X.additive_generators:
            if mul(s, w) not in X.members or mul(w, s) not in X.members:
                raise RingError(f"{X.label} is not an ({S.label}, {S.label})-bisubmodule")
    zero, inside, outer = ring.zero, X.members, Y.members
    for y in Y.sorted_members:
        if y == zero or y in inside:
            continue
        products, hit = [], False
        for s in sgens:
            sy = mul(s, y)
            for t in sgens:
                p = mul(sy, t)
                if p != zero and p in inside:
                    hit = True
                    break
                products.append(p)
            if hit:
                break
        if hit:
            continue
        cyclic = span(ring, products)
        if cyclic <= outer and len(cyclic & inside) <= 1:
            return False
    return True


# ---------------------------------------------------------------------------
# ReR ideals
# ---------------------------------------------------------------------------

@dataclass
class IdealLatticeView:
    ring: object
    ideals: list
    rer: dict
    bound: dict = field(default_factory=dict)

    @property
    def distinct_count(self):
        return len(self.rer)

    def essential_pairs(self):
        """Index pairs (i, j) with ideals[i] ideal-essential in ideals[j]."""
        pairs = []
        for i, X in enumerate(self.ideals):
            for j, Y in enumerate(self.ideals):
                if X.issubset(Y) and is_ideal_essential(self.ring, X, Y):
                    pairs.append((i, j))
        return pairs


def rer_lattice(ring, tree=None):
    """The distinct ideals ReR over e in P_it(R), with the leaf-count bound.

    When every leaf corner b R b of the canonical tree has no inner trivial
    idempotents besides 0 and b, each ReR is the sum of the R b R it meets and
    there are at most 2^n of them.
    """
    ideals = enumerate_ideals(ring)
    inner = [e for e in sorted(ring.idempotents()) if classify_idempotent(ring, e).inner]
    rer = {}
    for e in inner:
        ReR = ideal_generated(ring, [e], label=f"R{ring.format(e)}R")
        rer.setdefault(ReR.members, (e, ReR))
    view = IdealLatticeView(ring, ideals, rer)
    if ring.is_zero_ring():
        return view
    tree = tree or npeirce_decompose(ring)
    leaves = tree.flatten()
    hypothesis = all(
        [x for x in leaf.ring.idempotents() if classify_idempotent(leaf.ring, x).inner]
        == sorted({leaf.ring.zero, leaf.unity})
        for leaf in tree.root.leaves())
    view.bound = {"leaves": len(leaves), "hypothesis": hypothesis,
                  "limit": 2 ** len(leaves), "within": len(rer) <= 2 ** len(leaves)}
    if hypothesis:
        mul = ring.mul
        leaf_ideals = [ideal_generated(ring, [b]) for b in leaves]
        sums_match = True
        for members, (e, _) in rer.items():
            J = [i for i, b in enumerate(leaves) if mul(mul(b, e), b) != ring.zero]
            gens = [g for i in J for g in leaf_ideals[i].additive_generators]
            if span(ring, gens) != members:
                sums_match = False
                break
        view.bound["sums_match"] = sums_match
    return view
