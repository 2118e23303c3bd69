# gmr.py
"""
Generalized matrix rings.

A GmrRing has diagonal rings R_1..R_n, an (R_i, R_j)-bimodule M_ij in every
off-diagonal position, and pairings M_ij x M_jk -> M_ik for i != j != k.
Elements are flat row-major tuples of entry encodings. Indices are 0-based in
code and 1-based (E11, (2,1,2)) in anything a user reads.
"""

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional

import config
from errors import (AssociativityError, BalanceError, BimoduleAxiomError,
                    ContainmentError, IdentityError, NotInTnError, RingError)
from ring_core import (QuotientRing, Ring, Subset, SubRing, Carrier,
                       ideal_generated, ideal_power, make_product,
                       quotient_ring, span, subring_generated, center)

logger = logging.getLogger(__name__)

TABLE_LIMIT = 4096
SCAN_LIMIT = 65536


def one_based(*indices):
    return "(" + ",".join(str(i + 1) for i in indices) + ")"


@dataclass
class Bimodule:
    carrier: Carrier
    left_action: Callable
    right_action: Callable
    label: str = ""


@dataclass
class Pairing:
    """theta_ijk : M_ij x M_jk -> M_ik; func None means the zero map."""
    func: Optional[Callable]
    kind: str = "custom"

    @property
    def is_zero(self):
        return self.func is None


ZERO_PAIRING = Pairing(None, "zero")


class GmrRing(Ring):

    def __init__(self, diagonal, bimodules, pairings, label=None, validate=True):
        self.n = n = len(diagonal)
        if n < 1:
            raise RingError("a generalized matrix ring needs at least one diagonal ring")
        self.diagonal = list(diagonal)
        self.bimodules = dict(bimodules)
        self.pairings = dict(pairings)
        for i, j in itertools.permutations(range(n), 2):
            if (i, j) not in self.bimodules:
                raise RingError(f"missing bimodule in position {one_based(i, j)}")
        for i, j, k in itertools.product(range(n), repeat=3):
            if i != j and j != k and (i, j, k) not in self.pairings:
                raise RingError(f"missing theta for {one_based(i, j, k)}",
                                triple=one_based(i, j, k))
        self.carriers = [[self.diagonal[i] if i == j else self.bimodules[(i, j)].carrier
                          for j in range(n)] for i in range(n)]
        self.label = label or "[" + "; ".join(
            ", ".join(self.carriers[i][j].label for j in range(n)) for i in range(n)) + "]"
        flat = [c for row in self.carriers for c in row]
        self._flat = flat
        self._zeros = [c.zero for c in flat]
        self._adders = [_tabulated_add(c) for c in flat]
        self._negs = [c.neg for c in flat]
        self._grid = [[[self._compiled_product(i, j, k) for k in range(n)]
                       for j in range(n)] for i in range(n)]
        if validate:
            validate_gmr(self)

    # -- entry products -------------------------------------------------

    def raw_product(self, i, j, k):
        """The map C_ij x C_jk -> C_ik, or None for the zero pairing."""
        if i == j == k:
            return self.diagonal[i].mul
        if i == j:
            return self.bimodules[(i, k)].left_action
        if j == k:
            return self.bimodules[(i, j)].right_action
        pairing = self.pairings[(i, j, k)]
        return pairing.func

    def entry_product(self, i, j, k, a, b):
        f = self.raw_product(i, j, k)
        return self.carriers[i][k].zero if f is None else f(a, b)

    def _compiled_product(self, i, j, k):
        f = self.raw_product(i, j, k)
        if f is None:
            return None
        left, right, target = self.carriers[i][j], self.carriers[j][k], self.carriers[i][k]
        zero = target.zero
        if left.size * right.size <= TABLE_LIMIT:
            table = {}
            for a in left.element_list:
                for b in right.element_list:
                    c = f(a, b)
                    if c != zero:
                        table[(a, b)] = c
            if not table:
                return None
            return lambda a, b, _t=table: _t.get((a, b))

        def product(a, b):
            c = f(a, b)
            return None if c == zero else c
        return product

    # -- ring interface -------------------------------------------------

    @cached_property
    def size(self):
        total = 1
        for c in self._flat:
            total *= c.size
        return total

    @cached_property
    def zero(self):
        return tuple(self._zeros)

    @cached_property
    def one(self):
        return tuple(self.diagonal[i].one if i == j else self._zeros[i * self.n + j]
                     for i in range(self.n) for j in range(self.n))

    def add(self, a, b):
        return tuple(f(x, y) for f, x, y in zip(self._adders, a, b))

    def neg(self, a):
        return tuple(f(x) for f, x in zip(self._negs, a))

    def mul(self, x, y):
        n = self.n
        zeros, adders, grid = self._zeros, self._adders, self._grid
        out = list(zeros)
        for i in range(n):
            bi = i * n
            for j in range(n):
                a = x[bi + j]
                if a == zeros[bi + j]:
                    continue
                row = grid[i][j]
                bj = j * n
                for k in range(n):
                    f = row[k]
                    if f is None:
                        continue
                    b = y[bj + k]
                    if b == zeros[bj + k]:
                        continue
                    c = f(a, b)
                    if c is not None:
                        p = bi + k
                        out[p] = adders[p](out[p], c)
        return tuple(out)

    def elements(self):
        return itertools.product(*(c.element_list for c in self._flat))

    def contains(self, x):
        return (isinstance(x, tuple) and len(x) == self.n * self.n
                and all(c.contains(v) for c, v in zip(self._flat, x)))

    def _generators(self):
        gens = []
        for p, c in enumerate(self._flat):
            for g in c.additive_generators:
                entry = list(self._zeros)
                entry[p] = g
                gens.append(tuple(entry))
        return gens

    def random_element(self, rng):
        return tuple(c.random_element(rng) for c in self._flat)

    def format(self, x):
        n = self.n
        rows = []
        for i in range(n):
            rows.append("[" + ", ".join(self.carriers[i][j].format(x[i * n + j])
                                        for j in range(n)) + "]")
        return "[" + ", ".join(rows) + "]"

    # -- matrix helpers -------------------------------------------------

    def entry(self, x, i, j):
        return x[i * self.n + j]

    def single(self, i, j, m):
        """The element with m in position (i, j) and zeros elsewhere."""
        entries = list(self._zeros)
        entries[i * self.n + j] = m
        return tuple(entries)

    def unit(self, i):
        """Matrix unit E_ii."""
        return self.single(i, i, self.diagonal[i].one)

    def diagonal_units(self):
        return [self.unit(i) for i in range(self.n)]

    def diagonal_of(self, x):
        n = self.n
        return tuple(x[p] if p // n == p % n else self._zeros[p] for p in range(n * n))

    def off_diagonal_of(self, x):
        n = self.n
        return tuple(self._zeros[p] if p // n == p % n else x[p] for p in range(n * n))

    def block_sum(self, indices):
        """Sum of E_ii over `indices`."""
        total = self.zero
        for i in indices:
            total = self.add(total, self.unit(i))
        return total

    # -- T_n ------------------------------------------------------------

    @cached_property
    def tn_witness(self):
        """First nonzero product M_ij x M_ji -> R_i.

        Every pair is scanned when the carriers are small; larger ones are
        scanned on additive generators, which suffices for a biadditive pairing.
        """
        for i, j in itertools.permutations(range(self.n), 2):
            f = self.raw_product(i, j, i)
            if f is None:
                continue
            zero = self.diagonal[i].zero
            left, right = self.carriers[i][j], self.carriers[j][i]
            if left.size * right.size <= SCAN_LIMIT:
                lefts, rights = left.element_list, right.element_list
            else:
                lefts, rights = left.additive_generators, right.additive_generators
            for a in lefts:
                for b in rights:
                    value = f(a, b)
                    if value != zero:
                        return {"position": one_based(i, j, i),
                                "left": self.carriers[i][j].format(a),
                                "right": self.carriers[j][i].format(b),
                                "product": self.diagonal[i].format(value)}
        return None

    @property
    def in_tn(self):
        return self.tn_witness is None

    def _idempotent_candidates(self):
        if not self.in_tn:
            return self.element_list
        # Over T_n the diagonal entries of an idempotent are idempotents of R_i.
        choices = []
        for i in range(self.n):
            for j in range(self.n):
                if i == j:
                    choices.append(sorted(self.diagonal[i].idempotents()))
                else:
                    choices.append(self.carriers[i][j].element_list)
        return itertools.product(*choices)

    def restricted(self, carriers, label=None, validate=True):
        """Same products, smaller carriers; `carriers` maps (i, j) to a sub-carrier."""
        diagonal = [carriers.get((i, i), self.diagonal[i]) for i in range(self.n)]
        bimodules = {}
        for key, bimodule in self.bimodules.items():
            if key in carriers:
                bimodule = Bimodule(carriers[key], bimodule.left_action,
                                    bimodule.right_action, bimodule.label)
            bimodules[key] = bimodule
        ring = GmrRing(diagonal, bimodules, self.pairings, label=label, validate=False)
        if validate:
            check_containment(ring)
        return ring


def _tabulated_add(carrier):
    if carrier.size * carrier.size > TABLE_LIMIT or carrier.size > 256:
        return carrier.add
    table = {(a, b): carrier.add(a, b)
             for a in carrier.element_list for b in carrier.element_list}
    return lambda a, b, _t=table: _t[(a, b)]


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def _check_additive(name, f, A, B, target, settings, rng, error):
    """f(a1 + a2, b) = f(a1, b) + f(a2, b) and the same in the second slot."""
    limit = settings.small_tier * 16
    if A.size * A.size * B.size <= limit:
        triples = ((a1, a2, b) for a1 in A.element_list for a2 in A.element_list
                   for b in B.element_list)
    else:
        triples = ((A.random_element(rng), A.random_element(rng), B.random_element(rng))
                   for _ in range(settings.sample_pairs))
    for a1, a2, b in triples:
        if f(A.add(a1, a2), b) != target.add(f(a1, b), f(a2, b)):
            raise error(f"{name} is not additive in its first argument",
                        {"a1": a1, "a2": a2, "b": b})
    if A.size * B.size * B.size <= limit:
        triples = ((a, b1, b2) for a in A.element_list for b1 in B.element_list
                   for b2 in B.element_list)
    else:
        triples = ((A.random_element(rng), B.random_element(rng), B.random_element(rng))
                   for _ in range(settings.sample_pairs))
    for a, b1, b2 in triples:
        if f(a, B.add(b1, b2)) != target.add(f(a, b1), f(a, b2)):
            raise error(f"{name} is not additive in its second argument",
                        {"a": a, "b1": b1, "b2": b2})


def check_containment(ring):
    """Every entry product of generators lands in its target carrier."""
    n = ring.n
    for i, j, k in itertools.product(range(n), repeat=3):
        f = ring.raw_product(i, j, k)
        if f is None:
            continue
        target = ring.carriers[i][k]
        for a in ring.carriers[i][j].additive_generators:
            for b in ring.carriers[j][k].additive_generators:
                value = f(a, b)
                if not target.contains(value):
                    raise ContainmentError(
                        f"product {one_based(i, j, k)} leaves {target.label}",
                        {"triple": one_based(i, j, k), "left": a, "right": b,
                         "product": value})


def validate_gmr(ring):
    """Bimodule, pairing and associativity laws for a generalized matrix ring.

    Additivity is checked exhaustively on small carriers and on seeded samples
    otherwise. Every multiplicative law (action associativity, balance,
    bimodule homomorphism, the associativity relation) is an instance of
    (ab)c = a(bc) over an index quadruple, and is checked on all generator
    triples.
    """
    settings = config.current()
    rng = config.rng_for(f"gmr:{ring.label}")
    n = ring.n
    check_containment(ring)
    for i, j in itertools.permutations(range(n), 2):
        bimodule = ring.bimodules[(i, j)]
        M, R, S = bimodule.carrier, ring.diagonal[i], ring.diagonal[j]
        _check_additive(f"left action on {one_based(i, j)}", bimodule.left_action,
                        R, M, M, settings, rng, BimoduleAxiomError)
        _check_additive(f"right action on {one_based(i, j)}", bimodule.right_action,
                        M, S, M, settings, rng, BimoduleAxiomError)
        for m in M.additive_generators:
            if bimodule.left_action(R.one, m) != m or bimodule.right_action(m, S.one) != m:
                raise IdentityError(f"unity does not act trivially on {one_based(i, j)}",
                                    {"m": m})
    for (i, j, k), pairing in ring.pairings.items():
        if pairing.is_zero:
            continue
        _check_additive(f"theta {one_based(i, j, k)}", pairing.func,
                        ring.carriers[i][j], ring.carriers[j][k], ring.carriers[i][k],
                        settings, rng, BalanceError)
    gens = [[ring.carriers[i][j].additive_generators for j in range(n)] for i in range(n)]
    for i, j, k, l in itertools.product(range(n), repeat=4):
        for a in gens[i][j]:
            for b in gens[j][k]:
                ab = ring.entry_product(i, j, k, a, b)
                for c in gens[k][l]:
                    left = ring.entry_product(i, k, l, ab, c)
                    right = ring.entry_product(i, j, l, a, ring.entry_product(j, k, l, b, c))
                    if left == right:
                        continue
                    witness = {"indices": one_based(i, j, k, l), "a": a, "b": b, "c": c,
                               "left": left, "right": right}
                    if j == k and i != j and k != l:
                        raise BalanceError(
                            f"theta {one_based(i, j, l)} is not balanced over R_{j + 1}",
                            witness, triple=one_based(i, j, l))
                    raise AssociativityError(
                        f"associativity fails for indices {one_based(i, j, k, l)}", witness)
    logger.debug("validated %s", ring.label)


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Entry:
    """An entry of an ambient-style matrix: ring | subring | ideal | quotient | zero."""
    kind: str
    gens: tuple = ()


RING = Entry("ring")
ZERO = Entry("zero")


def _entry_carrier(ambient, entry):
    gens = ", ".join(ambient.format(g) for g in entry.gens)
    if entry.kind == "ring":
        return ambient
    if entry.kind == "subring":
        sub = subring_generated(ambient, entry.gens)
        return SubRing(ambient, sub.members, ambient.one, label=f"<{gens}>")
    if entry.kind == "ideal":
        return ideal_generated(ambient, entry.gens, label=f"({gens})")
    if entry.kind == "quotient":
        modulus = ideal_generated(ambient, entry.gens, label=f"({gens})")
        return quotient_ring(ambient, modulus)
    if entry.kind == "zero":
        return Subset(ambient, [ambient.zero], label="0")
    raise RingError(f"unknown entry kind {entry.kind!r}")


def theta_from_ambient(ambient, entries, zero_thetas=(), label=None, validate=True):
    """A GMR whose entries live in one ambient ring and multiply through it.

    `entries` is an n x n grid of Entry values; diagonal entries must be rings.
    `zero_thetas` lists 1-based triples whose pairing is forced to zero.
    Products whose source is a quotient must not depend on the coset
    representative; otherwise ContainmentError is raised.
    """
    n = len(entries)
    if any(len(row) != n for row in entries):
        raise RingError("ambient entries must form a square grid")
    carriers = [[_entry_carrier(ambient, entries[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        if not isinstance(carriers[i][i], Ring):
            raise RingError(f"diagonal entry {i + 1} must be a ring, not {entries[i][i].kind}")
    forced_zero = {tuple(t - 1 for t in triple) for triple in zero_thetas}

    def projector(carrier):
        if isinstance(carrier, QuotientRing):
            return carrier.project
        return None

    def product(i, j, k):
        project = projector(carriers[i][k])
        mul = ambient.mul
        if project is None:
            return mul
        return lambda a, b: project(mul(a, b))

    def is_zero_triple(i, j, k):
        return (i, j, k) in forced_zero or isinstance(carriers[i][k], Subset) and \
            carriers[i][k].is_zero()

    for i, j, k in itertools.product(range(n), repeat=3):
        if is_zero_triple(i, j, k):
            continue
        f, target = product(i, j, k), carriers[i][k]
        for side, source, other in ((0, carriers[i][j], carriers[j][k]),
                                    (1, carriers[j][k], carriers[i][j])):
            if not isinstance(source, QuotientRing):
                continue
            for z in source.ideal.additive_generators:
                for b in other.additive_generators:
                    value = f(z, b) if side == 0 else f(b, z)
                    if value != target.zero:
                        raise ContainmentError(
                            f"product {one_based(i, j, k)} depends on the coset representative",
                            {"triple": one_based(i, j, k), "modulus_element": z,
                             "other": b, "product": value})

    diagonal = [carriers[i][i] for i in range(n)]
    bimodules, pairings = {}, {}
    for i, j in itertools.permutations(range(n), 2):
        bimodules[(i, j)] = Bimodule(carriers[i][j], product(i, i, j), product(i, j, j),
                                     carriers[i][j].label)
    for i, j, k in itertools.product(range(n), repeat=3):
        if i != j and j != k:
            pairings[(i, j, k)] = (ZERO_PAIRING if is_zero_triple(i, j, k)
                                   else Pairing(product(i, j, k), "ambient"))
    return GmrRing(diagonal, bimodules, pairings, label=label, validate=validate)


def pattern_ring(base, pattern, label=None):
    """Matrices over `base` that vanish where the 0/1 pattern is 0."""
    n = len(pattern)
    for i in range(n):
        if not pattern[i][i]:
            raise RingError("a pattern ring needs every diagonal entry")
    entries = [[RING if pattern[i][j] else ZERO for j in range(n)] for i in range(n)]
    return theta_from_ambient(base, entries, label=label)


def triangular_ring(base, n, side="upper"):
    if side not in ("upper", "lower"):
        raise RingError("side must be 'upper' or 'lower'")
    pattern = [[int(i <= j) if side == "upper" else int(i >= j) for j in range(n)]
               for i in range(n)]
    tag = "UT" if side == "upper" else "LT"
    return pattern_ring(base, pattern, label=f"{tag}{n}({base.label})")


def matrix_ring(base, n):
    return pattern_ring(base, [[1] * n for _ in range(n)], label=f"M{n}({base.label})")


def from_complete_set(ring, idempotents, label=None):
    """The Peirce GMR [e_i R e_j] of a complete set and the map x -> [e_i x e_j]."""
    mul = ring.mul
    es = list(idempotents)
    gens = ring.additive_generators
    corners = {}
    for i, ei in enumerate(es):
        for j, ej in enumerate(es):
            members = span(ring, [mul(mul(ei, g), ej) for g in gens])
            corners[(i, j)] = members
    n = len(es)
    diagonal = [SubRing(ring, corners[(i, i)], es[i],
                        label=f"e{i + 1}Re{i + 1}") for i in range(n)]
    bimodules = {(i, j): Bimodule(Subset(ring, corners[(i, j)], label=f"e{i + 1}Re{j + 1}"),
                                  mul, mul)
                 for i, j in itertools.permutations(range(n), 2)}
    pairings = {(i, j, k): Pairing(mul, "corner")
                for i, j, k in itertools.product(range(n), repeat=3) if i != j and j != k}
    gmr = GmrRing(diagonal, bimodules, pairings,
                  label=label or f"Peirce[{ring.label}]", validate=False)
    check_containment(gmr)

    def h(x):
        return tuple(mul(mul(ei, x), ej) for ei in es for ej in es)
    return gmr, h


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

@dataclass
class TnVerdict:
    holds: bool
    witness: Optional[dict] = None


def is_Tn(ring):
    """Whether every pairing M_ij x M_ji -> R_i vanishes."""
    witness = ring.tn_witness
    return TnVerdict(witness is None, witness)


def bar(ring):
    """The ring with every theta_iji replaced by zero (re-validated)."""
    pairings = {key: (ZERO_PAIRING if key[0] == key[2] else p)
                for key, p in ring.pairings.items()}
    return GmrRing(ring.diagonal, ring.bimodules, pairings,
                   label=f"bar {ring.label}", validate=True)


@dataclass
class DiagonalParts:
    D: GmrRing
    Dminus: Subset
    verified: dict = field(default_factory=dict)


def _zero_carrier(ring, i, j):
    return Subset(ring.carriers[i][j], [ring.carriers[i][j].zero], label="0")


def diagonal_parts(ring):
    """D(G) as a GMR and D(G)^- as a subset of G.

    For G in T_n, D(G)^- is checked to be an ideal with (D(G)^-)^n = 0 and the
    diagonal projection to be a homomorphism with kernel D(G)^-.
    """
    n = ring.n
    D = ring.restricted({(i, j): _zero_carrier(ring, i, j)
                         for i, j in itertools.permutations(range(n), 2)},
                        label=f"D({ring.label})")
    off = [ring.carriers[i][j].element_list if i != j else [ring.carriers[i][j].zero]
           for i in range(n) for j in range(n)]
    Dminus = Subset(ring, itertools.product(*off), label=f"D({ring.label})^-")
    parts = DiagonalParts(D, Dminus)
    if ring.in_tn:
        parts.verified = verify_diagonal_parts(ring, parts)
    else:
        witness = dminus_right_witness(ring)
        parts.verified = {"right_ideal": witness is None}
        if witness is not None:
            parts.verified["right_ideal_witness"] = witness
    return parts


def dminus_right_witness(ring):
    """x in D(G)^- and g in G with xg outside D(G)^-, or None when D(G)^- G lies in D(G)^-."""
    zero = ring.zero
    for i, j in itertools.permutations(range(ring.n), 2):
        for m in ring.carriers[i][j].additive_generators:
            x = ring.single(i, j, m)
            for g in ring.additive_generators:
                product = ring.mul(x, g)
                if ring.diagonal_of(product) != zero:
                    return {"x": ring.format(x), "g": ring.format(g),
                            "xg": ring.format(product)}
    return None


def verify_diagonal_parts(ring, parts):
    D, Dminus = parts.D, parts.Dminus
    zero = ring.zero
    result = {"ideal": True, "nilpotent": True, "projection_homomorphism": True}
    offending = next(((x, g) for x in Dminus.additive_generators
                      for g in ring.additive_generators
                      if ring.diagonal_of(ring.mul(x, g)) != zero
                      or ring.diagonal_of(ring.mul(g, x)) != zero), None)
    if offending is not None:
        result["ideal"] = False
        result["ideal_witness"] = {"x": ring.format(offending[0]),
                                   "g": ring.format(offending[1])}
    if result["ideal"]:
        result["nilpotent"] = ideal_power(ring, Dminus, ring.n).is_zero()
    gens = ring.additive_generators
    for a in gens:
        for b in gens:
            if ring.diagonal_of(ring.mul(a, b)) != D.mul(ring.diagonal_of(a), ring.diagonal_of(b)):
                result["projection_homomorphism"] = False
                result["projection_witness"] = {"a": ring.format(a), "b": ring.format(b)}
                return result
    if ring.size <= config.current().small_tier and result["ideal"]:
        quotient = quotient_ring(ring, Dminus)
        images = {ring.diagonal_of(rep) for rep in quotient.elements()}
        result["quotient_bijective"] = len(images) == quotient.size == D.size
    return result


def annihilator_in_bimodule(ring, i, j):
    """r_{M_ij}(M_ji) ∩ l_{M_ij}(M_ji) inside M_ij."""
    carrier = ring.carriers[i][j]
    back = ring.carriers[j][i].additive_generators
    into_j = ring.raw_product(j, i, j)
    into_i = ring.raw_product(i, j, i)
    zero_i, zero_j = ring.diagonal[i].zero, ring.diagonal[j].zero
    members = []
    for m in carrier.element_list:
        if into_j is not None and any(into_j(b, m) != zero_j for b in back):
            continue
        if into_i is not None and any(into_i(m, b) != zero_i for b in back):
            continue
        members.append(m)
    return Subset(carrier, members, label=f"Ann{one_based(i, j)}")


def annihilating_subrings(ring):
    """(R^la, R^ua): lower (resp. upper) entries cut down to annihilators."""
    n = ring.n
    lower = {(i, j): annihilator_in_bimodule(ring, i, j)
             for i, j in itertools.permutations(range(n), 2) if i > j}
    upper = {(i, j): annihilator_in_bimodule(ring, i, j)
             for i, j in itertools.permutations(range(n), 2) if i < j}
    rla = ring.restricted(lower, label=f"{ring.label}^la")
    rua = ring.restricted(upper, label=f"{ring.label}^ua")
    return rla, rua


@dataclass
class TriangularParts:
    UT: GmrRing
    LT: GmrRing
    product: Ring
    psi: Callable
    homomorphism: bool
    witness: Optional[dict] = None


def triangular_parts(ring):
    """UT(G), LT(G) and psi(x) = (upper part, lower part) into UT x LT.

    psi is checked on generator pairs. It is multiplicative for n = 2; for
    n >= 3 a product through a lower entry can land above the diagonal, and
    the first such pair is reported as the witness.
    """
    if not ring.in_tn:
        raise NotInTnError(f"{ring.label} is not in T_n", witness=ring.tn_witness)
    n = ring.n
    UT = ring.restricted({(i, j): _zero_carrier(ring, i, j)
                          for i, j in itertools.permutations(range(n), 2) if i > j},
                         label=f"UT({ring.label})")
    LT = ring.restricted({(i, j): _zero_carrier(ring, i, j)
                          for i, j in itertools.permutations(range(n), 2) if i < j},
                         label=f"LT({ring.label})")
    product = make_product([UT, LT])
    zeros = ring.zero

    def psi(x):
        upper = tuple(x[p] if p // n <= p % n else zeros[p] for p in range(n * n))
        lower = tuple(x[p] if p // n >= p % n else zeros[p] for p in range(n * n))
        return (upper, lower)

    gens = ring.additive_generators
    for a in gens:
        for b in gens:
            if psi(ring.mul(a, b)) != product.mul(psi(a), psi(b)):
                return TriangularParts(UT, LT, product, psi, False,
                                       {"a": ring.format(a), "b": ring.format(b),
                                        "product": ring.format(ring.mul(a, b))})
    return TriangularParts(UT, LT, product, psi, True)


def block_partition(ring, groups):
    """Regroup the diagonal of a GMR: groups of 1-based indices become blocks."""
    indices = sorted(i for g in groups for i in g)
    if indices != list(range(1, ring.n + 1)):
        raise RingError(f"{groups} is not a partition of 1..{ring.n}")
    idempotents = [ring.block_sum([i - 1 for i in g]) for g in groups]
    label = "|".join("".join(str(i) for i in g) for g in groups)
    return from_complete_set(ring, idempotents, label=f"{ring.label} blocks {label}")


def gmr_center(ring):
    """Diagonal c with c_ii central in R_i and c_ii m = m c_jj on every M_ij."""
    centers = [center(R).sorted_members for R in ring.diagonal]
    n = ring.n
    members = []
    for diag in itertools.product(*centers):
        ok = True
        for i, j in itertools.permutations(range(n), 2):
            bimodule = ring.bimodules[(i, j)]
            for m in bimodule.carrier.additive_generators:
                if bimodule.left_action(diag[i], m) != bimodule.right_action(m, diag[j]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            members.append(_diagonal_element(ring, diag))
    return Subset(ring, members, label=f"Cen({ring.label})")


def _diagonal_element(ring, diag):
    entries = list(ring.zero)
    for i, d in enumerate(diag):
        entries[i * ring.n + i] = d
    return tuple(entries)


def unit_group_decomposition(ring):
    """U(G) = U(D) + D^- for G in T_n."""
    if not ring.in_tn:
        raise NotInTnError(f"{ring.label} is not in T_n", witness=ring.tn_witness)
    unit_diagonals = [sorted(R.units()) for R in ring.diagonal]
    off = _off_diagonal_members(ring, ring)
    units = set()
    for diag in itertools.product(*unit_diagonals):
        u = _diagonal_element(ring, diag)
        for x in off:
            units.add(ring.add(u, x))
    return frozenset(units)


def _off_diagonal_members(ring, sub):
    n = ring.n
    off = [sub.carriers[i][j].element_list if i != j else [sub.carriers[i][j].zero]
           for i in range(n) for j in range(n)]
    return list(itertools.product(*off))


def sub_unit_formula(ring, sub):
    """{u + y : u in U(D(G)), y in D(S)^-} for S = R^la or R^ua."""
    unit_diagonals = [sorted(R.units()) for R in ring.diagonal]
    off = _off_diagonal_members(ring, sub)
    units = set()
    for diag in itertools.product(*unit_diagonals):
        u = _diagonal_element(ring, diag)
        for y in off:
            units.add(ring.add(u, y))
    return frozenset(units)


def units_generated(ring, generators):
    """Multiplicative closure of a set of units."""
    generators = list(generators)
    group = {ring.one}
    frontier = [ring.one]
    while frontier:
        following = []
        for x in frontier:
            for g in generators:
                y = ring.mul(x, g)
                if y not in group:
                    group.add(y)
                    following.append(y)
        frontier = following
    return frozenset(group)


def with_corrupted_pairing(ring):
    """Copy of `ring` whose theta_121 is corrupted in two places.

    (0, 0) goes to the unity of R_1, which matrix multiplication never sees
    because it skips zero entries, so only a scan of the pairing notices. The
    first pair of nonzero generators of M_12 and M_21 gets the unity added to
    its product, which breaks additivity, associativity and T_n membership.
    """
    if ring.n < 2:
        raise RingError("corruption needs at least two diagonal rings")
    original = ring.pairings[(0, 1, 0)]
    R1 = ring.diagonal[0]
    zero_left, zero_right = ring.carriers[0][1].zero, ring.carriers[1][0].zero
    one = R1.one
    base = original.func or (lambda a, b: R1.zero)
    lefts = [m for m in ring.carriers[0][1].additive_generators if m != zero_left]
    rights = [n for n in ring.carriers[1][0].additive_generators if n != zero_right]
    shifted = (lefts[0], rights[0]) if lefts and rights else None

    def corrupted(a, b):
        if a == zero_left and b == zero_right:
            return one
        if (a, b) == shifted:
            return R1.add(base(a, b), one)
        return base(a, b)

    pairings = dict(ring.pairings)
    pairings[(0, 1, 0)] = Pairing(corrupted, "corrupted")
    return GmrRing(ring.diagonal, ring.bimodules, pairings,
                   label=f"{ring.label} (corrupted theta)", validate=False)
