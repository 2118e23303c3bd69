# ring_core.py
"""
Finite unital rings with canonical element encodings.

Encodings by constructor:
    cyclic Z_n          -> int in [0, n)
    product             -> tuple of factor encodings
    monomial quotient   -> tuple of coefficients over the monomial basis
    Cayley tables       -> int index
    subrings, subsets   -> the parent's encodings
    quotients           -> the smallest encoding in the coset

Every carrier enumerates its elements in ascending encoding order, so two runs
with the same inputs walk rings, idempotents and ideals in the same order.

Operations that are additive in each argument are checked on additive
generators instead of on every element: a biadditive identity that holds on
generators holds everywhere.
"""

import itertools
import logging
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property

import numpy as np

import config
from errors import (AdditionAxiomError, AssociativityError, CapExceededError,
                    DistributivityError, IdentityError, NotAnIdealError,
                    RingError, TierExceededError)

logger = logging.getLogger(__name__)

# Mutation hook for the verification suite: when set, span() silently loses
# the largest element it produced.
_drop_last_in_span = False


def set_span_mutation(enabled):
    global _drop_last_in_span
    _drop_last_in_span = bool(enabled)


# ---------------------------------------------------------------------------
# Carriers
# ---------------------------------------------------------------------------

class Carrier(ABC):
    """A finite abelian group with canonical, sortable element encodings."""

    label = "carrier"

    @property
    @abstractmethod
    def size(self):
        ...

    @property
    @abstractmethod
    def zero(self):
        ...

    @abstractmethod
    def add(self, a, b):
        ...

    @abstractmethod
    def neg(self, a):
        ...

    @abstractmethod
    def elements(self):
        """Iterate the elements in ascending encoding order."""

    @abstractmethod
    def contains(self, x):
        ...

    @abstractmethod
    def _generators(self):
        ...

    @cached_property
    def additive_generators(self):
        return tuple(self._generators())

    @cached_property
    def element_list(self):
        limit = config.current().enumeration_limit
        if self.size > limit:
            raise TierExceededError(
                f"refusing to enumerate {self.label} with {self.size} elements",
                size=self.size, tier=limit)
        return list(self.elements())

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def multiple(self, x, k):
        """k·x for an integer k >= 0."""
        result, base = self.zero, x
        while k:
            if k & 1:
                result = self.add(result, base)
            base = self.add(base, base)
            k >>= 1
        return result

    def random_element(self, rng):
        elements = self.element_list
        return elements[int(rng.integers(len(elements)))]

    def format(self, x):
        return str(x)

    def __repr__(self):
        return f"<{type(self).__name__} {self.label} |{self.size}|>"


class Ring(Carrier):
    """A finite ring with identity."""

    @property
    @abstractmethod
    def one(self):
        ...

    @abstractmethod
    def mul(self, a, b):
        ...

    def power(self, x, k):
        if k < 1:
            raise ValueError("powers start at 1")
        result, base = None, x
        while k:
            if k & 1:
                result = base if result is None else self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def is_zero_ring(self):
        return self.size == 1

    @cached_property
    def characteristic(self):
        return additive_order(self, self.one)

    @cached_property
    def is_commutative(self):
        gens = self.additive_generators
        return all(self.mul(a, b) == self.mul(b, a) for a in gens for b in gens)

    def is_idempotent(self, x):
        return self.mul(x, x) == x

    def idempotents(self):
        return self._idempotents

    @cached_property
    def _idempotents(self):
        return tuple(x for x in self._idempotent_candidates() if self.mul(x, x) == x)

    def _idempotent_candidates(self):
        return self.element_list

    def units(self):
        return self._units

    @cached_property
    def _units(self):
        units = set()
        one = self.one
        for x in self.element_list:
            if x in units:
                continue
            powers, p, seen = [x], x, {x}
            while True:
                if p == one:
                    units.update(powers)
                    break
                p = self.mul(p, x)
                if p in seen:
                    break
                seen.add(p)
                powers.append(p)
        return frozenset(units)


def additive_order(carrier, x):
    order, acc = 1, x
    while acc != carrier.zero:
        acc = carrier.add(acc, x)
        order += 1
    return order


# ---------------------------------------------------------------------------
# Additive spans
# ---------------------------------------------------------------------------

def _extend_span(carrier, members, g):
    """members + <g> for a subgroup `members` (a set, not modified)."""
    if g in members:
        return members
    coset_shifts = []
    t = g
    while t not in members:
        coset_shifts.append(t)
        t = carrier.add(t, g)
    grown = set(members)
    add = carrier.add
    for s in members:
        for shift in coset_shifts:
            grown.add(add(s, shift))
    return grown


def span(carrier, gens):
    """Additive subgroup generated by `gens`, as a frozenset."""
    members = {carrier.zero}
    for g in gens:
        members = _extend_span(carrier, members, g)
    if _drop_last_in_span and len(members) > 1:
        members.discard(max(members))
    return frozenset(members)


def greedy_generators(carrier, elements):
    """Pick, in order, each element not already in the span of those picked."""
    gens, spanned = [], {carrier.zero}
    for x in elements:
        if x not in spanned:
            gens.append(x)
            spanned = _extend_span(carrier, spanned, x)
    return gens


# ---------------------------------------------------------------------------
# Concrete rings
# ---------------------------------------------------------------------------

class CyclicRing(Ring):

    def __init__(self, n):
        self.n = n
        self.label = f"Z{n}"

    @property
    def size(self):
        return self.n

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1 % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def elements(self):
        return iter(range(self.n))

    def contains(self, x):
        return isinstance(x, int) and 0 <= x < self.n

    def _generators(self):
        return [1] if self.n > 1 else []

    def random_element(self, rng):
        return int(rng.integers(self.n))


class ProductRing(Ring):

    def __init__(self, factors):
        self.factors = tuple(factors)
        self.label = " x ".join(
            f"({f.label})" if isinstance(f, ProductRing) else f.label
            for f in self.factors)

    @cached_property
    def size(self):
        return int(np.prod([f.size for f in self.factors], dtype=object))

    @cached_property
    def zero(self):
        return tuple(f.zero for f in self.factors)

    @cached_property
    def one(self):
        return tuple(f.one for f in self.factors)

    def add(self, a, b):
        return tuple(f.add(x, y) for f, x, y in zip(self.factors, a, b))

    def neg(self, a):
        return tuple(f.neg(x) for f, x in zip(self.factors, a))

    def mul(self, a, b):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    def elements(self):
        return itertools.product(*(f.element_list for f in self.factors))

    def contains(self, x):
        return (isinstance(x, tuple) and len(x) == len(self.factors)
                and all(f.contains(c) for f, c in zip(self.factors, x)))

    def _generators(self):
        gens = []
        for i, factor in enumerate(self.factors):
            for g in factor.additive_generators:
                entry = list(self.zero)
                entry[i] = g
                gens.append(tuple(entry))
        return gens

    def random_element(self, rng):
        return tuple(f.random_element(rng) for f in self.factors)

    def format(self, x):
        return "(" + ", ".join(f.format(c) for f, c in zip(self.factors, x)) + ")"

    def _idempotent_candidates(self):
        return itertools.product(*(f.idempotents() for f in self.factors))


_MONOMIAL_FACTOR = re.compile(r"^([A-Za-z]\w*)(?:\^(\d+))?$")


def parse_monomial(text, variables):
    """'x^2*y' -> exponent tuple over `variables`."""
    if isinstance(text, (list, tuple)):
        exps = tuple(int(e) for e in text)
        if len(exps) != len(variables) or min(exps) < 0:
            raise RingError(f"bad exponent vector {text!r}")
        return exps
    exps = [0] * len(variables)
    for factor in str(text).replace(" ", "").split("*"):
        match = _MONOMIAL_FACTOR.match(factor)
        if not match or match.group(1) not in variables:
            raise RingError(f"cannot read monomial {text!r}")
        exps[variables.index(match.group(1))] += int(match.group(2) or 1)
    return tuple(exps)


def _divides(small, big):
    return all(s <= b for s, b in zip(small, big))


class MonomialQuotientRing(Ring):
    """Z_m[x_1..x_k] modulo monomial relations, nilpotent in every variable."""

    def __init__(self, modulus, variables, relations):
        if modulus < 2:
            raise RingError("coefficient modulus must be at least 2")
        self.modulus = modulus
        self.variables = tuple(variables)
        self.relations = tuple(parse_monomial(r, self.variables) for r in relations)
        bounds = []
        for v in range(len(self.variables)):
            pure = [r[v] for r in self.relations
                    if r[v] > 0 and all(e == 0 for w, e in enumerate(r) if w != v)]
            if not pure:
                raise RingError(
                    f"variable {self.variables[v]} has no power relation, "
                    "so the quotient is infinite")
            bounds.append(min(pure))
        candidates = itertools.product(*(range(b) for b in bounds))
        basis = [e for e in candidates
                 if not any(_divides(r, e) for r in self.relations)]
        basis.sort(key=lambda e: (sum(e), tuple(-c for c in e)))
        self.basis = basis
        index = {e: i for i, e in enumerate(basis)}
        self._table = [[index.get(tuple(a + b for a, b in zip(ea, eb)), -1)
                        for eb in basis] for ea in basis]
        rels = ", ".join(self._monomial_text(r) for r in self.relations)
        self.label = f"Z{modulus}[{','.join(self.variables)}]/({rels})"

    def _monomial_text(self, exps):
        parts = []
        for var, e in zip(self.variables, exps):
            if e == 1:
                parts.append(var)
            elif e > 1:
                parts.append(f"{var}^{e}")
        return "*".join(parts) or "1"

    @property
    def size(self):
        return self.modulus ** len(self.basis)

    @cached_property
    def zero(self):
        return (0,) * len(self.basis)

    @cached_property
    def one(self):
        return (1,) + (0,) * (len(self.basis) - 1)

    def add(self, a, b):
        m = self.modulus
        return tuple((x + y) % m for x, y in zip(a, b))

    def neg(self, a):
        m = self.modulus
        return tuple((-x) % m for x in a)

    def mul(self, a, b):
        m = self.modulus
        out = [0] * len(self.basis)
        table = self._table
        for i, ca in enumerate(a):
            if not ca:
                continue
            row = table[i]
            for j, cb in enumerate(b):
                if cb and row[j] >= 0:
                    t = row[j]
                    out[t] = (out[t] + ca * cb) % m
        return tuple(out)

    def elements(self):
        return itertools.product(range(self.modulus), repeat=len(self.basis))

    def contains(self, x):
        return (isinstance(x, tuple) and len(x) == len(self.basis)
                and all(isinstance(c, int) and 0 <= c < self.modulus for c in x))

    def _generators(self):
        k = len(self.basis)
        return [tuple(1 if i == j else 0 for j in range(k)) for i in range(k)]

    def random_element(self, rng):
        return tuple(int(c) for c in rng.integers(self.modulus, size=len(self.basis)))

    def monomial(self, text):
        """Basis element for a monomial such as 'x^2'."""
        exps = parse_monomial(text, self.variables)
        if exps not in self.basis:
            return self.zero
        k = self.basis.index(exps)
        return tuple(1 if i == k else 0 for i in range(len(self.basis)))

    def format(self, x):
        terms = []
        for c, exps in zip(x, self.basis):
            if not c:
                continue
            mono = self._monomial_text(exps)
            if mono == "1":
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) or "0"


class TableRing(Ring):
    """Ring given by Cayley tables over indices 0..n-1."""

    def __init__(self, add_table, mul_table, zero, one, label=None):
        self._add = add_table.tolist()
        self._mul = mul_table.tolist()
        self._neg = [row.index(zero) for row in self._add]
        self._zero = zero
        self._one = one
        self.n = len(self._add)
        self.label = label or f"T{self.n}"

    @property
    def size(self):
        return self.n

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    def add(self, a, b):
        return self._add[a][b]

    def neg(self, a):
        return self._neg[a]

    def mul(self, a, b):
        return self._mul[a][b]

    def elements(self):
        return iter(range(self.n))

    def contains(self, x):
        return isinstance(x, int) and 0 <= x < self.n

    def _generators(self):
        return greedy_generators(self, range(self.n))

    def random_element(self, rng):
        return int(rng.integers(self.n))


def _first(mask):
    hit = np.argwhere(mask)
    return None if hit.size == 0 else [int(v) for v in hit[0]]


def _check_tables(A, M, zero, one):
    n = A.shape[0]
    idx = np.arange(n)
    if (w := _first(A != A.T)) is not None:
        raise AdditionAxiomError("addition is not commutative", {"a": w[0], "b": w[1]})
    if (w := _first(A[zero] != idx)) is not None:
        raise IdentityError("zero is not an additive identity", {"a": w[0]})
    if (w := _first(~(A == zero).any(axis=1))) is not None:
        raise AdditionAxiomError("element has no additive inverse", {"a": w[0]})
    for a in range(n):
        if (w := _first(A[A[a][:, None], idx[None, :]] != A[a][A])) is not None:
            raise AdditionAxiomError("addition is not associative",
                                     {"a": a, "b": w[0], "c": w[1]})
    for a in range(n):
        if (w := _first(M[M[a][:, None], idx[None, :]] != M[a][M])) is not None:
            raise AssociativityError("multiplication is not associative",
                                     {"a": a, "b": w[0], "c": w[1]})
        if (w := _first(M[a][A] != A[M[a][:, None], M[a][None, :]])) is not None:
            raise DistributivityError("left distributivity fails",
                                      {"a": a, "b": w[0], "c": w[1]})
        if (w := _first(M[A[a][:, None], idx[None, :]] != A[M[a][None, :], M])) is not None:
            raise DistributivityError("right distributivity fails",
                                      {"a": a, "b": w[0], "c": w[1]})
    if (w := _first((M[one] != idx) | (M[:, one] != idx))) is not None:
        raise IdentityError("one is not a multiplicative identity", {"a": w[0]})


def make_cyclic(n):
    if not isinstance(n, int) or n < 1:
        raise RingError(f"Z_n needs an integer n >= 1, got {n!r}")
    return CyclicRing(n)


def make_product(factors):
    factors = list(factors)
    if not factors:
        raise RingError("a product needs at least one factor")
    return ProductRing(factors)


def make_monomial_quotient(modulus, variables, relations):
    return MonomialQuotientRing(modulus, variables, relations)


def make_table_ring(add_table, mul_table, zero, one, label=None):
    """Build a ring from Cayley tables, validating every axiom exhaustively."""
    A = np.asarray(add_table, dtype=np.int64)
    M = np.asarray(mul_table, dtype=np.int64)
    n = A.shape[0] if A.ndim == 2 else 0
    if n == 0 or A.shape != (n, n) or M.shape != (n, n):
        raise RingError("Cayley tables must be square and of the same size")
    if A.min() < 0 or A.max() >= n or M.min() < 0 or M.max() >= n:
        raise RingError("Cayley table entries must be indices of elements")
    if not (0 <= zero < n and 0 <= one < n):
        raise RingError("zero and one must be indices of elements")
    _check_tables(A, M, zero, one)
    return TableRing(A, M, zero, one, label)


def validate_ring_axioms(ring, samples=None, rng=None):
    """Check associativity, distributivity and identity laws.

    Every triple of additive generators is checked. Rings above the small tier
    also get `samples` random triples (default: Settings.sample_triples).
    """
    settings = config.current()
    gens = ring.additive_generators
    mul, add = ring.mul, ring.add
    for a in gens:
        if mul(ring.one, a) != a or mul(a, ring.one) != a:
            raise IdentityError("one is not a multiplicative identity", {"a": a})
        for b in gens:
            ab = mul(a, b)
            for c in gens:
                if mul(ab, c) != mul(a, mul(b, c)):
                    raise AssociativityError("multiplication is not associative",
                                             {"a": a, "b": b, "c": c})
    if samples is None:
        samples = settings.sample_triples if ring.size > settings.small_tier else 0
    rng = rng if rng is not None else config.rng_for(f"axioms:{ring.label}")
    for _ in range(samples):
        a, b, c = (ring.random_element(rng) for _ in range(3))
        if mul(mul(a, b), c) != mul(a, mul(b, c)):
            raise AssociativityError("multiplication is not associative",
                                     {"a": a, "b": b, "c": c})
        if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)):
            raise DistributivityError("left distributivity fails", {"a": a, "b": b, "c": c})
        if mul(add(a, b), c) != add(mul(a, c), mul(b, c)):
            raise DistributivityError("right distributivity fails", {"a": a, "b": b, "c": c})


# ---------------------------------------------------------------------------
# Subsets, subrings, quotients
# ---------------------------------------------------------------------------

class Subset(Carrier):
    """A subset of a ring, with its closure properties computed on demand."""

    def __init__(self, parent, members, label=None):
        self.parent = parent
        self.members = frozenset(members)
        self.label = label or f"subset of {parent.label}"

    def __eq__(self, other):
        return (isinstance(other, Subset) and self.parent is other.parent
                and self.members == other.members)

    def __hash__(self):
        return hash(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members

    def __iter__(self):
        return iter(self.sorted_members)

    @property
    def size(self):
        return len(self.members)

    @property
    def zero(self):
        return self.parent.zero

    def add(self, a, b):
        return self.parent.add(a, b)

    def neg(self, a):
        return self.parent.neg(a)

    def elements(self):
        return iter(self.sorted_members)

    @cached_property
    def sorted_members(self):
        return sorted(self.members)

    def contains(self, x):
        return x in self.members

    def _generators(self):
        return greedy_generators(self.parent, self.sorted_members)

    def random_element(self, rng):
        members = self.sorted_members
        return members[int(rng.integers(len(members)))]

    def format(self, x):
        return self.parent.format(x)

    def issubset(self, other):
        return self.members <= other.members

    def is_zero(self):
        return self.members == {self.parent.zero}

    def meets_nontrivially(self, other):
        return len(self.members & other.members) > 1

    @cached_property
    def is_subgroup(self):
        return (self.parent.zero in self.members
                and span(self.parent, self.additive_generators) == self.members)

    @cached_property
    def closed_under_mul(self):
        gens, mul = self.additive_generators, self.parent.mul
        return self.is_subgroup and all(
            mul(a, b) in self.members for a in gens for b in gens)

    @cached_property
    def is_left_ideal(self):
        mul = self.parent.mul
        return self.is_subgroup and all(
            mul(r, x) in self.members
            for r in self.parent.additive_generators for x in self.additive_generators)

    @cached_property
    def is_right_ideal(self):
        mul = self.parent.mul
        return self.is_subgroup and all(
            mul(x, r) in self.members
            for r in self.parent.additive_generators for x in self.additive_generators)

    @property
    def is_ideal(self):
        return self.is_left_ideal and self.is_right_ideal

    @cached_property
    def contains_one(self):
        return self.parent.one in self.members

    def describe(self, limit=8):
        shown = [self.format(x) for x in self.sorted_members[:limit]]
        more = "" if self.size <= limit else f", ... ({self.size} total)"
        return "{" + ", ".join(shown) + more + "}"


class SubRing(Ring):
    """A subset closed under the ring operations, with its own unity.

    The unity may differ from the parent's (corner rings eRe have unity e).
    Elements keep the root ring's encodings.
    """

    def __init__(self, parent, members, one, label=None):
        self.parent = parent.parent if isinstance(parent, SubRing) else parent
        self.members = frozenset(members)
        self._one = one
        self.label = label or f"subring of {self.parent.label}"

    @property
    def size(self):
        return len(self.members)

    @property
    def zero(self):
        return self.parent.zero

    @property
    def one(self):
        return self._one

    def add(self, a, b):
        return self.parent.add(a, b)

    def neg(self, a):
        return self.parent.neg(a)

    def mul(self, a, b):
        return self.parent.mul(a, b)

    @cached_property
    def sorted_members(self):
        return sorted(self.members)

    def elements(self):
        return iter(self.sorted_members)

    def contains(self, x):
        return x in self.members

    def _generators(self):
        return greedy_generators(self.parent, self.sorted_members)

    def random_element(self, rng):
        members = self.sorted_members
        return members[int(rng.integers(len(members)))]

    def format(self, x):
        return self.parent.format(x)

    def as_subset(self):
        return Subset(self.parent, self.members, label=self.label)


class QuotientRing(Ring):
    """R/I with the smallest coset member as representative."""

    def __init__(self, base, ideal):
        self.base = base
        self.ideal = ideal
        self._ideal_members = ideal.sorted_members
        self.label = f"{base.label}/{ideal.label}"
        self._projection = None
        if base.size <= config.current().small_tier:
            self._projection = {}
            reps = []
            for x in base.elements():
                if x in self._projection:
                    continue
                reps.append(x)
                for i in self._ideal_members:
                    self._projection[base.add(x, i)] = x
            self._reps = reps
        else:
            self._reps = None
            self._lazy = {}

    def project(self, x):
        if self._projection is not None:
            return self._projection[x]
        rep = self._lazy.get(x)
        if rep is None:
            rep = min(self.base.add(x, i) for i in self._ideal_members)
            self._lazy[x] = rep
        return rep

    @property
    def size(self):
        return self.base.size // self.ideal.size

    @cached_property
    def zero(self):
        return self.project(self.base.zero)

    @cached_property
    def one(self):
        return self.project(self.base.one)

    def add(self, a, b):
        return self.project(self.base.add(a, b))

    def neg(self, a):
        return self.project(self.base.neg(a))

    def mul(self, a, b):
        return self.project(self.base.mul(a, b))

    def elements(self):
        if self._reps is not None:
            return iter(self._reps)
        return (x for x in self.base.elements() if self.project(x) == x)

    def contains(self, x):
        return self.base.contains(x) and self.project(x) == x

    def _generators(self):
        seen = []
        for g in self.base.additive_generators:
            p = self.project(g)
            if p != self.zero and p not in seen:
                seen.append(p)
        return greedy_generators(self, seen)

    def random_element(self, rng):
        return self.project(self.base.random_element(rng))

    def format(self, x):
        return f"[{self.base.format(x)}]"


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def enumerate_idempotents(ring):
    """All e with e*e = e, ascending."""
    return sorted(ring.idempotents())


def subring_generated(ring, gens):
    """Smallest subring containing `gens` and the unity."""
    members = span(ring, list(gens) + [ring.one])
    while True:
        sub = Subset(ring, members, label="generated subring")
        g = sub.additive_generators
        new = []
        for a in g:
            for b in g:
                p = ring.mul(a, b)
                if p not in members:
                    new.append(p)
        if not new:
            return sub
        members = span(ring, list(g) + new)


def ideal_generated(ring, gens, label=None):
    """Two-sided ideal generated by `gens`: the span of g*x*h over generators g, h."""
    rgens = ring.additive_generators
    mul = ring.mul
    products = set(gens)
    for x in gens:
        for a in rgens:
            ax = mul(a, x)
            for b in rgens:
                products.add(mul(ax, b))
    return Subset(ring, span(ring, sorted(products)),
                  label=label or "ideal generated by " +
                  ", ".join(ring.format(x) for x in list(gens)[:4]))


def ideal_product(ring, X, Y):
    mul = ring.mul
    products = {mul(a, b) for a in X.additive_generators for b in Y.additive_generators}
    return Subset(ring, span(ring, sorted(products)), label="product ideal")


def ideal_power(ring, X, k):
    power = X
    for _ in range(k - 1):
        power = ideal_product(ring, power, X)
    return power


def nilpotency_of(ring, X):
    """Least k with X^k = 0, or None when X is not nilpotent."""
    power, k = X, 1
    while not power.is_zero():
        following = ideal_product(ring, power, X)
        if following.members == power.members:
            return None
        power, k = following, k + 1
    return k


def quotient_ring(ring, ideal):
    if not isinstance(ideal, Subset):
        ideal = Subset(ring, ideal)
    if not ideal.is_ideal:
        raise NotAnIdealError(f"{ideal.label} is not a two-sided ideal of {ring.label}")
    return QuotientRing(ring, ideal)


def _ambient(carrier):
    return carrier if isinstance(carrier, Ring) else carrier.parent


def annihilator(A, B, side):
    """r_A(B) = {a : B a = 0} for side='right', l_A(B) = {a : a B = 0} for 'left'."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    ring = _ambient(A)
    if isinstance(B, Ring) or (isinstance(B, Subset) and B.is_subgroup):
        tests = B.additive_generators
    else:
        tests = list(B)
    zero, mul = ring.zero, ring.mul
    if side == "right":
        members = [a for a in A.elements() if all(mul(b, a) == zero for b in tests)]
    else:
        members = [a for a in A.elements() if all(mul(a, b) == zero for b in tests)]
    return Subset(ring, members, label=f"{side} annihilator")


def center(ring):
    gens, mul = ring.additive_generators, ring.mul
    members = [c for c in ring.elements()
               if all(mul(c, g) == mul(g, c) for g in gens)]
    return Subset(ring, members, label=f"Cen({ring.label})")


def units(ring):
    return ring.units()


def corner_ring(ring, e):
    """eRe as a ring with unity e, kept inside the root ring."""
    root = ring.parent if isinstance(ring, SubRing) else ring
    mul = root.mul
    members = span(root, [mul(mul(e, g), e) for g in ring.additive_generators])
    return SubRing(root, members, one=e, label=f"eRe for e={root.format(e)}")


def right_ideal_of(ring, x):
    """xR as a subset of R."""
    return Subset(ring, span(ring, [ring.mul(x, g) for g in ring.additive_generators]),
                  label=f"{ring.format(x)}R")


# ---------------------------------------------------------------------------
# Ideal lattice and radicals (small tier)
# ---------------------------------------------------------------------------

def enumerate_ideals(ring, prime_only=False):
    """All two-sided ideals, smallest first; prime_only keeps the prime ones."""
    config.require_tier(ring, "ideal enumeration")
    ideals = ring.__dict__.get("_ideal_lattice")
    if ideals is None:
        ideals = ring.__dict__["_ideal_lattice"] = _build_lattice(ring)
    if prime_only:
        return [I for I in ideals if _is_prime_ideal(ring, I, ideals)]
    return list(ideals)


def _build_lattice(ring):
    cap = config.current().ideal_cap
    unit_set = ring.units()
    seen_elements = set()
    found = {}
    zero_ideal = Subset(ring, [ring.zero], label="0")
    found[zero_ideal.members] = zero_ideal
    whole = Subset(ring, ring.element_list, label=ring.label)
    found[whole.members] = whole
    for x in ring.element_list:
        if x in seen_elements or x in unit_set or x == ring.zero:
            continue
        ideal = ideal_generated(ring, [x], label=f"({ring.format(x)})")
        found.setdefault(ideal.members, ideal)
        for u in unit_set:
            seen_elements.add(ring.mul(u, x))
            seen_elements.add(ring.mul(x, u))
        if len(found) > cap:
            raise CapExceededError(f"more than {cap} ideals in {ring.label}", cap=cap)
    frontier = list(found.values())
    while frontier:
        additions = []
        current = list(found.values())
        for I in frontier:
            for J in current:
                if I.members <= J.members or J.members <= I.members:
                    continue
                total = span(ring, list(I.additive_generators) + list(J.additive_generators))
                if total not in found:
                    ideal = Subset(ring, total, label=f"{I.label}+{J.label}")
                    found[total] = ideal
                    additions.append(ideal)
                    if len(found) > cap:
                        raise CapExceededError(
                            f"more than {cap} ideals in {ring.label}", cap=cap)
        frontier = additions
    ideals = sorted(found.values(), key=lambda I: (I.size, I.sorted_members))
    logger.info("%s: %d ideals", ring.label, len(ideals))
    return ideals


def _is_prime_ideal(ring, P, ideals):
    if P.size == ring.size:
        return False
    for A in ideals:
        if A.issubset(P):
            continue
        for B in ideals:
            if B.issubset(P):
                continue
            if ideal_product(ring, A, B).issubset(P):
                return False
    return True


def minimal_ideals(ring):
    ideals = [I for I in enumerate_ideals(ring) if not I.is_zero()]
    return [I for I in ideals
            if not any(J.members < I.members for J in ideals)]


def is_prime(ring):
    """aRb = 0 implies a = 0 or b = 0.

    For a finite ring this holds exactly when there is one minimal ideal and
    it does not square to zero.
    """
    if ring.is_zero_ring():
        return False
    minimal = minimal_ideals(ring)
    return len(minimal) == 1 and not ideal_product(ring, minimal[0], minimal[0]).is_zero()


def is_semiprime(ring):
    """aRa = 0 implies a = 0; no minimal ideal squares to zero."""
    return all(not ideal_product(ring, M, M).is_zero() for M in minimal_ideals(ring))


def jacobson_radical(ring):
    """Largest nilpotent ideal (the Jacobson radical of a finite ring)."""
    nilpotent = [I for I in enumerate_ideals(ring) if nilpotency_of(ring, I) is not None]
    gens = [g for I in nilpotent for g in I.additive_generators]
    J = Subset(ring, span(ring, gens), label=f"J({ring.label})")
    if nilpotency_of(ring, J) is None:
        raise RingError(f"sum of nilpotent ideals of {ring.label} is not nilpotent")
    return J


def prime_radical(ring):
    """Intersection of the prime ideals."""
    members = set(ring.element_list)
    for P in enumerate_ideals(ring, prime_only=True):
        members &= P.members
    return Subset(ring, members, label=f"P({ring.label})")


def quasi_regular_radical(ring):
    """{x : 1 - r x is a unit for every r}: the radical by definition."""
    unit_set, one = ring.units(), ring.one
    members = [x for x in ring.element_list
               if all(ring.sub(one, ring.mul(r, x)) in unit_set for r in ring.element_list)]
    return Subset(ring, members, label=f"J({ring.label})")


def nilpotence_index(ring):
    """Largest nilpotency index of a nilpotent element."""
    best = 1
    for x in ring.element_list:
        p, k = x, 1
        seen = {x}
        while p != ring.zero:
            p = ring.mul(p, x)
            k += 1
            if p in seen:
                break
            seen.add(p)
        if p == ring.zero:
            best = max(best, k)
    return best


@dataclass
class StructureInvariants:
    label: str
    size: int
    characteristic: int
    commutative: bool
    unit_count: int
    idempotent_count: int
    jacobson: Subset
    prime_radical: Subset
    is_prime: bool
    is_semiprime: bool
    nilpotence_index: int

    def as_dict(self):
        return {
            "ring": self.label,
            "size": self.size,
            "characteristic": self.characteristic,
            "commutative": self.commutative,
            "units": self.unit_count,
            "idempotents": self.idempotent_count,
            "jacobson_radical_size": self.jacobson.size,
            "prime_radical_size": self.prime_radical.size,
            "prime": self.is_prime,
            "semiprime": self.is_semiprime,
            "nilpotence_index": self.nilpotence_index,
        }


def structure_invariants(ring):
    """Radicals, primeness and counting invariants of a small ring.

    The Jacobson radical (largest nilpotent ideal) and the prime radical
    (intersection of prime ideals) are computed independently; a finite ring
    must give the same ideal, so a mismatch raises.
    """
    config.require_tier(ring, "structure invariants")
    J = jacobson_radical(ring)
    P = prime_radical(ring)
    if J.members != P.members:
        raise RingError(f"Jacobson and prime radicals of {ring.label} differ",
                        jacobson=J.size, prime=P.size)
    return StructureInvariants(
        label=ring.label,
        size=ring.size,
        characteristic=ring.characteristic,
        commutative=ring.is_commutative,
        unit_count=len(ring.units()),
        idempotent_count=len(ring.idempotents()),
        jacobson=J,
        prime_radical=P,
        is_prime=is_prime(ring),
        is_semiprime=is_semiprime(ring),
        nilpotence_index=nilpotence_index(ring),
    )
