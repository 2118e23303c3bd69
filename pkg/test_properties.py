# test_properties.py
from hypothesis import given, strategies as st

from gmr import diagonal_parts, triangular_ring
from peirce import classify_idempotent, classify_in_ideal
from ring_core import (Subset, make_cyclic, make_monomial_quotient, make_product,
                       validate_ring_axioms)

moduli = st.integers(min_value=2, max_value=60)
small_moduli = st.integers(min_value=2, max_value=8)


def _distinct_primes(n):
    primes, p = set(), 2
    while p * p <= n:
        while n % p == 0:
            primes.add(p)
            n //= p
        p += 1
    if n > 1:
        primes.add(n)
    return primes


@given(moduli)
def test_cyclic_idempotents_count_prime_factors(n):
    assert len(make_cyclic(n).idempotents()) == 2 ** len(_distinct_primes(n))


@given(small_moduli, small_moduli)
def test_products_satisfy_ring_axioms(m, n):
    validate_ring_axioms(make_product([make_cyclic(m), make_cyclic(n)]))


@given(small_moduli, small_moduli)
def test_idempotents_of_commutative_rings_are_central(m, n):
    ring = make_product([make_cyclic(m), make_cyclic(n)])
    for e in ring.idempotents():
        cls = classify_idempotent(ring, e)
        assert cls.central
        assert cls.peirce_trivial


@given(st.integers(min_value=2, max_value=4))
def test_ideal_criteria_agree_with_unital_ones(m):
    ring = triangular_ring(make_cyclic(m), 2)
    whole = Subset(ring, ring.element_list)
    for e in ring.idempotents():
        cls = classify_idempotent(ring, e)
        assert classify_in_ideal(ring, whole, e) == (cls.inner, cls.outer)


@given(moduli, st.integers(min_value=0, max_value=200))
def test_idempotent_squares_to_itself(n, k):
    ring = make_cyclic(n)
    e = sorted(ring.idempotents())[k % len(ring.idempotents())]
    assert ring.mul(e, e) == e


@given(st.sampled_from([2, 3, 4]), st.integers(min_value=2, max_value=4))
def test_truncated_polynomial_rings_satisfy_ring_axioms(modulus, power):
    ring = make_monomial_quotient(modulus, ["x"], [f"x^{power}"])
    assert ring.size == modulus ** power
    validate_ring_axioms(ring)


@given(st.integers(min_value=2, max_value=4))
def test_projection_onto_the_diagonal_is_a_homomorphism(m):
    parts = diagonal_parts(triangular_ring(make_cyclic(m), 2))
    assert all(parts.verified.values())
