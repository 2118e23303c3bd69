# test_ring_core.py
import pytest

import config
from errors import (CapExceededError, NotAnIdealError, RingAxiomError, RingError,
                    TierExceededError)
from ring_core import (Subset, annihilator, corner_ring, enumerate_ideals, enumerate_idempotents,
                       ideal_generated, is_prime, is_semiprime, jacobson_radical, make_cyclic,
                       make_monomial_quotient, make_product, make_table_ring, nilpotency_of,
                       prime_radical, quasi_regular_radical, quotient_ring, right_ideal_of,
                       set_span_mutation, span, structure_invariants, subring_generated,
                       validate_ring_axioms)


def test_cyclic_idempotents(z6):
    assert z6.size == 6
    assert sorted(z6.idempotents()) == [0, 1, 3, 4]
    assert sorted(make_cyclic(4).idempotents()) == [0, 1]


def test_cyclic_needs_positive_modulus():
    with pytest.raises(RingError):
        make_cyclic(0)


def test_product_idempotents_are_coordinatewise():
    P = make_product([make_cyclic(2), make_cyclic(3)])
    assert P.size == 6
    assert P.label == "Z2 x Z3"
    assert sorted(P.idempotents()) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_monomial_quotient_basis():
    A = make_monomial_quotient(2, ["x"], ["x^3"])
    x = A.monomial("x")
    assert A.size == 8
    assert x == (0, 1, 0)
    assert A.mul(x, x) == A.monomial("x^2") == (0, 0, 1)
    assert A.mul(A.mul(x, x), x) == A.zero
    assert make_monomial_quotient(2, ["x", "y"], ["x^2", "y^2"]).size == 16


def test_monomial_quotient_without_power_relation_is_rejected():
    with pytest.raises(RingError, match="infinite"):
        make_monomial_quotient(2, ["x", "y"], ["x^2"])


def test_table_ring_checks_axioms():
    Z2 = make_table_ring([[0, 1], [1, 0]], [[0, 0], [0, 1]], 0, 1)
    assert Z2.size == 2
    assert Z2.mul(1, 1) == 1
    with pytest.raises(RingAxiomError):
        make_table_ring([[0, 1], [1, 0]], [[0, 0], [0, 0]], 0, 1)


def test_validate_ring_axioms_passes_on_products():
    validate_ring_axioms(make_product([make_cyclic(4), make_cyclic(6)]))


def test_ideals_of_z12():
    ideals = enumerate_ideals(make_cyclic(12))
    assert [I.size for I in ideals] == [1, 2, 3, 4, 6, 12]
    assert all(I.is_ideal for I in ideals)


def test_quotient_ring():
    Z12 = make_cyclic(12)
    Q = quotient_ring(Z12, ideal_generated(Z12, [4]))
    assert Q.size == 4
    assert Q.one == 1
    assert Q.mul(3, 3) == 1


def test_quotient_by_non_ideal_raises():
    Z4 = make_cyclic(4)
    with pytest.raises(NotAnIdealError):
        quotient_ring(Z4, Subset(Z4, [0, 1]))


def test_radicals_of_z8():
    Z8 = make_cyclic(8)
    J = jacobson_radical(Z8)
    assert J.members == {0, 2, 4, 6}
    assert prime_radical(Z8).members == J.members
    assert quasi_regular_radical(Z8).members == J.members
    assert nilpotency_of(Z8, J) == 3


def test_structure_invariants_of_z8():
    info = structure_invariants(make_cyclic(8)).as_dict()
    assert info["characteristic"] == 8
    assert info["units"] == 4
    assert info["idempotents"] == 2
    assert info["jacobson_radical_size"] == 4
    assert info["nilpotence_index"] == 3
    assert info["prime"] is False


@pytest.mark.parametrize("n, prime, semiprime", [
    (5, True, True),
    (6, False, True),
    (4, False, False),
    (12, False, False),
])
def test_prime_and_semiprime_cyclics(n, prime, semiprime):
    ring = make_cyclic(n)
    assert is_prime(ring) is prime
    assert is_semiprime(ring) is semiprime


def test_full_matrix_ring_is_prime(m2, ut2):
    assert is_prime(m2)
    assert not is_prime(ut2)
    assert not is_semiprime(ut2)


def test_corner_ring_has_unity_e(ut2):
    e = ut2.unit(0)
    corner = corner_ring(ut2, e)
    assert corner.size == 2
    assert corner.one == e
    assert right_ideal_of(ut2, e).size == 4


def test_ideal_lattice_respects_tier():
    with config.overridden(small_tier=8):
        with pytest.raises(TierExceededError):
            enumerate_ideals(make_cyclic(12))


def test_ideal_lattice_respects_cap():
    with config.overridden(ideal_cap=3):
        with pytest.raises(CapExceededError):
            enumerate_ideals(make_cyclic(30))


def test_span_mutation_drops_an_element():
    Z4 = make_cyclic(4)
    set_span_mutation(True)
    try:
        assert span(Z4, [1]) == {0, 1, 2}
    finally:
        set_span_mutation(False)
    assert span(Z4, [1]) == {0, 1, 2, 3}


def test_annihilators_in_z12():
    Z12 = make_cyclic(12)
    assert annihilator(Z12, [6], "right").members == {0, 2, 4, 6, 8, 10}
    assert annihilator(Z12, [4, 6], "left").members == {0, 6}
    with pytest.raises(ValueError):
        annihilator(Z12, [6], "middle")


def test_enumerated_idempotents_are_sorted(z6):
    assert enumerate_idempotents(z6) == [0, 1, 3, 4]


def test_subring_generated(ut2, z6):
    assert subring_generated(z6, []).size == 6
    sub = subring_generated(ut2, [ut2.unit(0)])
    assert sub.members == {ut2.zero, ut2.unit(0), ut2.unit(1), ut2.one}
