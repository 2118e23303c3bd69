# test_structure.py
import pytest

import config
from errors import TierExceededError, ZeroRingError
from ring_core import Subset, ideal_generated, make_cyclic
from structure import (achievable_peirce_numbers, central_idempotents, is_1_peirce,
                       is_fi_extending_right, is_ideal_essential, is_ideal_extending,
                       is_quasi_baer, npeirce_decompose, rer_lattice, tn_partitions)


@pytest.mark.parametrize("n, expected", [(6, 2), (8, 1), (30, 3), (7, 1)])
def test_peirce_number_of_cyclics(n, expected):
    assert npeirce_decompose(make_cyclic(n)).peirce_number == expected


def test_triangular_tree(ut3):
    tree = npeirce_decompose(ut3)
    assert tree.peirce_number == 3
    assert all(tree.post_checks.values())
    total = ut3.zero
    for e in tree.flatten():
        total = ut3.add(total, e)
    assert total == ut3.one


def test_full_matrix_ring_is_one_peirce(m2, z6):
    assert is_1_peirce(m2)
    assert npeirce_decompose(m2).peirce_number == 1
    assert not is_1_peirce(z6)


def test_leaves_carry_a_one_peirce_certificate(m2, ut3):
    [leaf] = npeirce_decompose(m2).root.leaves()
    assert leaf.certificate == {"idempotents": 8, "nontrivial_checked": 6, "not_inner": 6,
                                "not_outer": 6, "peirce_trivial": 0}
    tree = npeirce_decompose(ut3)
    assert tree.root.certificate is None
    for leaf in tree.root.leaves():
        assert leaf.certificate["idempotents"] == 2
        assert leaf.certificate["peirce_trivial"] == 0


def test_zero_ring_is_rejected():
    with pytest.raises(ZeroRingError):
        is_1_peirce(make_cyclic(1))


def test_tn_partitions(ut3):
    rows = tn_partitions(ut3)
    assert [row["k"] for row in rows] == [2, 3]
    assert all(row["in_tn"] for row in rows)


def test_achievable_numbers(z6):
    assert achievable_peirce_numbers(z6) == [2]
    assert achievable_peirce_numbers(make_cyclic(30)) == [3]
    with config.overridden(exhaustive_limit=4):
        with pytest.raises(TierExceededError):
            achievable_peirce_numbers(z6)


def test_ideal_essential():
    Z4, Z6 = make_cyclic(4), make_cyclic(6)
    whole4 = Subset(Z4, Z4.element_list)
    assert is_ideal_essential(Z4, ideal_generated(Z4, [2]), whole4)
    whole6 = Subset(Z6, Z6.element_list)
    assert not is_ideal_essential(Z6, ideal_generated(Z6, [2]), whole6)


def test_extending_properties_of_small_cyclics(z6):
    Z4 = make_cyclic(4)
    assert is_ideal_extending(z6)
    assert is_quasi_baer(z6)
    assert is_ideal_extending(Z4)
    assert not is_quasi_baer(Z4)
    assert is_fi_extending_right(Z4)


def test_quasi_baer_failure_names_an_ideal():
    verdict = is_quasi_baer(make_cyclic(4))
    assert not verdict
    assert verdict.failing.members == {0, 2}


def test_central_idempotents(ut2, z6):
    assert central_idempotents(ut2) == [ut2.zero, ut2.one]
    assert central_idempotents(z6) == [0, 1, 3, 4]


def test_rer_lattice_bound(ut3):
    view = rer_lattice(ut3)
    assert view.bound["leaves"] == 3
    assert view.bound["within"]
    assert view.distinct_count <= 8
