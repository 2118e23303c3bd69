# test_checks.py
import pytest

from checks import Analysis, block_compositions, evaluate, set_partitions
from gmr import triangular_ring
from ring_core import make_cyclic


def test_block_compositions_are_contiguous():
    assert list(block_compositions(3)) == [[[0, 1, 2]], [[0, 1], [2]], [[0], [1, 2]],
                                           [[0], [1], [2]]]
    assert [[1], [0, 2]] in list(set_partitions(range(3)))
    assert [[1], [0, 2]] not in list(block_compositions(3))
    assert len(list(block_compositions(4))) == 8


@pytest.mark.parametrize("side", ["upper", "lower"])
def test_block_partition_on_inner_trivial_diagonal(side):
    ring = triangular_ring(make_cyclic(2), 3, side)
    outcome = evaluate("block-partition", Analysis(ring))
    assert outcome.verdict == "pass", outcome.witness
    assert outcome.notes["partitions"] >= 2


def test_block_partition_skips_without_trivial_sets(z6):
    outcome = evaluate("block-partition", Analysis(z6))
    assert outcome.verdict == "skipped"
