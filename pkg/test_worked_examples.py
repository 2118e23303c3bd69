# test_worked_examples.py
import pytest

import worked_examples
from verify import check_example

LARGE = {"ideal-pattern-square", "ideal-pattern-zero", "primitive-peirce",
         "inner-not-peirce", "cubic-one-peirce"}


def _params():
    for example_id in worked_examples.example_ids():
        marks = [pytest.mark.slow] if example_id in LARGE else []
        yield pytest.param(example_id, marks=marks, id=example_id)


@pytest.mark.parametrize("example_id", list(_params()))
def test_every_claim_holds(example_id):
    claims = worked_examples.run_example(example_id)
    assert claims
    failing = [(c.statement, c.witness) for c in claims if not c.holds]
    assert not failing


def test_every_example_ring_builds_with_its_label():
    for name in worked_examples.builder_names():
        if name in ("ideal-pattern-square", "ideal-pattern-zero", "cubic-one-peirce"):
            continue
        ring = worked_examples.RINGS[name]()
        assert ring.label
        assert ring.one != ring.zero


def test_not_ideal_extending_folds_into_a_pass():
    result = check_example("not-ideal-extending")
    assert result.verdict == "pass"
    assert result.notes["claims"] == 5


def test_unknown_example_is_rejected():
    from errors import RingError
    with pytest.raises(RingError):
        check_example("no-such-example")


@pytest.mark.parametrize("number, example_id", [
    ("2.22.1", "reblock-3x3"),
    ("1.11.2", "ideal-square-zero"),
])
def test_numbered_ids_resolve(number, example_id):
    assert worked_examples.resolve_example(number) == example_id
    result = check_example(number)
    assert result.check_id == example_id
    assert result.verdict == "pass"


def test_every_numbered_id_names_a_registered_example():
    assert set(worked_examples.NUMBERED.values()) <= set(worked_examples.example_ids())
    assert worked_examples.numbers_of("cubic-one-peirce") == ["3.9"]


@pytest.mark.slow
def test_cubic_example_by_number():
    result = check_example("3.9")
    assert result.check_id == "cubic-one-peirce"
    assert result.verdict == "pass"
