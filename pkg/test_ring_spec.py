# test_ring_spec.py
import json
import os

import pytest

from errors import SpecError
from ring_core import make_cyclic, make_monomial_quotient
from ring_spec import (build_ring, dump_spec, load_spec, parse_element, parse_idempotents,
                       parse_ring_spec, render_ring_spec, validate_document)
import worked_examples

SPEC_DIR = os.path.join(os.path.dirname(__file__), "data", "specs")
SHIPPED = sorted(name for name in os.listdir(SPEC_DIR) if name.endswith(".json"))


@pytest.mark.parametrize("name", SHIPPED)
def test_shipped_specs_render_back_to_themselves(name):
    spec = load_spec(os.path.join(SPEC_DIR, name))
    rendered = render_ring_spec(spec)
    assert parse_ring_spec(rendered) == spec
    assert json.loads(dump_spec(spec)) == rendered


@pytest.mark.parametrize("name, size", [
    ("z6.json", 6),
    ("ut3_z2.json", 64),
    ("quotient_corner.json", 64),
    ("not_ideal_extending.json", 32),
    ("inner_outer_independent.json", 1024),
    ("reblock_3x3.json", 2 ** 7),
])
def test_shipped_spec_sizes(spec_path, name, size):
    assert build_ring(load_spec(spec_path(name))).size == size


@pytest.mark.slow
def test_larger_shipped_specs(spec_path):
    assert build_ring(load_spec(spec_path("ideal_pattern_zero.json"))).size == 32768
    assert build_ring(load_spec(spec_path("cubic_one_peirce.json"))).size == 2 ** 18


def test_label_is_carried_over(spec_path):
    ring = build_ring(load_spec(spec_path("not_ideal_extending.json")))
    assert ring.label == "[Z4, 2Z4; 0, Z4]"
    assert ring.in_tn


def test_explicit_tables_match_the_builder(spec_path):
    ring = build_ring(load_spec(spec_path("inner_outer_independent.json")))
    reference = worked_examples.RINGS["inner-outer-independent"]()
    assert ring.tn_witness == reference.tn_witness
    assert ring.diagonal_units() == reference.diagonal_units()
    a = ring.single(1, 0, 1)
    b = ring.single(0, 1, 3)
    assert ring.mul(a, b) == reference.mul(a, b) == ring.single(1, 1, 4)
    assert ring.mul(b, a) == reference.mul(b, a) == ring.zero


def test_missing_explicit_theta_is_named():
    with open(os.path.join(SPEC_DIR, "inner_outer_independent.json"), encoding="utf-8") as handle:
        document = json.load(handle)
    del document["ring"]["thetas"]["2,1,2"]
    with pytest.raises(SpecError, match=r"missing theta for \(2,1,2\)") as info:
        parse_ring_spec(document)
    assert info.value.path == "$.ring.thetas"


def test_reference_cycle_is_reported():
    document = {"defs": {"a": {"ref": "b"}, "b": {"ref": "a"}}, "ring": {"ref": "a"}}
    with pytest.raises(SpecError, match="reference cycle through a -> b -> a"):
        parse_ring_spec(document)


def test_unresolved_reference():
    with pytest.raises(SpecError, match="unresolved reference 'q'"):
        parse_ring_spec({"defs": {}, "ring": {"ref": "q"}})


def test_unknown_type_points_at_the_field():
    with pytest.raises(SpecError) as info:
        parse_ring_spec({"type": "polynomial"})
    assert info.value.path == "$.type"


def test_nested_error_paths():
    document = {"type": "product", "factors": [{"type": "cyclic", "n": 0}]}
    with pytest.raises(SpecError, match="must be at least 1") as info:
        parse_ring_spec(document)
    assert info.value.path == "$.factors[0].n"
    assert str(info.value).startswith("$.factors[0].n: ")


def test_infinite_monomial_quotient_is_rejected_while_parsing():
    document = {"type": "monomial_quotient", "modulus": 2, "variables": ["x", "y"],
                "relations": ["x^2"]}
    with pytest.raises(SpecError, match="variable y has no power relation") as info:
        parse_ring_spec(document)
    assert info.value.path == "$.relations"


def test_zero_on_the_diagonal_is_rejected():
    document = {"type": "gmr", "ambient": {"type": "cyclic", "n": 2},
                "entries": [["ring", "zero"], ["zero", "zero"]]}
    with pytest.raises(SpecError) as info:
        parse_ring_spec(document)
    assert info.value.path == "$.entries[1][1]"


def test_construction_errors_keep_the_spec_path():
    document = {"type": "quotient", "base": {"type": "cyclic", "n": 4}, "ideal": [7]}
    with pytest.raises(SpecError):
        build_ring(parse_ring_spec(document))


def test_unreadable_files(tmp_path):
    with pytest.raises(SpecError, match="cannot read"):
        load_spec(str(tmp_path / "missing.json"))
    broken = tmp_path / "broken.json"
    broken.write_text("{\"type\": ")
    with pytest.raises(SpecError, match="is not JSON"):
        load_spec(str(broken))


@pytest.mark.parametrize("name", SHIPPED)
def test_shipped_specs_match_the_schema(name):
    with open(os.path.join(SPEC_DIR, name), encoding="utf-8") as handle:
        validate_document(json.load(handle))


@pytest.mark.parametrize("document", [
    {"type": "cyclic", "n": 6, "side": "middle"},
    {"type": "dihedral", "n": 4},
    {"defs": {"a": {"type": "cyclic", "n": 2}}},
    {"type": "gmr", "ambient": {"type": "cyclic", "n": 4},
     "entries": [["ring", {"ideal": [2], "quotient": [2]}], ["zero", "ring"]]},
])
def test_schema_rejects_malformed_documents(tmp_path, document):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(document))
    with pytest.raises(SpecError, match="does not match the ring spec schema") as info:
        load_spec(str(bad))
    assert info.value.path.startswith("$")


def test_parse_element_forms(ut3):
    assert parse_element(ut3, "E11+E22") == ut3.block_sum([0, 1])
    assert parse_element(make_cyclic(6), 4) == 4
    A = make_monomial_quotient(2, ["x"], ["x^3"])
    assert parse_element(A, "1+x") == (1, 1, 0)
    assert parse_element(A, "x^2") == (0, 0, 1)
    assert parse_element(A, [0, 1, 1]) == (0, 1, 1)
    with pytest.raises(SpecError):
        parse_element(make_cyclic(6), 9)


def test_matrix_unit_outside_the_carrier(spec_path):
    ring = build_ring(load_spec(spec_path("not_ideal_extending.json")))
    with pytest.raises(SpecError, match="does not contain 1"):
        parse_element(ring, "E12")


def test_parse_idempotents(ut3, z6):
    assert parse_idempotents(ut3, "diagonal") == ut3.diagonal_units()
    assert parse_idempotents(ut3, "E11, E22+E33") == [ut3.unit(0), ut3.block_sum([1, 2])]
    assert parse_idempotents(z6, "[3, 4]") == [3, 4]
    with pytest.raises(SpecError):
        parse_idempotents(z6, "diagonal")


@pytest.mark.slow
def test_numbered_cubic_spec_matches_the_builder(spec_path):
    spec = load_spec(spec_path("ex_3_9.json"))
    assert spec == load_spec(spec_path("cubic_one_peirce.json"))
    ring = build_ring(spec)
    reference = worked_examples.RINGS["cubic-one-peirce"]()
    assert ring.size == reference.size == 2 ** 18
    assert ring.in_tn and reference.in_tn
    assert ring.diagonal_units() == reference.diagonal_units()
