# Quick sanity run: a few small rings, their Peirce numbers and T_n verdicts.
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from gmr import triangular_ring
from ring_core import make_cyclic
from structure import is_1_peirce, npeirce_decompose
import worked_examples

print("PEIRCE SANITY CHECK")
print("=" * 60)

rings = [
    make_cyclic(6),
    make_cyclic(8),
    triangular_ring(make_cyclic(2), 3),
    worked_examples.RINGS["ideal-triangular"](),
    worked_examples.RINGS["inner-outer-independent"](),
]
expected_n = {"Z6": 2, "Z8": 1, "UT3(Z2)": 3}

print(f"{'Ring':<24} {'Size':>6} {'1-Peirce':>9} {'n':>3}")
print("-" * 60)
ok = True
for ring in rings:
    n = npeirce_decompose(ring).peirce_number
    print(f"{ring.label:<24} {ring.size:>6} {str(is_1_peirce(ring)):>9} {n:>3}")
    if ring.label in expected_n and expected_n[ring.label] != n:
        ok = False
print("-" * 60)

for example_id in ("triangular-corner", "not-ideal-extending", "reblock-3x3"):
    claims = worked_examples.run_example(example_id)
    held = sum(c.holds for c in claims)
    print(f"{example_id:<24} {held}/{len(claims)} claims hold")
    ok = ok and held == len(claims)

print("=" * 60)
print("SUCCESS" if ok else "MISMATCH: see rows above")
sys.exit(0 if ok else 1)
