# worked_examples.py
"""
Worked examples, rebuilt over finite rings.

Each entry builds its ring, asserts the conclusions drawn about it and returns
the claims it checked. Where a construction is stated over an infinite ring
the finite stand-in keeps the property that matters:

    Z acting on Z_4 and Z_2      ->  Z_16 (only the action mod 4 and mod 2 is used)
    Z x Z_4, Z x Z               ->  Z_2 x Z_4
    B[x, y]/(...)                ->  Z_2[x, y]/(...)
    F[x]/(x^3)                   ->  Z_2[x]/(x^3)
    A with only trivial idempotents, X = Y = nonzero ideal  ->  Z_4, (2)
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Optional

from errors import RingError
from gmr import (RING, ZERO, ZERO_PAIRING, Bimodule, Entry, GmrRing, Pairing,
                 annihilating_subrings, block_partition, diagonal_parts, pattern_ring,
                 theta_from_ambient, triangular_ring, matrix_ring)
from peirce import classification_report, classify_idempotent
from ring_core import (Subset, corner_ring, is_prime, is_semiprime, make_cyclic,
                       make_monomial_quotient, make_product, right_ideal_of)
from structure import (bisubmodule_essential, central_idempotents, is_1_peirce,
                       is_ideal_extending, is_indecomposable, npeirce_decompose)

logger = logging.getLogger(__name__)


@dataclass
class Claim:
    statement: str
    holds: bool
    witness: dict = field(default_factory=dict)


class Claims(list):

    def expect(self, statement, holds, **witness):
        holds = bool(holds)
        self.append(Claim(statement, holds, witness if not holds else {}))
        if not holds:
            logger.info("claim failed: %s %s", statement, witness)
        return holds


@dataclass
class WorkedExample:
    example_id: str
    title: str
    run: Callable
    ring: Optional[Callable] = None


EXAMPLES = {}
RINGS = {}


def worked(example_id, title, ring=None):
    def register(func):
        EXAMPLES[example_id] = WorkedExample(example_id, title, func, ring)
        return func
    return register


def ring_builder(name):
    def register(func):
        RINGS[name] = func
        return func
    return register


def resolve_example(name):
    """Registered id for `name`, which may also be a numbered id such as "3.9"."""
    example_id = NUMBERED.get(name, name)
    if example_id not in EXAMPLES:
        raise RingError(f"unknown example {name!r}; known: {', '.join(EXAMPLES)} "
                        f"or {', '.join(NUMBERED)}")
    return example_id


def run_example(name):
    """Run one registered example and return its claims."""
    example_id = resolve_example(name)
    example = EXAMPLES[example_id]
    claims = Claims()
    example.run(claims)
    logger.info("%s: %d/%d claims hold", example_id,
                sum(c.holds for c in claims), len(claims))
    return claims


# ---------------------------------------------------------------------------
# Ring builders
# ---------------------------------------------------------------------------

def _ideal(*gens):
    return Entry("ideal", tuple(gens))


def _quotient(*gens):
    return Entry("quotient", tuple(gens))


@ring_builder("inner-outer-independent")
def inner_outer_ring(k=4):
    """[[Z_2^k, Z4], [Z2, Z8]]: M12 x M21 -> 0 and M21 x M12 -> 4 Z8.

    R_1 stands in for Z; any k >= 2 keeps Z4 and Z2 modules over it.
    """
    if k < 2:
        raise RingError(f"inner-outer ring needs k >= 2, got {k}")
    R1, Z8, Z4, Z2 = make_cyclic(2 ** k), make_cyclic(8), make_cyclic(4), make_cyclic(2)
    bimodules = {
        (0, 1): Bimodule(Z4, lambda a, m: a * m % 4, lambda m, b: m * b % 4, "Z4"),
        (1, 0): Bimodule(Z2, lambda b, n: b * n % 2, lambda n, a: n * a % 2, "Z2"),
    }
    pairings = {(0, 1, 0): ZERO_PAIRING,
                (1, 0, 1): Pairing(lambda n, m: 4 * n * m % 8, "tensor")}
    return GmrRing([R1, Z8], bimodules, pairings, label=f"[{R1.label}, Z4; Z2, Z8]")


@ring_builder("ut3-z2")
def ut3_z2():
    return triangular_ring(make_cyclic(2), 3)


@ring_builder("ideal-triangular")
def ideal_triangular_ring():
    return theta_from_ambient(make_cyclic(4), [[RING, _ideal(2)], [ZERO, RING]],
                              label="[Z4, (2); 0, Z4]")


@ring_builder("ideal-square-zero")
def ideal_square_zero_ring():
    return theta_from_ambient(make_cyclic(4), [[RING, _ideal(2)], [_ideal(2), RING]],
                              label="[Z4, (2); (2), Z4]")


@ring_builder("quotient-corner")
def quotient_corner_ring():
    return theta_from_ambient(make_cyclic(4), [[RING, _ideal(2)], [_quotient(2), RING]],
                              zero_thetas=[(1, 2, 1), (2, 1, 2)],
                              label="[Z4, (2); Z4/(2), Z4]")


def ideal_pattern_ring(A, X, Y, label):
    """[[A, X, Y], [X, A, X], [Y, X, A]] for ideals with X^2 inside Y."""
    return theta_from_ambient(A, [[RING, X, Y], [X, RING, X], [Y, X, RING]], label=label)


@ring_builder("ideal-pattern-general")
def ideal_pattern_general():
    return ideal_pattern_ring(make_cyclic(4), _ideal(2), RING, "[Z4, (2), Z4; ...]")


@ring_builder("ideal-pattern-full")
def ideal_pattern_full():
    return ideal_pattern_ring(make_cyclic(2), RING, RING, "M3(Z2) as ideal pattern")


@ring_builder("ideal-pattern-square")
def ideal_pattern_square():
    A = make_monomial_quotient(2, ["x", "y"], ["x^2", "y^2"])
    return ideal_pattern_ring(A, _ideal(A.monomial("x")), _ideal(A.monomial("y")),
                              "[A, (x), (y); ...] over Z2[x,y]/(x^2,y^2)")


@ring_builder("ideal-pattern-zero")
def ideal_pattern_zero():
    A = make_monomial_quotient(2, ["x", "y"], ["x^2", "y^2", "x*y"])
    return ideal_pattern_ring(A, _ideal(A.monomial("x")), _ideal(A.monomial("y")),
                              "[A, (x), (y); ...] over Z2[x,y]/(x^2,y^2,xy)")


@ring_builder("annihilating-product")
def annihilating_product_ring():
    P = make_product([make_cyclic(2), make_cyclic(3)])
    return theta_from_ambient(P, [[RING, _ideal((1, 0))], [RING, RING]],
                              label="[Z2xZ3, Z2x0; Z2xZ3, Z2xZ3]")


@ring_builder("bisubmodule-essential")
def bisubmodule_ring():
    P = make_product([make_cyclic(2), make_cyclic(4)])
    return theta_from_ambient(P, [[RING, _ideal((1, 2))], [_ideal((1, 0)), RING]],
                              label="[Z2xZ4, Z2x2Z4; Z2x0, Z2xZ4]")


@ring_builder("not-ideal-extending")
def not_ideal_extending_ring():
    return theta_from_ambient(make_cyclic(4), [[RING, _ideal(2)], [ZERO, RING]],
                              label="[Z4, 2Z4; 0, Z4]")


@ring_builder("reblock-3x3")
def reblock_3x3():
    return pattern_ring(make_cyclic(2), [[1, 1, 1], [1, 1, 1], [0, 0, 1]],
                        label="pattern 111/111/001 over Z2")


@ring_builder("reblock-4x4")
def reblock_4x4():
    return pattern_ring(make_cyclic(2),
                        [[1, 1, 1, 1], [0, 1, 0, 0], [0, 1, 1, 1], [0, 1, 0, 1]],
                        label="pattern 1111/0100/0111/0101 over Z2")


@ring_builder("cubic-one-peirce")
def cubic_ring():
    """[[A, X^2, X], [X, A, X^2], [X^2, X, A]] with A = Z2[x]/(x^3), X = (x)."""
    A = make_monomial_quotient(2, ["x"], ["x^3"])
    X, X2 = _ideal(A.monomial("x")), _ideal(A.monomial("x^2"))
    return theta_from_ambient(A, [[RING, X2, X], [X, RING, X2], [X2, X, RING]],
                              label="[A, X^2, X; X, A, X^2; X^2, X, A] over Z2[x]/(x^3)")


# ---------------------------------------------------------------------------
# Examples
# ---------------------------------------------------------------------------

def _sets(ring):
    report = classification_report(ring)
    return report.sets, sorted(ring.idempotents())


@worked("inner-outer-independent", "inner and outer triviality are independent",
        ring=inner_outer_ring)
def _inner_outer(claims):
    R = inner_outer_ring()
    e, f = R.unit(0), R.unit(1)
    ce, cf = classify_idempotent(R, e), classify_idempotent(R, f)
    claims.expect("E11 is inner Peirce trivial", ce.inner)
    claims.expect("E11 is not outer Peirce trivial", not ce.outer,
                  witness=ce.outer_witness)
    claims.expect("E22 is outer Peirce trivial", cf.outer)
    claims.expect("E22 is not inner Peirce trivial", not cf.inner,
                  witness=cf.inner_witness)


@worked("triangular-corner", "Peirce triviality in a corner need not lift", ring=ut3_z2)
def _triangular_corner(claims):
    R = ut3_z2()
    e = R.unit(1)
    c = R.block_sum([1, 2])
    cRc = corner_ring(R, c)
    claims.expect("c = E22 + E33 is Peirce trivial in R",
                  classify_idempotent(R, c).peirce_trivial)
    claims.expect("E22 is Peirce trivial in cRc",
                  classify_idempotent(cRc, e).peirce_trivial)
    outer = classify_idempotent(R, e)
    claims.expect("E22 is not outer Peirce trivial in R", not outer.outer,
                  witness=outer.outer_witness)


@worked("ideal-triangular", "[A, X; 0, A]: S_l with S_r gives every idempotent",
        ring=ideal_triangular_ring)
def _ideal_triangular(claims):
    sets, idempotents = _sets(ideal_triangular_ring())
    claims.expect("S_l and S_r together are P_t",
                  sorted(set(sets["S_l"]) | set(sets["S_r"])) == sets["P_t"])
    claims.expect("P_t is every idempotent", sets["P_t"] == idempotents,
                  idempotents=len(idempotents), trivial=len(sets["P_t"]))


def _only_trivial_semicentral(claims, ring):
    sets, idempotents = _sets(ring)
    trivial = sorted({ring.zero, ring.one})
    claims.expect("S_l = {0, 1}", sets["S_l"] == trivial, S_l=len(sets["S_l"]))
    claims.expect("S_r = {0, 1}", sets["S_r"] == trivial, S_r=len(sets["S_r"]))
    claims.expect("P_t is every idempotent", sets["P_t"] == idempotents,
                  idempotents=len(idempotents), trivial=len(sets["P_t"]))
    claims.expect("P_t is strictly larger than {0, 1}", len(sets["P_t"]) > 2)


@worked("ideal-square-zero", "[A, X; Y, A] with XY = YX = 0", ring=ideal_square_zero_ring)
def _ideal_square_zero(claims):
    _only_trivial_semicentral(claims, ideal_square_zero_ring())


@worked("quotient-corner", "[A, X; A/X, A] with zero pairings", ring=quotient_corner_ring)
def _quotient_corner(claims):
    _only_trivial_semicentral(claims, quotient_corner_ring())


@worked("ideal-pattern-general", "E22 is Peirce trivial exactly when X^2 = 0",
        ring=ideal_pattern_general)
def _ideal_pattern_general(claims):
    R = ideal_pattern_general()
    claims.expect("X^2 = 0: E22 is Peirce trivial",
                  classify_idempotent(R, R.unit(1)).peirce_trivial)
    claims.expect("Y^2 != 0: not every E_ii is inner Peirce trivial",
                  not all(classify_idempotent(R, e).inner for e in R.diagonal_units()))
    M = ideal_pattern_full()
    claims.expect("X^2 != 0: E22 is not Peirce trivial",
                  not classify_idempotent(M, M.unit(1)).peirce_trivial)


@worked("ideal-pattern-square", "X^2 = Y^2 = 0 but XY != 0: inner, not Peirce trivial",
        ring=ideal_pattern_square)
def _ideal_pattern_square(claims):
    R = ideal_pattern_square()
    classes = [classify_idempotent(R, e) for e in R.diagonal_units()]
    claims.expect("every E_ii is inner Peirce trivial", all(c.inner for c in classes))
    claims.expect("not every E_ii is Peirce trivial",
                  not all(c.peirce_trivial for c in classes))
    claims.expect("E22 is Peirce trivial", classes[1].peirce_trivial)


@worked("ideal-pattern-zero", "X^2 = Y^2 = XY = 0: every E_ii is Peirce trivial",
        ring=ideal_pattern_zero)
def _ideal_pattern_zero(claims):
    R = ideal_pattern_zero()
    claims.expect("every E_ii is Peirce trivial",
                  all(classify_idempotent(R, e).peirce_trivial for e in R.diagonal_units()))


@worked("annihilating-product", "R^la and R^ua of [[AxB, Ax0], [AxB, AxB]]",
        ring=annihilating_product_ring)
def _annihilating_product(claims):
    R = annihilating_product_ring()
    rla, rua = annihilating_subrings(R)
    B_part = {(0, b) for b in range(3)}
    claims.expect("R is not in T_2", not R.in_tn)
    claims.expect("R^la has 0 x B below the diagonal",
                  set(rla.carriers[1][0].element_list) == B_part)
    claims.expect("R^la keeps A x 0 above the diagonal",
                  set(rla.carriers[0][1].element_list) == {(0, 0), (1, 0)})
    claims.expect("R^ua has 0 above the diagonal",
                  set(rua.carriers[0][1].element_list) == {(0, 0)})
    claims.expect("R^ua keeps A x B below the diagonal", rua.carriers[1][0].size == 6)
    claims.expect("both annihilating subrings are in T_2", rla.in_tn and rua.in_tn)


@worked("bisubmodule-essential", "an ideal essential in eR as an (S, S)-bisubmodule",
        ring=bisubmodule_ring)
def _bisubmodule(claims):
    R = bisubmodule_ring()
    S, _ = annihilating_subrings(R)
    claims.expect("R^la has zero lower entry", S.carriers[1][0].size == 1)
    e = R.single(1, 1, (0, 1))
    X = Subset(R, [R.zero, R.single(1, 1, (0, 2))], label="X")
    cls = classify_idempotent(S, e)
    claims.expect("X is an ideal of R", X.is_ideal)
    claims.expect("e is right semicentral in S", cls.right_semicentral)
    claims.expect("e is not central in S", not cls.central)
    eR = right_ideal_of(R, e)
    claims.expect("X is essential in eR as an (S, S)-bisubmodule",
                  bisubmodule_essential(S, R, X, eR))


@worked("not-ideal-extending", "[Z4, 2Z4; 0, Z4] is not ideal extending but D(R) is",
        ring=not_ideal_extending_ring)
def _not_ideal_extending(claims):
    R = not_ideal_extending_ring()
    claims.expect("B(R) = {0, 1}", central_idempotents(R) == sorted({R.zero, R.one}))
    verdict = is_ideal_extending(R)
    claims.expect("R is not ideal extending", not verdict.holds)
    first = Subset(R, [R.zero, R.single(0, 0, 2)], label="[2Z4, 0; 0, 0]")
    second = Subset(R, [R.zero, R.single(0, 1, 2)], label="[0, 2Z4; 0, 0]")
    claims.expect("[2Z4, 0; 0, 0] and [0, 2Z4; 0, 0] are ideals",
                  first.is_ideal and second.is_ideal)
    claims.expect("the two ideals meet only in 0",
                  first.members & second.members == {R.zero})
    D = diagonal_parts(R).D
    claims.expect("D(R) is ideal extending", is_ideal_extending(D).holds)


@worked("reblock-3x3", "a pattern outside T_3 whose {1,2}|{3} blocking is in T_2",
        ring=reblock_3x3)
def _reblock_3x3(claims):
    R = reblock_3x3()
    claims.expect("R is not in T_3", not R.in_tn)
    claims.expect("E22 is not inner Peirce trivial",
                  not classify_idempotent(R, R.unit(1)).inner)
    blocked, _ = block_partition(R, [[1, 2], [3]])
    claims.expect("blocks {1,2}|{3} are in T_2", blocked.in_tn)


@worked("reblock-4x4", "a pattern in T_4 with one blocking outside T_2 and one inside",
        ring=reblock_4x4)
def _reblock_4x4(claims):
    R = reblock_4x4()
    claims.expect("R is in T_4", R.in_tn, witness=R.tn_witness)
    bad, _ = block_partition(R, [[1, 2], [3, 4]])
    claims.expect("blocks {1,2}|{3,4} are not in T_2", not bad.in_tn)
    good, _ = block_partition(R, [[1], [2, 3, 4]])
    claims.expect("blocks {1}|{2,3,4} are in T_2", good.in_tn, witness=good.tn_witness)
    claims.expect("E11 is Peirce trivial",
                  classify_idempotent(R, R.unit(0)).peirce_trivial)


@worked("one-peirce-prime", "prime and indecomposable rings are 1-Peirce")
def _one_peirce_prime(claims):
    Z2, Z4, Z6 = make_cyclic(2), make_cyclic(4), make_cyclic(6)
    M = matrix_ring(Z2, 2)
    claims.expect("M2(Z2) is prime", is_prime(M))
    claims.expect("M2(Z2) is 1-Peirce", is_1_peirce(M))
    claims.expect("Z4 is indecomposable", is_indecomposable(Z4))
    claims.expect("Z4 is 1-Peirce", is_1_peirce(Z4))
    claims.expect("Z6 is semiprime", is_semiprime(Z6))
    claims.expect("Z6 is neither indecomposable nor 1-Peirce",
                  not is_indecomposable(Z6) and not is_1_peirce(Z6))


@worked("triangular-npeirce", "triangular rings over 1-Peirce rings are n-Peirce",
        ring=ut3_z2)
def _triangular_npeirce(claims):
    three = npeirce_decompose(ut3_z2()).peirce_number
    two = npeirce_decompose(triangular_ring(make_cyclic(4), 2)).peirce_number
    lower = npeirce_decompose(triangular_ring(make_cyclic(3), 2, side="lower")).peirce_number
    claims.expect("UT3(Z2) is 3-Peirce", three == 3, found=three)
    claims.expect("UT2(Z4) is 2-Peirce", two == 2, found=two)
    claims.expect("LT2(Z3) is 2-Peirce", lower == 2, found=lower)


@worked("primitive-peirce", "a complete set of primitive Peirce trivial idempotents",
        ring=ideal_pattern_zero)
def _primitive_peirce(claims):
    tree = npeirce_decompose(ideal_pattern_zero())
    claims.expect("the ring is 3-Peirce", tree.peirce_number == 3, found=tree.peirce_number)
    claims.expect("the canonical leaves are inner Peirce trivial",
                  tree.post_checks["leaves_inner_trivial"])


@worked("inner-not-peirce", "3-Peirce with primitive inner, not all Peirce trivial",
        ring=ideal_pattern_square)
def _inner_not_peirce(claims):
    R = ideal_pattern_square()
    tree = npeirce_decompose(R)
    classes = [classify_idempotent(R, e) for e in R.diagonal_units()]
    claims.expect("the ring is 3-Peirce", tree.peirce_number == 3, found=tree.peirce_number)
    claims.expect("E11, E22, E33 are inner Peirce trivial", all(c.inner for c in classes))
    claims.expect("not all of E11, E22, E33 are Peirce trivial",
                  not all(c.peirce_trivial for c in classes))


# Diagonal pattern, the entry that must vanish, and the product that must
# equal a third entry (positions 0-based, row-major).
CUBIC_FORMS = {
    "i": ((1, 0, 0), (2, 1), ((1, 0), (0, 2), (1, 2))),
    "ii": ((0, 1, 0), (0, 2), ((2, 1), (1, 0), (2, 0))),
    "iii": ((0, 0, 1), (1, 0), ((0, 2), (2, 1), (0, 1))),
    "iv": ((1, 1, 0), (1, 0), ((0, 2), (2, 1), (0, 1))),
    "v": ((1, 0, 1), (0, 2), ((2, 1), (1, 0), (2, 0))),
    "vi": ((0, 1, 1), (2, 1), ((1, 0), (0, 2), (1, 2))),
}

# Two matrix units whose sandwich alpha a (1 - alpha) b alpha is nonzero for
# the forms that fail inner triviality.
CUBIC_INNER_WITNESSES = {"iv": ((0, 2), (2, 1)), "v": ((2, 1), (1, 0)),
                         "vi": ((1, 0), (0, 2))}


def cubic_form(ring, alpha):
    """Name of the form alpha matches, or None. Signs vanish in characteristic 2."""
    A = ring.diagonal[0]
    entry = ring.entry
    diagonal = tuple(int(entry(alpha, i, i) == A.one) for i in range(3))
    if any(entry(alpha, i, i) not in (A.zero, A.one) for i in range(3)):
        return None
    for name, (pattern, vanish, (a, b, c)) in CUBIC_FORMS.items():
        if diagonal != pattern or entry(alpha, *vanish) != A.zero:
            continue
        if A.mul(entry(alpha, *a), entry(alpha, *b)) == entry(alpha, *c):
            return name
    return None


def _sandwich(ring, alpha, first, second):
    A = ring.diagonal[0]
    x = A.monomial("x")
    complement = ring.sub(ring.one, alpha)
    a, b = ring.single(*first, x), ring.single(*second, x)
    mul = ring.mul
    return mul(mul(mul(mul(alpha, a), complement), b), alpha)


@worked("cubic-one-peirce", "a 1-Peirce ring in T_3 and its six idempotent forms",
        ring=cubic_ring)
def _cubic(claims):
    R = cubic_ring()
    claims.expect("the ring has 2^18 elements", R.size == 2 ** 18, size=R.size)
    claims.expect("the ring is in T_3", R.in_tn, witness=R.tn_witness)
    claims.expect("the ring is 1-Peirce", is_1_peirce(R))
    nontrivial = [e for e in sorted(R.idempotents()) if e not in (R.zero, R.one)]
    forms = {e: cubic_form(R, e) for e in nontrivial}
    unmatched = [R.format(e) for e, name in forms.items() if name is None]
    claims.expect("every nontrivial idempotent has one of the six forms", not unmatched,
                  unmatched=unmatched[:3])
    counts = {name: sum(1 for f in forms.values() if f == name) for name in CUBIC_FORMS}
    claims.expect("every form occurs", all(counts.values()), counts=counts)
    for name, (first, second) in CUBIC_INNER_WITNESSES.items():
        members = [e for e, f in forms.items() if f == name]
        failing = [e for e in members if classify_idempotent(R, e).inner]
        claims.expect(f"form ({name}) is never inner Peirce trivial", not failing,
                      example=R.format(failing[0]) if failing else None)
        alpha = next((e for e in members if all(
            entry == R.carriers[p // 3][p % 3].zero
            for p, entry in enumerate(R.off_diagonal_of(e)))), None)
        if alpha is not None:
            product = _sandwich(R, alpha, first, second)
            claims.expect(f"form ({name}) witness alpha xE (1 - alpha) xE alpha is nonzero",
                          product != R.zero, product=R.format(product))
    outer = [e for e, f in forms.items()
             if f in ("i", "ii", "iii") and classify_idempotent(R, e).outer]
    claims.expect("forms (i)-(iii) are never outer Peirce trivial", not outer,
                  example=R.format(outer[0]) if outer else None)


# numbered ids as the examples are usually cited; items of one example get a third part
NUMBERED = {
    "1.2": "inner-outer-independent",
    "1.9": "triangular-corner",
    "1.11.1": "ideal-triangular",
    "1.11.2": "ideal-square-zero",
    "1.11.3": "quotient-corner",
    "2.5.1": "ideal-pattern-general",
    "2.5.2": "ideal-pattern-square",
    "2.5.3": "ideal-pattern-zero",
    "2.10": "annihilating-product",
    "2.19.1": "bisubmodule-essential",
    "2.19.2": "not-ideal-extending",
    "2.22.1": "reblock-3x3",
    "2.22.2": "reblock-4x4",
    "3.2.1": "one-peirce-prime",
    "3.2.2": "triangular-npeirce",
    "3.2.3": "primitive-peirce",
    "3.2.4": "inner-not-peirce",
    "3.9": "cubic-one-peirce",
}


def numbers_of(example_id):
    return [number for number, target in NUMBERED.items() if target == example_id]


def example_ids():
    return list(EXAMPLES)


def builder_names():
    return list(RINGS)

