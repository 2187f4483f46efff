"""The acceptance gate: one test per criterion, exact arithmetic throughout.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS/FAIL
line per criterion, or ``python tests/test_acceptance.py`` standalone.

Criterion 7 is implemented exactly as stated and is expected to FAIL: the
classical tensor sum_{i<j} e_ij (x) e_ji + half-diagonal solves the
textbook Yang-Baxter equation, not the reversed-placement variant the
defect formula pins down, its induced entry bracket genuinely violates
Jacobi (confirmed by an independent differentiation oracle), and
e12 (x) e12 is a nilpotent solution with zero defect rather than a
non-solution.  The verified true behaviour is frozen in tests/test_ybe.py.
"""

import itertools
from fractions import Fraction

from dbrackets import (Bimodule, DoubleBracket, FreeAlgebra, MatTensor2,
                       check_antisymmetry, check_entry_jacobi, classify,
                       cybe_defect, double_derivation, entry_bracket,
                       eval_bracket, eval_nc, gradient_bracket,
                       gradient_bracket_unchecked, induce,
                       is_fully_noncommutative, is_poisson, is_weak_poisson,
                       jacobi_sweep, jacobiator, matrix_tensor_bracket,
                       mult_bracket, standard_r, symmetrize, trace_bracket,
                       CPoly)

import test_equivalences
import test_structural
from helpers import monomials, outer_poisson, right_const, twisted_ctr, two_gen, xy


def _report(num, name, fn):
    try:
        fn()
    except BaseException:
        print(f"ACCEPTANCE {num} ({name}): FAIL")
        raise
    print(f"ACCEPTANCE {num} ({name}): PASS")


# -- criterion 1 ---------------------------------------------------------------

def _criterion_1():
    A = two_gen()
    x, y = xy(A)
    one = A.one()
    tw = twisted_ctr(A)
    assert jacobiator(tw, x, y, y) == A.t3(y, one, one) - A.t3(one, y, one)
    assert is_poisson(tw).status == "NotPoisson"
    base = outer_poisson(A)
    verdict = is_poisson(base)
    assert verdict.status == "Poisson"


def test_criterion_1_equivalent_twisted_bracket():
    _report(1, "twisted equivalence reproduction", _criterion_1)


# -- criterion 2 ---------------------------------------------------------------

def _criterion_2():
    A = two_gen()
    x, y = xy(A)
    one = A.one()
    db = right_const(A, lam=1)
    assert jacobiator(db, x, x, y * y) == A.t3(one, one, one).scale(-2)
    assert is_weak_poisson(db, "12", "12").status == "WeakPoisson"
    v = is_poisson(db, 4)
    assert v.status == "NotPoisson"
    assert v.witness == (x, x, y * y)
    assert v.defect == A.t3(one, one, one).scale(-2)


def test_criterion_2_right_kind_weak_example():
    _report(2, "right-kind weak example", _criterion_2)


# -- criterion 3 ---------------------------------------------------------------

def _criterion_3():
    A = FreeAlgebra(["x1", "x2", "x3"])
    x1, x2, x3 = A.gens()
    one = A.one()

    # (a) failed antisymmetry for the non-symmetric quadratic potential
    f = x1 * x2
    assert not is_fully_noncommutative(f)
    raw = gradient_bracket_unchecked(f)
    assert raw.entry("x2", "x3") == A.t2(one, x2)
    assert raw.entry("x3", "x2") == -A.t2(one, x2)
    assert not check_antisymmetry(raw, 2).holds

    # (b) the symmetric quadratic potential has the stated Jacobiator value
    g = gradient_bracket(x1 * x2 + x2 * x1)
    assert jacobiator(g, x3, x2, x3) == A.t3(one, one, x2) - A.t3(one, x2, one)

    # (c) the catalogued families are Poisson with their potential a Casimir
    for j in range(3):
        for d in range(5):
            rep = classify(A, "monomial", gen=j, degree=d)
            assert rep.verdict.status == "Poisson" and rep.casimir_ok
    for d in range(5):
        rep = classify(A, "sum-power", degree=d)
        assert rep.verdict.status == "Poisson" and rep.casimir_ok

    # (d) the split-derivative identity for power sums up to degree 5
    s = x1 + x2 + x3
    for d in range(1, 6):
        for k in range(3):
            expect = A.zero2()
            for delta in range(d):
                expect = expect + A.t2(s ** delta, s ** (d - delta - 1))
            assert double_derivation(k, s ** d) == expect

    # (e) symmetrized two-letter potentials fail, witnessed at (x2, x3, x3)
    for d, e in ((3, 1), (3, 2), (4, 2)):
        h = symmetrize(A, [0] * e + [1] * (d - e))
        rep = classify(A, "custom", poly=h)
        assert rep.verdict.status == "NotPoisson"
        assert not jacobiator(gradient_bracket(h), x2, x3, x3).is_zero()


def test_criterion_3_appendix_suite():
    _report(3, "gradient bracket case study", _criterion_3)


# -- criterion 4 ---------------------------------------------------------------

def _criterion_4():
    A = two_gen()
    x, y = xy(A)
    vdb = outer_poisson(A)
    rb = right_const(A)
    for n in (2, 3):
        ps = induce(vdb, n)
        assert jacobi_sweep(ps).holds
        for a in monomials(A, 3):
            for b in monomials(A, 3):
                assert trace_bracket(ps, a, b) == \
                    eval_nc(mult_bracket(vdb, a, b), n).trace()

        psr = induce(rb, n)
        assert jacobi_sweep(psr).holds
        tens = matrix_tensor_bracket(psr, "tensor", x, y)
        assert tens == {(i, i, k, k): CPoly.one()
                        for i in range(1, n + 1) for k in range(1, n + 1)}
        vdb_grid = matrix_tensor_bracket(psr, "vdb", x, y)
        assert vdb_grid == {(i, j, j, i): CPoly.one()
                            for i in range(1, n + 1) for j in range(1, n + 1)}
        for a in monomials(A, 3):
            for b in monomials(A, 3):
                d = eval_bracket(rb, a, b)
                expect = CPoly.zero()
                for (w1, w2), c in d.terms.items():
                    expect = expect + (
                        eval_nc(A.monomial(w1), n).trace()
                        * eval_nc(A.monomial(w2), n).trace()).scale(c)
                assert trace_bracket(psr, a, b) == expect


def test_criterion_4_representation_layer():
    _report(4, "representation layer", _criterion_4)


# -- criterion 5 ---------------------------------------------------------------

def _criterion_5():
    test_equivalences.check_swap_transport_of_jacobiator(3)
    test_equivalences.check_weak_transport_12_13(3)
    test_equivalences.check_weak_transport_12_23(3)
    test_equivalences.check_weak_verdict_equivalences(2)
    test_equivalences.check_inner_outer_mult_bracket_relation(3)
    assert len(test_equivalences.CORPUS) >= 5


def test_criterion_5_equivalence_transport():
    _report(5, "equivalence and weak transport", _criterion_5)


# -- criterion 6 ---------------------------------------------------------------

def _criterion_6():
    test_structural.check_jacobiator_forms_agree(3)
    assert len(test_structural.CORPUS) >= 5


def test_criterion_6_jacobiator_forms():
    _report(6, "jacobiator form equivalence", _criterion_6)


# -- criterion 7 (expected FAIL; see module docstring) --------------------------

def _criterion_7():
    for n in (1, 2, 3):
        assert cybe_defect(standard_r(n)).is_zero(), \
            f"standard_r({n}) does not satisfy the pinned defect formula"
    for n in (2, 3):
        assert check_entry_jacobi(entry_bracket(standard_r(n))).holds, \
            f"entry bracket of standard_r({n}) violates the Jacobi identity"
    bad = MatTensor2(2, {(1, 2, 1, 2): 1})
    assert not cybe_defect(bad).is_zero(), \
        "e12 (x) e12 has zero defect (nilpotent square-zero solution)"
    assert not check_entry_jacobi(entry_bracket(bad)).holds, \
        "e12 (x) e12 entry bracket satisfies Jacobi"


def test_criterion_7_yang_baxter():
    _report(7, "Yang-Baxter layer", _criterion_7)


# -- criterion 8 ---------------------------------------------------------------

def _criterion_8():
    for check in test_structural.ALL_CHECKS:
        check()


def test_criterion_8_structural_suites():
    _report(8, "structural property suites", _criterion_8)


if __name__ == "__main__":
    failed = 0
    for fn in (test_criterion_1_equivalent_twisted_bracket,
               test_criterion_2_right_kind_weak_example,
               test_criterion_3_appendix_suite,
               test_criterion_4_representation_layer,
               test_criterion_5_equivalence_transport,
               test_criterion_6_jacobiator_forms,
               test_criterion_7_yang_baxter,
               test_criterion_8_structural_suites):
        try:
            fn()
        except BaseException as exc:
            failed += 1
            print(f"  -> {exc}")
    raise SystemExit(1 if failed else 0)
