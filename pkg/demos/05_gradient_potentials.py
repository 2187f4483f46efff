"""Gradient-type double brackets on three generators.

A potential f defines generator brackets through the epsilon-tensor
combination of its double partial derivatives.  This is a bracket at all
exactly when f is fully non-commutative (coefficients constant on
permutation orbits), and the classifier decides the Poisson property
exactly since everything lives on the untwisted outer bimodule.
"""

from dbrackets import (FreeAlgebra, classify, double_derivation,
                       gradient_bracket, is_fully_noncommutative, jacobiator,
                       symmetrize)

A = FreeAlgebra(["x1", "x2", "x3"])
x1, x2, x3 = A.gens()

print("== double partial derivatives ==")
print("d1(x2*x1*x2) =", double_derivation(0, x2 * x1 * x2))
s = x1 + x2 + x3
print("d2((x1+x2+x3)^3) =", double_derivation(1, s ** 3))

print()
print("== which potentials give brackets at all ==")
for f, label in ((x1 * x2, "x1*x2"),
                 (x1 * x2 + x2 * x1, "x1*x2 + x2*x1"),
                 (x1 ** 3, "x1^3")):
    print(f"{label}: fully non-commutative = {is_fully_noncommutative(f)}")

print()
print("== the catalogued families ==")
for family, kwargs in (("monomial", {"gen": "x1", "degree": 3}),
                       ("sum-power", {"degree": 3}),
                       ("linear", {"coeffs": [0, 1, 2, 3]})):
    rep = classify(A, family, **kwargs)
    print(f"{family}: {rep.verdict}, casimir holds: {rep.casimir_ok}")

print()
print("== a symmetric potential that is not Poisson ==")
f = symmetrize(A, [0, 1, 1])  # all words with one x1 and two x2
rep = classify(A, "custom", poly=f)
print("potential:", rep.potential)
print("verdict:", rep.verdict)
print("jacobiator(x2, x3, x3) =",
      jacobiator(gradient_bracket(f), x2, x3, x3))
