"""Double brackets on a free algebra: build, evaluate, decide Poisson.

A double bracket assigns to each pair of algebra elements a value in the
tensor square, extended from generator pairs by Leibniz rules that depend
on a bimodule structure.  This script builds the classical linear bracket
on Q<x, y>, checks its Jacobi property exactly, and then transports it
along an equivalence that destroys the property.
"""

from dbrackets import (AlgEndo, Bimodule, DoubleBracket, FreeAlgebra,
                       TwistPairAuto, apply_equivalence, check_antisymmetry,
                       eval_bracket, is_poisson, jacobiator)

A = FreeAlgebra(["x", "y"])
x, y = A.gen("x"), A.gen("y")
one = A.one()

print("== the linear double Poisson bracket on Q<x,y> ==")
db = DoubleBracket.from_pairs(
    Bimodule("outer", alg=A),
    {("x", "x"): A.t2(x, one) - A.t2(one, x),
     ("y", "y"): A.t2(y, one) - A.t2(one, y),
     ("x", "y"): A.zero2()})
print("<x,x> =", db.entry("x", "x"))
print("<x, y^2> =", eval_bracket(db, x, y * y))
print("<x*y, x> =", eval_bracket(db, x * y, x))
print("antisymmetry:", check_antisymmetry(db, 3))
print("verdict:", is_poisson(db))

print()
print("== transport along alpha (x) alpha with alpha swapping x and y ==")
alpha = AlgEndo(A, {"x": y, "y": x})
tw = apply_equivalence(db, TwistPairAuto(alpha, alpha))
print("new bimodule:", tw.bimodule)
print("new <x,x> =", tw.entry("x", "x"))
print("jacobiator(x, y, y) =", jacobiator(tw, x, y, y))
print("verdict:", is_poisson(tw))
print()
print("equivalences preserve the bracket axioms but not the Jacobi")
print("property; the twisted copy fails on a generator triple.")
