"""Weak Poisson brackets for the right bimodule and cyclic-word reductions.

For the right bimodule structure the Jacobiator itself is not a derivation,
but its (12)-weak variant is; the natural notion is therefore the weak one.
The constant bracket <x,y> = 1 (x) 1 is the smallest example: weak Poisson,
not Poisson.  Its slotwise projection to cyclic words extends to an honest
Poisson bracket on the polynomial ring they generate.
"""

from dbrackets import (Bimodule, DoubleBracket, FreeAlgebra, bullet_bracket,
                       is_poisson, is_weak_poisson, jacobiator,
                       swap_equivalent, sym_jacobi_defect, weak_jacobiator)

A = FreeAlgebra(["x", "y"])
x, y = A.gen("x"), A.gen("y")

db = DoubleBracket.from_pairs(Bimodule("right", alg=A),
                              {("x", "y"): A.unit2()})
print("== constant right-kind bracket ==")
print("jacobiator(x, x, y^2) =", jacobiator(db, x, x, y * y))
print("(12)-weak jacobiator(x, x, y^2) =",
      weak_jacobiator(db, "12", "12", x, x, y * y))
print("weak verdict:", is_weak_poisson(db, "12", "12"))
print("plain verdict (bounded):", is_poisson(db, 4))

print()
print("== the swap-equivalent left-kind bracket ==")
lb = swap_equivalent(db)
print("kind:", lb.bimodule.kind)
print("[(12),(13)]-weak verdict:", is_weak_poisson(lb, "12", "13"))

print()
print("== reduction to cyclic words ==")
nx, ny, nxy = A.necklace("x"), A.necklace("y"), A.necklace("xy")
print("bullet bracket of [x], [y]:",
      {(str(p), str(q)): str(c) for (p, q), c in bullet_bracket(db, nx, ny).items()})
print("bullet bracket of [x], [xy]:",
      {(str(p), str(q)): str(c) for (p, q), c in bullet_bracket(db, nx, nxy).items()})
for triple in ((nx, ny, nxy), (nx, nxy, A.necklace("yy"))):
    d = sym_jacobi_defect(db, *triple)
    names = ", ".join(str(n) for n in triple)
    print(f"Jacobi defect of the extended bracket at ({names}):", d)
