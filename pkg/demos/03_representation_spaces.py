"""From double brackets to Poisson brackets on generic matrix entries.

Each bimodule kind induces its own arrangement of the two tensor factors
over entry variables.  For the outer kind the induced bracket of traces is
the trace of the multiplication bracket (a linear structure); for the
right kind it is a product of traces (a quadratic structure), and the two
matrix-tensor notations coincide with the classical conventions.
"""

from dbrackets import (Bimodule, DoubleBracket, FreeAlgebra, entry_name,
                       eval_nc, induce, jacobi_sweep, matrix_tensor_bracket,
                       mult_bracket, trace_bracket)

A = FreeAlgebra(["x", "y"])
x, y = A.gen("x"), A.gen("y")
one = A.one()

vdb = DoubleBracket.from_pairs(
    Bimodule("outer", alg=A),
    {("x", "x"): A.t2(x, one) - A.t2(one, x),
     ("y", "y"): A.t2(y, one) - A.t2(one, y)})
rb = DoubleBracket.from_pairs(Bimodule("right", alg=A),
                              {("x", "y"): A.unit2()})

n = 2
print(f"== outer kind at n = {n} ==")
ps = induce(vdb, n)
fmt = lambda p: p.to_str(lambda v: entry_name(A, v))
for (v, w), p in sorted(ps.table.items())[:4]:
    print(f"{{{entry_name(A, v)}, {entry_name(A, w)}}} =", fmt(p))
print(jacobi_sweep(ps))
a, b = x * y, x
print(f"{{tr X({a}), tr X({b})}} =", fmt(trace_bracket(ps, a, b)))
print(f"tr X(<{a},{b}>_m)       =", fmt(eval_nc(mult_bracket(vdb, a, b), n).trace()))

print()
print(f"== right kind at n = {n} ==")
psr = induce(rb, n)
print(jacobi_sweep(psr))
print("{tr X(x), tr X(y)} =", fmt(trace_bracket(psr, x, y)),
      "   (product of two traces of the identity)")
print("tensor-convention bracket of X(x), X(y):")
for key, p in sorted(matrix_tensor_bracket(psr, "tensor", x, y).items()):
    i, j, k, l = key
    print(f"  E[{i},{j}] (x) E[{k},{l}]:", fmt(p))
print("swap-convention bracket of X(x), X(y):")
for key, p in sorted(matrix_tensor_bracket(psr, "vdb", x, y).items()):
    i, j, k, l = key
    print(f"  E[{i},{j}] (x) E[{k},{l}]:", fmt(p))
