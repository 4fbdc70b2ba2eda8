# Rees algebras, fiber cones and analytic spread.
from hgl import Ideal, Module, Ring, analytic_spread, rees_presentation

R = Ring("x y")
x, y = R.gens()
print("Rees relations of (x, y):", rees_presentation(Ideal(R, [x, y])))
print("spread of (x, y):", analytic_spread(Ideal(R, [x, y])))
print("spread of (x):", analytic_spread(Ideal(R, [x])))
print("spread of (x^2, xy, y^2):", analytic_spread(Ideal(R, [x**2, x*y, y**2])))

S = Ring("U V W", relations=["V^2 - U*W"])
U, V, W = S.gens()
J = rees_presentation(Ideal(S, [U, V]))
print("Rees relations of (U, V) on the cone:")
for f in J.generators:
    print("  ", f)
print("spread of (U, V):", analytic_spread(Ideal(S, [U, V])))

# spread relative to a module N only sees R/ann(N)
A = Ring("t X", relations=["t^2"])
t, X = A.gens()
N = Module.cokernel(A, 1, [{(0, (1, 0)): 1}])
print("spread of (X) on A/(t):", analytic_spread(Ideal(A, [X]), N))
