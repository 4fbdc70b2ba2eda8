# Groebner bases, normal forms and syzygies.
from hgl import Ring, buchberger, is_groebner, syzygies

R = Ring("x y z")
x, y, z = R.gens()

# the twisted cubic, parametrized as (t, t^2, t^3)
G = buchberger([x**2 - y, x**3 - z], R)
print("reduced basis:")
print(G)
print("S-pairs all reduce to zero:", is_groebner(G))

# y^2 - x*z vanishes on the curve, so its remainder is zero
print("normal form of y^2 - x*z:", G.normal_form(y**2 - x*z))
print("normal form of x*y:", G.normal_form(x*y))

# relations among x, y, z: the three Koszul syzygies
for s in syzygies([x, y, z], R):
    print("syzygy", s)

# over a hypersurface the relation is built in
V = Ring("U V W", relations=["V^2 - U*W"])
U, Vv, W = V.gens()
print("V^2 reduces to", buchberger([], V).normal_form(Vv**2))
for s in syzygies([U, Vv], V):
    print("syzygy of (U, V):", s)
