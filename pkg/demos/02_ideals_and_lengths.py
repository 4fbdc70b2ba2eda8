# Colons, saturations, lengths and dimensions.
from hgl import Ideal, Ring, colon, hilbert_function, intersect, krull_dim, length, saturate, subquotient

R = Ring("x y")
x, y = R.gens()
m = Ideal(R, [x, y])
J = Ideal(R, [x**2, x*y])

print("(x^2, xy) : m =", colon(J, m))
sat, k = saturate(J, m)
print("saturation:", sat, "reached after", k, "step(s)")
print("(x^2, xy) cap (y) =", intersect(J, Ideal(R, [y])))

print("length of R/m^2:", length((m**2).quotient()))
print("length of R/(x):", length(Ideal(R, [x]).quotient()))

# the cone over a conic: k[U, V, W]/(V^2 - UW)
S = Ring("U V W", relations=["V^2 - U*W"])
U, V, W = S.gens()
I = Ideal(S, [U, V])
print("dim S =", krull_dim(Ideal(S, [])), " dim S/I =", krull_dim(I))
print("Hilbert function of S:", [hilbert_function(Ideal(S, []), d) for d in range(6)])

# I is prime but its powers pick up an embedded component at the vertex
mS = Ideal(S, [U, V, W])
for n in range(2, 7):
    Isat, _ = saturate(I**n, mS)
    print(f"n={n}: length of I^(n)/I^n =", length(subquotient(Isat, I**n)))
