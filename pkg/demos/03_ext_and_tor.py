# Resolutions, Ext and Tor.
from hgl import Ideal, Module, Ring, ext, free_resolution, tor
from hgl.homology import residue_field

R = Ring("x y")
k = residue_field(R)
F = free_resolution(k, 3)
print("Betti numbers of k over k[x, y]:", F.betti)
print("is a complex:", F.is_complex())

m = Ideal(R, R.gens())
for n in range(1, 6):
    print(f"length Tor_1(k, R/m^{n}) =", tor(1, k, (m**n).quotient()).length())

# over a hypersurface resolutions go on forever, with period two
S = Ring("U V W", relations=["V^2 - U*W"])
U, V, W = S.gens()
I = Ideal(S, [U, V])
print("Betti numbers of S/(U, V):", free_resolution(I.quotient(), 5).betti)

S1 = Module.free(S, 1)
for n in range(2, 8):
    E = ext(2, (I**n).quotient(), S1)
    print(f"length Ext^2(S/I^{n}, S) =", E.length())
