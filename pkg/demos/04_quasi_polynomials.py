# Fitting length sequences exactly.
from hgl import LengthSequence, fit_polynomial, fit_quasipolynomial
from hgl.growth import format_polynomial

# a plain polynomial
seq = LengthSequence(1, [n * (n + 1) // 2 for n in range(1, 13)])
rep = fit_polynomial(seq)
print(format_polynomial(rep.polynomials[0]), "degree", rep.degree)

# Ext^2 lengths over the quadric cone: no single polynomial fits
vals = [1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36]
seq = LengthSequence(2, vals)
print("as a polynomial:", fit_quasipolynomial(seq, max_period=1, max_degree=2))

rep = fit_quasipolynomial(seq, max_period=6, max_degree=2)
print("period", rep.period)
print(rep.describe())
print("normalized leading coefficient", rep.normalized_leading_coefficient,
      "integer?", rep.normalized_is_integer)

# eventual fits report where they start
seq = LengthSequence(1, [7, 0, 3] + [3 * n - 1 for n in range(4, 16)])
rep = fit_quasipolynomial(seq)
print(rep.describe(), "from n =", rep.stable_from)
