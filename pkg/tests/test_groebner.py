import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hgl import FreeModuleElement, ModuleOrder, Ring, buchberger, is_groebner, syzygies
from hgl.checks import max_check_degree, submodule_dimension, syzygy_dimension
from hgl.groebner import s_pair_remainders, vec_mul_poly


def sympy_basis(polys, ring):
    gens = sympy.symbols(ring.variables)
    exprs = [sympy.sympify(str(f).replace("^", "**"), locals=dict(zip(ring.variables, gens)))
             for f in polys]
    G = sympy.groebner(exprs, *gens, order="grevlex", modulus=ring.characteristic)
    return {ring(str(g.as_expr()).replace("**", "^")).monic() for g in G.polys}


def ours(polys, ring):
    return {f.monic() for f in buchberger(polys, ring).polynomials()}


def test_monomial_ideal_already_reduced(plane):
    x, y = plane.gens()
    assert ours([x ** 2, x * y, y ** 2], plane) == {x ** 2, x * y, y ** 2}


def test_principal():
    R = Ring("U V W")
    f = R("V^2 - U*W")
    assert ours([f], R) == {f}


def test_veronese_standard_monomials(veronese):
    U, V, W = veronese.gens()
    gb = buchberger([U, V], veronese)
    assert is_groebner(gb)
    # R/(U, V) = k[W]: the standard monomials are the powers of W
    for b in range(5):
        assert gb.normal_form(W ** b) == W ** b
    assert gb.contains(V * W ** 3)
    assert gb.contains(V ** 2)


def test_normal_forms(plane, veronese):
    x, y = plane.gens()
    gb = buchberger([x ** 2, x * y, y ** 2], plane)
    assert gb.normal_form(x ** 2 * y) == plane(0)
    assert gb.normal_form(x) == x
    S = Ring("U V W")
    g = buchberger([S("V^2 - U*W")], S)
    assert g.normal_form(S("V^2")) == S("U*W")


def test_relation_is_zero_in_quotient(veronese):
    gb = buchberger([], veronese)
    assert gb.normal_form(veronese("V^2 - U*W")) == veronese(0)


@pytest.mark.parametrize("polys", [
    ["x^2 - y", "x^3 - z"],
    ["x*y - z^2", "y^3 - x*z", "x^2*z - y"],
    ["x^2 + y^2 + z^2 - 1", "x*y*z - 1", "x - y + z"],
    ["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"],
])
def test_matches_sympy(polys):
    R = Ring("x y z")
    fs = [R(p) for p in polys]
    assert ours(fs, R) == sympy_basis(fs, R)


small_poly = st.lists(
    st.tuples(st.integers(-3, 3), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
    min_size=1, max_size=3)


@settings(max_examples=25, deadline=None)
@given(st.lists(small_poly, min_size=1, max_size=3))
def test_random_bases_match_sympy(raw):
    R = Ring("x y z")
    fs = []
    for terms in raw:
        f = R(0)
        for c, a, b, d in terms:
            f = f + R.monomial((a, b, d), c)
        if f != R(0):
            fs.append(f)
    if not fs:
        return
    gb = buchberger(fs, R)
    assert is_groebner(gb)
    assert {f.monic() for f in gb.polynomials()} == sympy_basis(fs, R)
    assert all(gb.contains(f) for f in fs)


def _check_syzygies(gens, syz, ring):
    p = ring.characteristic
    zero = buchberger([], ring)
    for s in syz:
        total = ring(0)
        for k, f in enumerate(gens):
            total = total + s[k] * f
        assert zero.normal_form(total) == ring(0)


def test_koszul_syzygy(plane):
    x, y = plane.gens()
    S = syzygies([x, y], plane)
    assert len(S) == 1
    assert S[0].to_list() in ([y, -x], [-y, x])


def test_unit_has_no_syzygies(plane):
    assert syzygies([plane(1)], plane) == []


def test_veronese_syzygies(veronese):
    U, V, W = veronese.gens()
    S = syzygies([U, V], veronese)
    _check_syzygies([U, V], S, veronese)
    assert len(S) >= 2
    # the module they generate contains the two expected relations
    rows = [dict(s._terms) for s in S]
    gb = buchberger([FreeModuleElement(veronese, 2, r) for r in rows], veronese, rank=2)
    for want in ([V, -U], [W, -V]):
        assert gb.contains(FreeModuleElement.from_polys(want, veronese))


@pytest.mark.parametrize("polys", [
    ["x", "y", "z"],
    ["x^2", "x*y", "y^2"],
    ["x*y", "y*z", "x*z"],
    ["x^2 - y*z", "y^2 - x*z", "z^2 - x*y"],
])
def test_syzygy_dimensions_against_linear_algebra(polys):
    R = Ring("x y z")
    fs = [R(p) for p in polys]
    S = syzygies(fs, R)
    _check_syzygies(fs, S, R)
    shifts = tuple(f.degree() for f in fs)
    for d in range(max_check_degree() + 1):
        got = submodule_dimension([dict(s._terms) for s in S], R, shifts, d)
        assert got == syzygy_dimension(fs, R, d), d


def test_module_groebner_pot_and_top(plane):
    x, y = plane.gens()
    vs = [FreeModuleElement.from_polys(v, plane) for v in ([x, y], [y, x], [x * y, 0])]
    for order in (ModuleOrder("top"), ModuleOrder("pot")):
        gb = buchberger(vs, plane, order=order, rank=2)
        assert is_groebner(gb)
        assert not s_pair_remainders(gb)
        for v in vs:
            assert gb.contains(v)


def test_characteristic_zero_basis():
    Q = Ring("x y", characteristic=0)
    gb = buchberger([Q("2*x^2 - 3*y"), Q("x*y - 1")], Q)
    assert is_groebner(gb)
    assert all(f.leading_coefficient == 1 for f in gb.polynomials())
