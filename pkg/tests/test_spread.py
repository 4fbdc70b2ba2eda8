from hgl import Ideal, Module, Ring, analytic_spread, fiber_cone, rees_presentation
from hgl.ideals import krull_dim


def _substitute(f, ring, images):
    """Image of f in R under y_i -> images[i], ring variables fixed."""
    s = len(images)
    total = ring(0)
    for e, c in f._terms.items():
        term = ring.monomial(e[s:], c)
        for k in range(s):
            term = term * images[k] ** e[k]
        total = total + term
    return total


def test_principal_rees_has_no_relations(plane):
    x, _ = plane.gens()
    assert not rees_presentation(Ideal(plane, [x])).generators


def test_koszul_rees(plane):
    x, y = plane.gens()
    J = rees_presentation(Ideal(plane, [x, y]))
    Ry = J.ring
    assert J == Ideal(Ry, [Ry("x*y2 - y*y1")])


def test_veronese_rees_relations_map_to_zero(veronese, vero_ideals):
    I, _ = vero_ideals
    J = rees_presentation(I)
    Ry = J.ring
    assert Ry("V*y1 - U*y2") in J
    zero = Ideal(veronese, [])
    for f in J.generators:
        assert _substitute(f, veronese, list(I.generators)) in zero


def test_spreads(plane, veronese, vero_ideals):
    x, y = plane.gens()
    assert analytic_spread(Ideal(plane, [x, y])) == 2
    assert analytic_spread(Ideal(plane, [x])) == 1
    I, m = vero_ideals
    assert analytic_spread(I) == 2
    assert analytic_spread(m) == 2


def test_spread_ignores_redundant_generators(plane):
    x, y = plane.gens()
    assert analytic_spread(Ideal(plane, [x, y, x + y])) == 2
    assert analytic_spread(Ideal(plane, [x ** 2, x * y, y ** 2, x ** 2 + y ** 2])) == 2


def test_spread_on_module():
    A = Ring("t X", relations=["t^2"])
    t, X = A.gens()
    N = Module.cokernel(A, 1, [{(0, (1, 0)): 1}])
    assert analytic_spread(Ideal(A, [X]), N) == 1
    assert analytic_spread(Ideal(A, [X]), Ideal(A, [t])) == 1


def test_fiber_cone_dimension(plane):
    F = fiber_cone(Ideal(plane, plane.gens()))
    assert F.dim() == 2
    assert krull_dim(F.defining_ideal) == 2
