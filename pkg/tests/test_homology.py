import pytest

from hgl import (
    FunctorSpec,
    Ideal,
    Module,
    ext,
    free_resolution,
    length_sequence,
    local_cohomology_h0,
    symbolic_power,
    tor,
)
from hgl.homology import composed_functor, module_mod_power, residue_field
from hgl.ideals import subquotient, length
from hgl.lab.runner import veronese_oracle_count


def test_koszul_resolution(plane):
    F = free_resolution(residue_field(plane), 3)
    assert F.betti == [1, 2, 1]
    assert F.is_complex()
    assert not F.has_constant_entries()


def test_free_module_resolution(plane):
    F = free_resolution(Module.free(plane, 2), 3)
    assert F.betti == [2]
    assert F.length == 0


def test_hypersurface_resolution_is_periodic(veronese, vero_ideals):
    I, _ = vero_ideals
    F = free_resolution(I.quotient(), 5)
    assert F.betti == [1, 2, 2, 2, 2, 2]
    assert F.is_complex()
    assert not F.has_constant_entries()


def test_ext0_vanishes_on_torsion(veronese, vero_ideals):
    I, _ = vero_ideals
    assert ext(0, I.quotient(), Module.free(veronese, 1)).length() == 0


@pytest.mark.parametrize("n,want", [(2, 1), (5, 6)])
def test_veronese_ext2(n, want, veronese, vero_ideals):
    I, _ = vero_ideals
    assert ext(2, (I ** n).quotient(), Module.free(veronese, 1)).length() == want


def test_tor_is_balanced(plane):
    m = Ideal(plane, plane.gens())
    k = m.quotient()
    for n in range(1, 5):
        A = (m ** n).quotient()
        assert tor(1, k, A).length() == n + 1
        assert tor(1, A, k).length() == n + 1


def test_tor0_is_tensor(plane):
    x, y = plane.gens()
    A = Ideal(plane, [x ** 2]).quotient()
    B = Ideal(plane, [y ** 3]).quotient()
    assert tor(0, A, B).length() == 6


def test_local_cohomology(veronese, vero_ideals):
    I, m = vero_ideals
    assert local_cohomology_h0(I ** 2, m).length() == 1
    assert local_cohomology_h0(m, m).length() == 1
    assert local_cohomology_h0(I, m).length() == 0


def test_symbolic_power(vero_ideals):
    I, m = vero_ideals
    for n in (2, 3, 4):
        P = symbolic_power(I, n, m)
        assert length(subquotient(P, I ** n)) == veronese_oracle_count(n)


def test_composed_identity(veronese, vero_ideals):
    I, _ = vero_ideals
    inner = ext(2, (I ** 3).quotient(), Module.free(veronese, 1))
    same = composed_functor(0, "tor", Module.free(veronese, 1), inner)
    assert same.length() == inner.length()


def test_top_and_socle(veronese, vero_ideals):
    I, _ = vero_ideals
    inner = ext(2, (I ** 3).quotient(), Module.free(veronese, 1))
    k = residue_field(veronese)
    top = composed_functor(0, "tor", k, inner)
    assert 1 <= top.length() <= 2
    # Top is the number of minimal generators of the pruned presentation
    assert top.length() == inner.presentation.presentation.rank
    assert composed_functor(0, "ext", k, inner).length() <= inner.length()


def test_length_sequences(veronese, vero_ideals, plane):
    I, _ = vero_ideals
    R1 = Module.free(veronese, 1)
    spec = FunctorSpec("ext", 2, R1, R1, I)
    assert length_sequence(spec, (2, 9)).values == [1, 2, 4, 6, 9, 12, 16, 20]
    m = Ideal(plane, plane.gens())
    spec = FunctorSpec("tor", 1, Module.free(plane, 1), m.quotient(), m)
    assert length_sequence(spec, (1, 4)).values == [2, 3, 4, 5]
    spec = FunctorSpec("ext", 0, R1, R1, I)
    assert length_sequence(spec, (1, 4)).values == [0, 0, 0, 0]


def test_ext_swapped_matches_direct(plane):
    m = Ideal(plane, plane.gens())
    k = m.quotient()
    spec = FunctorSpec("ext-swapped", 2, Module.free(plane, 1), k, m)
    seq = length_sequence(spec, (1, 4)).values
    direct = [ext(2, k, module_mod_power(Module.free(plane, 1), m, n)).length()
              for n in range(1, 5)]
    assert seq == direct


def test_parallel_evaluation_is_deterministic(plane):
    m = Ideal(plane, plane.gens())
    spec = FunctorSpec("tor", 1, Module.free(plane, 1), m.quotient(), m)
    assert length_sequence(spec, (1, 5), workers=2).values == \
        length_sequence(spec, (1, 5)).values
