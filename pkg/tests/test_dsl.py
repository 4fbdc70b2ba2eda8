import pytest
from hypothesis import given, settings, strategies as st

from hgl.lab import ScenarioError, parse_scenario
from hgl.lab.runner import BUILTINS, FILE_SCENARIOS, load_scenario, scenario_text

BASE = """ring R vars x y
ideal m = x, y
functor tor i=1 first=quotient(m^n) second=quotient(m)
range 1 8
"""


def test_shipped_veronese_file():
    spec = load_scenario("veronese-ext2")
    assert spec.variables == ("U", "V", "W")
    assert spec.relations == ["V^2 - U*W"]
    assert spec.ideals == {"I": ["U", "V"]}
    assert (spec.kind, spec.i, spec.n_range) == ("ext", 2, (2, 12))
    assert spec.oracle and spec.audit_dim and spec.audit_spread


@pytest.mark.parametrize("name", FILE_SCENARIOS)
def test_round_trip_shipped(name):
    spec = load_scenario(name)
    assert parse_scenario(spec.pretty()) == spec


def test_registry_names():
    assert set(BUILTINS) == {"veronese-ext2", "veronese-duality", "kodiyalam-tor",
                             "placekeeper-tor", "cm-degree", "artin-rees-probe", "top-soc"}


def test_empty_input():
    for text in ("", "   \n", "# only a comment\n"):
        with pytest.raises(ScenarioError) as info:
            parse_scenario(text)
        assert (info.value.line, info.value.column) == (1, 1)


def test_unknown_ideal_name():
    text = BASE.replace("quotient(m^n)", "quotient(J^n)")
    with pytest.raises(ScenarioError, match="unknown name 'J'") as info:
        parse_scenario(text)
    assert info.value.line == 3
    assert info.value.column == text.splitlines()[2].index("J") + 1


def test_unknown_module_name():
    with pytest.raises(ScenarioError, match="unknown name 'L'"):
        parse_scenario(BASE + "compose tor j=0 with=L\n")


def test_inconsistent_characteristic():
    with pytest.raises(ScenarioError, match="inconsistent characteristic") as info:
        parse_scenario("char 7\nchar 11\n" + BASE)
    assert info.value.line == 2


def test_polynomial_error_column():
    text = "ring R vars x y\nideal m = x, y +* x\n" + BASE.split("\n", 2)[2]
    with pytest.raises(ScenarioError) as info:
        parse_scenario(text)
    assert info.value.line == 2 and info.value.column > 10


@pytest.mark.parametrize("bad,line", [
    ("frobnicate 3\n", 5),
    ("range 5 2\n", 5),
    ("fit max_period 0\n", 5),
    ("audit dim width\n", 5),
])
def test_bad_lines(bad, line):
    with pytest.raises(ScenarioError) as info:
        parse_scenario(BASE + bad)
    assert info.value.line == line


def test_varying_argument_checked():
    with pytest.raises(ScenarioError):
        parse_scenario(BASE.replace("first=quotient(m^n) second=quotient(m)",
                                    "first=quotient(m) second=quotient(m^n)"))


def test_matrix_shape_checked():
    with pytest.raises(ScenarioError, match="not 1x2"):
        parse_scenario("ring R vars x y\nmodule k = coker 1x2 [ x ]\n" + BASE.split("\n", 1)[1])


def test_declarations_only_mode():
    spec = parse_scenario("ring R vars x y\nideal I = x, y\n", require_functor=False)
    assert spec.kind is None
    with pytest.raises(ScenarioError, match="no functor"):
        parse_scenario("ring R vars x y\nideal I = x, y\n")


names = st.sampled_from(["a", "b", "c"])
poly = st.builds(lambda c, v, e: f"{c}*{v}^{e}", st.integers(1, 9), names, st.integers(1, 3))


@settings(max_examples=40, deadline=None)
@given(st.lists(poly, min_size=1, max_size=3), st.integers(0, 3), st.integers(1, 4),
       st.integers(0, 5), st.sampled_from(["ext", "tor"]), st.booleans())
def test_round_trip_random(gens, i, n0, span, kind, oracle):
    text = (f"ring R vars a b c\nideal I = {', '.join(gens)}\n"
            f"module k = coker 1x3 [ a, b, c ]\n"
            f"functor {kind} i={i} first=quotient(I^n, k) second=R\n"
            f"range {n0} {n0 + span}\n" + ("oracle on\n" if oracle else ""))
    spec = parse_scenario(text)
    assert parse_scenario(spec.pretty()) == spec


def test_scenario_text_is_packaged():
    assert "functor" in scenario_text("cm-degree")
