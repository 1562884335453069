import pytest

from rtalg.expr import ParseError
from rtalg.rewrite import (BACKEND, LOWERING, RAISING, Generator, MissingRuleError, Presentation,
                           PresentationError, PresentationFileError, Relation, equivalent,
                           export_presentation, parse_presentation)
from rtalg.rewrite import _kernel_py
from rtalg.weights import RootVector, WeightModel
from rtalg.zoo import build

ZOO = ["u_sl2", "u_gl_2", "u_gl_3", "uq_sl2_coroot", "uq_sl2_coweight", "uq_sl2_torsion",
       "heisenberg_ext", "quiver_rtla", "hecke_gl_1", "hecke_gl_2", "hecke_sp_2", "sympl_osc",
       "tensor(u_sl2,heisenberg_ext)"]


@pytest.fixture(scope="module")
def sl2():
    return build("u_sl2")


def test_sl2_normal_forms(sl2):
    assert sl2.parse("e*f") == sl2.parse("f*e + h")
    assert sl2.parse("e*f*f").render() == "f^2*e + 2*f*h - 2*f"
    assert sl2.parse("h*e") == sl2.parse("e*h + 2*e")
    assert sl2.parse("[h, f]") == sl2.parse("-2*f")


def test_normal_words_are_sorted(sl2):
    x = sl2.parse("e^3*f^2*h")
    for w in x.terms:
        lo, ca, ra = sl2.split(w)
        assert lo + ca + ra == w


def test_render_parse_round_trip(sl2):
    x = sl2.parse("e^2*f^3 - 1/2*h^2*e + 7")
    assert sl2.parse(x.render()) == x


def test_ad_weight_of_elements(sl2):
    assert sl2.parse("e*f*e").ad_weight() == RootVector([1])
    with pytest.raises(ValueError):
        sl2.parse("e + f").ad_weight()


@pytest.mark.parametrize("name", ZOO)
def test_zoo_is_locally_confluent(name):
    r = build(name).check_pbw(6)
    assert r.ok, r.failures[:2]
    assert "not a proof" in r.summary()


def test_corrupted_sl2_has_certificate():
    r = build("u_sl2_corrupted").check_pbw(6)
    assert not r.ok
    f = r.failures[0]
    assert f["word"] == "e*h*f"
    assert f["difference"].render() == "h"


def _tiny(relations, extra=()):
    m = WeightModel("additive", ["h"], [[2]])
    gens = [Generator("f", LOWERING, RootVector([-1]), (-2,)),
            Generator("e", RAISING, RootVector([1]), (2,))] + list(extra)
    return Presentation("tiny", m, gens, relations)


def test_missing_rule_names_pair():
    A = _tiny([])
    with pytest.raises(MissingRuleError) as exc:
        A.parse("e*f")
    assert exc.value.pair == ("e", "f")


def test_non_decreasing_rule_rejected():
    with pytest.raises(PresentationError):
        _tiny([Relation(("e", "f"), {("e", "f", "f"): 1})])


def test_duplicate_and_bad_class_rejected():
    m = WeightModel("additive", ["h"], [[2]])
    with pytest.raises(PresentationError):
        Presentation("x", m, [Generator("e", RAISING, RootVector([1]), (2,))] * 2, [])
    with pytest.raises(PresentationError):
        Presentation("x", m, [Generator("e", "sideways", RootVector([1]), (2,))], [])
    with pytest.raises(PresentationError):      # raising generator with a negative root
        Presentation("x", m, [Generator("e", RAISING, RootVector([-1]), (-2,))], [])
    with pytest.raises(PresentationError):      # weight does not restrict to the root
        Presentation("x", m, [Generator("e", RAISING, RootVector([1]), (3,))], [])


def test_unknown_symbol_in_expression(sl2):
    with pytest.raises(ParseError) as exc:
        sl2.parse("e*g")
    assert exc.value.token == "g"


def test_grouplike_inverse_and_torsion():
    A = build("uq_sl2_torsion", m=3)
    assert A.parse("K*Kinv") == A.one()
    assert A.parse("t^3") == A.one()
    assert A.parse("t^-1") == A.parse("t^2")
    assert A.parse("K^-2") == A.parse("Kinv^2")
    with pytest.raises(PresentationError):
        A.parse("e^-1")


def test_antihom_is_antimultiplicative(sl2):
    x, y = sl2.parse("e*h + f"), sl2.parse("f^2*e - h")
    lhs = sl2.apply_antihom(None, x * y)
    rhs = sl2.apply_antihom(None, y) * sl2.apply_antihom(None, x)
    assert lhs == rhs
    assert sl2.apply_antihom(None, sl2.apply_antihom(None, x)) == x


def test_backends_agree():
    assert BACKEND in ("cython", "python")
    for name in ("u_sl2", "uq_sl2", "hecke_gl_2"):
        A = build(name)
        pure = _kernel_py.Reducer(A.rules, A.must_pairs, A.field.one)
        for w in [(A.n - 1, 0, A.n - 1, 0), tuple(reversed(range(A.n))), (A.n - 1,) * 3 + (0,) * 3]:
            assert pure.nf_word(w) == A.reducer.nf_word(w)


# -- file format ---------------------------------------------------------

@pytest.mark.parametrize("name", ZOO + ["u_sl2_corrupted", "hecke_gl_n_sign_dropped"])
def test_export_round_trip(name):
    A = build(name)
    text = export_presentation(A)
    B = parse_presentation(text)
    assert equivalent(A, B) == (True, "")
    assert export_presentation(B) == text


SMALL = """
[meta]
name = small

[scalars]
field = Q

[weights]
kind = additive
coords = h
simple_roots = [2]

[generators]
f: lowering; root=[-1]; weight=[-2]
h: cartan; root=[0]; weight=[0]; eval=0:1
e: raising; root=[1]; weight=[2]

[relations]
e*f = f*e + h
e*h = h*e - 2*e
h*f = f*h - 2*f

[antihom]
e = f
f = e
h = h

[central]
Omega = 2*f*e + h + h^2/2
"""


def test_hand_written_file_matches_zoo():
    A = parse_presentation(SMALL)
    B = build("u_sl2")
    assert A.check_pbw(6).ok
    assert A.parse("e*f*f").render() == B.parse("e*f*f").render()


@pytest.mark.parametrize("bad,token", [
    (SMALL.replace("[weights]", "[wieghts]"), "wieghts"),
    (SMALL.replace("e*f = f*e + h", "e*g = f*e + h"), "g"),
    (SMALL.replace("f: lowering", "f: downward"), "downward"),
    (SMALL.replace("h = h\n", "h = k\n", 1), "k"),
])
def test_file_errors_name_the_token(bad, token):
    with pytest.raises(PresentationFileError) as exc:
        parse_presentation(bad, source="bad.rta")
    assert exc.value.token == token
    assert "bad.rta" in str(exc.value)
