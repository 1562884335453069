from fractions import Fraction

import pytest
import sympy as sp

import _oracles as orc
from rtalg.rewrite import LOWERING, RAISING
from rtalg.scalars import Q
from rtalg.zoo import (ZeroWeightError, ZooError, build, check_anti_involution, check_hopf,
                       expand_l_series, expand_r_series, find_duflo_delta, generator_weights,
                       gl_duflo_candidate, l_series_j_identity, linv_identity, list_zoo,
                       r_transpose_identity, restrict, symmetrize, tensor_product)
from rtalg.zoo.checks import _TensorPowers
from rtalg.zoo.families import SP_SCALE
from rtalg.zoo.hecke import SymPolynomial, generic_matrix, gl_coord_map, l_series_full


# -- families ---------------------------------------------------------------

def test_list_zoo_has_every_family():
    names = set(list_zoo())
    for n in ("u_sl2", "u_gl_n", "uq_sl2_gamma", "heisenberg_ext", "quiver_rtla", "hecke_gl_n",
              "hecke_sp_2n", "sympl_osc", "uq_sl2_torsion", "hecke_gl_2"):
        assert n in names


def test_unknown_family():
    with pytest.raises(ZooError, match="nope"):
        build("nope")


def test_u_sl2_relations_and_antihom():
    A = build("u_sl2")
    assert A.parse("[e,f]") == A.gen("h")
    assert A.parse("[h,e]") == A.parse("2*e")
    assert A.parse("[h,f]") == A.parse("-2*f")
    assert A.antihom == {"e": "f", "f": "e", "h": "h"}


def test_u_gl_n_bounds():
    assert build("u_gl_n", n=3).check_pbw(4).ok
    with pytest.raises(ZooError):
        build("u_gl_n", n=4)


def test_quiver_rejects_cycles():
    with pytest.raises(ZooError):
        build("quiver_rtla", vertices="1,2", arrows="a:1>2,b:2>1")
    with pytest.raises(ZooError):
        build("quiver_rtla", vertices="1", arrows="a:1>1")


def test_quiver_three_vertices_paths():
    A = build("quiver_rtla", vertices="1,2,3", arrows="a:1>2,b:2>3")
    assert A.check_pbw(6).ok
    names = {g.name for g in A.gens}
    assert {"a", "b", "a_b", "sa", "sb", "sa_b"} <= names


def test_tensor_product_alphabet():
    A = tensor_product([build("u_sl2"), build("u_sl2")])
    assert sorted(g.name for g in A.gens) == sorted(
        f"{p}.{n}" for p in "AB" for n in ("e", "f", "h"))
    assert A.parse("A.e*B.f") == A.parse("B.f*A.e")
    assert A.parse("[A.e,A.f]") == A.gen("A.h")
    assert A.check_pbw(6).ok
    assert check_anti_involution(A).ok


def test_sp_bracket_of_module_generators():
    for b in ("1", "3"):
        A = build("hecke_sp_2", beta0=b)
        assert A.parse("[e1, e2]") == A.scalar(Fraction(b) * SP_SCALE)
    assert SP_SCALE == -1


def test_hecke_gl1_relation_is_r_series():
    A = build("hecke_gl_1", beta="1,2,3")
    assert A.parse("[v1, vd1]") == A.parse("1 + 4*E11 + 9*E11^2")


def test_sympl_osc_bracket():
    A = build("sympl_osc", z="0,1")
    assert A.parse("[x, y]") == A.parse("2*f*e + h + h^2/2")
    assert A.parse("[e, y]") == A.gen("x")


# -- generating functions ------------------------------------------------------

def _sym_matrix(n):
    return sp.Matrix(n, n, lambda j, k: sp.Symbol(f"a{j + 1}{k + 1}"))


@pytest.mark.parametrize("n,i_max", [(1, 4), (2, 4), (3, 2)])
def test_r_series_against_sympy(n, i_max):
    M = _sym_matrix(n)
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            ours = expand_r_series(n, x, y, i_max)
            ref = orc.r_series(n, x, y, i_max, M)
            assert [orc.sympoly_to_sympy(p) for p in ours] == ref


def test_r_series_closed_forms():
    for k, r in enumerate(expand_r_series(1, 1, 1, 4)):
        assert r == SymPolynomial({(("a11", k),) if k else (): k + 1})
    r = expand_r_series(2, 1, 2, 1)
    assert r[0] == 0
    assert r[1] == SymPolynomial.var("a12")
    r = expand_r_series(2, 1, 1, 1)
    assert r[0] == 1
    assert r[1] == SymPolynomial.var("a11") * 2 + SymPolynomial.var("a22")


def test_r_series_bounds():
    with pytest.raises(ValueError):
        expand_r_series(4, 1, 1, 1)
    with pytest.raises(ValueError):
        expand_r_series(2, 1, 1, 5)


def test_l_series_against_sympy():
    a, b, c = sp.symbols("a11 a12 a21")
    M = sp.Matrix([[a, b], [c, -a]])
    for x in (1, 2):
        for y in (1, 2):
            full = l_series_full(x, y, 4)
            ref = orc.l_series(x, y, 4, M)
            assert [orc.sympoly_to_sympy(p) for p in full] == ref
            assert ref[1] == 0 and ref[3] == 0


def test_l_series_closed_forms():
    l0, l2, _ = expand_l_series(1, 1, 2, 4)
    assert l0 == 1
    # l2 = omega(x, A^2 y) + omega(x, y) c2 with c2 the T^2 coefficient of det(1 - TA)^-1
    a, b, c = sp.symbols("a11 a12 a21")
    M = sp.Matrix([[a, b], [c, -a]])
    T = sp.Symbol("T")
    c2 = sp.series(1 / (sp.eye(2) - T * M).det(), T, 0, 3).removeO().coeff(T, 2)
    omega_A2 = (M * M)[1, 1]       # omega(e1, A^2 e2) is the (2, 2) entry
    assert orc.sympoly_to_sympy(l2) == sp.expand(omega_A2 + c2)


def test_odd_l_coefficient_on_non_traceless_matrix():
    A = generic_matrix(2)
    with pytest.raises(ArithmeticError):
        expand_l_series(1, 1, 2, 2, A=A)


def test_hecke_identities():
    assert r_transpose_identity(1, 3) == []
    assert r_transpose_identity(2, 3) == []
    assert linv_identity() == []
    assert l_series_j_identity(4) == []


def test_symmetrize_examples():
    A = build("u_sl2")
    cmap = {"x": "h", "y": "e"}
    p = SymPolynomial.var("x") * SymPolynomial.var("y")
    assert symmetrize(p, A, cmap) == A.parse("h*e - e")
    assert symmetrize(SymPolynomial.var("x"), A, cmap) == A.gen("h")
    G = build("u_gl_2")
    p = SymPolynomial.var("a12") * SymPolynomial.var("a21")
    assert symmetrize(p, G, gl_coord_map(2)) == G.parse("(E21*E12 + E12*E21)/2")
    with pytest.raises(KeyError):
        symmetrize(SymPolynomial.var("z"), A, cmap)


# -- anti-involutions ------------------------------------------------------------

@pytest.mark.parametrize("name", ["u_sl2", "u_gl_3", "uq_sl2_coroot", "uq_sl2_coweight",
                                  "uq_sl2_torsion", "heisenberg_ext", "quiver_rtla", "hecke_gl_1",
                                  "hecke_gl_2", "hecke_sp_2", "sympl_osc"])
def test_builtin_anti_involutions_pass(name):
    r = check_anti_involution(build(name))
    assert r.ok, r.failures()


def test_sp_sign_dropped_fails_on_module_rule():
    r = check_anti_involution(build("hecke_sp_2n_sign_dropped"))
    assert not r.ok
    assert any("v11" in f["check"] for f in r.failures())


def test_gl_sign_dropped_is_still_an_anti_involution():
    # the two signs enter every rule as a product, so dropping both changes nothing
    r = check_anti_involution(build("hecke_gl_n_sign_dropped", n=1, beta="2"))
    assert r.ok


def test_broken_assignment_reports_rule():
    A = build("u_sl2")
    r = check_anti_involution(A, {"e": "f", "f": "e", "h": "-h"})
    assert not r.ok


# -- Hopf data ---------------------------------------------------------------------

@pytest.mark.parametrize("name", ["uq_sl2_coroot", "uq_sl2_coweight", "uq_sl2_torsion"])
def test_hopf_axioms(name):
    r = check_hopf(build(name))
    assert r.ok, r.failures()
    checks = {it["check"] for it in r.items}
    assert "q-Serre relations" in checks
    assert r.witness[0] == "e"


def test_hopf_torsion_sign():
    assert check_hopf(build("uq_sl2_torsion", m=4, nu_t=-1)).ok


def test_antipode_example_by_hand():
    A = build("uq_sl2")
    S_e, Kinv = A.parse("-e*K"), A.gen("Kinv")
    assert S_e * Kinv + A.gen("e") == A.zero()


def test_st_and_ts_on_e():
    A = build("uq_sl2")
    _, st, ts = check_hopf(A).witness
    assert st == A.parse("-Kinv*f")
    assert ts == A.parse("-f*Kinv")


def test_hopf_missing():
    with pytest.raises(ValueError):
        check_hopf(build("u_sl2"))


def test_broken_coproduct_detected():
    A = build("uq_sl2")
    A.hopf = dict(A.hopf)
    A.hopf["delta"] = dict(A.hopf["delta"], e="e@K + 1@e")
    r = check_hopf(A)
    assert not r.ok


def test_tensor_square_embedding():
    A = build("uq_sl2")
    tp = _TensorPowers(A)
    x = A.parse("e*K")
    y = tp.embed(x, tp.A2, "B")
    assert y == tp.A2.parse("B.e*B.K")


# -- restriction and grading elements ----------------------------------------------

def test_restrict_coweight_to_coroot():
    A = build("uq_sl2_coweight")
    R = restrict(A, ["L^2"])
    assert R.model.coords == ["K"]
    assert R.check_pbw(6).ok
    assert {g.name for g in R.gens} == {"e", "f", "K", "Kinv"}
    assert restrict(A, ["L"]) is A
    with pytest.raises(ZooError):
        restrict(A, ["L^3"])


def test_restrict_torsion_drops_t():
    A = build("uq_sl2_torsion")
    assert restrict(A, ["K", "t"]) is A
    assert restrict(A, ["K"]).model.coords == ["K"]


def test_duflo_gl2_candidate():
    A = build("hecke_gl_2")
    r = find_duflo_delta(generator_weights(A), candidate=gl_duflo_candidate(2))
    assert gl_duflo_candidate(2) == (3, -1)
    assert r.candidate_valid
    assert all(v != 0 for v in r.values)
    raising = [g for g in A.gens if g.cls == RAISING]
    lowering = [g for g in A.gens if g.cls == LOWERING]
    assert all(sum(a * b for a, b in zip((3, -1), g.offset)) > 0 for g in raising)
    assert all(sum(a * b for a, b in zip((3, -1), g.offset)) < 0 for g in lowering)


def test_duflo_sl2_adjoint():
    r = find_duflo_delta([(2,), (-2,)], candidate=(1,))
    assert r.candidate_values == [2, -2]
    assert r.delta == (-1,)


def test_duflo_zero_weight():
    with pytest.raises(ZeroWeightError):
        find_duflo_delta([(1, 0), (0, 0)])


def test_coweight_degrees():
    A = build("uq_sl2_coweight")
    assert A.parse("e*L") == A.parse("L*e") * Q ** -1
