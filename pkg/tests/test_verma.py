from fractions import Fraction

import pytest
import sympy as sp

import _oracles as orc
from rtalg.verma import (TcentralHypothesisError, VermaError, build_verma,
                         composition_multiplicities, maximal_submodule, simple_dims,
                         singular_vectors, tcentral_hypothesis, tcentral_jh, verma_report)
from rtalg.zoo import build


@pytest.fixture(scope="module")
def sl2():
    return build("u_sl2")


@pytest.fixture(scope="module")
def uq():
    return build("uq_sl2")


def _e_coefficients(sl, A):
    """[c_k] with e . f^k v = c_k f^(k-1) v, read off the slice."""
    out = []
    for off in sl.order:
        if sl.spaces[off].depth == 0:
            continue
        (row,) = sl.matrix("e", off)
        out.append(row[0])
    return out


def _sympy_e_coefficients(lam, depth, bracket_on_weight):
    # e f^k v = f (e f^(k-1) v) + [e, f] f^(k-1) v, and [e, f] acts on weight lam - 2(k-1)
    c, out = sp.Integer(0), []
    for k in range(1, depth + 1):
        c = sp.simplify(c + bracket_on_weight(lam - 2 * (k - 1)))
        out.append(c)
    return out


@pytest.mark.parametrize("lam", [0, 3, -2, Fraction(1, 2), Fraction(-7, 3)])
def test_sl2_raising_matrix_oracle(sl2, lam):
    sl = build_verma(sl2, f"[{lam}]", 6)
    ours = [orc.scalar_to_sympy(c) for c in _e_coefficients(sl, sl2)]
    L = sp.Rational(lam.numerator, lam.denominator) if isinstance(lam, Fraction) else sp.Integer(lam)
    ref = _sympy_e_coefficients(L, 6, lambda w: w)
    assert ours == ref
    assert ref == [k * (L - k + 1) for k in range(1, 7)]


@pytest.mark.parametrize("n", [0, 1, 2, -3])
def test_uq_raising_matrix_oracle(uq, n):
    sl = build_verma(uq, f"{{K: q^{n}}}", 5)
    ours = _e_coefficients(sl, uq)
    ref = _sympy_e_coefficients(n, 5, orc.q_int)
    for k, (a, b) in enumerate(zip(ours, ref), start=1):
        assert orc.same(a, b)
        assert orc.same(a, orc.q_int(k) * orc.q_int(n - k + 1))


@pytest.mark.parametrize("n", range(6))
def test_sl2_finite_dimensional_quotients(sl2, n):
    lam = sl2.model.parse(f"[{n}]")
    sl = build_verma(sl2, lam, n + 3)
    sing = singular_vectors(sl)
    assert len(sing) == 1
    (v,) = sing
    assert sl.spaces[v.offset].depth == n + 1
    assert v.render(sl2) == (f"f^{n + 1}" if n else "f")
    comp = composition_multiplicities(sl2, lam, n + 3, sl=sl)
    assert comp.as_map() == {lam: 1, sl2.model.parse(f"[{-n - 2}]"): 1}
    assert sum(simple_dims(sl).values()) == n + 1


@pytest.mark.parametrize("n", range(4))
def test_uq_finite_dimensional_quotients(uq, n):
    lam = uq.model.parse(f"{{K: q^{n}}}")
    sl = build_verma(uq, lam, n + 3)
    sing = singular_vectors(sl)
    assert [sl.spaces[v.offset].depth for v in sing] == [n + 1]
    comp = composition_multiplicities(uq, lam, n + 3, sl=sl)
    assert comp.as_map() == {lam: 1, uq.model.parse(f"{{K: q^{-n - 2}}}"): 1}
    assert sum(simple_dims(sl).values()) == n + 1


def test_generic_weight_is_simple(sl2):
    comp = composition_multiplicities(sl2, "[1/2]", 6)
    assert list(comp.as_map().values()) == [1]
    assert not singular_vectors(build_verma(sl2, "[1/2]", 6))
    assert comp.horizon == 6


def test_antidominant_weight(sl2):
    sl = build_verma(sl2, "[-1]", 5)
    assert not singular_vectors(sl)
    assert all(sl.spaces[o].dim == d for o, d in simple_dims(sl).items())


def test_maximal_submodule_is_stable(sl2):
    # every raising image of Y lands in Y
    sl = build_verma(sl2, "[2]", 7)
    Y = maximal_submodule(sl)
    for off in sl.order:
        for vec in Y[off].basis():
            tgt = sl.target(sl2.index["e"], off)
            if tgt in Y:
                assert Y[tgt].contains(sl.apply(sl2.index["e"], off, vec))


def test_character_identity_sl2(sl2):
    # ch Z(n) = ch V(n) + ch V(-n-2) on every weight space of the slice
    n, D = 2, 8
    lam = sl2.model.parse(f"[{n}]")
    comp = composition_multiplicities(sl2, lam, D)
    total = {}
    for mu, m in comp.multiplicities.items():
        base = sum(comp.thetas[mu])
        for theta, d in comp.simple_dims[mu].items():
            total[base + sum(theta)] = total.get(base + sum(theta), 0) + m * d
    assert total == {k: 1 for k in range(D + 1)}


def test_hecke_sp_dimensions():
    A = build("hecke_sp_2")
    sl = build_verma(A, "[1]", 6)
    assert sl.dims_by_depth() == [1, 1, 2, 2, 3, 3, 4]


def test_heisenberg_dimensions_are_partitions():
    A = build("heisenberg_ext")
    sl = build_verma(A, "[0, 1]", 5)
    # two lowering generators of heights 1 and 2
    assert sl.dims_by_depth() == [1, 1, 2, 2, 3, 3]


@pytest.mark.parametrize("name,lam", [("heisenberg_ext", "[0, 1]"), ("heisenberg_ext", "[0, -5/2]"),
                                      ("quiver_rtla", "[1, 2]")])
def test_tcentral_layers(name, lam):
    A = build(name)
    rep = tcentral_jh(A, lam, 4)
    assert rep.ok
    assert rep.all_maximal and rep.one_dimensional
    for layer in rep.layers:
        assert layer["multiplicity"] == layer["dim_B_minus"]


def test_tcentral_hypothesis_failures():
    A = build("heisenberg_ext")
    assert tcentral_hypothesis(A, A.model.parse("[0, 1]")) is None
    with pytest.raises(TcentralHypothesisError) as exc:
        tcentral_jh(A, "[1, 1]", 3)
    assert exc.value.pair == ("a1", "am1")
    with pytest.raises(TcentralHypothesisError) as exc:
        tcentral_jh(build("u_sl2"), "[1]", 3)
    assert exc.value.pair == ("e", "f")


def test_negative_depth(sl2):
    with pytest.raises(VermaError):
        build_verma(sl2, "[0]", -1)


def test_verma_report_shape(sl2):
    rep = verma_report(sl2, "[1]", 4)
    assert rep["horizon"] == 4
    assert [s["dim"] for s in rep["weight_spaces"]] == [1] * 5
    assert rep["singular"][0]["coeffs"] == [{"monomial": "f^2", "coeff": "1"}]
    assert {(m["mu"], m["m"]) for m in rep["multiplicities"]} == {("[1]", 1), ("[-3]", 1)}


def test_rank_two_verma_gl3():
    A = build("u_gl_3")
    sl = build_verma(A, "[0, 0, 0]", 3)
    # Kostant partition function of A2 with three positive roots
    assert sl.dims_by_depth() == [1, 2, 4, 6]
    comp = composition_multiplicities(A, "[0, 0, 0]", 3, sl=sl)
    assert comp.multiplicities[A.model.parse("[0, 0, 0]")] == 1
    # dot-orbit of 0 truncated at depth 3: e, s1, s2, s1s2, s2s1, all multiplicity one
    assert sorted(comp.thetas.values()) == [(0, 0), (0, 1), (1, 0), (1, 2), (2, 1)]
    assert set(comp.multiplicities.values()) == {1}
