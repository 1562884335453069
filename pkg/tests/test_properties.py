"""Invariants checked on random input."""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rtalg.rewrite import CARTAN, LOWERING, RAISING
from rtalg.verma import build_verma, composition_multiplicities
from rtalg.zoo import build

NAMES = ["u_sl2", "u_gl_2", "uq_sl2_coroot", "uq_sl2_coweight", "uq_sl2_torsion", "heisenberg_ext",
         "quiver_rtla", "hecke_gl_1", "hecke_gl_2", "hecke_sp_2", "sympl_osc"]
ALG = {n: build(n) for n in NAMES}
RANK = {LOWERING: 0, CARTAN: 1, RAISING: 2}


def words(A, max_degree=6):
    def trim(w):
        out, d = [], 0
        for a in w:
            d += A.gens[a].degree
            if d > max_degree:
                break
            out.append(a)
        return tuple(out)
    return st.lists(st.integers(0, A.n - 1), max_size=max_degree).map(trim)


def elements(A):
    return st.lists(st.tuples(words(A, 4), st.integers(-3, 3).filter(bool)), min_size=1, max_size=3) \
        .map(lambda ts: A.normal_form({w: c for w, c in ts}))


@pytest.mark.parametrize("name", NAMES)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_normal_form_preserves_weight_and_is_idempotent(name, data):
    A = ALG[name]
    w = data.draw(words(A))
    x = A.normal_form({w: 1})
    for u in x.terms:
        assert A.ad_weight(u) == A.ad_weight(w)
        classes = [RANK[A.gens[a].cls] for a in u]
        assert classes == sorted(classes)
    assert A.normal_form(x.terms) == x


@pytest.mark.parametrize("name", NAMES)
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_anti_involution_laws(name, data):
    A = ALG[name]
    x, y = data.draw(elements(A)), data.draw(elements(A))
    i = A.antihom_map()
    assert A.apply_antihom(i, x * y) == A.apply_antihom(i, y) * A.apply_antihom(i, x)
    assert A.apply_antihom(i, A.apply_antihom(i, x)) == x


@pytest.mark.parametrize("name", NAMES)
def test_anti_involution_negates_generator_weights(name):
    A = ALG[name]
    i = A.antihom_map()
    for g in A.gens:
        img = i[A.index[g.name]]
        assert img.ad_weight() == -g.root


@settings(max_examples=30, deadline=None)
@given(st.integers(-6, 6), st.integers(1, 3), st.integers(3, 7))
def test_multiplicities_account_for_every_weight_space(num, den, depth):
    A = ALG["u_sl2"]
    lam = A.model.weight([Fraction(num, den)])
    sl = build_verma(A, lam, depth)
    comp = composition_multiplicities(A, lam, depth, sl=sl)
    total = {}
    for mu, m in comp.multiplicities.items():
        base = sum(comp.thetas[mu])
        for theta, d in comp.simple_dims[mu].items():
            total[base + sum(theta)] = total.get(base + sum(theta), 0) + m * d
    assert total == {k: 1 for k in range(depth + 1)}


@settings(max_examples=15, deadline=None)
@given(st.integers(-3, 3), st.integers(-3, 3))
def test_multiplicities_account_gl3(a, b):
    A = build("u_gl_3")
    lam = A.model.weight([a, b, 0])
    sl = build_verma(A, lam, 3)
    comp = composition_multiplicities(A, lam, 3, sl=sl)
    total = {}
    for mu, m in comp.multiplicities.items():
        t0 = comp.thetas[mu]
        for theta, d in comp.simple_dims[mu].items():
            key = tuple(x + y for x, y in zip(t0, theta))
            total[key] = total.get(key, 0) + m * d
    assert total == {sl.spaces[o].theta: sl.spaces[o].dim for o in sl.order}
