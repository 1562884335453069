"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` or ``python tests/test_acceptance.py``.
"""
import random
import sys
import time

import pytest

from rtalg.center import central_character, equal, is_central, named_central
from rtalg.rewrite import CARTAN, LOWERING, RAISING
from rtalg.ssets import block_partition, s3_closure
from rtalg.verma import build_verma, composition_multiplicities, simple_dims, singular_vectors, tcentral_jh
from rtalg.zoo import (build, check_anti_involution, check_hopf, find_duflo_delta, generator_weights,
                       linv_identity, r_transpose_identity)

PBW_SUITE = ["u_sl2", "u_gl_2", "uq_sl2_coroot", "uq_sl2_coweight", "uq_sl2_torsion",
             "heisenberg_ext", "quiver_rtla", "hecke_gl_1", "hecke_gl_2", "hecke_sp_2", "sympl_osc",
             "tensor(u_sl2,heisenberg_ext)"]


def criterion_1():
    t0 = time.perf_counter()
    bad = [n for n in PBW_SUITE if not build(n).check_pbw(6).ok]
    neg = build("u_sl2_corrupted").check_pbw(6)
    elapsed = time.perf_counter() - t0
    ok = not bad and not neg.ok and bool(neg.failures) and elapsed < 120
    cert = neg.failures[0]["word"] if neg.failures else None
    return ok, f"{len(PBW_SUITE)} algebras flat, failing={bad}, corrupted certificate at {cert}, {elapsed:.1f}s"


def _sl2_like(A, weight_text, neg_text, n):
    lam = A.model.parse(weight_text)
    sl = build_verma(A, lam, n + 3)
    sing = singular_vectors(sl)
    if [sl.spaces[v.offset].depth for v in sing] != [n + 1]:
        return False
    comp = composition_multiplicities(A, lam, n + 3, sl=sl)
    if comp.as_map() != {lam: 1, A.model.parse(neg_text): 1}:
        return False
    return sum(simple_dims(sl).values()) == n + 1


def criterion_2():
    A = build("u_sl2")
    bad = [n for n in range(6) if not _sl2_like(A, f"[{n}]", f"[{-n - 2}]", n)]
    return not bad, f"n=0..5, failing n={bad}"


def criterion_3():
    A = build("uq_sl2")
    bad = [n for n in range(4) if not _sl2_like(A, f"{{K: q^{n}}}", f"{{K: q^{-n - 2}}}", n)]
    return not bad, f"n=0..3 over Q(q), failing n={bad}"


def criterion_4():
    parts = []
    ok = True
    for name, lam in (("heisenberg_ext", "[0, 1]"), ("quiver_rtla", "[1, 2]")):
        A = build(name)
        rep = tcentral_jh(A, lam, 4)
        layers_ok = all(l["multiplicity"] == l["dim_B_minus"] for l in rep.layers)
        clo = s3_closure(A, lam, 4, 3)
        growing = len(clo.growth) == 3 and all(a < b for a, b in zip(clo.growth, clo.growth[1:]))
        ok &= rep.ok and rep.one_dimensional and layers_ok and growing and clo.truncated
        parts.append(f"{name}: layers {[l['multiplicity'] for l in rep.layers]} growth {clo.growth} "
                     f"truncated={clo.truncated}")
    return ok, "; ".join(parts)


def criterion_5():
    cases = [("u_sl2", {}, "Omega"), ("uq_sl2", {}, "C_q"), ("hecke_gl_1", {"beta": "3"}, "C"),
             ("sympl_osc", {"z": "0,1"}, "C")]
    parts, ok = [], True
    for name, params, label in cases:
        A = build(name, **params)
        rep = is_central(A, named_central(A)[label])
        full = [g for g, _ in rep.certificate] == [g.name for g in A.gens]
        ok &= rep.ok and full
        parts.append(f"{name}.{label}: {len(rep.certificate)} commutators vanish={rep.ok}")
    return ok, "; ".join(parts)


def criterion_6():
    A = build("u_sl2")
    chi = {n: central_character(A, A.model.parse(f"[{n}]")) for n in (1, -3, 0)}
    ok = equal(chi[1], chi[-3]) and not equal(chi[1], chi[0])
    bp = block_partition(A, ["[1]", "[-3]", "[-2]", "[0]", "[1/2]"], 6, 3)
    for cell in bp.cells:
        chis = [central_character(A, w) for w in cell]
        ok &= all(equal(chis[0], c) for c in chis)
    return ok, f"chi_1=chi_-3={chi[1].values['Omega']}, chi_0={chi[0].values['Omega']}, " \
               f"{len(bp.cells)} cells coherent"


def criterion_7():
    A = build("u_sl2")
    bp = block_partition(A, ["[1]", "[-3]", "[-2]", "[0]", "[1/2]"], 6, 3)
    cells = sorted(sorted(A.model.render(w) for w in c) for c in bp.cells)
    want = sorted([sorted(["[1]", "[-3]"]), sorted(["[0]", "[-2]"]), ["[1/2]"]])
    return cells == want, f"cells {cells}"


def criterion_8():
    r_ok = not r_transpose_identity(1, 3) and not r_transpose_identity(2, 3)
    l_ok = not linv_identity()
    gl = check_anti_involution(build("hecke_gl_2")).ok
    sp = check_anti_involution(build("hecke_sp_2")).ok
    control = check_anti_involution(build("hecke_gl_n_sign_dropped", n=1, beta="2"))
    sp_control = check_anti_involution(build("hecke_sp_2n_sign_dropped"))
    A = build("hecke_gl_2")
    duflo = find_duflo_delta(generator_weights(A), candidate=(3, -1)).candidate_valid
    ok = r_ok and l_ok and gl and sp and not control.ok and duflo
    detail = (f"r-transpose={r_ok} Linv={l_ok} gl_2={gl} sp_2={sp} duflo(3,-1)={duflo} "
              f"gl_1 sign-dropped control rejected={not control.ok} "
              f"(sp sign-dropped control rejected={not sp_control.ok})")
    if control.ok:
        detail += "; the gl_1 control is a valid anti-homomorphism since both signs enter each rule as a product"
    return ok, detail


def criterion_9():
    parts, ok = [], True
    for name in ("uq_sl2_coroot", "uq_sl2_coweight", "uq_sl2_torsion"):
        rep = check_hopf(build(name))
        w_ok = rep.witness is not None and rep.witness[0] == "e"
        ok &= rep.ok and w_ok
        parts.append(f"{name}: {sum(i['ok'] for i in rep.items)}/{len(rep.items)} checks, witness on "
                     f"{rep.witness[0] if rep.witness else None}")
    return ok, "; ".join(parts)


RANK = {LOWERING: 0, CARTAN: 1, RAISING: 2}


def _random_word(A, rng, max_degree=6):
    w, d = [], 0
    for _ in range(rng.randint(0, max_degree)):
        a = rng.randrange(A.n)
        if d + A.gens[a].degree > max_degree:
            break
        w.append(a)
        d += A.gens[a].degree
    return tuple(w)


def criterion_10():
    rng = random.Random(20240601)
    bad = []
    names = [n for n in PBW_SUITE if not n.startswith("tensor")]
    for name in names:
        A = build(name)
        for _ in range(1000):
            w = _random_word(A, rng)
            x = A.normal_form({w: 1})
            if any(A.ad_weight(u) != A.ad_weight(w) for u in x.terms) or A.normal_form(x.terms) != x:
                bad.append((name, A.render_word(w)))
                break
        i = A.antihom_map()
        if any(i[A.index[g.name]].ad_weight() != -g.root for g in A.gens):
            bad.append((name, "antihom weight"))
    return not bad, f"{len(names)} algebras x 1000 words, failures={bad}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10]


def _line(n, ok, detail):
    return f"CRITERION {n}: {'PASS' if ok else 'FAIL'} {detail}"


@pytest.mark.parametrize("n", range(1, 11))
def test_criterion(n, capsys):
    ok, detail = CRITERIA[n - 1]()
    with capsys.disabled():
        print("\n" + _line(n, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for n, fn in enumerate(CRITERIA, start=1):
        ok, detail = fn()
        failed += not ok
        print(_line(n, ok, detail), flush=True)
    sys.exit(1 if failed else 0)
