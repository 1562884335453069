"""Verification of anti-involutions and Hopf data, restriction, and the Duflo search."""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from ..rewrite.presentation import CARTAN, AlgebraEnv, Element, PresentationError
from ..expr import evaluate, parse
from .families import ZooError, tensor_product, uq_sl2_gamma


@dataclass
class CheckReport:
    name: str
    items: list = field(default_factory=list)    # dicts {check, ok, detail}

    @property
    def ok(self):
        return all(it["ok"] for it in self.items)

    def add(self, check, ok, detail=""):
        self.items.append({"check": check, "ok": bool(ok), "detail": detail})

    def failures(self):
        return [it for it in self.items if not it["ok"]]


def _formal_image(A, images, word, anti):
    """Image of a formal word under a (anti-)multiplicative map given on letters."""
    acc = A.one()
    seq = reversed(word) if anti else word
    for a in seq:
        acc = acc * images[a]
        if not acc:
            break
    return acc


def _rule_images(A, images, anti):
    """Yield (label, lhs word, image(lhs) - image(rhs)) for every rule."""
    for lhs, rhs in A.rules.items():
        left = _formal_image(A, images, lhs, anti)
        right = A.zero()
        for w, c in rhs:
            right = right + _formal_image(A, images, w, anti) * c
        yield A.rule_labels.get(lhs) or A.render_word(lhs), lhs, left - right


def _apply(A, images, x, anti):
    out = A.zero()
    for w, c in x.terms.items():
        out = out + _formal_image(A, images, w, anti) * c
    return out


def check_anti_involution(A, assignment=None) -> CheckReport:
    """Anti-multiplicativity on every rule, j^2 = id, j = id on H, weights negated."""
    rep = CheckReport("anti-involution")
    images = A.antihom_map(assignment)
    for label, lhs, diff in _rule_images(A, images, anti=True):
        rep.add(f"rule {label}", not diff,
                "" if not diff else f"j({A.render_word(lhs)}) - j(rhs) = {diff.render()}")
    for g in A.gens:
        gid = A.index[g.name]
        back = _apply(A, images, images[gid], anti=True)
        rep.add(f"j^2({g.name}) = {g.name}", back == A.gen(g.name),
                "" if back == A.gen(g.name) else back.render())
        img = images[gid]
        if g.cls == CARTAN:
            rep.add(f"j({g.name}) = {g.name}", img == A.gen(g.name), img.render())
        else:
            ws = img.ad_weights()
            ok = ws == {-g.root}
            rep.add(f"weight of j({g.name}) is minus weight of {g.name}", ok, img.render())
    return rep


# ---------------------------------------------------------------------------
# Hopf data
# ---------------------------------------------------------------------------


class _TensorPowers:
    """A, A (x) A and A (x) A (x) A with embeddings between them."""

    def __init__(self, A):
        self.A = A
        self.A2 = tensor_product([A, A], prefixes="AB")
        self.A3 = tensor_product([A, A, A], prefixes="ABC")

    def embed(self, x, target, prefix):
        """Element of A placed in tensor slot ``prefix`` of ``target``."""
        A = self.A
        ids = [target.index[f"{prefix}.{g.name}"] for g in A.gens]
        return target.normal_form({tuple(ids[a] for a in w): c for w, c in x.terms.items()})

    def relabel(self, x, source, target, mapping):
        ids = {}
        for a, g in enumerate(source.gens):
            p, name = g.name.split(".", 1)
            ids[a] = target.index[f"{mapping[p]}.{name}"]
        return target.normal_form({tuple(ids[a] for a in w): c for w, c in x.terms.items()})

    def split(self, x):
        """Element of A (x) A as a list of (coeff, left word, right word) over A."""
        A, A2 = self.A, self.A2
        out = []
        for w, c in x.terms.items():
            left, right = [], []
            for a in w:
                p, name = A2.gens[a].name.split(".", 1)
                (left if p == "A" else right).append(A.index[name])
            out.append((c, tuple(left), tuple(right)))
        return out


def _parse_tensor(tp, text):
    A, A2 = tp.A, tp.A2

    def tens(a, b):
        if not isinstance(a, Element) or a.pres is not A or not isinstance(b, Element) \
                or b.pres is not A:
            raise PresentationError("'@' needs elements of the algebra on both sides")
        return tp.embed(a, A2, "A") * tp.embed(b, A2, "B")

    val = evaluate(parse(text), AlgebraEnv(A, tensor=tens))
    if isinstance(val, Element) and val.pres is A:
        if val.is_scalar():
            return A2.scalar(val.scalar_value())
        raise PresentationError(f"coproduct {text!r} is not in A (x) A")
    return val


def check_hopf(A) -> CheckReport:
    if not A.hopf:
        raise PresentationError(f"{A.name} has no Hopf data")
    rep = CheckReport("hopf")
    tp = _TensorPowers(A)
    A2, A3 = tp.A2, tp.A3
    H = A.hopf
    for key in ("delta", "eps", "S"):
        missing = [g.name for g in A.gens if g.name not in H.get(key, {})]
        if missing:
            raise PresentationError(f"Hopf data {key} undefined on {missing[0]}")
    delta = {A.index[g]: _parse_tensor(tp, t) for g, t in H["delta"].items()}
    eps = {A.index[g]: A.field.parse(t) for g, t in H["eps"].items()}
    S = {A.index[g]: A.parse(t) for g, t in H["S"].items()}

    def delta_word(w):
        acc = A2.one()
        for a in w:
            acc = acc * delta[a]
        return acc

    def eps_word(w):
        c = A.field.one
        for a in w:
            c = c * eps[a]
        return c

    def S_elem(x):
        return _apply(A, S, x, anti=True)

    for g in A.gens:
        gid = A.index[g.name]
        d = delta[gid]
        # coassociativity
        left = A3.zero()
        right = A3.zero()
        for c, u, v in tp.split(d):
            du = tp.relabel(delta_word(u), A2, A3, {"A": "A", "B": "B"})
            left = left + du * tp.embed(Element(A, {v: A.field.one}), A3, "C") * c
            dv = tp.relabel(delta_word(v), A2, A3, {"A": "B", "B": "C"})
            right = right + tp.embed(Element(A, {u: A.field.one}), A3, "A") * dv * c
        rep.add(f"coassociativity on {g.name}", left == right, (left - right).render())
        # counit
        l1 = A.zero()
        r1 = A.zero()
        for c, u, v in tp.split(d):
            l1 = l1 + Element(A, {v: A.field.one}) * (c * eps_word(u))
            r1 = r1 + Element(A, {u: A.field.one}) * (c * eps_word(v))
        ok = l1 == A.gen(g.name) and r1 == A.gen(g.name)
        rep.add(f"counit on {g.name}", ok, f"{l1.render()} | {r1.render()}")
        # antipode
        m1 = A.zero()
        m2 = A.zero()
        for c, u, v in tp.split(d):
            U = Element(A, {u: A.field.one})
            V = Element(A, {v: A.field.one})
            m1 = m1 + S_elem(U) * V * c
            m2 = m2 + U * S_elem(V) * c
        target = A.scalar(eps[gid])
        rep.add(f"antipode on {g.name}", m1 == target and m2 == target,
                f"m(S@id)D = {m1.render()}, m(id@S)D = {m2.render()}")
    # structure maps respect every relation
    for lhs, rhs in A.rules.items():
        label = A.rule_labels.get(lhs) or A.render_word(lhs)
        dl = delta_word(lhs)
        dr = A2.zero()
        el = eps_word(lhs)
        er = A.field.zero
        for w, c in rhs:
            dr = dr + delta_word(w) * c
            er = er + eps_word(w) * c
        rep.add(f"Delta respects {label}", dl == dr, (dl - dr).render())
        rep.add(f"eps respects {label}", el == er, "")
    for label, lhs, diff in _rule_images(A, S, anti=True):
        rep.add(f"S respects {label}", not diff, diff.render())
    rep.add("q-Serre relations", True, "vacuous in rank 1: no Serre relation is present")

    if "T" in H:
        T = {A.index[g]: A.parse(t) for g, t in H["T"].items()}
        for label, lhs, diff in _rule_images(A, T, anti=False):
            rep.add(f"T respects {label}", not diff, diff.render())
        for g in A.gens:
            gid = A.index[g.name]
            back = _apply(A, T, T[gid], anti=False)
            rep.add(f"T^2({g.name}) = {g.name}", back == A.gen(g.name), back.render())
            if g.grouplike:
                inv = A.gen(g.name).inverse()
                rep.add(f"T inverts {g.name}", T[gid] == inv, T[gid].render())
            elif g.cls != CARTAN:
                rep.add(f"T negates the weight of {g.name}", T[gid].ad_weights() == {-g.root},
                        T[gid].render())
        ST = {a: S_elem(T[a]) for a in T}
        TS = {a: _apply(A, T, S[a], anti=False) for a in S}
        for label, lhs, diff in _rule_images(A, ST, anti=True):
            rep.add(f"ST respects {label}", not diff, diff.render())
        for g in A.gens:
            gid = A.index[g.name]
            back = _apply(A, ST, ST[gid], anti=True)
            rep.add(f"(ST)^2({g.name}) = {g.name}, i.e. S(TST({g.name})) = {g.name}",
                    back == A.gen(g.name), back.render())
            if g.cls == CARTAN:
                rep.add(f"ST fixes {g.name}", ST[gid] == A.gen(g.name), ST[gid].render())
        witness = None
        for g in reversed(A.gens):      # raising generators first
            gid = A.index[g.name]
            if ST[gid] != TS[gid]:
                witness = (g.name, ST[gid], TS[gid])
                break
        rep.add("ST differs from TS", witness is not None,
                "" if witness is None else
                f"ST({witness[0]}) = {witness[1].render()}, TS({witness[0]}) = {witness[2].render()}")
        rep.witness = witness
    return rep


# ---------------------------------------------------------------------------
# restriction of fat quantum groups
# ---------------------------------------------------------------------------

_MONO_RE = re.compile(r"^\s*([A-Za-z_]\w*)\s*(?:\^\s*(-?\d+))?\s*$")


def _exponents(model, text):
    vec = [0] * model.rank
    for part in text.split("*"):
        m = _MONO_RE.match(part)
        if not m or m.group(1) not in model.coords:
            raise ZooError(f"bad subgroup generator {text!r}")
        vec[model.coords.index(m.group(1))] += int(m.group(2) or 1)
    return vec


def restrict(A, subgroup):
    """Res to the subgroup of Gamma generated by ``subgroup`` (monomials in Gamma's generators)."""
    if A.family != "uq_sl2_gamma":
        raise ZooError("restrict applies to the uq_sl2_gamma family")
    lattice = A.params["lattice"]
    model = A.model
    vecs = [_exponents(model, s) for s in subgroup]
    k_exp = {"coroot": 1, "coweight": 2, "torsion": 1}[lattice]
    g = 0
    has_t = False
    for v in vecs:
        if lattice == "torsion" and v[0] and v[1] % model.orders[1]:
            raise ZooError("mixed free/torsion subgroup generators are not supported")
        g = gcd(g, v[0])
        if lattice == "torsion" and v[1] % model.orders[1]:
            if gcd(v[1], model.orders[1]) != 1:
                raise ZooError("proper torsion subgroups are not supported")
            has_t = True
    if g == 0 or k_exp % g:
        raise ZooError("subgroup does not contain K")
    full_free = g == 1
    full_torsion = lattice != "torsion" or has_t
    if full_free and full_torsion:
        return A
    if lattice == "torsion" and full_free:
        return uq_sl2_gamma("coroot")
    if lattice == "coweight" and g == 2:
        return uq_sl2_gamma("coroot")
    raise ZooError("unsupported subgroup")


# ---------------------------------------------------------------------------
# Duflo-type grading element
# ---------------------------------------------------------------------------


class ZeroWeightError(ValueError):
    """A listed weight is zero, so no delta can separate it."""


@dataclass
class DufloResult:
    delta: tuple | None
    bound: int
    values: list
    candidate: tuple | None = None
    candidate_valid: bool | None = None
    candidate_values: list | None = None


def _pair(delta, w):
    return sum(Fraction(a) * Fraction(b) for a, b in zip(delta, w))


def _valid(delta, weights):
    for w in weights:
        v = _pair(delta, w)
        if v == 0 or v.denominator != 1:
            return False
    return True


def find_duflo_delta(weights, candidate=None, max_bound=1 << 10) -> DufloResult:
    """First integer functional (lexicographic, growing box) nonzero on every weight."""
    weights = [tuple(Fraction(x) for x in (w.coords if hasattr(w, "coords") else w))
               for w in weights]
    if not weights:
        raise ValueError("empty weight list")
    r = len(weights[0])
    for w in weights:
        if not any(w):
            raise ZeroWeightError("the zero weight is in the list; no grading element exists")
    found = None
    bound = 1
    while bound <= max_bound:
        for d in itertools.product(range(-bound, bound + 1), repeat=r):
            if _valid(d, weights):
                found = d
                break
        if found is not None:
            break
        bound *= 2
    res = DufloResult(found, bound if found else max_bound,
                      [int(_pair(found, w)) for w in weights] if found else [])
    if candidate is not None:
        res.candidate = tuple(candidate)
        res.candidate_valid = _valid(candidate, weights)
        res.candidate_values = [_pair(candidate, w) for w in weights]
    return res


def generator_weights(A):
    """G-weights of the non-cartan generators (the set Pi of the grading search)."""
    return [g.offset for g in A.gens if g.cls != CARTAN]


def gl_duflo_candidate(n):
    """diag(2n-1, 2n-5, ..., 3-2n)."""
    return tuple(2 * n - 1 - 4 * i for i in range(n))
