"""Centrality certificates, the Harish-Chandra projection and central characters."""
from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import nullspace
from .rewrite.presentation import CARTAN, Element, PresentationError


@dataclass
class CentralityReport:
    element: Element
    certificate: list = field(default_factory=list)   # [(generator name, commutator)]

    @property
    def ok(self):
        return all(not c for _, c in self.certificate)

    @property
    def counterexample(self):
        for g, c in self.certificate:
            if c:
                return g, c
        return None


def is_central(A, x) -> CentralityReport:
    """Reduce [x, g] for every generator g."""
    if isinstance(x, str):
        x = A.parse(x)
    cert = []
    for g in A.gens:
        ge = A.gen(g.name)
        cert.append((g.name, x * ge - ge * x))
    return CentralityReport(x, cert)


def named_central(A):
    """{name: Element} for the presentation's named central elements."""
    return {name: A.parse(text) if isinstance(text, str) else text
            for name, text in A.central.items()}


def _is_cartan_word(A, word):
    return all(A.gens[a].cls == CARTAN for a in word)


def hc_project(A, x, twist=False) -> Element:
    """Drop every monomial with a lowering or raising letter.

    With ``twist=True`` the result is post-composed with the shift recorded in
    ``A.hc_twist`` (a scalar factor per cartan letter).
    """
    if isinstance(x, str):
        x = A.parse(x)
    out = {w: c for w, c in x.terms.items() if _is_cartan_word(A, w)}
    if twist:
        if not A.hc_twist:
            raise PresentationError(f"{A.name} has no Harish-Chandra twist")
        factors = {A.index[k]: A.field.parse(v) for k, v in A.hc_twist.items()}
        twisted = {}
        for w, c in out.items():
            for a in w:
                c = c * factors[a]
            twisted[w] = c
        out = twisted
    return Element(A, out)


def evaluate_cartan(A, lam, x):
    """lambda applied to an element of H."""
    total = A.field.zero
    for w, c in x.terms.items():
        val = c
        for a in w:
            g = A.gens[a]
            if g.cls != CARTAN:
                raise PresentationError(f"{g.name} is not a cartan symbol")
            if g.cartan_eval is None:
                raise PresentationError(f"weight is undefined on {g.name}")
            idx, exp = g.cartan_eval
            val = val * A.model.evaluate_generator(lam, idx, exp)
        total = total + val
    return total


@dataclass
class CentralCharacter:
    weight: object
    values: dict

    def __eq__(self, other):
        return isinstance(other, CentralCharacter) and self.values == other.values

    __hash__ = None


def central_character(A, lam, elements=None, twist=False) -> CentralCharacter:
    elements = named_central(A) if elements is None else elements
    if isinstance(elements, list):
        elements = {str(i): e for i, e in enumerate(elements)}
    values = {}
    for name, c in elements.items():
        values[name] = evaluate_cartan(A, lam, hc_project(A, c, twist=twist))
    return CentralCharacter(lam, values)


def equal(chi1: CentralCharacter, chi2: CentralCharacter) -> bool:
    if set(chi1.values) != set(chi2.values):
        raise ValueError("central characters are over different element lists")
    return chi1.values == chi2.values


@dataclass
class DualPairReport:
    element: Element
    commutes_with_cartan: bool
    central: CentralityReport


def casimir_from_dual_pair(A, V, Vd) -> DualPairReport:
    if len(V) != len(Vd):
        raise ValueError("dual bases have different lengths")
    V = [A.parse(v) if isinstance(v, str) else v for v in V]
    Vd = [A.parse(v) if isinstance(v, str) else v for v in Vd]
    total = A.zero()
    for v, w in zip(V, Vd):
        wv, ww = v.ad_weight(), w.ad_weight()
        if wv != -ww:
            raise ValueError(f"weights of {v.render()} and {w.render()} are not inverse")
        total = total + v * w
    cartan_ok = True
    for g in A.gens:
        if g.cls == CARTAN:
            ge = A.gen(g.name)
            if total * ge - ge * total:
                cartan_ok = False
    return DualPairReport(total, cartan_ok, is_central(A, total))


def normal_words(A, max_degree, weight=None):
    """All normal (irreducible) words of filtration degree <= max_degree."""
    lhs_by_last = {}
    for lhs in A.rules:
        lhs_by_last.setdefault(lhs[-1], []).append(lhs)
    out = [()]
    frontier = [()]
    while frontier:
        nxt = []
        for w in frontier:
            dw = A.degree(w)
            for a in range(A.n):
                if dw + A.gens[a].degree > max_degree:
                    continue
                nw = w + (a,)
                bad = False
                for lhs in lhs_by_last.get(a, ()):
                    if len(lhs) <= len(nw) and nw[-len(lhs):] == lhs:
                        bad = True
                        break
                if not bad:
                    nxt.append(nw)
        out.extend(nxt)
        frontier = nxt
    if weight is not None:
        out = [w for w in out if A.ad_weight(w) == weight]
    return out


def center_search(A, max_degree):
    """Basis of central elements spanned by weight-0 normal words of degree <= max_degree.

    The constant 1 is excluded.  This is a bounded search, not a center
    computation.
    """
    zero = A.model.zero_root()
    words = [w for w in normal_words(A, max_degree, weight=zero) if w]
    if not words:
        return []
    gens = [A.gen(g.name) for g in A.gens]
    columns = []
    keys = {}
    for w in words:
        m = Element(A, {w: A.field.one})
        col = {}
        for gi, g in enumerate(gens):
            c = m * g - g * m
            for mono, v in c.terms.items():
                k = (gi, mono)
                if k not in keys:
                    keys[k] = len(keys)
                col[keys[k]] = v
        columns.append(col)
    rows = [[A.field.zero] * len(words) for _ in range(len(keys))]
    for j, col in enumerate(columns):
        for i, v in col.items():
            rows[i][j] = v
    basis = nullspace(rows, len(words), A.field) if rows else \
        [[A.field.one if i == j else A.field.zero for i in range(len(words))] for j in range(len(words))]
    out = []
    for vec in basis:
        out.append(Element(A, {w: c for w, c in zip(words, vec) if c}))
    return out


def lowest_central(A, bound, involving):
    """Lowest-degree element of the bounded center search whose support uses ``involving``.

    Used to attach a named central element to families whose closed form
    depends on parameters (symplectic oscillator, sp Hecke); returned as text.
    """
    sols = center_search(A, bound)
    idx = A.index[involving]
    best = None
    for s in sols:
        if any(idx in w for w in s.terms):
            d = max(A.degree(w) for w in s.terms)
            if best is None or d < best[0]:
                best = (d, s)
    return best[1].render() if best else None
