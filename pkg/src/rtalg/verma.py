"""Truncated Verma modules Z(lambda): weight spaces, raising matrices, singular
vectors, maximal submodules and composition multiplicities.

Only Z(lambda) and its subquotients are ever handled; a slice of depth D holds
every weight space whose lowering depth |theta_0| is at most D, and the
raising generators map these spaces into each other exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import Subspace, nullspace
from .rewrite.presentation import LOWERING, RAISING, Element
from .scalars import render_scalar


class VermaError(ValueError):
    pass


@dataclass
class WeightSpace:
    offset: tuple          # G-offset of the space relative to lambda
    theta: tuple           # theta_0 >= 0, the space has weight -theta_0 * lambda
    depth: int
    basis: list            # lowering words (tuples of generator ids)
    index: dict = field(default_factory=dict)

    @property
    def dim(self):
        return len(self.basis)


@dataclass
class SingularVector:
    offset: tuple
    theta: tuple
    weight: object
    coeffs: list           # aligned with the basis of the weight space
    words: list

    def render(self, pres):
        return Element(pres, {w: c for w, c in zip(self.words, self.coeffs) if c}).render()


def lowering_basis(A, max_depth):
    """Normal words in lowering generators, grouped by G-offset, depth <= max_depth."""
    low = [g for g in range(A.n) if A.gens[g].cls == LOWERING]
    for a in low:
        h = A.gens[a].root.height()
        if h >= 0:
            raise VermaError(f"lowering generator {A.gens[a].name} has non-negative height")
    lhs_by_last = {}
    for lhs in A.rules:
        lhs_by_last.setdefault(lhs[-1], []).append(lhs)
    words = [((), 0)]
    frontier = [((), 0)]
    while frontier:
        nxt = []
        for w, d in frontier:
            for a in low:
                nd = d - A.gens[a].root.height()
                if nd > max_depth:
                    continue
                nw = w + (a,)
                if any(len(l) <= len(nw) and nw[-len(l):] == l for l in lhs_by_last.get(a, ())):
                    continue
                nxt.append((nw, nd))
        words.extend(nxt)
        frontier = nxt
    groups = {}
    for w, d in words:
        groups.setdefault(A.offset(w), []).append(w)
    return groups


def _eval_cartan_word(A, lam, word):
    val = A.field.one
    for a in word:
        g = A.gens[a]
        if g.cartan_eval is None:
            raise VermaError(f"weight is undefined on cartan symbol {g.name}")
        idx, exp = g.cartan_eval
        val = val * A.model.evaluate_generator(lam, idx, exp)
    return val


class VermaSlice:
    """Weight spaces of Z(lambda) down to depth D with raising-generator matrices."""

    def __init__(self, A, lam, depth):
        if depth < 0:
            raise VermaError("depth must be non-negative")
        self.algebra = A
        self.lam = lam
        self.depth = depth
        self.field = A.field
        groups = lowering_basis(A, depth)
        spaces = {}
        for off, words in groups.items():
            theta = tuple(-x for x in A.ad_weight(words[0]))
            words = sorted(words, key=lambda w: (len(w), w))
            sp = WeightSpace(off, theta, sum(theta), words, {w: i for i, w in enumerate(words)})
            spaces[off] = sp
        self.spaces = spaces
        self.order = sorted(spaces, key=lambda o: (spaces[o].depth, spaces[o].theta, _okey(o)))
        self.raising = [g for g in range(A.n) if A.gens[g].cls == RAISING]
        self.lowering = [g for g in range(A.n) if A.gens[g].cls == LOWERING]
        self._cartan_cache = {}
        self._mats = {}
        for x in self.raising:
            for off in self.order:
                self._mats[(x, off)] = self._raising_matrix(x, off)

    # -- weights -----------------------------------------------------------
    def weight_of(self, off):
        return self.algebra.model.shift(self.lam, off)

    def target(self, gen, off):
        return self.algebra.model.combine_offsets(off, self.algebra.gens[gen].offset)

    # -- action ------------------------------------------------------------
    def _cartan_value(self, word):
        v = self._cartan_cache.get(word)
        if v is None:
            v = _eval_cartan_word(self.algebra, self.lam, word)
            self._cartan_cache[word] = v
        return v

    def apply_word(self, gen, word):
        """gen . (word v_lambda) as a dict over lowering words."""
        A = self.algebra
        out = {}
        for w, c in A.reducer.left_mul(gen, word).items():
            lo, ca, ra = A.split(w)
            if ra:
                continue
            if ca:
                c = c * self._cartan_value(ca)
                if not c:
                    continue
            out[lo] = out.get(lo, A.field.zero) + c
        return {w: c for w, c in out.items() if c}

    def _raising_matrix(self, x, off):
        src = self.spaces[off]
        tgt_off = self.target(x, off)
        tgt = self.spaces.get(tgt_off)
        rows = [[self.field.zero] * src.dim for _ in range(tgt.dim if tgt else 0)]
        for j, w in enumerate(src.basis):
            img = self.apply_word(x, w)
            for u, c in img.items():
                if tgt is None or u not in tgt.index:
                    raise VermaError(
                        f"{self.algebra.gens[x].name} maps {self.algebra.render_word(w)} outside the slice")
                rows[tgt.index[u]][j] = c
        return rows

    def matrix(self, gen, off):
        """Matrix of a raising generator from the space at ``off`` to its target space."""
        if isinstance(gen, str):
            gen = self.algebra.index[gen]
        return self._mats[(gen, off)]

    def apply(self, gen, off, vec):
        M = self._mats[(gen, off)]
        return [sum((r[j] * vec[j] for j in range(len(vec)) if r[j] and vec[j]), self.field.zero)
                for r in M]

    def stacked(self, off):
        rows = []
        for x in self.raising:
            rows.extend(self._mats[(x, off)])
        return rows

    # -- summaries ---------------------------------------------------------
    def dims(self):
        """[(theta_0, G-offset, dim)] in processing order."""
        return [(self.spaces[o].theta, o, self.spaces[o].dim) for o in self.order]

    def dims_by_depth(self):
        out = [0] * (self.depth + 1)
        for o in self.order:
            out[self.spaces[o].depth] += self.spaces[o].dim
        return out

    def render_offset(self, off):
        return self.algebra.model.render_root(self.spaces[off].theta)


def _okey(off):
    return tuple(str(x) for x in off)


def build_verma(A, lam, depth) -> VermaSlice:
    if isinstance(lam, str):
        lam = A.model.parse(lam, A.params)
    return VermaSlice(A, lam, depth)


def singular_vectors(sl: VermaSlice):
    """Basis of the joint kernel of the raising matrices on every space of depth >= 1."""
    out = []
    for off in sl.order:
        sp = sl.spaces[off]
        if sp.depth == 0:
            continue
        rows = sl.stacked(off)
        ker = nullspace(rows, sp.dim, sl.field) if rows else \
            [[sl.field.one if i == j else sl.field.zero for i in range(sp.dim)] for j in range(sp.dim)]
        for v in ker:
            out.append(SingularVector(off, sp.theta, sl.weight_of(off), v, sp.basis))
    return out


def maximal_submodule(sl: VermaSlice):
    """Y(lambda) inside the slice, found depth by depth.

    A vector of nonzero depth lies in Y exactly when every raising generator
    sends it into Y; each depth is therefore the kernel of the raising maps
    taken modulo the part of Y already found above it.
    """
    Y = {}
    for off in sl.order:
        sp = sl.spaces[off]
        sub = Subspace(sp.dim, sl.field)
        if sp.depth > 0:
            rows = []
            for x in sl.raising:
                t = sl.target(x, off)
                M = sl._mats[(x, off)]
                if not M:
                    continue
                cols = [[r[j] for r in M] for j in range(sp.dim)]
                red = [Y[t].reduce(c) for c in cols]
                rows.extend([red[j][i] for j in range(sp.dim)] for i in range(len(M)))
            ker = nullspace(rows, sp.dim, sl.field) if rows else \
                [[sl.field.one if i == j else sl.field.zero for i in range(sp.dim)] for j in range(sp.dim)]
            for v in ker:
                sub.add(v)
        Y[off] = sub
    return Y


def simple_dims(sl: VermaSlice):
    """{G-offset: dim V(lambda)_offset} within the slice."""
    Y = maximal_submodule(sl)
    return {o: sl.spaces[o].dim - Y[o].dim for o in sl.order}


@dataclass
class CompositionReport:
    algebra: str
    lam: object
    depth: int
    horizon: int
    multiplicities: dict          # Weight -> int (nonzero only)
    simple_dims: dict             # Weight -> {theta_0 relative: dim}
    thetas: dict                  # Weight -> theta_0 relative to lambda

    def as_map(self):
        return dict(self.multiplicities)


def composition_multiplicities(A, lam, depth, sl=None) -> CompositionReport:
    """[Z(lambda) : V(mu)] for every mu of depth <= D by top-down character subtraction.

    Characters of the V(mu) come from their own maximal submodules, computed in
    slices of the remaining depth, so every multiplicity down to depth D is exact.
    """
    if isinstance(lam, str):
        lam = A.model.parse(lam, A.params)
    sl = sl or build_verma(A, lam, depth)
    model = A.model
    remaining = {o: sl.spaces[o].dim for o in sl.order}
    mult, sdims, thetas = {}, {}, {}
    cache = {}
    for off in sl.order:
        m = remaining[off]
        if m == 0:
            continue
        if m < 0:
            raise VermaError("character subtraction went negative; the slice is inconsistent")
        sp = sl.spaces[off]
        mu = sl.weight_of(off)
        sub = sl if sp.depth == 0 else build_verma(A, mu, depth - sp.depth)
        key = (mu, depth - sp.depth)
        if key not in cache:
            cache[key] = simple_dims(sub)
        vd = cache[key]
        for o2, d in vd.items():
            if not d:
                continue
            tgt = model.combine_offsets(off, o2)
            if tgt not in remaining:
                raise VermaError("sub-slice weight outside the parent slice")
            remaining[tgt] -= m * d
        mult[mu] = m
        thetas[mu] = sp.theta
        sdims[mu] = {sub.spaces[o2].theta: d for o2, d in vd.items() if d}
    return CompositionReport(A.name, lam, depth, depth, mult, sdims, thetas)


# ---------------------------------------------------------------------------
# the scenario where every lowering monomial is maximal
# ---------------------------------------------------------------------------


class TcentralHypothesisError(VermaError):
    def __init__(self, pair, residue):
        self.pair = pair
        self.residue = residue
        super().__init__(f"[{pair[0]}, {pair[1]}] has a component outside A.N+ + B-.ker(lambda): "
                         f"{residue}")


@dataclass
class TcentralReport:
    algebra: str
    lam: object
    depth: int
    all_maximal: bool
    layers: list        # dicts {theta, dim_B_minus, multiplicity, simple_dims}
    one_dimensional: bool

    @property
    def ok(self):
        return self.all_maximal and self.one_dimensional and all(
            l["multiplicity"] == l["dim_B_minus"] for l in self.layers)


def tcentral_hypothesis(A, lam):
    """None if [x, y] lies in A.N+ + B-.ker(lambda) for all raising x, lowering y; else the pair."""
    for x in range(A.n):
        if A.gens[x].cls != RAISING:
            continue
        for y in range(A.n):
            if A.gens[y].cls != LOWERING:
                continue
            br = A.gen(A.gens[x].name).bracket(A.gen(A.gens[y].name))
            acc = {}
            for w, c in br.terms.items():
                lo, ca, ra = A.split(w)
                if ra:
                    continue
                acc[lo] = acc.get(lo, A.field.zero) + c * _eval_cartan_word(A, lam, ca)
            bad = {w: c for w, c in acc.items() if c}
            if bad:
                return (A.gens[x].name, A.gens[y].name), Element(A, bad).render()
    return None


def tcentral_jh(A, lam, depth) -> TcentralReport:
    if isinstance(lam, str):
        lam = A.model.parse(lam, A.params)
    bad = tcentral_hypothesis(A, lam)
    if bad is not None:
        raise TcentralHypothesisError(*bad)
    sl = build_verma(A, lam, depth)
    all_max = all(not any(any(r) for r in sl.stacked(o)) for o in sl.order)
    comp = composition_multiplicities(A, lam, depth, sl=sl)
    by_theta = {}
    for o in sl.order:
        sp = sl.spaces[o]
        by_theta.setdefault(sp.theta, [0, 0])[0] += sp.dim
    one_dim = True
    for mu, m in comp.multiplicities.items():
        by_theta[comp.thetas[mu]][1] += m
        if sum(comp.simple_dims[mu].values()) != 1:
            one_dim = False
    layers = [{"theta": list(t), "dim_B_minus": v[0], "multiplicity": v[1]}
              for t, v in sorted(by_theta.items(), key=lambda kv: (sum(kv[0]), kv[0]))]
    return TcentralReport(A.name, lam, depth, all_max, layers, one_dim)


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------


def verma_report(A, lam, depth):
    """Payload {algebra, lambda, depth, horizon, weight_spaces, singular, multiplicities}."""
    if isinstance(lam, str):
        lam = A.model.parse(lam, A.params)
    sl = build_verma(A, lam, depth)
    sing = singular_vectors(sl)
    comp = composition_multiplicities(A, lam, depth, sl=sl)
    model = A.model
    return {
        "algebra": A.name,
        "lambda": model.render(lam),
        "depth": depth,
        "horizon": comp.horizon,
        "weight_spaces": [
            {"offset": list(sl.spaces[o].theta), "weight": model.render(sl.weight_of(o)),
             "dim": sl.spaces[o].dim}
            for o in sl.order],
        "singular": [
            {"offset": list(s.theta), "weight": model.render(s.weight),
             "coeffs": [{"monomial": A.render_word(w) or "1", "coeff": render_scalar(c)}
                        for w, c in zip(s.words, s.coeffs) if c]}
            for s in sing],
        "multiplicities": [
            {"mu": model.render(mu), "offset": list(comp.thetas[mu]), "m": m}
            for mu, m in comp.multiplicities.items()],
    }
