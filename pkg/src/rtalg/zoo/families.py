"""Built-in presentations.

Every family returns a :class:`~rtalg.rewrite.Presentation` with its
anti-involution attached, and Hopf data or named central elements where the
family has them.  ``build(name, **params)`` dispatches by family name.
"""
from __future__ import annotations

from fractions import Fraction

from ..expr import parse_scalar
from ..rewrite import CARTAN, LOWERING, RAISING, Generator, Presentation, Relation
from ..scalars import QQ, QQ_q, render_scalar
from ..weights import RootVector, WeightModel
from . import hecke


class ZooError(ValueError):
    pass


class _Builder:
    """Collect generators and brackets, then emit a Presentation."""

    def __init__(self, model):
        self.model = model
        self.gens = []
        self.order = {}
        self.rels = []
        self._cls_rank = {LOWERING: 0, CARTAN: 1, RAISING: 2}

    def gen(self, name, cls, root, offset=None, **kw):
        root = RootVector(root)
        if offset is None:
            offset = self.model.root_coords(root)
        offset = tuple(self.model.field(c) for c in offset)
        self.gens.append(Generator(name, cls, root, offset, **kw))
        return name

    def _key(self, name):
        for i, g in enumerate(self.gens):
            if g.name == name:
                return (self._cls_rank[g.cls], i)
        raise KeyError(name)

    def rule(self, lhs, rhs, label=""):
        self.rels.append(Relation(tuple(lhs.split("*")), _words(rhs), label))

    def bracket(self, x, y, value):
        """Record [x, y] = value (a {word-string: coeff} dict), oriented by symbol order."""
        value = dict(value)
        if self._key(x) < self._key(y):
            x, y = y, x
            value = {w: -c for w, c in value.items()}
        rhs = {f"{y}*{x}": 1}
        for w, c in value.items():
            rhs[w] = rhs.get(w, 0) + c
        self.rule(f"{x}*{y}", rhs, label=f"[{x},{y}]")

    def commute_all_missing(self, pairs_done):
        names = [g.name for g in self.gens]
        for a in names:
            for b in names:
                if a == b:
                    continue
                key = frozenset((a, b))
                if key in pairs_done:
                    continue
                if self._key(a) > self._key(b):
                    ga = next(g for g in self.gens if g.name == a)
                    gb = next(g for g in self.gens if g.name == b)
                    if ga.cls == CARTAN and gb.cls == CARTAN:
                        continue
                    self.rule(f"{a}*{b}", {f"{b}*{a}": 1}, label=f"[{a},{b}]")
                    pairs_done.add(key)

    def build(self, name, **kw):
        return Presentation(name, self.model, self.gens, self.rels, **kw)


def _words(rhs):
    out = {}
    for w, c in rhs.items():
        key = tuple(x for x in w.split("*") if x) if w else ()
        out[key] = out.get(key, 0) + c
    return out


def _lie_presentation(b, brackets, names):
    """Add rules from a bracket table {(x, y): {word: coeff}}; missing pairs commute."""
    done = set()
    for (x, y), val in brackets.items():
        key = frozenset((x, y))
        if key in done:
            continue
        b.bracket(x, y, val)
        done.add(key)
    b.commute_all_missing(done)


# ---------------------------------------------------------------------------
# enveloping algebras
# ---------------------------------------------------------------------------


def u_sl2():
    model = WeightModel("additive", ["h"], [[2]], field=QQ)
    b = _Builder(model)
    b.gen("f", LOWERING, [-1])
    b.gen("h", CARTAN, [0], cartan_eval=(0, 1))
    b.gen("e", RAISING, [1])
    _lie_presentation(b, {("e", "f"): {"h": 1}, ("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}},
                      ["f", "h", "e"])
    return b.build("u_sl2", family="u_sl2",
                   antihom={"e": "f", "f": "e", "h": "h"},
                   central={"Omega": "2*f*e + h + h^2/2"})


def u_sl2_corrupted():
    """Negative control: [h, f] = -3f breaks the Jacobi identity."""
    model = WeightModel("additive", ["h"], [[2]], field=QQ)
    b = _Builder(model)
    b.gen("f", LOWERING, [-1])
    b.gen("h", CARTAN, [0], cartan_eval=(0, 1))
    b.gen("e", RAISING, [1])
    _lie_presentation(b, {("e", "f"): {"h": 1}, ("h", "e"): {"e": 2}, ("h", "f"): {"f": -3}},
                      ["f", "h", "e"])
    return b.build("u_sl2_corrupted", family="u_sl2_corrupted",
                   antihom={"e": "f", "f": "e", "h": "h"})


def _gl_brackets(n, names=lambda i, j: f"E{i}{j}"):
    out = {}
    idx = range(1, n + 1)
    for i in idx:
        for j in idx:
            for k in idx:
                for l in idx:
                    if (i, j) == (k, l):
                        continue
                    val = {}
                    if j == k:
                        val[names(i, l)] = val.get(names(i, l), 0) + 1
                    if l == i:
                        val[names(k, j)] = val.get(names(k, j), 0) - 1
                    out[(names(i, j), names(k, l))] = {w: c for w, c in val.items() if c}
    return out


def _gl_generators(b, n, cls_of=None, root_of=None):
    """E_ij with the standard Borel (raising for i < j); cartan E_ii are coordinates."""
    lowering = [(i, j) for j in range(1, n + 1) for i in range(j + 1, n + 1)]
    raising = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    for (i, j) in lowering:
        cls = cls_of(i, j) if cls_of else LOWERING
        b.gen(f"E{i}{j}", cls, root_of(i, j) if root_of else _gl_root(n, i, j),
              offset=_eps(n, i, j))
    for i in range(1, n + 1):
        b.gen(f"E{i}{i}", CARTAN, [0] * b.model.n_roots, offset=[0] * n, cartan_eval=(i - 1, 1))
    for (i, j) in raising:
        cls = cls_of(i, j) if cls_of else RAISING
        b.gen(f"E{i}{j}", cls, root_of(i, j) if root_of else _gl_root(n, i, j),
              offset=_eps(n, i, j))


def _eps(n, i, j):
    v = [0] * n
    v[i - 1] += 1
    v[j - 1] -= 1
    return v


def _gl_root(n, i, j):
    v = [0] * (n - 1)
    if i < j:
        for k in range(i, j):
            v[k - 1] = 1
    else:
        for k in range(j, i):
            v[k - 1] = -1
    return v


def u_gl_n(n=2):
    n = int(n)
    if not 1 <= n <= 3:
        raise ZooError("u_gl_n supports 1 <= n <= 3")
    coords = [f"E{i}{i}" for i in range(1, n + 1)]
    roots = [_eps(n, i, i + 1) for i in range(1, n)]
    model = WeightModel("additive", coords, roots, field=QQ)
    b = _Builder(model)
    _gl_generators(b, n)
    _lie_presentation(b, _gl_brackets(n), None)
    antihom = {f"E{i}{j}": f"E{j}{i}" for i in range(1, n + 1) for j in range(1, n + 1)}
    central = {
        "C1": " + ".join(coords),
        "C2": " + ".join(f"E{i}{j}*E{j}{i}" for i in range(1, n + 1) for j in range(1, n + 1)),
    }
    return b.build(f"u_gl_{n}", family="u_gl_n", params={"n": n}, antihom=antihom,
                   central=central)


# ---------------------------------------------------------------------------
# fat quantum groups U(Gamma, nu) for sl_2
# ---------------------------------------------------------------------------


def uq_sl2_gamma(lattice="coroot", m=2, nu_t=1):
    """Quantum sl_2 over the coroot lattice, the coweight lattice, or coroot + Z/m."""
    q = QQ_q.q
    qi = q.inverse()
    qq = q - qi
    lattice = str(lattice)
    m = int(m)
    nu_t = int(nu_t)
    if lattice == "coroot":
        model = WeightModel("multiplicative", ["K"], [[q * q]], field=QQ_q)
        K, Ki = "K", "Kinv"
        K2, Ki2 = "K", "Kinv"
        cartan = [("K", (0, 1), "Kinv"), ("Kinv", (0, -1), "K")]
        ek = q ** -2      # e * K = ek K * e
        deg = 1
    elif lattice == "coweight":
        # Gamma = Z L with K = L^2 and nu(L) = q; H_0 = k[K^{+-1}]
        model = WeightModel("multiplicative", ["L"], [[q]], restriction=[[2]], field=QQ_q,
                            restriction_names=["K"])
        K, Ki = "L", "Linv"
        K2, Ki2 = "L^2", "Linv^2"
        cartan = [("L", (0, 1), "Linv"), ("Linv", (0, -1), "L")]
        ek = qi
        deg = 2
    elif lattice == "torsion":
        if m <= 0:
            raise ZooError("torsion order must be positive")
        if nu_t not in (1, -1):
            raise ZooError("nu(t) must be 1 or -1 over Q(q)")
        if nu_t == -1 and m % 2:
            raise ZooError("nu(t) = -1 needs an even torsion order")
        model = WeightModel("multiplicative", ["K", "t"], [[q * q, nu_t]], restriction=[[1, 0]],
                            field=QQ_q, orders=[0, m], restriction_names=["K"])
        K, Ki = "K", "Kinv"
        K2, Ki2 = "K", "Kinv"
        cartan = [("K", (0, 1), "Kinv"), ("Kinv", (0, -1), "K")]
        ek = q ** -2
        deg = 1
    else:
        raise ZooError(f"unknown lattice {lattice!r} (coroot, coweight, torsion)")

    b = _Builder(model)
    alpha = model.simple_roots[0]
    b.gen("f", LOWERING, [-1], offset=[a.inverse() for a in alpha], degree=deg)
    for name, ev, inv in cartan:
        b.gen(name, CARTAN, [0], offset=[1] * model.rank, grouplike=True, inverse=inv,
              cartan_eval=ev)
    if lattice == "torsion":
        b.gen("t", CARTAN, [0], offset=[1, 1], grouplike=True, cartan_eval=(1, 1), order=m)
    b.gen("e", RAISING, [1], offset=alpha, degree=deg)

    eki = ek.inverse()
    # K e K^-1 = nu(K) e  <=>  e K = nu(K)^-1 K e ; K f = nu(K)^-1 f K
    b.rule(f"e*{K}", {f"{K}*e": ek})
    b.rule(f"e*{Ki}", {f"{Ki}*e": eki})
    b.rule(f"{K}*f", {f"f*{K}": ek})
    b.rule(f"{Ki}*f", {f"f*{Ki}": eki})
    if lattice == "torsion":
        b.rule("e*t", {"t*e": Fraction(nu_t)})
        b.rule("t*f", {"f*t": Fraction(nu_t)})
    kk = K2.replace("^2", "*" + K) if "^" in K2 else K2
    kki = Ki2.replace("^2", "*" + Ki) if "^" in Ki2 else Ki2
    inv_qq = qq.inverse()
    b.rule("e*f", {"f*e": 1, kk: inv_qq, kki: -inv_qq}, label="[e,f]")

    s = render_scalar
    delta = {"e": f"e@{Ki2} + 1@e", "f": f"f@1 + {K2}@f"}
    eps = {"e": "0", "f": "0"}
    antipode = {"e": f"-e*{K2}", "f": f"-{Ki2}*f"}
    invol = {"e": "f", "f": "e"}
    antihom = {"e": "f", "f": "e"}
    for name, _, inv in cartan:
        delta[name] = f"{name}@{name}"
        eps[name] = "1"
        antipode[name] = inv
        invol[name] = inv
        antihom[name] = name
    twist = {K: s(qi), Ki: s(q)} if lattice != "coweight" else None
    if lattice == "torsion":
        delta["t"] = "t@t"
        eps["t"] = "1"
        antipode["t"] = "t^-1"
        invol["t"] = "t^-1"
        antihom["t"] = "t"
        twist["t"] = "1"
    hopf = {"delta": delta, "eps": eps, "S": antipode, "T": invol}
    casimir = f"f*e + (q*{K2} + q^-1*{Ki2})/(q - q^-1)^2"
    central = {"C_q": casimir}
    if lattice == "torsion" and nu_t == 1:
        central["t"] = "t"
    params = {"lattice": lattice}
    if lattice == "torsion":
        params.update({"m": m, "nu_t": nu_t})
    return b.build(f"uq_sl2_{lattice}", family="uq_sl2_gamma", params=params, antihom=antihom,
                   hopf=hopf, central=central, hc_twist=twist,
                   notes=["q-Serre relations are vacuous in rank 1"])


# ---------------------------------------------------------------------------
# Lie algebras with [g_+, g_-] central or zero
# ---------------------------------------------------------------------------


def _mode(n):
    return f"a{n}" if n > 0 else f"am{-n}"


def heisenberg_ext(N=2):
    """Heisenberg modes a_n (0 < |n| <= N), central c, derivation d with [d, a_n] = n a_n."""
    N = int(N)
    if N < 1:
        raise ZooError("heisenberg_ext needs at least one mode")
    model = WeightModel("additive", ["c", "d"], [[0, 1]], field=QQ)
    b = _Builder(model)
    for n in range(1, N + 1):
        b.gen(_mode(-n), LOWERING, [-n])
    b.gen("c", CARTAN, [0], cartan_eval=(0, 1))
    b.gen("d", CARTAN, [0], cartan_eval=(1, 1))
    for n in range(1, N + 1):
        b.gen(_mode(n), RAISING, [n])
    br = {}
    for n in range(1, N + 1):
        br[(_mode(n), _mode(-n))] = {"c": n}
        br[("d", _mode(n))] = {_mode(n): n}
        br[("d", _mode(-n))] = {_mode(-n): -n}
    _lie_presentation(b, br, None)
    antihom = {"c": "c", "d": "d"}
    for n in range(1, N + 1):
        antihom[_mode(n)] = _mode(-n)
        antihom[_mode(-n)] = _mode(n)
    return b.build("heisenberg_ext", family="heisenberg_ext", params={"N": N},
                   antihom=antihom, central={"c": "c"})


def _parse_quiver(vertices, arrows):
    if isinstance(vertices, str):
        vertices = [v.strip() for v in vertices.split(",") if v.strip()]
    if isinstance(arrows, str):
        out = []
        for item in arrows.split(","):
            item = item.strip()
            if not item:
                continue
            name, rest = item.split(":")
            s, t = rest.split(">")
            out.append((name.strip(), s.strip(), t.strip()))
        arrows = out
    return [str(v) for v in vertices], [(str(a), str(s), str(t)) for a, s, t in arrows]


def _topological(vertices, arrows):
    indeg = {v: 0 for v in vertices}
    succ = {v: [] for v in vertices}
    for _, s, t in arrows:
        if s not in indeg or t not in indeg:
            raise ZooError(f"arrow endpoint not a vertex: {s}->{t}")
        succ[s].append(t)
        indeg[t] += 1
    order = []
    ready = [v for v in vertices if indeg[v] == 0]
    while ready:
        v = ready.pop(0)
        order.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    if len(order) != len(vertices):
        raise ZooError("quiver has an oriented cycle")
    return order


def quiver_rtla(vertices="1,2", arrows="a:1>2"):
    """U of the Lie algebra h + paths(Q) + paths(Q*) with mixed products zero."""
    vertices, arrows = _parse_quiver(vertices, arrows)
    if any(s == t for _, s, t in arrows):
        raise ZooError("quiver has a loop")
    order = _topological(vertices, arrows)
    pos = {v: i for i, v in enumerate(order)}
    nv = len(vertices)
    vidx = {v: i for i, v in enumerate(vertices)}
    # paths of Q: tuples of arrow names
    paths = [((a,), s, t) for a, s, t in arrows]
    frontier = list(paths)
    while frontier:
        nxt = []
        for p, s, t in frontier:
            for a, s2, t2 in arrows:
                if s2 == t:
                    nxt.append((p + (a,), s, t2))
        paths.extend(nxt)
        frontier = nxt
    roots = []
    for i in range(nv - 1):
        v = [0] * nv
        v[vidx[order[i + 1]]] += 1
        v[vidx[order[i]]] -= 1
        roots.append(v)
    model = WeightModel("additive", [f"e{v}" for v in vertices], roots, field=QQ)
    b = _Builder(model)

    def pname(p):
        return "_".join(p)

    def root_of(s, t, sign):
        v = [0] * (nv - 1)
        for k in range(pos[s], pos[t]):
            v[k] = sign
        return v

    def offset_of(s, t, sign):
        v = [0] * nv
        v[vidx[t]] += sign
        v[vidx[s]] -= sign
        return v

    info = {}
    for p, s, t in paths:
        name = "s" + pname(p)
        b.gen(name, LOWERING, root_of(s, t, -1), offset=offset_of(s, t, -1))
        info[name] = (p, t, s, True)
    for v in vertices:
        b.gen(f"e{v}", CARTAN, [0] * (nv - 1), offset=[0] * nv, cartan_eval=(vidx[v], 1))
    for p, s, t in paths:
        name = pname(p)
        b.gen(name, RAISING, root_of(s, t, 1), offset=offset_of(s, t, 1))
        info[name] = (p, s, t, False)

    by_path = {(p, star): n for n, (p, _, _, star) in info.items()}

    def concat(x, y):
        """Path-algebra product x then y, as a generator name or None."""
        px, sx, tx, star = info[x]
        py, sy, ty, stary = info[y]
        if star != stary or tx != sy:
            return None
        if not star:
            return by_path.get((px + py, False))
        # star paths compose by reversing: (p)* then (p')* is (p' p)*
        return by_path.get((py + px, True))

    br = {}
    names = list(info)
    for x in names:
        for y in names:
            if x == y or info[x][3] != info[y][3]:
                continue
            val = {}
            xy, yx = concat(x, y), concat(y, x)
            if xy:
                val[xy] = val.get(xy, 0) + 1
            if yx:
                val[yx] = val.get(yx, 0) - 1
            br[(x, y)] = {w: c for w, c in val.items() if c}
    for v in vertices:
        ek = f"e{v}"
        for x in names:
            _, s, t, _ = info[x]
            w = (1 if t == v else 0) - (1 if s == v else 0)
            br[(ek, x)] = {x: w} if w else {}
    _lie_presentation(b, br, None)
    antihom = {f"e{v}": f"e{v}" for v in vertices}
    for p, s, t in paths:
        antihom[pname(p)] = "s" + pname(p)
        antihom["s" + pname(p)] = pname(p)
    central = {"E": " + ".join(f"e{v}" for v in vertices)}
    arrows_txt = ",".join(f"{a}:{s}>{t}" for a, s, t in arrows)
    return b.build("quiver_rtla", family="quiver_rtla",
                   params={"vertices": ",".join(vertices), "arrows": arrows_txt},
                   antihom=antihom, central=central)


# ---------------------------------------------------------------------------
# infinitesimal Hecke algebras
# ---------------------------------------------------------------------------


def _parse_beta(beta):
    if isinstance(beta, str):
        beta = [parse_scalar(x, QQ) for x in beta.split(",") if x.strip()]
    elif isinstance(beta, (int, Fraction)):
        beta = [beta]
    beta = [Fraction(x) for x in beta]
    if not beta:
        beta = [Fraction(1)]
    if len(beta) > 3:
        raise ZooError("beta may have degree at most 2")
    return beta


def hecke_gl_n(n=1, beta="1"):
    """H_beta(gl_n) for n <= 2: U(gl_n) + V + V* with [v_k, vd_j] from the r-series."""
    n = int(n)
    if not 1 <= n <= 2:
        raise ZooError("hecke_gl_n supports n = 1 or 2")
    beta = _parse_beta(beta)
    coords = [f"E{i}{i}" for i in range(1, n + 1)]
    if n == 1:
        model = WeightModel("additive", coords, [[1]], field=QQ)
        delta = [1]
    else:
        # delta = diag(3, -1) splits gl_2 + V + V*; Delta = {gamma} lifted to -eps_2
        delta = [3, -1]
        model = WeightModel("additive", coords, [[0, -1]], restriction=[delta], field=QQ,
                            restriction_names=["delta"])

    def dval(off):
        return sum(a * b for a, b in zip(delta, off))

    def cls_root(off):
        v = dval(off)
        return (RAISING if v > 0 else LOWERING), [v]

    b = _Builder(model)
    vdeg = 2
    items = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                items.append((f"E{i}{j}", _eps(n, i, j), 1))
    for i in range(1, n + 1):
        off = [0] * n
        off[i - 1] = 1
        items.append((f"v{i}", off, vdeg))
        items.append((f"vd{i}", [-x for x in off], vdeg))
    lowering = [(nm, off, d) for nm, off, d in items if dval(off) < 0]
    raising = [(nm, off, d) for nm, off, d in items if dval(off) > 0]
    for nm, off, d in lowering:
        b.gen(nm, LOWERING, [dval(off)], offset=off, degree=d)
    for i in range(1, n + 1):
        b.gen(f"E{i}{i}", CARTAN, [0], offset=[0] * n, cartan_eval=(i - 1, 1))
    for nm, off, d in raising:
        b.gen(nm, RAISING, [dval(off)], offset=off, degree=d)

    br = dict(_gl_brackets(n))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                E = f"E{i}{j}"
                br[(E, f"v{k}")] = {f"v{i}": 1} if j == k else {}
                br[(E, f"vd{k}")] = {f"vd{j}": -1} if i == k else {}
    # [v_k, vd_j] = sum_i beta_i sym(r_i(x = vd_j, y = v_k))
    ug = u_gl_n(n)
    cmap = hecke.gl_coord_map(n)
    for k in range(1, n + 1):
        for j in range(1, n + 1):
            rs = hecke.expand_r_series(n, j, k, len(beta) - 1)
            val = ug.zero()
            for bi, r in zip(beta, rs):
                if bi:
                    val = val + hecke.symmetrize(r, ug, cmap) * bi
            br[(f"v{k}", f"vd{j}")] = {"*".join(ug.names(w)): c for w, c in val.terms.items()}
    _lie_presentation(b, br, None)
    antihom = {f"E{i}{j}": f"E{j}{i}" for i in range(1, n + 1) for j in range(1, n + 1)}
    for i in range(1, n + 1):
        antihom[f"v{i}"] = f"-vd{i}"
        antihom[f"vd{i}"] = f"-v{i}"
    central = {}
    tau = " + ".join(coords)
    vv = " + ".join(f"v{i}*vd{i}" for i in range(1, n + 1))
    if n == 1:
        b0, b1, b2 = (beta + [0, 0])[:3]
        poly = (f"{render_scalar(b0)}*E11 + {render_scalar(b1)}*E11*(E11 - 1)"
                f" + {render_scalar(b2)}*(E11 - 1)*E11*(2*E11 - 1)/2")
        central["C"] = f"{vv} + {poly}"
    elif all(x == 0 for x in beta[1:]):
        central["C"] = f"{vv} + {render_scalar(beta[0])}*({tau})"
    beta_txt = ",".join(render_scalar(x) for x in beta)
    return b.build(f"hecke_gl_{n}", family="hecke_gl_n", params={"n": n, "beta": beta_txt},
                   antihom=antihom, central=central)


def hecke_gl_n_sign_dropped(n=1, beta="1"):
    """Negative control: the same algebra with j(v_i) = +vd_i."""
    A = hecke_gl_n(n, beta)
    for i in range(1, int(n) + 1):
        A.antihom[f"v{i}"] = f"vd{i}"
        A.antihom[f"vd{i}"] = f"v{i}"
    A.name = f"hecke_gl_{n}_sign_dropped"
    return A


# [e_1, e_2] = SP_SCALE * beta_0 where omega(e_1, e_2) = 1 gives l_0(e_1, e_2) = 1
SP_SCALE = Fraction(-1)


def hecke_sp_2n(n=1, beta0="1"):
    """H_{beta_0}(sp_2): u11, v11 = 2E, w11 = 2F and the module basis e1, e2."""
    if int(n) != 1:
        raise ZooError("hecke_sp_2n supports n = 1 only")
    beta0 = _parse_beta(beta0)
    if len(beta0) != 1:
        raise ZooError("hecke_sp_2n takes a scalar beta_0")
    beta0 = beta0[0]
    model = WeightModel("additive", ["u11"], [[1]], field=QQ)
    b = _Builder(model)
    b.gen("w11", LOWERING, [-2])
    b.gen("e2", LOWERING, [-1])
    b.gen("u11", CARTAN, [0], cartan_eval=(0, 1))
    b.gen("v11", RAISING, [2])
    b.gen("e1", RAISING, [1])
    l0 = hecke.expand_l_series(1, 1, 2, 0)[0]
    value = hecke.symmetrize(l0, _sp_shell(), hecke.sp2_coord_map()).scalar_value()
    br = {
        ("u11", "v11"): {"v11": 2},
        ("u11", "w11"): {"w11": -2},
        ("v11", "w11"): {"u11": 4},
        ("u11", "e1"): {"e1": 1},
        ("u11", "e2"): {"e2": -1},
        ("v11", "e2"): {"e1": 2},
        ("w11", "e1"): {"e2": 2},
        ("e1", "e2"): {"": SP_SCALE * beta0 * value} if beta0 else {},
    }
    _lie_presentation(b, br, None)
    antihom = {"u11": "u11", "v11": "-w11", "w11": "-v11", "e1": "e2", "e2": "e1"}
    A = b.build("hecke_sp_2", family="hecke_sp_2n",
                params={"n": 1, "beta0": render_scalar(beta0)}, antihom=antihom)
    from ..center import lowest_central
    cent = lowest_central(A, 4, "e1")
    if cent is not None:
        A.central["C"] = cent
    return A


def _sp_shell():
    model = WeightModel("additive", ["u11"], [[1]], field=QQ)
    b = _Builder(model)
    b.gen("w11", LOWERING, [-2])
    b.gen("u11", CARTAN, [0], cartan_eval=(0, 1))
    b.gen("v11", RAISING, [2])
    _lie_presentation(b, {("u11", "v11"): {"v11": 2}, ("u11", "w11"): {"w11": -2},
                          ("v11", "w11"): {"u11": 4}}, None)
    return b.build("u_sp_2")


def hecke_sp_2n_sign_dropped(n=1, beta0="1"):
    """Negative control: j(v11) = +w11."""
    A = hecke_sp_2n(n, beta0)
    A.antihom["v11"] = "w11"
    A.antihom["w11"] = "v11"
    A.name = "hecke_sp_2_sign_dropped"
    return A


# ---------------------------------------------------------------------------
# symplectic oscillator algebra
# ---------------------------------------------------------------------------


def sympl_osc(z="0,1"):
    """U(sl_2) + span(x, y) with [x, y] = z(Omega); z lists coefficients of 1, Omega, ..."""
    coeffs = _parse_beta(z) if not isinstance(z, list) else [Fraction(c) for c in z]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    k = len(coeffs) - 1
    deg_xy = k + 1
    model = WeightModel("additive", ["h"], [[1]], field=QQ)
    b = _Builder(model)
    b.gen("f", LOWERING, [-2])
    b.gen("y", LOWERING, [-1], degree=deg_xy)
    b.gen("h", CARTAN, [0], cartan_eval=(0, 1))
    b.gen("e", RAISING, [2])
    b.gen("x", RAISING, [1], degree=deg_xy)
    sl2 = u_sl2()
    zval = sl2.zero()
    omega = sl2.parse("2*f*e + h + h^2/2")
    power = sl2.one()
    for c in coeffs:
        if c:
            zval = zval + power * c
        power = power * omega
    br = {
        ("e", "f"): {"h": 1}, ("h", "e"): {"e": 2}, ("h", "f"): {"f": -2},
        ("h", "x"): {"x": 1}, ("h", "y"): {"y": -1},
        ("e", "y"): {"x": 1}, ("f", "x"): {"y": 1},
        ("x", "y"): {"*".join(sl2.names(w)): c for w, c in zval.terms.items()},
    }
    _lie_presentation(b, br, None)
    # e -> f, x -> y cannot square to the identity over QQ; the sign on e, f fixes that
    antihom = {"e": "-f", "f": "-e", "h": "h", "x": "y", "y": "x"}
    A = b.build("sympl_osc", family="sympl_osc",
                params={"z": ",".join(render_scalar(c) for c in coeffs)}, antihom=antihom)
    if any(coeffs):
        from ..center import lowest_central
        cent = lowest_central(A, 2 * (k + 1) + 2, "x")
        if cent is not None:
            A.central["C"] = cent
    return A


# ---------------------------------------------------------------------------
# tensor products
# ---------------------------------------------------------------------------

PREFIXES = "ABCDEFGH"


def tensor_product(specs, prefixes=None):
    """Tensor product of presentations; symbols become '<prefix>.<name>'."""
    specs = list(specs)
    if not specs:
        raise ZooError("tensor_product needs at least one factor")
    prefixes = list(prefixes or PREFIXES[:len(specs)])
    kinds = {s.model.kind for s in specs}
    fields = {s.field.name for s in specs}
    if len(kinds) != 1 or len(fields) != 1:
        raise ZooError("tensor factors must share the weight-model kind and scalar field")
    field = specs[0].field
    kind = specs[0].model.kind
    coords, orders, roots, restriction = [], [], [], []
    widths = [s.model.rank for s in specs]
    rwidths = [s.model.n_roots for s in specs]
    total = sum(widths)
    unit = field.zero if kind == "additive" else field.one
    coff = 0
    for p, s in zip(prefixes, specs):
        coords += [f"{p}.{c}" for c in s.model.coords]
        orders += s.model.orders
        for a in s.model.simple_roots:
            v = [unit] * total
            v[coff:coff + s.model.rank] = a
            roots.append(v)
        for row in s.model.restriction:
            v = [0] * total
            v[coff:coff + s.model.rank] = row
            restriction.append(v)
        coff += s.model.rank
    strict = all(s.model.strict for s in specs)
    model = WeightModel(kind, coords, roots, restriction=None if strict else restriction,
                        field=field, orders=orders)
    gens = []
    rels = []
    coff = roff = 0
    for p, s, w, rw in zip(prefixes, specs, widths, rwidths):
        nr = len(roots)
        for g in s.gens:
            root = [0] * nr
            root[roff:roff + rw] = list(g.root)
            off = [unit] * total
            off[coff:coff + w] = g.offset
            ce = (g.cartan_eval[0] + coff, g.cartan_eval[1]) if g.cartan_eval else None
            gens.append(Generator(f"{p}.{g.name}", g.cls, RootVector(root), tuple(off),
                                  g.degree, g.grouplike,
                                  f"{p}.{g.inverse}" if g.inverse else None, ce, g.order))
        for rel in s.relations:
            rels.append(Relation(tuple(f"{p}.{x}" for x in rel.lhs),
                                 {tuple(f"{p}.{x}" for x in w): c for w, c in rel.rhs.items()},
                                 rel.label))
        coff += w
        roff += rw
    # cross-factor commutation
    rank = {LOWERING: 0, CARTAN: 1, RAISING: 2}
    pos = {g.name: (rank[g.cls], i) for i, g in enumerate(gens)}
    for g in gens:
        for h in gens:
            if g.name.split(".")[0] == h.name.split(".")[0]:
                continue
            if pos[g.name] > pos[h.name] and not (g.cls == CARTAN and h.cls == CARTAN):
                rels.append(Relation((g.name, h.name), {(h.name, g.name): 1}, "cross"))
    antihom = None
    if all(s.antihom for s in specs):
        antihom = {}
        for p, s in zip(prefixes, specs):
            for k, v in s.antihom.items():
                antihom[f"{p}.{k}"] = _prefix_expr(v, s, p)
    central = {}
    for p, s in zip(prefixes, specs):
        for k, v in s.central.items():
            central[f"{p}.{k}"] = _prefix_expr(v, s, p)
    params = {}
    name = "tensor(" + ",".join(s.name for s in specs) + ")"
    return Presentation(name, model, gens, rels, params=params, antihom=antihom,
                        central=central, family="tensor_product")


def _prefix_expr(text, pres, prefix):
    """Rename generator identifiers in an expression string."""
    import re
    names = set(pres.index)

    def sub(m):
        tok = m.group(0)
        return f"{prefix}.{tok}" if tok in names else tok
    return re.sub(r"[A-Za-z_][A-Za-z0-9_.']*", sub, text)


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

FAMILIES = {
    "u_sl2": u_sl2,
    "u_sl2_corrupted": u_sl2_corrupted,
    "u_gl_n": u_gl_n,
    "uq_sl2_gamma": uq_sl2_gamma,
    "heisenberg_ext": heisenberg_ext,
    "quiver_rtla": quiver_rtla,
    "hecke_gl_n": hecke_gl_n,
    "hecke_gl_n_sign_dropped": hecke_gl_n_sign_dropped,
    "hecke_sp_2n": hecke_sp_2n,
    "hecke_sp_2n_sign_dropped": hecke_sp_2n_sign_dropped,
    "sympl_osc": sympl_osc,
}

# shorthand names accepted by build() and the command line
ALIASES = {
    "u_gl_2": ("u_gl_n", {"n": 2}),
    "u_gl_3": ("u_gl_n", {"n": 3}),
    "uq_sl2": ("uq_sl2_gamma", {"lattice": "coroot"}),
    "uq_sl2_coroot": ("uq_sl2_gamma", {"lattice": "coroot"}),
    "uq_sl2_coweight": ("uq_sl2_gamma", {"lattice": "coweight"}),
    "uq_sl2_torsion": ("uq_sl2_gamma", {"lattice": "torsion"}),
    "hecke_gl_1": ("hecke_gl_n", {"n": 1}),
    "hecke_gl_2": ("hecke_gl_n", {"n": 2}),
    "hecke_sp_2": ("hecke_sp_2n", {"n": 1}),
}


def build(family, **params):
    if family in ALIASES:
        base, defaults = ALIASES[family]
        merged = dict(defaults)
        merged.update(params)
        return FAMILIES[base](**merged)
    if family.startswith("tensor(") and family.endswith(")"):
        parts = _split_top(family[len("tensor("):-1])
        return tensor_product([build(p.strip()) for p in parts])
    if family not in FAMILIES:
        raise ZooError(f"unknown zoo family {family!r}")
    try:
        return FAMILIES[family](**params)
    except TypeError as exc:
        raise ZooError(f"bad parameters for {family}: {exc}") from None


def _split_top(text):
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    if cur.strip():
        out.append(cur)
    return out


def list_zoo():
    return sorted(FAMILIES) + sorted(ALIASES)
