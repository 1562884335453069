"""Presented algebras with a triangular generator alphabet.

A :class:`Presentation` owns the generator symbols (lowering, cartan and
raising classes), the oriented rewriting rules and a reduction kernel.  The
global symbol order is lowering < cartan < raising with declaration order
inside each class, so normal words read B_- . H . B_+.

Elements are :class:`Element` objects: a dict from normal words (tuples of
symbol ids) to nonzero coefficients, tied to their presentation.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from ..expr import Env, ParseError, evaluate, parse
from ..scalars import QRatFunc, render_scalar
from ..weights import RootVector
from . import kernel
from ._errors import MissingRule

LOWERING, CARTAN, RAISING = "lowering", "cartan", "raising"
CLASSES = (LOWERING, CARTAN, RAISING)
_CLASS_RANK = {LOWERING: 0, CARTAN: 1, RAISING: 2}


class PresentationError(ValueError):
    pass


class MissingRuleError(PresentationError):
    def __init__(self, pair):
        super().__init__(f"no rewriting rule for out-of-order pair {pair[0]}*{pair[1]}")
        self.pair = pair


@dataclass
class Generator:
    name: str
    cls: str
    root: RootVector
    offset: tuple
    degree: int = 1
    grouplike: bool = False
    inverse: str | None = None
    cartan_eval: tuple | None = None
    order: int = 0


@dataclass
class Relation:
    """Oriented relation ``lhs -> rhs``; rhs maps name-words to scalars."""
    lhs: tuple
    rhs: dict
    label: str = ""


@dataclass
class PBWReport:
    max_degree: int
    checked: int
    failures: list = dc_field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def summary(self):
        if self.ok:
            return (f"{self.checked} ambiguities up to degree {self.max_degree} resolve; "
                    "this is local confluence evidence up to that degree, not a proof of flatness")
        return f"{len(self.failures)} of {self.checked} ambiguities fail up to degree {self.max_degree}"


class Presentation:
    def __init__(self, name, model, generators, relations, *, params=None, antihom=None,
                 hopf=None, central=None, hc_twist=None, family=None, notes=None):
        self.name = name
        self.model = model
        self.field = model.field
        self.params = dict(params or {})
        self.family = family
        self.notes = list(notes or [])
        self.antihom = dict(antihom) if antihom else None
        self.hopf = hopf
        self.central = dict(central or {})
        self.hc_twist = dict(hc_twist) if hc_twist else None

        seen = set()
        for g in generators:
            if g.name in seen:
                raise PresentationError(f"duplicate generator {g.name!r}")
            if g.cls not in _CLASS_RANK:
                raise PresentationError(f"generator {g.name!r} has unknown class {g.cls!r}")
            seen.add(g.name)
        order = sorted(range(len(generators)), key=lambda i: (_CLASS_RANK[generators[i].cls], i))
        self.gens = [generators[i] for i in order]
        self.index = {g.name: i for i, g in enumerate(self.gens)}
        self.n = len(self.gens)
        self._validate_generators()

        self.relations = list(relations)
        self._build_rules()
        self._elt_cache = {}

    # -- construction ----------------------------------------------------
    def _validate_generators(self):
        m = self.model
        for g in self.gens:
            if len(g.root) != m.n_roots:
                raise PresentationError(f"root of {g.name!r} has wrong length")
            if g.cls == CARTAN:
                if not g.root.is_zero():
                    raise PresentationError(f"cartan generator {g.name!r} must have weight 0")
            elif g.cls == RAISING:
                if g.root.is_zero() or any(t < 0 for t in g.root):
                    raise PresentationError(f"raising generator {g.name!r} needs weight in Z>=0 Delta minus 0")
            else:
                if g.root.is_zero() or any(t > 0 for t in g.root):
                    raise PresentationError(f"lowering generator {g.name!r} needs weight in -Z>=0 Delta minus 0")
            if g.degree < 1:
                raise PresentationError(f"generator {g.name!r} needs positive degree")
            if len(g.offset) != m.rank:
                raise PresentationError(f"weight of {g.name!r} has wrong length")
            # the G-weight must restrict to the declared root
            if m._pi_coords(g.offset) != m._pi_coords(m.root_coords(g.root)):
                raise PresentationError(f"weight of {g.name!r} does not restrict to its root")
            if g.inverse is not None and g.inverse not in self.index:
                raise PresentationError(f"inverse {g.inverse!r} of {g.name!r} is not declared")

    def _word_ids(self, names):
        try:
            return tuple(self.index[x] for x in names)
        except KeyError as exc:
            raise ParseError(f"unknown symbol {exc.args[0]!r}", exc.args[0]) from None

    def _build_rules(self):
        rules = {}
        labels = {}
        for rel in self.relations:
            lhs = self._word_ids(rel.lhs)
            if len(lhs) < 2:
                raise PresentationError(f"rule left side {'*'.join(rel.lhs)} must have length >= 2")
            if lhs in rules:
                raise PresentationError(f"two rules for {'*'.join(rel.lhs)}")
            rhs = []
            for w, c in rel.rhs.items():
                c = self.field(c)
                if c:
                    rhs.append((self._word_ids(w), c))
            rules[lhs] = rhs
            labels[lhs] = rel.label
        # automatic rules: commuting cartan letters, grouplike inverses, torsion
        one = self.field.one
        for i, g in enumerate(self.gens):
            if g.inverse is not None:
                j = self.index[g.inverse]
                rules.setdefault((i, j), [((), one)])
                labels.setdefault((i, j), "inverse")
            if g.order:
                w = (i,) * g.order
                rules.setdefault(w, [((), one)])
                labels.setdefault(w, "torsion")
        for i, g in enumerate(self.gens):
            for j, h in enumerate(self.gens):
                if j < i and g.cls == CARTAN and h.cls == CARTAN and (i, j) not in rules:
                    rules[(i, j)] = [((j, i), one)]
                    labels[(i, j)] = "cartan commute"
        for lhs, rhs in rules.items():
            self._check_decreasing(lhs, rhs)
        self.rules = rules
        self.rule_labels = labels
        long_classes = set()
        for lhs in rules:
            if len(lhs) > 2:
                cls = {self.gens[a].cls for a in lhs}
                if len(cls) == 1:
                    long_classes |= cls
        must = set()
        for i in range(self.n):
            for j in range(i):
                gi, gj = self.gens[i], self.gens[j]
                if gi.cls != gj.cls or gi.cls not in long_classes:
                    must.add((i, j))
        self.must_pairs = must
        self.reducer = kernel.Reducer(rules, must, one)

    def degree(self, word):
        return sum(self.gens[a].degree for a in word)

    @staticmethod
    def inversions(word):
        n = 0
        for i in range(len(word)):
            for j in range(i + 1, len(word)):
                if word[i] > word[j]:
                    n += 1
        return n

    def _check_decreasing(self, lhs, rhs):
        dl = self.degree(lhs)
        il = self.inversions(lhs)
        for w, _ in rhs:
            d = self.degree(w)
            if d < dl:
                continue
            if d == dl and sorted(w) == sorted(lhs) and self.inversions(w) < il:
                continue
            raise PresentationError(
                f"rule {self.render_word(lhs)} -> ... has term {self.render_word(w) or '1'} "
                "that does not lower the (degree, inversions) measure")

    # -- words and elements ---------------------------------------------
    def render_word(self, word):
        parts = []
        i = 0
        while i < len(word):
            j = i
            while j < len(word) and word[j] == word[i]:
                j += 1
            name = self.gens[word[i]].name
            parts.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        return "*".join(parts)

    def names(self, word):
        return tuple(self.gens[a].name for a in word)

    def ad_weight(self, word) -> RootVector:
        out = self.model.zero_root()
        for a in word:
            out = out + self.gens[a].root
        return out

    def offset(self, word):
        out = self.model.identity_offset()
        for a in word:
            out = self.model.combine_offsets(out, self.gens[a].offset)
        return out

    def split(self, word):
        """(lowering part, cartan part, raising part) of a normal word."""
        i = 0
        n = len(word)
        while i < n and self.gens[word[i]].cls == LOWERING:
            i += 1
        j = i
        while j < n and self.gens[word[j]].cls == CARTAN:
            j += 1
        return word[:i], word[i:j], word[j:]

    def element(self, terms) -> "Element":
        return Element(self, terms)

    def scalar(self, c) -> "Element":
        c = self.field(c)
        return Element(self, {(): c} if c else {})

    def gen(self, name) -> "Element":
        if name not in self.index:
            raise ParseError(f"unknown symbol {name!r}", name)
        return Element(self, {(self.index[name],): self.field.one})

    def zero(self):
        return Element(self, {})

    def one(self):
        return self.scalar(1)

    def normal_form(self, combo) -> "Element":
        """Reduce a dict {word: coeff}; words may be id tuples or name tuples."""
        clean = {}
        for w, c in combo.items():
            if w and isinstance(w[0], str):
                w = self._word_ids(w)
            c = self.field(c)
            if c:
                clean[w] = clean.get(w, self.field.zero) + c
        try:
            return Element(self, self.reducer.nf(clean))
        except MissingRule as exc:
            a, b = exc.pair
            raise MissingRuleError((self.gens[a].name, self.gens[b].name)) from None

    def word(self, names) -> "Element":
        if isinstance(names, str):
            names = names.split("*") if names else ()
        return self.normal_form({tuple(names): 1})

    def parse(self, text, extra=None) -> "Element":
        key = (text, tuple(sorted((extra or {}).items())))
        hit = self._elt_cache.get(key)
        if hit is None:
            hit = evaluate(parse(text), AlgebraEnv(self, extra))
            if not isinstance(hit, Element):
                hit = self.scalar(hit)
            self._elt_cache[key] = hit
        return hit

    def mul(self, x, y):
        try:
            return self.reducer.mul(x, y)
        except MissingRule as exc:
            a, b = exc.pair
            raise MissingRuleError((self.gens[a].name, self.gens[b].name)) from None

    # -- structure checks -----------------------------------------------
    def check_pbw(self, max_degree=6) -> PBWReport:
        if max_degree < 3:
            raise ValueError("max_degree must be at least 3")
        lhss = sorted(self.rules)
        report = PBWReport(max_degree=max_degree, checked=0)
        seen = set()
        for L1 in lhss:
            for L2 in lhss:
                cands = []
                for k in range(1, min(len(L1), len(L2))):
                    if L1[-k:] == L2[:k]:
                        cands.append((L1 + L2[k:], 0, L1, len(L1) - k, L2))
                if len(L2) < len(L1):
                    for p in range(len(L1) - len(L2) + 1):
                        if L1[p:p + len(L2)] == L2:
                            cands.append((L1, 0, L1, p, L2))
                for w, p1, A, p2, B in cands:
                    if self.degree(w) > max_degree or (w, p1, p2) in seen:
                        continue
                    seen.add((w, p1, p2))
                    report.checked += 1
                    try:
                        r1 = self._apply_at(w, p1, A)
                        r2 = self._apply_at(w, p2, B)
                    except MissingRuleError as exc:
                        report.failures.append({"word": self.render_word(w), "difference": None,
                                                "error": str(exc)})
                        continue
                    diff = r1 - r2
                    if diff:
                        report.failures.append({"word": self.render_word(w), "difference": diff,
                                                "error": None})
        return report

    def _apply_at(self, w, p, lhs):
        combo = {}
        pre, post = w[:p], w[p + len(lhs):]
        for r, c in self.rules[lhs]:
            nw = pre + r + post
            combo[nw] = combo.get(nw, self.field.zero) + c
        return self.normal_form(combo)

    def antihom_map(self, assignment=None):
        """Parse a symbol -> expression assignment into {id: Element}."""
        assignment = self.antihom if assignment is None else assignment
        if assignment is None:
            raise PresentationError(f"{self.name} has no anti-involution data")
        out = {}
        for g in self.gens:
            if g.name not in assignment:
                raise PresentationError(f"anti-homomorphism undefined on {g.name!r}")
            img = assignment[g.name]
            out[self.index[g.name]] = img if isinstance(img, Element) else self.parse(img)
        return out

    def apply_antihom(self, assignment, elem: "Element") -> "Element":
        amap = assignment if assignment and isinstance(next(iter(assignment)), int) \
            else self.antihom_map(assignment)
        total = {}
        one = {(): self.field.one}
        for word, c in elem.terms.items():
            acc = one
            for a in reversed(word):
                acc = self.mul(acc, amap[a].terms)
                if not acc:
                    break
            kernel.add_into(total, acc, c)
        return Element(self, total)

    def describe(self):
        return {
            "name": self.name,
            "field": self.field.name,
            "generators": [{"name": g.name, "class": g.cls, "root": list(g.root),
                            "degree": g.degree, "grouplike": g.grouplike} for g in self.gens],
            "rules": len(self.rules),
        }


def _scalar_text(c):
    s = render_scalar(c)
    if isinstance(c, QRatFunc) and not (len(c.den) > 1):
        body = s[1:] if s.startswith("-") else s
        if any(ch in body for ch in "+-"):
            return f"({s})"
    return s


class Element:
    """Normal-form element of a presentation."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres, terms):
        self.pres = pres
        self.terms = terms

    # -- arithmetic ------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Element):
            if other.pres is not self.pres:
                raise PresentationError("elements of different presentations")
            return other
        if isinstance(other, (int, Fraction, QRatFunc)):
            return self.pres.scalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        kernel.add_into(out, other.terms, self.pres.field.one)
        return Element(self.pres, out)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.pres, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QRatFunc)):
            c = self.pres.field(other)
            if not c:
                return Element(self.pres, {})
            return Element(self.pres, {w: v * c for w, v in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Element(self.pres, self.pres.mul(self.terms, other.terms))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QRatFunc)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Element):
            other = other.scalar_value()
        c = self.pres.field(other)
        if not c:
            raise ZeroDivisionError("division of an algebra element by zero")
        inv = c.inverse() if isinstance(c, QRatFunc) else 1 / c
        return self * inv

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.pres.one()
        for _ in range(k):
            out = out * self
        return out

    def inverse(self):
        if self.is_scalar():
            c = self.scalar_value()
            return self.pres.scalar(c.inverse() if isinstance(c, QRatFunc) else 1 / c)
        if len(self.terms) == 1:
            (w, c), = self.terms.items()
            pres = self.pres
            inv = pres.one()
            for a in w:
                g = pres.gens[a]
                if g.inverse is not None:
                    gi = pres.gen(g.inverse)
                elif g.order:
                    gi = pres.gen(g.name) ** (g.order - 1)
                else:
                    raise PresentationError(f"{g.name} is not invertible")
                inv = gi * inv
            ci = c.inverse() if isinstance(c, QRatFunc) else 1 / c
            return inv * ci
        raise PresentationError("only scalars and grouplike monomials can be inverted")

    def bracket(self, other):
        return self * other - other * self

    # -- inspection -------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.pres is other.pres and self.terms == other.terms
        if isinstance(other, (int, Fraction, QRatFunc)):
            return self == self.pres.scalar(other)
        return NotImplemented

    __hash__ = None

    def is_scalar(self):
        return all(not w for w in self.terms)

    def scalar_value(self):
        if not self.is_scalar():
            raise PresentationError(f"{self.render()} is not a scalar")
        return self.terms.get((), self.pres.field.zero)

    def ad_weights(self):
        return {self.pres.ad_weight(w) for w in self.terms}

    def ad_weight(self):
        ws = self.ad_weights()
        if not ws:
            return self.pres.model.zero_root()
        if len(ws) != 1:
            raise PresentationError("element is not homogeneous")
        return next(iter(ws))

    def sorted_terms(self):
        pres = self.pres
        return sorted(self.terms.items(), key=lambda t: (-pres.degree(t[0]), len(t[0]), t[0]))

    def render(self):
        if not self.terms:
            return "0"
        out = []
        for word, c in self.sorted_terms():
            w = self.pres.render_word(word)
            neg = (c.num[-1] < 0) if isinstance(c, QRatFunc) else c < 0
            a = -c if neg else c
            if not w:
                body = _scalar_text(a)
            elif a == 1:
                body = w
            else:
                body = f"{_scalar_text(a)}*{w}"
            if not out:
                out.append("-" + body if neg else body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"<{self.pres.name}: {self.render()}>"

    def __str__(self):
        return self.render()


class AlgebraEnv(Env):
    """Evaluate expressions into Elements of a presentation."""

    def __init__(self, pres, extra=None, tensor=None):
        self.pres = pres
        self.extra = dict(extra or {})
        self.tensor_fn = tensor

    def number(self, n):
        return self.pres.scalar(n)

    def symbol(self, name):
        if name in self.extra:
            v = self.extra[name]
            return v if isinstance(v, Element) else self.pres.scalar(v)
        if name in self.pres.index:
            return self.pres.gen(name)
        if name in self.pres.params:
            return self.pres.scalar(self.pres.params[name])
        if name == "q" and self.pres.field.has_q:
            return self.pres.scalar(self.pres.field.q)
        raise ParseError(f"unknown symbol {name!r}", name)

    def _lift(self, a, b):
        if isinstance(a, Element) and isinstance(b, Element) and a.pres is not b.pres:
            if a.is_scalar():
                a = b.pres.scalar(a.scalar_value())
            elif b.is_scalar():
                b = a.pres.scalar(b.scalar_value())
        return a, b

    def add(self, a, b):
        a, b = self._lift(a, b)
        return a + b

    def sub(self, a, b):
        a, b = self._lift(a, b)
        return a - b

    def mul(self, a, b):
        if isinstance(a, Element) and a.is_scalar():
            return b * a.scalar_value()
        if isinstance(b, Element) and b.is_scalar():
            return a * b.scalar_value()
        return a * b

    def div(self, a, b):
        if isinstance(b, Element):
            if not b.is_scalar():
                raise ParseError("division by a non-scalar expression", b.render())
            b = b.scalar_value()
        if not b:
            raise ParseError("division by zero", "/")
        return a / b

    def tensor(self, a, b):
        if self.tensor_fn is None:
            raise ParseError("tensor product '@' is not allowed here", "@")
        return self.tensor_fn(a, b)
