"""Text format for presentations, with export and round-trip comparison.

A file is a sequence of ``[section]`` blocks; ``#`` starts a comment.

    [meta]         name = ..., family = ..., note = ... (repeatable)
    [scalars]      field = Q | Q(q), then parameters  name = value
    [weights]      kind, coords, orders, simple_roots, restriction, restriction_names
    [generators]   name: class; root=[..]; weight=<weight literal>; degree=d;
                   grouplike; inverse=X; eval=i:e; order=m
    [relations]    [label:] a*b = <expression>      (oriented left to right)
    [antihom]      x = <expression>
    [hopf]         delta x = <tensor expression> | eps x = .. | S x = .. | T x = ..
    [central]      name = <expression>
    [twist]        x = <scalar>
"""
from __future__ import annotations

import re
from fractions import Fraction

from ..expr import Env, ParseError, evaluate, parse
from ..scalars import QRatFunc, field_by_name, render_scalar
from ..weights import RootVector, WeightModel, parse_weight
from .presentation import CLASSES, Generator, Presentation, PresentationError, Relation

SECTIONS = ("meta", "scalars", "weights", "generators", "relations", "antihom", "hopf",
            "central", "twist")
_SPLIT = re.compile(r"[;,](?![^\[\]{}()]*[\]})])")
_INT = re.compile(r"^-?\d+$")


class PresentationFileError(ParseError):
    def __init__(self, message, token=None, line=None, source="<text>"):
        where = f"{source}:{line}: " if line else f"{source}: "
        super().__init__(where + message, token)
        self.line = line


class _FormalEnv(Env):
    """Expressions as unreduced linear combinations of words {name tuple: scalar}."""

    def __init__(self, field, names, params, inverses):
        self.field = field
        self.names = names
        self.params = params
        self.inverses = inverses

    def _s(self, c):
        c = self.field(c)
        return {(): c} if c else {}

    def number(self, n):
        return self._s(n)

    def symbol(self, name):
        if name in self.names:
            return {(name,): self.field.one}
        if name in self.params:
            v = self.params[name]
            try:
                return self._s(v if not isinstance(v, str) else Fraction(v))
            except (ValueError, TypeError):
                raise ParseError(f"parameter {name!r} is not a scalar", name) from None
        if name == "q" and self.field.has_q:
            return self._s(self.field.q)
        raise ParseError(f"unknown symbol {name!r}", name)

    def add(self, a, b):
        out = dict(a)
        for w, c in b.items():
            v = out.get(w, self.field.zero) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return out

    def neg(self, a):
        return {w: -c for w, c in a.items()}

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        out = {}
        for w1, c1 in a.items():
            for w2, c2 in b.items():
                w = w1 + w2
                v = out.get(w, self.field.zero) + c1 * c2
                if v:
                    out[w] = v
                else:
                    out.pop(w, None)
        return out

    def _scalar_of(self, a):
        if any(w for w in a):
            return None
        return a.get((), self.field.zero)

    def div(self, a, b):
        s = self._scalar_of(b)
        if s is None:
            raise ParseError("division by a non-scalar expression", "/")
        if not s:
            raise ParseError("division by zero", "/")
        return {w: c / s for w, c in a.items()}

    def power(self, a, k):
        s = self._scalar_of(a)
        if s is not None:
            if not s and k < 0:
                raise ParseError("zero to a negative power", "^")
            return self._s(s ** k)
        if k < 0:
            if len(a) == 1:
                (w, c), = a.items()
                if len(w) == 1 and w[0] in self.inverses and c == self.field.one:
                    a, k = {(self.inverses[w[0]],): c}, -k
            if k < 0:
                raise ParseError("negative power of a non-invertible expression", "^")
        out = self._s(1)
        for _ in range(k):
            out = self.mul(out, a)
        return out


def _items(body):
    return [p.strip() for p in _SPLIT.split(body) if p.strip()]


def _bracket_list(text, conv):
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise ParseError(f"expected a bracketed list, got {text!r}", text)
    inner = t[1:-1].strip()
    return [conv(x.strip()) for x in inner.split(",")] if inner else []


def parse_presentation(text, source="<text>") -> Presentation:
    sections = {s: [] for s in SECTIONS}
    current = None
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"\[([A-Za-z]+)\]", line)
        if m:
            current = m.group(1).lower()
            if current not in sections:
                raise PresentationFileError(f"unknown section [{current}]", current, no, source)
            continue
        if current is None:
            raise PresentationFileError("content before the first section header", line, no, source)
        sections[current].append((no, line))

    def kv(no, line):
        if "=" not in line:
            raise PresentationFileError(f"expected 'key = value', got {line!r}", line, no, source)
        k, v = line.split("=", 1)
        return k.strip(), v.strip()

    def fail(exc, no):
        tok = getattr(exc, "token", None)
        return PresentationFileError(str(exc), tok, no, source)

    meta = {"name": "unnamed", "family": None, "notes": []}
    for no, line in sections["meta"]:
        k, v = kv(no, line)
        if k == "note":
            meta["notes"].append(v)
        elif k in ("name", "family"):
            meta[k] = v
        else:
            raise PresentationFileError(f"unknown meta key {k!r}", k, no, source)

    field = None
    params = {}
    for no, line in sections["scalars"]:
        k, v = kv(no, line)
        if k == "field":
            try:
                field = field_by_name(v)
            except ValueError as exc:
                raise PresentationFileError(str(exc), v, no, source) from None
        else:
            params[k] = int(v) if _INT.match(v) else v
    if field is None:
        raise PresentationFileError("[scalars] must set field", "field", None, source)

    from ..expr import parse_scalar

    def scalar(t, no):
        try:
            return parse_scalar(t, field, {k: v for k, v in params.items()
                                           if isinstance(v, int)})
        except ParseError as exc:
            raise fail(exc, no) from None

    w = {}
    wline = {}
    for no, line in sections["weights"]:
        k, v = kv(no, line)
        w[k] = v
        wline[k] = no
    for req in ("kind", "coords", "simple_roots"):
        if req not in w:
            raise PresentationFileError(f"[weights] must set {req}", req, None, source)
    coords = [c.strip() for c in w["coords"].split(",") if c.strip()]
    try:
        roots = [_bracket_list(r, lambda x: scalar(x, wline["simple_roots"]))
                 for r in w["simple_roots"].split(";") if r.strip()]
        orders = [int(x) for x in w["orders"].split(",")] if "orders" in w else None
        restriction = None
        if "restriction" in w:
            restriction = [_bracket_list(r, int) for r in w["restriction"].split(";") if r.strip()]
        rnames = [x.strip() for x in w["restriction_names"].split(",")] \
            if "restriction_names" in w else None
        model = WeightModel(w["kind"], coords, roots, restriction, field=field, orders=orders,
                            restriction_names=rnames)
    except (ParseError, ValueError) as exc:
        raise fail(exc, wline.get("kind")) from None

    gens = []
    for no, line in sections["generators"]:
        if ":" not in line:
            raise PresentationFileError(f"expected 'name: class; ...', got {line!r}", line, no, source)
        name, body = line.split(":", 1)
        name = name.strip()
        parts = [p.strip() for p in body.split(";") if p.strip()]
        if not parts or parts[0] not in CLASSES:
            tok = parts[0] if parts else body
            raise PresentationFileError(f"unknown generator class {tok!r}", tok, no, source)
        g = {"name": name, "cls": parts[0], "degree": 1, "grouplike": False, "inverse": None,
             "cartan_eval": None, "order": 0, "root": None, "offset": None}
        for p in parts[1:]:
            key, _, val = p.partition("=")
            key, val = key.strip(), val.strip()
            try:
                if key == "root":
                    g["root"] = RootVector(_bracket_list(val, int))
                elif key == "weight":
                    g["offset"] = tuple(parse_weight(val, model, None).coords)
                elif key == "degree":
                    g["degree"] = int(val)
                elif key == "grouplike":
                    g["grouplike"] = True
                elif key == "inverse":
                    g["inverse"] = val
                elif key == "eval":
                    i, _, e = val.partition(":")
                    g["cartan_eval"] = (int(i), int(e or 1))
                elif key == "order":
                    g["order"] = int(val)
                else:
                    raise PresentationFileError(f"unknown generator attribute {key!r}", key, no, source)
            except (ParseError, ValueError) as exc:
                if isinstance(exc, PresentationFileError):
                    raise
                raise fail(exc, no) from None
        if g["root"] is None or g["offset"] is None:
            raise PresentationFileError(f"generator {name!r} needs root= and weight=", name, no, source)
        gens.append(Generator(**g))

    names = {g.name for g in gens}
    inverses = {g.name: g.inverse for g in gens if g.inverse}
    env = _FormalEnv(field, names, params, inverses)

    def formal(t, no):
        try:
            return evaluate(parse(t), env)
        except ParseError as exc:
            raise fail(exc, no) from None

    rels = []
    for no, line in sections["relations"]:
        k, v = kv(no, line)
        label = ""
        m = re.match(r"^(.*?):\s*(.*)$", k)
        if m and "*" not in m.group(1):
            label, k = m.group(1).strip(), m.group(2).strip()
        lhs = tuple(x.strip() for x in k.split("*"))
        for x in lhs:
            if x not in names:
                raise PresentationFileError(f"unknown symbol {x!r} in relation", x, no, source)
        rels.append(Relation(lhs, formal(v, no), label))

    antihom = {}
    for no, line in sections["antihom"]:
        k, v = kv(no, line)
        formal(v, no)
        antihom[k] = v

    hopf = {}
    for no, line in sections["hopf"]:
        k, v = kv(no, line)
        kind, _, gname = k.partition(" ")
        if kind not in ("delta", "eps", "S", "T") or not gname.strip():
            raise PresentationFileError(f"bad hopf key {k!r}", k, no, source)
        hopf.setdefault(kind, {})[gname.strip()] = v

    central = {}
    for no, line in sections["central"]:
        k, v = kv(no, line)
        formal(v, no)
        central[k] = v

    twist = {}
    for no, line in sections["twist"]:
        k, v = kv(no, line)
        scalar(v, no)
        twist[k] = v

    try:
        return Presentation(meta["name"], model, gens, rels, params=params,
                            antihom=antihom or None, hopf=hopf or None, central=central,
                            hc_twist=twist or None, family=meta["family"], notes=meta["notes"])
    except (PresentationError, ParseError) as exc:
        raise PresentationFileError(str(exc), getattr(exc, "token", None), None, source) from None


def load_presentation(path) -> Presentation:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise PresentationFileError(f"cannot read file: {exc.strerror}", str(path), None,
                                    str(path)) from None
    return parse_presentation(text, source=str(path))


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------


def _coef(c):
    s = render_scalar(c)
    if isinstance(c, QRatFunc) or "/" in s:
        return f"({s})"
    return s


def _combo_text(rhs):
    parts = []
    for w, c in rhs.items():
        word = "*".join(w)
        if not word:
            parts.append(_coef(c))
        elif c == 1:
            parts.append(word)
        else:
            parts.append(f"{_coef(c)}*{word}")
    return " + ".join(parts) if parts else "0"


def export_presentation(A) -> str:
    m = A.model
    out = ["[meta]", f"name = {A.name}"]
    if A.family:
        out.append(f"family = {A.family}")
    out += [f"note = {n}" for n in A.notes]
    out += ["", "[scalars]", f"field = {A.field.name}"]
    out += [f"{k} = {v}" for k, v in A.params.items()]
    out += ["", "[weights]", f"kind = {m.kind}", f"coords = {', '.join(m.coords)}"]
    if any(m.orders):
        out.append(f"orders = {', '.join(str(o) for o in m.orders)}")
    out.append("simple_roots = " + "; ".join(
        "[" + ", ".join(render_scalar(c) for c in a) + "]" for a in m.simple_roots))
    if not m.strict:
        out.append("restriction = " + "; ".join(
            "[" + ", ".join(str(x) for x in r) + "]" for r in m.restriction))
    if m.restriction_names:
        out.append(f"restriction_names = {', '.join(m.restriction_names)}")
    out += ["", "[generators]"]
    for g in A.gens:
        bits = [g.cls, f"root=[{', '.join(str(x) for x in g.root)}]",
                f"weight={m.render(m.weight(g.offset))}", f"degree={g.degree}"]
        if g.grouplike:
            bits.append("grouplike")
        if g.inverse:
            bits.append(f"inverse={g.inverse}")
        if g.cartan_eval is not None:
            bits.append(f"eval={g.cartan_eval[0]}:{g.cartan_eval[1]}")
        if g.order:
            bits.append(f"order={g.order}")
        out.append(f"{g.name}: " + "; ".join(bits))
    out += ["", "[relations]"]
    for r in A.relations:
        label = f"{r.label}: " if r.label and ":" not in r.label and "=" not in r.label else ""
        out.append(f"{label}{'*'.join(r.lhs)} = {_combo_text(r.rhs)}")
    if A.antihom:
        out += ["", "[antihom]"] + [f"{k} = {v}" for k, v in A.antihom.items()]
    if A.hopf:
        out += ["", "[hopf]"]
        for kind in ("delta", "eps", "S", "T"):
            for k, v in A.hopf.get(kind, {}).items():
                out.append(f"{kind} {k} = {v}")
    if A.central:
        out += ["", "[central]"]
        for k, v in A.central.items():
            out.append(f"{k} = {v if isinstance(v, str) else v.render()}")
    if A.hc_twist:
        out += ["", "[twist]"] + [f"{k} = {v}" for k, v in A.hc_twist.items()]
    return "\n".join(out) + "\n"


def equivalent(A, B):
    """(True, "") when two presentations agree on model, generators, rules and extra data."""
    if A.model.describe() != B.model.describe():
        return False, "weight models differ"
    ga = [(g.name, g.cls, tuple(g.root), tuple(g.offset), g.degree, g.grouplike, g.inverse,
           g.cartan_eval, g.order) for g in A.gens]
    gb = [(g.name, g.cls, tuple(g.root), tuple(g.offset), g.degree, g.grouplike, g.inverse,
           g.cartan_eval, g.order) for g in B.gens]
    if ga != gb:
        return False, "generators differ"
    if {k: sorted(v, key=repr) for k, v in A.rules.items()} != \
            {k: sorted(v, key=repr) for k, v in B.rules.items()}:
        return False, "rewriting rules differ"
    for attr in ("antihom", "hopf", "hc_twist"):
        if getattr(A, attr) != getattr(B, attr):
            return False, f"{attr} differs"
    ca = {k: A.parse(v) if isinstance(v, str) else v for k, v in A.central.items()}
    cb = {k: B.parse(v) if isinstance(v, str) else v for k, v in B.central.items()}
    if set(ca) != set(cb) or any(ca[k].terms != cb[k].terms for k in ca):
        return False, "central elements differ"
    return True, ""
