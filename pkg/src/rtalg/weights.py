"""Weight sets G, restricted weights G_0, root-lattice action and the order.

Two kinds of model are supported.

* additive: a weight is its list of values on a basis of the Cartan space.
* multiplicative: a weight is a character of a finitely generated abelian
  group, stored by its values on fixed generators (free ones and torsion ones).

Simple roots are stored as elements of the same coordinate space (for
non-strict models these are chosen lifts), and the restriction map pi is a
list of rows: linear functionals in the additive case, integer exponent
vectors in the multiplicative case.
"""
from __future__ import annotations

import itertools
import re
from fractions import Fraction

from .expr import ParseError, parse_scalar
from .linalg import solve
from .scalars import QQ, QQ_q, QRatFunc, render_scalar


class ModelMismatch(ValueError):
    pass


class RootVector(tuple):
    """Integer coordinates over the simple roots."""

    def __new__(cls, coeffs):
        return super().__new__(cls, (int(c) for c in coeffs))

    def __add__(self, other):
        return RootVector(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        return RootVector(a - b for a, b in zip(self, other))

    def __neg__(self):
        return RootVector(-a for a in self)

    def scale(self, k):
        return RootVector(k * a for a in self)

    @staticmethod
    def zero(rank):
        return RootVector((0,) * rank)

    def is_zero(self):
        return not any(self)

    def height(self):
        return sum(self)

    def __repr__(self):
        return f"RootVector({list(self)})"


class Weight:
    __slots__ = ("model", "coords", "_h")

    def __init__(self, model, coords):
        coords = tuple(model.field(c) for c in coords)
        if len(coords) != model.rank:
            raise ModelMismatch(f"weight has {len(coords)} coordinates, model rank is {model.rank}")
        if model.kind == "multiplicative":
            for c, order in zip(coords, model.orders):
                if not c:
                    raise ValueError("multiplicative weight values must be nonzero")
                if order and c ** order != model.field.one:
                    raise ValueError(f"value {render_scalar(c)} violates torsion order {order}")
        self.model = model
        self.coords = coords
        self._h = None

    def __eq__(self, other):
        return isinstance(other, Weight) and self.model is other.model and self.coords == other.coords

    def __hash__(self):
        if self._h is None:
            self._h = hash(self.coords)
        return self._h

    def __repr__(self):
        return f"Weight({self.render()})"

    def render(self):
        return self.model.render(self)

    def __str__(self):
        return self.render()


class WeightModel:
    """A weight set with its root lattice and restriction map.

    Parameters
    ----------
    kind : "additive" or "multiplicative"
    coords : names of Cartan coordinates (additive) or group generators
    simple_roots : list of coordinate tuples, one per element of Delta
    restriction : rows defining pi; ``None`` means the model is strict
    orders : torsion orders per generator (0 = free); multiplicative only
    """

    def __init__(self, kind, coords, simple_roots, restriction=None, field=None,
                 orders=None, restriction_names=None):
        if kind not in ("additive", "multiplicative"):
            raise ValueError(f"unknown weight model kind {kind!r}")
        self.kind = kind
        self.field = field or (QQ if kind == "additive" else QQ_q)
        self.coords = list(coords)
        self.rank = len(self.coords)
        self.orders = list(orders) if orders else [0] * self.rank
        self.simple_roots = [tuple(self.field(c) for c in a) for a in simple_roots]
        self.strict = restriction is None
        if restriction is None:
            restriction = [[1 if i == j else 0 for j in range(self.rank)] for i in range(self.rank)]
            if kind == "multiplicative":
                restriction = [row for row, o in zip(restriction, self.orders) if not o]
        self.restriction = [list(r) for r in restriction]
        self.restriction_names = restriction_names
        self._pi_roots = [self._pi_coords(a) for a in self.simple_roots]
        self._check_independent()

    # -- basic maps ---------------------------------------------------------
    @property
    def n_roots(self):
        return len(self.simple_roots)

    def weight(self, coords) -> Weight:
        return Weight(self, coords)

    def zero_root(self):
        return RootVector.zero(self.n_roots)

    def _pi_coords(self, coords):
        if self.kind == "additive":
            out = []
            for row in self.restriction:
                acc = self.field.zero
                for a, x in zip(row, coords):
                    if a:
                        acc = acc + self.field(a) * x
                out.append(acc)
            return tuple(out)
        out = []
        for row in self.restriction:
            acc = self.field.one
            for a, x in zip(row, coords):
                if a:
                    acc = acc * x ** a
            out.append(acc)
        return tuple(out)

    def project(self, lam: Weight):
        """pi(lambda) as a tuple of scalars (coordinates on H_0)."""
        self._own(lam)
        return self._pi_coords(lam.coords)

    def root_coords(self, theta):
        """Coordinates of sum theta_i alpha_i (an element of the coordinate group)."""
        if self.kind == "additive":
            out = [self.field.zero] * self.rank
            for n, a in zip(theta, self.simple_roots):
                if n:
                    out = [x + n * y for x, y in zip(out, a)]
            return tuple(out)
        out = [self.field.one] * self.rank
        for n, a in zip(theta, self.simple_roots):
            if n:
                out = [x * y ** n for x, y in zip(out, a)]
        return tuple(out)

    def shift(self, lam: Weight, delta) -> Weight:
        """Translate lambda by a raw coordinate offset (sum or product)."""
        if self.kind == "additive":
            return Weight(self, [x + y for x, y in zip(lam.coords, delta)])
        return Weight(self, [x * y for x, y in zip(lam.coords, delta)])

    def identity_offset(self):
        if self.kind == "additive":
            return (self.field.zero,) * self.rank
        return (self.field.one,) * self.rank

    def combine_offsets(self, a, b):
        if self.kind == "additive":
            return tuple(x + y for x, y in zip(a, b))
        return tuple(x * y for x, y in zip(a, b))

    def act(self, theta, lam: Weight) -> Weight:
        self._own(lam)
        if len(theta) != self.n_roots:
            raise ModelMismatch("root vector length does not match the number of simple roots")
        return self.shift(lam, self.root_coords(theta))

    def leq(self, mu: Weight, lam: Weight):
        """theta_0 >= 0 with theta_0 * pi(mu) = pi(lam), or None."""
        self._own(mu)
        self._own(lam)
        if mu == lam:
            return self.zero_root()
        pm, pl = self._pi_coords(mu.coords), self._pi_coords(lam.coords)
        if pm == pl:
            return None
        theta = self._solve_root(pm, pl)
        if theta is None or any(t < 0 for t in theta):
            return None
        return theta

    def _solve_root(self, pm, pl):
        r = self.n_roots
        if self.kind == "additive":
            rows = [[self._pi_roots[i][k] for i in range(r)] for k in range(len(pl))]
            rhs = [b - a for a, b in zip(pm, pl)]
            sol = solve(rows, rhs, r, self.field)
        else:
            rows, rhs = [], []
            for k in range(len(pl)):
                ratio = QRatFunc.coerce(pl[k] / pm[k])
                if not ratio.is_monomial():
                    return None
                _, e = ratio.monomial_parts()
                row = []
                for i in range(r):
                    _, ei = QRatFunc.coerce(self._pi_roots[i][k]).monomial_parts()
                    row.append(Fraction(ei))
                rows.append(row)
                rhs.append(Fraction(e))
            sol = solve(rows, rhs, r, QQ)
        if sol is None:
            return None
        if any(Fraction(x).denominator != 1 for x in sol):
            return None
        theta = RootVector(int(Fraction(x)) for x in sol)
        # exponents alone ignore the constant factor, so recheck exactly
        if self.kind == "multiplicative":
            shifted = tuple(a * b for a, b in zip(pm, self._pi_coords(self.root_coords(theta))))
            if shifted != tuple(pl):
                return None
        return theta

    def _own(self, lam):
        if lam.model is not self:
            raise ModelMismatch("weight belongs to a different model")

    def _check_independent(self):
        r = self.n_roots
        if r == 0:
            return
        if self.kind == "additive":
            rows = [[self._pi_roots[i][k] for i in range(r)] for k in range(len(self.restriction))]
            from .linalg import rank
            if rank(rows, r, self.field) != r:
                raise ValueError("restricted simple roots are linearly dependent")
        else:
            rows = []
            for k in range(len(self.restriction)):
                row = []
                for i in range(r):
                    v = QRatFunc.coerce(self._pi_roots[i][k])
                    if not v.is_monomial():
                        raise ValueError("multiplicative simple roots must take values c*q^e")
                    row.append(Fraction(v.monomial_parts()[1]))
                rows.append(row)
            from .linalg import rank
            if rank(rows, r, QQ) != r:
                raise ValueError("restricted simple roots are multiplicatively dependent")

    # -- cartan evaluation -------------------------------------------------
    def evaluate_generator(self, lam: Weight, index: int, exponent: int):
        x = lam.coords[index]
        if self.kind == "additive":
            return x
        return x ** exponent

    # -- text --------------------------------------------------------------
    def render(self, lam: Weight) -> str:
        if self.kind == "additive":
            return "[" + ", ".join(render_scalar(c) for c in lam.coords) + "]"
        return "{" + ", ".join(f"{n}: {render_scalar(c)}" for n, c in zip(self.coords, lam.coords)) + "}"

    def render_root(self, theta) -> str:
        return "[" + ", ".join(str(t) for t in theta) + "]"

    def parse(self, text: str, params=None) -> Weight:
        return parse_weight(text, self, params)

    def describe(self):
        return {
            "kind": self.kind,
            "field": self.field.name,
            "coords": self.coords,
            "orders": self.orders,
            "simple_roots": [[render_scalar(c) for c in a] for a in self.simple_roots],
            "restriction": [[str(x) for x in r] for r in self.restriction],
            "strict": self.strict,
        }

    def enumerate_roots(self, bound):
        """All theta in Z^r with |theta_i| <= bound (freeness tests)."""
        rng = range(-bound, bound + 1)
        for t in itertools.product(rng, repeat=self.n_roots):
            yield RootVector(t)


_SPLIT_RE = re.compile(r",(?![^()]*\))")


def parse_weight(text: str, model: WeightModel, params=None) -> Weight:
    s = text.strip()
    try:
        if s.startswith("["):
            if not s.endswith("]"):
                raise ParseError(f"malformed weight literal {text!r}", text)
            body = s[1:-1].strip()
            parts = [p for p in _SPLIT_RE.split(body)] if body else []
            coords = [parse_scalar(p, model.field, params) for p in parts]
            return Weight(model, coords)
        if s.startswith("{"):
            if not s.endswith("}"):
                raise ParseError(f"malformed weight literal {text!r}", text)
            values = {}
            for item in _SPLIT_RE.split(s[1:-1]):
                if not item.strip():
                    continue
                if ":" not in item:
                    raise ParseError(f"malformed weight entry {item.strip()!r}", item.strip())
                k, v = item.split(":", 1)
                values[k.strip()] = parse_scalar(v, model.field, params)
            unknown = set(values) - set(model.coords)
            if unknown:
                bad = sorted(unknown)[0]
                raise ParseError(f"unknown weight coordinate {bad!r}", bad)
            coords = []
            for name in model.coords:
                if name in values:
                    coords.append(values[name])
                elif model.kind == "multiplicative":
                    coords.append(model.field.one)
                else:
                    coords.append(model.field.zero)
            return Weight(model, coords)
        if model.rank == 1:
            return Weight(model, [parse_scalar(s, model.field, params)])
    except ParseError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"malformed weight literal {text!r}: {exc}", text) from exc
    raise ParseError(f"malformed weight literal {text!r}", text)
