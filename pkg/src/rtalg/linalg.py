"""Exact linear algebra over QQ and QQ_q.

Elimination is fraction-free (Bareiss): rows are first scaled into the
integers (for QQ) or into integer polynomials in q (for QQ_q), eliminated
with exact divisions, and only the final back-substitution touches field
elements.  Small incremental subspace bookkeeping uses plain field
arithmetic through :class:`Subspace`.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .scalars import (QRatFunc, ONE_Q, QQ, QQ_q, p_exact_div, p_gcd, p_mul,
                      p_sub, p_content)


# ---------------------------------------------------------------------------
# integral-domain views of the two fields
# ---------------------------------------------------------------------------


class _IntDomain:
    zero = 0

    @staticmethod
    def is_zero(x):
        return x == 0

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def exact_div(a, b):
        qv, r = divmod(a, b)
        assert r == 0
        return qv

    @staticmethod
    def clear_row(row):
        den = 1
        for x in row:
            d = Fraction(x).denominator
            den = den * d // gcd(den, d)
        return [int(Fraction(x) * den) for x in row]

    @staticmethod
    def to_field(x):
        return Fraction(x)


class _PolyDomain:
    zero = ()

    @staticmethod
    def is_zero(x):
        return not x

    mul = staticmethod(p_mul)
    sub = staticmethod(p_sub)
    exact_div = staticmethod(p_exact_div)

    @staticmethod
    def clear_row(row):
        row = [QRatFunc.coerce(x) for x in row]
        lcm = (1,)
        for x in row:
            if not x.num or len(x.den) == 1:
                continue
            d = x.den
            g = p_gcd(lcm, d)
            lcm = p_exact_div(p_mul(lcm, d), g) if len(g) > 1 else p_mul(lcm, d)
        scale = QRatFunc(lcm, (1,))
        scaled = [x * scale for x in row]
        cden = 1
        for x in scaled:
            if x.num:
                assert len(x.den) == 1
                d = x.den[0]
                cden = cden * d // gcd(cden, d)
        out = []
        for x in scaled:
            if not x.num:
                out.append(())
            else:
                f = cden // x.den[0]
                out.append(tuple(c * f for c in x.num))
        # strip common integer content to keep entries small
        g = 0
        for p in out:
            if p:
                g = gcd(g, p_content(p))
        if g > 1:
            out = [tuple(c // g for c in p) for p in out]
        return out

    @staticmethod
    def to_field(x):
        return QRatFunc(x, (1,))


def _domain(field):
    return _PolyDomain if field is QQ_q else _IntDomain


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------


def echelon(rows, ncols, field):
    """Fraction-free row echelon form.

    Returns ``(E, pivots)`` with ``E`` a list of domain rows (only the nonzero
    ones) and ``pivots`` their pivot columns.
    """
    dom = _domain(field)
    M = [dom.clear_row(r) for r in rows]
    m = len(M)
    prev = 1 if dom is _IntDomain else (1,)
    r = 0
    pivots = []
    for c in range(ncols):
        if r >= m:
            break
        p = None
        for i in range(r, m):
            if not dom.is_zero(M[i][c]):
                p = i
                break
        if p is None:
            continue
        if p != r:
            M[p], M[r] = M[r], M[p]
        piv = M[r][c]
        for i in range(r + 1, m):
            a = M[i][c]
            row_i = M[i]
            if dom.is_zero(a):
                if prev != 1 and prev != (1,):
                    for j in range(c + 1, ncols):
                        row_i[j] = dom.exact_div(dom.mul(piv, row_i[j]), prev)
                else:
                    for j in range(c + 1, ncols):
                        row_i[j] = dom.mul(piv, row_i[j])
                continue
            row_r = M[r]
            for j in range(c + 1, ncols):
                v = dom.sub(dom.mul(piv, row_i[j]), dom.mul(a, row_r[j]))
                row_i[j] = dom.exact_div(v, prev)
            row_i[c] = dom.zero
        prev = piv
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rref(rows, ncols, field):
    """Reduced row echelon form over the field, pivots normalised to 1."""
    E, pivots = echelon(rows, ncols, field)
    dom = _domain(field)
    R = [[dom.to_field(x) for x in row] for row in E]
    zero = field.zero
    for k in range(len(R) - 1, -1, -1):
        c = pivots[k]
        inv = 1 / R[k][c] if field is QQ else R[k][c].inverse()
        R[k] = [x * inv if x else zero for x in R[k]]
        for i in range(k):
            a = R[i][c]
            if a:
                rk = R[k]
                R[i] = [x - a * y if y else x for x, y in zip(R[i], rk)]
    return R, pivots


def rank(rows, ncols, field) -> int:
    if not rows:
        return 0
    return len(echelon(rows, ncols, field)[1])


def nullspace(rows, ncols, field):
    """Basis of {x : rows . x = 0}; each vector has a single 1 at its free column."""
    if not rows:
        return [[field.one if j == i else field.zero for j in range(ncols)]
                for i in range(ncols)]
    R, pivots = rref(rows, ncols, field)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for k, c in enumerate(pivots):
            a = R[k][free]
            if a:
                v[c] = -a
        basis.append(v)
    return basis


def solve(rows, rhs, ncols, field):
    """One solution of rows . x = rhs, or None."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    if not aug:
        return [field.zero] * ncols
    R, pivots = rref(aug, ncols + 1, field)
    if pivots and pivots[-1] == ncols:
        return None
    x = [field.zero] * ncols
    for k, c in enumerate(pivots):
        x[c] = R[k][ncols]
    return x


def mat_vec(M, v, field):
    out = []
    for row in M:
        acc = field.zero
        for a, b in zip(row, v):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out


class Subspace:
    """Subspace of field^n kept as a reduced echelon basis (pivot entries 1)."""

    def __init__(self, n, field):
        self.n = n
        self.field = field
        self.rows = []      # list of (pivot, vector)

    def copy(self):
        s = Subspace(self.n, self.field)
        s.rows = list(self.rows)
        return s

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, v):
        v = list(v)
        for p, row in self.rows:
            a = v[p]
            if a:
                v = [x - a * y if y else x for x, y in zip(v, row)]
        return v

    def contains(self, v):
        return not any(self.reduce(v))

    def add(self, v) -> bool:
        """Insert v; returns True if the dimension grew."""
        w = self.reduce(v)
        p = next((i for i, x in enumerate(w) if x), None)
        if p is None:
            return False
        inv = w[p].inverse() if isinstance(w[p], QRatFunc) else 1 / w[p]
        w = [x * inv if x else self.field.zero for x in w]
        new_rows = []
        for q, row in self.rows:
            a = row[p]
            if a:
                row = [x - a * y if y else x for x, y in zip(row, w)]
            new_rows.append((q, row))
        new_rows.append((p, w))
        new_rows.sort(key=lambda t: t[0])
        self.rows = new_rows
        return True

    def basis(self):
        return [row for _, row in self.rows]

    def complement_vector(self, other: "Subspace"):
        """A vector of self not lying in ``other`` (None if self is inside other)."""
        for _, row in self.rows:
            if not other.contains(row):
                return row
        return None


def unit(n, i, field):
    v = [field.zero] * n
    v[i] = field.one
    return v


__all__ = ["echelon", "rref", "rank", "nullspace", "solve", "mat_vec",
           "Subspace", "unit", "QQ", "QQ_q", "ONE_Q"]
