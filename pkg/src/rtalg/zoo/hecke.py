"""Generating-function relations for infinitesimal Hecke algebras.

``SymPolynomial`` is a commutative polynomial in matrix-entry indeterminates
``a{j}{k}``.  The r-series (gl case) and the l-series (sp case) are expanded
as truncated power series in T with SymPolynomial coefficients; the
determinant factor uses ``det(1 - TA)^-1 = exp(sum_m tr(A^m) T^m / m)``.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial


class SymPolynomial:
    """Dict from monomials (sorted tuples of (variable, exponent)) to Fractions."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, c):
        return cls({(): c})

    @classmethod
    def var(cls, name):
        return cls({((name, 1),): 1})

    def __add__(self, other):
        other = _lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return SymPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return SymPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return SymPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymPolynomial.const(other)
        return isinstance(other, SymPolynomial) and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def substitute(self, mapping):
        """Replace variables by SymPolynomials (unmapped variables stay)."""
        out = SymPolynomial()
        for m, c in self.terms.items():
            acc = SymPolynomial.const(c)
            for v, e in m:
                img = mapping.get(v)
                img = SymPolynomial.var(v) if img is None else _lift(img)
                for _ in range(e):
                    acc = acc * img
            out = out + acc
        return out

    def rename(self, mapping):
        return self.substitute({k: SymPolynomial.var(v) for k, v in mapping.items()})

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda t: (-sum(e for _, e in t[0]), t[0])):
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"SymPolynomial({self.render()})"


def _lift(x):
    if isinstance(x, SymPolynomial):
        return x
    return SymPolynomial.const(x)


def _mono_mul(m1, m2):
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def entry(j, k):
    return f"a{j}{k}"


def generic_matrix(n):
    return [[SymPolynomial.var(entry(j, k)) for k in range(1, n + 1)] for j in range(1, n + 1)]


def sp2_matrix():
    """Generic traceless 2x2 matrix, the Lie algebra sp(2) = sl(2)."""
    a11 = SymPolynomial.var("a11")
    return [[a11, SymPolynomial.var("a12")], [SymPolynomial.var("a21"), -a11]]


def mat_mul(A, B):
    n = len(A)
    return [[sum((A[i][k] * B[k][j] for k in range(n)), SymPolynomial()) for j in range(n)]
            for i in range(n)]


def identity(n):
    return [[SymPolynomial.const(1 if i == j else 0) for j in range(n)] for i in range(n)]


def matrix_powers(A, top):
    out = [identity(len(A))]
    for _ in range(top):
        out.append(mat_mul(out[-1], A))
    return out


def trace(A):
    return sum((A[i][i] for i in range(len(A))), SymPolynomial())


def series_exp(coeffs, top):
    """exp of a power series with zero constant term, truncated at T^top."""
    out = [SymPolynomial.const(1)] + [SymPolynomial() for _ in range(top)]
    power = [SymPolynomial.const(1)] + [SymPolynomial() for _ in range(top)]
    for k in range(1, top + 1):
        nxt = [SymPolynomial() for _ in range(top + 1)]
        for i, a in enumerate(power):
            if not a:
                continue
            for j in range(1, top + 1 - i):
                if coeffs[j]:
                    nxt[i + j] = nxt[i + j] + a * coeffs[j]
        power = nxt
        inv = Fraction(1, factorial(k))
        out = [o + p * inv for o, p in zip(out, power)]
    return out


def det_inverse_series(A, top):
    """Coefficients of det(1 - TA)^-1 up to T^top."""
    powers = matrix_powers(A, top)
    logc = [SymPolynomial()] + [trace(powers[m]) * Fraction(1, m) for m in range(1, top + 1)]
    return series_exp(logc, top)


def expand_r_series(n, x, y, i_max, A=None):
    """[r_0, ..., r_{i_max}] for covector index x and vector index y (1-based)."""
    if not 1 <= n <= 3:
        raise ValueError("expand_r_series supports 1 <= n <= 3")
    if not 0 <= i_max <= 4:
        raise ValueError("expand_r_series supports i_max <= 4")
    A = A or generic_matrix(n)
    powers = matrix_powers(A, i_max)
    dets = det_inverse_series(A, i_max)
    out = []
    for i in range(i_max + 1):
        acc = SymPolynomial()
        for m in range(i + 1):
            acc = acc + powers[m][x - 1][y - 1] * dets[i - m]
        out.append(acc)
    return out


def omega(u, v):
    """Standard symplectic form on k^2: omega(e1, e2) = 1."""
    return u[0] * v[1] - u[1] * v[0]


def _basis(i, n):
    return [SymPolynomial.const(1 if k == i - 1 else 0) for k in range(n)]


def _apply(B, v):
    return [sum((B[i][k] * v[k] for k in range(len(v))), SymPolynomial()) for i in range(len(B))]


def l_series_full(x, y, i_max, A=None):
    """All coefficients of omega(x, (1 - T^2 A^2)^-1 y) det(1 - TA)^-1 up to T^i_max."""
    A = A or sp2_matrix()
    n = len(A)
    A2 = mat_mul(A, A)
    pw = matrix_powers(A2, i_max // 2)
    dets = det_inverse_series(A, i_max)
    xv, yv = _basis(x, n), _basis(y, n)
    left = [SymPolynomial() for _ in range(i_max + 1)]
    for k in range(i_max // 2 + 1):
        left[2 * k] = omega(xv, _apply(pw[k], yv))
    out = []
    for i in range(i_max + 1):
        acc = SymPolynomial()
        for m in range(i + 1):
            if left[m]:
                acc = acc + left[m] * dets[i - m]
        out.append(acc)
    return out


def expand_l_series(n, x, y, i_max, A=None):
    """Even coefficients [l_0, l_2, ...] (indices <= i_max) for sp(2n), n = 1."""
    if n != 1:
        raise ValueError("expand_l_series supports n = 1 only")
    if not 0 <= i_max <= 4:
        raise ValueError("expand_l_series supports i_max <= 4")
    full = l_series_full(x, y, i_max, A)
    for i in range(1, i_max + 1, 2):
        if full[i]:
            raise ArithmeticError(f"odd coefficient T^{i} does not vanish: {full[i].render()}")
    return [full[i] for i in range(0, i_max + 1, 2)]


def symmetrize(p: SymPolynomial, pres, coord_map):
    """Image of p under X_1...X_d -> (1/d!) sum_sigma X_sigma(1)...X_sigma(d).

    ``coord_map`` sends each variable name to an Element (or expression text)
    of ``pres``; the result is reduced to normal form.
    """
    images = {}
    total = pres.zero()
    for mono, c in p.terms.items():
        letters = []
        for v, e in mono:
            if v not in coord_map:
                raise KeyError(f"indeterminate {v!r} has no image")
            if v not in images:
                img = coord_map[v]
                images[v] = pres.parse(img) if isinstance(img, str) else img
            letters.extend([v] * e)
        d = len(letters)
        if d == 0:
            total = total + pres.scalar(c)
            continue
        acc = pres.zero()
        for perm in set(itertools.permutations(letters)):
            count = _perm_multiplicity(letters)
            prod = pres.one()
            for v in perm:
                prod = prod * images[v]
            acc = acc + prod * count
        total = total + acc * (Fraction(c) / factorial(d))
    return total


def _perm_multiplicity(letters):
    out = 1
    for v in set(letters):
        out *= factorial(letters.count(v))
    return out


def gl_coord_map(n):
    """Trace-pairing identification: a_{jk} -> E_{kj}."""
    return {entry(j, k): f"E{k}{j}" for j in range(1, n + 1) for k in range(1, n + 1)}


def sp2_coord_map():
    return {"a11": "u11/2", "a12": "w11/2", "a21": "v11/2"}


# ---------------------------------------------------------------------------
# symbolic identities behind the anti-involutions
# ---------------------------------------------------------------------------


def transpose(M):
    return [[M[j][i] for j in range(len(M))] for i in range(len(M))]


def r_transpose_identity(n, i_max):
    """Mismatches (k, l, i) of r_i(v_k, v_l^*)(A^T) = r_i(v_l, v_k^*)(A); empty when it holds."""
    A = generic_matrix(n)
    At = transpose(A)
    bad = []
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            lhs = expand_r_series(n, l, k, i_max, A=At)
            rhs = expand_r_series(n, k, l, i_max, A=A)
            bad.extend((k, l, i) for i in range(i_max + 1) if lhs[i] != rhs[i])
    return bad


TAU = ((1, 0), (0, -1))
SWAP = ((0, 1), (1, 0))


def j_matrix(C):
    """j(C) = tau C^T tau on gl_2."""
    t = [[SymPolynomial.const(x) for x in row] for row in TAU]
    return mat_mul(mat_mul(t, transpose(C)), t)


def j_vector(x):
    """e_1 <-> e_2."""
    return [x[1], x[0]]


def _matvec(C, v):
    return [sum((C[i][k] * v[k] for k in range(len(v))), SymPolynomial()) for i in range(len(C))]


def linv_identity():
    """Basis pairs (x, y) violating omega(x, Cy) = omega(j(y), j(C) j(x)) for generic C in gl_2."""
    C = [[SymPolynomial.var(f"c{i}{k}") for k in (1, 2)] for i in (1, 2)]
    jC = j_matrix(C)
    bad = []
    for x in (1, 2):
        for y in (1, 2):
            xv, yv = _basis(x, 2), _basis(y, 2)
            lhs = omega(xv, _matvec(C, yv))
            rhs = omega(j_vector(yv), _matvec(jC, j_vector(xv)))
            if lhs != rhs:
                bad.append((x, y))
    return bad


def l_series_j_identity(i_max=4):
    """Mismatches (x, y, 2i) of l_2i(x, y)(j(A)) = l_2i(j(y), j(x))(A) on sp_2."""
    A = sp2_matrix()
    jA = j_matrix(A)
    bad = []
    for x in (1, 2):
        for y in (1, 2):
            lhs = expand_l_series(1, x, y, i_max, A=jA)
            rhs = expand_l_series(1, 3 - y, 3 - x, i_max, A=A)
            bad.extend((x, y, 2 * i) for i in range(len(lhs)) if lhs[i] != rhs[i])
    return bad
