"""Exact coefficient fields: the rationals and rational functions in ``q``.

Two coefficient domains are supported.  ``QQ`` uses :class:`fractions.Fraction`
directly.  ``QQ_q`` uses :class:`QRatFunc`, a reduced quotient of integer
polynomials in a single formal variable ``q``.  Laurent polynomials such as
``q + q^-1`` are stored as ``(q^2 + 1) / q``.

The q-integer convention is the balanced one, ``[n] = (q^n - q^-n)/(q - q^-1)``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Union

# ---------------------------------------------------------------------------
# dense integer polynomials: tuples of ints, lowest degree first, no trailing 0
# ---------------------------------------------------------------------------

Poly = tuple


def _trim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def p_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def p_neg(a):
    return tuple(-x for x in a)


def p_sub(a, b):
    return p_add(a, p_neg(b))


def p_mul(a, b):
    if not a or not b:
        return ()
    if len(a) == 1:
        s = a[0]
        return tuple(s * x for x in b)
    if len(b) == 1:
        s = b[0]
        return tuple(s * x for x in a)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def p_scale(a, s):
    if s == 0:
        return ()
    return tuple(s * x for x in a)


def p_shift(a, k):
    """Multiply by q^k (k >= 0) or divide by q^-k (must be exact)."""
    if not a or k == 0:
        return a
    if k > 0:
        return (0,) * k + a
    assert all(x == 0 for x in a[:-k])
    return a[-k:]


def p_valuation(a):
    for i, x in enumerate(a):
        if x:
            return i
    return 0


def p_content(a):
    g = 0
    for x in a:
        g = gcd(g, x)
        if g == 1:
            break
    return g


def p_primitive(a):
    if not a:
        return a
    c = p_content(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return a
    return tuple(x // c for x in a)


def p_pseudo_rem(a, b):
    """Pseudo-remainder of a by b over the integers."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * x for x in r]
        for i, y in enumerate(b):
            r[i + shift] -= lr * y
        r = list(_trim(r))
    return tuple(r)


def p_gcd(a, b):
    """Primitive gcd over Q[q], normalised to positive leading coefficient."""
    if not a:
        return p_primitive(b)
    if not b:
        return p_primitive(a)
    if len(a) == 1 or len(b) == 1:
        return (1,)
    va, vb = p_valuation(a), p_valuation(b)
    v = min(va, vb)
    a = p_primitive(a[va:])
    b = p_primitive(b[vb:])
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        r = p_pseudo_rem(a, b)
        a, b = b, p_primitive(r)
        if not b:
            break
    if not b:
        g = a
    else:
        g = (1,)
    return p_shift(p_primitive(g), v)


def p_exact_div(a, b):
    """Divide a by b in Z[q]; raises ArithmeticError if not exact."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    if len(b) == 1:
        s = b[0]
        out = []
        for x in a:
            qv, rv = divmod(x, s)
            if rv:
                raise ArithmeticError("inexact polynomial division")
            out.append(qv)
        return tuple(out)
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    quot = [0] * max(len(a) - db, 0)
    while len(r) - 1 >= db and r:
        lr = r[-1]
        c, rem = divmod(lr, lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        shift = len(r) - 1 - db
        quot[shift] = c
        for i, y in enumerate(b):
            r[i + shift] -= c * y
        r = list(_trim(r))
    if r:
        raise ArithmeticError("inexact polynomial division")
    return _trim(quot)


def p_eval(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


def _reduce(num, den):
    if not den:
        raise ZeroDivisionError("rational function with zero denominator")
    if not num:
        return (), (1,)
    if len(den) > 1:
        vd = p_valuation(den)
        if vd == len(den) - 1:
            # monomial denominator: cancel q-powers only
            v = min(vd, p_valuation(num))
            if v:
                num = num[v:]
                den = den[v:]
        elif len(num) > 1:
            g = p_gcd(num, den)
            if len(g) > 1:
                num = p_exact_div(num, g)
                den = p_exact_div(den, g)
    c = gcd(p_content(num), p_content(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    return num, den


class QRatFunc:
    """Element of Q(q), kept as a reduced quotient of integer polynomials.

    Normal form: ``gcd(num, den) = 1`` over Q[q], the integer content of
    ``num`` and ``den`` taken together is 1, and ``den`` has a positive leading
    coefficient.  Equality is therefore comparison of the stored tuples.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=(), den=(1,), *, _reduced=False):
        num = _trim(num)
        den = _trim(den)
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # -- construction ------------------------------------------------------
    @classmethod
    def coerce(cls, x) -> "QRatFunc":
        if isinstance(x, QRatFunc):
            return x
        if isinstance(x, int):
            return cls((x,) if x else (), (1,), _reduced=True)
        if isinstance(x, Fraction):
            return cls((x.numerator,), (x.denominator,), _reduced=True) if x else ZERO_Q
        raise TypeError(f"cannot coerce {type(x).__name__} into Q(q)")

    @classmethod
    def q_power(cls, k: int) -> "QRatFunc":
        if k >= 0:
            return cls((0,) * k + (1,), (1,), _reduced=True)
        return cls((1,), (0,) * (-k) + (1,), _reduced=True)

    @classmethod
    def laurent(cls, coeffs: dict) -> "QRatFunc":
        """Build from ``{exponent: integer-or-Fraction coefficient}``."""
        if not coeffs:
            return ZERO_Q
        lo = min(coeffs)
        hi = max(coeffs)
        dl = 1
        for c in coeffs.values():
            if isinstance(c, Fraction):
                dl = dl * c.denominator // gcd(dl, c.denominator)
        num = [0] * (hi - lo + 1)
        for e, c in coeffs.items():
            num[e - lo] += int(c * dl)
        den = (dl,)
        if lo < 0:
            den = (0,) * (-lo) + (dl,)
            return cls(tuple(num), den)
        return cls((0,) * lo + tuple(num), den)

    # -- predicates --------------------------------------------------------
    def __bool__(self):
        return bool(self.num)

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        if not self.num:
            return Fraction(0)
        return Fraction(self.num[0], self.den[0])

    def is_monomial(self) -> bool:
        """True for c * q^k (k possibly negative)."""
        if not self.num:
            return False
        return (p_valuation(self.num) == len(self.num) - 1
                and p_valuation(self.den) == len(self.den) - 1)

    def monomial_parts(self):
        """Return (Fraction c, int k) with self == c q^k."""
        if not self.is_monomial():
            raise ValueError(f"{self} is not a monomial in q")
        k = (len(self.num) - 1) - (len(self.den) - 1)
        return Fraction(self.num[-1], self.den[-1]), k

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, QRatFunc):
            if isinstance(other, (int, Fraction)):
                other = QRatFunc.coerce(other)
            else:
                return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            return QRatFunc(p_add(a, c), b)
        if len(b) == 1 and len(d) == 1:
            return QRatFunc(p_add(p_scale(a, d[0]), p_scale(c, b[0])), (b[0] * d[0],))
        return QRatFunc(p_add(p_mul(a, d), p_mul(c, b)), p_mul(b, d))

    __radd__ = __add__

    def __neg__(self):
        return QRatFunc(p_neg(self.num), self.den, _reduced=True)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, QRatFunc):
            if isinstance(other, (int, Fraction)):
                other = QRatFunc.coerce(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QRatFunc):
            if isinstance(other, int):
                if other == 0:
                    return ZERO_Q
                if other == 1:
                    return self
                return QRatFunc(p_scale(self.num, other), self.den)
            if isinstance(other, Fraction):
                other = QRatFunc.coerce(other)
            else:
                return NotImplemented
        if not self.num or not other.num:
            return ZERO_Q
        a, b, c, d = self.num, self.den, other.num, other.den
        if len(b) == 1 and len(d) == 1:
            return QRatFunc(p_mul(a, c), (b[0] * d[0],))
        # cross cancellation keeps intermediate degrees small
        g1 = p_gcd(a, d) if len(a) > 1 and len(d) > 1 else (1,)
        g2 = p_gcd(c, b) if len(c) > 1 and len(b) > 1 else (1,)
        if len(g1) > 1:
            a = p_exact_div(a, g1)
            d = p_exact_div(d, g1)
        if len(g2) > 1:
            c = p_exact_div(c, g2)
            b = p_exact_div(b, g2)
        num, den = p_mul(a, c), p_mul(b, d)
        cc = gcd(p_content(num), p_content(den))
        if den[-1] < 0:
            cc = -cc
        if cc != 1:
            num = tuple(x // cc for x in num)
            den = tuple(x // cc for x in den)
        return QRatFunc(num, den, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "QRatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        num, den = self.den, self.num
        if den[-1] < 0:
            num, den = p_neg(num), p_neg(den)
        return QRatFunc(num, den, _reduced=True)

    def __truediv__(self, other):
        if not isinstance(other, QRatFunc):
            if isinstance(other, (int, Fraction)):
                other = QRatFunc.coerce(other)
            else:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QRatFunc.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE_Q
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QRatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == QRatFunc.coerce(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    # -- evaluation --------------------------------------------------------
    def at(self, x):
        """Evaluate at q = x (an exact number)."""
        d = p_eval(self.den, Fraction(x))
        if d == 0:
            raise ZeroDivisionError(f"{self} has a pole at q = {x}")
        return Fraction(p_eval(self.num, Fraction(x))) / d

    def __repr__(self):
        return f"QRatFunc({render_qratfunc(self)!r})"

    def __str__(self):
        return render_qratfunc(self)


ZERO_Q = QRatFunc((), (1,), _reduced=True)
ONE_Q = QRatFunc((1,), (1,), _reduced=True)
Q = QRatFunc((0, 1), (1,), _reduced=True)

Scalar = Union[Fraction, QRatFunc]


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _render_poly(coeffs) -> str:
    """Coefficients may be ints or Fractions; highest degree first."""
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        neg = c < 0
        a = -c if neg else c
        if k == 0:
            body = str(a)
        else:
            mono = "q" if k == 1 else f"q^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("-" if neg else "+") + body)
    return "".join(parts) if parts else "0"


def render_qratfunc(x: QRatFunc) -> str:
    if not x.num:
        return "0"
    if len(x.den) == 1:
        d = x.den[0]
        return _render_poly([Fraction(c, d) for c in x.num])
    return f"({_render_poly(x.num)})/({_render_poly(x.den)})"


def render_scalar(x) -> str:
    if isinstance(x, QRatFunc):
        return render_qratfunc(x)
    return str(Fraction(x))


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------


class RationalField:
    name = "Q"
    has_q = False

    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x):
        if isinstance(x, QRatFunc):
            return x.constant_value()
        return Fraction(x)

    def render(self, x) -> str:
        return render_scalar(x)

    def parse(self, text: str):
        from .expr import parse_scalar
        return parse_scalar(text, self)

    def __repr__(self):
        return "QQ"


class QFunctionField:
    name = "Q(q)"
    has_q = True

    zero = ZERO_Q
    one = ONE_Q
    q = Q

    def __call__(self, x):
        return QRatFunc.coerce(x)

    def render(self, x) -> str:
        return render_scalar(QRatFunc.coerce(x))

    def parse(self, text: str):
        from .expr import parse_scalar
        return parse_scalar(text, self)

    def __repr__(self):
        return "QQ_q"


QQ = RationalField()
QQ_q = QFunctionField()


def field_by_name(name: str):
    key = name.strip().replace(" ", "")
    if key in ("Q", "QQ"):
        return QQ
    if key in ("Q(q)", "QQ(q)", "QQ_q"):
        return QQ_q
    raise ValueError(f"unknown scalar field {name!r}")


# ---------------------------------------------------------------------------
# q-integers and Gaussian binomials
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def q_int(n: int, base_exponent: int = 1) -> QRatFunc:
    """Balanced q-integer [n] in the variable q^base_exponent."""
    if n < 0:
        return -q_int(-n, base_exponent)
    s = base_exponent
    return QRatFunc.laurent({s * (n - 1 - 2 * k): 1 for k in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n: int, base_exponent: int = 1) -> QRatFunc:
    out = ONE_Q
    for k in range(1, n + 1):
        out = out * q_int(k, base_exponent)
    return out


@lru_cache(maxsize=None)
def q_binomial(m: int, l: int, base_exponent: int = 1) -> QRatFunc:
    if l < 0 or l > m:
        return ZERO_Q
    s = base_exponent
    return q_factorial(m, s) / (q_factorial(l, s) * q_factorial(m - l, s))
