# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled reduction kernel; same interface as _kernel_py."""
from rtalg.rewrite._errors import MissingRule


cdef inline void _acc(dict out, tuple mono, object x):
    cdef object old = out.get(mono)
    if old is not None:
        x = old + x
        if x:
            out[mono] = x
        else:
            del out[mono]
    elif x:
        out[mono] = x


cdef class Reducer:
    cdef public dict by_first
    cdef public frozenset must
    cdef public object one
    cdef dict _lm
    cdef dict _nf

    def __init__(self, rules, must_pairs, one):
        cdef dict by_first = {}
        for lhs, rhs in rules.items():
            by_first.setdefault(lhs[0], []).append((tuple(lhs[1:]), tuple(rhs)))
        for a in by_first:
            by_first[a].sort(key=lambda t: len(t[0]))
        self.by_first = by_first
        self.must = frozenset(must_pairs)
        self.one = one
        self._lm = {}
        self._nf = {}

    def clear(self):
        self._lm.clear()
        self._nf.clear()

    def match(self, a, tuple m):
        cdef list cands = self.by_first.get(a)
        cdef tuple rest
        cdef Py_ssize_t k
        if cands:
            for rest, rhs in cands:
                k = len(rest)
                if m[:k] == rest:
                    return k, rhs
        return None

    cpdef dict left_mul(self, object a, tuple m):
        cdef tuple key = (a, m)
        cdef object hit = self._lm.get(key)
        cdef dict out, part
        cdef tuple tail, word, mono
        cdef Py_ssize_t k
        if hit is not None:
            return <dict>hit
        found = self.match(a, m)
        if found is None:
            if m and (a, m[0]) in self.must:
                raise MissingRule(a, m[0])
            out = {(a,) + m: self.one}
        else:
            k = found[0]
            tail = m[k:]
            out = {}
            for word, c in found[1]:
                part = self.mul_word_normal(word, tail)
                for mono, v in part.items():
                    _acc(out, mono, c * v)
        self._lm[key] = out
        return out

    cpdef dict mul_word_normal(self, tuple word, tuple m):
        cdef dict acc = {m: self.one}
        cdef dict new
        cdef Py_ssize_t i
        cdef tuple mono, mono2
        for i in range(len(word) - 1, -1, -1):
            a = word[i]
            new = {}
            for mono, c in acc.items():
                for mono2, c2 in self.left_mul(a, mono).items():
                    _acc(new, mono2, c * c2)
            acc = new
            if not acc:
                break
        return acc

    cpdef dict nf_word(self, tuple word):
        cdef object hit = self._nf.get(word)
        if hit is None:
            hit = self.mul_word_normal(word, ())
            self._nf[word] = hit
        return <dict>hit

    cpdef dict nf(self, dict combo):
        cdef dict out = {}
        cdef tuple word, mono
        for word, c in combo.items():
            if not c:
                continue
            for mono, v in self.nf_word(word).items():
                _acc(out, mono, c * v)
        return out

    cpdef dict mul(self, dict x, dict y):
        cdef dict out = {}
        cdef tuple wx, wy, mono
        for wx, cx in x.items():
            for wy, cy in y.items():
                c = cx * cy
                for mono, v in self.mul_word_normal(wx, wy).items():
                    _acc(out, mono, c * v)
        return out


def add_into(dict out, dict combo, scale):
    cdef tuple mono
    for mono, v in combo.items():
        _acc(out, mono, scale * v)
    return out
