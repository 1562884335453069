"""Pure-Python reduction kernel.

Words are tuples of integer symbol ids.  A combination is a dict mapping
normal words to nonzero coefficients.  ``left_mul(a, m)`` computes the normal
form of ``a * m`` for a normal word ``m`` and is memoised; every other product
is folded out of it.
"""
from ._errors import MissingRule


class Reducer:
    def __init__(self, rules, must_pairs, one):
        # rules: {lhs tuple: [(word tuple, coeff), ...]}
        by_first = {}
        for lhs, rhs in rules.items():
            by_first.setdefault(lhs[0], []).append((lhs[1:], tuple(rhs)))
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

    def match(self, a, m):
        cands = self.by_first.get(a)
        if cands:
            for rest, rhs in cands:
                k = len(rest)
                if m[:k] == rest:
                    return k, rhs
        return None

    def left_mul(self, a, m):
        key = (a, m)
        hit = self._lm.get(key)
        if hit is not None:
            return hit
        found = self.match(a, m)
        if found is None:
            if m and (a, m[0]) in self.must:
                raise MissingRule(a, m[0])
            out = {(a,) + m: self.one}
        else:
            k, rhs = found
            tail = m[k:]
            out = {}
            for word, c in rhs:
                part = self.mul_word_normal(word, tail)
                for mono, v in part.items():
                    x = c * v
                    old = out.get(mono)
                    if old is not None:
                        x = old + x
                        if x:
                            out[mono] = x
                        else:
                            del out[mono]
                    elif x:
                        out[mono] = x
        self._lm[key] = out
        return out

    def mul_word_normal(self, word, m):
        """Normal form of word * m where m is already normal."""
        acc = {m: self.one}
        for i in range(len(word) - 1, -1, -1):
            a = word[i]
            new = {}
            for mono, c in acc.items():
                for mono2, c2 in self.left_mul(a, mono).items():
                    x = c * c2
                    old = new.get(mono2)
                    if old is not None:
                        x = old + x
                        if x:
                            new[mono2] = x
                        else:
                            del new[mono2]
                    elif x:
                        new[mono2] = x
            acc = new
            if not acc:
                break
        return acc

    def nf_word(self, word):
        hit = self._nf.get(word)
        if hit is None:
            hit = self.mul_word_normal(word, ())
            self._nf[word] = hit
        return hit

    def nf(self, combo):
        out = {}
        for word, c in combo.items():
            if not c:
                continue
            for mono, v in self.nf_word(word).items():
                x = c * v
                old = out.get(mono)
                if old is not None:
                    x = old + x
                    if x:
                        out[mono] = x
                    else:
                        del out[mono]
                elif x:
                    out[mono] = x
        return out

    def mul(self, x, y):
        """Product of two normal combinations."""
        out = {}
        for wx, cx in x.items():
            for wy, cy in y.items():
                c = cx * cy
                for mono, v in self.mul_word_normal(wx, wy).items():
                    z = c * v
                    old = out.get(mono)
                    if old is not None:
                        z = old + z
                        if z:
                            out[mono] = z
                        else:
                            del out[mono]
                    elif z:
                        out[mono] = z
        return out


def add_into(out, combo, scale):
    for mono, v in combo.items():
        x = scale * v
        old = out.get(mono)
        if old is not None:
            x = old + x
            if x:
                out[mono] = x
            else:
                del out[mono]
        elif x:
            out[mono] = x
    return out
