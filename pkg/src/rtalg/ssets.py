"""Linkage closures S^3(lambda), their projections S^1 and S^2, and truncated blocks."""
from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .verma import composition_multiplicities


def worker_count():
    """Thread cap from RTA_THREADS (default: cpu count, at most 8)."""
    env = os.environ.get("RTA_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise ValueError(f"RTA_THREADS must be an integer, got {env!r}") from None
        return max(1, n)
    return max(1, min(8, os.cpu_count() or 1))


def _pmap(fn, items):
    items = list(items)
    n = worker_count()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as ex:
        return list(ex.map(fn, items))


def _wkey(model, w):
    return model.render(w)


def positive_roots_upto(model, depth):
    """theta_0 in Z>=0^Delta with 1 <= |theta_0| <= depth, by height then lex."""
    r = model.n_roots
    out = [t for t in itertools.product(range(depth + 1), repeat=r) if 1 <= sum(t) <= depth]
    out.sort(key=lambda t: (sum(t), t))
    return out


@dataclass
class SSetReport:
    algebra: str
    seed: object
    depth: int
    rounds: int
    members: list = field(default_factory=list)       # Weights in discovery order
    edges: list = field(default_factory=list)         # (mu, nu): V(mu) is a subquotient of Z(nu)
    growth: list = field(default_factory=list)
    truncated: bool = False
    model: object = None

    def contains(self, w):
        return w in self.members

    def status(self):
        if self.truncated:
            return "still growing"
        return f"closed under linking within horizon (depth {self.depth}, rounds {self.rounds})"

    def as_json(self):
        m = self.model
        return {
            "algebra": self.algebra,
            "seed": m.render(self.seed),
            "horizon": {"depth": self.depth, "rounds": self.rounds},
            "members": [m.render(w) for w in self.members],
            "edges": [[m.render(a), m.render(b)] for a, b in self.edges],
            "truncated": self.truncated,
            "growth": list(self.growth),
            "status": self.status(),
        }

    def as_tsv(self):
        m = self.model
        lines = ["from\tto"]
        lines += [f"{m.render(a)}\t{m.render(b)}" for a, b in self.edges]
        return "\n".join(lines) + "\n"


def s3_closure(A, lam, depth, rounds) -> SSetReport:
    """Breadth-first closure of lambda under the symmetrized linking relation.

    Downward links come from composition multiplicities of Z(nu); upward links
    test every candidate theta_0 * nu with |theta_0| <= depth by the same
    downward computation, so the explored relation is symmetric.
    """
    if depth < 2:
        raise ValueError("depth must be at least 2")
    if rounds < 1:
        raise ValueError("rounds must be at least 1")
    model = A.model
    if isinstance(lam, str):
        lam = model.parse(lam, A.params)
    thetas = positive_roots_upto(model, depth)
    comp_cache = {}

    def comps(ws):
        todo = [w for w in dict.fromkeys(ws) if w not in comp_cache]
        for w, res in zip(todo, _pmap(lambda w: composition_multiplicities(A, w, depth), todo)):
            comp_cache[w] = res.multiplicities

    rep = SSetReport(A.name, lam, depth, rounds, [lam], [], [], False, model)
    seen = {lam}
    edge_set = set()
    frontier = [lam]
    for _ in range(rounds):
        ups = {nu: [model.act(t, nu) for t in thetas] for nu in frontier}
        comps(frontier + [k for nu in frontier for k in ups[nu]])
        new = []
        for nu in frontier:
            found = []
            for mu in comp_cache[nu]:
                if mu != nu:
                    found.append((mu, (mu, nu)))
            for kappa in ups[nu]:
                if comp_cache[kappa].get(nu, 0) > 0:
                    found.append((kappa, (nu, kappa)))
            for w, e in found:
                if e not in edge_set:
                    edge_set.add(e)
                    rep.edges.append(e)
                if w not in seen:
                    seen.add(w)
                    new.append(w)
        rep.members.extend(new)
        rep.growth.append(len(rep.members))
        frontier = new
        if not frontier:
            break
    rep.truncated = bool(frontier)
    return rep


def s_sets(rep: SSetReport, A=None):
    """(S^1, S^2) as sets of restricted-weight coordinate tuples."""
    model = rep.model if A is None else A.model
    s2 = {model.project(w) for w in rep.members}
    s1 = {model.project(w) for w in rep.members if model.leq(w, rep.seed) is not None}
    return s1, s2


def render_restricted(model, coords):
    from .scalars import render_scalar
    return "(" + ", ".join(render_scalar(c) for c in coords) + ")"


@dataclass
class BlockPartition:
    cells: list            # lists of Weights, in input order
    truncated: list        # one flag per cell
    reports: dict          # Weight -> SSetReport

    def as_json(self, model):
        return {
            "cells": [[model.render(w) for w in c] for c in self.cells],
            "truncated": list(self.truncated),
        }


def block_partition(A, weights, depth, rounds) -> BlockPartition:
    model = A.model
    weights = [model.parse(w, A.params) if isinstance(w, str) else w for w in weights]
    uniq = list(dict.fromkeys(weights))
    reports = {w: s3_closure(A, w, depth, rounds) for w in uniq}
    parent = list(range(len(uniq)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in itertools.combinations(range(len(uniq)), 2):
        if reports[uniq[i]].contains(uniq[j]) or reports[uniq[j]].contains(uniq[i]):
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    cells = {}
    for i, w in enumerate(uniq):
        cells.setdefault(find(i), []).append(w)
    ordered = [cells[k] for k in sorted(cells)]
    flags = [any(reports[w].truncated for w in c) for c in ordered]
    return BlockPartition(ordered, flags, reports)
