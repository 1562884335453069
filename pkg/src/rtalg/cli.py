"""Command-line driver: ``rta <subcommand> --algebra NAME | --file PATH [options]``.

Exit status: 0 on success, 1 on usage or input errors, 2 when a verification
fails (the failure certificate is still written).
"""
from __future__ import annotations

import argparse
import json
import sys

from .center import central_character, hc_project, is_central, named_central
from .expr import ParseError
from .rewrite import PresentationError, export_presentation, load_presentation
from .scalars import render_scalar
from .ssets import _pmap, block_partition, s3_closure, s_sets, render_restricted
from .verma import (TcentralHypothesisError, VermaError, build_verma, composition_multiplicities,
                    singular_vectors, tcentral_jh, verma_report)
from .weights import ModelMismatch
from .zoo import (ZeroWeightError, ZooError, build, check_anti_involution, check_hopf,
                  find_duflo_delta, generator_weights, gl_duflo_candidate, list_zoo)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _param(text):
    if "=" not in text:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    k, v = text.split("=", 1)
    v = v.strip()
    try:
        return k.strip(), int(v)
    except ValueError:
        return k.strip(), v


def _positive(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return n


def make_parser():
    p = _Parser(prog="rta", description="Exact computations with triangular algebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help_, *, algebra=True, hw=False, depth=None, rounds=False, weights=False,
            element=False):
        s = sub.add_parser(name, help=help_)
        if algebra:
            g = s.add_mutually_exclusive_group(required=True)
            g.add_argument("--algebra", help="zoo name (see list-zoo)")
            g.add_argument("--file", help="presentation file")
            s.add_argument("--param", action="append", type=_param, default=[],
                           metavar="KEY=VALUE", help="zoo parameter (repeatable)")
        if hw:
            s.add_argument("--hw", required=True, help="highest weight literal, e.g. \"[1]\"")
        if depth is not None:
            s.add_argument("--depth", type=_positive, default=depth)
        if rounds:
            s.add_argument("--rounds", type=_positive, default=3)
        if weights:
            s.add_argument("--weights", required=True,
                           help="weight literals separated by ';', e.g. \"[1];[-3];[0]\"")
        if element:
            s.add_argument("--element", help="expression (default: the named central elements)")
        s.add_argument("--out", help="write the payload here instead of stdout")
        s.add_argument("--format", choices=("json", "tsv"), default="json")
        return s

    cmd("list-zoo", "list built-in families and aliases", algebra=False)
    cmd("show", "describe a presentation")
    s = cmd("pbw-check", "resolve all ambiguities up to a degree")
    s.add_argument("--max-degree", type=_positive, default=6)
    cmd("hopf-check", "verify the Hopf data")
    cmd("antihom-check", "verify the anti-involution")
    cmd("verma", "weight spaces, singular vectors and multiplicities of Z(lambda)", hw=True, depth=4)
    cmd("singular", "singular vectors of Z(lambda)", hw=True, depth=4)
    cmd("mult", "composition multiplicities [Z(lambda):V(mu)]", hw=True, depth=4)
    cmd("tcentral", "check that every lowering monomial is maximal", hw=True, depth=4)
    cmd("central", "centrality certificates", element=True)
    s = cmd("hc", "Harish-Chandra projection", element=True)
    s.add_argument("--twist", action="store_true", help="apply the rho-shift twist")
    s = cmd("chi", "central characters across weights", weights=True)
    s.add_argument("--twist", action="store_true")
    cmd("sset", "linkage closure S^3(lambda) with S^1 and S^2", hw=True, depth=6, rounds=True)
    cmd("blocks", "truncated block partition of a weight list", weights=True, depth=6, rounds=True)
    s = cmd("duflo", "search for an integral grading element")
    s.add_argument("--candidate", help="comma-separated functional to validate")
    cmd("export", "write the presentation file")
    return p


# ---------------------------------------------------------------------------


def _algebra(args):
    if getattr(args, "file", None):
        return load_presentation(args.file), f"file:{args.file}"
    params = dict(args.param)
    return build(args.algebra, **params), f"zoo:{args.algebra}"


def _weight(A, text):
    return A.model.parse(text, A.params)


def _weights(A, text):
    parts = [t.strip() for t in text.split(";") if t.strip()]
    if not parts:
        raise UsageError("empty weight list")
    return [_weight(A, t) for t in parts]


def _elements(A, args):
    if getattr(args, "element", None):
        return {args.element: A.parse(args.element)}
    els = named_central(A)
    if not els:
        raise UsageError(f"{A.name} has no named central elements; pass --element")
    return els


def _tsv(rows):
    return "".join("\t".join(str(x) for x in r) + "\n" for r in rows)


def run(argv=None, stdout=None):
    """Parse ``argv`` and execute; returns the exit status."""
    stdout = stdout or sys.stdout
    try:
        args = make_parser().parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:        # --help
        return int(exc.code or 0)
    try:
        status, payload, tsv = _dispatch(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ZooError, ParseError, PresentationError, ModelMismatch, VermaError,
            ZeroWeightError) as exc:
        tok = getattr(exc, "token", None)
        msg = str(exc).splitlines()[0]
        if tok and repr(tok) not in msg and str(tok) not in msg:
            msg += f" (at {tok!r})"
        print(f"error: {msg}", file=sys.stderr)
        return 1
    if isinstance(payload, str):
        text = payload
    elif args.format == "tsv" and tsv is not None:
        text = _tsv(tsv)
    else:
        text = json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    if getattr(args, "out", None):
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
            return 1
    else:
        stdout.write(text)
    return status


def _dispatch(args):
    c = args.command
    if c == "list-zoo":
        names = list_zoo()
        return 0, {"algebras": names}, [[n] for n in names]
    A, selector = _algebra(args)
    base = {"selector": selector, "algebra": A.name}

    if c == "export":
        return 0, export_presentation(A), None

    if c == "show":
        d = A.describe()
        d["model"] = A.model.describe()
        d["antihom"] = A.antihom
        d["hopf"] = sorted(A.hopf) if A.hopf else []
        d["central"] = {k: v if isinstance(v, str) else v.render() for k, v in A.central.items()}
        d["notes"] = A.notes
        return 0, {**base, **d}, [[g["name"], g["class"], g["root"], g["degree"]]
                                  for g in d["generators"]]

    if c == "pbw-check":
        r = A.check_pbw(args.max_degree)
        fails = [{"word": f["word"],
                  "difference": f["difference"].render() if f["difference"] is not None else None,
                  "error": f["error"]} for f in r.failures]
        return (0 if r.ok else 2), {**base, "max_degree": r.max_degree, "checked": r.checked,
                                    "summary": r.summary(), "failures": fails}, \
            [[f["word"], f["difference"] or f["error"]] for f in fails]

    if c in ("hopf-check", "antihom-check"):
        r = check_hopf(A) if c == "hopf-check" else check_anti_involution(A)
        return (0 if r.ok else 2), {**base, "ok": r.ok, "checks": r.items}, \
            [[it["check"], "ok" if it["ok"] else "FAIL", it["detail"]] for it in r.items]

    if c in ("verma", "singular", "mult"):
        lam = _weight(A, args.hw)
        if c == "verma":
            rep = verma_report(A, lam, args.depth)
            return 0, {**base, **{k: v for k, v in rep.items() if k != "algebra"}}, \
                [[w["offset"], w["weight"], w["dim"]] for w in rep["weight_spaces"]]
        if c == "singular":
            sl = build_verma(A, lam, args.depth)
            sing = [{"offset": list(s.theta), "weight": A.model.render(s.weight),
                     "vector": s.render(A)} for s in singular_vectors(sl)]
            return 0, {**base, "lambda": A.model.render(lam), "depth": args.depth,
                       "singular": sing}, [[s["offset"], s["weight"], s["vector"]] for s in sing]
        comp = composition_multiplicities(A, lam, args.depth)
        rows = [{"mu": A.model.render(mu), "offset": list(comp.thetas[mu]), "m": m,
                 "simple_dims": [{"offset": list(t), "dim": d}
                                 for t, d in comp.simple_dims[mu].items()]}
                for mu, m in comp.multiplicities.items()]
        return 0, {**base, "lambda": A.model.render(lam), "depth": args.depth,
                   "horizon": comp.horizon, "multiplicities": rows}, \
            [[r["mu"], r["m"]] for r in rows]

    if c == "tcentral":
        lam = _weight(A, args.hw)
        try:
            r = tcentral_jh(A, lam, args.depth)
        except TcentralHypothesisError as exc:
            return 2, {**base, "lambda": A.model.render(lam), "hypothesis": False,
                       "pair": list(exc.pair), "residue": exc.residue}, None
        return (0 if r.ok else 2), {**base, "lambda": A.model.render(lam), "depth": args.depth,
                                    "hypothesis": True, "all_maximal": r.all_maximal,
                                    "one_dimensional": r.one_dimensional, "layers": r.layers}, \
            [[l["theta"], l["dim_B_minus"], l["multiplicity"]] for l in r.layers]

    if c == "central":
        out = []
        ok = True
        for name, x in _elements(A, args).items():
            rep = is_central(A, x)
            ok = ok and rep.ok
            out.append({"element_name": name, "element": x.render(), "central": rep.ok,
                        "certificate": [{"generator": g, "commutator": v.render()}
                                        for g, v in rep.certificate]})
        return (0 if ok else 2), {**base, "elements": out}, \
            [[e["element_name"], e["central"]] for e in out]

    if c == "hc":
        out = [{"element_name": n, "xi": hc_project(A, x, twist=args.twist).render()}
               for n, x in _elements(A, args).items()]
        return 0, {**base, "twist": args.twist, "records": out}, \
            [[r["element_name"], r["xi"]] for r in out]

    if c == "chi":
        lams = _weights(A, args.weights)
        els = named_central(A)
        if not els:
            raise UsageError(f"{A.name} has no named central elements")
        chis = _pmap(lambda l: central_character(A, l, els, twist=args.twist), lams)
        recs = [{"lambda": A.model.render(ch.weight),
                 "values": {k: render_scalar(v) for k, v in ch.values.items()}} for ch in chis]
        classes = []
        for i, ch in enumerate(chis):
            for cl in classes:
                if chis[cl[0]].values == ch.values:
                    cl.append(i)
                    break
            else:
                classes.append([i])
        payload = {**base, "elements": list(els), "chi": recs,
                   "equal_classes": [[recs[i]["lambda"] for i in cl] for cl in classes],
                   "note": "equality is with respect to the supplied central elements"}
        return 0, payload, [["lambda"] + list(els)] + \
            [[r["lambda"]] + [r["values"][k] for k in els] for r in recs]

    if c == "sset":
        lam = _weight(A, args.hw)
        rep = s3_closure(A, lam, args.depth, args.rounds)
        s1, s2 = s_sets(rep)
        payload = {**base, **rep.as_json(),
                   "S1": sorted(render_restricted(A.model, x) for x in s1),
                   "S2": sorted(render_restricted(A.model, x) for x in s2)}
        payload["algebra"] = A.name
        if args.format == "tsv":
            return 0, rep.as_tsv(), None
        return 0, payload, None

    if c == "blocks":
        bp = block_partition(A, _weights(A, args.weights), args.depth, args.rounds)
        return 0, {**base, "depth": args.depth, "rounds": args.rounds, **bp.as_json(A.model)}, \
            [[i, A.model.render(w)] for i, cell in enumerate(bp.cells) for w in cell]

    if c == "duflo":
        cand = None
        if args.candidate:
            try:
                cand = tuple(int(x) for x in args.candidate.split(","))
            except ValueError:
                raise UsageError(f"malformed candidate {args.candidate!r}") from None
        elif A.family == "hecke_gl_n":
            cand = gl_duflo_candidate(int(A.params["n"]))
        ws = generator_weights(A)
        r = find_duflo_delta(ws, candidate=cand)
        fmt = lambda v: None if v is None else [  # noqa: E731
            int(x) if x.denominator == 1 else render_scalar(x) for x in v]
        payload = {**base, "coords": A.model.coords, "delta": list(r.delta) if r.delta else None,
                   "values": r.values, "search_bound": r.bound,
                   "candidate": list(r.candidate) if r.candidate else None,
                   "candidate_valid": r.candidate_valid,
                   "candidate_values": fmt(r.candidate_values)}
        status = 0 if r.delta is not None and r.candidate_valid is not False else 2
        return status, payload, [["delta", r.delta], ["candidate", r.candidate, r.candidate_valid]]

    raise UsageError(f"unknown subcommand {c!r}")


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
