"""Compare the compiled and pure-Python reduction kernels.

    python3 benchmarks/bench_kernel.py [--repeat N]

Each workload builds fresh reducers from the same rules (so memo tables start
empty) and reduces the same inputs with both kernels; results are checked to
agree before timings are reported.
"""
import argparse
import random
import time

from rtalg.rewrite import kernel
from rtalg.rewrite._kernel_py import Reducer as PyReducer
from rtalg.zoo import build

try:
    from rtalg.rewrite._kernel_c import Reducer as CReducer
except ImportError:
    CReducer = None


def workloads():
    rng = random.Random(7)
    out = []
    for name, params, length, count in [
        ("u_sl2", {}, 9, 300),
        ("uq_sl2", {}, 7, 150),
        ("u_gl_3", {}, 6, 200),
        ("hecke_gl_2", {"beta": "1,2,3"}, 4, 80),
    ]:
        A = build(name, **params)
        words = [tuple(rng.randrange(A.n) for _ in range(rng.randint(2, length)))
                 for _ in range(count)]
        out.append((name, A, words))
    return out


def run(cls, A, words):
    red = cls(A.rules, A.must_pairs, A.field.one)
    t0 = time.perf_counter()
    res = [red.nf_word(w) for w in words]
    return time.perf_counter() - t0, res


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"active backend: {kernel.BACKEND}")
    if CReducer is None:
        print("compiled kernel not built; only the pure kernel is available")
    print(f"{'workload':<12} {'words':>6} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, A, words in workloads():
        tp = min(run(PyReducer, A, words)[0] for _ in range(args.repeat))
        if CReducer is None:
            print(f"{name:<12} {len(words):>6} {tp:>10.4f} {'-':>10} {'-':>8}")
            continue
        tc = min(run(CReducer, A, words)[0] for _ in range(args.repeat))
        _, rp = run(PyReducer, A, words)
        _, rc = run(CReducer, A, words)
        if rp != rc:
            raise SystemExit(f"{name}: kernels disagree")
        print(f"{name:<12} {len(words):>6} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.2f}x")


if __name__ == "__main__":
    main()
