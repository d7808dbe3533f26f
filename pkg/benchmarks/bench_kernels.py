"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import random
import timeit

from nfold import _kernels_py

try:
    from nfold import _kernels
except ImportError:
    _kernels = None

SEEDS = [0, 1, 2, 4, 8]


def cases(k):
    rng = random.Random(0)
    seqs = [tuple(rng.randint(0, 9) for _ in range(rng.randint(0, 12))) for _ in range(2000)]
    pairs = list(zip(seqs, seqs[1:]))
    terms = k.nat_minimal_dp(SEEDS, 18)
    return {
        "lex_cmp x2000": lambda: [k.lex_cmp(a, b) for a, b in pairs],
        "add_seq x2000": lambda: [k.add_seq(a, b) for a, b in pairs],
        "nat_minimal_dp N=2000": lambda: k.nat_minimal_dp(SEEDS, 2000),
        "nat_enum_max n=18": lambda: k.nat_enum_max(terms, 18),
        "nat_first_violation N=18": lambda: k.nat_first_violation(terms, 18),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = {"python": _kernels_py}
    if _kernels is not None:
        backends["cython"] = _kernels
    else:
        print("compiled extension not built; timing python only")
    results = {}
    for name, mod in backends.items():
        for label, fn in cases(mod).items():
            results.setdefault(label, {})[name] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
    print(f"{'kernel':28} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for label, times in results.items():
        py, cy = times["python"], times.get("cython")
        extra = f"{cy:10.4f} {py / cy:7.1f}x" if cy else f"{'-':>10} {'-':>8}"
        print(f"{label:28} {py:10.4f} {extra}")


if __name__ == "__main__":
    main()
