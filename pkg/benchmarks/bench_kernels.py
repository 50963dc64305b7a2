"""Compare the Cython kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from motzeta import _pykernels

try:
    from motzeta import _ckernels
except ImportError:
    _ckernels = None


def cases(seed=7):
    rng = random.Random(seed)
    expand = [([(rng.randint(-6, 6), rng.randint(1, 6)) for _ in range(k)], 64) for k in (2, 3, 4, 5) for _ in range(5)]
    linear = [([rng.randint(1, 12) for _ in range(rng.randint(2, 3))], rng.randint(50, 400)) for _ in range(40)]
    return expand, linear


def bench(mod, expand, linear, repeat):
    t_exp = min(timeit.repeat(lambda: [mod.expand_product(f, D) for f, D in expand], number=1, repeat=repeat))
    t_lin = min(timeit.repeat(lambda: [mod.representable(p, t) for p, t in linear], number=1, repeat=repeat))
    return t_exp, t_lin


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    expand, linear = cases()
    py = bench(_pykernels, expand, linear, args.repeat)
    print(f"{'kernel':<16}{'python (ms)':>14}{'cython (ms)':>14}{'speedup':>10}")
    if _ckernels is None:
        for name, t in zip(("expand_product", "representable"), py):
            print(f"{name:<16}{t * 1e3:>14.2f}{'n/a':>14}{'':>10}")
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` with Cython available")
        return
    for f, D in expand:
        assert _ckernels.expand_product(f, D) == _pykernels.expand_product(f, D)
    cy = bench(_ckernels, expand, linear, args.repeat)
    for name, tp, tc in zip(("expand_product", "representable"), py, cy):
        print(f"{name:<16}{tp * 1e3:>14.2f}{tc * 1e3:>14.2f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
