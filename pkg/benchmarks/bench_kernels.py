"""Time the numba kernels against their numpy fallbacks.

    python benchmarks/bench_kernels.py --size 200 --repeat 3
"""
import argparse
import random
import string
import time

import numpy as np

from ontomatch import kernels


def random_labels(rng, count, lo=4, hi=24):
    letters = string.ascii_lowercase + " "
    return ["".join(rng.choice(letters) for _ in range(rng.randint(lo, hi))) for _ in range(count)]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--size", type=int, default=150, help="labels per side / matrix order")
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    packed = (*kernels.pack(random_labels(rng, args.size)), *kernels.pack(random_labels(rng, args.size)))
    cost = np.random.default_rng(args.seed).random((args.size, args.size))

    cases = [
        ("levenshtein block", kernels.levenshtein_block_numba, kernels.levenshtein_block_numpy, packed),
        ("smith-waterman block", kernels.smith_waterman_block_numba, kernels.smith_waterman_block_numpy, packed),
        ("hungarian", kernels.hungarian_numba, kernels.hungarian_numpy, (cost,)),
    ]
    kernels.warm_up()
    print(f"{'kernel':<22}{'numba s':>10}{'numpy s':>10}{'speedup':>10}")
    for name, fast, slow, inputs in cases:
        a = fast(*inputs)
        b = slow(*inputs)
        assert np.array_equal(a, b), f"{name}: backends disagree"
        t_fast = best_of(lambda: fast(*inputs), args.repeat)
        t_slow = best_of(lambda: slow(*inputs), args.repeat)
        print(f"{name:<22}{t_fast:>10.4f}{t_slow:>10.4f}{t_slow / t_fast:>9.1f}x")


if __name__ == "__main__":
    main()
