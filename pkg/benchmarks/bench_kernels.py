"""Time the Python and compiled kernels on the same random inputs.

    python benchmarks/bench_kernels.py [--sizes 8 64 512] [--repeat 5]
"""
from __future__ import annotations

import argparse
import random
import timeit

from charone import Staircase, gamma, kernels
from charone import _kernels_py


def random_points(rng: random.Random, n: int, spread: int) -> list[tuple[int, int]]:
    return [(rng.randint(-spread, spread), rng.randint(-spread, spread)) for _ in range(n)]


def antichain(rng: random.Random, n: int) -> list[tuple[int, int]]:
    """n corners: a strictly increasing, b strictly decreasing."""
    a = sorted(rng.sample(range(10 * n), n))
    b = sorted(rng.sample(range(10 * n), n), reverse=True)
    return list(zip(a, b))


def cases(rng: random.Random, n: int):
    pts = random_points(rng, n, 10 * n)
    xs, ys = antichain(rng, n), antichain(rng, n)
    hx, hy = _kernels_py.lower_hull(xs), _kernels_py.lower_hull(ys)
    return {
        "canonicalize": lambda mod: mod.canonicalize(pts),
        "staircase_mul": lambda mod: mod.staircase_mul(xs, ys),
        "lower_hull": lambda mod: mod.lower_hull(xs),
        "polygon_mul": lambda mod: mod.polygon_mul(hx, hy),
    }


def best_time(fn, repeat: int) -> float:
    timer = timeit.Timer(fn)
    number, _ = timer.autorange()
    return min(timer.repeat(repeat=repeat, number=number)) / number


def axiom_workload(trials: int = 2000) -> None:
    rng = random.Random(0)
    for _ in range(trials):
        x, y, z = (Staircase(random_points(rng, rng.randint(0, 8), 20)) for _ in range(3))
        assert x * (y + z) == x * y + x * z
        assert gamma(x) * gamma(y + z) == gamma(x) * gamma(y) + gamma(x) * gamma(z)


def main(argv: list[str] | None = None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 64, 512])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    if "compiled" not in kernels.available_backends():
        print("compiled kernels are not built; only the Python timings are shown")
    compiled = kernels._compiled
    rng = random.Random(1)
    print(f"{'kernel':<15}{'n':>6}{'python (us)':>14}{'compiled (us)':>15}{'speedup':>10}")
    for n in args.sizes:
        for name, call in cases(rng, n).items():
            py = best_time(lambda: call(_kernels_py), args.repeat) * 1e6
            if compiled is not None:
                assert call(compiled) == call(_kernels_py)
                cc = best_time(lambda: call(compiled), args.repeat) * 1e6
                print(f"{name:<15}{n:>6}{py:>14.1f}{cc:>15.1f}{py / cc:>9.1f}x")
            else:
                print(f"{name:<15}{n:>6}{py:>14.1f}{'-':>15}{'-':>10}")

    print("\nend to end: 2000 distributivity checks on staircases and polygons")
    for backend in kernels.available_backends():
        with kernels.use_backend(backend):
            t = min(timeit.repeat(axiom_workload, repeat=3, number=1))
        print(f"  {backend:<9}{t:8.2f} s")


if __name__ == "__main__":
    main()
