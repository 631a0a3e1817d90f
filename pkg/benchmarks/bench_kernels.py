"""Compare the compiled kernel extension against the pure-Python fallback.

Times the hot kernels (mul/quartic/inv, all four algebra kinds) on a fixed
batch of pseudorandom operands and prints per-call timings plus speedup.

Run from the repo root after an editable install:

    python3 benchmarks/bench_kernels.py [--calls 200000]
"""

import argparse
import random
import time

from quadfield import _kernels_py

try:
    from quadfield import _kernels
except ImportError:
    _kernels = None

KINDS = ("circular", "hyperbolic", "planar", "polar")


def _time_kernel(fn, batch, calls):
    n = len(batch)
    start = time.perf_counter()
    for i in range(calls):
        fn(*batch[i % n])
    return (time.perf_counter() - start) / calls


def run(calls: int, seed: int = 20260814) -> None:
    rng = random.Random(seed)
    pairs = [tuple(rng.uniform(-2.0, 2.0) for _ in range(8)) for _ in range(256)]
    quads = [p[:4] for p in pairs]

    if _kernels is None:
        print("compiled extension not available; timing pure Python only")
    header = f"{'kernel':<18}{'python':>12}{'compiled':>12}{'speedup':>9}"
    print(header)
    print("-" * len(header))
    for group, batch in (("mul", pairs), ("quartic", quads), ("inv", quads)):
        for kind in KINDS:
            name = f"{group}_{kind}"
            py = _time_kernel(getattr(_kernels_py, name), batch, calls)
            if _kernels is None:
                print(f"{name:<18}{py * 1e9:>10.0f}ns{'':>12}{'':>9}")
                continue
            cy = _time_kernel(getattr(_kernels, name), batch, calls)
            print(f"{name:<18}{py * 1e9:>10.0f}ns{cy * 1e9:>10.0f}ns"
                  f"{py / cy:>8.1f}x")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--calls", type=int, default=200_000,
                        help="calls per kernel (default 200000)")
    args = parser.parse_args()
    run(args.calls)


if __name__ == "__main__":
    main()
