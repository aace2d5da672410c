"""Compare the numba and pure-numpy Monte Carlo kernels.

Usage: python benchmarks/bench_backends.py [replications] [repeats]

Times the class-counting kernel inside a full simulate() call for both
backends, checks they return identical results, and prints the speedup.
The TENDERGAME_BACKEND env flag picks the default backend at import time;
this script exercises both explicitly within one process.
"""

import sys
import time

from tendergame import GameVariant, ParamSet, SimConfig, StrategyProfile
from tendergame import receiver_from_label, sender_from_label
from tendergame.simulation import simulate


def time_backend(cfg, backend, repeats):
    simulate(cfg, backend=backend)  # warm-up (jit compile / cache touch)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        res = simulate(cfg, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, res


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 2_000_000
    repeats = int(sys.argv[2]) if len(sys.argv) > 2 else 5
    variant = GameVariant.benchmark(0.9, 0.2)
    params = ParamSet(I=10, L=4, H=6, C=5, R=1, gamma=0.55)
    cfg = SimConfig(
        profile=StrategyProfile(sender_from_label("LL"),
                                receiver_from_label("rarr", variant)),
        variant=variant, params=params, n=n, seed=20240817)

    print(f"replications: {n:,}; best of {repeats} runs each")
    results = {}
    for backend in ("numpy", "numba"):
        try:
            secs, res = time_backend(cfg, backend, repeats)
        except ImportError as exc:
            print(f"{backend:>6}: unavailable ({exc})")
            continue
        results[backend] = (secs, res)
        rate = n / secs / 1e6
        print(f"{backend:>6}: {secs * 1e3:8.2f} ms   {rate:7.1f} M reps/s   "
              f"gov mean {res.mean_gov:.6f}")
    if len(results) == 2:
        numeric = ("mean_market", "mean_gov", "overrun_frequency",
                   "mean_overrun", "se_market", "se_gov", "se_overrun")
        same = all(getattr(results["numpy"][1], a) == getattr(results["numba"][1], a)
                   for a in numeric)
        print(f"identical statistics: {same}")
        print(f"speedup (numba over numpy): "
              f"{results['numpy'][0] / results['numba'][0]:.2f}x")
        if not same:
            raise SystemExit("backend results diverged")


if __name__ == "__main__":
    main()
