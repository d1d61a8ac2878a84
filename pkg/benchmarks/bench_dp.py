"""Time the chamber DP kernel: compiled extension vs numpy fallback.

    python benchmarks/bench_dp.py            # default cases
    python benchmarks/bench_dp.py --quick    # small cases only
"""
import argparse
import time

from weylwalk import kernels
from weylwalk.counting import ChamberLayer
from weylwalk.lattice import Model

CASES = [
    (Model.lock_step(2), (0, 2), 200),
    (Model.lock_step(2), (0, 2), 400),
    (Model.random_turns(2), (0, 1), 400),
    (Model.lock_step(3), (0, 2, 4), 60),
    (Model.random_turns(3), (0, 1, 2), 80),
]
QUICK = [(Model.lock_step(2), (0, 2), 100), (Model.random_turns(3), (0, 1, 2), 30)]


def run(model, u, n, backend, repeat):
    best = float("inf")
    total = None
    for _ in range(repeat):
        t = time.perf_counter()
        total = ChamberLayer(model, u, n, backend).total()
        best = min(best, time.perf_counter() - t)
    return best, total


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args()
    backends = [b for b in ("compiled", "python") if b in kernels.BACKENDS]
    print(f"{'case':<34}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for model, u, n in QUICK if args.quick else CASES:
        times, totals = [], set()
        for b in backends:
            dt, tot = run(model, u, n, b, args.repeat)
            times.append(dt)
            totals.add(tot)
        assert len(totals) == 1, "backends disagree"
        label = f"{model} u={u} n={n}"
        speed = f"{times[1] / times[0]:.1f}x" if len(times) == 2 else "-"
        print(f"{label:<34}" + "".join(f"{t:>11.3f}s" for t in times) + f"{speed:>10}")


if __name__ == "__main__":
    main()
