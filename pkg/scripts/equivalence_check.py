#!/usr/bin/env python3
"""Randomized equivalence check: offline enumeration vs incremental batches
vs exhaustive search, on generated streams.

For each seed we draw a small random stream and parameters, enumerate three
ways, and require identical maximal-clique sets. Prints one row per stream
and exits nonzero on the first divergence.

Example:
  python3 scripts/equivalence_check.py --streams 50 --seed 7
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from tclique import (
    LinkStream,
    PartitionPlan,
    TemporalLink,
    brute_force_enumerate,
    run_pipeline,
)


def random_stream(rng: random.Random) -> LinkStream:
    n = rng.randint(2, 6)
    horizon = rng.randint(8, 25)
    density = rng.uniform(0.08, 0.5)
    links = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            for t in range(horizon + 1):
                if rng.random() < density:
                    links.append(TemporalLink(u, v, t))
    if not links:
        links.append(TemporalLink(1, 2, rng.randint(0, horizon)))
    return LinkStream(links, observation=(0, horizon))


def keyset(cliques) -> frozenset:
    return frozenset(c.key() for c in cliques)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--streams", type=int, default=25)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print(f"{'#':>4} {'links':>6} {'delta':>5} {'gamma':>5} {'batches':>7} "
          f"{'maximal':>7} {'engine_s':>9} {'oracle_s':>9}")
    total0 = time.perf_counter()
    for i in range(args.streams):
        rng = random.Random(args.seed * 100_003 + i)
        stream = random_stream(rng)
        delta = rng.randint(2, 6)
        gamma = rng.randint(1, 3)

        t0 = time.perf_counter()
        offline = keyset(run_pipeline(stream, delta, gamma, PartitionPlan()).final)
        t_lo, t_hi, _ = stream.time_bounds()
        room = list(range(t_lo, t_hi))
        cuts = sorted(rng.sample(room, min(rng.randint(1, 3), len(room)))) if room else []
        plan = PartitionPlan("explicit", boundaries=tuple(cuts) + (t_hi,))
        batched = keyset(run_pipeline(stream, delta, gamma, plan).final)
        engine_s = time.perf_counter() - t0

        t0 = time.perf_counter()
        truth = keyset(brute_force_enumerate(stream, delta, gamma))
        oracle_s = time.perf_counter() - t0

        print(f"{i:>4} {stream.n_links:>6} {delta:>5} {gamma:>5} "
              f"{len(cuts) + 1:>7} {len(truth):>7} {engine_s:>9.4f} {oracle_s:>9.4f}")
        if offline != truth or batched != truth:
            print(f"DIVERGENCE on stream {i} (seed {args.seed}): "
                  f"offline {'ok' if offline == truth else 'WRONG'}, "
                  f"batched {'ok' if batched == truth else 'WRONG'}")
            return 1
    print(f"all {args.streams} streams agree "
          f"({time.perf_counter() - total0:.2f}s total)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
