"""Shared test utilities.

Holds the deterministic random-stream corpus used by the acceptance tests and
an independently written delta-clique enumerator (the gamma=1 special case)
that cross-checks the engine through a second code path.
"""

from __future__ import annotations

import random
from itertools import combinations

from tclique import (
    Clique,
    CliqueKey,
    LinkStream,
    PartitionPlan,
    TemporalLink,
    enumerate_maximal_cliques,
    finalize,
    initial_state,
    partition_links,
    run_pipeline,
    update_batch,
)

CORPUS_SIZE = 200


def random_stream(seed: int) -> LinkStream:
    """Small dense-ish stream with an explicit observation window."""
    rng = random.Random(seed)
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


def corpus_entry(index: int) -> tuple[LinkStream, int, int]:
    rng = random.Random(10_000 + index)
    return random_stream(index), rng.randint(2, 6), rng.randint(1, 3)


def offline_keys(stream: LinkStream, delta: int, gamma: int, **kw) -> frozenset[CliqueKey]:
    return frozenset(c.key() for c in enumerate_maximal_cliques(stream, delta, gamma, **kw))


def random_boundaries(stream: LinkStream, rng: random.Random, max_batches: int = 4) -> tuple[int, ...]:
    """Strictly increasing boundaries ending at t_max, 2..max_batches batches
    when the stream has room for them."""
    t_min, t_max, _ = stream.time_bounds()
    room = list(range(t_min, t_max))
    want = rng.randint(2, max_batches) - 1
    interior = sorted(rng.sample(room, min(want, len(room)))) if room else []
    return tuple(interior + [t_max])


def partitioned_keys(
    stream: LinkStream, delta: int, gamma: int, boundaries: tuple[int, ...]
) -> frozenset[CliqueKey]:
    plan = PartitionPlan("explicit", boundaries=boundaries)
    report = run_pipeline(stream, delta, gamma, plan)
    return frozenset(c.key() for c in report.final)


def run_batches(stream: LinkStream, delta: int, gamma: int, boundaries, **kw):
    """Drive update_batch directly over an explicit plan; returns the final
    state (not finalized)."""
    state = initial_state(delta, gamma, stream.t_start)
    plan = PartitionPlan("explicit", boundaries=tuple(boundaries))
    for boundary, chunk in partition_links(stream, plan):
        state, _ = update_batch(state, chunk, boundary, **kw)
    return state


# -- synthetic states for persistence tests -------------------------------------------


def random_state(seed: int) -> "BatchState":
    """Structurally valid random BatchState (possibly fresh, possibly with
    candidate sets in all three shapes: absent, empty, populated)."""
    from tclique import BatchState, make_clique

    rng = random.Random(seed)
    delta = rng.randint(1, 6)
    gamma = rng.randint(1, 3)
    t_start = rng.randint(-3, 3)
    if rng.random() < 0.1:
        return initial_state(delta, gamma, t_start)
    boundary = t_start + rng.randint(1, 30)

    def rand_clique(right_of_boundary: bool):
        n = rng.randint(2, 4)
        verts = rng.sample(range(1, 9), n)
        if right_of_boundary:
            tb = boundary + rng.randint(0, 8)
        else:
            tb = t_start + rng.randint(0, max(boundary - t_start, 1))
        ta = max(t_start, tb - rng.randint(0, 12))
        tb = max(ta, tb)
        cands = rng.choice(
            [None, frozenset(), frozenset(rng.sample(range(10, 15), rng.randint(1, 3)))]
        )
        return make_clique(verts, ta, tb, candidates=cands)

    maximal = {}
    for _ in range(rng.randint(0, 6)):
        c = rand_clique(rng.random() < 0.4)
        maximal[c.key()] = c
    frontier = {}
    for _ in range(rng.randint(0, 4)):
        c = rand_clique(True)
        frontier[c.key()] = c
    tail = tuple(
        sorted(
            (
                TemporalLink(
                    u, u + rng.randint(1, 3), rng.randint(boundary - delta, boundary)
                )
                for u in rng.sample(range(1, 20), rng.randint(0, 5))
            ),
            key=lambda l: (l.t, l.u, l.v),
        )
    )
    return BatchState(delta, gamma, t_start, boundary, maximal, frontier, tail)


def candidate_maps(state) -> tuple[dict, dict]:
    return (
        {k: c.candidates for k, c in state.maximal.items()},
        {k: c.candidates for k, c in state.frontier.items()},
    )


# -- independent delta-clique enumeration (gamma = 1) --------------------------------


def _next_occurrence_table(stream: LinkStream, pair, horizon_end: int) -> dict[int, int]:
    """next_at[t] = earliest occurrence of the pair at or after t (or a
    sentinel beyond the horizon)."""
    sentinel = horizon_end + 1
    occ = set(stream.occurrences(pair))
    table = {}
    nxt = sentinel
    for t in range(horizon_end, stream.t_start - 1, -1):
        if t in occ:
            nxt = t
        table[t] = nxt
    return table


def delta_clique_keys(stream: LinkStream, delta: int) -> frozenset[CliqueKey]:
    """All maximal delta-cliques (every pair interacts within every window of
    length delta inside the interval), enumerated from first principles."""
    t_lo, t_hi = stream.observation
    verts = sorted(stream.vertices)
    tables = {
        pair: _next_occurrence_table(stream, pair, t_hi)
        for pair in stream.static_edges
    }
    present = set(stream.static_edges)

    pair_memo: dict[tuple, bool] = {}

    def pair_ok(u: int, v: int, ta: int, tb: int) -> bool:
        pair = (u, v) if u < v else (v, u)
        if pair not in present:
            return False
        key = (pair, ta, tb)
        got = pair_memo.get(key)
        if got is not None:
            return got
        table = tables[pair]
        ok = True
        tau = ta
        last_tau = max(tb - delta, ta)
        while tau <= last_tau:
            if table[tau] > min(tau + delta, tb):
                ok = False
                break
            tau += 1
        pair_memo[key] = ok
        return ok

    memo: dict[tuple, bool] = {}

    def clique_ok(subset: tuple[int, ...], ta: int, tb: int) -> bool:
        key = (subset, ta, tb)
        got = memo.get(key)
        if got is None:
            got = all(pair_ok(u, v, ta, tb) for u, v in combinations(subset, 2))
            memo[key] = got
        return got

    keys = set()
    for size in range(2, len(verts) + 1):
        for subset in combinations(verts, size):
            for ta in range(t_lo, t_hi + 1):
                for tb in range(ta, t_hi + 1):
                    if not clique_ok(subset, ta, tb):
                        continue
                    if ta - 1 >= t_lo and clique_ok(subset, ta - 1, tb):
                        continue
                    if tb + 1 <= t_hi and clique_ok(subset, ta, tb + 1):
                        continue
                    bigger = False
                    for w in verts:
                        if w in subset:
                            continue
                        grown = tuple(sorted(subset + (w,)))
                        if clique_ok(grown, ta, tb):
                            bigger = True
                            break
                    if not bigger:
                        keys.add((subset, ta, tb))
    return frozenset(keys)
