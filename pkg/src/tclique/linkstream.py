"""Temporal link parsing and indexed occurrence queries.

A temporal network is a set of timestamped contacts (u, v, t) between
unordered vertex pairs, observed during a closed interval [t_start, t_end].
`LinkStream` stores the contacts canonically (u < v, duplicates collapsed)
and answers the windowed occurrence queries the clique procedures need:
all occurrences of a pair inside a window, the gamma-th smallest/largest
occurrence inside a window, and the vertices with at least gamma links to
a seed vertex inside a window.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, TextIO

from .errors import ParseError


@dataclass(frozen=True, order=True)
class TemporalLink:
    """One undirected timestamped contact, stored with u < v."""

    u: int
    v: int
    t: int

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise ValueError(f"self-loop ({self.u},{self.v},{self.t})")
        if self.u > self.v:
            raise ValueError("links must be canonical (u < v)")


@dataclass(frozen=True)
class FormatSpec:
    """Input column layout: 'tuv' or 'uvt', whitespace or comma separated."""

    column_order: str = "tuv"
    delimiter: str = "whitespace"  # "whitespace" | "comma"
    rebase: bool = False  # subtract t_min from all timestamps

    def __post_init__(self) -> None:
        if self.column_order not in ("tuv", "uvt"):
            raise ValueError(f"unknown column order {self.column_order!r}")
        if self.delimiter not in ("whitespace", "comma"):
            raise ValueError(f"unknown delimiter {self.delimiter!r}")


class LinkStream:
    """Immutable indexed collection of temporal links.

    Construction sorts and deduplicates; afterwards the instance is treated
    as read-only and is safe to share across readers. `observation` is the
    closed interval [t_start, t_end] the network was watched over; it
    defaults to [t_min, t_max] and may be widened explicitly (boundary
    guards for interval extension use it).
    """

    def __init__(
        self,
        links: Iterable[TemporalLink],
        observation: Optional[tuple[int, int]] = None,
        dropped_self_loops: int = 0,
    ) -> None:
        self._links: tuple[TemporalLink, ...] = tuple(
            sorted(set(links), key=lambda l: (l.t, l.u, l.v))
        )
        pair_index: dict[tuple[int, int], list[int]] = {}
        neighbors: dict[int, set[int]] = {}
        for link in self._links:
            pair_index.setdefault((link.u, link.v), []).append(link.t)
            neighbors.setdefault(link.u, set()).add(link.v)
            neighbors.setdefault(link.v, set()).add(link.u)
        self._pair_index = {pair: tuple(ts) for pair, ts in pair_index.items()}
        self._neighbors = {ver: frozenset(adj) for ver, adj in neighbors.items()}
        self._t_min = self._links[0].t if self._links else None
        self._t_max = self._links[-1].t if self._links else None
        self.dropped_self_loops = dropped_self_loops

        if observation is None:
            if not self._links:
                raise ValueError("empty stream needs an explicit observation window")
            observation = (self._t_min, self._t_max)
        lo, hi = observation
        if lo > hi:
            raise ValueError(f"observation window [{lo},{hi}] is empty")
        if self._links and (lo > self._t_min or hi < self._t_max):
            raise ValueError(
                f"observation [{lo},{hi}] does not cover links "
                f"[{self._t_min},{self._t_max}]"
            )
        self.observation: tuple[int, int] = (lo, hi)

    # -- basic shape -------------------------------------------------------

    @property
    def links(self) -> tuple[TemporalLink, ...]:
        return self._links

    @property
    def n_links(self) -> int:
        return len(self._links)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._neighbors))

    @property
    def n_vertices(self) -> int:
        return len(self._neighbors)

    @property
    def static_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._pair_index))

    @property
    def n_static_edges(self) -> int:
        return len(self._pair_index)

    @property
    def t_start(self) -> int:
        return self.observation[0]

    @property
    def t_end(self) -> int:
        return self.observation[1]

    def time_bounds(self) -> tuple[int, int, int]:
        """(t_min, t_max, lifetime); error on an empty stream."""
        if not self._links:
            raise ValueError("empty stream has no time bounds")
        return (self._t_min, self._t_max, self._t_max - self._t_min)

    def neighbors_of(self, vertex: int) -> frozenset[int]:
        return self._neighbors.get(vertex, frozenset())

    def __len__(self) -> int:
        return len(self._links)

    def __iter__(self) -> Iterator[TemporalLink]:
        return iter(self._links)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinkStream):
            return NotImplemented
        return self._links == other._links and self.observation == other.observation

    def __hash__(self) -> int:
        return hash((self._links, self.observation))

    def __repr__(self) -> str:
        return (
            f"LinkStream({self.n_links} links, {self.n_vertices} vertices, "
            f"observation={self.observation})"
        )

    # -- occurrence queries --------------------------------------------------

    def occurrences(self, pair: tuple[int, int]) -> tuple[int, ...]:
        """All timestamps of a canonical pair (empty if never linked)."""
        assert pair[0] < pair[1], "pair must be canonical (u < v)"
        return self._pair_index.get(pair, ())

    def occurrences_in(self, pair: tuple[int, int], window: tuple[int, int]) -> list[int]:
        """Occurrence timestamps of `pair` inside the closed `window`."""
        ts = self.occurrences(pair)
        lo, hi = window
        return list(ts[bisect_left(ts, lo) : bisect_right(ts, hi)])

    def count_in(self, pair: tuple[int, int], window: tuple[int, int]) -> int:
        ts = self.occurrences(pair)
        lo, hi = window
        return bisect_right(ts, hi) - bisect_left(ts, lo)

    def first_gamma_occurrence(
        self, pair: tuple[int, int], gamma: int, window: tuple[int, int]
    ) -> Optional[int]:
        """The gamma-th smallest occurrence in the window, or None."""
        assert gamma >= 1
        ts = self.occurrences(pair)
        lo = bisect_left(ts, window[0])
        hi = bisect_right(ts, window[1])
        if hi - lo < gamma:
            return None
        return ts[lo + gamma - 1]

    def last_gamma_occurrence(
        self, pair: tuple[int, int], gamma: int, window: tuple[int, int]
    ) -> Optional[int]:
        """The gamma-th largest occurrence in the window, or None."""
        assert gamma >= 1
        ts = self.occurrences(pair)
        lo = bisect_left(ts, window[0])
        hi = bisect_right(ts, window[1])
        if hi - lo < gamma:
            return None
        return ts[hi - gamma]

    def neighbors_min_count(
        self, seed: Iterable[int], window: tuple[int, int], gamma: int
    ) -> frozenset[int]:
        """Vertices outside `seed` with >= gamma links to some seed member
        inside the closed window."""
        members = set(seed)
        found: set[int] = set()
        for s in members:
            for w in self._neighbors.get(s, ()):
                if w in members or w in found:
                    continue
                pair = (min(s, w), max(s, w))
                if self.count_in(pair, window) >= gamma:
                    found.add(w)
        return frozenset(found)

    # -- slicing -------------------------------------------------------------

    def links_in(self, window: tuple[int, int]) -> list[TemporalLink]:
        """Links with timestamp inside the closed window, in canonical order."""
        lo, hi = window
        return [l for l in self._links if lo <= l.t <= hi]


def parse_links(
    source: TextIO | Iterable[str],
    spec: FormatSpec = FormatSpec(),
    observation: Optional[tuple[int, int]] = None,
) -> LinkStream:
    """Parse a three-column link file into a LinkStream.

    Lines starting with '#' and blank lines are ignored. Duplicate records and
    both orientations of a pair collapse to one undirected link. Self-loop
    records are dropped (counted on the result). Malformed lines raise
    ParseError with the 1-based line number; an input without a single usable
    link is an error as well.
    """
    raw: list[tuple[int, int, int]] = []  # (u, v, t) canonical
    dropped = 0
    for lineno, line in enumerate(source, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        fields = text.split(",") if spec.delimiter == "comma" else text.split()
        if len(fields) != 3:
            raise ParseError(f"line {lineno}: expected 3 fields, got {len(fields)}")
        try:
            a, b, c = (int(f) for f in fields)
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer field in {text!r}") from None
        t, u, v = (a, b, c) if spec.column_order == "tuv" else (c, a, b)
        if u == v:
            dropped += 1
            continue
        if u > v:
            u, v = v, u
        raw.append((u, v, t))
    if not raw:
        raise ParseError("no links found in input")
    if spec.rebase:
        base = min(t for _, _, t in raw)
        raw = [(u, v, t - base) for u, v, t in raw]
    links = [TemporalLink(u, v, t) for u, v, t in raw]
    return LinkStream(links, observation=observation, dropped_self_loops=dropped)


def dump_canonical(stream: LinkStream) -> str:
    """Canonical text form: 'u v t' lines ascending by (t, u, v)."""
    return "".join(f"{l.u} {l.v} {l.t}\n" for l in stream.links)


def links_from_pairs(
    pair_times: dict[tuple[int, int], Sequence[int]],
    observation: tuple[int, int] | None = None,
) -> LinkStream:
    """Build a stream from {(u,v): [timestamps]} (test/fixture convenience)."""
    out = []
    for (u, v), ts in pair_times.items():
        for t in ts:
            out.append(TemporalLink(min(u, v), max(u, v), t))
    return LinkStream(out, observation=observation)
