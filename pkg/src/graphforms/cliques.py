"""Clique enumeration by ordered extension, with indexed levels."""

from __future__ import annotations

from .errors import CapacityError, DomainError


def _enumerate(graph, max_card):
    """Levels 1..max_card of cliques as ascending tuples, lexicographic order.

    A clique is grown only by common neighbors larger than its last vertex,
    so each clique appears exactly once and the generation order is already
    lexicographic.
    """
    adj = [frozenset(graph.neighbors(v)) for v in range(graph.n)]
    levels = {1: [(v,) for v in range(graph.n)]}
    work = [((v,), adj[v]) for v in range(graph.n)]
    for k in range(2, max_card + 1):
        grown = []
        for clique, common in work:
            last = clique[-1]
            for u in sorted(common):
                if u > last:
                    grown.append((clique + (u,), common & adj[u]))
        levels[k] = [c for c, _ in grown]
        work = grown
        if not grown:
            for j in range(k + 1, max_card + 1):
                levels[j] = []
            break
    return levels


class CliqueComplex:
    """Cliques of one graph, enumerated level by level up to a cap.

    level(k) holds every k-clique; asking beyond the cap raises a
    CapacityError naming the max_card a rebuild would need, so missing
    levels are never silently treated as empty.
    """

    __slots__ = ("_graph", "_max_card", "_levels", "_index")

    def __init__(self, graph, max_card, _levels=None):
        if not isinstance(max_card, int) or max_card < 1:
            raise DomainError(f"max_card must be a positive integer, got {max_card!r}")
        self._graph = graph
        self._max_card = max_card
        levels = _levels if _levels is not None else _enumerate(graph, max_card)
        self._levels = {k: tuple(v) for k, v in levels.items()}
        self._index = {k: {c: i for i, c in enumerate(lv)} for k, lv in self._levels.items()}

    @classmethod
    def build(cls, graph, max_card):
        return cls(graph, max_card)

    @classmethod
    def full(cls, graph, headroom=2):
        """Complex with every clique level enumerated, plus `headroom` empty
        levels above the largest clique cardinality."""
        if headroom < 0:
            raise DomainError("headroom must be non-negative")
        probe = _enumerate(graph, max(graph.n, 1))
        top = max((k for k, lv in probe.items() if lv), default=0)
        cap = max(top + headroom, 1)
        levels = {k: probe.get(k, []) for k in range(1, cap + 1)}
        return cls(graph, cap, _levels=levels)

    @property
    def graph(self):
        return self._graph

    @property
    def max_card(self):
        return self._max_card

    @property
    def top_cardinality(self):
        """Largest k with at least one k-clique (0 for the empty graph)."""
        return max((k for k, lv in self._levels.items() if lv), default=0)

    def level(self, k):
        if not isinstance(k, int) or k < 1:
            raise DomainError(f"clique cardinality must be a positive integer, got {k!r}")
        if k > self._max_card:
            raise CapacityError(
                f"level {k} not enumerated (built with max_card={self._max_card}); "
                f"rebuild with max_card >= {k}",
                required_max_card=k,
            )
        return self._levels[k]

    def level_sizes(self):
        return [len(self._levels[k]) for k in range(1, self._max_card + 1)]

    def index_of(self, clique):
        """Position of a canonical clique in its level, or None if absent."""
        c = tuple(clique)
        if not c:
            raise DomainError("clique tuple must be non-empty")
        if any(not isinstance(v, int) for v in c):
            raise DomainError(f"clique tuple must hold vertex ids, got {c!r}")
        if any(c[i] >= c[i + 1] for i in range(len(c) - 1)):
            raise DomainError(f"clique tuple {c!r} is not strictly ascending")
        if len(c) > self._max_card:
            raise CapacityError(
                f"cannot decide membership of a {len(c)}-clique "
                f"(built with max_card={self._max_card})",
                required_max_card=len(c),
            )
        return self._index[len(c)].get(c)

    def is_clique(self, clique):
        return self.index_of(clique) is not None

    def __repr__(self):
        return f"<CliqueComplex max_card={self._max_card} sizes={self.level_sizes()}>"
