"""Finite simple graphs with dense integer vertex ids and stable labels."""

from __future__ import annotations

import json
from itertools import combinations

from .errors import DomainError, ParseError


class Graph:
    """Immutable finite simple undirected graph.

    Vertices carry dense ids 0..n-1 assigned at ingestion (first-appearance
    order for edge lists, list position for JSON); every canonical ordering
    downstream is id order. Each vertex keeps its original string label.
    Adjacency is stored twice: sorted neighbor tuples for ordered iteration
    and a flat pair set for O(1) membership tests.
    """

    __slots__ = ("_labels", "_index", "_neighbors", "_pairs")

    def __init__(self, labels, edges):
        labels = list(labels)
        index = {}
        for i, lab in enumerate(labels):
            if not isinstance(lab, str) or not lab:
                raise ParseError(f"vertex label must be a non-empty string, got {lab!r}")
            if lab in index:
                raise ParseError(f"duplicate vertex label {lab!r}")
            index[lab] = i
        n = len(labels)
        pairs = set()
        for u, v in edges:
            if not (isinstance(u, int) and isinstance(v, int)):
                raise DomainError(f"edge endpoints must be vertex ids, got {(u, v)!r}")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge {(u, v)!r} out of range for {n} vertices")
            if u == v:
                raise ParseError(f"self-loop at vertex {labels[u]!r}")
            pairs.add((u, v) if u < v else (v, u))
        nbrs = [[] for _ in range(n)]
        for u, v in pairs:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self._labels = tuple(labels)
        self._index = index
        self._neighbors = tuple(tuple(sorted(b)) for b in nbrs)
        self._pairs = frozenset(pairs)

    # -- basic queries ----------------------------------------------------

    @property
    def n(self):
        return len(self._labels)

    @property
    def labels(self):
        return self._labels

    def label(self, v):
        self._check_vertex(v)
        return self._labels[v]

    def id_of(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise DomainError(f"unknown vertex label {label!r}") from None

    def neighbors(self, v):
        """Neighbor ids of v, strictly ascending."""
        self._check_vertex(v)
        return self._neighbors[v]

    def degree(self, v):
        return len(self.neighbors(v))

    def adjacent(self, u, v):
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return False
        return ((u, v) if u < v else (v, u)) in self._pairs

    @property
    def edges(self):
        return tuple(sorted(self._pairs))

    @property
    def edge_count(self):
        return len(self._pairs)

    def _check_vertex(self, v):
        if not isinstance(v, int) or not 0 <= v < len(self._labels):
            raise DomainError(f"vertex id {v!r} out of range for {len(self._labels)} vertices")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._labels == other._labels and self._pairs == other._pairs

    def __hash__(self):
        return hash((self._labels, self._pairs))

    def __repr__(self):
        return f"<Graph n={self.n} m={self.edge_count}>"

    # -- edge-list format -------------------------------------------------

    @classmethod
    def parse_edge_list(cls, text):
        """Parse whitespace edge-list text.

        One edge per line as two labels; a single label declares a vertex
        (used for isolated vertices); lines starting with '#' are comments.
        Duplicate edges collapse. Self-loops and lines with more than two
        tokens are errors reported with their line number.
        """
        if isinstance(text, bytes):
            text = text.decode("utf-8")
        labels, index, edges = [], {}, set()

        def vid(tok, lineno):
            if "#" in tok:
                raise ParseError(
                    f"label {tok!r} may not contain '#' (line {lineno})",
                    context={"line": lineno},
                )
            if tok not in index:
                index[tok] = len(labels)
                labels.append(tok)
            return index[tok]

        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            toks = line.split()
            if len(toks) == 1:
                vid(toks[0], lineno)
            elif len(toks) == 2:
                u = vid(toks[0], lineno)
                v = vid(toks[1], lineno)
                if u == v:
                    raise ParseError(
                        f"self-loop {toks[0]!r} at line {lineno}", context={"line": lineno}
                    )
                edges.add((u, v) if u < v else (v, u))
            else:
                raise ParseError(
                    f"expected 1 or 2 tokens at line {lineno}, got {len(toks)}",
                    context={"line": lineno},
                )
        return cls(labels, sorted(edges))

    def to_edge_text(self):
        """Edge-list serialization that reparses with identical id assignment.

        All vertices are declared first, in id order, so first appearance
        reproduces the original numbering.
        """
        for lab in self._labels:
            if "#" in lab or any(ch.isspace() for ch in lab):
                raise DomainError(
                    f"label {lab!r} not representable in edge-list format; use JSON"
                )
        lines = list(self._labels)
        lines.extend(f"{self._labels[u]} {self._labels[v]}" for u, v in self.edges)
        return "\n".join(lines) + "\n"

    # -- JSON format -------------------------------------------------------

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict):
            raise ParseError("graph JSON must be an object")
        verts = obj.get("vertices")
        edges = obj.get("edges", [])
        if not isinstance(verts, list):
            raise ParseError("graph JSON needs a 'vertices' list")
        if not isinstance(edges, list):
            raise ParseError("graph JSON 'edges' must be a list")
        index = {}
        for i, lab in enumerate(verts):
            if not isinstance(lab, str) or not lab:
                raise ParseError(f"vertex label must be a non-empty string, got {lab!r}")
            if lab in index:
                raise ParseError(f"duplicate vertex label {lab!r}")
            index[lab] = i
        id_edges = []
        for ent in edges:
            if not (isinstance(ent, list) and len(ent) == 2):
                raise ParseError(f"edge entry must be a pair of labels, got {ent!r}")
            a, b = ent
            if a not in index or b not in index:
                raise ParseError(f"edge {ent!r} uses an undeclared vertex label")
            if a == b:
                raise ParseError(f"self-loop at vertex {a!r}")
            id_edges.append((index[a], index[b]))
        return cls(verts, id_edges)

    @classmethod
    def from_json_text(cls, text):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e}") from None
        return cls.from_json(obj)

    def to_json(self):
        """Canonical dict: vertices in id order, edges sorted by id pair."""
        return {
            "vertices": list(self._labels),
            "edges": [[self._labels[u], self._labels[v]] for u, v in self.edges],
        }

    def to_json_text(self):
        return json.dumps(self.to_json(), indent=2) + "\n"

    # -- builders ------------------------------------------------------------

    @classmethod
    def complete(cls, n):
        return cls([str(i) for i in range(n)], combinations(range(n), 2))

    @classmethod
    def cycle(cls, n):
        if n < 3:
            raise DomainError("a cycle needs at least 3 vertices")
        return cls([str(i) for i in range(n)], [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def petersen(cls):
        edges = [(i, (i + 1) % 5) for i in range(5)]
        edges += [(i, i + 5) for i in range(5)]
        edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls([str(i) for i in range(10)], edges)

    @classmethod
    def octahedron(cls):
        # complete tripartite K_{2,2,2}: antipodal pairs (i, i+3) are the
        # only non-edges
        edges = [(u, v) for u, v in combinations(range(6), 2) if v - u != 3]
        return cls([str(i) for i in range(6)], edges)

    @classmethod
    def builtin(cls, name):
        try:
            factory = _BUILTINS[name]
        except KeyError:
            known = ", ".join(sorted(_BUILTINS))
            raise DomainError(f"unknown builtin graph {name!r}; known: {known}") from None
        return factory()


_BUILTINS = {
    "K3": lambda: Graph.complete(3),
    "K4": lambda: Graph.complete(4),
    "K5": lambda: Graph.complete(5),
    "C4": lambda: Graph.cycle(4),
    "C5": lambda: Graph.cycle(5),
    "C6": lambda: Graph.cycle(6),
    "petersen": Graph.petersen,
    "octahedron": Graph.octahedron,
}

BUILTIN_NAMES = tuple(sorted(_BUILTINS))
