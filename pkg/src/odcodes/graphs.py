"""Finite simple graphs with the neighborhood algebra used by separation codes.

Vertices are dense 0-based indices.  Vertex sets are manipulated as Python
integers used as bitmasks (bit v set means vertex v belongs to the set), which
keeps symmetric differences and subset tests cheap.  The public operations
return ordinary ``set``/``frozenset`` objects; the ``*_mask`` accessors expose
the raw bitmasks for the solver layers.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from enum import Enum


class GraphFormatError(ValueError):
    """Raised when a graph file violates the text or JSON format."""


def mask_of(vertices) -> int:
    """Pack an iterable of vertex indices into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int):
    """Iterate over the vertex indices set in a bitmask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bitset(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


class CodeKind(Enum):
    """The six separation/domination code flavors.

    Each kind pairs a domination rule (closed uses N[v], open uses N(v)) with
    a separation rule (open-sep and closed-sep constrain all vertex pairs,
    locating only pairs outside the code).
    """

    OD = "OD"
    OTD = "OTD"
    ID = "ID"
    ITD = "ITD"
    LD = "LD"
    LTD = "LTD"

    @property
    def domination(self) -> str:
        return _DOMINATION[self]

    @property
    def separation(self) -> str:
        return _SEPARATION[self]

    @property
    def total(self) -> bool:
        """True when domination is open (total domination)."""
        return _DOMINATION[self] == "open"


_DOMINATION = {
    CodeKind.OD: "closed",
    CodeKind.OTD: "open",
    CodeKind.ID: "closed",
    CodeKind.ITD: "open",
    CodeKind.LD: "closed",
    CodeKind.LTD: "open",
}

_SEPARATION = {
    CodeKind.OD: "open-sep",
    CodeKind.OTD: "open-sep",
    CodeKind.ID: "closed-sep",
    CodeKind.ITD: "closed-sep",
    CodeKind.LD: "locating",
    CodeKind.LTD: "locating",
}


class Graph:
    """Immutable simple graph: symmetric, loop-free adjacency over 0..n-1.

    ``labels`` is an optional vertex -> string map used to tag structural
    roles (gadget parts, family roles); it never affects the algebra.
    """

    __slots__ = ("n", "adj", "labels", "_full")

    def __init__(self, n: int, adj: tuple[int, ...], labels: dict[int, str] | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(adj) != n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << n) - 1
        for v, m in enumerate(adj):
            if m & ~full:
                raise ValueError(f"vertex {v} has a neighbor out of range")
            if m >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(m):
                if not adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric on pair ({u}, {v})")
        if labels:
            for v in labels:
                if not 0 <= v < n:
                    raise ValueError(f"label on out-of-range vertex {v}")
        self.n = n
        self.adj = tuple(adj)
        self.labels = dict(labels) if labels else {}
        self._full = full

    @classmethod
    def from_edges(cls, n: int, edges, labels: dict[int, str] | None = None) -> "Graph":
        """Build a graph from an edge list, rejecting loops and duplicates."""
        adj = [0] * n
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), labels)

    # -- neighborhood algebra ------------------------------------------------

    def open_mask(self, v: int) -> int:
        return self.adj[v]

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def open_nbhd(self, v: int) -> set[int]:
        """N(v): the vertices adjacent to v."""
        self._check_vertex(v)
        return set(bits(self.adj[v]))

    def closed_nbhd(self, v: int) -> set[int]:
        """N[v] = N(v) plus v itself."""
        self._check_vertex(v)
        return set(bits(self.closed_mask(v)))

    def delta_open_mask(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError("symmetric difference needs two distinct vertices")
        return self.adj[u] ^ self.adj[v]

    def delta_closed_mask(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError("symmetric difference needs two distinct vertices")
        return self.closed_mask(u) ^ self.closed_mask(v)

    def delta_open(self, u: int, v: int) -> set[int]:
        """N(u) symmetric-difference N(v)."""
        self._check_vertex(u)
        self._check_vertex(v)
        return set(bits(self.delta_open_mask(u, v)))

    def delta_closed(self, u: int, v: int) -> set[int]:
        """N[u] symmetric-difference N[v]."""
        self._check_vertex(u)
        self._check_vertex(v)
        return set(bits(self.delta_closed_mask(u, v)))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(m):
                out.append((u, v))
        return out

    @property
    def m(self) -> int:
        return sum(d.bit_count() for d in self.adj) // 2

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adj == other.adj
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- twins and admissibility ---------------------------------------------------


def open_twins(g: Graph) -> list[tuple[int, int]]:
    """All unordered pairs u < v with N(u) = N(v)."""
    return _twin_pairs(g.adj)


def closed_twins(g: Graph) -> list[tuple[int, int]]:
    """All unordered pairs u < v with N[u] = N[v]."""
    return _twin_pairs(tuple(g.closed_mask(v) for v in range(g.n)))


def _twin_pairs(nbhds: tuple[int, ...]) -> list[tuple[int, int]]:
    groups: dict[int, list[int]] = {}
    for v, m in enumerate(nbhds):
        groups.setdefault(m, []).append(v)
    pairs = []
    for members in groups.values():
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                pairs.append((members[i], members[j]))
    pairs.sort()
    return pairs


@dataclass(frozen=True)
class Admissibility:
    """Whether a graph admits a code of the given kind, with the obstruction."""

    kind: CodeKind
    ok: bool
    reason: str = ""
    twin_pairs: tuple[tuple[int, int], ...] = ()
    isolated: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def is_admissible(g: Graph, kind: CodeKind) -> Admissibility:
    """Existence test for a kind: twin freeness and, for total kinds, no
    isolated vertex.  Locating kinds have no twin obstruction."""
    twins: tuple[tuple[int, int], ...] = ()
    if kind.separation == "open-sep":
        twins = tuple(open_twins(g))
    elif kind.separation == "closed-sep":
        twins = tuple(closed_twins(g))
    isolated = tuple(v for v in range(g.n) if g.adj[v] == 0) if kind.total else ()
    reasons = []
    if twins:
        flavor = "open" if kind.separation == "open-sep" else "closed"
        reasons.append(f"{flavor} twins: {list(twins)}")
    if isolated:
        reasons.append(f"isolated vertices: {list(isolated)}")
    return Admissibility(
        kind=kind,
        ok=not reasons,
        reason="; ".join(reasons),
        twin_pairs=twins,
        isolated=isolated,
    )


# -- metric and structural checks ----------------------------------------------


def distance(g: Graph, u: int, v: int) -> int | float:
    """BFS shortest-path length between u and v; math.inf when disconnected."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        return 0
    seen = 1 << u
    frontier = [u]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for x in frontier:
            for y in bits(g.adj[x] & ~seen):
                if y == v:
                    return d
                seen |= 1 << y
                nxt.append(y)
        frontier = nxt
    return math.inf


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle; math.inf for forests.

    BFS from every vertex; a non-tree edge (x, y) seen from root r closes a
    cycle of length at most dist[x] + dist[y] + 1, and the minimum over all
    roots is exact.
    """
    best = math.inf
    n = g.n
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        q = deque([root])
        while q:
            x = q.popleft()
            if 2 * dist[x] >= best:
                break
            for y in bits(g.adj[x]):
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    q.append(y)
                elif parent[x] != y:
                    cand = dist[x] + dist[y] + 1
                    if cand < best:
                        best = cand
    return best


def is_bipartite(g: Graph) -> tuple[bool, list[int] | None]:
    """BFS 2-coloring; returns (True, colors) or (False, None)."""
    colors = [-1] * g.n
    for root in range(g.n):
        if colors[root] >= 0:
            continue
        colors[root] = 0
        q = deque([root])
        while q:
            x = q.popleft()
            for y in bits(g.adj[x]):
                if colors[y] < 0:
                    colors[y] = 1 - colors[x]
                    q.append(y)
                elif colors[y] == colors[x]:
                    return False, None
    return True, colors


def max_degree(g: Graph) -> int:
    return max((d.bit_count() for d in g.adj), default=0)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """g1 plus a shifted copy of g2 (indices offset by g1.n), no cross edges."""
    shift = g1.n
    adj = list(g1.adj) + [m << shift for m in g2.adj]
    labels = dict(g1.labels)
    labels.update({v + shift: s for v, s in g2.labels.items()})
    return Graph(g1.n + g2.n, tuple(adj), labels)


def induced_subgraph(g: Graph, keep) -> Graph:
    """Subgraph induced by the kept vertices, reindexed densely in order."""
    keep = sorted(set(keep))
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    labels = {index[v]: s for v, s in g.labels.items() if v in index}
    return Graph.from_edges(len(keep), edges, labels)


# -- text and JSON formats -----------------------------------------------------
#
# Text: first line "n m", then m lines "u v" with 0 <= u < v < n.  Lines
# starting with "#" are comments; "#role V NAME" comments round-trip labels.
# JSON: {"n": ..., "edges": [[u, v], ...], "labels": {"0": "q1", ...}}.


def parse_graph(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 3 and parts[0] == "role":
                try:
                    labels[int(parts[1])] = parts[2]
                except ValueError:
                    raise GraphFormatError(f"line {lineno}: malformed #role comment")
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer field in {line!r}")
        if header is None:
            header = (a, b)
        else:
            edges.append((a, b))
    if header is None:
        raise GraphFormatError("missing 'n m' header line")
    n, m = header
    if n < 0 or m < 0:
        raise GraphFormatError("header counts must be non-negative")
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, file has {len(edges)}")
    for u, v in edges:
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}")
        if not 0 <= u < v < n:
            raise GraphFormatError(f"edge ({u}, {v}) violates 0 <= u < v < n")
    if len(set(edges)) != len(edges):
        raise GraphFormatError("duplicate edge")
    for v in labels:
        if not 0 <= v < n:
            raise GraphFormatError(f"#role comment names out-of-range vertex {v}")
    try:
        return Graph.from_edges(n, edges, labels)
    except ValueError as exc:
        raise GraphFormatError(str(exc))


def graph_to_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    lines += [f"#role {v} {g.labels[v]}" for v in sorted(g.labels)]
    return "\n".join(lines) + "\n"


def parse_graph_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}")
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise GraphFormatError("JSON graph needs 'n' and 'edges' keys")
    n = obj["n"]
    if not isinstance(n, int) or n < 0:
        raise GraphFormatError("'n' must be a non-negative integer")
    edges = []
    for e in obj["edges"]:
        if not (isinstance(e, list) and len(e) == 2):
            raise GraphFormatError(f"malformed edge entry {e!r}")
        edges.append((int(e[0]), int(e[1])))
    labels = {}
    for k, s in (obj.get("labels") or {}).items():
        try:
            labels[int(k)] = str(s)
        except ValueError:
            raise GraphFormatError(f"malformed label key {k!r}")
    try:
        return Graph.from_edges(n, edges, labels)
    except ValueError as exc:
        raise GraphFormatError(str(exc))


def graph_to_json(g: Graph) -> dict:
    obj: dict = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    if g.labels:
        obj["labels"] = {str(v): g.labels[v] for v in sorted(g.labels)}
    return obj


def load_graph(text: str) -> Graph:
    """Parse either format, sniffing JSON by a leading brace."""
    if text.lstrip().startswith("{"):
        return parse_graph_json(text)
    return parse_graph(text)
