"""Code hypergraphs and their clutters.

For a graph and a code kind, the hypergraph has one domination edge per
vertex (closed or open neighborhood) and one separation edge per vertex pair
(a symmetric difference, widened by the pair itself for locating kinds).  A
vertex set is a code exactly when it hits every edge, so the covering number
of the hypergraph is the code number.  Reduction removes superset-redundant
edges, yielding the clutter together with its forced vertices (singleton
edges), multi-vertex edges, and the ground-irrelevant vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import CodeKind, Graph, bits, is_admissible, mask_of


class InadmissibleGraphError(ValueError):
    """The graph admits no code of the requested kind."""


@dataclass(frozen=True)
class Hyperedge:
    members: int  # bitmask over the graph's vertices
    sources: tuple[str, ...]  # provenance: "N[v]", "N(v)", or "delta(u,v)"

    @property
    def size(self) -> int:
        return self.members.bit_count()

    def vertices(self) -> tuple[int, ...]:
        return tuple(bits(self.members))


@dataclass(frozen=True)
class Hypergraph:
    n: int
    kind: CodeKind
    edges: tuple[Hyperedge, ...]


@dataclass(frozen=True)
class Clutter:
    """Antichain of non-redundant edges, sorted by (size, member tuple)."""

    n: int
    edges: tuple[Hyperedge, ...]
    kind: CodeKind | None = None

    @property
    def f1_mask(self) -> int:
        m = 0
        for e in self.edges:
            if e.size == 1:
                m |= e.members
        return m

    @property
    def f1(self) -> frozenset[int]:
        return frozenset(bits(self.f1_mask))

    @property
    def f2(self) -> tuple[Hyperedge, ...]:
        return tuple(e for e in self.edges if e.size >= 2)

    @property
    def ground_mask(self) -> int:
        m = 0
        for e in self.edges:
            m |= e.members
        return m

    @property
    def ground(self) -> frozenset[int]:
        return frozenset(bits(self.ground_mask))

    @property
    def v0(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if not self.ground_mask >> v & 1)

    def edge_masks(self) -> tuple[int, ...]:
        return tuple(e.members for e in self.edges)

    def edge_sets(self) -> list[frozenset[int]]:
        return [frozenset(e.vertices()) for e in self.edges]


def build_hypergraph(g: Graph, kind: CodeKind) -> Hypergraph:
    """All domination and separation edges for the kind.

    Raises InadmissibleGraphError when the graph has no such code (an empty
    separation or domination edge would otherwise appear).
    """
    adm = is_admissible(g, kind)
    if not adm.ok:
        raise InadmissibleGraphError(f"graph is not {kind.value}-admissible: {adm.reason}")
    edges: list[Hyperedge] = []
    closed_dom = kind.domination == "closed"
    for v in range(g.n):
        mask = g.closed_mask(v) if closed_dom else g.open_mask(v)
        tag = f"N[{v}]" if closed_dom else f"N({v})"
        edges.append(Hyperedge(mask, (tag,)))
    locating = kind.separation == "locating"
    closed_sep = kind.separation == "closed-sep"
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if closed_sep:
                mask = g.delta_closed_mask(u, v)
            else:
                mask = g.delta_open_mask(u, v)
                if locating:
                    # a pair is only constrained while both lie outside the
                    # code, so membership of u or v discharges it
                    mask |= (1 << u) | (1 << v)
            edges.append(Hyperedge(mask, (f"delta({u},{v})",)))
    return Hypergraph(g.n, kind, tuple(edges))


def reduce_hypergraph(h: Hypergraph) -> Clutter:
    """Drop duplicate and superset-redundant edges; covering number is kept.

    Duplicates merge into one edge carrying every source tag.  The result is
    an antichain ordered by (size, member tuple).
    """
    merged: dict[int, list[str]] = {}
    for e in h.edges:
        if e.members == 0:
            raise ValueError(f"empty hyperedge from {e.sources}")
        merged.setdefault(e.members, []).extend(e.sources)
    ordered = sorted(merged, key=lambda m: (m.bit_count(), tuple(bits(m))))
    kept: list[int] = []
    for mask in ordered:
        if not any(k & mask == k for k in kept):
            kept.append(mask)
    edges = tuple(Hyperedge(m, tuple(sorted(merged[m]))) for m in kept)
    return Clutter(h.n, edges, h.kind)


def build_clutter(g: Graph, kind: CodeKind) -> Clutter:
    return reduce_hypergraph(build_hypergraph(g, kind))


def forced_vertices_direct(g: Graph) -> frozenset[int]:
    """Forced vertices of the open-separation dominating clutter, computed
    without building it: isolated vertices plus every vertex that is the sole
    open-separator of some non-adjacent pair."""
    adm = is_admissible(g, CodeKind.OD)
    if not adm.ok:
        raise InadmissibleGraphError(f"graph is not OD-admissible: {adm.reason}")
    forced = mask_of(v for v in range(g.n) if g.adj[v] == 0)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            d = g.delta_open_mask(u, v)
            if d.bit_count() == 1:
                forced |= d
    return frozenset(bits(forced))


def clutter_to_json(c: Clutter) -> dict:
    obj = {
        "schema": 1,
        "n": c.n,
        "kind": c.kind.value if c.kind else None,
        "ground": sorted(c.ground),
        "v0": sorted(c.v0),
        "f1": sorted(c.f1),
        "f2": [list(e.vertices()) for e in c.f2],
        "edges": [
            {"vertices": list(e.vertices()), "sources": list(e.sources)} for e in c.edges
        ],
    }
    return obj


def clutter_from_json(obj: dict) -> Clutter:
    """Accepts the clutter_to_json layout or a bare {"n":..., "edges":[[...]]}."""
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError("clutter JSON needs 'n' and 'edges' keys")
    n = int(obj["n"])
    kind = CodeKind(obj["kind"]) if obj.get("kind") else None
    edges = []
    for entry in obj["edges"]:
        if isinstance(entry, dict):
            verts = entry["vertices"]
            sources = tuple(entry.get("sources", ()))
        else:
            verts = entry
            sources = ()
        mask = 0
        for v in verts:
            v = int(v)
            if not 0 <= v < n:
                raise ValueError(f"edge vertex {v} out of range")
            mask |= 1 << v
        if mask == 0:
            raise ValueError("empty edge in clutter JSON")
        edges.append(Hyperedge(mask, sources))
    edges.sort(key=lambda e: (e.size, e.vertices()))
    return Clutter(n, tuple(edges), kind)
