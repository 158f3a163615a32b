"""Constraint systems for covering polyhedra and their 0/1-point checks.

A system pairs forced-vertex equations (x_v = 1) with rank inequalities
sum(x_v for v in support) >= rhs over an implicit non-negative orthant.  The
checks are exhaustive over 0/1 points at small sizes: validity (every cover
satisfies the system), tightness (every inequality is achieved with equality
by some cover), and hull equivalence (the system's 0/1 points are exactly
the covers).  Fractional geometry, dimension arguments, and facet proofs are
deliberately out of reach of this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .clutters import Clutter, build_clutter
from .cover import min_cover
from .graphs import CodeKind, Graph, bits, mask_of


@dataclass(frozen=True)
class RankConstraint:
    support: frozenset[int]
    rhs: int
    source: str = ""

    def __post_init__(self):
        if not 1 <= self.rhs <= len(self.support):
            raise ValueError(f"rank constraint needs 1 <= rhs <= |support|, got {self.rhs}")

    @property
    def mask(self) -> int:
        return mask_of(self.support)

    def satisfied(self, point_mask: int) -> bool:
        return (point_mask & self.mask).bit_count() >= self.rhs

    def tight(self, point_mask: int) -> bool:
        return (point_mask & self.mask).bit_count() == self.rhs


@dataclass(frozen=True)
class ConstraintSystem:
    """Equations x_v = 1, rank inequalities, implicit x >= 0 over n variables."""

    n: int
    equalities: tuple[int, ...]
    inequalities: tuple[RankConstraint, ...]

    def __post_init__(self):
        for v in self.equalities:
            if not 0 <= v < self.n:
                raise ValueError(f"equality on out-of-range vertex {v}")
        for c in self.inequalities:
            if any(not 0 <= v < self.n for v in c.support):
                raise ValueError("inequality support out of range")

    def satisfied_by(self, point_mask: int) -> bool:
        for v in self.equalities:
            if not point_mask >> v & 1:
                return False
        return all(c.satisfied(point_mask) for c in self.inequalities)

    def size(self) -> tuple[int, int]:
        return len(self.equalities), len(self.inequalities)


def _rank_family(vertices, floor_size: int, slack: int, source: str):
    """Constraints x(V') >= |V'| - slack for all V' with |V'| >= floor_size."""
    vertices = sorted(vertices)
    out = []
    for size in range(floor_size, len(vertices) + 1):
        for sub in combinations(vertices, size):
            out.append(RankConstraint(frozenset(sub), size - slack, source))
    return out


def qrose_system(n: int, q: int) -> ConstraintSystem:
    """Defining system of the complete q-rose polyhedron: x(V') >= |V'|-q+1
    for every subset of at least q of the n ground vertices."""
    if not 2 <= q < n:
        raise ValueError("q-rose needs 2 <= q < n")
    return ConstraintSystem(n, (), tuple(_rank_family(range(n), q, q - 1, "rose rank")))


# -- role helpers -----------------------------------------------------------------


def _role_sequence(g: Graph, prefix: str) -> list[int]:
    found = {}
    for v, lab in g.labels.items():
        tail = lab[len(prefix) :]
        if lab.startswith(prefix) and tail.isdigit():
            found[int(tail)] = v
    return [found[i] for i in sorted(found)]


def _role_mismatch(hint: str, why: str) -> ValueError:
    return ValueError(f"graph does not carry the roles of a {hint}: {why}")


FAMILY_HINTS = (
    "clique",
    "matching",
    "fan",
    "half-graph",
    "thick-spider",
    "thin-spider",
    "extended-thin-spider",
    "sunlet",
    "almost-complete-thin-sun",
    "generic",
)


def od_polyhedron_system(g: Graph, hint: str) -> ConstraintSystem:
    """The published defining system of the open-separation domination
    polyhedron for the hinted family, over all of the graph's vertices.

    The hint is cross-checked against the graph's role labels and adjacency;
    "generic" falls back to forced-vertex equations plus one inequality per
    multi-vertex clutter edge.
    """
    if hint not in FAMILY_HINTS:
        raise ValueError(f"unknown family hint {hint!r}")
    n = g.n

    if hint == "clique":
        if g.m != n * (n - 1) // 2 or n < 2:
            raise _role_mismatch(hint, "not a complete graph on >= 2 vertices")
        return ConstraintSystem(n, (), tuple(_rank_family(range(n), 2, 1, "clique rank")))

    if hint == "matching":
        if n % 2 or any(g.degree(v) != 1 for v in range(n)):
            raise _role_mismatch(hint, "not a perfect matching")
        return ConstraintSystem(n, (), tuple(_rank_family(range(n), 2, 1, "matching rank")))

    if hint == "fan":
        hub = [v for v, lab in g.labels.items() if lab == "u"]
        if len(hub) != 1 or g.degree(hub[0]) != n - 1:
            raise _role_mismatch(hint, "no universal vertex labeled 'u'")
        rest = [v for v in range(n) if v != hub[0]]
        if any(g.degree(v) != 2 for v in rest):
            raise _role_mismatch(hint, "blades are not disjoint edges")
        return ConstraintSystem(n, (), tuple(_rank_family(rest, 2, 1, "fan rank")))

    if hint == "half-graph":
        us = _role_sequence(g, "u")
        ws = _role_sequence(g, "w")
        k = len(us)
        if k == 0 or len(ws) != k or n != 2 * k:
            raise _role_mismatch(hint, "need u1..uk and w1..wk labels")
        for i in range(k):
            for j in range(k):
                if g.has_edge(us[i], ws[j]) != (i <= j):
                    raise _role_mismatch(hint, "staircase adjacency violated")
        equalities = tuple(us[1:]) + tuple(ws[:-1])
        facet = RankConstraint(frozenset({us[0], ws[-1]}), 1, "half-graph facet")
        return ConstraintSystem(n, tuple(sorted(equalities)), (facet,))

    if hint in ("thick-spider", "thin-spider", "extended-thin-spider"):
        qs = _role_sequence(g, "q")
        ss = _role_sequence(g, "s")
        k = len(qs)
        if k < 3:
            raise _role_mismatch(hint, "need q1..qk labels, k >= 3")
        if hint == "extended-thin-spider":
            s0 = [v for v, lab in g.labels.items() if lab == "s0"]
            if not s0 or len(ss) != k + 1:
                raise _role_mismatch(hint, "need s0 plus s1..sk labels")
            if g.open_nbhd(s0[0]) != set(qs[:-1]):
                raise _role_mismatch(hint, "s0 must see exactly q1..q(k-1)")
            ss = ss[1:]  # s1..sk
        elif len(ss) != k:
            raise _role_mismatch(hint, "need s1..sk labels")
        thin = hint != "thick-spider"
        for i in range(k):
            for j in range(k):
                want = (i == j) if thin else (i != j)
                if g.has_edge(ss[i], qs[j]) != want:
                    raise _role_mismatch(hint, "spider leg adjacency violated")
        ineqs = list(_rank_family(qs, 2, 1, "clique-part rank"))
        if hint == "thick-spider":
            ineqs += _rank_family(ss, k - 1, k - 2, "stable-part rank")
            return ConstraintSystem(n, (), tuple(ineqs))
        pairs = range(k) if hint == "thin-spider" else range(k - 1)
        for i in pairs:
            ineqs.append(RankConstraint(frozenset({qs[i], ss[i]}), 1, "leg cover"))
        equalities = () if hint == "thin-spider" else (ss[-1],)
        ineqs.sort(key=lambda c: (len(c.support), sorted(c.support)))
        return ConstraintSystem(n, equalities, tuple(ineqs))

    if hint in ("sunlet", "almost-complete-thin-sun"):
        cs = _role_sequence(g, "c")
        ss = _role_sequence(g, "s")
        k = len(cs)
        if k < 3 or len(ss) != k:
            raise _role_mismatch(hint, "need c1..ck and s1..sk labels")
        for i in range(k):
            if not g.has_edge(ss[i], cs[i]) or g.degree(ss[i]) != 1:
                raise _role_mismatch(hint, "pendants must hang on their cycle vertex")
        constraints: dict[tuple[frozenset[int], int], RankConstraint] = {}

        def put(c: RankConstraint) -> None:
            constraints.setdefault((c.support, c.rhs), c)

        if hint == "sunlet":
            if any(g.degree(v) != 3 for v in cs):
                raise _role_mismatch(hint, "cycle must be chordless")
            if k < 5:
                raise _role_mismatch(hint, "sunlet system stated for k >= 5")
            for i in range(k):
                block = [ss[i], cs[(i - 1) % k], cs[i], cs[(i + 1) % k]]
                for c in _rank_family(block, 2, 1, "pendant block rank"):
                    put(c)
        else:
            if k % 2:
                raise _role_mismatch(hint, "cycle length must be even")
            l = k // 2
            if l < 3:
                raise _role_mismatch(hint, "need l >= 3")
            for i in range(k):
                for j in range(i + 1, k):
                    if g.has_edge(cs[i], cs[j]) != (j - i != l):
                        raise _role_mismatch(hint, "antipodal non-adjacency violated")
            for i in range(l):
                put(RankConstraint(frozenset({ss[i], ss[i + l]}), 1, "antipodal pendants"))
            for i in range(k):
                put(RankConstraint(frozenset({ss[i], cs[i]}), 1, "pendant edge"))
        for c in _rank_family(cs, 2, 1, "cycle rank"):
            put(c)
        ineqs = sorted(constraints.values(), key=lambda c: (len(c.support), sorted(c.support)))
        return ConstraintSystem(n, (), tuple(ineqs))

    # generic: read the clutter itself
    clutter = build_clutter(g, CodeKind.OD)
    equalities = tuple(sorted(clutter.f1))
    ineqs = tuple(
        RankConstraint(frozenset(e.vertices()), 1, "clutter edge") for e in clutter.f2
    )
    return ConstraintSystem(n, equalities, ineqs)


# -- 0/1 point checks ---------------------------------------------------------------

ENUMERATION_LIMIT = 16


@dataclass(frozen=True)
class ValidityReport:
    ok: bool
    exhaustive: bool
    counterexample: tuple[frozenset[int], str] | None = None  # (cover, constraint)


@dataclass(frozen=True)
class TightnessReport:
    ok: bool
    never_tight: tuple[RankConstraint, ...]
    witnesses: tuple[tuple[RankConstraint, frozenset[int]], ...]


@dataclass(frozen=True)
class HullReport:
    ok: bool
    witness: frozenset[int] | None = None
    direction: str = ""  # "cover-outside-system" | "system-point-not-cover"


def _all_covers(c: Clutter):
    masks = c.edge_masks()
    for x in range(1 << c.n):
        if all(x & m for m in masks):
            yield x


def _sampled_covers(c: Clutter, cap: int = 5000):
    res = min_cover(c, enumerate_all=True, cap=cap)
    for w in res.all_optima:
        yield mask_of(w)


def check_validity(sys: ConstraintSystem, c: Clutter) -> ValidityReport:
    """Does every 0/1 cover satisfy the system?  Exhaustive up to the
    enumeration limit, otherwise checked over enumerated minimum covers."""
    if sys.n != c.n:
        raise ValueError("system and clutter sizes differ")
    exhaustive = c.n <= ENUMERATION_LIMIT
    points = _all_covers(c) if exhaustive else _sampled_covers(c)
    for x in points:
        for v in sys.equalities:
            if not x >> v & 1:
                return ValidityReport(False, exhaustive, (frozenset(bits(x)), f"x_{v} = 1"))
        for con in sys.inequalities:
            if not con.satisfied(x):
                desc = f"x({sorted(con.support)}) >= {con.rhs}"
                return ValidityReport(False, exhaustive, (frozenset(bits(x)), desc))
    return ValidityReport(True, exhaustive)


def check_tightness(sys: ConstraintSystem, c: Clutter) -> TightnessReport:
    """Is every inequality achieved with equality by some cover?"""
    if sys.n != c.n:
        raise ValueError("system and clutter sizes differ")
    pending = dict(enumerate(sys.inequalities))
    witnesses = {}
    if c.n <= ENUMERATION_LIMIT:
        points = _all_covers(c)
    else:
        points = _sampled_covers(c)
    for x in points:
        hit = [i for i, con in pending.items() if con.tight(x)]
        for i in hit:
            witnesses[i] = frozenset(bits(x))
            del pending[i]
        if not pending:
            break
    return TightnessReport(
        ok=not pending,
        never_tight=tuple(pending[i] for i in sorted(pending)),
        witnesses=tuple((sys.inequalities[i], witnesses[i]) for i in sorted(witnesses)),
    )


def integer_hull_equiv(sys: ConstraintSystem, c: Clutter, n_max: int = ENUMERATION_LIMIT) -> HullReport:
    """Are the system's 0/1 points exactly the covers of the clutter?"""
    if sys.n != c.n:
        raise ValueError("system and clutter sizes differ")
    if c.n > n_max:
        raise ValueError(f"hull equivalence is enumerated only up to n = {n_max}")
    masks = c.edge_masks()
    for x in range(1 << c.n):
        is_cover = all(x & m for m in masks)
        in_system = sys.satisfied_by(x)
        if is_cover and not in_system:
            return HullReport(False, frozenset(bits(x)), "cover-outside-system")
        if in_system and not is_cover:
            return HullReport(False, frozenset(bits(x)), "system-point-not-cover")
    return HullReport(True)


def minimum_over_system(sys: ConstraintSystem) -> int:
    """Smallest 1-count of a 0/1 point satisfying the system (enumerated)."""
    if sys.n > ENUMERATION_LIMIT:
        raise ValueError("enumeration limit exceeded")
    best = None
    for x in range(1 << sys.n):
        if sys.satisfied_by(x):
            k = x.bit_count()
            if best is None or k < best:
                best = k
    if best is None:
        raise ValueError("system has no 0/1 point")
    return best
