"""Even edge subsets and bounded-revisit trails, and conversions between them.

A factor here is an edge subset of a host graph; the interesting ones are
spanning, connected, all degrees even and at most 2s.  Such a subset is the
same thing as a closed trail that visits no vertex more than s times, and the
two views are converted with a deterministic Euler-tour construction.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Sequence

from .graphs import Graph, GraphError, _is_connected_mask

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def _norm_edges(edges: Iterable[Sequence[int]]) -> frozenset[Edge]:
    return frozenset(_norm_edge(u, v) for u, v in edges)


class EvenFactor:
    """An edge subset of a host graph, the candidate for a bounded even factor.

    Evenness, spanning and connectivity are checked by :func:`verify_factor`,
    not enforced here, so that candidate subsets read from files can be
    represented and then audited.
    """

    __slots__ = ("host", "edges")

    def __init__(self, host: Graph, edges: Iterable[Sequence[int]]):
        norm = _norm_edges(edges)
        for u, v in norm:
            if not (0 <= u < host.n and 0 <= v < host.n) or not host.has_edge(u, v):
                raise GraphError(f"factor edge ({u}, {v}) not in host graph")
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "edges", norm)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("EvenFactor is immutable")

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> list[int]:
        out = [0] * self.host.n
        for u, v in self.edges:
            out[u] += 1
            out[v] += 1
        return out

    def covered_vertices(self) -> frozenset[int]:
        out = set()
        for u, v in self.edges:
            out.add(u)
            out.add(v)
        return frozenset(out)

    def __eq__(self, other) -> bool:
        return (isinstance(other, EvenFactor) and self.host == other.host
                and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.host, self.edges))

    def __len__(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"EvenFactor(host={self.host!r}, edges={len(self.edges)})"


class Trail:
    """A walk with pairwise distinct edges and a per-vertex visit bound.

    Stored as its vertex sequence; the trail is closed when the first and last
    vertices coincide (that visit counts once).  A single vertex is a valid
    degenerate closed trail.
    """

    __slots__ = ("vertices", "s_bound")

    def __init__(self, vertices: Sequence[int], s_bound: int):
        verts = tuple(vertices)
        if not verts:
            raise GraphError("a trail has at least one vertex")
        if s_bound < 1:
            raise GraphError("visit bound must be positive")
        seen = set()
        for a, b in zip(verts, verts[1:]):
            e = _norm_edge(a, b)
            if e in seen:
                raise GraphError(f"edge {e} repeated in trail")
            seen.add(e)
        counts: dict[int, int] = {}
        effective = verts[:-1] if len(verts) > 1 and verts[0] == verts[-1] else verts
        for v in effective:
            counts[v] = counts.get(v, 0) + 1
            if counts[v] > s_bound:
                raise GraphError(f"vertex {v} visited more than {s_bound} times")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "s_bound", s_bound)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Trail is immutable")

    @property
    def is_closed(self) -> bool:
        return len(self.vertices) == 1 or self.vertices[0] == self.vertices[-1]

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def edge_list(self) -> list[Edge]:
        return [_norm_edge(a, b) for a, b in zip(self.vertices, self.vertices[1:])]

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edge_list())

    def visit_count(self, v: int) -> int:
        effective = (self.vertices[:-1]
                     if len(self.vertices) > 1 and self.vertices[0] == self.vertices[-1]
                     else self.vertices)
        return sum(1 for w in effective if w == v)

    def degree_of(self, v: int) -> int:
        """Number of trail edges incident with v (the factor-view degree)."""
        return sum(1 for e in self.edge_list() if v in e)

    def reversed(self) -> "Trail":
        return Trail(tuple(reversed(self.vertices)), self.s_bound)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Trail) and self.vertices == other.vertices
                and self.s_bound == other.s_bound)

    def __hash__(self) -> int:
        return hash((self.vertices, self.s_bound))

    def __repr__(self) -> str:
        kind = "closed" if self.is_closed else "open"
        return f"Trail({kind}, {len(self.vertices)} stops, s={self.s_bound})"


@dataclasses.dataclass(frozen=True)
class VerificationReport:
    """Outcome of auditing a candidate factor: four conditions plus verdict."""

    spanning: bool
    connected: bool
    all_degrees_even: bool
    max_degree_ok: bool
    valid: bool

    def failures(self) -> list[str]:
        out = []
        if not self.spanning:
            out.append("not spanning")
        if not self.connected:
            out.append("not connected")
        if not self.all_degrees_even:
            out.append("odd degree present")
        if not self.max_degree_ok:
            out.append("degree cap exceeded")
        return out


def _check_edge_set(n: int, edges: Iterable[Edge], s: int) -> VerificationReport:
    degs = [0] * n
    adj = [0] * n
    for u, v in edges:
        degs[u] += 1
        degs[v] += 1
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    spanning = all(d > 0 for d in degs)
    all_even = all(d % 2 == 0 for d in degs)
    max_ok = max(degs, default=0) <= 2 * s
    covered = 0
    for v, d in enumerate(degs):
        if d:
            covered |= 1 << v
    connected = covered != 0 and _is_connected_mask(n, adj, covered)
    valid = spanning and connected and all_even and max_ok
    return VerificationReport(spanning, connected, all_even, max_ok, valid)


def verify_factor(g: Graph, f: EvenFactor, s: int) -> VerificationReport:
    """Audit f as a candidate [2,2s]-factor of g.

    The verdict is true exactly when the edge set spans g, is connected, has
    all degrees even and none above 2s.  Hosts of order below three are
    rejected outright (no meaningful factor exists there).
    """
    if s < 1:
        raise GraphError("s must be a positive integer")
    if g.n < 3:
        raise GraphError("factor verification needs a host of order at least three")
    for u, v in f.edges:
        if not g.has_edge(u, v):
            raise GraphError(f"factor edge ({u}, {v}) not in the given host")
    return _check_edge_set(g.n, f.edges, s)


def _euler_sequence(edges: Iterable[Edge], start: int) -> list[int]:
    """Hierholzer walk over the edge set from `start`; deterministic
    (always consumes the smallest available neighbor first)."""
    nbrs: dict[int, set[int]] = {}
    count = 0
    for u, v in edges:
        nbrs.setdefault(u, set()).add(v)
        nbrs.setdefault(v, set()).add(u)
        count += 1
    if count == 0:
        return [start]
    stack = [start]
    out: list[int] = []
    while stack:
        v = stack[-1]
        if nbrs.get(v):
            w = min(nbrs[v])
            nbrs[v].discard(w)
            nbrs[w].discard(v)
            stack.append(w)
        else:
            out.append(stack.pop())
    out.reverse()
    if len(out) != count + 1:
        raise GraphError("edge set does not admit a single trail from the start vertex")
    return out


def factor_to_trail(f: EvenFactor, s: int) -> Trail:
    """Euler tour of a connected even factor as a closed trail.

    Precondition: f is connected with all degrees even and at most 2s; each
    vertex is then visited degree/2 <= s times.  The tour starts at the lowest
    covered vertex.
    """
    report = _check_edge_set(f.host.n, f.edges, s)
    if not (f.edges and report.connected and report.all_degrees_even and report.max_degree_ok):
        raise GraphError("factor must be nonempty, connected and even with degrees at most 2s")
    start = min(min(e) for e in f.edges)
    return Trail(_euler_sequence(f.edges, start), s)


def trail_to_factor(t: Trail, host: Graph) -> EvenFactor:
    """Edge set of a closed trail as a factor of `host`."""
    if not t.is_closed:
        raise GraphError("only closed trails convert to factors")
    return EvenFactor(host, t.edge_list())


def symmetric_difference(f1: EvenFactor, f2: EvenFactor) -> EvenFactor:
    """Edge-set XOR; evenness is preserved when both operands are even."""
    if f1.host != f2.host:
        raise GraphError("factors live on different hosts")
    return EvenFactor(f1.host, f1.edges ^ f2.edges)


def boundary(h: Graph, k: Iterable[int]) -> frozenset[Edge]:
    """Edges of h with exactly one endvertex in k (an edge cut)."""
    kmask = 0
    for v in k:
        if not 0 <= v < h.n:
            raise GraphError(f"vertex {v} out of range")
        kmask |= 1 << v
    out = []
    for u, v in h.edges():
        if bool(kmask & (1 << u)) != bool(kmask & (1 << v)):
            out.append((u, v))
    return frozenset(out)


def concat_trails(t1: Trail, t2: Trail, connector: Edge | None = None,
                  s_bound: int | None = None) -> Trail:
    """Join two trails into one, optionally through an explicit connector edge.

    Without a connector the trails must meet: two open trails sharing an
    endpoint are spliced there, and a closed trail is re-rooted at the other
    trail's start and absorbed.  With connector (a, b), t1 must be traversable
    so that it ends at a and t2 so that it starts at b.  Raises when the edges
    collide or a visit bound is exceeded.
    """
    bound = s_bound if s_bound is not None else max(t1.s_bound, t2.s_bound)

    def rotations(t: Trail) -> list[tuple[int, ...]]:
        if not t.is_closed:
            return [t.vertices, tuple(reversed(t.vertices))]
        if len(t.vertices) == 1:
            return [t.vertices]
        cyc = t.vertices[:-1]
        outs = []
        for i in range(len(cyc)):
            rot = cyc[i:] + cyc[:i]
            outs.append(rot + (rot[0],))
            outs.append(tuple(reversed(rot + (rot[0],))))
        return outs

    if connector is not None:
        a, b = connector
        for v1 in rotations(t1):
            if v1[-1] != a:
                continue
            for v2 in rotations(t2):
                if v2[0] != b:
                    continue
                try:
                    return Trail(v1 + v2, bound)
                except GraphError:
                    continue
        raise GraphError("no traversal of the operands fits the connector")
    for v1 in rotations(t1):
        for v2 in rotations(t2):
            if v1[-1] != v2[0]:
                continue
            try:
                return Trail(v1 + v2[1:], bound)
            except GraphError:
                continue
    raise GraphError("trails share no usable junction vertex")


def parse_factor(text: str, host: Graph) -> EvenFactor:
    """Parse the factor serialization: header "factor k" then k lines "u v"."""
    header_seen = False
    expect = 0
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if not header_seen:
            if len(parts) != 2 or parts[0] != "factor":
                raise GraphError(f"line {lineno}: expected header \"factor k\"")
            try:
                expect = int(parts[1])
            except ValueError:
                raise GraphError(f"line {lineno}: bad factor size {parts[1]!r}") from None
            header_seen = True
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected an edge \"u v\"")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: expected an edge \"u v\"") from None
        edges.append((u, v))
    if not header_seen:
        raise GraphError("missing \"factor k\" header")
    if len(edges) != expect:
        raise GraphError(f"header declares {expect} edges, found {len(edges)}")
    return EvenFactor(host, edges)


def format_factor(f: EvenFactor) -> str:
    lines = [f"factor {len(f.edges)}"]
    lines.extend(f"{u} {v}" for u, v in sorted(f.edges))
    return "\n".join(lines) + "\n"


def format_trail(t: Trail) -> str:
    """Single-line trail serialization: vertex ids, first = last when closed."""
    return " ".join(str(v) for v in t.vertices) + "\n"
