"""Simple undirected graphs and the structural operations the solvers build on.

Vertices are integers 0..n-1 and adjacency is kept as one bitmask per vertex,
which keeps the exhaustive searches in :mod:`squarefactor.solver` fast at desk
scale.  Every vertex additionally carries an opaque label (default: its own
id) so that identity survives induced subgraphs, branch extraction and gluing.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Malformed graph data or an operation applied outside its contract."""


class GraphFormatError(GraphError):
    """Parse error in the edge-list text format; carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class SizeLimitError(GraphError):
    """Input exceeds the desk-scale cap of an exact search."""


# ---------------------------------------------------------------------------
# bit helpers (shared by the other modules through the underscore API)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _components_masks(n: int, adj: Sequence[int], within: int | None = None) -> list[int]:
    """Connected components (as vertex masks) of the subgraph induced by `within`."""
    todo = ((1 << n) - 1) if within is None else within
    comps = []
    while todo:
        seed = todo & -todo
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            nxt &= todo & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        todo &= ~comp
    return comps


def _is_connected_mask(n: int, adj: Sequence[int], within: int | None = None) -> bool:
    todo = ((1 << n) - 1) if within is None else within
    if todo == 0:
        return True
    seed = todo & -todo
    comp = seed
    frontier = seed
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= todo & ~comp
        comp |= nxt
        frontier = nxt
    return comp == todo


def _square_masks(n: int, adj: Sequence[int]) -> tuple[int, ...]:
    out = []
    for v in range(n):
        m = adj[v]
        for u in _bits(adj[v]):
            m |= adj[u]
        out.append(m & ~(1 << v))
    return tuple(out)


# ---------------------------------------------------------------------------
# Graph


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    `adj[v]` is the neighbor bitmask of v; `labels[v]` is an opaque hashable
    tag used to track vertex identity across derived graphs.
    """

    __slots__ = ("n", "adj", "labels")

    def __init__(self, n: int, adj: Sequence[int], labels: Sequence[object] | None = None):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        adj = tuple(adj)
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency masks, got {len(adj)}")
        full = (1 << n) - 1
        for v, m in enumerate(adj):
            if m & ~full:
                raise GraphError(f"vertex {v} has a neighbor outside 0..{n - 1}")
            if m & (1 << v):
                raise GraphError(f"self-loop at vertex {v}")
        for v, m in enumerate(adj):
            for u in _bits(m):
                if not adj[u] & (1 << v):
                    raise GraphError(f"adjacency not symmetric on ({v}, {u})")
        if labels is None:
            labels = tuple(range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise GraphError("one label per vertex required")
            if len(set(labels)) != n:
                raise GraphError("labels must be distinct")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "labels", labels)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   labels: Sequence[object] | None = None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if adj[u] & (1 << v):
                raise GraphError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, labels)

    # -- basic queries -----------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return self.n

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1)
            base = u + 1
            while m:
                b = m & -m
                out.append((u, base + b.bit_length() - 1))
                m ^= b
        return out

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def label(self, v: int) -> object:
        return self.labels[v]

    def index_of(self, label: object) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise GraphError(f"no vertex labelled {label!r}") from None

    def is_connected(self) -> bool:
        return self.n <= 1 or _is_connected_mask(self.n, self.adj)

    def components(self) -> list[tuple[int, ...]]:
        return [tuple(_bits(m)) for m in _components_masks(self.n, self.adj)]

    # -- value semantics -----------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph) and self.n == other.n
                and self.adj == other.adj and self.labels == other.labels)

    def __hash__(self) -> int:
        return hash((self.n, self.adj, self.labels))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


# ---------------------------------------------------------------------------
# graph square


def square(g: Graph) -> Graph:
    """Graph on the same vertices joining every pair at distance 1 or 2 in g."""
    return Graph(g.n, _square_masks(g.n, g.adj), g.labels)


# ---------------------------------------------------------------------------
# blocks and cut vertices


@dataclasses.dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected pieces, bridges, isolated vertices) of a graph.

    `blocks[i]` is the vertex set of block i, `block_degrees[i]` counts the cut
    vertices of the whole graph lying in it, and `block_edge_counts[i]` its
    edges.  Every edge of the graph lies in exactly one block.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    block_degrees: tuple[int, ...]
    block_edge_counts: tuple[int, ...]

    def blocks_containing(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]


def _blocks_and_cuts(n: int, adj: Sequence[int]) -> tuple[list[tuple[int, int]], int]:
    """Lowpoint DFS.  Returns ([(vertex_mask, edge_count)...], cut_vertex_mask)."""
    disc = [0] * n
    low = [0] * n
    cut_mask = 0
    blocks: list[tuple[int, int]] = []
    time = 1
    for root in range(n):
        if disc[root]:
            continue
        if adj[root] == 0:
            disc[root] = time
            time += 1
            blocks.append((1 << root, 0))
            continue
        disc[root] = low[root] = time
        time += 1
        stack = [(root, adj[root])]
        estack: list[tuple[int, int]] = []
        root_children = 0
        while stack:
            v, rem = stack[-1]
            if rem:
                b = rem & -rem
                stack[-1] = (v, rem ^ b)
                w = b.bit_length() - 1
                if not disc[w]:
                    estack.append((v, w))
                    disc[w] = low[w] = time
                    time += 1
                    stack.append((w, adj[w] & ~(1 << v)))
                elif disc[w] < disc[v]:
                    # true back edge; the mirrored copy is skipped on the other side
                    estack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if not stack:
                    break
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if p == root:
                    root_children += 1
                if low[v] >= disc[p]:
                    vm = 0
                    ec = 0
                    while True:
                        e = estack.pop()
                        vm |= (1 << e[0]) | (1 << e[1])
                        ec += 1
                        if e == (p, v):
                            break
                    blocks.append((vm, ec))
                    if p != root:
                        cut_mask |= 1 << p
        if root_children >= 2:
            cut_mask |= 1 << root
    return blocks, cut_mask


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Blocks and cut vertices via the standard lowpoint computation."""
    raw, cut_mask = _blocks_and_cuts(g.n, g.adj)
    raw.sort(key=lambda bm: tuple(_bits(bm[0])))
    blocks = tuple(frozenset(_bits(bm)) for bm, _ in raw)
    degrees = tuple((vm & cut_mask).bit_count() for vm, _ in raw)
    edge_counts = tuple(ec for _, ec in raw)
    return BlockDecomposition(blocks, frozenset(_bits(cut_mask)), degrees, edge_counts)


def _cut_vertices_mask(n: int, adj: Sequence[int]) -> int:
    return _blocks_and_cuts(n, adj)[1]


def _is_two_connected(n: int, adj: Sequence[int]) -> bool:
    if n < 3 or not _is_connected_mask(n, adj):
        return False
    return _cut_vertices_mask(n, adj) == 0


# ---------------------------------------------------------------------------
# induced subgraphs / branches / gluing / contraction


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on the given vertices with every edge of g inside them."""
    verts = sorted(set(vertices))
    for v in verts:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(verts)}
    vmask = _mask_of(verts)
    adj = []
    for v in verts:
        m = 0
        for u in _bits(g.adj[v] & vmask):
            m |= 1 << pos[u]
        adj.append(m)
    return Graph(len(verts), adj, tuple(g.labels[v] for v in verts))


def branches_at(g: Graph, x: int) -> list[Graph]:
    """Branches of g at x: each component of g - x together with x.

    A non-cut vertex yields the single branch g itself.  Branch vertices keep
    their labels from g.
    """
    if not 0 <= x < g.n:
        raise GraphError(f"vertex {x} out of range")
    rest = ((1 << g.n) - 1) & ~(1 << x)
    comps = _components_masks(g.n, g.adj, rest)
    return [induced_subgraph(g, list(_bits(c)) + [x]) for c in comps]


def is_nontrivial_at(g: Graph, x: int) -> tuple[bool, tuple[int, int, int] | None]:
    """Whether g contains an induced 3-vertex path starting at x as a proper
    induced subgraph; returns a witness (x, y, z) when it does.

    Equivalently, g is trivial at x when it is exactly such a path or all of
    its vertices lie in the closed neighborhood of x.
    """
    if not 0 <= x < g.n:
        raise GraphError(f"vertex {x} out of range")
    if not g.is_connected():
        raise GraphError("graph must be connected")
    closed = g.adj[x] | (1 << x)
    if closed == (1 << g.n) - 1:
        return False, None
    if g.n == 3 and g.degree(x) == 1:
        (y,) = g.neighbors(x)
        if g.degree(y) == 2:
            return False, None  # the graph is the path itself
    for y in _bits(g.adj[x]):
        far = g.adj[y] & ~closed
        if far:
            z = (far & -far).bit_length() - 1
            return True, (x, y, z)
    # connected and some vertex outside N[x] means distance 2 is realized
    raise AssertionError("unreachable: connected graph with V \\subseteq N[x] handled above")


def glue(g1: Graph, g2: Graph, x: object) -> Graph:
    """Union of two graphs whose label sets share exactly the vertex labelled x.

    The result keeps g1's vertices first (in order), then g2's other vertices.
    """
    shared = set(g1.labels) & set(g2.labels)
    if shared != {x}:
        raise GraphError(f"label sets must intersect exactly in {{{x!r}}}, got {shared!r}")
    i1 = g1.index_of(x)
    i2 = g2.index_of(x)
    n = g1.n + g2.n - 1
    remap2 = []
    nxt = g1.n
    for v in range(g2.n):
        if v == i2:
            remap2.append(i1)
        else:
            remap2.append(nxt)
            nxt += 1
    adj = [0] * n
    for u in range(g1.n):
        adj[u] = g1.adj[u]
    for u in range(g2.n):
        for v in _bits(g2.adj[u]):
            adj[remap2[u]] |= 1 << remap2[v]
    labels = list(g1.labels) + [g2.labels[v] for v in range(g2.n) if v != i2]
    return Graph(n, adj, labels)


def contract_pairs(g: Graph, pairs: Sequence[tuple[int, int]]) -> tuple[Graph, dict[int, tuple[int, ...]]]:
    """Contract a set of pairwise disjoint edges, collapsing loops and parallels.

    Returns the contracted graph and a mapping from each new vertex id to the
    tuple of original vertex ids it represents.
    """
    touched = 0
    norm_pairs = []
    for u, v in pairs:
        if not g.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        pm = (1 << u) | (1 << v)
        if touched & pm:
            raise GraphError("pairs must be pairwise disjoint")
        touched |= pm
        norm_pairs.append((min(u, v), max(u, v)))
    keep = [v for v in range(g.n) if not touched & (1 << v)]
    groups: list[tuple[int, ...]] = [(v,) for v in keep] + [p for p in norm_pairs]
    group_of = {}
    for i, grp in enumerate(groups):
        for v in grp:
            group_of[v] = i
    n = len(groups)
    adj = [0] * n
    for u, v in g.edges():
        gu, gv = group_of[u], group_of[v]
        if gu != gv:
            adj[gu] |= 1 << gv
            adj[gv] |= 1 << gu
    labels: list[object] = [g.labels[v] for v in keep]
    labels += [frozenset((g.labels[u], g.labels[v])) for u, v in norm_pairs]
    mapping = {i: grp for i, grp in enumerate(groups)}
    return Graph(n, adj, labels), mapping


# ---------------------------------------------------------------------------
# independence number (exact branch and bound)

_MIS_CAP = 32


def _greedy_clique_cover_bound(adj: Sequence[int], cand: int) -> int:
    """Number of cliques in a greedy clique cover of cand; an upper bound on
    the independence number of the induced subgraph."""
    bound = 0
    rest = cand
    while rest:
        v = (rest & -rest).bit_length() - 1
        clique = 1 << v
        common = adj[v] & rest
        rest ^= 1 << v
        while common:
            w = (common & -common).bit_length() - 1
            clique |= 1 << w
            rest &= ~(1 << w)
            common &= adj[w]
        bound += 1
    return bound


def _mis_size(n: int, adj: Sequence[int]) -> int:
    best = 0

    def rec(cand: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        cnt = cand.bit_count()
        if size + cnt <= best:
            return
        if cnt >= 10 and size + _greedy_clique_cover_bound(adj, cand) <= best:
            return
        # vertices with no candidate neighbor are free wins
        free = 0
        m = cand
        while m:
            b = m & -m
            v = b.bit_length() - 1
            if not adj[v] & cand:
                free += 1
                cand ^= b
            m ^= b
        if free:
            rec(cand, size + free)
            return
        if not cand:
            return
        # pivot on a candidate of maximum degree within cand
        pivot = -1
        pdeg = -1
        for v in _bits(cand):
            d = (adj[v] & cand).bit_count()
            if d > pdeg:
                pdeg = d
                pivot = v
        rec(cand & ~(adj[pivot] | (1 << pivot)), size + 1)
        rec(cand & ~(1 << pivot), size)

    rec((1 << n) - 1, 0)
    return best


def independence_number(g: Graph) -> int:
    """Exact independence number by branch and bound (desk scale)."""
    if g.n > _MIS_CAP:
        raise SizeLimitError(f"independence number capped at {_MIS_CAP} vertices")
    return _mis_size(g.n, g.adj)


# ---------------------------------------------------------------------------
# edge-list text format (shared across the CLI and the harness reports)


def parse_graph(text: str, labels: Sequence[object] | None = None) -> Graph:
    """Parse the shared edge-list format: header "n m", then m lines "u v".

    Lines starting with '#' and blank lines are ignored.  Raises
    GraphFormatError with a 1-based line number on malformed input.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError("header counts must be nonnegative", lineno)
            header = (a, b)
            continue
        if len(edges) >= header[1]:
            raise GraphFormatError("more edge lines than declared in header", lineno)
        if not (0 <= a < header[0] and 0 <= b < header[0]):
            raise GraphFormatError(f"edge ({a}, {b}) out of range for n={header[0]}", lineno)
        if a == b:
            raise GraphFormatError(f"self-loop at vertex {a}", lineno)
        if (min(a, b), max(a, b)) in edges:
            raise GraphFormatError(f"duplicate edge ({a}, {b})", lineno)
        edges.append((min(a, b), max(a, b)))
    if header is None:
        raise GraphFormatError("missing header line \"n m\"")
    if len(edges) != header[1]:
        raise GraphFormatError(f"header declares {header[1]} edges, found {len(edges)}")
    return Graph.from_edges(header[0], edges, labels)


def format_graph(g: Graph, comment: str | None = None) -> str:
    """Canonical edge-list serialization (sorted edges, no comments by default)."""
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"# {part}")
    lines.append(f"{g.n} {g.edge_count()}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def format_dot(g: Graph, highlight: Iterable[tuple[int, int]] = ()) -> str:
    """Plain DOT export; `highlight` edges (e.g. a factor) are drawn bold."""
    hl = {(min(u, v), max(u, v)) for u, v in highlight}
    lines = ["graph squarefactor {"]
    for v in range(g.n):
        lines.append(f'  {v} [label="{g.labels[v]}"];')
    for u, v in g.edges():
        style = " [style=bold]" if (u, v) in hl else ""
        lines.append(f"  {u} -- {v}{style};")
    for u, v in sorted(hl):
        if not g.has_edge(u, v):
            lines.append(f"  {u} -- {v} [style=bold, color=gray];")
    lines.append("}")
    return "\n".join(lines) + "\n"
