"""Subdivided stars: construction, induced-copy enumeration, and the block test.

A subdivided star with parameter s has a center, 2s+1 middles adjacent to the
center, and one private leaf per middle; nothing else is adjacent among those
4s+3 vertices.  A graph is "star-free" (for a given s) when it has no induced
copy.  The weaker hypothesis checked here asks that every induced copy put at
least three of its edges inside a single block of degree at most two.
"""

from __future__ import annotations

import dataclasses

from .graphs import Graph, GraphError, _bits, block_decomposition


@dataclasses.dataclass(frozen=True)
class StarEmbedding:
    """An induced subdivided-star copy: center plus (middle, leaf) arms.

    Arms are kept sorted by middle id, so equal copies compare equal.
    """

    center: int
    arms: tuple[tuple[int, int], ...]
    s: int

    def vertices(self) -> frozenset[int]:
        out = {self.center}
        for m, l in self.arms:
            out.add(m)
            out.add(l)
        return frozenset(out)

    def edge_list(self) -> list[tuple[int, int]]:
        out = []
        for m, l in self.arms:
            out.append((min(self.center, m), max(self.center, m)))
            out.append((min(m, l), max(m, l)))
        return out

    def describe(self, g: Graph | None = None) -> str:
        if g is None:
            name = str
        else:
            def name(v: int) -> str:
                return str(g.labels[v])
        arms = ",".join(f"({name(m)},{name(l)})" for m, l in self.arms)
        return f"center={name(self.center)} arms={arms}"


def make_star_subdivision(s: int) -> Graph:
    """The star with 2s+1 rays, every edge subdivided once.

    Vertex 0 is the center, 1..2s+1 the middles, 2s+2..4s+2 the leaves, with
    arm i using middle 1+i and leaf 2s+2+i.
    """
    if s < 1:
        raise GraphError("s must be a positive integer")
    k = 2 * s + 1
    edges = []
    for i in range(k):
        edges.append((0, 1 + i))
        edges.append((1 + i, k + 1 + i))
    return Graph.from_edges(4 * s + 3, edges)


def find_induced_stars(g: Graph, s: int, limit: int | None = None) -> list[StarEmbedding]:
    """All induced subdivided-star copies of g, canonically ordered.

    Each copy is reported once, with arms sorted by middle.  With `limit`, the
    search stops early after that many copies (used by the freeness test).
    """
    if s < 1:
        raise GraphError("s must be a positive integer")
    k = 2 * s + 1
    found: list[StarEmbedding] = []
    if g.n < 4 * s + 3:
        return found
    adj = g.adj
    for c in range(g.n):
        if adj[c].bit_count() < k:
            continue
        closed_c = adj[c] | (1 << c)
        arms: list[tuple[int, int]] = []
        used = 1 << c

        def extend(next_middle_min: int) -> bool:
            # returns True when the limit has been hit and search should stop
            nonlocal used
            if len(arms) == k:
                found.append(StarEmbedding(c, tuple(arms), s))
                return limit is not None and len(found) >= limit
            cand = adj[c] >> next_middle_min
            base = next_middle_min
            while cand:
                b = cand & -cand
                cand ^= b
                m = base + b.bit_length() - 1
                mb = 1 << m
                if used & mb:
                    continue
                # middle must be independent of the arms chosen so far
                if adj[m] & used & ~(1 << c):
                    continue
                leaves = adj[m] & ~closed_c & ~used
                for l in _bits(leaves):
                    lb = 1 << l
                    # leaf may touch nothing in the partial copy except its middle
                    if adj[l] & used:
                        continue
                    arms.append((m, l))
                    used |= mb | lb
                    stop = extend(m + 1)
                    used &= ~(mb | lb)
                    arms.pop()
                    if stop:
                        return True
            return False

        if extend(0):
            break
    return found


def is_star_free(g: Graph, s: int) -> bool:
    """True when g has no induced subdivided-star copy for this s."""
    return not find_induced_stars(g, s, limit=1)


def satisfies_block_condition(g: Graph, s: int) -> tuple[bool, list[StarEmbedding]]:
    """Check that every induced star copy has at least three edges inside one
    block of degree at most two; returns the verdict and the violating copies.
    """
    if not g.is_connected():
        raise GraphError("graph must be connected")
    embeddings = find_induced_stars(g, s)
    if not embeddings:
        return True, []
    decomp = block_decomposition(g)
    # blocks with fewer than 3 edges can never host 3 star edges
    big_blocks = [frozenset(b) for b, ec in zip(decomp.blocks, decomp.block_edge_counts) if ec >= 3]
    big_degrees = [d for d, ec in zip(decomp.block_degrees, decomp.block_edge_counts) if ec >= 3]
    violators = []
    for emb in embeddings:
        star_edges = emb.edge_list()
        ok = False
        for bverts, bdeg in zip(big_blocks, big_degrees):
            if bdeg > 2:
                continue
            inside = sum(1 for u, v in star_edges if u in bverts and v in bverts)
            if inside >= 3:
                ok = True
                break
        if not ok:
            violators.append(emb)
    return not violators, violators


def max_star_edges_in_low_degree_block(g: Graph, emb: StarEmbedding) -> int:
    """Largest number of edges of the copy inside a single block of degree <= 2."""
    decomp = block_decomposition(g)
    best = 0
    star_edges = emb.edge_list()
    for bverts, bdeg in zip(decomp.blocks, decomp.block_degrees):
        if bdeg > 2:
            continue
        inside = sum(1 for u, v in star_edges if u in bverts and v in bverts)
        best = max(best, inside)
    return best
