"""Core machinery for small undirected simple graphs.

Graphs are immutable value objects over vertices 0..n-1 with adjacency kept
as per-vertex bitmasks.  The module covers construction and validation,
graph6 text I/O, degree statistics in exact rational arithmetic,
near-regularity classification, the standard generator families, canonical
forms under isomorphism, and exhaustive enumeration of isomorphism classes
up to ENUMERATION_CAP vertices.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

# Permutation-search canonicalization is exponential in the worst case;
# nine vertices keeps every corpus run at desk scale.
ENUMERATION_CAP = 9
GRAPH6_MAX_N = 62


# ---------------------------------------------------------------------------
# Graph value object
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph on vertices 0..n-1.

    Edges are stored as sorted (u, v) pairs with u < v; adjacency bitmasks
    and degrees are derived lazily and cached.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        for u, v in self.edges:
            if not 0 <= u < v < self.n:
                raise ValueError(f"edge ({u}, {v}) is not a sorted in-range pair")

    @property
    def m(self) -> int:
        return len(self.edges)

    @functools.cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @functools.cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(mask.bit_count() for mask in self.neighbor_masks)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        mask = self.neighbor_masks[v]
        return tuple(u for u in range(self.n) if (mask >> u) & 1)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex i renamed to perm[i]."""
        relabeled = (tuple(sorted((perm[u], perm[v]))) for u, v in self.edges)
        return Graph(self.n, frozenset(relabeled))


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list, rejecting malformed input.

    Self-loops, endpoints outside 0..n-1, and repeated pairs (in either
    orientation) are each rejected with a distinct error.
    """
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    normalized = []
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"vertex out of range in edge ({u}, {v}) for n={n}")
        normalized.append((u, v) if u < v else (v, u))
    seen: set[tuple[int, int]] = set()
    for e in normalized:
        if e in seen:
            raise ValueError(f"duplicate edge {e}")
        seen.add(e)
    return Graph(n, frozenset(seen))


# ---------------------------------------------------------------------------
# graph6 interchange format
# ---------------------------------------------------------------------------
#
# Single-byte size header N(n) = chr(n + 63) for n <= 62, followed by the
# upper-triangle bits x(i,j), 0 <= i < j <= n-1, ordered column by column,
# packed six bits per printable byte (ASCII 63..126), zero-padded.

_GRAPH6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    """Encode a graph as a one-line graph6 string."""
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 encoding supported for n <= {GRAPH6_MAX_N}, got {g.n}")
    bits = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.neighbor_masks[j]
        for i in range(j):
            bits = (bits << 1) | ((col >> i) & 1)
            nbits += 1
    pad = (-nbits) % 6
    bits <<= pad
    nbits += pad
    chars = [chr(g.n + 63)]
    for k in range(nbits - 6, -1, -6):
        chars.append(chr(((bits >> k) & 0x3F) + 63))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    """Decode a one-line graph6 string (optional '>>graph6<<' prefix tolerated)."""
    line = text.strip()
    if line.startswith(_GRAPH6_HEADER):
        line = line[len(_GRAPH6_HEADER):]
    if not line:
        raise ValueError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in line):
        raise ValueError(f"graph6 string contains bytes outside ASCII 63..126: {line!r}")
    if line[0] == "~":
        raise ValueError("multi-byte graph6 size headers (n >= 63) are not supported")
    n = ord(line[0]) - 63
    if n == 0:
        raise ValueError("graph6 string encodes an empty vertex set")
    need = (n * (n - 1) // 2 + 5) // 6
    body = line[1:]
    if len(body) < need:
        raise ValueError(f"truncated graph6 bit vector: got {len(body)} bytes, need {need}")
    if len(body) > need:
        raise ValueError(f"trailing bytes after graph6 bit vector: {body[need:]!r}")
    bits = 0
    for c in body:
        bits = (bits << 6) | (ord(c) - 63)
    nbits = 6 * need
    total = n * (n - 1) // 2
    if total and bits & ((1 << (nbits - total)) - 1):
        raise ValueError("nonzero padding bits in graph6 string")
    edges = []
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (bits >> pos) & 1:
                edges.append((i, j))
            pos -= 1
    return Graph(n, frozenset(edges))


# ---------------------------------------------------------------------------
# Degree statistics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DegreeStats:
    """Exact degree-level statistics of a graph.

    avg_degree and variance are kept as exact rationals; float conversion
    is left to the consumer so the bound formulas control their own
    rounding.  two_degrees[i] is the sum of the degrees over the neighbors
    of vertex i.
    """

    n: int
    m: int
    degrees: tuple[int, ...]
    avg_degree: Fraction
    max_degree: int
    min_degree: int
    sum_sq_degrees: int
    variance: Fraction
    two_degrees: tuple[int, ...]

    @property
    def avg_degree_float(self) -> float:
        return float(self.avg_degree)

    @property
    def variance_float(self) -> float:
        return float(self.variance)


def degree_stats(g: Graph) -> DegreeStats:
    """Compute degree statistics, with the variance taken definitionally.

    The mean-of-squares identity variance form is recomputed internally and
    must agree exactly (both sides are rationals).
    """
    degs = g.degrees
    n, m = g.n, g.m
    avg = Fraction(2 * m, n)
    sum_sq = sum(d * d for d in degs)
    variance = sum((Fraction(d) - avg) ** 2 for d in degs) / n
    identity_form = Fraction(sum_sq, n) - avg * avg
    if variance != identity_form:
        raise AssertionError("degree variance identity violated")
    masks = g.neighbor_masks
    two = tuple(sum(degs[u] for u in range(n) if (masks[v] >> u) & 1) for v in range(n))
    return DegreeStats(
        n=n,
        m=m,
        degrees=degs,
        avg_degree=avg,
        max_degree=max(degs),
        min_degree=min(degs),
        sum_sq_degrees=sum_sq,
        variance=variance,
        two_degrees=two,
    )


# ---------------------------------------------------------------------------
# Regularity classification
# ---------------------------------------------------------------------------

class RegularityClass(Enum):
    REGULAR = "regular"
    HIGH_SUBREGULAR = "high-subregular"
    LOW_SUBREGULAR = "low-subregular"
    OTHER_IRREGULAR = "other-irregular"


def classify_degree_multiset(degrees: Sequence[int]) -> RegularityClass:
    """Classify a degree multiset by how close it is to regular.

    Naming convention used throughout this library: with max degree D and
    min degree D-1, a *high* subregular graph sits just below D-regular
    (exactly one vertex of degree D-1, all others of degree D, so the
    average degree is D - 1/n), and a *low* subregular graph sits just
    above (D-1)-regular (exactly one vertex of degree D, average degree
    D - 1 + 1/n).  Part of the literature attaches the names the other way
    around; this library uses the convention above consistently.
    """
    dmax = max(degrees)
    dmin = min(degrees)
    if dmax == dmin:
        return RegularityClass.REGULAR
    if dmax - dmin == 1:
        if degrees.count(dmax) == 1:
            return RegularityClass.LOW_SUBREGULAR
        if degrees.count(dmin) == 1:
            return RegularityClass.HIGH_SUBREGULAR
    return RegularityClass.OTHER_IRREGULAR


def classify(g: Graph) -> RegularityClass:
    """Regularity class of a graph (a function of its degree multiset only)."""
    return classify_degree_multiset(g.degrees)


# ---------------------------------------------------------------------------
# Connectivity
# ---------------------------------------------------------------------------

def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the connected components, in increasing vertex order."""
    masks = g.neighbor_masks
    unseen = (1 << g.n) - 1
    components = []
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        reach = 1 << start
        frontier = reach
        while frontier:
            nxt = 0
            f = frontier
            while f:
                lsb = f & -f
                nxt |= masks[lsb.bit_length() - 1]
                f ^= lsb
            frontier = nxt & ~reach
            reach |= nxt
        components.append([v for v in range(g.n) if (reach >> v) & 1])
        unseen &= ~reach
    return components


def is_connected(g: Graph) -> bool:
    """True iff the graph has exactly one connected component."""
    return len(connected_components(g)) == 1


# ---------------------------------------------------------------------------
# Generator families
# ---------------------------------------------------------------------------

def complete(n: int) -> Graph:
    """Complete graph K_n."""
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def cycle(n: int) -> Graph:
    """Cycle C_n (n >= 3)."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph(n, frozenset(tuple(sorted((i, (i + 1) % n))) for i in range(n)))


def path(n: int) -> Graph:
    """Path P_n on n vertices."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def star(n: int) -> Graph:
    """Star on n vertices: center 0 joined to n-1 leaves (K_{1,n-1})."""
    if n < 1:
        raise ValueError(f"star needs n >= 1, got {n}")
    return Graph(n, frozenset((0, i) for i in range(1, n)))


def prism(k: int) -> Graph:
    """Prism over C_k: two k-cycles joined by a perfect matching, 3-regular."""
    if k < 3:
        raise ValueError(f"prism needs k >= 3, got {k}")
    edges = set()
    for i in range(k):
        edges.add(tuple(sorted((i, (i + 1) % k))))
        edges.add(tuple(sorted((k + i, k + (i + 1) % k))))
        edges.add((i, k + i))
    return Graph(2 * k, frozenset(edges))


def subdivide_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Replace edge (u, v) by the path u-w-v through a new vertex w = n."""
    u, v = min(e), max(e)
    if (u, v) not in g.edges:
        raise ValueError(f"edge ({u}, {v}) not in graph")
    w = g.n
    edges = set(g.edges)
    edges.remove((u, v))
    edges.add((u, w))
    edges.add((v, w))
    return Graph(g.n + 1, frozenset(edges))


def subdivided_prism(k: int) -> Graph:
    """Prism over C_k with one edge subdivided; high subregular with max degree 3."""
    return subdivide_edge(prism(k), (0, 1))


# ---------------------------------------------------------------------------
# Canonical forms
# ---------------------------------------------------------------------------
#
# A placement order of the vertices defines a bit string: position k
# contributes one block, the k adjacency bits between the vertex placed at
# position k and the vertices placed at 0..k-1 (most significant bit =
# adjacency to position 0).  The canonical form fixes the ordering that
# maximizes the concatenated string; maximizing it is the same search as
# minimizing the complemented string and keeps the branching tight on
# sparse graphs (dense prefixes collapse ties fast).

def _root_candidates(masks: Sequence[int], n: int) -> list[int]:
    """A canonically chosen vertex class to start the ordering search from.

    Iterated degree/neighborhood refinement yields a stable coloring whose
    color ids are isomorphism-invariant (they are assigned in sorted
    signature order, starting from degrees).  Restricting the first placed
    vertex to the smallest color class (ties broken by color id) keeps the
    canonical string an isomorphism invariant while shrinking the root
    branching from n to the class size.
    """
    colors = [masks[v].bit_count() for v in range(n)]
    nclasses = len(set(colors))
    while nclasses < n:
        sigs = []
        for v in range(n):
            mv = masks[v]
            nb = sorted(colors[u] for u in range(n) if (mv >> u) & 1)
            sigs.append((colors[v], tuple(nb)))
        ids = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        colors = [ids[s] for s in sigs]
        if len(ids) == nclasses:
            break
        nclasses = len(ids)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(colors[v], []).append(v)
    return min(groups.values(), key=lambda vs: (len(vs), colors[vs[0]]))


def _canonical_blocks(masks: Sequence[int], n: int) -> tuple[int, ...]:
    if n == 1:
        return ()
    best: list[int] | None = None
    blocks = [0] * (n - 1)
    vertices = range(n)
    roots = _root_candidates(masks, n)

    def search(depth: int, rem: int, tight: bool, bvec: tuple[int, ...]) -> None:
        # bvec[v] = adjacency bits of v to the already-placed vertices, in
        # placement order (most significant bit = position 0).
        nonlocal best
        if depth:
            maxb = -1
            cands: list[int] = []
            r = rem
            while r:
                lsb = r & -r
                r ^= lsb
                v = lsb.bit_length() - 1
                b = bvec[v]
                if b > maxb:
                    maxb = b
                    cands = [v]
                elif b == maxb:
                    cands.append(v)
            if tight and best is not None:
                ref = best[depth - 1]
                if maxb < ref:
                    return
                tight = maxb == ref
            blocks[depth - 1] = maxb
            if depth == n - 1:
                if best is None or (not tight and blocks > best):
                    best = blocks.copy()
                return
        else:
            cands = roots
        # Candidates whose swap is an automorphism (twins) explore
        # identical subtrees: keep one representative per twin group.
        kept: list[int] = []
        for v in cands:
            mv = masks[v]
            vbit = 1 << v
            for u in kept:
                if not (masks[u] ^ mv) & rem & ~(1 << u) & ~vbit:
                    break
            else:
                kept.append(v)
        for v in kept:
            child = tuple((bvec[u] << 1) | ((masks[u] >> v) & 1) for u in vertices)
            search(depth + 1, rem & ~(1 << v), tight, child)

    search(0, (1 << n) - 1, True, (0,) * n)
    assert best is not None
    return tuple(best)


def _pack_form(n: int, blocks: Sequence[int]) -> bytes:
    total_bits = n * (n - 1) // 2
    acc = 0
    for k, b in enumerate(blocks, start=1):
        acc = (acc << k) | b
    nbytes = (total_bits + 7) // 8
    acc <<= nbytes * 8 - total_bits
    return bytes([n]) + acc.to_bytes(nbytes, "big")


def _form_to_masks(form: bytes) -> list[int]:
    n = form[0]
    total_bits = n * (n - 1) // 2
    acc = int.from_bytes(form[1:], "big") >> (len(form[1:]) * 8 - total_bits) if total_bits else 0
    masks = [0] * n
    shift = total_bits
    for k in range(1, n):
        shift -= k
        b = (acc >> shift) & ((1 << k) - 1)
        for j in range(k):
            if (b >> (k - 1 - j)) & 1:
                masks[k] |= 1 << j
                masks[j] |= 1 << k
    return masks


def _masks_to_graph(masks: Sequence[int]) -> Graph:
    n = len(masks)
    edges = frozenset(
        (j, k) for k in range(n) for j in range(k) if (masks[k] >> j) & 1
    )
    return Graph(n, edges)


def _form_edge_count(form: bytes) -> int:
    return sum(byte.bit_count() for byte in form[1:])


def canonical_form(g: Graph) -> bytes:
    """Canonical byte string: equal byte strings iff the graphs are isomorphic."""
    if g.n > ENUMERATION_CAP:
        raise ValueError(f"canonical form capped at n <= {ENUMERATION_CAP}, got {g.n}")
    return _pack_form(g.n, _canonical_blocks(g.neighbor_masks, g.n))


# ---------------------------------------------------------------------------
# Exhaustive enumeration of isomorphism classes
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _class_forms(n: int) -> tuple[bytes, ...]:
    """Canonical forms of all isomorphism classes on n vertices.

    Classes on n vertices are generated by attaching a new vertex to the
    canonical representative of every class on n-1 vertices in all 2^(n-1)
    ways and deduplicating by canonical form.  Every n-vertex class is
    reached: deleting any one vertex of any representative leaves some
    (n-1)-vertex class.  The result is sorted by (edge count, form).
    """
    if n == 1:
        return (_pack_form(1, ()),)
    seen: set[bytes] = set()
    for parent in _class_forms(n - 1):
        pmasks = _form_to_masks(parent)
        top = n - 1
        for ext in range(1 << top):
            masks = [pm | (((ext >> i) & 1) << top) for i, pm in enumerate(pmasks)]
            masks.append(ext)
            seen.add(_pack_form(n, _canonical_blocks(masks, n)))
    return tuple(sorted(seen, key=lambda f: (_form_edge_count(f), f)))


def enumerate_graphs(
    n: int,
    m: int | None = None,
    connected_only: bool = False,
) -> Iterator[Graph]:
    """Yield one representative per isomorphism class on n vertices.

    The stream is deterministic (sorted by edge count, then canonical
    form).  Optionally filter by edge count and/or connectivity.
    """
    if not 1 <= n <= ENUMERATION_CAP:
        raise ValueError(f"enumeration capped at 1 <= n <= {ENUMERATION_CAP}, got {n}")
    if m is not None and not 0 <= m <= n * (n - 1) // 2:
        raise ValueError(f"edge count {m} out of range for n={n}")
    for form in _class_forms(n):
        if m is not None and _form_edge_count(form) != m:
            continue
        g = _masks_to_graph(_form_to_masks(form))
        if connected_only and not is_connected(g):
            continue
        yield g
