"""Gadget construction: wheel graphs, the frame graph and the family of gadgets ``T_v``.

Gadget labels are strings: the frame vertices are ``"t1".."t4"`` and the
copy of source element ``u`` in copy ``i`` is ``"u#i"``. Hull vertices of
each copy are identified with frame vertices, so only interior elements get
copy labels and every gadget has ``3n - 5`` vertices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .chirotope import Chirotope, Hull, convex_hull, normalize_triangular_hull, surrounding_sequence
from .errors import NonTriangularHull, TooSmall

FRAME = ("t1", "t2", "t3", "t4")

# hull (h1, h2, h3) of copy i is glued onto these frame vertices
COPY_FRAMES = {
    1: ("t1", "t4", "t3"),
    2: ("t2", "t4", "t1"),
    3: ("t3", "t4", "t2"),
}


@dataclass(frozen=True)
class LabeledGraph:
    """Simple undirected graph on an ordered label tuple."""

    labels: tuple
    edges: frozenset
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate labels")
        index = {label: i for i, label in enumerate(labels)}
        norm = set()
        for e in self.edges:
            u, w = tuple(e)
            if u == w:
                raise ValueError(f"self-loop at {u!r}")
            if u not in index or w not in index:
                raise ValueError(f"edge {(u, w)!r} uses an unknown label")
            norm.add((u, w) if index[u] < index[w] else (w, u))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_edges(cls, labels: Iterable[Hashable], edges: Iterable[tuple]) -> LabeledGraph:
        return cls(tuple(labels), frozenset(tuple(e) for e in edges))

    def sorted_edges(self) -> list[tuple]:
        idx = self._index
        return sorted(self.edges, key=lambda e: (idx[e[0]], idx[e[1]]))

    def has_edge(self, u, w) -> bool:
        return (u, w) in self.edges or (w, u) in self.edges

    def adjacency(self) -> dict:
        adj = {label: set() for label in self.labels}
        for u, w in self.edges:
            adj[u].add(w)
            adj[w].add(u)
        return adj

    def relabel(self, mapping: dict, labels: Sequence | None = None) -> LabeledGraph:
        new_labels = tuple(labels) if labels is not None else tuple(mapping[x] for x in self.labels)
        return LabeledGraph.from_edges(new_labels, ((mapping[u], mapping[w]) for u, w in self.edges))


@dataclass(frozen=True)
class GadgetMeta:
    """Where each source element lives inside the gadgets.

    ``hull`` is the source hull ``(h1, h2, h3)`` in clockwise order and
    ``interior`` the remaining source elements in increasing order.
    """

    n: int
    hull: tuple[int, int, int]
    frame: tuple[str, ...] = FRAME

    @property
    def interior(self) -> tuple[int, ...]:
        return tuple(u for u in range(self.n) if u not in self.hull)

    def label(self, u: int, copy: int) -> str:
        if u in self.hull:
            return COPY_FRAMES[copy][self.hull.index(u)]
        return f"{u}#{copy}"

    def copy_map(self, copy: int) -> dict[int, str]:
        return {u: self.label(u, copy) for u in range(self.n)}

    def copy_labels(self, copy: int) -> list[str]:
        """Gadget labels of copy ``copy``, indexed by source element."""
        return [self.label(u, copy) for u in range(self.n)]

    def labels(self) -> tuple[str, ...]:
        inner = tuple(f"{u}#{i}" for i in (1, 2, 3) for u in self.interior)
        return self.frame + inner


@dataclass(frozen=True)
class SgeInstance:
    """A family of graphs on one shared label set.

    Reduced instances carry ``meta`` and the digest of the source
    chirotope; hand-built families leave both as ``None``.
    """

    n: int
    labels: tuple
    names: tuple[str, ...]
    graphs: tuple[LabeledGraph, ...]
    meta: GadgetMeta | None = None
    source_digest: str | None = None

    def __post_init__(self):
        if len(self.names) != len(self.graphs):
            raise ValueError("one name per graph required")
        shared = set(self.labels)
        for name, g in zip(self.names, self.graphs):
            if set(g.labels) != shared:
                raise ValueError(f"graph {name} does not span the shared label set")

    @property
    def k(self) -> int:
        return len(self.graphs)

    @classmethod
    def from_graphs(cls, graphs: Sequence[LabeledGraph], names: Sequence[str] | None = None) -> SgeInstance:
        labels = graphs[0].labels
        names = tuple(names) if names is not None else tuple(str(i) for i in range(len(graphs)))
        return cls(len(graphs), labels, names, tuple(graphs))


def _triangular_hull(chi: Chirotope) -> Hull:
    hull = convex_hull(chi)
    if len(hull) != 3:
        raise NonTriangularHull(f"convex hull has {len(hull)} vertices, expected 3")
    return hull


def build_wheel(chi: Chirotope, v: int) -> LabeledGraph:
    """Cycle through ``S(v)`` plus spokes from ``v``; ``2(n-1)`` edges."""
    hull = _triangular_hull(chi)
    order = surrounding_sequence(chi, v, hull).order
    # for a hull center the closing edge h_{i+1} h_{i-1} is a hull edge
    cycle = list(zip(order, order[1:] + order[:1]))
    spokes = [(v, u) for u in order]
    return LabeledGraph.from_edges(range(chi.n), cycle + spokes)


def build_frame() -> LabeledGraph:
    t1, t2, t3, t4 = FRAME
    return LabeledGraph.from_edges(FRAME, [(t1, t2), (t2, t3), (t3, t1), (t4, t1), (t4, t2), (t4, t3)])


def gadget_meta(chi: Chirotope) -> GadgetMeta:
    hull = _triangular_hull(chi)
    return GadgetMeta(chi.n, tuple(hull.vertices))


def build_gadget(chi: Chirotope, v: int, meta: GadgetMeta | None = None) -> tuple[LabeledGraph, GadgetMeta]:
    """Glue three copies of ``W_v`` into the interior faces of the frame."""
    meta = meta if meta is not None else gadget_meta(chi)
    wheel = build_wheel(chi, v)
    edges = set(build_frame().edges)
    for copy in (1, 2, 3):
        m = meta.copy_map(copy)
        edges.update((m[u], m[w]) for u, w in wheel.edges)
    return LabeledGraph.from_edges(meta.labels(), edges), meta


def reduce_to_sge(chi: Chirotope, normalize: bool = False) -> SgeInstance:
    """The family ``{T_v}``: ``n`` graphs on ``3n - 5`` shared labels.

    With ``normalize=True`` a non-triangular hull is first fixed by
    :func:`normalize_triangular_hull`; the instance then encodes the
    reoriented chirotope.
    """
    if normalize:
        chi, _ = normalize_triangular_hull(chi)
    meta = gadget_meta(chi)
    graphs = tuple(build_gadget(chi, v, meta)[0] for v in chi.elements)
    return SgeInstance(chi.n, meta.labels(), tuple(str(v) for v in chi.elements), graphs,
                       meta, chi.digest())


def _connected_without(adj: dict, removed: set) -> bool:
    rest = [x for x in adj if x not in removed]
    if not rest:
        return True
    seen = {rest[0]}
    queue = deque([rest[0]])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen and y not in removed:
                seen.add(y)
                queue.append(y)
    return len(seen) == len(rest)


def is_three_connected(g: LabeledGraph) -> bool:
    """Brute force: no set of at most two vertices disconnects ``g``."""
    if len(g.labels) < 4:
        raise TooSmall("3-connectivity needs at least 4 vertices")
    adj = g.adjacency()
    if not _connected_without(adj, set()):
        return False
    for x in g.labels:
        if not _connected_without(adj, {x}):
            return False
    for x, y in combinations(g.labels, 2):
        if not _connected_without(adj, {x, y}):
            return False
    return True
