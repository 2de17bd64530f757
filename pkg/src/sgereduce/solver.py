"""Both directions of the reduction's correctness plus small brute-force searches.

``embed_from_realization`` turns a point set realizing the source order type
into a placement of the reduced instance; ``extract_realization`` goes back
from any accepted placement to a point set. ``grid_realize`` and
``brute_force_sge`` are exhaustive searches over integer grids, meant for
desk-sized instances only. A ``None`` from either search means nothing was
found on that grid, not that no solution exists: some order types need
coordinates far larger than any fixed grid.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Hashable, Sequence

import numpy as np

from .chirotope import Chirotope, chirotope_from_points, convex_hull
from .errors import (
    DegenerateInput,
    DegenerateRealization,
    InstanceTooLarge,
    NonTriangularHull,
    NoMutualFace,
    NotAcyclic,
    RealizationMismatch,
)
from .geometry import (
    Placement,
    Point,
    affine_image,
    as_point,
    convex_hull_points,
    on_segment,
    point,
    segments_cross,
)
from .reduction import COPY_FRAMES, LabeledGraph, SgeInstance, gadget_meta

log = logging.getLogger(__name__)

# clockwise outer triangle, t4 at its centroid
FRAME_COORDS = {
    "t1": point(0, 0),
    "t2": point(12, 24),
    "t3": point(24, 0),
    "t4": point(12, 8),
}


@dataclass(frozen=True)
class GridSpec:
    """Integer grid ``[0, bound]^2``."""

    bound: int

    def __post_init__(self):
        if self.bound < 1:
            raise ValueError("grid bound must be at least 1")


def _bound(grid) -> int:
    return grid.bound if isinstance(grid, GridSpec) else GridSpec(int(grid)).bound


def embed_from_realization(chi: Chirotope, points: Sequence, inst: SgeInstance | None = None
                           ) -> dict[str, Point]:
    """Place the reduced instance from a realization ``points`` of ``chi``.

    Each copy is the affine image of ``points`` sending the hull triangle
    onto that copy's frame face, clockwise to clockwise.
    """
    pts = [as_point(p) for p in points]
    try:
        got = chirotope_from_points(pts)
    except DegenerateInput as exc:
        raise RealizationMismatch(f"points are degenerate: {exc}") from None
    if got != chi:
        raise RealizationMismatch("points do not realize the chirotope")
    hull = convex_hull(chi)
    if len(hull) != 3:
        raise NonTriangularHull(f"convex hull has {len(hull)} vertices, expected 3")
    meta = inst.meta if inst is not None and inst.meta is not None else gadget_meta(chi)
    if inst is not None and inst.source_digest not in (None, chi.digest()):
        raise RealizationMismatch("instance was reduced from a different chirotope")

    src = [pts[h] for h in meta.hull]
    placement = dict(FRAME_COORDS)
    for copy in (1, 2, 3):
        dst = [FRAME_COORDS[t] for t in COPY_FRAMES[copy]]
        for u in meta.interior:
            placement[meta.label(u, copy)] = affine_image(pts[u], src, dst)
    return {label: placement[label] for label in meta.labels()}


def extract_realization(inst: SgeInstance, placement: Placement) -> tuple[list[Point], Chirotope]:
    """Read a realization of the source order type off an accepted placement.

    The convex hull of the placement bounds a face shared by all gadgets.
    If it is the frame triangle, copy 1 is used; otherwise the face lies
    inside one copy's region and the lowest-numbered other copy is used.
    The returned chirotope is the source ``chi`` or its mirror ``-chi``.
    """
    if inst.meta is None:
        raise NoMutualFace("instance carries no gadget bookkeeping")
    meta = inst.meta
    pts = {label: as_point(placement[label]) for label in inst.labels}
    outer = set(convex_hull_points(pts))

    if outer == {"t1", "t2", "t3"}:
        chosen = 1
    else:
        host = [c for c in (1, 2, 3) if outer <= set(meta.copy_labels(c))]
        if not host:
            raise NoMutualFace(f"outer face {sorted(outer)} lies in no single copy")
        chosen = min(c for c in (1, 2, 3) if c != host[0])
    log.debug("outer face %s, extracting copy %d", sorted(outer), chosen)

    labels = meta.copy_labels(chosen)
    copy_pts = [pts[label] for label in labels]
    try:
        chi = chirotope_from_points(copy_pts)
    except DegenerateInput as exc:
        raise DegenerateRealization(f"copy {chosen} is degenerate: {exc}") from None
    return copy_pts, chi


def _placement_order(chi: Chirotope) -> list[int]:
    hull = convex_hull(chi)
    return list(hull) + [e for e in chi.elements if e not in hull]


def grid_realize(chi: Chirotope, grid: GridSpec | int, max_nodes: int | None = None) -> list[Point] | None:
    """First realization of ``chi`` on the integer grid, or ``None``.

    Hull vertices are placed first, then interior elements in label order;
    candidates are scanned lexicographically by ``(x, y)``. After each
    placement the candidate sets of all unplaced elements are narrowed by
    every newly decided triple (forward checking), and the branch is cut as
    soon as one of them is empty. ``max_nodes`` caps the number of
    placements tried.
    """
    g = _bound(grid)
    try:
        order = _placement_order(chi)
    except NotAcyclic:
        return None
    side = np.arange(g + 1, dtype=np.int64)
    gx = np.repeat(side, g + 1)
    gy = np.tile(side, g + 1)
    n = chi.n
    pos: dict[int, tuple[int, int]] = {}
    nodes = 0

    def turn_mask(p, q, want):
        # grid points r with orientation(p, q, r) == want
        det = (q[0] - p[0]) * (gy - p[1]) - (q[1] - p[1]) * (gx - p[0])
        return det < 0 if want == 1 else det > 0

    def search(depth, masks):
        nonlocal nodes
        if depth == n:
            return True
        e = order[depth]
        placed = order[:depth]
        for idx in np.flatnonzero(masks[e]):
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                raise _Budget
            p = (int(gx[idx]), int(gy[idx]))
            new = {}
            ok = True
            for f in order[depth + 1:]:
                m = masks[f].copy()
                if depth == 0:
                    m[idx] = False
                for i in placed:
                    m &= turn_mask(pos[i], p, chi(i, e, f))
                if not m.any():
                    ok = False
                    break
                new[f] = m
            if not ok:
                continue
            pos[e] = p
            if search(depth + 1, new):
                return True
            del pos[e]
        return False

    full = np.ones(gx.shape, dtype=bool)
    try:
        found = search(0, {e: full for e in order})
    except _Budget:
        log.debug("grid_realize: node budget %s exhausted", max_nodes)
        return None
    if not found:
        return None
    result = [point(*pos[e]) for e in range(n)]
    assert chirotope_from_points(result) == chi
    return result


class _Budget(Exception):
    pass


def _search_order(labels: Sequence, graphs: Sequence[LabeledGraph]) -> list:
    union: dict = {label: set() for label in labels}
    for g in graphs:
        for u, w in g.edges:
            union[u].add(w)
            union[w].add(u)
    index = {label: i for i, label in enumerate(labels)}
    order = [max(labels, key=lambda x: (len(union[x]), -index[x]))]
    rest = set(labels) - set(order)
    while rest:
        placed = set(order)
        nxt = max(rest, key=lambda x: (len(union[x] & placed), len(union[x]), -index[x]))
        order.append(nxt)
        rest.remove(nxt)
    return order


def brute_force_sge(inst: SgeInstance | Sequence[LabeledGraph], grid: GridSpec | int,
                    guard: int = 8) -> dict[Hashable, Point] | None:
    """Exhaustive search for a simultaneous plane placement on the grid.

    Labels are assigned distinct grid points one at a time (most-connected
    label first); each assignment is checked only against already placed
    vertices and edges of the same member graph. Returns the first
    solution in this deterministic order, or ``None``.
    """
    graphs = list(inst.graphs) if hasattr(inst, "graphs") else list(inst)
    labels = list(inst.labels) if hasattr(inst, "labels") else list(graphs[0].labels)
    for gr in graphs:
        if set(gr.labels) != set(labels):
            raise ValueError("member graphs must share one label set")
    if len(labels) > guard:
        raise InstanceTooLarge(f"{len(labels)} labels exceed the guard of {guard}")
    g = _bound(grid)
    cells = [(x, y) for x in range(g + 1) for y in range(g + 1)]
    order = _search_order(labels, graphs)
    adjs = [gr.adjacency() for gr in graphs]

    pos: dict = {}
    used: set = set()
    placed_edges: list[list[tuple]] = [[] for _ in graphs]

    def fits(x, p):
        for gi, adj in enumerate(adjs):
            for a, b in placed_edges[gi]:
                if on_segment(p, pos[a], pos[b]):
                    return False
            for y in adj[x]:
                if y not in pos:
                    continue
                q = pos[y]
                for z, r in pos.items():
                    if z != y and on_segment(r, p, q):
                        return False
                for a, b in placed_edges[gi]:
                    if a == y or b == y:
                        continue
                    if segments_cross(p, q, pos[a], pos[b]):
                        return False
        return True

    def search(depth):
        if depth == len(order):
            return True
        x = order[depth]
        for p in cells:
            if p in used or not fits(x, p):
                continue
            pos[x] = p
            used.add(p)
            added = []
            for gi, adj in enumerate(adjs):
                for y in adj[x]:
                    if y in pos and y != x:
                        placed_edges[gi].append((x, y))
                        added.append(gi)
            if search(depth + 1):
                return True
            for gi in added:
                placed_edges[gi].pop()
            used.discard(p)
            del pos[x]
        return False

    if not search(0):
        return None
    return {label: point(*pos[label]) for label in labels}


def order_type_classes(n: int, grid: GridSpec | int) -> dict[tuple[int, ...], Chirotope]:
    """Enumerate ``n``-point general-position subsets of the grid, bucketed by order type.

    Keys are canonical sign vectors: the lexicographically smallest over all
    relabelings of ``chi`` and ``-chi``. Values are the first chirotope seen
    in each class.
    """
    g = _bound(grid)
    cells = [(x, y) for x in range(g + 1) for y in range(g + 1)]
    perms = list(permutations(range(n)))
    canon_cache: dict[tuple[int, ...], tuple[int, ...]] = {}
    classes: dict[tuple[int, ...], Chirotope] = {}
    for subset in combinations(cells, n):
        try:
            chi = chirotope_from_points(subset)
        except DegenerateInput:
            continue
        key = canon_cache.get(chi.signs)
        if key is None:
            key = canonical_key(chi, perms)
            canon_cache[chi.signs] = key
        classes.setdefault(key, chi)
    return classes


def canonical_key(chi: Chirotope, perms: Sequence[Sequence[int]] | None = None) -> tuple[int, ...]:
    """Smallest sign vector over relabelings of ``chi`` and ``-chi``."""
    perms = perms if perms is not None else list(permutations(range(chi.n)))
    return min(c.relabel(p).signs for c in (chi, -chi) for p in perms)
