"""Exact planar predicates and plane-drawing verification.

Coordinates are :class:`fractions.Fraction` values; floats never reach a
decision. Turn signs follow the order-type convention used everywhere in
this package: a clockwise (right) turn is ``+1``, a counterclockwise (left)
turn is ``-1``, with the y-axis pointing up.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import TYPE_CHECKING, Hashable, Iterable, Mapping, NamedTuple, Sequence

from .errors import MissingLabel

if TYPE_CHECKING:
    from .chirotope import Chirotope
    from .reduction import LabeledGraph, SgeInstance


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    def __str__(self):
        return f"({self.x}, {self.y})"


Placement = Mapping[Hashable, Point]


def _exact(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating-point coordinates are not accepted; use int, Fraction or str")
    return Fraction(value)


def point(x, y) -> Point:
    """Build a :class:`Point` from ints, Fractions or rational strings like ``"3/4"``."""
    return Point(_exact(x), _exact(y))


def as_point(p) -> Point:
    if isinstance(p, Point):
        return p
    x, y = p
    return point(x, y)


def make_placement(items: Mapping | Iterable) -> dict[Hashable, Point]:
    """Normalize a mapping (or pair iterable) of label -> coordinates."""
    pairs = items.items() if isinstance(items, Mapping) else items
    return {label: as_point(p) for label, p in pairs}


def orientation(p, q, r) -> int:
    """Turn sign of ``p -> q -> r``: ``+1`` right, ``-1`` left, ``0`` collinear."""
    det = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    if det > 0:
        return -1
    if det < 0:
        return 1
    return 0


def on_segment(p, a, b) -> bool:
    """True if ``p`` lies on the closed segment ``ab``."""
    if orientation(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segments_cross(a, b, c, d) -> bool:
    """True if the open segments ``ab`` and ``cd`` cross at a single interior point."""
    return (orientation(a, b, c) * orientation(a, b, d) < 0
            and orientation(c, d, a) * orientation(c, d, b) < 0)


def affine_image(p, src: Sequence, dst: Sequence) -> Point:
    """Image of ``p`` under the affine map sending triangle ``src`` onto ``dst``.

    The map is computed through barycentric coordinates, so it is exact.
    """
    (ax, ay), (bx, by), (cx, cy) = (as_point(s) for s in src)
    px, py = as_point(p)
    det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    if det == 0:
        raise ValueError("source triangle is degenerate")
    l1 = ((bx - px) * (cy - py) - (by - py) * (cx - px)) / det
    l2 = ((cx - px) * (ay - py) - (cy - py) * (ax - px)) / det
    l3 = 1 - l1 - l2
    d = [as_point(s) for s in dst]
    return Point(l1 * d[0].x + l2 * d[1].x + l3 * d[2].x,
                 l1 * d[0].y + l2 * d[1].y + l3 * d[2].y)


@dataclass(frozen=True)
class PlaneReport:
    """Outcome of :func:`drawing_is_plane`.

    ``reason`` is one of ``"coincident"``, ``"vertex-on-edge"`` or ``"crossing"``
    and ``witness`` names the offending pair (two labels, a label and an edge,
    or two edges).
    """

    ok: bool
    reason: str | None = None
    witness: tuple | None = None

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "plane"
        return f"{self.reason}: {self.witness}"


@dataclass(frozen=True)
class SgeReport:
    ok: bool
    graph_index: int | None = None
    graph_name: str | None = None
    plane: PlaneReport | None = None

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "all member drawings are plane"
        return f"graph {self.graph_name} (index {self.graph_index}): {self.plane.describe()}"


def _lookup(placement: Placement, labels: Iterable) -> dict:
    pts = {}
    for label in labels:
        try:
            pts[label] = as_point(placement[label])
        except KeyError:
            raise MissingLabel(f"placement has no point for label {label!r}") from None
    return pts


def drawing_is_plane(graph: LabeledGraph, placement: Placement) -> PlaneReport:
    """Check that the straight-line drawing of ``graph`` under ``placement`` is plane.

    Strict reading: distinct labels get distinct points, no vertex lies on a
    closed non-incident edge, and no two edges cross. Checks run in a fixed
    order (label order, then sorted edges) so the reported witness is
    deterministic.
    """
    pts = _lookup(placement, graph.labels)
    seen: dict[Point, Hashable] = {}
    for label in graph.labels:
        p = pts[label]
        if p in seen:
            return PlaneReport(False, "coincident", (seen[p], label))
        seen[p] = label

    edges = graph.sorted_edges()
    for u, w in edges:
        for x in graph.labels:
            if x != u and x != w and on_segment(pts[x], pts[u], pts[w]):
                return PlaneReport(False, "vertex-on-edge", (x, (u, w)))

    for e, f in combinations(edges, 2):
        if set(e) & set(f):
            continue
        if segments_cross(pts[e[0]], pts[e[1]], pts[f[0]], pts[f[1]]):
            return PlaneReport(False, "crossing", (e, f))
    return PlaneReport(True)


def verify_sge(inst: SgeInstance | Sequence[LabeledGraph], placement: Placement) -> SgeReport:
    """Accept iff every member graph is drawn plane under the one placement."""
    graphs = inst.graphs if hasattr(inst, "graphs") else tuple(inst)
    names = inst.names if hasattr(inst, "names") else tuple(str(i) for i in range(len(graphs)))
    for g in graphs:
        _lookup(placement, g.labels)
    for index, (name, g) in enumerate(zip(names, graphs)):
        report = drawing_is_plane(g, placement)
        if not report:
            return SgeReport(False, index, name, report)
    return SgeReport(True)


def order_type_of_points(placement: Placement, labels: Sequence) -> Chirotope:
    """Chirotope of the sub-placement ``labels`` (element ``i`` is ``labels[i]``)."""
    from .chirotope import chirotope_from_points

    pts = _lookup(placement, labels)
    return chirotope_from_points([pts[label] for label in labels])


def mirror(placement: Placement) -> dict[Hashable, Point]:
    """Reflect through the y-axis; negates every turn sign."""
    return {label: Point(-p.x, p.y) for label, p in make_placement(placement).items()}


def convex_hull_points(points: Mapping[Hashable, Point]) -> list:
    """Clockwise hull vertices (labels) of a labeled point set, strict (no collinear hull points).

    Monotone chain; used when extracting a realization from a placement.
    """
    items = sorted(points.items(), key=lambda kv: (kv[1].x, kv[1].y))
    if len(items) < 3:
        return [label for label, _ in items]

    def half(seq):
        chain = []
        for label, p in seq:
            # keep strictly right turns only
            while len(chain) >= 2 and orientation(chain[-2][1], chain[-1][1], p) != 1:
                chain.pop()
            chain.append((label, p))
        return chain

    upper = half(items)
    lower = half(reversed(items))
    hull = upper[:-1] + lower[:-1]
    return [label for label, _ in hull]
