"""Abstract order types (uniform rank-3 chirotopes) on labels ``0..n-1``.

Only the signs of lexicographic triples ``i < j < k`` are stored; every
other ordering is derived by alternation. ``chi(a, b, c) == +1`` means
``a -> b -> c`` is a right (clockwise) turn.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field
from functools import cmp_to_key
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import (
    DegenerateInput,
    InconsistentInput,
    NoConsistentCycle,
    NotAcyclic,
    NotOnHull,
    OnHull,
    SearchExhausted,
)
from .geometry import as_point, orientation


def lex_triples(n: int) -> list[tuple[int, int, int]]:
    return list(combinations(range(n), 3))


@dataclass(frozen=True)
class Chirotope:
    """Sign map on triples of ``n`` elements in general position.

    ``signs`` lists the values of the lexicographic triples in
    :func:`lex_triples` order. Instances are callable: ``chi(a, b, c)``.
    """

    n: int
    signs: tuple[int, ...]
    _table: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("a chirotope needs at least 3 elements")
        signs = tuple(int(s) for s in self.signs)
        expected = self.n * (self.n - 1) * (self.n - 2) // 6
        if len(signs) != expected:
            raise ValueError(f"expected {expected} signs for n={self.n}, got {len(signs)}")
        if any(s not in (-1, 1) for s in signs):
            raise DegenerateInput("signs must be +1 or -1 (general position)")
        object.__setattr__(self, "signs", signs)

        n = self.n
        table = [0] * (n * n * n)
        for (i, j, k), s in zip(lex_triples(n), signs):
            for a, b, c, t in ((i, j, k, s), (j, k, i, s), (k, i, j, s),
                               (j, i, k, -s), (i, k, j, -s), (k, j, i, -s)):
                table[(a * n + b) * n + c] = t
        object.__setattr__(self, "_table", tuple(table))

    @classmethod
    def from_function(cls, n: int, chi) -> Chirotope:
        return cls(n, tuple(chi(i, j, k) for i, j, k in lex_triples(n)))

    def __call__(self, a: int, b: int, c: int) -> int:
        n = self.n
        return self._table[(a * n + b) * n + c]

    def __neg__(self) -> Chirotope:
        return Chirotope(self.n, tuple(-s for s in self.signs))

    @property
    def elements(self) -> range:
        return range(self.n)

    def sign_string(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)

    def digest(self) -> str:
        text = f"{self.n}:{self.sign_string()}"
        return hashlib.sha256(text.encode()).hexdigest()[:16]

    def relabel(self, perm: Sequence[int]) -> Chirotope:
        """Chirotope ``chi'`` with ``chi'(a, b, c) = chi(perm[a], perm[b], perm[c])``."""
        return Chirotope.from_function(self.n, lambda a, b, c: self(perm[a], perm[b], perm[c]))

    def restrict(self, elements: Sequence[int]) -> Chirotope:
        """Sub-chirotope on ``elements`` (new element ``i`` is ``elements[i]``)."""
        return Chirotope.from_function(
            len(elements), lambda a, b, c: self(elements[a], elements[b], elements[c]))


def chirotope_from_points(points: Sequence) -> Chirotope:
    """Order type of a planar point list; element ``i`` is ``points[i]``."""
    pts = [as_point(p) for p in points]
    n = len(pts)
    if n < 3:
        raise ValueError("need at least 3 points")
    for i, j in combinations(range(n), 2):
        if pts[i] == pts[j]:
            k = next(k for k in range(n) if k not in (i, j))
            raise DegenerateInput(f"points {i} and {j} coincide", tuple(sorted((i, j, k))))
    signs = []
    for i, j, k in lex_triples(n):
        s = orientation(pts[i], pts[j], pts[k])
        if s == 0:
            raise DegenerateInput(f"points {i}, {j}, {k} are collinear", (i, j, k))
        signs.append(s)
    return Chirotope(n, tuple(signs))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    witness: tuple[int, int, int, int, int] | None = None
    message: str = ""

    def __bool__(self):
        return self.ok


def validate_chirotope(chi: Chirotope) -> ValidationReport:
    """Check general position and the 5-element exchange axiom.

    For each ``x`` and ``a < b < c < d`` (all distinct from ``x``) the three
    products ``chi(x,a,b)chi(x,c,d)``, ``-chi(x,a,c)chi(x,b,d)``,
    ``chi(x,a,d)chi(x,b,c)`` must include both signs. Reordering ``a..d``
    only permutes and negates the three terms together, so sorted
    quadruples suffice.
    """
    if any(s not in (-1, 1) for s in chi.signs):
        return ValidationReport(False, None, "zero sign present")
    n = chi.n
    for x in range(n):
        others = [e for e in range(n) if e != x]
        for a, b, c, d in combinations(others, 4):
            terms = {chi(x, a, b) * chi(x, c, d),
                     -chi(x, a, c) * chi(x, b, d),
                     chi(x, a, d) * chi(x, b, c)}
            if terms != {-1, 1}:
                return ValidationReport(
                    False, (x, a, b, c, d), f"exchange axiom fails at x={x}, (a,b,c,d)={(a, b, c, d)}")
    return ValidationReport(True)


@dataclass(frozen=True)
class Hull:
    """Clockwise convex hull, rotated to start at its smallest label."""

    vertices: tuple[int, ...]

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, v):
        return v in self.vertices

    def __getitem__(self, i):
        return self.vertices[i]

    def prev(self, h: int) -> int:
        i = self.vertices.index(h)
        return self.vertices[i - 1]

    def next(self, h: int) -> int:
        i = self.vertices.index(h)
        return self.vertices[(i + 1) % len(self.vertices)]

    @classmethod
    def canonical(cls, vertices: Sequence[int]) -> Hull:
        vs = tuple(vertices)
        i = vs.index(min(vs))
        return cls(vs[i:] + vs[:i])


def positive_circuit(chi: Chirotope) -> tuple[int, int, int, int] | None:
    """A 4-subset whose circuit signs all agree, or ``None`` if the marking is acyclic.

    The circuit on ``{a,b,c,d}`` has signs
    ``(chi(b,c,d), -chi(a,c,d), chi(a,b,d), -chi(a,b,c))``; for a point
    configuration they are never all equal.
    """
    for a, b, c, d in combinations(range(chi.n), 4):
        sig = {chi(b, c, d), -chi(a, c, d), chi(a, b, d), -chi(a, b, c)}
        if len(sig) == 1:
            return (a, b, c, d)
    return None


def convex_hull(chi: Chirotope) -> Hull:
    """Clockwise hull ``h_1..h_t``: ``chi(h_i, h_{i+1}, v) = +1`` for every other ``v``."""
    circuit = positive_circuit(chi)
    if circuit is not None:
        raise NotAcyclic(f"elements {circuit} form a positive circuit")
    n = chi.n
    succ: dict[int, int] = {}
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            if all(chi(a, b, v) == 1 for v in range(n) if v != a and v != b):
                if a in succ:
                    raise NotAcyclic(f"element {a} has two hull successors")
                succ[a] = b
    if len(succ) < 3:
        raise NotAcyclic("no hull cycle")
    start = min(succ)
    cycle = [start]
    while True:
        nxt = succ.get(cycle[-1])
        if nxt is None:
            raise NotAcyclic(f"hull chain breaks at {cycle[-1]}")
        if nxt == start:
            break
        if nxt in cycle:
            raise NotAcyclic("hull edges do not close into one cycle")
        cycle.append(nxt)
    if len(cycle) != len(succ):
        raise NotAcyclic("hull edges form several cycles")
    return Hull(tuple(cycle))


@dataclass(frozen=True)
class SurroundingSequence:
    """Counterclockwise ray-sweep order of the other elements around ``center``.

    ``kind == "hull"``: linear order from the previous hull vertex to the next.
    ``kind == "internal"``: cyclic order, stored starting at the smallest label.
    """

    center: int
    kind: str
    order: tuple[int, ...]

    def position(self, x: int) -> int:
        return self.order.index(x)

    def rotated(self, start: int) -> tuple[int, ...]:
        """Linear order read from ``start`` (internal sequences only make sense here)."""
        i = self.order.index(start)
        return self.order[i:] + self.order[:i]


def _sorted_around(chi: Chirotope, center: int, items: Iterable[int]) -> list[int]:
    def cmp(u, w):
        return -chi(u, center, w)

    return sorted(items, key=cmp_to_key(cmp))


def hull_surrounding_sequence(chi: Chirotope, h: int, hull: Hull | None = None) -> SurroundingSequence:
    hull = hull if hull is not None else convex_hull(chi)
    if h not in hull:
        raise NotOnHull(f"element {h} is not on the convex hull")
    order = _sorted_around(chi, h, (v for v in chi.elements if v != h))
    if any(chi(u, h, w) != 1 for u, w in zip(order, order[1:])):
        raise NoConsistentCycle(f"no consistent sweep order around hull vertex {h}")
    if order[0] != hull.prev(h) or order[-1] != hull.next(h):
        raise NoConsistentCycle(f"sweep around {h} does not start and end at its hull neighbours")
    return SurroundingSequence(h, "hull", tuple(order))


def internal_surrounding_sequence(chi: Chirotope, v: int, hull: Hull | None = None) -> SurroundingSequence:
    hull = hull if hull is not None else convex_hull(chi)
    if v in hull:
        raise OnHull(f"element {v} is on the convex hull")
    others = [u for u in chi.elements if u != v]
    start = others[0]
    ahead = [w for w in others[1:] if chi(start, v, w) == 1]
    behind = [w for w in others[1:] if chi(start, v, w) == -1]
    if not ahead or not behind:
        raise NoConsistentCycle(f"element {v} sees everything on one side of {start}")
    order = [start] + _sorted_around(chi, v, ahead) + _sorted_around(chi, v, behind)
    cyc = order + order[:1]
    if any(chi(a, v, b) != 1 for a, b in zip(cyc, cyc[1:])):
        raise NoConsistentCycle(f"no consistent cyclic order around {v}")
    return SurroundingSequence(v, "internal", tuple(order))


def surrounding_sequence(chi: Chirotope, v: int, hull: Hull | None = None) -> SurroundingSequence:
    hull = hull if hull is not None else convex_hull(chi)
    if v in hull:
        return hull_surrounding_sequence(chi, v, hull)
    return internal_surrounding_sequence(chi, v, hull)


def all_surrounding_sequences(chi: Chirotope, hull: Hull | None = None) -> dict[int, SurroundingSequence]:
    hull = hull if hull is not None else convex_hull(chi)
    return {v: surrounding_sequence(chi, v, hull) for v in chi.elements}


def pivot_index(seq: SurroundingSequence, chi: Chirotope, start: int | None = None) -> int:
    """1-based pivot ``p`` of an internal sequence read from ``start``.

    Raises ``ValueError`` if the signs ``chi(v_1, center, v_j)`` are not a
    block of ``+1`` followed by a block of ``-1`` with both blocks non-empty.
    """
    order = seq.rotated(start) if start is not None else seq.order
    signs = [chi(order[0], seq.center, w) for w in order[1:]]
    p = 1
    while p - 1 < len(signs) and signs[p - 1] == 1:
        p += 1
    if p == 1 or p - 1 == len(signs) or any(s != -1 for s in signs[p - 1:]):
        raise ValueError("no unique pivot")
    return p


def reconstruct_chirotope(hull: Hull | Sequence[int],
                          sequences: Mapping[int, SurroundingSequence] | Sequence[SurroundingSequence]
                          ) -> Chirotope:
    """Recover ``chi`` from the convex hull and all surrounding sequences.

    Triples touching a hull vertex ``h`` are read off ``S(h)``: ``chi(u,h,w)``
    is ``+1`` iff ``u`` precedes ``w``. For three interior elements ``u,v,w``:
    if some hull vertex sees ``u`` and ``w`` on the same side of ``v``, read
    ``S(v)`` from that vertex; otherwise pick ``h`` seeing ``u, v, w`` in this
    order and read ``S(u)`` from ``h`` (``-1`` iff ``v`` precedes ``w``).
    """
    hull = Hull.canonical(hull.vertices if isinstance(hull, Hull) else hull)
    if isinstance(sequences, Mapping):
        seqs = dict(sequences)
    else:
        seqs = {s.center: s for s in sequences}
    n = len(seqs)
    if sorted(seqs) != list(range(n)) or n < 3:
        raise InconsistentInput("need exactly one sequence per element 0..n-1")
    if not 3 <= len(hull) <= n or len(set(hull.vertices)) != len(hull) or any(h not in seqs for h in hull):
        raise InconsistentInput("hull must list 3..n distinct elements")
    for c, s in seqs.items():
        if sorted(s.order) != [e for e in range(n) if e != c]:
            raise InconsistentInput(f"sequence of {c} is not an ordering of the other elements")
        if (s.kind == "hull") != (c in hull):
            raise InconsistentInput(f"sequence kind of {c} disagrees with hull membership")

    pos = {c: {x: i for i, x in enumerate(s.order)} for c, s in seqs.items()}
    m = n - 1

    def before_from(center, ref, x, y):
        # x precedes y in S(center) read cyclically from ref
        p = pos[center]
        return (p[x] - p[ref]) % m < (p[y] - p[ref]) % m

    def hull_case(a, b, c):
        if b in hull:                       # chi(u, h, w)
            return 1 if pos[b][a] < pos[b][c] else -1
        if a in hull:                       # chi(h, v, w) = chi(w, h, v)
            return 1 if pos[a][c] < pos[a][b] else -1
        return 1 if pos[c][b] < pos[c][a] else -1   # chi(u, v, h) = chi(v, h, u)

    def interior_case(u, v, w):
        for h in hull:
            p = pos[h]
            if (p[u] < p[v]) == (p[w] < p[v]):
                return 1 if before_from(v, h, u, w) else -1
        for h in hull:
            p = pos[h]
            if p[u] < p[v] < p[w]:
                return -1 if before_from(u, h, v, w) else 1
            if p[w] < p[v] < p[u]:
                # chi(u, v, w) = -chi(w, v, u)
                return 1 if before_from(w, h, v, u) else -1
        raise InconsistentInput(f"no case of the reconstruction applies to {(u, v, w)}")

    signs = []
    for a, b, c in lex_triples(n):
        if a in hull or b in hull or c in hull:
            signs.append(hull_case(a, b, c))
        else:
            signs.append(interior_case(a, b, c))
    chi = Chirotope(n, tuple(signs))

    try:
        got_hull = convex_hull(chi)
        got = all_surrounding_sequences(chi, got_hull)
    except (NotAcyclic, NoConsistentCycle) as exc:
        raise InconsistentInput(f"sequences do not describe an order type: {exc}") from None
    if got_hull != hull:
        raise InconsistentInput("reconstructed hull differs from the given hull")
    for c, s in seqs.items():
        g = got[c]
        if (g.order if s.kind == "hull" else g.rotated(s.order[0])) != s.order:
            raise InconsistentInput(f"sequence of {c} is inconsistent with the other sequences")
    return chi


def reorient(chi: Chirotope, flipped: Iterable[int]) -> Chirotope:
    """Negate every triple meeting ``flipped`` an odd number of times."""
    r = frozenset(flipped)
    return Chirotope(chi.n, tuple(
        s * (-1) ** ((a in r) + (b in r) + (c in r))
        for (a, b, c), s in zip(lex_triples(chi.n), chi.signs)))


def is_acyclic(chi: Chirotope) -> bool:
    try:
        convex_hull(chi)
    except NotAcyclic:
        return False
    return True


def normalize_triangular_hull(chi: Chirotope) -> tuple[Chirotope, frozenset[int]]:
    """Reorient ``chi`` so that its convex hull is a triangle.

    Breadth-first search over single-element flips, visiting only acyclic
    reorientations and expanding flips in increasing label order. Returns
    the first triangular-hull chirotope found and the flipped set.
    """
    start = frozenset()
    if len(convex_hull(chi)) == 3:
        return chi, start
    seen = {start}
    queue = deque([start])
    while queue:
        r = queue.popleft()
        for e in chi.elements:
            nxt = r ^ {e}
            if nxt in seen:
                continue
            seen.add(nxt)
            cand = reorient(chi, nxt)
            try:
                hull = convex_hull(cand)
            except NotAcyclic:
                continue
            if len(hull) == 3:
                return cand, frozenset(nxt)
            queue.append(nxt)
    raise SearchExhausted("no reorientation with a triangular hull")
