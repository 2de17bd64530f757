"""Shared fixtures data and independent oracles for the test suite.

The oracles here work from raw integer/rational cross products and never
call the package's chirotope or hull code.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations, permutations

# Labels h1, h2, h3, a, b, c -> elements 0..5. Clockwise hull h1, h2, h3;
# sweep around h2 is h1, a, c, b, h3; cyclic sweep around a is h1, c, b, h3, h2.
SIX_NAMES = ("h1", "h2", "h3", "a", "b", "c")
SIX_POINTS = [(0, 0), (6, 12), (12, 0), (2, 2), (3, 1), (2, 1)]
H1, H2, H3, A, B, C = range(6)

SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
TRIANGLE_PLUS_ONE = [(0, 0), (3, 0), (0, 3), (1, 1)]
# convex hexagon with integer coordinates
HEXAGON = [(2, 0), (4, 0), (6, 2), (4, 4), (2, 4), (0, 2)]


def cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def in_general_position(pts) -> bool:
    if len(set(pts)) != len(pts):
        return False
    return all(cross(p, q, r) != 0 for p, q, r in combinations(pts, 3))


def random_points(rng: random.Random, n: int, hi: int = 100) -> list[tuple[int, int]]:
    """General-position integer points in ``[0, hi]^2`` (degenerate draws rejected)."""
    while True:
        pts = [(rng.randint(0, hi), rng.randint(0, hi)) for _ in range(n)]
        if in_general_position(pts):
            return pts


def random_triangular_points(rng: random.Random, n: int, hi: int = 100) -> list[tuple[int, int]]:
    """General-position points whose convex hull is the first three points."""
    while True:
        tri = random_points(rng, 3, hi)
        if abs(cross(*tri)) < hi * hi // 4:
            continue
        pts = list(tri)
        s = 1 if cross(*tri) > 0 else -1
        tries = 0
        while len(pts) < n and tries < 10000:
            tries += 1
            p = (rng.randint(0, hi), rng.randint(0, hi))
            inside = all(s * cross(tri[i], tri[(i + 1) % 3], p) > 0 for i in range(3))
            if inside and in_general_position(pts + [p]):
                pts.append(p)
        if len(pts) == n:
            return pts


def brute_hull(pts) -> list[int]:
    """Clockwise hull by testing every ordered pair; starts at the smallest index."""
    n = len(pts)
    succ = {}
    for i, j in permutations(range(n), 2):
        # every other point strictly to the right of i -> j
        if all(cross(pts[i], pts[j], pts[k]) < 0 for k in range(n) if k not in (i, j)):
            succ[i] = j
    start = min(succ)
    hull = [start]
    while succ[hull[-1]] != start:
        hull.append(succ[hull[-1]])
    return hull


def ray_sweep(pts, center: int, start: int) -> list[int]:
    """Counterclockwise angular order of all other points around ``center``, from ``start``."""
    o = pts[center]
    ref = (pts[start][0] - o[0], pts[start][1] - o[1])

    def half(v):
        c = ref[0] * v[1] - ref[1] * v[0]
        d = ref[0] * v[0] + ref[1] * v[1]
        return 0 if c > 0 or (c == 0 and d > 0) else 1

    def cmp(i, j):
        a = (pts[i][0] - o[0], pts[i][1] - o[1])
        b = (pts[j][0] - o[0], pts[j][1] - o[1])
        ha, hb = half(a), half(b)
        if ha != hb:
            return ha - hb
        c = a[0] * b[1] - a[1] * b[0]
        return -1 if c > 0 else 1

    others = [k for k in range(len(pts)) if k != center]
    return sorted(others, key=cmp_to_key(cmp))


def exhaustive_axiom_violations(chi) -> list[tuple]:
    """Every ordered (x, a, b, c, d) violating the exchange axiom, scanned without shortcuts."""
    out = []
    for x in range(chi.n):
        others = [e for e in range(chi.n) if e != x]
        for a, b, c, d in permutations(others, 4):
            terms = {chi(x, a, b) * chi(x, c, d), -chi(x, a, c) * chi(x, b, d), chi(x, a, d) * chi(x, b, c)}
            if not ({-1, 1} <= terms or terms == {0}):
                out.append((x, a, b, c, d))
    return out


def affine(p, m, t):
    x, y = Fraction(p[0]), Fraction(p[1])
    return (m[0][0] * x + m[0][1] * y + t[0], m[1][0] * x + m[1][1] * y + t[1])


# acceptance bookkeeping: (criterion, passed, detail)
ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def record(name: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE_RESULTS.append((name, ok, detail))
    print(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f" -- {detail}" if detail else ""))


def interior_swaps(inst, placement, rng: random.Random, count: int):
    """Up to ``count`` random transpositions of two interior points of one copy
    that change some surrounding sequence of that copy's point set.

    Returns a list of ``(copy, u, w, swapped_placement)``.
    """
    from sgereduce.chirotope import all_surrounding_sequences
    from sgereduce.geometry import order_type_of_points

    meta = inst.meta
    base = {c: all_surrounding_sequences(order_type_of_points(placement, meta.copy_labels(c)))
            for c in (1, 2, 3)}
    candidates = []
    for c in (1, 2, 3):
        for u, w in combinations(meta.interior, 2):
            lu, lw = meta.label(u, c), meta.label(w, c)
            moved = dict(placement)
            moved[lu], moved[lw] = placement[lw], placement[lu]
            seqs = all_surrounding_sequences(order_type_of_points(moved, meta.copy_labels(c)))
            if seqs != base[c]:
                candidates.append((c, u, w, moved))
    return rng.sample(candidates, min(count, len(candidates)))
