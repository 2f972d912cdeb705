"""Shared test data and independent oracles."""

from __future__ import annotations

import itertools
from fractions import Fraction

from chainfold.chain import PlacedTriangle
from chainfold.exact_geom import Point2, SimplePolygon
from chainfold.polyomino import Polyomino

# the 5 free tetrominoes and 12 free pentominoes as ASCII grids
TETROMINO_GRIDS = {
    "I4": "####",
    "O4": "##\n##",
    "T4": "###\n.#.",
    "S4": ".##\n##.",
    "L4": "#.\n#.\n##",
}

PENTOMINO_GRIDS = {
    "F": ".##\n##.\n.#.",
    "I": "#####",
    "L": "#.\n#.\n#.\n##",
    "N": ".#\n.#\n##\n#.",
    "P": "##\n##\n#.",
    "T": "###\n.#.\n.#.",
    "U": "#.#\n###",
    "V": "#..\n#..\n###",
    "W": "#..\n##.\n.##",
    "X": ".#.\n###\n.#.",
    "Y": ".#\n##\n.#\n.#",
    "Z": "##.\n.#.\n.##",
}


def cell_split_triangles(cell, diagonal: int) -> tuple[PlacedTriangle, PlacedTriangle]:
    """The two placed halves of a cell; diagonal 0 is the anti-diagonal."""
    x, y = cell
    if diagonal == 0:
        return (
            PlacedTriangle((x, y), (x + 1, y), (x, y + 1)),
            PlacedTriangle((x + 1, y + 1), (x, y + 1), (x + 1, y)),
        )
    return (
        PlacedTriangle((x + 1, y), (x + 1, y + 1), (x, y)),
        PlacedTriangle((x, y + 1), (x, y), (x + 1, y + 1)),
    )


def canonical_cycle(cycle) -> tuple:
    """Rotate a cyclic piece sequence so its smallest piece comes first."""
    keyed = [(t.right_angle_corner, t.base_u, t.base_v) for t in cycle]
    k = keyed.index(min(keyed))
    return tuple(cycle[k:] + cycle[:k])


def enumerate_half_square_cycles(p: Polyomino) -> set:
    """Brute force: every valid hinged cycle of half-square triangles tiling p.

    Chooses a split diagonal per cell, then searches all cyclic orders of
    the resulting 2n pieces for ones whose consecutive hinge points
    coincide.  Cycles are canonicalized up to rotation.  Exponential;
    intended for n <= 2.
    """
    cells = sorted(p.cells)
    found = set()
    for combo in itertools.product((0, 1), repeat=len(cells)):
        pieces = []
        for cell, diag in zip(cells, combo):
            pieces.extend(cell_split_triangles(cell, diag))
        first, rest = pieces[0], pieces[1:]
        for perm in itertools.permutations(rest):
            cycle = [first, *perm]
            ok = all(
                cycle[i].base_u == cycle[(i + 1) % len(cycle)].base_v
                for i in range(len(cycle))
            )
            if ok:
                found.add(canonical_cycle(list(cycle)))
    return found


def rational_convex_hull(points) -> SimplePolygon:
    """Monotone-chain convex hull over exact rational points (ccw)."""
    pts = sorted(set((Fraction(x), Fraction(y)) for x, y in points))
    if len(pts) < 3:
        raise ValueError("need at least 3 distinct points")

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise ValueError("points are collinear")
    return SimplePolygon([Point2(x, y) for x, y in hull])


def scale_x(poly: SimplePolygon, k: Fraction) -> SimplePolygon:
    """Anisotropic x-scaling; preserves simplicity and scales area by k."""
    return SimplePolygon([Point2(v.x * k, v.y) for v in poly.vertices])
