"""Polyominoes: grid parsing, validation, dual spanning tree, boundary, random growth."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .exact_geom import SimplePolygon, point


class PolyominoError(ValueError):
    """Base class for polyomino model errors."""


class EmptyShape(PolyominoError):
    pass


class Disconnected(PolyominoError):
    pass


class BadCharacter(PolyominoError):
    pass


class HolePresent(PolyominoError):
    pass


class BadSize(PolyominoError):
    pass


class Cell(NamedTuple):
    """Unit grid cell covering [x, x+1] x [y, y+1]."""

    x: int
    y: int


# fixed deterministic neighbor order: East, North, West, South
NEIGHBOR_STEPS = ((1, 0), (0, 1), (-1, 0), (0, -1))


class Polyomino:
    """Non-empty, edge-connected set of unit cells.

    Cells enclosing empty space are legal here; only the outer-boundary
    construction rejects holes.
    """

    __slots__ = ("cells",)

    def __init__(self, cells: Iterable[Cell]):
        cell_set = frozenset(Cell(int(x), int(y)) for x, y in cells)
        if not cell_set:
            raise EmptyShape("polyomino has no cells")
        _check_connected(cell_set)
        object.__setattr__(self, "cells", cell_set)

    def __setattr__(self, name, value):
        raise AttributeError("Polyomino is immutable")

    @property
    def cell_count(self) -> int:
        return len(self.cells)

    def __eq__(self, other):
        return isinstance(other, Polyomino) and self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __repr__(self):
        return f"Polyomino({sorted(self.cells)})"

    def translated_to_origin(self) -> "Polyomino":
        min_x = min(c.x for c in self.cells)
        min_y = min(c.y for c in self.cells)
        return Polyomino(Cell(c.x - min_x, c.y - min_y) for c in self.cells)


def _check_connected(cells: frozenset[Cell]):
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        cx, cy = stack.pop()
        for dx, dy in NEIGHBOR_STEPS:
            nb = Cell(cx + dx, cy + dy)
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if len(seen) != len(cells):
        raise Disconnected(f"{len(cells) - len(seen)} cells unreachable")


def parse_grid(text: str) -> Polyomino:
    """Parse rows of '#' and '.'; the first text row is the top row."""
    rows = [row for row in text.splitlines()]
    while rows and not rows[-1].strip():
        rows.pop()
    while rows and not rows[0].strip():
        rows.pop(0)
    cells = []
    height = len(rows)
    for r, row in enumerate(rows):
        for col, ch in enumerate(row):
            if ch == "#":
                cells.append(Cell(col, height - 1 - r))
            elif ch != ".":
                raise BadCharacter(f"unexpected character {ch!r} in row {r}")
    if not cells:
        raise EmptyShape("grid contains no '#' cells")
    return Polyomino(cells).translated_to_origin()


def to_grid(p: Polyomino) -> str:
    """Inverse of parse_grid: ASCII rows, top row first."""
    min_x = min(c.x for c in p.cells)
    max_x = max(c.x for c in p.cells)
    min_y = min(c.y for c in p.cells)
    max_y = max(c.y for c in p.cells)
    lines = []
    for y in range(max_y, min_y - 1, -1):
        lines.append(
            "".join("#" if Cell(x, y) in p.cells else "." for x in range(min_x, max_x + 1))
        )
    return "\n".join(lines)


def cells_to_json(p: Polyomino) -> dict:
    return {"cells": [[c.x, c.y] for c in sorted(p.cells)]}


def cells_from_json(obj) -> Polyomino:
    if not isinstance(obj, dict) or "cells" not in obj:
        raise BadCharacter("expected an object with a 'cells' array")
    return Polyomino(Cell(int(x), int(y)) for x, y in obj["cells"])


def boundary_polygon(p: Polyomino) -> SimplePolygon:
    """Counterclockwise outer boundary with integer vertices.

    Raises HolePresent when the cells enclose empty space: an enclosed
    region produces a second boundary cycle.
    """
    # directed boundary edges with the owning cell on the left
    edges: dict[tuple[int, int], tuple[int, int]] = {}
    for cx, cy in p.cells:
        if Cell(cx, cy - 1) not in p.cells:
            edges[(cx, cy)] = (cx + 1, cy)
        if Cell(cx + 1, cy) not in p.cells:
            edges[(cx + 1, cy)] = (cx + 1, cy + 1)
        if Cell(cx, cy + 1) not in p.cells:
            edges[(cx + 1, cy + 1)] = (cx, cy + 1)
        if Cell(cx - 1, cy) not in p.cells:
            edges[(cx, cy + 1)] = (cx, cy)
    start = min(edges)
    loop = [start]
    cur = edges.pop(start)
    while cur != start:
        loop.append(cur)
        cur = edges.pop(cur)
    if edges:
        raise HolePresent("cell set encloses empty space")
    # rotate so the lexicographically smallest vertex comes first
    k = loop.index(min(loop))
    loop = loop[k:] + loop[:k]
    return SimplePolygon([point(x, y) for x, y in loop])


class TreeEntry(NamedTuple):
    cell: Cell
    parent: Cell
    edge: tuple[tuple[int, int], tuple[int, int]]  # shared unit edge, endpoints sorted


@dataclass(frozen=True)
class DualSpanningTree:
    """Depth-first spanning tree of the cell adjacency graph, in preorder."""

    root: Cell
    entries: tuple[TreeEntry, ...]


def shared_edge(a: Cell, b: Cell) -> tuple[tuple[int, int], tuple[int, int]]:
    """Endpoints of the unit edge between two edge-adjacent cells, sorted."""
    dx, dy = b.x - a.x, b.y - a.y
    if (dx, dy) == (1, 0):
        pts = ((b.x, b.y), (b.x, b.y + 1))
    elif (dx, dy) == (-1, 0):
        pts = ((a.x, a.y), (a.x, a.y + 1))
    elif (dx, dy) == (0, 1):
        pts = ((b.x, b.y), (b.x + 1, b.y))
    elif (dx, dy) == (0, -1):
        pts = ((a.x, a.y), (a.x + 1, a.y))
    else:
        raise PolyominoError(f"cells {a} and {b} are not edge-adjacent")
    return tuple(sorted(pts))


def dual_spanning_tree(p: Polyomino) -> DualSpanningTree:
    """Deterministic DFS tree: lexicographically smallest root, E/N/W/S visits."""
    root = min(p.cells)
    seen = {root}
    entries = []
    # iterative depth-first search with recursive semantics: a child's whole
    # subtree is explored before the parent's next neighbor is considered
    stack = [(root, iter(NEIGHBOR_STEPS))]
    while stack:
        cell, steps = stack[-1]
        for dx, dy in steps:
            nb = Cell(cell.x + dx, cell.y + dy)
            if nb in p.cells and nb not in seen:
                seen.add(nb)
                entries.append(TreeEntry(nb, cell, shared_edge(nb, cell)))
                stack.append((nb, iter(NEIGHBOR_STEPS)))
                break
        else:
            stack.pop()
    return DualSpanningTree(root, tuple(entries))


def random_polyomino(n: int, seed: int) -> Polyomino:
    """Seeded random growth: repeatedly attach a uniformly chosen boundary cell."""
    if n < 1:
        raise BadSize(f"cell count must be >= 1, got {n}")
    rng = random.Random(seed)
    cells = {Cell(0, 0)}
    frontier = {Cell(dx, dy) for dx, dy in NEIGHBOR_STEPS}
    while len(cells) < n:
        pick = sorted(frontier)[rng.randrange(len(frontier))]
        cells.add(pick)
        frontier.discard(pick)
        for dx, dy in NEIGHBOR_STEPS:
            nb = Cell(pick.x + dx, pick.y + dy)
            if nb not in cells:
                frontier.add(nb)
    return Polyomino(cells).translated_to_origin()
