"""Folding the 2n-piece triangle cycle onto polyominoes.

Every cell of an n-omino is covered by two complementary half-square
triangles.  The construction keeps one cyclic sequence of placed
triangles: the root cell is split across its anti-diagonal, and each
further cell is spliced into the cycle at a hinge already sitting on a
corner of its attachment edge.  The pieces spliced in for a cell always
leave hinges at two diagonally opposite corners of that cell, which is
exactly what guarantees the next splice can find a hinge.  The result
is always the canonical 2n-cycle figure, so equal-area polyominoes
share one figure and therefore one hinged dissection.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .exact_geom import RigidMotion, point
from .figures import Configuration, HingedFigure, canonical_chain_figure
from .polyomino import Cell, Polyomino, dual_spanning_tree, parse_grid

GridPoint = tuple[int, int]


class ChainError(ValueError):
    """Base class for chain-fold errors."""


class BadSplice(ChainError):
    pass


class AreaMismatch(ChainError):
    pass


class UnknownShape(ChainError):
    pass


@dataclass(frozen=True)
class PlacedTriangle:
    """Half-square triangle on the lattice.

    base_u and base_v are the 45-degree (hypotenuse) corners realizing
    local vertices 1 and 2 of the canonical piece; the triple
    (right_angle_corner, base_u, base_v) is counterclockwise.
    """

    right_angle_corner: GridPoint
    base_u: GridPoint
    base_v: GridPoint

    def cell(self) -> Cell:
        """The unit cell this triangle is half of."""
        xs = (self.right_angle_corner[0], self.base_u[0], self.base_v[0])
        ys = (self.right_angle_corner[1], self.base_u[1], self.base_v[1])
        return Cell(min(xs), min(ys))

    def placement(self) -> RigidMotion:
        """Quarter-turn motion carrying the canonical local piece here."""
        cx, cy = self.right_angle_corner
        ux, uy = self.base_u
        return RigidMotion(Fraction(ux - cx), Fraction(uy - cy), point(cx, cy))


def _cross(o: GridPoint, a: GridPoint, b: GridPoint) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _right_angle_corner(cell: Cell, base_u: GridPoint, base_v: GridPoint) -> GridPoint:
    """The corner of the cell making (corner, base_u, base_v) counterclockwise."""
    corners = {
        (cell.x, cell.y),
        (cell.x + 1, cell.y),
        (cell.x + 1, cell.y + 1),
        (cell.x, cell.y + 1),
    }
    for c in corners - {base_u, base_v}:
        if _cross(c, base_u, base_v) > 0:
            return c
    raise BadSplice(f"no counterclockwise corner in {cell} for base {base_u}->{base_v}")


def _cell_corners(cell: Cell) -> set[GridPoint]:
    return {
        (cell.x, cell.y),
        (cell.x + 1, cell.y),
        (cell.x + 1, cell.y + 1),
        (cell.x, cell.y + 1),
    }


def _opposite_corner(cell: Cell, corner: GridPoint) -> GridPoint:
    return (2 * cell.x + 1 - corner[0], 2 * cell.y + 1 - corner[1])


@dataclass(frozen=True)
class PartialFold:
    """Cyclic sequence of placed triangles built so far.

    Hinge i sits between triangles i and i+1 (mod length) at the point
    triangles[i].base_u, which always equals triangles[i+1].base_v.
    """

    triangles: tuple[PlacedTriangle, ...]
    occupied: frozenset[Cell]

    def hinge_point(self, index: int) -> GridPoint:
        return self.triangles[index].base_u

    def hinge_occurrences(self, pt: GridPoint) -> list[int]:
        return [i for i, t in enumerate(self.triangles) if t.base_u == pt]


def base_fold(root: Cell) -> PartialFold:
    """Two complementary triangles across the root cell's anti-diagonal.

    Hinges end up at the lattice points (x+1, y) and (x, y+1).
    """
    x, y = root
    sw = PlacedTriangle((x, y), (x + 1, y), (x, y + 1))
    ne = PlacedTriangle((x + 1, y + 1), (x, y + 1), (x + 1, y))
    return PartialFold((sw, ne), frozenset([root]))


def splice_step(state: PartialFold, hinge_index: int, cell: Cell) -> PartialFold:
    """Insert the two halves of a new cell at an existing hinge.

    The hinge at point u is replaced by two hinges at u with the new
    pieces X (base u* -> u) and Y (base u -> u*) between them, where u*
    is the corner of the cell diagonally opposite u.  The cycle grows by
    two and every previously existing hinge point survives.
    """
    if cell in state.occupied:
        raise BadSplice(f"cell {cell} is already occupied")
    if not (0 <= hinge_index < len(state.triangles)):
        raise BadSplice(f"hinge index {hinge_index} out of range")
    u = state.hinge_point(hinge_index)
    if u not in _cell_corners(cell):
        raise BadSplice(f"hinge at {u} is not a corner of cell {cell}")
    if not any(
        Cell(cell.x + dx, cell.y + dy) in state.occupied
        and u in _cell_corners(Cell(cell.x + dx, cell.y + dy))
        for dx, dy in ((1, 0), (0, 1), (-1, 0), (0, -1))
    ):
        raise BadSplice(f"cell {cell} is not attached at {u}")
    u_star = _opposite_corner(cell, u)
    x_piece = PlacedTriangle(_right_angle_corner(cell, u_star, u), u_star, u)
    y_piece = PlacedTriangle(_right_angle_corner(cell, u, u_star), u, u_star)
    tris = list(state.triangles)
    tris[hinge_index + 1 : hinge_index + 1] = [x_piece, y_piece]
    return PartialFold(tuple(tris), state.occupied | {cell})


@dataclass(frozen=True)
class FoldResult:
    figure: HingedFigure
    config: Configuration
    cell_map: dict  # Cell -> (piece index, piece index), cycle order
    placed: tuple[PlacedTriangle, ...] = ()


def fold_chain(p: Polyomino) -> FoldResult:
    """Deterministic fold of the canonical 2n-cycle onto the polyomino.

    Cells are visited in dual-spanning-tree preorder.  For each new cell
    the splice hinge is chosen at the lexicographically smallest corner
    of the attachment edge carrying a hinge, lowest cycle index first.
    """
    tree = dual_spanning_tree(p)
    state = base_fold(tree.root)
    for entry in tree.entries:
        state = splice_step(state, _pick_hinge(state, entry.edge), entry.cell)

    placements = tuple(t.placement() for t in state.triangles)
    n = p.cell_count
    figure = canonical_chain_figure(n)
    config = Configuration(placements, "exact")
    cell_map: dict[Cell, tuple[int, int]] = {}
    for i, t in enumerate(state.triangles):
        cell = t.cell()
        if cell in cell_map:
            cell_map[cell] = (cell_map[cell][0], i)
        else:
            cell_map[cell] = (i, i)
    return FoldResult(figure, config, cell_map, state.triangles)


def _pick_hinge(state: PartialFold, edge) -> int:
    """Lowest cycle index at the smallest attachment-edge endpoint with a hinge."""
    for endpoint in edge:  # edge endpoints arrive lexicographically sorted
        occurrences = state.hinge_occurrences(endpoint)
        if occurrences:
            return occurrences[0]
    raise BadSplice(f"no hinge at either endpoint of edge {edge}")


@dataclass(frozen=True)
class HingedDissection:
    """One figure with verified configurations folding to two targets."""

    figure: HingedFigure
    config_a: Configuration
    config_b: Configuration
    target_a: Polyomino
    target_b: Polyomino


def dissect_pair(a: Polyomino, b: Polyomino) -> HingedDissection:
    """Hinged dissection between equal-area polyominoes via the shared chain."""
    if a.cell_count != b.cell_count:
        raise AreaMismatch(f"{a.cell_count} cells vs {b.cell_count} cells")
    fold_a = fold_chain(a)
    fold_b = fold_chain(b)
    return HingedDissection(fold_a.figure, fold_a.config, fold_b.config, a, b)


def _glyph_dir():
    return resources.files("chainfold") / "assets" / "glyphs"


def list_sample_shapes() -> list[str]:
    return sorted(
        entry.name[:-4] for entry in _glyph_dir().iterdir() if entry.name.endswith(".txt")
    )


def load_sample_shape(name: str) -> Polyomino:
    """64-cell glyph polyomino from the shipped corpus."""
    path = _glyph_dir() / f"{name}.txt"
    try:
        text = path.read_text(encoding="utf-8")
    except (FileNotFoundError, ValueError) as exc:
        raise UnknownShape(f"no shipped glyph named {name!r}") from exc
    return parse_grid(text)
