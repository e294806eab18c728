"""Structured triangulation of the unit square and wavenumber-driven resolution."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

# Boundary side tags, counter-clockwise from the bottom edge.
BOTTOM, RIGHT, TOP, LEFT = 0, 1, 2, 3
SIDE_NAMES = ("bottom", "right", "top", "left")

# Outward unit normals indexed by side tag.
OUTWARD_NORMALS = np.array([[0.0, -1.0], [1.0, 0.0], [0.0, 1.0], [-1.0, 0.0]])


class ResolutionLimitError(ValueError):
    """Requested wavenumber needs more cells than the configured maximum."""


@dataclass(frozen=True)
class Mesh2D:
    """Uniform triangulation of (0,1)^2: each grid square is split by the
    bottom-left -> top-right diagonal, so all elements are congruent right
    triangles with legs 1/c and diameter h = sqrt(2)/c.

    Node indexing is row-major: node (i, j) at (i/c, j/c) has index
    j*(c+1) + i.  Triangles are counter-clockwise.
    """

    cells_per_side: int
    nodes: np.ndarray = field(repr=False)            # (n_nodes, 2)
    triangles: np.ndarray = field(repr=False)        # (2c^2, 3) int32
    boundary_edges: np.ndarray = field(repr=False)   # (4c, 2) int32
    boundary_sides: np.ndarray = field(repr=False)   # (4c,) int8 side tags

    @property
    def h(self) -> float:
        return math.sqrt(2.0) / self.cells_per_side

    @property
    def n_nodes(self) -> int:
        return (self.cells_per_side + 1) ** 2

    def node_index(self, i: int, j: int) -> int:
        return j * (self.cells_per_side + 1) + i

    def node_grid_coords(self, index: int) -> tuple[int, int]:
        n1 = self.cells_per_side + 1
        return index % n1, index // n1


def build_unit_square_mesh(c: int) -> Mesh2D:
    """Build the c x c structured mesh (2c^2 triangles, (c+1)^2 nodes)."""
    if c < 1:
        raise ValueError(f"cells_per_side must be >= 1, got {c}")
    n1 = c + 1
    xs = np.arange(n1) / c
    xv, yv = np.meshgrid(xs, xs, indexing="xy")
    nodes = np.column_stack([xv.ravel(), yv.ravel()])

    ii, jj = np.meshgrid(np.arange(c), np.arange(c), indexing="xy")
    bl = (jj * n1 + ii).ravel()
    br = bl + 1
    tl = bl + n1
    tr = tl + 1
    # lower triangle (bl, br, tr), upper triangle (bl, tr, tl); both CCW
    triangles = np.empty((2 * c * c, 3), dtype=np.int32)
    triangles[0::2] = np.column_stack([bl, br, tr])
    triangles[1::2] = np.column_stack([bl, tr, tl])

    r = np.arange(c)
    bottom = np.column_stack([r, r + 1])
    right = np.column_stack([r * n1 + c, (r + 1) * n1 + c])
    top = np.column_stack([c * n1 + r, c * n1 + r + 1])
    left = np.column_stack([r * n1, (r + 1) * n1])
    edges = np.concatenate([bottom, right, top, left]).astype(np.int32)
    sides = np.repeat(np.array([BOTTOM, RIGHT, TOP, LEFT], dtype=np.int8), c)

    return Mesh2D(c, nodes, triangles, edges, sides)


def choose_resolution(
    k: float,
    grid_m: int,
    gamma: float = 1.5,
    mesh_constant: float = 1.0,
    max_cells: int = 5000,
) -> int:
    """Smallest multiple c of grid_m with sqrt(2)/c <= mesh_constant * k^-gamma.

    Keeping c a multiple of the coefficient grid keeps piecewise-constant
    coefficients constant on every element, so assembly is exact.
    """
    if k <= 0:
        raise ValueError(f"wavenumber must be positive, got {k}")
    if grid_m < 1:
        raise ValueError(f"grid_m must be >= 1, got {grid_m}")
    target = mesh_constant * k ** (-gamma)
    c = grid_m * math.ceil(math.sqrt(2.0) / (target * grid_m))
    # guard against float-edge ceil errors around exact multiples
    while c > grid_m and math.sqrt(2.0) / (c - grid_m) <= target:
        c -= grid_m
    while math.sqrt(2.0) / c > target:
        c += grid_m
    if c > max_cells:
        raise ResolutionLimitError(
            f"k={k} needs c={c} > max_cells={max_cells}; "
            "raise max_cells only if memory allows"
        )
    return c
