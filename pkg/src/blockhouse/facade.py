"""Solid/glass facade mosaics from a neighbor-sum cellular automaton.

Each facade starts as random noise (one cell in four glass) and runs a
fixed number of synchronous generations. A cell's next state looks at
the sum of itself plus its orthogonal neighbors: the cell becomes glass
exactly when that sum lands in the configured set, otherwise solid.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

SOLID = 0
GLASS = 1

# Facades are always generated in this order so that a given seed yields
# the same four matrices no matter how they are later consumed.
FACADE_ORDER = ("north", "east", "south", "west")


@dataclass(frozen=True)
class CaParams:
    """Knobs for the facade automaton; defaults give the classic look."""
    init_glass_probability: float = 0.25
    generations: int = 10
    glass_sums: frozenset[int] = frozenset({2, 3})

    def __post_init__(self):
        if not 0.0 <= self.init_glass_probability <= 1.0:
            raise ValueError(
                f"init_glass_probability {self.init_glass_probability} "
                "is outside [0, 1]")
        if self.generations < 0:
            raise ValueError(f"generations {self.generations} is negative")
        if not frozenset(self.glass_sums) <= frozenset(range(6)):
            raise ValueError(f"glass_sums {set(self.glass_sums)} has values "
                             "outside 0..5")
        # Normalize so callers can pass any iterable of ints.
        object.__setattr__(self, "glass_sums", frozenset(self.glass_sums))


@dataclass
class WallMatrix:
    """One facade's cells: rows[r][c] with row 0 the bottom course and
    column 0 the minimum-coordinate end of the side."""
    height: int
    length: int
    cells: list[list[int]] = field(default_factory=list)

    def __post_init__(self):
        if self.height < 1 or self.length < 1:
            raise ValueError(
                f"wall must be at least 1x1, got {self.height}x{self.length}")
        if not self.cells:
            self.cells = [[SOLID] * self.length for _ in range(self.height)]

    def get(self, row: int, col: int) -> int:
        return self.cells[row][col]

    def glass_count(self) -> int:
        return sum(sum(row) for row in self.cells)

    def rows(self) -> list[str]:
        """Cells as '0'/'1' strings, bottom row first."""
        return ["".join(str(c) for c in row) for row in self.cells]

    @classmethod
    def from_rows(cls, rows: list[str]) -> "WallMatrix":
        cells = [[int(ch) for ch in row] for row in rows]
        return cls(len(cells), len(cells[0]) if cells else 0, cells)


def init_wall(height: int, length: int, params: CaParams,
              rng: random.Random) -> WallMatrix:
    """Random starting wall: each cell is independently glass with the
    configured probability. Cells are drawn row by row, bottom first."""
    cells = [[GLASS if rng.random() < params.init_glass_probability else SOLID
              for _ in range(length)]
             for _ in range(height)]
    return WallMatrix(height, length, cells)


def ca_step(matrix: WallMatrix, params: CaParams) -> WallMatrix:
    """One synchronous generation. Neighbors beyond the edge count as
    solid, which biases glass away from the wall rim."""
    h, l = matrix.height, matrix.length
    old = matrix.cells
    new = [[SOLID] * l for _ in range(h)]
    for r in range(h):
        for c in range(l):
            total = old[r][c]
            if r > 0:
                total += old[r - 1][c]
            if r < h - 1:
                total += old[r + 1][c]
            if c > 0:
                total += old[r][c - 1]
            if c < l - 1:
                total += old[r][c + 1]
            new[r][c] = GLASS if total in params.glass_sums else SOLID
    return WallMatrix(h, l, new)


def generate_wall(height: int, length: int, params: CaParams,
                  rng: random.Random) -> WallMatrix:
    """Initialize a wall and run it for the configured generations."""
    wall = init_wall(height, length, params, rng)
    for _ in range(params.generations):
        wall = ca_step(wall, params)
    return wall


def generate_facades(width: int, depth: int, height: int, params: CaParams,
                     rng: random.Random) -> dict[str, WallMatrix]:
    """The four facades of a width x depth building, keyed by side.

    North/south walls run along x (length = width), east/west along z
    (length = depth). Generation order is fixed (north, east, south,
    west) so the draw sequence is reproducible.
    """
    lengths = {"north": width, "south": width, "east": depth, "west": depth}
    return {side: generate_wall(height, lengths[side], params, rng)
            for side in FACADE_ORDER}
