"""Tile grid primitives and the seeded randomness used by every stage.

Coordinates are (x, z) pairs with x in [0, width) and z in [0, depth);
the origin sits at one corner of the floor. Tiles are plain ints: any
value >= 0 is a room tile carrying its room id, and the named states
below are negative.
"""

from __future__ import annotations

import hashlib
import random
from typing import Iterator

Coord = tuple[int, int]

EMPTY = -1
EXTERIOR_WALL = -2
INTERIOR_WALL = -3
DOOR = -4
EXTERIOR_DOOR = -5

# Border walls plus room for one 2x2 seed with clearance on every side.
MIN_DIMENSION = 5

_NAMED_TILES = (EMPTY, EXTERIOR_WALL, INTERIOR_WALL, DOOR, EXTERIOR_DOOR)


def is_room(tile: int) -> bool:
    return tile >= 0


def is_wall(tile: int) -> bool:
    return tile == EXTERIOR_WALL or tile == INTERIOR_WALL


def is_passable(tile: int) -> bool:
    """Room tiles, doors, and the entrance can be walked on."""
    return tile >= 0 or tile == DOOR or tile == EXTERIOR_DOOR


class DimensionError(ValueError):
    """A requested grid dimension is below the supported minimum."""


class FloorGrid:
    """Rectangular tile field for a single story.

    The border ring is exterior wall from construction onward; stages only
    ever rewrite interior tiles, except for the one entrance carved into
    the border at the end of the plan stage.
    """

    def __init__(self, width: int, depth: int):
        if width < MIN_DIMENSION:
            raise DimensionError(
                f"width {width} is too small (minimum {MIN_DIMENSION})")
        if depth < MIN_DIMENSION:
            raise DimensionError(
                f"depth {depth} is too small (minimum {MIN_DIMENSION})")
        self.width = width
        self.depth = depth
        # tiles[x][z]
        self.tiles = [[EMPTY] * depth for _ in range(width)]
        for x in range(width):
            self.tiles[x][0] = EXTERIOR_WALL
            self.tiles[x][depth - 1] = EXTERIOR_WALL
        for z in range(depth):
            self.tiles[0][z] = EXTERIOR_WALL
            self.tiles[width - 1][z] = EXTERIOR_WALL

    def in_bounds(self, x: int, z: int) -> bool:
        return 0 <= x < self.width and 0 <= z < self.depth

    def is_border(self, x: int, z: int) -> bool:
        return x == 0 or z == 0 or x == self.width - 1 or z == self.depth - 1

    def get(self, x: int, z: int) -> int:
        if not self.in_bounds(x, z):
            raise IndexError(f"position ({x}, {z}) is outside the grid")
        return self.tiles[x][z]

    def put(self, x: int, z: int, tile: int) -> None:
        if not self.in_bounds(x, z):
            raise IndexError(f"position ({x}, {z}) is outside the grid")
        self.tiles[x][z] = tile

    def neighbors4(self, x: int, z: int) -> list[Coord]:
        """In-bounds orthogonal neighbors of (x, z), never the position
        itself and never a diagonal."""
        if not self.in_bounds(x, z):
            raise IndexError(f"position ({x}, {z}) is outside the grid")
        out = []
        for dx, dz in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            nx, nz = x + dx, z + dz
            if self.in_bounds(nx, nz):
                out.append((nx, nz))
        return out

    def coords(self) -> Iterator[Coord]:
        for x in range(self.width):
            for z in range(self.depth):
                yield (x, z)

    def interior(self) -> Iterator[Coord]:
        for x in range(1, self.width - 1):
            for z in range(1, self.depth - 1):
                yield (x, z)

    def border(self) -> Iterator[Coord]:
        for x, z in self.coords():
            if self.is_border(x, z):
                yield (x, z)

    def count(self, tile: int) -> int:
        return sum(column.count(tile) for column in self.tiles)

    def find(self, tile: int) -> list[Coord]:
        return [(x, z) for x, z in self.coords() if self.tiles[x][z] == tile]

    def room_ids(self) -> list[int]:
        """Sorted ids of the rooms that still occupy at least one tile."""
        return sorted({t for column in self.tiles for t in column if t >= 0})

    def entrance(self) -> Coord | None:
        doors = self.find(EXTERIOR_DOOR)
        return doors[0] if doors else None

    def copy(self) -> "FloorGrid":
        dup = FloorGrid(self.width, self.depth)
        dup.tiles = [column[:] for column in self.tiles]
        return dup

    def validate(self) -> None:
        """Check the border/interior state partition, raising ValueError on
        the first violation. Cheap enough to run after every stage."""
        entrances = 0
        for x, z in self.border():
            t = self.tiles[x][z]
            if t == EXTERIOR_DOOR:
                entrances += 1
            elif t != EXTERIOR_WALL:
                raise ValueError(f"border tile ({x}, {z}) holds state {t}")
        if entrances > 1:
            raise ValueError(f"{entrances} entrances on the border, expected at most 1")
        for x, z in self.interior():
            t = self.tiles[x][z]
            if t < 0 and t not in (EMPTY, INTERIOR_WALL, DOOR):
                raise ValueError(f"interior tile ({x}, {z}) holds state {t}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FloorGrid):
            return NotImplemented
        return (self.width == other.width and self.depth == other.depth
                and self.tiles == other.tiles)

    def __repr__(self) -> str:
        return f"FloorGrid({self.width}x{self.depth})"


def derive_seed(seed: int, *tags: object) -> int:
    """Stable 64-bit seed for a named sub-stream of `seed`.

    Hash-based so that adding draws to one stage never perturbs another,
    and stable across processes (unlike the builtin hash()).
    """
    key = ":".join([str(int(seed))] + [str(t) for t in tags])
    digest = hashlib.blake2b(key.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def derive_rng(seed: int, *tags: object) -> random.Random:
    return random.Random(derive_seed(seed, *tags))
