"""Single-building pipeline: grow a plan, cut doors, run the facade
automaton, and assemble the voxel model.

Every stage draws from its own named sub-stream of the building seed,
so a change in how many numbers one stage consumes never shifts the
randomness of the stages after it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace

from .assembly import DEFAULT_HEIGHT, MIN_HEIGHT, BuildingModel, assemble
from .doors import (
    DEFAULT_DOOR_MODE,
    DEFAULT_WALL_RULE,
    DOOR_MODES,
    WALL_RULES,
    ConnectivityReport,
    DoorSite,
    connected_components,
    place_doors,
    place_exterior_door,
    repair_connectivity,
    wallify_leftovers,
)
from .facade import CaParams, generate_facades
from .grid import MIN_DIMENSION, Coord, DimensionError, FloorGrid, derive_rng
from .rooms import (
    DEFAULT_MAX_ATTEMPTS,
    Room,
    RoomCountPolicy,
    grow_rooms,
    place_rooms,
)


@dataclass(frozen=True)
class RunConfig:
    """Everything one generation run depends on, validated up front."""
    width: int
    depth: int
    height: int = DEFAULT_HEIGHT
    seed: int | None = None
    room_policy: RoomCountPolicy = RoomCountPolicy()
    max_attempts: int = DEFAULT_MAX_ATTEMPTS
    ca: CaParams = CaParams()
    wall_rule: str = DEFAULT_WALL_RULE
    door_mode: str = DEFAULT_DOOR_MODE

    def validate(self) -> "RunConfig":
        """Check every field against the stage preconditions; returns
        self so calls can chain."""
        if self.width < MIN_DIMENSION:
            raise DimensionError(
                f"width {self.width} is too small (minimum {MIN_DIMENSION})")
        if self.depth < MIN_DIMENSION:
            raise DimensionError(
                f"depth {self.depth} is too small (minimum {MIN_DIMENSION})")
        if self.height < MIN_HEIGHT:
            raise DimensionError(
                f"height {self.height} is too small (minimum {MIN_HEIGHT})")
        if self.max_attempts < 1:
            raise ValueError(
                f"max_attempts {self.max_attempts} must be at least 1")
        if self.wall_rule not in WALL_RULES:
            raise ValueError(
                f"wall rule {self.wall_rule!r} is not one of {WALL_RULES}")
        if self.door_mode not in DOOR_MODES:
            raise ValueError(
                f"door mode {self.door_mode!r} is not one of {DOOR_MODES}")
        return self

    def with_seed(self, seed: int) -> "RunConfig":
        return replace(self, seed=seed)

    def to_dict(self) -> dict:
        return {
            "width": self.width,
            "depth": self.depth,
            "height": self.height,
            "seed": self.seed,
            "rooms": str(self.room_policy),
            "max_attempts": self.max_attempts,
            "ca": {
                "init_glass_probability": self.ca.init_glass_probability,
                "generations": self.ca.generations,
                "glass_sums": sorted(self.ca.glass_sums),
            },
            "door_walls": self.wall_rule,
            "door_mode": self.door_mode,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        """Build a config from a plain dict (the config-file format).
        Unknown keys are rejected so typos fail loudly."""
        data = dict(data)
        ca_data = data.pop("ca", {})
        if not isinstance(ca_data, dict):
            raise ValueError("'ca' must be an object of automaton settings")
        known_ca = {"init_glass_probability", "generations", "glass_sums"}
        bad = set(ca_data) - known_ca
        if bad:
            raise ValueError(f"unknown ca keys: {sorted(bad)}")
        ca_kwargs = dict(ca_data)
        if "glass_sums" in ca_kwargs:
            ca_kwargs["glass_sums"] = frozenset(
                int(v) for v in ca_kwargs["glass_sums"])
        rooms_text = data.pop("rooms", None)
        kwargs: dict = {}
        for key in ("width", "depth", "height", "seed", "max_attempts"):
            if key in data:
                value = data.pop(key)
                kwargs[key] = None if value is None else int(value)
        if "door_walls" in data:
            kwargs["wall_rule"] = str(data.pop("door_walls"))
        if "door_mode" in data:
            kwargs["door_mode"] = str(data.pop("door_mode"))
        if data:
            raise ValueError(f"unknown config keys: {sorted(data)}")
        if "width" not in kwargs or "depth" not in kwargs:
            raise ValueError("config needs both 'width' and 'depth'")
        if rooms_text is not None:
            kwargs["room_policy"] = RoomCountPolicy.parse(str(rooms_text))
        if ca_kwargs:
            kwargs["ca"] = CaParams(**ca_kwargs)
        return cls(**kwargs)


@dataclass
class GenerationResult:
    """Everything produced for one building, plus its provenance."""
    seed: int
    plan: FloorGrid
    rooms: list[Room]
    requested_rooms: int
    placed_doors: list[DoorSite]
    entrance: Coord
    pre_repair_components: int
    report: ConnectivityReport
    model: BuildingModel
    elapsed: float


def generate_plan(config: RunConfig, seed: int) -> tuple[
        FloorGrid, list[Room], list[DoorSite], Coord, int,
        ConnectivityReport, int]:
    """Run the 2D stages: seed rooms, grow, wall off leftovers, place
    doors, carve the entrance, then check and if needed repair
    connectivity. Returns the plan plus per-stage artifacts."""
    grid = FloorGrid(config.width, config.depth)
    count = config.room_policy.count_for(config.width, config.depth)
    rooms = place_rooms(grid, count, derive_rng(seed, "rooms"),
                        config.max_attempts)
    grow_rooms(grid, rooms, derive_rng(seed, "growth"))
    wallify_leftovers(grid)
    placed = place_doors(grid, derive_rng(seed, "doors"), rooms,
                         config.wall_rule, config.door_mode)
    entrance = place_exterior_door(grid, derive_rng(seed, "entrance"))
    pre = connected_components(grid)
    if pre.component_count > 1:
        report = repair_connectivity(grid, derive_rng(seed, "repair"), rooms)
    else:
        report = pre
    return grid, rooms, placed, entrance, pre.component_count, report, count


def generate_building(config: RunConfig, seed: int) -> GenerationResult:
    """The full pipeline for one seed: plan, facades, voxel assembly."""
    start = time.perf_counter()
    (plan, rooms, placed, entrance, pre_components, report,
     requested) = generate_plan(config, seed)
    facades = generate_facades(config.width, config.depth, config.height,
                               config.ca, derive_rng(seed, "facade"))
    model = assemble(plan, facades, config.height)
    elapsed = time.perf_counter() - start
    return GenerationResult(seed, plan, rooms, requested, placed,
                            entrance, pre_components, report, model, elapsed)
