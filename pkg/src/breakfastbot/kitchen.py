"""Serving orchestration for the simulated kitchen.

Resolves a request (a named option, the least-eaten pick, or a generated
surprise) into a fetch plan, records the serving, and splits the objects by
graspability: the robot fetches what it can grasp, the user fetches the rest.
Physical failure modes are not simulated; a plan is assumed to succeed.
"""

import enum
from dataclasses import dataclass
from typing import Optional

from . import creativity, memory as memory_mod
from .conceptspace import decode
from .errors import UnknownBreakfastError
from .rng import ReplayableRNG


class ServeMode(enum.Enum):
    BY_NAME = "by_name"
    LEAST_EATEN = "least_eaten"
    SURPRISE = "surprise"


@dataclass(frozen=True)
class ServeRequest:
    mode: ServeMode
    name: Optional[str] = None

    def __post_init__(self) -> None:
        if self.mode is ServeMode.BY_NAME and not (self.name or "").strip():
            raise ValueError("a by-name request needs a breakfast name")

    @classmethod
    def by_name(cls, name: str) -> "ServeRequest":
        return cls(ServeMode.BY_NAME, name)

    @classmethod
    def least_eaten(cls) -> "ServeRequest":
        return cls(ServeMode.LEAST_EATEN)

    @classmethod
    def surprise(cls) -> "ServeRequest":
        return cls(ServeMode.SURPRISE)


@dataclass(frozen=True)
class ServePlan:
    """What goes on the table and who fetches what."""

    source: str  # "episodic" or "created"
    entry_id: Optional[int]
    entry_name: Optional[str]
    objects: tuple[tuple[str, bool], ...]  # (name, graspable), ascending id
    robot_fetches: tuple[str, ...]
    user_fetches: tuple[str, ...]
    day: int


def serve(state, request: ServeRequest, rng: ReplayableRNG) -> ServePlan:
    """Resolve a request to a setup, record it, and plan the fetches."""
    catalog = state.catalog
    if request.mode is ServeMode.BY_NAME:
        entry = state.memory.find_by_name(request.name)
        if entry is None:
            raise UnknownBreakfastError(f"no breakfast named {request.name!r}")
        lv = entry.lv.padded(len(catalog))
        memory_mod.record_served(state, entry.id)
        source, entry_id, entry_name = "episodic", entry.id, entry.name
    elif request.mode is ServeMode.LEAST_EATEN:
        entry_id = memory_mod.least_eaten(state, rng)
        entry = state.memory.entry(entry_id)
        lv = entry.lv.padded(len(catalog))
        memory_mod.record_served(state, entry_id)
        source, entry_name = "episodic", entry.name
    else:
        lv = creativity.create_breakfast(state, rng)
        memory_mod.record_served(state, lv)
        source, entry_id, entry_name = "created", None, None

    objects = tuple(
        (catalog.name_of(i), catalog.spec(i).graspable) for i in sorted(lv.ids())
    )
    return ServePlan(
        source=source,
        entry_id=entry_id,
        entry_name=entry_name,
        objects=objects,
        robot_fetches=tuple(name for name, graspable in objects if graspable),
        user_fetches=tuple(name for name, graspable in objects if not graspable),
        day=state.day,
    )


def history(state) -> list[tuple[int, str, tuple[str, ...]]]:
    """Chronological in-window servings as (day, label, object names)."""
    catalog = state.catalog
    rows = []
    for record in state.stm.records:
        if record.is_surprise:
            label = "surprise"
            lv = record.surprise_lv.padded(len(catalog))
        else:
            entry = state.memory.entry(record.entry_id)
            label = entry.name
            lv = entry.lv.padded(len(catalog))
        rows.append((record.day, label, tuple(decode(lv, catalog))))
    return rows
