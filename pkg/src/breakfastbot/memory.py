"""Episodic memory of taught breakfasts and the sliding served-days window.

Episodic memory is the long-term store: one entry per breakfast option the
user taught, never evicted. The short-term memory keeps serving records for
the most recent ``capacity_days`` day indices (today included) and backs the
least-eaten selection: count servings per entry inside the window, take the
argmin set, break ties uniformly with the household RNG.

Surprise servings are kept in the window for history purposes but do not
count toward any entry's total, since the counts are defined over the taught
options only.
"""

from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional, Union

from .conceptspace import ObjectClass, SetupVector, encode
from .errors import (
    DuplicateNameError,
    DuplicateSetupError,
    EmptyMemoryError,
    NoFoodItemError,
    UnknownEntryError,
)
from .rng import ReplayableRNG

if TYPE_CHECKING:
    from .household import HouseholdState


@dataclass(frozen=True)
class EpisodicEntry:
    id: int
    name: str
    lv: SetupVector
    taught_on_day: int


class EpisodicMemory:
    """Ordered, append-only store of user-taught breakfast options."""

    def __init__(self) -> None:
        self.entries: list[EpisodicEntry] = []
        self._by_name: dict[str, int] = {}

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def entry(self, entry_id: int) -> EpisodicEntry:
        if not 0 <= entry_id < len(self.entries):
            raise UnknownEntryError(f"no breakfast entry with id {entry_id}")
        return self.entries[entry_id]

    def find_by_name(self, name: str) -> Optional[EpisodicEntry]:
        entry_id = self._by_name.get(name.strip().casefold())
        return None if entry_id is None else self.entries[entry_id]

    def patterns(self, dim: int) -> set[tuple[int, ...]]:
        """Bit patterns of all entries, zero-extended to ``dim``."""
        return {e.lv.padded(dim).bits for e in self.entries}

    def add(self, name: str, lv: SetupVector, taught_on_day: int) -> EpisodicEntry:
        name = name.strip()
        if not name:
            raise ValueError("breakfast name must be non-empty")
        if name.casefold() in self._by_name:
            raise DuplicateNameError(f"breakfast named {name!r} already taught")
        dim = len(lv)
        if lv.padded(dim).bits in self.patterns(dim):
            raise DuplicateSetupError(
                f"this exact object set was already taught under another name"
            )
        entry = EpisodicEntry(len(self.entries), name, lv, taught_on_day)
        self.entries.append(entry)
        self._by_name[name.casefold()] = entry.id
        return entry


@dataclass(frozen=True)
class ServedRecord:
    """One serving: either a taught entry or a surprise with its vector."""

    day: int
    entry_id: Optional[int] = None
    surprise_lv: Optional[SetupVector] = None

    @property
    def is_surprise(self) -> bool:
        return self.entry_id is None


class ShortTermMemory:
    """Serving records for the ``capacity_days`` most recent day indices."""

    def __init__(self, capacity_days: int) -> None:
        if capacity_days < 1:
            raise ValueError("window must cover at least one day")
        self.capacity_days = capacity_days
        self.records: list[ServedRecord] = []

    def append(self, record: ServedRecord) -> None:
        self.records.append(record)

    def evict(self, current_day: int) -> None:
        """Drop records that fell out of the window ending at current_day."""
        cutoff = current_day - self.capacity_days
        self.records = [r for r in self.records if r.day > cutoff]


def teach(state: "HouseholdState", name: str, object_names) -> EpisodicEntry:
    """Store a named breakfast option taught today.

    The object set must encode to a vector with at least one food bit.
    Raises UnknownObjectError, NoFoodItemError, DuplicateNameError, or
    DuplicateSetupError.
    """
    lv = encode(object_names, state.catalog)
    if not any(
        state.catalog.class_of(i) is ObjectClass.FOOD for i in lv.ids()
    ):
        raise NoFoodItemError("a breakfast must contain at least one food item")
    entry = state.memory.add(name, lv, state.day)
    state.mark_memory_changed()
    return entry


def record_served(state: "HouseholdState", served: Union[int, SetupVector]) -> None:
    """Append a serving under the current day.

    ``served`` is either a taught entry id or the vector of a surprise.
    """
    if isinstance(served, SetupVector):
        record = ServedRecord(day=state.day, surprise_lv=served)
    else:
        state.memory.entry(served)  # raises UnknownEntryError
        record = ServedRecord(day=state.day, entry_id=served)
    state.stm.append(record)


def advance_day(state: "HouseholdState") -> int:
    """Move to the next day and evict out-of-window serving records."""
    state.day += 1
    state.stm.evict(state.day)
    return state.day


def eaten_counts(state: "HouseholdState") -> list[int]:
    """In-window serving counts, one per episodic entry; surprises excluded."""
    counts = [0] * len(state.memory)
    cutoff = state.day - state.stm.capacity_days
    for record in state.stm.records:
        if record.day > cutoff and record.entry_id is not None:
            counts[record.entry_id] += 1
    return counts


def least_eaten(state: "HouseholdState", rng: ReplayableRNG) -> int:
    """Pick an entry with minimal in-window count; ties resolve uniformly."""
    if len(state.memory) == 0:
        raise EmptyMemoryError("no breakfast options taught yet")
    counts = eaten_counts(state)
    low = min(counts)
    candidates = [i for i, c in enumerate(counts) if c == low]
    if len(candidates) == 1:
        return candidates[0]
    return candidates[rng.pick_index(len(candidates))]
