"""The persisted household aggregate.

One HouseholdState owns everything that must survive a restart: the object
catalog, the taught breakfasts, the serving window, the day counter, and the
random source's (seed, draw counter) position. It persists as a single
versioned JSON document in which every setup is stored as a sorted list of
object names and re-encoded on load, so files stay valid as the catalog
grows. Writes go to a temp file first and are renamed into place.
"""

import json
import os
import tempfile
from pathlib import Path
from typing import Optional, Union

from . import memory as memory_mod, rules as rules_mod
from .conceptspace import Catalog, ObjectClass, SetupVector, decode, encode
from .creativity import GaussianModel, fit_gaussian
from .errors import StateFormatError, StateLockedError
from .memory import EpisodicMemory, ServedRecord, ShortTermMemory
from .rng import ALGORITHM, ReplayableRNG
from .rules import KnowledgeGraph

SCHEMA_VERSION = 1
DEFAULT_STM_DAYS = 5
STATE_FILENAME = "household.json"


class HouseholdState:
    def __init__(self, stm_days: int = DEFAULT_STM_DAYS, seed: int = 0) -> None:
        self.catalog = Catalog()
        self.memory = EpisodicMemory()
        self.stm = ShortTermMemory(stm_days)
        self.day = 0
        self.rng = ReplayableRNG(seed)
        self._graph_cache: Optional[tuple[tuple[int, int], KnowledgeGraph]] = None
        self._model_cache: Optional[tuple[tuple[int, int], GaussianModel]] = None

    # -- derived, memoized views -------------------------------------------

    def _cache_key(self) -> tuple[int, int]:
        return (len(self.memory), len(self.catalog))

    def mark_memory_changed(self) -> None:
        self._graph_cache = None
        self._model_cache = None

    def knowledge_graph(self) -> KnowledgeGraph:
        key = self._cache_key()
        if self._graph_cache is None or self._graph_cache[0] != key:
            self._graph_cache = (key, rules_mod.infer_rules(self.memory, self.catalog))
        return self._graph_cache[1]

    def gaussian_model(self) -> GaussianModel:
        key = self._cache_key()
        if self._model_cache is None or self._model_cache[0] != key:
            self._model_cache = (key, fit_gaussian(self.memory, self.catalog))
        return self._model_cache[1]

    # -- persistence ---------------------------------------------------------

    def to_dict(self) -> dict:
        records = []
        for record in self.stm.records:
            if record.is_surprise:
                names = decode(
                    record.surprise_lv.padded(len(self.catalog)), self.catalog
                )
                records.append({"day": record.day, "surprise": sorted(names)})
            else:
                records.append({"day": record.day, "breakfast": record.entry_id})
        return {
            "schema_version": SCHEMA_VERSION,
            "stm_days": self.stm.capacity_days,
            "day": self.day,
            "rng": {
                "algorithm": ALGORITHM,
                "seed": self.rng.seed,
                "draws": self.rng.draws,
            },
            "catalog": [
                {
                    "name": spec.name,
                    "class": spec.object_class.value,
                    "graspable": spec.graspable,
                }
                for spec in self.catalog
            ],
            "breakfasts": [
                {
                    "name": entry.name,
                    "objects": sorted(
                        decode(entry.lv.padded(len(self.catalog)), self.catalog)
                    ),
                    "taught_on_day": entry.taught_on_day,
                }
                for entry in self.memory
            ],
            "served": records,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "HouseholdState":
        try:
            if data["schema_version"] != SCHEMA_VERSION:
                raise StateFormatError(
                    f"unsupported schema version {data['schema_version']!r}"
                )
            state = cls(stm_days=data["stm_days"], seed=data["rng"]["seed"])
            state.rng.draws = int(data["rng"]["draws"])
            state.day = int(data["day"])
            for obj in data["catalog"]:
                state.catalog.add(
                    obj["name"], ObjectClass(obj["class"]), bool(obj["graspable"])
                )
            for item in data["breakfasts"]:
                lv = encode(item["objects"], state.catalog)
                state.memory.add(item["name"], lv, int(item["taught_on_day"]))
            for rec in data["served"]:
                if "surprise" in rec:
                    lv = encode(rec["surprise"], state.catalog)
                    state.stm.append(ServedRecord(day=int(rec["day"]), surprise_lv=lv))
                else:
                    state.stm.append(
                        ServedRecord(day=int(rec["day"]), entry_id=int(rec["breakfast"]))
                    )
        except (KeyError, TypeError, ValueError) as exc:
            raise StateFormatError(f"malformed household state: {exc}") from exc
        return state

    def save(self, path: Union[str, Path]) -> None:
        """Atomic write: serialize to a sibling temp file, then rename."""
        path = Path(path)
        payload = json.dumps(self.to_dict(), indent=2) + "\n"
        fd, tmp_name = tempfile.mkstemp(
            dir=path.parent, prefix=path.name, suffix=".tmp"
        )
        try:
            with os.fdopen(fd, "w") as handle:
                handle.write(payload)
                handle.flush()
                os.fsync(handle.fileno())
            os.replace(tmp_name, path)
        except BaseException:
            if os.path.exists(tmp_name):
                os.unlink(tmp_name)
            raise

    @classmethod
    def load(cls, path: Union[str, Path]) -> "HouseholdState":
        with open(path) as handle:
            return cls.from_dict(json.load(handle))


# -- advisory service lock ----------------------------------------------------
#
# The HTTP service drops a pid file next to the state file while it runs; the
# CLI refuses to touch a state file whose lock points at a live process.


def lock_path(state_path: Union[str, Path]) -> Path:
    return Path(str(state_path) + ".lock")


def acquire_service_lock(state_path: Union[str, Path]) -> Path:
    path = lock_path(state_path)
    ensure_unlocked(state_path)
    path.write_text(str(os.getpid()))
    return path


def release_service_lock(state_path: Union[str, Path]) -> None:
    lock_path(state_path).unlink(missing_ok=True)


def ensure_unlocked(state_path: Union[str, Path]) -> None:
    """Raise StateLockedError if a live service holds this state file."""
    path = lock_path(state_path)
    if not path.exists():
        return
    try:
        pid = int(path.read_text().strip())
    except ValueError:
        path.unlink(missing_ok=True)  # unreadable lock: treat as stale
        return
    try:
        os.kill(pid, 0)
    except OSError:
        path.unlink(missing_ok=True)  # holder is gone
        return
    raise StateLockedError(
        f"state file is in use by a running service (pid {pid})"
    )
