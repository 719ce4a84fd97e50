"""Object catalog and binary setup vectors.

A household owns a catalog of kitchen objects, each either a food or a
utensil and either graspable by the robot or not. A breakfast setup is a
binary presence vector with one dimension per catalog object (an object is
in the setup or it is not; multiplicity is deliberately not modeled). The
catalog is append-only: object ids are dense and never reused, so vectors
created before an append stay decodable by zero-extension.
"""

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatchError, DuplicateNameError, UnknownObjectError


class ObjectClass(enum.Enum):
    FOOD = "food"
    UTENSIL = "utensil"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ObjectSpec:
    """One registered household object."""

    id: int
    name: str
    object_class: ObjectClass
    graspable: bool


class Catalog:
    """Append-only, case-insensitively unique registry of household objects."""

    def __init__(self) -> None:
        self._objects: list[ObjectSpec] = []
        self._by_name: dict[str, int] = {}

    def __len__(self) -> int:
        return len(self._objects)

    def __iter__(self):
        return iter(self._objects)

    def add(self, name: str, object_class: ObjectClass, graspable: bool) -> int:
        """Register a new object and return its dense id.

        Raises DuplicateNameError when the trimmed name already exists under
        case-insensitive comparison.
        """
        name = name.strip()
        if not name:
            raise ValueError("object name must be non-empty")
        key = name.casefold()
        if key in self._by_name:
            raise DuplicateNameError(f"object named {name!r} already registered")
        object_id = len(self._objects)
        self._objects.append(ObjectSpec(object_id, name, object_class, graspable))
        self._by_name[key] = object_id
        return object_id

    def spec(self, object_id: int) -> ObjectSpec:
        return self._objects[object_id]

    def id_of(self, name: str) -> int:
        try:
            return self._by_name[name.strip().casefold()]
        except KeyError:
            raise UnknownObjectError(f"no object named {name!r}") from None

    def name_of(self, object_id: int) -> str:
        return self._objects[object_id].name

    def class_of(self, object_id: int) -> ObjectClass:
        return self._objects[object_id].object_class

    def food_ids(self) -> tuple[int, ...]:
        return tuple(o.id for o in self._objects if o.object_class is ObjectClass.FOOD)

    def utensil_ids(self) -> tuple[int, ...]:
        return tuple(o.id for o in self._objects if o.object_class is ObjectClass.UTENSIL)


@dataclass(frozen=True)
class SetupVector:
    """Binary presence vector for one breakfast setup.

    Dimension equals the catalog size at creation time. Vectors are
    immutable values: hashable, comparable, and safe to share.
    """

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bits", tuple(self.bits))
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("setup vectors are strictly binary")

    def __len__(self) -> int:
        return len(self.bits)

    @classmethod
    def zeros(cls, dim: int) -> "SetupVector":
        return cls(bits=(0,) * dim)

    @classmethod
    def from_ids(cls, ids, dim: int) -> "SetupVector":
        bits = [0] * dim
        for i in ids:
            bits[i] = 1
        return cls(bits=tuple(bits))

    def ids(self) -> frozenset[int]:
        return frozenset(i for i, b in enumerate(self.bits) if b)

    def padded(self, dim: int) -> "SetupVector":
        """Zero-extend to a larger catalog dimension."""
        if dim < len(self.bits):
            raise DimensionMismatchError(
                f"cannot shrink a setup vector from {len(self.bits)} to {dim}"
            )
        if dim == len(self.bits):
            return self
        return SetupVector(bits=self.bits + (0,) * (dim - len(self.bits)))

    def to_array(self) -> np.ndarray:
        return np.asarray(self.bits, dtype=float)


@dataclass(frozen=True)
class FoodContextView:
    """A setup vector partitioned into its food part and its utensil part.

    ``food_bits[k]`` corresponds to catalog id ``food_index[k]`` (ascending),
    and likewise for utensils. Reassembling both parts reproduces the source
    vector exactly.
    """

    food_bits: tuple[int, ...]
    utensil_bits: tuple[int, ...]
    food_index: tuple[int, ...]
    utensil_index: tuple[int, ...]
    food_ids: frozenset[int] = field(hash=False, compare=False, default=frozenset())
    utensil_ids: frozenset[int] = field(hash=False, compare=False, default=frozenset())

    def reconstruct(self, dim: int) -> SetupVector:
        return SetupVector.from_ids(self.food_ids | self.utensil_ids, dim)


def encode(names, catalog: Catalog) -> SetupVector:
    """Encode a set of object names into a setup vector.

    Repeated names collapse to a single presence bit. Unknown names raise
    UnknownObjectError.
    """
    ids = {catalog.id_of(name) for name in names}
    return SetupVector.from_ids(ids, len(catalog))


def decode(lv: SetupVector, catalog: Catalog) -> list[str]:
    """Decode a setup vector back to object names, ascending by id."""
    _check_dim(lv, catalog)
    return [catalog.name_of(i) for i in sorted(lv.ids())]


def food_context_view(lv: SetupVector, catalog: Catalog) -> FoodContextView:
    """Split a setup vector into food and utensil parts by catalog class."""
    _check_dim(lv, catalog)
    present = lv.ids()
    food_index = catalog.food_ids()
    utensil_index = catalog.utensil_ids()
    return FoodContextView(
        food_bits=tuple(1 if i in present else 0 for i in food_index),
        utensil_bits=tuple(1 if i in present else 0 for i in utensil_index),
        food_index=food_index,
        utensil_index=utensil_index,
        food_ids=frozenset(i for i in food_index if i in present),
        utensil_ids=frozenset(i for i in utensil_index if i in present),
    )


def _check_dim(lv: SetupVector, catalog: Catalog) -> None:
    if len(lv) != len(catalog):
        raise DimensionMismatchError(
            f"vector has {len(lv)} dimensions, catalog has {len(catalog)}"
        )
