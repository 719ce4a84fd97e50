"""Shared fixtures: the canonical nine-object household and its seven setups."""

import pytest

from breakfastbot import HouseholdState, ObjectClass, teach

NINE_OBJECTS = [
    ("milk", ObjectClass.FOOD, True),
    ("cup", ObjectClass.UTENSIL, True),
    ("cereal", ObjectClass.FOOD, True),
    ("apple", ObjectClass.FOOD, True),
    ("orange", ObjectClass.FOOD, True),
    ("honey", ObjectClass.FOOD, True),
    ("banana", ObjectClass.FOOD, False),
    ("bowl", ObjectClass.UTENSIL, False),
    ("spoon", ObjectClass.UTENSIL, False),
]

SEVEN_SETUPS = [
    ("plain milk", {"milk", "cup"}),
    ("milk with banana", {"milk", "cup", "banana"}),
    ("cereal breakfast", {"milk", "cereal", "spoon", "bowl"}),
    ("banana cereal", {"banana", "milk", "cereal", "spoon", "bowl"}),
    ("honey cereal", {"honey", "milk", "cereal", "spoon", "bowl"}),
    ("honey milk", {"honey", "milk", "cup"}),
    ("fruit mix", {"apple", "orange", "banana"}),
]

FIVE_CREATED_SETUPS = [
    {"milk", "banana", "honey", "cup"},
    {"apple", "milk", "cereal", "spoon", "bowl"},
    {"apple", "honey", "milk", "cereal", "spoon", "bowl"},
    {"milk", "cereal", "bowl", "cup", "spoon"},
    {"apple", "milk", "banana", "orange", "cup"},
]


def build_household(seed: int = 0, stm_days: int = 5) -> HouseholdState:
    """The nine-object household with all seven setups taught on day 0."""
    state = HouseholdState(stm_days=stm_days, seed=seed)
    for name, cls, graspable in NINE_OBJECTS:
        state.catalog.add(name, cls, graspable)
    for name, objects in SEVEN_SETUPS:
        teach(state, name, objects)
    return state


def build_catalog_only(seed: int = 0, stm_days: int = 5) -> HouseholdState:
    state = HouseholdState(stm_days=stm_days, seed=seed)
    for name, cls, graspable in NINE_OBJECTS:
        state.catalog.add(name, cls, graspable)
    return state


@pytest.fixture
def household() -> HouseholdState:
    return build_household()


@pytest.fixture
def catalog_only() -> HouseholdState:
    return build_catalog_only()
