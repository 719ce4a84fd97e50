#!/usr/bin/env python3
"""Inspect the dependency rules inferred from taught setups.

Shows how co-occurrence in seven taught breakfasts turns into per-food
requirements (milk needs a cup, or a spoon and bowl together), how an
incomplete setup fails validation, and how repair completes it.
"""

from breakfastbot import (
    HouseholdState,
    ObjectClass,
    decode,
    encode,
    fix,
    teach,
    validate,
)
from breakfastbot.rules import dump

state = HouseholdState(seed=0)
for name in ("milk", "cereal", "apple", "orange", "honey", "banana"):
    state.catalog.add(name, ObjectClass.FOOD, graspable=name != "banana")
for name in ("cup", "bowl", "spoon"):
    state.catalog.add(name, ObjectClass.UTENSIL, graspable=name == "cup")

for name, objects in [
    ("plain milk", {"milk", "cup"}),
    ("milk with banana", {"milk", "cup", "banana"}),
    ("cereal breakfast", {"milk", "cereal", "spoon", "bowl"}),
    ("banana cereal", {"banana", "milk", "cereal", "spoon", "bowl"}),
    ("honey cereal", {"honey", "milk", "cereal", "spoon", "bowl"}),
    ("honey milk", {"honey", "milk", "cup"}),
    ("fruit mix", {"apple", "orange", "banana"}),
]:
    teach(state, name, objects)

kg = state.knowledge_graph()
print(dump(kg, state.catalog))

print("--- validating {cereal, milk, spoon} ---")
bad = encode({"cereal", "milk", "spoon"}, state.catalog)
report = validate(bad, kg, state.catalog)
print(f"valid: {report.valid}")
for violation in report.violations:
    food = state.catalog.name_of(violation.food_id)
    combos = [
        "{" + ", ".join(state.catalog.name_of(i) for i in combo) + "}"
        for combo in violation.candidates
    ]
    print(f"  {food} is missing a {violation.missing_class}: needs one of {', '.join(combos)}")

fixed = fix(bad, kg, state.catalog)
print(f"repaired: {', '.join(decode(fixed, state.catalog))}")

print("\n--- repair cascades ---")
lonely = encode({"banana"}, state.catalog)
print(f"a lone banana becomes: {', '.join(decode(fix(lonely, kg, state.catalog), state.catalog))}")
