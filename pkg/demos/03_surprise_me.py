#!/usr/bin/env python3
"""Ask for surprises: novel setups sampled from memory and repaired by rules.

Fits the Gaussian to the seven taught setups, then creates ten surprises.
Every output is checked to be new (not taught) and valid (every food has its
required companions). Rerunning with the same seed prints the same ten.
"""

from breakfastbot import (
    HouseholdState,
    ObjectClass,
    create_breakfast,
    decode,
    teach,
    validate,
)

state = HouseholdState(seed=7)
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

model = state.gaussian_model()
print("per-object presence frequency in memory:")
for spec in state.catalog:
    print(f"  {spec.name:8s} {model.mu[spec.id]:.3f}")

print("\nten surprises (seed 7):")
taught = state.memory.patterns(len(state.catalog))
kg = state.knowledge_graph()
for i in range(10):
    lv = create_breakfast(state, state.rng)
    assert lv.bits not in taught
    assert validate(lv, kg, state.catalog).valid
    print(f"  {i + 1:2d}. {', '.join(decode(lv, state.catalog))}")
