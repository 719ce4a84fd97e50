#!/usr/bin/env python3
"""Teach a household its breakfasts, then serve by name and by least-eaten.

Walks the full daily loop: register the nine kitchen objects, teach seven
setups, serve a few breakfasts across simulated days, and watch the sliding
window drive the least-eaten choice.
"""

from breakfastbot import (
    HouseholdState,
    ObjectClass,
    ServeRequest,
    advance_day,
    eaten_counts,
    history,
    serve,
    teach,
)

state = HouseholdState(stm_days=5, seed=42)

for name in ("milk", "cereal", "apple", "orange", "honey"):
    state.catalog.add(name, ObjectClass.FOOD, graspable=True)
state.catalog.add("cup", ObjectClass.UTENSIL, graspable=True)
state.catalog.add("banana", ObjectClass.FOOD, graspable=False)
state.catalog.add("bowl", ObjectClass.UTENSIL, graspable=False)
state.catalog.add("spoon", ObjectClass.UTENSIL, graspable=False)

setups = [
    ("plain milk", {"milk", "cup"}),
    ("milk with banana", {"milk", "cup", "banana"}),
    ("cereal breakfast", {"milk", "cereal", "spoon", "bowl"}),
    ("banana cereal", {"banana", "milk", "cereal", "spoon", "bowl"}),
    ("honey cereal", {"honey", "milk", "cereal", "spoon", "bowl"}),
    ("honey milk", {"honey", "milk", "cup"}),
    ("fruit mix", {"apple", "orange", "banana"}),
]
for name, objects in setups:
    entry = teach(state, name, objects)
    print(f"taught #{entry.id}: {entry.name}")

print("\n--- serving by name ---")
plan = serve(state, ServeRequest.by_name("cereal breakfast"), state.rng)
print(f"day {plan.day}: {plan.entry_name}")
print(f"  robot fetches: {', '.join(plan.robot_fetches)}")
print(f"  user fetches:  {', '.join(plan.user_fetches)}")

print("\n--- a few days pass ---")
for name in ("plain milk", "plain milk", "fruit mix"):
    serve(state, ServeRequest.by_name(name), state.rng)
    advance_day(state)

print(f"window counts per option: {eaten_counts(state)}")
plan = serve(state, ServeRequest.least_eaten(), state.rng)
print(f"least-eaten pick: {plan.entry_name}")

print("\n--- window history ---")
for day, label, objects in history(state):
    print(f"  day {day}: {label:18s} {', '.join(objects)}")
