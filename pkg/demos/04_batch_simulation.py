#!/usr/bin/env python3
"""Batch generation accounting, small and large.

Runs 50 raw generations against the seven-setup household, then scales to a
25-object household with 20 taught setups (several unconventional, like dry
cereal with no milk) and 200 generations. Each draw is booked as same-as-
memory, a duplicate of an earlier output, or a distinct new option; draws
that needed repair are tallied separately.
"""

from breakfastbot import HouseholdState, ObjectClass, decode, simulate_batch, teach

BASE_FOODS = ["milk", "cereal", "apple", "orange", "honey", "banana"]
BASE_UTENSILS = ["cup", "bowl", "spoon"]
BASE_SETUPS = [
    ("plain milk", {"milk", "cup"}),
    ("milk with banana", {"milk", "cup", "banana"}),
    ("cereal breakfast", {"milk", "cereal", "spoon", "bowl"}),
    ("banana cereal", {"banana", "milk", "cereal", "spoon", "bowl"}),
    ("honey cereal", {"honey", "milk", "cereal", "spoon", "bowl"}),
    ("honey milk", {"honey", "milk", "cup"}),
    ("fruit mix", {"apple", "orange", "banana"}),
]
EXTRA_FOODS = ["yogurt", "peanut butter", "oatmeal", "toast", "jam",
               "butter", "granola", "blueberry", "strawberry", "juice"]
EXTRA_UTENSILS = ["plate", "knife", "glass", "mug", "fork", "napkin"]
EXTRA_SETUPS = [
    ("yogurt snack", {"yogurt", "spoon"}),
    ("pb bowl", {"peanut butter", "bowl", "spoon"}),
    ("dry cereal", {"cereal", "bowl"}),
    ("oatmeal classic", {"oatmeal", "bowl", "spoon"}),
    ("toast and jam", {"toast", "jam", "plate", "knife"}),
    ("buttered toast", {"toast", "butter", "plate", "knife"}),
    ("granola yogurt", {"granola", "yogurt", "bowl", "spoon"}),
    ("berry plate", {"blueberry", "strawberry"}),
    ("morning juice", {"juice", "glass"}),
    ("berry oatmeal", {"oatmeal", "blueberry", "bowl", "spoon"}),
    ("milk in a mug", {"milk", "mug"}),
    ("pb toast", {"toast", "peanut butter", "plate", "knife"}),
    ("just an apple", {"apple"}),
]


def build(foods, utensils, setups, seed):
    state = HouseholdState(seed=seed)
    for name in foods:
        state.catalog.add(name, ObjectClass.FOOD, graspable=True)
    for name in utensils:
        state.catalog.add(name, ObjectClass.UTENSIL, graspable=True)
    for name, objects in setups:
        teach(state, name, objects)
    return state


def show(title, state, stats):
    print(f"--- {title} ---")
    print(f"requested:          {stats.requested}")
    print(f"same as memory:     {stats.same_as_memory}")
    print(f"invalid before fix: {stats.invalid_before_fix}")
    print(f"duplicate new:      {stats.duplicate_new}")
    print(f"distinct new:       {stats.distinct_new}")
    for lv in stats.outputs[:8]:
        print(f"  new option: {', '.join(decode(lv, state.catalog))}")
    if len(stats.outputs) > 8:
        print(f"  ... and {len(stats.outputs) - 8} more")
    print()


small = build(BASE_FOODS, BASE_UTENSILS, BASE_SETUPS, seed=3)
show("7 setups, 9 objects, 50 generations", small, simulate_batch(small, small.rng, 50))

large = build(BASE_FOODS + EXTRA_FOODS, BASE_UTENSILS + EXTRA_UTENSILS,
              BASE_SETUPS + EXTRA_SETUPS, seed=3)
show("20 setups, 25 objects, 200 generations", large, simulate_batch(large, large.rng, 200))

unconventional = [lv for lv in simulate_batch(large, large.rng, 100).outputs
                  if "cereal" in decode(lv, large.catalog)
                  and "milk" not in decode(lv, large.catalog)]
print(f"generated cereal-without-milk options: {len(unconventional)}")
for lv in unconventional[:3]:
    print(f"  {', '.join(decode(lv, large.catalog))}")
