"""Dependency rules inferred from taught breakfasts, plus validation and repair.

For each food that occurs in memory, the inference looks only at the setups
containing that food and asks, separately for utensils and for other foods:

* may the food appear with no companion of this class at all? (``none_ok``:
  true when at least one of its setups has none)
* which companion combinations does it rely on otherwise? Companions whose
  occurrences never overlap any other companion's stand alone as singleton
  alternatives; companions that always appear together (identical support,
  i.e. pairwise conditional probability 1 in both directions) form one
  combined alternative.

Partially correlated companions fit neither pattern and are dropped from the
inferred alternatives, so every setup additionally contributes its exact
observed companion set as a witness alternative. Witnesses guarantee that the
teaching data always validates against the rules built from it.

A setup is valid when it contains at least one food and every present food
with a rule meets both requirements: some utensil alternative fully present
(or ``none_ok``), and, for the food side, some companion food present (or
``none_ok``). The food-side check is deliberately presence-based rather than
combination-based: a food that was always taught alongside others needs
company, but pinning it to the exact taught companions would reject
reasonable mixes the generator produces. The taught combination sets still
steer repair, which completes the alternative needing the fewest additions.
"""

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .conceptspace import (
    Catalog,
    FoodContextView,
    ObjectClass,
    SetupVector,
    food_context_view,
)
from .errors import (
    DimensionMismatchError,
    FoodUnseenError,
    NoFoodItemError,
    SameItemError,
    UnsatisfiableError,
)

Combo = frozenset[int]


@dataclass(frozen=True)
class RequiredCombos:
    """Alternative companion combinations for one food and one object class.

    ``inferred`` holds the combinations derived from the co-occurrence
    analysis, ``witnesses`` the exact companion sets observed in the teaching
    data. Satisfying any single combination suffices; when ``none_ok`` is
    true the requirement passes outright and the combinations are advisory.
    """

    none_ok: bool
    inferred: frozenset[Combo] = frozenset()
    witnesses: frozenset[Combo] = frozenset()

    @property
    def combos(self) -> frozenset[Combo]:
        return self.inferred | self.witnesses


@dataclass(frozen=True)
class DependencyRule:
    food: int
    utensils: RequiredCombos
    foods: RequiredCombos


@dataclass(frozen=True)
class KnowledgeGraph:
    """Per-food requirement rules, rebuilt from scratch after memory changes."""

    rules: Mapping[int, DependencyRule]
    built_from: int

    def rule_for(self, food_id: int) -> Optional[DependencyRule]:
        return self.rules.get(food_id)


@dataclass(frozen=True)
class Violation:
    food_id: int
    missing_class: ObjectClass
    candidates: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    has_food: bool
    violations: tuple[Violation, ...] = ()
    untaught_foods: tuple[int, ...] = ()


def conditional_prob(
    j: int, l: int, restricted_views: Sequence[FoodContextView]
) -> Optional[float]:
    """P(item j present | item l present) over the given restricted setups.

    With binary presence values this is the co-occurrence count of j and l
    divided by the occurrence count of l. Returns None (undefined) when l
    never occurs. ``j`` and ``l`` must be distinct items of the same class.
    """
    if j == l:
        raise SameItemError("conditional probability needs two distinct items")
    denom = 0
    joint = 0
    for view in restricted_views:
        present = view.food_ids | view.utensil_ids
        if l in present:
            denom += 1
            if j in present:
                joint += 1
    if denom == 0:
        return None
    return joint / denom


def no_companion_prob(
    i: int,
    companion_class: ObjectClass,
    views: Sequence[FoodContextView],
) -> float:
    """Fraction of setups containing food i that have no companion of a class.

    For the food class, i itself is not its own companion. Raises
    FoodUnseenError when i occurs in no setup.
    """
    containing = [v for v in views if i in v.food_ids]
    if not containing:
        raise FoodUnseenError(f"food id {i} occurs in no setup")
    bare = sum(1 for v in containing if not _companions(v, i, companion_class))
    return bare / len(containing)


def _companions(view: FoodContextView, food_id: int, cls: ObjectClass) -> frozenset[int]:
    if cls is ObjectClass.UTENSIL:
        return view.utensil_ids
    return view.food_ids - {food_id}


def _infer_part(
    food_id: int, cls: ObjectClass, restricted: Sequence[FoodContextView]
) -> RequiredCombos:
    companion_sets = [_companions(v, food_id, cls) for v in restricted]
    none_ok = any(not s for s in companion_sets)

    support: dict[int, frozenset[int]] = {}
    for q, companions in enumerate(companion_sets):
        for c in companions:
            support[c] = support.get(c, frozenset()) | {q}

    inferred: set[Combo] = set()
    items = sorted(support)
    for j in items:
        if all(support[j].isdisjoint(support[l]) for l in items if l != j):
            inferred.add(frozenset({j}))
    by_support: dict[frozenset[int], list[int]] = {}
    for j in items:
        by_support.setdefault(support[j], []).append(j)
    for group in by_support.values():
        if len(group) >= 2:
            inferred.add(frozenset(group))

    witnesses = {frozenset(s) for s in companion_sets if s}
    return RequiredCombos(
        none_ok=none_ok,
        inferred=frozenset(inferred),
        witnesses=frozenset(witnesses),
    )


def infer_rules(memory, catalog: Catalog) -> KnowledgeGraph:
    """Build the dependency rules from every taught setup.

    ``memory`` is an EpisodicMemory (or any iterable of entries with an
    ``lv``). Only foods get rules; utensils exist solely to accompany foods.
    """
    dim = len(catalog)
    views = [food_context_view(entry.lv.padded(dim), catalog) for entry in memory]
    seen_foods = sorted({i for v in views for i in v.food_ids})
    rules = {}
    for food_id in seen_foods:
        restricted = [v for v in views if food_id in v.food_ids]
        rules[food_id] = DependencyRule(
            food=food_id,
            utensils=_infer_part(food_id, ObjectClass.UTENSIL, restricted),
            foods=_infer_part(food_id, ObjectClass.FOOD, restricted),
        )
    return KnowledgeGraph(rules=rules, built_from=len(views))


def _utensil_requirement_met(rc: RequiredCombos, present: frozenset[int]) -> bool:
    return rc.none_ok or any(combo <= present for combo in rc.combos)


def _food_requirement_met(rc: RequiredCombos, companion_foods: frozenset[int]) -> bool:
    return rc.none_ok or bool(companion_foods)


def _sorted_candidates(rc: RequiredCombos) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(c)) for c in rc.combos))


def validate(lv: SetupVector, kg: KnowledgeGraph, catalog: Catalog) -> ValidationReport:
    """Check a setup against the rules.

    Invalid when no food is present or when any present food with a rule has
    an unmet requirement. Present foods that were never taught carry no rule
    and pass, flagged in ``untaught_foods``.
    """
    view = food_context_view(lv, catalog)
    present = lv.ids()
    has_food = bool(view.food_ids)
    violations: list[Violation] = []
    untaught: list[int] = []
    for food_id in sorted(view.food_ids):
        rule = kg.rule_for(food_id)
        if rule is None:
            untaught.append(food_id)
            continue
        if not _utensil_requirement_met(rule.utensils, present):
            violations.append(
                Violation(food_id, ObjectClass.UTENSIL, _sorted_candidates(rule.utensils))
            )
        if not _food_requirement_met(rule.foods, view.food_ids - {food_id}):
            violations.append(
                Violation(food_id, ObjectClass.FOOD, _sorted_candidates(rule.foods))
            )
    return ValidationReport(
        valid=has_food and not violations,
        has_food=has_food,
        violations=tuple(violations),
        untaught_foods=tuple(untaught),
    )


def _first_unmet(
    present: set[int], kg: KnowledgeGraph, catalog: Catalog
) -> Optional[RequiredCombos]:
    foods_present = frozenset(
        i for i in present if catalog.class_of(i) is ObjectClass.FOOD
    )
    frozen = frozenset(present)
    for food_id in sorted(foods_present):
        rule = kg.rule_for(food_id)
        if rule is None:
            continue
        if not _utensil_requirement_met(rule.utensils, frozen):
            return rule.utensils
        if not _food_requirement_met(rule.foods, foods_present - {food_id}):
            return rule.foods
    return None


def _best_combo(rc: RequiredCombos, present: set[int], dim: int) -> Combo:
    usable = [c for c in rc.combos if all(i < dim for i in c)]
    if not usable:
        raise UnsatisfiableError(
            "a requirement has no combination that fits this catalog"
        )
    # Fewest additions first, then the alternative already closest to
    # complete, then ascending ids for determinism.
    return min(
        usable,
        key=lambda c: (len(c - present), -len(c), tuple(sorted(c))),
    )


def fix(lv: SetupVector, kg: KnowledgeGraph, catalog: Catalog) -> SetupVector:
    """Repair a setup by adding missing companions until every rule is met.

    Bits are only ever added. Each round completes, for the first food with
    an unmet requirement (ascending id, utensils before foods), the
    alternative that needs the fewest additions. Valid inputs come back
    unchanged; the result always validates.
    """
    if len(lv) != len(catalog):
        raise DimensionMismatchError(
            f"vector has {len(lv)} dimensions, catalog has {len(catalog)}"
        )
    present = set(lv.ids())
    if not any(catalog.class_of(i) is ObjectClass.FOOD for i in present):
        raise NoFoodItemError("cannot repair a setup with no food item")
    dim = len(catalog)
    for _ in range(dim + 1):
        unmet = _first_unmet(present, kg, catalog)
        if unmet is None:
            return SetupVector.from_ids(present, dim)
        missing = _best_combo(unmet, present, dim) - present
        if not missing:
            raise UnsatisfiableError("repair made no progress")  # defensive
        present |= missing
    raise UnsatisfiableError("repair did not converge")  # defensive


def dump(kg: KnowledgeGraph, catalog: Catalog) -> str:
    """Render the rules as stable nested text, sorted by object id."""
    lines = [f"knowledge graph built from {kg.built_from} taught setups"]
    for food_id in sorted(kg.rules):
        rule = kg.rules[food_id]
        lines.append(f"{catalog.name_of(food_id)}:")
        for label, rc in (("utensils", rule.utensils), ("foods", rule.foods)):
            flag = "yes" if rc.none_ok else "no"
            lines.append(f"  {label}: none_ok={flag}")
            for combo in sorted(tuple(sorted(c)) for c in rc.combos):
                names = ", ".join(catalog.name_of(i) for i in combo)
                lines.append(f"    - {names}")
    return "\n".join(lines) + "\n"
