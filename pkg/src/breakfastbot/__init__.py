"""Personalized breakfast planning for a simulated household kitchen.

The library learns named breakfast setups as binary presence vectors over an
object catalog, tracks what was served inside a sliding day window, infers
per-food requirement rules from co-occurrence in the taught setups, and
invents new valid setups by sampling a Gaussian fit to memory and repairing
the samples against those rules.
"""

from .conceptspace import (
    Catalog,
    FoodContextView,
    ObjectClass,
    ObjectSpec,
    SetupVector,
    decode,
    encode,
    food_context_view,
)
from .creativity import (
    BatchStats,
    GaussianModel,
    SampledSetup,
    create_breakfast,
    fit_gaussian,
    sample_setup,
    simulate_batch,
)
from .household import HouseholdState
from .kitchen import ServeMode, ServePlan, ServeRequest, history, serve
from .memory import (
    EpisodicEntry,
    EpisodicMemory,
    ServedRecord,
    ShortTermMemory,
    advance_day,
    eaten_counts,
    least_eaten,
    record_served,
    teach,
)
from .rng import ReplayableRNG
from .rules import (
    DependencyRule,
    KnowledgeGraph,
    RequiredCombos,
    ValidationReport,
    Violation,
    conditional_prob,
    fix,
    infer_rules,
    no_companion_prob,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "BatchStats",
    "Catalog",
    "DependencyRule",
    "EpisodicEntry",
    "EpisodicMemory",
    "FoodContextView",
    "GaussianModel",
    "HouseholdState",
    "KnowledgeGraph",
    "ObjectClass",
    "ObjectSpec",
    "ReplayableRNG",
    "RequiredCombos",
    "SampledSetup",
    "ServeMode",
    "ServePlan",
    "ServeRequest",
    "ServedRecord",
    "SetupVector",
    "ShortTermMemory",
    "ValidationReport",
    "Violation",
    "advance_day",
    "conditional_prob",
    "create_breakfast",
    "decode",
    "eaten_counts",
    "encode",
    "fit_gaussian",
    "fix",
    "food_context_view",
    "history",
    "infer_rules",
    "least_eaten",
    "no_companion_prob",
    "record_served",
    "sample_setup",
    "serve",
    "simulate_batch",
    "teach",
    "validate",
]
