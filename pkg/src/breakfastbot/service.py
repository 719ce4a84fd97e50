"""HTTP+JSON service over one household.

All reads and writes funnel through a single lock, so mutations are
serialized and every GET sees a consistent snapshot. Each successful
mutation persists the state file atomically before the response goes out.

Domain errors map to: 404 for unknown objects/breakfasts/entries, 409 for
duplicates and for state that cannot satisfy the request (empty memory,
exhausted novelty), 422 for domain-invalid input such as a food-less
breakfast, and 400 for bodies that do not parse (with the failing field
paths). Everything else is a 500.
"""

import threading
from contextlib import asynccontextmanager, contextmanager
from pathlib import Path
from typing import Literal, Optional, Union

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import creativity, kitchen, memory as memory_mod, rules as rules_mod
from .conceptspace import ObjectClass, decode
from .errors import (
    AttemptsExhaustedError,
    BreakfastError,
    DuplicateNameError,
    DuplicateSetupError,
    EmptyMemoryError,
    NoFoodItemError,
    UnknownBreakfastError,
    UnknownEntryError,
    UnknownObjectError,
)
from .household import (
    HouseholdState,
    acquire_service_lock,
    release_service_lock,
)
from .kitchen import ServeMode, ServePlan, ServeRequest

DEFAULT_PORT = 7420

_STATUS_BY_ERROR = {
    UnknownObjectError: 404,
    UnknownBreakfastError: 404,
    UnknownEntryError: 404,
    DuplicateNameError: 409,
    DuplicateSetupError: 409,
    EmptyMemoryError: 409,
    AttemptsExhaustedError: 409,
    NoFoodItemError: 422,
}


class HouseholdStore:
    """Exclusive-access owner of the state and its file."""

    def __init__(self, state: HouseholdState, path: Optional[Union[str, Path]] = None):
        self.state = state
        self.path = Path(path) if path is not None else None
        self._lock = threading.Lock()

    @contextmanager
    def read(self):
        with self._lock:
            yield self.state

    @contextmanager
    def mutate(self):
        with self._lock:
            yield self.state
            if self.path is not None:
                self.state.save(self.path)


class ObjectIn(BaseModel):
    name: str
    object_class: Literal["food", "utensil"] = Field(alias="class")
    graspable: bool = True


class TeachIn(BaseModel):
    name: str
    objects: list[str]


class ServeIn(BaseModel):
    mode: Literal["by_name", "least_eaten", "surprise"]
    name: Optional[str] = None


class SimulateIn(BaseModel):
    n: int = Field(ge=0)


def _plan_json(plan: ServePlan) -> dict:
    return {
        "source": plan.source,
        "entry_id": plan.entry_id,
        "entry_name": plan.entry_name,
        "objects": [
            {"name": name, "graspable": graspable} for name, graspable in plan.objects
        ],
        "robot_fetches": list(plan.robot_fetches),
        "user_fetches": list(plan.user_fetches),
        "day": plan.day,
    }


def _entry_json(entry, state: HouseholdState) -> dict:
    return {
        "id": entry.id,
        "name": entry.name,
        "objects": decode(entry.lv.padded(len(state.catalog)), state.catalog),
        "taught_on_day": entry.taught_on_day,
    }


def _error_body(code: str, message: str, **extra) -> dict:
    return {"error": {"code": code, "message": message, **extra}}


def create_app(store: HouseholdStore, cors_origins: Optional[list[str]] = None) -> FastAPI:
    @asynccontextmanager
    async def lifespan(app: FastAPI):
        if store.path is not None:
            acquire_service_lock(store.path)
        try:
            yield
        finally:
            if store.path is not None:
                release_service_lock(store.path)

    app = FastAPI(title="breakfastbot", lifespan=lifespan)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=cors_origins or ["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(BreakfastError)
    async def handle_domain_error(request: Request, exc: BreakfastError):
        status = _STATUS_BY_ERROR.get(type(exc), 500)
        return JSONResponse(status_code=status, content=_error_body(exc.code, str(exc)))

    @app.exception_handler(RequestValidationError)
    async def handle_malformed_body(request: Request, exc: RequestValidationError):
        fields = [".".join(str(p) for p in err["loc"]) for err in exc.errors()]
        return JSONResponse(
            status_code=400,
            content=_error_body("MalformedBody", "request body failed validation", fields=fields),
        )

    @app.exception_handler(StarletteHTTPException)
    async def handle_http_error(request: Request, exc: StarletteHTTPException):
        return JSONResponse(
            status_code=exc.status_code,
            content=_error_body("HttpError", str(exc.detail)),
        )

    @app.post("/catalog/objects", status_code=201)
    def add_object(body: ObjectIn):
        with store.mutate() as state:
            object_id = state.catalog.add(
                body.name, ObjectClass(body.object_class), body.graspable
            )
            return {"id": object_id}

    @app.get("/catalog")
    def get_catalog():
        with store.read() as state:
            return [
                {
                    "id": spec.id,
                    "name": spec.name,
                    "class": spec.object_class.value,
                    "graspable": spec.graspable,
                }
                for spec in state.catalog
            ]

    @app.post("/breakfasts", status_code=201)
    def teach(body: TeachIn):
        with store.mutate() as state:
            entry = memory_mod.teach(state, body.name, body.objects)
            return _entry_json(entry, state)

    @app.get("/breakfasts")
    def list_breakfasts():
        with store.read() as state:
            return [_entry_json(entry, state) for entry in state.memory]

    @app.post("/serve")
    def serve(body: ServeIn):
        if body.mode == "by_name" and not (body.name or "").strip():
            return JSONResponse(
                status_code=400,
                content=_error_body("MalformedBody", "by_name requests need a name", fields=["name"]),
            )
        request = ServeRequest(ServeMode(body.mode), body.name)
        with store.mutate() as state:
            plan = kitchen.serve(state, request, state.rng)
            return _plan_json(plan)

    @app.post("/surprise/save", status_code=201)
    def save_surprise(body: TeachIn):
        with store.mutate() as state:
            entry = memory_mod.teach(state, body.name, body.objects)
            return _entry_json(entry, state)

    @app.post("/day/advance")
    def advance_day():
        with store.mutate() as state:
            return {"day": memory_mod.advance_day(state)}

    @app.get("/history")
    def get_history():
        with store.read() as state:
            return [
                {"day": day, "served": label, "objects": list(objects)}
                for day, label, objects in kitchen.history(state)
            ]

    @app.get("/rules")
    def get_rules():
        with store.read() as state:
            kg = state.knowledge_graph()
            foods = []
            for food_id in sorted(kg.rules):
                rule = kg.rules[food_id]
                foods.append(
                    {
                        "food": state.catalog.name_of(food_id),
                        "utensils": _combos_json(rule.utensils, state),
                        "foods": _combos_json(rule.foods, state),
                    }
                )
            return {"built_from": kg.built_from, "foods": foods,
                    "dump": rules_mod.dump(kg, state.catalog)}

    @app.post("/simulate")
    def simulate(body: SimulateIn):
        with store.mutate() as state:
            stats = creativity.simulate_batch(state, state.rng, body.n)
            return stats.to_report(state.catalog)

    return app


def _combos_json(rc, state: HouseholdState) -> dict:
    combos = sorted(tuple(sorted(c)) for c in rc.combos)
    return {
        "none_ok": rc.none_ok,
        "combos": [[state.catalog.name_of(i) for i in combo] for combo in combos],
    }


def run(
    state_path: Union[str, Path],
    host: str = "127.0.0.1",
    port: int = DEFAULT_PORT,
    stm_days: int = 5,
    seed: int = 0,
    cors_origins: Optional[list[str]] = None,
) -> None:
    """Load (or create) the household at ``state_path`` and serve it."""
    import uvicorn

    state_path = Path(state_path)
    if state_path.exists():
        state = HouseholdState.load(state_path)
    else:
        state_path.parent.mkdir(parents=True, exist_ok=True)
        state = HouseholdState(stm_days=stm_days, seed=seed)
        state.save(state_path)
    store = HouseholdStore(state, state_path)
    uvicorn.run(create_app(store, cors_origins), host=host, port=port, log_level="warning")
