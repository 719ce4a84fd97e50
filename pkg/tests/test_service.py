"""HTTP endpoints: happy paths, error codes, and persistence side effects."""

import pytest
from fastapi.testclient import TestClient

from breakfastbot import HouseholdState
from breakfastbot.service import HouseholdStore, create_app

from conftest import NINE_OBJECTS, SEVEN_SETUPS, build_household


@pytest.fixture
def client(tmp_path):
    store = HouseholdStore(build_household(seed=3), tmp_path / "household.json")
    with TestClient(create_app(store)) as client:
        yield client


@pytest.fixture
def empty_client(tmp_path):
    store = HouseholdStore(HouseholdState(), tmp_path / "household.json")
    with TestClient(create_app(store)) as client:
        yield client


def test_add_object_and_list_catalog(empty_client):
    response = empty_client.post(
        "/catalog/objects", json={"name": "milk", "class": "food", "graspable": True}
    )
    assert response.status_code == 201 and response.json() == {"id": 0}
    listing = empty_client.get("/catalog").json()
    assert listing == [{"id": 0, "name": "milk", "class": "food", "graspable": True}]


def test_teach_and_list_breakfasts(client):
    response = client.post(
        "/breakfasts", json={"name": "fruit", "objects": ["apple", "orange", "banana"]}
    )
    assert response.status_code == 409  # that exact set is already taught
    response = client.post(
        "/breakfasts", json={"name": "apple snack", "objects": ["apple", "cup"]}
    )
    assert response.status_code == 201
    body = response.json()
    assert body["name"] == "apple snack" and body["objects"] == ["cup", "apple"]
    names = [e["name"] for e in client.get("/breakfasts").json()]
    assert names[:2] == ["plain milk", "milk with banana"] and "apple snack" in names


def test_teach_error_codes(client):
    assert client.post("/breakfasts", json={"name": "plain milk", "objects": ["apple"]}).status_code == 409
    response = client.post("/breakfasts", json={"name": "x", "objects": ["cup"]})
    assert response.status_code == 422
    assert response.json()["error"]["code"] == "NoFoodItem"
    response = client.post("/breakfasts", json={"name": "x", "objects": ["ghost"]})
    assert response.status_code == 404
    assert response.json()["error"]["code"] == "UnknownObject"


def test_serve_by_name(client):
    response = client.post("/serve", json={"mode": "by_name", "name": "milk with banana"})
    assert response.status_code == 200
    plan = response.json()
    assert plan["source"] == "episodic"
    assert plan["robot_fetches"] == ["milk", "cup"]
    assert plan["user_fetches"] == ["banana"]
    assert plan["day"] == 0


def test_serve_unknown_name_is_404(client):
    response = client.post("/serve", json={"mode": "by_name", "name": "nope"})
    assert response.status_code == 404
    assert response.json()["error"]["code"] == "UnknownBreakfast"


def test_serve_by_name_without_name_is_400(client):
    response = client.post("/serve", json={"mode": "by_name"})
    assert response.status_code == 400
    assert response.json()["error"]["code"] == "MalformedBody"


def test_serve_surprise_and_save_it(client):
    response = client.post("/serve", json={"mode": "surprise"})
    assert response.status_code == 200
    plan = response.json()
    assert plan["source"] == "created" and plan["entry_id"] is None
    objects = [o["name"] for o in plan["objects"]]
    saved = client.post("/surprise/save", json={"name": "robot special", "objects": objects})
    assert saved.status_code == 201
    names = [e["name"] for e in client.get("/breakfasts").json()]
    assert "robot special" in names


def test_serve_empty_memory_is_409(empty_client):
    response = empty_client.post("/serve", json={"mode": "least_eaten"})
    assert response.status_code == 409
    assert response.json()["error"]["code"] == "EmptyMemory"


def test_day_advance_and_history(client):
    client.post("/serve", json={"mode": "by_name", "name": "plain milk"})
    assert client.post("/day/advance").json() == {"day": 1}
    client.post("/serve", json={"mode": "by_name", "name": "fruit mix"})
    rows = client.get("/history").json()
    assert rows == [
        {"day": 0, "served": "plain milk", "objects": ["milk", "cup"]},
        {"day": 1, "served": "fruit mix", "objects": ["apple", "orange", "banana"]},
    ]


def test_rules_endpoint(client):
    body = client.get("/rules").json()
    assert body["built_from"] == 7
    by_food = {f["food"]: f for f in body["foods"]}
    assert by_food["milk"]["utensils"]["none_ok"] is False
    assert ["cup"] in by_food["milk"]["utensils"]["combos"]
    assert ["bowl", "spoon"] in by_food["milk"]["utensils"]["combos"]
    assert body["dump"].startswith("knowledge graph built from 7 taught setups")


def test_simulate_endpoint(client):
    body = client.post("/simulate", json={"n": 50}).json()
    assert body["same_as_memory"] + body["duplicate_new"] + body["distinct_new"] == 50
    assert body["invalid_before_fix"] <= 50 - body["same_as_memory"]
    assert len(body["outputs"]) == body["distinct_new"]
    assert body["outputs"] == sorted(body["outputs"])


def test_malformed_body_is_400_with_field_path(client):
    response = client.post("/breakfasts", json={"name": "x"})
    assert response.status_code == 400
    body = response.json()["error"]
    assert body["code"] == "MalformedBody"
    assert any("objects" in field for field in body["fields"])


def test_unknown_route_is_404(client):
    assert client.get("/no-such-route").status_code == 404


def test_mutations_persist_to_the_state_file(tmp_path):
    path = tmp_path / "household.json"
    store = HouseholdStore(build_household(seed=3), path)
    with TestClient(create_app(store)) as client:
        client.post("/serve", json={"mode": "by_name", "name": "plain milk"})
        client.post("/day/advance")
    reloaded = HouseholdState.load(path)
    assert reloaded.day == 1
    assert len(reloaded.stm.records) == 1


def test_lock_file_lives_and_dies_with_the_service(tmp_path):
    path = tmp_path / "household.json"
    store = HouseholdStore(build_household(), path)
    lock = tmp_path / "household.json.lock"
    with TestClient(create_app(store)):
        assert lock.exists()
    assert not lock.exists()
