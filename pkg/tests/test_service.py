from fastapi.testclient import TestClient

from adinkra.service import app
from adinkra.wire import height_from_json, initial_height

client = TestClient(app)


def new_session(init="fully_extended", n=5):
    res = client.post("/session", json={"n": n, "init": init})
    assert res.status_code == 200
    return res.json()


def test_create_session_fully_extended():
    state = new_session()
    assert state["height"]["values"][31] == 5
    assert all(c["a"] == 0 for c in state["image"]["curves"])


def test_lower_top_vertex_steps_every_curve():
    state = new_session()
    res = client.post(f"/session/{state['id']}/lower", json={"vertex": 31})
    assert res.status_code == 200
    data = res.json()
    assert all(
        (c["a"], c["b4"], c["c2"]) == (1, 3, 0) for c in data["image"]["curves"]
    )
    assert data["history"] == [{"op": "lower", "vertex": 31}]


def test_illegal_move_conflicts():
    state = new_session()
    res = client.post(f"/session/{state['id']}/lower", json={"vertex": 0})
    assert res.status_code == 409
    res = client.post(f"/session/{state['id']}/lower", json={"vertex": 99})
    assert res.status_code == 422


def test_raise_then_lower_roundtrip():
    state = new_session()
    sid = state["id"]
    client.post(f"/session/{sid}/lower", json={"vertex": 31})
    res = client.post(f"/session/{sid}/raise", json={"vertex": 31})
    assert res.status_code == 200
    assert res.json()["height"] == state["height"]


def test_moves_endpoint():
    state = new_session()
    res = client.get(f"/session/{state['id']}/moves")
    assert res.json() == {"lower": [31], "raise": [0]}


def test_divisor_endpoint():
    state = new_session()
    res = client.get(f"/session/{state['id']}/divisor")
    data = res.json()
    assert data["degree"] == 8
    kinds = {p["type"] for p in data["points"]}
    assert kinds == {"vertex"}  # fully extended has no flat faces


def test_splitting_endpoint():
    state = new_session()
    res = client.get(f"/session/{state['id']}/splitting", params={"k": 1})
    signs = res.json()["signs"]
    assert len(signs) == 32
    assert signs.count(1) == 16 and signs.count(-1) == 16


def test_census_endpoint():
    res = client.get("/census", params={"k": 3})
    bins = {b["a"]: b["count"] for b in res.json()["bins"]}
    assert bins[0] == 83830 and sum(bins.values()) == 395094


def test_history_replay_reproduces_state():
    state = new_session()
    sid = state["id"]
    for vertex in (31, 30, 29):
        client.post(f"/session/{sid}/lower", json={"vertex": vertex})
    client.post(f"/session/{sid}/raise", json={"vertex": 0})
    final = client.get(f"/session/{sid}").json()
    h = initial_height(5, "fully_extended")
    for move in final["history"]:
        h = h.lower(move["vertex"]) if move["op"] == "lower" else h.raise_(move["vertex"])
    assert h == height_from_json(final["height"])


def test_unknown_session_404():
    assert client.get("/session/nope").status_code == 404


def test_valise_session_has_identity_image():
    state = new_session(init="valise")
    assert all(
        (c["a"], c["b4"], c["c2"]) == (0, 0, 0) for c in state["image"]["curves"]
    )


def test_explicit_height_init():
    vals = list(initial_height(5, "fully_extended").values)
    state = new_session(init={"values": vals})
    assert state["height"]["values"] == vals


def test_bad_init_rejected():
    res = client.post("/session", json={"n": 5, "init": "nonsense"})
    assert res.status_code == 422
