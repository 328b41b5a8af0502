"""JSON-over-HTTP session service.

Sessions live in memory; each holds a current height plus the move history,
and mutations are serialized per session. Replaying the history from the
initial height always reproduces the current state.
"""

from __future__ import annotations

import secrets
import threading
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from . import jacobian, morse, wire
from .heights import Height

app = FastAPI(title="adinkra session service")


@dataclass
class Session:
    id: str
    n: int
    init: object
    current: Height
    history: list[dict] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)


_sessions: dict[str, Session] = {}


class SessionRequest(BaseModel):
    n: int = 5
    init: str | dict = "fully_extended"


class MoveRequest(BaseModel):
    vertex: int


def _get(session_id: str) -> Session:
    s = _sessions.get(session_id)
    if s is None:
        raise HTTPException(status_code=404, detail="no such session")
    return s


def _state(s: Session) -> dict:
    out = {
        "id": s.id,
        "n": s.n,
        "height": wire.height_json(s.current),
        "history": list(s.history),
    }
    if s.n == 5:
        out["image"] = wire.image_json(jacobian.height_image(s.current))
    else:
        out["image"] = None
    return out


@app.post("/session")
def create_session(req: SessionRequest):
    if not 1 <= req.n <= 5:
        raise HTTPException(status_code=422, detail="n must be 1..5")
    try:
        h = wire.initial_height(req.n, req.init)
    except (ValueError, IndexError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    s = Session(id=secrets.token_hex(8), n=req.n, init=req.init, current=h)
    _sessions[s.id] = s
    return _state(s)


@app.get("/session/{session_id}")
def get_session(session_id: str):
    return _state(_get(session_id))


def _apply(session_id: str, op: str, vertex: int):
    s = _get(session_id)
    with s.lock:
        if not 0 <= vertex < (1 << s.n):
            raise HTTPException(status_code=422, detail="vertex out of range")
        try:
            if op == "lower":
                s.current = s.current.lower(vertex)
            else:
                s.current = s.current.raise_(vertex)
        except ValueError as exc:
            raise HTTPException(status_code=409, detail=str(exc))
        s.history.append({"op": op, "vertex": vertex})
        return _state(s)


@app.post("/session/{session_id}/lower")
def lower(session_id: str, req: MoveRequest):
    return _apply(session_id, "lower", req.vertex)


@app.post("/session/{session_id}/raise")
def raise_vertex(session_id: str, req: MoveRequest):
    return _apply(session_id, "raise", req.vertex)


@app.get("/session/{session_id}/divisor")
def divisor(session_id: str):
    s = _get(session_id)
    return wire.divisor_json(morse.divisor(s.current))


@app.get("/session/{session_id}/image")
def image(session_id: str):
    s = _get(session_id)
    if s.n != 5:
        raise HTTPException(status_code=409, detail="images are defined on H^5")
    return wire.image_json(jacobian.height_image(s.current))


@app.get("/session/{session_id}/moves")
def moves(session_id: str):
    s = _get(session_id)
    return {
        "lower": s.current.legal_lowerings(),
        "raise": s.current.legal_raisings(),
    }


@app.get("/session/{session_id}/splitting")
def session_splitting(session_id: str, k: int = 1):
    s = _get(session_id)
    if s.n != 5:
        raise HTTPException(status_code=409, detail="splittings are defined on H^5")
    if not 1 <= k <= 5:
        raise HTTPException(status_code=422, detail="k must be 1..5")
    return {"k": k, "signs": jacobian.splitting(k)}


@app.get("/census")
def census(k: int = 1):
    if not 1 <= k <= 5:
        raise HTTPException(status_code=422, detail="k must be 1..5")
    hist = jacobian.census(k)
    return {"k": k, "bins": [{"a": a, "count": hist.get(a, 0)} for a in range(-8, 9)]}
