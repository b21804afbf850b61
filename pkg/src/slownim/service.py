"""HTTP session service for playing the engine at exact slow nim.

JSON over HTTP, stable schema shared with the web UI:

* ``POST /sessions`` ``{"piles": [...], "human_first": bool}`` -- create a
  session; when the engine moves first it replies immediately.
* ``GET /sessions/{id}`` -- current state.
* ``POST /sessions/{id}/move`` ``{"keep_index": k}`` -- the human keeps
  pile ``k`` (1-based into the sorted piles); the engine replies in the
  same request when the game continues.
* ``GET /sessions/{id}/hint`` -- the engine's keep for the current
  position, with its remoteness.

Every session view carries full analysis of the current position
(remoteness, P/N outcome, hint) plus the move history; the service is a
teaching tool, not a competitive one.  Sessions live in memory with TTL
eviction.  Requests within one session are serialized: a move arriving
while another is in flight is rejected with 409 rather than applied
last-writer-wins.
"""

from __future__ import annotations

import secrets
import threading
import time
from dataclasses import dataclass, field
from typing import Callable

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .solver import DomainError, GamePosition, apply_move, optimal_move, remoteness

STATUS_ACTIVE = "active"
STATUS_HUMAN_WON = "human_won"
STATUS_HUMAN_LOST = "human_lost"


class CreateSessionRequest(BaseModel):
    piles: list[int]
    human_first: bool = True


class MoveRequest(BaseModel):
    keep_index: int


@dataclass
class GameSession:
    id: str
    initial: GamePosition
    position: GamePosition
    human_to_move: bool
    status: str
    history: list[dict] = field(default_factory=list)
    touched: float = 0.0
    lock: threading.Lock = field(default_factory=threading.Lock)

    def record(self, by: str, keep_index: int) -> None:
        self.history.append({
            "by": by,
            "keep_index": keep_index,
            "piles": list(self.position.piles),
        })


def _engine_reply(session: GameSession) -> None:
    """Engine makes its move, then hands the turn to the human (or ends
    the game if the human cannot move)."""
    nxt, kept = optimal_move(session.position)
    session.position = nxt
    session.record("engine", kept)
    session.human_to_move = True
    if nxt.terminal:
        session.status = STATUS_HUMAN_LOST


def _view(session: GameSession) -> dict:
    pos = session.position
    analysis = remoteness(pos)
    return {
        "id": session.id,
        "piles": list(pos.piles),
        "status": session.status,
        "human_to_move": session.human_to_move and session.status == STATUS_ACTIVE,
        "remoteness": analysis.remoteness,
        "outcome": analysis.outcome,
        "hint": analysis.best_move,
        "history": list(session.history),
    }


def create_app(*, ttl_seconds: float = 3600.0, time_source: Callable[[], float] = time.monotonic) -> FastAPI:
    app = FastAPI(title="slownim play service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict[str, GameSession] = {}
    registry_lock = threading.Lock()
    app.state.sessions = sessions

    def evict_stale(now: float) -> None:
        stale = [sid for sid, s in sessions.items() if now - s.touched > ttl_seconds]
        for sid in stale:
            sessions.pop(sid, None)

    def fetch(session_id: str) -> GameSession:
        now = time_source()
        with registry_lock:
            session = sessions.get(session_id)
            if session is not None and now - session.touched > ttl_seconds:
                sessions.pop(session_id, None)
                session = None
            if session is None:
                raise HTTPException(status_code=404, detail=f"no session {session_id}")
            session.touched = now
            return session

    @app.get("/healthz")
    def healthz() -> dict:
        return {"status": "ok"}

    @app.post("/sessions", status_code=201)
    def create_session(req: CreateSessionRequest) -> dict:
        if len(req.piles) < 2:
            raise HTTPException(status_code=400, detail="need at least two piles")
        if any(p < 0 for p in req.piles):
            raise HTTPException(status_code=400, detail="piles must be non-negative")
        position = GamePosition.of(req.piles)
        # The loser is whoever faces a terminal position on their turn.
        if position.terminal:
            status = STATUS_HUMAN_LOST if req.human_first else STATUS_HUMAN_WON
        else:
            status = STATUS_ACTIVE
        session = GameSession(
            id=secrets.token_hex(8),
            initial=position,
            position=position,
            human_to_move=req.human_first,
            status=status,
        )
        if session.status == STATUS_ACTIVE and not req.human_first:
            _engine_reply(session)
        now = time_source()
        session.touched = now
        with registry_lock:
            evict_stale(now)
            sessions[session.id] = session
        return _view(session)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str) -> dict:
        return _view(fetch(session_id))

    @app.post("/sessions/{session_id}/move")
    def human_move(session_id: str, req: MoveRequest) -> dict:
        session = fetch(session_id)
        if not session.lock.acquire(blocking=False):
            raise HTTPException(status_code=409, detail="another move on this session is in flight")
        try:
            if session.status != STATUS_ACTIVE:
                raise HTTPException(status_code=409, detail="game is over")
            if not session.human_to_move:
                raise HTTPException(status_code=409, detail="not the human's turn")
            try:
                nxt = apply_move(session.position, req.keep_index)
            except DomainError as exc:
                raise HTTPException(status_code=400, detail=str(exc)) from None
            session.position = nxt
            session.record("human", req.keep_index)
            session.human_to_move = False
            if nxt.terminal:
                session.status = STATUS_HUMAN_WON
            else:
                _engine_reply(session)
            return _view(session)
        finally:
            session.lock.release()

    @app.get("/sessions/{session_id}/hint")
    def hint(session_id: str) -> dict:
        session = fetch(session_id)
        if session.status != STATUS_ACTIVE:
            raise HTTPException(status_code=409, detail="game is over; no hint")
        analysis = remoteness(session.position)
        return {"keep_index": analysis.best_move, "remoteness": analysis.remoteness}

    return app
