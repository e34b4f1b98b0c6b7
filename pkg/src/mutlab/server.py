"""Small JSON-over-HTTP API for the interactive explorer.

The server adds no mathematics: every state payload is produced by the same
verified core operations the CLI uses, and the cached seed is the fold of the
session word over the initial seed.
"""

from __future__ import annotations

import secrets
import threading
from dataclasses import dataclass, field
from typing import Any

from fastapi import FastAPI, HTTPException
from fastapi.responses import PlainTextResponse

from .core import YSeed
from .companion import explicit_companion, pairing_companion
from .diagram import check_companion_conditions, diagram_of, is_acyclic, positive_edges, to_dot
from .errors import MutlabError
from .formats import matrix_to_obj, seed_from_obj
from .mutation import apply_word
from .roots import CartanMatrix, cartan_from_acyclic


@dataclass
class Session:
    initial: YSeed
    cartan: CartanMatrix
    word: list[int] = field(default_factory=list)  # 0-based letters
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def seed(self) -> YSeed:
        return apply_word(self.initial, self.word)


def session_state(session: Session) -> dict[str, Any]:
    seed = session.seed
    A = pairing_companion(seed, session.cartan)
    if explicit_companion(seed).entries != A.entries:
        # the two companion constructions must agree; disagreement is a core bug
        raise HTTPException(500, "companion constructions disagree; core bug")
    cut = positive_edges(seed.matrix, A)
    report = check_companion_conditions(seed.matrix, A)
    state = matrix_to_obj(seed)
    state["A"] = [list(row) for row in A.entries]
    state["positive_edges"] = sorted(sorted(v + 1 for v in e) for e in cut.edges)
    state["admissible"] = report.admissible
    state["word"] = [k + 1 for k in session.word]
    return state


def create_app() -> FastAPI:
    app = FastAPI(title="mutlab")
    sessions: dict[str, Session] = {}

    def get_session(sid: str) -> Session:
        try:
            return sessions[sid]
        except KeyError:
            raise HTTPException(404, "unknown session")

    @app.post("/sessions")
    def create_session(body: dict):
        try:
            seed = seed_from_obj(body)
        except (MutlabError, ValueError, TypeError) as exc:
            raise HTTPException(422, str(exc))
        if not is_acyclic(diagram_of(seed.matrix)):
            raise HTTPException(422, "initial matrix must be acyclic for companion tracking")
        session = Session(seed, cartan_from_acyclic(seed.matrix))
        sid = secrets.token_hex(8)
        sessions[sid] = session
        return {"id": sid, "state": session_state(session)}

    @app.get("/sessions/{sid}")
    def get_state(sid: str):
        return session_state(get_session(sid))

    @app.post("/sessions/{sid}/mutate")
    def mutate(sid: str, body: dict):
        session = get_session(sid)
        k = body.get("k")
        if not isinstance(k, int) or not 1 <= k <= session.initial.n:
            raise HTTPException(400, f"k must be an integer in 1..{session.initial.n}")
        with session.lock:
            session.word.append(k - 1)
            return session_state(session)

    @app.post("/sessions/{sid}/undo")
    def undo(sid: str):
        session = get_session(sid)
        with session.lock:
            if session.word:
                session.word.pop()
            return session_state(session)

    @app.get("/sessions/{sid}/dot", response_class=PlainTextResponse)
    def dot(sid: str):
        session = get_session(sid)
        seed = session.seed
        return to_dot(diagram_of(seed.matrix), pairing_companion(seed, session.cartan))

    return app
