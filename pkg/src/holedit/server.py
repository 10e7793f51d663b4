"""HTTP edit-session service: each session is a stream of edit states
driven by actions posted one at a time, with linear history-based undo.

The engine is pure; all mutation lives in the in-memory session store.
Requests to different sessions run in parallel, requests to the same
session are serialized with a per-session lock. After every accepted
action the server re-checks the session invariant (the cursor erasure
synthesizes the recorded type) before replying.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel

from .actions import Action, enabled_actions, is_error, perform_syn, standard_candidates
from .lang import EMPTY_CTX, HOLE, Ctx, EmptyHole, HTyp, synthesize
from .textio import (
    DecodeError,
    action_from_json,
    print_action,
    print_htyp,
    print_script,
    print_zexp,
    to_json,
    typ_from_json,
)
from .zipper import CursorE, ZExp, erase_exp


@dataclass
class Session:
    id: str
    ctx: Ctx
    state: ZExp
    typ: HTyp
    history: List[Tuple[Action, ZExp, HTyp]] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def check_invariant(self) -> None:
        assert synthesize(self.ctx, erase_exp(self.state)) == self.typ


class CreateSessionBody(BaseModel):
    ctx: Optional[Dict[str, Any]] = None


class ActionBody(BaseModel):
    action: Any


def wire_state(s: Session) -> Dict[str, Any]:
    enabled = enabled_actions(
        s.ctx, s.state, s.typ, standard_candidates(s.ctx, s.state)
    )
    return {
        "zexp": to_json(s.state),
        "text": print_zexp(s.state),
        "typ": to_json(s.typ),
        "typ_text": print_htyp(s.typ),
        "enabled": [
            {"action": to_json(a), "text": print_action(a), "enabled": ok}
            for a, ok in enabled
        ],
    }


def create_app() -> FastAPI:
    app = FastAPI(title="edit-session service")
    sessions: Dict[str, Session] = {}
    store_lock = threading.Lock()

    @app.exception_handler(RequestValidationError)
    async def malformed(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": "malformed request"})

    def get_session(sid: str) -> Optional[Session]:
        with store_lock:
            return sessions.get(sid)

    @app.post("/sessions", status_code=201)
    def create_session(body: Optional[CreateSessionBody] = None):
        ctx: Ctx = EMPTY_CTX
        if body is not None and body.ctx is not None:
            decoded: Dict[str, HTyp] = {}
            for name, tj in body.ctx.items():
                t = typ_from_json(tj)
                if isinstance(t, DecodeError):
                    return JSONResponse(
                        status_code=400,
                        content={"error": f"bad context type for {name!r}: {t}"},
                    )
                decoded[name] = t
            ctx = decoded
        s = Session(id=uuid.uuid4().hex, ctx=ctx, state=CursorE(EmptyHole()), typ=HOLE)
        with store_lock:
            sessions[s.id] = s
        return {"id": s.id, "state": wire_state(s)}

    @app.get("/sessions/{sid}")
    def read_session(sid: str):
        s = get_session(sid)
        if s is None:
            return JSONResponse(status_code=404, content={"error": "unknown session"})
        with s.lock:
            return wire_state(s)

    @app.post("/sessions/{sid}/actions")
    def post_action(sid: str, body: ActionBody):
        s = get_session(sid)
        if s is None:
            return JSONResponse(status_code=404, content={"error": "unknown session"})
        a = action_from_json(body.action)
        if isinstance(a, DecodeError):
            return JSONResponse(
                status_code=400, content={"error": str(a), "action": body.action}
            )
        with s.lock:
            r = perform_syn(s.ctx, s.state, s.typ, a)
            if is_error(r):
                return JSONResponse(
                    status_code=409,
                    content={
                        "error": type(r).__name__,
                        "action": to_json(a),
                    },
                )
            s.state, s.typ = r
            s.history.append((a, s.state, s.typ))
            s.check_invariant()
            return wire_state(s)

    @app.post("/sessions/{sid}/undo")
    def undo(sid: str):
        s = get_session(sid)
        if s is None:
            return JSONResponse(status_code=404, content={"error": "unknown session"})
        with s.lock:
            if not s.history:
                return JSONResponse(
                    status_code=409, content={"error": "nothing to undo"}
                )
            s.history.pop()
            if s.history:
                _, s.state, s.typ = s.history[-1]
            else:
                s.state, s.typ = CursorE(EmptyHole()), HOLE
            s.check_invariant()
            return wire_state(s)

    @app.get("/sessions/{sid}/history")
    def history(sid: str):
        s = get_session(sid)
        if s is None:
            return JSONResponse(status_code=404, content={"error": "unknown session"})
        with s.lock:
            acts = [a for a, _z, _t in s.history]
            return {
                "actions": [to_json(a) for a in acts],
                "script": print_script(acts),
            }

    @app.delete("/sessions/{sid}", status_code=204)
    def delete(sid: str):
        with store_lock:
            if sid not in sessions:
                return JSONResponse(
                    status_code=404, content={"error": "unknown session"}
                )
            del sessions[sid]
        return Response(status_code=204)

    return app


app = create_app()
