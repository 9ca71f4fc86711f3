"""Maintenance HTTP service: browse and edit one lexicon while keeping the
lexicon file, the compiled database, and the flat dump consistent.

Readers work on an immutable snapshot that is swapped atomically after
each rebuild; mutations are serialized and rebuild the whole database
(desk-scale lexicons compile quickly, and the swap is atomic on disk).
"""
from __future__ import annotations

import os
import threading
from dataclasses import dataclass

from fastapi import Body, FastAPI, HTTPException
from pydantic import BaseModel, Field

from .analyzer import generate, recognize
from .core import (
    CLASS_POS,
    PARTS_OF_SPEECH,
    Analysis,
    LexiconEntry,
    ParseStringError,
    parse_parse_string,
)
from .db import Database, compile_db, dump_flat, write_db
from .lexicon import Lexicon, LexiconError, parse_lexicon

PAGE_SIZE = 50
MAX_WAITING_WRITERS = 8


class EntryBody(BaseModel):
    lexical: str
    cls: str = Field(alias="class")
    parse: str

    model_config = {"populate_by_name": True}


def _entry_json(e: LexiconEntry) -> dict:
    return {"lexical": e.lexical, "class": e.cls, "parse": e.parse.render()}


def _analysis_json(a: Analysis) -> dict:
    return {
        "lexical_form": a.lexical_form.render(),
        "pos": a.parse.pos,
        "root": a.parse.root,
        "attrs": list(a.parse.attrs),
    }


def _format_line(e: LexiconEntry) -> str:
    return f'{e.lexical}  {e.cls}  "{e.parse.render()}"'


def _write_text(path: str, text: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as f:
        f.write(text)
        f.flush()
        os.fsync(f.fileno())
    os.replace(tmp, path)


def _validate_body(body: EntryBody) -> LexiconEntry:
    try:
        parse = parse_parse_string(body.parse)
        return LexiconEntry(body.lexical, body.cls, parse)
    except (ParseStringError, ValueError) as e:
        raise HTTPException(status_code=422, detail=str(e)) from None


@dataclass(frozen=True)
class _Snapshot:
    lexicon: Lexicon
    db: Database


class MaintenanceState:
    """Owns the lexicon file and the derived artifacts."""

    def __init__(self, lexicon_path, db_path, flat_path):
        self.lexicon_path = os.fspath(lexicon_path)
        self.db_path = os.fspath(db_path)
        self.flat_path = os.fspath(flat_path)
        self._write_lock = threading.Lock()
        self._count_lock = threading.Lock()
        self._waiting = 0
        self.snapshot = self._rebuild()

    @property
    def lexicon(self) -> Lexicon:
        return self.snapshot.lexicon

    def close(self):
        self.snapshot.db.close()

    def _rebuild(self) -> _Snapshot:
        with open(self.lexicon_path, encoding="utf-8") as f:
            text = f.read()
        lexicon = parse_lexicon(text)
        write_db(self.db_path, compile_db(lexicon))
        db = Database(self.db_path)
        _write_text(self.flat_path, dump_flat(db))
        return _Snapshot(lexicon, db)

    def _mutate(self, edit) -> Lexicon:
        """Run `edit(text) -> new text` on the lexicon file under the
        single-writer lock, then rebuild and swap the snapshot."""
        with self._count_lock:
            if self._waiting >= MAX_WAITING_WRITERS:
                raise HTTPException(status_code=503,
                                    detail="mutation queue is full")
            self._waiting += 1
        try:
            with self._write_lock:
                with open(self.lexicon_path, encoding="utf-8") as f:
                    text = f.read()
                _write_text(self.lexicon_path, edit(text))
                old = self.snapshot
                self.snapshot = self._rebuild()
                old.db.close()
                return self.snapshot.lexicon
        finally:
            with self._count_lock:
                self._waiting -= 1

    def add_entry(self, entry: LexiconEntry) -> Lexicon:
        def edit(text: str) -> str:
            if text and not text.endswith("\n"):
                text += "\n"
            return text + _format_line(entry) + "\n"

        if entry in self.snapshot.lexicon.entries:
            raise HTTPException(status_code=422, detail="duplicate entry")
        return self._mutate(edit)

    def remove_entry(self, entry: LexiconEntry) -> Lexicon:
        def edit(text: str) -> str:
            lines = text.splitlines(keepends=True)
            for i, raw in enumerate(lines):
                stripped = raw.split(";", 1)[0].strip()
                if not stripped:
                    continue
                try:
                    if parse_lexicon(stripped).entries[0] == entry:
                        del lines[i]
                        return "".join(lines)
                except LexiconError:
                    continue
            raise HTTPException(status_code=404, detail="entry not found")

        if entry not in self.snapshot.lexicon.entries:
            raise HTTPException(status_code=404, detail="entry not found")
        return self._mutate(edit)


def create_app(lexicon_path, db_path, flat_path, static_dir=None) -> FastAPI:
    state = MaintenanceState(lexicon_path, db_path, flat_path)
    app = FastAPI(title="morphlex maintenance service")
    app.state.morphlex = state

    @app.get("/api/lookup")
    def lookup(word: str | None = None):
        if not word:
            raise HTTPException(status_code=400, detail="missing 'word' parameter")
        analyses = recognize(word, state.lexicon)
        return {"word": word, "analyses": [_analysis_json(a) for a in analyses]}

    @app.get("/api/entries")
    def list_entries(prefix: str = "", pos: str | None = None, page: int = 1):
        if pos is not None and pos not in PARTS_OF_SPEECH:
            raise HTTPException(status_code=400, detail=f"invalid pos {pos!r}")
        if page < 1:
            raise HTTPException(status_code=400, detail="page must be >= 1")
        matches = [
            e for e in state.lexicon.entries
            if e.lexical.startswith(prefix)
            and (pos is None or CLASS_POS[e.cls] == pos)
        ]
        matches.sort(key=lambda e: (e.lexical.encode(), e.cls,
                                    e.parse.render().encode()))
        start = (page - 1) * PAGE_SIZE
        return {
            "entries": [_entry_json(e) for e in matches[start:start + PAGE_SIZE]],
            "page": page,
            "page_size": PAGE_SIZE,
            "total": len(matches),
        }

    @app.post("/api/entries")
    def add_entry(body: EntryBody):
        entry = _validate_body(body)
        lexicon = state.add_entry(entry)
        surfaces = []
        for surface, _ in generate(entry):
            if any(s["surface"] == surface for s in surfaces):
                continue
            analyses = recognize(surface, lexicon)
            surfaces.append({
                "surface": surface,
                "analyses": [_analysis_json(a) for a in analyses],
            })
        return {"entry": _entry_json(entry), "surfaces": surfaces}

    @app.delete("/api/entries")
    def delete_entry(body: EntryBody = Body(...)):
        entry = _validate_body(body)
        state.remove_entry(entry)
        return {"deleted": _entry_json(entry)}

    if static_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
