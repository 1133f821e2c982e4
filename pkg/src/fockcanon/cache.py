"""On-disk memo of bar-matrix rows, keyed by ``(n, l, s, lam)``.

Enabled by pointing ``FOCKCANON_CACHE_DIR`` at a writable directory. The
file carries a format tag and version; anything unreadable or stale is
ignored, so the cache can only save time, never change an answer.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from . import involution
from .laurent import LaurentPoly

ENV_VAR = "FOCKCANON_CACHE_DIR"
FORMAT = "fockcanon-bar-rows"
VERSION = 1
FILENAME = "bar_rows_v1.json"


def cache_path(directory: str | os.PathLike | None = None) -> Path | None:
    directory = directory or os.environ.get(ENV_VAR)
    return Path(directory) / FILENAME if directory else None


def _encode(store: dict) -> dict:
    rows = []
    for (n, l, s, lam), row in sorted(store.items()):
        rows.append({"n": n, "l": l, "s": s, "lambda": list(lam),
                     "row": [{"mu": list(mu), "coeff": c.to_json()} for mu, c in sorted(row.items(), reverse=True)]})
    return {"format": FORMAT, "version": VERSION, "rows": rows}


def _decode(obj: dict) -> dict:
    if obj.get("format") != FORMAT or obj.get("version") != VERSION:
        return {}
    store = {}
    for r in obj["rows"]:
        key = (r["n"], r["l"], r["s"], tuple(r["lambda"]))
        store[key] = {tuple(e["mu"]): LaurentPoly.from_json(e["coeff"]) for e in r["row"]}
    return store


def enable(directory: str | os.PathLike | None = None) -> Path | None:
    """Install a row store, preloaded from disk when a cache file exists."""
    path = cache_path(directory)
    if path is None:
        return None
    store: dict = {}
    if path.exists():
        try:
            store = _decode(json.loads(path.read_text()))
        except (ValueError, KeyError, TypeError):
            store = {}
    involution.ROW_STORE = store
    return path


def save(directory: str | os.PathLike | None = None) -> None:
    path = cache_path(directory)
    if path is None or involution.ROW_STORE is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(_encode(involution.ROW_STORE), sort_keys=True))
    tmp.replace(path)


def disable() -> None:
    involution.ROW_STORE = None
