"""Append-only JSONL store of verification records."""

from __future__ import annotations

import json
import logging
import os
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Optional

from . import __version__

log = logging.getLogger(__name__)

CACHE_ENV = "POWIDEAL_CACHE"


@dataclass(frozen=True)
class VerificationRecord:
    n: int
    k: int
    d: int
    degree: int
    method: str
    value: str
    agrees_with: Optional[list] = None
    timestamp: int = field(default_factory=lambda: int(time.time()))
    tool_version: str = __version__

    @property
    def key(self) -> tuple:
        return (self.n, self.k, self.d, self.degree, self.method)

    @property
    def int_value(self) -> int:
        return int(self.value)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_dict(cls, obj: dict) -> "VerificationRecord":
        rec = cls(
            n=int(obj["n"]), k=int(obj["k"]), d=int(obj["d"]),
            degree=int(obj["degree"]), method=str(obj["method"]),
            value=str(obj["value"]),
            agrees_with=list(obj["agrees_with"]) if obj.get("agrees_with") is not None else None,
            timestamp=int(obj["timestamp"]), tool_version=str(obj["tool_version"]),
        )
        int(rec.value)  # must be an exact decimal integer
        return rec


def resolve_cache_path(flag: Optional[str]) -> Optional[Path]:
    if flag:
        return Path(flag)
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else None


class ResultCache:
    """Records keyed by (n, k, d, degree, method); first record for a key wins."""

    def __init__(self, path: Optional[Path]):
        self.path = Path(path) if path else None
        self.records: dict = {}
        if self.path is not None and self.path.exists():
            self._load()

    def _load(self) -> None:
        good_bytes = 0
        with open(self.path, "rb") as fh:
            data = fh.read()
        pos = 0
        lines = data.split(b"\n")
        for lineno, raw in enumerate(lines):
            end = pos + len(raw) + 1
            if raw.strip():
                try:
                    rec = VerificationRecord.from_dict(json.loads(raw.decode("utf-8")))
                except (ValueError, KeyError, TypeError):
                    if lineno >= len(lines) - 2:
                        log.warning("truncating corrupt trailing line %d in %s", lineno + 1, self.path)
                        with open(self.path, "r+b") as fh:
                            fh.truncate(good_bytes)
                        return
                    raise ValueError(f"{self.path}:{lineno + 1}: corrupt cache record")
                self.records.setdefault(rec.key, rec)
            good_bytes = min(end, len(data))
            pos = end

    def __contains__(self, key) -> bool:
        return key in self.records

    def __len__(self) -> int:
        return len(self.records)

    def get(self, key) -> Optional[VerificationRecord]:
        return self.records.get(key)

    def append(self, records: Iterable[VerificationRecord]) -> int:
        new = []
        for r in records:
            if r.key not in self.records:
                self.records[r.key] = r
                new.append(r)
        if not new:
            return 0
        if self.path is not None:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a", encoding="utf-8") as fh:
                for r in new:
                    fh.write(r.to_json() + "\n")
        return len(new)
