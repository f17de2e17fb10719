"""The JSON report written by ``ordforge analyze``."""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field

SCHEMA = 1

__all__ = ["SCHEMA", "Report", "digest"]


def digest(text: str) -> str:
    """SHA-256 of the input text, prefixed with the algorithm name."""
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class Report:
    """Outcome of analysing one proof file.

    ``check`` holds ``ok`` and the list of ``[path, reason]`` failures.
    ``bounds`` is the serialised bound report, or ``None`` when the proof
    did not check or its conclusion is not a Sigma sentence.  ``error``
    then says why.  Ordinals inside ``bounds`` appear as canonical text
    together with a pretty form."""

    input: str
    digest: str
    theory: str
    check: dict
    bounds: dict | None = None
    error: str | None = None
    timing: dict = field(default_factory=dict)
    schema: int = SCHEMA

    def to_json(self) -> dict:
        return asdict(self)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False, sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> "Report":
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        return cls(**data)

    @classmethod
    def loads(cls, text: str) -> "Report":
        return cls.from_json(json.loads(text))
