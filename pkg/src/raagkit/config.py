"""Run configuration shared by the CLI commands."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path

from .errors import MalformedInput


@dataclass(frozen=True)
class Config:
    horizon: int = 64
    searchRadius: int = 6
    ballCap: int = 5
    dimensionCap: int = 3

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
                raise MalformedInput(f"config {f.name} must be a positive integer, got {value!r}")

    def to_dict(self) -> dict:
        return asdict(self)


def load_config(path: str | None) -> Config:
    """Defaults, overridden by the keys of a JSON file when one is given."""
    if path is None:
        return Config()
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInput(f"cannot read config {path}: {exc}") from None
    if not isinstance(data, dict):
        raise MalformedInput("config must be a JSON object")
    known = {f.name for f in fields(Config)}
    unknown = set(data) - known
    if unknown:
        raise MalformedInput(f"unknown config keys: {sorted(unknown)}")
    return replace(Config(), **data)
