"""Experiment configuration and per-trial seed derivation."""

from __future__ import annotations

import dataclasses
import hashlib
import json
import math
from dataclasses import dataclass
from typing import Any, Optional

MASK64 = (1 << 64) - 1
KINDS = ("thresholds", "scan", "insert-bench", "core", "audit")
FORMATS = ("csv", "json")


class ConfigError(ValueError):
    pass


def mix(master: int, index: int) -> int:
    """Derived 64-bit seed: the first 8 bytes (little endian) of
    ``BLAKE2b(master_le64 || index_le64, digest_size=8)``.

    Trial i of an experiment with master seed s always uses ``mix(s, i)``, so
    a single trial can be replayed on its own.
    """
    data = (int(master) & MASK64).to_bytes(8, "little") + (int(index) & MASK64).to_bytes(8, "little")
    return int.from_bytes(hashlib.blake2b(data, digest_size=8).digest(), "little")


def parse_grid(text: str) -> tuple[float, ...]:
    """``"a:b:step"`` (inclusive of b) or a comma-separated list of values."""
    text = text.strip()
    try:
        if ":" in text:
            a, b, step = (float(x) for x in text.split(":"))
            if step <= 0 or b < a:
                raise ConfigError(f"bad grid {text!r}")
            count = int(math.floor((b - a) / step + 1e-9)) + 1
            return tuple(round(a + i * step, 12) for i in range(count))
        return tuple(float(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise ConfigError(f"bad grid {text!r}: {exc}") from exc


@dataclass
class ExperimentConfig:
    kind: str
    k: int = 3
    n: int = 10_000
    c: Optional[float] = None
    c_grid: Optional[tuple[float, ...]] = None
    # explicit item count for insert-bench; overrides floor(c*n)
    m: Optional[int] = None
    trials: int = 1
    seed: int = 0
    zeta: float = 0.1
    step_cap: Optional[int] = None
    out: Optional[str] = None
    format: str = "csv"
    workers: int = 1
    timing: bool = False
    deltas: tuple[float, ...] = (0.01,)
    samples: int = 10_000
    max_subset: int = 128
    probes: int = 1_000
    alpha: float = 0.1
    fixture: Optional[str] = None

    def loads(self) -> tuple[float, ...]:
        """Sorted load grid: ``c_grid`` if set, else ``(c,)``."""
        if self.c_grid:
            return tuple(sorted(self.c_grid))
        if self.c is not None:
            return (self.c,)
        return ()

    def validate(self) -> "ExperimentConfig":
        if self.kind not in KINDS:
            raise ConfigError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}")
        if int(self.k) != self.k or self.k < 3:
            raise ConfigError("k must be an integer >= 3")
        if self.kind == "thresholds":
            return self
        if self.n < 3:
            raise ConfigError("n must be >= 3")
        if self.trials < 1:
            raise ConfigError("trials must be >= 1")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")
        if self.step_cap is not None and self.step_cap < 1:
            raise ConfigError("step_cap must be >= 1")
        if self.zeta <= 0:
            raise ConfigError("zeta must be positive")
        loads = self.loads()
        if self.fixture is None and self.m is None and not loads:
            raise ConfigError(f"{self.kind} needs --c or --c-grid")
        if any(not 0.0 < c < 1.0 for c in loads):
            raise ConfigError("every load c must lie in (0, 1)")
        if any(not 0.0 <= d < 1.0 for d in self.deltas):
            raise ConfigError("every delta must lie in [0, 1)")
        if not 0.0 < self.alpha < 1.0:
            raise ConfigError("alpha must lie in (0, 1)")
        return self

    @classmethod
    def from_mapping(cls, data: dict[str, Any]) -> "ExperimentConfig":
        known = {f.name for f in dataclasses.fields(cls)}
        clean = {}
        for key, value in data.items():
            key = key.replace("-", "_")
            if key not in known:
                raise ConfigError(f"unknown config key {key!r}")
            clean[key] = value
        if "c_grid" in clean and isinstance(clean["c_grid"], str):
            clean["c_grid"] = parse_grid(clean["c_grid"])
        for key in ("c_grid", "deltas"):
            if clean.get(key) is not None:
                clean[key] = tuple(float(x) for x in clean[key])
        if "kind" not in clean:
            raise ConfigError("config needs a kind")
        return cls(**clean)

    @classmethod
    def from_json_file(cls, path: str, **overrides) -> "ExperimentConfig":
        try:
            with open(path) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("config file must hold a JSON object")
        data.update({k: v for k, v in overrides.items() if v is not None})
        return cls.from_mapping(data)
