"""Engine configuration, read from a JSON file.

Example::

    {
      "rules": {"max_degree": 3, "blocked": ["<3"]},
      "parse": {"policy": "eager", "reveal": true, "endocentric_only": true,
                "goals": ["s", "q"]},
      "viability": {"model": "model.tsv", "k": 2, "threshold": 3},
      "guards": {"max_enumerate": 10, "max_rewrite_search": 6}
    }
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .categories import parse_category
from .oracle import MAX_ENUMERATE, MAX_REWRITE_SEARCH
from .rules import RuleConfig
from .viability import DEFAULT_K, DEFAULT_THRESHOLD


class ConfigError(ValueError):
    pass


@dataclass
class EngineConfig:
    rules: RuleConfig = field(default_factory=RuleConfig)
    policy: str = "eager"
    reveal: bool = True
    endocentric_only: bool = True
    goals: list | None = None
    model_path: str | None = None
    k: int = DEFAULT_K
    threshold: float = DEFAULT_THRESHOLD
    max_enumerate: int = MAX_ENUMERATE
    max_rewrite_search: int = MAX_REWRITE_SEARCH

    def validate(self) -> "EngineConfig":
        if self.policy not in ("eager", "exhaustive"):
            raise ConfigError(f"unknown policy {self.policy!r}")
        if self.reveal and self.policy != "eager":
            raise ConfigError("reveal requires the eager policy")
        if self.k < 1:
            raise ConfigError("k must be >= 1")
        if self.threshold < 0:
            raise ConfigError("threshold must be >= 0")
        for g in self.goals or ():
            parse_category(g)
        return self

    def to_dict(self) -> dict:
        return {
            "rules": self.rules.to_dict(),
            "parse": {"policy": self.policy, "reveal": self.reveal,
                      "endocentric_only": self.endocentric_only, "goals": self.goals},
            "viability": {"model": self.model_path, "k": self.k, "threshold": self.threshold},
            "guards": {"max_enumerate": self.max_enumerate,
                       "max_rewrite_search": self.max_rewrite_search},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "EngineConfig":
        unknown = set(data) - {"rules", "parse", "viability", "guards"}
        if unknown:
            raise ConfigError(f"unknown config sections {sorted(unknown)}")
        p = data.get("parse", {})
        v = data.get("viability", {})
        g = data.get("guards", {})
        policy = p.get("policy", "eager")
        cfg = cls(
            rules=RuleConfig.from_dict(data.get("rules", {})),
            policy=policy,
            reveal=p.get("reveal", policy == "eager"),
            endocentric_only=p.get("endocentric_only", True),
            goals=p.get("goals"),
            model_path=v.get("model"),
            k=int(v.get("k", DEFAULT_K)),
            threshold=float(v.get("threshold", DEFAULT_THRESHOLD)),
            max_enumerate=int(g.get("max_enumerate", MAX_ENUMERATE)),
            max_rewrite_search=int(g.get("max_rewrite_search", MAX_REWRITE_SEARCH)),
        )
        return cfg.validate()


def load_config(path) -> EngineConfig:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from None
    return EngineConfig.from_dict(data)
