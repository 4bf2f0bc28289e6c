"""Configuration for tutte-forge runs."""

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import yaml

from tforge.runtime.exceptions import ConfigurationError

CONFIG_FILE_NAME = "tforge.yaml"
MEMO_ENV_VAR = "TUTTE_FORGE_MEMO_MAX"

EDGE_PICK_POLICIES = ("max_degree_sum", "first_id")


@dataclass
class EngineSettings:
    """Deletion-contraction engine settings."""

    memo_enabled: bool = True
    memo_canonical_max_vertices: int = 10
    edge_pick_policy: str = "max_degree_sum"
    parallel_tasks: int = 1
    oracle_edge_limit: int = 20

    def to_dict(self) -> dict:
        return {
            "memo_enabled": self.memo_enabled,
            "memo_canonical_max_vertices": self.memo_canonical_max_vertices,
            "edge_pick_policy": self.edge_pick_policy,
            "parallel_tasks": self.parallel_tasks,
            "oracle_edge_limit": self.oracle_edge_limit,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "EngineSettings":
        return cls(
            memo_enabled=data.get("memo_enabled", True),
            memo_canonical_max_vertices=data.get("memo_canonical_max_vertices", 10),
            edge_pick_policy=data.get("edge_pick_policy", "max_degree_sum"),
            parallel_tasks=data.get("parallel_tasks", 1),
            oracle_edge_limit=data.get("oracle_edge_limit", 20),
        )


@dataclass
class IsoSettings:
    """Isomorphism search settings."""

    max_vertices: int = 12

    def to_dict(self) -> dict:
        return {"max_vertices": self.max_vertices}

    @classmethod
    def from_dict(cls, data: dict) -> "IsoSettings":
        return cls(max_vertices=data.get("max_vertices", 12))


@dataclass
class VerifySettings:
    """Work budgets and random-probe parameters for the theorem checkers."""

    subset_max_k: int = 4
    partition_max_k: int = 6
    probe_trials: int = 25
    probe_extra_vertices: int = 3
    probe_multiplicity_cap: int = 2
    probe_loop_probability: float = 0.1

    def to_dict(self) -> dict:
        return {
            "subset_max_k": self.subset_max_k,
            "partition_max_k": self.partition_max_k,
            "probe_trials": self.probe_trials,
            "probe_extra_vertices": self.probe_extra_vertices,
            "probe_multiplicity_cap": self.probe_multiplicity_cap,
            "probe_loop_probability": self.probe_loop_probability,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "VerifySettings":
        return cls(
            subset_max_k=data.get("subset_max_k", 4),
            partition_max_k=data.get("partition_max_k", 6),
            probe_trials=data.get("probe_trials", 25),
            probe_extra_vertices=data.get("probe_extra_vertices", 3),
            probe_multiplicity_cap=data.get("probe_multiplicity_cap", 2),
            probe_loop_probability=data.get("probe_loop_probability", 0.1),
        )


@dataclass
class LoggingSettings:
    """Logging configuration settings."""

    level: str = "WARNING"
    file: Optional[str] = None
    colored: bool = True

    def to_dict(self) -> dict:
        return {"level": self.level, "file": self.file, "colored": self.colored}

    @classmethod
    def from_dict(cls, data: dict) -> "LoggingSettings":
        return cls(
            level=data.get("level", "WARNING"),
            file=data.get("file"),
            colored=data.get("colored", True),
        )


@dataclass
class ForgeConfig:
    """Top-level configuration, loadable from tforge.yaml."""

    engine: EngineSettings = field(default_factory=EngineSettings)
    iso: IsoSettings = field(default_factory=IsoSettings)
    verify: VerifySettings = field(default_factory=VerifySettings)
    logging: LoggingSettings = field(default_factory=LoggingSettings)
    source: Optional[Path] = None

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        """Raise ConfigurationError for out-of-range values."""
        where = str(self.source) if self.source else None
        if self.engine.memo_canonical_max_vertices < 0:
            raise ConfigurationError("memo_canonical_max_vertices must be >= 0", where)
        if self.engine.edge_pick_policy not in EDGE_PICK_POLICIES:
            raise ConfigurationError(
                f"edge_pick_policy must be one of {', '.join(EDGE_PICK_POLICIES)}", where
            )
        if self.engine.parallel_tasks < 1:
            raise ConfigurationError("parallel_tasks must be >= 1", where)
        if self.iso.max_vertices < 1:
            raise ConfigurationError("iso max_vertices must be >= 1", where)
        if not 0.0 <= self.verify.probe_loop_probability <= 1.0:
            raise ConfigurationError("probe_loop_probability must lie in [0, 1]", where)

    def to_dict(self) -> dict:
        return {
            "engine": self.engine.to_dict(),
            "iso": self.iso.to_dict(),
            "verify": self.verify.to_dict(),
            "logging": self.logging.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict, source: Optional[Path] = None) -> "ForgeConfig":
        return cls(
            engine=EngineSettings.from_dict(data.get("engine") or {}),
            iso=IsoSettings.from_dict(data.get("iso") or {}),
            verify=VerifySettings.from_dict(data.get("verify") or {}),
            logging=LoggingSettings.from_dict(data.get("logging") or {}),
            source=source,
        )

    def apply_environment(self, environ: Optional[dict] = None) -> "ForgeConfig":
        """Apply environment overrides in place and return self."""
        env = os.environ if environ is None else environ
        raw = env.get(MEMO_ENV_VAR)
        if raw is not None and raw.strip() != "":
            try:
                value = int(raw)
            except ValueError:
                raise ConfigurationError(f"{MEMO_ENV_VAR} must be an integer, got {raw!r}")
            if value < 0:
                raise ConfigurationError(f"{MEMO_ENV_VAR} must be >= 0, got {value}")
            self.engine.memo_canonical_max_vertices = value
        return self

    def save(self, path: Path) -> Path:
        """Save configuration to a YAML file."""
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as f:
            yaml.dump(self.to_dict(), f, default_flow_style=False, sort_keys=False)
        return path

    @classmethod
    def load(cls, path: Path) -> "ForgeConfig":
        """Load configuration from a YAML file."""
        try:
            with open(path) as f:
                data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Invalid YAML: {e}", str(path))
        except OSError as e:
            raise ConfigurationError(f"Cannot read config: {e}", str(path))

        if data is None:
            data = {}
        if not isinstance(data, dict):
            raise ConfigurationError("expected a YAML mapping", str(path))

        return cls.from_dict(data, source=path)

    @classmethod
    def find_config(cls, start_dir: Optional[Path] = None) -> Optional[Path]:
        """Find tforge.yaml in the given directory or its parents."""
        current = (start_dir or Path.cwd()).resolve()

        while True:
            candidate = current / CONFIG_FILE_NAME
            if candidate.exists():
                return candidate
            if current == current.parent:
                return None
            current = current.parent

    @classmethod
    def load_or_default(
        cls,
        path: Optional[Path] = None,
        start_dir: Optional[Path] = None,
    ) -> "ForgeConfig":
        """Load an explicit or discovered config, falling back to defaults.

        Environment overrides are applied last.
        """
        config_path = path or cls.find_config(start_dir)
        config = cls.load(config_path) if config_path else cls()
        return config.apply_environment()
