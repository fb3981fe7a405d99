"""Gateway configuration with layered sources.

Precedence, strongest first: explicit overrides (CLI flags) > environment
variables > JSON config file > built-in defaults. Every knob is a flat
scalar so each layer can override any subset independently.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields

from ..inference import BackendConfig

ENV_PREFIX = "EMOADVISOR_"


class ConfigError(ValueError):
    """Raised when a configuration source is malformed."""


@dataclass(frozen=True)
class GatewayConfig:
    """Resolved gateway settings.

    ``auth_token_env_name`` names the environment variable holding the live
    backend token; the token value itself never appears in configuration.
    """

    store_path: str = "emoadvisor-store"
    bind_host: str = "127.0.0.1"
    bind_port: int = 8080
    worker_count: int = 1
    backend_mode: str = "offline"
    endpoint_url: str = ""
    model_name: str = "offline"
    auth_token_env_name: str = ""
    backend_timeout: float = 30.0
    backend_max_retries: int = 2

    def __post_init__(self):
        if self.worker_count < 1:
            raise ConfigError(f"worker_count must be >= 1, got {self.worker_count}")
        if not 1 <= self.bind_port <= 65535:
            raise ConfigError(f"bind_port must be in [1, 65535], got {self.bind_port}")
        if self.backend_mode not in ("offline", "live"):
            raise ConfigError(
                f"backend_mode must be 'offline' or 'live', got {self.backend_mode!r}"
            )

    def backend_config(self, mode: str | None = None) -> BackendConfig:
        """Build the inference backend settings, optionally forcing a mode."""
        mode = mode if mode is not None else self.backend_mode
        return BackendConfig(
            mode=mode,
            endpoint_url=self.endpoint_url,
            model_name=self.model_name if mode == "live" else "offline",
            auth_token_env_name=self.auth_token_env_name,
            timeout=self.backend_timeout,
            max_retries=self.backend_max_retries,
        )

    def to_document(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


_FIELD_TYPES = {f.name: f.type for f in fields(GatewayConfig)}

# Environment variable names, one per field: EMOADVISOR_STORE_PATH etc.
ENV_NAMES = {name: ENV_PREFIX + name.upper() for name in _FIELD_TYPES}


def _coerce(name: str, raw, source: str):
    kind = _FIELD_TYPES[name]
    try:
        if kind == "int":
            return int(raw)
        if kind == "float":
            return float(raw)
        return str(raw)
    except (TypeError, ValueError):
        raise ConfigError(f"{source}: {name} must be {kind}, got {raw!r}") from None


def load_config(
    config_file: str | None = None,
    env: dict | None = None,
    overrides: dict | None = None,
) -> GatewayConfig:
    """Resolve settings from defaults, config file, environment, overrides.

    ``config_file`` is a JSON object of field names (unknown keys rejected).
    ``env`` defaults to ``os.environ``. ``overrides`` entries equal to None
    are skipped, so CLI layers can pass their option dict straight through.
    """
    env = os.environ if env is None else env
    values: dict = {}

    if config_file is not None:
        try:
            with open(config_file, "r", encoding="utf-8") as fh:
                loaded = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config file {config_file}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file {config_file} is not valid JSON: {exc}") from None
        if not isinstance(loaded, dict):
            raise ConfigError(f"config file {config_file} must hold a JSON object")
        for key, raw in loaded.items():
            if key not in _FIELD_TYPES:
                raise ConfigError(f"config file {config_file}: unknown key {key!r}")
            values[key] = _coerce(key, raw, f"config file {config_file}")

    for name, env_name in ENV_NAMES.items():
        if env_name in env:
            values[name] = _coerce(name, env[env_name], f"environment {env_name}")

    if overrides:
        for key, raw in overrides.items():
            if raw is None:
                continue
            if key not in _FIELD_TYPES:
                raise ConfigError(f"override: unknown key {key!r}")
            values[key] = _coerce(key, raw, "override")

    return GatewayConfig(**values)
