"""Operational shell: HTTP API, CLI, and file-backed run store."""

from .config import ENV_NAMES, ConfigError, GatewayConfig, load_config
from .errors import (
    ERROR_CODES,
    HTTP_STATUS_BY_CODE,
    ApiError,
    backend_error,
    conflict,
    internal_error,
    not_found,
    validation_error,
)
from .service import FRONT_DOCUMENT_FORMAT, GatewayService, params_from_request
from .store import (
    DESCRIPTOR_FORMAT,
    RUN_STATUSES,
    RunDescriptor,
    RunStore,
    StoreError,
    TransitionError,
    UnknownRunError,
)

__all__ = [
    "ENV_NAMES",
    "ConfigError",
    "GatewayConfig",
    "load_config",
    "ERROR_CODES",
    "HTTP_STATUS_BY_CODE",
    "ApiError",
    "backend_error",
    "conflict",
    "internal_error",
    "not_found",
    "validation_error",
    "FRONT_DOCUMENT_FORMAT",
    "GatewayService",
    "params_from_request",
    "DESCRIPTOR_FORMAT",
    "RUN_STATUSES",
    "RunDescriptor",
    "RunStore",
    "StoreError",
    "TransitionError",
    "UnknownRunError",
]
