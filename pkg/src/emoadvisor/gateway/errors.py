"""Closed error vocabulary for the gateway API and service layer.

Every failure surfaced to a client carries one of five codes; nothing else
escapes (in particular, no stack traces). The service layer raises
:class:`ApiError` directly; the HTTP layer maps codes onto status codes.
"""

from __future__ import annotations

ERROR_CODES = ("validation", "not_found", "conflict", "backend", "internal")

HTTP_STATUS_BY_CODE = {
    "validation": 400,
    "not_found": 404,
    "conflict": 409,
    "backend": 502,
    "internal": 500,
}


class ApiError(Exception):
    """A client-visible failure with a code from the closed enumeration."""

    def __init__(self, code: str, message: str, detail: dict | None = None):
        if code not in ERROR_CODES:
            raise ValueError(f"unknown error code {code!r}; expected one of {ERROR_CODES}")
        self.code = code
        self.message = message
        self.detail = detail
        super().__init__(message)

    def to_document(self) -> dict:
        doc: dict = {"code": self.code, "message": self.message}
        if self.detail is not None:
            doc["detail"] = self.detail
        return {"error": doc}

    @property
    def http_status(self) -> int:
        return HTTP_STATUS_BY_CODE[self.code]


def validation_error(message: str, detail: dict | None = None) -> ApiError:
    return ApiError("validation", message, detail)


def not_found(message: str, detail: dict | None = None) -> ApiError:
    return ApiError("not_found", message, detail)


def conflict(message: str, detail: dict | None = None) -> ApiError:
    return ApiError("conflict", message, detail)


def backend_error(message: str, detail: dict | None = None) -> ApiError:
    return ApiError("backend", message, detail)


def internal_error(message: str, detail: dict | None = None) -> ApiError:
    return ApiError("internal", message, detail)
