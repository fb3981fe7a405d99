"""Gateway service: run execution, cached analytics, inference composition.

One service instance owns a :class:`RunStore` and a bounded worker pool
(size 1 by default, so a desk-scale host never runs two optimizations at
once). HTTP and CLI layers call into this module and translate its
:class:`ApiError` exceptions; nothing here speaks HTTP.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import fields

from ..analytics import (
    MIN_CATEGORIZE_SIZE,
    AnalyticsError,
    ImportanceTiers,
    ParetoFront,
    analytics_document,
    categorize_variables,
)
from ..benchmark import build_schema, make_benchmark_instance
from ..inference import (
    BudgetError,
    ConfigurationError,
    ContextError,
    InferenceError,
    InferenceReport,
    Persona,
    PersonaError,
    PromptError,
    ReportError,
    build_context,
    build_prompt,
    infer,
)
from ..nsga2 import EngineError, NsgaParams, run_nsga2
from .config import GatewayConfig
from .errors import (
    ApiError,
    backend_error,
    conflict,
    not_found,
    validation_error,
)
from .store import RunDescriptor, RunStore, UnknownRunError

FRONT_DOCUMENT_FORMAT = "emoadvisor.front/1"

_PARAM_FIELDS = tuple(f.name for f in fields(NsgaParams))


def params_from_request(doc: dict | None) -> NsgaParams:
    """Build engine parameters from a request document, defaults filling gaps."""
    doc = {} if doc is None else doc
    if not isinstance(doc, dict):
        raise validation_error("params must be an object")
    unknown = sorted(set(doc) - set(_PARAM_FIELDS))
    if unknown:
        raise validation_error(
            f"unknown parameter field(s): {', '.join(unknown)}",
            detail={"fields": unknown},
        )
    try:
        return NsgaParams(**doc)
    except EngineError as exc:
        raise validation_error(str(exc)) from None
    except TypeError as exc:
        raise validation_error(f"invalid params: {exc}") from None


class GatewayService:
    """Runs, fronts, analytics, and inference over one file-backed store."""

    def __init__(self, config: GatewayConfig | None = None):
        self.config = config if config is not None else GatewayConfig()
        self.store = RunStore(self.config.store_path)
        self.schema = build_schema()
        self._pool = ThreadPoolExecutor(max_workers=self.config.worker_count)
        self._cache_lock = threading.Lock()
        self._front_cache: dict[str, ParetoFront] = {}
        self._analytics_cache: dict[str, dict] = {}
        self._tiers_cache: dict[str, ImportanceTiers | None] = {}

    def close(self) -> None:
        """Wait for in-flight runs and release the worker pool."""
        self._pool.shutdown(wait=True)

    # -- runs ---------------------------------------------------------------

    def create_run(self, params_doc: dict | None = None, instance_seed: int = 0) -> RunDescriptor:
        """Register and asynchronously execute an optimization run."""
        params = params_from_request(params_doc)
        if not isinstance(instance_seed, int) or isinstance(instance_seed, bool):
            raise validation_error("instance_seed must be an integer")
        try:
            instance = make_benchmark_instance(seed=instance_seed)
        except ValueError as exc:
            raise validation_error(f"invalid instance_seed: {exc}") from None
        instance_ref = f"{instance.calibration_tag}:{instance_seed}"
        descriptor = self.store.create(params, instance_seed, instance_ref)
        self._pool.submit(self._execute, descriptor.run_id, params, instance_seed)
        return descriptor

    def _execute(self, run_id: str, params: NsgaParams, instance_seed: int) -> None:
        try:
            self.store.set_status(run_id, "running")
            instance = make_benchmark_instance(seed=instance_seed)
            result = run_nsga2(instance, params)
            self.store.save_result(run_id, result)
        except Exception as exc:  # worker thread: anything escaping would vanish
            try:
                self.store.mark_failed(run_id, f"{type(exc).__name__}: {exc}")
            except Exception:
                pass

    def get_run(self, run_id: str) -> RunDescriptor:
        try:
            return self.store.get(run_id)
        except UnknownRunError as exc:
            raise not_found(str(exc)) from None

    def list_runs(self) -> list[RunDescriptor]:
        return self.store.list_runs()

    def _require_done(self, run_id: str) -> RunDescriptor:
        descriptor = self.get_run(run_id)
        if descriptor.status != "done":
            raise conflict(
                f"run {run_id} is {descriptor.status}; front available once done",
                detail={"status": descriptor.status},
            )
        return descriptor

    # -- fronts and analytics -------------------------------------------------

    def front(self, run_id: str) -> ParetoFront:
        """The completed run's front as a domain object (cached)."""
        self._require_done(run_id)
        with self._cache_lock:
            cached = self._front_cache.get(run_id)
        if cached is not None:
            return cached
        front = self.store.load_front(run_id)
        with self._cache_lock:
            self._front_cache[run_id] = front
        return front

    def analytics(self, run_id: str) -> dict:
        """Analytics bundle for a completed run; computed once, then cached."""
        self._require_done(run_id)
        with self._cache_lock:
            cached = self._analytics_cache.get(run_id)
        if cached is not None:
            return cached
        doc = self.store.load_analytics(run_id)
        if doc is None:
            self.store.save_analytics(run_id, analytics_document(self.front(run_id), self.schema))
            # Serve the round-tripped form so responses are byte-identical
            # whether analytics were computed this process or loaded on restart.
            doc = self.store.load_analytics(run_id)
        with self._cache_lock:
            self._analytics_cache[run_id] = doc
        return doc

    def _tiers(self, run_id: str) -> ImportanceTiers | None:
        with self._cache_lock:
            if run_id in self._tiers_cache:
                return self._tiers_cache[run_id]
        front = self.front(run_id)
        tiers = None
        if len(front) >= MIN_CATEGORIZE_SIZE:
            tiers = categorize_variables(front, self.schema)
        with self._cache_lock:
            self._tiers_cache[run_id] = tiers
        return tiers

    def get_front_document(self, run_id: str) -> dict:
        """Front rows exactly as stored, plus variable metadata and analytics."""
        descriptor = self._require_done(run_id)
        stored = self.store.load_result_document(run_id)
        return {
            "format": FRONT_DOCUMENT_FORMAT,
            "run_id": run_id,
            "instance_ref": descriptor.instance_ref,
            "schema": {
                "variables": [
                    {"index": spec.index, "name": spec.name, "unit": spec.unit}
                    for spec in self.schema.variables
                ]
            },
            "rows": stored["front"],
            "analytics": self.analytics(run_id),
        }

    # -- inference ------------------------------------------------------------

    def post_inference(
        self,
        run_id: str,
        selection: list[int] | None = None,
        persona_doc: dict | None = None,
        question: str = "",
        template: str | None = None,
        backend_mode: str | None = None,
    ) -> InferenceReport:
        """Compose context → prompt → backend for a completed run."""
        self._require_done(run_id)
        selection = [] if selection is None else selection
        if not isinstance(selection, list) or not all(
            isinstance(i, int) and not isinstance(i, bool) for i in selection
        ):
            raise validation_error("selection must be a list of integers")
        try:
            persona = Persona.from_document(persona_doc or {})
        except PersonaError as exc:
            raise validation_error(str(exc)) from None
        if backend_mode is not None and backend_mode not in ("offline", "live"):
            raise validation_error(
                f"backend_mode must be 'offline' or 'live', got {backend_mode!r}"
            )
        if not isinstance(question, str):
            raise validation_error("question must be a string")
        if template is not None and not isinstance(template, str):
            raise validation_error("template must be a string")

        front = self.front(run_id)
        analytics = self.analytics(run_id)
        tiers = self._tiers(run_id)
        try:
            context = build_context(front, analytics, selection, tiers, schema=self.schema)
            prompt = build_prompt(context, persona, question=question, template=template)
        except (ContextError, PromptError, BudgetError, AnalyticsError) as exc:
            raise validation_error(str(exc)) from None

        try:
            cfg = self.config.backend_config(backend_mode)
            return infer(prompt, cfg, store=self.store.report_store)
        except (ConfigurationError, InferenceError) as exc:
            raise backend_error(
                str(exc),
                detail={
                    "prompt_hash": prompt.prompt_hash,
                    "reports_path": str(self.store.reports_dir),
                },
            ) from None

    def get_report(self, prompt_hash: str) -> InferenceReport:
        try:
            return self.store.report_store.load(prompt_hash)
        except ReportError as exc:
            raise not_found(str(exc)) from None
