"""Calibrated 50-variable sustainable-infrastructure benchmark instance.

The design space covers four strongly coupled "driver" variables that trade
cost against impact across the whole front, five "hinge" variables whose
impact leverage kicks in only near the low-impact end, and 41 variables tied
to a single objective (or to none of consequence) that an optimizer pins at
their preferred bound.

Structure of the two objectives:

  total cost   = construction + maintenance + operations          (M$)
  impact score = irreducible base + weighted per-variable factors (unitless)

Every variable enters through its normalized position t in [0, 1], where
t = 0 is the bound an all-cost-minimizing design would choose:

  driver       cost += A*t + Q*t^2
               factor = ((1-t)^beta + eps*(1-t)) / (1+eps)
  hinge        cost += a*t
               factor = (max(0, c-t)^2/c^2 + eps_h*(1-t)) / (1+eps_h)
  cost flat    cost += span*t
  impact flat  factor = t

Numeric coefficients live in a committed, self-describing document produced
by scripts/calibrate_benchmark.py; see data/benchmark_coefficients.json.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import numpy as np

from . import kernels
from .kernels import ROLE_COST_FLAT, ROLE_DRIVER, ROLE_HINGE, ROLE_IMPACT_FLAT
from .problem import ProblemInstance
from .schema import VariableSchema, VariableSpec

COEFFICIENTS_FORMAT = "emoadvisor.benchmark.coefficients/1"
DOCUMENT_FORMAT = "emoadvisor.benchmark/1"

COMPONENT_NAMES = ("construction", "maintenance", "operations")

_ROLE_CODES = {
    "driver": ROLE_DRIVER,
    "hinge": ROLE_HINGE,
    "cost_flat": ROLE_COST_FLAT,
    "impact_flat": ROLE_IMPACT_FLAT,
}

# One row per variable, ordered by 1-based index:
# (name, unit, lower, upper, better, tier_hint, role, t_at_upper, comp, span)
# t_at_upper: True when t runs 0 -> 1 from the lower to the upper bound.
# comp: which cost component a cost-bearing variable belongs to.
# span: cost delta (M$) for cost flats, impact weight for impact flats.
_CATALOG: tuple = (
    ("Cost Efficiency", "Units/$", 35.0, 50.0, "higher", "primary", "driver", False, 0, 0.0),
    ("Durability", "Years", 25.0, 45.0, "higher", "primary", "driver", True, 0, 0.0),
    ("Renewable Energy Usage", "%", 15.0, 55.0, "higher", "primary", "driver", True, 0, 0.0),
    ("Carbon Footprint", "kt CO2e/yr", 20.0, 120.0, "lower", "primary", "driver", False, 0, 0.0),
    ("Water Usage", "ML/yr", 400.0, 1600.0, "lower", "secondary", "hinge", False, 1, 0.0),
    ("Waste Production", "kt/yr", 5.0, 45.0, "lower", "secondary", "hinge", False, 1, 0.0),
    ("Land Use", "ha", 80.0, 200.0, "lower", "secondary", "hinge", False, 1, 0.0),
    ("Energy Efficiency", "%", 60.0, 95.0, "higher", "secondary", "hinge", True, 1, 0.0),
    ("Maintenance Cost", "M$/yr", 8.0, 20.0, "lower", "secondary", "hinge", True, 1, 0.0),
    ("Innovation Index", "pts", 20.0, 90.0, "higher", "additional", "impact_flat", False, 2, 0.006),
    ("Environmental Impact Score", "pts", 10.0, 95.0, "higher", "additional", "impact_flat", False, 2, 0.008),
    ("Community Impact", "pts", 20.0, 95.0, "higher", "additional", "impact_flat", False, 2, 0.005),
    ("Regulatory Compliance", "%", 70.0, 100.0, "higher", "additional", "impact_flat", False, 2, 0.004),
    ("Stakeholder Satisfaction", "pts", 40.0, 95.0, "higher", "additional", "impact_flat", False, 2, 0.005),
    ("Noise Level", "dB", 35.0, 75.0, "lower", None, "impact_flat", True, 2, 0.003),
    ("Job Creation", "jobs", 100.0, 800.0, "higher", None, "cost_flat", True, 2, 0.35),
    ("Safety Record", "pts", 60.0, 100.0, "higher", None, "impact_flat", False, 2, 0.004),
    ("Construction Time", "months", 12.0, 48.0, "lower", None, "cost_flat", True, 0, 0.30),
    ("Material Recyclability", "%", 10.0, 90.0, "higher", None, "impact_flat", False, 2, 0.006),
    ("Permitting Complexity", "pts", 10.0, 80.0, "lower", None, "cost_flat", True, 0, 0.15),
    ("Biodiversity Disruption", "pts", 5.0, 60.0, "lower", None, "impact_flat", True, 2, 0.007),
    ("Air Pollutant Emissions", "t/yr", 10.0, 200.0, "lower", None, "impact_flat", True, 2, 0.008),
    ("Soil Contamination Risk", "pts", 5.0, 50.0, "lower", None, "impact_flat", True, 2, 0.005),
    ("Light Pollution", "pts", 5.0, 40.0, "lower", None, "impact_flat", True, 2, 0.002),
    ("Traffic Disruption", "pts", 10.0, 70.0, "lower", None, "cost_flat", True, 0, 0.12),
    ("Skilled Labor Demand", "FTE", 50.0, 400.0, "lower", None, "cost_flat", True, 2, 0.20),
    ("Equipment Utilization", "%", 50.0, 95.0, "higher", None, "cost_flat", False, 2, 0.18),
    ("Local Sourcing Share", "%", 10.0, 90.0, "higher", None, "impact_flat", False, 2, 0.004),
    ("Water Recycling Rate", "%", 20.0, 95.0, "higher", None, "impact_flat", False, 2, 0.006),
    ("Flood Resilience", "pts", 30.0, 95.0, "higher", None, "impact_flat", False, 2, 0.003),
    ("Seismic Safety Margin", "%", 100.0, 180.0, "higher", None, "cost_flat", True, 0, 0.25),
    ("Fire Safety Rating", "pts", 60.0, 100.0, "higher", None, "impact_flat", False, 2, 0.002),
    ("Heat Island Contribution", "degC", 0.2, 3.0, "lower", None, "impact_flat", True, 2, 0.004),
    ("Construction Waste Diversion", "%", 20.0, 95.0, "higher", None, "impact_flat", False, 2, 0.005),
    ("Automation Level", "%", 10.0, 80.0, "higher", None, "cost_flat", False, 2, 0.20),
    ("Digital Monitoring Coverage", "%", 20.0, 95.0, "higher", None, "cost_flat", False, 2, 0.12),
    ("Spare Parts Inventory", "M$", 1.0, 12.0, "lower", None, "cost_flat", True, 2, 0.11),
    ("Subcontractor Overhead", "pts", 5.0, 40.0, "lower", None, "cost_flat", True, 0, 0.08),
    ("Accessibility Compliance", "%", 80.0, 100.0, "higher", None, "impact_flat", False, 2, 0.002),
    ("Cultural Heritage Preservation", "pts", 50.0, 100.0, "higher", None, "impact_flat", False, 2, 0.003),
    ("Visual Impact", "pts", 5.0, 60.0, "lower", None, "impact_flat", True, 2, 0.004),
    ("Recreational Co-benefit", "pts", 10.0, 80.0, "higher", None, "impact_flat", False, 2, 0.002),
    ("Commissioning Complexity", "pts", 10.0, 70.0, "lower", None, "cost_flat", True, 0, 0.10),
    ("Insurance Premium", "M$/yr", 0.5, 5.0, "lower", None, "cost_flat", True, 2, 0.16),
    ("Financing Spread", "%", 0.5, 4.0, "lower", None, "cost_flat", True, 2, 0.14),
    ("Logistics Distance", "km", 10.0, 150.0, "lower", None, "cost_flat", True, 2, 0.18),
    ("Stakeholder Engagement Hours", "hrs", 100.0, 2000.0, "higher", None, "cost_flat", True, 2, 0.22),
    ("Lifecycle Assessment Coverage", "%", 30.0, 100.0, "higher", None, "impact_flat", False, 2, 0.003),
    ("Operational Flexibility", "pts", 20.0, 90.0, "higher", None, "cost_flat", False, 2, 0.12),
    ("Supply Chain Stability", "pts", 40.0, 95.0, "higher", None, "cost_flat", False, 2, 0.15),
)

DRIVER_INDICES = tuple(i + 1 for i, row in enumerate(_CATALOG) if row[6] == "driver")
HINGE_INDICES = tuple(i + 1 for i, row in enumerate(_CATALOG) if row[6] == "hinge")
FLAT_INDICES = tuple(i + 1 for i, row in enumerate(_CATALOG) if row[6].endswith("flat"))


def build_schema() -> VariableSchema:
    """The fixed 50-variable schema of the calibrated benchmark."""
    return VariableSchema(
        tuple(
            VariableSpec(
                index=i + 1,
                name=row[0],
                unit=row[1],
                lower=row[2],
                upper=row[3],
                better_direction=row[4],
                tier_hint=row[5],
            )
            for i, row in enumerate(_CATALOG)
        )
    )


@lru_cache(maxsize=1)
def load_coefficients() -> dict:
    """Load the committed calibrated coefficient document."""
    text = resources.files("emoadvisor").joinpath("data/benchmark_coefficients.json").read_text()
    coeffs = json.loads(text)
    if coeffs.get("format") != COEFFICIENTS_FORMAT:
        raise ValueError(f"unexpected coefficient format {coeffs.get('format')!r}")
    return coeffs


@dataclass(frozen=True)
class BenchmarkParams:
    """Per-variable parameter arrays consumed by the evaluation kernels."""

    role: np.ndarray
    t_at_upper: np.ndarray
    lo: np.ndarray
    hi: np.ndarray
    cost_lin: np.ndarray
    cost_quad: np.ndarray
    beta: np.ndarray
    eps: np.ndarray
    hinge_c: np.ndarray
    imp_w: np.ndarray
    comp_id: np.ndarray
    comp_base: np.ndarray
    impact_base: float


def build_params(coefficients: dict | None = None) -> BenchmarkParams:
    """Assemble kernel parameter arrays from a coefficient document."""
    coeffs = load_coefficients() if coefficients is None else coefficients
    d = len(_CATALOG)
    role = np.empty(d, dtype=np.int64)
    t_at_upper = np.empty(d, dtype=np.bool_)
    lo = np.empty(d)
    hi = np.empty(d)
    cost_lin = np.zeros(d)
    cost_quad = np.zeros(d)
    beta = np.ones(d)
    eps = np.zeros(d)
    hinge_c = np.ones(d)
    imp_w = np.zeros(d)
    comp_id = np.empty(d, dtype=np.int64)
    drivers = coeffs["drivers"]
    hinges = coeffs["hinges"]
    for i, row in enumerate(_CATALOG):
        name, _, lo_i, hi_i, _, _, role_s, t_up, comp, span = row
        idx = str(i + 1)
        role[i] = _ROLE_CODES[role_s]
        t_at_upper[i] = t_up
        lo[i] = lo_i
        hi[i] = hi_i
        comp_id[i] = comp
        if role_s == "driver":
            entry = drivers[idx]
            cost_lin[i] = entry["cost_lin"]
            cost_quad[i] = entry["cost_quad"]
            imp_w[i] = entry["impact_weight"]
            beta[i] = coeffs["beta"]
            eps[i] = coeffs["eps"]
        elif role_s == "hinge":
            entry = hinges[idx]
            cost_lin[i] = entry["cost_lin"]
            imp_w[i] = entry["impact_weight"]
            hinge_c[i] = entry["corner"]
            eps[i] = coeffs["hinge_eps"]
        elif role_s == "cost_flat":
            cost_lin[i] = span
        else:
            imp_w[i] = span
    comp_base = np.array([coeffs["base_costs"][n] for n in COMPONENT_NAMES])
    return BenchmarkParams(
        role=role,
        t_at_upper=t_at_upper,
        lo=lo,
        hi=hi,
        cost_lin=cost_lin,
        cost_quad=cost_quad,
        beta=beta,
        eps=eps,
        hinge_c=hinge_c,
        imp_w=imp_w,
        comp_id=comp_id,
        comp_base=comp_base,
        impact_base=float(coeffs["impact_base"]),
    )


def _t_scalar(x: np.ndarray, i: int, par: BenchmarkParams) -> float:
    span = par.hi[i] - par.lo[i]
    if par.t_at_upper[i]:
        return (x[i] - par.lo[i]) / span
    return (par.hi[i] - x[i]) / span


def _cost_contrib(x: np.ndarray, i: int, par: BenchmarkParams) -> float:
    t = _t_scalar(x, i, par)
    if par.role[i] == ROLE_DRIVER:
        return par.cost_lin[i] * t + par.cost_quad[i] * (t * t)
    return par.cost_lin[i] * t


def _impact_factor(x: np.ndarray, i: int, par: BenchmarkParams) -> float:
    t = _t_scalar(x, i, par)
    if par.role[i] == ROLE_DRIVER:
        one_m = 1.0 - t
        return (one_m ** par.beta[i] + par.eps[i] * one_m) / (1.0 + par.eps[i])
    if par.role[i] == ROLE_HINGE:
        one_m = 1.0 - t
        dd = par.hinge_c[i] - t
        qq = dd / par.hinge_c[i]
        quad = qq * qq if dd > 0.0 else 0.0
        return (quad + par.eps[i] * one_m) / (1.0 + par.eps[i])
    return t


def _component_fn(par: BenchmarkParams, comp: int):
    members = [
        i
        for i in range(len(_CATALOG))
        if par.comp_id[i] == comp and par.role[i] != ROLE_IMPACT_FLAT
    ]

    def component(x: np.ndarray) -> float:
        acc = float(par.comp_base[comp])
        for i in members:
            acc += _cost_contrib(x, i, par)
        return acc

    return component


def _factor_fn(par: BenchmarkParams, i: int):
    def factor(x: np.ndarray) -> float:
        return _impact_factor(x, i, par)

    return factor


def _coefficients_tag(coeffs: dict) -> str:
    canonical = json.dumps(coeffs, sort_keys=True, separators=(",", ":"))
    return "bench-" + hashlib.sha256(canonical.encode()).hexdigest()[:12]


def make_benchmark_instance(seed: int = 0, coefficients: dict | None = None) -> ProblemInstance:
    """Build the calibrated benchmark as an immutable problem instance.

    The instance carries the three cost component functions, the ordered
    impact factors (irreducible base first, then variables by index), and a
    vectorized population evaluator backed by the active kernel backend.
    """
    coeffs = load_coefficients() if coefficients is None else coefficients
    par = build_params(coeffs)
    schema = build_schema()
    components = tuple(_component_fn(par, k) for k in range(len(COMPONENT_NAMES)))
    factor_vars = [i for i in range(len(_CATALOG)) if par.imp_w[i] != 0.0]
    factors = tuple([lambda x: 1.0] + [_factor_fn(par, i) for i in factor_vars])
    weights = np.concatenate(([par.impact_base], par.imp_w[factor_vars]))

    def population_evaluator(X: np.ndarray) -> np.ndarray:
        X = np.ascontiguousarray(X, dtype=np.float64)
        return kernels.eval_population(
            X,
            par.role,
            par.t_at_upper,
            par.lo,
            par.hi,
            par.cost_lin,
            par.cost_quad,
            par.beta,
            par.eps,
            par.hinge_c,
            par.imp_w,
            par.comp_id,
            par.comp_base,
            par.impact_base,
        )

    return ProblemInstance(
        schema=schema,
        cost_components=components,
        impact_factors=factors,
        impact_weights=weights,
        calibration_tag=_coefficients_tag(coeffs),
        seed=seed,
        population_evaluator=population_evaluator,
    )


def to_document(p: ProblemInstance, coefficients: dict | None = None) -> dict:
    """Serialize a benchmark instance to a versioned, self-describing dict."""
    coeffs = load_coefficients() if coefficients is None else coefficients
    if _coefficients_tag(coeffs) != p.calibration_tag:
        raise ValueError("instance was not built from the given coefficients")
    return {
        "format": DOCUMENT_FORMAT,
        "seed": p.seed,
        "calibration_tag": p.calibration_tag,
        "schema": p.schema.to_rows(),
        "coefficients": coeffs,
    }


def from_document(doc: dict) -> ProblemInstance:
    """Rebuild a benchmark instance from its serialized document."""
    if doc.get("format") != DOCUMENT_FORMAT:
        raise ValueError(f"unexpected document format {doc.get('format')!r}")
    instance = make_benchmark_instance(seed=int(doc["seed"]), coefficients=doc["coefficients"])
    if doc.get("calibration_tag") != instance.calibration_tag:
        raise ValueError("calibration tag does not match the embedded coefficients")
    if doc.get("schema") != instance.schema.to_rows():
        raise ValueError("schema rows do not match the benchmark catalog")
    return instance
