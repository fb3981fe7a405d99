"""Evolutionary multi-objective design advisor.

Optimizes a calibrated sustainable-infrastructure benchmark with NSGA-II,
analyzes the resulting cost/impact front (extremes, knee, variable
importance, trade-offs), and explains solutions through persona-aware
narratives backed by a pluggable inference backend. An HTTP gateway and a
CLI expose the whole pipeline.
"""

__version__ = "0.1.0"
