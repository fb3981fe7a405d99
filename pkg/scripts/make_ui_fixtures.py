"""Capture HTTP API responses as fixtures for the browser UI test suite.

Runs a real gateway server over a throwaway store, executes the full-scale
benchmark run (population 500, 2000 generations, seed 0), and saves the raw
response bytes of every endpoint the UI consumes. Also captures the offline
CLI briefing for the same front (the UI asserts both surfaces produce the
same text) and builds a front document from the committed reference rows.

Usage: python3 scripts/make_ui_fixtures.py
"""

from __future__ import annotations

import json
import shutil
import subprocess
import sys
import tempfile
import time
from pathlib import Path

import httpx

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURE_DIR = REPO_ROOT / "frontend" / "tests" / "fixtures"
GOLDEN_PREAMBLES = REPO_ROOT / "tests" / "goldens" / "persona_preambles.json"

PORT = 8841
BASE = f"http://127.0.0.1:{PORT}"
RUN_PARAMS = {"population_size": 500, "generations": 2000, "seed": 2}
DEFAULT_PERSONA = {"expertise": "executive", "goal": "none", "language_register": "plain"}


def wait_ready(client: httpx.Client, deadline: float) -> None:
    while time.monotonic() < deadline:
        try:
            if client.get(f"{BASE}/runs").status_code == 200:
                return
        except httpx.TransportError:
            time.sleep(0.2)
    raise RuntimeError("server did not become ready")


def wait_done(client: httpx.Client, run_id: str, deadline: float) -> None:
    while time.monotonic() < deadline:
        status = client.get(f"{BASE}/runs/{run_id}").json()["status"]
        if status == "done":
            return
        if status == "failed":
            raise RuntimeError("run failed")
        time.sleep(0.5)
    raise RuntimeError("run did not finish in time")


def excerpt_front_document() -> dict:
    """A front document with the display-precision excerpt rows, shaped as served."""
    from emoadvisor.analytics import analytics_document
    from emoadvisor.benchmark import build_schema
    from emoadvisor.reference import load_excerpt_front

    front = load_excerpt_front()
    rows = [
        {
            "objectives": [sol.f.total_cost, sol.f.environmental_impact],
            "variables": list(map(float, sol.x)),
        }
        for sol in front
    ]
    schema = build_schema()
    doc = analytics_document(front, schema)
    # round-trip like the gateway store so the fixture matches served bytes
    analytics = json.loads(json.dumps(doc, sort_keys=True))
    return {
        "format": "emoadvisor.front/1",
        "run_id": "excerpt-fixture",
        "instance_ref": front.instance_ref,
        "schema": {
            "variables": [
                {"index": spec.index, "name": spec.name, "unit": spec.unit}
                for spec in schema.variables
            ]
        },
        "rows": rows,
        "analytics": analytics,
    }


def main() -> int:
    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)
    store = Path(tempfile.mkdtemp(prefix="ui-fixture-store-"))
    server = subprocess.Popen(
        ["emoadvisor", "serve", "--host", "127.0.0.1", "--port", str(PORT), "--store", str(store)],
        stdout=subprocess.DEVNULL,
        stderr=subprocess.DEVNULL,
    )
    try:
        with httpx.Client(timeout=10.0) as client:
            wait_ready(client, time.monotonic() + 15)

            created = client.post(f"{BASE}/runs", json={"params": RUN_PARAMS})
            created.raise_for_status()
            run_id = created.json()["run_id"]
            wait_done(client, run_id, time.monotonic() + 150)

            captures = {
                "run_descriptor.json": client.get(f"{BASE}/runs/{run_id}"),
                "front_criterion3.json": client.get(f"{BASE}/runs/{run_id}/front"),
                "analytics_criterion3.json": client.get(f"{BASE}/runs/{run_id}/analytics"),
                "error_envelope.json": client.get(f"{BASE}/runs/ffffffffffff"),
            }
            inference = client.post(
                f"{BASE}/runs/{run_id}/inference",
                json={"template": "categorize", "selection": [], "persona": DEFAULT_PERSONA},
            )
            inference.raise_for_status()
            captures["inference_categorize.json"] = inference
            prompt_hash = inference.json()["prompt_hash"]
            captures["report_categorize.json"] = client.get(f"{BASE}/reports/{prompt_hash}")

            for name, response in captures.items():
                (FIXTURE_DIR / name).write_bytes(response.content)

        front_csv = store / "runs" / run_id / "front.csv"
        cli = subprocess.run(
            ["emoadvisor", "infer", "--front", str(front_csv), "--template", "categorize"],
            capture_output=True,
            text=True,
            check=True,
        )
        (FIXTURE_DIR / "cli_categorize.txt").write_text(cli.stdout)
    finally:
        server.terminate()
        server.wait(timeout=10)
        shutil.rmtree(store, ignore_errors=True)

    (FIXTURE_DIR / "front_excerpt.json").write_text(
        json.dumps(excerpt_front_document(), sort_keys=True)
    )
    shutil.copyfile(GOLDEN_PREAMBLES, FIXTURE_DIR / "persona_preambles.json")

    front = json.loads((FIXTURE_DIR / "front_criterion3.json").read_text())
    print(f"captured run {front['run_id']}: {len(front['rows'])} front rows")
    print(f"fixtures written to {FIXTURE_DIR}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
