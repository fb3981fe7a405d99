from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, HTTPServer

import numpy as np
import pytest

from emoadvisor.analytics import ParetoFront, analytics_document, categorize_variables
from emoadvisor.benchmark import build_schema, make_benchmark_instance
from emoadvisor.nsga2 import Individual, NsgaParams, run_nsga2
from emoadvisor.problem import ObjectiveVector
from emoadvisor.reference import load_excerpt_front, load_reference_front


@pytest.fixture(scope="session")
def schema():
    return build_schema()


@pytest.fixture(scope="session")
def benchmark_instance():
    return make_benchmark_instance(seed=0)


@pytest.fixture(scope="session")
def reference_front():
    return load_reference_front()


@pytest.fixture(scope="session")
def excerpt_front():
    return load_excerpt_front()


@pytest.fixture(scope="session")
def reference_tiers(reference_front, schema):
    return categorize_variables(reference_front, schema)


@pytest.fixture(scope="session")
def reference_analytics(reference_front, schema):
    return analytics_document(reference_front, schema)


@pytest.fixture(scope="session")
def small_run(benchmark_instance):
    """A quick benchmark run shared by tests that need a real RunResult."""
    params = NsgaParams(population_size=40, generations=30, seed=11)
    return run_nsga2(benchmark_instance, params)


class StubBackend:
    """Scriptable chat-completion endpoint on a local port.

    ``script`` is a queue of (status_code, payload) responses, consumed one
    per request; when it runs dry the last entry repeats. Every request is
    recorded with its headers and parsed JSON body.
    """

    def __init__(self):
        self.script: list[tuple[int, dict]] = [(200, self.completion("ok"))]
        self.requests: list[dict] = []
        self._lock = threading.Lock()
        stub = self

        class Handler(BaseHTTPRequestHandler):
            def do_POST(self):
                length = int(self.headers.get("Content-Length", "0"))
                raw = self.rfile.read(length)
                with stub._lock:
                    stub.requests.append(
                        {
                            "path": self.path,
                            "authorization": self.headers.get("Authorization", ""),
                            "body": json.loads(raw) if raw else None,
                        }
                    )
                    index = min(len(stub.requests) - 1, len(stub.script) - 1)
                    status, payload = stub.script[index]
                body = json.dumps(payload).encode("utf-8")
                self.send_response(status)
                self.send_header("Content-Type", "application/json")
                self.send_header("Content-Length", str(len(body)))
                self.end_headers()
                self.wfile.write(body)

            def log_message(self, *args):
                pass

        self._server = HTTPServer(("127.0.0.1", 0), Handler)
        self.url = f"http://127.0.0.1:{self._server.server_port}/v1/chat/completions"
        self._thread = threading.Thread(target=self._server.serve_forever, daemon=True)
        self._thread.start()

    @staticmethod
    def completion(text: str) -> dict:
        return {"choices": [{"message": {"role": "assistant", "content": text}}]}

    def reset(self, script):
        with self._lock:
            self.script = list(script)
            self.requests = []

    def close(self):
        self._server.shutdown()
        self._server.server_close()


@pytest.fixture()
def stub_backend():
    stub = StubBackend()
    yield stub
    stub.close()


def make_front(objectives, instance_ref="test") -> ParetoFront:
    """Build a front from raw (cost, impact) pairs with 2-variable fillers."""
    solutions = [
        Individual(
            x=np.array([float(i), float(i) + 0.5]),
            f=ObjectiveVector(float(c), float(e)),
        )
        for i, (c, e) in enumerate(objectives)
    ]
    return ParetoFront(solutions, instance_ref=instance_ref)
