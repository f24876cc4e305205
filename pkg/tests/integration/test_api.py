"""
API Integration Tests
FastAPI endpoint'lerinin doğru çalıştığını test eder.
Gerçek algoritmalar çalışır; oracle'lar problem gövdesinden kurulur.
"""
import pytest
from fastapi.testclient import TestClient

from src.main import app

TRIANGLE = {"kind": "vertices", "dimension": 2, "vertices": [[0, 0], [4, 0], [1, 3]], "budget": 3}


# =============================================================================
# FIXTURES
# =============================================================================

@pytest.fixture
def client():
    """Test client fixture."""
    return TestClient(app)


# =============================================================================
# ROOT / HEALTH
# =============================================================================

class TestRootEndpoint:

    def test_root_returns_app_info(self, client):
        response = client.get("/")

        assert response.status_code == 200
        data = response.json()
        assert data["app"] == "PolyProbe"
        assert "version" in data
        assert data["docs"] == "/docs"


class TestHealthEndpoint:

    def test_health_ok(self, client):
        response = client.get("/api/v1/health")

        assert response.status_code == 200
        assert response.json()["status"] == "ok"


# =============================================================================
# RECONSTRUCT ENDPOINT
# =============================================================================

class TestReconstruct:

    def test_triangle_with_budget_three(self, client):
        response = client.post("/api/v1/reconstruct", json={"problem": TRIANGLE})

        assert response.status_code == 200
        data = response.json()
        assert data["algorithm"] == "r2"
        assert data["vertices"] == [[0, 0], [1, 3], [4, 0]]
        assert data["oracle_calls"] == 7
        assert data["bound"] == 9
        assert data["audit"] == "pass"
        assert data["recovered"] is True
        assert "trace" not in data

    def test_trace_included_on_request(self, client):
        response = client.post(
            "/api/v1/reconstruct",
            json={"problem": TRIANGLE, "include_trace": True, "early_stop": False}
        )

        data = response.json()
        assert data["oracle_calls"] == 8
        assert len(data["trace"]["records"]) == 8
        assert data["trace"]["records"][0]["branch"] == "init"

    def test_rational_coordinates_round_trip_as_strings(self, client):
        problem = {"kind": "vertices", "dimension": 3, "vertices": [["1/2", 0, "-3/4"]], "budget": 1}
        response = client.post("/api/v1/reconstruct", json={"problem": problem})

        data = response.json()
        assert data["algorithm"] == "nf1"
        assert data["vertices"] == [["1/2", 0, "-3/4"]]
        assert data["oracle_calls"] == 3

    def test_finite_max_problem(self, client):
        problem = {
            "kind": "finite_max",
            "dimension": 3,
            "anchor": [1, 1, 1],
            "pieces": [
                {"gradient": [1, 0, 0]},
                {"gradient": [0, 1, 0]},
                {"gradient": [0, 0, 1]},
                {"gradient": [-1, -1, -1], "offset": -5},
            ],
            "budget": 3,
        }
        response = client.post("/api/v1/reconstruct", json={"problem": problem})

        data = response.json()
        assert data["algorithm"] == "nf3"
        assert data["vertices"] == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
        assert data["recovered"] is True
        assert data["audit"] == "pass"


# =============================================================================
# RECONSTRUCT ENDPOINT - Error Handling
# =============================================================================

class TestReconstructErrors:

    def test_float_coordinates_rejected(self, client):
        problem = {"kind": "vertices", "dimension": 1, "vertices": [[0.5]]}
        response = client.post("/api/v1/reconstruct", json={"problem": problem})

        assert response.status_code == 422

    def test_missing_problem(self, client):
        response = client.post("/api/v1/reconstruct", json={})

        assert response.status_code == 422

    def test_open_problem_is_unsupported(self, client):
        problem = {"kind": "vertices", "dimension": 3, "vertices": [[0, 0, 0]], "budget": "infinity"}
        response = client.post("/api/v1/reconstruct", json={"problem": problem})

        assert response.status_code == 422
        detail = response.json()["detail"]
        assert detail["error"] == "unsupported"
        assert "still open" in detail["message"]

    def test_noisy_oracle_conflict(self, client):
        response = client.post(
            "/api/v1/reconstruct",
            json={"problem": TRIANGLE, "epsilon": "1/100", "seed": 42}
        )

        assert response.status_code == 409
        detail = response.json()["detail"]
        assert detail["error"] == "inconsistent-oracle"
        assert detail["call_index"] >= 1

    def test_budget_exhausted_conflict(self, client):
        problem = {"kind": "vertices", "dimension": 3, "vertices": [[0, 0, 0], [2, 2, 0], [1, 2, 0]], "budget": 2}
        response = client.post("/api/v1/reconstruct", json={"problem": problem})

        assert response.status_code == 409
        assert response.json()["detail"]["error"] == "budget-exhausted"


# =============================================================================
# BOUNDS ENDPOINT
# =============================================================================

class TestBounds:

    def test_rows_in_match_order(self, client):
        response = client.get("/api/v1/bounds")

        assert response.status_code == 200
        rows = response.json()["rows"]
        assert rows[0]["key"] == "r1-single"
        triple = next(r for r in rows if r["key"] == "nf3-triple")
        assert (triple["per_n"], triple["const"]) == (5, -1)
