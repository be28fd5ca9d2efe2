import json
import math

import pytest
from fastapi.testclient import TestClient

from cyclosqueeze.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    response = client.get("/v1/health")
    assert response.status_code == 200
    assert json.loads(response.content) == {"schema_version": 1, "status": "ok"}


def test_matrices_document(client):
    response = client.post("/v1/matrices", json={"n": 4, "lambda": 0.3})
    assert response.status_code == 200
    doc = json.loads(response.content)
    assert doc["schema_version"] == 1
    assert doc["n"] == 4 and doc["lambda"] == 0.3
    assert abs(doc["denominator_det"] - math.cosh(0.3) ** 2) < 1e-12
    for key in (
        "position_transform",
        "momentum_transform",
        "gram",
        "gram_inverse",
        "denominator",
        "denominator_inverse",
        "creation",
        "cross",
        "annihilation",
    ):
        block = doc[key]
        assert len(block) == 4 and all(len(row) == 4 for row in block)


def test_matrices_zero_squeezing_blocks(client):
    doc = json.loads(client.post("/v1/matrices", json={"n": 2, "lambda": 0.0}).content)
    assert doc["prefactor"] == 1.0
    assert doc["creation"] == [[0.0, 0.0], [0.0, 0.0]]
    assert doc["gram"] == [[1.0, 0.0], [0.0, 1.0]]


def test_matrices_three_mode_gram(client):
    doc = json.loads(client.post("/v1/matrices", json={"n": 3, "lambda": 0.5}).content)
    u = (2.0 / 3.0) * math.exp(0.5) + (1.0 / 3.0) * math.exp(-1.0)
    v = (1.0 / 3.0) * (math.exp(-1.0) - math.exp(0.5))
    assert doc["gram"][0][0] == pytest.approx(u, abs=1e-13)
    assert doc["gram"][0][1] == pytest.approx(v, abs=1e-13)


def test_variances_document(client):
    doc = json.loads(client.post("/v1/variances", json={"n": 5, "lambda": 1.0}).content)
    assert doc["reference_var_x1"] == math.exp(-2.0) / 4.0
    assert abs(doc["var_x1"] - doc["reference_var_x1"]) < 1e-12
    assert abs(doc["product"] - 0.0625) < 1e-13


def test_state_document(client):
    doc = json.loads(client.post("/v1/state", json={"n": 2, "lambda": 0.4}).content)
    assert abs(doc["prefactor"] - 1.0 / math.cosh(0.4)) < 1e-13
    assert abs(doc["pair_coefficient"][0][1] + math.tanh(0.4)) < 1e-13


def test_wigner_json_grid(client):
    request = {
        "n": 2,
        "lambda": 0.6,
        "axis_a": "q1",
        "axis_b": "q2",
        "min_a": -1,
        "max_a": 1,
        "steps_a": 3,
        "min_b": -1,
        "max_b": 1,
        "steps_b": 3,
    }
    doc = json.loads(client.post("/v1/wigner", json=request).content)
    assert doc["origin_value"] == math.pi**-2
    assert len(doc["rows"]) == 9
    center = [row for row in doc["rows"] if row[0] == 0.0 and row[1] == 0.0]
    assert center[0][2] == math.pi**-2


def test_wigner_csv(client):
    request = {"n": 2, "lambda": 0.0, "steps_a": 2, "steps_b": 2, "format": "csv"}
    response = client.post("/v1/wigner", json=request)
    assert response.headers["content-type"].startswith("text/csv")
    lines = response.text.splitlines()
    assert "coord_a,coord_b,w" in lines
    assert lines[0] == "# schema_version=1"
    header_at = lines.index("coord_a,coord_b,w")
    assert len(lines) == header_at + 1 + 4


def test_identities_document(client):
    doc = json.loads(
        client.post("/v1/identities", json={"n": 6, "l_max": 10, "lambda": 0.5}).content
    )
    assert len(doc["rows"]) == 11
    assert all(row["exact"] for row in doc["rows"])
    assert doc["rows"][10]["entry_sum"] == 2**10 * 6
    sums = doc["gram_sums"]
    assert abs(sums["entry_sum"] - sums["entry_sum_reference"]) < 1e-11


def test_verify_document(client):
    doc = json.loads(client.post("/v1/verify", json={"n": 4, "lambda": 0.3}).content)
    assert doc["passed"] is True
    names = {check["name"] for check in doc["checks"]}
    assert "cayley-hamilton-quartic" in names
    assert "four-mode-vacuum-pattern" in names
    assert all(check["residual"] <= check["tolerance"] for check in doc["checks"])


def test_verify_with_oracle(client):
    doc = json.loads(
        client.post(
            "/v1/verify", json={"n": 2, "lambda": 0.4, "oracle": True, "cutoff": 16}
        ).content
    )
    assert doc["passed"] is True
    assert doc["cutoff"] == 16
    names = {check["name"] for check in doc["checks"]}
    assert "oracle-schmidt-ladder" in names


def test_validation_errors(client):
    assert client.post("/v1/matrices", json={"n": 1, "lambda": 0.3}).status_code == 422
    assert client.post("/v1/matrices", json={"n": 2, "lambda": 1e9}).status_code == 422
    response = client.post("/v1/wigner", json={"n": 2, "lambda": 0.1, "axis_a": "q7"})
    assert response.status_code == 422
    response = client.post(
        "/v1/verify", json={"n": 3, "lambda": 0.8, "oracle": True, "cutoff": 6}
    )
    assert response.status_code == 422  # multimode oracle restricted to small lam


def test_identical_requests_identical_bytes(client):
    payload = {"n": 3, "lambda": 0.7}
    first = client.post("/v1/matrices", json=payload).content
    second = client.post("/v1/matrices", json=payload).content
    assert first == second
