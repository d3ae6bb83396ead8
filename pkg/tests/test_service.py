"""HTTP surface: request validation, payload shapes, error mapping."""

import pytest
from fastapi.testclient import TestClient

from wbptrees.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_count_by_passport(client):
    resp = client.post("/count", json={"passport": "6^10 | 10^6"})
    assert resp.status_code == 200
    assert resp.json() == {
        "passport": "6^10 | 10^6",
        "G": {"1": "133/15", "3": "2/3", "5": "1/5"},
        "total": 11,
        "by_symmetry": {"1": 8, "3": 2, "5": 1},
    }


def test_count_by_pq(client):
    resp = client.post("/count", json={"p": 10, "q": 6})
    assert resp.status_code == 200
    body = resp.json()
    assert body["total"] == 11
    assert body["closed_form_check"] is True
    assert list(body) == ["passport", "G", "total", "by_symmetry",
                          "closed_form_check"]


def test_count_request_validation(client):
    assert client.post("/count", json={}).status_code == 422
    assert client.post("/count",
                       json={"passport": "1^3 | 3", "p": 3, "q": 1}
                       ).status_code == 422
    assert client.post("/count", json={"p": 3}).status_code == 422
    resp = client.post("/count", json={"p": 3, "q": 5})
    assert resp.status_code == 400
    assert "p > q" in resp.json()["detail"]


def test_count_bad_passport(client):
    resp = client.post("/count", json={"passport": "2 | 3"})
    assert resp.status_code == 400
    assert "unbalanced" in resp.json()["detail"]
    resp = client.post("/count", json={"passport": "2^"})
    assert resp.status_code == 400


def test_census(client):
    resp = client.get("/census", params={"alpha": 9})
    assert resp.status_code == 200
    body = resp.json()
    assert body["saddle_total"] == 4
    assert body["rows"][0] == {"p": 9, "q": 1, "admissible": True, "count": 1}
    assert client.get("/census", params={"alpha": 2}).status_code == 400


def test_enumerate_json(client):
    resp = client.post("/enumerate", json={"passport": "1^3 | 3"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["count"] == 1
    assert body["trees"][0]["aut_order"] == 3
    assert "dot" not in body


def test_enumerate_dot(client):
    resp = client.post("/enumerate",
                       json={"passport": "3^7 | 7^3", "format": "dot",
                             "max_weight": 21})
    assert resp.status_code == 200
    body = resp.json()
    assert body["count"] == 2
    assert body["dot"].count("graph tree") == 2
    assert "trees" not in body


def test_enumerate_bound(client):
    resp = client.post("/enumerate", json={"passport": "6^10 | 10^6"})
    assert resp.status_code == 400
    assert "exceeds the bound" in resp.json()["detail"]


def test_verify(client):
    resp = client.post("/verify", json={"max_weight": 4})
    assert resp.status_code == 200
    body = resp.json()
    assert body["ok"] is True
    assert body["failures"] == []
    assert body["passports_checked"] > 0
