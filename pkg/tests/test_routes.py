import json
from pathlib import Path

from symkernel import __version__, create_app


# get the resources folder in the tests folder
RESOURCES = Path(__file__).parent / "resources"


def client():

    return create_app({"SAMPLES": 2}).test_client()


def test_health():

    response = client().get("/health")

    assert response.status_code == 200
    assert response.get_json() == {"status": "ok", "version": __version__}


def test_validate_algebra_success():

    with open(RESOURCES / "sample_algebra.json") as fp:
        response = client().post("/algebra/validate", json=json.load(fp))

    assert response.status_code == 200
    assert response.get_json() == {"valid": True, "rank": 2}


def test_validate_algebra_failure():

    with open(RESOURCES / "noncommutative_algebra.json") as fp:
        response = client().post("/algebra/validate", json=json.load(fp))

    assert response.status_code == 400
    assert response.get_json()["error"] == "algebra_axiom"


def test_body_must_be_an_object():

    response = client().post("/algebra/validate", json=[1, 2])

    assert response.status_code == 400
    assert response.get_json()["error"] == "codec"


def test_cech():

    with open(RESOURCES / "sample_cover.json") as fp:
        cover = json.load(fp)
    response = client().post("/cech", json={"cover": cover, "check": "unifibrant"})

    assert response.status_code == 200
    assert response.get_json()["ok"]


def test_cech_unknown_check():

    with open(RESOURCES / "sample_cover.json") as fp:
        cover = json.load(fp)
    response = client().post("/cech", json={"cover": cover, "check": "bogus"})

    assert response.status_code == 400
    assert response.get_json()["error"] == "config"


def test_wk():

    response = client().post("/wk", json={"m": 1, "n": 1})

    assert response.status_code == 200
    assert len(response.get_json()["wk"]) == 2


def test_wk_cap():

    response = client().post("/wk", json={"m": 5, "n": 5})

    assert response.status_code == 400
    assert response.get_json()["error"] == "resource_cap"


def test_multi_laws():

    response = client().post("/multi/laws", json={"max_size": 1, "max_degree": 1})

    assert response.status_code == 200
    assert response.get_json()["ok"]


def test_suite():

    response = client().post("/suite", json={"suites": ["symfun"], "seed": 3})
    data = response.get_json()

    assert response.status_code == 200
    assert data["seed"] == 3
    assert list(data["suites"]) == ["symfun"]
