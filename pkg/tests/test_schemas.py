import json
from pathlib import Path

import jsonschema
import pytest
from referencing import Registry, Resource

from xorclique.bounds import report
from xorclique.constructions import best_known_lower
from xorclique.family import SetFamily, verify_semiintersecting
from xorclique.solve import solve_f

SCHEMAS = Path(__file__).resolve().parents[1] / "docs" / "schemas"


def load(name):
    return json.loads((SCHEMAS / name).read_text())


REGISTRY = Registry().with_resources(
    (p.name, Resource.from_contents(json.loads(p.read_text()))) for p in SCHEMAS.glob("*.json")
)


def check(name, obj):
    schema = load(name)
    jsonschema.Draft202012Validator.check_schema(schema)
    jsonschema.Draft202012Validator(schema, registry=REGISTRY).validate(json.loads(json.dumps(obj)))


@pytest.mark.parametrize("k,N", [(2, 4), (3, 9), (5, 15), (2, 100), (6, 36)])
def test_family_and_report(k, N):
    fam = best_known_lower(k, N)[1]
    check("family.json", fam.to_dict())
    check("verification_report.json", verify_semiintersecting(fam).to_dict())
    check("bound_report.json", report(k, N).to_dict())


def test_failing_verification_report():
    fam = SetFamily.from_dict({"k": 2, "N": 4, "sets": [
        {"A": [0, 1], "B": [4, 5]}, {"A": [0, 2], "B": [4, 6]}, {"A": [2, 3], "B": [6, 7]},
        {"A": [0, 1], "B": [4, 5]}, {"A": [9, 1], "B": [4, 5]}]})
    rep = verify_semiintersecting(fam).to_dict()
    assert not rep["valid"]
    check("verification_report.json", rep)


@pytest.mark.parametrize("k,N,force", [(2, 4, False), (2, 5, True), (2, 6, False)])
def test_clique_result(k, N, force):
    rep = solve_f(k, N, force_solver=force)
    out = rep.clique.to_dict()
    out["report"] = rep.to_dict()
    check("clique_result.json", out)


def test_schema_rejects_bad_family():
    with pytest.raises(jsonschema.ValidationError):
        check("family.json", {"k": 2, "N": 4, "sets": [{"A": [0, 1]}]})
