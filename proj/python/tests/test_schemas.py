import json
import pathlib

import jsonschema
import pytest
from referencing import Registry, Resource

import qca

SCHEMAS = pathlib.Path(__file__).resolve().parents[2] / "schemas"


def registry():
    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], Resource.from_contents(doc)))
    return Registry().with_resources(resources)


def check(name, instance):
    schema = json.loads((SCHEMAS / name).read_text())
    jsonschema.Draft202012Validator(schema, registry=registry()).validate(instance)


@pytest.mark.parametrize("shape,schema", [("disk", "disk.schema.json"), ("triangle", "triangle.schema.json")])
def test_seed_documents(shape, schema):
    check(schema, qca.build("A2", "121", shape=shape))


def test_element_and_report():
    check("element.schema.json", qca.kappa("A2", "121", "E1*F2"))
    check("report.schema.json", qca.verify("A1", "1"))
