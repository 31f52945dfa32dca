"""JSON documents for algebraic data.

Schema: ``{"group": [n1, ...], "kernels": [[exp, ...] x3],
"vectors": [{"g_prime": int, "branch": [exp, ...], "eta": [exp, ...]} x3]}``
where every ``exp`` is an exponent tuple of a representative in the
ambient group (branch and handle entries included — they are reduced to
the quotients internally).  Serialization is canonical: fixed key order,
integers only, two-space indent, trailing newline; parse/serialize
round-trips bit-exactly.
"""

from __future__ import annotations

import json

from .datum import AlgebraicDatum, VectorSpec
from .errors import SchemaError
from .groups import AbelianGroup, GroupElement

_VECTOR_KEYS = {"g_prime", "branch", "eta"}


def _exponents(value: object, rank: int, where: str) -> tuple[int, ...]:
    if (not isinstance(value, (list, tuple)) or len(value) != rank
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in value)):
        raise SchemaError(f"{where}: expected a list of {rank} integers, got {value!r}")
    return tuple(value)


def parse_datum_document(doc: object) -> AlgebraicDatum:
    """Validate a parsed JSON object against the schema and build the datum."""
    if not isinstance(doc, dict):
        raise SchemaError("document root must be a JSON object")
    extra = set(doc) - {"group", "kernels", "vectors"}
    if extra:
        raise SchemaError(f"unknown keys {sorted(extra)}")
    for key in ("group", "kernels", "vectors"):
        if key not in doc:
            raise SchemaError(f"missing key {key!r}")

    orders = doc["group"]
    if (not isinstance(orders, list) or not orders
            or not all(isinstance(n, int) and not isinstance(n, bool) and n >= 1
                       for n in orders)):
        raise SchemaError('"group" must be a nonempty list of positive integers')
    group = AbelianGroup(orders)
    rank = len(orders)

    def element(value: object, where: str) -> GroupElement:
        return group.element(_exponents(value, rank, where))

    kernels = doc["kernels"]
    if not isinstance(kernels, list) or len(kernels) != 3:
        raise SchemaError('"kernels" must list generators for exactly 3 kernels')
    kernel_gens = []
    for i, gens in enumerate(kernels):
        if not isinstance(gens, list):
            raise SchemaError(f"kernel {i + 1}: expected a list of generators")
        kernel_gens.append([element(g, f"kernel {i + 1}") for g in gens])

    vectors = doc["vectors"]
    if not isinstance(vectors, list) or len(vectors) != 3:
        raise SchemaError('"vectors" must list exactly 3 generating vectors')
    specs = []
    for i, v in enumerate(vectors):
        where = f"vector {i + 1}"
        if not isinstance(v, dict) or set(v) != _VECTOR_KEYS:
            raise SchemaError(f"{where}: expected keys g_prime, branch, eta")
        g_prime = v["g_prime"]
        if not isinstance(g_prime, int) or isinstance(g_prime, bool) or g_prime < 0:
            raise SchemaError(f"{where}: g_prime must be a nonnegative integer")
        if not isinstance(v["branch"], list) or not isinstance(v["eta"], list):
            raise SchemaError(f"{where}: branch and eta must be lists")
        specs.append(VectorSpec(
            g_prime=g_prime,
            branch=tuple(element(g, where + " branch") for g in v["branch"]),
            eta=tuple(element(g, where + " eta") for g in v["eta"])))
    return AlgebraicDatum.build(group, kernel_gens, specs)


def datum_document(datum: AlgebraicDatum) -> dict:
    """Canonical document for a datum, from the raw representatives."""
    return {
        "group": list(datum.group.orders),
        "kernels": [[list(g.exponents) for g in k.generators] for k in datum.kernels],
        "vectors": [
            {
                "g_prime": spec.g_prime,
                "branch": [list(g.exponents) for g in spec.branch],
                "eta": [list(g.exponents) for g in spec.eta],
            }
            for spec in datum.raw_vectors
        ],
    }


def dumps(doc: dict) -> str:
    """Canonical JSON bytes: insertion key order, two-space indent."""
    return json.dumps(doc, indent=2) + "\n"


def loads(text: str) -> AlgebraicDatum:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return parse_datum_document(doc)
