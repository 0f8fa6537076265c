"""JSON Schemas of the input files."""

RATIONAL = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^\s*-?\d+(/\d+|\.\d+)?\s*$"},
    ]
}

FACE_LIST = {
    "type": "array",
    "minItems": 1,
    "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
}

SURFACE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "surface",
    "type": "object",
    "required": ["faces"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "faces": FACE_LIST,
        "labels": {"type": ["array", "null"], "items": {"type": "string"}},
    },
}

SCHEME_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "rotation scheme",
    "type": "object",
    "required": ["n", "rows"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "rows": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        },
    },
}

CURRENT_GRAPH_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "current graph",
    "type": "object",
    "required": ["modulus", "vertices", "arcs"],
    "properties": {
        "modulus": {"type": "integer", "minimum": 3},
        "vertices": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["color", "rotation"],
                "properties": {
                    "color": {"enum": ["black", "white"]},
                    "rotation": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                },
            },
        },
        "arcs": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["tail", "head", "current"],
                "properties": {
                    "tail": {"type": "integer", "minimum": 0},
                    "head": {"type": "integer", "minimum": 0},
                    "current": {"type": "integer"},
                },
            },
        },
    },
}

MESH_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "embedded mesh",
    "type": "object",
    "required": ["vertices", "faces"],
    "properties": {
        "vertices": {
            "type": "array",
            "minItems": 1,
            "items": {"type": "array", "minItems": 3, "maxItems": 3, "items": RATIONAL},
        },
        "faces": FACE_LIST,
        "provenance": {
            "type": ["array", "null"],
            "items": {"type": "string", "pattern": r"^[01*]+$"},
        },
        "metadata": {"type": "object", "additionalProperties": {"type": "string"}},
    },
}

EXPRESSION = {"type": "string", "pattern": r"^[0-9a-z+\-* ]+$"}

NETWORK_TEMPLATE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "current graph template",
    "type": "object",
    "required": ["parameter", "minimum", "modulus", "currents", "vertices"],
    "properties": {
        "parameter": {"type": "string", "pattern": "^[a-z]$"},
        "minimum": {"type": "integer"},
        "modulus": EXPRESSION,
        "currents": EXPRESSION,
        "vertices": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["id", "color", "rotation"],
                "properties": {
                    "for": {
                        "type": "array",
                        "prefixItems": [
                            {"type": "string", "pattern": "^[a-z]$"},
                            EXPRESSION,
                            EXPRESSION,
                        ],
                        "minItems": 3,
                        "maxItems": 3,
                    },
                    "id": EXPRESSION,
                    "color": {"enum": ["black", "white"]},
                    "rotation": {
                        "type": "array",
                        "items": {
                            "type": "array",
                            "prefixItems": [{"enum": ["tail", "head"]}, EXPRESSION],
                            "minItems": 2,
                            "maxItems": 2,
                        },
                    },
                },
            },
        },
    },
}
