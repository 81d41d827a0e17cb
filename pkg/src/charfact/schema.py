"""JSON schemas for every command's ``--format json`` output.

Rationals are always strings (``"p/q"`` or ``"p"``) so nothing loses precision.
"""

RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"}
INTEGER_TEXT = {"type": "string", "pattern": r"^-?[0-9]+$"}

REPORT = {
    "type": "object",
    "required": ["identity", "params", "trials", "failures", "witness", "seed"],
    "additionalProperties": False,
    "properties": {
        "identity": {"type": "string"},
        "params": {"type": "object"},
        "trials": {"type": "integer", "minimum": 0},
        "failures": {"type": "integer", "minimum": 0},
        "witness": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["point", "lhs", "rhs"],
                    "additionalProperties": False,
                    "properties": {
                        "point": {"type": "array", "items": RATIONAL},
                        "lhs": RATIONAL,
                        "rhs": RATIONAL,
                    },
                },
            ]
        },
        "seed": {"type": "integer", "minimum": 0},
    },
}


def _doc(command: str, required: dict) -> dict:
    props = {"command": {"const": command}, **required}
    return {"type": "object", "required": list(props), "additionalProperties": False,
            "properties": props}


SCHEMAS = {
    "verify": REPORT,
    "eval": _doc("eval", {
        "family": {"type": "string"},
        "negate": {"type": "boolean"},
        "lambda": {"type": "array", "items": RATIONAL},
        "point": {"type": "array", "items": RATIONAL},
        "value": RATIONAL,
    }),
    "dim": _doc("dim", {
        "family": {"type": "string"},
        "negate": {"type": "boolean"},
        "lambda": {"type": "array", "items": RATIONAL},
        "value": RATIONAL,
    }),
    "sweep": _doc("sweep", {
        "cases": {"type": "integer", "minimum": 0},
        "failed_cases": {"type": "integer", "minimum": 0},
        "reports": {"type": "array", "items": REPORT},
    }),
    "table": _doc("table", {
        "columns": {"type": "array", "items": {"type": "string"}},
        "rows": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}},
    }),
    "count": _doc("count", {
        "family": {"type": "string"},
        "size": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "value": INTEGER_TEXT,
    }),
    "oracle": _doc("oracle", {
        "kind": {"type": "string", "enum": ["brute", "ssyt", "bridge", "countid"]},
        "subject": {"type": "string"},
        "values": {"type": "array", "items": RATIONAL, "minItems": 2},
        "passed": {"type": "boolean"},
    }),
    "detcheck": _doc("detcheck", {
        "which": {"type": "string", "enum": ["d1", "d2", "d3"]},
        "size": {"type": "integer", "minimum": 1},
        "seeds": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "failed_seeds": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "passed": {"type": "boolean"},
    }),
}
