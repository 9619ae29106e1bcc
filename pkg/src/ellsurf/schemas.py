"""JSON schemas for the files the CLI reads and writes."""

RATIONAL = {"type": "string", "pattern": r"^\s*-?\d+(/\d+)?\s*$"}
POLY = {"type": "array", "items": RATIONAL}
ORDER = {"oneOf": [{"type": "integer", "minimum": 0}, {"const": "inf"}]}
RATFUNC = {
    "type": "object",
    "properties": {"num": POLY, "den": POLY},
    "required": ["num", "den"],
    "additionalProperties": False,
}

CURVE = {
    "type": "object",
    "properties": {"A": RATIONAL, "B": RATIONAL},
    "required": ["A", "B"],
    "additionalProperties": False,
}

POINT = {
    "oneOf": [
        {
            "type": "object",
            "properties": {"inf": {"const": True}},
            "required": ["inf"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {"x": RATIONAL, "y": RATIONAL},
            "required": ["x", "y"],
            "additionalProperties": False,
        },
    ]
}

SECTION = {
    "oneOf": [
        POINT["oneOf"][0],
        {
            "type": "object",
            "properties": {"x": RATFUNC, "y": RATFUNC},
            "required": ["x", "y"],
            "additionalProperties": False,
        },
    ]
}

SURFACE_DATA = {
    "type": "object",
    "properties": {
        "genus": {"type": "integer", "minimum": 1},
        "lambdas": {"type": "array", "items": RATIONAL, "minItems": 3},
        "a4": POLY,
        "a6": POLY,
        "line_bundle_degree": {"type": "integer", "minimum": 1},
    },
    "required": ["genus", "lambdas", "a4", "a6"],
    "additionalProperties": False,
}

PLACE_REPORT = {
    "type": "object",
    "properties": {
        "locus": {"oneOf": [POLY, {"const": "inf"}]},
        "branch": {"type": "boolean"},
        "points_on_B": {"type": "integer", "minimum": 1},
        "v_a4": ORDER,
        "v_a6": ORDER,
        "v_delta": {"type": "integer", "minimum": 1},
        "kodaira_type": {"type": "string"},
        "euler_number": {"type": ["integer", "null"]},
    },
    "required": ["locus", "branch", "points_on_B", "v_a4", "v_a6", "v_delta",
                 "kodaira_type", "euler_number"],
}

SURFACE_REPORT = {
    "type": "object",
    "properties": {
        "places": {"type": "array", "items": PLACE_REPORT},
        "total_euler": {"type": "integer"},
        "chi": {"type": ["integer", "null"]},
        "minimal": {"type": "boolean"},
        "base_genus": {"type": "integer"},
        "isotrivial": {"type": "boolean"},
        "discriminant": POLY,
    },
    "required": ["places", "total_euler", "chi", "minimal", "base_genus", "isotrivial"],
}

CERTIFICATE = {
    "type": "object",
    "properties": {
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "name": {"type": "string"},
                    "pass": {"type": "boolean"},
                    "witness": {},
                },
                "required": ["name", "pass", "witness"],
            },
        },
        "assumptions": {"type": "array", "items": {"type": "string"}},
        "all_pass": {"type": "boolean"},
        "conclusion": {"type": "string"},
    },
    "required": ["checks", "assumptions", "all_pass"],
}

TORSION = {
    "type": "object",
    "properties": {
        "order": {"oneOf": [{"type": "integer", "minimum": 1, "maximum": 12}, {"const": "infinite"}]},
        "integral_curve": CURVE,
        "integral_point": POINT,
        "scale": {"type": "integer", "minimum": 1},
        "reason": {"type": "string"},
        "witness_multiple": {"type": "integer"},
        "witness_point": POINT,
    },
    "required": ["order", "integral_curve", "integral_point", "scale"],
}

MULTIPLES = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {
            "n": {"type": "integer", "minimum": 1},
            "x_degrees": {"type": "array", "items": {"type": ["integer", "null"]}},
            "y_degrees": {"type": "array", "items": {"type": ["integer", "null"]}},
            "height_degree": {"type": "integer"},
        },
        "required": ["n", "x_degrees", "y_degrees"],
    },
}

JINV = {
    "type": "object",
    "properties": {
        "j": RATFUNC,
        "isotrivial": {"type": "boolean"},
        "at": RATIONAL,
        "j_at": {"oneOf": [RATIONAL, {"type": "null"}]},
    },
    "required": ["j", "isotrivial"],
}
