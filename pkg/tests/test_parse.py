from __future__ import annotations

import json
import pytest
from scripts.braids.presentations import zariski_presentation
from scripts.groups.parse import (
    format_word, load_presentation, parse_word, presentation_from_payload, presentation_payload,
)


def test_word_text():
    names = ["s1", "s2", "a1", "a2"]
    word = parse_word("s1 s2^-1 s2 a1^-1", names)
    assert format_word(word, names) == "s1 a1^-1"
    assert parse_word("1", names).is_identity()
    assert format_word(parse_word("", names), names) == "1"
    with pytest.raises(KeyError):
        parse_word("b1", names)


def test_presentation_payload_survives_json(tmp_path):
    p = zariski_presentation(4)
    payload = presentation_payload(p)
    assert presentation_from_payload(json.loads(json.dumps(payload))) == p
    path = tmp_path / "present.json"
    path.write_text(json.dumps({"schema": "tbl/1", "presentation": payload}), encoding="utf-8")
    assert load_presentation(str(path)) == p


def test_malformed_payloads():
    with pytest.raises(ValueError):
        presentation_from_payload({"generators": ["x"]})
    with pytest.raises(ValueError):
        presentation_from_payload({"generators": ["x"], "relators": [["x"]]})
    malformed = [
        [1],
        {"generators": ["x"], "relators": [5]},
        {"presentation": "x"},
        {"generators": ["x"], "relators": [[["x", 2]]]},
    ]
    for payload in malformed:
        with pytest.raises(ValueError):
            presentation_from_payload(payload)
    with pytest.raises(KeyError):
        presentation_from_payload({"generators": ["x"], "relators": [[["y", 1]]]})
    with pytest.raises(FileNotFoundError):
        load_presentation("missing/presentation.json")
