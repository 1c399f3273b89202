import json
import sys
from pathlib import Path
from scripts.groups import INVERSE_SUFFIX, IDENTITY_TOKEN
from scripts.groups.words import Presentation, Word, free_reduce, presentation
from scripts.payload_keys import *


def parse_word(text: str, names: list[str]) -> Word:
    """
    Parses whitespace separated tokens such as "s1 s2^-1 a1".
    An empty string or "1" is the identity.
    """
    letters = []
    for token in text.split():
        if token == IDENTITY_TOKEN:
            continue
        exponent = 1
        if token.endswith(INVERSE_SUFFIX):
            token, exponent = token[:-len(INVERSE_SUFFIX)], -1
        if token not in names:
            raise KeyError(f"Unknown generator {token!r} in word {text!r}")
        letters.append((names.index(token), exponent))
    return free_reduce(letters, len(names))


def format_word(word: Word, names: list[str]) -> str:
    if word.is_identity():
        return IDENTITY_TOKEN
    return " ".join(names[g] if e == 1 else f"{names[g]}{INVERSE_SUFFIX}" for g, e in word)


def word_payload(word: Word, names: list[str]) -> list[list]:
    return [[names[g], e] for g, e in word]


def presentation_payload(p: Presentation) -> dict:
    payload = {
        GENERATORS: p.names,
        RELATORS: [word_payload(word, p.names) for word in p.relators],
    }
    if p.labels:
        payload[LABELS] = list(p.labels)
    return payload


def _relator_from_payload(index: int, raw, names: list[str]) -> Word:
    if not isinstance(raw, list):
        raise ValueError(f"Relator {index}: {raw!r} is not a list of [name, exponent] pairs")
    letters = []
    for entry in raw:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise ValueError(f"Relator {index}: letter {entry!r} is not a [name, exponent] pair")
        name, exponent = entry
        if name not in names:
            raise KeyError(f"Relator {index}: unknown generator {name!r}")
        try:
            letters.append((names.index(name), int(exponent)))
        except (TypeError, ValueError):
            raise ValueError(f"Relator {index}: exponent {exponent!r} is not an integer") from None
    return free_reduce(letters, len(names))


def presentation_from_payload(payload: dict) -> Presentation:
    ''' Reads {"generators": [...], "relators": [[[name, ±1], ...], ...]}, optionally wrapped under "presentation" '''
    if not isinstance(payload, dict):
        raise ValueError(f"Malformed presentation payload: expected a JSON object, got {type(payload).__name__}")
    payload = payload.get(PRESENTATION, payload)
    if not isinstance(payload, dict):
        raise ValueError(f"Malformed presentation payload: {PRESENTATION!r} is not a JSON object")
    try:
        names = [str(name) for name in payload[GENERATORS]]
        raw_relators = list(payload[RELATORS])
    except (KeyError, TypeError) as e:
        raise ValueError(f"Malformed presentation payload: missing or invalid {e}") from None

    relators = [_relator_from_payload(index, raw, names) for index, raw in enumerate(raw_relators)]
    labels = payload.get(LABELS, [])
    if not isinstance(labels, list):
        raise ValueError(f"Malformed presentation payload: {LABELS!r} is not a list")
    return presentation(names, relators, [str(label) for label in labels])


def load_presentation(source: str) -> Presentation:
    ''' Reads a presentation from a JSON file path, or from stdin when the path is "-" '''
    if source == "-":
        return presentation_from_payload(json.load(sys.stdin))
    path = Path(source)
    if not path.exists():
        raise FileNotFoundError(f"No presentation file at {path}")
    with open(path, "r", encoding="utf-8") as file:
        return presentation_from_payload(json.load(file))
