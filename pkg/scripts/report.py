from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
import pandas as pd
from settings import SCHEMA
from scripts.payload_keys import *


class Status(Enum):
    OK = "ok"
    INPUT_ERROR = "input_error"
    FINDING = "finding"


EXIT_CODES = {Status.OK: 0, Status.INPUT_ERROR: 1, Status.FINDING: 2}


@dataclass
class CommandResult:
    status: Status
    payload: dict = field(default_factory=dict)
    table: pd.DataFrame | None = None
    diagnostics: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


def render_json(result: CommandResult) -> str:
    document = {SCHEMA_KEY: SCHEMA, STATUS: result.status.value, **result.payload}
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False)


def _scalar(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list) and all(not isinstance(item, (dict, list)) for item in value):
        return "[" + ", ".join(str(item) for item in value) + "]"
    return str(value)


def render_text(result: CommandResult) -> str:
    ''' Scalar payload fields as "key: value" lines, then the table if any; nested structures stay JSON-only '''
    lines = [f"{STATUS}: {result.status.value}"]
    for key in sorted(result.payload):
        value = result.payload[key]
        if isinstance(value, dict) or (isinstance(value, list) and any(isinstance(item, (dict, list)) for item in value)):
            continue
        lines.append(f"{key}: {_scalar(value)}")
    if result.table is not None and not result.table.empty:
        lines.append("")
        lines.append(result.table.to_string(index=False))
    return "\n".join(lines)


def render(result: CommandResult, fmt: str) -> str:
    return render_json(result) if fmt == "json" else render_text(result)
