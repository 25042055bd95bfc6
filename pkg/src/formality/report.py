"""Text and JSON rendering of command results."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .grading import Element


def plain(value):
    """Convert a result tree into JSON-ready values."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Element):
        return str(value)
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [plain(v) for v in value]
        return sorted(items, key=repr) if isinstance(value, (set, frozenset)) else items
    return value


@dataclass
class Report:
    command: str
    data: dict = field(default_factory=dict)
    lines: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, key: str, value, text: str = None) -> None:
        self.data[key] = value
        if text is not None:
            self.lines.append((key, text))

    def to_json(self) -> str:
        doc = dict(self.data)
        doc["command"] = self.command
        doc["notes"] = list(self.notes)
        return json.dumps(plain(doc), sort_keys=True, indent=2)

    def to_text(self) -> str:
        width = max((len(k) for k, _ in self.lines), default=0)
        out = [f"# {self.command}"]
        for key, text in self.lines:
            rows = str(text).splitlines() or [""]
            out.append(f"{key.ljust(width)}  {rows[0]}")
            out.extend(" " * (width + 2) + r for r in rows[1:])
        out.extend(f"note: {n}" for n in self.notes)
        return "\n".join(out)


def betti_text(betti: dict) -> str:
    return "  ".join(f"b{d}={b}" for d, b in sorted(betti.items()))
