"""Reading and writing the plain-text model format.

::

    # the odd cone model
    gen a 3
    gen b 4
    gen e 6
    gen x 7
    d e = a*b
    d x = b^2

Besides ``gen <name> <degree> [<weight>]`` and ``d <name> = <expr>`` a file
may carry ``rel <monomial>``, ``top <degree>``, ``maxweight <w>``,
``faithful <degree>`` and ``name <label>`` directives.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

from .cdga import FreeCDGA, validate
from .expr import ExpressionError, parse_expression
from .grading import GradedAlgebra

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class ModelSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass
class ParsedModel:
    model: FreeCDGA
    warnings: list = field(default_factory=list)


def _int_field(token: str, what: str, line: int, col: int, minimum: int) -> int:
    if not re.fullmatch(r"\d+", token) or int(token) < minimum:
        raise ModelSyntaxError(f"{what} must be an integer >= {minimum}, got {token!r}", line, col)
    return int(token)


def _read_source(source: Union[str, Path]) -> str:
    if isinstance(source, Path):
        return source.read_text()
    if "\n" not in source and source.strip() and os.path.isfile(source):
        return Path(source).read_text()
    return source


def load_model(source: Union[str, Path], strict_minimal: bool = False) -> ParsedModel:
    text = _read_source(source)
    gens = []
    declared = {}
    diffs = {}
    rels = []
    options = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        indent = len(line) - len(line.lstrip())
        keyword, _, rest = stripped.partition(" ")
        rest_col = indent + len(keyword) + 2 + (len(rest) - len(rest.lstrip()))
        rest = rest.strip()
        if keyword == "gen":
            parts = rest.split()
            if len(parts) not in (2, 3):
                raise ModelSyntaxError("expected 'gen <name> <degree> [<weight>]'", lineno, indent + 1)
            name = parts[0]
            if not _NAME.match(name):
                raise ModelSyntaxError(f"invalid generator name {name!r}", lineno, rest_col)
            if name in declared:
                raise ModelSyntaxError(f"generator {name!r} declared twice", lineno, rest_col)
            degree = _int_field(parts[1], "degree", lineno, rest_col, 1)
            weight = _int_field(parts[2], "weight", lineno, rest_col, 1) if len(parts) == 3 else 1
            declared[name] = lineno
            gens.append((name, degree, weight))
        elif keyword == "d":
            name, eq, expr = rest.partition("=")
            name = name.strip()
            if not eq:
                raise ModelSyntaxError("expected 'd <name> = <expression>'", lineno, rest_col)
            if name not in declared:
                raise ModelSyntaxError(f"differential of undeclared generator {name!r}", lineno, rest_col)
            if name in diffs:
                raise ModelSyntaxError(f"second differential for {name!r}", lineno, rest_col)
            expr_col = raw.index("=") + 2
            try:
                value = parse_expression(GradedAlgebra(gens), expr)
            except ExpressionError as e:
                raise ModelSyntaxError(e.message, lineno, expr_col + e.column - 1) from None
            want = dict((g[0], g[1]) for g in gens)[name] + 1
            degs = value.degrees()
            if degs and degs != {want}:
                raise ModelSyntaxError(
                    f"d{name} must be homogeneous of degree {want}, got degree(s) {sorted(degs)}",
                    lineno, expr_col + len(expr) - len(expr.lstrip()))
            diffs[name] = (lineno, expr.strip())
        elif keyword == "rel":
            try:
                value = parse_expression(GradedAlgebra(gens), rest)
            except ExpressionError as e:
                raise ModelSyntaxError(e.message, lineno, rest_col + e.column - 1) from None
            if len(value.terms) != 1:
                raise ModelSyntaxError("a relation must be a single monomial", lineno, rest_col)
            rels.append(rest)
        elif keyword in ("top", "maxweight", "faithful"):
            if keyword in options:
                raise ModelSyntaxError(f"repeated '{keyword}' directive", lineno, indent + 1)
            options[keyword] = _int_field(rest, keyword, lineno, rest_col, 0)
        elif keyword == "name":
            options["name"] = rest
        else:
            raise ModelSyntaxError(f"unknown directive {keyword!r}", lineno, indent + 1)

    model = FreeCDGA.from_strings(
        gens, {k: v[1] for k, v in diffs.items()}, rels,
        top_degree=options.get("top"), max_weight=options.get("maxweight"),
        faithful_degree=options.get("faithful"), name=options.get("name"))
    report = validate(model, minimal=True)
    warnings = []
    for v in report.violations:
        where = diffs.get(v.generator, (declared.get(v.generator, 0),))[0]
        msg = f"line {where}: {v.message}"
        if v.kind == "linear-part":
            if strict_minimal:
                raise ModelSyntaxError(f"not minimal: {v.message}", where)
            warnings.append(msg)
        else:
            raise ModelSyntaxError(v.message, where)
    return ParsedModel(model, warnings)


def parse_model(source: Union[str, Path], strict_minimal: bool = False) -> FreeCDGA:
    return load_model(source, strict_minimal).model


def emit_model(model: FreeCDGA) -> str:
    """Canonical text form; ``parse_model(emit_model(m))`` reproduces ``m``."""
    alg = model.algebra
    lines = []
    if model.name:
        lines.append(f"name {model.name}")
    for g in alg.generators:
        lines.append(f"gen {g.name} {g.degree}" + (f" {g.weight}" if g.weight != 1 else ""))
    for rel in alg.relations:
        lines.append(f"rel {alg.format_monomial(rel)}")
    if alg.top_degree is not None:
        lines.append(f"top {alg.top_degree}")
    if alg.max_weight is not None:
        lines.append(f"maxweight {alg.max_weight}")
    if model.faithful_degree is not None:
        lines.append(f"faithful {model.faithful_degree}")
    for g in alg.generators:
        image = model.diff[g.name]
        if image:
            lines.append(f"d {g.name} = {image}")
    return "\n".join(lines) + "\n"


def same_model(m1: FreeCDGA, m2: FreeCDGA) -> bool:
    a1, a2 = m1.algebra, m2.algebra
    return (
        a1.same_as(a2)
        and m1.faithful_degree == m2.faithful_degree
        and all(m1.diff[g.name].terms == m2.diff[g.name].terms for g in a1.generators)
    )
