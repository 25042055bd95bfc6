"""Command-line front end.

Exit status: 0 on success, 1 when a computation is refused (a hypothesis
fails or the degrees asked for leave the faithful range), 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import topology
from .cdga import FreeCDGA, cohomology, validate
from .errors import Refusal
from .expr import ExpressionError
from .massey import triple_massey
from .modelfile import emit_model, load_model
from .report import Report, betti_text
from .sullivan import formality_verdict, identity_stage, minimal_model, s_formality


class InputError(ValueError):
    pass


# -- helpers -----------------------------------------------------------------


def _read_model(args, report: Report) -> FreeCDGA:
    if args.model in (None, "-"):
        text = sys.stdin.read()
        source = "<stdin>"
    else:
        try:
            with open(args.model) as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(f"cannot read {args.model}: {e.strerror}") from None
        source = args.model
    try:
        parsed = load_model(text, strict_minimal=getattr(args, "strict_minimal", False))
    except ValueError as e:
        raise InputError(f"{source}: {e}") from None
    report.notes.extend(parsed.warnings)
    return parsed.model


def _degree_bound(model: FreeCDGA, args, report: Report) -> int:
    bound = args.max_degree
    if bound is None:
        bound = 3 * model.top_generator_degree() + 2
    if bound < 0:
        raise InputError("--max-degree must be nonnegative")
    if model.faithful_degree is not None and bound > model.faithful_degree:
        report.notes.append(f"max-degree {bound} lowered to the faithful degree {model.faithful_degree}")
        bound = model.faithful_degree
    report.add("bound", bound, str(bound))
    return bound


def _parse_classes(model: FreeCDGA, text: str) -> list:
    out = []
    for part in text.split(","):
        part = part.strip()
        try:
            x = model.parse(part)
        except ExpressionError as e:
            raise InputError(f"class {part!r}: {e}") from None
        if not x:
            raise InputError(f"class {part!r} is zero")
        if not x.is_homogeneous():
            raise InputError(f"class {part!r} is not homogeneous")
        if model.d(x):
            raise InputError(f"class {part!r} is not closed: d = {model.d(x)}")
        out.append(x)
    return out


def _stage(model: FreeCDGA, degree: int, report: Report):
    """An identity stage if the input is already minimal, else a built one."""
    check = validate(model, minimal=True)
    if model.algebra.is_free and check.minimal:
        report.notes.append("input is a minimal free CDGA; used as its own minimal model")
        return identity_stage(model)
    stage = minimal_model(model, degree)
    report.notes.extend(stage.notes)
    return stage


def _betti_dict(basis) -> dict:
    return {d: basis.betti(d) for d in range(basis.max_degree + 1)}


# -- commands ------------------------------------------------------------------


def cmd_validate(args, report: Report) -> None:
    model = _read_model(args, report)
    check = validate(model, minimal=True)
    report.add("generators", [(g.name, g.degree) for g in model.generators],
               ", ".join(f"{g.name}({g.degree})" for g in model.generators) or "(none)")
    report.add("minimal", check.minimal, "yes" if check.minimal else "no")
    report.add("verdict", "valid", "valid")


def cmd_cohomology(args, report: Report) -> None:
    model = _read_model(args, report)
    bound = _degree_bound(model, args, report)
    H = cohomology(model, bound)
    betti = _betti_dict(H)
    report.add("betti", betti, betti_text(betti))
    classes = {d: [str(c.representative) for c in H.classes(d)] for d in betti if betti[d]}
    report.add("classes", classes,
               "\n".join(f"H^{d}: " + ", ".join(v) for d, v in classes.items()))


def cmd_massey(args, report: Report) -> None:
    model = _read_model(args, report)
    if not args.classes:
        raise InputError("massey needs --classes a1,a2,a3")
    xs = _parse_classes(model, args.classes)
    if len(xs) != 3:
        raise InputError("--classes must name exactly three cocycles")
    total = sum(x.degree for x in xs) - 1
    bound = _degree_bound(model, args, report)
    if total > bound:
        raise Refusal(f"the product lands in degree {total}, beyond the bound {bound}")
    H = cohomology(model, bound)
    cls = [H.class_of(x) for x in xs]
    res = triple_massey(model, H, *cls)
    report.add("classes", [str(x) for x in xs], ", ".join(str(x) for x in xs))
    info = {
        "degrees": list(res.degrees),
        "total_degree": res.total_degree,
        "primitive_12": res.primitive_12,
        "primitive_23": res.primitive_23,
        "representative": res.representative,
        "value": list(res.value.coords) if res.value else None,
        "indeterminacy": [list(r) for r in res.indeterminacy],
    }
    report.add("massey", info,
               f"degrees {res.degrees} -> {res.total_degree}; xi = {res.primitive_12}, "
               f"eta = {res.primitive_23}"
               + (f"\nrepresentative {res.representative}" if res.representative is not None else "")
               + f"\nindeterminacy dimension {len(res.indeterminacy)}")
    report.add("verdict", res.verdict, res.verdict)


def cmd_minimal_model(args, report: Report) -> None:
    model = _read_model(args, report)
    bound = _degree_bound(model, args, report)
    stage = minimal_model(model, bound, max_rounds=args.rounds)
    report.notes.extend(stage.notes)
    gens = [(g.name, g.degree, str(stage.model.diff[g.name])) for g in stage.model.generators]
    report.add("generators", gens,
               "\n".join(f"{n} ({d})  d = {dx}" for n, d, dx in gens) or "(none)")
    report.add("morphism", {k: str(v) for k, v in stage.morphism.items()},
               "\n".join(f"{k} -> {v}" for k, v in stage.morphism.items()) or "(none)")
    report.add("built_through", stage.built_through, str(stage.built_through))
    report.add("model", emit_model(stage.model), None)


def cmd_sformal(args, report: Report) -> None:
    model = _read_model(args, report)
    if args.s is None:
        raise InputError("sformal needs --s")
    search = args.bound
    if search is None:
        search = 2 * args.s + 2
        if model.faithful_degree is not None and search > model.faithful_degree:
            report.notes.append(f"search bound {search} lowered to the faithful degree {model.faithful_degree}")
            search = model.faithful_degree
    stage = _stage(model, max(args.s, search - 1, 1), report)
    res = s_formality(stage, args.s, search)
    _sformal_fields(report, res)
    report.add("verdict", res.verdict, res.verdict)


def _sformal_fields(report: Report, res) -> None:
    dec = res.decomposition
    report.add("closed", {i: [str(x) for x in v] for i, v in dec.closed.items()},
               "; ".join(f"C^{i}: " + ", ".join(map(str, v)) for i, v in dec.closed.items() if v)
               or "(none)")
    report.add("nonclosed", {i: [str(x) for x in v] for i, v in dec.nonclosed.items()},
               "; ".join(f"N^{i}: " + ", ".join(map(str, v)) for i, v in dec.nonclosed.items() if v)
               or "(none)")
    witness = None if res.witness is None else {"element": str(res.witness), "degree": res.witness_degree}
    report.add("witness", witness,
               "none" if witness is None else f"{res.witness} in degree {res.witness_degree}")
    report.add("search_bound", res.bound, "unbounded (ideal is zero)" if res.bound is None else str(res.bound))


def cmd_formality(args, report: Report) -> None:
    model = _read_model(args, report)
    if args.n is None:
        raise InputError("formality needs --n (the manifold dimension)")
    s = (args.n + 1) // 2 - 1
    search = args.bound if args.bound is not None else args.n + 1
    stage = _stage(model, max(s, search - 1, 1), report)
    res = formality_verdict(stage, args.n, args.bound)
    report.add("s", res.s, str(res.s))
    _sformal_fields(report, res.report)
    report.notes.append(res.caveat)
    report.add("verdict", res.verdict, res.verdict)


def _fixture(args):
    if args.k is None:
        raise InputError("--k is required")
    builder = topology.build_Ck if args.family == "ck" else topology.build_Ckprime
    return builder(args.k)


def _table_fields(report: Report, key: str, table: topology.BettiTable) -> None:
    ranks = {i: r for i, r in table.ranks().items() if r}
    report.add(key, {"label": table.label, "dim": table.dim, "betti": ranks,
                     "classes": table.classes},
               f"{table.label} (dim {table.dim}): " + betti_text(ranks))


def cmd_fixture(args, report: Report) -> None:
    model, table = _fixture(args)
    report.add("model", emit_model(model), None)
    _table_fields(report, "table", table)
    report.add("massey", {"labels": table.massey.labels, "degrees": table.massey.degrees,
                          "value": table.massey.value,
                          "representative": table.representatives[table.massey.value]}, None)
    report.notes.extend(table.caveats)


def cmd_boundary(args, report: Report) -> None:
    if args.n is None:
        raise InputError("boundary needs --n")
    _, table = _fixture(args)
    try:
        cert = topology.boundary_les(table, args.n)
    except ValueError as e:
        raise InputError(str(e)) from None
    report.notes.extend(cert.assumptions)
    report.notes.extend(table.caveats)
    _table_fields(report, "boundary", cert.z)
    obstruction = topology.transfer_massey(cert)
    rules = [{"side": t.side, "degree": t.degree, "group": t.group, "rules": t.rules}
             for t in obstruction.summands]
    report.add("rules", rules, "\n".join(
        f"{t.side} in degree {t.degree}: " + (", ".join(f"{g}:{r}" for g, r in zip(t.group, t.rules))
                                               if t.group else "group is zero (A)")
        for t in obstruction.summands))
    verdict = "certified" if obstruction.certified else "not certified"
    report.add("verdict", verdict, verdict)


def cmd_geography(args, report: Report) -> None:
    for flag in ("n", "k", "b"):
        if getattr(args, flag) is None:
            raise InputError(f"geography needs --{flag}")
    ans = topology.geography(args.n, args.k, args.b)
    report.add("verdict", ans.verdict, ans.verdict)
    report.add("justification", ans.justification, ans.justification)
    report.add("recipe", list(ans.recipe), "\n".join(ans.recipe) or "(none)")
    short = topology.formality_shortcut(args.n, args.k, args.b, args.b_next)
    report.add("shortcut", {"verdict": short.verdict, "justification": short.justification},
               short.verdict + (f" ({short.justification})" if short.justification else ""))
    report.notes.extend(ans.caveats)


COMMANDS = {
    "validate": cmd_validate,
    "cohomology": cmd_cohomology,
    "massey": cmd_massey,
    "minimal-model": cmd_minimal_model,
    "sformal": cmd_sformal,
    "formality": cmd_formality,
    "fixture": cmd_fixture,
    "boundary": cmd_boundary,
    "geography": cmd_geography,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="formality", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, model=True):
        if model:
            p.add_argument("model", nargs="?", help="model file ('-' or omitted: stdin)")
        p.add_argument("--json", action="store_true", help="emit a JSON document")
        return p

    p = common(sub.add_parser("validate", help="check a model file"))
    p.add_argument("--strict-minimal", action="store_true", help="reject linear differentials")
    helps = {
        "cohomology": "Betti numbers and class representatives",
        "massey": "triple Massey product of three cocycles",
        "minimal-model": "build a minimal model degree by degree",
        "sformal": "s-formality test with a witness on failure",
        "formality": "formality verdict for a closed n-manifold",
        "fixture": "print a built-in cone model",
        "boundary": "boundary table and Massey transfer for a cone",
        "geography": "which (n, k, b) admit non-formal manifolds",
    }
    for name in ("cohomology", "massey", "minimal-model", "sformal", "formality"):
        p = common(sub.add_parser(name, help=helps[name]))
        p.add_argument("--max-degree", type=int, help="degree bound (default 3*top+2)")
        p.add_argument("--strict-minimal", action="store_true")
        if name == "massey":
            p.add_argument("--classes", help="three comma-separated cocycles, e.g. a,a,b")
        if name == "minimal-model":
            p.add_argument("--rounds", type=int, default=8, help="cap on degree-1 killing rounds")
        if name == "sformal":
            p.add_argument("--s", type=int)
            p.add_argument("--bound", type=int, help="highest degree searched for a witness")
        if name == "formality":
            p.add_argument("--n", type=int, help="manifold dimension")
            p.add_argument("--bound", type=int)
    for name in ("fixture", "boundary"):
        p = common(sub.add_parser(name, help=helps[name]), model=False)
        p.add_argument("family", choices=["ck", "ckprime"])
        p.add_argument("--k", type=int)
        if name == "boundary":
            p.add_argument("--n", type=int, help="dimension of the boundary manifold")
    p = common(sub.add_parser("geography", help=helps["geography"]), model=False)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--b-next", type=int, help="b_(k+1), used by the formality shortcut")
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    report = Report(" ".join(["formality", *(argv if argv is not None else sys.argv[1:])]))
    try:
        COMMANDS[args.command](args, report)
    except Refusal as e:
        print(f"refused: {e}", file=stderr)
        return 1
    except (InputError, ValueError) as e:
        print(f"error: {e}", file=stderr)
        return 2
    if args.json:
        print(report.to_json(), file=stdout)
    elif args.command == "fixture":
        print(report.data["model"], end="", file=stdout)
    else:
        print(report.to_text(), file=stdout)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
