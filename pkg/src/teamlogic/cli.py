"""Command-line surface.

Subcommands::

    check      -m MODEL -f FORMULA [-t w1,w2]     team truth, exit 0/1
    bisim      -m A -w u [-n B] -x v -k K         pointed k-bisimilarity
    bisim      --teams -m A -w u1,u2 [-n B] -x v1,v2 -k K
    hintikka   -m MODEL -w WORLD -k K             characteristic formula
    translate  --to emdl|mlidis -f FORMULA
    normalform -f FORMULA                         one ML disjunct per line
    dim        -m MODEL[,MODEL...] -f FORMULA     dimension report
    classify   -f FORMULA                         fragment name

Exit status: 0 for success or a true/bisimilar verdict, 1 for a false or
not-bisimilar verdict, 2 for any usage, parse, format, signature or size
error.  Output is deterministic, byte for byte.
"""

from __future__ import annotations

import argparse
import sys

from .bisim import bisim_classes, hintikka
from .dimension import dimension_report
from .kripke import (
    EnumerationLimitError,
    KripkeModel,
    ModelFormatError,
    load_model_file,
)
from .semantics import evaluate
from .syntax import FragmentError, ParseError, classify, parse, render
from .translate import TranslationSizeError, idis_normal_form, to_emdl, to_mlidis


def _split_names(text: str) -> list[str]:
    return [part for part in text.split(",") if part]


def _resolve_team(model: KripkeModel, option: str | None):
    if option is None:
        if model.default_team is not None:
            return model.default_team
        return model.full_team
    return model.team(_split_names(option))


def _cmd_check(args) -> int:
    model = load_model_file(args.model)
    f = parse(args.formula)
    verdict = evaluate(model, _resolve_team(model, args.team), f)
    print("true" if verdict else "false")
    return 0 if verdict else 1


def _cmd_bisim(args) -> int:
    model_a = load_model_file(args.model)
    model_b = load_model_file(args.other) if args.other else model_a
    classes = bisim_classes(model_a, model_b, args.k)
    if args.teams:
        team_a = model_a.team(_split_names(args.world))
        team_b = model_b.team(_split_names(args.other_world))
        differs = [
            level
            for level in range(args.k + 1)
            if classes.team_classes(0, team_a, level)
            != classes.team_classes(1, team_b, level)
        ]
    else:
        world_a = model_a.world(args.world)
        world_b = model_b.world(args.other_world)
        differs = [
            level
            for level in range(args.k + 1)
            if not classes.bisimilar(world_a, world_b, level)
        ]
    if differs:
        print(f"not-bisimilar (level {differs[0]})")
        return 1
    print("bisimilar")
    return 0


def _cmd_hintikka(args) -> int:
    model = load_model_file(args.model)
    print(render(hintikka(model, args.world, args.k)))
    return 0


def _cmd_translate(args) -> int:
    f = parse(args.formula)
    out = to_emdl(f) if args.to == "emdl" else to_mlidis(f)
    print(render(out))
    return 0


def _cmd_normalform(args) -> int:
    for disjunct in idis_normal_form(parse(args.formula)):
        print(render(disjunct))
    return 0


def _cmd_dim(args) -> int:
    models = [load_model_file(path) for path in _split_names(args.model)]
    print(dimension_report(models, parse(args.formula)).to_text())
    return 0


def _cmd_classify(args) -> int:
    print(classify(parse(args.formula)).value)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="teamlogic",
        description="Model checking and analysis for modal logics with team semantics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="evaluate a formula in a team")
    p.add_argument("-m", "--model", required=True, help="model file")
    p.add_argument("-f", "--formula", required=True)
    p.add_argument("-t", "--team", help="comma-separated worlds; defaults to the model's team line, else all worlds")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("bisim", help="k-bisimilarity of two pointed models or teams")
    p.add_argument("-m", "--model", required=True, help="first model file")
    p.add_argument("-n", "--other", help="second model file (defaults to the first)")
    p.add_argument("-w", "--world", required=True, help="world of the first model, or comma-separated team with --teams")
    p.add_argument("-x", "--other-world", required=True, help="world of the second model, or comma-separated team with --teams")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--teams", action="store_true", help="compare teams instead of single worlds")
    p.set_defaults(func=_cmd_bisim)

    p = sub.add_parser("hintikka", help="characteristic formula of a world up to depth k")
    p.add_argument("-m", "--model", required=True)
    p.add_argument("-w", "--world", required=True)
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(func=_cmd_hintikka)

    p = sub.add_parser("translate", help="translate between the logics")
    p.add_argument("--to", choices=("emdl", "mlidis"), required=True)
    p.add_argument("-f", "--formula", required=True)
    p.set_defaults(func=_cmd_translate)

    p = sub.add_parser("normalform", help="flat \\/ normal form, one ML disjunct per line")
    p.add_argument("-f", "--formula", required=True)
    p.set_defaults(func=_cmd_normalform)

    p = sub.add_parser("dim", help="dimension report over one or more models")
    p.add_argument("-m", "--model", required=True, help="comma-separated model files")
    p.add_argument("-f", "--formula", required=True)
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("classify", help="least fragment containing the formula")
    p.add_argument("-f", "--formula", required=True)
    p.set_defaults(func=_cmd_classify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (
        ParseError,
        FragmentError,
        ModelFormatError,
        TranslationSizeError,
        EnumerationLimitError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())
