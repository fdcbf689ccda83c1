"""Command line front end tying the analyses into scriptable reports.

Subcommands: analyze, nf, pairs, units, grammar, member, solve, sample.
Every report is available as human-readable text or, under ``--json``,
as schema-stable JSON that is byte-identical across runs for the same
input (timings are excluded under ``--deterministic``).

Exit codes: 0 success; 1 negative verdict when a ``--require-*`` flag
asks for one; 2 input errors; 3 budget exhaustion.  The environment
variable SPECMON_BUDGET supplies a default for ``--budget``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .diophantine import parse_equations, solve_bounded
from .errors import BudgetExceeded, ParseError, SpecmonError
from .presentation import (
    SpecialSystem,
    parse_presentation,
    parse_word,
    render_presentation,
    render_word,
    to_json_dict,
)
from .rewrite import (
    CriticalPair,
    critical_pairs,
    is_confluent,
    normal_form,
    overlaps,
)
from .units import UnitsReport, random_overlap_free_system, units_trivial
from .wp_language import grammar_json, member, render_grammar, to_cnf, wp_grammar

SAMPLES = {
    "bicyclic": "# bicyclic monoid\nalphabet: a b\nrelator: a b\n",
    "z2": "# cyclic group of order two\nalphabet: a\nrelator: a a\n",
    "z": "# the group of integers: a and b are mutually inverse\n"
    "alphabet: a b\nrelator: a b\nrelator: b a\n",
}


@dataclass
class AnalysisReport:
    """Aggregated per-system analysis for the ``analyze`` subcommand."""

    alphabet_size: int
    rule_count: int
    max_relator_len: int
    overlap_count: int
    pairs: tuple[CriticalPair, ...]
    overlap_free: bool
    confluent: bool
    units: UnitsReport
    grammar_productions: int
    cnf_size: int
    timings_ms: dict[str, float]

    def as_json(self, system: SpecialSystem, with_timings: bool) -> dict:
        data = {
            "system": {
                "alphabet_size": self.alphabet_size,
                "rule_count": self.rule_count,
                "max_relator_len": self.max_relator_len,
            },
            "overlap_count": self.overlap_count,
            "critical_pairs": [pair.as_json() for pair in self.pairs],
            "overlap_free": self.overlap_free,
            "confluent": self.confluent,
            "units": self.units.as_json(system.alphabet),
            "grammar": {
                "production_count": self.grammar_productions,
                "cnf_size": self.cnf_size,
            },
        }
        if with_timings:
            data["timings_ms"] = {k: round(v, 3) for k, v in self.timings_ms.items()}
        return data


def analyze_system(system: SpecialSystem, budget: int | None = None) -> AnalysisReport:
    kwargs = {} if budget is None else {"budget": budget}
    timings: dict[str, float] = {}

    started = time.perf_counter()
    found = overlaps(system)
    pairs = critical_pairs(system)
    timings["overlaps"] = (time.perf_counter() - started) * 1000

    started = time.perf_counter()
    confluent = is_confluent(system, **kwargs)
    timings["confluence"] = (time.perf_counter() - started) * 1000

    started = time.perf_counter()
    units = units_trivial(system, **kwargs)
    timings["units"] = (time.perf_counter() - started) * 1000

    started = time.perf_counter()
    grammar = wp_grammar(system)
    cnf = to_cnf(grammar)
    timings["grammar"] = (time.perf_counter() - started) * 1000

    return AnalysisReport(
        alphabet_size=len(system.alphabet),
        rule_count=len(system.relators),
        max_relator_len=system.max_relator_len,
        overlap_count=len(found),
        pairs=pairs,
        overlap_free=not found,
        confluent=confluent,
        units=units,
        grammar_productions=len(grammar.productions),
        cnf_size=len(cnf.productions),
        timings_ms=timings,
    )


def _load_system(path: str) -> SpecialSystem:
    try:
        return parse_presentation(Path(path).read_text(encoding="utf-8"))
    except ParseError as exc:
        raise type(exc)(f"{path}: {exc}") from None


def _budget(args: argparse.Namespace) -> int | None:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("SPECMON_BUDGET")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"SPECMON_BUDGET is not an integer: {env!r}") from None
    return None


def _budget_kwargs(args: argparse.Namespace) -> dict:
    value = _budget(args)
    return {} if value is None else {"budget": value}


def _emit(data: dict) -> None:
    print(json.dumps(data, indent=2, ensure_ascii=False))


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _cmd_analyze(args: argparse.Namespace) -> int:
    system = _load_system(args.presentation)
    report = analyze_system(system, _budget(args))
    if args.json:
        _emit(report.as_json(system, with_timings=not args.deterministic))
    else:
        print(f"alphabet size: {report.alphabet_size}")
        print(f"rules: {report.rule_count} (max relator length {report.max_relator_len})")
        print(f"overlaps: {report.overlap_count}")
        print(f"overlap-free: {_yesno(report.overlap_free)}")
        print(f"confluent: {_yesno(report.confluent)}")
        certificate = report.units.certificate or "none"
        print(f"units: {report.units.verdict} (certificate: {certificate})")
        if report.units.witness is not None:
            print(f"units witness: {render_word(system.alphabet, report.units.witness)}")
        print(f"grammar: {report.grammar_productions} productions, {report.cnf_size} in CNF")
        if not args.deterministic:
            shown = " ".join(f"{k}={v:.1f}ms" for k, v in report.timings_ms.items())
            print(f"timings: {shown}")
    if args.require_overlap_free and not report.overlap_free:
        return 1
    return 0


def _cmd_nf(args: argparse.Namespace) -> int:
    system = _load_system(args.presentation)
    word = parse_word(system.alphabet, args.word)
    result = normal_form(system, word)
    if args.json:
        _emit(
            {
                "input": render_word(system.alphabet, word),
                "normal_form": render_word(system.alphabet, result),
            }
        )
    else:
        print(render_word(system.alphabet, result))
    return 0


def _cmd_pairs(args: argparse.Namespace) -> int:
    system = _load_system(args.presentation)
    pairs = critical_pairs(system)
    if args.json:
        _emit({"critical_pairs": [pair.as_json() for pair in pairs]})
    else:
        if not pairs:
            print("no critical pairs (overlap-free)")
        for pair in pairs:
            source = pair.source
            word = render_word(system.alphabet, source.word)
            left = render_word(system.alphabet, pair.left_reduct)
            right = render_word(system.alphabet, pair.right_reduct)
            print(
                f"{source.kind} rules ({source.left_rule},{source.right_rule})"
                f" offset {source.offset}: {word} -> {left} | {right}"
            )
    return 0


def _cmd_units(args: argparse.Namespace) -> int:
    system = _load_system(args.presentation)
    kwargs = _budget_kwargs(args)
    report = units_trivial(system, with_delta=args.delta, **kwargs)
    if args.json:
        _emit(report.as_json(system.alphabet))
    else:
        certificate = report.certificate or "none"
        print(f"verdict: {report.verdict}")
        print(f"certificate: {certificate}")
        if report.witness is not None:
            print(f"witness: {render_word(system.alphabet, report.witness)}")
        rendered = report.as_json(system.alphabet)
        print("lambda: " + (" ".join(rendered["lambda"]) or "(empty)"))
        if rendered["delta"] is not None:
            print("delta: " + (" ".join(rendered["delta"]) or "(empty)"))
        for relator, factors in zip(system.relators, rendered["factorizations"]):
            print(f"factorization: {render_word(system.alphabet, relator)} -> {' '.join(factors)}")
    return 0


def _warn_not_confluent(system: SpecialSystem, budget_kwargs: dict) -> None:
    if not is_confluent(system, **budget_kwargs):
        print(
            "warning: system is not confluent; the grammar describes the"
            " erasable words, which may be a proper subset of the word problem",
            file=sys.stderr,
        )


def _cmd_grammar(args: argparse.Namespace) -> int:
    system = _load_system(args.presentation)
    _warn_not_confluent(system, _budget_kwargs(args))
    grammar = wp_grammar(system)
    if args.cnf:
        grammar = to_cnf(grammar)
    if args.json:
        _emit(grammar_json(grammar))
    else:
        print(render_grammar(grammar), end="")
    return 0


def _cmd_member(args: argparse.Namespace) -> int:
    system = _load_system(args.presentation)
    _warn_not_confluent(system, _budget_kwargs(args))
    word = parse_word(system.alphabet, args.word)
    verdict = member(wp_grammar(system), word)
    if args.json:
        _emit({"word": render_word(system.alphabet, word), "member": verdict})
    else:
        print("true" if verdict else "false")
    return 0


def _cmd_solve(args: argparse.Namespace) -> int:
    system = _load_system(args.presentation)
    try:
        equations = parse_equations(
            system.alphabet, Path(args.equations).read_text(encoding="utf-8")
        )
    except ParseError as exc:
        raise type(exc)(f"{args.equations}: {exc}") from None
    kwargs = _budget_kwargs(args)
    result = solve_bounded(system, equations, args.max_len, **kwargs)
    if args.json:
        _emit(result.as_json(system.alphabet))
    else:
        if result.status == "solution":
            assignment = result.assignment or {}
            rendered = ", ".join(
                f"{name} = {render_word(system.alphabet, word)}"
                for name, word in assignment.items()
            )
            print(f"solution: {rendered} (checked {result.checked})")
        elif result.status == "unsatisfiable":
            print(f"unsatisfiable: {result.certificate}")
        else:
            print(f"no solution within bound (checked {result.checked})")
    return 0


def _cmd_sample(args: argparse.Namespace) -> int:
    if args.name is None:
        for name in (*SAMPLES, "random"):
            print(name)
        return 0
    if args.name == "random":
        kwargs = {}
        if args.rules is not None:
            kwargs["min_rules"] = kwargs["max_rules"] = args.rules
        system = random_overlap_free_system(
            args.seed,
            min_interior=args.interior_min,
            max_interior=args.interior_max,
            **kwargs,
        )
        text = render_presentation(system)
    elif args.name in SAMPLES:
        text = SAMPLES[args.name]
    else:
        raise ParseError(f"unknown sample {args.name!r}; try one of: {' '.join(SAMPLES)} random")
    if args.json:
        _emit(to_json_dict(parse_presentation(text)))
    else:
        print(text, end="")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument(
        "--deterministic",
        action="store_true",
        help="omit timing fields so output is byte-reproducible",
    )
    common.add_argument(
        "--budget", type=int, default=None, help="cap for enumerations and search sets"
    )
    common.add_argument("--seed", type=int, default=0, help="seed for generated samples")

    parser = argparse.ArgumentParser(
        prog="specmon", description="Analyze finitely presented special monoids."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", parents=[common], help="full analysis report")
    analyze.add_argument("presentation", help="presentation file")
    analyze.add_argument(
        "--require-overlap-free",
        action="store_true",
        help="exit 1 when the system has overlaps",
    )
    analyze.set_defaults(func=_cmd_analyze)

    nf = commands.add_parser("nf", parents=[common], help="normal form of a word")
    nf.add_argument("presentation")
    nf.add_argument("word")
    nf.set_defaults(func=_cmd_nf)

    pairs = commands.add_parser("pairs", parents=[common], help="critical pairs")
    pairs.add_argument("presentation")
    pairs.set_defaults(func=_cmd_pairs)

    units = commands.add_parser("units", parents=[common], help="group of units report")
    units.add_argument("presentation")
    units.add_argument(
        "--delta", action="store_true", help="also enumerate the delta set (can be large)"
    )
    units.set_defaults(func=_cmd_units)

    grammar = commands.add_parser("grammar", parents=[common], help="word-problem grammar")
    grammar.add_argument("presentation")
    grammar.add_argument("--cnf", action="store_true", help="emit the Chomsky normal form")
    grammar.set_defaults(func=_cmd_grammar)

    membership = commands.add_parser("member", parents=[common], help="word-problem membership")
    membership.add_argument("presentation")
    membership.add_argument("word")
    membership.set_defaults(func=_cmd_member)

    solve = commands.add_parser("solve", parents=[common], help="bounded equation solving")
    solve.add_argument("presentation")
    solve.add_argument("equations", help="equation file")
    solve.add_argument("--max-len", type=int, required=True, help="per-variable length bound")
    solve.set_defaults(func=_cmd_solve)

    sample = commands.add_parser(
        "sample", parents=[common], help="emit a built-in or generated presentation"
    )
    sample.add_argument("name", nargs="?", help="sample name; omit to list")
    sample.add_argument("--rules", type=int, default=None, help="rule count for 'random'")
    sample.add_argument("--interior-min", type=int, default=1)
    sample.add_argument("--interior-max", type=int, default=6)
    sample.set_defaults(func=_cmd_sample)

    return parser


def run(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (SpecmonError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
