"""Command-line driver.

Subcommands:

    arabiclint check [INPUT]           analyze a file (or - for stdin)
    arabiclint eval [CORPUS]           precision over an annotated corpus
    arabiclint rules validate          load all databases, print counts
    arabiclint lexicon lookup WORD     print every analysis of one word

Exit codes: 0 clean, 1 faults found (or strict-mode eval mismatch),
2 usage or configuration error. The environment variable ARABICLINT_CONFIG
may point at a key = value file supplying defaults for any flag.
"""

from __future__ import annotations

import argparse
import os
import sys

from .engine import Engine, EngineConfig, data_path, default_config
from .errors import ArabicLintError
from .evaluation import PrecisionResult, load_corpus, run_corpus
from .lexicon import SpellingVerdict, analyze_word, check_spelling
from .render import ANSI_CODES, render_html, render_json, render_text
from .segmentation import normalize

CONFIG_ENV_VAR = "ARABICLINT_CONFIG"

_CONFIG_KEYS = {
    "lexicon",
    "affixes",
    "structure-rules",
    "conjugation-rules",
    "fold-hamza",
    "keep-diacritics",
    "format",
    "color",
}


def _parse_bool(value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {value!r}")


def _load_env_config() -> dict[str, str]:
    path = os.environ.get(CONFIG_ENV_VAR)
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as handle:
            content = handle.read()
    except OSError as exc:
        raise ArabicLintError(f"cannot read {CONFIG_ENV_VAR} file: {exc}") from exc
    values: dict[str, str] = {}
    for lineno, raw in enumerate(content.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ArabicLintError(f"{path}:{lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key = key.strip().replace("_", "-")
        if key not in _CONFIG_KEYS:
            raise ArabicLintError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = value.strip()
    return values


def _add_engine_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--lexicon", metavar="PATH", help="word database XML")
    parser.add_argument("--affixes", metavar="PATH", help="affix inventory file")
    parser.add_argument("--structure-rules", metavar="PATH", help="structure rules XML")
    parser.add_argument("--conjugation-rules", metavar="PATH", help="conjugation rules XML")
    parser.add_argument(
        "--fold-hamza", type=_parse_bool, default=None, metavar="BOOL",
        help="fold alef-hamza variants to bare alef (default: true)",
    )
    parser.add_argument(
        "--keep-diacritics", type=_parse_bool, default=None, metavar="BOOL",
        help="keep tashkeel instead of stripping it (default: false)",
    )


def _build_config(args, env: dict[str, str]) -> EngineConfig:
    config = default_config()

    def pick(flag_value, env_key):
        if flag_value is not None:
            return flag_value
        return env.get(env_key)

    lexicon = pick(args.lexicon, "lexicon")
    affixes = pick(args.affixes, "affixes")
    structure = pick(args.structure_rules, "structure-rules")
    conjugation = pick(args.conjugation_rules, "conjugation-rules")
    if lexicon:
        config.lexicon_path = lexicon
    if affixes:
        config.affixes_path = affixes
    if structure:
        config.structure_rules_path = structure
    if conjugation:
        config.conjugation_rules_path = conjugation

    fold = args.fold_hamza
    if fold is None and "fold-hamza" in env:
        fold = _parse_bool(env["fold-hamza"])
    if fold is not None:
        config.fold_hamza = fold

    keep = args.keep_diacritics
    if keep is None and "keep-diacritics" in env:
        keep = _parse_bool(env["keep-diacritics"])
    if keep is not None:
        config.keep_diacritics = keep
    return config


def _read_input(path: str) -> str:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as handle:
            data = handle.read()
    return data.decode("utf-8")


def _want_color(choice: str, stream) -> bool:
    if choice == "always":
        return True
    if choice == "never":
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def _parse_color_map(value: str | None) -> dict[str, str]:
    if not value:
        return {}
    mapping: dict[str, str] = {}
    for item in value.split(","):
        kind, _, name = item.partition("=")
        kind = kind.strip()
        name = name.strip()
        if kind not in ("spelling", "structure", "conjugation") or name not in ANSI_CODES:
            raise ArabicLintError(f"bad --colors entry {item!r}")
        mapping[kind] = name
    return mapping


def cmd_check(args) -> int:
    env = _load_env_config()
    config = _build_config(args, env)
    try:
        text = _read_input(args.input)
    except OSError as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return 2
    except UnicodeDecodeError as exc:
        print(f"error: input is not valid UTF-8: {exc}", file=sys.stderr)
        return 2
    engine = Engine.from_config(config)
    report = engine.analyze_text(text)

    fmt = args.format or env.get("format") or "text"
    if fmt == "json":
        print(render_json(report))
    elif fmt == "html":
        print(render_html(report, text), end="")
    else:
        color_choice = args.color or env.get("color") or "auto"
        use_color = _want_color(color_choice, sys.stdout)
        print(
            render_text(
                report, text, color=use_color, kind_colors=_parse_color_map(args.colors)
            ),
            end="",
        )
    return 1 if report.faults else 0


def cmd_eval(args) -> int:
    env = _load_env_config()
    config = _build_config(args, env)
    corpus = load_corpus(args.corpus)
    engine = Engine.from_config(config)
    outcome = run_corpus(corpus, engine)

    print("kind          precision  recall*   |R|  |D+ ∩ R|  |D+|")
    for kind, result in outcome.results.items():
        print(
            f"{kind:<13} {PrecisionResult.render(result.precision):>9}"
            f"  {PrecisionResult.render(result.recall):>7}"
            f"  {result.detected:>4}  {result.hits:>8}  {result.gold:>4}"
        )
    print("* recall is an extension; the original metric is precision only")

    if outcome.diffs:
        print()
        for diff in outcome.diffs:
            mark = " (excluded from strict)" if diff.excluded else ""
            print(
                f"entry {diff.entry + 1} [{diff.kind}]: expected "
                f"{'+' if diff.expected else '-'}, got "
                f"{'+' if diff.actual else '-'}{mark}: {diff.text}"
            )
    else:
        print("\nno verdict differences")

    if args.strict and outcome.strict_failures:
        return 1
    return 0


def cmd_rules_validate(args) -> int:
    env = _load_env_config()
    config = _build_config(args, env)
    from .lexicon import load_affixes, load_lexicon
    from .rules import load_conjugation_rules, load_structure_rules

    opts = config.normalization
    lexicon = load_lexicon(config.lexicon_path, opts)
    affixes = load_affixes(config.affixes_path, opts)
    structure_rules = load_structure_rules(
        config.structure_rules_path, lexicon.category_names()
    )
    conjugation_rules = load_conjugation_rules(config.conjugation_rules_path, opts)

    print(f"lexicon: {len(lexicon)} entries, {len(lexicon.categories)} categories")
    print(
        f"affixes: {len(affixes.all_prefixes())} prefixes, "
        f"{len(affixes.all_suffixes())} suffixes (empty affix included)"
    )
    verbal = sum(1 for r in structure_rules if r.kind == "Verbal")
    print(
        f"structure rules: {len(structure_rules)} "
        f"({verbal} verbal, {len(structure_rules) - verbal} nominal)"
    )
    print(f"conjugation rules: {len(conjugation_rules)}")
    for warning in lexicon.warnings:
        print(f"warning: {warning}")
    return 0


def cmd_lexicon_lookup(args) -> int:
    env = _load_env_config()
    config = _build_config(args, env)
    engine = Engine.from_config(config)
    word = normalize(args.word, engine.options).normalized
    analyses = analyze_word(word, engine.lexicon, engine.affixes)
    verdict = check_spelling(word, engine.lexicon, engine.affixes)
    print(f"{args.word} -> {word}: {verdict.value}")
    for analysis in analyses:
        print(
            f"  {analysis.prefix or '∅'} + {analysis.base} + {analysis.suffix or '∅'}"
            f"  [{analysis.category.name}]"
        )
    return 0 if verdict is SpellingVerdict.CORRECT else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arabiclint",
        description="Spelling, structure and conjugation fault detection "
        "for non-vowelized Arabic text.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="analyze a text file or stdin")
    check.add_argument("input", nargs="?", default="-", help="input path or - for stdin")
    _add_engine_flags(check)
    check.add_argument("--format", choices=["text", "json", "html"], default=None)
    check.add_argument("--color", choices=["auto", "always", "never"], default=None)
    check.add_argument(
        "--colors", metavar="KIND=COLOR,...",
        help="override fault colors, e.g. spelling=red,structure=cyan",
    )
    check.set_defaults(func=cmd_check)

    evaluate = sub.add_parser("eval", help="evaluate detection precision over a corpus")
    evaluate.add_argument(
        "corpus", nargs="?", default=str(data_path("corpus/table_4_1.jsonl")),
        help="JSONL corpus path (default: bundled regression corpus)",
    )
    evaluate.add_argument(
        "--strict", action="store_true",
        help="exit 1 on any verdict difference not marked excluded",
    )
    _add_engine_flags(evaluate)
    evaluate.set_defaults(func=cmd_eval)

    rules = sub.add_parser("rules", help="rule database utilities")
    rules_sub = rules.add_subparsers(dest="rules_command", required=True)
    validate = rules_sub.add_parser("validate", help="load all databases and print counts")
    _add_engine_flags(validate)
    validate.set_defaults(func=cmd_rules_validate)

    lexicon = sub.add_parser("lexicon", help="lexicon utilities")
    lexicon_sub = lexicon.add_subparsers(dest="lexicon_command", required=True)
    lookup = lexicon_sub.add_parser("lookup", help="print every analysis of a word")
    lookup.add_argument("word")
    _add_engine_flags(lookup)
    lookup.set_defaults(func=cmd_lexicon_lookup)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ArabicLintError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point():  # pragma: no cover - thin wrapper for the console script
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    entry_point()
