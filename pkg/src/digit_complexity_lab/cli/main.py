"""Command line entry point ``dclab``.

Every subcommand is a thin wrapper over the library: it builds a digit
source or parses parameters, calls one operation and writes a JSON
document or a CSV table that embeds the configuration hash.
"""

import argparse
import json
import sys
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Optional, TextIO, Union

import structlog

from digit_complexity_lab import __version__
from digit_complexity_lab.algebraic import AlgebraicReal
from digit_complexity_lab.approximation import (
    approximant_from_factorization,
    best_repetition,
)
from digit_complexity_lab.arithmetic import eval_context
from digit_complexity_lab.arithmetic.rationals import as_rational
from digit_complexity_lab.bounds import evaluate_bound, list_formulas
from digit_complexity_lab.config import ExperimentConfig, LabSettings, load_settings
from digit_complexity_lab.errors import InputError, LabError
from digit_complexity_lab.experiments import (
    EXPERIMENTS,
    corollary32_source,
    get_experiment,
)
from digit_complexity_lab.sources import (
    AlgebraicDigitSource,
    BaseDigitSource,
    ChampernowneSource,
    GapSeriesSource,
    GapSeriesSpec,
    cache_file_name,
    cache_load,
    cache_store,
    make_theorem92_spec,
    parse_coefficient_rule,
    parse_exponent_rule,
    read_cache,
)
from digit_complexity_lab.twisted import (
    TwistedHeightValue,
    gap_principle_experiment,
    gap_principle_suite,
    infima_estimate,
    lemma53_verify,
    load_system,
    search_small_points,
    twisted_height,
)
from digit_complexity_lab.utils import configure_logging
from digit_complexity_lab.words import (
    FiniteWord,
    complexity_profile_fast,
    complexity_profile_naive,
    nbdc_profile,
)

from .output import CommandOutput, emit

logger = structlog.get_logger(__name__)

DEFAULT_N_MAX = 200
TWISTED_ACTIONS = ("height", "search", "gap", "infima", "suite", "lemma53")

Command = Callable[
    [argparse.Namespace, LabSettings], tuple[ExperimentConfig, CommandOutput]
]


def _add_subject_arguments(parser: argparse.ArgumentParser, cached: bool) -> None:
    group = parser.add_argument_group("subject")
    group.add_argument(
        "--minpoly",
        help="integer coefficients, constant term first, e.g. '[-2,0,1]'",
    )
    group.add_argument(
        "--interval",
        nargs=2,
        metavar=("LO", "HI"),
        help="isolating interval of the root, e.g. 1/1 3/2",
    )
    group.add_argument(
        "--shift", default="0", help="rational added to the root, e.g. -1"
    )
    group.add_argument(
        "--gap", metavar="RULE", help="gap series exponents, e.g. geometric:2"
    )
    group.add_argument(
        "--coefficients",
        default="const:1",
        metavar="RULE",
        help="gap series coefficients, e.g. periodic:1,2",
    )
    group.add_argument(
        "--champernowne",
        action="store_true",
        help="the Champernowne number of the base",
    )
    if cached:
        group.add_argument("--input", type=Path, help="cache file to read")
    parser.add_argument("--base", type=int, default=2, help="digit base")
    parser.add_argument(
        "-N",
        "--digits",
        type=int,
        help="number of digits (default: the digit budget setting)",
    )


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with all subcommands."""
    parser = argparse.ArgumentParser(
        prog="dclab",
        description="Certified digit expansions, complexity and explicit bounds",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--settings", type=Path, help="key=value settings file")
    parser.add_argument("--precision-bits", type=int, help="working precision")
    parser.add_argument("--log-base", choices=["e", "2"], help="logarithm base")
    parser.add_argument("--cache-dir", type=Path, help="digit cache directory")
    parser.add_argument("--workers", type=int, help="worker processes")
    parser.add_argument("--seed", type=int, help="seed for randomized suites")
    parser.add_argument("--log-level", default="WARNING", help="logging level")
    parser.add_argument(
        "--log-json", action="store_true", help="render logs as JSON lines"
    )
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument(
        "--json", dest="format", action="store_const", const="json", default="json"
    )
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv")
    parser.add_argument("--output", type=Path, help="write to a file, not stdout")

    commands = parser.add_subparsers(dest="command", required=True)

    digits = commands.add_parser("digits", help="certified digits of a subject")
    _add_subject_arguments(digits, cached=True)
    digits.add_argument(
        "--store", action="store_true", help="write the digits to the cache"
    )

    complexity = commands.add_parser("complexity", help="block complexity p(n)")
    _add_subject_arguments(complexity, cached=True)
    complexity.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    complexity.add_argument(
        "--naive", action="store_true", help="use the quadratic oracle"
    )

    nbdc = commands.add_parser("nbdc", help="number of digit changes")
    _add_subject_arguments(nbdc, cached=True)

    repetition = commands.add_parser(
        "repetition", help="best U V W V X factorizations of prefixes"
    )
    _add_subject_arguments(repetition, cached=True)
    repetition.add_argument(
        "--lengths",
        type=int,
        nargs="+",
        required=True,
        help="prefix lengths to factorize",
    )

    bounds = commands.add_parser("bounds", help="evaluate an explicit bound")
    bounds.add_argument("formula", help="formula name, or 'list'")
    bounds.add_argument("parameters", nargs="*", metavar="KEY=VALUE")

    twisted = commands.add_parser("twisted", help="twisted heights over Q")
    twisted.add_argument("action", choices=TWISTED_ACTIONS)
    twisted.add_argument("--system", help="system as JSON text or a JSON file")
    twisted.add_argument("--point", help="vector, e.g. 1,0")
    twisted.add_argument("--Q", dest="q", help="parameter Q")
    twisted.add_argument("--delta", default="1/2")
    twisted.add_argument("--box", type=int, default=10)
    twisted.add_argument("--Q0", dest="q0", default="17")
    twisted.add_argument("--samples", type=int, default=8)
    twisted.add_argument("--systems", type=int, default=100)
    twisted.add_argument("--psi", help="the value Psi(x) of lemma53")
    twisted.add_argument(
        "--exponents",
        help="lemma53 exponents as JSON mapping places to rows",
    )

    gap_series = commands.add_parser(
        "gap-series", help="digits of a validated gap series"
    )
    gap_series.add_argument("--gap", metavar="RULE", required=True)
    gap_series.add_argument("--coefficients", default="const:1", metavar="RULE")
    gap_series.add_argument(
        "--theta", help="validate the transcendence hypotheses with this theta"
    )
    gap_series.add_argument("--base", type=int, default=2)
    gap_series.add_argument("-N", "--digits", type=int)

    experiment = commands.add_parser("experiment", help="run an experiment")
    experiment.add_argument("name", choices=sorted(EXPERIMENTS))
    _add_subject_arguments(experiment, cached=False)
    experiment.add_argument(
        "--param",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="experiment parameter; comma separated values become lists",
    )
    return parser


def parse_key_value_args(pairs: Sequence[str]) -> dict[str, str]:
    """Parse ``key=value`` command line words.

    Raises:
        InputError: For a word without ``=``.
    """
    parsed: dict[str, str] = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise InputError(f"expected KEY=VALUE, got {pair!r}")
        parsed[key] = value
    return parsed


def _experiment_parameters(pairs: Sequence[str]) -> dict[str, Any]:
    return {
        key: value.split(",") if "," in value else value
        for key, value in parse_key_value_args(pairs).items()
    }


def _settings(args: argparse.Namespace) -> LabSettings:
    return load_settings(
        args.settings,
        precision_bits=args.precision_bits,
        log_base=args.log_base,
        cache_dir=args.cache_dir,
        workers=args.workers,
        seed=args.seed,
    )


def _subject_source(
    args: argparse.Namespace, settings: LabSettings
) -> Optional[BaseDigitSource]:
    if args.minpoly is not None:
        if args.interval is None:
            raise InputError("--minpoly needs --interval LO HI")
        try:
            coefficients = json.loads(args.minpoly)
        except json.JSONDecodeError as e:
            raise InputError(f"cannot parse --minpoly {args.minpoly!r}") from e
        x = AlgebraicReal.from_coefficients(coefficients, *args.interval)
        if as_rational(args.shift):
            x = x.translate(args.shift)
        return AlgebraicDigitSource(x, args.base, settings.max_digits)
    if args.gap is not None:
        spec = GapSeriesSpec(
            args.base,
            parse_exponent_rule(args.gap),
            parse_coefficient_rule(args.coefficients),
        )
        return GapSeriesSource(spec, settings.max_digits)
    if args.champernowne:
        return ChampernowneSource(args.base, settings.max_digits)
    return None


def _cached(source: BaseDigitSource, settings: LabSettings) -> BaseDigitSource:
    """Seed the source's stream from the cache directory when a file exists."""
    if settings.cache_dir is not None:
        path = settings.cache_dir / cache_file_name(source)
        if path.exists():
            cache_load(path, source)
            logger.debug("cache_hit", path=str(path))
    return source


def _require_source(
    args: argparse.Namespace, settings: LabSettings
) -> BaseDigitSource:
    source = _subject_source(args, settings)
    if source is None:
        raise InputError("no subject: use --minpoly, --gap or --champernowne")
    return _cached(source, settings)


def _input_word(
    args: argparse.Namespace, settings: LabSettings
) -> tuple[str, FiniteWord, Optional[BaseDigitSource]]:
    """Subject spec and digits, read from ``--input`` or computed.

    The source is ``None`` for cached input.
    """
    count = args.digits or settings.digit_budget
    if getattr(args, "input", None) is not None:
        header, word = read_cache(args.input)
        if args.digits is not None:
            word = word.prefix(args.digits)
        return header.spec, word, None
    source = _require_source(args, settings)
    return source.spec_string(), source.digits(count), source


def _config(
    args: argparse.Namespace,
    settings: LabSettings,
    subject: str,
    base: int,
    digits: int,
    parameters: Optional[dict[str, Any]] = None,
) -> ExperimentConfig:
    return ExperimentConfig(
        name=args.command,
        subject=subject,
        base=base,
        digits=max(digits, 1),
        precision_bits=settings.precision_bits,
        parameters=parameters or {},
    )


def cmd_digits(
    args: argparse.Namespace, settings: LabSettings
) -> tuple[ExperimentConfig, CommandOutput]:
    subject, word, source = _input_word(args, settings)
    result: dict[str, Any] = {
        "subject": subject,
        "base": word.base,
        "count": len(word),
        "digits": word.to_string(),
    }
    if args.store:
        if settings.cache_dir is None or source is None:
            raise InputError("--store needs --cache-dir and a subject")
        path = settings.cache_dir / cache_file_name(source)
        result["cache"] = str(cache_store(source, len(word), path))
    rows = [(k, d) for k, d in enumerate(word, start=1)]
    config = _config(args, settings, subject, word.base, len(word))
    return config, CommandOutput(result, ["k", "digit"], rows)


def cmd_complexity(
    args: argparse.Namespace, settings: LabSettings
) -> tuple[ExperimentConfig, CommandOutput]:
    subject, word, _ = _input_word(args, settings)
    profile_of = complexity_profile_naive if args.naive else complexity_profile_fast
    profile = profile_of(word, args.n_max)
    result = {
        "subject": subject,
        "prefix_length": profile.prefix_length,
        "p": list(profile.counts),
        "trend_reliable_up_to": max(
            (n for n, _ in profile.items() if profile.trend_reliable(n)), default=0
        ),
    }
    config = _config(
        args, settings, subject, word.base, len(word), {"n_max": args.n_max}
    )
    return config, CommandOutput(result, ["n", "p"], profile.csv_rows())


def cmd_nbdc(
    args: argparse.Namespace, settings: LabSettings
) -> tuple[ExperimentConfig, CommandOutput]:
    subject, word, _ = _input_word(args, settings)
    profile = nbdc_profile(word)
    rows = list(enumerate(profile))[1:]
    result = {"subject": subject, "nbdc": profile[-1], "length": len(word)}
    config = _config(args, settings, subject, word.base, len(word))
    return config, CommandOutput(result, ["n", "nbdc"], rows)


def cmd_repetition(
    args: argparse.Namespace, settings: LabSettings
) -> tuple[ExperimentConfig, CommandOutput]:
    longest = max(args.lengths)
    if args.digits is None:
        args.digits = longest
    subject, word, source = _input_word(args, settings)
    records = []
    for length in sorted(set(args.lengths)):
        prefix = word.prefix(length)
        factorization = best_repetition(prefix)
        record = factorization.to_record().model_dump()
        if source is not None and not factorization.is_degenerate:
            approximant = approximant_from_factorization(factorization, prefix, source)
            record.update(
                p=approximant.p,
                error_exponent=approximant.error_exponent,
            )
        records.append(record)
    columns = ["prefix_length", "r", "v_length", "s", "x_length", "degenerate"]
    rows = [[record[c] for c in columns] for record in records]
    config = _config(
        args,
        settings,
        subject,
        word.base,
        len(word),
        {"lengths": sorted(args.lengths)},
    )
    return config, CommandOutput(records, columns, rows)


def cmd_bounds(
    args: argparse.Namespace, settings: LabSettings
) -> tuple[ExperimentConfig, CommandOutput]:
    if args.formula == "list":
        formulas = list_formulas()
        rows = [(f.name, " ".join(f.parameters), f.description) for f in formulas]
        config = _config(args, settings, "bounds", 2, 1)
        return config, CommandOutput(
            formulas, ["name", "parameters", "description"], rows
        )
    raw = parse_key_value_args(args.parameters)
    result = evaluate_bound(args.formula, raw)
    parameters = {**raw, "log_base": settings.log_base}
    config = _config(args, settings, f"formula:{args.formula}", 2, 1, parameters)
    rows = [(result.formula, result.lower, result.upper, result.log_value)]
    return config, CommandOutput(
        result, ["formula", "lower", "upper", "log_value"], rows
    )


def _point(text: Optional[str]) -> tuple[Fraction, ...]:
    if not text:
        raise InputError("--point is required, e.g. --point 1,0")
    return tuple(as_rational(v) for v in text.split(","))


def _exponents(text: Optional[str]) -> dict[str, list[Any]]:
    if text is None:
        raise InputError("twisted lemma53 needs --exponents")
    try:
        parsed = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"cannot parse --exponents {text!r}") from e
    if not isinstance(parsed, dict):
        raise InputError("--exponents must map places to exponent rows")
    return {str(place): list(row) for place, row in parsed.items()}


def _system_source(text: str) -> Union[str, Path]:
    """A JSON file path when one exists, else the JSON text itself."""
    try:
        path = Path(text)
        return path if path.is_file() else text
    except OSError:
        return text


def _height_record(value: TwistedHeightValue) -> dict[str, Any]:
    return {
        "coefficient": str(value.coefficient),
        "base": str(value.base),
        "exponent": str(value.exponent),
        "enclosure": value.real(),
    }


def cmd_twisted(
    args: argparse.Namespace, settings: LabSettings
) -> tuple[ExperimentConfig, CommandOutput]:
    parameters: dict[str, Any] = {"action": args.action, "delta": args.delta}
    if args.action == "suite":
        reports = gap_principle_suite(
            settings.seed, args.systems, args.delta, args.q0, box=args.box
        )
        rows = [(i, r.passed, len(r.points)) for i, r in enumerate(reports)]
        result = {
            "systems": len(reports),
            "failed": sum(not r.passed for r in reports),
        }
        parameters["seed"] = settings.seed
        config = _config(args, settings, "random-systems", 2, 1, parameters)
        return config, CommandOutput(result, ["system", "passed", "points"], rows)

    if args.system is None:
        raise InputError(f"twisted {args.action} needs --system")
    system, c = load_system(_system_source(args.system))
    subject = f"system:{args.system}"
    columns: list[str] = []
    rows: list[Sequence[Any]] = []
    if args.action == "height":
        x = _point(args.point)
        value = twisted_height(x, system, c, args.q)
        result: Any = {"point": x, "Q": args.q, "height": _height_record(value)}
    elif args.action == "search":
        points = search_small_points(
            system, c, args.q, args.delta, args.box, settings.workers
        )
        result = {"points": points}
        columns = [f"x{i}" for i in range(1, system.n + 1)]
        rows = points
    elif args.action == "gap":
        report = gap_principle_experiment(
            system, c, args.delta, args.q0, args.samples, args.box, settings.workers
        )
        result = {
            "passed": report.passed,
            "samples": report.samples,
            "witness": report.witness,
            "counterexample": report.counterexample,
            "points": [{"Q": q, "point": p} for q, p in report.points],
        }
        columns = ["Q", "x1", "x2"]
        rows = [(q, *p) for q, p in report.points]
    elif args.action == "infima":
        estimate = infima_estimate(system, c, args.q, args.box)
        result = {
            "lambda1": _height_record(estimate.lambda1),
            "lambda2": _height_record(estimate.lambda2),
            "first": estimate.first,
            "second": estimate.second,
            "product_in_range": estimate.product_in_range,
        }
    else:
        if args.psi is None:
            raise InputError("twisted lemma53 needs --psi")
        x = _point(args.point)
        verdict = lemma53_verify(x, system, _exponents(args.exponents), args.psi)
        result = {
            "accepted": verdict.accepted,
            "passed": verdict.passed,
            "failures": verdict.failures,
            "epsilon": verdict.epsilon,
            "delta": verdict.delta,
            "r": verdict.r,
            "height_ok": verdict.height_ok,
            "parameter_ok": verdict.parameter_ok,
        }
        if verdict.exact_height is not None:
            result["height"] = _height_record(verdict.exact_height)
    for key in ("point", "q", "box", "q0", "samples", "psi", "exponents"):
        if getattr(args, key) is not None:
            parameters[key] = getattr(args, key)
    config = _config(args, settings, subject, 2, 1, parameters)
    return config, CommandOutput(result, columns, rows)


def cmd_gap_series(
    args: argparse.Namespace, settings: LabSettings
) -> tuple[ExperimentConfig, CommandOutput]:
    exponents = parse_exponent_rule(args.gap)
    coefficients = parse_coefficient_rule(args.coefficients)
    if args.theta is not None:
        spec = make_theorem92_spec(args.base, args.theta, exponents, coefficients)
    else:
        spec = GapSeriesSpec(args.base, exponents, coefficients)
    source = _cached(GapSeriesSource(spec, settings.max_digits), settings)
    word = source.digits(args.digits or settings.digit_budget)
    result = {
        "subject": spec.spec_string(),
        "hypotheses_checked": args.theta is not None,
        "count": len(word),
        "digits": word.to_string(),
    }
    rows = [(k, d) for k, d in enumerate(word, start=1)]
    config = _config(args, settings, spec.spec_string(), args.base, len(word))
    return config, CommandOutput(result, ["k", "digit"], rows)


def cmd_experiment(
    args: argparse.Namespace, settings: LabSettings
) -> tuple[ExperimentConfig, CommandOutput]:
    parameters = _experiment_parameters(args.param)
    experiment = get_experiment(args.name, **parameters)
    source = _subject_source(args, settings)
    if source is None and args.name == "corollary32":
        source = corollary32_source(parameters.get("eta", "4/5"), args.base)
    if source is None:
        raise InputError("no subject: use --minpoly, --gap or --champernowne")
    source = _cached(source, settings)
    digits = args.digits or settings.digit_budget
    report = experiment.run(source, digits)
    config = ExperimentConfig(
        name=args.name,
        subject=source.spec_string(),
        base=source.base,
        digits=digits,
        precision_bits=settings.precision_bits,
        parameters=parameters,
    )
    return config, CommandOutput(report, report.columns, report.rows)


COMMANDS: dict[str, Command] = {
    "digits": cmd_digits,
    "complexity": cmd_complexity,
    "nbdc": cmd_nbdc,
    "repetition": cmd_repetition,
    "bounds": cmd_bounds,
    "twisted": cmd_twisted,
    "gap-series": cmd_gap_series,
    "experiment": cmd_experiment,
}


def run(args: argparse.Namespace, stream: TextIO) -> int:
    """Execute a parsed command and write its output.

    Returns:
        int: 0 on success, otherwise the exit code of the raised ``LabError``.
    """
    try:
        settings = _settings(args)
        with eval_context(
            settings.precision_bits, settings.precision_cap_bits, settings.log_base
        ):
            config, output = COMMANDS[args.command](args, settings)
        if args.output is not None:
            with args.output.open("w") as handle:
                emit(output, config, args.format, handle)
        else:
            emit(output, config, args.format, stream)
    except LabError as e:
        logger.error(
            "command_failed",
            command=args.command,
            error=str(e),
            exit_code=e.exit_code,
        )
        print(f"dclab: error: {e}", file=sys.stderr)
        return e.exit_code
    logger.info("command_finished", command=args.command, config=config.config_hash())
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv`` and run the selected subcommand."""
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level, args.log_json)
    return run(args, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
