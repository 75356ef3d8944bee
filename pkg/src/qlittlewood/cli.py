"""CLI entry point and subcommand definitions."""

from __future__ import annotations

import argparse
import asyncio
import json
import logging
import sys
from typing import TYPE_CHECKING

from qlittlewood.combinatorics import (
    Partition,
    ShapeError,
    Tableau,
    coxeter_representative,
    partitions,
)
from qlittlewood.config import FORMATS, ConfigError, Settings, get_config_path, load_settings
from qlittlewood.hecke import (
    RankError,
    character_value,
    irreducible_character,
    primitive_idempotent,
    primitive_idempotent_jm,
)
from qlittlewood.immanant import ImmanantError, ImmanantSpec, bethe_generators, immanant
from qlittlewood.qmatrix import DimensionError
from qlittlewood.runner import SuiteCrashed, SuiteJob, run_suites
from qlittlewood.scalar import ScalarError, multiset_multiplicity
from qlittlewood.tensorrep import TensorError
from qlittlewood.verify import SUITES, SuiteError, SuiteParams

if TYPE_CHECKING:
    from qlittlewood.runner import SuiteResult

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
EXIT_FAILURE = 1
EXIT_USAGE = 2

USAGE_ERRORS = (
    ConfigError,
    DimensionError,
    ImmanantError,
    RankError,
    ScalarError,
    ShapeError,
    SuiteError,
    TensorError,
)


class GuardrailError(Exception):
    """Raised when a request exceeds the desk-scale limits without --unsafe-scale."""


def _letters(text: str) -> tuple[int, ...]:
    """Parse a comma list of positive integers such as ``1,2,2``."""
    try:
        letters = tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError as e:
        msg = f"expected a comma list of integers, got {text!r}"
        raise argparse.ArgumentTypeError(msg) from e
    if not letters:
        msg = "expected at least one letter"
        raise argparse.ArgumentTypeError(msg)
    return letters


def _weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError as e:
        msg = f"expected a comma list of integers, got {text!r}"
        raise argparse.ArgumentTypeError(msg) from e


def _shape(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ShapeError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _tableau(text: str) -> Tableau:
    try:
        return Tableau.parse(text)
    except ShapeError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        msg = f"expected a positive integer, got {value}"
        raise argparse.ArgumentTypeError(msg)
    return value


def _guard(args: argparse.Namespace, settings: Settings, n: int, m: int) -> None:
    """Refuse m > max_m or n^m > max_dimension unless --unsafe-scale is given."""
    if m <= settings.max_m and n**m <= settings.max_dimension:
        return
    if args.unsafe_scale:
        logger.warning("Desk-scale limits exceeded (n=%d, m=%d); continuing on request", n, m)
        return
    msg = (
        f"n={n}, m={m} exceeds the desk-scale limits (m <= {settings.max_m}, "
        f"n^m <= {settings.max_dimension}); pass --unsafe-scale to override"
    )
    raise GuardrailError(msg)


def _output_format(args: argparse.Namespace, settings: Settings) -> str:
    chosen: str | None = args.format
    return chosen or settings.output_format


def _print_json(payload: dict[str, object]) -> None:
    print(json.dumps({"schema_version": SCHEMA_VERSION, **payload}, indent=2))


def _cmd_imm(args: argparse.Namespace, settings: Settings) -> int:
    """Compute Imm_{χ^λ}(X_I^J), optionally divided by m_{q²}(I)."""
    shape: Partition = args.shape
    n: int = args.n
    _guard(args, settings, n, shape.weight)
    rows: tuple[int, ...] = args.rows
    cols: tuple[int, ...] = args.cols
    if args.normalized and (rows != cols or list(rows) != sorted(rows)):
        msg = "--normalized needs equal, nondecreasing --rows and --cols"
        raise ImmanantError(msg)
    value = immanant(ImmanantSpec(irreducible_character(shape), rows, cols, n))
    if args.normalized:
        value = value / multiset_multiplicity(rows)
    label = f"Imm_{shape}(X_{rows},{cols})"
    if _output_format(args, settings) == "json":
        _print_json(
            {
                "n": n,
                "shape": shape.to_json(),
                "rows": list(rows),
                "cols": list(cols),
                "normalized": bool(args.normalized),
                "element": value.to_json(),
            }
        )
    else:
        print(f"{label} = {value}")
    return 0


def _cmd_char_table(args: argparse.Namespace, settings: Settings) -> int:
    """Print χ^λ(T_σ) for σ a Coxeter element of each cycle type."""
    m: int = args.m
    _guard(args, settings, 1, m)
    classes = partitions(m)
    shapes = partitions(m)
    table = [
        [character_value(lam, coxeter_representative(rho)) for rho in classes] for lam in shapes
    ]
    if _output_format(args, settings) == "json":
        _print_json(
            {
                "m": m,
                "classes": [rho.to_json() for rho in classes],
                "rows": [
                    {"shape": lam.to_json(), "values": [v.to_json() for v in row]}
                    for lam, row in zip(shapes, table, strict=True)
                ],
            }
        )
        return 0
    print("\t".join(["λ \\ ρ", *(str(rho) for rho in classes)]))
    for lam, row in zip(shapes, table, strict=True):
        print("\t".join([str(lam), *(str(v) for v in row)]))
    return 0


def _cmd_idem(args: argparse.Namespace, settings: Settings) -> int:
    """Print the primitive idempotent E_𝒯 of a standard tableau."""
    tableau: Tableau = args.tableau
    _guard(args, settings, 1, tableau.size)
    build = primitive_idempotent_jm if args.method == "jm" else primitive_idempotent
    element = build(tableau)
    if _output_format(args, settings) == "json":
        _print_json({"tableau": tableau.to_json(), "element": element.to_json()})
    else:
        print(f"E_{tableau} = {element}")
    return 0


def _cmd_bethe(args: argparse.Namespace, settings: Settings) -> int:
    """Print α_k, β_k and γ_k of the Bethe subalgebra."""
    n: int = args.n
    degree: int = args.degree if args.degree is not None else n
    _guard(args, settings, n, max(n, degree))
    gens = bethe_generators(n, degree)
    families = {"alpha": gens.alpha, "beta": gens.beta, "gamma": gens.gamma}
    if _output_format(args, settings) == "json":
        _print_json(
            {
                "n": n,
                "degree": degree,
                **{name: [x.to_json() for x in values] for name, values in families.items()},
            }
        )
        return 0
    for name, values in families.items():
        for k, x in enumerate(values):
            print(f"{name}_{k} = {x}")
    return 0


def _cmd_partitions(args: argparse.Namespace, settings: Settings) -> int:
    """List the partitions of m in the fixed reverse lexicographic order."""
    m: int = args.m
    pars = partitions(m)
    if _output_format(args, settings) == "json":
        _print_json({"m": m, "partitions": [p.to_json() for p in pars]})
    else:
        for p in pars:
            print(p)
    return 0


def _suite_params(args: argparse.Namespace) -> SuiteParams:
    return SuiteParams(
        n=args.n,
        m=args.m,
        degree=args.degree,
        shape=args.shape,
        shape2=args.shape2,
        letters=args.letters,
        weight=args.weight,
    )


def _print_result(result: SuiteResult) -> None:
    if isinstance(result, SuiteCrashed):
        print(f"CRASH {result.job.suite}: {result.error}")
        return
    report = result.report
    status = "PASS" if report.passed else "FAIL"
    print(f"{status} {report.suite} ({report.cases} cases)")
    if report.note:
        print(f"  note: {report.note}")
    for failure in report.failures:
        print(f"  {failure.case}: {json.dumps(failure.inputs)}")
        print(f"    left:  {json.dumps(failure.left)}")
        print(f"    right: {json.dumps(failure.right)}")


def _cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    """Run identity suites; exit 1 when any case fails."""
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if any(name not in SUITES for name in names):
        msg = f"Unknown suite {args.suite!r}; expected 'all' or one of {', '.join(SUITES)}"
        raise SuiteError(msg)
    params = _suite_params(args)
    _guard(args, settings, params.n, max(params.effective_m(name) for name in names))
    jobs = [SuiteJob(suite=name, params=params) for name in names]
    concurrency: int = args.jobs or settings.jobs
    results = asyncio.run(run_suites(jobs, concurrency))
    if _output_format(args, settings) == "json":
        _print_json(
            {
                "results": [
                    {"suite": r.job.suite, "passed": False, "error": r.error}
                    if isinstance(r, SuiteCrashed)
                    else r.report.to_dict()
                    for r in results
                ]
            }
        )
    else:
        for r in results:
            _print_result(r)
    return 0 if all(r.passed for r in results) else EXIT_FAILURE


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=FORMATS, help="Output format (default: config)")
    parser.add_argument(
        "--unsafe-scale", action="store_true", help="Allow requests past the desk-scale limits"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qlittlewood",
        description="Exact quantum immanants, Hecke characters and identity suites",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="Log INFO (-v) or DEBUG (-vv)"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    # imm
    imm_parser = subparsers.add_parser("imm", help="Compute a quantum immanant")
    imm_parser.add_argument("--n", type=_positive, required=True, help="Matrix size")
    imm_parser.add_argument("--shape", type=_shape, required=True, help="Shape, e.g. 2,1")
    imm_parser.add_argument("--rows", type=_letters, required=True, help="Row multiset")
    imm_parser.add_argument("--cols", type=_letters, required=True, help="Column multiset")
    imm_parser.add_argument(
        "--normalized", action="store_true", help="Divide by the q²-multiplicity of the rows"
    )
    _add_common(imm_parser)

    # char-table
    char_parser = subparsers.add_parser("char-table", help="Print Hecke character values")
    char_parser.add_argument("--m", type=_positive, required=True, help="Rank of H_m")
    _add_common(char_parser)

    # idem
    idem_parser = subparsers.add_parser("idem", help="Print a primitive idempotent")
    idem_parser.add_argument("tableau", type=_tableau, help="Tableau rows, e.g. 1,2/3")
    idem_parser.add_argument(
        "--method", choices=("seminormal", "jm"), default="seminormal", help="Construction"
    )
    _add_common(idem_parser)

    # bethe
    bethe_parser = subparsers.add_parser("bethe", help="Print Bethe subalgebra generators")
    bethe_parser.add_argument("--n", type=_positive, required=True, help="Matrix size")
    bethe_parser.add_argument("--degree", type=_positive, help="Top degree (default: n)")
    _add_common(bethe_parser)

    # partitions
    part_parser = subparsers.add_parser("partitions", help="List partitions of m")
    part_parser.add_argument("--m", type=_positive, required=True, help="Weight")
    _add_common(part_parser)

    # verify
    verify_parser = subparsers.add_parser("verify", help="Run identity suites")
    verify_parser.add_argument("suite", help=f"'all' or one of: {', '.join(SUITES)}")
    verify_parser.add_argument("--n", type=_positive, default=2, help="Matrix size")
    verify_parser.add_argument("--m", type=_positive, help="Tensor power / Hecke rank")
    verify_parser.add_argument("--degree", type=_positive, help="Top degree")
    verify_parser.add_argument("--shape", type=_shape, help="Shape λ (or μ)")
    verify_parser.add_argument("--shape2", type=_shape, help="Second shape ν")
    verify_parser.add_argument("--letters", type=_letters, help="Multiset I, e.g. 1,2,2")
    verify_parser.add_argument("--weight", type=_weight, help="Weight μ, e.g. 2,0")
    verify_parser.add_argument("--jobs", type=_positive, help="Worker processes")
    _add_common(verify_parser)
    return parser


def main(argv: list[str] | None = None) -> None:
    """Parse arguments and dispatch to the appropriate subcommand."""
    parser = build_parser()
    args = parser.parse_args(argv)

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )

    dispatch = {
        "imm": _cmd_imm,
        "char-table": _cmd_char_table,
        "idem": _cmd_idem,
        "bethe": _cmd_bethe,
        "partitions": _cmd_partitions,
        "verify": _cmd_verify,
    }
    try:
        settings = load_settings(get_config_path())
        code = dispatch[args.command](args, settings)
    except (*USAGE_ERRORS, GuardrailError) as e:
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(EXIT_USAGE)
    if code:
        sys.exit(code)
