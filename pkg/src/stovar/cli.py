"""Command-line front end: parse matrix files, run analyses, emit reports.

Input formats
    CSV   one row per line, comma-separated entries.  An entry is either a
          decimal literal or a fraction ``p/q``.  A file containing only
          decimal literals loads in the float domain; any fraction forces
          the rational domain, with decimal literals converted exactly
          from their digits (never through a binary float).
    JSON  an object ``{"rows": m, "cols": n, "data": [[...], ...]}`` whose
          entries are numbers or ``"p/q"`` strings, same domain rule.

Machine-readable reports are JSON objects with a top-level
``"schema": "stovar/1"`` field.  Rational values serialize as exact
fraction strings and float values with 17 significant digits, so
rational-domain reports are byte-identical across runs and platforms.

Exit codes: 0 success (analysis converged), 1 parse error,
2 precondition failure (not square, not type 1, bad entries),
3 inconclusive (no contraction power within the search bound).
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

import click

from . import analysis as _analysis
from .analysis import (
    DEFAULT_K_REPORT,
    DEFAULT_P_MAX,
    Classification2x2,
    ConvergenceAnalysis,
    classify_2x2,
    matrix_2x2,
)
from .core import (
    DEFAULT_TOLERANCE,
    Domain,
    Matrix,
    Scalar,
    TypeReport,
    VariationReport,
    set_tolerance,
    type_of,
    variation,
)
from .errors import MatrixParseError, StovarError
from .nonneg import (
    SignPattern,
    first_positive_power,
    pairwise_positive_overlap,
    pattern_product,
)

SCHEMA = "stovar/1"

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_PRECONDITION = 2
EXIT_INCONCLUSIVE = 3


# ---------------------------------------------------------------------------
# scalar and matrix serialization


def format_scalar(value: Scalar, domain: Domain) -> str:
    """Report form of a scalar: exact fraction string, or 17 digits."""
    if domain is Domain.RATIONAL:
        return str(Fraction(value))
    return format(float(value), ".17g")


def _fraction_file_token(value: Fraction) -> str:
    # always p/q so an all-integer matrix reparses in the rational domain
    return f"{value.numerator}/{value.denominator}"


def _detect_format(path: str, fmt: Optional[str]) -> str:
    if fmt is not None:
        return fmt
    return "json" if Path(path).suffix.lower() == ".json" else "csv"


def _entries_to_matrix(rows: list[list[Union[int, str]]]) -> Matrix:
    tokens = [tok for row in rows for tok in row]
    rational = any(isinstance(tok, str) and "/" in tok for tok in tokens)
    try:
        if rational:
            return Matrix(
                [[Fraction(tok) for tok in row] for row in rows],
                domain=Domain.RATIONAL,
            )
        return Matrix([[float(tok) for tok in row] for row in rows], domain=Domain.FLOAT)
    except (ValueError, ZeroDivisionError) as exc:
        raise MatrixParseError(f"bad matrix entry: {exc}") from exc
    except StovarError as exc:
        raise MatrixParseError(str(exc)) from exc


def _parse_csv_matrix(text: str) -> Matrix:
    rows: list[list[Union[int, str]]] = []
    for line in text.splitlines():
        if not line.strip():
            continue
        rows.append([tok.strip() for tok in line.split(",")])
    if not rows:
        raise MatrixParseError("empty matrix file")
    width = len(rows[0])
    if any(len(row) != width for row in rows) or width == 0:
        raise MatrixParseError("ragged rows: every line needs the same number of entries")
    if any(tok == "" for row in rows for tok in row):
        raise MatrixParseError("empty entry in matrix file")
    return _entries_to_matrix(rows)


def _parse_json_matrix(text: str) -> Matrix:
    try:
        # parse_float=str keeps the literal digits so rational conversion
        # can be exact when a fraction elsewhere forces that domain
        payload = json.loads(text, parse_float=str)
    except json.JSONDecodeError as exc:
        raise MatrixParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise MatrixParseError("JSON matrix must be an object with rows, cols, data")
    try:
        rows_n = payload["rows"]
        cols_n = payload["cols"]
        data = payload["data"]
    except KeyError as exc:
        raise MatrixParseError(f"JSON matrix is missing the {exc.args[0]!r} field") from exc
    if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
        raise MatrixParseError("the data field must be an array of arrays")
    if len(data) != rows_n or any(len(row) != cols_n for row in data):
        raise MatrixParseError(
            f"data shape does not match rows={rows_n}, cols={cols_n}"
        )
    if rows_n == 0 or cols_n == 0:
        raise MatrixParseError("empty matrix")
    cleaned: list[list[Union[int, str]]] = []
    for row in data:
        out_row: list[Union[int, str]] = []
        for cell in row:
            if isinstance(cell, bool) or not isinstance(cell, (int, str)):
                raise MatrixParseError(f"bad matrix entry: {cell!r}")
            out_row.append(cell)
        cleaned.append(out_row)
    return _entries_to_matrix(cleaned)


def parse_matrix(path: str, fmt: Optional[str] = None) -> Matrix:
    """Load a matrix from a CSV or JSON file.

    The format is taken from the extension unless ``fmt`` is given.
    Raises :class:`MatrixParseError` for unreadable or malformed files.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MatrixParseError(f"cannot read {path}: {exc}") from exc
    if _detect_format(path, fmt) == "json":
        return _parse_json_matrix(text)
    return _parse_csv_matrix(text)


def serialize_matrix(m: Matrix, fmt: str = "csv") -> str:
    """Render a matrix so that parsing the result reproduces it exactly."""
    if fmt == "json":
        if m.domain is Domain.RATIONAL:
            data = [
                [_fraction_file_token(m.entry(i, j)) for j in range(m.cols)]
                for i in range(m.rows)
            ]
        else:
            data = [[m.entry(i, j) for j in range(m.cols)] for i in range(m.rows)]
        return json.dumps({"rows": m.rows, "cols": m.cols, "data": data})
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    lines = []
    for i in range(m.rows):
        if m.domain is Domain.RATIONAL:
            cells = [_fraction_file_token(m.entry(i, j)) for j in range(m.cols)]
        else:
            cells = [repr(m.entry(i, j)) for j in range(m.cols)]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def parse_pattern(path: str) -> SignPattern:
    """Load a sign pattern from a CSV-style file of 0 and + entries."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MatrixParseError(f"cannot read {path}: {exc}") from exc
    rows = []
    for line in text.splitlines():
        if not line.strip():
            continue
        cells = [tok.strip() for tok in line.split(",")]
        if any(tok not in ("0", "+") for tok in cells):
            raise MatrixParseError("pattern entries must be 0 or +")
        rows.append(cells)
    if not rows:
        raise MatrixParseError("empty pattern file")
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise MatrixParseError("ragged rows: every line needs the same number of entries")
    return SignPattern(rows)


# ---------------------------------------------------------------------------
# report construction


def _input_echo(m: Matrix, path: Optional[str]) -> dict:
    echo = {"rows": m.rows, "cols": m.cols, "domain": m.domain.value}
    if path is not None:
        echo["path"] = path
    return echo


def _type_dict(report: TypeReport, domain: Domain) -> dict:
    return {
        "has_type": report.has_type,
        "value": format_scalar(report.type_value, domain),
        "max_deviation": format_scalar(report.max_deviation, domain),
    }


def _variation_dict(report: VariationReport, domain: Domain) -> dict:
    return {
        "value": format_scalar(report.value, domain),
        "decimal": float(report.value),
        "columns": [report.arg_j, report.arg_k],
    }


def _verdict_string(result: ConvergenceAnalysis) -> str:
    if result.converged:
        return "converges"
    return f"no contraction power found up to p_max={result.p_max}"


def analysis_report(
    m: Matrix,
    result: ConvergenceAnalysis,
    path: Optional[str] = None,
    k_report: int = DEFAULT_K_REPORT,
) -> dict:
    """JSON-ready report for the analyze command."""
    domain = m.domain
    report = {
        "schema": SCHEMA,
        "command": "analyze",
        "input": _input_echo(m, path),
        "parameters": {"p_max": result.p_max, "k_report": k_report},
        "type": _type_dict(type_of(m), domain),
        "variation": _variation_dict(variation(m), domain),
        "variation_per_power": [
            format_scalar(v, domain) for v in result.variation_per_power
        ],
        "contraction_power": result.contraction_power,
        "variation_at_power": (
            None
            if result.variation_at_p is None
            else format_scalar(result.variation_at_p, domain)
        ),
        "stationary": (
            None
            if result.stationary is None
            else [format_scalar(v, domain) for v in result.stationary]
        ),
        "projection": (
            None
            if result.projection is None
            else [
                [format_scalar(result.projection.entry(i, j), domain) for j in range(m.cols)]
                for i in range(m.rows)
            ]
        ),
        "decay_bounds": [
            {"k": k, "bound": format_scalar(v, domain), "decimal": float(v)}
            for k, v in result.decay_bounds
        ],
        "verdict": _verdict_string(result),
    }
    return report


def _matrix_lines(cells: list[list[str]], indent: str = "  ") -> list[str]:
    widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
    return [
        indent + "  ".join(row[j].rjust(widths[j]) for j in range(len(row)))
        for row in cells
    ]


def analysis_text(report: dict) -> str:
    """Human-readable rendering of an analyze report."""
    lines = []
    echo = report["input"]
    lines.append(f"input: {echo['rows']}x{echo['cols']} matrix, {echo['domain']} domain")
    t = report["type"]
    if t["has_type"]:
        lines.append(f"type: {t['value']} (max column-sum deviation {t['max_deviation']})")
    var = report["variation"]
    lines.append(
        f"variation: {var['value']} (~{var['decimal']:.6g}) "
        f"between columns {var['columns'][0]} and {var['columns'][1]}"
    )
    per_power = ", ".join(
        f"p={i + 1}: {v}" for i, v in enumerate(report["variation_per_power"])
    )
    lines.append(f"variation per power: {per_power}")
    if report["contraction_power"] is not None:
        lines.append(
            f"contraction power: {report['contraction_power']} "
            f"(variation {report['variation_at_power']})"
        )
        lines.append("stationary vector: " + ", ".join(report["stationary"]))
        lines.append("limit projection:")
        lines.extend(_matrix_lines(report["projection"]))
        bounds = "  ".join(
            f"k={b['k']}: {b['decimal']:.6g}" for b in report["decay_bounds"]
        )
        lines.append(f"decay bounds on variation of M^k: {bounds}")
    lines.append(f"verdict: {report['verdict']}")
    return "\n".join(lines)


def variation_report_dict(m: Matrix, path: Optional[str] = None) -> dict:
    return {
        "schema": SCHEMA,
        "command": "variation",
        "input": _input_echo(m, path),
        "type": _type_dict(type_of(m), m.domain),
        "variation": _variation_dict(variation(m), m.domain),
    }


def variation_text(report: dict) -> str:
    echo = report["input"]
    t = report["type"]
    var = report["variation"]
    lines = [f"input: {echo['rows']}x{echo['cols']} matrix, {echo['domain']} domain"]
    if t["has_type"]:
        lines.append(f"type: {t['value']} (max column-sum deviation {t['max_deviation']})")
    else:
        lines.append("type: none (column sums are not constant)")
    lines.append(
        f"variation: {var['value']} (~{var['decimal']:.6g}) "
        f"between columns {var['columns'][0]} and {var['columns'][1]}"
    )
    return "\n".join(lines)


def pattern_report_dict(p: SignPattern, k_max: int) -> dict:
    powers = []
    seen = set()
    acc = p
    for k in range(1, k_max + 1):
        powers.append({"k": k, "rows": list(acc.row_strings())})
        if acc.is_all_positive() or acc in seen:
            break
        seen.add(acc)
        acc = pattern_product(acc, p)
    return {
        "schema": SCHEMA,
        "command": "pattern",
        "rows": p.rows,
        "cols": p.cols,
        "k_max": k_max,
        "powers": powers,
        "first_positive_power": first_positive_power(p, k_max),
        "pairwise_positive_overlap": pairwise_positive_overlap(p),
    }


def pattern_text(report: dict) -> str:
    lines = [f"pattern: {report['rows']}x{report['cols']}"]
    for block in report["powers"]:
        lines.append(f"power {block['k']}:")
        lines.extend("  " + row for row in block["rows"])
    first = report["first_positive_power"]
    if first is None:
        lines.append(f"first positive power: none up to k_max={report['k_max']}")
    else:
        lines.append(f"first positive power: {first}")
    overlap = "yes" if report["pairwise_positive_overlap"] else "no"
    lines.append(f"every column pair shares a positive row: {overlap}")
    return "\n".join(lines)


def classification_report_dict(result: Classification2x2) -> dict:
    domain = Domain.RATIONAL if isinstance(result.c, Fraction) else Domain.FLOAT
    m = matrix_2x2(result.a, result.b)
    return {
        "schema": SCHEMA,
        "command": "classify2x2",
        "domain": domain.value,
        "a": format_scalar(result.a, domain),
        "b": format_scalar(result.b, domain),
        "c": format_scalar(result.c, domain),
        "matrix": [
            [format_scalar(m.entry(i, j), domain) for j in range(2)] for i in range(2)
        ],
        "variation": format_scalar(result.variation, domain),
        "eigenvalues": [format_scalar(v, domain) for v in result.eigenvalues],
        "eigenvectors": (
            None
            if result.eigenvectors is None
            else [[format_scalar(v, domain) for v in vec] for vec in result.eigenvectors]
        ),
        "case": result.case.value,
        "stationary": (
            None
            if result.stationary is None
            else [format_scalar(v, domain) for v in result.stationary]
        ),
    }


def classification_text(report: dict) -> str:
    lines = [
        f"a = {report['a']}, b = {report['b']}, c = {report['c']} ({report['domain']} domain)",
        "matrix:",
    ]
    lines.extend(_matrix_lines(report["matrix"]))
    lines.append(f"variation: {report['variation']}")
    lines.append("eigenvalues: " + ", ".join(report["eigenvalues"]))
    lines.append(f"case: {report['case']}")
    if report["stationary"] is not None:
        lines.append("stationary vector: " + ", ".join(report["stationary"]))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# commands


def _emit(report: dict, text: str, as_json: bool) -> None:
    if as_json:
        click.echo(json.dumps(report, indent=2))
    else:
        click.echo(text)


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


_format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["csv", "json"]),
    default=None,
    help="Input file format; default is by file extension.",
)
_json_option = click.option(
    "--json", "as_json", is_flag=True, help="Emit the machine-readable JSON report."
)


@click.group()
def main() -> None:
    """Convergence analysis of matrix powers via the column variation."""


@main.command("analyze")
@click.argument("path")
@click.option(
    "--pmax",
    type=click.IntRange(min=1),
    default=DEFAULT_P_MAX,
    show_default=True,
    help="Largest power searched for a variation below one.",
)
@click.option(
    "--tol",
    type=click.FloatRange(min=0, min_open=True),
    default=DEFAULT_TOLERANCE,
    show_default=True,
    help="Float-domain comparison tolerance.",
)
@click.option(
    "--k-report",
    type=click.IntRange(min=1),
    default=DEFAULT_K_REPORT,
    show_default=True,
    help="Largest power covered by the decay-bound table.",
)
@_json_option
@_format_option
def analyze_cmd(path: str, pmax: int, tol: float, k_report: int, as_json: bool, fmt: Optional[str]) -> None:
    """Full convergence analysis of a square matrix file."""
    set_tolerance(tol)
    try:
        m = parse_matrix(path, fmt)
    except MatrixParseError as exc:
        _fail(str(exc), EXIT_PARSE)
    try:
        result = _analysis.analyze(m, p_max=pmax, k_report=k_report)
    except StovarError as exc:
        _fail(str(exc), EXIT_PRECONDITION)
    report = analysis_report(m, result, path=path, k_report=k_report)
    _emit(report, analysis_text(report), as_json)
    sys.exit(EXIT_OK if result.converged else EXIT_INCONCLUSIVE)


@main.command("variation")
@click.argument("path")
@_json_option
@_format_option
def variation_cmd(path: str, as_json: bool, fmt: Optional[str]) -> None:
    """Column variation and type report of a matrix file."""
    try:
        m = parse_matrix(path, fmt)
    except MatrixParseError as exc:
        _fail(str(exc), EXIT_PARSE)
    report = variation_report_dict(m, path=path)
    _emit(report, variation_text(report), as_json)


@main.command("pattern")
@click.argument("path")
@click.option(
    "--kmax",
    type=click.IntRange(min=1),
    default=32,
    show_default=True,
    help="Largest power searched for an all-positive pattern.",
)
@_json_option
def pattern_cmd(path: str, kmax: int, as_json: bool) -> None:
    """Sign-pattern powers for a file of 0 and + entries.

    Prints the pattern powers (stopping at the first all-positive power
    or when the patterns start repeating), the first positive power, and
    whether every column pair shares a positive row.
    """
    try:
        p = parse_pattern(path)
    except MatrixParseError as exc:
        _fail(str(exc), EXIT_PARSE)
    try:
        report = pattern_report_dict(p, kmax)
    except StovarError as exc:
        _fail(str(exc), EXIT_PRECONDITION)
    _emit(report, pattern_text(report), as_json)


# ignore_unknown_options lets negative weights like -1/2 through as arguments
@main.command("classify2x2", context_settings={"ignore_unknown_options": True})
@click.argument("a")
@click.argument("b")
@_json_option
def classify_cmd(a: str, b: str, as_json: bool) -> None:
    """Classify the 2x2 type-1 matrix [[1-A, B], [A, 1-B]].

    A and B follow the entry syntax of matrix files: a fraction p/q selects
    the exact rational domain for both, otherwise they load as floats.
    """
    rational = "/" in a or "/" in b
    try:
        if rational:
            pair = (Fraction(a), Fraction(b))
        else:
            pair = (float(a), float(b))
    except (ValueError, ZeroDivisionError) as exc:
        _fail(f"bad scalar: {exc}", EXIT_PARSE)
    result = classify_2x2(*pair)
    report = classification_report_dict(result)
    _emit(report, classification_text(report), as_json)


if __name__ == "__main__":
    main()
