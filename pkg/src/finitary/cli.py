"""Command-line front end.

Exit codes: 0 success (for ``equiv``: equivalent; for ``oracle`` with two
models: agreement up to the length bound), 1 a established difference,
2 usage, syntax, validation, or budget errors.  Output is deterministic;
``--format json`` switches every command to a machine-readable report.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .basis import compute_basis
from .equivalence import (
    DIMENSION_MISMATCH,
    EquivalenceVerdict,
    test_equivalence,
    test_equivalence_pfa,
)
from .model_io import ModelSyntaxError, ModelValidationError, parse_model
from .models import PfaModel
from .oracle import BudgetExceededError, DEFAULT_BUDGET, brute_equiv, enumerate_probs
from .representation import compile_model
from .scalars import DEFAULT_TOLERANCE, EXACT, FLOAT, format_scalar

_TOLERANCE_ENV = "FINITARY_TOLERANCE"

tolerance_option = click.option(
    "--tolerance", type=float, default=DEFAULT_TOLERANCE, show_default=True,
    envvar=_TOLERANCE_ENV,
    help="Float-mode comparison tolerance (also honored via "
         f"{_TOLERANCE_ENV}).")
format_option = click.option(
    "--format", "fmt", type=click.Choice(["text", "json"]), default="text",
    show_default=True, help="Report style.")


def _fail(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _load(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        _fail(str(exc))
    try:
        return parse_model(text)
    except ModelValidationError as exc:
        _fail(f"{path}: invalid model: {exc}")
    except ModelSyntaxError as exc:
        _fail(f"{path}: {exc}")


def _compile(model, path: str):
    if isinstance(model, PfaModel):
        click.echo(f"note: {path} reduced over its alphabet plus the stop "
                   "symbol '$'", err=True)
    return compile_model(model)


def _format_value(x) -> str:
    return format_scalar(x)


@click.group()
def main():
    """Equivalence testing for hidden Markov models, quantum random walks,
    and probabilistic automata."""


@main.command()
@click.argument("model_a", type=click.Path())
@click.argument("model_b", type=click.Path())
@tolerance_option
@click.option("--search-witness", is_flag=True,
              help="On a dimension mismatch, brute-force a witness word.")
@format_option
def equiv(model_a, model_b, tolerance, search_witness, fmt):
    """Decide whether two model files generate the same process."""
    a = _load(model_a)
    b = _load(model_b)
    try:
        if isinstance(a, PfaModel) and isinstance(b, PfaModel):
            click.echo("note: both automata reduced over their alphabet plus "
                       "the stop symbol '$'", err=True)
            verdict = test_equivalence_pfa(a, b, tolerance, search_witness)
        else:
            verdict = test_equivalence(_compile(a, model_a),
                                       _compile(b, model_b),
                                       tolerance, search_witness)
    except (ValueError, ArithmeticError) as exc:
        _fail(str(exc))
    _report_verdict(verdict, fmt)
    sys.exit(0 if verdict.equivalent else 1)


def _report_verdict(verdict: EquivalenceVerdict, fmt: str):
    witness_text = (None if verdict.witness is None
                    else verdict.alphabet.format_word(verdict.witness))
    values = (None if verdict.details is None
              else [_format_value(x) for x in verdict.details])
    if fmt == "json":
        click.echo(json.dumps({
            "equivalent": verdict.equivalent,
            "reason": verdict.reason,
            "dim_x": verdict.dim_x,
            "dim_y": verdict.dim_y,
            "i_size": verdict.dim_x,
            "j_size": verdict.dim_x,
            "witness": witness_text,
            "values": values,
            "mode": verdict.mode,
            "tolerance": verdict.tolerance,
        }, indent=2))
        return
    if verdict.equivalent:
        if verdict.mode == FLOAT:
            click.echo(f"equivalent within tolerance {verdict.tolerance}")
        else:
            click.echo("equivalent (exact)")
        click.echo(f"dim: {verdict.dim_x}")
    else:
        click.echo(f"not equivalent: {verdict.reason}")
        click.echo(f"dims: {verdict.dim_x} vs {verdict.dim_y}")
        if witness_text is not None:
            click.echo(f"witness: {witness_text}")
            click.echo(f"left:  {values[0]}")
            click.echo(f"right: {values[1]}")
        elif verdict.reason == DIMENSION_MISMATCH:
            click.echo("witness: none computed (rerun with --search-witness)")


@main.command()
@click.argument("model_file", type=click.Path())
@tolerance_option
@format_option
def dim(model_file, tolerance, fmt):
    """Process dimension of one model file."""
    lr = _compile(_load(model_file), model_file)
    try:
        result = compute_basis(lr, tolerance)
    except ArithmeticError as exc:
        _fail(str(exc))
    if fmt == "json":
        click.echo(json.dumps({"dim": result.dim}, indent=2))
    else:
        click.echo(str(result.dim))


@main.command()
@click.argument("model_file", type=click.Path())
@tolerance_option
@format_option
def basis(model_file, tolerance, fmt):
    """Basis words and the invertible block for one model file."""
    lr = _compile(_load(model_file), model_file)
    try:
        result = compute_basis(lr, tolerance)
    except ArithmeticError as exc:
        _fail(str(exc))
    words = lr.alphabet.format_word
    if fmt == "json":
        click.echo(json.dumps({
            "dim": result.dim,
            "row_words": [words(v) for v in result.row_words],
            "col_words": [words(w) for w in result.col_words],
            "matrix": [[_format_value(x) for x in row] for row in result.matrix],
        }, indent=2))
        return
    click.echo(f"dim: {result.dim}")
    click.echo("rows (I): " + " ".join(words(v) for v in result.row_words))
    click.echo("cols (J): " + " ".join(words(w) for w in result.col_words))
    click.echo("block:")
    for row in result.matrix:
        click.echo("  " + " ".join(_format_value(x) for x in row))


@main.command()
@click.argument("model_file", type=click.Path())
@click.argument("word", type=str)
@click.option("--decimal", is_flag=True,
              help="Also print the float value of an exact result.")
@format_option
def prob(model_file, word, decimal, fmt):
    """Probability of WORD under one model file.

    WORD is symbols separated by spaces or commas, plain concatenation when
    all symbols are single characters, or "" / the empty-word glyph.
    """
    lr = _compile(_load(model_file), model_file)
    try:
        parsed = lr.alphabet.parse_word(word)
    except ValueError as exc:
        _fail(str(exc))
    value = lr.prob(parsed)
    if fmt == "json":
        payload = {"word": lr.alphabet.format_word(parsed),
                   "prob": _format_value(value)}
        if decimal and lr.mode == EXACT:
            payload["decimal"] = float(value)
        click.echo(json.dumps(payload, indent=2))
        return
    if decimal and lr.mode == EXACT:
        click.echo(f"{_format_value(value)} ≈ {float(value)!r}")
    else:
        click.echo(_format_value(value))


@main.command()
@click.argument("model_files", type=click.Path(), nargs=-1, required=True)
@click.option("-L", "--length", "max_len", type=int, default=4,
              show_default=True, help="Enumerate words up to this length.")
@click.option("--budget", type=int, default=DEFAULT_BUDGET, show_default=True,
              help="Refuse enumerations needing more table entries than this.")
@tolerance_option
@format_option
def oracle(model_files, max_len, budget, tolerance, fmt):
    """Brute-force word probabilities (one model) or comparison (two)."""
    if len(model_files) not in (1, 2):
        _fail("oracle takes one or two model files")
    models = [_load(p) for p in model_files]
    lrs = [_compile(m, p) for m, p in zip(models, model_files)]
    try:
        if len(lrs) == 1:
            table = enumerate_probs(lrs[0], max_len, budget)
            words = lrs[0].alphabet.format_word
            items = sorted(table.entries.items(), key=lambda kv: (len(kv[0]), kv[0]))
            if fmt == "json":
                click.echo(json.dumps({
                    "max_len": max_len,
                    "entries": {words(w): _format_value(p) for w, p in items},
                }, indent=2))
            else:
                for w, p in items:
                    click.echo(f"{words(w)} {_format_value(p)}")
            return
        if lrs[0].alphabet != lrs[1].alphabet:
            _fail("alphabet mismatch")
        if lrs[0].mode != lrs[1].mode:
            _fail("scalar mode mismatch")
        tol = tolerance if lrs[0].mode == FLOAT else 0.0
        result = brute_equiv(lrs[0], lrs[1], max_len, tol, budget)
    except BudgetExceededError as exc:
        _fail(str(exc))
    words = lrs[0].alphabet.format_word
    if fmt == "json":
        click.echo(json.dumps({
            "max_len": max_len,
            "equal_up_to": result.equal_up_to,
            "witness": None if result.witness is None else words(result.witness),
            "values": (None if result.values is None
                       else [_format_value(x) for x in result.values]),
        }, indent=2))
    elif result.equal_up_to:
        click.echo(f"equal on all words up to length {max_len}")
    else:
        click.echo(f"differs at {words(result.witness)}: "
                   f"{_format_value(result.values[0])} vs "
                   f"{_format_value(result.values[1])}")
    sys.exit(0 if result.equal_up_to else 1)


@main.command()
@click.argument("model_file", type=click.Path())
@tolerance_option
@format_option
def validate(model_file, tolerance, fmt):
    """Check a model file; list violations and exit 2 if invalid."""
    try:
        text = Path(model_file).read_text()
    except OSError as exc:
        _fail(str(exc))
    try:
        parse_model(text, tolerance)
    except ModelValidationError as exc:
        if fmt == "json":
            click.echo(json.dumps({"ok": False, "violations": exc.violations},
                                  indent=2))
        else:
            for violation in exc.violations:
                click.echo(violation)
        sys.exit(2)
    except ModelSyntaxError as exc:
        _fail(f"{model_file}: {exc}")
    if fmt == "json":
        click.echo(json.dumps({"ok": True, "violations": []}, indent=2))
    else:
        click.echo("ok")
