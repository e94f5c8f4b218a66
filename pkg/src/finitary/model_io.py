"""Line-oriented model files.

Shared header: ``kind`` (hmm | qrw | pfa), ``mode`` (exact | float),
``alphabet`` (whitespace-separated symbols).  Kind-specific fields follow;
numeric blocks may be laid out as rows under a bare ``name:`` line or inline
after it, and are reshaped by count.  ``#`` starts a comment.  Exact files
use integer and p/q literals, float files decimal literals; complex entries
read ``re+imi``.  ``$`` is reserved for the automaton reduction and rejected
in user alphabets.  Serialization is canonical: fixed field order, lowest
terms, full-form complex values, so parse and serialize round-trip exactly.
"""

from __future__ import annotations

import re

from .models import (
    Alphabet,
    HmmModel,
    Model,
    PfaModel,
    QrwModel,
    STOP_SYMBOL,
    validate,
)
from .scalars import (
    DEFAULT_TOLERANCE,
    MODES,
    format_complex,
    format_scalar,
    parse_complex,
    parse_scalar,
)

_HEADER_RE = re.compile(r"^\s*([^:]+?)\s*:\s*(.*)$")

KINDS = ("hmm", "qrw", "pfa")


class ModelSyntaxError(ValueError):
    """Malformed file; the message carries the line (and column) position."""


class ModelValidationError(ValueError):
    """Well-formed file describing an invalid model."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


class _Token:
    __slots__ = ("text", "line", "col")

    def __init__(self, text, line, col):
        self.text = text
        self.line = line
        self.col = col


class _Record:
    __slots__ = ("name", "line", "tokens")

    def __init__(self, name, line):
        self.name = name
        self.line = line
        self.tokens: list[_Token] = []


def _scan(text: str) -> dict[str, _Record]:
    records: dict[str, _Record] = {}
    current: _Record | None = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        header = _HEADER_RE.match(line)
        if header:
            name = " ".join(header.group(1).split())
            if name in records:
                raise ModelSyntaxError(f"line {line_no}: duplicate field {name!r}")
            current = _Record(name, line_no)
            records[name] = current
            rest = header.group(2)
            offset = header.start(2)
            for m in re.finditer(r"\S+", rest):
                current.tokens.append(_Token(m.group(), line_no, offset + m.start() + 1))
        else:
            if current is None:
                raise ModelSyntaxError(
                    f"line {line_no}: values before any field name")
            for m in re.finditer(r"\S+", line):
                current.tokens.append(_Token(m.group(), line_no, m.start() + 1))
    return records


def _take(records, name, kind):
    if name not in records:
        raise ModelSyntaxError(f"missing field {name!r} for kind {kind!r}")
    return records.pop(name)


def _single(record: _Record) -> _Token:
    if len(record.tokens) != 1:
        raise ModelSyntaxError(
            f"line {record.line}: field {record.name!r} wants one value, "
            f"got {len(record.tokens)}")
    return record.tokens[0]


def _positive_int(record: _Record) -> int:
    token = _single(record)
    if not token.text.isdigit() or int(token.text) == 0:
        raise ModelSyntaxError(
            f"line {token.line}, column {token.col}: "
            f"{record.name!r} must be a positive integer, got {token.text!r}")
    return int(token.text)


def _numbers(record: _Record, count: int, mode: str, parse) -> list:
    if len(record.tokens) != count:
        raise ModelSyntaxError(
            f"line {record.line}: field {record.name!r} has "
            f"{len(record.tokens)} entries, expected {count}")
    out = []
    for token in record.tokens:
        try:
            out.append(parse(token.text, mode))
        except ValueError as exc:
            raise ModelSyntaxError(
                f"line {token.line}, column {token.col}: {exc}") from None
    return out


def _reshape(flat: list, rows: int, cols: int) -> tuple:
    return tuple(tuple(flat[r * cols:(r + 1) * cols]) for r in range(rows))


def parse_model(text: str, tolerance: float = DEFAULT_TOLERANCE) -> Model:
    records = _scan(text)

    kind_token = _single(_take(records, "kind", "any"))
    kind = kind_token.text
    if kind not in KINDS:
        raise ModelSyntaxError(
            f"line {kind_token.line}: unknown kind {kind!r}")
    mode_token = _single(_take(records, "mode", kind))
    mode = mode_token.text
    if mode not in MODES:
        raise ModelSyntaxError(
            f"line {mode_token.line}: unknown mode {mode!r}")

    alpha_rec = _take(records, "alphabet", kind)
    for token in alpha_rec.tokens:
        if token.text == STOP_SYMBOL:
            raise ModelSyntaxError(
                f"line {token.line}, column {token.col}: "
                f"symbol {STOP_SYMBOL!r} is reserved")
    try:
        alphabet = Alphabet(tuple(t.text for t in alpha_rec.tokens))
    except ValueError as exc:
        raise ModelSyntaxError(f"line {alpha_rec.line}: {exc}") from None
    ns = len(alphabet)

    if kind == "hmm":
        n = _positive_int(_take(records, "n", kind))
        pi = _numbers(_take(records, "pi", kind), n, mode, parse_scalar)
        m_flat = _numbers(_take(records, "M", kind), n * n, mode, parse_scalar)
        e_flat = _numbers(_take(records, "E", kind), n * ns, mode, parse_scalar)
        model: Model = HmmModel(alphabet, tuple(pi), _reshape(m_flat, n, n),
                                _reshape(e_flat, n, ns), mode)
    elif kind == "qrw":
        k = _positive_int(_take(records, "k", kind))
        label_rec = _take(records, "labels", kind)
        if len(label_rec.tokens) != k:
            raise ModelSyntaxError(
                f"line {label_rec.line}: field 'labels' has "
                f"{len(label_rec.tokens)} entries, expected {k}")
        labels = []
        for token in label_rec.tokens:
            try:
                labels.append(alphabet.index(token.text))
            except ValueError as exc:
                raise ModelSyntaxError(
                    f"line {token.line}, column {token.col}: {exc}") from None
        u_flat = _numbers(_take(records, "U", kind), k * k, mode, parse_complex)
        psi = _numbers(_take(records, "psi0", kind), k, mode, parse_complex)
        model = QrwModel(alphabet, tuple(labels), _reshape(u_flat, k, k),
                         tuple(psi), mode)
    else:
        n = _positive_int(_take(records, "n", kind))
        pi = _numbers(_take(records, "pi", kind), n, mode, parse_scalar)
        final = _numbers(_take(records, "F", kind), n, mode, parse_scalar)
        per_symbol = []
        for symbol in alphabet.symbols:
            rec = _take(records, f"Ma {symbol}", kind)
            flat = _numbers(rec, n * n, mode, parse_scalar)
            per_symbol.append(_reshape(flat, n, n))
        model = PfaModel(alphabet, tuple(pi), tuple(per_symbol),
                         tuple(final), mode)

    if records:
        stray = next(iter(records.values()))
        raise ModelSyntaxError(
            f"line {stray.line}: unexpected field {stray.name!r}")

    violations = validate(model, tolerance)
    if violations:
        raise ModelValidationError(violations)
    return model


def _row_lines(rows, fmt) -> list[str]:
    return [" ".join(fmt(x) for x in row) for row in rows]


def serialize_model(model: Model) -> str:
    lines = []
    if isinstance(model, HmmModel):
        lines.append("kind: hmm")
        lines.append(f"mode: {model.mode}")
        lines.append("alphabet: " + " ".join(model.alphabet.symbols))
        lines.append(f"n: {model.num_states}")
        lines.append("pi: " + " ".join(format_scalar(x) for x in model.initial))
        lines.append("M:")
        lines.extend(_row_lines(model.transition, format_scalar))
        lines.append("E:")
        lines.extend(_row_lines(model.emission, format_scalar))
    elif isinstance(model, QrwModel):
        lines.append("kind: qrw")
        lines.append(f"mode: {model.mode}")
        lines.append("alphabet: " + " ".join(model.alphabet.symbols))
        lines.append(f"k: {model.num_coordinates}")
        lines.append("labels: " + " ".join(model.alphabet.symbols[a]
                                           for a in model.labels))
        lines.append("U:")
        lines.extend(_row_lines(model.evolution, format_complex))
        lines.append("psi0: " + " ".join(format_complex(z) for z in model.wave))
    elif isinstance(model, PfaModel):
        lines.append("kind: pfa")
        lines.append(f"mode: {model.mode}")
        lines.append("alphabet: " + " ".join(model.alphabet.symbols))
        lines.append(f"n: {model.num_states}")
        lines.append("pi: " + " ".join(format_scalar(x) for x in model.initial))
        lines.append("F: " + " ".join(format_scalar(x) for x in model.final))
        for a, symbol in enumerate(model.alphabet.symbols):
            lines.append(f"Ma {symbol}:")
            lines.extend(_row_lines(model.transitions[a], format_scalar))
    else:
        raise TypeError(f"not a model: {type(model).__name__}")
    return "\n".join(lines) + "\n"
