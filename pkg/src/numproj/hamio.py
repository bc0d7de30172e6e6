"""Read and write qubit operators as plain-text term lists.

One term per line: a real coefficient, an optional imaginary part, and a
Pauli label, e.g. ``-0.25 XX`` or ``0.5 -1.0 XY``.  ``#`` starts a comment;
a ``# qubits: N`` header fixes the qubit count so shorter labels are padded
with identities on the left.  Without the header the count is inferred from
the first term.  The same term map round-trips through JSON
(``{"qubits": n, "terms": [{"string", "re", "im"}, ...]}``) and CSV.
"""
from __future__ import annotations

import json
import math
import re
import warnings
from dataclasses import dataclass, field

from .errors import HamiltonianParseError
from .pauli import PauliSum, format_key, parse_string, sorted_terms

FORMATS = ("text", "json", "csv")

_QUBITS_DIRECTIVE = re.compile(r"^#\s*qubits\s*:\s*(\d+)\s*$")
_CSV_HEADER = "re,im,string"


@dataclass(frozen=True)
class HamiltonianDocument:
    """An ordered term list plus any comment lines it carried."""

    n: int
    entries: tuple[tuple[complex, str], ...]
    comments: tuple[str, ...] = field(default=())


def parse(text: str) -> HamiltonianDocument:
    """Parse a term-list document (text, JSON, or CSV detected by shape)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(text)
    if stripped.splitlines() and stripped.splitlines()[0].strip() == _CSV_HEADER:
        return _parse_csv(text)
    return _parse_text(text)


def _parse_text(text: str) -> HamiltonianDocument:
    declared_n: int | None = None
    comments: list[str] = []
    raw: list[tuple[complex, str, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _QUBITS_DIRECTIVE.match(line)
            if m:
                declared_n = int(m.group(1))
                if declared_n < 1:
                    raise HamiltonianParseError(
                        f"line {lineno}: qubit count must be positive", line=lineno
                    )
            else:
                comments.append(line[1:].strip())
            continue
        fields = line.split()
        if len(fields) == 2:
            re_part, label = fields
            im_part = None
        elif len(fields) == 3:
            re_part, im_part, label = fields
        else:
            raise HamiltonianParseError(
                f"line {lineno}: expected '<re> [<im>] <PAULI_STRING>', got {line!r}",
                line=lineno,
            )
        try:
            coeff = complex(float(re_part), float(im_part) if im_part else 0.0)
        except ValueError:
            raise HamiltonianParseError(
                f"line {lineno}: malformed number in {line!r}", line=lineno
            ) from None
        raw.append((coeff, label, lineno))
    return _assemble(raw, declared_n, comments)


def _parse_json(text: str) -> HamiltonianDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HamiltonianParseError(f"invalid JSON document: {exc}") from None
    if not isinstance(obj, dict) or "qubits" not in obj or "terms" not in obj:
        raise HamiltonianParseError(
            "JSON document must be an object with 'qubits' and 'terms'"
        )
    raw = []
    for i, t in enumerate(obj["terms"], start=1):
        try:
            coeff = complex(float(t["re"]), float(t.get("im", 0.0)))
            label = t["string"]
        except (TypeError, KeyError, ValueError):
            raise HamiltonianParseError(
                f"term {i}: expected an object with 'string', 're', 'im'", line=i
            ) from None
        raw.append((coeff, label, i))
    return _assemble(raw, int(obj["qubits"]), [])


def _parse_csv(text: str) -> HamiltonianDocument:
    raw = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line == _CSV_HEADER:
            continue
        fields = line.split(",")
        if len(fields) != 3:
            raise HamiltonianParseError(
                f"line {lineno}: expected 're,im,string', got {line!r}", line=lineno
            )
        try:
            coeff = complex(float(fields[0]), float(fields[1]))
        except ValueError:
            raise HamiltonianParseError(
                f"line {lineno}: malformed number in {line!r}", line=lineno
            ) from None
        raw.append((coeff, fields[2], lineno))
    return _assemble(raw, None, [])


def _assemble(
    raw: list[tuple[complex, str, int]],
    declared_n: int | None,
    comments: list[str],
) -> HamiltonianDocument:
    if not raw:
        raise HamiltonianParseError("empty document: no terms found")
    n = declared_n if declared_n is not None else len(raw[0][1])
    merged: dict[str, complex] = {}
    order: list[str] = []
    for coeff, label, lineno in raw:
        if not math.isfinite(coeff.real) or not math.isfinite(coeff.imag):
            raise HamiltonianParseError(
                f"line {lineno}: coefficient {coeff} is not finite", line=lineno
            )
        if len(label) > n or (declared_n is None and len(label) != n):
            raise HamiltonianParseError(
                f"line {lineno}: string {label!r} has length {len(label)}, "
                f"expected {n}",
                line=lineno,
            )
        try:
            parse_string(label)
        except Exception as exc:
            raise HamiltonianParseError(f"line {lineno}: {exc}", line=lineno) from None
        label = "I" * (n - len(label)) + label
        if label in merged:
            warnings.warn(f"duplicate term {label!r} merged by coefficient addition")
            merged[label] += coeff
        else:
            merged[label] = coeff
            order.append(label)
    entries = tuple((merged[label], label) for label in order)
    return HamiltonianDocument(n=n, entries=entries, comments=tuple(comments))


def to_pauli_sum(doc: HamiltonianDocument) -> PauliSum:
    return PauliSum.from_strings(doc.n, [(c, label) for c, label in doc.entries])


def from_pauli_sum(operator: PauliSum) -> HamiltonianDocument:
    """Document with canonical term order: descending |coeff|, mask tie-break."""
    entries = tuple(
        (coeff, format_key(operator.n, key)) for key, coeff in sorted_terms(operator)
    )
    return HamiltonianDocument(n=operator.n, entries=entries)


def _num(value: float) -> str:
    return repr(float(value))


def emit(obj: HamiltonianDocument | PauliSum, fmt: str = "text") -> str:
    """Render a document (or an operator's canonical document) as text/JSON/CSV.

    Terms always come out in canonical order (descending |coefficient|,
    mask tie-break), so emission is deterministic and ``parse(emit(x))``
    reproduces the term map exactly for dyadic coefficients and to float
    round-trip precision otherwise.  An empty operator renders as a
    header-only text document.
    """
    if isinstance(obj, PauliSum):
        doc = from_pauli_sum(obj)
    elif obj.entries:
        doc = from_pauli_sum(to_pauli_sum(obj))
    else:
        doc = obj
    if fmt == "text":
        if not doc.entries:
            return f"# qubits: {doc.n}\n# 0 terms\n"
        complex_valued = any(c.imag != 0.0 for c, _ in doc.entries)
        lines = []
        for coeff, label in doc.entries:
            if complex_valued:
                lines.append(f"{_num(coeff.real)} {_num(coeff.imag)} {label}")
            else:
                lines.append(f"{_num(coeff.real)} {label}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = {
            "qubits": doc.n,
            "terms": [
                {"string": label, "re": coeff.real, "im": coeff.imag}
                for coeff, label in doc.entries
            ],
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        lines = [_CSV_HEADER]
        lines.extend(
            f"{_num(coeff.real)},{_num(coeff.imag)},{label}"
            for coeff, label in doc.entries
        )
        return "\n".join(lines) + "\n"
    raise HamiltonianParseError(f"unknown format {fmt!r}; expected one of {FORMATS}")
