"""Text formats for codes, channels and convolutional specs.

Code file::

    # comment
    4 2
    XXXX
    ZZZZ

Channel file: ``depolarizing p`` or one ``pI pX pY pZ`` line per qubit.
Spec file: ``eta kappa``, then ``eta - kappa`` pattern lines, then optional
``HEAD`` and ``TAIL`` sections of full-length rows.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .channel import PauliChannel, depolarizing
from .convolutional import ConvolutionalSpec
from .pauli import PauliString, StabilizerCode


class ParseError(Exception):
    def __init__(self, source: str, line: int, message: str):
        self.source, self.line = source, line
        super().__init__(f"{source}:{line}: {message}")


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((lineno, body))
    return out


def _word(source: str, lineno: int, body: str) -> PauliString:
    try:
        return PauliString.from_str(body)
    except ValueError as exc:
        raise ParseError(source, lineno, str(exc)) from None


def _ints(source: str, lineno: int, body: str, count: int) -> list[int]:
    parts = body.split()
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        vals = []
    if len(vals) != count:
        raise ParseError(source, lineno, f"expected {count} integers, got {body!r}")
    return vals


def parse_code(text: str, source: str = "<code>") -> StabilizerCode:
    lines = _lines(text)
    if not lines:
        raise ParseError(source, 1, "empty code file")
    lineno, body = lines[0]
    n, k = _ints(source, lineno, body, 2)
    if not 0 <= k < n:
        raise ParseError(source, lineno, f"need 0 <= k < n, got n={n} k={k}")
    rows = lines[1:]
    if len(rows) != n - k:
        where = rows[-1][0] if rows else lineno
        raise ParseError(source, where, f"expected {n - k} generator lines, found {len(rows)}")
    gens = []
    for lineno, body in rows:
        g = _word(source, lineno, body)
        if g.n != n:
            raise ParseError(source, lineno, f"generator has length {g.n}, expected {n}")
        gens.append(g)
    return StabilizerCode(n, k, tuple(gens))


def format_code(code: StabilizerCode) -> str:
    return "\n".join([f"{code.n} {code.k}", *map(str, code.generators)]) + "\n"


def parse_channel(text: str, n: int, source: str = "<channel>") -> PauliChannel:
    lines = _lines(text)
    if not lines:
        raise ParseError(source, 1, "empty channel file")
    lineno, body = lines[0]
    parts = body.split()
    if parts[0].lower() == "depolarizing":
        if len(parts) != 2 or len(lines) != 1:
            raise ParseError(source, lineno, "expected 'depolarizing p'")
        try:
            return depolarizing(n, float(parts[1]))
        except ValueError as exc:
            raise ParseError(source, lineno, str(exc)) from None
    if len(lines) != n:
        raise ParseError(source, lines[-1][0], f"expected {n} probability lines, found {len(lines)}")
    rows = []
    for lineno, body in lines:
        try:
            row = [float(v) for v in body.split()]
        except ValueError:
            row = []
        if len(row) != 4:
            raise ParseError(source, lineno, f"expected four probabilities 'pI pX pY pZ', got {body!r}")
        rows.append(row)
    try:
        return PauliChannel(np.array(rows))
    except ValueError as exc:
        raise ParseError(source, lines[0][0], str(exc)) from None


def parse_spec(text: str, source: str = "<spec>") -> ConvolutionalSpec:
    lines = _lines(text)
    if not lines:
        raise ParseError(source, 1, "empty spec file")
    lineno, body = lines[0]
    eta, kappa = _ints(source, lineno, body, 2)
    sections: dict[str, list[PauliString]] = {"BLOCK": [], "HEAD": [], "TAIL": []}
    current = "BLOCK"
    for lineno, body in lines[1:]:
        if body.upper() in ("HEAD", "TAIL"):
            current = body.upper()
            continue
        sections[current].append(_word(source, lineno, body))
    try:
        return ConvolutionalSpec(eta, kappa, tuple(sections["BLOCK"]), tuple(sections["HEAD"]), tuple(sections["TAIL"]))
    except ValueError as exc:
        raise ParseError(source, lineno, str(exc)) from None


def read_text(path: str | Path) -> str:
    return Path(path).read_text()
