# efountain/data.py
from __future__ import annotations
import pathlib
from typing import List, Optional, Tuple

from efountain.errors import ParseError
from efountain.semigroup import FiniteSemigroup, Transformation, from_cayley_table, from_transformations

# Cayley table file:
#   m
#   m lines of m whitespace-separated 0-based indices
#   optional "labels:" followed by one label per line
#
# Generator file:
#   n
#   one line per generator, n space-separated 1-based images
#
# E-set file: whitespace-separated 0-based indices on one line

_LABELS_HEADER = "labels:"


def _tokens(line: str) -> List[Tuple[str, int]]:
    """Whitespace-split tokens with their 1-based columns."""
    out = []
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((line[i:j], i + 1))
        i = j
    return out


def _int_token(tok: str, line_no: int, col: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected {what}, got {tok!r}", line_no, col)


def _read_count(lines: List[str], what: str) -> int:
    if not lines or not lines[0].strip():
        raise ParseError(f"missing {what} on first line", 1, 1)
    toks = _tokens(lines[0])
    if len(toks) != 1:
        raise ParseError(f"first line must hold only the {what}", 1, toks[1][1] if len(toks) > 1 else 1)
    value = _int_token(toks[0][0], 1, toks[0][1], what)
    if value < 1:
        raise ParseError(f"{what} must be positive, got {value}", 1, toks[0][1])
    return value


def _trim_trailing_blank(lines: List[str]) -> List[str]:
    end = len(lines)
    while end > 0 and not lines[end - 1].strip():
        end -= 1
    return lines[:end]


def parse_cayley_table(text: str, name: str = "") -> FiniteSemigroup:
    lines = _trim_trailing_blank(text.splitlines())
    m = _read_count(lines, "element count")
    table: List[List[int]] = []
    for r in range(m):
        line_no = r + 2
        if line_no > len(lines):
            raise ParseError(f"expected {m} table rows, found {r}", line_no, 1)
        toks = _tokens(lines[r + 1])
        if len(toks) != m:
            col = toks[m][1] if len(toks) > m else len(lines[r + 1]) + 1
            raise ParseError(f"row {r} has {len(toks)} entries, expected {m}", line_no, col)
        row = []
        for tok, col in toks:
            v = _int_token(tok, line_no, col, "an element index")
            if not 0 <= v < m:
                raise ParseError(f"index {v} outside [0, {m})", line_no, col)
            row.append(v)
        table.append(row)

    labels: Optional[List[str]] = None
    rest = lines[m + 1:]
    if rest:
        header_no = m + 2
        if rest[0].strip() != _LABELS_HEADER:
            raise ParseError(f"unexpected content after table; expected {_LABELS_HEADER!r}", header_no, 1)
        labels = [ln.strip() for ln in rest[1:]]
        if len(labels) != m:
            raise ParseError(f"expected {m} labels, found {len(labels)}", header_no + len(labels) + 1, 1)
    return from_cayley_table(table, labels, name)


def parse_generators(text: str, name: str = "") -> FiniteSemigroup:
    lines = _trim_trailing_blank(text.splitlines())
    n = _read_count(lines, "degree")
    gens: List[Transformation] = []
    for k, line in enumerate(lines[1:], start=2):
        toks = _tokens(line)
        if not toks:
            continue
        if len(toks) != n:
            raise ParseError(f"generator has {len(toks)} images, expected {n}", k, 1)
        images = []
        for tok, col in toks:
            v = _int_token(tok, k, col, "an image")
            if not 1 <= v <= n:
                raise ParseError(f"image {v} outside [1, {n}]", k, col)
            images.append(v)
        gens.append(Transformation(tuple(images)))
    if not gens:
        raise ParseError("no generators listed", 2, 1)
    return from_transformations(gens, name)


def parse_e_set(text: str) -> Tuple[int, ...]:
    lines = _trim_trailing_blank(text.splitlines())
    out = []
    for k, line in enumerate(lines, start=1):
        for tok, col in _tokens(line):
            v = _int_token(tok, k, col, "an element index")
            if v < 0:
                raise ParseError(f"negative index {v}", k, col)
            out.append(v)
    return tuple(sorted(set(out)))


def load_structure(path: str) -> FiniteSemigroup:
    """Read a Cayley table file, or a generator file when the suffix is .gens."""
    p = pathlib.Path(path)
    text = p.read_text()
    if p.suffix == ".gens":
        return parse_generators(text, p.stem)
    return parse_cayley_table(text, p.stem)


def load_e_set(path: str) -> Tuple[int, ...]:
    return parse_e_set(pathlib.Path(path).read_text())
