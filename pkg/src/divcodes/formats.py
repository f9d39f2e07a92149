"""Plain-text code files.

Classical file: first line ``n k``, then ``k`` rows of ``n`` characters 0/1.
CSS file: sections ``[SX]``, ``[SZ]``, ``[LX]``, ``[LZ]`` each followed by 0/1
rows; LX and LZ hold exactly one row.  ``#`` starts a comment anywhere.
"""

from __future__ import annotations

from pathlib import Path

from .classical import ClassicalCode
from .css import CssCode
from .gf2 import BitMatrix, BitVector

SECTIONS = ("SX", "SZ", "LX", "LZ")


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = f"{source}:" if source else ""
        where += f"line {line}: " if line is not None else (" " if source else "")
        super().__init__(f"{where}{message}")


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield number, body


def _row(body: str, number: int, width: int | None, source) -> list[int]:
    bad = set(body) - {"0", "1"}
    if bad:
        raise FormatError(f"unexpected character {sorted(bad)[0]!r} in row", number, source)
    if width is not None and len(body) != width:
        raise FormatError(f"row has length {len(body)}, expected {width}", number, source)
    return [int(ch) for ch in body]


def parse_classical(text: str, source: str | None = None) -> ClassicalCode:
    lines = list(_lines(text))
    if not lines:
        raise FormatError("empty file", None, source)
    number, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise FormatError("header must be 'n k'", number, source)
    n, k = map(int, parts)
    if n < 1:
        raise FormatError("n must be positive", number, source)
    rows = [_row(body, num, n, source) for num, body in lines[1:]]
    if len(rows) != k:
        last = lines[-1][0]
        raise FormatError(f"expected {k} rows, found {len(rows)}", last, source)
    try:
        return ClassicalCode(n, BitMatrix(rows, ncols=n), label=source or "")
    except ValueError as exc:
        raise FormatError(str(exc), None, source) from exc


def write_classical(C: ClassicalCode) -> str:
    out = [f"# {C.label}"] if C.label else []
    out.append(f"{C.n} {C.k}")
    out.extend(C.generator.to_strings())
    return "\n".join(out) + "\n"


def parse_css(text: str, source: str | None = None) -> CssCode:
    sections: dict[str, list[tuple[int, str]]] = {}
    current = None
    for number, body in _lines(text):
        if body.startswith("["):
            name = body.strip("[]").strip().upper()
            if not body.endswith("]") or name not in SECTIONS:
                raise FormatError(f"unknown section header {body!r}", number, source)
            if name in sections:
                raise FormatError(f"section [{name}] repeated", number, source)
            sections[name] = []
            current = name
            continue
        if current is None:
            raise FormatError("row outside of any section", number, source)
        sections[current].append((number, body))
    missing = [s for s in SECTIONS if s not in sections]
    if missing:
        raise FormatError(f"missing section [{missing[0]}]", None, source)
    for name in ("LX", "LZ"):
        if len(sections[name]) != 1:
            raise FormatError(f"section [{name}] needs exactly one row", None, source)
    width = len(sections["LX"][0][1])
    parsed = {
        name: [_row(body, num, width, source) for num, body in sections[name]] for name in SECTIONS
    }
    return CssCode(
        BitMatrix(parsed["SX"], ncols=width),
        BitMatrix(parsed["SZ"], ncols=width),
        BitVector(parsed["LX"][0]),
        BitVector(parsed["LZ"][0]),
        label=source or "",
    )


def write_css(Q: CssCode) -> str:
    out = [f"# {Q.label}"] if Q.label else []
    for name, rows in (
        ("SX", Q.sx.to_strings()),
        ("SZ", Q.sz.to_strings()),
        ("LX", [str(Q.lx)]),
        ("LZ", [str(Q.lz)]),
    ):
        out.append(f"[{name}]")
        out.extend(rows)
    return "\n".join(out) + "\n"


def read_classical(path: str | Path) -> ClassicalCode:
    p = Path(path)
    return parse_classical(p.read_text(), source=p.name)


def read_css(path: str | Path) -> CssCode:
    p = Path(path)
    return parse_css(p.read_text(), source=p.name)
