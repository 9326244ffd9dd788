"""FASTA and plain-text sequence input."""

from __future__ import annotations

import io
from dataclasses import dataclass
from pathlib import Path
from typing import BinaryIO, Iterable, TextIO

from .core import ProblemInstance, build_alphabet, make_instance


class SequenceFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        where = ""
        if source:
            where += f"{source}: "
        if line is not None:
            where += f"line {line}: "
        super().__init__(where + message)
        self.line = line


@dataclass(frozen=True)
class FastaRecord:
    header: str
    body: str


def parse_fasta(
    stream: BinaryIO | TextIO | bytes | str, casefold: bool = True, source: str | None = None
) -> list[FastaRecord]:
    if isinstance(stream, bytes):
        stream = io.BytesIO(stream)
    elif isinstance(stream, str):
        stream = io.StringIO(stream)
    records: list[FastaRecord] = []
    header: str | None = None
    chunks: list[str] = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.decode("utf-8") if isinstance(raw, bytes) else raw
        line = line.rstrip("\r\n")
        if line.startswith(">"):
            if header is not None:
                records.append(FastaRecord(header, "".join(chunks)))
            header, chunks = line[1:].strip(), []
            continue
        data = "".join(line.split())
        if not data:
            continue
        if header is None:
            raise SequenceFormatError("sequence data before first '>' header", lineno, source)
        chunks.append(data.upper() if casefold else data)
    if header is None:
        raise SequenceFormatError("no FASTA records found", None, source)
    records.append(FastaRecord(header, "".join(chunks)))
    return records


def write_fasta(records: Iterable[FastaRecord], out: TextIO, width: int = 60) -> None:
    for rec in records:
        out.write(f">{rec.header}\n")
        for i in range(0, len(rec.body), width):
            out.write(rec.body[i : i + width] + "\n")


def format_fasta(records: Iterable[FastaRecord], width: int = 60) -> str:
    buf = io.StringIO()
    write_fasta(records, buf, width)
    return buf.getvalue()


def _read_bytes(path: str | Path) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise SequenceFormatError(f"cannot read file: {exc.strerror}", source=str(path)) from exc


def read_text_sequence(path: str | Path, raw_bytes: bool = False) -> str | bytes:
    data = _read_bytes(path)
    if data.endswith(b"\r\n"):
        data = data[:-2]
    elif data.endswith(b"\n"):
        data = data[:-1]
    return data if raw_bytes else data.decode("utf-8")


def read_first_fasta(path: str | Path, casefold: bool = True) -> FastaRecord:
    return parse_fasta(_read_bytes(path), casefold=casefold, source=str(path))[0]


def load_text(path: str | Path, fmt: str = "text", raw_bytes: bool = False) -> tuple[str | bytes, str]:
    """Sequence body and a label for one file."""
    if fmt == "text":
        return read_text_sequence(path, raw_bytes), Path(path).name
    if fmt == "fasta":
        rec = read_first_fasta(path)
        body = rec.body.encode("utf-8") if raw_bytes else rec.body
        return body, rec.header or Path(path).name
    raise ValueError(f"unknown format {fmt!r}")


def load_pair(path_a: str | Path, path_b: str | Path, fmt: str = "text", raw_bytes: bool = False) -> ProblemInstance:
    a, label_a = load_text(path_a, fmt, raw_bytes)
    b, label_b = load_text(path_b, fmt, raw_bytes)
    alpha = build_alphabet([a, b])
    return make_instance(alpha.encode(a, label_a), alpha.encode(b, label_b))
