"""External data exchange: Matrix Market reading and the CSV result report."""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

#: fixed column order of the comparison report
CSV_HEADER = [
    "name", "m", "n", "rho", "beta", "rank_rrge", "rank_svd", "pivots",
    "pivot_ratio", "sigma_min_a11", "sigma_r", "sigma_r_ratio",
    "ratio_fig1_r", "ratio_fig1_r1", "schur_norm_c", "betabound_pass",
    "theorem_pass", "elapsed_ms",
]


class MatrixMarketParseError(ValueError):
    """Malformed Matrix Market content; the message carries the line number."""


class MatrixMarketFormatError(ValueError):
    """Well-formed but unsupported Matrix Market variant (complex, pattern, ...)."""


def _parse_real(token, lineno):
    try:
        return float(token)
    except ValueError:
        raise MatrixMarketParseError(
            f"line {lineno}: invalid numeric value {token!r}") from None


def read_matrix_market(path):
    """Read a real Matrix Market file into a dense array.

    Supports the ``array`` and ``coordinate`` formats with ``general`` or
    ``symmetric`` symmetry; symmetric storage (lower triangle) is expanded
    to the full matrix.  Integer data is accepted as real.  Errors report
    the offending line number.
    """
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.readlines()
    if not lines:
        raise MatrixMarketParseError("line 1: empty file")
    header = lines[0].split()
    if len(header) != 5 or header[0] != "%%MatrixMarket" or header[1].lower() != "matrix":
        raise MatrixMarketParseError("line 1: not a Matrix Market matrix header")
    layout, field, symmetry = (h.lower() for h in header[2:5])
    if layout not in ("coordinate", "array"):
        raise MatrixMarketParseError(f"line 1: unknown layout {layout!r}")
    if field in ("complex", "pattern"):
        raise MatrixMarketFormatError(f"unsupported field type {field!r}")
    if field not in ("real", "integer", "double"):
        raise MatrixMarketParseError(f"line 1: unknown field type {field!r}")
    if symmetry not in ("general", "symmetric"):
        raise MatrixMarketFormatError(f"unsupported symmetry {symmetry!r}")

    body = [(i + 1, ln.strip()) for i, ln in enumerate(lines[1:], start=1)
            if ln.strip() and not ln.lstrip().startswith("%")]
    if not body:
        raise MatrixMarketParseError("line 1: missing size line")
    size_lineno, size_line = body[0]
    tokens = size_line.split()

    if layout == "coordinate":
        if len(tokens) != 3:
            raise MatrixMarketParseError(
                f"line {size_lineno}: coordinate size line needs 'm n nnz'")
        try:
            m, n, nnz = (int(t) for t in tokens)
        except ValueError:
            raise MatrixMarketParseError(
                f"line {size_lineno}: invalid size line {size_line!r}") from None
        if m < 0 or n < 0 or nnz < 0:
            raise MatrixMarketParseError(f"line {size_lineno}: negative dimensions")
        if symmetry == "symmetric" and m != n:
            raise MatrixMarketParseError(
                f"line {size_lineno}: symmetric matrix must be square")
        entries = body[1:]
        if len(entries) != nnz:
            raise MatrixMarketParseError(
                f"line {size_lineno}: expected {nnz} entries, found {len(entries)}")
        a = np.zeros((m, n))
        for lineno, line in entries:
            parts = line.split()
            if len(parts) != 3:
                raise MatrixMarketParseError(
                    f"line {lineno}: entry needs 'i j value'")
            try:
                i, j = int(parts[0]), int(parts[1])
            except ValueError:
                raise MatrixMarketParseError(
                    f"line {lineno}: invalid indices {line!r}") from None
            v = _parse_real(parts[2], lineno)
            if not (1 <= i <= m and 1 <= j <= n):
                raise MatrixMarketParseError(
                    f"line {lineno}: index ({i}, {j}) out of bounds")
            if symmetry == "symmetric" and j > i:
                raise MatrixMarketParseError(
                    f"line {lineno}: symmetric storage must give the lower triangle")
            a[i - 1, j - 1] += v
            if symmetry == "symmetric" and i != j:
                a[j - 1, i - 1] += v
        return a

    # array layout: dense column-major listing
    if len(tokens) != 2:
        raise MatrixMarketParseError(
            f"line {size_lineno}: array size line needs 'm n'")
    try:
        m, n = (int(t) for t in tokens)
    except ValueError:
        raise MatrixMarketParseError(
            f"line {size_lineno}: invalid size line {size_line!r}") from None
    if m < 0 or n < 0:
        raise MatrixMarketParseError(f"line {size_lineno}: negative dimensions")
    if symmetry == "symmetric" and m != n:
        raise MatrixMarketParseError(
            f"line {size_lineno}: symmetric matrix must be square")
    if symmetry == "general":
        coords = [(i, j) for j in range(n) for i in range(m)]
    else:
        coords = [(i, j) for j in range(n) for i in range(j, m)]
    entries = body[1:]
    if len(entries) != len(coords):
        raise MatrixMarketParseError(
            f"line {size_lineno}: expected {len(coords)} values, "
            f"found {len(entries)}")
    a = np.zeros((m, n))
    for (lineno, line), (i, j) in zip(entries, coords):
        parts = line.split()
        if len(parts) != 1:
            raise MatrixMarketParseError(f"line {lineno}: expected one value")
        v = _parse_real(parts[0], lineno)
        a[i, j] = v
        if symmetry == "symmetric":
            a[j, i] = v
    return a


@dataclass
class ReportRow:
    """One per-matrix line of the comparison report."""

    name: str
    m: int
    n: int
    rho: float
    beta: float
    rank_rrge: int | None = None
    rank_svd: int | None = None
    pivots: int | None = None
    pivot_ratio: float | None = None
    sigma_min_a11: float | None = None
    sigma_r: float | None = None
    sigma_r_ratio: float | None = None
    ratio_fig1_r: float | None = None
    ratio_fig1_r1: float | None = None
    schur_norm_c: float | None = None
    betabound_pass: bool | None = None
    theorem_pass: bool | None = None
    elapsed_ms: float | None = None


def _format(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def write_csv_report(rows, path, append=False):
    """Write report rows with the fixed header, full precision, C locale.

    With ``append=True`` the header is only emitted when the file does not
    already exist.
    """
    mode = "a" if append else "w"
    need_header = True
    if append:
        try:
            with open(path, "r", encoding="ascii") as fh:
                need_header = fh.readline() == ""
        except FileNotFoundError:
            need_header = True
    with open(path, mode, encoding="ascii", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        if need_header:
            writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow([_format(getattr(row, col)) for col in CSV_HEADER])
