"""Text formats for generator matrices and spread dumps."""

from __future__ import annotations

import re
from pathlib import Path

from .fqlinalg import Subspace
from .gfcore import ExtensionField, build_embedding, field_of_order, parse_field_spec
from .hammingx import HammingCode
from .rankcodes import RankCode
from .spreads import Spread

_HEADER = re.compile(r"field=(\S+)\s+base=(\S+)\s+k=(\d+)\s+n=(\d+)\s*$")
_SPREAD_HEADER = re.compile(r"N=(\d+)\s+t=(\d+)\s+q=(\d+)\s+count=(\d+)\s*$")


class FormatError(ValueError):
    pass


def _lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def format_matrix(C: RankCode | HammingCode) -> str:
    if isinstance(C, HammingCode):
        field = base = C.field.spec
    else:
        field, base = C.sup.spec, C.base.sub.spec
    rows = [" ".join(map(str, r)) for r in C.G]
    return f"field={field} base={base} k={len(C.G)} n={len(C.G[0])}\n" + "\n".join(rows) + "\n"


def parse_matrix(text: str):
    """Return ``(sup, base_field, rows)`` from a generator-matrix file."""
    lines = _lines(text)
    if not lines:
        raise FormatError("empty matrix file")
    m = _HEADER.match(lines[0])
    if not m:
        raise FormatError(f"bad header {lines[0]!r}; expected 'field=<p^D:mod> base=<p^d:mod> k=<k> n=<n>'")
    sup, base = parse_field_spec(m.group(1)), parse_field_spec(m.group(2))
    k, n = int(m.group(3)), int(m.group(4))
    rows = []
    for ln in lines[1:]:
        try:
            rows.append([int(tok) for tok in ln.split()])
        except ValueError:
            raise FormatError(f"non-integer entry in row {ln!r}") from None
    if len(rows) != k or any(len(r) != n for r in rows):
        raise FormatError(f"expected {k} rows of {n} entries")
    if any(not 0 <= a < sup.order for r in rows for a in r):
        raise FormatError(f"entry outside F_{sup.order}")
    return sup, base, rows


def read_code(text: str, check: bool = True) -> RankCode:
    sup, base, rows = parse_matrix(text)
    if sup.p != base.p or sup.degree % base.degree:
        raise FormatError(f"{base.spec} is not a subfield of {sup.spec}")
    return RankCode(rows, build_embedding(base, sup), check=check)


def read_hamming(text: str) -> HammingCode:
    sup, _, rows = parse_matrix(text)
    return HammingCode(sup, rows)


def format_spread(S: Spread) -> str:
    out = [f"N={S.N} t={S.t} q={S.q} count={S.count}"]
    for E in S.elements:
        out.append(";".join(" ".join(map(str, v)) for v in E.basis))
    return "\n".join(out) + "\n"


def parse_spread(text: str, field: ExtensionField | None = None) -> Spread:
    """Read a spread dump; ``field`` overrides the canonical field of order ``q``.

    A ``count`` header that disagrees with the number of element lines is
    kept as ``declared_count``; the spread axioms are left to :func:`verify_spread`.
    """
    lines = _lines(text)
    if not lines:
        raise FormatError("empty spread dump")
    m = _SPREAD_HEADER.match(lines[0])
    if not m:
        raise FormatError(f"bad header {lines[0]!r}; expected 'N=<N> t=<t> q=<q> count=<c>'")
    N, t, q, count = map(int, m.groups())
    F = field if field is not None else field_of_order(q)
    if F.order != q:
        raise FormatError(f"field of order {F.order} given for q={q}")
    elements = []
    for ln in lines[1:]:
        vecs = []
        for part in ln.split(";"):
            try:
                v = [int(tok) for tok in part.split()]
            except ValueError:
                raise FormatError(f"non-integer coordinate in {part!r}") from None
            if len(v) != N or any(not 0 <= a < q for a in v):
                raise FormatError(f"vector {part.strip()!r} is not in F_{q}^{N}")
            vecs.append(v)
        elements.append(Subspace.from_vectors(F, N, vecs))
    S = Spread(F, N, t, elements)
    S.declared_count = count
    return S


def parse_subspace(text: str, F: ExtensionField, N: int) -> Subspace:
    """One line of ';'-separated spanning vectors, as in a spread dump."""
    vecs = [[int(tok) for tok in part.split()] for part in text.strip().split(";") if part.strip()]
    if any(len(v) != N for v in vecs):
        raise FormatError(f"vectors must have {N} coordinates")
    return Subspace.from_vectors(F, N, vecs)


def read_text(path: str | Path) -> str:
    return Path(path).read_text()
