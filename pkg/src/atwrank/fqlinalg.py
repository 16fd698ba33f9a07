"""Exact linear algebra over the fields of :mod:`atwrank.gfcore`.

Matrices are lists of rows of integer-encoded field elements; the owning
field is passed explicitly.  Subspaces are stored by their reduced row
echelon basis, which makes equality a tuple comparison.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExceeded
from .gfcore import ExtensionField, SubfieldEmbedding, coordinates

DEFAULT_BUDGET = 10**7


def zeros(rows: int, cols: int) -> list[list[int]]:
    return [[0] * cols for _ in range(rows)]


def identity(F: ExtensionField, n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(M):
    return [list(col) for col in zip(*M)]


def matmul(F: ExtensionField, A, B):
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        r = [0] * cols
        for a, brow in zip(row, B):
            if a:
                for j, b in enumerate(brow):
                    if b:
                        r[j] = F.add(r[j], F.mul(a, b))
        out.append(r)
    return out


def vecmat(F: ExtensionField, x, M):
    """Row vector times matrix."""
    return matmul(F, [list(x)], M)[0]


def dot(F: ExtensionField, x, y) -> int:
    acc = 0
    for a, b in zip(x, y):
        if a and b:
            acc = F.add(acc, F.mul(a, b))
    return acc


def scale(F: ExtensionField, c: int, v):
    return [F.mul(c, a) for a in v]


def rref(F: ExtensionField, M):
    """Gauss-Jordan reduction.

    Returns:
        ``(R, rank, pivots)`` where ``R`` has the same shape as ``M`` and the
        pivot of each nonzero row is the first nonzero entry in column order.
    """
    R = [list(r) for r in M]
    rows = len(R)
    cols = len(R[0]) if R else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        lead = R[r][c]
        if lead != 1:
            inv = F.inv(lead)
            R[r] = [F.mul(inv, v) for v in R[r]]
        for i in range(rows):
            if i != r and R[i][c]:
                f = F.neg(R[i][c])
                R[i] = [F.add(vi, F.mul(f, vr)) if vr else vi for vi, vr in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R, r, pivots


def rank(F: ExtensionField, M) -> int:
    if F.order == 2:
        return _rank_gf2(M)
    return rref(F, M)[1]


def _rank_gf2(M) -> int:
    basis = {}
    r = 0
    for row in M:
        v = 0
        for bit, a in enumerate(row):
            if a:
                v |= 1 << bit
        while v:
            h = v.bit_length() - 1
            if h in basis:
                v ^= basis[h]
            else:
                basis[h] = v
                r += 1
                break
    return r


def inverse(F: ExtensionField, M):
    n = len(M)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(M)]
    R, _, pivots = rref(F, aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in R]


def kernel(F: ExtensionField, M, ncols: int | None = None) -> "Subspace":
    """Right kernel ``{v : M v = 0}`` as a subspace of ``F^cols``."""
    cols = len(M[0]) if M else ncols
    if cols is None:
        raise ValueError("cannot infer the column count of an empty matrix")
    R, r, pivots = rref(F, M) if M else ([], 0, [])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * cols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(R[i][f])
        basis.append(v)
    return Subspace.from_vectors(F, cols, basis)


def solve(F: ExtensionField, A, b):
    """One solution of ``A x = b`` or None."""
    cols = len(A[0])
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, r, pivots = rref(F, aug)
    if cols in pivots:
        return None
    x = [0] * cols
    for i, pc in enumerate(pivots):
        x[pc] = R[i][cols]
    return x


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """Subspace of ``field^ambient`` held as an RREF basis (tuple of tuples)."""

    field: ExtensionField
    ambient: int
    basis: tuple

    @classmethod
    def from_vectors(cls, F: ExtensionField, ambient: int, vectors) -> "Subspace":
        vectors = [list(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient}")
        if not vectors:
            return cls(F, ambient, ())
        R, r, _ = rref(F, vectors)
        return cls(F, ambient, tuple(tuple(row) for row in R[:r]))

    @classmethod
    def full(cls, F: ExtensionField, ambient: int) -> "Subspace":
        return cls(F, ambient, tuple(tuple(row) for row in identity(F, ambient)))

    @classmethod
    def zero(cls, F: ExtensionField, ambient: int) -> "Subspace":
        return cls(F, ambient, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def _same(self, other: "Subspace"):
        if self.field != other.field or self.ambient != other.ambient:
            raise ValueError("subspaces live in different ambient spaces")

    def __add__(self, other: "Subspace") -> "Subspace":
        self._same(other)
        return Subspace.from_vectors(self.field, self.ambient, list(self.basis) + list(other.basis))

    def __and__(self, other: "Subspace") -> "Subspace":
        self._same(other)
        F = self.field
        if not self.basis or not other.basis:
            return Subspace.zero(F, self.ambient)
        # a A = b B  <=>  (a | -b) in the left kernel of [A; B]
        stacked = list(self.basis) + [[F.neg(x) for x in row] for row in other.basis]
        K = kernel(F, transpose(stacked))
        k = self.dim
        vecs = [vecmat(F, v[:k], self.basis) for v in K.basis]
        return Subspace.from_vectors(F, self.ambient, vecs)

    def contains(self, v) -> bool:
        v = list(v)
        if not any(v):
            return True
        if not self.basis:
            return False
        return rank(self.field, list(self.basis) + [v]) == self.dim

    def __contains__(self, v):
        return self.contains(v)

    def issubspace(self, other: "Subspace") -> bool:
        self._same(other)
        return all(other.contains(b) for b in self.basis)

    def elements(self):
        """All vectors of the subspace (``q^dim`` of them)."""
        F = self.field
        for coeffs in itertools.product(range(F.order), repeat=self.dim):
            v = [0] * self.ambient
            for c, b in zip(coeffs, self.basis):
                if c:
                    v = [F.add(x, F.mul(c, y)) for x, y in zip(v, b)]
            yield tuple(v)

    def coordinates_of(self, v) -> list[int]:
        """Coefficients of ``v`` in the stored RREF basis."""
        x = solve(self.field, transpose(self.basis), list(v)) if self.basis else None
        if x is None:
            if any(v):
                raise ValueError("vector not in subspace")
            return []
        return x


def subspace_sum(A: Subspace, B: Subspace) -> Subspace:
    return A + B


def intersect(A: Subspace, B: Subspace) -> Subspace:
    return A & B


def equals(A: Subspace, B: Subspace) -> bool:
    A._same(B)
    return A.basis == B.basis


def contains(A: Subspace, B: Subspace) -> bool:
    """True iff ``B`` is contained in ``A``."""
    return B.issubspace(A)


# ---------------------------------------------------------------------------
# enumeration


def gaussian_binomial(N: int, k: int, q: int) -> int:
    if k < 0 or k > N:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (N - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def gl_order(n: int, q: int) -> int:
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


def pivot_patterns(N: int, k: int):
    return itertools.combinations(range(N), k)


def free_positions(pivots, N: int):
    """(row, col) positions that are free in an RREF matrix with these pivots."""
    ps = set(pivots)
    return [(i, c) for i, p in enumerate(pivots) for c in range(p + 1, N) if c not in ps]


def enumerate_subspaces(N: int, k: int, F: ExtensionField, budget: int = DEFAULT_BUDGET):
    """Yield every ``k``-dimensional subspace of ``F^N`` exactly once.

    Order: pivot pattern lexicographic, then free entries lexicographic
    (row-major over the free positions).

    Raises:
        BudgetExceeded: when the Gaussian binomial exceeds ``budget``.
    """
    total = gaussian_binomial(N, k, F.order)
    if total > budget:
        raise BudgetExceeded(f"{total} subspaces of dimension {k} in F_{F.order}^{N}", total)
    return _enumerate(N, k, F)


def _enumerate(N, k, F):
    for pivots in pivot_patterns(N, k):
        free = free_positions(pivots, N)
        for fill in itertools.product(range(F.order), repeat=len(free)):
            rows = [[0] * N for _ in range(k)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, c), v in zip(free, fill):
                rows[i][c] = v
            yield Subspace(F, N, tuple(tuple(r) for r in rows))


# ---------------------------------------------------------------------------
# rank over a subfield


def expand_over_subfield(v, emb: SubfieldEmbedding, basis=None):
    """Columns are the ``emb.sub``-coordinates of the entries of ``v``."""
    C = coordinates(emb, None if basis is None else tuple(basis))
    cols = [C(a) for a in v]
    r = len(C.basis)
    return [[col[i] for col in cols] for i in range(r)]


class _RankKit:
    """Fast rank-over-subfield for one embedding."""

    def __init__(self, emb: SubfieldEmbedding):
        self.emb = emb
        sub, sup = emb.sub, emb.sup
        self.coords = coordinates(emb)
        self.binary = sub.order == 2
        self.prime = sub.degree == 1
        if not self.prime:
            # rank_q(c) = rank_p(c, w c, ..., w^{e-1} c) / e with w generating F_q
            w = emb(sub.gen)
            self.multipliers = [sup.pow(w, j) for j in range(sub.degree)]

    def rank(self, v) -> int:
        if self.binary:
            basis = {}
            r = 0
            for x in v:
                while x:
                    h = x.bit_length() - 1
                    if h in basis:
                        x ^= basis[h]
                    else:
                        basis[h] = x
                        r += 1
                        break
            return r
        sup = self.emb.sup
        if self.prime:
            return rank(self.emb.sub, [sup.digits(x) for x in v])
        Fp = _prime_subfield(sup.p)
        rows = [sup.digits(sup.mul(w, x)) for x in v for w in self.multipliers]
        return rank(Fp, rows) // self.emb.sub.degree


@lru_cache(maxsize=None)
def _prime_subfield(p: int) -> ExtensionField:
    return ExtensionField(p, 1)


@lru_cache(maxsize=256)
def rank_kit(emb: SubfieldEmbedding) -> _RankKit:
    return _RankKit(emb)


def rank_over_subfield(v, emb: SubfieldEmbedding, check: bool = False) -> int:
    """``dim`` over ``emb.sub`` of the span of the entries of ``v``.

    With ``check=True`` the result is also computed by expanding into
    coordinates and, independently, as ``n - dim ker`` of
    ``a -> sum a_i v_i`` by enumerating ``a`` in ``sub^n``.
    """
    v = [int(a) for a in v]
    r = rank_kit(emb).rank(v)
    if check:
        r_exp = rank(emb.sub, expand_over_subfield(v, emb))
        r_ker = len(v) - kernel_dim_bruteforce(v, emb)
        if not r == r_exp == r_ker:
            raise AssertionError(f"rank paths disagree: fast={r} expansion={r_exp} kernel={r_ker}")
    return r


def kernel_dim_bruteforce(v, emb: SubfieldEmbedding) -> int:
    """``dim`` of ``{a in sub^n : sum a_i v_i = 0}`` by exhaustive enumeration."""
    sup, sub = emb.sup, emb.sub
    zeros_ = 0
    for a in itertools.product(range(sub.order), repeat=len(v)):
        acc = 0
        for ai, vi in zip(a, v):
            if ai:
                acc = sup.add(acc, sup.mul(emb(ai), vi))
        zeros_ += acc == 0
    d = 0
    while sub.order**d < zeros_:
        d += 1
    if sub.order**d != zeros_:
        raise AssertionError("kernel size is not a power of q")
    return d
