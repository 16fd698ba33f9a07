"""Rank-metric codes over F_{q^m}/F_q given by generator matrices.

A :class:`RankCode` pairs a ``k x n`` generator over ``sup = F_{q^m}`` with a
:class:`~atwrank.gfcore.SubfieldEmbedding` pinning the base field F_q.
Ranks are always taken over that base field.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from enum import Enum

from . import fqlinalg as la
from .errors import BudgetExceeded, ContradictionError
from .fqlinalg import DEFAULT_BUDGET, Subspace, rank_kit
from .gfcore import ExtensionField, SubfieldEmbedding, coordinates, tower


class RankCode:
    """Linear ``[n, k]`` rank-metric code over ``base.sup / base.sub``."""

    def __init__(self, G, base: SubfieldEmbedding, check: bool = True):
        self.G = tuple(tuple(int(a) for a in row) for row in G)
        self.base = base
        self.sup = base.sup
        if not self.G or not self.G[0]:
            raise ValueError("empty generator matrix")
        if any(len(row) != len(self.G[0]) for row in self.G):
            raise ValueError("ragged generator matrix")
        if check:
            for row in self.G:
                for a in row:
                    if not 0 <= a < self.sup.order:
                        raise ValueError(f"entry {a} outside {self.sup.spec}")
            if la.rank(self.sup, self.G) < self.k:
                raise ValueError("generator matrix is not of full row rank")
            if self.n < self.k:
                raise ValueError("length smaller than dimension")

    k = property(lambda self: len(self.G))
    n = property(lambda self: len(self.G[0]))

    @property
    def q(self) -> int:
        return self.base.sub.order

    @property
    def m(self) -> int:
        """Degree of ``sup`` over the base field."""
        return self.base.degree

    def __repr__(self):
        return f"RankCode([{self.n},{self.k}] over {self.sup.spec}/{self.base.sub.spec})"

    def __eq__(self, other):
        return isinstance(other, RankCode) and self.G == other.G and self.base == other.base

    def __hash__(self):
        return hash((self.G, self.base))

    def codeword(self, x) -> list[int]:
        F = self.sup
        out = [0] * self.n
        for xi, row in zip(x, self.G):
            if xi:
                for j, g in enumerate(row):
                    if g:
                        out[j] = F.add(out[j], F.mul(xi, g))
        return out

    def rank(self, c) -> int:
        return rank_kit(self.base).rank(c)

    def column(self, j: int) -> list[int]:
        return [row[j] for row in self.G]


def from_generator(G, sup: ExtensionField, base: SubfieldEmbedding) -> RankCode:
    if base.sup != sup:
        raise ValueError("base embedding does not land in sup")
    return RankCode(G, base)


# ---------------------------------------------------------------------------
# q-systems


def vector_to_base(emb: SubfieldEmbedding, v) -> list[int]:
    """Expand ``v in sup^k`` to ``F_q^{mk}`` (block ``i`` = coordinates of ``v_i``)."""
    C = coordinates(emb)
    out = []
    for a in v:
        out.extend(C(a))
    return out


def vector_from_base(emb: SubfieldEmbedding, coeffs) -> list[int]:
    C = coordinates(emb)
    m = emb.degree
    return [C.element(coeffs[i : i + m]) for i in range(0, len(coeffs), m)]


def qsystem(C: RankCode) -> Subspace:
    """F_q-span of the columns, inside ``F_q^{mk}``."""
    cols = [vector_to_base(C.base, C.column(j)) for j in range(C.n)]
    return Subspace.from_vectors(C.base.sub, C.m * C.k, cols)


def is_nondegenerate(C: RankCode) -> bool:
    return qsystem(C).dim == C.n


def compress_degenerate(C: RankCode):
    """Return ``(C', M)`` with ``C.G @ M == [C'.G | 0]`` and ``C'`` non-degenerate."""
    Fq = C.base.sub
    E = la.transpose([vector_to_base(C.base, C.column(j)) for j in range(C.n)])
    R, r, pivots = la.rref(Fq, E)
    K = la.kernel(Fq, E, ncols=C.n)
    cols = []
    for p in pivots:
        e = [0] * C.n
        e[p] = 1
        cols.append(e)
    cols.extend(list(v) for v in K.basis)
    M = la.transpose(cols)
    if r == C.n:
        return C, M
    G2 = [[row[p] for p in pivots] for row in C.G]
    return RankCode(G2, C.base), M


def apply_equivalence(C: RankCode, M=None, S=None, alpha: int = 1) -> RankCode:
    """Generator ``alpha * S @ G @ M`` where ``M`` has base-field entries."""
    F = C.sup
    G = [list(r) for r in C.G]
    if S is not None:
        G = la.matmul(F, S, G)
    if M is not None:
        Mup = [[C.base(a) for a in row] for row in M]
        G = la.matmul(F, G, Mup)
    if alpha != 1:
        G = [[F.mul(alpha, a) for a in row] for row in G]
    return RankCode(G, C.base)


# ---------------------------------------------------------------------------
# weight distributions


@dataclass
class WeightDistribution:
    metric: str
    n: int
    counts: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def support(self) -> list[int]:
        """Nonzero weights that occur, ascending."""
        return sorted(w for w, c in self.counts.items() if w and c)

    @property
    def min_distance(self) -> int | None:
        s = self.support
        return s[0] if s else None

    def to_dict(self) -> dict:
        return {
            "metric": self.metric,
            "n": self.n,
            "counts": {str(w): self.counts[w] for w in sorted(self.counts)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d) -> "WeightDistribution":
        return cls(d["metric"], d["n"], {int(w): c for w, c in d["counts"].items()})


def projective_points(F: ExtensionField, k: int):
    """Vectors of ``F^k`` whose first nonzero entry is 1, by increasing
    little-endian integer encoding ``sum x_i |F|^i``."""
    Q = F.order
    for hi in itertools.product(range(Q), repeat=k - 1):
        u = hi[::-1]
        lead = next((a for a in u if a), 0)
        if lead == 1:
            yield (0,) + u
        yield (1,) + u


def num_projective_points(Q: int, k: int) -> int:
    return (Q**k - 1) // (Q - 1)


def _check_budget(C: RankCode, budget: int):
    P = num_projective_points(C.sup.order, C.k)
    if P > budget:
        raise BudgetExceeded(f"{P} projective codeword classes", P)
    return P


def rank_weight_distribution(C: RankCode, budget: int = DEFAULT_BUDGET, method: str = "codewords"):
    """Exact rank-weight distribution.

    ``method="codewords"`` ranks one codeword per scalar class;
    ``method="hyperplanes"`` uses ``rank(xG) = dim X - dim(X & H_x)`` with the
    intersection computed by subspace arithmetic.  Both multiply class counts
    by ``|sup| - 1``.
    """
    _check_budget(C, budget)
    mult = C.sup.order - 1
    counts = {0: 1}
    if method == "codewords":
        kit = rank_kit(C.base)
        for x in projective_points(C.sup, C.k):
            r = kit.rank(C.codeword(x))
            counts[r] = counts.get(r, 0) + mult
    elif method == "hyperplanes":
        X = qsystem(C)
        for x in projective_points(C.sup, C.k):
            H = hyperplane(C.base, x)
            r = X.dim - (X & H).dim
            counts[r] = counts.get(r, 0) + mult
    else:
        raise ValueError(f"unknown method {method!r}")
    return WeightDistribution("rank", C.n, dict(sorted(counts.items())))


def hyperplane(emb: SubfieldEmbedding, x) -> Subspace:
    """``H_x = {e : x . e = 0}`` as an F_q-subspace of ``F_q^{mk}``."""
    sup, Fq = emb.sup, emb.sub
    Cd = coordinates(emb)
    m, k = emb.degree, len(x)
    cols = []
    for i in range(k):
        for b in Cd.basis:
            cols.append(Cd(sup.mul(x[i], b)))
    A = la.transpose(cols)
    return la.kernel(Fq, A, ncols=m * k)


def min_distance(C: RankCode, budget: int = DEFAULT_BUDGET) -> int:
    return rank_weight_distribution(C, budget).min_distance


def is_mrd(C: RankCode, budget: int = DEFAULT_BUDGET) -> bool:
    if C.n > C.m:
        raise ValueError(f"MRD test needs n <= m (n={C.n}, m={C.m})")
    return min_distance(C, budget) == C.n - C.k + 1


# ---------------------------------------------------------------------------
# constructions


def gabidulin(base: SubfieldEmbedding, l: int, k: int, g=None) -> RankCode:
    """Rows ``(g_1^{Q^i}, ..., g_l^{Q^i})`` for ``i < k``, ``Q = |base.sub|``.

    ``g`` defaults to ``1, b, b^2, ...`` for ``b`` the generator of ``sup``.
    """
    sup, Q = base.sup, base.sub.order
    if not 1 <= k <= l:
        raise ValueError("need 1 <= k <= l")
    if l > base.degree:
        raise ValueError(f"length {l} exceeds the extension degree {base.degree}")
    if g is None:
        g = [sup.pow(sup.gen, i) for i in range(l)]
    g = [int(a) for a in g]
    if len(g) != l:
        raise ValueError("evaluation vector has the wrong length")
    if rank_kit(base).rank(g) != l:
        raise ValueError("evaluation points are dependent over the base field")
    rows = [[sup.pow(a, Q**i) for a in g] for i in range(k)]
    return RankCode(rows, base)


def hadamard_code(q: int, m: int, k: int) -> RankCode:
    """``H_1(q, m, k)``: columns form an F_q-basis of ``F_{q^m}^k``."""
    emb = tower(q, m)
    basis = coordinates(emb).basis
    G = [[0] * (m * i) + list(basis) + [0] * (m * (k - i - 1)) for i in range(k)]
    return RankCode(G, emb)


class WeightClass(Enum):
    NOT_CONSTANT = "not_constant"
    DIM_ONE = "dim_one"
    HADAMARD = "hadamard"


def classify_constant_weight(C: RankCode, budget: int = DEFAULT_BUDGET) -> WeightClass:
    if not is_nondegenerate(C):
        raise ValueError("classification needs a non-degenerate code")
    dist = rank_weight_distribution(C, budget)
    if len(dist.support) != 1:
        return WeightClass.NOT_CONSTANT
    d = dist.support[0]
    if C.k == 1:
        if d != C.n:
            raise ContradictionError(f"constant-weight 1-dim code with d={d} != n={C.n}")
        return WeightClass.DIM_ONE
    if C.n != C.m * C.k or d != C.m or qsystem(C).dim != C.m * C.k:
        raise ContradictionError(f"constant-weight code {C} is not Hadamard")
    return WeightClass.HADAMARD


# ---------------------------------------------------------------------------
# equivalence


@dataclass
class Equivalence:
    status: str  # "yes" | "no" | "budget_exceeded"
    alpha: int | None = None
    M: list | None = None
    searched: int = 0

    def __bool__(self):
        return self.status == "yes"


def _rowspace(F, rows):
    R, r, _ = la.rref(F, rows)
    return tuple(tuple(row) for row in R[:r])


def codes_equivalent(C1: RankCode, C2: RankCode, budget: int = 3 * 10**5) -> Equivalence:
    """Search ``M in GL(n, q)`` with ``rowspace(C1) == rowspace(C2 @ M)``.

    Columns of ``M`` are chosen one at a time, pruning whenever the prefix
    row spaces already differ.  The scalar ``alpha`` of the equivalence
    definition never changes an F_{q^m}-linear code, so it is reported as 1.
    """
    if C1.base != C2.base:
        raise ValueError("codes over different field towers")
    if (C1.n, C1.k) != (C2.n, C2.k):
        return Equivalence("no")
    if rank_weight_distribution(C1).counts != rank_weight_distribution(C2).counts:
        return Equivalence("no")
    n, q = C1.n, C1.q
    size = la.gl_order(n, q)
    if size > budget:
        return Equivalence("budget_exceeded", searched=0)
    F, Fq, emb = C1.sup, C1.base.sub, C1.base
    targets = [_rowspace(F, [row[:j] for row in C1.G]) for j in range(1, n + 1)]
    G2 = C2.G
    candidates = [v for v in itertools.product(range(q), repeat=n) if any(v)]
    images = {v: [la.dot(F, row, [emb(a) for a in v]) for row in G2] for v in candidates}
    visited = 0

    def span_add(span, v):
        out = set(span)
        for c in range(1, q):
            cv = tuple(Fq.mul(c, a) for a in v)
            out |= {tuple(Fq.add(a, b) for a, b in zip(s, cv)) for s in span}
        return out

    def dfs(chosen, span, cols):
        nonlocal visited
        j = len(chosen)
        if j == n:
            return chosen
        for v in candidates:
            if v in span:
                continue
            visited += 1
            newcols = cols + [images[v]]
            prefix = [[c[i] for c in newcols] for i in range(C1.k)]
            if _rowspace(F, prefix) != targets[j]:
                continue
            found = dfs(chosen + [v], span_add(span, v), newcols)
            if found:
                return found
        return None

    zero = tuple([0] * n)
    found = dfs([], {zero}, [])
    if found is None:
        return Equivalence("no", searched=visited)
    M = [[found[j][i] for j in range(n)] for i in range(n)]
    return Equivalence("yes", alpha=1, M=M, searched=visited)


def is_equivalence_witness(C1: RankCode, C2: RankCode, M, alpha: int = 1) -> bool:
    if la.rank(C1.base.sub, M) != C2.n:
        return False
    C3 = apply_equivalence(C2, M=M, alpha=alpha)
    return _rowspace(C1.sup, C1.G) == _rowspace(C1.sup, C3.G)


def random_code(rng, q: int, m: int, n: int, k: int = 2, nondegenerate: bool = True) -> RankCode:
    """Uniformly random full-row-rank generator (optionally non-degenerate)."""
    emb = tower(q, m)
    if n < k:
        raise ValueError("a full-rank generator needs n >= k")
    if nondegenerate and n > m * k:
        raise ValueError("a non-degenerate code needs n <= m k")
    while True:
        G = [[int(rng.integers(emb.sup.order)) for _ in range(n)] for _ in range(k)]
        if la.rank(emb.sup, G) < k:
            continue
        C = RankCode(G, emb, check=False)
        if nondegenerate and not is_nondegenerate(C):
            continue
        return C
