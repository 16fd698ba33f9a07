"""Antipodal two-weight (ATW) rank-metric codes.

Detection, the two explicit families, the normal form with a constant-weight
tail, the MRD-to-ATW expansion and the classification at ``d = n/2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import fqlinalg as la
from .errors import ContradictionError, NotATWError
from .fqlinalg import DEFAULT_BUDGET, expand_over_subfield, rank_kit
from .gfcore import SubfieldEmbedding, build_embedding, canonical_field, coordinates, tower
from .rankcodes import (
    RankCode,
    apply_equivalence,
    compress_degenerate,
    is_mrd,
    is_nondegenerate,
    projective_points,
    rank_weight_distribution,
    vector_to_base,
)


def predicted_atw_counts(q: int, m: int, n: int, d: int) -> dict:
    """Weight counts of an ``[n, 2, d]`` ATW code over F_{q^m}/F_q."""
    low = (q**m - 1) * (q**n - 1) // (q ** (n - d) - 1)
    return {0: 1, d: low, n: (q ** (2 * m) - 1) - low}


@dataclass
class AtwReport:
    n: int
    k: int
    is_two_weight: bool
    is_antipodal: bool
    d: int | None
    d2: int | None
    counts: dict
    predicted: dict | None = None

    def to_dict(self) -> dict:
        return {
            "atw": self.is_antipodal,
            "two_weight": self.is_two_weight,
            "d": self.d,
            "d2": self.d2,
            "n": self.n,
            "k": self.k,
            "counts": {str(w): c for w, c in sorted(self.counts.items())},
            "predicted": None if self.predicted is None else {str(w): c for w, c in sorted(self.predicted.items())},
        }


def analyze_atw(C: RankCode, budget: int = DEFAULT_BUDGET) -> AtwReport:
    dist = rank_weight_distribution(C, budget)
    support = dist.support
    d = support[0] if support else None
    d2 = support[1] if len(support) > 1 else None
    two = len(support) == 2
    antipodal = two and d2 == C.n and d < C.n
    predicted = None
    if antipodal:
        if C.k != 2:
            raise ContradictionError(f"antipodal two-weight code of dimension {C.k}")
        predicted = predicted_atw_counts(C.q, C.m, C.n, d)
        if predicted != dist.counts:
            raise ContradictionError(f"ATW counts {dist.counts} differ from the closed form {predicted}")
    return AtwReport(C.n, C.k, two, antipodal, d, d2, dict(dist.counts), predicted)


def is_atw(C: RankCode, budget: int = DEFAULT_BUDGET) -> bool:
    return analyze_atw(C, budget).is_antipodal


# ---------------------------------------------------------------------------
# explicit families


def intermediate_field(base: SubfieldEmbedding, t: int) -> tuple[SubfieldEmbedding, list[int]]:
    """``F_{q^t}`` inside ``base.sup`` and an F_q-basis of it, as elements of sup.

    Returns the embedding ``F_{q^t} -> sup`` and the image of the power basis
    of ``F_{q^t}`` over F_q.
    """
    sub, sup = base.sub, base.sup
    if base.degree % t:
        raise ValueError(f"{t} does not divide the extension degree {base.degree}")
    mid = canonical_field(sub.p, sub.degree * t)
    to_sup = build_embedding(mid, sup)
    inner = build_embedding(sub, mid)
    return to_sup, [to_sup(b) for b in coordinates(inner).basis]


def subfield_atw_code(q: int, d: int, m: int) -> RankCode:
    """``[2d, 2, d]`` ATW code ``[[0, b], [b, 0]]`` with ``b`` an F_q-basis of F_{q^d}."""
    if m % d:
        raise ValueError(f"d={d} must divide m={m}")
    if d == m:
        raise ValueError("F_{q^m} must be a proper extension of F_{q^d}; with d = m there is no full-rank codeword")
    emb = tower(q, m)
    _, b = intermediate_field(emb, d)
    G = [[0] * d + b, b + [0] * d]
    return RankCode(G, emb)


def block_two_weight_code(q: int, d: int, k: int) -> RankCode:
    """``[kd, k, d]`` non-antipodal two-weight code over F_{q^{2d}}/F_q (weights d, 2d)."""
    if k <= 2:
        raise ValueError("needs k > 2")
    emb = tower(q, 2 * d)
    _, b = intermediate_field(emb, d)
    G = [[0] * (d * i) + b + [0] * (d * (k - i - 1)) for i in range(k)]
    return RankCode(G, emb)


# ---------------------------------------------------------------------------
# normal form


@dataclass
class NormalForm:
    G: tuple
    r: int
    S: list
    M: list

    @property
    def A(self):
        """Lower-left block: generator of the constant-weight tail."""
        cut = len(self.G[0]) - self.r
        return [row[:cut] for row in self.G[1:]]


def atw_normal_form(C: RankCode, budget: int = DEFAULT_BUDGET) -> NormalForm:
    """Equivalent generator ``[[c1, c2], [A, 0]]`` with ``rank(c1|c2) = n``.

    ``A`` generates a non-degenerate constant-weight code of length ``n - r``.
    The witnesses satisfy ``G_normal == S @ C.G @ M``.
    """
    F = C.sup
    if not is_nondegenerate(C):
        raise ValueError("needs a non-degenerate code")
    if not analyze_atw(C, budget).is_antipodal:
        raise NotATWError("input is not an ATW code")
    kit = rank_kit(C.base)
    x = next(x for x in projective_points(F, C.k) if kit.rank(C.codeword(x)) == C.n)
    # complete x with unit vectors, preferring rows already zero in the last column
    S = [list(x)]
    for i in sorted(range(C.k), key=lambda i: C.G[i][-1] != 0):
        e = [0] * C.k
        e[i] = 1
        if la.rank(F, S + [e]) > len(S):
            S.append(e)
        if len(S) == C.k:
            break
    G1 = la.matmul(F, S, [list(r) for r in C.G])
    alpha = G1[0][-1]
    for i in range(1, C.k):
        f = F.div(G1[i][-1], alpha)
        if f:
            S[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(S[i], S[0])]
    G1 = la.matmul(F, S, [list(r) for r in C.G])
    tail = RankCode([row for row in G1[1:]], C.base, check=False)
    A_code, M = compress_degenerate(tail)
    G2 = la.matmul(F, G1, [[C.base(a) for a in row] for row in M])
    A_len = A_code.n
    r = C.n - A_len
    if any(G2[i][j] for i in range(1, C.k) for j in range(A_len, C.n)):
        raise ContradictionError("tail did not compress to [A | 0]")
    if kit.rank(G2[0]) != C.n:
        raise ContradictionError("top row lost full rank")
    return NormalForm(tuple(tuple(r_) for r_ in G2), r, S, M)


# ---------------------------------------------------------------------------
# MRD -> ATW


def expand_mrd_to_atw(C_mrd: RankCode, base: SubfieldEmbedding | None = None, check: bool = True) -> RankCode:
    """Replace each column ``g`` of an ``[l, 2, l-1]`` MRD code over F_{q^m}/F_{q^t}
    by the ``t`` columns ``a_j g``, ``a_j`` an F_q-basis of F_{q^t}.

    The result is an ``[lt, 2, (l-1)t]`` ATW code over F_{q^m}/F_q.
    """
    sup = C_mrd.sup
    mid = C_mrd.base.sub
    if base is None:
        base = build_embedding(canonical_field(sup.p, 1), sup)
    if base.sup != sup:
        raise ValueError("base field embedding does not land in the code's field")
    if mid.degree % base.sub.degree:
        raise ValueError("F_q is not a subfield of the MRD code's base field")
    if C_mrd.k != 2:
        raise ValueError("needs a 2-dimensional MRD code")
    if check and not is_mrd(C_mrd):
        raise ValueError("input code is not MRD")
    inner = build_embedding(base.sub, mid)
    a = [C_mrd.base(b) for b in coordinates(inner).basis]
    l, t = C_mrd.n, len(a)
    G = [[sup.mul(a[j], row[i]) for i in range(l) for j in range(t)] for row in C_mrd.G]
    return RankCode(G, base)


def rank_correspondence(C_mrd: RankCode, C_atw: RankCode) -> dict:
    """Map ``(rank over F_{q^t}, rank over F_q) -> number of codewords``."""
    kt, kq = rank_kit(C_mrd.base), rank_kit(C_atw.base)
    mult = C_mrd.sup.order - 1
    out = {(0, 0): 1}
    for x in projective_points(C_mrd.sup, 2):
        key = (kt.rank(C_mrd.codeword(x)), kq.rank(C_atw.codeword(x)))
        out[key] = out.get(key, 0) + mult
    return out


def verify_rank_correspondence(C_mrd: RankCode, C_atw: RankCode) -> bool:
    t = C_atw.n // C_mrd.n
    return all(r2 == r1 * t for r1, r2 in rank_correspondence(C_mrd, C_atw))


def qsystem_scalar_action(C: RankCode, s: int):
    """Matrix ``A`` over F_q with ``s * (G lam) = G (A lam)``, or None if
    the q-system is not closed under multiplication by ``s``."""
    Fq = C.base.sub
    E = la.transpose([vector_to_base(C.base, C.column(j)) for j in range(C.n)])
    cols = []
    for j in range(C.n):
        img = vector_to_base(C.base, [C.sup.mul(s, a) for a in C.column(j)])
        lam = la.solve(Fq, E, img)
        if lam is None:
            return None
        cols.append(lam)
    return la.transpose(cols)


def induced_structure(C: RankCode, t: int):
    """Action of the generator of F_{q^t} on X (None if X is not an F_{q^t}-space)."""
    to_sup, _ = intermediate_field(C.base, t)
    return qsystem_scalar_action(C, to_sup(to_sup.sub.gen))


def is_induced_by_mrd(C: RankCode, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff the q-system is closed under the embedded F_{q^{n-d}}."""
    rep = analyze_atw(C, budget)
    if not rep.is_antipodal:
        raise NotATWError("input is not an ATW code")
    t = C.n - rep.d
    if C.m % t:
        raise ValueError(f"n-d={t} does not divide m={C.m}")
    return induced_structure(C, t) is not None


# ---------------------------------------------------------------------------
# d = n/2


class HalfKind(Enum):
    NOT_ATW = "not_atw"
    CANONICAL = "canonical"


@dataclass
class HalfDistanceResult:
    kind: HalfKind
    G: tuple | None = None
    alphas: list | None = None
    subfield_degree: int | None = None
    S: list | None = None
    M: list | None = None


def classify_half_distance(C: RankCode, budget: int = DEFAULT_BUDGET) -> HalfDistanceResult:
    """Bring an ``[n, 2, n/2]`` ATW code to ``[[0, 1, a_2..a_d], [1, a_2..a_d, 0]]``.

    Steps: take two spread elements forming a direct sum, use their basis
    vectors as new columns, take the two hyperplane covectors as new rows,
    normalise leading entries, then align the lower block with the upper one
    by an F_q-linear column change.  The result satisfies
    ``G == S @ C.G @ M`` and ``<1, a_2, ..., a_d>`` is the subfield F_{q^d}.
    """
    from .spreads import direct_sum_indices, spread_from_atw

    F, Fq = C.sup, C.base.sub
    if C.k != 2 or C.n % 2:
        raise ValueError("needs an [n, 2] code with n even")
    rep = analyze_atw(C, budget)
    d = C.n // 2
    if rep.d != d:
        raise ValueError(f"minimum distance {rep.d} is not n/2 = {d}")
    if not rep.is_antipodal:
        return HalfDistanceResult(HalfKind.NOT_ATW)
    if C.m % d:
        raise ContradictionError(f"ATW code with d={d} not dividing m={C.m}")
    spread = spread_from_atw(C)
    i1, i2 = direct_sum_indices(spread)
    B1, B2 = spread.elements[i1], spread.elements[i2]
    x1, x2 = spread.labels[i1], spread.labels[i2]
    M1 = la.transpose([list(v) for v in B1.basis] + [list(v) for v in B2.basis])
    S = [list(x1), list(x2)]
    G1 = la.matmul(F, la.matmul(F, S, [list(r) for r in C.G]), [[C.base(a) for a in row] for row in M1])
    e1, e2 = G1[0][d:], G1[1][:d]
    if any(G1[0][:d]) or any(G1[1][d:]):
        raise ContradictionError("hyperplane covectors do not kill their blocks")
    s1, s2 = F.inv(e1[0]), F.inv(e2[0])
    S = [[F.mul(s1, a) for a in S[0]], [F.mul(s2, a) for a in S[1]]]
    e1 = [F.mul(s1, a) for a in e1]
    e2 = [F.mul(s2, a) for a in e2]
    E2 = expand_over_subfield(e2, C.base)
    N_cols = []
    for a in e1:
        col = la.solve(Fq, E2, coordinates(C.base)(a))
        if col is None:
            raise ContradictionError("upper block is not in the F_q-span of the lower block")
        N_cols.append(col)
    N = la.transpose(N_cols)
    block = [[N[i][j] if i < d and j < d else (1 if i == j else 0) for j in range(C.n)] for i in range(C.n)]
    M = la.matmul(Fq, M1, block)
    G = apply_equivalence(C, M=M, S=S).G
    expect = tuple([tuple([0] * d + e1), tuple(e1 + [0] * d)])
    if G != expect:
        raise ContradictionError("canonical generator does not have the expected shape")
    kit = rank_kit(C.base)
    for a in e1:
        for b in e1:
            if kit.rank(e1 + [F.mul(a, b)]) != d:
                raise ContradictionError("<1, a_2, ..., a_d> is not closed under multiplication")
    Qd = C.q**d
    if any(F.pow(a, Qd) != a for a in e1):
        raise ContradictionError("span is not the subfield of degree d")
    return HalfDistanceResult(HalfKind.CANONICAL, G, e1, d, S, M)
