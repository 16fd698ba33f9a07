"""Hamming-metric codes obtained from q-systems via projective systems."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BudgetExceeded
from .fqlinalg import DEFAULT_BUDGET, Subspace
from .gfcore import ExtensionField, SubfieldEmbedding
from .rankcodes import (
    RankCode,
    WeightDistribution,
    is_nondegenerate,
    num_projective_points,
    projective_points,
    qsystem,
    rank_weight_distribution,
    vector_from_base,
)


@dataclass
class ProjectiveSystem:
    field: ExtensionField
    k: int
    points: list
    multiplicities: list = field(default_factory=list)

    def __post_init__(self):
        if not self.multiplicities:
            self.multiplicities = [1] * len(self.points)

    def __len__(self):
        return sum(self.multiplicities)


@dataclass
class HammingCode:
    field: ExtensionField
    G: tuple

    k = property(lambda self: len(self.G))
    n = property(lambda self: len(self.G[0]))

    def __post_init__(self):
        self.G = tuple(tuple(r) for r in self.G)
        if any(not any(row[j] for row in self.G) for j in range(self.n)):
            raise ValueError("Hamming code with a zero column")

    def codeword(self, x):
        F = self.field
        out = [0] * self.n
        for xi, row in zip(x, self.G):
            if xi:
                for j, g in enumerate(row):
                    if g:
                        out[j] = F.add(out[j], F.mul(xi, g))
        return out


def projective_system(X, emb: SubfieldEmbedding | None = None, budget: int = DEFAULT_BUDGET) -> ProjectiveSystem:
    """One representative per F_q^x-orbit of ``X \\ {0}``.

    ``X`` is a :class:`RankCode` or a q-system :class:`Subspace` together
    with its embedding.  The representative is the lexicographically smallest
    tuple of element reprs in the orbit; points are returned sorted.
    """
    if isinstance(X, RankCode):
        emb = X.base
        X = qsystem(X)
    if emb is None:
        raise ValueError("a bare q-system needs its embedding")
    if X.dim == 0:
        raise ValueError("zero q-system")
    q = emb.sub.order
    if q**X.dim > budget:
        raise BudgetExceeded(f"{q ** X.dim} q-system elements", q**X.dim)
    sup = emb.sup
    scalars = [emb(a) for a in range(1, q)]
    reps = set()
    for e in X.elements():
        if not any(e):
            continue
        v = vector_from_base(emb, e)
        reps.add(min(tuple(sup.mul(a, x) for x in v) for a in scalars))
    points = sorted(reps)
    if len(points) * (q - 1) != q**X.dim - 1:
        raise AssertionError("orbit count mismatch")
    return ProjectiveSystem(sup, X.ambient // emb.degree, points)


def hamming_expansion(C: RankCode, budget: int = DEFAULT_BUDGET) -> HammingCode:
    if not is_nondegenerate(C):
        raise ValueError("Hamming expansion needs a non-degenerate code")
    P = projective_system(C, budget=budget)
    G = [[pt[i] for pt in P.points] for i in range(C.k)]
    return HammingCode(C.sup, G)


def hamming_weight_distribution(H: HammingCode, budget: int = DEFAULT_BUDGET) -> WeightDistribution:
    P = num_projective_points(H.field.order, H.k)
    if P > budget:
        raise BudgetExceeded(f"{P} projective codeword classes", P)
    mult = H.field.order - 1
    counts = {0: 1}
    for x in projective_points(H.field, H.k):
        w = sum(1 for c in H.codeword(x) if c)
        counts[w] = counts.get(w, 0) + mult
    return WeightDistribution("hamming", H.n, dict(sorted(counts.items())))


def expanded_weight(q: int, n: int, t: int) -> int:
    """Hamming weight of the expansion of a rank-``t`` codeword of an ``[n, k]`` code."""
    return (q**n - q ** (n - t)) // (q - 1)


def weight_correspondence(C: RankCode, H: HammingCode | None = None) -> dict:
    """``(rank, hamming weight) -> count`` over all codewords."""
    H = hamming_expansion(C) if H is None else H
    mult = C.sup.order - 1
    out = {(0, 0): 1}
    for x in projective_points(C.sup, C.k):
        t = C.rank(C.codeword(x))
        w = sum(1 for c in H.codeword(x) if c)
        out[(t, w)] = out.get((t, w), 0) + mult
    return out


def verify_weight_correspondence(C: RankCode, H: HammingCode | None = None) -> bool:
    return all(w == expanded_weight(C.q, C.n, t) for t, w in weight_correspondence(C, H))


@dataclass
class HammingReport:
    length: int
    k: int
    is_two_weight: bool
    is_antipodal: bool
    weights: list
    counts: dict
    predicted_weights: list | None = None

    def to_dict(self) -> dict:
        return {
            "metric": "hamming",
            "n": self.length,
            "k": self.k,
            "two_weight": self.is_two_weight,
            "antipodal": self.is_antipodal,
            "weights": self.weights,
            "counts": {str(w): c for w, c in sorted(self.counts.items())},
            "predicted_weights": self.predicted_weights,
        }


def analyze_hamming_two_weight(H: HammingCode, source: RankCode | None = None, budget: int = DEFAULT_BUDGET) -> HammingReport:
    dist = hamming_weight_distribution(H, budget)
    support = dist.support
    two = len(support) == 2
    antipodal = two and support[1] == H.n
    predicted = None
    if source is not None:
        rd = rank_weight_distribution(source, budget)
        predicted = [expanded_weight(source.q, source.n, t) for t in rd.support]
        if predicted != support:
            raise AssertionError(f"Hamming weights {support} differ from the rank prediction {predicted}")
    return HammingReport(H.n, H.k, two, antipodal, support, dict(dist.counts), predicted)
