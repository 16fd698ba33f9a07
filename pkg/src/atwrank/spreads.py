"""t-spreads: Desarguesian construction, extraction from ATW codes, checks."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import fqlinalg as la
from .errors import ContradictionError, NotATWError
from .fqlinalg import Subspace, expand_over_subfield
from .gfcore import ExtensionField, SubfieldEmbedding, coordinates, tower
from .rankcodes import (
    RankCode,
    is_nondegenerate,
    projective_points,
    qsystem,
    rank_weight_distribution,
    vector_to_base,
)


@dataclass
class Spread:
    """Candidate ``t``-spread of ``field^N``.

    ``labels`` optionally records where each element came from (projective
    representatives or hyperplane covectors), index-aligned with ``elements``.
    """

    field: ExtensionField
    N: int
    t: int
    elements: list
    labels: list | None = None

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def count(self) -> int:
        return len(self.elements)

    def expected_count(self) -> int:
        return (self.q**self.N - 1) // (self.q**self.t - 1)


@dataclass
class SpreadCheck:
    ok: bool
    problems: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def verify_spread(S: Spread) -> SpreadCheck:
    """Equidimensionality, pairwise trivial intersection and exact count.

    Given the first two, the count condition is equivalent to covering.
    """
    problems = []
    if S.t < 1 or S.N % S.t:
        problems.append(f"dimension: t={S.t} does not divide N={S.N}")
    for i, E in enumerate(S.elements):
        if E.ambient != S.N or E.field != S.field:
            problems.append(f"dimension: element {i} lives in a different ambient space")
        elif E.dim != S.t:
            problems.append(f"dimension: element {i} has dim {E.dim}, expected {S.t}")
    if problems:
        return SpreadCheck(False, problems)
    for i in range(S.count):
        for j in range(i + 1, S.count):
            if (S.elements[i] + S.elements[j]).dim != 2 * S.t:
                problems.append(f"trivial-intersection: elements {i} and {j} meet nontrivially")
    if S.N % S.t == 0 and S.count != S.expected_count():
        problems.append(f"cover: {S.count} elements, a {S.t}-spread of F_{S.q}^{S.N} needs {S.expected_count()}")
    return SpreadCheck(not problems, problems)


def _desarguesian(emb: SubfieldEmbedding, l: int) -> Spread:
    sup, Fq = emb.sup, emb.sub
    basis = coordinates(emb).basis
    t = emb.degree
    elements, labels = [], []
    for v in projective_points(sup, l):
        vecs = [vector_to_base(emb, [sup.mul(a, x) for x in v]) for a in basis]
        elements.append(Subspace.from_vectors(Fq, t * l, vecs))
        labels.append(v)
    return Spread(Fq, t * l, t, elements, labels)


def desarguesian_spread(l: int, t: int, q: int) -> Spread:
    """``D_{l,t,q}``: the 1-dim F_{q^t}-subspaces of ``F_{q^t}^l`` read over F_q."""
    return _desarguesian(tower(q, t), l)


def scalar_action(emb: SubfieldEmbedding, l: int, s: int | None = None):
    """Matrix over F_q of ``v -> s v`` on ``F_{q^t}^l = F_q^{tl}`` (``s`` defaults to the generator)."""
    sup = emb.sup
    s = sup.gen if s is None else s
    C = coordinates(emb)
    t = emb.degree
    cols = []
    for i in range(l):
        for b in C.basis:
            v = [0] * l
            v[i] = sup.mul(s, b)
            cols.append(vector_to_base(emb, v))
    return la.transpose(cols)


def desarguesian_action(l: int, t: int, q: int):
    return [scalar_action(tower(q, t), l)]


def spread_from_atw(C: RankCode) -> Spread:
    """The ``(n-d)``-spread ``{X & H : dim(X & H) > 0}`` of the q-system.

    Elements are given in coordinates relative to the columns of ``C.G``
    (so the ambient space is ``F_q^n``); ``labels`` holds the covectors
    ``x`` with ``H = H_x``, in projective enumeration order.
    """
    if C.k != 2:
        raise NotATWError(f"spread extraction needs k=2, got k={C.k}")
    if not is_nondegenerate(C):
        raise ValueError("spread extraction needs a non-degenerate code")
    Fq = C.base.sub
    elements, labels = [], []
    dims = set()
    misses = 0
    for x in projective_points(C.sup, 2):
        c = C.codeword(x)
        K = la.kernel(Fq, expand_over_subfield(c, C.base), ncols=C.n)
        if K.dim == 0:
            misses += 1
            continue
        dims.add(K.dim)
        elements.append(K)
        labels.append(x)
    if len(dims) != 1 or misses == 0:
        raise NotATWError(f"hyperplane intersection dimensions {sorted(dims | ({0} if misses else set()))} are not {{0, n-d}}")
    t = dims.pop()
    if t == C.n:
        raise NotATWError("code has a zero codeword class")
    S = Spread(Fq, C.n, t, elements, labels)
    if C.n % t or S.count != S.expected_count():
        raise ContradictionError(f"{S.count} hyperplanes meet X in dim {t}; expected (q^n-1)/(q^t-1)")
    return S


def direct_sum_split(S: Spread) -> list:
    """Greedy choice of ``N/t`` elements whose sum is the whole space."""
    check = verify_spread(S)
    if not check:
        raise ValueError("not a spread: " + "; ".join(check.problems))
    chosen = []
    total = Subspace.zero(S.field, S.N)
    for E in S.elements:
        new = total + E
        if new.dim == total.dim + S.t:
            chosen.append(E)
            total = new
            if total.dim == S.N:
                return chosen
    raise ContradictionError("greedy direct-sum extension got stuck")


def direct_sum_indices(S: Spread) -> list[int]:
    blocks = direct_sum_split(S)
    return [S.elements.index(b) for b in blocks]


@dataclass
class SubspreadReport:
    t_prime: int | None  # None when the nonzero intersections have mixed dimensions
    dims: list
    is_subspread: bool
    count: int

    @property
    def mixed(self) -> bool:
        return self.t_prime is None and bool(self.dims)


def project_spread(S: Spread, W: Subspace):
    """``{E & W}`` minus zero spaces, with a subspread verdict."""
    if W.ambient != S.N or W.field != S.field:
        raise ValueError("W is not in the spread's ambient space")
    parts = [E & W for E in S.elements]
    parts = [P for P in parts if P.dim]
    dims = sorted({P.dim for P in parts})
    t_prime = dims[0] if len(dims) == 1 else None
    ok = False
    if t_prime is not None and W.dim % t_prime == 0:
        ok = len(parts) == (S.q**W.dim - 1) // (S.q**t_prime - 1)
    return parts, SubspreadReport(t_prime, dims, ok, len(parts))


@dataclass
class SubspreadCriterion:
    atw: bool
    subspread: bool
    t_prime: int | None
    spread_size: int
    induced_count: int
    agree: bool

    @property
    def hadamard_exception(self) -> bool:
        """Every spread element meets X: X is the whole space, the code is constant weight."""
        return self.subspread and self.induced_count == self.spread_size


def check_subspread_criterion(C: RankCode, budget: int = la.DEFAULT_BUDGET) -> SubspreadCriterion:
    """Compare ATW-ness with the subspread induced on X by the Desarguesian
    ``m``-spread of ``F_{q^m}^2``.

    The two sides are computed independently: antipodality from the rank
    distribution, the projection from subspace intersections.  The induced
    side also requires some spread element to miss X; without that the
    Hadamard code ``H_1(q, m, 2)`` (X = everything) satisfies the projection
    condition while having constant weight.
    """
    from .atw import analyze_atw

    if C.k != 2:
        raise ValueError("needs a 2-dimensional code")
    report = analyze_atw(C, budget)
    Delta = _desarguesian(C.base, 2)
    X = qsystem(C)
    parts, rep = project_spread(Delta, X)
    d = rank_weight_distribution(C, budget).min_distance
    sub = rep.is_subspread and rep.t_prime == C.n - d
    proper = sub and rep.count < Delta.count
    return SubspreadCriterion(report.is_antipodal, sub, rep.t_prime, Delta.count, rep.count, report.is_antipodal == proper)


def is_fieldlinear_spread(S: Spread, action) -> bool:
    """True iff each element is invariant under every matrix in ``action``."""
    if not action:
        raise ValueError("no scalar structure supplied")
    F = S.field
    for A in action:
        if len(A) != S.N:
            raise ValueError("action matrix does not match the ambient dimension")
        for E in S.elements:
            for b in E.basis:
                img = [la.dot(F, row, b) for row in A]
                if not E.contains(img):
                    return False
    return True
