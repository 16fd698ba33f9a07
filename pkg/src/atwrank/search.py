"""Exhaustive and sampled scans over q-systems.

A q-system of an ``[n, k]`` code over ``F_{q^m}/F_q`` is an ``n``-dim
subspace ``X`` of ``F_q^{mk}``.  The rank of the codeword ``x G`` is
``n - dim(X & H_x)``, so a scan only needs, for every ``X``, the number of
elements of ``X`` lying on each hyperplane.  That count is vectorised with
numpy over batches of RREF bases.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import fqlinalg as la
from .errors import BudgetExceeded, ContradictionError
from .gfcore import tower
from .rankcodes import RankCode, projective_points, vector_from_base

CHUNK = 4096


@dataclass
class SearchJob:
    q: int
    m: int
    n: int
    k: int
    mode: str = "exhaustive"  # or "sample"
    count: int = 0
    seed: int = 0
    atw_only: bool = False
    two_weight_only: bool = False
    budget: int = la.DEFAULT_BUDGET

    @property
    def N(self) -> int:
        return self.m * self.k

    def validate(self):
        if self.mode not in ("exhaustive", "sample"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.k < 1 or self.m < 1 or not 1 <= self.n <= self.N:
            raise ValueError(f"need 1 <= n <= m k, got n={self.n}, m={self.m}, k={self.k}")
        if self.mode == "sample" and self.count < 1:
            raise ValueError("sample mode needs a positive count")

    def total(self) -> int:
        if self.mode == "sample":
            return self.count
        return la.gaussian_binomial(self.N, self.n, self.q)


class _Context:
    """Field tables and the hyperplane membership table for one job shape."""

    def __init__(self, q: int, m: int, k: int, n: int, budget: int):
        emb = tower(q, m)
        Fq, sup = emb.sub, emb.sup
        self.emb, self.q, self.n, self.N = emb, q, n, m * k
        r = range(q)
        self.mul = np.array([[Fq.mul(a, b) for b in r] for a in r], dtype=np.int64)
        self.add = np.array([[Fq.add(a, b) for b in r] for a in r], dtype=np.int64)
        self.powers = q ** np.arange(self.N, dtype=np.int64)
        covecs = list(projective_points(sup, k))
        size = q**self.N * len(covecs)
        if size > budget:
            raise BudgetExceeded(f"{size} vector/hyperplane incidences", size)
        mem = np.zeros((q**self.N, len(covecs)), dtype=np.uint8)
        for code in range(q**self.N):
            digits = [(code // q**j) % q for j in range(self.N)]
            v = vector_from_base(emb, digits)
            for h, x in enumerate(covecs):
                mem[code, h] = la.dot(sup, x, v) == 0
        self.mem = mem
        self.logq = np.full(q**n + 1, -1, dtype=np.int64)
        for j in range(n + 1):
            self.logq[q**j] = j

    def hyperplane_dims(self, B: np.ndarray) -> np.ndarray:
        """``dim(X & H_x)`` for a batch of bases ``B`` of shape ``(b, n, N)``."""
        b = B.shape[0]
        S = np.zeros((b, 1, self.N), dtype=np.int64)
        scal = np.arange(self.q)
        for i in range(self.n):
            mult = self.mul[scal[None, :, None], B[:, i, None, :]]  # (b, q, N)
            S = self.add[S[:, :, None, :], mult[:, None, :, :]].reshape(b, -1, self.N)
        counts = self.mem[S @ self.powers].sum(axis=1, dtype=np.int64)
        dims = self.logq[counts]
        if (dims < 0).any():
            raise ContradictionError("hyperplane section is not a subspace")
        return dims


_CTX: _Context | None = None


def _init_worker(q, m, k, n, budget):
    global _CTX
    _CTX = _Context(q, m, k, n, budget)


def _pattern_bases(N: int, n: int, q: int, pivots, start: int, stop: int) -> np.ndarray:
    free = la.free_positions(pivots, N)
    f = len(free)
    idx = np.arange(start, stop, dtype=np.int64)
    fills = (idx[:, None] // q ** np.arange(f - 1, -1, -1, dtype=np.int64)) % q
    B = np.zeros((len(idx), n, N), dtype=np.int64)
    for i, p in enumerate(pivots):
        B[:, i, p] = 1
    for j, (i, c) in enumerate(free):
        B[:, i, c] = fills[:, j]
    return B


def _units(job: SearchJob):
    """Work units ``(first_index, pivots, start, stop)`` in enumeration order."""
    offset = 0
    for pivots in la.pivot_patterns(job.N, job.n):
        size = job.q ** len(la.free_positions(pivots, job.N))
        for s in range(0, size, CHUNK):
            yield offset + s, pivots, s, min(size, s + CHUNK)
        offset += size


def _evaluate(unit):
    first, pivots, start, stop = unit
    B = _pattern_bases(_CTX.N, _CTX.n, _CTX.q, pivots, start, stop)
    return first, B, _CTX.hyperplane_dims(B)


def _sample_bases(job: SearchJob) -> np.ndarray:
    rng = np.random.default_rng(job.seed)
    Fq = tower(job.q, job.m).sub
    out = []
    while len(out) < job.count:
        M = rng.integers(job.q, size=(job.n, job.N)).tolist()
        R, r, _ = la.rref(Fq, M)
        if r == job.n:
            out.append(R[: job.n])
    return np.array(out, dtype=np.int64).reshape(job.count, job.n, job.N)


def check_theorems(n: int, k: int, d: int):
    """Structural constraints every ATW code must satisfy."""
    problems = []
    if k != 2:
        problems.append(f"ATW code of dimension k={k}")
    if 2 * d < n:
        problems.append(f"ATW code with d={d} < n/2")
    if n % (n - d):
        problems.append(f"ATW code with (n-d)={n - d} not dividing n={n}")
    if problems:
        raise ContradictionError("theorem-contradiction: " + "; ".join(problems))


class _Tally:
    def __init__(self, job: SearchJob):
        self.job = job
        self.visited = 0
        self.nonspanning = 0
        self.supports: dict[str, int] = {}
        self.atw = 0
        self.two_weight = 0

    def records(self, first: int, B: np.ndarray, dims: np.ndarray):
        job = self.job
        n, Qm1 = job.n, job.q**job.m - 1
        self.visited += len(B)
        spanning = ~(dims == n).any(axis=1)
        self.nonspanning += int((~spanning).sum())
        ranks = n - dims
        hist = np.zeros((len(B), n + 1), dtype=np.int64)
        np.add.at(hist, (np.arange(len(B))[:, None], ranks), 1)
        for i in np.nonzero(spanning)[0]:
            support = [t for t in range(1, n + 1) if hist[i, t]]
            key = ",".join(map(str, support))
            self.supports[key] = self.supports.get(key, 0) + 1
            two = len(support) == 2
            atw = two and support[-1] == n
            self.two_weight += two
            self.atw += atw
            if atw:
                check_theorems(n, job.k, support[0])
            if (job.atw_only and not atw) or (job.two_weight_only and not two):
                continue
            prof = np.bincount(dims[i], minlength=n + 1)
            yield {
                "index": int(first + i),
                "basis": B[i].tolist(),
                "support": support,
                "d": support[0],
                "counts": {"0": 1, **{str(t): int(hist[i, t]) * Qm1 for t in support}},
                "atw": bool(atw),
                "two_weight": bool(two),
                "signature": {str(j): int(c) for j, c in enumerate(prof) if c},
            }

    def summary(self) -> dict:
        return {
            "summary": True,
            "q": self.job.q,
            "m": self.job.m,
            "n": self.job.n,
            "k": self.job.k,
            "mode": self.job.mode,
            "visited": self.visited,
            "nonspanning": self.nonspanning,
            "supports": dict(sorted(self.supports.items())),
            "two_weight": self.two_weight,
            "atw": self.atw,
        }


def run_search(job: SearchJob, threads: int = 1):
    """Yield one record per matching q-system, then a summary record.

    The output is identical for every ``threads`` value.  ``signature`` maps
    an intersection dimension ``j`` to the number of hyperplanes meeting ``X``
    in dimension ``j``.

    Raises:
        BudgetExceeded: when the number of q-systems to visit exceeds the budget.
        ContradictionError: when an ATW finding breaks a structural theorem.
    """
    job.validate()
    total = job.total()
    if total > job.budget:
        raise BudgetExceeded(f"{total} q-systems of dimension {job.n} in F_{job.q}^{job.N}", total)
    tally = _Tally(job)
    args = (job.q, job.m, job.k, job.n, job.budget)
    if job.mode == "sample":
        _init_worker(*args)
        bases = _sample_bases(job)
        for s in range(0, len(bases), CHUNK):
            B = bases[s : s + CHUNK]
            yield from tally.records(s, B, _CTX.hyperplane_dims(B))
    elif threads <= 1:
        _init_worker(*args)
        for unit in _units(job):
            yield from tally.records(*_evaluate(unit))
    else:
        with ProcessPoolExecutor(threads, initializer=_init_worker, initargs=args) as ex:
            for result in ex.map(_evaluate, _units(job), chunksize=4):
                yield from tally.records(*result)
    yield tally.summary()


def finding_code(job: SearchJob, basis) -> RankCode:
    """The code whose generator columns are the basis vectors of a finding."""
    emb = tower(job.q, job.m)
    cols = [vector_from_base(emb, list(b)) for b in basis]
    return RankCode([list(r) for r in zip(*cols)], emb)
