import numpy as np
import pytest

from atwrank import fqlinalg as la
from atwrank.atw import (
    HalfKind,
    analyze_atw,
    classify_half_distance,
    subfield_atw_code,
    block_two_weight_code,
    expand_mrd_to_atw,
    induced_structure,
    intermediate_field,
    is_atw,
    is_induced_by_mrd,
    atw_normal_form,
    predicted_atw_counts,
    rank_correspondence,
    verify_rank_correspondence,
)
from atwrank.errors import NotATWError
from atwrank.gfcore import tower
from atwrank.rankcodes import (
    RankCode,
    WeightClass,
    apply_equivalence,
    classify_constant_weight,
    codes_equivalent,
    gabidulin,
    hadamard_code,
    is_equivalence_witness,
    random_code,
    rank_weight_distribution,
)
from oracles import atw_counts_formula, rank_distribution, subfield_elements


def test_subfield_atw_counts_brute_force():
    C = subfield_atw_code(2, 2, 4)
    assert C.G == ((0, 0, 1, 6), (1, 6, 0, 0))
    brute = rank_distribution(C.sup, [0, 1], C.G)
    assert brute == {0: 1, 2: 75, 4: 180}
    assert rank_weight_distribution(C).counts == brute
    rep = analyze_atw(C)
    assert rep.is_antipodal and rep.d == 2 and rep.predicted == brute


@pytest.mark.parametrize("q,m,n,d", [(2, 4, 4, 2), (2, 6, 6, 4), (3, 4, 4, 2), (2, 6, 6, 3)])
def test_predicted_counts_formula(q, m, n, d):
    assert predicted_atw_counts(q, m, n, d) == atw_counts_formula(q, m, n, d)
    # 75 = (2^4 - 1)(2^4 - 1)/(2^2 - 1)
    assert predicted_atw_counts(2, 4, 4, 2)[2] == 75


@pytest.mark.parametrize("q,d,m", [(2, 2, 4), (2, 2, 6), (2, 3, 6), (3, 2, 4), (2, 1, 2), (2, 1, 3)])
def test_subfield_atw_family(q, d, m):
    C = subfield_atw_code(q, d, m)
    assert (C.n, C.k) == (2 * d, 2)
    rep = analyze_atw(C)
    assert rep.is_antipodal and rep.d == d
    assert rep.counts == atw_counts_formula(q, m, 2 * d, d)


def test_subfield_atw_bad_parameters():
    with pytest.raises(ValueError):
        subfield_atw_code(2, 3, 4)
    with pytest.raises(ValueError):
        subfield_atw_code(2, 2, 2)


def test_subfield_atw_needs_closed_span():
    # [[0, b], [b, 0]] is ATW iff <b> is closed under multiplication,
    # i.e. each ratio a_i / a_1 lies in F_{q^d}
    emb = tower(2, 4)
    F = emb.sup
    Fqd = subfield_elements(F, 2)
    hits = 0
    for a2 in range(2, 16):
        b = [1, a2]
        C = RankCode([[0, 0] + b, b + [0, 0]], emb)
        assert is_atw(C) == (a2 in Fqd)
        hits += a2 in Fqd
    assert hits == 2


def test_block_two_weight():
    C = block_two_weight_code(2, 1, 3)
    rep = analyze_atw(C)
    assert rep.is_two_weight and not rep.is_antipodal
    assert rep.counts == {0: 1, 1: 21, 2: 42}
    assert rep.counts == rank_distribution(C.sup, [0, 1], C.G)
    C = block_two_weight_code(2, 2, 3)
    assert rank_weight_distribution(C).support == [2, 4]


@pytest.mark.parametrize("C", [subfield_atw_code(2, 2, 4), expand_mrd_to_atw(gabidulin(tower(4, 3), 3, 2)),
                               subfield_atw_code(3, 2, 4)])
def test_normal_form(C):
    nf = atw_normal_form(C)
    Gn = nf.G
    assert RankCode([list(r) for r in Gn], C.base).rank(Gn[0]) == C.n
    A = RankCode(nf.A, C.base)
    assert classify_constant_weight(A) in (WeightClass.HADAMARD, WeightClass.DIM_ONE)
    assert A.n == C.n - nf.r
    assert all(not any(row[A.n:]) for row in Gn[1:])
    assert apply_equivalence(C, M=nf.M, S=nf.S).G == Gn
    # the constant weight of the tail is d
    d = analyze_atw(C).d
    assert rank_weight_distribution(A).support == [d]


def test_normal_form_of_subfield_atw():
    nf = atw_normal_form(subfield_atw_code(2, 2, 4))
    assert nf.r == 2 and nf.A == [(1, 6)]


def test_normal_form_rejects():
    with pytest.raises(NotATWError):
        atw_normal_form(hadamard_code(2, 2, 2))


def test_expand_mrd_counts_and_correspondence():
    Cm = gabidulin(tower(4, 3), 3, 2)
    C = expand_mrd_to_atw(Cm)
    assert (C.n, C.k, C.q, C.m) == (6, 2, 2, 6)
    assert rank_weight_distribution(C).counts == {0: 1, 4: 1323, 6: 2772}
    corr = rank_correspondence(Cm, C)
    assert corr == {(0, 0): 1, (2, 4): 1323, (3, 6): 2772}
    assert sum(corr.values()) == 4096
    assert verify_rank_correspondence(Cm, C)


@pytest.mark.parametrize("q,t,l,m", [(2, 2, 2, 4), (2, 1, 4, 4), (2, 3, 2, 6), (3, 2, 2, 4)])
def test_expand_mrd_general(q, t, l, m):
    base = tower(q**t, m // t)
    Cm = gabidulin(base, l, 2)
    C = expand_mrd_to_atw(Cm, tower(q, m))
    rep = analyze_atw(C)
    assert rep.is_antipodal and rep.d == (l - 1) * t and C.n == l * t
    assert verify_rank_correspondence(Cm, C)
    assert is_induced_by_mrd(C)


def test_expand_rejects_non_mrd():
    emb = tower(4, 3)
    C = RankCode([[1, 6, 0], [0, 0, 1]], emb)
    with pytest.raises(ValueError):
        expand_mrd_to_atw(C)


def test_intermediate_field():
    to_sup, basis = intermediate_field(tower(2, 6), 3)
    assert len(basis) == 3 and to_sup.sub.order == 8
    F = to_sup.sup
    assert all(F.pow(b, 8) == b for b in basis)


def test_induced_by_mrd():
    assert is_induced_by_mrd(subfield_atw_code(2, 2, 4))
    assert induced_structure(subfield_atw_code(2, 2, 4), 2) is not None
    with pytest.raises(NotATWError):
        is_induced_by_mrd(block_two_weight_code(2, 1, 3))


def test_induced_by_mrd_survives_column_change():
    # an F_q column change gives an equivalent code, so X stays an F_{q^d}-space
    C = subfield_atw_code(2, 2, 4)
    M = [[1, 0, 0, 0], [0, 1, 1, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    C2 = apply_equivalence(C, M=M)
    assert is_atw(C2) and is_induced_by_mrd(C2)


def test_half_distance_subfield_atw():
    C = subfield_atw_code(2, 2, 4)
    res = classify_half_distance(C)
    assert res.kind == HalfKind.CANONICAL and res.subfield_degree == 2
    assert res.G == ((0, 0, 1, 6), (1, 6, 0, 0))
    assert apply_equivalence(C, M=res.M, S=res.S).G == res.G


def test_half_distance_random_equivalent_copy():
    rng = np.random.default_rng(7)
    C = subfield_atw_code(2, 3, 6)
    while True:
        M = rng.integers(2, size=(6, 6)).tolist()
        if la.rank(C.base.sub, M) == 6:
            break
    C2 = apply_equivalence(C, M=M, S=[[1, 5], [0, 3]])
    res = classify_half_distance(C2)
    assert res.kind == HalfKind.CANONICAL and res.subfield_degree == 3
    assert apply_equivalence(C2, M=res.M, S=res.S).G == res.G


def test_half_distance_rejects_other_distance():
    with pytest.raises(ValueError):
        classify_half_distance(gabidulin(tower(2, 4), 4, 2))


def test_half_distance_not_atw():
    emb = tower(2, 4)
    C = RankCode([[1, 2, 0, 0], [0, 0, 1, 2]], emb)
    rep = analyze_atw(C)
    assert rep.d == 2 and not rep.is_antipodal
    assert classify_half_distance(C).kind == HalfKind.NOT_ATW


def test_subfield_atw_equivalent_to_expanded_gabidulin():
    E = subfield_atw_code(2, 2, 4)
    G = expand_mrd_to_atw(gabidulin(tower(4, 2), 2, 2))
    res = codes_equivalent(E, G)
    assert res.status == "yes" and is_equivalence_witness(E, G, res.M)


@pytest.mark.parametrize("seed", range(8))
def test_atw_invariants_on_random_codes(seed):
    rng = np.random.default_rng(seed)
    C = random_code(rng, 2, 4, int(rng.integers(2, 5)), 2)
    rep = analyze_atw(C)
    if rep.is_antipodal:
        assert 2 * rep.d >= C.n and C.n % (C.n - rep.d) == 0


def test_hadamard_is_not_atw():
    rep = analyze_atw(hadamard_code(2, 2, 2))
    assert not rep.is_antipodal and not rep.is_two_weight
