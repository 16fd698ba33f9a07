import itertools

import pytest

from atwrank.atw import subfield_atw_code, block_two_weight_code, expand_mrd_to_atw
from atwrank.errors import NotATWError
from atwrank.fqlinalg import Subspace
from atwrank.gfcore import canonical_field, tower
from atwrank.rankcodes import gabidulin, hadamard_code, random_code
from atwrank.spreads import (
    Spread,
    desarguesian_action,
    desarguesian_spread,
    direct_sum_split,
    is_fieldlinear_spread,
    project_spread,
    spread_from_atw,
    verify_spread,
    check_subspread_criterion,
)

F2 = canonical_field(2, 1)


def _brute_is_spread(S):
    """Pairwise trivial intersections and a cover, checked on element sets."""
    sets = [set(E.elements()) for E in S.elements]
    zero = tuple([0] * S.N)
    for A, B in itertools.combinations(sets, 2):
        if A & B != {zero}:
            return False
    return len(set().union(*sets)) == S.q**S.N


@pytest.mark.parametrize("l,t,q", [(2, 2, 2), (2, 3, 2), (3, 2, 2), (2, 2, 3), (2, 1, 2), (2, 2, 4)])
def test_desarguesian(l, t, q):
    S = desarguesian_spread(l, t, q)
    assert S.count == (q ** (l * t) - 1) // (q**t - 1)
    assert verify_spread(S).ok
    if q ** (l * t) <= 256:
        assert _brute_is_spread(S)
    assert is_fieldlinear_spread(S, desarguesian_action(l, t, q))


def test_spread_failures_name_the_axiom():
    S = desarguesian_spread(2, 2, 2)
    truncated = Spread(S.field, S.N, S.t, S.elements[:-1])
    res = verify_spread(truncated)
    assert not res.ok and res.problems[0].startswith("cover:")
    dup = Spread(S.field, S.N, S.t, S.elements + [S.elements[0]])
    assert any(p.startswith("trivial-intersection:") for p in verify_spread(dup).problems)
    bad = Spread(S.field, S.N, S.t, S.elements[:-1] + [Subspace.from_vectors(F2, 4, [[1, 0, 0, 0]])])
    assert verify_spread(bad).problems[0].startswith("dimension:")
    assert verify_spread(Spread(F2, 5, 2, [])).problems[0].startswith("dimension:")


def test_extract_subfield_atw():
    S = spread_from_atw(subfield_atw_code(2, 2, 4))
    assert (S.N, S.t, S.count) == (4, 2, 5)
    assert verify_spread(S).ok and _brute_is_spread(S)
    blocks = direct_sum_split(S)
    assert len(blocks) == 2
    assert sum((b for b in blocks[1:]), blocks[0]).dim == 4


def test_extract_expanded_mrd():
    C = expand_mrd_to_atw(gabidulin(tower(4, 3), 3, 2))
    S = spread_from_atw(C)
    assert (S.N, S.t, S.count) == (6, 2, 21)
    assert verify_spread(S).ok and _brute_is_spread(S)
    assert len(direct_sum_split(S)) == 3


def test_extracted_spread_is_fieldlinear():
    from atwrank.atw import induced_structure

    C = subfield_atw_code(2, 2, 4)
    S = spread_from_atw(C)
    A = induced_structure(C, 2)
    assert is_fieldlinear_spread(S, [A])


def test_extract_rejects_non_atw():
    with pytest.raises(NotATWError):
        spread_from_atw(block_two_weight_code(2, 1, 3))
    with pytest.raises(NotATWError):
        spread_from_atw(hadamard_code(2, 2, 2))


def test_split_rejects_non_spread():
    S = desarguesian_spread(2, 2, 2)
    with pytest.raises(ValueError):
        direct_sum_split(Spread(S.field, S.N, S.t, S.elements[:3]))


def test_project_whole_space_and_subspace():
    S = desarguesian_spread(2, 2, 2)
    parts, rep = project_spread(S, Subspace.full(F2, 4))
    assert rep.is_subspread and rep.t_prime == 2 and rep.count == 5
    # an element itself: one part of dim 2, that is a 2-spread of W
    parts, rep = project_spread(S, S.elements[0])
    assert rep.is_subspread and rep.count == 1
    # a 3-space meets every element, one of them in dimension 2
    W = Subspace.from_vectors(F2, 4, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])
    parts, rep = project_spread(S, W)
    assert not rep.is_subspread and rep.mixed and rep.dims == [1, 2]


def test_project_one_dim_pieces_form_subspread():
    S = desarguesian_spread(2, 2, 2)
    W = Subspace.from_vectors(F2, 4, [[1, 0, 1, 0], [0, 1, 0, 0]])
    parts, rep = project_spread(S, W)
    assert rep.t_prime == 1 and rep.is_subspread and rep.count == 3
    assert all(P.dim == 1 for P in parts)


def test_subspread_criterion_on_atw_codes():
    for C in (subfield_atw_code(2, 2, 4), expand_mrd_to_atw(gabidulin(tower(4, 3), 3, 2))):
        r = check_subspread_criterion(C)
        assert r.atw and r.subspread and r.agree and not r.hadamard_exception


def test_subspread_criterion_needs_a_missed_element():
    r = check_subspread_criterion(hadamard_code(2, 2, 2))
    assert not r.atw and r.subspread and r.hadamard_exception and r.agree


@pytest.mark.parametrize("seed", range(10))
def test_subspread_criterion_random(seed):
    import numpy as np

    rng = np.random.default_rng(seed)
    C = random_code(rng, 2, 3, int(rng.integers(2, 5)), 2)
    assert check_subspread_criterion(C).agree
