from fractions import Fraction
from math import factorial, gcd

import pytest

from quivermoduli.localization import chi_trees
from quivermoduli.motive import euler_char
from quivermoduli.quiver import Quiver, Refinement, Stability
from quivermoduli.symfunc import partitions
from quivermoduli.tropical import (
    aut_size,
    degeneration_total,
    mps_euler,
    n_trop,
    ramification_factor,
    refinements,
    weight_vector_of,
)


def test_weight_vector_of():
    r = Refinement.of([((1, 2),)], [((1, 1),)])
    assert weight_vector_of(r.k1) == (1, 1)
    r = Refinement.of([((2, 1),)], [((1, 1),)])
    assert weight_vector_of(r.k1) == (2,)
    r = Refinement.of([((1, 1), (2, 2))], [((1, 1),)])
    assert weight_vector_of(r.k1) == (1, 2, 2)
    assert aut_size((1, 2, 2)) == 2
    assert aut_size((1, 1, 1)) == 6


def test_ramification_factor_examples():
    assert ramification_factor((2,), (1, 1)) == 1
    assert ramification_factor((2,), (2,)) == Fraction(-1, 4)
    assert ramification_factor((1, 1), (1, 1)) == 2
    with pytest.raises(ValueError):
        ramification_factor((2,), (1,))


def test_ramification_binomial_identity():
    # summing the per-refinement chunk counts over refinements with a fixed
    # weight content recovers the number of compatible set partitions
    for P in [(2, 1), (3,), (2, 2, 1), (4, 1)]:
        n = sum(P)
        for lam in partitions(n):
            mult = {}
            for w in lam:
                mult[w] = mult.get(w, 0) + 1
            w_vec = weight_vector_of((tuple(sorted(mult.items())),))
            prefactor = Fraction(1)
            for w in w_vec:
                prefactor *= Fraction((-1) ** (w - 1), w * w)
            target = ramification_factor(P, w_vec) / prefactor  # partition count
            total = 0
            for r in refinements(P, (1,)):
                if r.weight_multiplicities(1) != mult:
                    continue
                chunk = 1
                for w, m in mult.items():
                    denom = 1
                    for part in r.k1:
                        for ww, c in part:
                            if ww == w:
                                denom *= factorial(c)
                    chunk *= Fraction(factorial(m), denom)
                total += chunk
            assert total == target, (P, lam)


def test_n_trop_base_cases():
    assert n_trop((1,), (1,)) == 1
    assert n_trop((3,), (2,)) == 6
    assert n_trop((2,), ()) == 1
    assert n_trop((), (5,)) == 1
    assert n_trop((1, 1), ()) == 0
    with pytest.raises(ValueError):
        n_trop((), ())


def test_n_trop_examples():
    assert n_trop((2,), (1, 1, 1)) == 8
    assert n_trop((1, 1), (1, 1, 1)) == 6
    assert n_trop((1, 1), (1, 1)) == 2
    assert n_trop((1, 1, 1), (1, 1, 1, 1)) == 96


def test_n_trop_normalization_guard():
    # the over-counting convention: ordered set partitions of the two equal
    # (1,1) pieces undivided gives 4 + 4 = 8 instead of 4 + 2 = 6
    assert n_trop((1, 1), (1, 1, 1), normalize_repeats=False) == 8
    assert n_trop((1, 1), (1, 1, 1)) == 6


def test_n_trop_decomposition_breakdown():
    # ((1,1),(1,1,1)): 4 from the (2,2) piece, 2 from two (1,1) pieces
    from quivermoduli.localization import admissible_decompositions

    assert set(admissible_decompositions(2, 3, 1)) == {((2, 2),), ((1, 1), (1, 1))}
    piece_22 = 2 * n_trop((1, 1), (1, 1))        # multiplicity 2 x sub-count
    assert piece_22 == 4
    assert n_trop((1, 1), (1, 1, 1)) - piece_22 == 2


def test_n_trop_side_swap_symmetry():
    cases = [((1,), (1, 1)), ((2,), (1, 1, 1)), ((1, 1), (1, 1, 1)),
             ((1, 2), (1, 1)), ((1, 1, 1), (2,))]
    for w1, w2 in cases:
        assert n_trop(w1, w2) == n_trop(w2, w1)


def test_refinements_enumeration():
    rs = refinements((2,), (1,))
    k1_options = {r.k1 for r in rs}
    assert k1_options == {(((1, 2),),), (((2, 1),),)}
    assert len(refinements((1,), (1,))) == 1
    rs3 = refinements((3,), (1,))
    assert {r.k1 for r in rs3} == {(((1, 3),),), (((1, 1), (2, 1)),), (((3, 1),),)}


def test_refinement_sums_match_parts():
    for r in refinements((3, 2), (2, 1)):
        assert r.part_sums(1) == (3, 2)
        assert r.part_sums(2) == (2, 1)


@pytest.mark.parametrize("p1,p2,chi", [
    ((2,), (1, 1, 1), 1),
    ((2,), (1, 1, 1, 1, 1), 7),
    ((1,), (1, 1), 1),
])
def test_degeneration_total(p1, p2, chi):
    assert degeneration_total(p1, p2) == chi


@pytest.mark.parametrize("p1,p2,chi", [
    ((2,), (1, 1, 1), 1),
    ((2,), (1, 1, 1, 1, 1), 7),
    ((1,), (1, 1), 1),
])
def test_mps_euler(p1, p2, chi):
    assert mps_euler(p1, p2) == chi


def test_mps_euler_contributions():
    # chi(2, 1^3) = 8 * (-1/4) + 6 * (1/2)
    contributions = {}
    for r in refinements((2,), (1, 1, 1)):
        contributions[weight_vector_of(r.k1)] = chi_trees(r)
    assert contributions == {(2,): 8, (1, 1): 6}


def test_coprime_required():
    with pytest.raises(ValueError):
        mps_euler((2,), (1, 1))
    with pytest.raises(ValueError):
        degeneration_total((2,), (1, 1))


def _bipartite(p1, p2):
    Q = Quiver.complete_bipartite(len(p1), len(p2))
    d = {}
    theta = {}
    for k, p in enumerate(p1):
        d["i%d" % (k + 1)] = p
        theta["i%d" % (k + 1)] = 1
    for k, p in enumerate(p2):
        d["j%d" % (k + 1)] = p
        theta["j%d" % (k + 1)] = 0
    return Q, d, Stability.of(theta)


def test_three_way_agreement_small():
    # tree sum, degeneration sum and the HN pipeline give the same integer
    for p1, p2 in [((1,), (1, 1)), ((2,), (1, 1, 1)), ((1, 1), (1, 1, 1)),
                   ((2, 1), (1, 1)), ((1, 1, 1), (2, 2))]:
        Q, d, stab = _bipartite(p1, p2)
        chi = euler_char(Q, stab, d)
        assert mps_euler(p1, p2) == chi
        assert degeneration_total(p1, p2) == chi


def test_eulgw_oracle_small():
    # recursion vs stable-tree count for every refinement, sizes <= 7
    for total in range(2, 8):
        for d in range(1, total):
            e = total - d
            if gcd(d, e) != 1:
                continue
            for p1 in partitions(d):
                for p2 in partitions(e):
                    for r in refinements(p1, p2):
                        w1 = weight_vector_of(r.k1)
                        w2 = weight_vector_of(r.k2)
                        assert n_trop(w1, w2) == chi_trees(r), (p1, p2, w1, w2)


def test_family_closed_form_term_by_term():
    # the curve-side closed form for the all-ones count,
    # (1/2)(binom(2n,n) + 4 binom(n,n-1) binom(2n-1,n-1)) - (1/4) 2^(2n+1),
    # matches the recursion's own decomposition: the two-(1,n)-piece
    # contribution is binom(2n,n) and the (2,2n) chain contributes
    # 4 * N((1,1),(1^(2n-1))) with N((1,1),(1^(2n-1))) = n binom(2n-1,n-1)
    from math import comb

    for n in (1, 2, 3):
        two_pieces = comb(2 * n, n)
        chain = n_trop((1, 1), (1,) * (2 * n - 1))
        assert chain == comb(n, n - 1) * comb(2 * n - 1, n - 1)
        assert n_trop((1, 1), (1,) * (2 * n + 1)) == two_pieces + 4 * chain
        closed = Fraction(two_pieces + 4 * chain, 2) - Fraction(2 ** (2 * n + 1), 4)
        assert degeneration_total((2,), (1,) * (2 * n + 1)) == closed


def test_refinements_deterministic():
    p1, p2 = (2, 1), (3,)
    assert refinements(p1, p2) == refinements(p1, p2)


def test_four_way_agreement_with_cancellation():
    # (2,2,1) | (4): the moduli space is empty, so the per-refinement
    # contributions (several of them nonzero) must cancel exactly in every
    # pipeline, including the wall-function route
    from quivermoduli.vertex import n_trop_via_factorization

    p1, p2 = (2, 2, 1), (4,)
    Q, d, stab = _bipartite(p1, p2)
    assert euler_char(Q, stab, d) == 0
    assert mps_euler(p1, p2) == 0
    assert degeneration_total(p1, p2) == 0
    assert degeneration_total(p1, p2, trop_count=n_trop_via_factorization) == 0
    assert any(chi_trees(r) for r in refinements(p1, p2))
