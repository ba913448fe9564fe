import pytest

from mvmlab import (all_congruences, check_mvm, congruence_leq, delta,
                    enumerate_mvms, full_congruence, is_subdirectly_irreducible,
                    lukasiewicz_mvm, product_algebra, remark_algebra,
                    si_theorem_suite, sim_bot, sim_top, theta_star,
                    two_quotients)
from mvmlab.core import FAIL, INCONCLUSIVE, PASS


@pytest.fixture(scope="module")
def diamond():
    two = lukasiewicz_mvm(2).base
    return check_mvm(product_algebra(two, two, name="diamond")).algebra


# ------------------------------------------------------------
# two-element quotients
# ------------------------------------------------------------

def test_two_quotient_counts(l3, diamond):
    assert [sorted(t.upper) for t in two_quotients(l3)] == [[1, 2], [2]]
    assert [sorted(t.upper) for t in two_quotients(lukasiewicz_mvm(2))] == [[1]]
    assert two_quotients(lukasiewicz_mvm(1)) == []
    assert [sorted(t.upper) for t in two_quotients(diamond)] \
        == [[1, 3], [2, 3]]


def test_two_quotient_sides(l3):
    tq = two_quotients(l3)[1]
    assert sorted(tq.upper) == [2]
    assert tq.side(0) == tq.side(1) != tq.side(2)


def test_chain_quotients_scale_with_size():
    # an n-chain has n-1 prime filters
    for n in range(2, 7):
        assert len(two_quotients(lukasiewicz_mvm(n))) == n - 1


# ------------------------------------------------------------
# theta-star
# ------------------------------------------------------------

def test_theta_star_on_three_chain(l3):
    for tq in two_quotients(l3):
        assert theta_star(l3, tq).is_delta()


def test_theta_star_on_remark():
    r = remark_algebra()
    by_upper = {tuple(sorted(t.upper)): t for t in two_quotients(r)}
    assert theta_star(r, by_upper[(2,)]).blocks() == ((0, 1), (2,))
    assert theta_star(r, by_upper[(1, 2)]).is_delta()


def _max_contained_congruence(base, tq):
    contained = [c for c in all_congruences(base)
                 if not any(c.related(a, b)
                            for a in tq.lower for b in tq.upper)]
    best = contained[0]
    for c in contained[1:]:
        if congruence_leq(best, c):
            best = c
    assert all(congruence_leq(c, best) for c in contained)
    return best


def test_theta_star_is_the_maximum_contained_congruence(corpus, diamond):
    algebras = [corpus[f"lukasiewicz_{n}"] for n in range(1, 5)]
    algebras += [corpus["remark_3elem"], diamond.base]
    for base in algebras:
        m = check_mvm(base).algebra
        for tq in two_quotients(m):
            assert theta_star(m, tq) == _max_contained_congruence(base, tq)


# ------------------------------------------------------------
# collapsing an element to an end
# ------------------------------------------------------------

def test_sim_bot_and_sim_top_fixed_points(corpus):
    for alg in corpus.values():
        if alg.size > 4:
            continue
        m = check_mvm(alg).algebra
        assert sim_bot(m, m.zero) == delta(alg)
        assert sim_top(m, m.one) == delta(alg)


def test_sim_bot_collapses_three_chain(l3):
    assert sim_bot(l3, 1) == full_congruence(l3.base)
    assert sim_top(l3, 1) == full_congruence(l3.base)


def test_sim_bot_on_remark_idempotent():
    r = remark_algebra()
    assert sim_bot(r, 1).blocks() == ((0, 1), (2,))
    assert sim_top(r, 1) == full_congruence(r.base)


def test_sim_runs_everywhere_without_raising(corpus):
    # the closed form carries internal theorem cross-checks
    for alg in corpus.values():
        if alg.size > 4:
            continue
        m = check_mvm(alg).algebra
        for x in m.elements:
            sim_bot(m, x)
            sim_top(m, x)


# ------------------------------------------------------------
# subdirect irreducibility
# ------------------------------------------------------------

def test_si_verdicts(l3, diamond):
    res = is_subdirectly_irreducible(l3)
    assert res.si and res.monolith == full_congruence(l3.base)
    res = is_subdirectly_irreducible(remark_algebra())
    assert res.si and res.monolith.blocks() == ((0, 1), (2,))
    assert not is_subdirectly_irreducible(diamond).si
    assert not is_subdirectly_irreducible(lukasiewicz_mvm(1)).si
    res = is_subdirectly_irreducible(lukasiewicz_mvm(2))
    assert res.si and res.monolith.block_count == 1


def test_si_suite_on_si_algebra(l3):
    rep, res = si_theorem_suite(l3)
    assert res.si
    assert [e.status for e in rep.entries] == [PASS] * 4
    assert "monolith has 1 blocks" in rep.entries[0].detail


def test_si_suite_on_non_si_algebra(diamond):
    rep, res = si_theorem_suite(diamond)
    assert not res.si
    assert [e.status for e in rep.entries] \
        == [PASS, INCONCLUSIVE, INCONCLUSIVE, INCONCLUSIVE]
    assert rep.ok and not rep.all_pass


def test_si_suite_over_all_size_three_models():
    si_names = []
    for m in enumerate_mvms(3):
        rep, res = si_theorem_suite(m)
        assert not rep.failures(), rep.render()
        if res.si:
            si_names.append(m.name)
    assert len(si_names) == 3


def test_theta_star_can_reach_the_monolith():
    # on the remark algebra the filter {2} recovers exactly the monolith
    r = remark_algebra()
    mono = is_subdirectly_irreducible(r).monolith
    stars = [theta_star(r, tq) for tq in two_quotients(r)]
    assert mono in stars
