import pytest

from mvmlab import (AlgebraError, GoodSeqPUlm, PositiveConePUlm, ScaledIntUlm,
                    ScaledNatPUlm, check_mvm, derived_signature_report,
                    enumerate_good_sequences, eps0, eps0_eta0_report, eps1,
                    eps1_inverse, eta0, eta1, gamma, gamma_xi_iso,
                    lukasiewicz_mvm, naturality_report, pulm_axiom_report,
                    pulm_lemma_suite, remark_algebra, roundtrip_report,
                    t_build, u_interval, ulm_axiom_report, verified_iso, xi)


# ------------------------------------------------------------
# positive-cone and full axiom suites on the concrete models
# ------------------------------------------------------------

def test_goodseq_cone_axioms(l3):
    rep = pulm_axiom_report(GoodSeqPUlm(l3), bound=3)
    assert rep.all_pass, rep.render()


@pytest.mark.parametrize("m", [1, 2, 3])
def test_scaled_nat_cone_axioms(m):
    rep = pulm_axiom_report(ScaledNatPUlm(m), bound=3)
    assert rep.all_pass, rep.render()


def test_positive_cone_of_integers_axioms():
    rep = pulm_axiom_report(PositiveConePUlm(ScaledIntUlm(2)), bound=3)
    assert rep.all_pass, rep.render()


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_scaled_int_ulm_axioms(m):
    rep = ulm_axiom_report(ScaledIntUlm(m), bound=3)
    assert rep.all_pass, rep.render()


def test_translation_of_nat_cone_axioms():
    rep = ulm_axiom_report(t_build(ScaledNatPUlm(2)), bound=2)
    assert rep.all_pass, rep.render()


def test_pulm_lemma_suite(l3):
    rep = pulm_lemma_suite(GoodSeqPUlm(l3), bound=3)
    assert rep.all_pass, rep.render()


def test_derived_signature_report():
    rep = derived_signature_report()
    assert rep.all_pass, rep.render()


# ------------------------------------------------------------
# the translation construction on a transparent model
# ------------------------------------------------------------

def test_canon_strips_units():
    t = t_build(ScaledNatPUlm(2))
    assert t.canon(5, 2) == t.canon(1, 0)
    assert t.canon(1, 2).offset == 2       # nothing left to strip
    assert t.zero == t.canon(0, 0)
    assert t.minus_one == t.canon(0, 1)


def test_sim_agrees_with_canonical_equality():
    t = t_build(ScaledNatPUlm(2))
    a, b = t.canon(5, 2), t.canon(1, 0)
    assert t.sim(a, b)
    assert not t.sim(t.canon(1, 1), t.canon(1, 0))


def test_translation_of_naturals_is_the_integers():
    # [x, n] in T(N_2) behaves as x - 2n in Z_2
    t = t_build(ScaledNatPUlm(2))
    z = ScaledIntUlm(2)
    for x in range(7):
        for n in range(3):
            assert eps0(z, t.canon(x, n)) == x - 2 * n
    a, b = t.canon(1, 0), t.canon(0, 1)
    assert eps0(z, t.add(a, b)) == -1
    assert eps0(z, t.join(a, b)) == 1
    assert eps0(z, t.meet(a, b)) == -2


def test_eta0_eps0_inverse_on_positive_cone():
    z = ScaledIntUlm(2)
    p = PositiveConePUlm(z)
    for x in range(0, 9):
        assert eps0(z, eta0(p, x)) == x


@pytest.mark.parametrize("m", [1, 2])
def test_eps0_eta0_report(m):
    rep = eps0_eta0_report(ScaledIntUlm(m), bound=2)
    assert rep.all_pass, rep.render()


# ------------------------------------------------------------
# unit intervals are the chains
# ------------------------------------------------------------

@pytest.mark.parametrize("m", [1, 2, 3])
def test_u_interval_of_naturals_is_a_chain(m):
    assert u_interval(ScaledNatPUlm(m)).mvm.base == lukasiewicz_mvm(m + 1).base


@pytest.mark.parametrize("m", [1, 2, 3])
def test_gamma_of_integers_is_a_chain(m):
    assert gamma(ScaledIntUlm(m)).mvm.base == lukasiewicz_mvm(m + 1).base


def test_gamma_equals_u_interval_of_positive_cone():
    z = ScaledIntUlm(3)
    assert gamma(z).mvm.base == u_interval(PositiveConePUlm(z)).mvm.base


# ------------------------------------------------------------
# eta1 and the eps1 pair
# ------------------------------------------------------------

def test_eta1_is_an_isomorphism(corpus):
    for alg in corpus.values():
        m = check_mvm(alg).algebra
        iso = eta1(m)
        assert sorted(iso.mapping) == list(range(m.size))


def test_eps1_inverse_on_naturals():
    p = ScaledNatPUlm(2)
    assert eps1_inverse(p, 5).entries == (2, 2, 1)
    assert eps1_inverse(p, 0).is_zero()
    assert eps1(p, eps1_inverse(p, 5)) == 5


def test_eps1_round_trips(l3):
    p = GoodSeqPUlm(l3)
    interval = u_interval(p)
    for s in enumerate_good_sequences(interval.mvm, 4):
        assert eps1_inverse(p, eps1(p, s, interval), interval) == s
    for x in p.sample_elements(4):
        assert eps1(p, eps1_inverse(p, x, interval), interval) == x


def test_roundtrip_report(l3):
    rep = roundtrip_report(l3, max_len=4)
    assert rep.all_pass, rep.render()
    rep = roundtrip_report(remark_algebra(), max_len=4)
    assert rep.all_pass, rep.render()


def test_gamma_xi_iso(l3):
    iso = gamma_xi_iso(l3)
    assert sorted(iso.mapping) == [0, 1, 2]


# ------------------------------------------------------------
# verified_iso guards
# ------------------------------------------------------------

def test_verified_iso_rejects_non_bijection(l3):
    with pytest.raises(RuntimeError, match="bijection"):
        verified_iso(l3.base, l3.base, (0, 0, 0))


def test_verified_iso_rejects_non_homomorphism(l3):
    with pytest.raises(RuntimeError, match="homomorphism"):
        verified_iso(l3.base, l3.base, (0, 2, 1))


# ------------------------------------------------------------
# naturality
# ------------------------------------------------------------

def test_naturality_doubling_map():
    rep = naturality_report((0, 3), lukasiewicz_mvm(2), lukasiewicz_mvm(4))
    assert rep.all_pass, rep.render()


def test_naturality_remark_endomorphism():
    r = remark_algebra()
    rep = naturality_report((0, 0, 2), r, r)
    assert rep.all_pass, rep.render()


def test_naturality_rejects_non_homomorphism(l3):
    with pytest.raises(AlgebraError, match="not a homomorphism"):
        naturality_report((0, 1, 1), l3, l3)


# ------------------------------------------------------------
# the composite functor
# ------------------------------------------------------------

def test_xi_unit_interval_recovers_the_algebra(l3):
    t = xi(l3)
    g = gamma(t)
    assert g.mvm.size == 3
    assert gamma_xi_iso(l3).target == g.mvm.base
