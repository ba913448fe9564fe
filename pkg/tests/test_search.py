import itertools

import pytest

from mvmlab import (AlgebraError, FiniteAlgebra, SearchProblem,
                    are_isomorphic, chain_bdl, check_mvm, enumerate_mvms,
                    find_all_models, find_model, holds, independence_suite,
                    lukasiewicz_mvm, parse_equation_text, parse_problem_file,
                    product_algebra, remark_algebra, strip_constants)
from mvmlab.core import INCONCLUSIVE, PASS, app, const, equation, var
from mvmlab.mvm import ALL_AXIOM_EQUATIONS
from mvmlab.search import INDEPENDENCE_GROUPS

AXIOM_EQS = tuple(eq for _, eq in ALL_AXIOM_EQUATIONS)


def _remark_problem(symmetry_breaking=True):
    fresh = ("a",)
    satisfy = AXIOM_EQS + (
        parse_equation_text("a (+) a = a", fresh),
        parse_equation_text("a (.) a = 0", fresh),
    )
    violate = (parse_equation_text("a = 0", fresh),
               parse_equation_text("a = 1", fresh))
    return SearchProblem(satisfy=satisfy, violate=violate, sizes=(1, 3),
                         symmetry_breaking=symmetry_breaking, fresh=fresh)


# ------------------------------------------------------------
# problem construction
# ------------------------------------------------------------

def test_problem_wraps_single_violation():
    eq = parse_equation_text("x = 0")
    p = SearchProblem(satisfy=(), violate=eq)
    assert p.violate == (eq,)


def test_problem_rejects_bad_size_range():
    with pytest.raises(AlgebraError, match="size range"):
        SearchProblem(satisfy=(), sizes=(0, 2))
    with pytest.raises(AlgebraError, match="size range"):
        SearchProblem(satisfy=(), sizes=(3, 2))


# ------------------------------------------------------------
# basic searches
# ------------------------------------------------------------

def test_two_element_model_is_the_chain():
    out = find_all_models(SearchProblem(satisfy=AXIOM_EQS, sizes=(2, 2)))
    assert out.complete
    assert len(out.models) == 1
    assert out.models[0] == lukasiewicz_mvm(2).base


def test_idempotent_nilpotent_witness_is_the_remark_algebra():
    out = find_model(_remark_problem())
    assert out.status == "witness"
    model = out.model
    assert model.size == 3
    assert out.stats.per_size[1] == "exhausted"
    assert out.stats.per_size[2] == "exhausted"
    assert out.stats.per_size[3] == "witness"
    assert are_isomorphic(strip_constants(model), remark_algebra())


def test_witness_satisfies_and_violates_as_requested():
    problem = _remark_problem()
    model = find_model(problem).model
    for eq in problem.satisfy:
        assert holds(model, eq)
    for eq in problem.violate:
        assert not holds(model, eq)


def test_search_is_deterministic():
    a = find_model(_remark_problem()).model
    b = find_model(_remark_problem()).model
    assert a == b and a.consts == b.consts


def test_symmetry_breaking_preserves_satisfiability():
    sat_problems = [
        SearchProblem(satisfy=AXIOM_EQS, sizes=(2, 2)),
        _remark_problem(),
    ]
    for p in sat_problems:
        on = find_model(p)
        off = find_model(SearchProblem(p.satisfy, p.violate, p.sizes,
                                       False, p.fresh))
        assert on.status == off.status == "witness"
    # all elements idempotent for (+) and x (+) x = 1 has no 2..3 model
    unsat = SearchProblem(
        satisfy=AXIOM_EQS + (parse_equation_text("x (+) x = x"),),
        violate=parse_equation_text("x \\/ y = y \\/ x"),
        sizes=(2, 3))
    for flag in (True, False):
        out = find_model(SearchProblem(unsat.satisfy, unsat.violate,
                                       unsat.sizes, flag))
        assert out.status == "exhausted"


def test_node_limit_reports_bound_hit():
    out = find_model(SearchProblem(satisfy=AXIOM_EQS, sizes=(3, 3)),
                     node_limit=1)
    assert out.status == "bound_hit"
    assert out.model is None


# ------------------------------------------------------------
# enumeration
# ------------------------------------------------------------

def test_enumerate_size_one():
    models = enumerate_mvms(1)
    assert len(models) == 1 and models[0].size == 1


def _naive_size_two_mvms():
    """Direct filter over every table assignment, unit laws first."""
    found = []
    tables = list(itertools.product(range(2), repeat=4))
    for zero in range(2):
        one = 1 - zero
        plus_ok = [t for t in tables
                   if all(t[zero * 2 + x] == x and t[x * 2 + zero] == x
                          for x in range(2))]
        dot_ok = [t for t in tables
                  if all(t[one * 2 + x] == x and t[x * 2 + one] == x
                         for x in range(2))]
        for op, od, jn, mt in itertools.product(plus_ok, dot_ok,
                                                tables, tables):
            alg = FiniteAlgebra(
                2, {"oplus": (2, op), "odot": (2, od),
                    "join": (2, jn), "meet": (2, mt)},
                {"zero": zero, "one": one})
            if check_mvm(alg).ok:
                found.append(alg)
    return found


def test_enumerate_size_two_against_naive_filter():
    naive = _naive_size_two_mvms()
    assert len(naive) == 2                  # the chain, both labelings
    assert are_isomorphic(naive[0], naive[1])
    reps = enumerate_mvms(2)
    assert len(reps) == 1
    assert all(are_isomorphic(alg, reps[0]) for alg in naive)


def test_enumerate_size_three():
    reps = enumerate_mvms(3)
    assert len(reps) == 4
    matched = {name: False
               for name in ("chain", "chain-bdl", "remark")}
    for rep in reps:
        if are_isomorphic(rep, lukasiewicz_mvm(3)):
            matched["chain"] = True
        if are_isomorphic(rep, chain_bdl(3)):
            matched["chain-bdl"] = True
        if are_isomorphic(rep, remark_algebra()):
            matched["remark"] = True
    assert all(matched.values())
    assert not are_isomorphic(lukasiewicz_mvm(3), remark_algebra())


def test_enumerate_guard(monkeypatch):
    with pytest.raises(AlgebraError, match="guard"):
        enumerate_mvms(5)
    monkeypatch.setenv("MVMLAB_SIZE_GUARD", "2")
    with pytest.raises(AlgebraError, match="guard"):
        enumerate_mvms(3)


# ------------------------------------------------------------
# isomorphism testing
# ------------------------------------------------------------

def test_are_isomorphic_accepts_relabeling(l3):
    # push the chain through the permutation 0 -> 2 -> 1 -> 0
    perm = (2, 0, 1)
    inv = (1, 2, 0)
    base = l3.base

    def tab(name):
        return tuple(perm[base.apply(name, inv[a], inv[b])]
                     for a in range(3) for b in range(3))

    shuffled = FiniteAlgebra(
        3, {name: (2, tab(name)) for name in base.ops},
        {c: perm[v] for c, v in base.consts.items()}, name="shuffled")
    assert are_isomorphic(base, shuffled)


def test_are_isomorphic_rejects_different_algebras(l3):
    assert not are_isomorphic(l3, chain_bdl(3))
    two = lukasiewicz_mvm(2).base
    assert not are_isomorphic(lukasiewicz_mvm(4),
                              product_algebra(two, two))


def test_are_isomorphic_rejects_size_mismatch(l3):
    assert not are_isomorphic(l3, lukasiewicz_mvm(2))


# ------------------------------------------------------------
# independence machinery
# ------------------------------------------------------------

def test_independence_group_inventory():
    labels = [lab for lab, _ in INDEPENDENCE_GROUPS]
    assert len(labels) == 15
    assert labels == sorted(labels)
    counts = [len(eqs) for _, eqs in INDEPENDENCE_GROUPS]
    assert counts == [6, 4, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2]


def test_independence_degenerate_size_range():
    report, witnesses = independence_suite(sizes=(1, 1),
                                           time_limit_per_item=10.0)
    assert witnesses == {}
    assert all(e.status == INCONCLUSIVE for e in report.entries)
    assert "witnesses: 0/15" in report.footer


def test_independence_finds_oplus_unit_witness():
    # drop the (+) unit laws: everything else has a small countermodel
    report, witnesses = independence_suite(sizes=(2, 2),
                                           time_limit_per_item=30.0)
    assert "07-oplus-unit" in witnesses
    entry = {e.name: e for e in report.entries}["07-oplus-unit"]
    assert entry.status == PASS and "re-verified" in entry.detail
    model = witnesses["07-oplus-unit"]
    groups = dict(INDEPENDENCE_GROUPS)
    assert not holds(model, groups["07-oplus-unit"][0])
    for label, eqs in INDEPENDENCE_GROUPS:
        if label != "07-oplus-unit":
            for eq in eqs:
                assert holds(model, eq)


# ------------------------------------------------------------
# equation syntax
# ------------------------------------------------------------

def test_parse_equation_basics():
    x, y = var(0), var(1)
    assert parse_equation_text("x (+) y = y (+) x") \
        == equation(app("oplus", x, y), app("oplus", y, x))
    assert parse_equation_text("(x (.) y) /\\ 0 = 0") \
        == equation(app("meet", app("odot", x, y), const("zero")),
                    const("zero"), 2)


def test_parse_equation_fresh_names_become_constants():
    eq = parse_equation_text("a (+) x = 1", fresh=("a",))
    assert eq == equation(app("oplus", const("a"), var(0)),
                          const("one"), 1)


def test_parse_equation_errors():
    with pytest.raises(AlgebraError, match="expected '='"):
        parse_equation_text("x (+) y")
    with pytest.raises(AlgebraError, match="trailing"):
        parse_equation_text("x = y z")
    with pytest.raises(AlgebraError, match="bad character"):
        parse_equation_text("x + y = y")
    with pytest.raises(AlgebraError, match="closing"):
        parse_equation_text("(x (+) y = y")


def test_parse_problem_file(tmp_path):
    path = tmp_path / "problem.eq"
    path.write_text(
        "# idempotent searched constant\n"
        "fresh a\n"
        "a (+) a = a\n"
        "x \\/ y = y \\/ x   # a comment\n"
        "\n")
    eqs, fresh = parse_problem_file(str(path))
    assert fresh == ("a",)
    assert len(eqs) == 2
    assert eqs[0] == equation(app("oplus", const("a"), const("a")),
                              const("a"), 0)


def test_parse_problem_file_missing(tmp_path):
    with pytest.raises(AlgebraError, match="cannot read"):
        parse_problem_file(str(tmp_path / "absent.eq"))
