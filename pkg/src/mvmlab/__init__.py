"""Finite-algebra toolkit for MV-monoidal algebras, good sequences, and
the translation to unital commutative lattice-ordered monoids."""

__version__ = "0.1.0"

from .core import (AlgebraError, Congruence, Equation, FiniteAlgebra,
                   NotGenerated, Report, Term, Verdict, all_congruences,
                   all_homomorphisms, app, congruence_from_blocks,
                   congruence_join, congruence_leq, congruence_meet, const,
                   delta, equation, full_congruence, generated_congruence,
                   holds, is_congruence, is_homomorphism, light_associativity,
                   parse, parse_file, product_algebra, serialize, var,
                   write_file)
from .mvm import (MvAlgebra, MvmAlgebra, as_mvm, chain_bdl, check_mv,
                  check_mvm, corpus_algebras, find_mv_structure,
                  good_pairs, has_mv_negation, is_good_pair, lemma_suite,
                  list_corpus, load_corpus, lukasiewicz_chain,
                  lukasiewicz_mvm, mv_to_mvm, remark_algebra, sigma,
                  write_corpus)
from .goodseq import (GoodSequence, NotGoodError, check_goodseq_laws,
                      enumerate_good_sequences, good_pair_graph,
                      gs_decompose_split, gs_join, gs_leq, gs_make,
                      gs_map, gs_meet, gs_ominus1, gs_one, gs_scalar,
                      gs_singleton, gs_sum, gs_zero)
from .equivalence import (GoodSeqPUlm, Iso, MaterializedInterval,
                          PositiveConePUlm, ScaledIntUlm,
                          ScaledNatPUlm, TranslationUlm, UlmElement,
                          derived_signature_report, eps0, eps0_eta0_report,
                          eps1, eps1_inverse, eta0, eta1, gamma, gamma_xi_iso,
                          naturality_report, positive_cone, pulm_axiom_report,
                          pulm_lemma_suite, roundtrip_report, t_build,
                          u_interval, ulm_axiom_report, verified_iso, xi)
from .structure import (SIResult, TwoQuotient, is_subdirectly_irreducible,
                        si_theorem_suite, sim_bot, sim_top, theta_star,
                        two_quotients)
from .search import (EnumerationOutcome, SearchOutcome, SearchProblem,
                     are_isomorphic, enumerate_mvms, find_all_models,
                     find_model, independence_suite, parse_equation_text,
                     parse_problem_file, strip_constants)

__all__ = [
    "AlgebraError", "Congruence", "Equation", "FiniteAlgebra",
    "NotGenerated", "Report", "Term", "Verdict", "all_congruences",
    "all_homomorphisms", "app", "congruence_from_blocks",
    "congruence_join", "congruence_leq", "congruence_meet", "const", "delta",
    "equation", "full_congruence", "generated_congruence", "holds",
    "is_congruence", "is_homomorphism", "light_associativity", "parse",
    "parse_file", "product_algebra", "serialize", "var", "write_file",
    "MvAlgebra", "MvmAlgebra", "as_mvm", "chain_bdl", "check_mv",
    "check_mvm", "corpus_algebras", "find_mv_structure", "good_pairs",
    "has_mv_negation", "is_good_pair",
    "lemma_suite", "list_corpus", "load_corpus", "lukasiewicz_chain",
    "lukasiewicz_mvm", "mv_to_mvm", "remark_algebra", "sigma", "write_corpus",
    "GoodSequence", "NotGoodError", "check_goodseq_laws",
    "enumerate_good_sequences", "good_pair_graph", "gs_decompose_split",
    "gs_join", "gs_leq", "gs_make", "gs_map", "gs_meet", "gs_ominus1",
    "gs_one", "gs_scalar", "gs_singleton", "gs_sum", "gs_zero",
    "GoodSeqPUlm", "PositiveConePUlm", "ScaledIntUlm", "ScaledNatPUlm",
    "TranslationUlm", "UlmElement", "eps0", "eps1", "eps1_inverse", "eta0",
    "eta1", "gamma", "gamma_xi_iso", "naturality_report", "positive_cone",
    "Iso", "MaterializedInterval", "verified_iso",
    "derived_signature_report", "eps0_eta0_report",
    "pulm_axiom_report", "pulm_lemma_suite", "roundtrip_report", "t_build",
    "u_interval", "ulm_axiom_report", "xi",
    "SIResult", "TwoQuotient", "is_subdirectly_irreducible",
    "si_theorem_suite", "sim_bot", "sim_top", "theta_star", "two_quotients",
    "SearchOutcome", "SearchProblem", "are_isomorphic", "enumerate_mvms",
    "find_all_models", "find_model", "independence_suite",
    "parse_equation_text", "parse_problem_file", "strip_constants", "EnumerationOutcome",
]
