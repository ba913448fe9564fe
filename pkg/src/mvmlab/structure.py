"""Congruence structure of MVMs.

Two-element lattice quotients correspond to prime filters of the
underlying lattice; each induces a largest congruence of the full
algebra separating the two classes.  Collapsing an element to 0 or to 1
generates a congruence with a closed-form description through additive
or multiplicative iterates.  Together these give the subdirectly
irreducible members a concrete shape: totally ordered algebras in which
every pair sums to 1 or multiplies to 0.

Everything claimed in closed form is re-checked against the brute-force
congruence machinery in core before being returned.
"""

from dataclasses import dataclass
from itertools import combinations

from .core import (Congruence, Report, all_congruences,
                   congruence_from_blocks, congruence_leq, congruence_meet,
                   generated_congruence, is_congruence, PASS, FAIL,
                   INCONCLUSIVE)
from .mvm import MvmAlgebra, as_mvm


def _carrier(m):
    if isinstance(m, MvmAlgebra):
        return m
    return as_mvm(m)


# ============================================================
# Two-element quotients and prime filters
# ============================================================

@dataclass(frozen=True)
class TwoQuotient:
    """A two-class partition {lower, upper} whose quotient keeps the
    lattice order: upper is a prime filter."""
    lower: frozenset
    upper: frozenset

    def side(self, x):
        return 1 if x in self.upper else 0


def _is_prime_filter(m, fset):
    """Nonempty proper up-closed meet-closed subset with prime splits."""
    if not fset or len(fset) == len(list(m.elements)):
        return False
    for a in fset:
        for b in m.elements:
            if m.leq(a, b) and b not in fset:
                return False
    for a in fset:
        for b in fset:
            if m.meet(a, b) not in fset:
                return False
    for a in m.elements:
        for b in m.elements:
            if m.join(a, b) in fset and a not in fset and b not in fset:
                return False
    return True


def two_quotients(m):
    """All two-element lattice quotients, as prime filters.

    A partition into two blocks is a lattice congruence with a two
    element chain quotient exactly when the upper block is a prime
    filter, so these are found by direct subset enumeration.
    """
    m = _carrier(m)
    elems = list(m.elements)
    out = []
    for r in range(1, len(elems)):
        for subset in combinations(elems, r):
            fset = frozenset(subset)
            if _is_prime_filter(m, fset):
                out.append(TwoQuotient(frozenset(elems) - fset, fset))
    out.sort(key=lambda tq: sorted(tq.upper))
    return out


def theta_star(m, tq):
    """Largest congruence whose quotient map refines the two-quotient:
    a and b are related when every translate a (+) x, b (+) x lands on
    the same side of the filter, and likewise for (.).

    The relation is checked to be a congruence and to separate the two
    blocks; on small carriers maximality is re-checked against the full
    congruence lattice.
    """
    m = _carrier(m)
    elems = list(m.elements)
    side = tq.side

    def related(a, b):
        for x in elems:
            if side(m.oplus(a, x)) != side(m.oplus(b, x)):
                return False
            if side(m.odot(a, x)) != side(m.odot(b, x)):
                return False
        return True

    blocks = []
    seen = set()
    for a in elems:
        if a in seen:
            continue
        blk = [b for b in elems if related(a, b)]
        seen.update(blk)
        blocks.append(blk)
    cong = congruence_from_blocks(m.base, blocks)
    if not is_congruence(m.base, cong):
        raise RuntimeError("theta-star relation is not a congruence "
                           "(theorem violation)")
    for a in tq.lower:
        for b in tq.upper:
            if cong.related(a, b):
                raise RuntimeError("theta-star merges the two quotient "
                                   "classes (theorem violation)")
    if m.size <= 6:
        for other in all_congruences(m.base):
            crosses = any(other.related(a, b)
                          for a in tq.lower for b in tq.upper)
            if not crosses and not congruence_leq(other, cong):
                raise RuntimeError("theta-star is not the greatest "
                                   "congruence inside the quotient "
                                   "(theorem violation)")
    return cong


# ============================================================
# Congruences generated by collapsing to an end
# ============================================================

def _iterate(m, step, x):
    """Orbit x, step(x), step(step(x)), ... to its stable value."""
    seen = [x]
    for _ in range(m.size + 1):
        nxt = step(seen[-1])
        if nxt == seen[-1]:
            return nxt
        seen.append(nxt)
    raise RuntimeError("iterates failed to stabilise within the carrier "
                       "size (theorem violation)")


def sim_bot(m, x):
    """Congruence generated by x ~ 0, in closed form: a ~ b when each is
    below the other plus the stable additive iterate of x.  Checked
    against the generated congruence."""
    m = _carrier(m)
    t = _iterate(m, lambda s: m.oplus(s, x), m.zero)

    def related(a, b):
        return m.leq(a, m.oplus(b, t)) and m.leq(b, m.oplus(a, t))

    cong = _relation_to_congruence(m, related, "sim-bot")
    ref = generated_congruence(m.base, [(x, m.zero)])
    if cong != ref:
        raise RuntimeError("sim-bot disagrees with the generated "
                           "congruence (theorem violation)")
    return cong


def sim_top(m, x):
    """Congruence generated by x ~ 1, dually through multiplicative
    iterates.  Checked against the generated congruence."""
    m = _carrier(m)
    t = _iterate(m, lambda s: m.odot(s, x), m.one)

    def related(a, b):
        return m.leq(m.odot(b, t), a) and m.leq(m.odot(a, t), b)

    cong = _relation_to_congruence(m, related, "sim-top")
    ref = generated_congruence(m.base, [(x, m.one)])
    if cong != ref:
        raise RuntimeError("sim-top disagrees with the generated "
                           "congruence (theorem violation)")
    return cong


def _relation_to_congruence(m, related, label):
    elems = list(m.elements)
    for a in elems:
        if not related(a, a):
            raise RuntimeError(f"{label} is not reflexive")
    blocks = []
    seen = set()
    for a in elems:
        if a in seen:
            continue
        blk = [b for b in elems if related(a, b)]
        for b in blk:
            for c in elems:
                if related(b, c) != related(a, c):
                    raise RuntimeError(
                        f"{label} is not transitive (theorem violation)")
        seen.update(blk)
        blocks.append(blk)
    cong = congruence_from_blocks(m.base, blocks)
    if not is_congruence(m.base, cong):
        raise RuntimeError(f"{label} is not a congruence "
                           "(theorem violation)")
    return cong


# ============================================================
# Subdirect irreducibility
# ============================================================

@dataclass(frozen=True)
class SIResult:
    si: bool
    monolith: Congruence = None


def is_subdirectly_irreducible(m):
    """SI means the non-trivial congruences have a least element (the
    monolith).  Decided from the full congruence lattice."""
    m = _carrier(m)
    if m.size == 1:
        return SIResult(False)
    nontrivial = [c for c in all_congruences(m.base) if not c.is_delta()]
    bottom = nontrivial[0]
    for c in nontrivial[1:]:
        bottom = congruence_meet(bottom, c)
    if bottom.is_delta():
        return SIResult(False)
    return SIResult(True, bottom)


def si_theorem_suite(m, max_len=4):
    """What the structure theory promises for an SI algebra: it is
    totally ordered, every pair satisfies x (+) y = 1 or x (.) y = 0,
    and every good sequence is ones followed by at most one other entry.
    For a non-SI algebra the checks are recorded as not applicable
    rather than silently passing."""
    from .goodseq import enumerate_good_sequences
    m = _carrier(m)
    report = Report(f"si-suite {m.name}")
    res = is_subdirectly_irreducible(m)
    if not res.si:
        report.add("subdirectly-irreducible", PASS, "no: monolith absent")
        report.add("totally-ordered", INCONCLUSIVE, "not applicable")
        report.add("good-pair-law", INCONCLUSIVE, "not applicable")
        report.add("sequence-shape", INCONCLUSIVE, "not applicable")
        return report, res
    report.add("subdirectly-irreducible", PASS,
               f"yes, monolith has {res.monolith.block_count} blocks")
    total = all(m.leq(a, b) or m.leq(b, a)
                for a in m.elements for b in m.elements)
    report.add("totally-ordered", PASS if total else FAIL)
    law = all(m.oplus(a, b) == m.one or m.odot(a, b) == m.zero
              for a in m.elements for b in m.elements)
    report.add("good-pair-law", PASS if law else FAIL)
    shaped = True
    for s in enumerate_good_sequences(m, max_len=max_len):
        entries = list(s.entries)
        while entries and entries[0] == m.one:
            entries.pop(0)
        if len(entries) > 1:
            shaped = False
            break
    report.add("sequence-shape", PASS if shaped else FAIL,
               f"lengths up to {max_len}")
    return report, res
