"""The equivalence machinery.

Positive unital l-monoids (interface PUlm) and unital commutative
l-monoids (interface Ulm) are infinite for any nontrivial carrier, so
they are realized as lazy element domains, never materialized:

  GoodSeqPUlm(A)    good sequences over a verified MVM
  ScaledNatPUlm(m)  naturals k read as k/m
  TranslationUlm(P) classes [x, n] of (P x N)/~ with (x,n) ~ (y,m)
                    iff x + m = y + n, in canonical form
  ScaledIntUlm(m)   integers k read as k/m
  PositiveConePUlm(U)  the nonnegative part of a Ulm, with
                    x ominus 1 = (x - 1) join 0

Only unit intervals are materialized, as FiniteAlgebra tables that must
pass check_mvm.  On top: the four maps eta0, eps0, eta1, eps1, the
composite xi = T after GS, and report suites for the axiom systems,
the lemma stock, and naturality.
"""

from dataclasses import dataclass, field

from .core import FAIL, PASS, AlgebraError, Report, is_homomorphism
from .mvm import MVM_CONSTS, MVM_OPS, FiniteAlgebra, MvmAlgebra, as_mvm
from .goodseq import (GoodSequence, enumerate_good_sequences, gs_join,
                      gs_make, gs_meet, gs_one, gs_ominus1, gs_sum, gs_zero)


# ============================================================
# P-ULM realizations
# ============================================================

class GoodSeqPUlm:
    """Good sequences over a verified MVM as a positive cone."""

    def __init__(self, mvm):
        self.mvm = mvm
        self.name = f"GS_{mvm.name}"
        self.zero = gs_zero(mvm)
        self.one = gs_one(mvm)

    def add(self, a, b):
        return gs_sum(a, b)

    def join(self, a, b):
        return gs_join(a, b)

    def meet(self, a, b):
        return gs_meet(a, b)

    def ominus1(self, a):
        return gs_ominus1(a)

    def leq(self, a, b):
        return self.join(a, b) == b

    def try_strip_one(self, a):
        # a = y + unit exactly when the unit sequence was prepended,
        # so strippable means first entry is the top element
        if a.entries and a.entries[0] == self.mvm.one:
            return GoodSequence(a.entries[1:], self.mvm)
        if self.one.is_zero():
            return a
        return None

    def unit_interval_elements(self):
        # indexed by the carrier: position x holds the singleton (x),
        # with (0) identified with the zero sequence
        out = []
        for x in self.mvm.elements:
            out.append(self.zero if x == self.mvm.zero
                       else GoodSequence((x,), self.mvm))
        return out

    def sample_elements(self, bound):
        return enumerate_good_sequences(self.mvm, bound)

    def p4_bound(self, a):
        return len(a.entries)

    def sort_key(self, a):
        return (len(a.entries), a.entries)


class ScaledNatPUlm:
    """Naturals k read as k/m; the positive cone of the scaled integers."""

    def __init__(self, m):
        if m < 1:
            raise AlgebraError("denominator must be >= 1")
        self.m = m
        self.name = f"nat_{m}"
        self.zero = 0
        self.one = m

    def add(self, a, b):
        return a + b

    def join(self, a, b):
        return max(a, b)

    def meet(self, a, b):
        return min(a, b)

    def ominus1(self, a):
        return max(a - self.m, 0)

    def leq(self, a, b):
        return a <= b

    def try_strip_one(self, a):
        return a - self.m if a >= self.m else None

    def unit_interval_elements(self):
        return list(range(self.m + 1))

    def sample_elements(self, bound):
        return list(range(bound * self.m + 1))

    def p4_bound(self, a):
        return -(-a // self.m)

    def sort_key(self, a):
        return a


# ============================================================
# ULM realizations
# ============================================================

@dataclass(frozen=True)
class UlmElement:
    """The class [base, offset] of the translation completion."""
    base: object
    offset: int
    ulm: object = field(compare=False, repr=False, default=None)


def add_units(p, x, n):
    for _ in range(n):
        x = p.add(x, p.one)
    return x


def ominus(p, x, n):
    """n-fold ominus1 iteration."""
    for _ in range(n):
        x = p.ominus1(x)
    return x


class TranslationUlm:
    """T(P): pairs (x, n) modulo x + m = y + n, with

      [x,n] + [y,m] = [x + y, n + m]
      [x,n] v [y,m] = [(x + m) v (y + n), n + m]      (dually for meet)

    where 'x + m' adds the unit m times.  Canonical form strips the unit
    from x while the offset is positive; equality is then structural.
    """

    def __init__(self, p):
        self.p = p
        self.name = f"T_{p.name}"
        self.zero = self.canon(p.zero, 0)
        self.one = self.canon(p.one, 0)
        self.minus_one = self.canon(p.zero, 1)

    def canon(self, base, offset):
        while offset > 0:
            y = self.p.try_strip_one(base)
            if y is None:
                break
            base, offset = y, offset - 1
        return UlmElement(base, offset, self)

    def add(self, a, b):
        return self.canon(self.p.add(a.base, b.base), a.offset + b.offset)

    def join(self, a, b):
        lifted = self.p.join(add_units(self.p, a.base, b.offset),
                             add_units(self.p, b.base, a.offset))
        return self.canon(lifted, a.offset + b.offset)

    def meet(self, a, b):
        lifted = self.p.meet(add_units(self.p, a.base, b.offset),
                             add_units(self.p, b.base, a.offset))
        return self.canon(lifted, a.offset + b.offset)

    def leq(self, a, b):
        return self.join(a, b) == b

    def sim(self, a, b):
        """The defining relation, checked without canonicalizing."""
        return (add_units(self.p, a.base, b.offset)
                == add_units(self.p, b.base, a.offset))

    def unit_interval_elements(self):
        # a canonical [x, n] with n > 0 has x below the unit (else the
        # strip would fire), so it sits below 0; the unit interval is
        # exactly the offset-zero image of P's interval
        return [UlmElement(u, 0, self) for u in self.p.unit_interval_elements()]

    def sample_elements(self, bound, offsets=2):
        seen = {}
        for x in self.p.sample_elements(bound):
            for n in range(offsets + 1):
                e = self.canon(x, n)
                seen[(self.p.sort_key(e.base), e.offset)] = e
        return [seen[k] for k in sorted(seen)]

    def p4_bound(self, a):
        return max(a.offset, self.p.p4_bound(a.base), 1)

    def sort_key(self, a):
        return (a.offset, self.p.sort_key(a.base))


class ScaledIntUlm:
    """Integers k read as k/m: the chain fragment generated by 1/m."""

    def __init__(self, m):
        if m < 1:
            raise AlgebraError("denominator must be >= 1")
        self.m = m
        self.name = f"int_{m}"
        self.zero = 0
        self.one = m
        self.minus_one = -m

    def add(self, a, b):
        return a + b

    def join(self, a, b):
        return max(a, b)

    def meet(self, a, b):
        return min(a, b)

    def leq(self, a, b):
        return a <= b

    def unit_interval_elements(self):
        return list(range(self.m + 1))

    def sample_elements(self, bound):
        return list(range(-bound * self.m, bound * self.m + 1))

    def p4_bound(self, a):
        return max(-(-abs(a) // self.m), 1)

    def sort_key(self, a):
        return a


class PositiveConePUlm:
    """View of {x >= 0} in a Ulm, with x ominus 1 = (x - 1) join 0."""

    def __init__(self, u):
        self.u = u
        self.name = f"{u.name}_pos"
        self.zero = u.zero
        self.one = u.one

    def add(self, a, b):
        return self.u.add(a, b)

    def join(self, a, b):
        return self.u.join(a, b)

    def meet(self, a, b):
        return self.u.meet(a, b)

    def leq(self, a, b):
        return self.u.leq(a, b)

    def ominus1(self, a):
        return self.u.join(self.u.add(a, self.u.minus_one), self.u.zero)

    def try_strip_one(self, a):
        y = self.u.add(a, self.u.minus_one)
        return y if self.u.leq(self.u.zero, y) else None

    def unit_interval_elements(self):
        return list(self.u.unit_interval_elements())

    def sample_elements(self, bound):
        return [x for x in self.u.sample_elements(bound)
                if self.u.leq(self.u.zero, x)]

    def p4_bound(self, a):
        return self.u.p4_bound(a)

    def sort_key(self, a):
        return self.u.sort_key(a)


def t_build(p):
    return TranslationUlm(p)


def positive_cone(u):
    return PositiveConePUlm(u)


def xi(mvm):
    """The composite: translation completion of the good-sequence cone."""
    return TranslationUlm(GoodSeqPUlm(mvm))


# ============================================================
# Materialized unit intervals
# ============================================================

@dataclass
class MaterializedInterval:
    mvm: MvmAlgebra
    elements: list
    index: dict
    source: object

    def to_index(self, el):
        return self.index[el]

    def from_index(self, i):
        return self.elements[i]


def _materialize(source, elements, op_add, op_oplus, op_odot, op_join,
                 op_meet, zero, one, name):
    index = {}
    for i, e in enumerate(elements):
        if e in index:
            raise AlgebraError(f"interval elements not distinct in {name}")
        index[e] = i
    n = len(elements)

    def tab(f):
        return tuple(index[f(elements[a], elements[b])]
                     for a in range(n) for b in range(n))

    base = FiniteAlgebra(
        n,
        {"oplus": (2, tab(op_oplus)), "odot": (2, tab(op_odot)),
         "join": (2, tab(op_join)), "meet": (2, tab(op_meet))},
        {"zero": index[zero], "one": index[one]},
        name=name)
    return MaterializedInterval(as_mvm(base), elements, index, source)


def u_interval(p, name=None):
    """U(P) = {x <= 1} with x (+) y = (x + y) meet 1 and
    x (.) y = (x + y) ominus 1, as a verified finite MVM."""
    els = p.unit_interval_elements()
    return _materialize(
        p, els, p.add,
        lambda a, b: p.meet(p.add(a, b), p.one),
        lambda a, b: p.ominus1(p.add(a, b)),
        p.join, p.meet, p.zero, p.one,
        name or f"U_{p.name}")


def gamma(u, name=None):
    """Gamma(U) = {0 <= x <= 1} with x (+) y = (x + y) meet 1 and
    x (.) y = (x + y - 1) join 0, as a verified finite MVM."""
    els = u.unit_interval_elements()
    return _materialize(
        u, els, u.add,
        lambda a, b: u.meet(u.add(a, b), u.one),
        lambda a, b: u.join(u.add(u.add(a, b), u.minus_one), u.zero),
        u.join, u.meet, u.zero, u.one,
        name or f"G_{u.name}")


# ============================================================
# The four maps
# ============================================================

@dataclass(frozen=True)
class Iso:
    """A verified bijective homomorphism between finite algebras."""
    source: FiniteAlgebra
    target: FiniteAlgebra
    mapping: tuple


def verified_iso(source, target, mapping):
    if sorted(mapping) != list(range(target.size)):
        raise RuntimeError(
            f"map {source.name} -> {target.name} is not a bijection "
            "(theorem violation, implementation bug)")
    if not is_homomorphism(mapping, source, target):
        raise RuntimeError(
            f"map {source.name} -> {target.name} is not a homomorphism "
            "(theorem violation, implementation bug)")
    return Iso(source, target, mapping)


def eta1(mvm, interval=None):
    """x maps to the singleton (x): an isomorphism onto U(GS(A))."""
    if interval is None:
        interval = u_interval(GoodSeqPUlm(mvm))
    p = interval.source
    mapping = []
    for x in mvm.elements:
        s = gs_zero(mvm) if x == mvm.zero else GoodSequence((x,), mvm)
        mapping.append(interval.to_index(s))
    return verified_iso(mvm.base, interval.mvm.base, tuple(mapping))


def eps1(p, s, interval=None):
    """Sum of the entries of a good sequence over U(P), landing in P."""
    if interval is None:
        interval = u_interval(p)
    if s.mvm.base != interval.mvm.base:
        raise AlgebraError("sequence does not live over U(P)")
    acc = p.zero
    for e in s.entries:
        acc = p.add(acc, interval.from_index(e))
    return acc


def eps1_inverse(p, x, interval=None):
    """The unique good sequence with sum x: entries (x ominus n) meet 1."""
    if interval is None:
        interval = u_interval(p)
    cap = p.p4_bound(x) + 1
    entries = []
    current = x
    while current != p.zero:
        if len(entries) > cap:
            raise RuntimeError(
                f"decomposition of {x!r} did not terminate within {cap} "
                "steps (implementation bug)")
        entries.append(interval.to_index(p.meet(current, p.one)))
        current = p.ominus1(current)
    return gs_make(interval.mvm, entries)


def eta0(p, x):
    """x maps to the class [x, 0] in T(P)."""
    return TranslationUlm(p).canon(x, 0)


def eps0(u, e):
    """[x, n] maps to x - n, computed in the concrete Ulm."""
    acc = e.base
    for _ in range(e.offset):
        acc = u.add(acc, u.minus_one)
    return acc


# ============================================================
# Report suites
# ============================================================

def _pairs(xs):
    return [(a, b) for a in xs for b in xs]


def _triples(xs):
    return [(a, b, c) for a in xs for b in xs for c in xs]


def pulm_axiom_report(p, bound=3):
    """P0..P4 on sampled elements."""
    report = Report(f"pulm-axioms {p.name}")
    xs = p.sample_elements(bound)

    bad = None
    for a, b, c in _triples(xs):
        lattice_ok = (
            p.join(a, b) == p.join(b, a)
            and p.meet(a, b) == p.meet(b, a)
            and p.join(p.join(a, b), c) == p.join(a, p.join(b, c))
            and p.meet(p.meet(a, b), c) == p.meet(a, p.meet(b, c))
            and p.join(a, p.meet(a, b)) == a
            and p.meet(a, p.join(a, b)) == a
            and p.join(a, p.meet(b, c)) == p.meet(p.join(a, b), p.join(a, c)))
        monoid_ok = (
            p.add(a, b) == p.add(b, a)
            and p.add(p.add(a, b), c) == p.add(a, p.add(b, c))
            and p.add(a, p.zero) == a)
        distr_ok = (
            p.add(a, p.join(b, c)) == p.join(p.add(a, b), p.add(a, c))
            and p.add(a, p.meet(b, c)) == p.meet(p.add(a, b), p.add(a, c)))
        if not (lattice_ok and monoid_ok and distr_ok):
            bad = (a, b, c)
            break
    report.add("P0-l-monoid", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = next((x for x in xs if p.join(p.zero, x) != x), None)
    report.add("P1-positive", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = next((x for x in xs if p.ominus1(p.add(x, p.one)) != x), None)
    report.add("P2-strip-unit", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = next((x for x in xs
                if p.add(p.ominus1(x), p.one) != p.join(x, p.one)), None)
    report.add("P3-unstrip", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = None
    for x in xs:
        n = p.p4_bound(x)
        if not p.leq(x, add_units(p, p.zero, n)):
            bad = x
            break
    report.add("P4-bounded", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")
    return report


def ulm_axiom_report(u, bound=3):
    """U0..U3 on sampled elements."""
    report = Report(f"ulm-axioms {u.name}")
    xs = u.sample_elements(bound)

    bad = None
    for a, b, c in _triples(xs):
        ok = (
            u.join(a, b) == u.join(b, a)
            and u.meet(a, b) == u.meet(b, a)
            and u.join(u.join(a, b), c) == u.join(a, u.join(b, c))
            and u.meet(u.meet(a, b), c) == u.meet(a, u.meet(b, c))
            and u.join(a, u.meet(a, b)) == a
            and u.meet(a, u.join(a, b)) == a
            and u.join(a, u.meet(b, c)) == u.meet(u.join(a, b), u.join(a, c))
            and u.add(a, b) == u.add(b, a)
            and u.add(u.add(a, b), c) == u.add(a, u.add(b, c))
            and u.add(a, u.zero) == a
            and u.add(a, u.join(b, c)) == u.join(u.add(a, b), u.add(a, c))
            and u.add(a, u.meet(b, c)) == u.meet(u.add(a, b), u.add(a, c)))
        if not ok:
            bad = (a, b, c)
            break
    report.add("U0-l-monoid", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    report.add("U1-units-cancel",
               PASS if u.add(u.minus_one, u.one) == u.zero else FAIL)
    report.add("U2-zero-below-one",
               PASS if u.leq(u.zero, u.one) else FAIL)

    bad = None
    for x in xs:
        n = u.p4_bound(x)
        lower = x
        upper = x
        for _ in range(n):
            lower = u.add(lower, u.one)
            upper = u.add(upper, u.minus_one)
        # -n <= x iff 0 <= x + n; x <= n iff x - n <= 0
        if not (u.leq(u.zero, lower) and u.leq(upper, u.zero)):
            bad = x
            break
    report.add("U3-bounded", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")
    return report


def eps0_eta0_report(u, bound=2):
    """eps0: T(U+) -> U and eta0: P -> (T(P))+ are bijective morphisms,
    on sampled elements."""
    report = Report(f"translation-maps {u.name}")
    cone = PositiveConePUlm(u)
    t = TranslationUlm(cone)
    es = t.sample_elements(bound)

    consts_ok = (eps0(u, t.zero) == u.zero
                 and eps0(u, t.one) == u.one
                 and eps0(u, t.minus_one) == u.minus_one)
    report.add("eps0-constants", PASS if consts_ok else FAIL)

    bad = None
    for a, b in _pairs(es):
        if (eps0(u, t.add(a, b)) != u.add(eps0(u, a), eps0(u, b))
                or eps0(u, t.join(a, b)) != u.join(eps0(u, a), eps0(u, b))
                or eps0(u, t.meet(a, b)) != u.meet(eps0(u, a), eps0(u, b))):
            bad = (a, b)
            break
    report.add("eps0-operations", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = None
    for a in es:
        for b in es:
            if a != b and eps0(u, a) == eps0(u, b):
                bad = (a, b)
                break
        if bad:
            break
    report.add("eps0-injective", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = None
    for x in u.sample_elements(bound):
        n = 0
        shifted = x
        while not u.leq(u.zero, shifted):
            shifted = u.add(shifted, u.one)
            n += 1
            if n > u.p4_bound(x) + 1:
                bad = x
                break
        if bad:
            break
        pre = t.canon(shifted, n)
        if eps0(u, pre) != x:
            bad = x
            break
    report.add("eps0-surjective", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    # eta0 into (T(cone))+ for the cone itself
    tt = t
    xs = cone.sample_elements(bound)

    def h(x):
        return tt.canon(x, 0)

    bad = None
    for a, b in _pairs(xs):
        if (h(cone.add(a, b)) != tt.add(h(a), h(b))
                or h(cone.join(a, b)) != tt.join(h(a), h(b))
                or h(cone.meet(a, b)) != tt.meet(h(a), h(b))):
            bad = (a, b)
            break
    ok = bad is None and h(cone.one) == tt.one and h(cone.zero) == tt.zero
    bad2 = next((x for x in xs
                 if h(cone.ominus1(x))
                 != tt.join(tt.add(h(x), tt.minus_one), tt.zero)), None)
    report.add("eta0-operations", PASS if ok and bad2 is None else FAIL,
               "" if ok and bad2 is None else f"at {bad or bad2}")

    bad = None
    seenmap = {}
    for x in xs:
        e = h(x)
        if e in seenmap and seenmap[e] != x:
            bad = x
            break
        seenmap[e] = x
    report.add("eta0-injective", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    # canonical elements of T(cone) that are >= 0 all have offset 0,
    # hence are eta0 images
    bad = next((e for e in es
                if tt.leq(tt.zero, e) and e.offset != 0), None)
    report.add("eta0-covers-cone", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")
    return report


def pulm_lemma_suite(p, bound=3, depth=3):
    """The lemma stock of the positive-cone theory, instance-checked."""
    report = Report(f"pulm-lemmas {p.name}")
    xs = p.sample_elements(bound)
    interval = u_interval(p)
    units = p.unit_interval_elements()

    def nfold(n):
        return add_units(p, p.zero, n)

    def i_oplus(a, b):
        return p.meet(p.add(a, b), p.one)

    def i_odot(a, b):
        return p.ominus1(p.add(a, b))

    bad = None
    for n in range(1, depth + 1):
        for a in xs:
            for b in xs:
                if (add_units(p, a, n) == add_units(p, b, n)) and a != b:
                    bad = (a, b, n)
                    break
            if bad:
                break
        if bad:
            break
    report.add("cancel-units", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = next(((x, n) for x in xs for n in range(depth + 1)
                if add_units(p, ominus(p, x, n), n) != p.join(x, nfold(n))),
               None)
    report.add("ominus-then-add", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = next(((x, n) for x in xs for n in range(depth + 1)
                if p.add(p.meet(x, nfold(n)), ominus(p, x, n)) != x), None)
    report.add("truncate-split", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = next(((x, n) for x in xs for n in range(depth + 1)
                if p.leq(x, nfold(n)) and ominus(p, x, n) != p.zero), None)
    report.add("small-vanishes", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = next(((x, n, k) for x in xs
                for n in range(depth + 1) for k in range(depth + 1)
                if p.meet(ominus(p, x, n), nfold(k))
                != ominus(p, p.meet(x, nfold(n + k)), n)), None)
    report.add("transpose", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = next((x for x in xs
                if p.add(p.meet(x, p.one), p.meet(p.ominus1(x), p.one))
                != p.meet(x, nfold(2))), None)
    report.add("truncation-pair", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    # components (x ominus n) meet 1 form a good sequence in U(P)
    bad = None
    for x in xs:
        cap = p.p4_bound(x) + 2
        comps = [p.meet(ominus(p, x, n), p.one) for n in range(cap)]
        for n in range(len(comps) - 1):
            u0, u1 = comps[n], comps[n + 1]
            if i_oplus(u0, u1) != u0 or i_odot(u0, u1) != u1:
                bad = (x, n)
                break
        if bad:
            break
    report.add("truncation-sequence", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = None
    for x in xs:
        k = p.p4_bound(x)
        acc = p.zero
        for n in range(k):
            acc = p.add(acc, p.meet(ominus(p, x, n), p.one))
        if acc != x:
            bad = x
            break
    report.add("truncation-sums", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    seqs = enumerate_good_sequences(interval.mvm, depth)

    def seq_sum(s):
        acc = p.zero
        for e in s.entries:
            acc = p.add(acc, interval.from_index(e))
        return acc

    bad = next((s for s in seqs
                if p.meet(seq_sum(s), p.one)
                != (interval.from_index(s.entries[0]) if s.entries
                    else p.zero)), None)
    report.add("prefix-meet-one", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad and bad.entries}")

    bad = next((s for s in seqs
                if p.ominus1(seq_sum(s)) != seq_sum(gs_ominus1(s))), None)
    report.add("prefix-shift", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad and bad.entries}")

    from .mvm import is_good_pair
    bad = None
    for a in range(interval.mvm.size):
        for b in range(interval.mvm.size):
            ua, ub = interval.from_index(a), interval.from_index(b)
            direct = is_good_pair(interval.mvm, a, b)
            unrolled = (p.meet(p.add(ua, ub), p.one) == ua
                        and p.ominus1(p.add(ua, ub)) == ub)
            if direct != unrolled:
                bad = (a, b)
                break
        if bad:
            break
    report.add("good-pair-unrolled", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = None
    for sa in seqs:
        for sb in seqs:
            va, vb = seq_sum(sa), seq_sum(sb)
            for n in range(depth + 2):
                want_j = interval.from_index(
                    interval.mvm.join(sa.entry(n), sb.entry(n)))
                want_m = interval.from_index(
                    interval.mvm.meet(sa.entry(n), sb.entry(n)))
                got_j = p.meet(ominus(p, p.join(va, vb), n), p.one)
                got_m = p.meet(ominus(p, p.meet(va, vb), n), p.one)
                if got_j != want_j or got_m != want_m:
                    bad = (sa.entries, sb.entries, n)
                    break
            if bad:
                break
        if bad:
            break
    report.add("componentwise-lattice", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = None
    for x in xs:
        x0 = p.meet(x, p.one)
        x1 = p.meet(p.ominus1(x), p.one)
        for y in units:
            if (p.meet(p.ominus1(p.add(x, y)), p.one)
                    != i_odot(x0, i_oplus(x1, y))):
                bad = (x, y)
                break
        if bad:
            break
    report.add("duo", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = next(((x, y, n) for x in xs for y in units
                for n in range(1, depth + 1)
                if ominus(p, p.add(x, y), n)
                != p.ominus1(p.add(ominus(p, x, n - 1), y))), None)
    report.add("ominus-split", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = next(((x, y, n) for x in xs for y in units
                for n in range(1, depth + 1)
                if p.meet(ominus(p, p.add(x, y), n), p.one)
                != i_odot(p.meet(ominus(p, x, n - 1), p.one),
                          i_oplus(p.meet(ominus(p, x, n), p.one), y))), None)
    report.add("duo-iterated", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")
    return report


def derived_signature_report(m=2, bound=3):
    """The one-operation presentation x . y = x - 1 + y on the scaled
    integers: E1..E7."""
    u = ScaledIntUlm(m)
    report = Report(f"derived-signature int_{m}")
    xs = u.sample_elements(bound)

    def dot(a, b):
        return u.add(u.add(a, u.minus_one), b)

    report.add("E-minus-one", PASS if dot(u.zero, u.zero) == u.minus_one else FAIL,
               "0 . 0 recovers -1" if dot(u.zero, u.zero) == u.minus_one else "")

    bad = None
    for a, b, c in _triples(xs):
        ok = (u.join(a, b) == u.join(b, a)
              and u.meet(u.meet(a, b), c) == u.meet(a, u.meet(b, c))
              and u.join(a, u.meet(a, b)) == a
              and u.join(a, u.meet(b, c)) == u.meet(u.join(a, b), u.join(a, c)))
        if not ok:
            bad = (a, b, c)
            break
    report.add("E1-lattice", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = None
    for a, b, c in _triples(xs):
        ok = (u.add(a, b) == u.add(b, a) and dot(a, b) == dot(b, a)
              and u.add(u.add(a, b), c) == u.add(a, u.add(b, c))
              and dot(dot(a, b), c) == dot(a, dot(b, c))
              and u.add(a, u.zero) == a and dot(a, u.one) == a)
        if not ok:
            bad = (a, b, c)
            break
    report.add("E2-monoids", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = None
    for a, b, c in _triples(xs):
        ok = (u.add(a, u.join(b, c)) == u.join(u.add(a, b), u.add(a, c))
              and u.add(a, u.meet(b, c)) == u.meet(u.add(a, b), u.add(a, c))
              and dot(a, u.join(b, c)) == u.join(dot(a, b), dot(a, c))
              and dot(a, u.meet(b, c)) == u.meet(dot(a, b), dot(a, c)))
        if not ok:
            bad = (a, b, c)
            break
    report.add("E3-distributive", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = next((t for t in _triples(xs)
                if u.add(dot(t[0], t[1]), t[2]) != dot(t[0], u.add(t[1], t[2]))),
               None)
    report.add("E4-mixed-assoc", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = next((t for t in _triples(xs)
                if dot(u.add(t[0], t[1]), t[2]) != u.add(t[0], dot(t[1], t[2]))),
               None)
    report.add("E5-mixed-assoc-dual", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    report.add("E6-zero-below-one", PASS if u.leq(u.zero, u.one) else FAIL)

    bad = None
    for x in xs:
        found = False
        for n in range(1, 4 * bound + 4):
            low = u.zero
            for _ in range(n - 1):
                low = dot(low, u.zero)
            high = add_units(u, u.zero, n)
            if u.leq(low, x) and u.leq(x, high):
                found = True
                break
        if not found:
            bad = x
            break
    report.add("E7-bounded", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")
    return report


# ============================================================
# Round trips and naturality
# ============================================================

def roundtrip_report(mvm, max_len=4):
    """eta1 iso, eps1 round trips, and Gamma(Xi(A)) iso, for one algebra."""
    report = Report(f"roundtrip {mvm.name}")
    p = GoodSeqPUlm(mvm)
    interval = u_interval(p)

    try:
        eta1(mvm, interval)
        report.add("eta1-isomorphism", PASS)
    except RuntimeError as e:
        report.add("eta1-isomorphism", FAIL, str(e))

    bad = None
    for s in enumerate_good_sequences(interval.mvm, max_len):
        if eps1_inverse(p, eps1(p, s, interval), interval) != s:
            bad = s
            break
    report.add("eps1-round-trip", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad.entries}")

    bad = None
    for x in p.sample_elements(max_len):
        if eps1(p, eps1_inverse(p, x, interval), interval) != x:
            bad = x
            break
    report.add("eps1-inverse-round-trip", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    try:
        gamma_xi_iso(mvm)
        report.add("gamma-xi-isomorphism", PASS)
    except RuntimeError as e:
        report.add("gamma-xi-isomorphism", FAIL, str(e))
    return report


def gamma_xi_iso(mvm):
    """Gamma(Xi(A)) is isomorphic to A via x -> [(x), 0]."""
    t = xi(mvm)
    g = gamma(t, name=f"G_Xi_{mvm.name}")
    mapping = []
    for x in mvm.elements:
        s = gs_zero(mvm) if x == mvm.zero else GoodSequence((x,), mvm)
        mapping.append(g.to_index(t.canon(s, 0)))
    return verified_iso(mvm.base, g.mvm.base, tuple(mapping))


def naturality_report(mapping, src, dst, seq_len=3, bound=2):
    """The four naturality squares for one MVM homomorphism."""
    report = Report(f"naturality {src.name}->{dst.name}")
    if not is_homomorphism(mapping, src.base, dst.base):
        raise AlgebraError("mapping is not a homomorphism")
    pa, pb = GoodSeqPUlm(src), GoodSeqPUlm(dst)
    ia, ib = u_interval(pa), u_interval(pb)

    def gs_f(s):
        return gs_make(dst, [mapping[v] for v in s.entries])

    # eta1: U(GS(f)) after eta1 = eta1 after f
    ea = eta1(src, ia)
    eb = eta1(dst, ib)
    bad = None
    for x in src.elements:
        left = ib.to_index(gs_f(ia.from_index(ea.mapping[x])))
        right = eb.mapping[mapping[x]]
        if left != right:
            bad = x
            break
    report.add("eta1-square", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    # eps1: summing then mapping = mapping componentwise then summing
    bad = None
    for s in enumerate_good_sequences(ia.mvm, seq_len):
        left = gs_f(eps1(pa, s, ia))
        lifted = gs_make(ib.mvm,
                         [ib.to_index(gs_f(ia.from_index(e))) for e in s.entries])
        right = eps1(pb, lifted, ib)
        if left != right:
            bad = s
            break
    report.add("eps1-square", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad and bad.entries}")

    # eta0: T(GS(f)) restricted to cones commutes with x -> [x, 0]
    ta, tb = TranslationUlm(pa), TranslationUlm(pb)

    def t_f(e):
        return tb.canon(gs_f(e.base), e.offset)

    bad = None
    for x in pa.sample_elements(seq_len):
        if t_f(ta.canon(x, 0)) != tb.canon(gs_f(x), 0):
            bad = x
            break
    report.add("eta0-square", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    # the translated map must be a morphism on offset-bearing elements,
    # which is what gives the eta0 square content
    es = ta.sample_elements(bound)
    bad = None
    for a, b in _pairs(es):
        if (t_f(ta.add(a, b)) != tb.add(t_f(a), t_f(b))
                or t_f(ta.join(a, b)) != tb.join(t_f(a), t_f(b))
                or t_f(ta.meet(a, b)) != tb.meet(t_f(a), t_f(b))):
            bad = (a, b)
            break
    ok = (bad is None and t_f(ta.zero) == tb.zero and t_f(ta.one) == tb.one
          and t_f(ta.minus_one) == tb.minus_one)
    report.add("t-functor-morphism", PASS if ok else FAIL,
               "" if ok else f"at {bad}")

    # eps0: for the ulm morphism h = T(GS(f)), translating the cone
    # restriction commutes with eps0
    ca, cb = PositiveConePUlm(ta), PositiveConePUlm(tb)
    tca, tcb = TranslationUlm(ca), TranslationUlm(cb)

    def tc_f(e):
        return tcb.canon(t_f(e.base), e.offset)

    bad = None
    for e in tca.sample_elements(bound):
        if eps0(tb, tc_f(e)) != t_f(eps0(ta, e)):
            bad = e
            break
    report.add("eps0-square", PASS if bad is None else FAIL,
               "" if bad is None else "mismatch")
    return report
