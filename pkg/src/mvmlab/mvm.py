"""MV-monoidal algebras.

Signature {oplus, odot, join, meet, zero, one}; the axiom suite A1..A7,
the sigma terms, derived lemmas used as free oracles, good pairs, the
MV-algebra bridge (signature {oplus, neg, zero}), and corpus builders.
"""

from dataclasses import dataclass
from itertools import product

from . import core
from .core import (FAIL, PASS, AlgebraError, FiniteAlgebra, Report, app,
                   const, equation, var)

OPLUS, ODOT, JOIN, MEET = "oplus", "odot", "join", "meet"
ZERO, ONE = "zero", "one"
NEG = "neg"

MVM_OPS = (OPLUS, ODOT, JOIN, MEET)
MVM_CONSTS = (ZERO, ONE)


def oplus(a, b):
    return app(OPLUS, a, b)


def odot(a, b):
    return app(ODOT, a, b)


def join(a, b):
    return app(JOIN, a, b)


def meet(a, b):
    return app(MEET, a, b)


ZERO_T = const(ZERO)
ONE_T = const(ONE)

_x, _y, _z = var(0), var(1), var(2)


def sigma1_term(a, b, c):
    return odot(oplus(a, b), oplus(odot(a, b), c))


def sigma2_term(a, b, c):
    return oplus(odot(a, b), odot(oplus(a, b), c))


def sigma3_term(a, b, c):
    return oplus(odot(a, oplus(b, c)), odot(b, c))


def sigma4_term(a, b, c):
    return odot(oplus(a, odot(b, c)), oplus(b, c))


AXIOMS = (
    ("A1", (
        ("join-commutative", equation(join(_x, _y), join(_y, _x))),
        ("join-associative", equation(join(join(_x, _y), _z), join(_x, join(_y, _z)))),
        ("meet-commutative", equation(meet(_x, _y), meet(_y, _x))),
        ("meet-associative", equation(meet(meet(_x, _y), _z), meet(_x, meet(_y, _z)))),
        ("absorb-join", equation(join(_x, meet(_x, _y)), _x)),
        ("absorb-meet", equation(meet(_x, join(_x, _y)), _x)),
        ("join-over-meet", equation(join(_x, meet(_y, _z)),
                                    meet(join(_x, _y), join(_x, _z)))),
        ("meet-over-join", equation(meet(_x, join(_y, _z)),
                                    join(meet(_x, _y), meet(_x, _z)))),
    )),
    ("A2", (
        ("oplus-unit", equation(oplus(_x, ZERO_T), _x, 1)),
        ("oplus-commutative", equation(oplus(_x, _y), oplus(_y, _x))),
        ("oplus-associative", equation(oplus(oplus(_x, _y), _z),
                                       oplus(_x, oplus(_y, _z)))),
        ("odot-unit", equation(odot(_x, ONE_T), _x, 1)),
        ("odot-commutative", equation(odot(_x, _y), odot(_y, _x))),
        ("odot-associative", equation(odot(odot(_x, _y), _z),
                                      odot(_x, odot(_y, _z)))),
    )),
    ("A3", (
        ("oplus-over-join", equation(oplus(_x, join(_y, _z)),
                                     join(oplus(_x, _y), oplus(_x, _z)))),
        ("oplus-over-meet", equation(oplus(_x, meet(_y, _z)),
                                     meet(oplus(_x, _y), oplus(_x, _z)))),
        ("odot-over-join", equation(odot(_x, join(_y, _z)),
                                    join(odot(_x, _y), odot(_x, _z)))),
        ("odot-over-meet", equation(odot(_x, meet(_y, _z)),
                                    meet(odot(_x, _y), odot(_x, _z)))),
    )),
    ("A4", (
        ("sigma1-eq-sigma3", equation(sigma1_term(_x, _y, _z),
                                      sigma3_term(_x, _y, _z))),
    )),
    ("A5", (
        ("sigma2-eq-sigma4", equation(sigma2_term(_x, _y, _z),
                                      sigma4_term(_x, _y, _z))),
    )),
    ("A6", (
        ("oplus-recover", equation(oplus(odot(_x, _y), _z),
                                   join(sigma1_term(_x, _y, _z), _z))),
    )),
    ("A7", (
        ("odot-recover", equation(odot(oplus(_x, _y), _z),
                                  meet(sigma2_term(_x, _y, _z), _z))),
    )),
)

ALL_AXIOM_EQUATIONS = tuple(
    (f"{group}/{name}", eq) for group, items in AXIOMS for name, eq in items)


@dataclass(frozen=True)
class MvmAlgebra:
    base: FiniteAlgebra
    verified: bool = True

    @property
    def size(self):
        return self.base.size

    @property
    def elements(self):
        return range(self.base.size)

    @property
    def name(self):
        return self.base.name

    @property
    def zero(self):
        return self.base.consts[ZERO]

    @property
    def one(self):
        return self.base.consts[ONE]

    def oplus(self, a, b):
        return self.base.apply(OPLUS, a, b)

    def odot(self, a, b):
        return self.base.apply(ODOT, a, b)

    def join(self, a, b):
        return self.base.apply(JOIN, a, b)

    def meet(self, a, b):
        return self.base.apply(MEET, a, b)

    def leq(self, a, b):
        return self.base.apply(JOIN, a, b) == b


def _require_signature(algebra, ops, consts):
    for name in ops:
        if name not in algebra.ops:
            raise AlgebraError(f"missing operation {name!r}")
        if algebra.arity(name) != (1 if name == NEG else 2):
            raise AlgebraError(f"op {name!r} has the wrong arity")
    for name in consts:
        if name not in algebra.consts:
            raise AlgebraError(f"missing constant {name!r}")


@dataclass
class MvmCheck:
    report: Report
    algebra: MvmAlgebra = None

    @property
    def ok(self):
        return self.algebra is not None

    def __bool__(self):
        return self.ok


def check_mvm(algebra):
    """Run A1..A7 exhaustively; a verdict per group, witness on failure."""
    _require_signature(algebra, MVM_OPS, MVM_CONSTS)
    report = Report(f"check-axioms {algebra.name}")
    all_ok = True
    for group, items in AXIOMS:
        bad = None
        for name, eq in items:
            v = core.holds(algebra, eq)
            if not v:
                bad = (name, v.witness)
                break
        if bad is None:
            report.add(group, PASS)
        else:
            all_ok = False
            report.add(group, FAIL, f"{bad[0]} fails at {bad[1]}")
    return MvmCheck(report, MvmAlgebra(algebra) if all_ok else None)


def as_mvm(algebra):
    """check_mvm, raising on failure."""
    chk = check_mvm(algebra)
    if not chk:
        bad = chk.report.failures()[0]
        raise AlgebraError(f"{algebra.name}: axiom {bad.name} fails ({bad.detail})")
    return chk.algebra


_PERMS = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))


def sigma(m, a, b, c):
    """Common value of the four sigma terms; asserts they coincide and
    are invariant under all argument permutations."""
    values = set()
    for t in _PERMS:
        args = (a, b, c)
        p, q, r = args[t[0]], args[t[1]], args[t[2]]
        s1 = m.odot(m.oplus(p, q), m.oplus(m.odot(p, q), r))
        s2 = m.oplus(m.odot(p, q), m.odot(m.oplus(p, q), r))
        s3 = m.oplus(m.odot(p, m.oplus(q, r)), m.odot(q, r))
        s4 = m.odot(m.oplus(p, m.odot(q, r)), m.oplus(q, r))
        values.update((s1, s2, s3, s4))
    if len(values) != 1:
        raise RuntimeError(
            f"sigma terms disagree at ({a}, {b}, {c}): {sorted(values)}; "
            "algebra is not a verified model")
    return values.pop()


def is_good_pair(m, x0, x1):
    return m.oplus(x0, x1) == x0 and m.odot(x0, x1) == x1


def good_pairs(m):
    return [(a, b) for a in m.elements for b in m.elements if is_good_pair(m, a, b)]


def lemma_suite(m):
    """Derived lemmas checked exhaustively; failures signal implementation bugs."""
    report = Report(f"lemma-suite {m.name}")
    n = m.size
    zero, one = m.zero, m.one

    bad = next((x for x in range(n)
                if not (m.leq(zero, x) and m.leq(x, one))), None)
    report.add("bounded", PASS if bad is None else FAIL,
               "" if bad is None else f"element {bad} outside [0, 1]")

    bad = next(((x,) for x in range(n)
                if m.oplus(x, one) != one or m.odot(x, zero) != zero), None)
    report.add("absorbing", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = None
    for x in range(n):
        for y in range(n):
            if not m.leq(x, m.oplus(x, y)) or not m.leq(m.odot(x, y), x):
                bad = (x, y)
                break
            if not m.leq(x, y):
                continue
            for w in range(n):
                if not (m.leq(m.oplus(x, w), m.oplus(y, w))
                        and m.leq(m.odot(x, w), m.odot(y, w))
                        and m.leq(m.join(x, w), m.join(y, w))
                        and m.leq(m.meet(x, w), m.meet(y, w))):
                    bad = (x, y, w)
                    break
            if bad:
                break
        if bad:
            break
    report.add("order-preserving", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = next((t for t in product(range(n), repeat=3)
                if not m.leq(m.odot(t[0], m.oplus(t[1], t[2])),
                             m.oplus(m.odot(t[0], t[1]), t[2]))), None)
    report.add("almost-associative", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = next(((x, y) for x in range(n) for y in range(n)
                if not is_good_pair(m, m.oplus(x, y), m.odot(x, y))), None)
    report.add("sum-pair-is-good", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")

    bad = None
    for x0, x1 in good_pairs(m):
        for y in range(n):
            left = m.odot(x0, m.oplus(x1, y))
            right = m.oplus(x1, m.odot(x0, y))
            if left != right or left != sigma(m, x0, x1, y):
                bad = (x0, x1, y)
                break
        if bad:
            break
    report.add("good-pair-switch", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad}")
    return report


# ============================================================
# MV-algebras and the bridge
# ============================================================

def neg(a):
    return app(NEG, a)


MV_AXIOMS = (
    ("MV1", (
        ("oplus-unit", equation(oplus(_x, ZERO_T), _x, 1)),
        ("oplus-commutative", equation(oplus(_x, _y), oplus(_y, _x))),
        ("oplus-associative", equation(oplus(oplus(_x, _y), _z),
                                       oplus(_x, oplus(_y, _z)))),
    )),
    ("MV2", (
        ("top-absorbs", equation(oplus(neg(ZERO_T), _x), neg(ZERO_T), 1)),
    )),
    ("MV3", (
        ("neg-involution", equation(neg(neg(_x)), _x, 1)),
    )),
    ("MV4", (
        ("exchange", equation(oplus(neg(oplus(neg(_x), _y)), _y),
                              oplus(neg(oplus(neg(_y), _x)), _x))),
    )),
)


@dataclass(frozen=True)
class MvAlgebra:
    base: FiniteAlgebra

    @property
    def size(self):
        return self.base.size

    @property
    def name(self):
        return self.base.name

    @property
    def zero(self):
        return self.base.consts[ZERO]

    def oplus(self, a, b):
        return self.base.apply(OPLUS, a, b)

    def neg(self, a):
        return self.base.apply(NEG, a)


@dataclass
class MvCheck:
    report: Report
    algebra: MvAlgebra = None

    @property
    def ok(self):
        return self.algebra is not None

    def __bool__(self):
        return self.ok


def check_mv(algebra):
    """The four MV axiom groups, exhaustively."""
    _require_signature(algebra, (OPLUS, NEG), (ZERO,))
    report = Report(f"check-mv {algebra.name}")
    all_ok = True
    for group, items in MV_AXIOMS:
        bad = None
        for name, eq in items:
            v = core.holds(algebra, eq)
            if not v:
                bad = (name, v.witness)
                break
        if bad is None:
            report.add(group, PASS)
        else:
            all_ok = False
            report.add(group, FAIL, f"{bad[0]} fails at {bad[1]}")
    return MvCheck(report, MvAlgebra(algebra) if all_ok else None)


def mv_to_mvm(mv, name=None):
    """Materialize the derived operations 1 = neg 0, x (.) y = neg(neg x (+) neg y),
    x \\/ y = (x (.) neg y) (+) y, x /\\ y = x (.) (neg x (+) y), then verify."""
    n = mv.size
    one = mv.neg(mv.zero)

    def dot(a, b):
        return mv.neg(mv.oplus(mv.neg(a), mv.neg(b)))

    def vee(a, b):
        return mv.oplus(dot(a, mv.neg(b)), b)

    def wedge(a, b):
        return dot(a, mv.oplus(mv.neg(a), b))

    def tab(f):
        return tuple(f(a, b) for a in range(n) for b in range(n))

    base = FiniteAlgebra(
        n,
        {OPLUS: (2, mv.base.table(OPLUS)), ODOT: (2, tab(dot)),
         JOIN: (2, tab(vee)), MEET: (2, tab(wedge))},
        {ZERO: mv.zero, ONE: one},
        name=name or mv.name,
        notes=mv.base.notes,
    )
    chk = check_mvm(base)
    if not chk:
        bad = chk.report.failures()[0]
        raise RuntimeError(
            f"derived tables from MV-algebra {mv.name} fail {bad.name}: "
            f"{bad.detail} (implementation bug)")
    return chk.algebra


def has_mv_negation(m):
    """True iff every x has a complement y with x (+) y = 1 and x (.) y = 0."""
    return all(
        any(m.oplus(x, y) == m.one and m.odot(x, y) == m.zero for y in m.elements)
        for x in m.elements)


def find_mv_structure(m, guard=6):
    """Search for a neg table making an MV-algebra whose derived tables
    reproduce m exactly; None when there is none."""
    if m.size > guard:
        raise AlgebraError(f"size {m.size} exceeds guard {guard}")
    candidates = []
    for x in m.elements:
        candidates.append([y for y in m.elements
                           if m.oplus(x, y) == m.one and m.odot(x, y) == m.zero])
    for negtab in product(*candidates):
        base = FiniteAlgebra(
            m.size,
            {OPLUS: (2, m.base.table(OPLUS)), NEG: (1, tuple(negtab))},
            {ZERO: m.zero},
            name=f"{m.name}_mv")
        chk = check_mv(base)
        if not chk:
            continue
        derived = mv_to_mvm(chk.algebra, name=m.name)
        if derived.base == m.base:
            return chk.algebra
    return None


# ============================================================
# Corpus builders
# ============================================================

def lukasiewicz_chain(n):
    """The n-element chain 0, 1/(n-1), ..., 1 with clamped addition and
    neg k = (n-1) - k, as an MV-algebra."""
    if n < 1:
        raise AlgebraError("chain needs at least one element")
    top = n - 1
    add = tuple(min(a + b, top) for a in range(n) for b in range(n))
    negt = tuple(top - a for a in range(n))
    base = FiniteAlgebra(
        n, {OPLUS: (2, add), NEG: (1, negt)}, {ZERO: 0},
        name=f"lukasiewicz_{n}")
    chk = check_mv(base)
    if not chk:
        raise RuntimeError(f"lukasiewicz_chain({n}) failed its own axioms")
    return chk.algebra


def lukasiewicz_mvm(n):
    notes = (f"{n}-element Lukasiewicz chain: k stands for k/{n - 1}, "
             "(+) clamps the sum at 1, (.) is the dual",) if n > 1 else (
        "one-element chain: all operations collapse",)
    m = mv_to_mvm(lukasiewicz_chain(n))
    return MvmAlgebra(m.base.renamed(f"lukasiewicz_{n}", notes=notes))


def chain_bdl(n, name=None):
    """n-element chain as a bounded distributive lattice: (+) = \\/ and (.) = /\\."""
    if n < 1:
        raise AlgebraError("chain needs at least one element")
    vee = tuple(max(a, b) for a in range(n) for b in range(n))
    wedge = tuple(min(a, b) for a in range(n) for b in range(n))
    base = FiniteAlgebra(
        n, {OPLUS: (2, vee), ODOT: (2, wedge), JOIN: (2, vee), MEET: (2, wedge)},
        {ZERO: 0, ONE: n - 1}, name=name or f"chain_bdl_{n}")
    return as_mvm(base)


def remark_algebra():
    """Three-element chain 0 < a < 1 with a (+) a = a and a (.) a = 0.

    Only those two entries are free; everything else is forced: units and
    absorption fix every row and column touching 0 or 1, and the lattice
    is the chain.  Element 1 is a, element 2 is 1.
    """
    add = (0, 1, 2,
           1, 1, 2,
           2, 2, 2)
    dot = (0, 0, 0,
           0, 0, 1,
           0, 1, 2)
    vee = tuple(max(a, b) for a in range(3) for b in range(3))
    wedge = tuple(min(a, b) for a in range(3) for b in range(3))
    base = FiniteAlgebra(
        3,
        {OPLUS: (2, add), ODOT: (2, dot), JOIN: (2, vee), MEET: (2, wedge)},
        {ZERO: 0, ONE: 2},
        name="remark_3elem",
        notes=("three-element chain 0 < a < 1 with a (+) a = a and a (.) a = 0",
               "the remaining entries are forced: x (+) 0 = x, x (.) 1 = x,",
               "x (+) 1 = 1, x (.) 0 = 0, and join/meet are the chain lattice"))
    return as_mvm(base)


def corpus_algebras():
    """The shipped corpus: lukasiewicz_1..8 and remark_3elem."""
    out = {}
    for n in range(1, 9):
        m = lukasiewicz_mvm(n)
        out[m.name] = m.base
    r = remark_algebra()
    out[r.name] = r.base
    return out


def write_corpus(dirpath):
    import os
    os.makedirs(dirpath, exist_ok=True)
    written = []
    for name, algebra in sorted(corpus_algebras().items()):
        path = os.path.join(dirpath, f"{name}.alg")
        core.write_file(algebra, path)
        written.append(path)
    return written


def corpus_path():
    from importlib.resources import files
    return files("mvmlab") / "corpus"


def list_corpus():
    return sorted(p.name[:-4] for p in corpus_path().iterdir()
                  if p.name.endswith(".alg"))


def load_corpus(name):
    res = corpus_path() / f"{name}.alg"
    try:
        text = res.read_text(encoding="utf-8")
    except (FileNotFoundError, OSError):
        raise AlgebraError(f"no corpus algebra named {name!r}") from None
    return core.parse(text)
