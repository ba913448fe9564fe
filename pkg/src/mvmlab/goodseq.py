"""Good sequences over a verified MVM.

A good sequence is an eventually-zero sequence whose adjacent pairs
(x_n, x_{n+1}) satisfy x_n (+) x_{n+1} = x_n and x_n (.) x_{n+1} = x_{n+1}.
Stored with trailing zeros stripped; the empty tuple is the zero sequence.
These form the positive cone: componentwise join/meet, a sum with two
equivalent formulas, a left shift as ominus-1, and pointwise order.
"""

from dataclasses import dataclass, field

from .core import AlgebraError, is_homomorphism
from .mvm import MvmAlgebra, as_mvm, is_good_pair


class NotGoodError(AlgebraError):
    """Sequence fails the adjacent-good-pair condition."""

    def __init__(self, entries, index):
        self.entries = tuple(entries)
        self.index = index
        super().__init__(
            f"not a good sequence: adjacent pair at index {index} "
            f"in {self.entries}")


@dataclass(frozen=True)
class GoodSequence:
    entries: tuple
    mvm: MvmAlgebra = field(compare=False, repr=False)

    def __len__(self):
        return len(self.entries)

    def entry(self, n):
        """n-th component, zero beyond the stored part."""
        return self.entries[n] if n < len(self.entries) else self.mvm.zero

    def is_zero(self):
        return not self.entries


def gs_make(m, raw):
    """Strip trailing zeros, then validate every adjacent pair."""
    entries = list(raw)
    for v in entries:
        if not 0 <= v < m.size:
            raise AlgebraError(f"entry {v} out of range")
    while entries and entries[-1] == m.zero:
        entries.pop()
    padded = entries + [m.zero]
    for i in range(len(padded) - 1):
        if not is_good_pair(m, padded[i], padded[i + 1]):
            raise NotGoodError(entries, i)
    return GoodSequence(tuple(entries), m)


def gs_zero(m):
    return GoodSequence((), m)


def gs_one(m):
    return gs_make(m, [m.one])


def gs_singleton(m, x):
    return gs_make(m, [x])


def _same_algebra(a, b):
    if a.mvm.base != b.mvm.base:
        raise AlgebraError("good sequences live over different algebras")


def gs_join(a, b):
    _same_algebra(a, b)
    m = a.mvm
    k = max(len(a), len(b))
    return gs_make(m, [m.join(a.entry(i), b.entry(i)) for i in range(k)])


def gs_meet(a, b):
    _same_algebra(a, b)
    m = a.mvm
    k = max(len(a), len(b))
    return gs_make(m, [m.meet(a.entry(i), b.entry(i)) for i in range(k)])


def gs_sum(a, b):
    """Sum via the (.)-of-(+) formula, cross-checked against the (+)-of-(.)
    formula; disagreement means a broken algebra or a bug, never bad input.

    c_n = (a_0 (+) b_n) (.) (a_1 (+) b_{n-1}) (.) ... (.) (a_n (+) b_0)
    c_n = b_n (+) (a_0 (.) b_{n-1}) (+) ... (+) (a_{n-1} (.) b_0) (+) a_n

    Entries past index len(a)+len(b)-1 vanish: some factor of the first
    formula has both halves past the stored parts, and 0 absorbs (.).
    """
    _same_algebra(a, b)
    m = a.mvm
    out = []
    for n in range(len(a) + len(b)):
        acc = m.oplus(a.entry(0), b.entry(n))
        for i in range(1, n + 1):
            acc = m.odot(acc, m.oplus(a.entry(i), b.entry(n - i)))
        alt = b.entry(n)
        for i in range(n):
            alt = m.oplus(alt, m.odot(a.entry(i), b.entry(n - 1 - i)))
        alt = m.oplus(alt, a.entry(n))
        if acc != alt:
            raise RuntimeError(
                f"sum formulas disagree at index {n} for {a.entries} + "
                f"{b.entries}: {acc} vs {alt} (implementation bug)")
        out.append(acc)
    return gs_make(m, out)


def gs_ominus1(a):
    """Left shift: drop the first entry."""
    return gs_make(a.mvm, a.entries[1:])


def gs_leq(a, b):
    _same_algebra(a, b)
    m = a.mvm
    k = max(len(a), len(b))
    return all(m.leq(a.entry(i), b.entry(i)) for i in range(k))


def gs_scalar(m, count):
    """count-fold sum of the unit sequence: (1, 1, ..., 1)."""
    if count < 0:
        raise AlgebraError("count must be >= 0")
    return gs_make(m, [m.one] * count)


def gs_decompose_split(a):
    """(a_0..a_n) as ((a_0..a_{n-1}), (a_n)); asserts the sum recombines."""
    if a.is_zero():
        raise AlgebraError("cannot split the zero sequence")
    prefix = gs_make(a.mvm, a.entries[:-1])
    last = gs_make(a.mvm, [a.entries[-1]])
    if gs_sum(prefix, last) != a:
        raise RuntimeError(
            f"split of {a.entries} does not recombine (implementation bug)")
    return prefix, last


def gs_map(mapping, a, target):
    """Apply a verified homomorphism componentwise.

    mapping: tuple of target elements indexed by source element;
    target: the codomain as a verified MvmAlgebra.
    """
    if not is_homomorphism(mapping, a.mvm.base, target.base):
        raise AlgebraError("mapping is not a homomorphism")
    return gs_make(target, [mapping[v] for v in a.entries])


def good_pair_graph(m):
    """Successor lists of the good-pair relation, zero excluded."""
    succ = {}
    for x in m.elements:
        if x == m.zero:
            continue
        succ[x] = [y for y in m.elements
                   if y != m.zero and is_good_pair(m, x, y)]
    return succ


def enumerate_good_sequences(m, max_len=4):
    """All good sequences of length <= max_len, as paths in the good-pair
    graph; ordered by (length, entries)."""
    succ = good_pair_graph(m)
    out = [gs_zero(m)]
    layer = [(x,) for x in sorted(succ)]
    while layer and len(layer[0]) <= max_len:
        for entries in layer:
            out.append(GoodSequence(entries, m))
        layer = [entries + (y,) for entries in layer for y in succ[entries[-1]]]
    return out


def check_goodseq_laws(m, max_len=3, title=None):
    """Monoid, lattice, and distributivity laws of the cone, exhaustively
    over the enumerated layer; theorems, so failures are bug signals."""
    from .core import FAIL, PASS, Report
    report = Report(title or f"goodseq-laws {m.name} (length <= {max_len})")
    seqs = enumerate_good_sequences(m, max_len)
    zero = gs_zero(m)
    one = gs_one(m)

    bad = next((a for a in seqs if gs_sum(a, zero) != a), None)
    report.add("zero-neutral", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad.entries}")

    bad = next(((a, b) for a in seqs for b in seqs
                if gs_sum(a, b) != gs_sum(b, a)), None)
    report.add("sum-commutative", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad[0].entries}, {bad[1].entries}")

    bad = None
    for a in seqs:
        for b in seqs:
            ab = gs_sum(a, b)
            for c in seqs:
                if gs_sum(ab, c) != gs_sum(a, gs_sum(b, c)):
                    bad = (a, b, c)
                    break
            if bad:
                break
        if bad:
            break
    report.add("sum-associative", PASS if bad is None else FAIL,
               "" if bad is None else f"at {[s.entries for s in bad]}")

    bad = None
    for a in seqs:
        for b in seqs:
            for c in seqs:
                if (gs_sum(a, gs_join(b, c)) != gs_join(gs_sum(a, b), gs_sum(a, c))
                        or gs_sum(a, gs_meet(b, c)) != gs_meet(gs_sum(a, b),
                                                               gs_sum(a, c))):
                    bad = (a, b, c)
                    break
            if bad:
                break
        if bad:
            break
    report.add("sum-distributes", PASS if bad is None else FAIL,
               "" if bad is None else f"at {[s.entries for s in bad]}")

    bad = next(((a, b) for a in seqs for b in seqs
                if gs_sum(gs_meet(a, b), gs_join(a, b)) != gs_sum(a, b)), None)
    report.add("meet-plus-join", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad[0].entries}, {bad[1].entries}")

    bad = next((a for a in seqs if gs_ominus1(gs_sum(a, one)) != a), None)
    report.add("shift-undoes-unit", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad.entries}")

    bad = next((a for a in seqs
                if gs_sum(gs_ominus1(a), one) != gs_join(a, one)), None)
    report.add("unit-after-shift", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad.entries}")

    bad = next((a for a in seqs
                if not gs_leq(a, gs_scalar(m, max(len(a), 1)))), None)
    report.add("bounded-by-units", PASS if bad is None else FAIL,
               "" if bad is None else f"at {bad.entries}")
    return report
