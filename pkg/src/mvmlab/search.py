"""Bounded finite-model finder over the MVM signature.

Candidate models are partial operation tables (cells).  Every universally
quantified equation is grounded over the candidate carrier; a propagation
sweep evaluates ground instances against the partial tables, forcing or
pruning cell values until a fixpoint.  Branching picks the most
constrained cell, trying small values first with a least-number
heuristic when symmetry breaking is on.  Equations to be violated are
grounded once with fresh witness cells in place of their variables.

Any model coming out of the search is re-verified through the exhaustive
evaluator in core, which shares no code with the engine.
"""

import time
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from ._backend import HAS_NUMBA, njit
from .core import (AlgebraError, Equation, FiniteAlgebra, Report, app, const,
                   equation, holds, size_guard, var, PASS, FAIL, INCONCLUSIVE)
from . import mvm as mvm_mod
from .mvm import (JOIN, MEET, ODOT, OPLUS, ONE, ZERO, join, meet, odot,
                  oplus, sigma1_term, sigma2_term, sigma3_term, sigma4_term)

_OP_SLOTS = {OPLUS: 0, ODOT: 1, JOIN: 2, MEET: 3}
_SLOT_NAMES = (OPLUS, ODOT, JOIN, MEET)
# branching tiers: constants, then lattice cells, then the monoid cells
_SLOT_TIER = {0: 2, 1: 2, 2: 1, 3: 1}


# ============================================================
# Problems and outcomes
# ============================================================

@dataclass(frozen=True)
class SearchProblem:
    satisfy: tuple
    violate: tuple = ()
    sizes: tuple = (2, 4)
    symmetry_breaking: bool = True
    fresh: tuple = ()

    def __post_init__(self):
        sat = tuple(self.satisfy)
        vio = (self.violate,) if isinstance(self.violate, Equation) \
            else tuple(self.violate)
        object.__setattr__(self, "satisfy", sat)
        object.__setattr__(self, "violate", vio)
        object.__setattr__(self, "fresh", tuple(self.fresh))
        lo, hi = self.sizes
        if not (1 <= lo <= hi):
            raise AlgebraError(f"bad size range {self.sizes}")
        object.__setattr__(self, "sizes", (lo, hi))


@dataclass
class SearchStats:
    nodes: int = 0
    seconds: float = 0.0
    per_size: dict = field(default_factory=dict)


@dataclass
class SearchOutcome:
    status: str  # witness | exhausted | bound_hit
    model: FiniteAlgebra = None
    stats: SearchStats = None


@dataclass
class EnumerationOutcome:
    models: list
    complete: bool
    stats: SearchStats = None


# ============================================================
# Propagation kernel (same source interpreted when numba is absent)
# ============================================================

@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _lowest_bit(x):
    i = 0
    while not (x >> i) & 1:
        i += 1
    return i


@njit(cache=True)
def _require(doms, vals, cell, v):
    """Force cell = v.  0 no-op, 1 conflict, 2 changed."""
    bit = 1 << v
    if doms[cell] & bit == 0:
        return 1
    if vals[cell] == v:
        return 0
    doms[cell] = bit
    vals[cell] = v
    return 2


@njit(cache=True)
def _forbid(doms, vals, cell, v):
    """Remove v from cell's domain.  0 no-op, 1 conflict, 2 changed."""
    bit = 1 << v
    if doms[cell] & bit == 0:
        return 0
    doms[cell] &= ~bit
    if doms[cell] == 0:
        return 1
    if vals[cell] < 0 and _popcount(doms[cell]) == 1:
        vals[cell] = _lowest_bit(doms[cell])
    return 2


@njit(cache=True)
def _pick_cell(doms, vals, tier):
    """Most constrained unassigned cell: (tier, domain size, index)."""
    best = -1
    bt = bp = 1 << 30
    for cell in range(doms.shape[0]):
        if vals[cell] >= 0:
            continue
        t = tier[cell]
        p = _popcount(doms[cell])
        if t < bt or (t == bt and p < bp):
            best, bt, bp = cell, t, p
    return best


@njit(cache=True)
def _lnh_value_cap(doms, vals, cell, n):
    """Largest value worth trying at cell under least-number symmetry
    breaking: one above everything already touched by the assignment."""
    n2 = n * n
    used = -1
    for c in range(doms.shape[0]):
        v = vals[c]
        if v < 0:
            continue
        if v > used:
            used = v
        if c < 4 * n2:
            rem = c % n2
            a = rem // n
            b = rem % n
            if a > used:
                used = a
            if b > used:
                used = b
    if cell < 4 * n2:
        rem = cell % n2
        a = rem // n
        b = rem % n
        if a > used:
            used = a
        if b > used:
            used = b
    cap = used + 1
    if cap > n - 1:
        cap = n - 1
    return cap


@njit(cache=True)
def _sweep(tok_code, tok_arg, inst_start, inst_end, inst_rel,
           doms, vals, n, kstack, vstack):
    """Propagate all ground instances to a fixpoint.  0 ok, 1 conflict."""
    changed = True
    while changed:
        changed = False
        for ii in range(inst_start.shape[0]):
            sp = 0
            for i in range(inst_start[ii], inst_end[ii]):
                c = tok_code[i]
                a = tok_arg[i]
                if c == 0:
                    kstack[sp] = 0
                    vstack[sp] = a
                    sp += 1
                elif c == 1:
                    if vals[a] >= 0:
                        kstack[sp] = 0
                        vstack[sp] = vals[a]
                    else:
                        kstack[sp] = 1
                        vstack[sp] = a
                    sp += 1
                else:
                    k2 = kstack[sp - 1]
                    v2 = vstack[sp - 1]
                    k1 = kstack[sp - 2]
                    v1 = vstack[sp - 2]
                    sp -= 2
                    if k1 == 0 and k2 == 0:
                        cell = a * n * n + v1 * n + v2
                        if vals[cell] >= 0:
                            kstack[sp] = 0
                            vstack[sp] = vals[cell]
                        else:
                            kstack[sp] = 1
                            vstack[sp] = cell
                    else:
                        kstack[sp] = 2
                        vstack[sp] = 0
                    sp += 1
            k1 = kstack[0]
            v1 = vstack[0]
            k2 = kstack[1]
            v2 = vstack[1]
            if inst_rel[ii] == 0:
                if k1 == 0 and k2 == 0:
                    if v1 != v2:
                        return 1
                elif k1 == 0 and k2 == 1:
                    r = _require(doms, vals, v2, v1)
                    if r == 1:
                        return 1
                    if r == 2:
                        changed = True
                elif k1 == 1 and k2 == 0:
                    r = _require(doms, vals, v1, v2)
                    if r == 1:
                        return 1
                    if r == 2:
                        changed = True
                elif k1 == 1 and k2 == 1 and v1 != v2:
                    inter = doms[v1] & doms[v2]
                    if inter == 0:
                        return 1
                    if inter != doms[v1] or inter != doms[v2]:
                        doms[v1] = inter
                        doms[v2] = inter
                        for cc in (v1, v2):
                            if vals[cc] < 0 and _popcount(inter) == 1:
                                vals[cc] = _lowest_bit(inter)
                        changed = True
            else:
                if k1 == 0 and k2 == 0:
                    if v1 == v2:
                        return 1
                elif k1 == 0 and k2 == 1:
                    r = _forbid(doms, vals, v2, v1)
                    if r == 1:
                        return 1
                    if r == 2:
                        changed = True
                elif k1 == 1 and k2 == 0:
                    r = _forbid(doms, vals, v1, v2)
                    if r == 1:
                        return 1
                    if r == 2:
                        changed = True
                elif k1 == 1 and k2 == 1 and v1 == v2:
                    return 1
    return 0


# ============================================================
# Engine
# ============================================================

def _collect_fresh(equations, declared):
    names = set(declared)
    for eq in equations:
        for t in (eq.lhs, eq.rhs):
            stack = [t]
            while stack:
                u = stack.pop()
                if u.kind == "const" and u.name not in (ZERO, ONE):
                    names.add(u.name)
                elif u.kind == "op":
                    if u.name not in _OP_SLOTS:
                        raise AlgebraError(
                            f"operation {u.name!r} is outside the search signature")
                    if len(u.args) != 2:
                        raise AlgebraError(f"op {u.name!r} must be binary")
                    stack.extend(u.args)
    return tuple(sorted(names))


class _Engine:
    def __init__(self, problem, n, collect_all=False, deadline=None,
                 node_limit=None):
        self.n = n
        self.problem = problem
        self.collect_all = collect_all
        self.deadline = deadline
        self.node_limit = node_limit
        self.nodes = 0
        self.bound_hit = False
        self.models = []

        self.fresh = _collect_fresh(problem.satisfy + problem.violate,
                                    problem.fresh)
        base = 4 * n * n
        self.zero_cell = base
        self.one_cell = base + 1
        self.fresh_cells = {name: base + 2 + i
                            for i, name in enumerate(self.fresh)}
        next_cell = base + 2 + len(self.fresh)
        self.skolem_cells = []
        for eq in problem.violate:
            cells = list(range(next_cell, next_cell + eq.var_count))
            next_cell += eq.var_count
            self.skolem_cells.append(cells)
        self.cell_count = next_cell
        self._build_instances()

    def _const_cell(self, name):
        if name == ZERO:
            return self.zero_cell
        if name == ONE:
            return self.one_cell
        return self.fresh_cells[name]

    def _emit(self, term, env, skolems, code, arg):
        if term.kind == "var":
            if env is not None:
                code.append(0)
                arg.append(env[term.index])
            else:
                code.append(1)
                arg.append(skolems[term.index])
        elif term.kind == "const":
            code.append(1)
            arg.append(self._const_cell(term.name))
        else:
            for a in term.args:
                self._emit(a, env, skolems, code, arg)
            code.append(2)
            arg.append(_OP_SLOTS[term.name])

    def _build_instances(self):
        code, arg, starts, ends, rels = [], [], [], [], []
        for eq in self.problem.satisfy:
            for env in product(range(self.n), repeat=eq.var_count):
                starts.append(len(code))
                self._emit(eq.lhs, env, None, code, arg)
                self._emit(eq.rhs, env, None, code, arg)
                ends.append(len(code))
                rels.append(0)
        for eq, cells in zip(self.problem.violate, self.skolem_cells):
            starts.append(len(code))
            self._emit(eq.lhs, None, cells, code, arg)
            self._emit(eq.rhs, None, cells, code, arg)
            ends.append(len(code))
            rels.append(1)
        self.tok_code = np.asarray(code, np.int64)
        self.tok_arg = np.asarray(arg, np.int64)
        self.inst_start = np.asarray(starts, np.int64)
        self.inst_end = np.asarray(ends, np.int64)
        self.inst_rel = np.asarray(rels, np.int64)
        depth = 2
        for s, e in zip(starts, ends):
            depth = max(depth, e - s + 2)
        self.kstack = np.zeros(depth, np.int64)
        self.vstack = np.zeros(depth, np.int64)
        self.tier = np.zeros(self.cell_count, np.int64)
        for slot in range(4):
            lo = slot * self.n * self.n
            self.tier[lo:lo + self.n * self.n] = _SLOT_TIER[slot]

    def _init_state(self):
        doms = np.full(self.cell_count, (1 << self.n) - 1, np.int64)
        vals = np.full(self.cell_count, -1, np.int64)
        if self.problem.symmetry_breaking:
            doms[self.zero_cell] = 1
            vals[self.zero_cell] = 0
        return doms, vals

    def _run_sweep(self, doms, vals):
        return _sweep(self.tok_code, self.tok_arg, self.inst_start,
                      self.inst_end, self.inst_rel, doms, vals, self.n,
                      self.kstack, self.vstack)

    def solve(self):
        doms, vals = self._init_state()
        self._dfs(doms, vals)
        return self.models

    def _dfs(self, doms, vals):
        if self._run_sweep(doms, vals) == 1:
            return False
        cell = int(_pick_cell(doms, vals, self.tier))
        if cell < 0:
            self.models.append(vals.copy())
            return not self.collect_all
        if self.problem.symmetry_breaking:
            cap = int(_lnh_value_cap(doms, vals, cell, self.n))
        else:
            cap = self.n - 1
        d = int(doms[cell])
        for v in range(cap + 1):
            if not (d >> v) & 1:
                continue
            if self.deadline is not None and time.monotonic() > self.deadline:
                self.bound_hit = True
                return True
            if self.node_limit is not None and self.nodes >= self.node_limit:
                self.bound_hit = True
                return True
            self.nodes += 1
            nd = doms.copy()
            nv = vals.copy()
            nd[cell] = 1 << v
            nv[cell] = v
            if self._dfs(nd, nv):
                return True
        return False

    def build_model(self, vals, name=None):
        n = self.n
        ops = {}
        for slot, opname in enumerate(_SLOT_NAMES):
            lo = slot * n * n
            ops[opname] = (2, tuple(int(v) for v in vals[lo:lo + n * n]))
        consts = {ZERO: int(vals[self.zero_cell]), ONE: int(vals[self.one_cell])}
        for fname, cell in self.fresh_cells.items():
            consts[fname] = int(vals[cell])
        return FiniteAlgebra(n, ops, consts, name=name or f"search_n{n}")


def _reverify(problem, model):
    """Exhaustive re-check through core.holds; the engine never calls it."""
    for eq in problem.satisfy:
        if not holds(model, eq):
            raise RuntimeError(
                "search produced a model failing a satisfy-equation "
                "(engine bug)")
    for eq in problem.violate:
        if holds(model, eq):
            raise RuntimeError(
                "search produced a model satisfying a violate-equation "
                "(engine bug)")


def find_model(problem, time_limit=None, node_limit=None):
    """First witness over the size range, re-verified, with honest status."""
    t0 = time.monotonic()
    deadline = t0 + time_limit if time_limit else None
    stats = SearchStats()
    lo, hi = problem.sizes
    hit = False
    for n in range(lo, hi + 1):
        eng = _Engine(problem, n, deadline=deadline, node_limit=node_limit)
        eng.solve()
        stats.nodes += eng.nodes
        stats.per_size[n] = "bound_hit" if eng.bound_hit else (
            "witness" if eng.models else "exhausted")
        if eng.models:
            model = eng.build_model(eng.models[0])
            _reverify(problem, model)
            stats.seconds = time.monotonic() - t0
            return SearchOutcome("witness", model, stats)
        if eng.bound_hit:
            hit = True
            break
    stats.seconds = time.monotonic() - t0
    return SearchOutcome("bound_hit" if hit else "exhausted", None, stats)


def find_all_models(problem, time_limit=None, node_limit=None):
    """Every total model over the size range (up to the search's own
    symmetry breaking), each re-verified."""
    t0 = time.monotonic()
    deadline = t0 + time_limit if time_limit else None
    stats = SearchStats()
    models = []
    complete = True
    for n in range(problem.sizes[0], problem.sizes[1] + 1):
        eng = _Engine(problem, n, collect_all=True, deadline=deadline,
                      node_limit=node_limit)
        eng.solve()
        stats.nodes += eng.nodes
        if eng.bound_hit:
            complete = False
        for i, vals in enumerate(eng.models):
            model = eng.build_model(vals, name=f"search_n{n}_{i}")
            _reverify(problem, model)
            models.append(model)
    stats.seconds = time.monotonic() - t0
    return EnumerationOutcome(models, complete, stats)


# ============================================================
# Isomorphism checking
# ============================================================

def _invariant(algebra, e):
    out = [e == v for v in algebra.consts.values()]
    for name in sorted(algebra.ops):
        if algebra.arity(name) == 2:
            out.append(algebra.apply(name, e, e) == e)
    return tuple(out)


def strip_constants(model, keep=(ZERO, ONE)):
    """Forget searched constants, keeping only the named ones."""
    return FiniteAlgebra(
        model.size, model.ops,
        {k: v for k, v in model.consts.items() if k in keep},
        name=model.name, notes=model.notes)


def are_isomorphic(a, b):
    """Backtracking over bijections, constants pinned, invariants first.

    Accepts wrapped algebras (anything with a .base carrier algebra).
    """
    from .core import same_signature
    a = getattr(a, "base", a)
    b = getattr(b, "base", b)
    if a.size != b.size or not same_signature(a, b):
        return False
    inv_a = [_invariant(a, e) for e in a.elements]
    inv_b = [_invariant(b, e) for e in b.elements]
    if sorted(inv_a) != sorted(inv_b):
        return False
    n = a.size
    img = [-1] * n
    used = [False] * n
    for cname, v in a.consts.items():
        w = b.consts[cname]
        if img[v] not in (-1, w) or (img[v] == -1 and used[w]):
            return False
        img[v] = w
        used[w] = True
    binops = [(a.op(name), b.op(name))
              for name, (arity, _) in a.ops.items() if arity == 2]

    def ok_partial():
        for f, g in binops:
            for p in range(n):
                if img[p] == -1:
                    continue
                for q in range(n):
                    if img[q] == -1:
                        continue
                    r = img[f(p, q)]
                    if r != -1 and r != g(img[p], img[q]):
                        return False
        return True

    def assign(i):
        if i == n:
            return True
        if img[i] != -1:
            return assign(i + 1)
        for w in range(n):
            if used[w] or inv_a[i] != inv_b[w]:
                continue
            img[i] = w
            used[w] = True
            if ok_partial() and assign(i + 1):
                return True
            img[i] = -1
            used[w] = False
        return False

    return ok_partial() and assign(0)


# ============================================================
# Enumeration of MVMs
# ============================================================

def enumerate_mvms(n, max_size=None, time_limit=None):
    """All MVMs with carrier size n, up to isomorphism, each re-verified."""
    limit = size_guard(4) if max_size is None else max_size
    if n > limit:
        raise AlgebraError(
            f"size {n} exceeds enumeration guard {limit}; "
            "set MVMLAB_SIZE_GUARD or pass max_size")
    problem = SearchProblem(
        satisfy=tuple(eq for _, eq in mvm_mod.ALL_AXIOM_EQUATIONS),
        sizes=(n, n))
    out = find_all_models(problem, time_limit=time_limit)
    if not out.complete:
        raise RuntimeError(f"enumeration at size {n} hit the search bound")
    reps = []
    for model in out.models:
        if not any(are_isomorphic(model, r.base) for r in reps):
            chk = mvm_mod.check_mvm(
                model.renamed(f"mvm_{n}_{len(reps)}"))
            if not chk:
                raise RuntimeError("enumerated model fails re-verification")
            reps.append(chk.algebra)
    return reps


# ============================================================
# Independence of the axiom stock
# ============================================================

def _independence_groups():
    x, y, z = var(0), var(1), var(2)
    s1, s2 = sigma1_term(x, y, z), sigma2_term(x, y, z)
    s3, s4 = sigma3_term(x, y, z), sigma4_term(x, y, z)
    return (
        ("01-lattice", (
            equation(join(x, y), join(y, x)),
            equation(join(join(x, y), z), join(x, join(y, z))),
            equation(meet(x, y), meet(y, x)),
            equation(meet(meet(x, y), z), meet(x, meet(y, z))),
            equation(join(x, meet(x, y)), x),
            equation(meet(x, join(x, y)), x),
        )),
        ("02-lattice-distributivity", (
            equation(join(x, meet(y, z)), meet(join(x, y), join(x, z))),
            equation(join(meet(y, z), x), meet(join(y, x), join(z, x))),
            equation(meet(x, join(y, z)), join(meet(x, y), meet(x, z))),
            equation(meet(join(y, z), x), join(meet(y, x), meet(z, x))),
        )),
        ("03-oplus-associative", (
            equation(oplus(oplus(x, y), z), oplus(x, oplus(y, z))),
        )),
        ("04-odot-associative", (
            equation(odot(odot(x, y), z), odot(x, odot(y, z))),
        )),
        ("05-oplus-commutative", (
            equation(oplus(x, y), oplus(y, x)),
        )),
        ("06-odot-commutative", (
            equation(odot(x, y), odot(y, x)),
        )),
        ("07-oplus-unit", (
            equation(oplus(x, const(ZERO)), x, 1),
            equation(oplus(const(ZERO), x), x, 1),
        )),
        ("08-odot-unit", (
            equation(odot(x, const(ONE)), x, 1),
            equation(odot(const(ONE), x), x, 1),
        )),
        ("09-oplus-over-join", (
            equation(oplus(x, join(y, z)), join(oplus(x, y), oplus(x, z))),
            equation(oplus(join(y, z), x), join(oplus(y, x), oplus(z, x))),
        )),
        ("10-odot-over-meet", (
            equation(odot(x, meet(y, z)), meet(odot(x, y), odot(x, z))),
            equation(odot(meet(y, z), x), meet(odot(y, x), odot(z, x))),
        )),
        ("11-oplus-over-meet", (
            equation(oplus(x, meet(y, z)), meet(oplus(x, y), oplus(x, z))),
            equation(oplus(meet(y, z), x), meet(oplus(y, x), oplus(z, x))),
        )),
        ("12-odot-over-join", (
            equation(odot(x, join(y, z)), join(odot(x, y), odot(x, z))),
            equation(odot(join(y, z), x), join(odot(y, x), odot(z, x))),
        )),
        ("13-exchange-pair", (
            equation(s2, s4),
            equation(s1, s3),
        )),
        ("14-join-recover-pair", (
            equation(oplus(odot(x, y), z), join(s1, z)),
            equation(oplus(x, odot(y, z)),
                     join(x, odot(oplus(x, odot(y, z)), oplus(y, z)))),
        )),
        ("15-meet-recover-pair", (
            equation(odot(oplus(x, y), z), meet(s2, z)),
            equation(odot(x, oplus(y, z)),
                     meet(x, oplus(odot(x, oplus(y, z)), odot(y, z)))),
        )),
    )


INDEPENDENCE_GROUPS = _independence_groups()


def independence_suite(sizes=(2, 4), time_limit_per_item=90.0,
                       node_limit=None):
    """For each property group: search for a model of all the other
    groups that violates one equation of this group.  A witness is
    re-verified and reported PASS; anything else is an honest
    INCONCLUSIVE, never a FAIL."""
    report = Report(f"independence sizes {sizes[0]}..{sizes[1]}")
    witnesses = {}
    total_nodes = 0
    t0 = time.monotonic()
    for label, eqs in INDEPENDENCE_GROUPS:
        others = tuple(eq for lab2, eqs2 in INDEPENDENCE_GROUPS
                       if lab2 != label for eq in eqs2)
        problem = SearchProblem(satisfy=others, violate=(eqs[0],),
                                sizes=sizes)
        out = find_model(problem, time_limit=time_limit_per_item,
                         node_limit=node_limit)
        total_nodes += out.stats.nodes
        if out.status == "witness":
            witnesses[label] = out.model
            report.add(label, PASS,
                       f"witness of size {out.model.size}, re-verified")
        elif out.status == "exhausted":
            report.add(label, INCONCLUSIVE,
                       f"no model up to size {sizes[1]}")
        else:
            report.add(label, INCONCLUSIVE, "search budget hit")
    elapsed = time.monotonic() - t0
    report.footer.append(
        f"witnesses: {len(witnesses)}/{len(INDEPENDENCE_GROUPS)}")
    report.footer.append(f"nodes: {total_nodes}")
    report.footer.append(f"time: {elapsed:.2f}s")
    return report, witnesses


# ============================================================
# Equation text syntax
# ============================================================

_OPTOKENS = {"(+)": OPLUS, "(.)": ODOT, "\\/": JOIN, "/\\": MEET}


def _tokenize(s):
    out = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch.isspace():
            i += 1
        elif s.startswith("(+)", i) or s.startswith("(.)", i):
            out.append(s[i:i + 3])
            i += 3
        elif s.startswith("\\/", i) or s.startswith("/\\", i):
            out.append(s[i:i + 2])
            i += 2
        elif ch in "()=":
            out.append(ch)
            i += 1
        elif ch.isalnum() or ch == "_":
            j = i
            while j < len(s) and (s[j].isalnum() or s[j] == "_"):
                j += 1
            out.append(s[i:j])
            i = j
        else:
            raise AlgebraError(f"bad character {ch!r} in equation {s!r}")
    return out


def _parse_primary(toks, pos, varmap, fresh):
    if pos >= len(toks):
        raise AlgebraError("unexpected end of equation")
    t = toks[pos]
    if t == "(":
        node, pos = _parse_expr(toks, pos + 1, varmap, fresh)
        if pos >= len(toks) or toks[pos] != ")":
            raise AlgebraError("missing closing parenthesis")
        return node, pos + 1
    if t == "0":
        return const(ZERO), pos + 1
    if t == "1":
        return const(ONE), pos + 1
    if t in _OPTOKENS or t in ")=":
        raise AlgebraError(f"unexpected token {t!r}")
    if t in fresh:
        return const(t), pos + 1
    if t not in varmap:
        varmap[t] = len(varmap)
    return var(varmap[t]), pos + 1


def _parse_expr(toks, pos, varmap, fresh):
    left, pos = _parse_primary(toks, pos, varmap, fresh)
    if pos < len(toks) and toks[pos] in _OPTOKENS:
        opname = _OPTOKENS[toks[pos]]
        right, pos = _parse_primary(toks, pos + 1, varmap, fresh)
        return app(opname, left, right), pos
    return left, pos


def parse_equation_text(text, fresh=()):
    """One equation in the small syntax: operation tokens (+) (.) \\/ /\\,
    constants 0 and 1, names in `fresh` as constants, other identifiers
    as variables in order of first occurrence; parentheses group."""
    toks = _tokenize(text)
    varmap = {}
    fresh = set(fresh)
    lhs, pos = _parse_expr(toks, 0, varmap, fresh)
    if pos >= len(toks) or toks[pos] != "=":
        raise AlgebraError(f"expected '=' in equation {text!r}")
    rhs, pos = _parse_expr(toks, pos + 1, varmap, fresh)
    if pos != len(toks):
        raise AlgebraError(f"trailing tokens in equation {text!r}")
    return equation(lhs, rhs, len(varmap))


def parse_problem_file(path):
    """Equation file: one equation per line, 'fresh NAME' declares a
    searched constant, '#' starts a comment."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as e:
        raise AlgebraError(f"cannot read {path}: {e}") from None
    fresh = []
    texts = []
    for raw in lines:
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("fresh "):
            name = line.split()[1]
            fresh.append(name)
        else:
            texts.append(line)
    eqs = tuple(parse_equation_text(t, fresh) for t in texts)
    return eqs, tuple(fresh)
