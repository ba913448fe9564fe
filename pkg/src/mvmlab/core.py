"""Finite algebras as flat operation tables.

Carrier elements are dense integers 0..size-1.  Operation tables are
stored row-major (lexicographic in the argument tuple), so a binary op
applied to (a, b) reads table[a*size + b].  On top of that substrate:
terms, equations, an exhaustive identity checker with two kernel
backends, congruences, homomorphisms, Light's associativity test, and
a plain-text file format.
"""

import os
from dataclasses import dataclass, field, replace
from itertools import product

import numpy as np

from ._backend import HAS_NUMBA, backend, njit


class AlgebraError(ValueError):
    """Malformed algebra, term, equation, or file input."""


class NotGenerated(AlgebraError):
    """Generator set fails to generate the magma (Light precondition)."""


def size_guard(default):
    """Enumeration guard, overridable through MVMLAB_SIZE_GUARD."""
    raw = os.environ.get("MVMLAB_SIZE_GUARD", "").strip()
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        raise AlgebraError(f"MVMLAB_SIZE_GUARD={raw!r} is not an integer") from None


# ============================================================
# Terms and equations
# ============================================================

@dataclass(frozen=True)
class Term:
    """kind 'var' (index), 'const' (name), or 'op' (name, args)."""
    kind: str
    index: int = -1
    name: str = ""
    args: tuple = ()

    def __post_init__(self):
        if self.kind == "var":
            if self.index < 0:
                raise AlgebraError("variable index must be >= 0")
        elif self.kind == "const":
            if not self.name:
                raise AlgebraError("constant term needs a name")
        elif self.kind == "op":
            if not self.name or not self.args:
                raise AlgebraError("operation term needs a name and arguments")
        else:
            raise AlgebraError(f"unknown term kind {self.kind!r}")


def var(i):
    return Term("var", index=i)


def const(name):
    return Term("const", name=name)


def app(name, *args):
    return Term("op", name=name, args=tuple(args))


def term_vars(t):
    """Set of variable indices occurring in t."""
    if t.kind == "var":
        return {t.index}
    if t.kind == "const":
        return set()
    out = set()
    for a in t.args:
        out |= term_vars(a)
    return out


def term_consts(t):
    if t.kind == "var":
        return set()
    if t.kind == "const":
        return {t.name}
    out = set()
    for a in t.args:
        out |= term_consts(a)
    return out


@dataclass(frozen=True)
class Equation:
    lhs: Term
    rhs: Term
    var_count: int

    def __post_init__(self):
        used = term_vars(self.lhs) | term_vars(self.rhs)
        if used and (min(used) != 0 or max(used) != len(used) - 1):
            raise AlgebraError(f"variable indices not contiguous from 0: {sorted(used)}")
        if len(used) > self.var_count:
            raise AlgebraError("var_count smaller than the variables used")


def equation(lhs, rhs, var_count=None):
    if var_count is None:
        used = term_vars(lhs) | term_vars(rhs)
        var_count = len(used)
    return Equation(lhs, rhs, var_count)


@dataclass(frozen=True)
class Verdict:
    """Result of an exhaustive identity check."""
    ok: bool
    witness: tuple = None

    def __bool__(self):
        return self.ok


# ============================================================
# Algebras
# ============================================================

@dataclass(frozen=True)
class FiniteAlgebra:
    size: int
    ops: dict
    consts: dict
    name: str = field(default="algebra", compare=False)
    notes: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.size < 1:
            raise AlgebraError(f"size must be >= 1, got {self.size}")
        norm = {}
        for oname, spec in self.ops.items():
            arity, table = spec
            if not oname or any(ch.isspace() for ch in oname):
                raise AlgebraError(f"bad operation name {oname!r}")
            if arity < 1:
                raise AlgebraError(f"op {oname}: arity must be >= 1")
            table = tuple(int(v) for v in table)
            want = self.size ** arity
            if len(table) != want:
                raise AlgebraError(
                    f"op {oname}: expected {want} table entries, got {len(table)}")
            for pos, v in enumerate(table):
                if not 0 <= v < self.size:
                    raise AlgebraError(
                        f"op {oname}: entry {v} at position {pos} out of range")
            norm[oname] = (arity, table)
        object.__setattr__(self, "ops", norm)
        cn = {}
        for cname, v in self.consts.items():
            if not cname or any(ch.isspace() for ch in cname):
                raise AlgebraError(f"bad constant name {cname!r}")
            v = int(v)
            if not 0 <= v < self.size:
                raise AlgebraError(f"const {cname}: value {v} out of range")
            cn[cname] = v
        object.__setattr__(self, "consts", cn)
        object.__setattr__(self, "notes", tuple(self.notes))

    @property
    def elements(self):
        return range(self.size)

    def arity(self, name):
        return self.ops[name][0]

    def table(self, name):
        return self.ops[name][1]

    def const(self, name):
        return self.consts[name]

    def apply(self, name, *args):
        arity, table = self.ops[name]
        if len(args) != arity:
            raise AlgebraError(f"op {name} expects {arity} arguments, got {len(args)}")
        idx = 0
        for a in args:
            idx = idx * self.size + a
        return table[idx]

    def op(self, name):
        arity, table = self.ops[name]
        n = self.size
        if arity == 1:
            return lambda a: table[a]
        if arity == 2:
            return lambda a, b: table[a * n + b]

        def applyk(*args):
            idx = 0
            for a in args:
                idx = idx * n + a
            return table[idx]
        return applyk

    def renamed(self, name, notes=None):
        return replace(self, name=name, notes=self.notes if notes is None else tuple(notes))


def same_signature(a, b):
    return (
        {k: v[0] for k, v in a.ops.items()} == {k: v[0] for k, v in b.ops.items()}
        and set(a.consts) == set(b.consts)
    )


def eval_term(algebra, t, env):
    """Evaluate t under env, a tuple assigning elements to variable indices."""
    if t.kind == "var":
        if t.index >= len(env):
            raise AlgebraError(f"environment too short for variable {t.index}")
        v = env[t.index]
        if not 0 <= v < algebra.size:
            raise AlgebraError(f"environment value {v} out of range")
        return v
    if t.kind == "const":
        if t.name not in algebra.consts:
            raise AlgebraError(f"unbound constant {t.name!r}")
        return algebra.consts[t.name]
    if t.name not in algebra.ops:
        raise AlgebraError(f"unbound operation {t.name!r}")
    if len(t.args) != algebra.arity(t.name):
        raise AlgebraError(
            f"op {t.name} expects {algebra.arity(t.name)} arguments, got {len(t.args)}")
    return algebra.apply(t.name, *(eval_term(algebra, a, env) for a in t.args))


# ============================================================
# Exhaustive identity checking
# ============================================================
# Postfix codes: 0 push variable, 1 push literal element, 2 apply op slot.

def _pack_tables(algebra):
    slots = {name: i for i, name in enumerate(sorted(algebra.ops))}
    taboff = np.zeros(len(slots) + 1, np.int64)
    tabar = np.zeros(len(slots), np.int64)
    flat = []
    for name, i in slots.items():
        arity, table = algebra.ops[name]
        tabar[i] = arity
        taboff[i] = len(flat)
        flat.extend(table)
    taboff[len(slots)] = len(flat)
    return slots, np.asarray(flat, np.int64), taboff, tabar


def _compile_term(algebra, t, slots, var_count, code, arg):
    if t.kind == "var":
        if t.index >= var_count:
            raise AlgebraError(f"variable {t.index} outside var_count {var_count}")
        code.append(0)
        arg.append(t.index)
    elif t.kind == "const":
        if t.name not in algebra.consts:
            raise AlgebraError(f"unbound constant {t.name!r}")
        code.append(1)
        arg.append(algebra.consts[t.name])
    else:
        if t.name not in algebra.ops:
            raise AlgebraError(f"unbound operation {t.name!r}")
        if len(t.args) != algebra.arity(t.name):
            raise AlgebraError(
                f"op {t.name} expects {algebra.arity(t.name)} arguments, got {len(t.args)}")
        for a in t.args:
            _compile_term(algebra, a, slots, var_count, code, arg)
        code.append(2)
        arg.append(slots[t.name])


def compile_term(algebra, t, slots, var_count):
    code, arg = [], []
    _compile_term(algebra, t, slots, var_count, code, arg)
    return np.asarray(code, np.int64), np.asarray(arg, np.int64)


@njit(cache=True)
def _eval_postfix(code, arg, env, stack, size, tabdata, taboff, tabar):
    sp = 0
    for i in range(code.shape[0]):
        c = code[i]
        a = arg[i]
        if c == 0:
            stack[sp] = env[a]
            sp += 1
        elif c == 1:
            stack[sp] = a
            sp += 1
        else:
            k = tabar[a]
            idx = 0
            for j in range(sp - k, sp):
                idx = idx * size + stack[j]
            sp -= k
            stack[sp] = tabdata[taboff[a] + idx]
            sp += 1
    return stack[0]


@njit(cache=True)
def _first_failure_loop(lcode, larg, rcode, rarg, nvars, size, tabdata, taboff, tabar):
    total = 1
    for _ in range(nvars):
        total *= size
    env = np.zeros(nvars + 1, np.int64)
    stack = np.zeros(lcode.shape[0] + rcode.shape[0] + 2, np.int64)
    for lin in range(total):
        rem = lin
        for v in range(nvars - 1, -1, -1):
            env[v] = rem % size
            rem //= size
        lv = _eval_postfix(lcode, larg, env, stack, size, tabdata, taboff, tabar)
        rv = _eval_postfix(rcode, rarg, env, stack, size, tabdata, taboff, tabar)
        if lv != rv:
            return lin
    return -1


def _eval_vectorized(code, arg, grid, total, size, tables):
    stack = []
    for c, a in zip(code, arg):
        if c == 0:
            stack.append(grid[a])
        elif c == 1:
            stack.append(np.full(total, a, np.int64))
        else:
            arity, tab = tables[a]
            idx = stack[-arity]
            for j in range(len(stack) - arity + 1, len(stack)):
                idx = idx * size + stack[j]
            del stack[len(stack) - arity:]
            stack.append(tab[idx])
    return stack[0]


def _first_failure_grid(lcode, larg, rcode, rarg, nvars, size, algebra, slots):
    tables = [None] * len(slots)
    for name, i in slots.items():
        arity, tab = algebra.ops[name]
        tables[i] = (arity, np.asarray(tab, np.int64))
    if nvars == 0:
        grid = None
        total = 1
    else:
        grid = np.indices((size,) * nvars).reshape(nvars, -1)
        total = grid.shape[1]
    lv = _eval_vectorized(lcode, larg, grid, total, size, tables)
    rv = _eval_vectorized(rcode, rarg, grid, total, size, tables)
    bad = lv != rv
    if not bad.any():
        return -1
    # argmax picks the first True, which is the lexicographically least env
    return int(np.argmax(bad))


def _decode_env(lin, nvars, size):
    out = [0] * nvars
    for v in range(nvars - 1, -1, -1):
        out[v] = lin % size
        lin //= size
    return tuple(out)


def holds(algebra, eq):
    """Check lhs = rhs under all assignments; Verdict with first witness on failure."""
    slots, tabdata, taboff, tabar = _pack_tables(algebra)
    lcode, larg = compile_term(algebra, eq.lhs, slots, eq.var_count)
    rcode, rarg = compile_term(algebra, eq.rhs, slots, eq.var_count)
    if backend() == "numba" and HAS_NUMBA:
        lin = _first_failure_loop(
            lcode, larg, rcode, rarg, eq.var_count, algebra.size, tabdata, taboff, tabar)
    else:
        lin = _first_failure_grid(
            lcode, larg, rcode, rarg, eq.var_count, algebra.size, algebra, slots)
    if lin < 0:
        return Verdict(True)
    return Verdict(False, _decode_env(lin, eq.var_count, algebra.size))


def holds_naive(algebra, eq):
    """Plain-python oracle for holds: full tuple loop over eval_term."""
    for env in product(range(algebra.size), repeat=eq.var_count):
        if eval_term(algebra, eq.lhs, env) != eval_term(algebra, eq.rhs, env):
            return Verdict(False, env)
    return Verdict(True)


# ============================================================
# Congruences
# ============================================================

@dataclass(frozen=True)
class Congruence:
    """Canonical block map: partition[i] = smallest member of i's block."""
    partition: tuple
    algebra: FiniteAlgebra = field(compare=False, repr=False)

    def __post_init__(self):
        if len(self.partition) != self.algebra.size:
            raise AlgebraError("partition length differs from carrier size")
        for i, r in enumerate(self.partition):
            # canonical form: the label of i's block is its least element
            if not 0 <= r <= i or self.partition[r] != r:
                raise AlgebraError(f"partition not in canonical block-map form at {i}")

    def related(self, a, b):
        return self.partition[a] == self.partition[b]

    def blocks(self):
        out = {}
        for i, r in enumerate(self.partition):
            out.setdefault(r, []).append(i)
        return tuple(tuple(out[r]) for r in sorted(out))

    @property
    def block_count(self):
        return len(set(self.partition))

    def is_delta(self):
        return self.block_count == self.algebra.size

    def pairs(self):
        return [(i, r) for i, r in enumerate(self.partition) if i != r]


def delta(algebra):
    return Congruence(tuple(range(algebra.size)), algebra)


def full_congruence(algebra):
    return Congruence((0,) * algebra.size, algebra)


def congruence_from_blocks(algebra, blocks):
    part = [-1] * algebra.size
    for blk in blocks:
        blk = sorted(blk)
        for i in blk:
            if not 0 <= i < algebra.size or part[i] != -1:
                raise AlgebraError("blocks do not partition the carrier")
            part[i] = blk[0]
    if -1 in part:
        raise AlgebraError("blocks do not cover the carrier")
    return Congruence(tuple(part), algebra)


def is_congruence(algebra, c):
    """Compatibility via single-coordinate substitution in every operation."""
    part = c.partition if isinstance(c, Congruence) else tuple(c)
    if len(part) != algebra.size:
        raise AlgebraError("partition length differs from carrier size")
    n = algebra.size
    related = [(a, b) for a in range(n) for b in range(a + 1, n) if part[a] == part[b]]
    for name, (arity, _) in algebra.ops.items():
        f = algebra.op(name)
        for a, b in related:
            for pos in range(arity):
                for rest in product(range(n), repeat=arity - 1):
                    t1 = rest[:pos] + (a,) + rest[pos:]
                    t2 = rest[:pos] + (b,) + rest[pos:]
                    if part[f(*t1)] != part[f(*t2)]:
                        return False
    return True


def _canonical_partition(parent_find, n):
    rep = {}
    part = [0] * n
    for i in range(n):
        r = parent_find(i)
        if r not in rep:
            rep[r] = i
        part[i] = rep[r]
    return tuple(part)


def generated_congruence(algebra, pairs):
    """Least congruence containing the pairs: union-find with operation closure."""
    n = algebra.size
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[max(ra, rb)] = min(ra, rb)
        return True

    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise AlgebraError(f"pair ({a}, {b}) out of range")
        union(a, b)
    binops = [(algebra.op(name), arity) for name, (arity, _) in algebra.ops.items()]
    changed = True
    while changed:
        changed = False
        for a in range(n):
            for b in range(a + 1, n):
                if find(a) != find(b):
                    continue
                for f, arity in binops:
                    for pos in range(arity):
                        for rest in product(range(n), repeat=arity - 1):
                            t1 = rest[:pos] + (a,) + rest[pos:]
                            t2 = rest[:pos] + (b,) + rest[pos:]
                            if union(f(*t1), f(*t2)):
                                changed = True
    return Congruence(_canonical_partition(find, n), algebra)


def congruence_join(c, d):
    return generated_congruence(c.algebra, c.pairs() + d.pairs())


def congruence_meet(c, d):
    n = c.algebra.size
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(n):
        for b in range(a + 1, n):
            if c.related(a, b) and d.related(a, b):
                parent[max(find(a), find(b))] = min(find(a), find(b))
    return Congruence(_canonical_partition(find, n), c.algebra)


def congruence_leq(c, d):
    """c finer-or-equal d: every c-block sits inside a d-block."""
    return all(d.related(i, r) for i, r in enumerate(c.partition))


def all_congruences(algebra, max_size=None):
    """Closure system generated by the principal congruences, via joins."""
    limit = size_guard(12) if max_size is None else max_size
    if algebra.size > limit:
        raise AlgebraError(
            f"size {algebra.size} exceeds congruence guard {limit}; "
            "set MVMLAB_SIZE_GUARD or pass max_size")
    n = algebra.size
    found = {delta(algebra)}
    queue = [generated_congruence(algebra, [(a, b)])
             for a in range(n) for b in range(a + 1, n)]
    for c in queue:
        found.add(c)
    pending = list(found)
    while pending:
        c = pending.pop()
        for d in list(found):
            j = congruence_join(c, d)
            if j not in found:
                found.add(j)
                pending.append(j)
    return sorted(found, key=lambda c: c.partition)


# ============================================================
# Homomorphisms and products
# ============================================================

def is_homomorphism(mapping, source, target):
    """mapping: tuple of target elements indexed by source element."""
    if len(mapping) != source.size:
        return False
    if not all(0 <= v < target.size for v in mapping):
        return False
    if not same_signature(source, target):
        return False
    for cname, v in source.consts.items():
        if mapping[v] != target.consts[cname]:
            return False
    for name, (arity, _) in source.ops.items():
        f, g = source.op(name), target.op(name)
        for args in product(range(source.size), repeat=arity):
            if mapping[f(*args)] != g(*(mapping[a] for a in args)):
                return False
    return True


def all_homomorphisms(source, target):
    """Backtracking over element images, constants pinned first."""
    if not same_signature(source, target):
        raise AlgebraError("signature mismatch")
    n = source.size
    img = [-1] * n
    for cname, v in source.consts.items():
        w = target.consts[cname]
        if img[v] not in (-1, w):
            return []
        img[v] = w
    ops = [(source.op(name), target.op(name), arity)
           for name, (arity, _) in source.ops.items()]

    def consistent():
        for f, g, arity in ops:
            for args in product(range(n), repeat=arity):
                vals = [img[a] for a in args]
                if -1 in vals:
                    continue
                got = img[f(*args)]
                if got != -1 and got != g(*vals):
                    return False
        return True

    out = []

    def assign(i):
        if i == n:
            out.append(tuple(img))
            return
        if img[i] != -1:
            assign(i + 1)
            return
        for w in range(target.size):
            img[i] = w
            if consistent():
                assign(i + 1)
            img[i] = -1

    if consistent():
        assign(0)
    return sorted(out)


def product_algebra(a, b, name=None):
    """Componentwise product; (x, y) is element x*b.size + y."""
    if not same_signature(a, b):
        raise AlgebraError("signature mismatch")
    n = a.size * b.size
    ops = {}
    for oname, (arity, _) in a.ops.items():
        f, g = a.op(oname), b.op(oname)
        table = []
        for args in product(range(n), repeat=arity):
            xs = [p // b.size for p in args]
            ys = [p % b.size for p in args]
            table.append(f(*xs) * b.size + g(*ys))
        ops[oname] = (arity, tuple(table))
    consts = {cname: a.consts[cname] * b.size + b.consts[cname] for cname in a.consts}
    return FiniteAlgebra(n, ops, consts,
                         name=name or f"{a.name}_x_{b.name}")


# ============================================================
# Light's associativity test
# ============================================================

def _normalize_binary_table(table):
    rows = list(table)
    if rows and not hasattr(rows[0], "__len__"):
        n = round(len(rows) ** 0.5)
        if n * n != len(rows):
            raise AlgebraError("flat table length is not a perfect square")
        rows = [rows[i * n:(i + 1) * n] for i in range(n)]
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise AlgebraError("table is not square")
        for v in r:
            if not 0 <= v < n:
                raise AlgebraError(f"table entry {v} out of range")
    return [list(r) for r in rows], n


def light_associativity(table, generators):
    """Associativity via Light's test: check (x t) z = x (t z) for generators t only.

    Requires the generators to generate the whole magma; raises NotGenerated
    otherwise, since the shortcut is unsound without that.
    """
    rows, n = _normalize_binary_table(table)
    gens = sorted(set(generators))
    for t in gens:
        if not 0 <= t < n:
            raise AlgebraError(f"generator {t} out of range")
    if not gens:
        raise NotGenerated("empty generator set")
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        z = frontier.pop()
        for t in gens:
            for w in (rows[t][z], rows[z][t]):
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
    if len(seen) != n:
        missing = sorted(set(range(n)) - seen)
        raise NotGenerated(f"generators do not generate; unreachable: {missing}")
    for t in gens:
        for x in range(n):
            xt = rows[x][t]
            for z in range(n):
                if rows[xt][z] != rows[x][rows[t][z]]:
                    return False
    return True


def associativity_naive(table):
    """Full triple loop, the oracle for light_associativity."""
    rows, n = _normalize_binary_table(table)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if rows[rows[x][y]][z] != rows[x][rows[y][z]]:
                    return False
    return True


# ============================================================
# Reports
# ============================================================

PASS, FAIL, INCONCLUSIVE = "PASS", "FAIL", "INCONCLUSIVE"


@dataclass
class CheckEntry:
    name: str
    status: str
    detail: str = ""


@dataclass
class Report:
    title: str
    entries: list = field(default_factory=list)
    footer: list = field(default_factory=list)

    def add(self, name, status, detail=""):
        self.entries.append(CheckEntry(name, status, detail))

    def extend(self, other):
        self.entries.extend(other.entries)

    @property
    def ok(self):
        return all(e.status != FAIL for e in self.entries)

    @property
    def all_pass(self):
        return all(e.status == PASS for e in self.entries)

    def failures(self):
        return [e for e in self.entries if e.status == FAIL]

    def render(self):
        lines = [self.title]
        for e in self.entries:
            line = f"{e.name}: {e.status}"
            if e.detail:
                line += f"  [{e.detail}]"
            lines.append(line)
        if self.footer:
            lines.append("--- stats ---")
            lines.extend(self.footer)
        return "\n".join(lines)


# ============================================================
# File format
# ============================================================

def serialize(algebra):
    """Canonical text form: leading notes, header, consts, ops (names sorted)."""
    lines = []
    for note in algebra.notes:
        lines.append(f"# {note}" if note else "#")
    lines.append(f"algebra {algebra.name} size {algebra.size}")
    for cname in sorted(algebra.consts):
        lines.append(f"const {cname} {algebra.consts[cname]}")
    for oname in sorted(algebra.ops):
        arity, table = algebra.ops[oname]
        lines.append(f"op {oname} arity {arity}")
        row = algebra.size
        for start in range(0, len(table), row):
            lines.append(" ".join(str(v) for v in table[start:start + row]))
    return "\n".join(lines) + "\n"


def parse(text):
    """Parse the file format back into a FiniteAlgebra."""
    raw_lines = text.splitlines()
    notes = []
    i = 0
    while i < len(raw_lines):
        stripped = raw_lines[i].strip()
        if stripped.startswith("#"):
            body = raw_lines[i]
            notes.append(body[2:] if body.startswith("# ") else body.lstrip("#"))
            i += 1
        elif not stripped:
            i += 1
        else:
            break
    tokens = []
    for ln in range(i, len(raw_lines)):
        line = raw_lines[ln]
        if "#" in line:
            line = line[:line.index("#")]
        for pos, tok in enumerate(line.split()):
            tokens.append((ln + 1, pos + 1, tok))
    if not tokens:
        raise AlgebraError("no algebra header found")

    cursor = 0

    def take(what):
        nonlocal cursor
        if cursor >= len(tokens):
            raise AlgebraError(f"unexpected end of file, expected {what}")
        t = tokens[cursor]
        cursor += 1
        return t

    def take_int(what):
        ln, pos, tok = take(what)
        try:
            return int(tok)
        except ValueError:
            raise AlgebraError(
                f"line {ln} token {pos}: expected {what}, got {tok!r}") from None

    ln, pos, kw = take("'algebra'")
    if kw != "algebra":
        raise AlgebraError(f"line {ln}: expected 'algebra' header, got {kw!r}")
    _, _, name = take("algebra name")
    ln, pos, kw = take("'size'")
    if kw != "size":
        raise AlgebraError(f"line {ln}: expected 'size', got {kw!r}")
    size = take_int("size value")
    if size < 1:
        raise AlgebraError(f"size must be >= 1, got {size}")

    ops, consts = {}, {}
    while cursor < len(tokens):
        ln, pos, kw = take("directive")
        if kw == "const":
            _, _, cname = take("constant name")
            v = take_int("constant value")
            if not 0 <= v < size:
                raise AlgebraError(f"line {ln}: const {cname} value {v} out of range")
            if cname in consts:
                raise AlgebraError(f"line {ln}: duplicate const {cname}")
            consts[cname] = v
        elif kw == "op":
            _, _, oname = take("operation name")
            ln2, _, kw2 = take("'arity'")
            if kw2 != "arity":
                raise AlgebraError(f"line {ln2}: expected 'arity', got {kw2!r}")
            arity = take_int("arity value")
            if arity < 1:
                raise AlgebraError(f"line {ln}: op {oname} arity must be >= 1")
            want = size ** arity
            table = []
            for _ in range(want):
                ln3, pos3, tok = take("table entry")
                try:
                    v = int(tok)
                except ValueError:
                    raise AlgebraError(
                        f"line {ln3} token {pos3}: expected table entry, got {tok!r}"
                    ) from None
                if not 0 <= v < size:
                    raise AlgebraError(
                        f"line {ln3} token {pos3}: table entry {v} out of range "
                        f"for size {size}")
                table.append(v)
            if oname in ops:
                raise AlgebraError(f"line {ln}: duplicate op {oname}")
            ops[oname] = (arity, tuple(table))
        else:
            raise AlgebraError(f"line {ln}: unknown directive {kw!r}")
    return FiniteAlgebra(size, ops, consts, name=name, notes=tuple(notes))


def parse_file(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise AlgebraError(f"cannot read {path}: {e}") from None
    return parse(text)


def write_file(algebra, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(algebra))
