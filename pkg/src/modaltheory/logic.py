"""Modal formulas, truth sets and validity in general frames.

Grammar (loosest first): ``<->`` (right assoc), ``->`` (right assoc), ``|``,
``&``, then the prefix operators ``~ <> []``.  Atoms are variables
``[a-z][a-zA-Z0-9_]*``, ``true``, ``false`` and parenthesised formulas.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Mapping

import numpy as np
import pycosat

from .frames import POWERSET_CAP, GeneralFrame, KripkeFrame, bits, to_mask

DEFAULT_BUDGET = 10**7
_CHUNK = 1 << 16


class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, token_index: int, position: int):
        super().__init__(f"{message} (token {token_index}, column {position})")
        self.token_index = token_index
        self.position = position


class UnboundVariable(KeyError):
    pass


class BudgetExceeded(ValueError):
    def __init__(self, count: int, budget: int):
        super().__init__(f"{count} valuations exceed the budget of {budget}")
        self.count = count
        self.budget = budget


# ---------------------------------------------------------------------------
# AST

class Formula:
    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Var(Formula):
    name: str


@dataclass(frozen=True)
class Bot(Formula):
    pass


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula


@dataclass(frozen=True)
class Dia(Formula):
    arg: Formula


@dataclass(frozen=True)
class Box(Formula):
    arg: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


_UNARY = {Not: "~", Dia: "<>", Box: "[]"}
_BINARY = {And: ("&", 4, "left"), Or: ("|", 3, "left"), Imp: ("->", 2, "right"), Iff: ("<->", 1, "right")}


def _prec(f: Formula) -> int:
    if type(f) in _BINARY:
        return _BINARY[type(f)][1]
    if type(f) in _UNARY:
        return 5
    return 6


def to_text(f: Formula) -> str:
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Bot):
        return "false"
    if isinstance(f, Top):
        return "true"
    if type(f) in _UNARY:
        inner = to_text(f.arg)
        if _prec(f.arg) < 5:
            inner = f"({inner})"
        return _UNARY[type(f)] + inner
    sym, p, assoc = _BINARY[type(f)]
    left, right = to_text(f.left), to_text(f.right)
    lp, rp = _prec(f.left), _prec(f.right)
    if lp < p or (lp == p and assoc == "right"):
        left = f"({left})"
    if rp < p or (rp == p and assoc == "left"):
        right = f"({right})"
    return f"{left} {sym} {right}"


def variables(f: Formula) -> list[str]:
    out: set[str] = set()
    for node in subformulas(f):
        if isinstance(node, Var):
            out.add(node.name)
    return sorted(out)


def subformulas(f: Formula) -> Iterator[Formula]:
    """Post-order walk, children before parents."""
    if type(f) in _UNARY:
        yield from subformulas(f.arg)
    elif type(f) in _BINARY:
        yield from subformulas(f.left)
        yield from subformulas(f.right)
    yield f


def substitute(f: Formula, mapping: Mapping[str, Formula]) -> Formula:
    if isinstance(f, Var):
        return mapping.get(f.name, f)
    if type(f) in _UNARY:
        return type(f)(substitute(f.arg, mapping))
    if type(f) in _BINARY:
        return type(f)(substitute(f.left, mapping), substitute(f.right, mapping))
    return f


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(<->|->|<>|\[\]|[~&|()¬◇□∧∨→↔])|([a-z][a-zA-Z0-9_]*))")
_ALIAS = {"¬": "~", "◇": "<>", "□": "[]", "∧": "&", "∨": "|", "→": "->", "↔": "<->"}


def tokenize(text: str) -> list[tuple[str, int]]:
    out = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            return out
        m = _TOKEN.match(text, pos)
        if not m:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", len(out), pos)
        tok = m.group(1) or m.group(2)
        out.append((_ALIAS.get(tok, tok), m.start(1) if m.group(1) else m.start(2)))
        pos = m.end()


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0
        self.end = len(text)

    def peek(self) -> str | None:
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def fail(self, msg: str):
        pos = self.toks[self.i][1] if self.i < len(self.toks) else self.end
        raise FormulaSyntaxError(msg, self.i, pos)

    def take(self) -> str:
        tok = self.toks[self.i][0]
        self.i += 1
        return tok

    def iff(self) -> Formula:
        left = self.imp()
        if self.peek() == "<->":
            self.take()
            return Iff(left, self.iff())
        return left

    def imp(self) -> Formula:
        left = self.disj()
        if self.peek() == "->":
            self.take()
            return Imp(left, self.imp())
        return left

    def disj(self) -> Formula:
        left = self.conj()
        while self.peek() == "|":
            self.take()
            left = Or(left, self.conj())
        return left

    def conj(self) -> Formula:
        left = self.unary()
        while self.peek() == "&":
            self.take()
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        tok = self.peek()
        if tok == "~":
            self.take()
            return Not(self.unary())
        if tok == "<>":
            self.take()
            return Dia(self.unary())
        if tok == "[]":
            self.take()
            return Box(self.unary())
        return self.atom()

    def atom(self) -> Formula:
        tok = self.peek()
        if tok is None:
            self.fail("unexpected end of formula")
        if tok == "(":
            self.take()
            inner = self.iff()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.take()
            return inner
        if tok == "true":
            self.take()
            return Top()
        if tok == "false":
            self.take()
            return Bot()
        if tok[0].isalpha():
            self.take()
            return Var(tok)
        self.fail(f"unexpected token {tok!r}")


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    f = p.iff()
    if p.peek() is not None:
        p.fail(f"unexpected token {p.peek()!r}")
    return f


# ---------------------------------------------------------------------------
# truth sets

def _as_general(g: GeneralFrame | KripkeFrame) -> GeneralFrame:
    if isinstance(g, KripkeFrame):
        return GeneralFrame(g, tuple(1 << x for x in range(g.size)))
    return g


def truth_set(g: GeneralFrame | KripkeFrame, valuation: Mapping[str, object], f: Formula) -> int:
    """Bit-set of worlds where ``f`` holds; ``valuation`` maps variables to bit-sets or world lists."""
    g = _as_general(g)
    base = g.base
    val = {}
    for name, v in valuation.items():
        m = v if isinstance(v, int) else to_mask(v)
        if m & ~base.full or not g.contains(m):
            raise ValueError(f"value of {name!r} is not an admissible set")
        val[name] = m
    memo: dict[Formula, int] = {}
    for node in subformulas(f):
        if node in memo:
            continue
        if isinstance(node, Var):
            if node.name not in val:
                raise UnboundVariable(node.name)
            r = val[node.name]
        elif isinstance(node, Bot):
            r = 0
        elif isinstance(node, Top):
            r = base.full
        elif isinstance(node, Not):
            r = base.full & ~memo[node.arg]
        elif isinstance(node, Dia):
            r = base.preimage(memo[node.arg])
        elif isinstance(node, Box):
            r = base.box(memo[node.arg])
        else:
            a, b = memo[node.left], memo[node.right]
            if isinstance(node, And):
                r = a & b
            elif isinstance(node, Or):
                r = a | b
            elif isinstance(node, Imp):
                r = (base.full & ~a) | b
            else:
                r = base.full & ~(a ^ b)
        memo[node] = r
    return memo[f]


def _truth_vec(base: KripkeFrame, f: Formula, env: Mapping[str, np.ndarray], count: int) -> np.ndarray:
    full = np.uint64(base.full)
    succ = [np.uint64(s) for s in base.succ]
    one = np.uint64(1)
    memo: dict[Formula, np.ndarray] = {}
    for node in subformulas(f):
        if node in memo:
            continue
        if isinstance(node, Var):
            r = env[node.name]
        elif isinstance(node, Bot):
            r = np.zeros(count, dtype=np.uint64)
        elif isinstance(node, Top):
            r = np.full(count, full, dtype=np.uint64)
        elif isinstance(node, Not):
            r = memo[node.arg] ^ full
        elif isinstance(node, (Dia, Box)):
            a = memo[node.arg]
            r = np.zeros(count, dtype=np.uint64)
            for x, s in enumerate(succ):
                hit = (a & s) != 0 if isinstance(node, Dia) else ((a ^ full) & s) == 0
                r |= hit.astype(np.uint64) << np.uint64(x)
        else:
            a, b = memo[node.left], memo[node.right]
            if isinstance(node, And):
                r = a & b
            elif isinstance(node, Or):
                r = a | b
            elif isinstance(node, Imp):
                r = (a ^ full) | b
            else:
                r = (a ^ b) ^ full
        memo[node] = r
    return memo[f]


# ---------------------------------------------------------------------------
# validity

@dataclass(frozen=True)
class ValidityResult:
    valid: bool
    countervaluation: dict[str, tuple[int, ...]] | None = None
    world: int | None = None
    method: str = "enumerate"
    checked: int = 0

    def __bool__(self) -> bool:
        return self.valid


def valuation_count(g: GeneralFrame | KripkeFrame, f: Formula) -> int:
    return _as_general(g).member_count() ** len(variables(f))


def valid_in(
    g: GeneralFrame | KripkeFrame,
    f: Formula | str,
    budget: int = DEFAULT_BUDGET,
    method: str = "enumerate",
) -> ValidityResult:
    """Decide validity of ``f`` in ``g``.

    ``enumerate`` walks every assignment of algebra members to variables in
    lexicographic order and reports the first countervaluation; it refuses
    with :class:`BudgetExceeded` when the count is over ``budget``.
    ``sat`` is a complete search by a SAT solver with one propositional
    variable per (formula variable, atom).  ``auto`` enumerates within the
    budget and falls back to ``sat`` beyond it.
    """
    if isinstance(f, str):
        f = parse_formula(f)
    g = _as_general(g)
    if method == "sat":
        return _valid_sat(g, f)
    if not variables(f):
        res = truth_set(g, {}, f)
        bad = g.base.full & ~res
        if bad:
            return ValidityResult(False, {}, bits(bad)[0], "enumerate", 1)
        return ValidityResult(True, method="enumerate", checked=1)
    total = valuation_count(g, f)
    if method == "auto" and len(g.atoms) > POWERSET_CAP:
        return _valid_sat(g, f)
    if total > budget:
        if method == "auto":
            return _valid_sat(g, f)
        raise BudgetExceeded(total, budget)
    if method not in ("enumerate", "auto"):
        raise ValueError(f"unknown method {method!r}")
    if g.size > 64:
        return _valid_loop(g, f, total)
    names = variables(f)
    k = len(names)
    members = g.member_array()
    m = len(members)
    full = g.base.full
    for start in range(0, total, _CHUNK):
        stop = min(total, start + _CHUNK)
        idx = np.arange(start, stop, dtype=np.int64)
        env = {}
        for i, name in enumerate(names):
            digit = (idx // (m ** (k - 1 - i))) % m
            env[name] = members[digit]
        res = _truth_vec(g.base, f, env, stop - start)
        bad = np.nonzero(res != np.uint64(full))[0]
        if len(bad):
            j = int(bad[0])
            cv = {name: tuple(bits(int(env[name][j]))) for name in names}
            world = bits(full & ~int(res[j]))[0]
            return ValidityResult(False, cv, world, "enumerate", start + j + 1)
    return ValidityResult(True, method="enumerate", checked=total)


def _valid_loop(g: GeneralFrame, f: Formula, total: int) -> ValidityResult:
    names = variables(f)
    members = g.algebra
    for n, combo in enumerate(product(members, repeat=len(names))):
        val = dict(zip(names, combo))
        res = truth_set(g, val, f)
        if res != g.base.full:
            cv = {name: tuple(bits(v)) for name, v in val.items()}
            return ValidityResult(False, cv, bits(g.base.full & ~res)[0], "enumerate", n + 1)
    return ValidityResult(True, method="enumerate", checked=total)


def _valid_sat(g: GeneralFrame, f: Formula) -> ValidityResult:
    base = g.base
    n = base.size
    names = variables(f)
    counter = [0]

    def fresh() -> int:
        counter[0] += 1
        return counter[0]

    atom_index = {}
    for i, a in enumerate(g.atoms):
        for x in bits(a):
            atom_index[x] = i
    atom_var = {(name, i): fresh() for name in names for i in range(len(g.atoms))}
    clauses: list[list[int]] = []
    true_lit = fresh()
    clauses.append([true_lit])
    lits: dict[Formula, list[int]] = {}
    for node in subformulas(f):
        if node in lits:
            continue
        if isinstance(node, Var):
            lits[node] = [atom_var[(node.name, atom_index[x])] for x in range(n)]
        elif isinstance(node, Bot):
            lits[node] = [-true_lit] * n
        elif isinstance(node, Top):
            lits[node] = [true_lit] * n
        elif isinstance(node, Not):
            lits[node] = [-v for v in lits[node.arg]]
        elif isinstance(node, (Dia, Box)):
            a = lits[node.arg]
            out = []
            for x in range(n):
                t = fresh()
                ys = bits(base.succ[x])
                if isinstance(node, Dia):
                    clauses.append([-t] + [a[y] for y in ys])
                    clauses.extend([t, -a[y]] for y in ys)
                else:
                    clauses.append([t] + [-a[y] for y in ys])
                    clauses.extend([-t, a[y]] for y in ys)
                out.append(t)
            lits[node] = out
        else:
            la, lb = lits[node.left], lits[node.right]
            out = []
            for x in range(n):
                t, a, b = fresh(), la[x], lb[x]
                if isinstance(node, And):
                    clauses += [[-t, a], [-t, b], [t, -a, -b]]
                elif isinstance(node, Or):
                    clauses += [[-t, a, b], [t, -a], [t, -b]]
                elif isinstance(node, Imp):
                    clauses += [[-t, -a, b], [t, a], [t, -b]]
                else:
                    clauses += [[-t, -a, b], [-t, a, -b], [t, a, b], [t, -a, -b]]
                out.append(t)
            lits[node] = out
    clauses.append([-v for v in lits[f]])
    sol = pycosat.solve(clauses)
    if sol == "UNSAT":
        return ValidityResult(True, method="sat")
    model = {abs(v) for v in sol if v > 0}
    val = {}
    for name in names:
        m = 0
        for i, a in enumerate(g.atoms):
            if atom_var[(name, i)] in model:
                m |= a
        val[name] = m
    res = truth_set(g, val, f)
    if res == base.full:
        raise AssertionError("solver model does not falsify the formula")
    cv = {name: tuple(bits(v)) for name, v in val.items()}
    return ValidityResult(False, cv, bits(base.full & ~res)[0], "sat")


# ---------------------------------------------------------------------------
# axiom battery

AXIOMS: dict[str, str] = {
    "N": "~<>false",
    "K": "<>(p | q) -> <>p | <>q",
    "T": "p -> <>p",
    "4": "<><>p -> <>p",
    ".2": "<>[]p -> []<>p",
    ".1c": "[]<>p -> <>[]p",
    ".2.1": "[]<>p <-> <>[]p",
    "Grz": "[]([](p -> []p) -> p) -> p",
    "TRIV": "p <-> <>p",
}
S4_AXIOMS = ("N", "K", "T", "4")
S421_AXIOMS = ("T", "4", ".2", ".1c", ".2.1")


@dataclass(frozen=True)
class AxiomResult:
    name: str
    formula: str
    valid: bool
    countervaluation: dict[str, tuple[int, ...]] | None = None
    world: int | None = None
    method: str = "enumerate"


@dataclass(frozen=True)
class AxiomReport:
    results: tuple[AxiomResult, ...] = field(default_factory=tuple)

    def __getitem__(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def valid(self, name: str) -> bool:
        return self[name].valid

    def table(self) -> str:
        lines = [f"{'axiom':<6} {'formula':<30} {'result':<8} countervaluation"]
        for r in self.results:
            cv = "" if r.valid else f"{r.countervaluation} at world {r.world}"
            lines.append(f"{r.name:<6} {r.formula:<30} {'valid' if r.valid else 'INVALID':<8} {cv}".rstrip())
        return "\n".join(lines)


def axiom_battery(
    g: GeneralFrame | KripkeFrame,
    names=None,
    budget: int = DEFAULT_BUDGET,
    method: str = "enumerate",
) -> AxiomReport:
    out = []
    for name in names or AXIOMS:
        text = AXIOMS[name]
        r = valid_in(g, parse_formula(text), budget=budget, method=method)
        out.append(AxiomResult(name, text, r.valid, r.countervaluation, r.world, r.method))
    return AxiomReport(tuple(out))
