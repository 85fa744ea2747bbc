"""Brute-force reference implementations.

Each function here re-derives a result by plain enumeration, sharing no
code with the routes it is used to check.  They are only meant for small
inputs.
"""
from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Iterator, Sequence

from . import logic as L
from .structures import Structure


def all_partitions(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every partition of 0..n-1, via restricted growth strings."""
    labels = [0] * n

    def rec(i: int, top: int):
        if i == n:
            blocks: dict[int, list[int]] = {}
            for x, lab in enumerate(labels):
                blocks.setdefault(lab, []).append(x)
            yield tuple(tuple(b) for b in blocks.values())
            return
        for lab in range(top + 2):
            labels[i] = lab
            yield from rec(i + 1, max(top, lab))

    if n == 0:
        yield ()
        return
    yield from rec(1, 0)


def _table_value(s: Structure, name: str, args: Sequence[int]) -> int:
    return s.apply(name, *args)


def brute_submodels(s: Structure) -> set[frozenset[int]]:
    n = s.size
    out = set()
    for r in range(1, n + 1):
        for sub in combinations(range(n), r):
            inside = set(sub)
            if any(v not in inside for v in s.constants.values()):
                continue
            ok = True
            for name, arity in s.signature.functions:
                for args in product(sub, repeat=arity):
                    if _table_value(s, name, args) not in inside:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out.add(frozenset(sub))
    return out


def brute_is_congruence(s: Structure, blocks) -> bool:
    label = {}
    for i, b in enumerate(blocks):
        for x in b:
            label[x] = i
    n = s.size
    for name, arity in s.signature.functions:
        for a in product(range(n), repeat=arity):
            for b in product(range(n), repeat=arity):
                if all(label[x] == label[y] for x, y in zip(a, b)):
                    if label[_table_value(s, name, a)] != label[_table_value(s, name, b)]:
                        return False
    return True


def brute_is_congruence_unary(s: Structure, blocks) -> bool:
    label = {}
    for i, b in enumerate(blocks):
        for x in b:
            label[x] = i
    for name, _ in s.signature.functions:
        images: dict[int, int] = {}
        for x in range(s.size):
            img = label[_table_value(s, name, (x,))]
            if images.setdefault(label[x], img) != img:
                return False
    return True


def brute_congruences(s: Structure) -> set[tuple[tuple[int, ...], ...]]:
    """Filter all partitions by pairwise compatibility."""
    check = brute_is_congruence_unary if s.signature.unary_only else brute_is_congruence
    out = set()
    for p in all_partitions(s.size):
        if check(s, p):
            out.add(tuple(sorted(tuple(sorted(b)) for b in p)))
    return out


def brute_isomorphic(s1: Structure, s2: Structure) -> bool:
    """Try every bijection."""
    if s1.signature != s2.signature or s1.size != s2.size:
        return False
    n = s1.size
    for perm in permutations(range(n)):
        ok = all(perm[v] == s2.constants[c] for c, v in s1.constants.items())
        for name, arity in s1.signature.functions:
            if not ok:
                break
            for args in product(range(n), repeat=arity):
                if perm[s1.apply(name, *args)] != s2.apply(name, *(perm[a] for a in args)):
                    ok = False
                    break
        for name, _ in s1.signature.predicates:
            if ok and {tuple(perm[x] for x in t) for t in s1.predicates[name]} != s2.predicates[name]:
                ok = False
        if ok:
            return True
    return False


def brute_frames_isomorphic(n1: int, rel1, n2: int, rel2) -> bool:
    if n1 != n2 or len(rel1) != len(rel2):
        return False
    rel2 = set(rel2)
    return any(all((p[a], p[b]) in rel2 for a, b in rel1) for p in permutations(range(n1)))


def world_truth(succ: Sequence[Sequence[int]], val: dict[str, set[int]], f, x: int) -> bool:
    """Truth of a formula at one world, by the textbook recursive clauses."""
    if isinstance(f, L.Var):
        return x in val[f.name]
    if isinstance(f, L.Bot):
        return False
    if isinstance(f, L.Top):
        return True
    if isinstance(f, L.Not):
        return not world_truth(succ, val, f.arg, x)
    if isinstance(f, L.Dia):
        return any(world_truth(succ, val, f.arg, y) for y in succ[x])
    if isinstance(f, L.Box):
        return all(world_truth(succ, val, f.arg, y) for y in succ[x])
    a = world_truth(succ, val, f.left, x)
    b = world_truth(succ, val, f.right, x)
    if isinstance(f, L.And):
        return a and b
    if isinstance(f, L.Or):
        return a or b
    if isinstance(f, L.Imp):
        return (not a) or b
    return a == b


def brute_valid(n: int, relation, members: Sequence[frozenset[int]], f) -> bool:
    """Per-world, per-assignment validity over the given admissible sets."""
    succ = [[y for (a, y) in relation if a == x] for x in range(n)]
    names = L.variables(f)
    for combo in product(members, repeat=len(names)):
        val = dict(zip(names, (set(c) for c in combo)))
        for x in range(n):
            if not world_truth(succ, val, f, x):
                return False
    return True


def all_subsets(n: int) -> list[frozenset[int]]:
    return [frozenset(c) for r in range(n + 1) for c in combinations(range(n), r)]


def divisor_count(n: int) -> int:
    return sum(1 for d in range(1, n + 1) if n % d == 0)
