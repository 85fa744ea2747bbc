"""Finite first-order structures and the frames they induce.

Universe elements are always ``0..n-1``.  Subsets of the universe are
handled internally as int bit-sets; the public enumeration functions
return frozensets / tuples of blocks so results are easy to read.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Sequence

SUBMODEL_CAP = 20
CONGRUENCE_CAP = 12

KINDS = ("sub", "ext", "quot")


class StructureError(ValueError):
    """Malformed structure or structure document."""


class CapExceeded(ValueError):
    """An enumeration would exceed its configured cap."""


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _mask(elems: Iterable[int]) -> int:
    m = 0
    for e in elems:
        m |= 1 << e
    return m


@dataclass(frozen=True)
class Signature:
    functions: tuple[tuple[str, int], ...] = ()
    predicates: tuple[tuple[str, int], ...] = ()
    constants: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "functions", tuple(sorted((str(f), int(a)) for f, a in self.functions)))
        object.__setattr__(self, "predicates", tuple(sorted((str(p), int(a)) for p, a in self.predicates)))
        object.__setattr__(self, "constants", tuple(sorted(str(c) for c in self.constants)))
        names = [f for f, _ in self.functions] + [p for p, _ in self.predicates] + list(self.constants)
        if len(set(names)) != len(names):
            raise StructureError(f"duplicate symbol names in signature: {names}")
        for name, arity in self.functions + self.predicates:
            if arity < 1:
                raise StructureError(f"symbol {name!r} must have positive arity, got {arity}")

    def arity(self, name: str) -> int:
        for f, a in self.functions + self.predicates:
            if f == name:
                return a
        raise KeyError(name)

    @property
    def unary_only(self) -> bool:
        return all(a == 1 for _, a in self.functions)

    def with_constant(self, name: str) -> "Signature":
        if name in self.constants:
            return self
        return Signature(self.functions, self.predicates, self.constants + (name,))


def _index(args: Sequence[int], n: int) -> int:
    idx = 0
    for a in args:
        idx = idx * n + a
    return idx


@dataclass(frozen=True)
class Structure:
    """A finite structure.

    Function tables are flattened row-major: the entry for ``(a1, ..., ak)``
    lives at ``((a1*n + a2)*n + ...)``.
    """

    signature: Signature
    size: int
    functions: Mapping[str, tuple[int, ...]] = field(default_factory=dict)
    predicates: Mapping[str, frozenset[tuple[int, ...]]] = field(default_factory=dict)
    constants: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        n = self.size
        if not isinstance(n, int) or n < 1:
            raise StructureError(f"universe must be nonempty, got size {n!r}")
        sig = self.signature
        funcs = {}
        for name, arity in sig.functions:
            if name not in self.functions:
                raise StructureError(f"missing table for function {name!r}")
            table = tuple(int(v) for v in self.functions[name])
            if len(table) != n**arity:
                raise StructureError(f"function {name!r}: expected {n**arity} entries, got {len(table)}")
            for v in table:
                if not 0 <= v < n:
                    raise StructureError(f"function {name!r}: value {v} out of range 0..{n - 1}")
            funcs[name] = table
        preds = {}
        for name, arity in sig.predicates:
            ext = frozenset(tuple(int(x) for x in t) for t in self.predicates.get(name, ()))
            for t in ext:
                if len(t) != arity:
                    raise StructureError(f"predicate {name!r}: tuple {t} has wrong arity")
                if any(not 0 <= x < n for x in t):
                    raise StructureError(f"predicate {name!r}: tuple {t} out of range")
            preds[name] = ext
        consts = {}
        for name in sig.constants:
            if name not in self.constants:
                raise StructureError(f"missing value for constant {name!r}")
            v = int(self.constants[name])
            if not 0 <= v < n:
                raise StructureError(f"constant {name!r}: value {v} out of range")
            consts[name] = v
        extra = (set(self.functions) - set(funcs)) | (set(self.predicates) - set(preds)) | (
            set(self.constants) - set(consts)
        )
        if extra:
            raise StructureError(f"symbols not in signature: {sorted(extra)}")
        object.__setattr__(self, "functions", funcs)
        object.__setattr__(self, "predicates", preds)
        object.__setattr__(self, "constants", consts)

    def __hash__(self):
        return hash(self.key())

    def key(self) -> tuple:
        """Total order key: size first, then tables in signature order."""
        return (
            self.size,
            tuple(self.functions[f] for f, _ in self.signature.functions),
            tuple(tuple(sorted(self.predicates[p])) for p, _ in self.signature.predicates),
            tuple(self.constants[c] for c in self.signature.constants),
        )

    def apply(self, name: str, *args: int) -> int:
        return self.functions[name][_index(args, self.size)]

    @property
    def constant_mask(self) -> int:
        return _mask(self.constants.values())


# ---------------------------------------------------------------------------
# documents

def load_structure(doc) -> Structure:
    """Build a validated :class:`Structure` from a JSON document (dict or text)."""
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as e:
            raise StructureError(f"invalid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise StructureError("structure document must be a JSON object")
    try:
        sig_doc = doc.get("signature", {})
        sig = Signature(
            functions=[(f["name"], f["arity"]) for f in sig_doc.get("functions", [])],
            predicates=[(p["name"], p["arity"]) for p in sig_doc.get("predicates", [])],
            constants=list(sig_doc.get("constants", [])),
        )
        n = doc["universe"]
    except (KeyError, TypeError) as e:
        raise StructureError(f"malformed structure document: {e}") from None
    if not isinstance(n, int) or isinstance(n, bool):
        raise StructureError(f"universe must be an integer, got {n!r}")
    if n < 1:
        raise StructureError(f"universe must be nonempty, got {n}")
    funcs = {}
    fdoc = doc.get("functions", {})
    for name, arity in sig.functions:
        if name not in fdoc:
            raise StructureError(f"missing table for function {name!r}")
        funcs[name] = _flatten(fdoc[name], arity, n, name)
    for name in fdoc:
        if name not in funcs:
            raise StructureError(f"function {name!r} not declared in signature")
    preds = {}
    pdoc = doc.get("predicates", {})
    for name in pdoc:
        if name not in dict(sig.predicates):
            raise StructureError(f"predicate {name!r} not declared in signature")
    for name, _ in sig.predicates:
        preds[name] = [tuple(t) for t in pdoc.get(name, [])]
    return Structure(sig, n, funcs, preds, dict(doc.get("constants", {})))


def _flatten(table, arity: int, n: int, name: str) -> list[int]:
    if arity == 0:
        if not isinstance(table, int) or isinstance(table, bool):
            raise StructureError(f"function {name!r}: table entries must be integers")
        return [table]
    if not isinstance(table, list) or len(table) != n:
        raise StructureError(f"function {name!r}: expected a list of length {n} at each level")
    out: list[int] = []
    for row in table:
        out.extend(_flatten(row, arity - 1, n, name))
    return out


def _nest(flat: Sequence[int], arity: int, n: int):
    if arity == 1:
        return list(flat)
    step = n ** (arity - 1)
    return [_nest(flat[i * step:(i + 1) * step], arity - 1, n) for i in range(n)]


def structure_to_doc(s: Structure) -> dict:
    sig = s.signature
    return {
        "signature": {
            "functions": [{"name": f, "arity": a} for f, a in sig.functions],
            "predicates": [{"name": p, "arity": a} for p, a in sig.predicates],
            "constants": list(sig.constants),
        },
        "universe": s.size,
        "functions": {f: _nest(s.functions[f], a, s.size) for f, a in sig.functions},
        "predicates": {p: [list(t) for t in sorted(s.predicates[p])] for p, _ in sig.predicates},
        "constants": {c: s.constants[c] for c in sig.constants},
    }


def load_structure_file(path) -> Structure:
    with open(path) as fh:
        return load_structure(fh.read())


# ---------------------------------------------------------------------------
# unars and their sums

UNAR = Signature(functions=[("F", 1)])


def make_cycle(n: int) -> Structure:
    """The one-generated unar F(i) = (i+1) mod n."""
    if n < 1:
        raise StructureError(f"cycle length must be positive, got {n}")
    return Structure(UNAR, n, {"F": [(i + 1) % n for i in range(n)]})


def disjoint_sum(parts: Sequence[Structure]) -> Structure:
    if not parts:
        raise StructureError("disjoint sum of no structures")
    sig = parts[0].signature
    for p in parts:
        if p.signature != sig:
            raise StructureError("disjoint sum needs a common signature")
    if sig.constants:
        raise StructureError("disjoint sum is undefined with constant symbols")
    if not sig.unary_only:
        raise StructureError("disjoint sum only supports unary function symbols")
    funcs: dict[str, list[int]] = {f: [] for f, _ in sig.functions}
    preds: dict[str, list[tuple[int, ...]]] = {p: [] for p, _ in sig.predicates}
    offset = 0
    for p in parts:
        for f in funcs:
            funcs[f].extend(v + offset for v in p.functions[f])
        for name in preds:
            preds[name].extend(tuple(x + offset for x in t) for t in p.predicates[name])
        offset += p.size
    return Structure(sig, offset, funcs, preds)


def sum_of_cycles(lengths: Iterable[int]) -> Structure:
    return disjoint_sum([make_cycle(k) for k in lengths])


def add_fixed_point(s: Structure, constant: str | None = None) -> Structure:
    """Append a point ``a`` with F(a) = a for every F; every constant moves to ``a``.

    If ``constant`` names a symbol not yet in the signature it is added,
    which is how a constant-free unar is expanded to a signature with one.
    """
    sig = s.signature
    if not sig.unary_only:
        raise StructureError("add_fixed_point needs unary function symbols only")
    if constant is not None:
        sig = sig.with_constant(constant)
    a = s.size
    funcs = {f: list(s.functions[f]) + [a] for f, _ in sig.functions}
    consts = {c: a for c in sig.constants}
    return Structure(sig, a + 1, funcs, dict(s.predicates), consts)


# ---------------------------------------------------------------------------
# submodels

def closure(s: Structure, seed: int) -> int:
    """Smallest subset (bit-set) containing ``seed`` and closed under every function."""
    n = s.size
    cur = seed
    while True:
        new = cur
        elems = _bits(cur)
        for name, arity in s.signature.functions:
            table = s.functions[name]
            if arity == 1:
                for x in elems:
                    new |= 1 << table[x]
            else:
                for args in product(elems, repeat=arity):
                    new |= 1 << table[_index(args, n)]
        if new == cur:
            return cur
        cur = new


def is_closed(s: Structure, mask: int) -> bool:
    return closure(s, mask) == mask


def submodel_masks(s: Structure, cap: int = SUBMODEL_CAP) -> list[int]:
    n = s.size
    if n > cap:
        raise CapExceeded(f"submodel enumeration capped at universe size {cap}, got {n}")
    if s.signature.constants:
        start = [closure(s, s.constant_mask)]
    else:
        start = [closure(s, 1 << x) for x in range(n)]
    seen = set(start)
    stack = list(seen)
    while stack:
        c = stack.pop()
        for x in range(n):
            if not (c >> x) & 1:
                d = closure(s, c | (1 << x))
                if d not in seen:
                    seen.add(d)
                    stack.append(d)
    return sorted(seen, key=lambda m: (bin(m).count("1"), _bits(m)))


def submodels(s: Structure, cap: int = SUBMODEL_CAP) -> list[frozenset[int]]:
    """Universes of all submodels, ordered by size then elements."""
    return [frozenset(_bits(m)) for m in submodel_masks(s, cap)]


def restrict(s: Structure, subset: Iterable[int]) -> Structure:
    """The submodel on ``subset``, relabelled in increasing element order."""
    elems = sorted(set(subset))
    m = _mask(elems)
    if not elems or not is_closed(s, m) or (s.constant_mask & ~m):
        raise StructureError(f"{elems} is not the universe of a submodel")
    pos = {x: i for i, x in enumerate(elems)}
    k = len(elems)
    funcs = {}
    for name, arity in s.signature.functions:
        table = s.functions[name]
        funcs[name] = [pos[table[_index(args, s.size)]] for args in product(elems, repeat=arity)]
    preds = {
        name: [tuple(pos[x] for x in t) for t in s.predicates[name] if all((m >> x) & 1 for x in t)]
        for name, _ in s.signature.predicates
    }
    consts = {c: pos[v] for c, v in s.constants.items()}
    return Structure(s.signature, k, funcs, preds, consts)


def submodel_structures(s: Structure, cap: int = SUBMODEL_CAP) -> list[Structure]:
    return [restrict(s, _bits(m)) for m in submodel_masks(s, cap)]


# ---------------------------------------------------------------------------
# congruences and quotients

Partition = tuple[tuple[int, ...], ...]


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _union(parent: list[int], a: int, b: int) -> bool:
    ra, rb = _find(parent, a), _find(parent, b)
    if ra == rb:
        return False
    if ra < rb:
        parent[rb] = ra
    else:
        parent[ra] = rb
    return True


def _congruence_closure(s: Structure, parent: list[int]) -> list[int]:
    n = s.size
    changed = True
    while changed:
        changed = False
        for name, arity in s.signature.functions:
            table = s.functions[name]
            for pos in range(arity):
                for others in product(range(n), repeat=arity - 1):
                    for x in range(n):
                        r = _find(parent, x)
                        if r == x:
                            continue
                        a = table[_index(others[:pos] + (x,) + others[pos:], n)]
                        b = table[_index(others[:pos] + (r,) + others[pos:], n)]
                        if _union(parent, a, b):
                            changed = True
    return [_find(parent, x) for x in range(n)]


def _blocks(labels: Sequence[int]) -> Partition:
    groups: dict[int, list[int]] = {}
    for x, r in enumerate(labels):
        groups.setdefault(r, []).append(x)
    return tuple(sorted(tuple(g) for g in groups.values()))


def normalize_partition(blocks: Iterable[Iterable[int]], n: int) -> Partition:
    part = tuple(sorted(tuple(sorted(b)) for b in blocks))
    flat = sorted(x for b in part for x in b)
    if flat != list(range(n)) or any(not b for b in part):
        raise StructureError(f"{part} is not a partition of 0..{n - 1}")
    return part


def is_congruence(s: Structure, blocks: Iterable[Iterable[int]]) -> bool:
    part = normalize_partition(blocks, s.size)
    labels = [0] * s.size
    for b in part:
        for x in b:
            labels[x] = b[0]
    return _blocks(_congruence_closure(s, list(labels))) == part


def congruences(s: Structure, cap: int = CONGRUENCE_CAP) -> list[Partition]:
    """All congruences, finest first (identity first, total last)."""
    n = s.size
    if n > cap:
        raise CapExceeded(f"congruence enumeration capped at universe size {cap}, got {n}")
    ident = tuple(_congruence_closure(s, list(range(n))))
    seen = {ident}
    stack = [ident]
    while stack:
        labels = stack.pop()
        reps = sorted(set(labels))
        for i, a in enumerate(reps):
            for b in reps[i + 1:]:
                parent = list(labels)
                _union(parent, a, b)
                new = tuple(_congruence_closure(s, parent))
                if new not in seen:
                    seen.add(new)
                    stack.append(new)
    parts = [_blocks(lab) for lab in seen]
    return sorted(parts, key=lambda p: (-len(p), p))


def quotient(s: Structure, blocks: Iterable[Iterable[int]]) -> Structure:
    """Blockwise structure; a predicate holds on blocks iff it holds on some representatives."""
    part = normalize_partition(blocks, s.size)
    if not is_congruence(s, part):
        raise StructureError(f"{part} is not a congruence")
    block_of = [0] * s.size
    for i, b in enumerate(part):
        for x in b:
            block_of[x] = i
    reps = [b[0] for b in part]
    k = len(part)
    funcs = {}
    for name, arity in s.signature.functions:
        table = s.functions[name]
        funcs[name] = [
            block_of[table[_index([reps[i] for i in args], s.size)]] for args in product(range(k), repeat=arity)
        ]
    preds = {name: {tuple(block_of[x] for x in t) for t in s.predicates[name]} for name, _ in s.signature.predicates}
    consts = {c: block_of[v] for c, v in s.constants.items()}
    return Structure(s.signature, k, funcs, preds, consts)


def quotient_structures(s: Structure, cap: int = CONGRUENCE_CAP) -> list[Structure]:
    return [quotient(s, p) for p in congruences(s, cap)]


# ---------------------------------------------------------------------------
# isomorphism

@dataclass(frozen=True)
class IsoMap:
    mapping: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def inverse(self) -> "IsoMap":
        inv = [0] * len(self.mapping)
        for x, y in enumerate(self.mapping):
            inv[y] = x
        return IsoMap(tuple(inv))

    def compose(self, other: "IsoMap") -> "IsoMap":
        """``other`` after ``self``."""
        return IsoMap(tuple(other.mapping[y] for y in self.mapping))


def _rank(sigs: Sequence) -> list[int]:
    order = {v: i for i, v in enumerate(sorted(set(sigs)))}
    return [order[v] for v in sigs]


def element_colors(s: Structure) -> list[int]:
    """Label-invariant colouring by iterated refinement over tables and relations."""
    n = s.size
    init: list[list] = [[] for _ in range(n)]
    for c, v in s.constants.items():
        init[v].append(c)
    colors = _rank([tuple(sorted(x)) for x in init])
    while True:
        items: list[list] = [[] for _ in range(n)]
        for name, arity in s.signature.functions:
            table = s.functions[name]
            for idx, args in enumerate(product(range(n), repeat=arity)):
                r = table[idx]
                argc = tuple(colors[a] for a in args)
                for p, a in enumerate(args):
                    items[a].append((name, p, argc, colors[r]))
                items[r].append((name, -1, argc, -1))
        for name, _ in s.signature.predicates:
            for t in s.predicates[name]:
                argc = tuple(colors[a] for a in t)
                for p, a in enumerate(t):
                    items[a].append((name, p, argc, -1))
        new = _rank([(colors[x], tuple(sorted(items[x]))) for x in range(n)])
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _touching(s: Structure) -> list[list[tuple]]:
    """Per element, the table facts mentioning it: (kind, name, elements)."""
    n = s.size
    touch: list[list[tuple]] = [[] for _ in range(n)]
    for name, arity in s.signature.functions:
        table = s.functions[name]
        for idx, args in enumerate(product(range(n), repeat=arity)):
            fact = ("f", name, args + (table[idx],))
            for x in set(fact[2]):
                touch[x].append(fact)
    for name, _ in s.signature.predicates:
        for t in s.predicates[name]:
            fact = ("p", name, t)
            for x in set(t):
                touch[x].append(fact)
    return touch


def isomorphic(s1: Structure, s2: Structure) -> IsoMap | None:
    """A witnessing isomorphism ``s1 -> s2``, or None."""
    if s1.signature != s2.signature or s1.size != s2.size:
        return None
    for name, _ in s1.signature.predicates:
        if len(s1.predicates[name]) != len(s2.predicates[name]):
            return None
    c1, c2 = element_colors(s1), element_colors(s2)
    if sorted(c1) != sorted(c2):
        return None
    n = s1.size
    fixed: dict[int, int] = {}
    for c, v in s1.constants.items():
        w = s2.constants[c]
        if fixed.get(v, w) != w or c1[v] != c2[w]:
            return None
        fixed[v] = w
    if len(set(fixed.values())) != len(fixed):
        return None
    count = {}
    for c in c1:
        count[c] = count.get(c, 0) + 1
    order = sorted(range(n), key=lambda x: (x not in fixed, count[c1[x]], c1[x], x))
    by_color: dict[int, list[int]] = {}
    for y in range(n):
        by_color.setdefault(c2[y], []).append(y)
    touch = _touching(s1)
    m = [-1] * n
    used = [False] * n

    def consistent(x: int) -> bool:
        for kind, name, elems in touch[x]:
            if any(m[e] < 0 for e in elems):
                continue
            if kind == "f":
                img = [m[e] for e in elems]
                if s2.functions[name][_index(img[:-1], n)] != img[-1]:
                    return False
            elif tuple(m[e] for e in elems) not in s2.predicates[name]:
                return False
        return True

    def search(k: int) -> bool:
        if k == n:
            return True
        x = order[k]
        cands = [fixed[x]] if x in fixed else by_color[c1[x]]
        for y in cands:
            if used[y]:
                continue
            m[x] = y
            used[y] = True
            if consistent(x) and search(k + 1):
                return True
            m[x] = -1
            used[y] = False
        return False

    if search(0):
        return IsoMap(tuple(m))
    return None


def is_isomorphism(s1: Structure, s2: Structure, iso: IsoMap) -> bool:
    n = s1.size
    m = iso.mapping
    if s1.signature != s2.signature or s2.size != n or sorted(m) != list(range(n)):
        return False
    for name, arity in s1.signature.functions:
        for args in product(range(n), repeat=arity):
            if m[s1.apply(name, *args)] != s2.apply(name, *(m[a] for a in args)):
                return False
    for name, _ in s1.signature.predicates:
        if {tuple(m[x] for x in t) for t in s1.predicates[name]} != s2.predicates[name]:
            return False
    return all(m[v] == s2.constants[c] for c, v in s1.constants.items())


class _IsoIndex:
    """Finds iso-classes among a growing list of representatives."""

    def __init__(self):
        self.reps: list[Structure] = []
        self._buckets: dict[tuple, list[int]] = {}

    @staticmethod
    def _invariant(s: Structure) -> tuple:
        return (s.signature, s.size, tuple(sorted(element_colors(s))))

    def find(self, s: Structure) -> int | None:
        for i in self._buckets.get(self._invariant(s), ()):
            if isomorphic(s, self.reps[i]) is not None:
                return i
        return None

    def add(self, s: Structure) -> int:
        i = self.find(s)
        if i is None:
            i = len(self.reps)
            self.reps.append(s)
            self._buckets.setdefault(self._invariant(s), []).append(i)
        return i


# ---------------------------------------------------------------------------
# class frames

@dataclass(frozen=True)
class ClassFrame:
    """Iso-classes of a list of structures with the induced relation.

    ``classes[k]`` is the class index of the k-th input structure.
    """

    representatives: tuple[Structure, ...]
    relation: frozenset[tuple[int, int]]
    kind: str
    classes: tuple[int, ...] = ()

    @property
    def size(self) -> int:
        return len(self.representatives)

    def to_kripke(self):
        from .frames import KripkeFrame

        return KripkeFrame(self.size, self.relation)


def iso_classes(cs: Sequence[Structure]) -> tuple[list[Structure], list[int]]:
    """Representatives (minimal by :meth:`Structure.key`, sorted) and the class of each input."""
    index = _IsoIndex()
    raw = [index.add(s) for s in cs]
    members: dict[int, list[Structure]] = {}
    for s, k in zip(cs, raw):
        members.setdefault(k, []).append(s)
    best = {k: min(ms, key=Structure.key) for k, ms in members.items()}
    order = sorted(best, key=lambda k: best[k].key())
    renum = {k: i for i, k in enumerate(order)}
    return [best[k] for k in order], [renum[k] for k in raw]


def class_frame(
    cs: Sequence[Structure],
    kind: str,
    submodel_cap: int = SUBMODEL_CAP,
    congruence_cap: int = CONGRUENCE_CAP,
) -> ClassFrame:
    """Frame on iso-classes of ``cs``.

    sub: [A] R [B] iff B is isomorphic to a submodel of A;
    ext: the converse; quot: B is isomorphic to a quotient of A.
    Only classes present in ``cs`` are nodes.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    if not cs:
        raise StructureError("class frame of an empty class")
    sig = cs[0].signature
    if any(s.signature != sig for s in cs):
        raise StructureError("class frame needs a common signature")
    reps, classes = iso_classes(cs)
    index = _IsoIndex()
    for r in reps:
        index.add(r)
    pairs = set()
    for a, rep in enumerate(reps):
        if kind == "quot":
            images = quotient_structures(rep, congruence_cap)
        else:
            images = submodel_structures(rep, submodel_cap)
        for img in images:
            b = index.find(img)
            if b is not None:
                pairs.add((a, b) if kind != "ext" else (b, a))
    return ClassFrame(tuple(reps), frozenset(pairs), kind, tuple(classes))
