"""Kripke frames, general frames, modal algebras and frame morphisms.

World-sets are int bit-sets (bit ``x`` set iff world ``x`` is in the set).
A general frame stores its admissible algebra by its atoms: every finite
Boolean set algebra is the family of unions of a partition of the worlds.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .structures import CapExceeded, Signature, Structure, isomorphic

POWERSET_CAP = 22
PRETREE_CAP = 4096
POWERSET_FRAME_CAP = 6
SHEHTMAN_CAP = 3


class FrameError(ValueError):
    """Malformed frame, algebra, partition or map."""


def bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def to_mask(elems: Iterable[int]) -> int:
    m = 0
    for e in elems:
        m |= 1 << e
    return m


def _lowbit(m: int) -> int:
    return (m & -m).bit_length() - 1


@dataclass(frozen=True)
class KripkeFrame:
    size: int
    relation: frozenset[tuple[int, int]]

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1:
            raise FrameError(f"frames are nonempty, got size {self.size!r}")
        rel = frozenset((int(a), int(b)) for a, b in self.relation)
        for a, b in rel:
            if not (0 <= a < self.size and 0 <= b < self.size):
                raise FrameError(f"pair ({a}, {b}) out of range for {self.size} worlds")
        object.__setattr__(self, "relation", rel)

    @classmethod
    def from_successors(cls, succ: Sequence[Iterable[int]]) -> "KripkeFrame":
        return cls(len(succ), frozenset((x, y) for x, ys in enumerate(succ) for y in ys))

    @cached_property
    def succ(self) -> tuple[int, ...]:
        s = [0] * self.size
        for a, b in self.relation:
            s[a] |= 1 << b
        return tuple(s)

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def preimage(self, mask: int) -> int:
        """R^-1(mask): worlds with a successor in ``mask``."""
        out = 0
        for x, s in enumerate(self.succ):
            if s & mask:
                out |= 1 << x
        return out

    def box(self, mask: int) -> int:
        """Worlds all of whose successors lie in ``mask``."""
        out = 0
        for x, s in enumerate(self.succ):
            if not s & ~mask:
                out |= 1 << x
        return out

    def is_reflexive(self) -> bool:
        return all((s >> x) & 1 for x, s in enumerate(self.succ))

    def is_transitive(self) -> bool:
        succ = self.succ
        return all(all(not succ[y] & ~s for y in bits(s)) for s in succ)

    def reachable(self, w: int) -> int:
        """Reflexive-transitive closure of ``{w}``."""
        seen = 1 << w
        frontier = seen
        while frontier:
            nxt = 0
            for x in bits(frontier):
                nxt |= self.succ[x]
            frontier = nxt & ~seen
            seen |= nxt
        return seen


@dataclass(frozen=True)
class GeneralFrame:
    base: KripkeFrame
    atoms: tuple[int, ...]

    def __post_init__(self):
        atoms = tuple(sorted((int(a) for a in self.atoms), key=_lowbit))
        acc = 0
        for a in atoms:
            if a == 0 or a & acc:
                raise FrameError("atoms must be nonempty and pairwise disjoint")
            acc |= a
        if acc != self.base.full:
            raise FrameError("atoms must cover every world")
        object.__setattr__(self, "atoms", atoms)
        for a in atoms:
            if not self.contains(self.base.preimage(a)):
                raise FrameError(f"algebra is not closed under R^-1: preimage of {bits(a)} is missing")

    @classmethod
    def from_members(cls, base: KripkeFrame, members: Iterable[Iterable[int] | int]) -> "GeneralFrame":
        """Validate a member family (Boolean subalgebra closed under R^-1) and store it by atoms."""
        fam = set()
        for m in members:
            mask = m if isinstance(m, int) else to_mask(m)
            if mask & ~base.full:
                raise FrameError(f"member {bits(mask)} out of range")
            fam.add(mask)
        if 0 not in fam or base.full not in fam:
            raise FrameError("algebra must contain the empty set and the full set")
        for a in fam:
            if base.full & ~a not in fam:
                raise FrameError(f"algebra not closed under complement at {bits(a)}")
            if base.preimage(a) not in fam:
                raise FrameError(f"algebra not closed under R^-1 at {bits(a)}")
        for a in fam:
            for b in fam:
                if a & b not in fam:
                    raise FrameError(f"algebra not closed under intersection at {bits(a)}, {bits(b)}")
        atoms = [a for a in fam if a and not any(b and b != a and b & a == b for b in fam)]
        return cls(base, tuple(atoms))

    @property
    def size(self) -> int:
        return self.base.size

    def contains(self, mask: int) -> bool:
        return all(a & mask in (0, a) for a in self.atoms)

    def atom_of(self, x: int) -> int:
        for a in self.atoms:
            if (a >> x) & 1:
                return a
        raise IndexError(x)

    @property
    def is_full(self) -> bool:
        return len(self.atoms) == self.base.size

    def member_count(self) -> int:
        return 1 << len(self.atoms)

    def member_array(self, cap: int = POWERSET_CAP) -> np.ndarray:
        """All members in numeric order as a uint64 array (worlds <= 64)."""
        if len(self.atoms) > cap:
            raise CapExceeded(f"algebra with {len(self.atoms)} atoms exceeds the cap of {cap}")
        if self.size > 64:
            raise CapExceeded("member arrays need at most 64 worlds")
        if self.is_full:
            return np.arange(1 << self.size, dtype=np.uint64)
        arr = np.zeros(1, dtype=np.uint64)
        for a in self.atoms:
            arr = np.concatenate([arr, arr | np.uint64(a)])
        arr.sort()
        return arr

    @property
    def algebra(self) -> tuple[int, ...]:
        if self.size > 64:
            return tuple(sorted(_unions(self.atoms)))
        return tuple(int(v) for v in self.member_array())


def _unions(atoms: Sequence[int]) -> list[int]:
    out = [0]
    for a in atoms:
        out += [m | a for m in out]
    return out


# ---------------------------------------------------------------------------
# constructions

def full_general(f: KripkeFrame, cap: int = POWERSET_CAP) -> GeneralFrame:
    if f.size > cap:
        raise CapExceeded(f"powerset algebra capped at {cap} worlds, got {f.size}")
    return GeneralFrame(f, tuple(1 << x for x in range(f.size)))


def lex_product(tree: KripkeFrame, cluster: KripkeFrame) -> KripkeFrame:
    """World (a, x) is ``a * |cluster| + x``; (a,x) R (b,y) iff (aRb, a != b) or (a = b, x R' y)."""
    k = cluster.size
    pairs = set()
    for a, b in tree.relation:
        if a != b:
            for x in range(k):
                for y in range(k):
                    pairs.add((a * k + x, b * k + y))
    for a in range(tree.size):
        for x, y in cluster.relation:
            pairs.add((a * k + x, a * k + y))
    return KripkeFrame(tree.size * k, frozenset(pairs))


def ordered_sum(f1: KripkeFrame, f2: KripkeFrame) -> KripkeFrame:
    off = f1.size
    pairs = set(f1.relation)
    pairs |= {(a + off, b + off) for a, b in f2.relation}
    pairs |= {(a, b + off) for a in range(off) for b in range(f2.size)}
    return KripkeFrame(off + f2.size, frozenset(pairs))


def reflexive_singleton() -> KripkeFrame:
    return KripkeFrame(1, frozenset({(0, 0)}))


def cluster(n: int) -> KripkeFrame:
    return KripkeFrame(n, frozenset(product(range(n), repeat=2)))


def words(alphabet: int, max_len: int) -> list[tuple[int, ...]]:
    """Words of length <= max_len, in length-lexicographic order."""
    out: list[tuple[int, ...]] = []
    for length in range(max_len + 1):
        out.extend(product(range(alphabet), repeat=length))
    return out


def prefix_tree(ws: Sequence[tuple[int, ...]]) -> KripkeFrame:
    """Reflexive prefix order on a list of words."""
    pairs = {(i, j) for i, s in enumerate(ws) for j, t in enumerate(ws) if t[: len(s)] == s}
    return KripkeFrame(len(ws), frozenset(pairs))


def pretree_q(n: int, with_top: bool = False, cap: int = PRETREE_CAP) -> KripkeFrame:
    """Q_n: the n-ramified tree of height n times the total n-cluster; Q'_n adds a reflexive top."""
    if n < 1:
        raise FrameError(f"n must be positive, got {n}")
    nodes = sum(n**k for k in range(n))
    if nodes * n + with_top > cap:
        raise CapExceeded(f"Q_{n} has {nodes * n} worlds, over the cap of {cap}")
    q = lex_product(prefix_tree(words(n, n - 1)), cluster(n))
    return ordered_sum(q, reflexive_singleton()) if with_top else q


def powerset_worlds(k: int, drop_empty: bool = False) -> list[int]:
    """Subsets of {1..k} as bit-sets (bit i-1 for element i), in numeric order."""
    return [m for m in range(1 << k) if m or not drop_empty]


def powerset_frame(k: int, drop_empty: bool = False, reversed: bool = False) -> KripkeFrame:
    """Worlds are subsets of {1..k}; x R y iff x is a subset of y (superset when reversed)."""
    if not 1 <= k <= POWERSET_FRAME_CAP:
        raise CapExceeded(f"powerset frames need 1 <= k <= {POWERSET_FRAME_CAP}, got {k}")
    ws = powerset_worlds(k, drop_empty)
    if reversed:
        pairs = {(i, j) for i, x in enumerate(ws) for j, y in enumerate(ws) if x & y == y}
    else:
        pairs = {(i, j) for i, x in enumerate(ws) for j, y in enumerate(ws) if x & y == x}
    return KripkeFrame(len(ws), frozenset(pairs))


def generated_subframe(g: GeneralFrame, w: int) -> GeneralFrame:
    if not 0 <= w < g.size:
        raise FrameError(f"world {w} out of range")
    keep = bits(g.base.reachable(w))
    pos = {x: i for i, x in enumerate(keep)}
    rel = frozenset((pos[a], pos[b]) for a, b in g.base.relation if a in pos and b in pos)
    mask = to_mask(keep)
    atoms = []
    for a in g.atoms:
        if a & mask:
            atoms.append(to_mask(pos[x] for x in bits(a & mask)))
    return GeneralFrame(KripkeFrame(len(keep), rel), tuple(atoms))


def refine(g: GeneralFrame) -> GeneralFrame:
    """Identify worlds in the same atom; [x] R [y] iff x is in R^-1(A) for every member A containing y.

    The smallest member containing ``y`` is its atom and R^-1 is monotone, so
    the condition reduces to ``x in R^-1(atom(y))``.
    """
    atoms = g.atoms
    pre = [g.base.preimage(a) for a in atoms]
    pairs = {(i, j) for i, a in enumerate(atoms) for j in range(len(atoms)) if a & pre[j]}
    k = len(atoms)
    return GeneralFrame(KripkeFrame(k, frozenset(pairs)), tuple(1 << i for i in range(k)))


def _check_partition(blocks: Iterable[Iterable[int]], n: int) -> tuple[tuple[int, ...], ...]:
    part = tuple(sorted(tuple(sorted(b)) for b in blocks))
    if any(not b for b in part) or sorted(x for b in part for x in b) != list(range(n)):
        raise FrameError(f"{part} is not a partition of 0..{n - 1}")
    return part


def quotient_frame(g: GeneralFrame, blocks: Iterable[Iterable[int]]) -> GeneralFrame:
    """Collapse an algebra-compatible bisimulation; [x] R [y] iff some x' ~ x, y' ~ y have x' R y'."""
    part = _check_partition(blocks, g.size)
    for b in part:
        m = to_mask(b)
        if not any(m & a == m for a in g.atoms):
            raise FrameError(f"block {b} is not inside a single atom of the algebra")
    v = check_bisimulation(g.base, part)
    if v is not None:
        raise FrameError(f"partition is not a bisimulation: {v.message}")
    block_of = {x: i for i, b in enumerate(part) for x in b}
    rel = frozenset((block_of[a], block_of[b]) for a, b in g.base.relation)
    atoms = tuple(to_mask(block_of[x] for x in bits(a)) for a in g.atoms)
    return GeneralFrame(KripkeFrame(len(part), rel), atoms)


def _split(atoms: Iterable[int], mask: int) -> list[int]:
    out = []
    for a in atoms:
        inside, outside = a & mask, a & ~mask
        if inside:
            out.append(inside)
        if outside:
            out.append(outside)
    return out


def subalgebra_generated(g: GeneralFrame, generators: Iterable[Iterable[int] | int]) -> GeneralFrame:
    """Closure of the generators under Boolean operations and R^-1, by partition refinement."""
    gens = [m if isinstance(m, int) else to_mask(m) for m in generators]
    for m in gens:
        if m & ~g.base.full or not g.contains(m):
            raise FrameError(f"generator {bits(m)} is not a member of the ambient algebra")
    atoms = [g.base.full]
    for m in gens:
        atoms = _split(atoms, m)
    while True:
        new = atoms
        for a in atoms:
            new = _split(new, g.base.preimage(a))
        if len(new) == len(atoms):
            return GeneralFrame(g.base, tuple(atoms))
        atoms = new


# ---------------------------------------------------------------------------
# modal algebras

@dataclass(frozen=True)
class ModalAlgebra:
    """A finite Boolean set algebra with a normal diamond.

    ``elements`` is sorted numerically; ``diamond[i]`` is the image of ``elements[i]``.
    """

    elements: tuple[int, ...]
    diamond: tuple[int, ...]

    def __post_init__(self):
        order = sorted(range(len(self.elements)), key=lambda i: self.elements[i])
        els = tuple(int(self.elements[i]) for i in order)
        dia = tuple(int(self.diamond[i]) for i in order)
        object.__setattr__(self, "elements", els)
        object.__setattr__(self, "diamond", dia)
        if len(els) != len(dia) or len(set(els)) != len(els):
            raise FrameError("elements must be distinct and match the diamond table")
        if not els or els[0] != 0:
            raise FrameError("a modal algebra contains the empty set")
        top = els[-1]
        atoms = self.atoms
        if to_mask_union(atoms) != top or len(els) != 1 << len(atoms):
            raise FrameError("elements do not form a Boolean set algebra")
        index = self.index
        for e, d in zip(els, dia):
            if d not in index:
                raise FrameError(f"diamond value {bits(d)} is not an element")
            expect = 0
            for a in atoms:
                if a & e:
                    if a & e != a:
                        raise FrameError("elements do not form a Boolean set algebra")
                    expect |= dia[index[a]]
            if d != expect:
                raise FrameError(f"diamond is not normal at {bits(e)}")

    @cached_property
    def index(self) -> dict[int, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def atoms(self) -> tuple[int, ...]:
        top = self.elements[-1]
        found = set()
        for x in bits(top):
            a = top
            for e in self.elements:
                if (e >> x) & 1:
                    a &= e
            found.add(a)
        return tuple(sorted(found, key=_lowbit))

    @property
    def top(self) -> int:
        return self.elements[-1]

    def dia(self, e: int) -> int:
        return self.diamond[self.index[e]]


def to_mask_union(ms: Iterable[int]) -> int:
    out = 0
    for m in ms:
        out |= m
    return out


def algebra_of(g: GeneralFrame) -> ModalAlgebra:
    els = g.algebra
    return ModalAlgebra(els, tuple(g.base.preimage(e) for e in els))


def _atom_frame(a: ModalAlgebra) -> KripkeFrame:
    atoms = a.atoms
    dia = [a.dia(x) for x in atoms]
    return KripkeFrame(len(atoms), frozenset((i, j) for i, x in enumerate(atoms) for j in range(len(atoms)) if x & dia[j]))


def algebra_isomorphic(a1: ModalAlgebra, a2: ModalAlgebra) -> dict[int, int] | None:
    """Boolean isomorphism commuting with diamond, as an element map, or None.

    Atoms are matched by a backtracking search on the atom structures
    (atom ``p`` sees atom ``q`` iff ``p`` lies under diamond(``q``)).
    """
    if len(a1.elements) != len(a2.elements):
        return None
    f = frames_isomorphic(_atom_frame(a1), _atom_frame(a2))
    if f is None:
        return None
    at1, at2 = a1.atoms, a2.atoms
    image = {}
    for e in a1.elements:
        image[e] = to_mask_union(at2[j] for i, j in enumerate(f.mapping) if at1[i] & e)
    for e in a1.elements:
        if image[a1.dia(e)] != a2.dia(image[e]):
            raise AssertionError("atom isomorphism does not extend; diamond is not normal")
    return image


# ---------------------------------------------------------------------------
# maps

@dataclass(frozen=True)
class FrameMap:
    mapping: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.mapping[x]


@dataclass(frozen=True)
class Violation:
    kind: str
    worlds: tuple[int, ...]
    message: str


def _frame_structure(f: KripkeFrame) -> Structure:
    return Structure(Signature(predicates=[("R", 2)]), f.size, {}, {"R": f.relation})


def frames_isomorphic(f1: KripkeFrame, f2: KripkeFrame) -> FrameMap | None:
    iso = isomorphic(_frame_structure(f1), _frame_structure(f2))
    return None if iso is None else FrameMap(iso.mapping)


def check_pmorphism(src: KripkeFrame, tgt: KripkeFrame, m: FrameMap) -> Violation | None:
    """None when ``m`` is a surjective p-morphism, else the first violation found."""
    mp = m.mapping
    if len(mp) != src.size or any(not 0 <= v < tgt.size for v in mp):
        raise FrameError("map must be total on the source and land in the target")
    missing = set(range(tgt.size)) - set(mp)
    if missing:
        v = min(missing)
        return Violation("surjective", (v,), f"target world {v} has no preimage")
    for x in range(src.size):
        img = 0
        for y in bits(src.succ[x]):
            img |= 1 << mp[y]
        allowed = tgt.succ[mp[x]]
        if img & ~allowed:
            y = next(y for y in bits(src.succ[x]) if not (allowed >> mp[y]) & 1)
            return Violation("forth", (x, y), f"{x} R {y} but not {mp[x]} R' {mp[y]}")
        if allowed & ~img:
            v = _lowbit(allowed & ~img)
            return Violation("back", (x, v), f"{mp[x]} R' {v} but no successor of {x} maps to {v}")
    return None


def check_bisimulation(f: KripkeFrame, blocks: Iterable[Iterable[int]]) -> Violation | None:
    """None when for all x ~ x' and x R y some y' ~ y has x' R y'."""
    part = _check_partition(blocks, f.size)
    block_of = {x: i for i, b in enumerate(part) for x in b}
    reach = [frozenset(block_of[y] for y in bits(f.succ[x])) for x in range(f.size)]
    for b in part:
        for x in b:
            for x2 in b:
                lacking = reach[x] - reach[x2]
                if lacking:
                    blk = min(lacking)
                    y = next(y for y in bits(f.succ[x]) if block_of[y] == blk)
                    return Violation("bisimulation", (x, x2, y), f"{x} ~ {x2} and {x} R {y}, but {x2} sees nothing ~ {y}")
    return None


def shehtman_map(h: int) -> tuple[KripkeFrame, KripkeFrame, FrameMap]:
    """Finite truncation of the powerset-onto-tree p-morphism.

    Source: subsets of {0..m} under inclusion, m + 1 = 2^(h+1) - 1.
    Target: binary tree of height h (length-lex node order) plus a reflexive top.
    U goes to the root when empty, to the longest node of f(U) when f(U) is a
    chain, and to the top otherwise; f is the length-lex enumeration of nodes.
    """
    if not 1 <= h <= SHEHTMAN_CAP:
        raise CapExceeded(f"shehtman_map needs 1 <= h <= {SHEHTMAN_CAP}, got {h}")
    nodes = words(2, h)
    tree = prefix_tree(nodes)
    tgt = ordered_sum(tree, reflexive_singleton())
    top = len(nodes)
    k = len(nodes)
    src = KripkeFrame.from_successors([[v for v in range(1 << k) if v & u == u] for u in range(1 << k)])
    mp = []
    for u in range(1 << k):
        if u == 0:
            mp.append(0)
            continue
        chain = sorted((nodes[i] for i in bits(u)), key=len)
        if all(b[: len(a)] == a for a, b in zip(chain, chain[1:])):
            mp.append(nodes.index(chain[-1]))
        else:
            mp.append(top)
    return src, tgt, FrameMap(tuple(mp))


# ---------------------------------------------------------------------------
# documents

def frame_to_doc(g: GeneralFrame | KripkeFrame) -> dict:
    base = g.base if isinstance(g, GeneralFrame) else g
    doc = {"worlds": base.size, "relation": [list(p) for p in sorted(base.relation)]}
    if isinstance(g, GeneralFrame) and not g.is_full:
        doc["algebra"] = [bits(m) for m in g.algebra]
    else:
        doc["algebra"] = "full"
    return doc


def load_frame(doc) -> GeneralFrame:
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as e:
            raise FrameError(f"invalid JSON: {e}") from None
    try:
        n = doc["worlds"]
        rel = [tuple(p) for p in doc["relation"]]
    except (KeyError, TypeError) as e:
        raise FrameError(f"malformed frame document: {e}") from None
    if any(len(p) != 2 for p in rel):
        raise FrameError("relation entries must be pairs")
    base = KripkeFrame(n, frozenset(rel))
    alg = doc.get("algebra", "full")
    if alg == "full":
        return GeneralFrame(base, tuple(1 << x for x in range(base.size)))
    if not isinstance(alg, list):
        raise FrameError("algebra must be \"full\" or a list of world lists")
    return GeneralFrame.from_members(base, alg)


def load_frame_file(path) -> GeneralFrame:
    with open(path) as fh:
        return load_frame(fh.read())


def load_map(doc) -> FrameMap:
    if isinstance(doc, (str, bytes)):
        doc = json.loads(doc)
    try:
        return FrameMap(tuple(int(v) for v in doc["map"]))
    except (KeyError, TypeError, ValueError) as e:
        raise FrameError(f"malformed map document: {e}") from None
