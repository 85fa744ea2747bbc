"""DOT and JSON renderings of frames and class frames."""
from __future__ import annotations

import json
from typing import Iterable, Sequence

from .frames import GeneralFrame, KripkeFrame, bits, frame_to_doc
from .structures import ClassFrame, structure_to_doc

ORIENTATION = "[A] R [B] iff B embeds in A as a submodel (sub), A embeds in B (ext), B is a quotient of A (quot)"


def _clusters(f: KripkeFrame) -> list[int]:
    """Index of the cluster (mutual-reachability class) of each world."""
    label = list(range(f.size))
    for x in range(f.size):
        for y in bits(f.succ[x]):
            if y < x and (f.succ[y] >> x) & 1:
                label[x] = label[y]
                break
    return label


def hasse_edges(f: KripkeFrame) -> list[tuple[int, int]]:
    """Covering edges of a transitive frame; the full relation otherwise.

    Loops are dropped.  Inside a cluster every pair is kept, between
    clusters only edges not implied through a third cluster.
    """
    edges = sorted((a, b) for a, b in f.relation if a != b)
    if not f.is_transitive:
        return edges
    cl = _clusters(f)
    out = []
    for a, b in edges:
        if cl[a] == cl[b]:
            out.append((a, b))
            continue
        through = f.succ[a] & f.preimage(1 << b)
        if not any(cl[c] not in (cl[a], cl[b]) for c in bits(through)):
            out.append((a, b))
    return out


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(
    f: KripkeFrame,
    labels: Sequence[str] | None = None,
    name: str = "frame",
    reduce: bool = True,
    comment: str | None = None,
) -> str:
    edges = hasse_edges(f) if reduce else sorted(f.relation)
    lines = [f"digraph {_quote(name)} {{"]
    if comment:
        lines.append(f"  // {comment}")
    lines.append("  rankdir=BT;")
    lines.append("  node [shape=circle];")
    for x in range(f.size):
        label = labels[x] if labels else str(x)
        reflexive = (f.succ[x] >> x) & 1
        lines.append(f"  {x} [label={_quote(label)}{', peripheries=2' if reflexive else ''}];")
    for a, b in edges:
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def frame_dot(g: GeneralFrame | KripkeFrame, name: str = "frame") -> str:
    base = g.base if isinstance(g, GeneralFrame) else g
    return to_dot(base, name=name, comment="double circle = reflexive; edges are covering pairs when the relation is transitive")


def class_frame_dot(cf: ClassFrame, name: str | None = None) -> str:
    labels = [f"{i}: |A|={r.size}" for i, r in enumerate(cf.representatives)]
    return to_dot(cf.to_kripke(), labels, name or f"classframe_{cf.kind}", comment=ORIENTATION)


def class_frame_doc(cf: ClassFrame) -> dict:
    return {
        "kind": cf.kind,
        "orientation": ORIENTATION,
        "classes": [
            {"index": i, "size": r.size, "representative": structure_to_doc(r)}
            for i, r in enumerate(cf.representatives)
        ],
        "relation": [list(p) for p in sorted(cf.relation)],
        "membership": list(cf.classes),
    }


def class_frame_json(cf: ClassFrame) -> str:
    return json.dumps(class_frame_doc(cf), indent=2, sort_keys=True)


def frame_json(g: GeneralFrame | KripkeFrame) -> str:
    return json.dumps(frame_to_doc(g), sort_keys=True)


def subsets_text(sets: Iterable[Iterable[int]]) -> str:
    return "\n".join("{" + ", ".join(map(str, sorted(s))) + "}" for s in sets)
