"""Set partitions of [n], their nesting structure, and labeled classes.

The two labeled classes that drive the moment formulas are

* ``ANC^wm(m, n)``: noncrossing partitions of [n] with blocks of size 1 or 2,
  no outer singletons, each singleton carrying the label of the block it
  sits directly inside, and labels in [m] that never decrease going inward;
* ``ANC^m(m, n)``: the same, but a pair strictly nested inside another pair
  must carry a strictly larger label.

Weighting each element by ``l**(number of singletons)`` and summing gives the
vacuum moments of the corresponding Fock-space operators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from wmfock.algebra import LambdaPoly

ENUMERATION_CAP = 12


class CrossingError(ValueError):
    """An operation that needs a noncrossing partition got a crossing one."""


@dataclass(frozen=True)
class Partition:
    """Blocks as sorted tuples, ordered by their minimum element."""

    blocks: tuple

    def __init__(self, blocks):
        bl = tuple(sorted(tuple(sorted(b)) for b in blocks))
        if any(len(b) == 0 for b in bl):
            raise ValueError("empty block")
        seen = [x for b in bl for x in b]
        if len(seen) != len(set(seen)):
            raise ValueError("blocks overlap")
        if sorted(seen) != list(range(1, len(seen) + 1)):
            raise ValueError("blocks must cover 1..n exactly")
        object.__setattr__(self, "blocks", bl)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __len__(self):
        return len(self.blocks)

    def singletons(self) -> int:
        return sum(1 for b in self.blocks if len(b) == 1)

    def to_json(self):
        return [list(b) for b in self.blocks]


@dataclass(frozen=True)
class LabeledPartition:
    partition: Partition
    labels: tuple

    def __post_init__(self):
        if len(self.labels) != len(self.partition.blocks):
            raise ValueError("need exactly one label per block")
        if any(int(x) < 1 for x in self.labels):
            raise ValueError("labels are positive integers")
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))

    @property
    def blocks(self):
        return self.partition.blocks

    def weight(self) -> LambdaPoly:
        return LambdaPoly.monomial(self.partition.singletons())

    def to_json(self):
        return {"blocks": self.partition.to_json(), "labels": list(self.labels)}

    @classmethod
    def from_json(cls, data) -> "LabeledPartition":
        blocks = [tuple(b) for b in data["blocks"]]
        labels = dict(zip(blocks, data["labels"]))
        p = Partition(blocks)
        return cls(p, tuple(labels[b] for b in p.blocks))


def _as_partition(p) -> Partition:
    return p.partition if isinstance(p, LabeledPartition) else p


def is_noncrossing(p) -> bool:
    blocks = _as_partition(p).blocks
    owner = {x: i for i, b in enumerate(blocks) for x in b}
    # scan with a stack of open blocks; a crossing shows up as closing a
    # block element while another block opened later is still pending
    remaining = [len(b) for b in blocks]
    stack: list[int] = []
    for x in range(1, len(owner) + 1):
        i = owner[x]
        if stack and stack[-1] == i:
            remaining[i] -= 1
            if remaining[i] == 0:
                stack.pop()
            continue
        if i in stack:
            return False
        remaining[i] -= 1
        if remaining[i] > 0:
            stack.append(i)
    return True


def _require_noncrossing(p):
    if not is_noncrossing(p):
        raise CrossingError("partition has a crossing")


@dataclass
class NestingOrder:
    """``below[i]`` holds every j != i with block i containing block j;
    ``parent[j]`` is the block that j covers (its immediate container) or
    None; ``outer[i]`` says whether block i sits inside no other block."""

    below: list = field(default_factory=list)
    parent: list = field(default_factory=list)
    outer: list = field(default_factory=list)

    def leq(self, i: int, j: int) -> bool:
        return i == j or j in self.below[i]

    def covers(self) -> set:
        """Pairs (i, j) where block j covers block i."""
        return {(p, j) for j, p in enumerate(self.parent) if p is not None}


def nesting_order(p) -> NestingOrder:
    part = _as_partition(p)
    _require_noncrossing(part)
    blocks = part.blocks
    k = len(blocks)
    below = [set() for _ in range(k)]
    for i, bi in enumerate(blocks):
        for j, bj in enumerate(blocks):
            if i != j and bi[0] <= bj[0] <= bj[-1] <= bi[-1]:
                below[i].add(j)
    parent: list = [None] * k
    for j in range(k):
        containers = [i for i in range(k) if j in below[i]]
        if containers:
            # the innermost container has the largest minimum
            parent[j] = max(containers, key=lambda i: blocks[i][0])
    outer = [parent[j] is None for j in range(k)]
    return NestingOrder(below=below, parent=parent, outer=outer)


def irreducible_factors(p) -> list[Partition]:
    part = _as_partition(p)
    _require_noncrossing(part)
    n = part.n
    close = {}
    for b in part.blocks:
        close[b[0]] = b[-1]
    out = []
    start = 1
    reach = 0
    for x in range(1, n + 1):
        reach = max(reach, close.get(x, 0))
        if reach == x:
            sub = [tuple(y - start + 1 for y in b) for b in part.blocks if start <= b[0] <= x]
            out.append(Partition(sub))
            start = x + 1
    return out


def is_irreducible(p) -> bool:
    part = _as_partition(p)
    return part.n > 0 and any(b[0] == 1 and b[-1] == part.n for b in part.blocks)


def has_outer_singleton(p) -> bool:
    order = nesting_order(p)
    blocks = _as_partition(p).blocks
    return any(order.outer[i] and len(b) == 1 for i, b in enumerate(blocks))


def is_NCLP_s(lp: LabeledPartition) -> bool:
    order = nesting_order(lp)
    for j, b in enumerate(lp.blocks):
        if len(b) == 1 and order.parent[j] is not None:
            if lp.labels[j] != lp.labels[order.parent[j]]:
                return False
    return True


def is_weakly_monotone(lp: LabeledPartition) -> bool:
    order = nesting_order(lp)
    return all(
        lp.labels[i] <= lp.labels[j] for i in range(len(lp.blocks)) for j in order.below[i]
    )


def is_monotone(lp: LabeledPartition) -> bool:
    if not is_weakly_monotone(lp):
        return False
    blocks = lp.blocks
    for i, bi in enumerate(blocks):
        for j, bj in enumerate(blocks):
            if len(bi) >= 2 and len(bj) >= 2 and bi[0] < bj[0] < bj[-1] < bi[-1]:
                if not lp.labels[i] < lp.labels[j]:
                    return False
    return True


def _pair_structures(lo: int, hi: int, inside: bool) -> Iterator[list]:
    """Noncrossing partitions of [lo, hi] into singletons and pairs, built
    from the leftmost element; singletons are only allowed when ``inside``."""
    if lo > hi:
        yield []
        return
    if inside:
        for rest in _pair_structures(lo + 1, hi, inside):
            yield [(lo,)] + rest
    for j in range(lo + 1, hi + 1):
        for mid in _pair_structures(lo + 1, j - 1, True):
            for rest in _pair_structures(j + 1, hi, inside):
                yield [((lo, j), mid)] + rest


def _labelings(tree: list, m: int, floor: int, parent_label, strict: bool) -> Iterator[list]:
    # tree items: (x,) singleton or ((a, b), children)
    if not tree:
        yield []
        return
    head, rest = tree[0], tree[1:]
    if len(head) == 1:
        for tail in _labelings(rest, m, floor, parent_label, strict):
            yield [(head, parent_label)] + tail
        return
    (a, b), children = head
    for lab in range(floor, m + 1):
        child_floor = lab + 1 if strict else lab
        for inner in _labelings(children, m, child_floor, lab, strict):
            for tail in _labelings(rest, m, floor, parent_label, strict):
                yield [((a, b), lab)] + inner + tail


def _enumerate(m: int, n: int, strict: bool, cap: int) -> list[LabeledPartition]:
    if m < 1:
        raise ValueError("need at least one label")
    if n < 0:
        raise ValueError("size must be >= 0")
    if n > cap:
        from wmfock.paths import SizeError

        raise SizeError(f"refusing to enumerate size {n} > cap {cap}")
    out = []
    for tree in _pair_structures(1, n, inside=False):
        for flat in _labelings(tree, m, 1, None, strict):
            part = Partition([b for b, _ in flat])
            lab = dict(flat)
            out.append(LabeledPartition(part, tuple(lab[b] for b in part.blocks)))
    return out


def enumerate_ANC_wm(m: int, n: int, cap: int = ENUMERATION_CAP) -> list[LabeledPartition]:
    return _enumerate(m, n, strict=False, cap=cap)


def enumerate_ANC_m(m: int, n: int, cap: int = ENUMERATION_CAP) -> list[LabeledPartition]:
    return _enumerate(m, n, strict=True, cap=cap)


def weighted_sum(lps: Sequence[LabeledPartition]) -> LambdaPoly:
    hist: dict[int, int] = {}
    for lp in lps:
        s = lp.partition.singletons()
        hist[s] = hist.get(s, 0) + 1
    if not hist:
        return LambdaPoly.zero()
    return LambdaPoly(hist.get(k, 0) for k in range(max(hist) + 1))


def enumerate_interval_partitions(n: int, min_part: int = 1) -> list[Partition]:
    """Partitions of [n] into consecutive intervals, i.e. compositions of n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return [composition_to_partition(c) for c in compositions(n, min_part)]


def compositions(n: int, min_part: int = 1) -> list[tuple]:
    if n == 0:
        return [()]
    out = []
    for first in range(n, min_part - 1, -1):
        if first < 1:
            break
        for rest in compositions(n - first, min_part):
            out.append((first,) + rest)
    return out


def composition_to_partition(parts: Sequence[int]) -> Partition:
    blocks = []
    start = 1
    for q in parts:
        blocks.append(tuple(range(start, start + q)))
        start += q
    return Partition(blocks)


# -- nesting forests ---------------------------------------------------------


@dataclass
class ForestNode:
    block: tuple
    label: int | None
    children: list = field(default_factory=list)

    def depth(self) -> int:
        return 1 + max((c.depth() for c in self.children), default=0)


def nesting_forest(p) -> list[ForestNode]:
    """One tree per irreducible factor; children are the blocks covering
    their parent.  Labels are attached when ``p`` is labeled."""
    part = _as_partition(p)
    labels = p.labels if isinstance(p, LabeledPartition) else (None,) * len(part.blocks)
    order = nesting_order(part)
    nodes = [ForestNode(b, labels[i]) for i, b in enumerate(part.blocks)]
    roots = []
    for j, par in enumerate(order.parent):
        if par is None:
            roots.append(nodes[j])
        else:
            nodes[par].children.append(nodes[j])
    return roots


def forest_to_text(roots: Sequence[ForestNode]) -> str:
    lines = []

    def walk(node, indent):
        tag = "" if node.label is None else f" [{node.label}]"
        lines.append("  " * indent + "{" + ",".join(map(str, node.block)) + "}" + tag)
        for c in node.children:
            walk(c, indent + 1)

    for r in roots:
        walk(r, 0)
    return "\n".join(lines) + "\n"


def forest_to_dot(roots: Sequence[ForestNode]) -> str:
    lines = ["digraph nesting_forest {"]

    def name(node):
        return "b" + "_".join(map(str, node.block))

    def walk(node):
        label = "{" + ",".join(map(str, node.block)) + "}"
        if node.label is not None:
            label += f" L={node.label}"
        lines.append(f'  {name(node)} [label="{label}"];')
        for c in node.children:
            lines.append(f"  {name(node)} -> {name(c)};")
            walk(c)

    for r in roots:
        walk(r)
    lines.append("}")
    return "\n".join(lines) + "\n"
