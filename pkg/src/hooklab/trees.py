"""Labelled tree families: increasing trees, Cayley trees, binary shapes.

Three shapes of object live here.

* IncreasingTree: a rooted tree on a finite set of positive integer
  labels in which every non-root vertex has a parent with a smaller
  label.  The root is forced to be the minimum label, and the whole
  tree is determined by the parent map.  There are (n-1)! of them on
  any n labels.

* CayleyTree: an unrooted labelled tree on vertices {1..r}, stored as a
  sorted edge list.  There are r^(r-2) of them, and the Pruefer code
  gives the explicit bijection with sequences that the enumerator and
  the index decoder share.

* BinaryTree: an unlabelled rooted binary shape (each vertex has an
  optional left and right child).  The empty shape is represented by
  None throughout; the module-level helpers all accept it.

Enumeration order is part of the contract: callers rely on it being
deterministic, and the index decoders (*_at functions) must agree with
the generators so that disjoint index ranges partition the family.  For
increasing trees the order is lexicographic in the parent-choice vector
(non-root labels ascending, the choice for the largest label varying
fastest); for Cayley trees it is lexicographic in the Pruefer sequence;
for binary shapes left subtree size ascends first.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "BinaryTree",
    "CayleyTree",
    "HookTable",
    "IncreasingTree",
    "binary_count",
    "binary_from_json_dict",
    "binary_to_dot",
    "binary_to_json_dict",
    "cayley_count",
    "cayley_tree_at",
    "degree_vector",
    "enumerate_binary",
    "enumerate_cayley",
    "enumerate_increasing",
    "graft",
    "hooks",
    "increasing_count",
    "increasing_from_cayley",
    "increasing_tree_at",
    "prufer_decode",
    "prufer_encode",
    "split_at_second_min",
    "subtree_sizes",
]


def _clean_labels(labels: Iterable[int]) -> tuple[int, ...]:
    out = tuple(sorted(labels))
    if not out:
        raise ValueError("a tree needs at least one vertex")
    if any(not isinstance(v, int) or isinstance(v, bool) or v < 1 for v in out):
        raise ValueError(f"labels must be positive ints: {out}")
    if len(set(out)) != len(out):
        raise ValueError(f"labels must be distinct: {out}")
    return out


class IncreasingTree:
    """Rooted tree where every non-root label exceeds its parent's label."""

    __slots__ = ("_labels", "_parent")

    def __init__(self, labels: Iterable[int], parent: Mapping[int, int]):
        self._labels = _clean_labels(labels)
        root = self._labels[0]
        expected = set(self._labels[1:])
        if set(parent) != expected:
            raise ValueError(
                "parent map must cover exactly the non-root labels "
                f"{sorted(expected)}, got {sorted(parent)}"
            )
        label_set = set(self._labels)
        for v, p in parent.items():
            if p not in label_set:
                raise ValueError(f"parent {p} of {v} is not a vertex")
            if p >= v:
                raise ValueError(f"parent {p} of {v} must carry a smaller label")
        self._parent = {v: parent[v] for v in self._labels[1:]}
        del root

    @property
    def labels(self) -> tuple[int, ...]:
        return self._labels

    @property
    def parent(self) -> Mapping[int, int]:
        return MappingProxyType(self._parent)

    @property
    def root(self) -> int:
        return self._labels[0]

    def __len__(self) -> int:
        return len(self._labels)

    def children(self) -> dict[int, tuple[int, ...]]:
        """Map each label to its children in ascending order."""
        out: dict[int, list[int]] = {v: [] for v in self._labels}
        for v in self._labels[1:]:
            out[self._parent[v]].append(v)
        return {v: tuple(cs) for v, cs in out.items()}

    def _key(self):
        return (self._labels, tuple(self._parent[v] for v in self._labels[1:]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IncreasingTree):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"IncreasingTree({list(self._labels)}, {self._parent})"

    def to_json_dict(self) -> dict:
        return {
            "labels": list(self._labels),
            "parent": {str(v): self._parent[v] for v in self._labels[1:]},
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "IncreasingTree":
        parent = {int(v): p for v, p in data["parent"].items()}
        return cls(data["labels"], parent)

    def to_dot(self, graph_name: str = "increasing_tree") -> str:
        """Edges parent -> child, children declared in ascending label
        order per parent so renderers draw them left to right."""
        lines = [f"digraph {graph_name} {{", "  ordering=out;"]
        for v in self._labels:
            lines.append(f"  {v};")
        for v in self._labels[1:]:
            lines.append(f"  {self._parent[v]} -> {v};")
        lines.append("}")
        return "\n".join(lines)


def increasing_count(n: int) -> int:
    """Number of increasing trees on n labels: (n-1)!."""
    if n < 1:
        raise ValueError("need at least one vertex")
    return factorial(n - 1)


def increasing_tree_at(labels: Iterable[int], index: int) -> IncreasingTree:
    """The tree at `index` in enumeration order, 0 <= index < (n-1)!."""
    labs = _clean_labels(labels)
    n = len(labs)
    total = factorial(n - 1)
    if not 0 <= index < total:
        raise ValueError(f"index {index} out of range for {total} trees")
    parent: dict[int, int] = {}
    rem = index
    weight = total
    for i in range(1, n):
        weight //= i
        digit, rem = divmod(rem, weight)
        parent[labs[i]] = labs[digit]
    return IncreasingTree(labs, parent)


def enumerate_increasing(
    labels: Iterable[int], start: int | None = None, stop: int | None = None
) -> Iterator[IncreasingTree]:
    """Yield increasing trees on the given labels in enumeration order.

    With start/stop, yields exactly the trees whose indices lie in
    [start, stop); disjoint ranges partition the family, which is what
    the parallel sweeps build on.
    """
    labs = _clean_labels(labels)
    n = len(labs)
    if start is None and stop is None:
        def walk(i: int, parent: dict[int, int]) -> Iterator[IncreasingTree]:
            if i == n:
                yield IncreasingTree(labs, parent)
                return
            for p in labs[:i]:
                parent[labs[i]] = p
                yield from walk(i + 1, parent)
            parent.pop(labs[i], None)

        yield from walk(1, {})
        return
    total = factorial(n - 1)
    lo = 0 if start is None else start
    hi = total if stop is None else min(stop, total)
    for idx in range(max(lo, 0), hi):
        yield increasing_tree_at(labs, idx)


@dataclass
class HookTable:
    """Per-vertex descendant data for a rooted tree.

    sets[v] is the set of labels in the subtree rooted at v, v
    included; sizes[v] is its cardinality.  Treat both as read-only.
    """

    sets: dict[int, frozenset[int]]
    sizes: dict[int, int]


def hooks(t: IncreasingTree) -> HookTable:
    """Descendant sets and sizes for every vertex of an increasing tree."""
    sets: dict[int, frozenset[int]] = {}
    child = t.children()
    for v in reversed(t.labels):
        acc = {v}
        for c in child[v]:
            acc |= sets[c]
        sets[v] = frozenset(acc)
    return HookTable(sets=sets, sizes={v: len(s) for v, s in sets.items()})


def split_at_second_min(t: IncreasingTree) -> tuple[IncreasingTree, IncreasingTree]:
    """Cut the edge above the second-smallest label.

    Returns (host, shoot): shoot is the subtree rooted at the
    second-smallest label s (whose parent is always the root, since no
    other label is small enough), host is what remains.  graft(shoot,
    host) restores the original tree.
    """
    if len(t) < 2:
        raise ValueError("need at least two vertices to split")
    s = t.labels[1]
    shoot_set = hooks(t).sets[s]
    host_labels = [v for v in t.labels if v not in shoot_set]
    shoot_labels = sorted(shoot_set)
    host = IncreasingTree(
        host_labels, {v: t.parent[v] for v in host_labels if v != t.root}
    )
    shoot = IncreasingTree(
        shoot_labels, {v: t.parent[v] for v in shoot_labels if v != s}
    )
    return host, shoot


def graft(shoot: IncreasingTree, host: IncreasingTree) -> IncreasingTree:
    """Attach shoot's root as a new child of host's root.

    Labels must be disjoint and shoot's root must exceed host's root.
    This inverts split_at_second_min exactly when shoot's root is
    smaller than every non-root label of host, which is the regime the
    splitting recurrences work in.
    """
    if set(host.labels) & set(shoot.labels):
        raise ValueError("graft needs disjoint label sets")
    if shoot.root <= host.root:
        raise ValueError("shoot root must exceed host root")
    labels = host.labels + shoot.labels
    parent = dict(host.parent)
    parent.update(shoot.parent)
    parent[shoot.root] = host.root
    return IncreasingTree(labels, parent)


class CayleyTree:
    """Unrooted labelled tree on {1..r}, stored as a sorted edge list."""

    __slots__ = ("_vertices", "_edges", "_adj")

    def __init__(self, vertices: Iterable[int], edges: Iterable[Sequence[int]]):
        self._vertices = _clean_labels(vertices)
        vset = set(self._vertices)
        norm = []
        for e in edges:
            a, b = e
            if a == b or a not in vset or b not in vset:
                raise ValueError(f"bad edge {e!r}")
            norm.append((a, b) if a < b else (b, a))
        norm.sort()
        if len(set(norm)) != len(norm):
            raise ValueError("repeated edge")
        if len(norm) != len(self._vertices) - 1:
            raise ValueError(
                f"{len(self._vertices)} vertices need {len(self._vertices) - 1} edges, "
                f"got {len(norm)}"
            )
        adj: dict[int, list[int]] = {v: [] for v in self._vertices}
        for a, b in norm:
            adj[a].append(b)
            adj[b].append(a)
        seen = {self._vertices[0]}
        stack = [self._vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(self._vertices):
            raise ValueError("edge list is not connected")
        self._edges = tuple(norm)
        self._adj = {v: tuple(sorted(ws)) for v, ws in adj.items()}

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def __len__(self) -> int:
        return len(self._vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CayleyTree):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __repr__(self) -> str:
        return f"CayleyTree({list(self._vertices)}, {[list(e) for e in self._edges]})"

    def to_json_dict(self) -> dict:
        """{"r": …, "edges": …} on vertex set {1..r}; general vertex sets
        carry an explicit "vertices" list instead."""
        n = len(self._vertices)
        edges = [list(e) for e in self._edges]
        if self._vertices == tuple(range(1, n + 1)):
            return {"r": n, "edges": edges}
        return {"vertices": list(self._vertices), "edges": edges}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "CayleyTree":
        if "vertices" in data:
            return cls(data["vertices"], data["edges"])
        return cls(range(1, data["r"] + 1), data["edges"])

    def to_dot(self, graph_name: str = "cayley_tree") -> str:
        lines = [f"graph {graph_name} {{"]
        for v in self._vertices:
            lines.append(f"  {v};")
        for a, b in self._edges:
            lines.append(f"  {a} -- {b};")
        lines.append("}")
        return "\n".join(lines)


def degree_vector(u: CayleyTree) -> tuple[int, ...]:
    """Vertex degrees in ascending vertex order."""
    return tuple(len(u.neighbors(v)) for v in u.vertices)


def cayley_count(r: int) -> int:
    """Number of labelled trees on r vertices: r^(r-2), with 1 for r <= 2."""
    if r < 1:
        raise ValueError("need at least one vertex")
    return 1 if r <= 2 else r ** (r - 2)


def prufer_encode(u: CayleyTree) -> tuple[int, ...]:
    """Pruefer sequence of a tree on {1..r}, r >= 2 (length r-2)."""
    r = len(u)
    if r < 2:
        raise ValueError("Pruefer codes need at least two vertices")
    if u.vertices != tuple(range(1, r + 1)):
        raise ValueError("Pruefer codec works on vertex set {1..r}")
    deg = {v: len(u.neighbors(v)) for v in u.vertices}
    adj = {v: set(u.neighbors(v)) for v in u.vertices}
    seq = []
    for _ in range(r - 2):
        leaf = min(v for v in u.vertices if deg[v] == 1)
        (nb,) = adj[leaf]
        seq.append(nb)
        deg[leaf] = 0
        deg[nb] -= 1
        adj[nb].discard(leaf)
    return tuple(seq)


def prufer_decode(seq: Sequence[int]) -> CayleyTree:
    """Tree on {1..len(seq)+2} with the given Pruefer sequence."""
    r = len(seq) + 2
    if any(not 1 <= s <= r for s in seq):
        raise ValueError(f"sequence entries must lie in 1..{r}")
    deg = {v: 1 for v in range(1, r + 1)}
    for s in seq:
        deg[s] += 1
    edges = []
    leaves = [v for v in range(1, r + 1) if deg[v] == 1]
    heapq.heapify(leaves)
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        deg[s] -= 1
        if deg[s] == 1:
            heapq.heappush(leaves, s)
    a = heapq.heappop(leaves)
    b = heapq.heappop(leaves)
    edges.append((a, b))
    return CayleyTree(range(1, r + 1), edges)


def cayley_tree_at(r: int, index: int) -> CayleyTree:
    """The tree at `index` in Pruefer-lexicographic order."""
    total = cayley_count(r)
    if not 0 <= index < total:
        raise ValueError(f"index {index} out of range for {total} trees")
    if r == 1:
        return CayleyTree([1], [])
    seq = []
    rem = index
    for _ in range(r - 2):
        rem, d = divmod(rem, r)
        seq.append(d + 1)
    seq.reverse()
    return prufer_decode(seq)


def enumerate_cayley(
    r: int, start: int | None = None, stop: int | None = None
) -> Iterator[CayleyTree]:
    """Yield all labelled trees on {1..r} in Pruefer-lexicographic order."""
    total = cayley_count(r)
    lo = 0 if start is None else max(start, 0)
    hi = total if stop is None else min(stop, total)
    for idx in range(lo, hi):
        yield cayley_tree_at(r, idx)


class BinaryTree:
    """Non-empty rooted binary shape; children are BinaryTree or None."""

    __slots__ = ("left", "right", "size")

    def __init__(self, left: "BinaryTree | None" = None, right: "BinaryTree | None" = None):
        for c in (left, right):
            if c is not None and not isinstance(c, BinaryTree):
                raise TypeError("children must be BinaryTree or None")
        self.left = left
        self.right = right
        self.size = 1 + (left.size if left else 0) + (right.size if right else 0)

    def _key(self):
        return (
            self.left._key() if self.left else None,
            self.right._key() if self.right else None,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryTree):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"BinaryTree(size={self.size})"


def binary_count(n: int) -> int:
    """Number of binary shapes with n vertices: the n-th Catalan number."""
    if n < 0:
        raise ValueError("size must be non-negative")
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def _binary_shapes(n: int) -> tuple:
    if n == 0:
        return (None,)
    out = []
    for left_size in range(n):
        for left in _binary_shapes(left_size):
            for right in _binary_shapes(n - 1 - left_size):
                out.append(BinaryTree(left, right))
    return tuple(out)


def enumerate_binary(n: int) -> Iterator["BinaryTree | None"]:
    """Yield all binary shapes with n vertices, left subtree size ascending."""
    if n < 0:
        raise ValueError("size must be non-negative")
    return iter(_binary_shapes(n))


def subtree_sizes(t: "BinaryTree | None") -> tuple[int, ...]:
    """Subtree sizes in preorder; empty tuple for the empty shape."""
    out: list[int] = []

    def walk(node: "BinaryTree | None") -> None:
        if node is None:
            return
        out.append(node.size)
        walk(node.left)
        walk(node.right)

    walk(t)
    return tuple(out)


def binary_to_json_dict(t: "BinaryTree | None") -> "dict | None":
    """Nested {"left": …, "right": …} objects; the empty shape is None."""
    if t is None:
        return None
    return {"left": binary_to_json_dict(t.left), "right": binary_to_json_dict(t.right)}


def binary_from_json_dict(data: "Mapping | None") -> "BinaryTree | None":
    if data is None:
        return None
    return BinaryTree(
        binary_from_json_dict(data["left"]), binary_from_json_dict(data["right"])
    )


def binary_to_dot(t: "BinaryTree | None", graph_name: str = "binary_tree") -> str:
    lines = [f"digraph {graph_name} {{"]
    counter = [0]

    def walk(node) -> int:
        my_id = counter[0]
        counter[0] += 1
        lines.append(f"  n{my_id};")
        if node.left:
            cid = walk(node.left)
            lines.append(f'  n{my_id} -> n{cid} [label="L"];')
        if node.right:
            cid = walk(node.right)
            lines.append(f'  n{my_id} -> n{cid} [label="R"];')
        return my_id

    if t is not None:
        walk(t)
    lines.append("}")
    return "\n".join(lines)


def increasing_from_cayley(u: CayleyTree) -> IncreasingTree:
    """Collapse an unrooted labelled tree to an increasing tree.

    Remove the minimum vertex; each remaining component hangs its own
    minimum under the removed one, and recursion inside the components
    fills in the rest.  The map is onto, and summing a monomial over
    each fiber is what links degree-weighted Cayley counts to hook
    weights of increasing trees.
    """
    parent: dict[int, int] = {}

    def collapse(vertices: frozenset[int], adj: dict[int, frozenset[int]]) -> int:
        m = min(vertices)
        rest = vertices - {m}
        while rest:
            seed = min(rest)
            comp = {seed}
            stack = [seed]
            while stack:
                for w in adj[stack.pop()]:
                    if w in rest and w not in comp:
                        comp.add(w)
                        stack.append(w)
            sub_adj = {v: adj[v] & frozenset(comp) for v in comp}
            parent[collapse(frozenset(comp), sub_adj)] = m
            rest -= comp
        return m

    adj = {v: frozenset(u.neighbors(v)) for v in u.vertices}
    collapse(frozenset(u.vertices), adj)
    return IncreasingTree(u.vertices, parent)
