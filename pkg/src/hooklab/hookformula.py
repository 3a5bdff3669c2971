"""Hook weights on trees and the summation identities built from them.

The central object is the weight of an unordered increasing tree T on a
label set inside the ambient variable ring k_1..k_r: every non-root
vertex v with father f(v) contributes the factor

    k_{f(v)} * ( sum of k_u over the subtree rooted at v
                 - subtree size + 1 ).

Summed over all increasing trees on {1..r}, these weights collapse to
the closed product k_1...k_r * (K-1)_(r-2) with K = k_1+...+k_r; the
r = 1 sum is the empty product 1, which is what the closed form is
taken to mean there.  Everything else in this module is a specialization
or companion of that identity:

* setting every k_i to x+1 turns the weight sum into the univariate
  hook-product identity over increasing trees;
* the analogous univariate identity over binary shapes, with each shape
  weighted by its count of increasing labellings (itself certified
  against exhaustive linear-extension counting);
* dropping each factor's constant gives the top-degree weight, whose
  sum over trees reproduces the degree-refined count of labelled
  unrooted trees, with the collapse map from unrooted trees providing
  the fiber-by-fiber refinement.

Identity functions return both sides and never assert; callers compare.
Label ℓ always binds to variable index ℓ-1 of the ambient ring, so
subtree weights over split label sets multiply without reindexing.

The tree sums are pure folds of per-tree term maps.  Chunked variants
split the enumeration index space and fold partial sums; because the
coefficient arithmetic is exact and addition commutes, the canonical
result is identical no matter how the fold is sliced.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping

from hooklab import _backend as _B
from hooklab.multipoly import MultiPoly, Var, falling_factorial, specialize
from hooklab.trees import (
    BinaryTree,
    IncreasingTree,
    cayley_count,
    cayley_tree_at,
    degree_vector,
    enumerate_binary,
    enumerate_cayley,
    increasing_from_cayley,
    subtree_sizes,
)

__all__ = [
    "binary_hook_sum",
    "binary_reciprocal_hook_sum",
    "cayley_degree_identity",
    "cayley_fiber_sums",
    "fiber_sum",
    "hook_weight_closed_form",
    "hook_weight_sum",
    "increasing_hook_sum",
    "linear_extension_check",
    "top_weight",
    "top_weight_sum",
    "tree_weight",
    "tree_weight_sum",
    "uniform_chain_sides",
]

LINEAR_EXTENSION_BOUND = 9


@lru_cache(maxsize=None)
def _unit_exps(nvars: int) -> tuple:
    """Exponent tuples for the constant 1 and each single variable."""
    zero = (0,) * nvars
    units = tuple(
        tuple(1 if j == i else 0 for j in range(nvars)) for i in range(nvars)
    )
    return zero, units


def _weight_terms(labels, pv, ambient: int, top_only: bool = False) -> dict:
    """Term map of the weight of one tree, given parent positions.

    labels is the sorted label tuple; pv[j-1] is the position (index
    into labels) of the father of labels[j].  With top_only the
    constant in each linear factor is dropped, which yields exactly the
    terms of maximal total degree.
    """
    zero, units = _unit_exps(ambient)
    n = len(labels)
    mono = [0] * ambient
    for p in pv:
        mono[labels[p] - 1] += 1
    hook_mask = [1 << j for j in range(n)]
    for j in range(n - 1, 0, -1):
        hook_mask[pv[j - 1]] |= hook_mask[j]
    factors = []
    for j in range(1, n):
        m = hook_mask[j]
        lin = {}
        size = 0
        for b in range(n):
            if m >> b & 1:
                lin[units[labels[b] - 1]] = 1
                size += 1
        if not top_only and size != 1:
            lin[zero] = 1 - size
        factors.append(lin)
    factors.sort(key=len)
    acc = {tuple(mono): 1}
    for f in factors:
        acc = _B.mul_terms(acc, f)
    return acc


def _parent_positions(t: IncreasingTree) -> tuple:
    pos = {v: i for i, v in enumerate(t.labels)}
    return tuple(pos[t.parent[v]] for v in t.labels[1:])


def _resolve_ambient(t: IncreasingTree, ambient: int | None) -> int:
    if ambient is None:
        ambient = t.labels[-1]
    elif ambient < t.labels[-1]:
        raise ValueError(
            f"ambient ring with {ambient} variables cannot hold label {t.labels[-1]}"
        )
    return ambient


def tree_weight(t: IncreasingTree, ambient: int | None = None) -> MultiPoly:
    """Expanded hook weight of one increasing tree.

    The ambient variable count defaults to the largest label; passing
    it explicitly keeps subtree weights of a split comparable.
    """
    ambient = _resolve_ambient(t, ambient)
    return MultiPoly._raw(ambient, _weight_terms(t.labels, _parent_positions(t), ambient))


def top_weight(t: IncreasingTree, ambient: int | None = None) -> MultiPoly:
    """Top-degree part of the hook weight, computed directly.

    Each non-root vertex contributes k_{f(v)} times the bare subtree
    k-sum.  Summed over a fiber of the collapse map this is the degree
    generating monomial total, and it coincides with taking the top
    homogeneous component of tree_weight.
    """
    ambient = _resolve_ambient(t, ambient)
    return MultiPoly._raw(
        ambient, _weight_terms(t.labels, _parent_positions(t), ambient, top_only=True)
    )


def _sum_terms_over_labels(labels, ambient: int, top_only: bool = False) -> dict:
    n = len(labels)
    acc: dict = {}
    for pv in itertools.product(*(range(j) for j in range(1, n))):
        _B.iadd_terms(acc, _weight_terms(labels, pv, ambient, top_only))
    return acc


@lru_cache(maxsize=None)
def tree_weight_sum(labels: tuple, ambient: int) -> MultiPoly:
    """Sum of hook weights over all increasing trees on a label set.

    Cached: the splitting recurrences evaluate it on many overlapping
    subsets.  labels must be a tuple of distinct positive ints.
    """
    labels = tuple(sorted(labels))
    if not labels:
        raise ValueError("a tree needs at least one vertex")
    if labels[-1] > ambient:
        raise ValueError(
            f"ambient ring with {ambient} variables cannot hold label {labels[-1]}"
        )
    return MultiPoly._raw(ambient, _sum_terms_over_labels(labels, ambient))


def _decode_pv(n: int, index: int) -> tuple:
    """Parent positions of the tree at `index` among the (n-1)! on n labels."""
    pv = []
    weight = factorial(n - 1)
    for j in range(1, n):
        weight //= j
        d, index = divmod(index, weight)
        pv.append(d)
    return tuple(pv)


def _weight_sum_chunk(args) -> dict:
    labels, ambient, lo, hi, top_only = args
    n = len(labels)
    acc: dict = {}
    for idx in range(lo, hi):
        _B.iadd_terms(acc, _weight_terms(labels, _decode_pv(n, idx), ambient, top_only))
    return acc


def _chunk_bounds(total: int, parts: int) -> list:
    step, extra = divmod(total, parts)
    bounds = [0]
    for i in range(parts):
        bounds.append(bounds[-1] + step + (1 if i < extra else 0))
    return [(a, b) for a, b in zip(bounds, bounds[1:]) if a < b]


def hook_weight_sum(r: int, threads: int = 1) -> MultiPoly:
    """Left side of the main identity: sum of weights over all trees on {1..r}."""
    if r < 1:
        raise ValueError("need at least one vertex")
    labels = tuple(range(1, r + 1))
    if threads <= 1:
        return tree_weight_sum(labels, r)
    total = factorial(r - 1)
    jobs = [
        (labels, r, lo, hi, False)
        for lo, hi in _chunk_bounds(total, threads * 4)
    ]
    acc: dict = {}
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(_weight_sum_chunk, jobs):
            _B.iadd_terms(acc, part)
    return MultiPoly._raw(r, acc)


def hook_weight_closed_form(r: int) -> MultiPoly:
    """Right side of the main identity: k_1...k_r * (K-1)_(r-2).

    At r = 1 the falling factorial index would be negative; the
    convention there is that the whole product collapses to 1, matching
    the single-vertex tree of weight 1, so that constant is returned
    directly.
    """
    if r < 1:
        raise ValueError("need at least one vertex")
    if r == 1:
        return MultiPoly.const(1, 1)
    k_minus_1 = MultiPoly(r, {u: 1 for u in _unit_exps(r)[1]}) - 1
    return MultiPoly.monomial(r, (1,) * r) * falling_factorial(k_minus_1, r - 2)


def _hook_sizes(n: int, pv) -> list:
    sizes = [1] * n
    for j in range(n - 1, 0, -1):
        sizes[pv[j - 1]] += sizes[j]
    return sizes


def increasing_hook_sum(r: int) -> tuple:
    """Both sides of the univariate hook identity over increasing trees.

    lhs: sum over trees of the product of (x*h + 1) over every vertex,
    root included.  rhs: (x+1) * prod_{i=1}^{r-1} (x*r + i).
    """
    if r < 1:
        raise ValueError("need at least one vertex")
    acc: dict = {}
    for pv in itertools.product(*(range(j) for j in range(1, r))):
        term = {(0,): 1}
        for h in _hook_sizes(r, pv):
            term = _B.mul_terms(term, {(1,): h, (0,): 1})
        _B.iadd_terms(acc, term)
    lhs = MultiPoly._raw(1, acc)
    x = MultiPoly.variable(1, 0)
    rhs = x + 1
    for i in range(1, r):
        rhs = rhs * (r * x + i)
    return lhs, rhs


def uniform_chain_sides(r: int) -> tuple:
    """The univariate identity rederived from the multivariate sum.

    Setting every k_i to the same k in the weight turns each factor
    into k((k-1)h+1); with x = k-1 the per-tree product differs from
    prod (x*h+1) by the root factor (x*r+1) against k^(r-1) = (x+1)^(r-1).
    Cross-multiplying keeps everything polynomial:

        lhs_univariate * (x+1)^(r-1)  ==  weight_sum|_{k_i=x+1} * (x*r+1).

    Returns that pair; equality certifies the derivation chain.
    """
    lhs_uni, _ = increasing_hook_sum(r)
    x = MultiPoly.variable(1, 0)
    left = lhs_uni * (x + 1) ** (r - 1)
    collapsed = specialize(
        hook_weight_sum(r), {i: Var(0) for i in range(r)}
    )
    right = collapsed.substitute([x + 1], 1) * (r * x + 1)
    return left, right


def binary_hook_sum(n: int) -> tuple:
    """Both sides of the univariate hook identity over binary shapes.

    Each shape stands in for its increasing labellings: the shape's
    product of (x*h + 1) is scaled by n!/prod(h), the labelling count.
    rhs: prod_{i=0}^{n-1} ((n+1+i)x + n+1-i) divided by n+1; the
    division is exact once the product is expanded.
    """
    if n < 1:
        raise ValueError("size must be at least 1")
    nfact = factorial(n)
    acc: dict = {}
    for shape in enumerate_binary(n):
        sizes = subtree_sizes(shape)
        prod_h = 1
        term = {(0,): 1}
        for h in sizes:
            prod_h *= h
            term = _B.mul_terms(term, {(1,): h, (0,): 1})
        count, rem = divmod(nfact, prod_h)
        if rem:
            raise ValueError(f"hook product {prod_h} does not divide {n}!")
        _B.iadd_terms(acc, _B.scale_terms(term, count))
    lhs = MultiPoly._raw(1, acc)
    x = MultiPoly.variable(1, 0)
    rhs = MultiPoly.const(1, Fraction(1, n + 1))
    for i in range(n):
        rhs = rhs * ((n + 1 + i) * x + (n + 1 - i))
    return lhs, rhs


def binary_reciprocal_hook_sum(n: int) -> Fraction:
    """Sum over binary shapes of the product of 1/h; the identity says 1."""
    if n < 1:
        raise ValueError("size must be at least 1")
    total = Fraction(0)
    for shape in enumerate_binary(n):
        prod_h = 1
        for h in subtree_sizes(shape):
            prod_h *= h
        total += Fraction(1, prod_h)
    return total


def _lext_count(child: Mapping, avail: list) -> int:
    """Number of ways to place the remaining frontier, one vertex at a time."""
    if not avail:
        return 1
    total = 0
    for i in range(len(avail)):
        v = avail[i]
        avail[i] = avail[-1]
        avail.pop()
        kids = child[v]
        avail.extend(kids)
        total += _lext_count(child, avail)
        if kids:
            del avail[-len(kids):]
        if i == len(avail):
            avail.append(v)
        else:
            avail.append(avail[i])
            avail[i] = v
    return total


def linear_extension_check(t: IncreasingTree) -> tuple:
    """Exhaustive labelling count against the per-tree hook quotient.

    Returns (extension count, |T|!/prod of hook sizes); the classical
    formula says they match.  The quotient is checked to divide
    exactly.  Exhaustive enumeration grows factorially, hence the size
    bound.
    """
    n = len(t)
    if n > LINEAR_EXTENSION_BOUND:
        raise ValueError(
            f"exhaustive labelling count is capped at {LINEAR_EXTENSION_BOUND} vertices"
        )
    child = t.children()
    lext = _lext_count(child, [t.root])
    pv = _parent_positions(t)
    prod_h = 1
    for h in _hook_sizes(n, pv):
        prod_h *= h
    quotient, rem = divmod(factorial(n), prod_h)
    if rem:
        raise ValueError(f"hook product {prod_h} does not divide {n}!")
    return lext, quotient


@lru_cache(maxsize=None)
def cayley_fiber_sums(r: int) -> Mapping:
    """Degree-monomial sums of every fiber of the collapse map on {1..r}.

    One pass over all labelled unrooted trees, grouped by forward
    image.  The keys are exactly the increasing trees on {1..r} (the
    map is onto), and the values sum the monomial prod k_v^(degree of v)
    over each group.
    """
    if r < 1:
        raise ValueError("need at least one vertex")
    groups: dict = {}
    for u in enumerate_cayley(r):
        image = increasing_from_cayley(u)
        exps = tuple(degree_vector(u)) if r > 1 else (0,)
        acc = groups.setdefault(image, {})
        acc[exps] = acc.get(exps, 0) + 1
    return {t: MultiPoly._raw(r, terms) for t, terms in groups.items()}


def fiber_sum(t: IncreasingTree, r: int) -> MultiPoly:
    """Degree-monomial sum over the unrooted trees collapsing to t."""
    sums = cayley_fiber_sums(r)
    try:
        return sums[t]
    except KeyError:
        raise ValueError(f"{t!r} is not an increasing tree on 1..{r}") from None


def _cayley_chunk(args) -> dict:
    r, lo, hi = args
    acc: dict = {}
    for idx in range(lo, hi):
        u = cayley_tree_at(r, idx)
        exps = tuple(degree_vector(u))
        c = acc.get(exps)
        acc[exps] = 1 if c is None else c + 1
    return acc


def cayley_degree_identity(r: int, threads: int = 1) -> tuple:
    """Both sides of the degree-refined count of labelled unrooted trees.

    lhs: sum of prod k_v^(deg v) over all r^(r-2) trees.  rhs:
    k_1...k_r * K^(r-2).  This is also the top-degree shadow of the
    main identity, which top_weight_sum cross-checks.
    """
    if r < 2:
        raise ValueError("need at least two vertices")
    total = cayley_count(r)
    acc: dict = {}
    if threads <= 1:
        acc = _cayley_chunk((r, 0, total))
    else:
        jobs = [(r, lo, hi) for lo, hi in _chunk_bounds(total, threads * 4)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_cayley_chunk, jobs):
                _B.iadd_terms(acc, part)
    lhs = MultiPoly._raw(r, acc)
    big_k = MultiPoly(r, {u: 1 for u in _unit_exps(r)[1]})
    rhs = MultiPoly.monomial(r, (1,) * r) * big_k ** (r - 2)
    return lhs, rhs


def top_weight_sum(r: int) -> MultiPoly:
    """Sum of top-degree weights over all increasing trees on {1..r}."""
    if r < 1:
        raise ValueError("need at least one vertex")
    labels = tuple(range(1, r + 1))
    return MultiPoly._raw(r, _sum_terms_over_labels(labels, r, top_only=True))
