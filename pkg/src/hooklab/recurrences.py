"""Inductive recurrences behind the hook weight sum, verified exactly.

Two independent derivations of the closed form are mechanized here.

The first runs through grafting.  Splitting each tree at its
second-smallest label turns the weight sum over trees on {1..r} into a
sum over ordered pairs (X1, X2) partitioning {3..r} of products of
smaller sums.  Feeding the closed form into that split yields the
polynomial split_polynomial(r); the target closed_polynomial(r) is the
falling factorial itself (both with the common monomial k_1...k_r
divided out).  The two agree, and they share the two properties that
pin such a family down: the constant term in k_1, and a finite
difference equation in k_1 relating size r to size r-1.

The second runs through the root degree.  Grouping trees by the set
partition of {2..r} induced by the root's subtrees expresses the weight
sum as a partition sum (root_degree_sides); substituting the closed
form for the inner sums turns it into a pure partition identity
(lagrange_identity_sides), which is exactly what inverting the system
w_i = t_i (1 + w_1 + ... + w_r)^{k_i} predicts for the coefficient of
t_1...t_r in w_1.  A truncated-series solver plays that inversion back
numerically as an independent oracle.

Side-returning functions never assert; each has a *_check companion
that just compares.  All polynomial arithmetic is exact.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

from hooklab.multipoly import MultiPoly, Var, falling_factorial, specialize
from hooklab.hookformula import (
    hook_weight_closed_form,
    hook_weight_sum,
    tree_weight,
    tree_weight_sum,
)
from hooklab.trees import IncreasingTree, enumerate_increasing, split_at_second_min

__all__ = [
    "TruncatedSeries",
    "closed_polynomial",
    "constant_term_check",
    "constant_term_sides",
    "finite_difference_check",
    "finite_difference_sides",
    "grafting_law_sides",
    "grafting_recurrence_check",
    "grafting_split_sides",
    "grafting_split_summands",
    "lagrange_identity_check",
    "lagrange_identity_sides",
    "lagrange_series_oracle",
    "lagrange_summands",
    "oracle_closed_form",
    "root_degree_recurrence_check",
    "root_degree_sides",
    "root_degree_summands",
    "set_partitions",
    "split_polynomial",
    "split_summands",
    "subset_closed_form",
]


def _var(r: int, label: int) -> MultiPoly:
    """The variable bound to a label, inside the ambient ring of size r."""
    return MultiPoly.variable(r, label - 1)


def _ksum(r: int, labels: Iterable[int]) -> MultiPoly:
    """Sum of the variables bound to a set of labels; zero for the empty set."""
    return MultiPoly(r, {tuple(1 if j == l - 1 else 0 for j in range(r)): 1 for l in labels})


def _ordered_splits(rest: Sequence[int]) -> Iterator[tuple[tuple, tuple]]:
    """All ordered pairs (X1, X2) with X1 and X2 disjoint covering rest.

    Bitmask order on X1 membership, so the stream is deterministic and
    an index range selects a chunk.
    """
    m = len(rest)
    for mask in range(1 << m):
        x1 = tuple(rest[i] for i in range(m) if mask >> i & 1)
        x2 = tuple(rest[i] for i in range(m) if not mask >> i & 1)
        yield x1, x2


def set_partitions(items: Sequence[int]) -> Iterator[tuple]:
    """Partitions of items into unordered nonempty blocks.

    Yields each partition as a tuple of blocks (tuples).  The first
    item is anchored: a partition of the tail either receives it as a
    new singleton block or absorbs it at the front of one existing
    block, so nothing repeats and the order is deterministic.  The
    empty sequence has exactly one partition, with no blocks.
    """
    items = list(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield ((first,),) + part
        for i, block in enumerate(part):
            yield part[:i] + ((first,) + block,) + part[i + 1 :]


def split_summands(r: int) -> Iterator[tuple[tuple, tuple, MultiPoly]]:
    """Per-split contributions to split_polynomial, as (X1, X2, summand).

    The X1 = empty summand is pre-simplified to its tail factor alone:
    the k1 * (k1 - 1)_(-1) it would carry cancels to 1, the one place
    the negative falling factorial convention is consumed.
    """
    if r < 2:
        raise ValueError("the split needs at least two vertices")
    k1 = _var(r, 1)
    k2 = _var(r, 2)
    for x1, x2 in _ordered_splits(range(3, r + 1)):
        tail = falling_factorial(k2 + _ksum(r, x2) - 1, len(x2))
        if x1:
            term = k1 * falling_factorial(k1 + _ksum(r, x1) - 1, len(x1) - 1) * tail
        else:
            term = tail
        yield x1, x2, term


def split_polynomial(r: int) -> MultiPoly:
    """Weight sum over trees on {1..r} divided by k_1...k_r, via the split.

    Each ordered pair (X1, X2) partitioning {3..r} contributes the
    closed forms of the two smaller sums times the new-edge factor,
    everything already divided by the full variable monomial:

        k1 * (k1 + K_X1 - 1)_(|X1|-1) * (k2 + K_X2 - 1)_(|X2|).
    """
    return MultiPoly.sum(r, (term for _, _, term in split_summands(r)))


def closed_polynomial(r: int) -> MultiPoly:
    """The closed form with the variable monomial divided out: (K-1)_(r-2)."""
    if r < 2:
        raise ValueError("the closed quotient needs at least two vertices")
    return falling_factorial(_ksum(r, range(1, r + 1)) - 1, r - 2)


def constant_term_sides(
    r: int, family: Callable[[int], MultiPoly] = closed_polynomial
) -> tuple[MultiPoly, MultiPoly]:
    """family(r) at k_1 = 0 against the closed constant (K_{2..r} - 1)_(r-2).

    The constant term in k_1 is one of the two properties that
    determine the family; both split_polynomial and closed_polynomial
    must produce the same value here.
    """
    if r < 2:
        raise ValueError("need at least two vertices")
    at_zero = specialize(family(r), {0: 0})
    target = falling_factorial(_ksum(r, range(2, r + 1)) - 1, r - 2)
    return at_zero, target


def constant_term_check(r: int) -> bool:
    """Constant-term property for both the split and the closed quotient."""
    return all(
        lhs == rhs
        for lhs, rhs in (
            constant_term_sides(r, split_polynomial),
            constant_term_sides(r, closed_polynomial),
        )
    )


def finite_difference_sides(
    r: int, family: Callable[[int], MultiPoly] = closed_polynomial
) -> tuple[MultiPoly, MultiPoly]:
    """Both sides of the finite difference equation in k_1.

    lhs: F_r(k_1 + 1, k_2, ..., k_r) - F_r(k_1, ..., k_r).
    rhs: sum over i in {3..r} of F_{r-1} evaluated at (k_1 + k_i, k_2,
    and the remaining variables with k_i dropped, in ascending label
    order).  For r = 2 the right side is the empty sum and the
    difference must vanish.
    """
    if r < 2:
        raise ValueError("need at least two vertices")
    f_r = family(r)
    k1 = _var(r, 1)
    shifted = [k1 + 1] + [_var(r, l) for l in range(2, r + 1)]
    lhs = f_r.substitute(shifted, r) - f_r
    rhs = MultiPoly.zero(r)
    if r > 2:
        f_small = family(r - 1)
        for i in range(3, r + 1):
            rest = [l for l in range(3, r + 1) if l != i]
            images = [k1 + _var(r, i), _var(r, 2)] + [_var(r, l) for l in rest]
            rhs = rhs + f_small.substitute(images, r)
    return lhs, rhs


def finite_difference_check(r: int) -> bool:
    """Finite-difference property for both the split and the closed quotient."""
    return all(
        lhs == rhs
        for lhs, rhs in (
            finite_difference_sides(r, split_polynomial),
            finite_difference_sides(r, closed_polynomial),
        )
    )


def grafting_law_sides(
    t: IncreasingTree, ambient: int | None = None
) -> tuple[MultiPoly, MultiPoly]:
    """One tree's weight against the product form over its split.

    Splitting t above its second-smallest label leaves host and shoot;
    the weight of t is the product of their weights times the factor
    the new edge contributes,

        k_(host root) * (K_(shoot labels) - |shoot| + 1),

    because the shoot hangs under the host's root and so disturbs no
    other vertex's subtree.
    """
    if ambient is None:
        ambient = t.labels[-1]
    host, shoot = split_at_second_min(t)
    edge = _var(ambient, host.root) * (
        _ksum(ambient, shoot.labels) - (len(shoot) - 1)
    )
    lhs = tree_weight(t, ambient)
    rhs = tree_weight(host, ambient) * tree_weight(shoot, ambient) * edge
    return lhs, rhs


def grafting_split_sides(r: int) -> tuple[MultiPoly, MultiPoly]:
    """The weight sum on {1..r} against its expansion over splits.

    Grouping trees by which labels end up in the subtree at the
    second-smallest vertex gives

        sum over X1 disjoint-union X2 = {3..r} of
        k1 * (k2 + K_X2 - |X2|) * S({1} with X1) * S({2} with X2)

    where S is the tree weight sum on a label set.
    """
    lhs = hook_weight_sum(r)
    rhs = MultiPoly.sum(r, (term for _, _, term in grafting_split_summands(r)))
    return lhs, rhs


def grafting_split_summands(r: int) -> Iterator[tuple[tuple, tuple, MultiPoly]]:
    """Per-split contributions to the grafting right side, as (X1, X2, summand)."""
    if r < 2:
        raise ValueError("the split needs at least two vertices")
    k1 = _var(r, 1)
    k2 = _var(r, 2)
    for x1, x2 in _ordered_splits(range(3, r + 1)):
        edge = k1 * (k2 + _ksum(r, x2) - len(x2))
        host_sum = tree_weight_sum(tuple(sorted((1,) + x1)), r)
        shoot_sum = tree_weight_sum(tuple(sorted((2,) + x2)), r)
        yield x1, x2, edge * host_sum * shoot_sum


def grafting_recurrence_check(r: int) -> bool:
    """Per-tree grafting law on every tree of size r, plus the full split."""
    for t in enumerate_increasing(range(1, r + 1)):
        lhs, rhs = grafting_law_sides(t, r)
        if lhs != rhs:
            return False
    lhs, rhs = grafting_split_sides(r)
    return lhs == rhs


def subset_closed_form(labels: Iterable[int], ambient: int) -> MultiPoly:
    """Closed form of the tree weight sum on any label set.

    prod of the labels' variables times (K_X - 1)_(|X|-2); a single
    label gives the empty tree sum 1.  This is the general-label
    counterpart of the closed form on {1..r}.
    """
    labels = tuple(sorted(labels))
    if not labels:
        raise ValueError("a tree needs at least one vertex")
    if len(labels) == 1:
        return MultiPoly.const(ambient, 1)
    present = set(labels)
    mono = tuple(1 if j + 1 in present else 0 for j in range(ambient))
    return MultiPoly.monomial(ambient, mono) * falling_factorial(
        _ksum(ambient, labels) - 1, len(labels) - 2
    )


def root_degree_sides(r: int) -> tuple[MultiPoly, MultiPoly]:
    """The weight sum against its expansion over root subtree partitions.

    Grouping trees by the set partition of {2..r} formed by the root's
    subtrees gives

        sum over partitions pi of k1^(number of blocks) *
        prod over blocks B of (K_B - |B| + 1) * S(B)

    with S the tree weight sum on B.  The sum is over unordered
    partitions: ordering the blocks would multiply each summand by
    (number of blocks)! and divide it right back out.
    """
    if r < 1:
        raise ValueError("need at least one vertex")
    lhs = hook_weight_sum(r)
    rhs = MultiPoly.sum(r, (term for _, term in root_degree_summands(r)))
    return lhs, rhs


def root_degree_summands(r: int) -> Iterator[tuple[tuple, MultiPoly]]:
    """Per-partition contributions to the root degree right side."""
    for part in set_partitions(range(2, r + 1)):
        term = MultiPoly.monomial(r, tuple([len(part)] + [0] * (r - 1)))
        for block in part:
            edge = _ksum(r, block) - (len(block) - 1)
            term = term * edge * tree_weight_sum(tuple(block), r)
        yield part, term


def root_degree_recurrence_check(r: int) -> bool:
    """Root-subtree partition recurrence as an exact polynomial identity."""
    lhs, rhs = root_degree_sides(r)
    return lhs == rhs


def lagrange_identity_sides(r: int) -> tuple[MultiPoly, MultiPoly]:
    """The closed form against the partition sum it must satisfy.

    Substituting the closed form for the inner tree sums in the root
    degree recurrence, each block's factor collapses by one more step
    of the falling factorial:

        (K_B - |B| + 1) * prod(k in B) * (K_B - 1)_(|B|-2)
            = prod(k in B) * (K_B - 1)_(|B|-1).

    So the identity reads: k_1...k_r (K-1)_(r-2) equals the sum over
    partitions of {2..r} of k1^(blocks) prod over blocks of
    prod(k) * (K_B - 1)_(|B|-1).  This is precisely the coefficient
    identity that Lagrange inversion of w_i = t_i(1+sum w)^{k_i}
    produces, hence the name.
    """
    if r < 2:
        raise ValueError("need at least two vertices")
    lhs = hook_weight_closed_form(r)
    rhs = MultiPoly.sum(r, (term for _, term in lagrange_summands(r)))
    return lhs, rhs


def lagrange_summands(r: int) -> Iterator[tuple[tuple, MultiPoly]]:
    """Per-partition contributions to the Lagrange-form right side."""
    for part in set_partitions(range(2, r + 1)):
        term = MultiPoly.monomial(r, tuple([len(part)] + [0] * (r - 1)))
        for block in part:
            present = set(block)
            mono = tuple(1 if j + 1 in present else 0 for j in range(r))
            term = term * MultiPoly.monomial(r, mono)
            term = term * falling_factorial(_ksum(r, block) - 1, len(block) - 1)
        yield part, term


def lagrange_identity_check(r: int) -> bool:
    """Partition form of the closed product, as an exact identity."""
    lhs, rhs = lagrange_identity_sides(r)
    return lhs == rhs


class TruncatedSeries:
    """Power series in t_1..t_r cut to exponent at most one per variable.

    Coefficients are indexed by subsets of {1..r} as bitmasks (bit i-1
    for t_i) and are exact ints or Fractions.  Inside this window any
    series with zero constant term is nilpotent, which is what makes
    inversion (and hence negative powers) a finite sum.
    """

    __slots__ = ("_r", "_coeffs")

    def __init__(self, r: int, coeffs=None):
        if not isinstance(r, int) or r < 0:
            raise ValueError("variable count must be a non-negative int")
        size = 1 << r
        if coeffs is None:
            coeffs = [0] * size
        else:
            coeffs = list(coeffs)
            if len(coeffs) != size:
                raise ValueError(f"need {size} coefficients, got {len(coeffs)}")
        self._r = r
        self._coeffs = coeffs

    @classmethod
    def const(cls, r: int, value) -> "TruncatedSeries":
        s = cls(r)
        s._coeffs[0] = value
        return s

    @classmethod
    def variable(cls, r: int, i: int) -> "TruncatedSeries":
        """The series t_(i+1)."""
        if not 0 <= i < r:
            raise ValueError(f"variable index {i} out of range")
        s = cls(r)
        s._coeffs[1 << i] = 1
        return s

    @property
    def nvars(self) -> int:
        return self._r

    def coefficient(self, mask: int) -> "int | Fraction":
        """Coefficient of the squarefree monomial selected by the bitmask."""
        if not 0 <= mask < (1 << self._r):
            raise ValueError(f"mask {mask} out of range")
        return self._coeffs[mask]

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            if other._r != self._r:
                raise ValueError("variable counts differ")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return TruncatedSeries.const(self._r, other)
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._r == other._r and self._coeffs == other._coeffs

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TruncatedSeries(
            self._r, [a + b for a, b in zip(self._coeffs, o._coeffs)]
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self._r, [-a for a in self._coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._coeffs, o._coeffs
        out = [0] * (1 << self._r)
        for m in range(1 << self._r):
            acc = 0
            s = m
            while True:
                ca = a[s]
                if ca:
                    cb = b[m ^ s]
                    if cb:
                        acc += ca * cb
                if s == 0:
                    break
                s = (s - 1) & m
            out[m] = acc
        return TruncatedSeries(self._r, out)

    __rmul__ = __mul__

    def _inverse(self) -> "TruncatedSeries":
        c0 = self._coeffs[0]
        if not c0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        unit = TruncatedSeries.const(self._r, 1)
        nil = TruncatedSeries(
            self._r, [0] + [Fraction(c, c0) if c0 != 1 else c for c in self._coeffs[1:]]
        )
        out = unit
        power = unit
        sign = 1
        for _ in range(self._r):
            power = power * nil
            sign = -sign
            out = out + power if sign > 0 else out - power
        if c0 != 1:
            out = out * Fraction(1, c0)
        return out

    def __pow__(self, k: int) -> "TruncatedSeries":
        if not isinstance(k, int) or isinstance(k, bool):
            raise TypeError("series power wants an int exponent")
        base = self if k >= 0 else self._inverse()
        e = abs(k)
        out = TruncatedSeries.const(self._r, 1)
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __repr__(self) -> str:
        nonzero = sum(1 for c in self._coeffs if c)
        return f"TruncatedSeries(r={self._r}, nonzero={nonzero})"


def lagrange_series_oracle(r: int, kvals: Sequence[int]) -> int:
    """Coefficient of t_1...t_r in w_1 for w_i = t_i (1 + sum w)^(k_i).

    Solves the functional system by fixed point iteration in the
    multilinear window; each pass extends correctness by one total
    degree, so r passes settle every retained coefficient.  The result
    must match k_1 (K-1)_(r-2) at the given integer values, which
    oracle_closed_form computes; the comparison is the caller's.

    Any integers are legal since the underlying identity is polynomial,
    but non-positive entries leave tree-counting territory, so they are
    flagged with a warning.
    """
    if r < 1:
        raise ValueError("need at least one variable")
    kvals = list(kvals)
    if len(kvals) != r:
        raise ValueError(f"need {r} exponents, got {len(kvals)}")
    for k in kvals:
        if not isinstance(k, int) or isinstance(k, bool):
            raise TypeError("exponents must be ints")
    if any(k <= 0 for k in kvals):
        warnings.warn(
            "non-positive exponents: the identity still holds as a polynomial "
            "statement, but the values no longer count trees",
            stacklevel=2,
        )
    ts = [TruncatedSeries.variable(r, i) for i in range(r)]
    w = [TruncatedSeries.const(r, 0) for _ in range(r)]
    for _ in range(r):
        base = TruncatedSeries.const(r, 1)
        for wi in w:
            base = base + wi
        w = [ts[i] * base ** kvals[i] for i in range(r)]
    value = w[0].coefficient((1 << r) - 1)
    if isinstance(value, Fraction):
        if value.denominator != 1:
            return value
        value = int(value)
    return value


def oracle_closed_form(r: int, kvals: Sequence[int]) -> int:
    """k_1 (K-1)_(r-2) at integer values; 1 at r = 1 by the usual convention."""
    if r < 1:
        raise ValueError("need at least one variable")
    kvals = list(kvals)
    if len(kvals) != r:
        raise ValueError(f"need {r} exponents, got {len(kvals)}")
    if r == 1:
        return 1
    big_k = sum(kvals)
    out = kvals[0]
    for j in range(r - 2):
        out *= big_k - 1 - j
    return out
