"""Exact sparse multivariate polynomials over the rationals.

A polynomial in n variables is stored as a term map: a dict sending each
exponent tuple (length n, non-negative ints) to a nonzero coefficient.
Coefficients are exact, either int or fractions.Fraction; the two mix
freely because Python's numeric tower makes them agree under ==, hash
and arithmetic.  The term map is kept canonical at all times (no zero
coefficients), so polynomial equality is plain dict equality.

Term maps are unordered.  Every rendered form (to_text, to_json_dict,
canonical_hash) sorts terms in descending lexicographic order of the
exponent tuple, which is what makes output byte-reproducible across
runs and across kernel backends.

The hot arithmetic lives in hooklab._backend (compiled when available);
this module owns validation, construction and everything that is not a
tight loop.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from hashlib import sha256
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

from hooklab import _backend as _B

Rational = Fraction
Coeff = Union[int, Fraction]
Exponents = "tuple[int, ...]"

__all__ = [
    "Coeff",
    "MultiPoly",
    "Rational",
    "Var",
    "falling_factorial",
    "specialize",
    "top_homogeneous",
]


@dataclass(frozen=True)
class Var:
    """Marker used in specialize() to send a variable to variable `index`."""

    index: int

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < 0:
            raise ValueError("Var index must be a non-negative int")


def _check_coeff(c) -> Coeff:
    if isinstance(c, bool) or not isinstance(c, (int, Fraction)):
        raise TypeError(f"coefficient must be int or Fraction, got {c!r}")
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class MultiPoly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping | Iterable | None = None):
        if not isinstance(nvars, int) or nvars < 0:
            raise ValueError("nvars must be a non-negative int")
        clean: dict = {}
        items = () if terms is None else (
            terms.items() if isinstance(terms, Mapping) else terms
        )
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(
                    f"exponent tuple {exps} has length {len(exps)}, expected {nvars}"
                )
            if any(not isinstance(e, int) or e < 0 for e in exps):
                raise ValueError(f"exponents must be non-negative ints: {exps}")
            c = _check_coeff(c)
            if c:
                acc = clean.get(exps)
                if acc is None:
                    clean[exps] = c
                else:
                    acc = acc + c
                    if acc:
                        clean[exps] = acc
                    else:
                        del clean[exps]
        self._nvars = nvars
        self._terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "MultiPoly":
        """Wrap an already canonical term map without copying. Trusted callers only."""
        self = object.__new__(cls)
        self._nvars = nvars
        self._terms = terms
        return self

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, value: Coeff) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultiPoly":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} vars")
        exps = tuple(1 if i == index else 0 for i in range(nvars))
        return cls._raw(nvars, {exps: 1})

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], coeff: Coeff = 1) -> "MultiPoly":
        return cls(nvars, {tuple(exps): coeff})

    @classmethod
    def sum(cls, nvars: int, polys: Iterable["MultiPoly"]) -> "MultiPoly":
        """Sum an iterable of polynomials in a single in-place fold.

        Repeated binary + copies the growing accumulator once per
        summand; this stays linear in the total number of terms.
        """
        acc: dict = {}
        for p in polys:
            if p._nvars != nvars:
                raise ValueError(f"expected {nvars} variables, got {p._nvars}")
            _B.iadd_terms(acc, p._terms)
        return cls._raw(nvars, acc)

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> Mapping:
        """Read-only view of the canonical term map."""
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> list:
        """Terms as (exponents, coeff) pairs in descending lex order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0], reverse=True)

    def coefficient(self, exps: Sequence[int]) -> Coeff:
        return self._terms.get(tuple(exps), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        """Max term degree, or -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._nvars, frozenset(self._terms.items())))

    def _coerce(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            if other._nvars != self._nvars:
                raise ValueError(
                    f"variable count mismatch: {self._nvars} vs {other._nvars}"
                )
            return other
        if isinstance(other, bool):
            return None
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(self._nvars, other)
        return None

    def __add__(self, other) -> "MultiPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out = dict(self._terms)
        _B.iadd_terms(out, q._terms)
        return MultiPoly._raw(self._nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        if not self._terms:
            return self
        return MultiPoly._raw(self._nvars, _B.scale_terms(self._terms, -1))

    def __sub__(self, other) -> "MultiPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other) -> "MultiPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other) -> "MultiPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return MultiPoly._raw(self._nvars, _B.mul_terms(self._terms, q._terms))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial power requires a non-negative int")
        result = {(0,) * self._nvars: 1}
        base = self._terms
        e = exponent
        while e:
            if e & 1:
                result = _B.mul_terms(result, base)
            e >>= 1
            if e:
                base = _B.mul_terms(base, base)
        return MultiPoly._raw(self._nvars, result)

    def substitute(self, images: Sequence["MultiPoly"], nvars: int) -> "MultiPoly":
        """Compose: replace variable i by images[i], a polynomial in `nvars` vars.

        Needs one image per variable.  This is full polynomial
        composition; for plain scalar or variable-to-variable
        assignments use specialize(), which is much cheaper.
        """
        images = list(images)
        if len(images) != self._nvars:
            raise ValueError(
                f"need {self._nvars} images, got {len(images)}"
            )
        for q in images:
            if not isinstance(q, MultiPoly) or q.nvars != nvars:
                raise ValueError("every image must be a MultiPoly in `nvars` variables")
        unit = {(0,) * nvars: 1}
        caches = [{0: unit, 1: q._terms} for q in images]

        def power(i: int, e: int) -> dict:
            cache = caches[i]
            top = max(cache)
            while top < e:
                cache[top + 1] = _B.mul_terms(cache[top], cache[1])
                top += 1
            return cache[e]

        out: dict = {}
        for exps, c in self._terms.items():
            term = {(0,) * nvars: c}
            for i, e in enumerate(exps):
                if e:
                    term = _B.mul_terms(term, power(i, e))
            _B.iadd_terms(out, term)
        return MultiPoly._raw(nvars, out)

    def to_text(self, names: Sequence[str] | None = None) -> str:
        """Deterministic human-readable form, leading term first."""
        if names is None:
            names = [f"k{i + 1}" for i in range(self._nvars)]
        elif len(names) != self._nvars:
            raise ValueError("need one name per variable")
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for exps, c in self.sorted_terms():
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            num, den = mag.numerator, mag.denominator
            coeff_txt = str(num) if den == 1 else f"{num}/{den}"
            if not factors:
                body = coeff_txt
            elif coeff_txt == "1":
                body = "*".join(factors)
            else:
                body = "*".join([coeff_txt] + factors)
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(chunks)

    def canonical_hash(self) -> str:
        """sha256 hex digest of the canonical text rendering."""
        payload = f"{self._nvars}|{self.to_text()}"
        return sha256(payload.encode("utf-8")).hexdigest()

    def to_json_dict(self) -> dict:
        return {
            "nvars": self._nvars,
            "terms": [
                {"exp": list(exps), "num": c.numerator, "den": c.denominator}
                for exps, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "MultiPoly":
        nvars = data["nvars"]
        pairs = []
        for t in data["terms"]:
            c = Fraction(t["num"], t.get("den", 1))
            pairs.append((tuple(t["exp"]), c))
        return cls(nvars, pairs)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    def __repr__(self) -> str:
        return f"MultiPoly({self._nvars}, {self.to_text()!r})"


def falling_factorial(p: MultiPoly, m: int) -> MultiPoly:
    """Product p*(p-1)*...*(p-m+1); empty product 1 when m == 0.

    Negative m is refused: the callers that would hit it all simplify
    the offending factor away first, and silently extending the product
    downward would mask such a bug.
    """
    if not isinstance(p, MultiPoly):
        raise TypeError("falling_factorial expects a MultiPoly")
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"falling factorial length must be a non-negative int, got {m}")
    out = MultiPoly.const(p.nvars, 1)
    for i in range(m):
        out = out * (p - i)
    return out


def specialize(p: MultiPoly, assignment: Mapping[int, "Coeff | Var"]) -> MultiPoly:
    """Send each variable to a scalar or to a target variable slot.

    `assignment` maps source variable indices to either an exact scalar
    (int or Fraction) or Var(j), meaning variable j of the result.  A
    variable not mentioned keeps its own index, as if Var(i) were given.
    Several sources may share a target, which identifies those
    variables.  The result has just enough variables to cover the
    largest kept index; scalar-assigned variables disappear.
    """
    if not isinstance(p, MultiPoly):
        raise TypeError("specialize expects a MultiPoly")
    n = p.nvars
    scalars: dict[int, Coeff] = {}
    targets: list[tuple[int, int]] = []
    for i in range(n):
        v = assignment.get(i, Var(i))
        if isinstance(v, Var):
            targets.append((i, v.index))
        else:
            scalars[i] = _check_coeff(v)
    for i in assignment:
        if not (isinstance(i, int) and 0 <= i < n):
            raise ValueError(f"assignment key {i!r} is not a variable of the input")
    nvars_out = 1 + max(j for _, j in targets) if targets else 0
    out: dict = {}
    for exps, c in p._terms.items():
        coeff = c
        for i, s in scalars.items():
            e = exps[i]
            if e:
                coeff = coeff * s**e
        if not coeff:
            continue
        key = [0] * nvars_out
        for src, dst in targets:
            key[dst] += exps[src]
        k = tuple(key)
        acc = out.get(k)
        if acc is None:
            out[k] = coeff
        else:
            acc = acc + coeff
            if acc:
                out[k] = acc
            else:
                del out[k]
    return MultiPoly._raw(nvars_out, out)


def top_homogeneous(p: MultiPoly) -> MultiPoly:
    """Sum of the terms of maximal total degree.

    Raises on the zero polynomial, whose top part is undefined.
    Multiplicative: top(p*q) == top(p)*top(q) over this exact coefficient
    domain, which is what makes it safe to take the top part of a big
    product one factor at a time.
    """
    if not isinstance(p, MultiPoly):
        raise TypeError("top_homogeneous expects a MultiPoly")
    if p.is_zero():
        raise ValueError("the zero polynomial has no top homogeneous part")
    d = p.total_degree()
    kept = {e: c for e, c in p._terms.items() if sum(e) == d}
    return MultiPoly._raw(p.nvars, kept)
