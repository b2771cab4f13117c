"""Exact scalar and sparse polynomial arithmetic.

Every quantity in this package is an exact rational number
(``fractions.Fraction``, re-exported as :data:`ExactScalar`) or a sparse
multivariate polynomial over such numbers.  No floating point is used
anywhere; equality always means exact equality.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Sequence, Union

#: Arbitrary-precision rational scalar.  ``Fraction`` already guarantees the
#: canonical form this package relies on: lowest terms, positive denominator.
ExactScalar = Fraction

ScalarLike = Union[int, Fraction]


def scalar_str(x: ScalarLike) -> str:
    """Render a rational as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_scalar(text: str) -> Fraction:
    """Inverse of :func:`scalar_str`."""
    return Fraction(text)


def binom(q: ScalarLike, m: int) -> Fraction:
    """Generalized binomial coefficient q*(q-1)*...*(q-m+1) / m!.

    Defined for every rational q and every m >= 0 (the m = 0 case is the
    empty product, giving 1).
    """
    if m < 0:
        raise ValueError(f"binomial lower index must be >= 0, got {m}")
    num = Fraction(1)
    q = Fraction(q)
    for j in range(m):
        num *= q - j
    return num / factorial(m)


def binom_int(q: int, m: int) -> int:
    """Generalized binomial restricted to integer arguments.

    The value is always an integer; negative upper arguments follow
    ``binom(-q, m) = (-1)**m * binom(q+m-1, m)``.
    """
    value = binom(q, m)
    if value.denominator != 1:
        raise ArithmeticError(f"binom({q}, {m}) is not an integer")
    return value.numerator


Exponents = tuple  # exponent vector, one entry per variable


class SparsePoly:
    """Sparse multivariate polynomial over exact rationals.

    Terms are stored as a map from exponent vectors (tuples of non-negative
    ints, one entry per variable) to nonzero ``Fraction`` coefficients.
    Instances are immutable by convention: no method mutates ``self`` and
    callers must never modify the term map.  That makes values safe to share
    across threads and to cache.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponents, ScalarLike] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be >= 0")
        clean: dict[Exponents, Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise ValueError(
                        f"exponent vector {exps} has length {len(exps)}, expected {nvars}"
                    )
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                coeff = Fraction(coeff)
                if coeff != 0:
                    clean[exps] = coeff
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SparsePoly is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "SparsePoly":
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, value: ScalarLike) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "SparsePoly":
        """The monomial x_{index} (0-based index)."""
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Largest total degree among stored terms; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    # -- ring operations ---------------------------------------------------

    def _require_same_vars(self, other: "SparsePoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.const(self.nvars, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._require_same_vars(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            new = out.get(exps, Fraction(0)) + coeff
            if new:
                out[exps] = new
            else:
                out.pop(exps, None)
        return SparsePoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.const(self.nvars, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if other == 0:
                return SparsePoly.zero(self.nvars)
            return SparsePoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._require_same_vars(other)
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                new = out.get(e, Fraction(0)) + c1 * c2
                if new:
                    out[e] = new
                else:
                    out.pop(e, None)
        return SparsePoly(self.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return self * (Fraction(1) / Fraction(scalar))

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = SparsePoly.const(self.nvars, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.const(self.nvars, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- evaluation ----------------------------------------------------------

    def eval(self, point: Sequence[ScalarLike]) -> Fraction:
        """Exact value at the given point (one scalar per variable)."""
        if len(point) != self.nvars:
            raise ValueError(f"point has length {len(point)}, expected {self.nvars}")
        point = [Fraction(p) for p in point]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            value = coeff
            for base, e in zip(point, exps):
                if e:
                    value *= base**e
            total += value
        return total

    # -- canonical serialization ----------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in graded-lex order: higher total degree first, then
        lexicographically larger exponent vector first."""
        return sorted(
            self.terms.items(),
            key=lambda item: (-sum(item[0]), tuple(-e for e in item[0])),
        )

    def to_pairs(self) -> list[tuple[list[int], str]]:
        return [(list(exps), scalar_str(coeff)) for exps, coeff in self.sorted_terms()]

    @classmethod
    def from_pairs(cls, nvars: int, pairs: Iterable[tuple[Sequence[int], str]]) -> "SparsePoly":
        return cls(nvars, {tuple(exps): parse_scalar(coeff) for exps, coeff in pairs})

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = [f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}" for i, e in enumerate(exps) if e]
            body = "*".join(factors)
            if body:
                parts.append(f"{scalar_str(coeff)}*{body}" if coeff != 1 else body)
            else:
                parts.append(scalar_str(coeff))
        return " + ".join(parts)

    def __repr__(self):
        return f"SparsePoly({self.nvars}, {dict(self.sorted_terms())!r})"


def binom_poly(poly: SparsePoly, m: int) -> SparsePoly:
    """Generalized binomial with a polynomial upper argument.

    Returns the expansion of poly*(poly-1)*...*(poly-m+1) / m!.  The division
    by m! happens once, after the product of the shifted factors.
    """
    if m < 0:
        raise ValueError(f"binomial lower index must be >= 0, got {m}")
    result = SparsePoly.const(poly.nvars, 1)
    for j in range(m):
        result = result * (poly - j)
    return result * Fraction(1, factorial(m))
