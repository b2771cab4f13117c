"""Partitions, monomial symmetric polynomials and the monomial basis.

A partition is a weakly decreasing tuple of positive ints; the empty tuple
denotes the constant 1.  A symmetric polynomial in s variables is represented
in the monomial basis by a :class:`BasisExpr`, a finite map from partitions to
exact rational coefficients.  The monomial symmetric polynomial attached to a
partition with more parts than variables is zero, and a partition whose
parts all equal 1 with exactly s parts expands to the product of all
variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DivisibilityError, SymmetryError
from .exactcore import SparsePoly, parse_scalar, scalar_str

Partition = tuple  # weakly decreasing tuple of positive ints


def check_partition(partition: Sequence[int]) -> Partition:
    partition = tuple(partition)
    if any(p <= 0 for p in partition):
        raise ValueError(f"partition parts must be positive: {partition}")
    if any(partition[i] < partition[i + 1] for i in range(len(partition) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {partition}")
    return partition


def partitions_of(weight: int) -> list[Partition]:
    """All partitions of the given weight, largest-part-first order."""
    if weight < 0:
        raise ValueError("weight must be >= 0")
    result: list[Partition] = []

    def descend(remaining: int, cap: int, prefix: list[int]) -> None:
        if remaining == 0:
            result.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            descend(remaining - part, part, prefix)
            prefix.pop()

    descend(weight, weight, [])
    return result


def partitions_up_to(weight: int) -> list[Partition]:
    """All partitions of every weight <= the bound, by weight then
    reverse-lexicographic within each weight."""
    out: list[Partition] = []
    for w in range(weight + 1):
        out.extend(partitions_of(w))
    return out


def partition_sort_key(partition: Partition):
    """Canonical serialization order: weight descending, then reverse-lex."""
    return (-sum(partition), tuple(-p for p in partition))


def orbit_size(partition: Partition, s: int) -> int:
    """Number of distinct monomials in s variables with this exponent multiset."""
    if len(partition) > s:
        return 0
    counts: dict[int, int] = {}
    for p in partition:
        counts[p] = counts.get(p, 0) + 1
    counts[0] = s - len(partition)
    denom = 1
    for c in counts.values():
        denom *= factorial(c)
    return factorial(s) // denom


def _distinct_arrangements(values: Sequence[int], length: int) -> Iterator[tuple]:
    """All distinct tuples of the given length using the multiset ``values``
    padded with zeros."""
    counts: dict[int, int] = {0: length - len(values)}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    distinct = sorted(counts)

    slot = [0] * length

    def fill(position: int) -> Iterator[tuple]:
        if position == length:
            yield tuple(slot)
            return
        for v in distinct:
            if counts[v]:
                counts[v] -= 1
                slot[position] = v
                yield from fill(position + 1)
                counts[v] += 1

    yield from fill(0)


def expand_m(partition: Sequence[int], s: int) -> SparsePoly:
    """The monomial symmetric polynomial m_lambda in s variables."""
    partition = check_partition(partition)
    if s < 1:
        raise ValueError("s must be >= 1")
    if len(partition) > s:
        return SparsePoly.zero(s)
    return SparsePoly(s, {exps: 1 for exps in _distinct_arrangements(partition, s)})


@dataclass(frozen=True)
class BasisExpr:
    """A symmetric polynomial written in the monomial basis."""

    nvars: int
    coeffs: Mapping[Partition, Fraction]

    def __post_init__(self):
        clean = {}
        for partition, coeff in self.coeffs.items():
            partition = check_partition(partition)
            if len(partition) > self.nvars:
                raise ValueError(
                    f"partition {partition} has more parts than variables ({self.nvars})"
                )
            coeff = Fraction(coeff)
            if coeff != 0:
                clean[partition] = coeff
        object.__setattr__(self, "coeffs", clean)

    def get(self, partition: Sequence[int]) -> Fraction:
        return self.coeffs.get(tuple(partition), Fraction(0))

    def sorted_items(self) -> list[tuple[Partition, Fraction]]:
        return sorted(self.coeffs.items(), key=lambda item: partition_sort_key(item[0]))

    def to_pairs(self) -> list[tuple[list[int], str]]:
        return [(list(p), scalar_str(c)) for p, c in self.sorted_items()]

    @classmethod
    def from_pairs(cls, nvars: int, pairs: Iterable[tuple[Sequence[int], str]]) -> "BasisExpr":
        return cls(nvars, {tuple(p): parse_scalar(c) for p, c in pairs})

    def __eq__(self, other):
        if not isinstance(other, BasisExpr):
            return NotImplemented
        return self.nvars == other.nvars and dict(self.coeffs) == dict(other.coeffs)


def to_basis(poly: SparsePoly) -> BasisExpr:
    """Write a symmetric polynomial in the monomial basis.

    Symmetry is verified as a by-product of orbit collection: two monomials
    in the same orbit with different coefficients, or an orbit that is only
    partially present, raise :class:`SymmetryError`.
    """
    s = poly.nvars
    coeffs: dict[Partition, Fraction] = {}
    seen: dict[Partition, int] = {}
    for exps, coeff in poly.terms.items():
        partition = tuple(sorted((e for e in exps if e), reverse=True))
        if partition in coeffs:
            if coeffs[partition] != coeff:
                raise SymmetryError(
                    f"monomials in the orbit of {partition} have coefficients "
                    f"{coeffs[partition]} and {coeff}"
                )
            seen[partition] += 1
        else:
            coeffs[partition] = coeff
            seen[partition] = 1
    for partition, count in seen.items():
        expected = orbit_size(partition, s)
        if count != expected:
            raise SymmetryError(
                f"orbit of {partition} has {count} of {expected} monomials present"
            )
    return BasisExpr(s, coeffs)


def from_basis(expr: BasisExpr) -> SparsePoly:
    """Expand a monomial-basis expression into a sparse polynomial."""
    out: dict[tuple, Fraction] = {}
    for partition, coeff in expr.coeffs.items():
        for exps in _distinct_arrangements(partition, expr.nvars):
            out[exps] = coeff
    return SparsePoly(expr.nvars, out)


def divide_all_vars(poly: SparsePoly) -> SparsePoly:
    """Exact division by the product of all variables."""
    for exps in poly.terms:
        if any(e == 0 for e in exps):
            raise DivisibilityError(
                f"term with exponents {exps} is not divisible by every variable"
            )
    return SparsePoly(
        poly.nvars, {tuple(e - 1 for e in exps): c for exps, c in poly.terms.items()}
    )


def specialize_ones(poly: SparsePoly, k: int) -> SparsePoly:
    """Substitute 1 for all variables past the first k and re-collect."""
    if not 1 <= k <= poly.nvars:
        raise ValueError(f"k must be in [1, {poly.nvars}], got {k}")
    out: dict[tuple, Fraction] = {}
    for exps, coeff in poly.terms.items():
        head = exps[:k]
        new = out.get(head, Fraction(0)) + coeff
        if new:
            out[head] = new
        else:
            out.pop(head, None)
    return SparsePoly(k, out)


def m1_times(expr: BasisExpr) -> BasisExpr:
    """Multiply by m_1 (the sum of the variables) directly in the basis.

    The product of m_1 with m_lambda is the sum, over ways of raising one
    part value of lambda by 1 or appending a new part 1, of the resulting
    m_mu weighted by the multiplicity of the raised value in mu.
    """
    s = expr.nvars
    out: dict[Partition, Fraction] = {}

    def accumulate(partition: Partition, coeff: Fraction) -> None:
        new = out.get(partition, Fraction(0)) + coeff
        if new:
            out[partition] = new
        else:
            out.pop(partition, None)

    for partition, coeff in expr.coeffs.items():
        for v in sorted(set(partition)):
            raised = list(partition)
            raised.remove(v)
            raised.append(v + 1)
            mu = tuple(sorted(raised, reverse=True))
            accumulate(mu, coeff * mu.count(v + 1))
        if len(partition) < s:
            mu = tuple(sorted(partition + (1,), reverse=True))
            accumulate(mu, coeff * mu.count(1))
    return BasisExpr(s, out)
