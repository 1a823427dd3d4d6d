"""Exact Clifford algebra Cl(0,n) for 1 <= n <= 8.

Conventions used throughout the package:

* generators are 0-based, ``e0 .. e(n-1)``, and square to -1
  (negative-definite convention: ``v*w + w*v = -2<v,w>``);
* a basis blade is encoded as an n-bit mask, bit i meaning "contains e_i",
  and blades are kept in canonical ascending-index order;
* coefficients are exact ``fractions.Fraction`` values and absent blades
  are zero, so every identity below is checked with ``==``, never with a
  tolerance.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import DimensionMismatchError, UnsupportedDimensionError

Scalar = Union[int, Fraction]

MAX_GENERATORS = 8


def blade_product(a: int, b: int) -> tuple[int, int]:
    """Multiply basis blades given as bit masks.

    Returns ``(mask, sign)`` with ``e_a * e_b = sign * e_mask``.  The sign
    counts the transpositions needed to merge the two ascending index
    sequences, plus one factor -1 for every repeated generator (e_i^2 = -1).
    """
    swaps = 0
    x = a >> 1
    while x:
        swaps += (x & b).bit_count()
        x >>= 1
    sign = -1 if swaps & 1 else 1
    if (a & b).bit_count() & 1:
        sign = -sign
    return a ^ b, sign


def blade_grade(mask: int) -> int:
    return mask.bit_count()


class Multivector:
    """Element of Cl(0,n) as a sparse blade -> Fraction mapping."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[int, Scalar] | None = None):
        if not 1 <= n <= MAX_GENERATORS:
            raise UnsupportedDimensionError(f"generator count must be 1..{MAX_GENERATORS}, got {n}")
        clean: dict[int, Fraction] = {}
        for mask, coeff in (terms or {}).items():
            if not 0 <= mask < (1 << n):
                raise ValueError(f"blade mask {mask:#x} uses generators beyond n={n}")
            if isinstance(coeff, float):
                raise TypeError("coefficients must be exact (int or Fraction), not float")
            c = Fraction(coeff)
            if c:
                clean[mask] = c
        self.n = n
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def scalar(cls, n: int, value: Scalar) -> "Multivector":
        return cls(n, {0: value})

    @classmethod
    def basis_vector(cls, n: int, i: int) -> "Multivector":
        if not 0 <= i < n:
            raise ValueError(f"generator index {i} out of range for n={n}")
        return cls(n, {1 << i: 1})

    @classmethod
    def blade(cls, n: int, indices: Iterable[int], coeff: Scalar = 1) -> "Multivector":
        mask = 0
        for i in indices:
            if not 0 <= i < n:
                raise ValueError(f"generator index {i} out of range for n={n}")
            if mask & (1 << i):
                raise ValueError("blade indices must be distinct")
            mask |= 1 << i
        return cls(n, {mask: coeff})

    @classmethod
    def vector(cls, n: int, components: Iterable[Scalar]) -> "Multivector":
        comps = list(components)
        if len(comps) != n:
            raise DimensionMismatchError(f"expected {n} components, got {len(comps)}")
        return cls(n, {1 << i: c for i, c in enumerate(comps)})

    # -- ring structure ----------------------------------------------------

    def _check_same_algebra(self, other: "Multivector") -> None:
        if self.n != other.n:
            raise DimensionMismatchError(f"mixing Cl(0,{self.n}) with Cl(0,{other.n})")

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check_same_algebra(other)
        terms = dict(self.terms)
        for mask, c in other.terms.items():
            terms[mask] = terms.get(mask, Fraction(0)) + c
        return Multivector(self.n, terms)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def __neg__(self) -> "Multivector":
        return Multivector(self.n, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other: Union["Multivector", Scalar]) -> "Multivector":
        if isinstance(other, (int, Fraction)):
            return Multivector(self.n, {m: c * other for m, c in self.terms.items()})
        self._check_same_algebra(other)
        terms: dict[int, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mask, sign = blade_product(ma, mb)
                acc = terms.get(mask, Fraction(0)) + sign * ca * cb
                if acc:
                    terms[mask] = acc
                else:
                    terms.pop(mask, None)
        return Multivector(self.n, terms)

    def __rmul__(self, other: Scalar) -> "Multivector":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Multivector)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return f"Multivector({self.n}, 0)"
        parts = []
        for mask in sorted(self.terms):
            c = self.terms[mask]
            name = "1" if mask == 0 else "".join(f"e{i}" for i in range(self.n) if mask >> i & 1)
            parts.append(f"{c}*{name}" if mask else f"{c}")
        return f"Multivector({self.n}, {' + '.join(parts)})"

    # -- structure maps ----------------------------------------------------

    def grade(self, k: int) -> "Multivector":
        return Multivector(self.n, {m: c for m, c in self.terms.items() if blade_grade(m) == k})

    def grades(self) -> set[int]:
        return {blade_grade(m) for m in self.terms}

    def scalar_part(self) -> Fraction:
        return self.terms.get(0, Fraction(0))

    def vector_components(self) -> tuple[Fraction, ...]:
        return tuple(self.terms.get(1 << i, Fraction(0)) for i in range(self.n))

    def is_zero(self) -> bool:
        return not self.terms

    def grade_involution(self) -> "Multivector":
        return Multivector(
            self.n,
            {m: -c if blade_grade(m) & 1 else c for m, c in self.terms.items()},
        )

    def reverse(self) -> "Multivector":
        terms = {}
        for m, c in self.terms.items():
            k = blade_grade(m)
            terms[m] = -c if (k * (k - 1) // 2) & 1 else c
        return Multivector(self.n, terms)


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    return a * b


def grade_involution(a: Multivector) -> Multivector:
    """Blade of grade k scaled by (-1)^k; splits Cl into even/odd parts."""
    return a.grade_involution()


def reverse(a: Multivector) -> Multivector:
    """Anti-automorphism scaling a grade-k blade by (-1)^(k(k-1)/2)."""
    return a.reverse()


def p_iso(a: Multivector) -> Multivector:
    """Algebra embedding of Cl(0,n) onto the even part of Cl(0,n+1).

    The new generator takes index 0 and existing generators shift up by
    one: ``e_i -> e0 e_(i+1)``.  On even inputs this is the plain
    index-shifted inclusion.
    """
    if a.n >= MAX_GENERATORS:
        raise UnsupportedDimensionError(f"cannot extend past {MAX_GENERATORS} generators")
    m = a.n + 1
    out = Multivector(m, {})
    e0 = Multivector.basis_vector(m, 0)
    for mask, coeff in a.terms.items():
        factor = Multivector.scalar(m, coeff)
        for i in range(a.n):
            if mask >> i & 1:
                factor = factor * e0 * Multivector.basis_vector(m, i + 1)
        out = out + factor
    return out


def volume_element(n: int) -> Multivector:
    """Ordered product of all generators: the single top blade."""
    return Multivector(n, {(1 << n) - 1: 1})


def chiral_projectors() -> tuple[Multivector, Multivector]:
    """The idempotents (1 +- omega7)/2 of Cl(0,7)."""
    one = Multivector.scalar(7, 1)
    omega = volume_element(7)
    half = Fraction(1, 2)
    return (one + omega) * half, (one - omega) * half
