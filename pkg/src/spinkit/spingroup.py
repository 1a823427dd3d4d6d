"""Spin(n) inside the even Clifford algebra: conjugation action, reflections,
and constructive lifting between SO(n) and Spin(n).

A spin element is an even multivector zeta with zeta * reverse(zeta) = 1
whose conjugation preserves grade one.  Its rotation is read off column by
column: column j of Ad(zeta) is the grade-1 part of zeta e_j zeta^{-1}.

Lifting a rotation works over the rationals whenever the product of the
squared lengths of its reflection factors is a rational square (always the
case for rotations arising as Ad- or spin-representation images of rational
spin elements); otherwise no rational lift exists and ``lift_rotation``
raises.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import exactlinalg as la
from .errors import InvalidSpinElementError, LiftError
from .multivector import Multivector, blade_grade

Matrix = la.Matrix


@dataclass(frozen=True)
class RotationMatrix:
    """Exact-rational element of SO(n)."""

    entries: Matrix

    def __post_init__(self):
        a = la.mat(self.entries)
        object.__setattr__(self, "entries", a)
        if not la.is_orthogonal(a):
            raise ValueError("matrix is not orthogonal")
        if la.det(a) != 1:
            raise ValueError("matrix has determinant != +1")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __matmul__(self, other: "RotationMatrix") -> "RotationMatrix":
        return RotationMatrix(la.mat_mul(self.entries, other.entries))

    @classmethod
    def identity(cls, n: int) -> "RotationMatrix":
        return cls(la.identity(n))


@dataclass(frozen=True)
class SkewMatrix:
    """Exact-rational skew-symmetric matrix (an element of so(n))."""

    entries: Matrix

    def __post_init__(self):
        a = la.mat(self.entries)
        object.__setattr__(self, "entries", a)
        if not la.is_skew(a):
            raise ValueError("matrix is not skew-symmetric")

    @property
    def n(self) -> int:
        return len(self.entries)


class SpinElement:
    """Point of Spin(n) represented by an even multivector of unit norm."""

    __slots__ = ("value", "n")

    def __init__(self, value: Multivector, check: bool = True):
        self.value = value
        self.n = value.n
        if check:
            self._validate()

    def _validate(self) -> None:
        if any(blade_grade(m) & 1 for m in self.value.terms):
            raise InvalidSpinElementError("spin element must be even")
        norm = self.value * self.value.reverse()
        if norm != Multivector.scalar(self.n, 1):
            raise InvalidSpinElementError("spin element must satisfy zeta * reverse(zeta) = 1")

    def inverse(self) -> "SpinElement":
        return SpinElement(self.value.reverse(), check=False)

    def __mul__(self, other: "SpinElement") -> "SpinElement":
        return SpinElement(self.value * other.value, check=False)

    def __neg__(self) -> "SpinElement":
        return SpinElement(-self.value, check=False)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SpinElement) and self.value == other.value

    def __hash__(self) -> int:
        return hash(self.value)

    def __repr__(self) -> str:
        return f"SpinElement({self.value!r})"

    @classmethod
    def one(cls, n: int) -> "SpinElement":
        return cls(Multivector.scalar(n, 1), check=False)

    @classmethod
    def from_unit_vectors(cls, vectors: list[Multivector]) -> "SpinElement":
        if len(vectors) % 2:
            raise InvalidSpinElementError("need an even number of unit vectors")
        n = vectors[0].n
        out = Multivector.scalar(n, 1)
        for v in vectors:
            if v.grades() not in ({1}, set()):
                raise InvalidSpinElementError("factors must be grade-1")
            if (v * v) != Multivector.scalar(n, -1):
                raise InvalidSpinElementError("factors must be unit vectors")
            out = out * v
        return cls(out)


def adjoint_action(zeta: SpinElement) -> RotationMatrix:
    """The rotation x -> zeta x zeta^{-1} of R^n (the two-to-one cover map)."""
    n = zeta.n
    inv = zeta.value.reverse()
    cols = []
    for j in range(n):
        image = zeta.value * Multivector.basis_vector(n, j) * inv
        if image.grades() not in ({1}, set()):
            raise InvalidSpinElementError("conjugation does not preserve grade 1")
        cols.append(image.vector_components())
    return RotationMatrix(la.transpose(la.mat(cols)))


def reflect(v: Multivector, x: Multivector) -> Multivector:
    """Reflection -v x v^{-1} of the vector x across the hyperplane v-perp."""
    if v.grades() != {1}:
        raise ValueError("reflection axis must be grade-1")
    if (v * v) != Multivector.scalar(v.n, -1):
        raise InvalidSpinElementError("reflection axis must be a unit vector")
    if x.grades() not in ({1}, set()):
        raise ValueError("can only reflect grade-1 elements")
    # v^{-1} = -v for unit v, so -v x v^{-1} = v x v
    return v * x * v


def _unnormalized_reflection(v: tuple[Fraction, ...], x: list[Fraction]) -> list[Fraction]:
    vv = la.dot(v, v)
    vx = la.dot(v, x)
    f = 2 * vx / vv
    return [xi - f * vi for xi, vi in zip(x, v)]


def lift_rotation(rotation: RotationMatrix) -> SpinElement:
    """Constructive Cartan-Dieudonne lift of R in SO(n) to Spin(n).

    Peels one column at a time with a (possibly non-unit) rational
    reflection vector, multiplies the factors in the Clifford algebra and
    rescales by the exact square root of the accumulated norm.  The result
    satisfies adjoint_action(zeta) == R and is sign-canonicalized so that
    its first nonzero coefficient in ascending blade order is positive.
    """
    n = rotation.n
    cols = [list(col) for col in la.transpose(rotation.entries)]
    factors: list[tuple[Fraction, ...]] = []
    for j in range(n):
        ej = [Fraction(1 if i == j else 0) for i in range(n)]
        x = cols[j]
        if x == ej:
            continue
        v = tuple(a - b for a, b in zip(x, ej))
        factors.append(v)
        cols = [_unnormalized_reflection(v, c) for c in cols]
    if len(factors) % 2:
        raise LiftError("odd reflection count: input is orientation-reversing")

    product = Multivector.scalar(n, 1)
    norm_sq = Fraction(1)
    for v in factors:
        product = product * Multivector.vector(n, v)
        norm_sq *= la.dot(v, v)
    scale = la.rational_square_root(norm_sq)
    if scale is None:
        raise LiftError("rotation has no rational spin lift (spinor norm is not a square)")
    zeta = product * (Fraction(1) / scale)

    first = min(zeta.terms) if zeta.terms else 0
    if zeta.terms and zeta.terms[first] < 0:
        zeta = -zeta
    return SpinElement(zeta)


def lie_lift(a: SkewMatrix) -> Multivector:
    """The bivector B with d(Ad)(B) = a, where d(Ad)(B)x = Bx - xB.

    For column action (a x)_i = sum_j a_ij x_j and the e_i^2 = -1 metric
    this is B = (1/4) sum_ij a_ij e_j e_i.
    """
    n = a.n
    terms: dict[int, Fraction] = {}
    quarter = Fraction(1, 4)
    for i in range(n):
        for j in range(n):
            c = a.entries[i][j]
            if not c or i == j:
                continue
            # e_j e_i written in canonical order: sign -1 when j > i
            mask = (1 << i) | (1 << j)
            sign = 1 if j < i else -1
            terms[mask] = terms.get(mask, Fraction(0)) + sign * quarter * c
    return Multivector(n, terms)


def ad_differential(b: Multivector) -> SkewMatrix:
    """Matrix of x -> b x - x b on grade-1 elements (inverse of lie_lift)."""
    n = b.n
    cols = []
    for j in range(n):
        ej = Multivector.basis_vector(n, j)
        image = b * ej - ej * b
        if image.grades() not in ({1}, set()):
            raise ValueError("commutator does not preserve grade 1")
        cols.append(image.vector_components())
    return SkewMatrix(la.transpose(la.mat(cols)))


def rational_unit_tuple(n: int, rng: random.Random) -> tuple[Fraction, ...]:
    """Deterministic-in-rng unit vector with rational coordinates.

    Reflects a coordinate vector across a random integer hyperplane, which
    parametrizes rational points of the sphere without any square roots.
    """
    while True:
        w = [Fraction(rng.randint(-9, 9)) for _ in range(n)]
        if any(w):
            break
    axis = rng.randrange(n)
    e = [Fraction(1 if i == axis else 0) for i in range(n)]
    return tuple(_unnormalized_reflection(tuple(w), e))


def rational_unit_vector(n: int, rng: random.Random) -> Multivector:
    """Grade-1 multivector wrapper around :func:`rational_unit_tuple`."""
    return Multivector.vector(n, rational_unit_tuple(n, rng))


def random_spin(n: int, k: int, seed: int) -> SpinElement:
    """Product of 2k seeded pseudo-random rational unit vectors."""
    if k < 1:
        raise ValueError("k must be >= 1")
    rng = random.Random(seed)
    return SpinElement.from_unit_vectors([rational_unit_vector(n, rng) for _ in range(2 * k)])
