"""Finite relative CW pairs and their cellular cochain algebra.

A :class:`CWPairComplex` stores per-dimension cell counts, integer
incidence matrices, and flags marking a closed subcomplex Y.  Cochains
carry values on *all* cells of their degree; a cochain is relative when it
vanishes on Y, and since Y is closed the coboundary of a relative cochain
is again relative.  Keeping the absolute values around is what lets the
difference-cochain decomposition subtract the two end restrictions on the
cylinder before reading off the interval component.

Sign conventions, fixed once and checked by the tests:

* cylinder boundary: d(s x I) = (ds) x I + (-1)^dim(s) (s x 1 - s x 0);
* cross products with the interval generators carry no extra sign, which
  on the interval itself gives the generator relations
  ``coboundary(zero_bar) = -i_bar`` and ``coboundary(one_bar) = i_bar``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ComplexValidationError, DimensionMismatchError, ResidueError
from .snf import AbelianGroup, smith_diagonal

# base pairs live in dimensions 0..8; their cylinders reach dimension 9
MAX_DIMENSION = 10


@dataclass(frozen=True)
class CoefficientGroup:
    """Z (modulus 0) or the cyclic group Z/m."""

    modulus: int

    def __post_init__(self):
        if self.modulus < 0:
            raise ValueError("modulus must be >= 0 (0 meaning Z)")

    def reduce(self, x: int) -> int:
        return x % self.modulus if self.modulus else x

    def __str__(self) -> str:
        return "Z" if self.modulus == 0 else f"Z/{self.modulus}"


Z_COEFF = CoefficientGroup(0)
Z2_COEFF = CoefficientGroup(2)

# Degree-7 and degree-8 homotopy groups of the 7-sphere: the coefficient
# groups in which the primary and secondary comparison data live.
PI7_S7 = Z_COEFF
PI8_S7 = Z2_COEFF


class CWPairComplex:
    """Finite CW pair (X, Y) as integer boundary matrices plus Y-flags.

    ``cells[k]`` counts the k-cells; ``boundary[k]`` is the cells[k-1] x
    cells[k] incidence matrix of d_k; ``sub[k][i]`` marks cell i of
    dimension k as belonging to the subcomplex Y.
    """

    def __init__(
        self,
        cells: list[int],
        boundary: dict[int, list[list[int]]] | None = None,
        sub: dict[int, list[int]] | None = None,
        name: str = "",
    ):
        if len(cells) > MAX_DIMENSION or any(c < 0 for c in cells):
            raise ComplexValidationError("cell counts must be nonnegative, dimensions 0..9")
        self.cells = list(map(int, cells))
        self.dim = len(self.cells) - 1
        self.name = name
        self.boundary: dict[int, list[list[int]]] = {}
        boundary = boundary or {}
        for k in range(1, self.dim + 1):
            rows, cols = self.cells[k - 1], self.cells[k]
            matrix = boundary.get(k)
            if matrix is None:
                matrix = [[0] * cols for _ in range(rows)]
            if len(matrix) != rows or any(len(r) != cols for r in matrix):
                raise ComplexValidationError(
                    f"boundary matrix in degree {k} must be {rows}x{cols}"
                )
            self.boundary[k] = [[int(x) for x in r] for r in matrix]
        sub = sub or {}
        self.sub: dict[int, list[bool]] = {}
        for k in range(0, self.dim + 1):
            flags = sub.get(k, [0] * self.cells[k])
            if len(flags) != self.cells[k]:
                raise ComplexValidationError(f"sub flags in degree {k} have wrong length")
            self.sub[k] = [bool(x) for x in flags]
        self._validate()

    def _validate(self) -> None:
        for k in range(1, self.dim):
            a, b = self.boundary.get(k), self.boundary.get(k + 1)
            if not a or not b or not a[0]:
                continue
            for i in range(len(a)):
                for j in range(len(b[0])):
                    if sum(a[i][t] * b[t][j] for t in range(len(b))):
                        raise ComplexValidationError(f"dd != 0 between degrees {k + 1} and {k}")
        for k in range(1, self.dim + 1):
            for j in range(self.cells[k]):
                if not self.sub[k][j]:
                    continue
                for i in range(self.cells[k - 1]):
                    if self.boundary[k][i][j] and not self.sub[k - 1][i]:
                        raise ComplexValidationError(
                            "subcomplex is not closed under the boundary"
                        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CWPairComplex)
            and self.cells == other.cells
            and self.boundary == other.boundary
            and self.sub == other.sub
        )

    def __hash__(self):
        return hash((tuple(self.cells),))

    def cell_count(self, k: int) -> int:
        return self.cells[k] if 0 <= k <= self.dim else 0

    def relative_indices(self, k: int) -> list[int]:
        if not 0 <= k <= self.dim:
            return []
        return [i for i in range(self.cells[k]) if not self.sub[k][i]]

    def total_cells(self) -> int:
        return sum(self.cells)

    def relative_coboundary_matrix(self, k: int) -> list[list[int]]:
        """delta: C^k(X,Y) -> C^(k+1)(X,Y), the restricted transpose of d_(k+1)."""
        rows = self.relative_indices(k + 1)
        cols = self.relative_indices(k)
        if k + 1 > self.dim:
            return [[] for _ in rows] if rows else []
        b = self.boundary[k + 1]
        return [[b[c][r] for c in cols] for r in rows]


@dataclass(frozen=True)
class Cochain:
    """Cellular k-cochain with Z or Z/m coefficients.

    Values are indexed by all k-cells of the complex; relative cochains
    are exactly those vanishing on the subcomplex.
    """

    complex: CWPairComplex
    degree: int
    coefficients: CoefficientGroup
    values: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.degree <= self.complex.dim:
            raise DimensionMismatchError(
                f"degree {self.degree} out of range for a {self.complex.dim}-complex"
            )
        expected = self.complex.cell_count(self.degree)
        if len(self.values) != expected:
            raise DimensionMismatchError(
                f"expected {expected} values in degree {self.degree}, got {len(self.values)}"
            )
        object.__setattr__(
            self, "values", tuple(self.coefficients.reduce(int(v)) for v in self.values)
        )

    @classmethod
    def zero(cls, complex: CWPairComplex, degree: int, coefficients: CoefficientGroup) -> "Cochain":
        return cls(complex, degree, coefficients, (0,) * complex.cell_count(degree))

    def _compatible(self, other: "Cochain") -> None:
        if (
            self.complex != other.complex
            or self.degree != other.degree
            or self.coefficients != other.coefficients
        ):
            raise DimensionMismatchError("cochains live on different complexes/degrees/coefficients")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._compatible(other)
        return Cochain(
            self.complex,
            self.degree,
            self.coefficients,
            tuple(a + b for a, b in zip(self.values, other.values)),
        )

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._compatible(other)
        return Cochain(
            self.complex,
            self.degree,
            self.coefficients,
            tuple(a - b for a, b in zip(self.values, other.values)),
        )

    def __neg__(self) -> "Cochain":
        return Cochain(
            self.complex, self.degree, self.coefficients, tuple(-v for v in self.values)
        )

    def is_zero(self) -> bool:
        return not any(self.values)

    def is_relative(self) -> bool:
        flags = self.complex.sub[self.degree]
        return all(v == 0 for v, f in zip(self.values, flags) if f)


def coboundary(c: Cochain) -> Cochain:
    """delta c, the transpose-of-boundary action with reduced coefficients."""
    cx = c.complex
    k = c.degree
    if k + 1 > cx.dim:
        raise DimensionMismatchError("coboundary would exceed the complex dimension")
    b = cx.boundary[k + 1]
    out = [
        sum(b[i][j] * c.values[i] for i in range(cx.cells[k])) for j in range(cx.cells[k + 1])
    ]
    return Cochain(cx, k + 1, c.coefficients, tuple(out))


def relative_cohomology(cx: CWPairComplex, k: int, coefficients: CoefficientGroup) -> AbelianGroup:
    """H^k(X, Y; G) via Smith normal form over Z.

    For G = Z/m the integral answer is converted with the coefficient
    decomposition H^k(;Z/m) = H^k(;Z) (x) Z/m  +  Tor(H^(k+1)(;Z), Z/m).
    """
    if coefficients.modulus == 0:
        return _integral_cohomology(cx, k)
    m = coefficients.modulus
    here = _integral_cohomology(cx, k)
    above = _integral_cohomology(cx, k + 1)
    return here.tensor_with_cyclic(m).direct_sum(above.torsion_product_with_cyclic(m))


def _integral_cohomology(cx: CWPairComplex, k: int) -> AbelianGroup:
    if k < 0 or k > cx.dim:
        return AbelianGroup(0)
    n_k = len(cx.relative_indices(k))
    up = smith_diagonal(cx.relative_coboundary_matrix(k)) if k < cx.dim else []
    down = smith_diagonal(cx.relative_coboundary_matrix(k - 1)) if k > 0 else []
    free = n_k - len(up) - len(down)
    return AbelianGroup.from_orders([0] * free + [d for d in down if d > 1])


def product_with_interval(cx: CWPairComplex) -> CWPairComplex:
    """The cylinder X x I with subcomplex (Y x I) u (X x dI).

    k-cells are ordered [s x 0 | s x 1 | t x I-bar] with s running over the
    k-cells and t over the (k-1)-cells of X.
    """
    dim = cx.dim + 1
    cells = [0] * (dim + 1)
    for k in range(dim + 1):
        cells[k] = 2 * cx.cell_count(k) + cx.cell_count(k - 1)
    boundary: dict[int, list[list[int]]] = {}
    sub: dict[int, list[int]] = {}
    for k in range(dim + 1):
        flags = (
            [1] * cx.cell_count(k)
            + [1] * cx.cell_count(k)
            + [1 if cx.sub[k - 1][t] else 0 for t in range(cx.cell_count(k - 1))]
        )
        sub[k] = flags
    for k in range(1, dim + 1):
        nk0 = cx.cell_count(k)
        nk1 = cx.cell_count(k - 1)
        nk2 = cx.cell_count(k - 2)
        rows = 2 * nk1 + nk2
        cols = 2 * nk0 + nk1
        m = [[0] * cols for _ in range(rows)]
        bk = cx.boundary.get(k)
        bk1 = cx.boundary.get(k - 1)
        sign = -1 if (k - 1) & 1 else 1
        for j in range(nk0):  # columns s x 0 and s x 1
            if bk:
                for i in range(nk1):
                    m[i][j] = bk[i][j]
                    m[nk1 + i][nk0 + j] = bk[i][j]
        for t in range(nk1):  # columns t x I-bar, dim t = k - 1
            col = 2 * nk0 + t
            m[t][col] = -sign
            m[nk1 + t][col] = sign
            if bk1:
                for i in range(nk2):
                    m[2 * nk1 + i][col] = bk1[i][t]
        boundary[k] = m
    return CWPairComplex(cells, boundary, sub, name=f"{cx.name} x I" if cx.name else "cylinder")


def interval_complex() -> CWPairComplex:
    """The unit interval: two 0-cells (endpoints 0, 1) and one 1-cell."""
    return CWPairComplex([2, 1], {1: [[-1], [1]]}, name="interval")


@dataclass(frozen=True)
class IntervalCochainBasis:
    """The generators 0-bar, 1-bar (degree 0) and I-bar (degree 1)."""

    complex: CWPairComplex
    zero_bar: Cochain
    one_bar: Cochain
    i_bar: Cochain

    @classmethod
    def standard(cls, coefficients: CoefficientGroup = Z_COEFF) -> "IntervalCochainBasis":
        cx = interval_complex()
        return cls(
            complex=cx,
            zero_bar=Cochain(cx, 0, coefficients, (1, 0)),
            one_bar=Cochain(cx, 0, coefficients, (0, 1)),
            i_bar=Cochain(cx, 1, coefficients, (1,)),
        )


_GENERATOR_DEGREES = {"0": 0, "1": 0, "I": 1}


def cross_with_interval(c: Cochain, gen: str, product: CWPairComplex | None = None) -> Cochain:
    """Cross product of a cochain on X with one interval generator.

    ``gen`` is "0", "1" (degree 0) or "I" (degree 1); the result lives on
    the cylinder, supported on the matching block of cells.
    """
    if gen not in _GENERATOR_DEGREES:
        raise ValueError("interval generator must be one of '0', '1', 'I'")
    cx = c.complex
    prod = product if product is not None else product_with_interval(cx)
    out_deg = c.degree + _GENERATOR_DEGREES[gen]
    values = [0] * prod.cell_count(out_deg)
    n = cx.cell_count(out_deg)
    if gen == "0":
        for i, v in enumerate(c.values):
            values[i] = v
    elif gen == "1":
        for i, v in enumerate(c.values):
            values[n + i] = v
    else:
        for i, v in enumerate(c.values):
            values[2 * n + i] = v
    return Cochain(prod, out_deg, c.coefficients, tuple(values))


def difference_cochain(o_hat: Cochain, o0: Cochain, o1: Cochain) -> Cochain:
    """Solve  d x I-bar = o_hat - o0 x 0-bar - o1 x 1-bar  for d.

    ``o_hat`` lives on the cylinder over the complex of ``o0``/``o1``;
    subtracting the two end restrictions must leave a cochain supported on
    the relative interval block, otherwise the inputs were inconsistent
    and a ResidueError is raised.
    """
    if o0.complex != o1.complex or o0.degree != o1.degree or o0.coefficients != o1.coefficients:
        raise DimensionMismatchError("end cochains must match in complex, degree and coefficients")
    base = o0.complex
    prod = product_with_interval(base)
    if o_hat.complex != prod or o_hat.coefficients != o0.coefficients:
        raise DimensionMismatchError("o_hat must live on the cylinder over the base complex")
    if o_hat.degree != o0.degree:
        raise DimensionMismatchError("o_hat must have the same degree as the end cochains")
    if not (o0.is_relative() and o1.is_relative()):
        raise ResidueError("end cochains must be relative on (X, Y)")
    m = o_hat.degree
    residue = o_hat - cross_with_interval(o0, "0", prod) - cross_with_interval(o1, "1", prod)
    n = base.cell_count(m)
    if any(residue.values[: 2 * n]):
        raise ResidueError("inputs leave a residue on the end blocks of the cylinder")
    interval_values = residue.values[2 * n :]
    sub_flags = base.sub[m - 1]
    if any(v for v, f in zip(interval_values, sub_flags) if f):
        raise ResidueError("inputs leave a residue over the subcomplex")
    return Cochain(base, m - 1, o0.coefficients, interval_values)
