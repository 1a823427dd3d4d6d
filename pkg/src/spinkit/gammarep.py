"""The irreducible real Cl(0,8) module and the two Spin(7) embeddings.

The concrete model is octonion left multiplication on O + O:

    c(v)(x, y) = (v * y, -conj(v) * x),

with octonion products read off a fixed Fano-plane table.  All eight gamma
matrices are signed permutation matrices, so every monomial c(e_S) is one
too and the whole module stays in exact integer arithmetic.

The splitting S8 = S8+ + S8- is the eigenspace decomposition of c(omega8),
omega8 = e0 e1 ... e7.  Conjugation (Ad) and the chiral restriction of c
give the two non-conjugate copies of Spin(7) in Spin(8): ``iota_vector``
is the blade-wise inclusion that stabilizes the vector e0, ``iota_plus``
the lift of the 8-dimensional spin representation that stabilizes a
positive unit spinor.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import exactlinalg as la
from .errors import (
    ChiralityError,
    DimensionMismatchError,
    EmbeddingDomainError,
    InternalCheckError,
)
from .multivector import Multivector, blade_grade, p_iso, volume_element
from .spingroup import (
    RotationMatrix,
    SpinElement,
    lie_lift,
    lift_rotation,
    rational_unit_tuple,
)

Matrix = la.Matrix
Vector = la.Vector

# Fano-plane triples (a, b, c): cyclically e_a e_b = e_c.  The (i, i+1, i+3)
# mod 7 orientation is one of the standard alternative-algebra conventions.
_FANO_LINES = ((1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (5, 6, 1), (6, 7, 2), (7, 1, 3))


def octonion_basis_product(i: int, j: int) -> tuple[int, int]:
    """(k, sign) with e_i e_j = sign * e_k for the octonion units e_0 .. e_7."""
    if i == 0:
        return j, 1
    if j == 0:
        return i, 1
    if i == j:
        return 0, -1
    for line in _FANO_LINES:
        if i in line and j in line:
            a, b = line.index(i), line.index(j)
            k = line[3 - a - b]
            return k, 1 if (b - a) % 3 == 1 else -1
    raise AssertionError("unreachable: Fano lines cover all index pairs")


# A signed permutation matrix is stored column-wise:
# M e_j = sign[j] * e_perm[j].
_SignedPerm = tuple[tuple[int, ...], tuple[int, ...]]


def _sp_compose(a: _SignedPerm, b: _SignedPerm) -> _SignedPerm:
    """Matrix product a @ b (apply b first)."""
    pa, sa = a
    pb, sb = b
    return tuple(pa[pb[j]] for j in range(len(pb))), tuple(sb[j] * sa[pb[j]] for j in range(len(pb)))


def _sp_identity(n: int) -> _SignedPerm:
    return tuple(range(n)), (1,) * n


def _sp_to_matrix(sp: _SignedPerm) -> Matrix:
    perm, sign = sp
    n = len(perm)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        rows[perm[j]][j] = Fraction(sign[j])
    return tuple(tuple(r) for r in rows)


def _left_mult_sp(i: int) -> _SignedPerm:
    """Column description of octonion left multiplication by e_i."""
    perm, sign = [], []
    for j in range(8):
        k, s = octonion_basis_product(i, j)
        perm.append(k)
        sign.append(s)
    return tuple(perm), tuple(sign)


def _build_gamma_sp() -> list[_SignedPerm]:
    """The eight 16x16 generators in column form, acting on (x, y) in O + O."""
    gammas = []
    # c(e0)(x, y) = (y, -x)
    perm = [j + 8 for j in range(8)] + list(range(8))
    sign = [-1] * 8 + [1] * 8
    gammas.append((tuple(perm), tuple(sign)))
    for i in range(1, 8):
        lp, ls = _left_mult_sp(i)
        perm = [lp[j] + 8 for j in range(8)] + [lp[j] for j in range(8)]
        sign = list(ls) + list(ls)
        gammas.append((tuple(perm), tuple(sign)))
    return gammas


@dataclass(frozen=True)
class Spinor:
    """Element of the 16-dimensional module or of one chiral half."""

    components: Vector
    chirality: str  # "+", "-", or "full"

    def __post_init__(self):
        object.__setattr__(self, "components", la.vec(self.components))
        if self.chirality not in ("+", "-", "full"):
            raise ValueError("chirality must be '+', '-' or 'full'")
        want = 16 if self.chirality == "full" else 8
        if len(self.components) != want:
            raise DimensionMismatchError(
                f"{self.chirality} spinor needs {want} components, got {len(self.components)}"
            )

    def is_zero(self) -> bool:
        return not any(self.components)

    def norm_squared(self) -> Fraction:
        return la.dot(self.components, self.components)


class GammaRep:
    """The action of Cl(0,8) on R^16 with its chiral splitting."""

    def __init__(self) -> None:
        self._gamma_sp = _build_gamma_sp()
        self._self_check_generators()
        self._mono_sp: dict[int, _SignedPerm] = {0: _sp_identity(16)}
        for mask in range(1, 256):
            low = mask & -mask
            i = low.bit_length() - 1
            self._mono_sp[mask] = _sp_compose(self._gamma_sp[i], self._mono_sp[mask ^ low])
        self.gamma = tuple(_sp_to_matrix(sp) for sp in self._gamma_sp)
        self.basis_plus, self.basis_minus = self._split_eigenspaces()
        self._orient_positive_half()
        self._psi: Spinor | None = None

    # -- construction-time consistency checks -------------------------------

    def _self_check_generators(self) -> None:
        for i in range(8):
            mi = _sp_to_matrix(self._gamma_sp[i])
            for j in range(8):
                mj = _sp_to_matrix(self._gamma_sp[j])
                anti = la.mat_add(la.mat_mul(mi, mj), la.mat_mul(mj, mi))
                want = la.mat_scale(la.identity(16), -2 if i == j else 0)
                if anti != want:
                    raise InternalCheckError(f"generator anticommutator failed at ({i},{j})")

    def _split_eigenspaces(self) -> tuple[Matrix, Matrix]:
        omega = self.monomial_matrix(255)
        ident = la.identity(16)
        plus = la.kernel_basis(la.mat_sub(omega, ident))
        minus = la.kernel_basis(la.mat_add(omega, ident))
        if len(plus) != 8 or len(minus) != 8:
            raise InternalCheckError("volume element eigenspaces are not 8+8 dimensional")
        for basis in (plus, minus):
            gram = tuple(tuple(la.dot(u, v) for v in basis) for u in basis)
            if gram != la.identity(8):
                raise InternalCheckError("eigenbasis is not orthonormal")
        # columns of the returned matrices are the basis spinors
        return la.transpose(la.mat(plus)), la.transpose(la.mat(minus))

    def _orient_positive_half(self) -> None:
        """Fix the orientation of S8+ so the spin-representation lift sends -1
        to +omega8.

        -1 = (e1 e2)^2 in the even Cl(0,7) copy, and the square of either
        preimage of a rotation is sign-unambiguous, so the test below does
        not depend on lift_rotation's sign canonicalization.  If the lift
        lands on -omega8 the orientation of the constructed eigenbasis is
        reversed by negating its first vector.
        """
        bivector = Multivector.blade(8, [1, 2])
        half_turn = chiral_action_matrix(self, bivector, "+")
        eta = lift_rotation(RotationMatrix(half_turn))
        square = (eta * eta).value
        if square == -volume_element(8):
            flipped = tuple(
                tuple(-x if j == 0 else x for j, x in enumerate(row)) for row in self.basis_plus
            )
            self.basis_plus = flipped
        elif square != volume_element(8):
            raise InternalCheckError("orientation probe did not land on +-omega8")

    # -- basic module structure ---------------------------------------------

    def monomial_matrix(self, mask: int) -> Matrix:
        return _sp_to_matrix(self._mono_sp[mask])

    def monomial_row(self, mask: int) -> list[int]:
        """The monomial matrix flattened row-major to 256 integers."""
        perm, sign = self._mono_sp[mask]
        row = [0] * 256
        for j in range(16):
            row[perm[j] * 16 + j] = sign[j]
        return row

    def fixed_spinor(self) -> Spinor:
        """The positive spinor line fixed by the spinor-type Spin(7) copy."""
        if self._psi is None:
            basis = common_fixed_space(self, spin7_lie_basis())
            if len(basis) != 1:
                raise InternalCheckError("fixed space of the spin(7) action is not a line")
            self._psi = Spinor(basis[0], "+")
        return self._psi


def build_cl8_rep() -> GammaRep:
    """Construct the representation and run its construction self-checks."""
    return GammaRep()


def clifford_action(rep: GammaRep, a: Multivector) -> Matrix:
    """The 16x16 matrix of Clifford multiplication by a multivector."""
    if a.n != 8:
        raise DimensionMismatchError("clifford_action needs an element of Cl(0,8)")
    total = [[Fraction(0)] * 16 for _ in range(16)]
    for mask, coeff in a.terms.items():
        perm, sign = rep._mono_sp[mask]
        for j in range(16):
            total[perm[j]][j] += coeff * sign[j]
    return tuple(tuple(row) for row in total)


def _chiral_basis(rep: GammaRep, chirality: str) -> Matrix:
    if chirality == "+":
        return rep.basis_plus
    if chirality == "-":
        return rep.basis_minus
    raise ValueError("chirality must be '+' or '-'")


def chiral_action_matrix(rep: GammaRep, a: Multivector, chirality: str = "+") -> Matrix:
    """Matrix of c(a) restricted to one chiral half, in eigenbasis coordinates.

    Raises ChiralityError when c(a) does not preserve the subspace (odd
    elements exchange the halves).
    """
    basis = _chiral_basis(rep, chirality)
    m16 = clifford_action(rep, a)
    image = la.mat_mul(m16, basis)
    compressed = la.mat_mul(la.transpose(basis), image)
    if la.mat_mul(basis, compressed) != image:
        raise ChiralityError("element does not preserve the chiral subspace")
    return compressed


def delta8(rep: GammaRep, zeta: SpinElement, chirality: str = "+") -> Matrix:
    """Chiral spin representation of Spin(8): c(zeta) on one eigenspace."""
    if zeta.n != 8:
        raise DimensionMismatchError("delta8 needs a Spin(8) element")
    if any(blade_grade(m) & 1 for m in zeta.value.terms):
        raise ChiralityError("odd element cannot act chirally")
    return chiral_action_matrix(rep, zeta.value, chirality)


_EMBEDDED_MASK = 0b11111110  # generators 1..7 of Cl(0,8)


def embed_spin7(a: Multivector) -> Multivector:
    """Even elements of Cl(0,7) inside Cl(0,8), using generators 1..7."""
    if a.n == 7:
        if any(blade_grade(m) & 1 for m in a.terms):
            raise EmbeddingDomainError("only even elements embed blade-wise")
        return p_iso(a)
    if a.n == 8:
        if any(mask & ~_EMBEDDED_MASK for mask in a.terms) or any(
            blade_grade(m) & 1 for m in a.terms
        ):
            raise EmbeddingDomainError("element is not in the embedded even Cl(0,7)")
        return a
    raise EmbeddingDomainError("expected an element of Cl(0,7) or embedded Cl(0,8)")


def delta7(rep: GammaRep, zeta: SpinElement) -> Matrix:
    """Spin representation of Spin(7) on S8+ (does not descend to SO(7))."""
    embedded = embed_spin7(zeta.value)
    return chiral_action_matrix(rep, embedded, "+")


def iota_vector(zeta: SpinElement) -> SpinElement:
    """Blade-wise inclusion Spin(7) -> Spin(8); its rotations fix e0."""
    return SpinElement(embed_spin7(zeta.value), check=False)


def iota_plus(rep: GammaRep, zeta: SpinElement) -> SpinElement:
    """The lift of delta7 through the conjugation cover of SO(8).

    Among the two preimages of the rotation delta7(zeta) the one acting
    trivially on the fixed spinor psi is returned; this choice makes the
    map a homomorphism and sends -1 to the volume element omega8.
    """
    rotation = RotationMatrix(delta7(rep, zeta))
    eta = lift_rotation(rotation)
    psi = rep.fixed_spinor().components
    image = la.mat_vec(delta8(rep, eta, "+"), psi)
    if image == psi:
        return eta
    if image == tuple(-x for x in psi):
        return -eta
    raise InternalCheckError("candidate lift moves the fixed spinor line")


def spin7_lie_basis() -> list[Multivector]:
    """The 21 bivectors e_i e_j of so(7), in the algebra's own labels."""
    return [Multivector.blade(7, [i, j]) for i, j in combinations(range(7), 2)]


def embedded_spin7_lie_basis() -> list[Multivector]:
    """The same basis pushed into Cl(0,8) (indices shifted to 1..7)."""
    return [Multivector.blade(8, [i, j]) for i, j in combinations(range(1, 8), 2)]


def spin8_lie_basis() -> list[Multivector]:
    """All 28 bivectors e_i e_j of so(8)."""
    return [Multivector.blade(8, [i, j]) for i, j in combinations(range(8), 2)]


_BIVECTOR_MASKS = [(1 << i) | (1 << j) for i, j in combinations(range(8), 2)]


def bivector_coordinates(a: Multivector) -> Vector:
    """Coordinates of a Cl(0,8) bivector in the fixed e_i e_j basis."""
    if a.n != 8 or a.grades() not in ({2}, set()):
        raise ValueError("expected a bivector in Cl(0,8)")
    return tuple(a.terms.get(mask, Fraction(0)) for mask in _BIVECTOR_MASKS)


def d_delta7(rep: GammaRep, x: Multivector) -> Matrix:
    """Differential of delta7: the skew 8x8 chiral action of a so(7) element."""
    return chiral_action_matrix(rep, embed_spin7(x), "+")


def d_iota_plus(rep: GammaRep, x: Multivector) -> Multivector:
    """Differential of iota_plus: the so(8) bivector with d(Ad) image d_delta7(x)."""
    from .spingroup import SkewMatrix

    return lie_lift(SkewMatrix(d_delta7(rep, x)))


def _normalize_line(v: Vector) -> Vector:
    """Scale a rational vector to primitive integers with positive lead."""
    from math import gcd, lcm

    den = lcm(*(c.denominator for c in v)) if any(v) else 1
    ints = [int(c * den) for c in v]
    g = gcd(*ints) if any(ints) else 1
    ints = [x // g for x in ints]
    lead = next((x for x in ints if x), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return la.vec(ints)


def common_fixed_space(rep: GammaRep, generators: list[Multivector]) -> list[Vector]:
    """Joint kernel in S8+ of the spinor-embedding images of so(7) elements.

    Each generator x is mapped to d_iota_plus(x) and acts chirally; the
    exact intersection of the kernels is returned as a list of basis
    vectors (primitive-integer normalized).  An empty generator list
    imposes no condition and yields the full 8-dimensional space.
    """
    stacked: list[Vector] = []
    for x in generators:
        action = chiral_action_matrix(rep, d_iota_plus(rep, x), "+")
        stacked.extend(action)
    if not stacked:
        return [tuple(row) for row in la.identity(8)]
    return [_normalize_line(v) for v in la.kernel_basis(tuple(stacked))]


def stabilizer_dimension(
    rep: GammaRep, psi: Spinor, algebra: list[Multivector] | None = None
) -> int:
    """Dimension of the annihilator of psi inside a Lie subalgebra of so(8).

    ``algebra`` is a linearly independent list of bivectors acting through
    the chiral representation; the default is the full 28-dimensional
    bivector basis.
    """
    if psi.chirality != "+":
        raise ChiralityError("stabilizer is computed for positive-chirality spinors")
    if psi.is_zero():
        raise ValueError("stabilizer of the zero spinor is not defined")
    basis = algebra if algebra is not None else spin8_lie_basis()
    coords = la.mat([bivector_coordinates(x) for x in basis])
    if la.rank(coords) != len(basis):
        raise ValueError("algebra basis must be linearly independent")
    images = la.mat(
        [la.mat_vec(chiral_action_matrix(rep, x, "+"), psi.components) for x in basis]
    )
    return len(basis) - la.rank(images)


def g2_intersection_dimension(rep: GammaRep) -> int:
    """Dimension of the intersection of the two so(7) copies inside so(8)."""
    vector_side = la.mat([bivector_coordinates(x) for x in embedded_spin7_lie_basis()])
    spinor_side = la.mat(
        [bivector_coordinates(d_iota_plus(rep, x)) for x in spin7_lie_basis()]
    )
    if la.rank(vector_side) != 21 or la.rank(spinor_side) != 21:
        raise InternalCheckError("embedded so(7) copies should be 21-dimensional")
    return la.intersection_dimension(vector_side, spinor_side)


def g2_intersection_basis(rep: GammaRep) -> list[Multivector]:
    """A basis of the intersection subalgebra, as Cl(0,8) bivectors."""
    vector_side = la.mat([bivector_coordinates(x) for x in embedded_spin7_lie_basis()])
    spinor_side = la.mat(
        [bivector_coordinates(d_iota_plus(rep, x)) for x in spin7_lie_basis()]
    )
    out = []
    for coords in la.intersection_basis(vector_side, spinor_side):
        terms = {mask: c for mask, c in zip(_BIVECTOR_MASKS, coords) if c}
        out.append(Multivector(8, terms))
    return out


@dataclass(frozen=True)
class TransitivityReport:
    """Outcome of sampling stabilizers of the so(7) action on unit spinors."""

    samples: int
    stabilizer_dimension: int
    orbit_rank: int
    consistent: bool


def spin7_sphere_transitivity(rep: GammaRep, samples: int = 10, seed: int = 0) -> TransitivityReport:
    """Stabilizer/orbit dimensions of the chiral so(7) action at random unit spinors.

    For every sampled rational unit spinor the annihilator inside the
    embedded so(7) should have dimension 14 (the exceptional subalgebra)
    and the orbit rank 21 - 14 = 7, the dimension of the 7-sphere.
    """
    rng = random.Random(seed)
    algebra = embedded_spin7_lie_basis()
    dims = set()
    for _ in range(samples):
        phi = Spinor(rational_unit_tuple(8, rng), "+")
        dims.add(stabilizer_dimension(rep, phi, algebra))
    dim = dims.pop() if len(dims) == 1 else -1
    consistent = dim == 14
    return TransitivityReport(
        samples=samples,
        stabilizer_dimension=dim if dim >= 0 else max(dims | {dim}),
        orbit_rank=21 - dim if dim >= 0 else -1,
        consistent=consistent,
    )


def monomial_span_rank(rep: GammaRep, prime: int = 46337) -> int:
    """Rank over Z/p of the 256 flattened monomial matrices.

    Full rank mod p certifies full rank over Q (reduction can only lower
    the rank), so a return value of 256 is an exact witness that the
    monomials span the whole 256-dimensional matrix space.
    """
    rows = [rep.monomial_row(mask) for mask in range(256)]
    return la.rank_mod_p(rows, prime)


def omega8_element() -> SpinElement:
    """The oriented volume element as a point of Spin(8)."""
    return SpinElement(volume_element(8), check=False)


# re-export for callers that want the matrices directly
__all__ = [
    "GammaRep",
    "Spinor",
    "TransitivityReport",
    "build_cl8_rep",
    "clifford_action",
    "chiral_action_matrix",
    "delta8",
    "delta7",
    "embed_spin7",
    "iota_plus",
    "iota_vector",
    "common_fixed_space",
    "stabilizer_dimension",
    "g2_intersection_dimension",
    "g2_intersection_basis",
    "spin7_sphere_transitivity",
    "spin7_lie_basis",
    "embedded_spin7_lie_basis",
    "spin8_lie_basis",
    "bivector_coordinates",
    "d_delta7",
    "d_iota_plus",
    "monomial_span_rank",
    "omega8_element",
    "octonion_basis_product",
]
