"""Machine-checked verification suites behind the `verify` subcommand.

Every check is exact: equality of rational matrices, multivectors, or
integer ranks.  Randomized checks draw from a seeded generator, so a run
is fully determined by (scope, seed).  Each check returns a short
mathematical name plus PASS/FAIL and a one-line detail on failure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import exactlinalg as la
from .gammarep import (
    GammaRep,
    Spinor,
    build_cl8_rep,
    chiral_action_matrix,
    clifford_action,
    common_fixed_space,
    d_delta7,
    d_iota_plus,
    delta7,
    delta8,
    embedded_spin7_lie_basis,
    g2_intersection_basis,
    g2_intersection_dimension,
    iota_plus,
    iota_vector,
    monomial_span_rank,
    omega8_element,
    spin7_lie_basis,
    stabilizer_dimension,
)
from .multivector import (
    Multivector,
    blade_grade,
    chiral_projectors,
    p_iso,
    volume_element,
)
from .spingroup import (
    SpinElement,
    ad_differential,
    adjoint_action,
    lie_lift,
    lift_rotation,
    random_spin,
    rational_unit_tuple,
    rational_unit_vector,
    reflect,
    SkewMatrix,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _run(name: str, fn: Callable[[], str | None]) -> CheckResult:
    try:
        detail = fn()
    except Exception as exc:  # a crash is a failed check, not a crashed report
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")
    return CheckResult(name, detail is None, detail or "")


def _random_multivector(n: int, rng: random.Random, blades: int = 4) -> Multivector:
    terms = {}
    for _ in range(blades):
        terms[rng.randrange(1 << n)] = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    return Multivector(n, terms)


# ---------------------------------------------------------------------------
# clifford scope

def clifford_suite(seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    results = []

    def generator_relations() -> str | None:
        for n in range(1, 9):
            for i in range(n):
                for j in range(n):
                    a = Multivector.basis_vector(n, i)
                    b = Multivector.basis_vector(n, j)
                    want = Multivector.scalar(n, -2 if i == j else 0)
                    if a * b + b * a != want:
                        return f"failed at n={n}, pair ({i},{j})"
        return None

    results.append(_run("generator relations e_i e_j + e_j e_i = -2 delta_ij, n = 1..8", generator_relations))

    def associativity() -> str | None:
        for _ in range(40):
            n = rng.randint(2, 8)
            a, b, c = (_random_multivector(n, rng) for _ in range(3))
            if (a * b) * c != a * (b * c):
                return f"failed in Cl(0,{n})"
        return None

    results.append(_run("geometric product associativity (40 random triples)", associativity))

    def involution() -> str | None:
        for _ in range(30):
            n = rng.randint(2, 8)
            a, b = (_random_multivector(n, rng) for _ in range(2))
            if (a * b).grade_involution() != a.grade_involution() * b.grade_involution():
                return "grade involution is not multiplicative"
            if (a * b).reverse() != b.reverse() * a.reverse():
                return "reversal is not anti-multiplicative"
        return None

    results.append(_run("grade involution / reversal (anti)automorphism laws", involution))

    def embedding() -> str | None:
        for _ in range(30):
            n = rng.randint(1, 7)
            a, b = (_random_multivector(n, rng) for _ in range(2))
            image = p_iso(a * b)
            if image != p_iso(a) * p_iso(b):
                return "even-part embedding is not multiplicative"
            if any(blade_grade(m) & 1 for m in image.terms):
                return "image contains odd blades"
        return None

    results.append(_run("even-part embedding is an algebra map with even image", embedding))

    def volumes() -> str | None:
        w7, w8 = volume_element(7), volume_element(8)
        if w7 * w7 != Multivector.scalar(7, 1) or w8 * w8 != Multivector.scalar(8, 1):
            return "volume element square is not 1"
        for i in range(7):
            e = Multivector.basis_vector(7, i)
            if w7 * e != e * w7:
                return "omega7 is not central"
        for mask in range(256):
            blade = Multivector(8, {mask: 1})
            sign = -1 if blade_grade(mask) & 1 else 1
            if w8 * blade != blade * w8 * sign:
                return f"omega8 parity rule fails on blade {mask:#x}"
        return None

    results.append(_run("volume elements: squares, centrality, parity commutation", volumes))

    def projectors() -> str | None:
        plus, minus = chiral_projectors()
        one = Multivector.scalar(7, 1)
        zero = Multivector(7, {})
        if plus * plus != plus or minus * minus != minus:
            return "projectors are not idempotent"
        if plus * minus != zero or plus + minus != one:
            return "projectors are not complementary"
        return None

    results.append(_run("chiral projectors: idempotent, orthogonal, complete", projectors))
    return results


# ---------------------------------------------------------------------------
# spin scope

def spin_suite(seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    results = []

    def cover_homomorphism() -> str | None:
        for _ in range(10):
            n = rng.choice([3, 5, 7, 8])
            z1 = random_spin(n, rng.randint(1, 2), rng.randrange(10**6))
            z2 = random_spin(n, rng.randint(1, 2), rng.randrange(10**6))
            lhs = adjoint_action(z1 * z2).entries
            rhs = la.mat_mul(adjoint_action(z1).entries, adjoint_action(z2).entries)
            if lhs != rhs:
                return f"failed in Spin({n})"
        return None

    results.append(_run("conjugation cover is a homomorphism (10 random pairs)", cover_homomorphism))

    def kernel() -> str | None:
        for n in (3, 7, 8):
            ident = la.identity(n)
            for sign in (1, -1):
                z = SpinElement(Multivector.scalar(n, sign), check=False)
                if adjoint_action(z).entries != ident:
                    return f"+-1 not in the kernel for n={n}"
            z = random_spin(n, 1, rng.randrange(10**6))
            if z.value not in (Multivector.scalar(n, 1), Multivector.scalar(n, -1)):
                if adjoint_action(z).entries == ident:
                    return f"non-central element acts trivially in Spin({n})"
        return None

    results.append(_run("kernel of the cover is exactly {+1, -1} (sampled)", kernel))

    def lift_section() -> str | None:
        for _ in range(6):
            n = rng.choice([3, 7, 8])
            z = random_spin(n, rng.randint(1, 2), rng.randrange(10**6))
            rot = adjoint_action(z)
            lifted = lift_rotation(rot)
            if adjoint_action(lifted).entries != rot.entries:
                return f"lift does not invert the cover in Spin({n})"
            if lifted.value not in (z.value, (-z).value):
                return "lift is not the original element up to sign"
        return None

    results.append(_run("constructive lift inverts the cover (6 random rotations)", lift_section))

    def reflections() -> str | None:
        for _ in range(10):
            n = rng.choice([3, 7, 8])
            v = rational_unit_vector(n, rng)
            w = rational_unit_vector(n, rng)
            x = rational_unit_vector(n, rng)
            composed = reflect(w, reflect(v, x))
            z = SpinElement(w * v, check=False)
            conj = z.value * x * z.value.reverse()
            if composed != conj:
                return "double reflection disagrees with conjugation"
            inner = (reflect(v, x) * reflect(v, x)).scalar_part()
            if inner != (x * x).scalar_part():
                return "reflection does not preserve lengths"
        return None

    results.append(_run("double reflection equals conjugation by the factor product", reflections))

    def skew_section() -> str | None:
        for _ in range(8):
            n = rng.choice([4, 7, 8])
            entries = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i):
                    entries[i][j] = rng.randint(-5, 5)
                    entries[j][i] = -entries[i][j]
            a = SkewMatrix(la.mat(entries))
            if ad_differential(lie_lift(a)).entries != a.entries:
                return f"skew lift fails for n={n}"
        return None

    results.append(_run("bivector lift is a section of the cover differential", skew_section))

    def determinism() -> str | None:
        for n, k, s in ((7, 2, 5), (8, 3, 17)):
            z1, z2 = random_spin(n, k, s), random_spin(n, k, s)
            if z1.value != z2.value:
                return "equal seeds gave different elements"
            norm = z1.value * z1.value.reverse()
            if norm != Multivector.scalar(n, 1):
                return "seeded element is not unit-norm"
        return None

    results.append(_run("seeded spin elements: deterministic, unit norm", determinism))
    return results


# ---------------------------------------------------------------------------
# reps scope

def reps_suite(seed: int = 0, rep: GammaRep | None = None) -> list[CheckResult]:
    rng = random.Random(seed)
    results = []
    rep = rep if rep is not None else build_cl8_rep()
    ident8 = la.identity(8)
    ident16 = la.identity(16)

    def anticommutators() -> str | None:
        for i in range(8):
            for j in range(8):
                s = la.mat_add(
                    la.mat_mul(rep.gamma[i], rep.gamma[j]),
                    la.mat_mul(rep.gamma[j], rep.gamma[i]),
                )
                if s != la.mat_scale(ident16, -2 if i == j else 0):
                    return f"pair ({i},{j})"
        return None

    results.append(_run("gamma anticommutators realize the generator relations", anticommutators))

    def orthogonal_skew() -> str | None:
        for i in range(8):
            g = rep.gamma[i]
            if not la.is_orthogonal(g):
                return f"gamma_{i} is not orthogonal"
            if la.transpose(g) != la.mat_scale(g, -1):
                return f"gamma_{i} is not skew"
        return None

    results.append(_run("gamma matrices are orthogonal and skew-symmetric", orthogonal_skew))

    def span() -> str | None:
        r = monomial_span_rank(rep)
        return None if r == 256 else f"rank {r} != 256"

    results.append(_run("256 monomial matrices span a 256-dimensional space", span))

    def eigensplit() -> str | None:
        omega = clifford_action(rep, volume_element(8))
        if la.mat_mul(omega, omega) != ident16:
            return "volume action does not square to 1"
        for basis, sign in ((rep.basis_plus, 1), (rep.basis_minus, -1)):
            if la.mat_mul(omega, basis) != la.mat_scale(basis, sign):
                return "claimed eigenbasis is not an eigenbasis"
            gram = la.mat_mul(la.transpose(basis), basis)
            if gram != ident8:
                return "eigenbasis is not orthonormal"
        return None

    results.append(_run("volume action splits R^16 into orthonormal 8+8 eigenspaces", eigensplit))

    def swap_isometry() -> str | None:
        for _ in range(25):
            v = Multivector.vector(8, rational_unit_tuple(8, rng))
            m = clifford_action(rep, v)
            image = la.mat_mul(m, rep.basis_plus)
            back = la.mat_mul(rep.basis_minus, la.mat_mul(la.transpose(rep.basis_minus), image))
            if back != image:
                return "unit vector does not map S+ into S-"
            if la.mat_mul(la.transpose(image), image) != ident8:
                return "unit vector action is not an isometry"
            image2 = la.mat_mul(m, rep.basis_minus)
            back2 = la.mat_mul(rep.basis_plus, la.mat_mul(la.transpose(rep.basis_plus), image2))
            if back2 != image2:
                return "unit vector does not map S- into S+"
        return None

    results.append(_run("25 random unit vectors swap the chiral halves isometrically", swap_isometry))

    def omega_signs() -> str | None:
        if delta8(rep, omega8_element(), "+") != ident8:
            return "volume element does not act as +1 on the positive half"
        if delta8(rep, omega8_element(), "-") != la.mat_scale(ident8, -1):
            return "volume element does not act as -1 on the negative half"
        return None

    results.append(_run("volume element acts as +1 on S+ and -1 on S-", omega_signs))

    def minus_one_lift() -> str | None:
        minus_one = SpinElement(Multivector.scalar(7, -1), check=False)
        if iota_plus(rep, minus_one).value != volume_element(8):
            return "spinor-type lift of -1 is not the volume element"
        if iota_vector(minus_one).value != Multivector.scalar(8, -1):
            return "vector-type embedding of -1 is not -1"
        return None

    results.append(_run("spinor lift sends -1 to omega8; blade embedding keeps -1", minus_one_lift))

    def lift_identity() -> str | None:
        for x in spin7_lie_basis():
            if ad_differential(d_iota_plus(rep, x)).entries != d_delta7(rep, x):
                return "Lie-algebra level identity fails"
        for _ in range(10):
            z = random_spin(7, rng.randint(1, 2), rng.randrange(10**6))
            if adjoint_action(iota_plus(rep, z)).entries != delta7(rep, z):
                return "group level identity fails"
        return None

    results.append(
        _run("conjugation of the spinor lift equals the spin rep (21 basis + 10 group)", lift_identity)
    )

    def fixed_line() -> str | None:
        basis = common_fixed_space(rep, spin7_lie_basis())
        if len(basis) != 1:
            return f"fixed space has dimension {len(basis)}"
        return None

    results.append(_run("joint fixed space of the spinor-type so(7) copy is a line", fixed_line))

    def stabilizer_21() -> str | None:
        psi = rep.fixed_spinor()
        dim = stabilizer_dimension(rep, psi)
        if dim != 21:
            return f"stabilizer dimension {dim} != 21"
        if 28 - dim != 7:
            return "orbit rank is not 7"
        for _ in range(3):
            phi = Spinor(rational_unit_tuple(8, rng), "+")
            if stabilizer_dimension(rep, phi) != 21:
                return "random unit spinor has a different stabilizer dimension"
        return None

    results.append(_run("so(8)-stabilizer of unit spinors has dimension 21 (orbit rank 7)", stabilizer_21))

    def g2_dim() -> str | None:
        dim = g2_intersection_dimension(rep)
        if dim != 14:
            return f"intersection dimension {dim} != 14"
        psi = rep.fixed_spinor()
        for z in g2_intersection_basis(rep):
            if any(la.mat_vec(chiral_action_matrix(rep, z, "+"), psi.components)):
                return "intersection element moves the fixed spinor"
            col0 = tuple(ad_differential(z).entries[i][0] for i in range(8))
            if any(col0):
                return "intersection element moves e0 infinitesimally"
        return None

    results.append(
        _run("the two so(7) copies intersect in dimension 14, fixing spinor and vector", g2_dim)
    )

    def sphere_transitivity() -> str | None:
        algebra = embedded_spin7_lie_basis()
        for _ in range(10):
            phi = Spinor(rational_unit_tuple(8, rng), "+")
            dim = stabilizer_dimension(rep, phi, algebra)
            if dim != 14:
                return f"chiral so(7) stabilizer has dimension {dim} != 14"
        return None

    results.append(
        _run("chiral so(7) stabilizer of 10 random unit spinors is 14-dim (orbit rank 7)", sphere_transitivity)
    )

    def embeddings_differ() -> str | None:
        z = random_spin(7, 2, rng.randrange(10**6))
        r_vec = adjoint_action(iota_vector(z)).entries
        e0 = tuple(Fraction(1 if i == 0 else 0) for i in range(8))
        if tuple(r_vec[i][0] for i in range(8)) != e0:
            return "vector-type embedding does not fix e0"
        r_spin = adjoint_action(iota_plus(rep, z)).entries
        fixed = la.kernel_basis(la.mat_sub(r_spin, la.identity(8)))
        if len(fixed) != 0:
            return "spinor-type rotation of a generic element has a fixed vector"
        return None

    results.append(_run("the two embeddings differ: only the vector copy fixes e0", embeddings_differ))

    def sigma_factors() -> str | None:
        for _ in range(5):
            z = random_spin(7, rng.randint(1, 2), rng.randrange(10**6))
            if delta8(rep, iota_plus(rep, z), "+") != delta8(rep, iota_plus(rep, -z), "+"):
                return "chiral rep of the lift does not factor through the rotation group"
            if delta7(rep, -z) != la.mat_scale(delta7(rep, z), -1):
                return "spin rep is not odd under negation"
        return None

    results.append(
        _run("chiral rep of the lift factors through rotations; spin rep is odd", sigma_factors)
    )
    return results


SCOPES = ("clifford", "spin", "reps")


def run_suites(scope: str, seed: int = 0, rep: GammaRep | None = None) -> list[CheckResult]:
    """Run one named suite, or all of them in order."""
    if scope == "clifford":
        return clifford_suite(seed)
    if scope == "spin":
        return spin_suite(seed)
    if scope == "reps":
        return reps_suite(seed, rep=rep)
    if scope == "all":
        out: list[CheckResult] = []
        for s in SCOPES:
            out.extend(run_suites(s, seed, rep=rep))
        return out
    raise ValueError(f"unknown scope {scope!r}; expected one of {SCOPES + ('all',)}")
