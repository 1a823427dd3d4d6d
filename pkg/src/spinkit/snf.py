"""Integer Smith normal form and finitely generated abelian group descriptors.

The normal form is computed with exact arbitrary-precision integers,
selecting the smallest nonzero entry as pivot to keep coefficient growth
in check.  Only the diagonal is returned; base-change matrices are never
needed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


def smith_diagonal(rows: list[list[int]]) -> list[int]:
    """Diagonal of the Smith normal form, as nonnegative d1 | d2 | ... | dr.

    Zero diagonal entries are dropped; the result lists the nontrivial
    elementary divisors (possibly 1s) of the matrix.
    """
    a = [list(map(int, r)) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    diag: list[int] = []
    top = 0
    while top < m and top < n:
        # locate the smallest nonzero entry in the remaining block
        best = None
        for i in range(top, m):
            for j in range(top, n):
                v = abs(a[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            break
        _, bi, bj = best
        a[top], a[bi] = a[bi], a[top]
        for row in a:
            row[top], row[bj] = row[bj], row[top]

        while True:
            pivot = a[top][top]
            done = True
            for i in range(top + 1, m):
                q = a[i][top] // pivot
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[top])]
                if a[i][top]:
                    # remainder smaller than pivot: swap it up and restart
                    a[top], a[i] = a[i], a[top]
                    done = False
                    break
            if not done:
                continue
            for j in range(top + 1, n):
                q = a[top][j] // pivot
                if q:
                    for row in a:
                        row[j] -= q * row[top]
                if a[top][j]:
                    for row in a:
                        row[top], row[j] = row[j], row[top]
                    done = False
                    break
            if done:
                break
        diag.append(abs(a[top][top]))
        top += 1

    # enforce the divisibility chain d1 | d2 | ...
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            if diag[j] % diag[i]:
                g = gcd(diag[i], diag[j])
                diag[i], diag[j] = g, diag[i] * diag[j] // g
    return [d for d in diag if d]


def integer_rank(rows: list[list[int]]) -> int:
    return len(smith_diagonal(rows))


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank + Z/t1 + Z/t2 + ... with 1 < t1 | t2 | ..."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        tors = tuple(int(t) for t in self.torsion if int(t) != 1)
        for a, b in zip(tors, tors[1:]):
            if b % a:
                raise ValueError("torsion coefficients must form a divisibility chain")
        object.__setattr__(self, "torsion", tors)

    @classmethod
    def from_orders(cls, orders: list[int]) -> "AbelianGroup":
        """Build from arbitrary cyclic orders (0 meaning Z), normalizing."""
        free = sum(1 for d in orders if d == 0)
        tors = sorted(d for d in orders if d > 1)
        # normalize to a divisibility chain via pairwise gcd/lcm sweeps
        changed = True
        while changed:
            changed = False
            for i in range(len(tors)):
                for j in range(i + 1, len(tors)):
                    if tors[j] % tors[i]:
                        g = gcd(tors[i], tors[j])
                        tors[i], tors[j] = g, tors[i] * tors[j] // g
                        changed = True
            tors = sorted(t for t in tors if t > 1)
        return cls(free, tuple(tors))

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self) -> int | None:
        """Number of elements, or None when infinite."""
        if self.free_rank:
            return None
        out = 1
        for t in self.torsion:
            out *= t
        return out

    def tensor_with_cyclic(self, m: int) -> "AbelianGroup":
        """G (x) Z/m."""
        if m <= 0:
            raise ValueError("modulus must be positive")
        orders = [m] * self.free_rank + [gcd(t, m) for t in self.torsion]
        return AbelianGroup.from_orders(orders)

    def torsion_product_with_cyclic(self, m: int) -> "AbelianGroup":
        """Tor(G, Z/m): the free part drops, each Z/t contributes Z/gcd(t, m)."""
        if m <= 0:
            raise ValueError("modulus must be positive")
        return AbelianGroup.from_orders([gcd(t, m) for t in self.torsion])

    def direct_sum(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup.from_orders(
            [0] * (self.free_rank + other.free_rank)
            + list(self.torsion)
            + list(other.torsion)
        )

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


TRIVIAL_GROUP = AbelianGroup(0, ())
