"""Exact rational and integer linear algebra.

Vectors are tuples, matrices are tuples of row tuples.  Entries are ``int``
or :class:`fractions.Fraction`; nothing here ever touches a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotInLattice, ZeroVector

Vector = tuple
Matrix = tuple


def as_fraction(x) -> Fraction:
    """Convert ``int``, ``Fraction`` or a ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot read {x!r} as an exact rational")


def normalize(x):
    """Return ``x`` as an ``int`` when it is integral, else as a Fraction."""
    x = as_fraction(x)
    return x.numerator if x.denominator == 1 else x


def vec(xs: Iterable) -> Vector:
    return tuple(normalize(x) for x in xs)


def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vec(r) for r in rows)


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise DimensionMismatch(f"cannot pair vectors of length {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), 0)


def add(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def scale(c, v: Sequence) -> Vector:
    return tuple(c * a for a in v)


def neg(v: Sequence) -> Vector:
    return tuple(-a for a in v)


def mat_vec(A: Sequence[Sequence], v: Sequence) -> Vector:
    return tuple(normalize(dot(row, v)) for row in A)


def vec_mat(v: Sequence, A: Sequence[Sequence]) -> Vector:
    """Row vector times matrix, i.e. the combination sum_i v_i A_i."""
    if len(v) != len(A):
        raise DimensionMismatch("coefficient count does not match row count")
    if not A:
        return ()
    out = [0] * len(A[0])
    for c, row in zip(v, A):
        if c:
            for j, a in enumerate(row):
                out[j] += c * a
    return vec(out)


def mat_mul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    return tuple(vec_mat(row, B) for row in A)


def transpose(A: Sequence[Sequence], n_cols: int | None = None) -> Matrix:
    if not A:
        return tuple(() for _ in range(n_cols or 0))
    return tuple(zip(*A))


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def is_zero(v: Sequence) -> bool:
    return all(a == 0 for a in v)


def primitive(v: Sequence) -> Vector:
    """The primitive integer vector on the ray through the rational ``v``."""
    fr = [as_fraction(a) for a in v]
    if all(a == 0 for a in fr):
        raise ZeroVector("the zero vector spans no ray")
    den = lcm(*(a.denominator for a in fr))
    ints = [int(a * den) for a in fr]
    g = gcd(*ints)
    return tuple(a // g for a in ints)


def rref(A: Sequence[Sequence], n_cols: int | None = None):
    """Reduced row echelon form over Q.

    Returns ``(R, pivots)`` with ``R`` the nonzero rows as Fraction lists.
    """
    rows = [[as_fraction(a) for a in r] for r in A]
    n = len(rows[0]) if rows else (n_cols or 0)
    pivots: list[int] = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [a * inv for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(A: Sequence[Sequence]) -> int:
    if not A:
        return 0
    return len(rref(A)[1])


def nullspace(A: Sequence[Sequence], n_cols: int) -> list[Vector]:
    """A rational basis of ``{x : A x = 0}`` (primitive integer vectors)."""
    R, pivots = rref(A, n_cols)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n_cols
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = -row[f]
        basis.append(primitive(x))
    return basis


def solve(rows: Sequence[Sequence], v: Sequence):
    """Coefficients ``c`` with ``sum c_i rows_i = v``, or ``None``.

    ``rows`` are assumed linearly independent.
    """
    k = len(rows)
    n = len(v)
    if k == 0:
        return () if is_zero(v) else None
    # columns of the augmented system are the rows plus v
    aug = [[as_fraction(rows[i][j]) for i in range(k)] + [as_fraction(v[j])] for j in range(n)]
    R, pivots = rref(aug, k + 1)
    if k in pivots:
        return None
    if len(pivots) != k:
        raise ValueError("rows are linearly dependent")
    sol = [Fraction(0)] * k
    for row, p in zip(R, pivots):
        sol[p] = row[k]
    return vec(sol)


def det(A: Sequence[Sequence]):
    n = len(A)
    rows = [[as_fraction(a) for a in r] for r in A]
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            d = -d
        d *= rows[c][c]
        for i in range(c + 1, n):
            f = rows[i][c] / rows[c][c]
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return normalize(d)


def hnf(A: Sequence[Sequence[int]], n_cols: int | None = None):
    """Row Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U A = H``.  Pivots of ``H``
    are positive, entries above a pivot lie in ``[0, pivot)``, zero rows
    come last.
    """
    m = len(A)
    n = len(A[0]) if A else (n_cols or 0)
    H = [[int(a) for a in row] for row in A]
    if any(len(row) != n for row in H):
        raise DimensionMismatch("ragged matrix")
    U = [[int(i == j) for j in range(m)] for i in range(m)]

    def sub(i, j, q):  # row_i -= q * row_j
        H[i] = [a - q * b for a, b in zip(H[i], H[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(H[i][c]))
            for i in nz:
                if i != p:
                    sub(i, p, H[i][c] // H[p][c])
            if all(H[i][c] == 0 for i in range(r, m) if i != p):
                break
        if all(H[i][c] == 0 for i in range(r, m)):
            continue
        p = next(i for i in range(r, m) if H[i][c] != 0)
        H[r], H[p] = H[p], H[r]
        U[r], U[p] = U[p], U[r]
        if H[r][c] < 0:
            H[r] = [-a for a in H[r]]
            U[r] = [-a for a in U[r]]
        for i in range(r):
            sub(i, r, H[i][c] // H[r][c])
        r += 1
    return tuple(map(tuple, H)), tuple(map(tuple, U))


@dataclass(frozen=True)
class IntLatticeBasis:
    """A sublattice of Z^n, stored as the nonzero rows of its HNF basis.

    Two instances spanning the same lattice compare equal.
    """

    ambient_dim: int
    rows: tuple = ()

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence[int]], ambient_dim: int) -> "IntLatticeBasis":
        gens = [tuple(int(a) for a in g) for g in gens]
        if any(len(g) != ambient_dim for g in gens):
            raise DimensionMismatch("generator length differs from ambient dimension")
        if not gens:
            return cls(ambient_dim, ())
        H, _ = hnf(gens, ambient_dim)
        return cls(ambient_dim, tuple(r for r in H if not is_zero(r)))

    @classmethod
    def full(cls, n: int) -> "IntLatticeBasis":
        return cls(n, identity(n))

    @property
    def rank(self) -> int:
        return len(self.rows)

    def coordinates(self, v: Sequence):
        """Rational coordinates of ``v`` in this basis, or ``None``."""
        return solve(self.rows, v)

    def contains(self, v: Sequence) -> bool:
        c = self.coordinates(v)
        return c is not None and all(as_fraction(a).denominator == 1 for a in c)

    def to_ambient(self, coords: Sequence) -> Vector:
        return vec_mat(coords, self.rows) if self.rows else (0,) * self.ambient_dim

    def is_saturated(self) -> bool:
        return self == saturation(self.rows, self.ambient_dim)

    def __le__(self, other: "IntLatticeBasis") -> bool:
        return all(other.contains(r) for r in self.rows)


def integer_kernel(A: Sequence[Sequence[int]], n_cols: int) -> IntLatticeBasis:
    """Saturated basis of ``{x in Z^n : A x = 0}``."""
    A = [tuple(int(a) for a in row) for row in A]
    if any(len(row) != n_cols for row in A):
        raise DimensionMismatch("matrix width differs from n_cols")
    if not A:
        return IntLatticeBasis.full(n_cols)
    At = transpose(A)  # n_cols x m
    H, U = hnf(At, len(A))
    kernel = [U[i] for i in range(n_cols) if is_zero(H[i])]
    return IntLatticeBasis.from_generators(kernel, n_cols)


def saturation(gens: Sequence[Sequence], n: int) -> IntLatticeBasis:
    """The lattice ``span_Q(gens) ∩ Z^n``."""
    gens = [g for g in gens if not is_zero(g)]
    if not gens:
        return IntLatticeBasis(n, ())
    perp = nullspace(gens, n)
    return integer_kernel(perp, n)


def primitive_generator(v: Sequence, L: IntLatticeBasis) -> Vector:
    """Coordinates, in the basis of ``L``, of the primitive point of ``L``
    on the ray through ``v``."""
    if len(v) != L.ambient_dim:
        raise DimensionMismatch("vector length differs from lattice ambient dimension")
    if is_zero(v):
        raise ZeroVector("the zero vector spans no ray")
    c = L.coordinates(v)
    if c is None:
        raise NotInLattice(f"{v} is not in the rational span of the lattice")
    return primitive(c)


def restrict_functional(v: Sequence, M0: IntLatticeBasis) -> Vector:
    """Restrict a functional on Z^n to the sublattice ``M0``; the result is
    expressed in the dual basis of ``M0``'s basis."""
    if len(v) != M0.ambient_dim:
        raise DimensionMismatch("functional length differs from lattice ambient dimension")
    return tuple(normalize(dot(v, r)) for r in M0.rows)
