"""Simple roots and Cartan pairings of a connected reductive group.

Only the data the colored-fan combinatorics needs: the simple roots, the
block-diagonal Cartan matrix in Bourbaki numbering, and extra central
coordinates for characters of a central torus.

Convention: ``cartan[i][j] = <alpha_i^vee, alpha_j>``.  For F4 this gives
``cartan[2][1] = -2`` (short coroot against long root) and
``cartan[1][2] = -1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, IndexOutOfRange, ParseError, UnsupportedType
from .exact_linalg import as_fraction, normalize

GREEK = ["alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta", "iota", "kappa"]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4, "E": 6, "F": 4, "G": 2}


def _path(n):
    C = [[0] * n for _ in range(n)]
    for i in range(n):
        C[i][i] = 2
        if i + 1 < n:
            C[i][i + 1] = C[i + 1][i] = -1
    return C


def cartan_block(letter: str, n: int) -> list[list[int]]:
    """The Cartan matrix of an irreducible root system, Bourbaki numbering."""
    if letter not in _MIN_RANK:
        raise UnsupportedType(f"unknown root system type {letter!r}")
    if n < _MIN_RANK[letter]:
        raise UnsupportedType(f"type {letter} needs rank >= {_MIN_RANK[letter]}, got {n}")
    if letter == "E" and n > 8:
        raise UnsupportedType("type E exists only in ranks 6, 7, 8")
    if letter == "F" and n != 4:
        raise UnsupportedType("type F exists only in rank 4")
    if letter == "G" and n != 2:
        raise UnsupportedType("type G exists only in rank 2")

    if letter == "A":
        return _path(n)
    if letter == "B":
        # alpha_n short
        C = _path(n)
        C[n - 1][n - 2] = -2
        return C
    if letter == "C":
        # alpha_n long
        C = _path(n)
        C[n - 2][n - 1] = -2
        return C
    if letter == "D":
        C = _path(n)
        C[n - 2][n - 1] = C[n - 1][n - 2] = 0
        C[n - 3][n - 1] = C[n - 1][n - 3] = -1
        return C
    if letter == "E":
        # 1-3-4-5-6(-7-8), 2 attached to 4
        C = [[0] * n for _ in range(n)]
        for i in range(n):
            C[i][i] = 2
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)] + [(k, k + 1) for k in range(6, n)]
        for a, b in edges:
            C[a - 1][b - 1] = C[b - 1][a - 1] = -1
        return C
    if letter == "F":
        C = _path(4)
        C[2][1] = -2
        return C
    # G2, alpha_1 short
    return [[2, -3], [-1, 2]]


@dataclass(frozen=True)
class RootSystem:
    factors: tuple  # ((letter, rank), ...)
    central_rank: int
    labels: tuple
    cartan: tuple

    @property
    def n_simple(self) -> int:
        return len(self.labels)

    @property
    def char_dim(self) -> int:
        """Length of a character coordinate vector."""
        return self.n_simple + self.central_rank

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise IndexOutOfRange(f"no simple root named {label!r}") from None

    def _idx(self, i: int) -> int:
        if not 0 <= i < self.n_simple:
            raise IndexOutOfRange(f"simple root index {i} out of range 0..{self.n_simple - 1}")
        return i

    def simple_root(self, i: int) -> tuple:
        """The character alpha_i in root coordinates."""
        self._idx(i)
        return tuple(int(j == i) for j in range(self.char_dim))

    def cartan_pairing(self, i: int, chi: Sequence) -> Fraction:
        """``<alpha_i^vee, chi>``; central coordinates pair to zero."""
        self._idx(i)
        if len(chi) != self.char_dim:
            raise DimensionMismatch(f"character has length {len(chi)}, expected {self.char_dim}")
        row = self.cartan[i]
        return normalize(sum(row[j] * as_fraction(chi[j]) for j in range(self.n_simple)))

    def are_orthogonal(self, i: int, j: int) -> bool:
        self._idx(i)
        self._idx(j)
        return self.cartan[i][j] == 0

    def format_character(self, chi: Sequence) -> str:
        """Render a character as a combination of simple roots, e.g.
        ``beta_2+2beta_3+beta_4`` or ``(beta+gamma)/2``-style fractions."""
        terms = []
        for j, c in enumerate(chi):
            c = as_fraction(c)
            if c == 0:
                continue
            name = self.labels[j] if j < self.n_simple else f"eps_{j - self.n_simple + 1}"
            if c == 1:
                coef = ""
            elif c == -1:
                coef = "-"
            else:
                coef = f"{c}*" if c.denominator != 1 else f"{c}"
            terms.append(coef + name)
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out


_FACTOR = re.compile(r"([A-Ga-g])(\d+)")


def default_labels(factors) -> list[str]:
    labels = []
    for k, (letter, n) in enumerate(factors):
        base = GREEK[k] if k < len(GREEK) else f"root{k + 1}"
        if n == 1:
            labels.append(base)
        else:
            labels += [f"{base}_{i}" for i in range(1, n + 1)]
    return labels


def parse_root_system(name: str, labels: Sequence[str] | None = None) -> RootSystem:
    """Parse ``FACTOR ("x" FACTOR)* ("+C" INT)?`` such as ``"A1xF4"`` or
    ``"A2+C1"``.

    Simple roots are labelled per factor with Greek names (``alpha``,
    ``beta_1``, ...) unless ``labels`` is given.
    """
    text = name.replace(" ", "")
    central = 0
    if "+" in text:
        text, _, tail = text.partition("+")
        m = re.fullmatch(r"[Cc](\d+)", tail)
        if not m:
            raise ParseError(f"bad central torus {tail!r} in {name!r}")
        central = int(m.group(1))
    parts = text.split("x") if text else []
    factors = []
    for part in parts:
        m = _FACTOR.fullmatch(part)
        if not m:
            raise ParseError(f"bad factor {part!r} in root system {name!r}")
        factors.append((m.group(1).upper(), int(m.group(2))))
    if not factors:
        raise ParseError(f"root system {name!r} has no simple factor")
    blocks = [cartan_block(letter, n) for letter, n in factors]
    size = sum(len(b) for b in blocks)
    cartan = [[0] * size for _ in range(size)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                cartan[off + i][off + j] = x
        off += len(b)
    if labels is None:
        labels = default_labels(factors)
    labels = tuple(labels)
    if len(labels) != size:
        raise ParseError(f"{len(labels)} labels given for {size} simple roots")
    if len(set(labels)) != len(labels):
        raise ParseError("simple root labels must be distinct")
    return RootSystem(tuple(factors), central, labels, tuple(map(tuple, cartan)))


def cartan_pairing(rs: RootSystem, i: int, chi: Sequence) -> Fraction:
    return rs.cartan_pairing(i, chi)


def are_orthogonal(rs: RootSystem, i: int, j: int) -> bool:
    return rs.are_orthogonal(i, j)
