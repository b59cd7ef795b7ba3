"""Sparse bivariate polynomials over GF(2), and binomial coefficients mod 2.

A polynomial is a finite set of exponent pairs (i, j): the pair is present
iff the monomial x^i y^j has coefficient 1.  Addition is symmetric
difference, so p + p = 0 for every p.  All arithmetic is exact; Python's
arbitrary-precision integers mean exponents cannot overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


def binom_mod2(n: int, m: int) -> int:
    """Binomial coefficient C(n, m) mod 2; 0 when m < 0 or m > n.

    Uses the digit-domination criterion: C(n, m) is odd iff every binary
    digit of m is dominated by the corresponding digit of n.  Validated
    against a Pascal-triangle oracle in the test suite.
    """
    if m < 0 or m > n:
        return 0
    return int(m & ~n == 0)


@dataclass(frozen=True)
class PolyGF2:
    """Polynomial over GF(2) in x, y, stored as a frozenset of (i, j) pairs."""

    terms: frozenset[tuple[int, int]]

    def __init__(self, terms: Iterable[tuple[int, int]] = ()):
        terms = frozenset(terms)
        for i, j in terms:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in term {(i, j)}")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def monomial(cls, i: int, j: int) -> "PolyGF2":
        return cls([(i, j)])

    @classmethod
    def zero(cls) -> "PolyGF2":
        return cls()

    @classmethod
    def one(cls) -> "PolyGF2":
        return cls([(0, 0)])

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "PolyGF2") -> "PolyGF2":
        return PolyGF2(self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: "PolyGF2") -> "PolyGF2":
        acc: set[tuple[int, int]] = set()
        for i1, j1 in self.terms:
            for i2, j2 in other.terms:
                acc ^= {(i1 + i2, j1 + j2)}
        return PolyGF2(acc)

    def __pow__(self, n: int) -> "PolyGF2":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = PolyGF2.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def degree(self) -> int:
        """Total degree (-1 for the zero polynomial)."""
        return max((i + j for i, j in self.terms), default=-1)

    def __str__(self) -> str:
        return format_terms(self.terms)


X = PolyGF2.monomial(1, 0)
Y = PolyGF2.monomial(0, 1)
ONE = PolyGF2.one()
ZERO = PolyGF2.zero()


@dataclass(frozen=True)
class LinearSubstitution:
    """Images of the degree-1 generators as linear forms in x, y.

    x_image = (cx, cy) sends x to cx*x + cy*y, and likewise y_image sends y.
    Coefficients are bits, so there are 16 substitutions in total.
    """

    x_image: tuple[int, int]
    y_image: tuple[int, int]

    def __post_init__(self):
        for c in (*self.x_image, *self.y_image):
            if c not in (0, 1):
                raise ValueError("substitution coefficients must be bits")

    def x_poly(self) -> PolyGF2:
        return _form_poly(self.x_image)

    def y_poly(self) -> PolyGF2:
        return _form_poly(self.y_image)

    def __str__(self) -> str:
        return f"x->{_form_str(self.x_image)}, y->{_form_str(self.y_image)}"


IDENTITY_SUBSTITUTION = LinearSubstitution((1, 0), (0, 1))
SWAP_SUBSTITUTION = LinearSubstitution((0, 1), (1, 0))
# fixes x, sends y to x + y: realizes the q <-> b - q equivalence
COMPLEMENT_SUBSTITUTION = LinearSubstitution((1, 0), (1, 1))

_FORM_NAMES = {(0, 0): "0", (1, 0): "x", (0, 1): "y", (1, 1): "x+y"}


def _form_str(coeffs: tuple[int, int]) -> str:
    return _FORM_NAMES[coeffs]


def _form_poly(coeffs: tuple[int, int]) -> PolyGF2:
    cx, cy = coeffs
    terms = []
    if cx:
        terms.append((1, 0))
    if cy:
        terms.append((0, 1))
    return PolyGF2(terms)


def substitute_linear(p: PolyGF2, subst: LinearSubstitution) -> PolyGF2:
    """Replace x, y by their linear images and expand.

    This is the GF(2)-algebra endomorphism of the polynomial ring determined
    by the substitution: it commutes with + and *.
    """
    xp, yp = subst.x_poly(), subst.y_poly()
    # cache powers: exponents repeat across terms
    xpows: dict[int, PolyGF2] = {}
    ypows: dict[int, PolyGF2] = {}
    acc = PolyGF2.zero()
    for i, j in p.terms:
        if i not in xpows:
            xpows[i] = xp ** i
        if j not in ypows:
            ypows[j] = yp ** j
        acc = acc + xpows[i] * ypows[j]
    return acc


def format_terms(terms: Iterable[tuple[int, int]]) -> str:
    """Human-readable sum of monomials, graded order, '0' when empty."""
    parts = []
    for i, j in sorted(terms, key=lambda t: (t[0] + t[1], t[1])):
        factors = []
        if i == 1:
            factors.append("x")
        elif i > 1:
            factors.append(f"x^{i}")
        if j == 1:
            factors.append("y")
        elif j > 1:
            factors.append(f"y^{j}")
        parts.append("*".join(factors) if factors else "1")
    return " + ".join(parts) if parts else "0"
