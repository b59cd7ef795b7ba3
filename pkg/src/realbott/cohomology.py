"""The mod-2 cohomology ring of P(q*gamma + (b-q)*1) over RP^(a-1).

The ring is Z/2[x,y] / (x^a, (x+y)^q y^(b-q)), where x is the pullback of
the first Stiefel-Whitney class of the tautological bundle gamma on the
base and y is the first Stiefel-Whitney class of the tautological bundle
of the projectivization.  The monomials x^i y^j with 0 <= i < a and
0 <= j < b form an additive basis, and every element is handled in that
normal form.

Reduction uses two rewriting rules:

  R1: x^i y^j -> 0 whenever i >= a;
  R2: y^b -> sum over 1 <= t <= q of C(q, t) x^t y^(b-t)  (mod 2),

R2 being the second relation solved for its y^b term (whose coefficient
C(q, 0) = 1 is a unit).  Each R2 step strictly lowers the y-exponent and
R1 caps the x-exponent, so reduction terminates; agreement with a
linear-algebra reduction of the ideal is verified in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gf2poly import PolyGF2, binom_mod2, format_terms


@dataclass(frozen=True)
class RingPresentation:
    """The triple (a, b, q) naming Z/2[x,y]/(x^a, (x+y)^q y^(b-q)).

    a, b >= 1 and 0 <= q <= b; q is kept exactly as given (no automatic
    replacement by b - q, the classifier wants the raw value).
    """

    a: int
    b: int
    q: int

    def __post_init__(self):
        if self.a < 1:
            raise ValueError(f"a must be >= 1, got {self.a}")
        if self.b < 1:
            raise ValueError(f"b must be >= 1, got {self.b}")
        if not 0 <= self.q <= self.b:
            raise ValueError(f"q must satisfy 0 <= q <= b, got q={self.q}, b={self.b}")

    @property
    def dimension(self) -> int:
        """Total dimension of the ring as a GF(2) vector space: a*b."""
        return self.a * self.b

    @property
    def top_degree(self) -> int:
        """Largest degree with a nonzero graded piece: a + b - 2."""
        return self.a + self.b - 2

    def basis(self, d: int) -> list[tuple[int, int]]:
        """Basis monomials x^i y^j of degree d, ordered by increasing i."""
        return [(i, d - i) for i in range(self.a) if 0 <= d - i < self.b]


@dataclass(frozen=True)
class RingElement:
    """A ring element in normal form: coefficients over the monomial basis."""

    pres: RingPresentation
    coeffs: frozenset[tuple[int, int]]

    def __post_init__(self):
        for i, j in self.coeffs:
            if not (0 <= i < self.pres.a and 0 <= j < self.pres.b):
                raise ValueError(f"monomial {(i, j)} outside the basis of {self.pres}")

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check_compatible(other)
        return RingElement(self.pres, self.coeffs ^ other.coeffs)

    def __mul__(self, other: "RingElement") -> "RingElement":
        self._check_compatible(other)
        return normal_form(self.lift() * other.lift(), self.pres)

    def _check_compatible(self, other: "RingElement") -> None:
        if self.pres != other.pres:
            raise ValueError(
                f"incompatible rings: {self.pres} and {other.pres}"
            )

    def lift(self) -> PolyGF2:
        """The basis representative as an honest polynomial."""
        return PolyGF2(self.coeffs)

    def __str__(self) -> str:
        return format_terms(self.coeffs)


def relation_polys(pres: RingPresentation) -> tuple[PolyGF2, PolyGF2]:
    """The two ideal generators (x^a, expansion of (x+y)^q y^(b-q))."""
    rel1 = PolyGF2.monomial(pres.a, 0)
    rel2 = PolyGF2(
        (i, pres.b - i) for i in range(pres.q + 1) if binom_mod2(pres.q, i)
    )
    return rel1, rel2


@lru_cache(maxsize=None)
def _reduce_monomial(a: int, b: int, q: int, i: int, j: int) -> frozenset:
    """Normal form of the single monomial x^i y^j, as a set of basis pairs.

    Reduction of a monomial is a deterministic linear map, so per-monomial
    results can be cached across all callers of the same presentation.
    """
    if i >= a:
        return frozenset()
    if j < b:
        return frozenset([(i, j)])
    acc: set = set()
    for t in range(1, q + 1):
        if binom_mod2(q, t):
            acc ^= _reduce_monomial(a, b, q, i + t, j - t)
    return frozenset(acc)


def normal_form(p: PolyGF2, pres: RingPresentation) -> RingElement:
    """Reduce a polynomial to the unique representative on the basis."""
    acc: set = set()
    for i, j in p.terms:
        acc ^= _reduce_monomial(pres.a, pres.b, pres.q, i, j)
    return RingElement(pres, frozenset(acc))


def element(p: PolyGF2, pres: RingPresentation) -> RingElement:
    """Alias of normal_form, reads better at call sites building elements."""
    return normal_form(p, pres)


def nonvanishing_check(pres: RingPresentation) -> tuple[bool, bool]:
    """Whether y^a and (x+y)^a are nonzero in the quotient.

    Both hold whenever 0 < q < b; the degenerate q in {0, b} cases can
    fail, which is what makes x recognizable among degree-1 elements.
    """
    a = pres.a
    y_a = normal_form(PolyGF2.monomial(0, a), pres)
    xy_a = normal_form(PolyGF2([(1, 0), (0, 1)]) ** a, pres)
    return bool(y_a), bool(xy_a)


def betti(pres: RingPresentation, d: int) -> int:
    """Dimension of the degree-d graded piece; independent of q."""
    return len(pres.basis(d))


def total_sw_class(pres: RingPresentation) -> RingElement:
    """Total Stiefel-Whitney class of the manifold, in normal form.

    Computed as (1+x)^a (1+y)^(b-q) (1+x+y)^q: the stable tangent bundle
    splits as Hom(eta, q*gamma + (b-q)*1) plus the pullback of the base
    tangent bundle, giving q line-bundle factors with w1 = x + y, b - q
    with w1 = y, and a base contribution (1+x)^a.  Cross-validated by the
    swap symmetry q <-> b - q in the test suite.
    """
    one_x = PolyGF2([(0, 0), (1, 0)])
    one_y = PolyGF2([(0, 0), (0, 1)])
    one_xy = PolyGF2([(0, 0), (1, 0), (0, 1)])
    w = one_x ** pres.a * one_y ** (pres.b - pres.q) * one_xy ** pres.q
    return normal_form(w, pres)
