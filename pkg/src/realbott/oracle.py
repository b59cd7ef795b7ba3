"""Brute-force decision of graded-ring isomorphism, with witnesses.

Both rings are generated in degree 1, so any graded unital isomorphism is
determined by a linear map on the span of {x, y}.  There are only 16
candidate substitutions; each is checked semantically: does it carry the
source relations into the target ideal, and is the induced map bijective
in every degree?  Non-invertible matrices are not excluded up front: for
degenerate presentations (a = 1 or b = 1) the generators are dependent in
the quotient, and a singular substitution can still induce an isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cohomology import RingPresentation, betti, normal_form, relation_polys
from .gf2poly import (
    COMPLEMENT_SUBSTITUTION,
    IDENTITY_SUBSTITUTION,
    SWAP_SUBSTITUTION,
    LinearSubstitution,
    PolyGF2,
    binom_mod2,
    substitute_linear,
)

__all__ = [
    "LinearSubstitution",
    "IDENTITY_SUBSTITUTION",
    "SWAP_SUBSTITUTION",
    "COMPLEMENT_SUBSTITUTION",
    "IsoVerdict",
    "enumerate_substitutions",
    "induces_homomorphism",
    "is_graded_isomorphism",
    "rings_isomorphic_bruteforce",
]


@dataclass(frozen=True)
class IsoVerdict:
    """Result of an isomorphism search; witness present iff isomorphic."""

    isomorphic: bool
    witness: Optional[LinearSubstitution] = None

    def __post_init__(self):
        if self.isomorphic != (self.witness is not None):
            raise ValueError("witness must be present exactly when isomorphic")


def enumerate_substitutions() -> list[LinearSubstitution]:
    """All 16 maps sending x, y to linear forms in {0, x, y, x+y}."""
    forms = [(0, 0), (0, 1), (1, 0), (1, 1)]
    return [LinearSubstitution(fx, fy) for fx in forms for fy in forms]


def _check_same_shape(src: RingPresentation, dst: RingPresentation) -> None:
    if (src.a, src.b) != (dst.a, dst.b):
        raise ValueError(
            f"comparison requires equal (a, b): got ({src.a}, {src.b}) "
            f"vs ({dst.a}, {dst.b})"
        )


def induces_homomorphism(
    subst: LinearSubstitution, src: RingPresentation, dst: RingPresentation
) -> bool:
    """True iff both source relations land in the target ideal."""
    _check_same_shape(src, dst)
    return all(
        not normal_form(substitute_linear(rel, subst), dst)
        for rel in relation_polys(src)
    )


def _linear_form_power(coeffs: tuple[int, int], n: int) -> PolyGF2:
    """(cx*x + cy*y)^n expanded, without generic polynomial products."""
    cx, cy = coeffs
    if cx and cy:
        return PolyGF2((t, n - t) for t in range(n + 1) if binom_mod2(n, t))
    if cx:
        return PolyGF2.monomial(n, 0)
    if cy:
        return PolyGF2.monomial(0, n)
    return PolyGF2.one() if n == 0 else PolyGF2.zero()


def _rank_bits(rows: list[int]) -> int:
    """Rank over GF(2) of rows given as bitmasks (xor elimination)."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            if lead in pivots:
                row ^= pivots[lead]
            else:
                pivots[lead] = row
                rank += 1
                break
    return rank


def is_graded_isomorphism(
    subst: LinearSubstitution, src: RingPresentation, dst: RingPresentation
) -> bool:
    """True iff the substitution induces a bijective graded ring map.

    Checks the homomorphism condition first, then, degree by degree, that
    the images of the source basis monomials span the full target graded
    piece.  Equal Hilbert functions make full rank in every degree
    equivalent to bijectivity, but the rank is still computed rather than
    assumed.
    """
    _check_same_shape(src, dst)
    if not induces_homomorphism(subst, src, dst):
        return False
    xpows = [_linear_form_power(subst.x_image, i) for i in range(src.a)]
    ypows = [_linear_form_power(subst.y_image, j) for j in range(src.b)]
    for d in range(src.top_degree + 1):
        dim = betti(dst, d)
        index = {mono: pos for pos, mono in enumerate(dst.basis(d))}
        rows = []
        for i, j in src.basis(d):
            image = normal_form(xpows[i] * ypows[j], dst)
            rows.append(sum(1 << index[mono] for mono in image.coeffs))
        if _rank_bits(rows) != dim:
            return False
    return True


def rings_isomorphic_bruteforce(
    src: RingPresentation, dst: RingPresentation
) -> IsoVerdict:
    """Try all 16 substitutions; return the first working witness, if any."""
    _check_same_shape(src, dst)
    for subst in enumerate_substitutions():
        if is_graded_isomorphism(subst, src, dst):
            return IsoVerdict(True, subst)
    return IsoVerdict(False)
