"""Isomorphism decisions via the restricted algebraic Kirchberg-Phillips
criterion.

For purely infinite simple unital Leavitt path algebras of finite
graphs, a pointed isomorphism of K0 groups together with determinant
signs of I - A^t that are not strictly opposite forces an algebra
isomorphism.  Pointed K0 is a complete obstruction in the other
direction, so the decision procedure is three-valued: Isomorphic,
NotIsomorphic, or Unknown (plus NotApplicable when either algebra fails
purely infinite simplicity).  Cyclic K0 with negative determinant pins
the algebra down to a matrix algebra over a classical Leavitt algebra
L(1, n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Optional

from .graphs import Graph, pis_report
from .intlinalg import det_exact
from .ktheory import b_matrix, cokernel_pointed, pointed_iso_exists

__all__ = [
    "KPVerdict",
    "CanonicalAlgebra",
    "CayleyClass",
    "sign_of",
    "det_sign",
    "kp_decide",
    "canonical_form",
    "cayley_class",
    "EXIT_CODES",
]

Sign = Literal["NEGATIVE", "ZERO", "POSITIVE"]
Outcome = Literal["Isomorphic", "NotIsomorphic", "Unknown", "NotApplicable"]

EXIT_CODES: dict[str, int] = {
    "Isomorphic": 0,
    "NotIsomorphic": 3,
    "Unknown": 4,
    "NotApplicable": 5,
}


@dataclass(frozen=True)
class KPVerdict:
    """Outcome plus the ordered trace of checks that produced it."""

    outcome: Outcome
    trace: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class CanonicalAlgebra:
    """M_d(L(1, n)): d x d matrices over the Leavitt algebra L(1, n).

    d is normalised into 1..n-1 (a distinguished element of 0 in
    Z/(n-1)Z renders as d = n-1); d = 1 is plain L(1, n).
    """

    n: int
    d: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("Leavitt index n must be at least 2")
        if not 1 <= self.d <= self.n - 1:
            raise ValueError("matrix size d must be normalised into 1..n-1")

    @property
    def label(self) -> str:
        if self.d == 1:
            return f"L(1,{self.n})"
        return f"M_{self.d}(L(1,{self.n}))"


@dataclass(frozen=True)
class CayleyClass:
    """Isomorphism class of the cyclic-Cayley-graph algebras for one
    residue pattern mod 6."""

    class_id: Literal["TRIVIAL_K0", "Z3", "KLEIN4", "ZxZ"]
    residues: tuple[int, ...]
    canonical: Optional[CanonicalAlgebra]


def sign_of(value: int) -> Sign:
    if value < 0:
        return "NEGATIVE"
    if value > 0:
        return "POSITIVE"
    return "ZERO"


def det_sign(g: Graph) -> Sign:
    """Sign of det(I - A^t)."""
    return sign_of(det_exact(b_matrix(g)))


def _signs_compatible(a: Sign, b: Sign) -> bool:
    # "Both nonnegative or both nonpositive": zero is compatible with either.
    return not ({a, b} == {"NEGATIVE", "POSITIVE"})


def kp_decide(e: Graph, f: Graph) -> KPVerdict:
    """Three-valued isomorphism decision for a pair of graphs.

    NotApplicable unless both algebras are purely infinite simple.
    NotIsomorphic when pointed K0 data obstructs.  With a pointed
    isomorphism in hand, compatible determinant signs give Isomorphic;
    strictly opposite signs (where the restricted criterion is silent)
    give Unknown, as does an undecided pointed comparison.
    """
    trace: list[tuple[str, str]] = []
    pis_e = pis_report(e).purely_infinite_simple
    pis_f = pis_report(f).purely_infinite_simple
    trace.append(("pis_first", str(pis_e)))
    trace.append(("pis_second", str(pis_f)))
    if not (pis_e and pis_f):
        return KPVerdict("NotApplicable", tuple(trace))

    k0_e = cokernel_pointed(e)
    k0_f = cokernel_pointed(f)
    trace.append(("k0_factors_first", str(list(k0_e.group.factors))))
    trace.append(("k0_factors_second", str(list(k0_f.group.factors))))
    if k0_e.group.factors != k0_f.group.factors:
        trace.append(("k0_factors_equal", "False"))
        return KPVerdict("NotIsomorphic", tuple(trace))
    trace.append(("k0_factors_equal", "True"))

    pointed = pointed_iso_exists(
        k0_e.group, k0_e.distinguished, k0_f.group, k0_f.distinguished
    )
    trace.append(("pointed_iso", pointed))
    if pointed == "NO":
        return KPVerdict("NotIsomorphic", tuple(trace))
    if pointed == "UNSUPPORTED":
        return KPVerdict("Unknown", tuple(trace))

    sign_e = det_sign(e)
    sign_f = det_sign(f)
    trace.append(("det_sign_first", sign_e))
    trace.append(("det_sign_second", sign_f))
    compatible = _signs_compatible(sign_e, sign_f)
    trace.append(("det_signs_compatible", str(compatible)))
    if compatible:
        return KPVerdict("Isomorphic", tuple(trace))
    return KPVerdict("Unknown", tuple(trace))


def canonical_form(g: Graph) -> Optional[CanonicalAlgebra]:
    """Recognise the algebra as M_d(L(1, n)) when the criterion applies.

    Needs purely infinite simple, finite cyclic K0 of order n-1 (the
    trivial group counting as cyclic of order 1 with n = 2), and a
    negative determinant; d is then the distinguished element mod n-1,
    rendered as n-1 when it is 0.  A cyclic generator is only canonical
    up to units, so d is reduced to its unit-orbit representative
    gcd(d, n-1), making the label independent of the generator the
    Smith normal form happened to pick.
    """
    if not pis_report(g).purely_infinite_simple:
        return None
    k0 = cokernel_pointed(g)
    factors = k0.group.factors
    if factors == ():
        order = 1
    elif len(factors) == 1 and factors[0] > 0:
        order = factors[0]
    else:
        return None
    if det_sign(g) != "NEGATIVE":
        return None
    n = order + 1
    residue = k0.distinguished.coords[0] % order if order > 1 else 0
    d = order if residue == 0 else math.gcd(residue, order)
    return CanonicalAlgebra(n=n, d=d)


def cayley_class(n: int) -> CayleyClass:
    """The residue of n mod 6 determines the algebra of the Cayley graph.

    {1,5}: trivial K0, the algebra is L(1,2).  {2,4}: K0 = Z/3, the
    algebra is M_3(L(1,4)).  {3}: K0 = Z/2 x Z/2.  {0}: K0 = Z x Z.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    residue = n % 6
    if residue in (1, 5):
        return CayleyClass("TRIVIAL_K0", (1, 5), CanonicalAlgebra(2, 1))
    if residue in (2, 4):
        return CayleyClass("Z3", (2, 4), CanonicalAlgebra(4, 3))
    if residue == 3:
        return CayleyClass("KLEIN4", (3,), None)
    return CayleyClass("ZxZ", (0,), None)
