"""Invariant inner products and the unitarity decision.

A module is unitary exactly when every canonical product on an interior
edge of its support is a negative real number.  Zero products are what cut
the support out of the ambient cone, so they are permitted (and required)
on edges crossing the support boundary, but a zero strictly inside means
the support is reducible and a positive or nonreal value anywhere kills
unitarity.

The sign of each product is carried by a polynomial in a single cone
coordinate with negative leading coefficient, so the verdict is certified
in closed form for the whole infinite support, not only below the
truncation bound; the finite scan up to max_n is replayed as well and
cross-checked against the certificate.

When the verdict is unitary, the inner product itself is constructed: the
squared norm of the lowest vector is 1, squared norms of the other lead
vectors follow by breadth-first recursion over the two upward edge types,
and the within-K-type norms are fixed by the compact su(2) conventions,
||v^k||^2 = ||v^1||^2 / C(n-1, k-1).  Every plaquette is reached along two
paths and both are compared on arrival, which turns gauge consistency into
a structural check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import real_form_basis
from .builder import BasisIndex, TruncatedModule, support_of
from .coefficients import (
    ConeParams,
    ModuleParams,
    VertexParams,
    products,
    transition_coeffs,
)
from .errors import InconsistentGauge, InvalidParameter
from .lattice import ConeCoord, KType, Region
from .scalars import (
    Scalar,
    SignClass,
    conjugate,
    imag_part,
    real_part,
    sign_class,
    simplify,
)


@dataclass(frozen=True)
class ProductWitness:
    ktype: KType
    coord: ConeCoord
    edge: str
    value: Scalar

    def to_json(self) -> dict:
        return {
            "ktype": [self.ktype.n, self.ktype.m],
            "coord": [self.coord.p, self.coord.q],
            "edge": self.edge,
            "value": str(self.value),
        }


@dataclass(frozen=True)
class UnitarityVerdict:
    status: str  # "unitary" | "nonunitary" | "boundary_reducible"
    witness: Optional[ProductWitness] = None

    @property
    def is_unitary(self) -> bool:
        return self.status == "unitary"

    def to_json(self) -> dict:
        doc = {"status": self.status}
        if self.witness is not None:
            doc["witness"] = self.witness.to_json()
        return doc


def su2_norms(n: int) -> list[Fraction]:
    """Squared norms inside one K-type, anchored at ||v^1||^2 = 1."""
    if n < 1:
        raise InvalidParameter(f"dimension must be >= 1, got {n}")
    return [Fraction(1, math.comb(n - 1, k - 1)) for k in range(1, n + 1)]


def _sign_poly(params: ModuleParams, edge: str) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients (a2, a1, a0) of the polynomial carrying the product sign.

    The product on an up-right edge at (p, q) is a positive rational times
    this polynomial evaluated at p (up-left edges: at q).  The leading
    coefficient is never positive, so the polynomial is eventually negative
    and its maximum over an integer range is attained near the vertex of
    the parabola (or at the left endpoint in the linear case).
    """
    if isinstance(params, ConeParams):
        c, t = real_part(params.c), params.t
        if edge == "up_right":
            return Fraction(-1), Fraction(-(t + 2)), 2 * c - t
        return Fraction(-1), Fraction(t - 2), 2 * c + t
    r, s = params.r, params.s
    if edge == "up_right":
        return Fraction(0), Fraction(-2), Fraction(-(s + r + 1))
    return Fraction(0), Fraction(-2), Fraction(s - r - 1)


def _max_on_range(poly, lo: int, hi: Optional[int]) -> Optional[tuple[int, Fraction]]:
    """Exact (argmax, max) of a concave quadratic or decreasing linear
    polynomial over the integers in [lo, hi]; None when the range is empty."""
    a2, a1, a0 = poly

    def val(x: int) -> Fraction:
        return a2 * x * x + a1 * x + a0

    if hi is not None and hi < lo:
        return None
    candidates = {lo}
    if hi is not None:
        candidates.add(hi)
    if a2 < 0:
        apex = -a1 / (2 * a2)
        for x in (math.floor(apex), math.ceil(apex)):
            if x >= lo and (hi is None or x <= hi):
                candidates.add(x)
    best = min(candidates)
    for x in candidates:
        if val(x) > val(best) or (val(x) == val(best) and x < best):
            best = x
    return best, val(best)


def is_unitary(
    params: ModuleParams,
    region: Optional[Region] = None,
    max_n: int = 30,
) -> UnitarityVerdict:
    """Decide unitarity of the module carried by a support region.

    The verdict covers the entire (generally infinite) support: the finite
    scan up to max_n yields concrete witnesses and the closed-form sign
    analysis extends the answer past the truncation.
    """
    if region is None:
        region = support_of(params)

    def witness(coord: ConeCoord, edge: str) -> ProductWitness:
        prod = products(params, coord)
        value = prod.up_right if edge == "up_right" else prod.up_left
        return ProductWitness(region.ktype_at(coord), coord, edge, value)

    if isinstance(params, ConeParams) and imag_part(params.c) != 0:
        return UnitarityVerdict("nonunitary", witness(ConeCoord(0, 0), "up_right"))

    for edge, bound, other_bound in (
        ("up_right", region.p_max, region.q_max),
        ("up_left", region.q_max, region.p_max),
    ):
        poly = _sign_poly(params, edge)
        # Interior edges run the bounded coordinate from 0 to bound-1.
        hi = None if bound is None else bound - 1
        peak = _max_on_range(poly, 0, hi)
        if peak is not None:
            arg, value = peak
            coord = ConeCoord(arg, 0) if edge == "up_right" else ConeCoord(0, arg)
            if value > 0:
                return UnitarityVerdict("nonunitary", witness(coord, edge))
            if value == 0:
                return UnitarityVerdict("boundary_reducible", witness(coord, edge))
        if bound is not None:
            # The wall edge itself must carry a vanishing product, otherwise
            # the region is not the support of a constituent.
            a2, a1, a0 = poly
            if a2 * bound * bound + a1 * bound + a0 != 0:
                coord = ConeCoord(bound, 0) if edge == "up_right" else ConeCoord(0, bound)
                return UnitarityVerdict("nonunitary", witness(coord, edge))

    # Finite replay: every interior product below the truncation must agree
    # with the certificate.
    for coord in region.coords(max_n):
        prod = products(params, coord)
        for edge, value, step in (
            ("up_right", prod.up_right, ConeCoord(coord.p + 1, coord.q)),
            ("up_left", prod.up_left, ConeCoord(coord.p, coord.q + 1)),
        ):
            if not region.contains_coord(step):
                continue
            if sign_class(value) is not SignClass.NEGATIVE_REAL:
                status = "boundary_reducible" if value == 0 else "nonunitary"
                return UnitarityVerdict(status, ProductWitness(region.ktype_at(coord), coord, edge, value))
    return UnitarityVerdict("unitary")


@dataclass
class NormTable:
    """Squared norms of the lead vectors v_{nm}^1, anchored at the vertex."""

    anchor: KType
    base: dict[KType, Fraction]

    def squared_norm(self, idx: BasisIndex) -> Fraction:
        return self.base[idx.ktype] / math.comb(idx.n - 1, idx.k - 1)

    def to_json(self) -> dict:
        return {
            "anchor": [self.anchor.n, self.anchor.m],
            "base": [
                [[kt.n, kt.m], str(value)]
                for kt, value in sorted(self.base.items())
            ],
        }


def build_norms(mod: TruncatedModule) -> NormTable:
    """Construct the invariant inner product on a unitary truncated module.

    Breadth-first from the vertex; each coordinate reachable along both an
    up-right and an up-left edge is computed twice and compared, raising
    InconsistentGauge on any mismatch.  Raises InvalidParameter when a
    recursion step produces a nonpositive or nonreal value, which happens
    exactly when the module is not unitary on this support.
    """
    params, region = mod.params, mod.region
    values: dict[ConeCoord, Fraction] = {ConeCoord(0, 0): Fraction(1)}
    for coord in region.coords(mod.max_n):
        if coord in values:
            continue
        candidates = []
        if coord.p >= 1:
            prev = ConeCoord(coord.p - 1, coord.q)
            if prev in values:
                here = transition_coeffs(params, region.ktype_at(coord))
                there = transition_coeffs(params, region.ktype_at(prev))
                ratio = simplify(-conjugate(here.down_left) / there.up_right)
                candidates.append(("up_right", simplify(ratio * values[prev])))
        if coord.q >= 1:
            prev = ConeCoord(coord.p, coord.q - 1)
            if prev in values:
                here = transition_coeffs(params, region.ktype_at(coord))
                there = transition_coeffs(params, region.ktype_at(prev))
                ratio = simplify(-here.down_right / conjugate(there.up_left))
                candidates.append(("up_left", simplify(ratio * values[prev])))
        if not candidates:
            raise InconsistentGauge(f"no path reaches {coord} inside the region")
        first = candidates[0][1]
        for _, other in candidates[1:]:
            if other != first:
                raise InconsistentGauge(
                    f"norm paths disagree at {region.ktype_at(coord)}: "
                    f"{first} vs {other}"
                )
        if imag_part(first) != 0 or real_part(first) <= 0:
            raise InvalidParameter(
                f"squared norm at {region.ktype_at(coord)} is {first}; "
                "the module is not unitary on this support"
            )
        values[coord] = real_part(first)
    base = {region.ktype_at(coord): value for coord, value in values.items()}
    return NormTable(region.vertex, base)


def check_adjoint(mod: TruncatedModule, norms: NormTable):
    """Verify skew-symmetry <C.u, w> + <u, C.w> = 0 for every real-form
    basis element C over all interior pairs, exactly.

    The inner product is diagonal on the basis, so only pairs connected by
    C can fail; iterating over the action targets of interior vectors
    covers them all.
    """
    from .verify import VerificationReport  # local import to avoid a cycle

    report = VerificationReport()
    interior = [idx for idx in mod.basis if mod.interior(idx, depth=1)]
    report.skipped_boundary = len(mod.basis) - len(interior)
    nsq = {idx: norms.squared_norm(idx) for idx in mod.basis}
    for name, elem in real_form_basis():
        images = {u: mod.apply(elem, {u: Fraction(1)}) for u in mod.basis}
        reverse: dict[BasisIndex, set] = {}
        for src, image in images.items():
            for tgt in image:
                reverse.setdefault(tgt, set()).add(src)
        for u in interior:
            candidates = set(images[u]) | reverse.get(u, set()) | {u}
            for w in sorted(candidates):
                if not mod.in_basis(w):
                    continue
                lhs = images[u].get(w, 0) * nsq[w]
                rhs = conjugate(images[w].get(u, 0)) * nsq[u]
                total = simplify(lhs + rhs)
                report.record(total == 0, f"adjoint_{name}", (u, w), total)
    return report
