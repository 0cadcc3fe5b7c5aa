"""The irreducible unitary families and their parameter thresholds.

Cone modules V(c, 2t) are unitary exactly for real c below a threshold
c(t); at the threshold and at finitely many special values c(l, t) the
module is reducible and the constituent of the lowest K-type is a strip
U(l, 2t) (degenerating to the point U(0) at t = 0 and the rays U(2), U(-2)
at t = 1, -1).  Vertex modules W(r, s) are unitary inside the wedge
s + r + 1 > 0 > s - r - 1; on the two wedge walls the constituent is a ray
Z(s).  These families exhaust the unitary dual.

Threshold values:

    c(0) = 0,  c(2k) = -(k^2+1)/2,  c(2k+1) = -(k^2+k+1)/2,  c(-t) = c(t)
    c(l, 2k)   = (l^2 - 2(k-1)l - 2k) / 2
    c(l, 2k+1) = (l^2 - (2k-1)l - 2k - 1) / 2        l in {0, ..., k-1}

For every |t| >= 2 the top special value coincides with the threshold:
c(t) = c(floor(|t|/2) - 1, t), so the constituent at c = c(t) is the
widest strip.  Records carry a note whenever that coincidence is used.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .builder import support_of
from .coefficients import ConeParams, ModuleParams, VertexParams
from .errors import InvalidParameter
from .lattice import Region
from .scalars import (
    Scalar,
    imag_part,
    parse_scalar,
    real_part,
    render_scalar,
    simplify,
)
from .unitarity import ProductWitness, is_unitary


def c_threshold(t: int) -> Fraction:
    """Upper unitarity threshold for the cone family at parameter t."""
    t = abs(t)
    if t == 0:
        return Fraction(0)
    k, rem = divmod(t, 2)
    if rem == 0:
        return Fraction(-(k * k + 1), 2)
    return Fraction(-(k * k + k + 1), 2)


def c_special(l: int, t: int) -> Fraction:
    """The l-th special value below which the strip U(l, 2t) appears."""
    ta = abs(t)
    if ta < 2:
        raise InvalidParameter(f"special values need |t| >= 2, got t={t}")
    k, rem = divmod(ta, 2)
    if not 0 <= l <= k - 1:
        raise InvalidParameter(f"l must lie in 0..{k - 1} for t={t}, got l={l}")
    if rem == 0:
        return Fraction(l * l - 2 * (k - 1) * l - 2 * k, 2)
    return Fraction(l * l - (2 * k - 1) * l - 2 * k - 1, 2)


@dataclass(frozen=True)
class ClassificationRecord:
    label: str
    support: Region
    unitary: bool
    params: Optional[ModuleParams] = None
    notes: tuple[str, ...] = ()
    witness: Optional[ProductWitness] = None

    def to_json(self) -> dict:
        doc = {
            "label": self.label,
            "support": self.support.to_json(),
            "unitary": self.unitary,
            "notes": list(self.notes),
        }
        if self.witness is not None:
            doc["witness"] = self.witness.to_json()
        return doc


def _strip_region(t: int, l: int) -> Region:
    return Region.strip_q(t, l) if t > 0 else Region.strip_p(t, l)


def _u_label(l: int, t: int) -> str:
    return f"U(l={l},2t={2 * t})"


def _v_label(c: Scalar, t: int) -> str:
    return f"V(c={render_scalar(c)},2t={2 * t})"


def classify(point: ModuleParams) -> ClassificationRecord:
    """Assign the family of the constituent containing the lowest K-type."""
    if isinstance(point, VertexParams):
        return _classify_vertex(point)
    return _classify_cone(point)


def _classify_vertex(point: VertexParams) -> ClassificationRecord:
    r, s = point.r, point.s
    lo, hi = s + r + 1, s - r - 1
    if lo > 0 and hi < 0:
        return ClassificationRecord(
            label=f"W({r},{s})",
            support=Region.vertex_cone(r, s),
            unitary=True,
            params=point,
            notes=(f"wedge: s+r+1={lo} > 0 and s-r-1={hi} < 0",),
        )
    if lo == 0:
        return ClassificationRecord(
            label=f"Z({s})",
            support=Region.ray_neg(s),
            unitary=True,
            params=point,
            notes=("wall s+r+1=0: ray constituent of the lowest K-type",),
        )
    if hi == 0:
        return ClassificationRecord(
            label=f"Z({s})",
            support=Region.ray_pos(s),
            unitary=True,
            params=point,
            notes=("wall s-r-1=0: ray constituent of the lowest K-type",),
        )
    verdict = is_unitary(point)
    return ClassificationRecord(
        label=f"W({r},{s})",
        support=support_of(point),
        unitary=False,
        params=point,
        notes=("outside the unitary wedge",),
        witness=verdict.witness,
    )


def _classify_cone(point: ConeParams) -> ClassificationRecord:
    c, t = simplify(point.c), point.t
    support = support_of(point)
    if imag_part(c) != 0:
        return ClassificationRecord(
            label=_v_label(c, t),
            support=support,
            unitary=False,
            params=point,
            notes=("nonreal parameter: products are nonreal",),
        )
    c = real_part(c)
    ct = c_threshold(t)
    if c < ct:
        return ClassificationRecord(
            label=_v_label(c, t),
            support=support,
            unitary=True,
            params=point,
            notes=(f"c below threshold c({t})={render_scalar(ct)}",),
        )
    if c == ct:
        if t == 0:
            return ClassificationRecord(
                label="U(0)",
                support=Region.point(0),
                unitary=True,
                params=point,
                notes=("threshold c(0)=0: one-dimensional constituent",),
            )
        if abs(t) == 1:
            label = "U(2)" if t == 1 else "U(-2)"
            return ClassificationRecord(
                label=label,
                support=_strip_region(t, 0),
                unitary=True,
                params=point,
                notes=(f"threshold c({t})={render_scalar(ct)}: ray constituent",),
            )
        l_top = abs(t) // 2 - 1
        return ClassificationRecord(
            label=_u_label(l_top, t),
            support=_strip_region(t, l_top),
            unitary=True,
            params=point,
            notes=(
                f"threshold c({t})={render_scalar(ct)} coincides with the "
                f"special value c(l={l_top},t={t})",
            ),
        )
    if abs(t) >= 2:
        for l in range(abs(t) // 2):
            if c == c_special(l, t):
                return ClassificationRecord(
                    label=_u_label(l, t),
                    support=_strip_region(t, l),
                    unitary=True,
                    params=point,
                    notes=(f"special value c(l={l},t={t})={render_scalar(c)}",),
                )
    verdict = is_unitary(point, support)
    return ClassificationRecord(
        label=_v_label(c, t),
        support=support,
        unitary=False,
        params=point,
        notes=(f"c above threshold c({t})={render_scalar(ct)}",),
        witness=verdict.witness,
    )


def embed_W(r: int, s: int) -> tuple[ConeParams, ConeParams]:
    """The two cone modules containing W(r, s) as a constituent."""
    VertexParams(r, s)  # validate r > 1 and r + s odd
    c1 = Fraction((r - 1) * (-r + 1 + s) - 2, 4)
    c2 = Fraction((r - 1) * (-r + 1 - s) - 2, 4)
    two_t1 = -3 * r + 3 + s
    two_t2 = 3 * r - 3 + s
    return ConeParams(c1, two_t1 // 2), ConeParams(c2, two_t2 // 2)


def enumerate_dual(t_max: int, r_max: int) -> list[ClassificationRecord]:
    """Members of the unitary dual within the given parameter bounds.

    Continuous cone families enter as one interval descriptor per t, with a
    representative parameter attached; all discrete families are listed
    member by member.  Z(2) and Z(-2) coincide with U(2) and U(-2) as
    supports but are kept as separate labels.
    """
    if t_max < 0 or r_max < 0:
        raise InvalidParameter("bounds must be nonnegative")
    records: list[ClassificationRecord] = []
    for t in range(-t_max, t_max + 1):
        ct = c_threshold(t)
        records.append(
            ClassificationRecord(
                label=f"V(c<{render_scalar(ct)},2t={2 * t})",
                support=Region.full_cone(t),
                unitary=True,
                params=ConeParams(ct - 1, t),
                notes=(
                    f"continuous family: any c in (-inf,{render_scalar(ct)}); "
                    "representative c attached",
                ),
            )
        )
    records.append(classify(ConeParams(Fraction(0), 0)))
    if t_max >= 1:
        records.append(classify(ConeParams(Fraction(-1, 2), 1)))
        records.append(classify(ConeParams(Fraction(-1, 2), -1)))
    for t in [t for t in range(-t_max, t_max + 1) if abs(t) >= 2]:
        for l in range(abs(t) // 2):
            records.append(classify(ConeParams(c_special(l, t), t)))
    for r in range(2, r_max + 1):
        for s in range(-r + 1, r):
            if (r + s) % 2 == 1:
                records.append(classify(VertexParams(r, s)))
    for s_abs in range(2, r_max + 2):
        for s in (s_abs, -s_abs):
            if s_abs == 2:
                t = 1 if s > 0 else -1
                records.append(
                    ClassificationRecord(
                        label=f"Z({s})",
                        support=_strip_region(t, 0),
                        unitary=True,
                        params=ConeParams(Fraction(-1, 2), t),
                        notes=(
                            f"degenerate ray: coincides with U({s}) "
                            "(vertex dimension 1)",
                        ),
                    )
                )
            else:
                records.append(classify(VertexParams(s_abs - 1, s)))
    labels = [rec.label for rec in records]
    if len(labels) != len(set(labels)):
        raise InvalidParameter("enumeration produced duplicate labels")
    return records


_V_POINT_RE = re.compile(r"V\(c=([^,]+),2t=(-?\d+)\)")
_V_RANGE_RE = re.compile(r"V\(c<([^,]+),2t=(-?\d+)\)")
_U_RE = re.compile(r"U\(l=(\d+),2t=(-?\d+)\)")
_U_SMALL_RE = re.compile(r"U\((0|2|-2)\)")
_W_RE = re.compile(r"W\((-?\d+),(-?\d+)\)")
_Z_RE = re.compile(r"Z\((-?\d+)\)")


def parse_label(label: str) -> ModuleParams:
    """Parameters of the module a family label denotes.

    Interval labels V(c<...) map to the attached representative parameter;
    the degenerate rays Z(2) and Z(-2) map to their cone parameters.
    """
    label = label.strip().replace("−", "-")
    if m := _V_POINT_RE.fullmatch(label):
        two_t = int(m.group(2))
        return ConeParams(parse_scalar(m.group(1)), _half(two_t))
    if m := _V_RANGE_RE.fullmatch(label):
        two_t = int(m.group(2))
        t = _half(two_t)
        return ConeParams(c_threshold(t) - 1, t)
    if m := _U_SMALL_RE.fullmatch(label):
        val = int(m.group(1))
        if val == 0:
            return ConeParams(Fraction(0), 0)
        return ConeParams(Fraction(-1, 2), val // 2)
    if m := _U_RE.fullmatch(label):
        l, two_t = int(m.group(1)), int(m.group(2))
        t = _half(two_t)
        return ConeParams(c_special(l, t), t)
    if m := _W_RE.fullmatch(label):
        return VertexParams(int(m.group(1)), int(m.group(2)))
    if m := _Z_RE.fullmatch(label):
        s = int(m.group(1))
        if abs(s) < 2:
            raise InvalidParameter(f"no Z family at s={s}")
        if abs(s) == 2:
            return ConeParams(Fraction(-1, 2), s // 2)
        return VertexParams(abs(s) - 1, s)
    raise InvalidParameter(f"unrecognized family label: {label!r}")


def _half(two_t: int) -> int:
    if two_t % 2 != 0:
        raise InvalidParameter(f"2t must be even, got {two_t}")
    return two_t // 2
