"""K-type bookkeeping: labels, cone coordinates and support regions.

A K-type V_{nm} is an irreducible K-module of dimension n on which the
center element Z acts by the integer m; n + m is always odd.  The K-types
of one of our modules sit on a shifted cone: starting from a lowest K-type
(the vertex), p steps in the up-right direction (n+1, m+3) and q steps in
the up-left direction (n+1, m-3) reach V_{n0+p+q, m0+3p-3q}.

A support region is such a cone with optional walls bounding p and/or q.
Every constituent support that occurs (full cones, strips, rays, boxes and
single points) is an instance of this one shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import InvalidParameter


@dataclass(frozen=True, order=True)
class KType:
    """Label of an irreducible K-module: dimension n, center eigenvalue m."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameter(f"K-type dimension must be >= 1, got {self.n}")
        if (self.n + self.m) % 2 == 0:
            raise InvalidParameter(f"n + m must be odd, got ({self.n}, {self.m})")

    def __repr__(self):
        return f"KType({self.n}, {self.m})"


@dataclass(frozen=True, order=True)
class ConeCoord:
    """Steps from a cone vertex: p up-right moves, q up-left moves."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise InvalidParameter(f"cone coordinates must be nonnegative, got {self}")


class Neighbors(NamedTuple):
    """The four K-types reachable by one algebra action; None when n-1 = 0."""

    up_right: KType
    up_left: KType
    down_right: Optional[KType]
    down_left: Optional[KType]


def neighbors(v: KType) -> Neighbors:
    down_right = KType(v.n - 1, v.m + 3) if v.n > 1 else None
    down_left = KType(v.n - 1, v.m - 3) if v.n > 1 else None
    return Neighbors(KType(v.n + 1, v.m + 3), KType(v.n + 1, v.m - 3), down_right, down_left)


def to_ktype(t: int, coord: ConeCoord) -> KType:
    """K-type at (p, q) in the cone whose vertex is V_{1, 2t}."""
    return KType(1 + coord.p + coord.q, 2 * t + 3 * coord.p - 3 * coord.q)


def from_ktype(t: int, v: KType) -> Optional[ConeCoord]:
    """Inverse of to_ktype; None when v is not on the vertex-(1, 2t) cone."""
    diff = v.m - 2 * t
    if diff % 3 != 0:
        return None
    d, e = v.n - 1, diff // 3
    if (d + e) % 2 != 0:
        return None
    p, q = (d + e) // 2, (d - e) // 2
    if p < 0 or q < 0:
        return None
    return ConeCoord(p, q)


_UNBOUNDED = None


@dataclass(frozen=True)
class Region:
    """A support region: a vertex K-type with optional p and q walls.

    p_max / q_max are inclusive upper bounds; None means unbounded.
    """

    vertex: KType
    p_max: Optional[int] = _UNBOUNDED
    q_max: Optional[int] = _UNBOUNDED

    def __post_init__(self):
        for bound in (self.p_max, self.q_max):
            if bound is not None and bound < 0:
                raise InvalidParameter(f"region bound must be nonnegative, got {bound}")

    # -- constructors for the named shapes --------------------------------

    @classmethod
    def full_cone(cls, t: int) -> "Region":
        return cls(KType(1, 2 * t))

    @classmethod
    def strip_q(cls, t: int, l: int) -> "Region":
        return cls(KType(1, 2 * t), q_max=l)

    @classmethod
    def strip_p(cls, t: int, l: int) -> "Region":
        return cls(KType(1, 2 * t), p_max=l)

    @classmethod
    def vertex_cone(cls, r: int, s: int) -> "Region":
        if r <= 1:
            raise InvalidParameter(f"vertex cone needs r > 1, got {r}")
        return cls(KType(r, s))

    @classmethod
    def ray_pos(cls, s: int) -> "Region":
        if s < 2:
            raise InvalidParameter(f"positive ray needs s >= 2, got {s}")
        return cls(KType(s - 1, s), q_max=0)

    @classmethod
    def ray_neg(cls, s: int) -> "Region":
        if s > -2:
            raise InvalidParameter(f"negative ray needs s <= -2, got {s}")
        return cls(KType(-s - 1, s), p_max=0)

    @classmethod
    def point(cls, m: int) -> "Region":
        return cls(KType(1, m), p_max=0, q_max=0)

    # -- shape vocabulary --------------------------------------------------

    @property
    def kind(self) -> str:
        n0 = self.vertex.n
        p_free = self.p_max is None
        q_free = self.q_max is None
        if self.p_max == 0 and self.q_max == 0:
            return "point"
        if p_free and q_free:
            return "full_cone" if n0 == 1 else "vertex_cone"
        if not p_free and not q_free:
            return "box"
        if n0 == 1:
            return "strip_q" if p_free else "strip_p"
        if q_free:
            return "ray_neg" if self.p_max == 0 else "vertex_strip_p"
        return "ray_pos" if self.q_max == 0 else "vertex_strip_q"

    # -- geometry ----------------------------------------------------------

    def ktype_at(self, coord: ConeCoord) -> KType:
        return KType(
            self.vertex.n + coord.p + coord.q,
            self.vertex.m + 3 * coord.p - 3 * coord.q,
        )

    def coord_of(self, v: KType) -> Optional[ConeCoord]:
        """Region coordinates of v, or None when v lies outside the region."""
        diff = v.m - self.vertex.m
        if diff % 3 != 0:
            return None
        d, e = v.n - self.vertex.n, diff // 3
        if (d + e) % 2 != 0:
            return None
        p, q = (d + e) // 2, (d - e) // 2
        if p < 0 or q < 0:
            return None
        if self.p_max is not None and p > self.p_max:
            return None
        if self.q_max is not None and q > self.q_max:
            return None
        return ConeCoord(p, q)

    def contains(self, v: KType) -> bool:
        return self.coord_of(v) is not None

    def contains_coord(self, coord: ConeCoord) -> bool:
        if self.p_max is not None and coord.p > self.p_max:
            return False
        if self.q_max is not None and coord.q > self.q_max:
            return False
        return True

    def coords(self, max_n: int):
        """All region coordinates whose K-type has dimension <= max_n."""
        for depth in range(0, max_n - self.vertex.n + 1):
            p_hi = depth if self.p_max is None else min(depth, self.p_max)
            for p in range(p_hi + 1):
                q = depth - p
                if self.q_max is not None and q > self.q_max:
                    continue
                yield ConeCoord(p, q)

    def members(self, max_n: int) -> list[KType]:
        """All region K-types with n <= max_n, sorted by (n, m)."""
        if max_n < 1:
            raise InvalidParameter(f"max_n must be >= 1, got {max_n}")
        return sorted(self.ktype_at(c) for c in self.coords(max_n))

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        kind = self.kind
        v = self.vertex
        if kind == "full_cone":
            params = {"t": v.m // 2}
        elif kind == "strip_q":
            params = {"t": v.m // 2, "l": self.q_max}
        elif kind == "strip_p":
            params = {"t": v.m // 2, "l": self.p_max}
        elif kind == "vertex_cone":
            params = {"r": v.n, "s": v.m}
        elif kind == "ray_pos":
            params = {"s": v.m}
        elif kind == "ray_neg":
            params = {"s": v.m}
        elif kind == "point":
            params = {"m": v.m}
        else:
            params = {
                "vertex": [v.n, v.m],
                "p_max": self.p_max,
                "q_max": self.q_max,
            }
        return {"kind": kind, "params": params}

    @classmethod
    def from_json(cls, obj: dict) -> "Region":
        kind, params = obj["kind"], obj["params"]
        if kind == "full_cone":
            return cls.full_cone(params["t"])
        if kind == "strip_q":
            return cls.strip_q(params["t"], params["l"])
        if kind == "strip_p":
            return cls.strip_p(params["t"], params["l"])
        if kind == "vertex_cone":
            return cls.vertex_cone(params["r"], params["s"])
        if kind == "ray_pos":
            return cls.ray_pos(params["s"])
        if kind == "ray_neg":
            return cls.ray_neg(params["s"])
        if kind == "point":
            return cls.point(params["m"])
        n, m = params["vertex"]
        return cls(KType(n, m), p_max=params["p_max"], q_max=params["q_max"])
