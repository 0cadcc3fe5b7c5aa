"""Materialization of truncated modules.

A truncated module holds a basis v_{nm}^k, 1 <= k <= n, for every K-type
of a support region with n <= max_n, together with the sparse action of all
nine generators.  Within a K-type the su(2)-triple acts by the fixed
conventions

    H_alpha . v^k = (n + 1 - 2k) v^k
    X_alpha . v^k = -(k - 1) v^{k-1}
    Y_alpha . v^k = -(n - k) v^{k+1}

with v^0 = v^{n+1} = 0, and Z acts by m.  The four remaining generators
move between K-types with the transition coefficients of the canonical
gauge; the k-dependent fractions (k-1)/(n-1) and (n-k)/(n-1) vanish
exactly where the target index would leave the 1..n range, and the n = 1
rows simply omit the downward terms.

Action targets one dimension above max_n are stored exactly and flagged as
truncated; relation checks only ever run on interior vectors.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, NamedTuple, Optional

from .algebra import AlgebraElement, Generator
from .coefficients import (
    ConeParams,
    ModuleParams,
    VertexParams,
    transition_coeffs,
)
from .errors import EmptyTruncation, InvalidBasisIndex, InvalidParameter
from .lattice import KType, Region
from .scalars import (
    GaussianRational,
    Scalar,
    imag_part,
    parse_rational,
    real_part,
    render_rational,
    scalar_from_json,
    scalar_to_json,
)


class BasisIndex(NamedTuple):
    n: int
    m: int
    k: int

    @property
    def ktype(self) -> KType:
        return KType(self.n, self.m)


Vector = dict[BasisIndex, Scalar]


def _exact_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    pn, pd = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if pn * pn == x.numerator and pd * pd == x.denominator:
        return Fraction(pn, pd)
    return None


def _smallest_root_at_least(a2: Fraction, a1: Fraction, a0: Fraction, lo: int) -> Optional[int]:
    """Smallest integer x >= lo with a2 x^2 + a1 x + a0 = 0, if any."""
    if a2 == 0:
        if a1 == 0:
            return None
        x = -a0 / a1
        return int(x) if x.denominator == 1 and x >= lo else None
    disc = a1 * a1 - 4 * a2 * a0
    root = _exact_sqrt(disc)
    if root is None:
        return None
    hits = []
    for sign in (-1, 1):
        x = (-a1 + sign * root) / (2 * a2)
        if x.denominator == 1 and x >= lo:
            hits.append(int(x))
    return min(hits) if hits else None


def support_of(params: ModuleParams) -> Region:
    """Support of the constituent containing the lowest K-type.

    The walls are the zero sets of the closed-form products: a vanishing
    up-right product at column p blocks every edge out of that column, and
    likewise for up-left products and rows.  Both zero sets depend on a
    single coordinate, so wall detection is exact and needs no truncation.
    """
    if isinstance(params, ConeParams):
        if imag_part(params.c) != 0:
            return Region.full_cone(params.t)
        c, t = real_part(params.c), params.t
        # up_right sign factor: 2c - (p+1)t - p(p+2); up_left: mirror in q.
        p_wall = _smallest_root_at_least(
            Fraction(-1), Fraction(-(t + 2)), 2 * c - t, 0
        )
        q_wall = _smallest_root_at_least(
            Fraction(-1), Fraction(t - 2), 2 * c + t, 0
        )
        return Region(params.vertex, p_max=p_wall, q_max=q_wall)
    r, s = params.r, params.s
    # up_right sign factor: -(2p + s + r + 1); up_left: s - r - 1 - 2q.
    p_wall = _smallest_root_at_least(Fraction(0), Fraction(-2), Fraction(-(s + r + 1)), 0)
    q_wall = _smallest_root_at_least(Fraction(0), Fraction(-2), Fraction(s - r - 1), 0)
    return Region(params.vertex, p_max=p_wall, q_max=q_wall)


_GENERATORS = tuple(Generator)


@dataclass
class TruncatedModule:
    """A finite slice of a module: basis indices plus sparse generator action."""

    params: ModuleParams
    max_n: int
    region: Region
    basis: tuple[BasisIndex, ...]
    rows: dict[Generator, dict[BasisIndex, tuple[tuple[BasisIndex, Scalar], ...]]]
    _basis_set: frozenset = field(repr=False, default=frozenset())

    def __post_init__(self):
        if not self._basis_set:
            self._basis_set = frozenset(self.basis)

    # -- queries -----------------------------------------------------------

    def in_basis(self, idx: BasisIndex) -> bool:
        return idx in self._basis_set

    def is_truncated_target(self, idx: BasisIndex) -> bool:
        return idx.n > self.max_n

    def interior(self, idx: BasisIndex, depth: int = 2) -> bool:
        """True when `depth` successive actions from idx stay below max_n."""
        return idx.n + depth <= self.max_n

    def action_row(self, gen: Generator, idx: BasisIndex):
        if idx not in self._basis_set:
            raise InvalidBasisIndex(f"{idx} is not a basis index of this module")
        return self.rows[gen].get(idx, ())

    def apply(self, x, vec: Mapping[BasisIndex, Scalar]) -> Vector:
        """Linear extension of the generator action to combinations.

        x may be a Generator or an AlgebraElement.  The result may contain
        indices one layer above max_n; those are flagged by
        is_truncated_target and cannot be acted on again.
        """
        if isinstance(x, Generator):
            x = AlgebraElement.from_generator(x)
        acc: Vector = {}
        for gen, gcoeff in x.terms.items():
            rows = self.rows[gen]
            for idx, coeff in vec.items():
                if idx not in self._basis_set:
                    raise InvalidBasisIndex(f"{idx} is not a basis index of this module")
                scale = gcoeff * coeff
                for tgt, val in rows.get(idx, ()):
                    new = acc.get(tgt, 0) + scale * val
                    if new == 0:
                        acc.pop(tgt, None)
                    else:
                        acc[tgt] = new
        return acc

    def truncation_contaminated(self, vec: Mapping[BasisIndex, Scalar]) -> bool:
        return any(idx.n > self.max_n for idx in vec)

    # -- serialization -----------------------------------------------------

    def to_json(self, norms=None) -> dict:
        if isinstance(self.params, ConeParams):
            params_json = {"kind": "cone", "c": scalar_to_json(self.params.c), "t": self.params.t}
        else:
            params_json = {"kind": "vertex", "r": self.params.r, "s": self.params.s}
        action = {}
        for gen in _GENERATORS:
            entries = []
            for idx in self.basis:
                row = self.rows[gen].get(idx)
                if not row:
                    continue
                terms = [
                    [list(tgt), render_rational(real_part(v)), render_rational(imag_part(v))]
                    for tgt, v in row
                ]
                entries.append({"from": list(idx), "terms": terms})
            action[gen.value] = entries
        doc = {
            "params": params_json,
            "max_n": self.max_n,
            "support": self.region.to_json(),
            "basis": [{"n": b.n, "m": b.m, "k": b.k} for b in self.basis],
            "action": action,
        }
        if norms is not None:
            doc["norms"] = norms.to_json()
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "TruncatedModule":
        pj = doc["params"]
        if pj["kind"] == "cone":
            params: ModuleParams = ConeParams(scalar_from_json(pj["c"]), pj["t"])
        else:
            params = VertexParams(pj["r"], pj["s"])
        region = Region.from_json(doc["support"])
        basis = tuple(BasisIndex(b["n"], b["m"], b["k"]) for b in doc["basis"])
        rows: dict = {gen: {} for gen in _GENERATORS}
        for gen_name, entries in doc["action"].items():
            gen = Generator(gen_name)
            for entry in entries:
                src = BasisIndex(*entry["from"])
                terms = []
                for tgt, re_s, im_s in entry["terms"]:
                    re_, im_ = parse_rational(re_s), parse_rational(im_s)
                    val: Scalar = re_ if im_ == 0 else GaussianRational(re_, im_)
                    terms.append((BasisIndex(*tgt), val))
                rows[gen][src] = tuple(terms)
        return cls(params, doc["max_n"], region, basis, rows)


def _k_rows(n: int, m: int, k: int, tc):
    """Yield (generator, terms) pairs for the basis vector (n, m, k)."""
    here = BasisIndex(n, m, k)

    h_alpha = n + 1 - 2 * k
    if h_alpha:
        yield Generator.H_ALPHA, ((here, Fraction(h_alpha)),)
    h_beta = Fraction(m - n - 1 + 2 * k, 2)
    if h_beta:
        yield Generator.H_BETA, ((here, h_beta),)
    if m:
        yield Generator.Z, ((here, Fraction(m)),)

    if k > 1:
        yield Generator.X_ALPHA, ((BasisIndex(n, m, k - 1), Fraction(-(k - 1))),)
    if k < n:
        yield Generator.Y_ALPHA, ((BasisIndex(n, m, k + 1), Fraction(-(n - k))),)

    up_right, up_left, down_right, down_left = tc
    ne = (n + 1, m + 3)
    nw = (n + 1, m - 3)
    se = (n - 1, m + 3)
    sw = (n - 1, m - 3)

    terms = []
    if up_right != 0:
        terms.append((BasisIndex(*ne, k), up_right))
    if n > 1 and k > 1 and down_right != 0:
        terms.append((BasisIndex(*se, k - 1), Fraction(k - 1, n - 1) * down_right))
    if terms:
        yield Generator.X_ALPHABETA, tuple(terms)

    terms = []
    if up_right != 0:
        terms.append((BasisIndex(*ne, k + 1), -up_right))
    if n > 1 and k < n and down_right != 0:
        terms.append((BasisIndex(*se, k), Fraction(n - k, n - 1) * down_right))
    if terms:
        yield Generator.X_BETA, tuple(terms)

    terms = []
    if up_left != 0:
        terms.append((BasisIndex(*nw, k + 1), up_left))
    if n > 1 and k < n and down_left != 0:
        terms.append((BasisIndex(*sw, k), Fraction(n - k, n - 1) * down_left))
    if terms:
        yield Generator.Y_ALPHABETA, tuple(terms)

    terms = []
    if up_left != 0:
        terms.append((BasisIndex(*nw, k), up_left))
    if n > 1 and k > 1 and down_left != 0:
        terms.append((BasisIndex(*sw, k - 1), -Fraction(k - 1, n - 1) * down_left))
    if terms:
        yield Generator.Y_BETA, tuple(terms)


def build(params: ModuleParams, max_n: int, region: Optional[Region] = None) -> TruncatedModule:
    """Build the truncated module on a support region (default: the
    constituent of the lowest K-type).

    Raises EmptyTruncation when max_n is below the vertex dimension, and
    InvalidParameter when the region is not closed under the action.
    """
    if region is None:
        region = support_of(params)
    if max_n < region.vertex.n:
        raise EmptyTruncation(
            f"max_n={max_n} is below the lowest K-type dimension {region.vertex.n}"
        )

    ktypes = region.members(max_n)
    basis = []
    rows: dict = {gen: {} for gen in _GENERATORS}
    for kt in ktypes:
        n, m = kt.n, kt.m
        tc = transition_coeffs(params, kt)
        for direction, coeff in (("up_right", tc.up_right), ("up_left", tc.up_left)):
            step = 3 if direction == "up_right" else -3
            target = KType(n + 1, m + step)
            if coeff != 0 and not region.contains(target):
                raise InvalidParameter(
                    f"region is not closed under the action: nonzero {direction} "
                    f"coefficient at {kt} leaves the region"
                )
        for k in range(1, n + 1):
            idx = BasisIndex(n, m, k)
            basis.append(idx)
            for gen, terms in _k_rows(n, m, k, tc):
                rows[gen][idx] = terms
    return TruncatedModule(params, max_n, region, tuple(basis), rows)


def module_to_json_str(mod: TruncatedModule, norms=None) -> str:
    return json.dumps(mod.to_json(norms=norms), indent=2)


def module_from_json_str(text: str) -> TruncatedModule:
    return TruncatedModule.from_json(json.loads(text))
