"""Series, analyticity checks, and loop integration.

* Power series with Horner evaluation, a decoupled per-plane evaluator
  (the cross-check oracle), and tail-ratio convergence estimates.
* Numerical verification of the first-order (Riemann-type) relations and
  the second-order Laplace/wave/mixed equations each kind's analytic
  functions satisfy, via central finite differences.
* Trapezoidal loop integration of Quad-valued integrands with the
  closed-form residue predictions: the loop integral of du/(u - u0) picks
  up the kind's residue unit once per distinguished plane whose
  projection winds around the pole; hyperbolic loops of regular
  functions always vanish.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .algebra_core import AlgebraKind, Quad, QuadfieldError, modulus, mul, scale, zero
from .canonical import plane_join, plane_split

__all__ = [
    "SeriesSpec",
    "Loop",
    "WindingQuery",
    "ConvergenceBounds",
    "DegenerateSeries",
    "SingularOnPath",
    "OnBoundary",
    "NearBoundaryWarning",
    "RESIDUE_UNITS",
    "eval_series",
    "eval_series_canonical",
    "convergence_bounds",
    "check_analytic",
    "check_second_order",
    "integrate_loop",
    "winding",
    "residue_prediction",
]

_SQRT2 = math.sqrt(2.0)
_PI = math.pi


class DegenerateSeries(QuadfieldError):
    """Raised when tail coefficients vanish and ratio estimates are undefined."""


class SingularOnPath(QuadfieldError):
    """Raised when the integrand fails to evaluate at a loop sample."""


class OnBoundary(QuadfieldError):
    """Raised when a winding query point lies on the polygon boundary."""


class NearBoundaryWarning(UserWarning):
    """A pole's plane projection is dangerously close to the loop projection."""


# -- series ---------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class SeriesSpec:
    """Coefficients a0..aL of sum a_l * u**l, all of one kind."""

    kind: AlgebraKind
    coeffs: tuple[Quad, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("series needs at least one coefficient")
        for a in self.coeffs:
            if a.kind is not self.kind:
                raise ValueError(f"kind mismatch: {a.kind} coefficient in "
                                 f"{self.kind} series")


@dataclass(frozen=True, slots=True)
class ConvergenceBounds:
    """Tail-ratio estimates; `global_bound` is in modulus units |u|,
    `canonical` is one radius per decoupled plane/line (plane-projection
    units)."""

    global_bound: float
    canonical: tuple[float, ...]


def eval_series(s: SeriesSpec, u: Quad) -> Quad:
    """Horner evaluation of the series at u."""
    if u.kind is not s.kind:
        raise ValueError(f"kind mismatch: {u.kind} point in {s.kind} series")
    acc = s.coeffs[-1]
    for a in reversed(s.coeffs[:-1]):
        acc = mul(acc, u) + a
    return acc


def eval_series_canonical(s: SeriesSpec, u: Quad) -> Quad:
    """Decoupled evaluation: per-plane scalar Horner, then rejoin.

    Mathematically identical to :func:`eval_series` because the plane
    maps are ring homomorphisms; serves as its independent oracle.
    """
    if u.kind is not s.kind:
        raise ValueError(f"kind mismatch: {u.kind} point in {s.kind} series")
    coeff_parts = [plane_split(a) for a in s.coeffs]
    u_parts = plane_split(u)
    out = []
    for j, w in enumerate(u_parts):
        acc = coeff_parts[-1][j]
        for parts in reversed(coeff_parts[:-1]):
            acc = acc * w + parts[j]
        out.append(acc)
    return plane_join(s.kind, tuple(out))


_GLOBAL_MUL_FACTOR = {
    AlgebraKind.CIRCULAR: _SQRT2,
    AlgebraKind.PLANAR: _SQRT2,
    AlgebraKind.HYPERBOLIC: 2.0,
    AlgebraKind.POLAR: 2.0,
}


def convergence_bounds(s: SeriesSpec) -> ConvergenceBounds:
    """Advisory convergence radii from trailing coefficient ratios.

    The global bound divides the plain ratio |a_l|/|a_{l+1}| by the
    kind's product-modulus growth factor (sqrt(2) or 2); the canonical
    radii are per-plane ratios of projected coefficient magnitudes.  The
    minimum over the last max(3, L/4) ratios is reported.  A vanishing
    plane denominator means that plane's series truncates: its ratio is
    taken as +inf.

    Raises:
        DegenerateSeries: fewer than two coefficients, or a coefficient in
            the ratio window has zero modulus.
    """
    degree = len(s.coeffs) - 1
    if degree < 1:
        raise DegenerateSeries("series needs at least two coefficients")
    window = max(3, degree // 4)
    start = max(0, degree - window)
    mods = [modulus(a) for a in s.coeffs]
    for l in range(start, degree + 1):
        if mods[l] == 0.0:
            raise DegenerateSeries(
                f"coefficient {l} vanishes inside the ratio window"
            )
    factor = _GLOBAL_MUL_FACTOR[s.kind]
    global_bound = min(
        mods[l] / (factor * mods[l + 1]) for l in range(start, degree)
    )
    coeff_parts = [plane_split(a) for a in s.coeffs]
    n_planes = len(coeff_parts[0])
    canonical = []
    for j in range(n_planes):
        best = math.inf
        for l in range(start, degree):
            num = abs(coeff_parts[l][j])
            den = abs(coeff_parts[l + 1][j])
            ratio = math.inf if den == 0.0 else num / den
            best = min(best, ratio)
        canonical.append(best)
    return ConvergenceBounds(global_bound=global_bound, canonical=tuple(canonical))


# -- analyticity checks ----------------------------------------------------

# Chains of first partials (component, variable, sign) equal in sequence for
# analytic f = P + alpha Q + beta R + gamma S; variables indexed x=0..t=3.
# Consecutive equalities give the kind's 12 Riemann-type relations.
_FIRST_ORDER_CHAINS: dict[AlgebraKind, tuple[tuple[tuple[int, int, int], ...], ...]] = {
    AlgebraKind.CIRCULAR: (
        ((0, 0, 1), (1, 1, 1), (2, 2, 1), (3, 3, 1)),
        ((1, 0, 1), (0, 1, -1), (3, 2, -1), (2, 3, 1)),
        ((2, 0, 1), (3, 1, -1), (0, 2, -1), (1, 3, 1)),
        ((3, 0, 1), (2, 1, 1), (1, 2, 1), (0, 3, 1)),
    ),
    AlgebraKind.HYPERBOLIC: (
        ((0, 0, 1), (1, 1, 1), (2, 2, 1), (3, 3, 1)),
        ((1, 0, 1), (0, 1, 1), (3, 2, 1), (2, 3, 1)),
        ((2, 0, 1), (3, 1, 1), (0, 2, 1), (1, 3, 1)),
        ((3, 0, 1), (2, 1, 1), (1, 2, 1), (0, 3, 1)),
    ),
    AlgebraKind.PLANAR: (
        ((0, 0, 1), (1, 1, 1), (2, 2, 1), (3, 3, 1)),
        ((1, 0, 1), (2, 1, 1), (3, 2, 1), (0, 3, -1)),
        ((2, 0, 1), (3, 1, 1), (0, 2, -1), (1, 3, -1)),
        ((3, 0, 1), (0, 1, -1), (1, 2, -1), (2, 3, -1)),
    ),
    AlgebraKind.POLAR: (
        ((0, 0, 1), (1, 1, 1), (2, 2, 1), (3, 3, 1)),
        ((1, 0, 1), (2, 1, 1), (3, 2, 1), (0, 3, 1)),
        ((2, 0, 1), (3, 1, 1), (0, 2, 1), (1, 3, 1)),
        ((3, 0, 1), (0, 1, 1), (1, 2, 1), (2, 3, 1)),
    ),
}

# Second-order equations d2/didj + sign * d2/dkdl = 0, applied to all four
# components; (i, j, k, l, sign) with the same variable indexing.
_SECOND_ORDER_EQS: dict[AlgebraKind, tuple[tuple[int, int, int, int, int], ...]] = {
    AlgebraKind.CIRCULAR: (
        (0, 0, 1, 1, 1), (0, 0, 2, 2, 1), (1, 1, 3, 3, 1), (2, 2, 3, 3, 1),
        (0, 0, 3, 3, -1), (1, 1, 2, 2, -1),
        (0, 1, 2, 3, -1), (0, 2, 1, 3, -1), (0, 3, 1, 2, 1),
    ),
    AlgebraKind.HYPERBOLIC: (
        (0, 0, 1, 1, -1), (0, 0, 2, 2, -1), (1, 1, 3, 3, -1), (2, 2, 3, 3, -1),
        (0, 0, 3, 3, -1), (1, 1, 2, 2, -1),
        (0, 1, 2, 3, -1), (0, 2, 1, 3, -1), (0, 3, 1, 2, -1),
    ),
    AlgebraKind.PLANAR: (
        (0, 0, 2, 2, 1), (1, 1, 3, 3, 1),
        (0, 0, 1, 3, 1), (1, 1, 0, 2, -1), (2, 2, 1, 3, -1), (3, 3, 0, 2, 1),
        (0, 1, 2, 3, 1), (0, 3, 1, 2, -1),
    ),
    AlgebraKind.POLAR: (
        (0, 0, 2, 2, -1), (1, 1, 3, 3, -1),
        (0, 0, 1, 3, -1), (1, 1, 0, 2, -1), (2, 2, 1, 3, -1), (3, 3, 0, 2, -1),
        (0, 1, 2, 3, -1), (0, 3, 1, 2, -1),
    ),
}


def _shift(u: Quad, j: int, h: float) -> Quad:
    c = list(u.components)
    c[j] += h
    return Quad(u.kind, *c)


def check_analytic(f, u0: Quad, h: float = 1e-5) -> float:
    """Max violation of the kind's 12 first-order analyticity relations.

    All 16 first partials of the components P, Q, R, S are estimated by
    central differences of step h.
    """
    if h <= 0.0:
        raise ValueError(f"step h must be positive, got {h!r}")
    # D[comp][var]
    D = [[0.0] * 4 for _ in range(4)]
    for j in range(4):
        up = f(_shift(u0, j, h)).components
        um = f(_shift(u0, j, -h)).components
        for i in range(4):
            D[i][j] = (up[i] - um[i]) / (2.0 * h)
    worst = 0.0
    for chain in _FIRST_ORDER_CHAINS[u0.kind]:
        vals = [sign * D[comp][var] for comp, var, sign in chain]
        for a, b in zip(vals, vals[1:]):
            worst = max(worst, abs(a - b))
    return worst


def check_second_order(f, u0: Quad, h: float = 1e-4) -> float:
    """Max residual of the kind's second-order equations on all components."""
    if h <= 0.0:
        raise ValueError(f"step h must be positive, got {h!r}")
    f0 = f(u0).components
    cache: dict[tuple[int, int], tuple[float, ...]] = {}

    def second(i: int, j: int) -> tuple[float, ...]:
        key = (min(i, j), max(i, j))
        if key in cache:
            return cache[key]
        if i == j:
            fp = f(_shift(u0, i, h)).components
            fm = f(_shift(u0, i, -h)).components
            val = tuple((fp[c] - 2.0 * f0[c] + fm[c]) / (h * h) for c in range(4))
        else:
            fpp = f(_shift(_shift(u0, i, h), j, h)).components
            fpm = f(_shift(_shift(u0, i, h), j, -h)).components
            fmp = f(_shift(_shift(u0, i, -h), j, h)).components
            fmm = f(_shift(_shift(u0, i, -h), j, -h)).components
            val = tuple(
                (fpp[c] - fpm[c] - fmp[c] + fmm[c]) / (4.0 * h * h)
                for c in range(4)
            )
        cache[key] = val
        return val

    worst = 0.0
    for i, j, k, l, sign in _SECOND_ORDER_EQS[u0.kind]:
        d1 = second(i, j)
        d2 = second(k, l)
        for c in range(4):
            worst = max(worst, abs(d1[c] + sign * d2[c]))
    return worst


# -- loops and integration --------------------------------------------------

@dataclass(frozen=True, slots=True)
class Loop:
    """Closed polyline of Quad samples (first == last, >= 8 segments).

    Build with :meth:`from_points`, or :meth:`circle` which expands the
    per-kind circle parametrizations: circular/planar circles live at
    fixed angle psi, winding in the plus or minus distinguished plane
    with radii r*sin(psi) / r*cos(psi); polar circles wind in the
    (v1, v1~) plane with v+ and v- frozen at the center's values (only
    the plus plane carries residues); hyperbolic circles wind in the
    (s, s') or (s'', s''') coordinate pair.  Radii and centers are in
    canonical-chart units.
    """

    points: tuple[Quad, ...]
    plane: str | None = None
    center: Quad | None = None
    radius: float | None = None
    psi: float | None = None
    fixed_angle: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        if len(self.points) < 9:
            raise ValueError(
                f"loop needs at least 8 segments, got {len(self.points) - 1}"
            )
        first, last = self.points[0], self.points[-1]
        for p in self.points:
            if p.kind is not first.kind:
                raise ValueError("loop mixes kinds")
        gap = max(abs(a - b) for a, b in zip(first.components, last.components))
        if gap > 1e-12 * max(1.0, modulus(first)):
            raise ValueError(f"loop is not closed: first/last gap {gap:.3e}")

    @property
    def kind(self) -> AlgebraKind:
        return self.points[0].kind

    @classmethod
    def from_points(cls, points) -> "Loop":
        points = list(points)
        if points:
            points[-1] = points[0]  # snap exact closure
        return cls(points=tuple(points))

    @classmethod
    def circle(
        cls,
        center: Quad,
        radius: float,
        plane: str = "plus",
        samples: int = 4096,
        psi: float = _PI / 4.0,
        fixed_angle: float = 0.0,
    ) -> "Loop":
        if plane not in ("plus", "minus"):
            raise ValueError(f"plane must be 'plus' or 'minus', got {plane!r}")
        if radius <= 0.0:
            raise ValueError(f"radius must be positive, got {radius!r}")
        if samples < 8:
            raise ValueError(f"need at least 8 samples, got {samples!r}")
        kind = center.kind
        parts0 = plane_split(center)
        pts: list[Quad] = []
        if kind in (AlgebraKind.CIRCULAR, AlgebraKind.PLANAR):
            if not 0.0 < psi < _PI / 2.0:
                raise ValueError(f"psi must lie in (0, pi/2), got {psi!r}")
            # Chart radii scale by sqrt(2) in plane-projection units.
            r_plus = _SQRT2 * radius * math.sin(psi)
            r_minus = _SQRT2 * radius * math.cos(psi)
            fixed = complex(math.cos(fixed_angle), math.sin(fixed_angle))
            for i in range(samples):
                th = 2.0 * _PI * i / samples
                ring = complex(math.cos(th), math.sin(th))
                if plane == "plus":
                    w1 = parts0[0] + r_plus * ring
                    w2 = parts0[1] + r_minus * fixed
                else:
                    w1 = parts0[0] + r_plus * fixed
                    w2 = parts0[1] + r_minus * ring
                pts.append(plane_join(kind, (w1, w2)))
        elif kind is AlgebraKind.HYPERBOLIC:
            for i in range(samples):
                th = 2.0 * _PI * i / samples
                c, s = radius * math.cos(th), radius * math.sin(th)
                if plane == "plus":
                    parts = (parts0[0] + c, parts0[1] + s, parts0[2], parts0[3])
                else:
                    parts = (parts0[0], parts0[1], parts0[2] + c, parts0[3] + s)
                pts.append(plane_join(kind, parts))
        else:
            if plane != "plus":
                raise ValueError(
                    "polar circles wind only in the (v1, v1~) plane; "
                    "use plane='plus'"
                )
            for i in range(samples):
                th = 2.0 * _PI * i / samples
                w1 = parts0[2] + _SQRT2 * radius * complex(math.cos(th),
                                                           math.sin(th))
                pts.append(plane_join(kind, (parts0[0], parts0[1], w1)))
        pts.append(pts[0])
        return cls(
            points=tuple(pts),
            plane=plane,
            center=center,
            radius=float(radius),
            psi=float(psi) if kind in (AlgebraKind.CIRCULAR, AlgebraKind.PLANAR)
            else None,
            fixed_angle=float(fixed_angle)
            if kind in (AlgebraKind.CIRCULAR, AlgebraKind.PLANAR) else None,
        )


def integrate_loop(f, loop: Loop) -> Quad:
    """Trapezoidal quadrature of the loop integral of f(u) du.

    du is the Quad increment between consecutive samples; segment
    contributions use the endpoint-average of f.  Summation order is
    fixed, so results are deterministic for a given loop.

    Raises:
        SingularOnPath: f failed to evaluate at some sample.
    """
    values: list[Quad] = []
    for i, p in enumerate(loop.points[:-1]):
        try:
            values.append(f(p))
        except (QuadfieldError, ArithmeticError, ValueError) as exc:
            raise SingularOnPath(
                f"integrand failed at sample {i}: {exc}"
            ) from exc
    values.append(values[0])
    total = zero(loop.kind)
    for i in range(len(loop.points) - 1):
        du = loop.points[i + 1] - loop.points[i]
        avg = scale(values[i] + values[i + 1], 0.5)
        total = total + mul(avg, du)
    return total


# -- winding and residues ----------------------------------------------------

@dataclass(frozen=True, slots=True)
class WindingQuery:
    """Point-in-closed-polygon query in one projection plane."""

    point2d: tuple[float, float]
    polygon2d: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "polygon2d", tuple((float(a), float(b)) for a, b in self.polygon2d)
        )
        object.__setattr__(
            self, "point2d", (float(self.point2d[0]), float(self.point2d[1]))
        )
        if len(self.polygon2d) < 4:
            raise ValueError("polygon needs at least three vertices plus closure")
        if self.polygon2d[0] != self.polygon2d[-1]:
            raise ValueError("polygon is not closed (first != last)")


def _segment_distance(px: float, py: float, x1: float, y1: float,
                      x2: float, y2: float) -> float:
    dx, dy = x2 - x1, y2 - y1
    norm2 = dx * dx + dy * dy
    if norm2 == 0.0:
        return math.hypot(px - x1, py - y1)
    s = ((px - x1) * dx + (py - y1) * dy) / norm2
    s = 0.0 if s < 0.0 else (1.0 if s > 1.0 else s)
    return math.hypot(px - (x1 + s * dx), py - (y1 + s * dy))


def _polygon_distance(point: tuple[float, float],
                      poly: tuple[tuple[float, float], ...]) -> float:
    px, py = point
    return min(
        _segment_distance(px, py, *poly[i], *poly[i + 1])
        for i in range(len(poly) - 1)
    )


def winding(q: WindingQuery) -> int:
    """1 if the point is interior to the closed polygon, else 0 (even-odd).

    Raises:
        OnBoundary: the point lies within 1e-9 of the polygon.
    """
    if _polygon_distance(q.point2d, q.polygon2d) < 1e-9:
        raise OnBoundary(f"point {q.point2d} lies on the polygon boundary")
    px, py = q.point2d
    inside = False
    poly = q.polygon2d
    for i in range(len(poly) - 1):
        x1, y1 = poly[i]
        x2, y2 = poly[i + 1]
        if (y1 > py) != (y2 > py):
            x_cross = x1 + (py - y1) * (x2 - x1) / (y2 - y1)
            if x_cross > px:
                inside = not inside
    return 1 if inside else 0


def _unit(kind: AlgebraKind, x: float, y: float, z: float, t: float) -> Quad:
    return Quad(kind, x, y, z, t)


# Residue units: the value of the loop integral of du/(u - u0) when the
# pole's projection is enclosed once in the plus (resp. minus)
# distinguished plane.  Hyperbolic loops carry no residue at all; polar
# residues arise only from the (v1, v1~) plane.
RESIDUE_UNITS: dict[AlgebraKind, tuple[Quad, Quad]] = {
    AlgebraKind.CIRCULAR: (
        _unit(AlgebraKind.CIRCULAR, 0.0, _PI, _PI, 0.0),
        _unit(AlgebraKind.CIRCULAR, 0.0, _PI, -_PI, 0.0),
    ),
    AlgebraKind.PLANAR: (
        _unit(AlgebraKind.PLANAR, 0.0, _PI / _SQRT2, _PI, _PI / _SQRT2),
        _unit(AlgebraKind.PLANAR, 0.0, _PI / _SQRT2, -_PI, _PI / _SQRT2),
    ),
    AlgebraKind.POLAR: (
        _unit(AlgebraKind.POLAR, 0.0, _PI, 0.0, -_PI),
        _unit(AlgebraKind.POLAR, 0.0, 0.0, 0.0, 0.0),
    ),
    AlgebraKind.HYPERBOLIC: (
        _unit(AlgebraKind.HYPERBOLIC, 0.0, 0.0, 0.0, 0.0),
        _unit(AlgebraKind.HYPERBOLIC, 0.0, 0.0, 0.0, 0.0),
    ),
}


def _loop_projections(loop: Loop) -> list[tuple[tuple[float, float], ...]]:
    """Closed 2-D projections of the loop in the kind's winding planes."""
    kind = loop.kind
    parts = [plane_split(p) for p in loop.points]
    if kind in (AlgebraKind.CIRCULAR, AlgebraKind.PLANAR):
        return [
            tuple((w[0].real, w[0].imag) for w in parts),
            tuple((w[1].real, w[1].imag) for w in parts),
        ]
    if kind is AlgebraKind.POLAR:
        return [tuple((w[2].real, w[2].imag) for w in parts)]
    return []


def residue_prediction(poles, loop: Loop) -> Quad:
    """Closed-form prediction of the loop integral of sum a_j/(u - u_j).

    Combines the winding numbers of each pole's plane projections with
    the kind's residue units; hyperbolic predictions are identically 0.

    Raises:
        OnBoundary: a pole projection lies on a loop projection.
    Warns:
        NearBoundaryWarning: a pole projection is within 1e-6 of a loop
            projection (quadrature accuracy degrades).
    """
    kind = loop.kind
    total = zero(kind)
    projections = _loop_projections(loop)
    if not projections:
        return total
    units = RESIDUE_UNITS[kind]
    for u_j, a_j in poles:
        if u_j.kind is not kind or a_j.kind is not kind:
            raise ValueError("pole kind does not match loop kind")
        pole_parts = plane_split(u_j)
        pole_points = (
            [(pole_parts[0].real, pole_parts[0].imag),
             (pole_parts[1].real, pole_parts[1].imag)]
            if kind in (AlgebraKind.CIRCULAR, AlgebraKind.PLANAR)
            else [(pole_parts[2].real, pole_parts[2].imag)]
        )
        for plane_idx, (pt, poly) in enumerate(zip(pole_points, projections)):
            dist = _polygon_distance(pt, poly)
            if dist < 1e-6:
                warnings.warn(
                    f"pole projection {pt} is within {dist:.2e} of the loop "
                    f"projection in plane {plane_idx}",
                    NearBoundaryWarning,
                    stacklevel=2,
                )
            n = winding(WindingQuery(point2d=pt, polygon2d=poly))
            if n:
                total = total + mul(units[plane_idx], a_j)
    return total
