"""Core value type and ring operations for the four commutative algebras.

A :class:`Quad` is one hypercomplex number ``u = x + alpha*y + beta*z +
gamma*t`` tagged with the :class:`AlgebraKind` that fixes the
multiplication table of the units alpha, beta, gamma:

* ``CIRCULAR``    alpha^2 = beta^2 = -1, gamma^2 = +1, alpha*beta = -gamma
* ``HYPERBOLIC``  alpha^2 = beta^2 = gamma^2 = +1, alpha*beta = gamma
* ``PLANAR``      alpha^2 = beta, beta^2 = -1, gamma^2 = -beta, alpha*gamma = -1
* ``POLAR``       alpha^2 = beta, beta^2 = +1, gamma^2 = beta, alpha*gamma = +1

All four algebras are commutative and associative but not division
algebras: each has nodal sets (hyperplanes of divisors of zero) where the
amplitude quartic vanishes and no inverse exists.  ``singularity`` reports
the distance to those sets; ``inverse`` refuses to divide near them.

The component formulas live in a kernel module: the compiled extension
``quadfield._kernels`` when it is importable, otherwise the line-for-line
equivalent ``quadfield._kernels_py``.  ``BACKEND`` names the choice.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass

try:  # compiled kernels are optional; the pure-Python ones are equivalent
    from . import _kernels as _impl

    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on build environment
    from . import _kernels_py as _impl

    BACKEND = "python"

__all__ = [
    "AlgebraKind",
    "Quad",
    "Amplitude",
    "SingularityReport",
    "QuadfieldError",
    "SingularValue",
    "BACKEND",
    "DEFAULT_TOL",
    "add",
    "sub",
    "neg",
    "scale",
    "mul",
    "inverse",
    "amplitude",
    "modulus",
    "singularity",
    "pow_int",
    "one",
    "zero",
    "units",
    "quad_to_dict",
    "quad_from_dict",
    "quad_to_json",
    "quad_from_json",
]

DEFAULT_TOL = 1e-12

_SQRT2 = math.sqrt(2.0)


class QuadfieldError(Exception):
    """Base class for the library's domain errors."""


class SingularValue(QuadfieldError):
    """Raised when an inverse is requested on (or too near) a nodal set."""


class AlgebraKind(enum.Enum):
    """Selects one of the four multiplication tables."""

    CIRCULAR = "circular"
    HYPERBOLIC = "hyperbolic"
    PLANAR = "planar"
    POLAR = "polar"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, slots=True)
class Quad:
    """One four-dimensional hypercomplex number.

    Components are finite doubles; construction rejects NaN/inf.  Equality
    is componentwise and requires identical kind.  Arithmetic operators
    delegate to the module-level functions; mixing kinds raises ValueError.
    """

    kind: AlgebraKind
    x: float
    y: float
    z: float
    t: float

    def __post_init__(self) -> None:
        if not isinstance(self.kind, AlgebraKind):
            raise TypeError(f"kind must be AlgebraKind, got {self.kind!r}")
        for name in ("x", "y", "z", "t"):
            v = getattr(self, name)
            f = float(v)
            if not math.isfinite(f):
                raise ValueError(f"component {name}={v!r} is not finite")
            object.__setattr__(self, name, f)

    @property
    def components(self) -> tuple[float, float, float, float]:
        return (self.x, self.y, self.z, self.t)

    def __add__(self, other: "Quad | float") -> "Quad":
        return add(self, _coerce(other, self.kind))

    __radd__ = __add__

    def __sub__(self, other: "Quad | float") -> "Quad":
        return sub(self, _coerce(other, self.kind))

    def __rsub__(self, other: "Quad | float") -> "Quad":
        return sub(_coerce(other, self.kind), self)

    def __neg__(self) -> "Quad":
        return neg(self)

    def __mul__(self, other: "Quad | float") -> "Quad":
        if isinstance(other, (int, float)):
            return scale(self, other)
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, m: int) -> "Quad":
        return pow_int(self, m)

    def __abs__(self) -> float:
        return modulus(self)


def _coerce(v: "Quad | float", kind: AlgebraKind) -> Quad:
    if isinstance(v, Quad):
        return v
    return Quad(kind, float(v), 0.0, 0.0, 0.0)


def _require_same_kind(u: Quad, v: Quad) -> None:
    if u.kind is not v.kind:
        raise ValueError(f"kind mismatch: {u.kind} vs {v.kind}")


@dataclass(frozen=True, slots=True)
class Amplitude:
    """Signed amplitude quartic and, where defined, its fourth root.

    ``nu`` is rho^4 (circular/planar, always >= 0) or nu (hyperbolic/polar,
    either sign).  ``rho`` is nu**(1/4) — the amplitude rho, or mu for the
    hyperbolic kind — and is None when nu < 0 (a represented state, not an
    error).
    """

    nu: float
    rho: float | None


@dataclass(frozen=True, slots=True)
class SingularityReport:
    """Distance diagnosis against every nodal set of the kind.

    ``nodal_sets`` lists the identifiers of the conditions whose
    normalized residual (the kind's nodal quantity divided by
    max(modulus, tol)) is <= tol; ``margin`` is the smallest normalized
    residual; ``singular`` is ``margin <= tol``.
    """

    singular: bool
    nodal_sets: tuple[str, ...]
    margin: float


_MUL = {
    AlgebraKind.CIRCULAR: _impl.mul_circular,
    AlgebraKind.HYPERBOLIC: _impl.mul_hyperbolic,
    AlgebraKind.PLANAR: _impl.mul_planar,
    AlgebraKind.POLAR: _impl.mul_polar,
}

_INV = {
    AlgebraKind.CIRCULAR: _impl.inv_circular,
    AlgebraKind.HYPERBOLIC: _impl.inv_hyperbolic,
    AlgebraKind.PLANAR: _impl.inv_planar,
    AlgebraKind.POLAR: _impl.inv_polar,
}

_QUARTIC = {
    AlgebraKind.CIRCULAR: _impl.quartic_circular,
    AlgebraKind.HYPERBOLIC: _impl.quartic_hyperbolic,
    AlgebraKind.PLANAR: _impl.quartic_planar,
    AlgebraKind.POLAR: _impl.quartic_polar,
}


def zero(kind: AlgebraKind) -> Quad:
    return Quad(kind, 0.0, 0.0, 0.0, 0.0)


def one(kind: AlgebraKind) -> Quad:
    return Quad(kind, 1.0, 0.0, 0.0, 0.0)


def units(kind: AlgebraKind) -> tuple[Quad, Quad, Quad, Quad]:
    """The basis (1, alpha, beta, gamma) as Quads of the given kind."""
    return (
        Quad(kind, 1.0, 0.0, 0.0, 0.0),
        Quad(kind, 0.0, 1.0, 0.0, 0.0),
        Quad(kind, 0.0, 0.0, 1.0, 0.0),
        Quad(kind, 0.0, 0.0, 0.0, 1.0),
    )


def add(u: Quad, v: Quad) -> Quad:
    """Componentwise sum; kinds must match."""
    _require_same_kind(u, v)
    return Quad(u.kind, u.x + v.x, u.y + v.y, u.z + v.z, u.t + v.t)


def sub(u: Quad, v: Quad) -> Quad:
    """Componentwise difference; kinds must match."""
    _require_same_kind(u, v)
    return Quad(u.kind, u.x - v.x, u.y - v.y, u.z - v.z, u.t - v.t)


def neg(u: Quad) -> Quad:
    return Quad(u.kind, -u.x, -u.y, -u.z, -u.t)


def scale(u: Quad, c: float) -> Quad:
    """Real scalar multiple c*u."""
    c = float(c)
    return Quad(u.kind, c * u.x, c * u.y, c * u.z, c * u.t)


def mul(u: Quad, v: Quad) -> Quad:
    """Product under the kind's multiplication table.

    Commutative (bitwise exactly), associative and distributive up to
    rounding.
    """
    _require_same_kind(u, v)
    return Quad(u.kind, *_MUL[u.kind](u.x, u.y, u.z, u.t, v.x, v.y, v.z, v.t))


def modulus(u: Quad) -> float:
    """Euclidean length d = sqrt(x^2 + y^2 + z^2 + t^2)."""
    return math.sqrt(u.x * u.x + u.y * u.y + u.z * u.z + u.t * u.t)


def amplitude(u: Quad) -> Amplitude:
    """Signed amplitude quartic and its fourth root where defined.

    Circular/planar: nu = rho^4 = rho_plus^2 * rho_minus^2 >= 0, rho always
    defined.  Hyperbolic: nu = s*s'*s''*s''', mu = nu**(1/4) only when
    nu >= 0.  Polar: nu = v_plus*v_minus*mu_plus^2, rho = nu**(1/4) only
    when nu >= 0.
    """
    nu = _QUARTIC[u.kind](u.x, u.y, u.z, u.t)
    if nu < 0.0:
        return Amplitude(nu=nu, rho=None)
    return Amplitude(nu=nu, rho=nu ** 0.25)


def _nodal_distances(u: Quad) -> list[tuple[str, float]]:
    """(identifier, residual) for every nodal set of u's kind.

    Residuals are the kind's own nodal quantities (rho+/-, |s..|, |v+/-|,
    mu+), so the scalar unit sits at residual 1 from every set.
    """
    x, y, z, t = u.x, u.y, u.z, u.t
    if u.kind is AlgebraKind.CIRCULAR:
        return [
            ("rho_plus", math.hypot(x + t, y + z)),
            ("rho_minus", math.hypot(x - t, y - z)),
        ]
    if u.kind is AlgebraKind.HYPERBOLIC:
        return [
            ("s", abs(x + y + z + t)),
            ("s_prime", abs(x - y + z - t)),
            ("s_double_prime", abs(x + y - z - t)),
            ("s_triple_prime", abs(x - y - z + t)),
        ]
    if u.kind is AlgebraKind.PLANAR:
        a = (y - t) / _SQRT2
        b = (y + t) / _SQRT2
        return [
            ("rho_plus", math.hypot(x + a, z + b)),
            ("rho_minus", math.hypot(x - a, z - b)),
        ]
    return [
        ("v_plus", abs(x + y + z + t)),
        ("v_minus", abs(x - y + z - t)),
        ("mu_plus", math.hypot(x - z, y - t)),
    ]


def singularity(u: Quad, tol: float = DEFAULT_TOL) -> SingularityReport:
    """Check u against every nodal condition of its kind.

    Residuals are normalized by max(modulus(u), tol) so the report is
    scale-free; a condition fires when its normalized residual <= tol.
    """
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    scale_ref = max(modulus(u), tol)
    fired: list[str] = []
    margin = math.inf
    for name, dist in _nodal_distances(u):
        normalized = dist / scale_ref
        margin = min(margin, normalized)
        if normalized <= tol:
            fired.append(name)
    return SingularityReport(
        singular=margin <= tol, nodal_sets=tuple(fired), margin=margin
    )


def inverse(u: Quad, tol: float = DEFAULT_TOL) -> Quad:
    """Multiplicative inverse via the kind's closed formulas.

    Raises:
        SingularValue: if u is within tol (normalized) of any nodal set.
    """
    report = singularity(u, tol)
    if report.singular:
        raise SingularValue(
            f"{u.kind} value {u.components} lies on nodal set(s) "
            f"{', '.join(report.nodal_sets)} (margin {report.margin:.3e})"
        )
    return Quad(u.kind, *_INV[u.kind](u.x, u.y, u.z, u.t))


def pow_int(u: Quad, m: int, tol: float = DEFAULT_TOL) -> Quad:
    """Integer power by binary exponentiation.

    Negative exponents invert first and therefore raise SingularValue on
    nodal sets; u**0 is 1 for every u including 0.
    """
    if m != int(m):
        raise TypeError(f"exponent must be an integer, got {m!r}")
    m = int(m)
    if m < 0:
        return pow_int(inverse(u, tol), -m)
    result = one(u.kind)
    base = u
    while m:
        if m & 1:
            result = mul(result, base)
        base = mul(base, base)
        m >>= 1
    return result


# -- JSON interchange ----------------------------------------------------

def quad_to_dict(u: Quad) -> dict:
    return {"kind": u.kind.value, "x": u.x, "y": u.y, "z": u.z, "t": u.t}


def quad_from_dict(d: dict) -> Quad:
    try:
        kind = AlgebraKind(d["kind"])
        return Quad(kind, d["x"], d["y"], d["z"], d["t"])
    except (KeyError, ValueError, TypeError) as exc:
        raise ValueError(f"not a valid quad object: {d!r}") from exc


def quad_to_json(u: Quad) -> str:
    """Compact JSON; float repr round-trips bit-for-bit."""
    return json.dumps(quad_to_dict(u), separators=(",", ":"))


def quad_from_json(s: str) -> Quad:
    return quad_from_dict(json.loads(s))
