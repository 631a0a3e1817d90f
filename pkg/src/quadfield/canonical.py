"""Canonical coordinates, idempotent bases, and exponential/trigonometric forms.

Each algebra admits a linear change of variables in which multiplication
decouples:

* circular / planar — two scaled 2-D complex planes (xi, upsilon) and
  (tau, zeta); the idempotent pairs (e1, e1~) and (e2, e2~) span them.
* hyperbolic — four independent real lines s, s', s'', s''' spanned by the
  orthogonal idempotents e, e', e'', e'''.
* polar — two real lines v+, v- (idempotents e+, e-) plus one 2-D complex
  plane (v1, v1~) spanned by (e1, e1~).

``plane_split``/``plane_join`` expose the decoupling as plain
complex/real numbers; every map is an exact unital ring homomorphism per
plane, which is what makes the exponential forms, logarithms, series and
factorizations in the other modules one-plane-at-a-time computations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra_core import AlgebraKind, Quad, QuadfieldError, modulus

__all__ = [
    "CanonicalCircular",
    "CanonicalHyperbolic",
    "CanonicalPlanar",
    "CanonicalPolar",
    "ExpForm",
    "TrigForm",
    "DomainError",
    "to_canonical",
    "from_canonical",
    "canonical_mul",
    "plane_split",
    "plane_join",
    "exp_form",
    "from_exp_form",
    "trig_form",
    "from_trig_form",
    "expform_to_dict",
    "expform_from_dict",
    "CANONICAL_BASES",
    "CIRCULAR_E1",
    "CIRCULAR_E1_TILDE",
    "CIRCULAR_E2",
    "CIRCULAR_E2_TILDE",
    "HYPERBOLIC_E",
    "HYPERBOLIC_E_PRIME",
    "HYPERBOLIC_E_DOUBLE_PRIME",
    "HYPERBOLIC_E_TRIPLE_PRIME",
    "PLANAR_E1",
    "PLANAR_E1_TILDE",
    "PLANAR_E2",
    "PLANAR_E2_TILDE",
    "POLAR_E_PLUS",
    "POLAR_E_MINUS",
    "POLAR_E1",
    "POLAR_E1_TILDE",
]

_SQRT2 = math.sqrt(2.0)
_TWO_PI = 2.0 * math.pi


class DomainError(QuadfieldError):
    """Raised when a value lies outside an operation's validity domain."""


# -- canonical coordinate records ----------------------------------------

@dataclass(frozen=True, slots=True)
class CanonicalCircular:
    xi: float
    upsilon: float
    tau: float
    zeta: float


@dataclass(frozen=True, slots=True)
class CanonicalHyperbolic:
    s: float
    s_prime: float
    s_double_prime: float
    s_triple_prime: float


@dataclass(frozen=True, slots=True)
class CanonicalPlanar:
    xi: float
    upsilon: float
    tau: float
    zeta: float


@dataclass(frozen=True, slots=True)
class CanonicalPolar:
    v_plus: float
    v_minus: float
    v1: float
    v1_tilde: float


CanonicalCoords = (
    CanonicalCircular | CanonicalHyperbolic | CanonicalPlanar | CanonicalPolar
)

_CANONICAL_TYPE = {
    AlgebraKind.CIRCULAR: CanonicalCircular,
    AlgebraKind.HYPERBOLIC: CanonicalHyperbolic,
    AlgebraKind.PLANAR: CanonicalPlanar,
    AlgebraKind.POLAR: CanonicalPolar,
}

_KIND_OF_CANONICAL = {v: k for k, v in _CANONICAL_TYPE.items()}


# -- idempotent / canonical bases ----------------------------------------

_H = 0.5 / _SQRT2  # 1/(2*sqrt(2))

CIRCULAR_E1 = Quad(AlgebraKind.CIRCULAR, 0.5, 0.0, 0.0, 0.5)
CIRCULAR_E1_TILDE = Quad(AlgebraKind.CIRCULAR, 0.0, 0.5, 0.5, 0.0)
CIRCULAR_E2 = Quad(AlgebraKind.CIRCULAR, 0.5, 0.0, 0.0, -0.5)
CIRCULAR_E2_TILDE = Quad(AlgebraKind.CIRCULAR, 0.0, 0.5, -0.5, 0.0)

HYPERBOLIC_E = Quad(AlgebraKind.HYPERBOLIC, 0.25, 0.25, 0.25, 0.25)
HYPERBOLIC_E_PRIME = Quad(AlgebraKind.HYPERBOLIC, 0.25, -0.25, 0.25, -0.25)
HYPERBOLIC_E_DOUBLE_PRIME = Quad(AlgebraKind.HYPERBOLIC, 0.25, 0.25, -0.25, -0.25)
HYPERBOLIC_E_TRIPLE_PRIME = Quad(AlgebraKind.HYPERBOLIC, 0.25, -0.25, -0.25, 0.25)

PLANAR_E1 = Quad(AlgebraKind.PLANAR, 0.5, _H, 0.0, -_H)
PLANAR_E1_TILDE = Quad(AlgebraKind.PLANAR, 0.0, _H, 0.5, _H)
PLANAR_E2 = Quad(AlgebraKind.PLANAR, 0.5, -_H, 0.0, _H)
PLANAR_E2_TILDE = Quad(AlgebraKind.PLANAR, 0.0, _H, -0.5, _H)

POLAR_E_PLUS = Quad(AlgebraKind.POLAR, 0.25, 0.25, 0.25, 0.25)
POLAR_E_MINUS = Quad(AlgebraKind.POLAR, 0.25, -0.25, 0.25, -0.25)
POLAR_E1 = Quad(AlgebraKind.POLAR, 0.5, 0.0, -0.5, 0.0)
POLAR_E1_TILDE = Quad(AlgebraKind.POLAR, 0.0, 0.5, 0.0, -0.5)

CANONICAL_BASES: dict[AlgebraKind, tuple[Quad, ...]] = {
    AlgebraKind.CIRCULAR: (
        CIRCULAR_E1,
        CIRCULAR_E1_TILDE,
        CIRCULAR_E2,
        CIRCULAR_E2_TILDE,
    ),
    AlgebraKind.HYPERBOLIC: (
        HYPERBOLIC_E,
        HYPERBOLIC_E_PRIME,
        HYPERBOLIC_E_DOUBLE_PRIME,
        HYPERBOLIC_E_TRIPLE_PRIME,
    ),
    AlgebraKind.PLANAR: (
        PLANAR_E1,
        PLANAR_E1_TILDE,
        PLANAR_E2,
        PLANAR_E2_TILDE,
    ),
    AlgebraKind.POLAR: (
        POLAR_E_PLUS,
        POLAR_E_MINUS,
        POLAR_E1,
        POLAR_E1_TILDE,
    ),
}


# -- coordinate maps ------------------------------------------------------

def to_canonical(u: Quad) -> CanonicalCoords:
    """Linear map into the kind's decoupling coordinates."""
    x, y, z, t = u.components
    if u.kind is AlgebraKind.CIRCULAR:
        return CanonicalCircular(
            xi=(x + t) / _SQRT2,
            upsilon=(y + z) / _SQRT2,
            tau=(x - t) / _SQRT2,
            zeta=(y - z) / _SQRT2,
        )
    if u.kind is AlgebraKind.HYPERBOLIC:
        return CanonicalHyperbolic(
            s=x + y + z + t,
            s_prime=x - y + z - t,
            s_double_prime=x + y - z - t,
            s_triple_prime=x - y - z + t,
        )
    if u.kind is AlgebraKind.PLANAR:
        a = (y - t) / 2.0
        b = (y + t) / 2.0
        return CanonicalPlanar(
            xi=x / _SQRT2 + a,
            upsilon=z / _SQRT2 + b,
            tau=x / _SQRT2 - a,
            zeta=-z / _SQRT2 + b,
        )
    return CanonicalPolar(v_plus=x + y + z + t, v_minus=x - y + z - t,
                          v1=x - z, v1_tilde=y - t)


def from_canonical(c: CanonicalCoords) -> Quad:
    """Inverse of :func:`to_canonical`."""
    kind = _KIND_OF_CANONICAL[type(c)]
    if kind is AlgebraKind.CIRCULAR:
        return Quad(
            kind,
            (c.xi + c.tau) / _SQRT2,
            (c.upsilon + c.zeta) / _SQRT2,
            (c.upsilon - c.zeta) / _SQRT2,
            (c.xi - c.tau) / _SQRT2,
        )
    if kind is AlgebraKind.HYPERBOLIC:
        s, sp, spp, sppp = c.s, c.s_prime, c.s_double_prime, c.s_triple_prime
        return Quad(
            kind,
            (s + sp + spp + sppp) / 4.0,
            (s - sp + spp - sppp) / 4.0,
            (s + sp - spp - sppp) / 4.0,
            (s - sp - spp + sppp) / 4.0,
        )
    if kind is AlgebraKind.PLANAR:
        ymt = c.xi - c.tau          # y - t
        ypt = c.upsilon + c.zeta    # y + t
        return Quad(
            kind,
            (c.xi + c.tau) / _SQRT2,
            (ymt + ypt) / 2.0,
            (c.upsilon - c.zeta) / _SQRT2,
            (ypt - ymt) / 2.0,
        )
    vp, vm = c.v_plus, c.v_minus
    return Quad(
        AlgebraKind.POLAR,
        vp / 4.0 + vm / 4.0 + c.v1 / 2.0,
        vp / 4.0 - vm / 4.0 + c.v1_tilde / 2.0,
        vp / 4.0 + vm / 4.0 - c.v1 / 2.0,
        vp / 4.0 - vm / 4.0 - c.v1_tilde / 2.0,
    )


def canonical_mul(c1: CanonicalCoords, c2: CanonicalCoords) -> CanonicalCoords:
    """Product expressed directly in canonical coordinates.

    Circular/planar: two independent complex products scaled by sqrt(2);
    hyperbolic: four real products; polar: two real products plus one
    plain complex product.
    """
    if type(c1) is not type(c2):
        raise ValueError(f"kind mismatch: {type(c1).__name__} vs {type(c2).__name__}")
    if isinstance(c1, (CanonicalCircular, CanonicalPlanar)):
        return type(c1)(
            xi=_SQRT2 * (c1.xi * c2.xi - c1.upsilon * c2.upsilon),
            upsilon=_SQRT2 * (c1.xi * c2.upsilon + c1.upsilon * c2.xi),
            tau=_SQRT2 * (c1.tau * c2.tau - c1.zeta * c2.zeta),
            zeta=_SQRT2 * (c1.tau * c2.zeta + c1.zeta * c2.tau),
        )
    if isinstance(c1, CanonicalHyperbolic):
        return CanonicalHyperbolic(
            s=c1.s * c2.s,
            s_prime=c1.s_prime * c2.s_prime,
            s_double_prime=c1.s_double_prime * c2.s_double_prime,
            s_triple_prime=c1.s_triple_prime * c2.s_triple_prime,
        )
    return CanonicalPolar(
        v_plus=c1.v_plus * c2.v_plus,
        v_minus=c1.v_minus * c2.v_minus,
        v1=c1.v1 * c2.v1 - c1.v1_tilde * c2.v1_tilde,
        v1_tilde=c1.v1 * c2.v1_tilde + c1.v1_tilde * c2.v1,
    )


def plane_split(u: Quad) -> tuple:
    """The kind's decoupling as plain complex/real numbers.

    Returns (w1, w2) complex for circular/planar, (s, s', s'', s''') real
    for hyperbolic, (v+, v-, w1) with w1 complex for polar.  Each entry is
    a unital ring homomorphism of the algebra, so any polynomial (and any
    convergent power-series) identity may be evaluated per entry and
    rejoined with :func:`plane_join`.
    """
    x, y, z, t = u.components
    if u.kind is AlgebraKind.CIRCULAR:
        return (complex(x + t, y + z), complex(x - t, y - z))
    if u.kind is AlgebraKind.HYPERBOLIC:
        return (x + y + z + t, x - y + z - t, x + y - z - t, x - y - z + t)
    if u.kind is AlgebraKind.PLANAR:
        a = (y - t) / _SQRT2
        b = (y + t) / _SQRT2
        return (complex(x + a, z + b), complex(x - a, -z + b))
    return (x + y + z + t, x - y + z - t, complex(x - z, y - t))


def plane_join(kind: AlgebraKind, parts: tuple) -> Quad:
    """Inverse of :func:`plane_split`."""
    if kind is AlgebraKind.CIRCULAR:
        w1, w2 = parts
        return Quad(
            kind,
            (w1.real + w2.real) / 2.0,
            (w1.imag + w2.imag) / 2.0,
            (w1.imag - w2.imag) / 2.0,
            (w1.real - w2.real) / 2.0,
        )
    if kind is AlgebraKind.HYPERBOLIC:
        s, sp, spp, sppp = parts
        return from_canonical(CanonicalHyperbolic(s, sp, spp, sppp))
    if kind is AlgebraKind.PLANAR:
        w1, w2 = parts
        ymt = (w1.real - w2.real) / _SQRT2
        ypt = (w1.imag + w2.imag) / _SQRT2
        return Quad(
            kind,
            (w1.real + w2.real) / 2.0,
            (ymt + ypt) / 2.0,
            (w1.imag - w2.imag) / 2.0,
            (ypt - ymt) / 2.0,
        )
    vp, vm, w1 = parts
    return from_canonical(CanonicalPolar(vp, vm, w1.real, w1.imag))


# -- exponential form ------------------------------------------------------

@dataclass(frozen=True, slots=True)
class ExpForm:
    """Amplitude-and-angles representation on the kind's validity domain.

    Fields by kind (others None):

    * circular / planar: rho > 0, phi, chi in [0, 2*pi), psi in (0, pi/2)
    * hyperbolic: mu > 0 and the real exponents y1, z1, t1
    * polar: rho > 0, theta_plus, theta_minus in (0, pi/2), phi in [0, 2*pi)
    """

    kind: AlgebraKind
    rho: float | None = None
    phi: float | None = None
    chi: float | None = None
    psi: float | None = None
    mu: float | None = None
    y1: float | None = None
    z1: float | None = None
    t1: float | None = None
    theta_plus: float | None = None
    theta_minus: float | None = None

    def __post_init__(self) -> None:
        required = _EXPFORM_FIELDS[self.kind]
        for name in required:
            if getattr(self, name) is None:
                raise ValueError(f"{self.kind} exp form requires field {name}")
        for name in _EXPFORM_ALL - set(required):
            if getattr(self, name) is not None:
                raise ValueError(f"{self.kind} exp form does not take field {name}")


_EXPFORM_FIELDS = {
    AlgebraKind.CIRCULAR: ("rho", "phi", "chi", "psi"),
    AlgebraKind.PLANAR: ("rho", "phi", "chi", "psi"),
    AlgebraKind.HYPERBOLIC: ("mu", "y1", "z1", "t1"),
    AlgebraKind.POLAR: ("rho", "theta_plus", "theta_minus", "phi"),
}

_EXPFORM_ALL = {
    "rho", "phi", "chi", "psi", "mu", "y1", "z1", "t1",
    "theta_plus", "theta_minus",
}


def expform_to_dict(f: ExpForm) -> dict:
    d: dict = {"kind": f.kind.value}
    for name in _EXPFORM_FIELDS[f.kind]:
        d[name] = getattr(f, name)
    return d


def expform_from_dict(d: dict) -> ExpForm:
    if "kind" not in d:
        raise ValueError("exp form dict needs a 'kind' entry")
    kind = AlgebraKind(d["kind"])
    required = _EXPFORM_FIELDS[kind]
    extra = set(d) - set(required) - {"kind"}
    if extra:
        raise ValueError(f"unexpected exp form field(s): {sorted(extra)}")
    missing = [name for name in required if name not in d]
    if missing:
        raise ValueError(f"{kind} exp form dict missing field(s): {missing}")
    return ExpForm(kind=kind, **{name: float(d[name]) for name in required})


def _angle(y: float, x: float) -> float:
    """Two-argument arctangent normalized to [0, 2*pi)."""
    return math.atan2(y, x) % _TWO_PI


def exp_form(u: Quad) -> ExpForm:
    """Extract amplitude and angles; rejects values outside the domain.

    Raises:
        DomainError: naming the violated condition (never clamps — a
            rejected input is always within rounding of a nodal set or on
            the wrong side of one).
    """
    x, y, z, t = u.components
    kind = u.kind
    if kind in (AlgebraKind.CIRCULAR, AlgebraKind.PLANAR):
        if kind is AlgebraKind.CIRCULAR:
            pr, pi_ = x + t, y + z
            mr, mi = x - t, y - z
        else:
            a = (y - t) / _SQRT2
            b = (y + t) / _SQRT2
            pr, pi_ = x + a, z + b
            mr, mi = x - a, -z + b
        rho_plus = math.hypot(pr, pi_)
        rho_minus = math.hypot(mr, mi)
        if rho_plus <= 0.0:
            raise DomainError(f"{kind} exp form requires rho_plus > 0; got 0")
        if rho_minus <= 0.0:
            raise DomainError(f"{kind} exp form requires rho_minus > 0; got 0")
        return ExpForm(
            kind=kind,
            rho=math.sqrt(rho_plus * rho_minus),
            phi=_angle(pi_, pr),
            chi=_angle(mi, mr),
            psi=math.atan2(rho_plus, rho_minus),
        )
    if kind is AlgebraKind.HYPERBOLIC:
        comps = plane_split(u)
        names = ("s", "s_prime", "s_double_prime", "s_triple_prime")
        for name, value in zip(names, comps):
            if value <= 0.0:
                raise DomainError(
                    f"hyperbolic exp form requires {name} > 0; got {value!r}"
                )
        s, sp, spp, sppp = (math.log(v) for v in comps)
        return ExpForm(
            kind=kind,
            mu=math.exp((s + sp + spp + sppp) / 4.0),
            y1=(s - sp + spp - sppp) / 4.0,
            z1=(s + sp - spp - sppp) / 4.0,
            t1=(s - sp - spp + sppp) / 4.0,
        )
    vp, vm, w1 = plane_split(u)
    if vp <= 0.0:
        raise DomainError(f"polar exp form requires v_plus > 0; got {vp!r}")
    if vm <= 0.0:
        raise DomainError(f"polar exp form requires v_minus > 0; got {vm!r}")
    mu_plus = abs(w1)
    if mu_plus <= 0.0:
        raise DomainError("polar exp form requires mu_plus > 0; got 0")
    return ExpForm(
        kind=kind,
        rho=(vp * vm * mu_plus * mu_plus) ** 0.25,
        theta_plus=math.atan2(_SQRT2 * mu_plus, vp),
        theta_minus=math.atan2(_SQRT2 * mu_plus, vm),
        phi=_angle(w1.imag, w1.real),
    )


def _exponent_quad(f: ExpForm) -> Quad:
    """The Quad whose exponential reconstructs the value of an ExpForm."""
    kind = f.kind
    if kind is AlgebraKind.CIRCULAR:
        return Quad(
            kind,
            math.log(f.rho),
            (f.phi + f.chi) / 2.0,
            (f.phi - f.chi) / 2.0,
            0.5 * math.log(math.tan(f.psi)),
        )
    if kind is AlgebraKind.PLANAR:
        half_sum = (f.phi + f.chi) / (2.0 * _SQRT2)
        log_tan = math.log(math.tan(f.psi)) / (2.0 * _SQRT2)
        return Quad(
            kind,
            math.log(f.rho),
            half_sum + log_tan,
            (f.phi - f.chi) / 2.0,
            half_sum - log_tan,
        )
    if kind is AlgebraKind.HYPERBOLIC:
        return Quad(kind, math.log(f.mu), f.y1, f.z1, f.t1)
    l_plus = math.log(_SQRT2 / math.tan(f.theta_plus))
    l_minus = math.log(_SQRT2 / math.tan(f.theta_minus))
    diff = (l_plus - l_minus) / 4.0
    return Quad(
        AlgebraKind.POLAR,
        math.log(f.rho),
        diff + f.phi / 2.0,
        (l_plus + l_minus) / 4.0,
        diff - f.phi / 2.0,
    )


def from_exp_form(f: ExpForm) -> Quad:
    """Evaluate the exponential form back into a Quad (inverse of exp_form)."""
    from . import elementary  # deferred: elementary builds on this module

    return elementary.exp(_exponent_quad(f))


# -- trigonometric form ----------------------------------------------------

@dataclass(frozen=True, slots=True)
class TrigForm:
    """Modulus-and-angles view: d plus the kind's angle chart.

    circular/planar/hyperbolic carry (phi, chi, psi); polar carries the
    (theta, lam, phi) chart in which cos(theta) = mu_plus/(sqrt(2) d) and
    tan(lam) = v_minus/v_plus.
    """

    kind: AlgebraKind
    d: float
    phi: float | None = None
    chi: float | None = None
    psi: float | None = None
    theta: float | None = None
    lam: float | None = None


def trig_form(u: Quad) -> TrigForm:
    """Modulus d and angle chart; same validity domain as exp_form."""
    kind = u.kind
    d = modulus(u)
    if kind in (AlgebraKind.CIRCULAR, AlgebraKind.PLANAR):
        f = exp_form(u)
        return TrigForm(kind=kind, d=d, phi=f.phi, chi=f.chi, psi=f.psi)
    if kind is AlgebraKind.HYPERBOLIC:
        s, sp, spp, sppp = plane_split(u)
        for name, value in zip(("s", "s_prime", "s_double_prime",
                                "s_triple_prime"), (s, sp, spp, sppp)):
            if value <= 0.0:
                raise DomainError(
                    f"hyperbolic trig form requires {name} > 0; got {value!r}"
                )
        return TrigForm(
            kind=kind,
            d=d,
            phi=math.atan2(sp, s),
            chi=math.atan2(sppp, spp),
            psi=math.atan2(math.hypot(spp, sppp), math.hypot(s, sp)),
        )
    vp, vm, w1 = plane_split(u)
    if vp <= 0.0:
        raise DomainError(f"polar trig form requires v_plus > 0; got {vp!r}")
    if vm <= 0.0:
        raise DomainError(f"polar trig form requires v_minus > 0; got {vm!r}")
    mu_plus = abs(w1)
    if mu_plus <= 0.0:
        raise DomainError("polar trig form requires mu_plus > 0; got 0")
    return TrigForm(
        kind=kind,
        d=d,
        theta=math.atan2(math.hypot(vp, vm) / 2.0, mu_plus / _SQRT2),
        lam=math.atan2(vm, vp),
        phi=_angle(w1.imag, w1.real),
    )


def from_trig_form(f: TrigForm) -> Quad:
    """Reconstruct the Quad from its trigonometric form."""
    kind = f.kind
    if kind is AlgebraKind.CIRCULAR:
        w1 = f.d * _SQRT2 * math.sin(f.psi) * complex(math.cos(f.phi),
                                                      math.sin(f.phi))
        w2 = f.d * _SQRT2 * math.cos(f.psi) * complex(math.cos(f.chi),
                                                      math.sin(f.chi))
        return plane_join(kind, (w1, w2))
    if kind is AlgebraKind.PLANAR:
        w1 = f.d * _SQRT2 * math.sin(f.psi) * complex(math.cos(f.phi),
                                                      math.sin(f.phi))
        w2 = f.d * _SQRT2 * math.cos(f.psi) * complex(math.cos(f.chi),
                                                      math.sin(f.chi))
        return plane_join(kind, (w1, w2))
    if kind is AlgebraKind.HYPERBOLIC:
        cp, sp_ = math.cos(f.psi), math.sin(f.psi)
        return plane_join(
            kind,
            (
                2.0 * f.d * cp * math.cos(f.phi),
                2.0 * f.d * cp * math.sin(f.phi),
                2.0 * f.d * sp_ * math.cos(f.chi),
                2.0 * f.d * sp_ * math.sin(f.chi),
            ),
        )
    vp = 2.0 * f.d * math.sin(f.theta) * math.cos(f.lam)
    vm = 2.0 * f.d * math.sin(f.theta) * math.sin(f.lam)
    mu_plus = _SQRT2 * f.d * math.cos(f.theta)
    w1 = mu_plus * complex(math.cos(f.phi), math.sin(f.phi))
    return plane_join(kind, (vp, vm, w1))
