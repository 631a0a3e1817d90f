"""Elementary functions on the four algebras.

exp, log, real powers and the trigonometric/hyperbolic functions, plus the
two families of four-dimensional cosexponential functions:

* f4k (planar family) — the four mod-4 splittings of the alternating
  exponential series; closed forms combine cos/cosh at argument x/sqrt(2).
* g4k (polar family) — the mod-4 splittings of the plain exponential
  series; closed forms are half-sums of cosh/cos and sinh/sin.

exp is assembled from the component factorization
exp(u) = e^x * exp(alpha y) * exp(beta z) * exp(gamma t), where each factor
has a closed component form; the power series is kept only as a test
oracle.  log works one decoupled plane at a time (the plane maps are ring
homomorphisms) and takes every azimuthal angle in [0, 2*pi).
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .algebra_core import AlgebraKind, Quad, mul, scale
from .canonical import DomainError, plane_join, plane_split

__all__ = [
    "CosexpFamily",
    "CosexpKind",
    "f4",
    "g4",
    "cosexp",
    "cosexp_series",
    "exp",
    "exp_factored",
    "log",
    "pow_real",
    "cos",
    "sin",
    "cosh",
    "sinh",
]

_SQRT2 = math.sqrt(2.0)
_TWO_PI = 2.0 * math.pi


class CosexpFamily(enum.Enum):
    PLANAR_F = "planar_f"
    POLAR_G = "polar_g"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True, slots=True)
class CosexpKind:
    """One of the eight cosexponential functions: family plus index k."""

    family: CosexpFamily
    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.family, CosexpFamily):
            raise TypeError(f"family must be CosexpFamily, got {self.family!r}")
        if self.k not in (0, 1, 2, 3):
            raise ValueError(f"index k must be 0..3, got {self.k!r}")


def f4(k: int) -> CosexpKind:
    return CosexpKind(CosexpFamily.PLANAR_F, k)


def g4(k: int) -> CosexpKind:
    return CosexpKind(CosexpFamily.POLAR_G, k)


def cosexp(kind: CosexpKind, x: float) -> float:
    """Closed-form value of f4k(x) or g4k(x)."""
    if kind.family is CosexpFamily.PLANAR_F:
        a = x / _SQRT2
        if kind.k == 0:
            return math.cos(a) * math.cosh(a)
        if kind.k == 1:
            return (math.sin(a) * math.cosh(a) + math.sinh(a) * math.cos(a)) / _SQRT2
        if kind.k == 2:
            return math.sin(a) * math.sinh(a)
        return (math.sin(a) * math.cosh(a) - math.sinh(a) * math.cos(a)) / _SQRT2
    if kind.k == 0:
        return (math.cosh(x) + math.cos(x)) / 2.0
    if kind.k == 1:
        return (math.sinh(x) + math.sin(x)) / 2.0
    if kind.k == 2:
        return (math.cosh(x) - math.cos(x)) / 2.0
    return (math.sinh(x) - math.sin(x)) / 2.0


def cosexp_series(kind: CosexpKind, x: float, terms: int) -> float:
    """Truncated defining series sum_{l<terms} (+-1)^l x^(4l+k)/(4l+k)!.

    Exists as an independent oracle for :func:`cosexp`; the closed forms
    are preferred at runtime because the series terms cancel badly for
    large |x|.
    """
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms!r}")
    k = kind.k
    sign = -1.0 if kind.family is CosexpFamily.PLANAR_F else 1.0
    term = x**k / math.factorial(k)
    total = term
    x4 = sign * x**4
    for l in range(terms - 1):
        n = 4 * l + k
        term *= x4 / ((n + 1) * (n + 2) * (n + 3) * (n + 4))
        total += term
    return total


# -- exp -------------------------------------------------------------------

def _exp_unit_factors(u: Quad) -> tuple[Quad, Quad, Quad]:
    """exp(alpha*y), exp(beta*z), exp(gamma*t) from the closed component forms."""
    kind = u.kind
    y, z, t = u.y, u.z, u.t
    if kind is AlgebraKind.CIRCULAR:
        return (
            Quad(kind, math.cos(y), math.sin(y), 0.0, 0.0),
            Quad(kind, math.cos(z), 0.0, math.sin(z), 0.0),
            Quad(kind, math.cosh(t), 0.0, 0.0, math.sinh(t)),
        )
    if kind is AlgebraKind.HYPERBOLIC:
        return (
            Quad(kind, math.cosh(y), math.sinh(y), 0.0, 0.0),
            Quad(kind, math.cosh(z), 0.0, math.sinh(z), 0.0),
            Quad(kind, math.cosh(t), 0.0, 0.0, math.sinh(t)),
        )
    if kind is AlgebraKind.PLANAR:
        fy = [cosexp(f4(k), y) for k in range(4)]
        ft = [cosexp(f4(k), t) for k in range(4)]
        return (
            Quad(kind, fy[0], fy[1], fy[2], fy[3]),
            Quad(kind, math.cos(z), 0.0, math.sin(z), 0.0),
            Quad(kind, ft[0], ft[3], -ft[2], ft[1]),
        )
    gy = [cosexp(g4(k), y) for k in range(4)]
    gt = [cosexp(g4(k), t) for k in range(4)]
    return (
        Quad(kind, gy[0], gy[1], gy[2], gy[3]),
        Quad(kind, math.cosh(z), 0.0, math.sinh(z), 0.0),
        Quad(kind, gt[0], gt[3], gt[2], gt[1]),
    )


def exp(u: Quad) -> Quad:
    """Exponential; equals e^x times the unit-direction factors.

    Evaluated per decoupling plane rather than by multiplying the factor
    quads out: the factors grow like cosh of each component and cancel
    against each other, which for large mixed components would cost up to
    half the available digits (pow_real feeds n*log(u) in here, where the
    angle components alone reach 2*pi*n).  The per-plane exponentials are
    the same analytic function with no cancellation.
    """
    parts = plane_split(u)
    return plane_join(u.kind, tuple(
        cmath.exp(p) if isinstance(p, complex) else math.exp(p)
        for p in parts
    ))


def exp_factored(u: Quad) -> Quad:
    """The textbook assembly exp(x)*exp(alpha y)*exp(beta z)*exp(gamma t).

    Identical to :func:`exp` analytically; kept for auditability against
    the component factorization and used by tests as a cross-check.
    """
    ea, eb, eg = _exp_unit_factors(u)
    return scale(mul(mul(ea, eb), eg), math.exp(u.x))


# -- log / powers ------------------------------------------------------------

def _principal_log(w: complex, plane: str, kind: AlgebraKind) -> complex:
    r = abs(w)
    if r <= 0.0:
        raise DomainError(f"{kind} log requires {plane} > 0; got 0")
    return complex(math.log(r), math.atan2(w.imag, w.real) % _TWO_PI)


def log(u: Quad) -> Quad:
    """Principal logarithm; angles in [0, 2*pi), defined off the nodal sets.

    Raises:
        DomainError: on or outside the kind's validity domain (same domain
            as exp_form).
    """
    kind = u.kind
    parts = plane_split(u)
    if kind in (AlgebraKind.CIRCULAR, AlgebraKind.PLANAR):
        w1, w2 = parts
        return plane_join(kind, (_principal_log(w1, "rho_plus", kind),
                                 _principal_log(w2, "rho_minus", kind)))
    if kind is AlgebraKind.HYPERBOLIC:
        names = ("s", "s_prime", "s_double_prime", "s_triple_prime")
        for name, value in zip(names, parts):
            if value <= 0.0:
                raise DomainError(
                    f"hyperbolic log requires {name} > 0; got {value!r}"
                )
        return plane_join(kind, tuple(math.log(v) for v in parts))
    vp, vm, w1 = parts
    if vp <= 0.0:
        raise DomainError(f"polar log requires v_plus > 0; got {vp!r}")
    if vm <= 0.0:
        raise DomainError(f"polar log requires v_minus > 0; got {vm!r}")
    return plane_join(
        kind, (math.log(vp), math.log(vm), _principal_log(w1, "mu_plus", kind))
    )


def pow_real(u: Quad, n: float) -> Quad:
    """u**n as exp(n * log u) on the log domain."""
    return exp(scale(log(u), float(n)))


# -- trigonometric / hyperbolic ----------------------------------------------

def _unit_cos_sin(kind: AlgebraKind, idx: int, v: float) -> tuple[Quad, Quad]:
    """(cos, sin) of v times the idx-th imaginary unit (1=alpha, 2=beta, 3=gamma)."""
    if kind is AlgebraKind.CIRCULAR:
        if idx == 1:
            return (Quad(kind, math.cosh(v), 0, 0, 0),
                    Quad(kind, 0, math.sinh(v), 0, 0))
        if idx == 2:
            return (Quad(kind, math.cosh(v), 0, 0, 0),
                    Quad(kind, 0, 0, math.sinh(v), 0))
        return (Quad(kind, math.cos(v), 0, 0, 0),
                Quad(kind, 0, 0, 0, math.sin(v)))
    if kind is AlgebraKind.HYPERBOLIC:
        c = Quad(kind, math.cos(v), 0, 0, 0)
        s = math.sin(v)
        if idx == 1:
            return (c, Quad(kind, 0, s, 0, 0))
        if idx == 2:
            return (c, Quad(kind, 0, 0, s, 0))
        return (c, Quad(kind, 0, 0, 0, s))
    if kind is AlgebraKind.PLANAR:
        if idx == 1:
            f = [cosexp(f4(k), v) for k in range(4)]
            return (Quad(kind, f[0], 0, -f[2], 0),
                    Quad(kind, 0, f[1], 0, -f[3]))
        if idx == 2:
            return (Quad(kind, math.cosh(v), 0, 0, 0),
                    Quad(kind, 0, 0, math.sinh(v), 0))
        f = [cosexp(f4(k), v) for k in range(4)]
        return (Quad(kind, f[0], 0, f[2], 0),
                Quad(kind, 0, -f[3], 0, f[1]))
    if idx == 2:
        return (Quad(kind, math.cos(v), 0, 0, 0),
                Quad(kind, 0, 0, math.sin(v), 0))
    g = [cosexp(g4(k), v) for k in range(4)]
    c = Quad(kind, g[0], 0, -g[2], 0)
    if idx == 1:
        return (c, Quad(kind, 0, g[1], 0, -g[3]))
    return (c, Quad(kind, 0, -g[3], 0, g[1]))


def _unit_cosh_sinh(kind: AlgebraKind, idx: int, v: float) -> tuple[Quad, Quad]:
    """(cosh, sinh) of v times the idx-th imaginary unit."""
    if kind is AlgebraKind.CIRCULAR:
        if idx == 1:
            return (Quad(kind, math.cos(v), 0, 0, 0),
                    Quad(kind, 0, math.sin(v), 0, 0))
        if idx == 2:
            return (Quad(kind, math.cos(v), 0, 0, 0),
                    Quad(kind, 0, 0, math.sin(v), 0))
        return (Quad(kind, math.cosh(v), 0, 0, 0),
                Quad(kind, 0, 0, 0, math.sinh(v)))
    if kind is AlgebraKind.HYPERBOLIC:
        c = Quad(kind, math.cosh(v), 0, 0, 0)
        s = math.sinh(v)
        if idx == 1:
            return (c, Quad(kind, 0, s, 0, 0))
        if idx == 2:
            return (c, Quad(kind, 0, 0, s, 0))
        return (c, Quad(kind, 0, 0, 0, s))
    if kind is AlgebraKind.PLANAR:
        if idx == 1:
            f = [cosexp(f4(k), v) for k in range(4)]
            return (Quad(kind, f[0], 0, f[2], 0),
                    Quad(kind, 0, f[1], 0, f[3]))
        if idx == 2:
            return (Quad(kind, math.cos(v), 0, 0, 0),
                    Quad(kind, 0, 0, math.sin(v), 0))
        f = [cosexp(f4(k), v) for k in range(4)]
        return (Quad(kind, f[0], 0, -f[2], 0),
                Quad(kind, 0, f[3], 0, f[1]))
    if idx == 2:
        return (Quad(kind, math.cosh(v), 0, 0, 0),
                Quad(kind, 0, 0, math.sinh(v), 0))
    g = [cosexp(g4(k), v) for k in range(4)]
    c = Quad(kind, g[0], 0, g[2], 0)
    if idx == 1:
        return (c, Quad(kind, 0, g[1], 0, g[3]))
    return (c, Quad(kind, 0, g[3], 0, g[1]))


def _fold_cos_sin(u: Quad) -> tuple[Quad, Quad]:
    """cos/sin of x + alpha y + beta z + gamma t via the addition theorem.

    Grouping order is fixed (x, then alpha y, then beta z, then gamma t)
    so results are bit-reproducible.
    """
    kind = u.kind
    c = Quad(kind, math.cos(u.x), 0, 0, 0)
    s = Quad(kind, math.sin(u.x), 0, 0, 0)
    for idx, v in ((1, u.y), (2, u.z), (3, u.t)):
        ci, si = _unit_cos_sin(kind, idx, v)
        c, s = mul(c, ci) - mul(s, si), mul(s, ci) + mul(c, si)
    return c, s


def _fold_cosh_sinh(u: Quad) -> tuple[Quad, Quad]:
    kind = u.kind
    c = Quad(kind, math.cosh(u.x), 0, 0, 0)
    s = Quad(kind, math.sinh(u.x), 0, 0, 0)
    for idx, v in ((1, u.y), (2, u.z), (3, u.t)):
        ci, si = _unit_cosh_sinh(kind, idx, v)
        c, s = mul(c, ci) + mul(s, si), mul(s, ci) + mul(c, si)
    return c, s


def cos(u: Quad) -> Quad:
    return _fold_cos_sin(u)[0]


def sin(u: Quad) -> Quad:
    return _fold_cos_sin(u)[1]


def cosh(u: Quad) -> Quad:
    return _fold_cosh_sinh(u)[0]


def sinh(u: Quad) -> Quad:
    return _fold_cosh_sinh(u)[1]
