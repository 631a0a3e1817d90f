"""Pure-Python arithmetic kernels for the four algebras.

This module is the fallback backend selected by ``algebra_core`` when the
compiled extension ``quadfield._kernels`` is unavailable.  The polynomial
module also calls these functions directly regardless of backend: its
root arithmetic runs on complexified components, which the double-typed
compiled kernels do not accept.

Every function is a plain component formula — one line per output
component — so each can be audited term by term.  No validation happens
here; callers are responsible for kind dispatch and singularity checks.
"""

_SQRT2 = 2.0 ** 0.5


# -- products -----------------------------------------------------------
# Cross terms are grouped as (a1*b2 + b1*a2) pairs so that the expression
# tree is invariant under swapping the operands: mul(u, v) and mul(v, u)
# then round identically, making commutativity bitwise exact.

def mul_circular(x1, y1, z1, t1, x2, y2, z2, t2):
    return (
        x1 * x2 - y1 * y2 - z1 * z2 + t1 * t2,
        (x1 * y2 + y1 * x2) + (z1 * t2 + t1 * z2),
        (x1 * z2 + z1 * x2) + (y1 * t2 + t1 * y2),
        (x1 * t2 + t1 * x2) - (y1 * z2 + z1 * y2),
    )


def mul_hyperbolic(x1, y1, z1, t1, x2, y2, z2, t2):
    return (
        x1 * x2 + y1 * y2 + z1 * z2 + t1 * t2,
        (x1 * y2 + y1 * x2) + (z1 * t2 + t1 * z2),
        (x1 * z2 + z1 * x2) + (y1 * t2 + t1 * y2),
        (x1 * t2 + t1 * x2) + (y1 * z2 + z1 * y2),
    )


def mul_planar(x1, y1, z1, t1, x2, y2, z2, t2):
    return (
        x1 * x2 - z1 * z2 - (y1 * t2 + t1 * y2),
        (x1 * y2 + y1 * x2) - (z1 * t2 + t1 * z2),
        (x1 * z2 + z1 * x2) + (y1 * y2 - t1 * t2),
        (x1 * t2 + t1 * x2) + (y1 * z2 + z1 * y2),
    )


def mul_polar(x1, y1, z1, t1, x2, y2, z2, t2):
    return (
        x1 * x2 + z1 * z2 + (y1 * t2 + t1 * y2),
        (x1 * y2 + y1 * x2) + (z1 * t2 + t1 * z2),
        (x1 * z2 + z1 * x2) + (y1 * y2 + t1 * t2),
        (x1 * t2 + t1 * x2) + (y1 * z2 + z1 * y2),
    )


# -- amplitude quartics (rho^4 or nu) -----------------------------------
# Evaluated in factored form (product over the nodal-set residuals); the
# factored form is exact where the expanded quartic cancels catastrophically
# near a nodal set.

def quartic_circular(x, y, z, t):
    rp2 = (x + t) * (x + t) + (y + z) * (y + z)
    rm2 = (x - t) * (x - t) + (y - z) * (y - z)
    return rp2 * rm2


def quartic_hyperbolic(x, y, z, t):
    return (x + y + z + t) * (x - y + z - t) * (x + y - z - t) * (x - y - z + t)


def quartic_planar(x, y, z, t):
    a = (y - t) / _SQRT2
    b = (y + t) / _SQRT2
    rp2 = (x + a) * (x + a) + (z + b) * (z + b)
    rm2 = (x - a) * (x - a) + (z - b) * (z - b)
    return rp2 * rm2


def quartic_polar(x, y, z, t):
    mu2 = (x - z) * (x - z) + (y - t) * (y - t)
    return (x + y + z + t) * (x - y + z - t) * mu2


# -- closed-form inverses -----------------------------------------------

def inv_circular(x, y, z, t):
    q = quartic_circular(x, y, z, t)
    return (
        (x * (x * x + y * y + z * z - t * t) - 2 * y * z * t) / q,
        (y * (-x * x - y * y + z * z - t * t) + 2 * x * z * t) / q,
        (z * (-x * x + y * y - z * z - t * t) + 2 * x * y * t) / q,
        (t * (-x * x + y * y + z * z + t * t) - 2 * x * y * z) / q,
    )


def inv_hyperbolic(x, y, z, t):
    q = quartic_hyperbolic(x, y, z, t)
    return (
        (x * (x * x - y * y - z * z - t * t) + 2 * y * z * t) / q,
        (y * (-x * x + y * y - z * z - t * t) + 2 * x * z * t) / q,
        (z * (-x * x - y * y + z * z - t * t) + 2 * x * y * t) / q,
        (t * (-x * x - y * y - z * z + t * t) + 2 * x * y * z) / q,
    )


def inv_planar(x, y, z, t):
    q = quartic_planar(x, y, z, t)
    return (
        (x * (x * x + z * z) - z * (y * y - t * t) + 2 * x * y * t) / q,
        -(y * (x * x - z * z) + t * (y * y + t * t) + 2 * x * z * t) / q,
        (-z * (x * x + z * z) + x * (y * y - t * t) + 2 * y * z * t) / q,
        -(t * (x * x - z * z) + y * (y * y + t * t) - 2 * x * y * z) / q,
    )


def inv_polar(x, y, z, t):
    q = quartic_polar(x, y, z, t)
    return (
        (x * (x * x - z * z) + z * (y * y + t * t) - 2 * x * y * t) / q,
        (-y * (x * x + z * z) + t * (y * y - t * t) + 2 * x * z * t) / q,
        (-z * (x * x - z * z) + x * (y * y + t * t) - 2 * y * z * t) / q,
        (-t * (x * x + z * z) - y * (y * y - t * t) + 2 * x * y * z) / q,
    )
