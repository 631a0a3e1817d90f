# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled arithmetic kernels for the four algebras.

Mirrors ``_kernels_py`` line for line (same formulas, same term grouping,
so both backends round identically); typed for doubles.
"""

DEF SQRT2 = 1.4142135623730951


# -- products -----------------------------------------------------------

def mul_circular(double x1, double y1, double z1, double t1,
                 double x2, double y2, double z2, double t2):
    return (
        x1 * x2 - y1 * y2 - z1 * z2 + t1 * t2,
        (x1 * y2 + y1 * x2) + (z1 * t2 + t1 * z2),
        (x1 * z2 + z1 * x2) + (y1 * t2 + t1 * y2),
        (x1 * t2 + t1 * x2) - (y1 * z2 + z1 * y2),
    )


def mul_hyperbolic(double x1, double y1, double z1, double t1,
                   double x2, double y2, double z2, double t2):
    return (
        x1 * x2 + y1 * y2 + z1 * z2 + t1 * t2,
        (x1 * y2 + y1 * x2) + (z1 * t2 + t1 * z2),
        (x1 * z2 + z1 * x2) + (y1 * t2 + t1 * y2),
        (x1 * t2 + t1 * x2) + (y1 * z2 + z1 * y2),
    )


def mul_planar(double x1, double y1, double z1, double t1,
               double x2, double y2, double z2, double t2):
    return (
        x1 * x2 - z1 * z2 - (y1 * t2 + t1 * y2),
        (x1 * y2 + y1 * x2) - (z1 * t2 + t1 * z2),
        (x1 * z2 + z1 * x2) + (y1 * y2 - t1 * t2),
        (x1 * t2 + t1 * x2) + (y1 * z2 + z1 * y2),
    )


def mul_polar(double x1, double y1, double z1, double t1,
              double x2, double y2, double z2, double t2):
    return (
        x1 * x2 + z1 * z2 + (y1 * t2 + t1 * y2),
        (x1 * y2 + y1 * x2) + (z1 * t2 + t1 * z2),
        (x1 * z2 + z1 * x2) + (y1 * y2 + t1 * t2),
        (x1 * t2 + t1 * x2) + (y1 * z2 + z1 * y2),
    )


# -- amplitude quartics (rho^4 or nu) -----------------------------------

def quartic_circular(double x, double y, double z, double t):
    cdef double rp2 = (x + t) * (x + t) + (y + z) * (y + z)
    cdef double rm2 = (x - t) * (x - t) + (y - z) * (y - z)
    return rp2 * rm2


def quartic_hyperbolic(double x, double y, double z, double t):
    return (x + y + z + t) * (x - y + z - t) * (x + y - z - t) * (x - y - z + t)


def quartic_planar(double x, double y, double z, double t):
    cdef double a = (y - t) / SQRT2
    cdef double b = (y + t) / SQRT2
    cdef double rp2 = (x + a) * (x + a) + (z + b) * (z + b)
    cdef double rm2 = (x - a) * (x - a) + (z - b) * (z - b)
    return rp2 * rm2


def quartic_polar(double x, double y, double z, double t):
    cdef double mu2 = (x - z) * (x - z) + (y - t) * (y - t)
    return (x + y + z + t) * (x - y + z - t) * mu2


# -- closed-form inverses -----------------------------------------------

def inv_circular(double x, double y, double z, double t):
    cdef double q = quartic_circular(x, y, z, t)
    return (
        (x * (x * x + y * y + z * z - t * t) - 2 * y * z * t) / q,
        (y * (-x * x - y * y + z * z - t * t) + 2 * x * z * t) / q,
        (z * (-x * x + y * y - z * z - t * t) + 2 * x * y * t) / q,
        (t * (-x * x + y * y + z * z + t * t) - 2 * x * y * z) / q,
    )


def inv_hyperbolic(double x, double y, double z, double t):
    cdef double q = quartic_hyperbolic(x, y, z, t)
    return (
        (x * (x * x - y * y - z * z - t * t) + 2 * y * z * t) / q,
        (y * (-x * x + y * y - z * z - t * t) + 2 * x * z * t) / q,
        (z * (-x * x - y * y + z * z - t * t) + 2 * x * y * t) / q,
        (t * (-x * x - y * y - z * z + t * t) + 2 * x * y * z) / q,
    )


def inv_planar(double x, double y, double z, double t):
    cdef double q = quartic_planar(x, y, z, t)
    return (
        (x * (x * x + z * z) - z * (y * y - t * t) + 2 * x * y * t) / q,
        -(y * (x * x - z * z) + t * (y * y + t * t) + 2 * x * z * t) / q,
        (-z * (x * x + z * z) + x * (y * y - t * t) + 2 * y * z * t) / q,
        -(t * (x * x - z * z) + y * (y * y + t * t) - 2 * x * y * z) / q,
    )


def inv_polar(double x, double y, double z, double t):
    cdef double q = quartic_polar(x, y, z, t)
    return (
        (x * (x * x - z * z) + z * (y * y + t * t) - 2 * x * y * t) / q,
        (-y * (x * x + z * z) + t * (y * y - t * t) + 2 * x * z * t) / q,
        (-z * (x * x - z * z) + x * (y * y + t * t) - 2 * y * z * t) / q,
        (-t * (x * x + z * z) - y * (y * y - t * t) + 2 * x * y * z) / q,
    )
