# cython: language_level=3
"""Compiled identity kernels.

Line-for-line twin of trisolve._kernels_py (see that module for the contract
and argument conventions). Arithmetic order matches the pure version exactly
so both backends give bit-identical results.
"""

from libc.math cimport cos, fabs, sin, tan

BACKEND_NAME = "compiled"


cdef inline double _max2(double x, double y) noexcept:
    return y if y > x else x


cdef inline double _min2(double x, double y) noexcept:
    return y if y < x else x


cdef inline double _norm(double lhs, double rhs) noexcept:
    return fabs(lhs - rhs) / (1.0 + _max2(fabs(lhs), fabs(rhs)))


cdef inline double _msin_lhs(double al, double be, double ga) noexcept:
    return sin(0.5 * (al - be)) / cos(0.5 * ga)


cdef inline double _mcos_lhs(double al, double be, double ga) noexcept:
    return cos(0.5 * (al - be)) / sin(0.5 * ga)


cdef inline double _tan_lhs(double al, double be) noexcept:
    return tan(0.5 * (al - be)) / tan(0.5 * (al + be))


def mollweide_sin_parts(double al, double be, double ga, double a, double b, double c):
    """(LHS, RHS) of sin((alpha-beta)/2) / cos(gamma/2) = (a-b)/c."""
    return _msin_lhs(al, be, ga), (a - b) / c


def mollweide_cos_parts(double al, double be, double ga, double a, double b, double c):
    """(LHS, RHS) of cos((alpha-beta)/2) / sin(gamma/2) = (a+b)/c."""
    return _mcos_lhs(al, be, ga), (a + b) / c


def law_of_tangents_parts(double al, double be, double ga, double a, double b, double c):
    """(LHS, RHS) of tan((alpha-beta)/2) / tan((alpha+beta)/2) = (a-b)/(a+b)."""
    return _tan_lhs(al, be), (a - b) / (a + b)


cdef inline double _lc_rhs(double ga, double a, double b) noexcept:
    # stable form of a^2 + b^2 - 2ab cos(gamma); see _kernels_py
    cdef double d = a - b
    cdef double s = sin(0.5 * ga)
    return d * d + 4.0 * a * b * s * s


def law_of_cosines_parts(double al, double be, double ga, double a, double b, double c):
    """(LHS, RHS) of c^2 = a^2 + b^2 - 2ab cos(gamma), cancellation-free."""
    return c * c, _lc_rhs(ga, a, b)


def sines_ratios(double al, double be, double ga, double a, double b, double c):
    """The three side/sin(angle) ratios; all equal for a consistent triangle."""
    return a / sin(al), b / sin(be), c / sin(ga)


def residual_profile(double al, double be, double ga, double a, double b, double c):
    """Every identity residual for one triangle; see _kernels_py for layout."""
    cdef double angs[3][3]
    cdef double sids[3][3]
    cdef double res[13]
    cdef double lhs, rhs, scaled
    cdef double worst = 0.0
    cdef int k

    angs[0][0] = al; angs[0][1] = be; angs[0][2] = ga
    angs[1][0] = be; angs[1][1] = ga; angs[1][2] = al
    angs[2][0] = ga; angs[2][1] = al; angs[2][2] = be
    sids[0][0] = a; sids[0][1] = b; sids[0][2] = c
    sids[1][0] = b; sids[1][1] = c; sids[1][2] = a
    sids[2][0] = c; sids[2][1] = a; sids[2][2] = b

    for k in range(3):
        lhs = _msin_lhs(angs[k][0], angs[k][1], angs[k][2])
        rhs = (sids[k][0] - sids[k][1]) / sids[k][2]
        res[k] = lhs - rhs
        worst = _max2(worst, _norm(lhs, rhs))
    for k in range(3):
        lhs = _mcos_lhs(angs[k][0], angs[k][1], angs[k][2])
        rhs = (sids[k][0] + sids[k][1]) / sids[k][2]
        res[3 + k] = lhs - rhs
        worst = _max2(worst, _norm(lhs, rhs))
    for k in range(3):
        lhs = _tan_lhs(angs[k][0], angs[k][1])
        rhs = (sids[k][0] - sids[k][1]) / (sids[k][0] + sids[k][1])
        res[6 + k] = lhs - rhs
        worst = _max2(worst, _norm(lhs, rhs))
    for k in range(3):
        lhs = sids[k][2] * sids[k][2]
        rhs = _lc_rhs(angs[k][2], sids[k][0], sids[k][1])
        scaled = (lhs - rhs) / lhs
        res[9 + k] = scaled
        worst = _max2(worst, fabs(scaled))

    cdef double ra = a / sin(al)
    cdef double rb = b / sin(be)
    cdef double rc = c / sin(ga)
    cdef double spread = (_max2(_max2(ra, rb), rc) - _min2(_min2(ra, rb), rc)) \
        / ((ra + rb + rc) / 3.0)
    res[12] = spread
    worst = _max2(worst, spread)

    return (res[0], res[1], res[2], res[3], res[4], res[5], res[6], res[7],
            res[8], res[9], res[10], res[11], res[12], worst)
